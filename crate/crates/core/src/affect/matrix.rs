use std::collections::BTreeMap;

use super::prototypes::{PrototypeTable, NEUTRAL};
use super::vector::AffectVector;
use super::AffectError;
use crate::terms::Atom;

/// Personality trait label -> level in [0, 1].
pub type Traits = BTreeMap<Atom, f64>;

/// Weights between emotion labels and personality traits. Missing entries
/// read as zero.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CorrelationMatrix {
    rows: BTreeMap<Atom, BTreeMap<Atom, f64>>,
}

impl CorrelationMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the previous weight for the pair, if any.
    pub fn set(&mut self, emotion: Atom, trait_label: Atom, weight: f64) -> Option<f64> {
        self.rows.entry(emotion).or_default().insert(trait_label, weight)
    }

    pub fn get(&self, emotion: Atom, trait_label: Atom) -> f64 {
        self.rows.get(&emotion).and_then(|r| r.get(&trait_label)).copied().unwrap_or(0.0)
    }

    pub fn row(&self, emotion: Atom) -> impl Iterator<Item = (Atom, f64)> + '_ {
        self.rows.get(&emotion).into_iter().flat_map(|r| r.iter().map(|(t, w)| (*t, *w)))
    }

    pub fn row_sum(&self, emotion: Atom) -> f64 {
        self.row(emotion).map(|(_, w)| w).sum()
    }

    pub fn emotions(&self) -> impl Iterator<Item = Atom> + '_ {
        self.rows.keys().copied()
    }

    pub fn traits(&self) -> Vec<Atom> {
        let mut out: Vec<Atom> = self.rows.values().flat_map(|r| r.keys().copied()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// (trait, emotion, weight) triples grouped by trait.
    pub fn by_trait(&self) -> BTreeMap<Atom, Vec<(Atom, f64)>> {
        let mut out: BTreeMap<Atom, Vec<(Atom, f64)>> = BTreeMap::new();
        for (em, row) in &self.rows {
            for (tr, w) in row {
                out.entry(*tr).or_default().push((*em, *w));
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Labels of `prototypes` for which the weighting factor is undefined.
    pub fn uncovered<'a>(&'a self, prototypes: &'a PrototypeTable) -> impl Iterator<Item = Atom> + 'a {
        prototypes.labels().filter(|l| self.row_sum(*l) <= 0.0)
    }
}

/// Personality weighting factor for an emotion label: the ω-weighted mean
/// of the trait levels. Traits absent from `traits` count as 0. The neutral
/// label weighs 0.
pub fn psi(traits: &Traits, omega: &CorrelationMatrix, label: Atom) -> Result<f64, AffectError> {
    if label.as_str() == NEUTRAL {
        return Ok(0.0);
    }
    let denom = omega.row_sum(label);
    if denom <= 0.0 {
        return Err(AffectError::UndefinedPsi(label.to_string()));
    }
    let num: f64 = omega.row(label).map(|(t, w)| traits.get(&t).copied().unwrap_or(0.0) * w).sum();
    Ok(num / denom)
}

/// `psi` of the label most probable for `v`.
pub fn psi_of(
    traits: &Traits,
    omega: &CorrelationMatrix,
    prototypes: &PrototypeTable,
    v: &AffectVector,
) -> Result<f64, AffectError> {
    psi(traits, omega, prototypes.label_of(v))
}
