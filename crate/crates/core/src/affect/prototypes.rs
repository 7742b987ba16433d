use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use super::vector::AffectVector;
use super::AffectError;
use crate::terms::Atom;

pub const NEUTRAL: &str = "neutral";

const TIE_EPS: f64 = 1e-12;

pub const DEFAULT_PROTOTYPES: &str = include_str!("../../data/pad_prototypes.txt");

/// Emotion label -> prototype vector. Labels iterate lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct PrototypeTable {
    entries: BTreeMap<Atom, AffectVector>,
    dim: usize,
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

impl PrototypeTable {
    /// Parses `label p a d` lines (any fixed width >= 2). Blank lines and
    /// `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, AffectError> {
        let mut entries = BTreeMap::new();
        let mut dim = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let label = fields.next().unwrap_or_default();
            if !label.starts_with(|c: char| c.is_ascii_lowercase())
                || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(AffectError::Table { line: line_no, message: format!("bad label `{}`", label) });
            }
            let comps = fields
                .map(|f| f.parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| AffectError::Table { line: line_no, message: e.to_string() })?;
            if comps.len() < 2 {
                return Err(AffectError::Table { line: line_no, message: "need at least two components".into() });
            }
            if comps.iter().any(|c| !(-1.0..=1.0).contains(c)) {
                return Err(AffectError::Table { line: line_no, message: "component outside [-1, 1]".into() });
            }
            match dim {
                None => dim = Some(comps.len()),
                Some(d) if d != comps.len() => {
                    return Err(AffectError::Table {
                        line: line_no,
                        message: format!("expected {} components, found {}", d, comps.len()),
                    })
                }
                _ => {}
            }
            let v = AffectVector::new(comps);
            if v.angle().is_none() {
                return Err(AffectError::Table {
                    line: line_no,
                    message: "prototype has no pleasure/arousal direction".into(),
                });
            }
            if label == NEUTRAL {
                return Err(AffectError::Table { line: line_no, message: "`neutral` is reserved".into() });
            }
            if entries.insert(Atom::new(label), v).is_some() {
                return Err(AffectError::Table { line: line_no, message: format!("duplicate label `{}`", label) });
            }
        }
        let Some(dim) = dim else {
            return Err(AffectError::Table { line: 0, message: "empty prototype table".into() });
        };
        Ok(PrototypeTable { entries, dim })
    }

    pub fn default_table() -> Self {
        Self::parse(DEFAULT_PROTOTYPES).expect("bundled prototype table is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, label: Atom) -> Option<&AffectVector> {
        self.entries.get(&label)
    }

    pub fn contains(&self, label: Atom) -> bool {
        self.entries.contains_key(&label)
    }

    pub fn labels(&self) -> impl Iterator<Item = Atom> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Atom, &AffectVector)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    /// Most probable label: nearest prototype angle, ties to the
    /// lexicographically smaller label; `neutral` without a direction.
    pub fn label_of(&self, v: &AffectVector) -> Atom {
        let Some(alpha) = v.angle() else {
            return Atom::new(NEUTRAL);
        };
        let mut best: Option<(Atom, f64)> = None;
        for (label, proto) in &self.entries {
            let d = circular_distance(alpha, proto.angle().unwrap_or(0.0));
            match best {
                Some((_, bd)) if d >= bd - TIE_EPS => {}
                _ => best = Some((*label, d)),
            }
        }
        best.map_or(Atom::new(NEUTRAL), |(l, _)| l)
    }

    /// Label distribution given the angle of `v`: clamped cosine similarity
    /// to each prototype angle, normalised. A vector without direction gets
    /// all-zero mass.
    pub fn probabilities(&self, v: &AffectVector) -> Vec<(Atom, f64)> {
        let Some(alpha) = v.angle() else {
            return self.entries.keys().map(|l| (*l, 0.0)).collect();
        };
        let weights: Vec<(Atom, f64)> = self
            .entries
            .iter()
            .map(|(l, p)| {
                let d = circular_distance(alpha, p.angle().unwrap_or(0.0));
                let w = if d >= PI / 2.0 { 0.0 } else { d.cos().max(0.0) };
                (*l, w)
            })
            .collect();
        let total: f64 = weights.iter().map(|(_, w)| w).sum();
        if total > 0.0 {
            weights.into_iter().map(|(l, w)| (l, w / total)).collect()
        } else {
            let nearest = self.label_of(v);
            weights.into_iter().map(|(l, _)| (l, if l == nearest { 1.0 } else { 0.0 })).collect()
        }
    }

    pub fn label_probability(&self, v: &AffectVector, label: Atom) -> f64 {
        self.probabilities(v).into_iter().find(|(l, _)| *l == label).map_or(0.0, |(_, p)| p)
    }

    pub fn max_probability(&self, v: &AffectVector) -> f64 {
        self.probabilities(v).into_iter().map(|(_, p)| p).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(text: &str) -> PrototypeTable {
        PrototypeTable::parse(text).unwrap()
    }

    #[test]
    fn default_table_has_required_labels() {
        let t = PrototypeTable::default_table();
        for l in ["hope", "joy", "fear", "sadness", "guilt", "happy_for", "sorry_for", "anger"] {
            assert!(t.contains(Atom::new(l)), "{}", l);
        }
        assert_eq!(t.dim(), 3);
    }

    #[test]
    fn exact_prototype_labels_itself() {
        let t = PrototypeTable::default_table();
        let sad = t.get(Atom::new("sadness")).unwrap().clone();
        assert_eq!(t.label_of(&sad), Atom::new("sadness"));
        assert_eq!(t.label_of(&AffectVector::zero(3)), Atom::new(NEUTRAL));
    }

    #[test]
    fn midpoint_goes_to_smaller_label() {
        // prototypes at 0 and 90 degrees; probe at 45 degrees
        let t = table("b 1 0 0\na 0 1 0\n");
        let probe = AffectVector::new(vec![0.5, 0.5, 0.0]);
        let alpha = probe.angle().unwrap();
        let da = circular_distance(alpha, t.get(Atom::new("a")).unwrap().angle().unwrap());
        let db = circular_distance(alpha, t.get(Atom::new("b")).unwrap().angle().unwrap());
        assert!((da - db).abs() < 1e-15);
        assert_eq!(t.label_of(&probe), Atom::new("a"));
    }

    #[test]
    fn probability_examples() {
        let t = table("a 1 0\nb 0 1\nc -1 0\n");
        // aligned with a; b is 90 degrees off and c is 180
        let v = AffectVector::new(vec![0.7, 0.0]);
        assert!((t.label_probability(&v, Atom::new("a")) - 1.0).abs() < 1e-12);
        assert_eq!(t.label_probability(&v, Atom::new("b")), 0.0);
        // two prototypes at +-45 degrees from v
        let t = table("x 1 1\ny 1 -1\n");
        let v = AffectVector::new(vec![0.5, 0.0]);
        assert!((t.label_probability(&v, Atom::new("x")) - 0.5).abs() < 1e-12);
        assert!((t.label_probability(&v, Atom::new("y")) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn all_obtuse_puts_mass_on_nearest() {
        let t = table("a 1 0.01\nb 1 -0.01\n");
        let v = AffectVector::new(vec![-1.0, 0.02]);
        let p = t.probabilities(&v);
        assert_eq!(p.iter().map(|(_, w)| w).sum::<f64>(), 1.0);
        assert_eq!(t.label_probability(&v, t.label_of(&v)), 1.0);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(PrototypeTable::parse("").is_err());
        assert!(PrototypeTable::parse("a 0.1 0.2 0.3\nb 0.1 0.2\n").is_err());
        assert!(PrototypeTable::parse("a 2 0 0\n").is_err());
        assert!(PrototypeTable::parse("a 0 0 0.5\n").is_err());
        assert!(PrototypeTable::parse("Up 0.1 0.1\n").is_err());
    }
}
