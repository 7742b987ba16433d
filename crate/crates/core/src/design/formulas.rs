//! Regulation, selection and adaptation formulas of the default design.

use crate::affect::{psi_of, AffectError, AffectVector, CorrelationMatrix, Emotion, PrototypeTable, Traits};

/// Personality and the tables the weighting factor needs.
#[derive(Debug, Clone, Copy)]
pub struct Weighting<'a> {
    pub traits: &'a Traits,
    pub omega: &'a CorrelationMatrix,
    pub prototypes: &'a PrototypeTable,
}

impl Weighting<'_> {
    pub fn psi(&self, v: &AffectVector) -> Result<f64, AffectError> {
        psi_of(self.traits, self.omega, self.prototypes, v)
    }
}

/// Self-emotion regulation: `clamp(psi(mood) * mood + e)`.
pub fn phi1(w: Weighting, mood: &AffectVector, e: &AffectVector) -> Result<AffectVector, AffectError> {
    let ps = w.psi(mood)?;
    Ok(AffectVector::weighted_sum(&[(ps, mood), (1.0, e)]))
}

/// Empathic regulation: `clamp((psi(e) * e + psi(mood) * mood) * al)`.
pub fn phi2(w: Weighting, mood: &AffectVector, e: &AffectVector, al: f64) -> Result<AffectVector, AffectError> {
    let pe = w.psi(e)?;
    let ps = w.psi(mood)?;
    Ok(AffectVector::weighted_sum(&[(pe * al, e), (ps * al, mood)]))
}

/// Mood adaptation: `clamp(psi(mood) * mood + psi(e) * e)`.
pub fn phi3(w: Weighting, fe: &AffectVector, mood: &AffectVector) -> Result<AffectVector, AffectError> {
    let ps = w.psi(mood)?;
    let pe = w.psi(fe)?;
    Ok(AffectVector::weighted_sum(&[(ps, mood), (pe, fe)]))
}

/// Selection score: best label probability times intensity.
pub fn emotion_score(e: &Emotion, prototypes: &PrototypeTable) -> f64 {
    prototypes.max_probability(&e.vector) * e.intensity()
}

const TIE_REL: f64 = 1e-12;

/// Highest-scoring emotion of `ae` then `ee`. Equal scores go to the
/// lexicographically smaller label, then to the earlier one.
pub fn sel_emotion(ae: &[Emotion], ee: &[Emotion], prototypes: &PrototypeTable) -> Option<(usize, Emotion)> {
    let mut best: Option<(usize, &Emotion, f64)> = None;
    for (i, e) in ae.iter().chain(ee).enumerate() {
        let s = emotion_score(e, prototypes);
        best = match best {
            None => Some((i, e, s)),
            Some((bi, be, bs)) => {
                let tol = TIE_REL * bs.abs().max(s.abs()).max(f64::MIN_POSITIVE);
                if s > bs + tol || ((s - bs).abs() <= tol && e.label < be.label) {
                    Some((i, e, s))
                } else {
                    Some((bi, be, bs))
                }
            }
        };
    }
    best.map(|(i, e, _)| (i, e.clone()))
}

pub const DEFAULT_AL_WEIGHT: f64 = 0.5;

/// `clamp(al + weight * iv)`; a zero interaction leaves `al` untouched.
pub fn update_al(al: f64, iv: f64, weight: f64) -> f64 {
    if iv == 0.0 {
        return al;
    }
    (al + weight * iv).clamp(-1.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::Atom;

    fn v(c: &[f64]) -> AffectVector {
        AffectVector::new(c.to_vec())
    }

    fn close(a: &AffectVector, b: &[f64]) -> bool {
        a.components().iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    // A matrix where every label weighs trait `t` only, so psi equals the
    // level of `t`.
    fn flat(level: f64) -> (Traits, CorrelationMatrix, PrototypeTable) {
        let p = PrototypeTable::default_table();
        let t = Atom::new("t");
        let mut m = CorrelationMatrix::new();
        for l in p.labels() {
            m.set(l, t, 1.0);
        }
        (Traits::from([(t, level)]), m, p)
    }

    #[test]
    fn phi1_examples() {
        let (t, m, p) = flat(0.5);
        let w = Weighting { traits: &t, omega: &m, prototypes: &p };
        assert!(close(&phi1(w, &v(&[0.2, 0.0, 0.0]), &v(&[-0.6, 0.4, -0.2])).unwrap(), &[-0.5, 0.4, -0.2]));
        let (t, m, p) = flat(1.0);
        let w = Weighting { traits: &t, omega: &m, prototypes: &p };
        assert!(close(&phi1(w, &v(&[1.0, 0.0, 0.0]), &v(&[0.5, 0.0, 0.0])).unwrap(), &[1.0, 0.0, 0.0]));
        // neutral mood leaves the emotion unchanged
        let e = v(&[-0.6, 0.4, -0.2]);
        assert_eq!(phi1(w, &AffectVector::zero(3), &e).unwrap(), e);
    }

    #[test]
    fn phi2_examples() {
        let (t, m, p) = flat(0.5);
        let w = Weighting { traits: &t, omega: &m, prototypes: &p };
        let (mood, e) = (v(&[0.2, 0.0, 0.0]), v(&[-0.6, 0.4, -0.2]));
        assert!(close(&phi2(w, &mood, &e, 0.5).unwrap(), &[-0.1, 0.1, -0.05]));
        assert!(phi2(w, &mood, &e, 0.0).unwrap().is_zero());
        assert!(close(&phi2(w, &mood, &e, -0.5).unwrap(), &[0.1, -0.1, 0.05]));
        let (t, m, p) = flat(1.0);
        let w = Weighting { traits: &t, omega: &m, prototypes: &p };
        assert!(close(&phi2(w, &AffectVector::zero(3), &e, 1.0).unwrap(), &[-0.6, 0.4, -0.2]));
    }

    #[test]
    fn phi3_example() {
        // psi(mood) = 0.4 and psi(e) = 0.5 via two traits split by label
        let p = PrototypeTable::default_table();
        let mood = v(&[0.3, 0.1, 0.0]);
        let e = v(&[-0.6, -0.3, -0.3]);
        let (lm, le) = (p.label_of(&mood), p.label_of(&e));
        assert_ne!(lm, le);
        let (a, b) = (Atom::new("a"), Atom::new("b"));
        let mut m = CorrelationMatrix::new();
        m.set(lm, a, 1.0);
        m.set(le, b, 1.0);
        let t = Traits::from([(a, 0.4), (b, 0.5)]);
        let w = Weighting { traits: &t, omega: &m, prototypes: &p };
        assert!(close(&phi3(w, &e, &mood).unwrap(), &[-0.18, -0.11, -0.15]));
        assert!(close(&phi3(w, &AffectVector::zero(3), &mood).unwrap(), &[0.12, 0.04, 0.0]));
    }

    #[test]
    fn selection() {
        let p = PrototypeTable::default_table();
        let sad = Emotion::new(Atom::new("sadness"), p.get(Atom::new("sadness")).unwrap().scale(0.8));
        let fear = Emotion::new(Atom::new("fear"), p.get(Atom::new("fear")).unwrap().scale(0.4));
        assert_eq!(sel_emotion(&[sad.clone(), fear.clone()], &[], &p).unwrap().1.label.as_str(), "sadness");
        assert_eq!(sel_emotion(&[], std::slice::from_ref(&fear), &p).unwrap().0, 0);
        assert!(sel_emotion(&[], &[], &p).is_none());
        // equal scores: lexicographic label
        let twin = Emotion::new(Atom::new("sorry_for"), sad.vector.clone());
        assert_eq!(sel_emotion(&[twin, sad], &[], &p).unwrap().0, 1);
    }

    #[test]
    fn link_update() {
        assert!((update_al(0.5, 0.2, 0.5) - 0.6).abs() < 1e-9);
        assert_eq!(update_al(0.37, 0.0, 0.5).to_bits(), 0.37f64.to_bits());
        assert_eq!(update_al(0.9, 0.5, 0.5), 1.0);
        assert_eq!(update_al(-0.9, -0.5, 0.5), -1.0);
    }
}
