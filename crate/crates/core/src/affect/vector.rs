use std::f64::consts::TAU;
use std::fmt;

/// A point of the affect space. Components are kept in [-1, 1]; every
/// constructor and arithmetic helper clamps its result.
#[derive(Debug, Clone, PartialEq)]
pub struct AffectVector(Vec<f64>);

pub const DEFAULT_DIM: usize = 3;

fn clamp1(x: f64) -> f64 {
    if x.is_nan() {
        0.0
    } else {
        x.clamp(-1.0, 1.0)
    }
}

impl AffectVector {
    pub fn new(components: Vec<f64>) -> Self {
        AffectVector(components.into_iter().map(clamp1).collect())
    }

    pub fn zero(dim: usize) -> Self {
        AffectVector(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0.0)
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Normalised magnitude |v| / sqrt(n), in [0, 1].
    pub fn intensity(&self) -> f64 {
        if self.0.is_empty() {
            0.0
        } else {
            self.norm() / (self.0.len() as f64).sqrt()
        }
    }

    /// Angle of the (pleasure, arousal) projection in [0, 2pi); `None` when
    /// that projection is the origin.
    pub fn angle(&self) -> Option<f64> {
        let p = self.0.first().copied().unwrap_or(0.0);
        let a = self.0.get(1).copied().unwrap_or(0.0);
        if p == 0.0 && a == 0.0 {
            return None;
        }
        let mut alpha = a.atan2(p);
        if alpha < 0.0 {
            alpha += TAU;
        }
        if alpha >= TAU {
            alpha -= TAU;
        }
        Some(alpha)
    }

    pub fn scale(&self, k: f64) -> Self {
        AffectVector::new(self.0.iter().map(|c| c * k).collect())
    }

    pub fn distance(&self, other: &AffectVector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "affect vectors of different dimension");
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
    }

    /// Clamped weighted sum `sum(k_i * v_i)`; clamping happens once, after
    /// the whole sum is formed.
    pub fn weighted_sum(terms: &[(f64, &AffectVector)]) -> Self {
        let dim = terms.first().map_or(0, |(_, v)| v.dim());
        let mut acc = vec![0.0; dim];
        for (k, v) in terms {
            assert_eq!(v.dim(), dim, "affect vectors of different dimension");
            for (slot, c) in acc.iter_mut().zip(&v.0) {
                *slot += k * c;
            }
        }
        AffectVector::new(acc)
    }

    /// Unclamped weighted sum, exposed for checks that need the pre-clamp value.
    pub fn raw_weighted_sum(terms: &[(f64, &AffectVector)]) -> Vec<f64> {
        let dim = terms.first().map_or(0, |(_, v)| v.dim());
        let mut acc = vec![0.0; dim];
        for (k, v) in terms {
            for (slot, c) in acc.iter_mut().zip(&v.0) {
                *slot += k * c;
            }
        }
        acc
    }
}

impl fmt::Display for AffectVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{:.3}", c)?;
        }
        f.write_str(")")
    }
}

/// Moves `mood` a fraction `rate` of the way toward `equilibrium`.
pub fn decay(mood: &AffectVector, equilibrium: &AffectVector, rate: f64) -> AffectVector {
    assert_eq!(mood.dim(), equilibrium.dim(), "affect vectors of different dimension");
    let rate = rate.clamp(0.0, 1.0);
    if rate == 1.0 {
        return equilibrium.clone();
    }
    AffectVector::new(mood.0.iter().zip(&equilibrium.0).map(|(m, e)| m + rate * (e - m)).collect())
}
