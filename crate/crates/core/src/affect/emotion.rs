use std::fmt;

use super::vector::AffectVector;
use crate::terms::Atom;

/// A labelled point in affect space. Intensity and angle are derived from
/// the vector on demand, so they can never go stale.
#[derive(Debug, Clone, PartialEq)]
pub struct Emotion {
    pub label: Atom,
    pub vector: AffectVector,
}

impl Emotion {
    pub fn new(label: Atom, vector: AffectVector) -> Self {
        Emotion { label, vector }
    }

    pub fn intensity(&self) -> f64 {
        self.vector.intensity()
    }

    pub fn angle(&self) -> Option<f64> {
        self.vector.angle()
    }

    pub fn with_vector(&self, vector: AffectVector) -> Self {
        Emotion { label: self.label, vector }
    }
}

impl fmt::Display for Emotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} δ={:.3}", self.label, self.vector, self.intensity())
    }
}
