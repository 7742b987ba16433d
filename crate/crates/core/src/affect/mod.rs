//! Affect-space arithmetic: PAD vectors, emotion labelling, personality
//! weighting and mood decay.

mod emotion;
mod matrix;
mod prototypes;
mod vector;

use thiserror::Error;

pub use emotion::Emotion;
pub use matrix::{psi, psi_of, CorrelationMatrix, Traits};
pub use prototypes::{PrototypeTable, DEFAULT_PROTOTYPES, NEUTRAL};
pub use vector::{decay, AffectVector, DEFAULT_DIM};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AffectError {
    #[error("personality weighting undefined for `{0}`: no positive weight in the correlation matrix")]
    UndefinedPsi(String),
    #[error("prototype table line {line}: {message}")]
    Table { line: usize, message: String },
}
