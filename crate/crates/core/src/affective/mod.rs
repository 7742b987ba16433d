//! Affective side of the reasoning cycle.

mod classify;
mod machine;
mod transient;

pub use classify::{classify, classify_event, Classification, GAP_WARNING};
pub use transient::{AffectiveMemory, AffectiveStep, AffectiveTransient, BeliefUpdate, CopingChoice, MemoryEntry};
