//! Rational (BDI) side of the reasoning cycle.

mod beliefs;
mod circumstance;
mod cycle;
mod select;
mod step;

pub use beliefs::BeliefBase;
pub use circumstance::{
    Applicable, Circumstance, Event, IntendedMeans, Intention, IntentionId, Mailbox, Message, RationalTransient,
};
pub use select::{plan_score, select_applicable_plan, DEFAULT_RATIONALITY};
pub use step::RationalStep;
