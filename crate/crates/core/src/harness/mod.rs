//! Project loading, the tick scheduler and trace tooling.

mod filter;
mod load;
mod sim;

pub use filter::TraceFilter;
pub use load::{load_project, load_scenario, Diagnostic, LoadError, LoadedAgent, Project, Severity};
pub use sim::{Simulation, ALL_AGENTS, DEFAULT_TICKS};
