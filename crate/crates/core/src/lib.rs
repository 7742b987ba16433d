//! Empathic BDI agents: extended AgentSpeak programs, a dual
//! rational/affective reasoning cycle and a deterministic multi-agent
//! simulator.

pub mod affect;
pub mod affective;
pub mod agent;
pub mod design;
pub mod harness;
pub mod parser;
pub mod rational;
pub mod terms;
pub mod trace;
