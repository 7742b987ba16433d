//! Parsers for agent programs, project files and scenarios.

mod agent;
pub mod ast;
mod config;
mod cursor;
mod error;
mod lexer;
mod mas;
pub mod pretty;
mod scenario;

pub use agent::{parse_agent, parse_agent_with, AgentOptions};
pub use ast::*;
pub use config::{default_emotion_labels, ocean};
pub use error::{ParseError, ParseErrorKind};
pub use lexer::{tokenize, Tok, Token};
pub use mas::parse_mas;
pub use scenario::{parse_scenario, parse_scenario_for};

/// Parses one whole expression, e.g. an emotion-table intensity column.
pub fn parse_expr(src: &str) -> Result<crate::terms::Expr, ParseError> {
    let mut c = cursor::Cursor::new(src);
    let e = c.expr()?;
    if !c.at_eof() {
        return Err(c.unexpected("end of expression"));
    }
    Ok(e)
}

/// Parses a single term such as `hello[subject(marshall)]`.
pub fn parse_term(src: &str) -> Result<crate::terms::Term, ParseError> {
    let mut c = cursor::Cursor::new(src);
    let t = c.term()?;
    if !c.at_eof() {
        return Err(c.unexpected("end of term"));
    }
    Ok(t)
}
