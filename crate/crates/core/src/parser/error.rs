use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    /// A number outside its allowed interval.
    Range,
    Duplicate,
    /// Section appearing after one that must follow it.
    Order,
    /// Reference to an undeclared trait, emotion, agent or plan label.
    Unknown,
    /// Nesting or size limit exceeded.
    Limit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError { kind, line, col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Range => "range error",
            ParseErrorKind::Duplicate => "duplicate",
            ParseErrorKind::Order => "section order",
            ParseErrorKind::Unknown => "unknown name",
            ParseErrorKind::Limit => "limit exceeded",
        };
        write!(f, "{}:{}: {}: {}", self.line, self.col, kind, self.message)
    }
}

impl std::error::Error for ParseError {}

pub type PResult<T> = Result<T, ParseError>;
