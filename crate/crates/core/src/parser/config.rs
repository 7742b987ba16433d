//! Configuration blocks shared by agent and project files.

use std::collections::BTreeSet;

use super::cursor::Cursor;
use super::error::{PResult, ParseErrorKind};
use super::lexer::Tok;
use crate::affect::CorrelationMatrix;
use crate::terms::{Atom, Term, TermError};

/// Emotion labels of the bundled prototype table.
pub fn default_emotion_labels() -> Vec<Atom> {
    crate::affect::PrototypeTable::default_table().labels().collect()
}

pub fn ocean() -> Vec<Atom> {
    super::ast::OCEAN.iter().map(|t| Atom::new(t)).collect()
}

/// Where a matrix entry was declared, for later label validation.
#[derive(Debug, Clone)]
pub struct MatrixEntry {
    pub trait_label: Atom,
    pub emotion: Atom,
    pub line: usize,
    pub col: usize,
}

/// Body of `w_matrix__:` in either the nested-list form
/// `[ t: [ E: n, ... ], t: [...] ]` or the sequence form `[t: [...]], [t: [...]]`.
pub fn w_matrix(c: &mut Cursor) -> PResult<(CorrelationMatrix, Vec<MatrixEntry>)> {
    let mut m = CorrelationMatrix::new();
    let mut entries = Vec::new();
    c.expect(Tok::LBracket, "`[`")?;
    if c.eat(&Tok::RBracket) {
        return Ok((m, entries));
    }
    loop {
        trait_weights(c, &mut m, &mut entries)?;
        c.expect(Tok::RBracket, "`]`")?;
        if c.eat(&Tok::Comma) {
            continue;
        }
        c.expect(Tok::RBracket, "`]` or `,`")?;
        if matches!(c.peek(), Tok::Comma) && matches!(c.peek_at(1), Tok::LBracket) {
            c.bump();
            c.bump();
            continue;
        }
        break;
    }
    Ok((m, entries))
}

// `trait: [ E: n, ... ` up to but excluding the closing `]` of the weight list.
fn trait_weights(c: &mut Cursor, m: &mut CorrelationMatrix, entries: &mut Vec<MatrixEntry>) -> PResult<()> {
    let trait_label = c.label("trait label")?;
    c.expect(Tok::Colon, "`:`")?;
    c.expect(Tok::LBracket, "`[`")?;
    loop {
        let tok = c.token().clone();
        let emotion = c.label("emotion label")?;
        c.expect(Tok::Colon, "`:`")?;
        let wtok = c.token().clone();
        let w = c.number("weight")?;
        if w < 0.0 {
            return Err(c.error_at(&wtok, ParseErrorKind::Range, format!("weight {} is negative", w)));
        }
        if m.set(emotion, trait_label, w).is_some() {
            return Err(c.error_at(
                &tok,
                ParseErrorKind::Duplicate,
                format!("weight for ({}, {}) given twice", trait_label, emotion),
            ));
        }
        entries.push(MatrixEntry { trait_label, emotion, line: tok.line, col: tok.col });
        if !c.eat(&Tok::Comma) {
            break;
        }
    }
    Ok(())
}

pub fn check_matrix_labels(entries: &[MatrixEntry], emotions: Option<&[Atom]>, traits: &[Atom]) -> PResult<()> {
    let emo: Option<BTreeSet<Atom>> = emotions.map(|e| e.iter().copied().collect());
    for e in entries {
        if let Some(set) = &emo {
            if !set.contains(&e.emotion) {
                return Err(super::error::ParseError::new(
                    ParseErrorKind::Unknown,
                    e.line,
                    e.col,
                    format!("unknown emotion label `{}`", e.emotion),
                ));
            }
        }
        if !traits.contains(&e.trait_label) {
            return Err(super::error::ParseError::new(
                ParseErrorKind::Unknown,
                e.line,
                e.col,
                format!("unknown trait `{}`", e.trait_label),
            ));
        }
    }
    Ok(())
}

/// `[n, n, ...]`, each within [-1, 1].
pub fn vector(c: &mut Cursor, what: &str) -> PResult<Vec<f64>> {
    c.expect(Tok::LBracket, "`[`")?;
    let mut out = Vec::new();
    loop {
        out.push(c.number_in(what, -1.0, 1.0)?);
        if !c.eat(&Tok::Comma) {
            break;
        }
    }
    c.expect(Tok::RBracket, "`]`")?;
    Ok(out)
}

pub fn check_term(c: &Cursor, tok: &super::lexer::Token, t: &Term) -> PResult<()> {
    crate::terms::validate_annotations(t).map_err(|e| {
        let kind = match e {
            TermError::DuplicateAnnotation(_) => ParseErrorKind::Duplicate,
            TermError::OutOfRange { .. } => ParseErrorKind::Range,
            _ => ParseErrorKind::Syntax,
        };
        c.error_at(tok, kind, e.to_string())
    })?;
    for a in &t.args {
        if let crate::terms::Arg::Term(inner) = a {
            check_term(c, tok, inner)?;
        }
    }
    Ok(())
}

pub fn optional_dot(c: &mut Cursor) {
    c.eat(&Tok::Dot);
}
