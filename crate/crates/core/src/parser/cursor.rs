//! Token cursor plus the term and expression sub-parsers shared by every
//! file format.

use super::error::{PResult, ParseError, ParseErrorKind};
use super::lexer::{tokenize, Tok, Token};
use crate::terms::{Annotation, Arg, Atom, BinOp, CmpOp, Expr, Func, Term};

pub const MAX_DEPTH: usize = 128;

/// How identifiers with an uppercase initial are read inside terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermMode {
    /// Uppercase names are variables (program text).
    Program,
    /// Uppercase names are normalized to lowercase atoms (ground percepts).
    Ground,
}

#[derive(Debug, Clone, Copy)]
pub struct Mark {
    pos: usize,
    depth: usize,
    anon: usize,
}

pub struct Cursor<'s> {
    pub src: &'s str,
    toks: Vec<Token>,
    pos: usize,
    depth: usize,
    anon: usize,
    pub mode: TermMode,
}

impl<'s> Cursor<'s> {
    pub fn new(src: &'s str) -> Self {
        Cursor { src, toks: tokenize(src), pos: 0, depth: 0, anon: 0, mode: TermMode::Program }
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    pub fn token(&self) -> &Token {
        &self.toks[self.pos]
    }

    pub fn mark(&self) -> Mark {
        Mark { pos: self.pos, depth: self.depth, anon: self.anon }
    }

    pub fn restore(&mut self, m: Mark) {
        self.pos = m.pos;
        self.depth = m.depth;
        self.anon = m.anon;
    }

    pub fn at_eof(&self) -> bool {
        matches!(self.peek(), Tok::Eof)
    }

    pub fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn eat_ident(&mut self, name: &str) -> bool {
        if matches!(self.peek(), Tok::Ident(s) if s == name) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn error(&self, kind: ParseErrorKind, msg: impl Into<String>) -> ParseError {
        let t = self.token();
        ParseError::new(kind, t.line, t.col, msg)
    }

    pub fn error_at(&self, tok: &Token, kind: ParseErrorKind, msg: impl Into<String>) -> ParseError {
        ParseError::new(kind, tok.line, tok.col, msg)
    }

    pub fn unexpected(&self, wanted: &str) -> ParseError {
        if let Tok::Error(m) = self.peek() {
            return self.error(ParseErrorKind::Syntax, m.clone());
        }
        self.error(ParseErrorKind::Syntax, format!("expected {}, found {}", wanted, self.peek().describe()))
    }

    pub fn expect(&mut self, t: Tok, wanted: &str) -> PResult<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    pub fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error(ParseErrorKind::Limit, format!("nesting deeper than {}", MAX_DEPTH)));
        }
        Ok(())
    }

    pub fn leave(&mut self) {
        self.depth -= 1;
    }

    /// Lowercase identifier.
    pub fn ident(&mut self, wanted: &str) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    /// An identifier of either case, lowercased: config labels and agent ids.
    pub fn label(&mut self, wanted: &str) -> PResult<Atom> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(Atom::new(&s))
            }
            Tok::Var(s) if s.starts_with(|c: char| c.is_ascii_uppercase()) => {
                self.bump();
                Ok(Atom::new(&s.to_ascii_lowercase()))
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    /// A possibly negated number literal.
    pub fn number(&mut self, wanted: &str) -> PResult<f64> {
        let neg = self.eat(&Tok::Minus);
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(if neg { -n } else { n })
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    pub fn number_in(&mut self, wanted: &str, lo: f64, hi: f64) -> PResult<f64> {
        let tok = self.token().clone();
        let n = self.number(wanted)?;
        if !(lo..=hi).contains(&n) {
            return Err(self.error_at(
                &tok,
                ParseErrorKind::Range,
                format!("{} must lie in [{}, {}], got {}", wanted, lo, hi, n),
            ));
        }
        Ok(n)
    }

    pub fn string(&mut self, wanted: &str) -> PResult<String> {
        match self.peek().clone() {
            Tok::Str(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn var_atom(&mut self, name: &str) -> Arg {
        if name == "_" {
            self.anon += 1;
            return Arg::Var(Atom::new(&format!("_#{}", self.anon)));
        }
        match self.mode {
            TermMode::Program => Arg::Var(Atom::new(name)),
            TermMode::Ground => Arg::Term(Term::atom(&name.to_ascii_lowercase())),
        }
    }

    pub fn arg(&mut self) -> PResult<Arg> {
        match self.peek().clone() {
            Tok::Var(v) => {
                self.bump();
                let a = self.var_atom(&v);
                if let (Arg::Term(t), TermMode::Ground) = (&a, self.mode) {
                    // ground mode: a capitalized name may carry args like a functor
                    if matches!(self.peek(), Tok::LParen | Tok::LBracket) {
                        let term = self.term_rest(t.functor)?;
                        return Ok(Arg::Term(term));
                    }
                }
                Ok(a)
            }
            Tok::Num(_) | Tok::Minus => Ok(Arg::Num(self.number("number")?)),
            Tok::Str(s) => {
                self.bump();
                Ok(Arg::Str(s))
            }
            Tok::Ident(_) => Ok(Arg::Term(self.term()?)),
            _ => Err(self.unexpected("term")),
        }
    }

    fn args_in_parens(&mut self) -> PResult<Vec<Arg>> {
        let mut args = Vec::new();
        if self.eat(&Tok::LParen) {
            self.enter()?;
            loop {
                args.push(self.arg()?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
            self.expect(Tok::RParen, "`)` or `,`")?;
            self.leave();
        }
        Ok(args)
    }

    /// `functor(args)[annots]` with a lowercase functor (or any case in
    /// ground mode).
    pub fn term(&mut self) -> PResult<Term> {
        let functor = match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Atom::new(&s)
            }
            Tok::Var(s) if self.mode == TermMode::Ground && s.starts_with(|c: char| c.is_ascii_uppercase()) => {
                self.bump();
                Atom::new(&s.to_ascii_lowercase())
            }
            _ => return Err(self.unexpected("term")),
        };
        self.term_rest(functor)
    }

    fn term_rest(&mut self, functor: Atom) -> PResult<Term> {
        self.enter()?;
        let args = self.args_in_parens()?;
        let mut annots = Vec::new();
        if self.eat(&Tok::LBracket) && !self.eat(&Tok::RBracket) {
            loop {
                let f = match self.peek().clone() {
                    Tok::Ident(s) => {
                        self.bump();
                        Atom::new(&s)
                    }
                    _ => return Err(self.unexpected("annotation")),
                };
                let args = self.args_in_parens()?;
                annots.push(Annotation { functor: f, args });
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
            self.expect(Tok::RBracket, "`]` or `,`")?;
        }
        self.leave();
        Ok(Term { functor, args, annots })
    }

    // Arithmetic: additive, multiplicative, unary, primary.

    pub fn expr(&mut self) -> PResult<Expr> {
        self.enter()?;
        let mut lhs = self.mul_expr()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.mul_expr()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        self.leave();
        Ok(lhs)
    }

    fn mul_expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary_expr()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => break,
            };
            self.bump();
            let rhs = self.unary_expr()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary_expr(&mut self) -> PResult<Expr> {
        if self.eat(&Tok::Minus) {
            self.enter()?;
            let inner = self.unary_expr()?;
            self.leave();
            return Ok(match inner {
                Expr::Num(n) if n > 0.0 => Expr::Num(-n),
                other => Expr::Neg(Box::new(other)),
            });
        }
        self.primary_expr()
    }

    fn primary_expr(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::Var(v) => {
                self.bump();
                Ok(Expr::Var(Atom::new(&v)))
            }
            Tok::Ident(name) => {
                if matches!(self.peek_at(1), Tok::LParen) {
                    let tok = self.token().clone();
                    let func = Func::from_name(&name).ok_or_else(|| {
                        self.error_at(&tok, ParseErrorKind::Unknown, format!("unknown function `{}`", name))
                    })?;
                    self.bump();
                    self.bump();
                    let mut args = Vec::new();
                    if !matches!(self.peek(), Tok::RParen) {
                        loop {
                            args.push(self.expr()?);
                            if !self.eat(&Tok::Comma) {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RParen, "`)`")?;
                    let ok = match func {
                        Func::Abs => args.len() == 1,
                        Func::Min | Func::Max => !args.is_empty(),
                    };
                    if !ok {
                        return Err(self.error_at(
                            &tok,
                            ParseErrorKind::Syntax,
                            format!("wrong number of arguments to `{}`", name),
                        ));
                    }
                    Ok(Expr::Call(func, args))
                } else {
                    self.bump();
                    Ok(Expr::Var(Atom::new(&name)))
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(self.unexpected("expression")),
        }
    }

    pub fn cmp_op(&mut self) -> Option<CmpOp> {
        let op = match self.peek() {
            Tok::Lt => CmpOp::Lt,
            Tok::Le => CmpOp::Le,
            Tok::Gt => CmpOp::Gt,
            Tok::Ge => CmpOp::Ge,
            Tok::EqEq => CmpOp::Eq,
            Tok::NotEq => CmpOp::Ne,
            _ => return None,
        };
        self.bump();
        Some(op)
    }

    /// Source text from the current token to the end of its line; the
    /// cursor moves past every token that starts on that line.
    pub fn rest_of_line(&mut self) -> PResult<String> {
        let start = self.token().start;
        let line_end = self.src[start..].find('\n').map(|k| start + k).unwrap_or(self.src.len());
        let mut end = start;
        while !self.at_eof() && self.token().start < line_end {
            if self.token().end > line_end {
                return Err(self.error(ParseErrorKind::Syntax, "value runs past the end of its line"));
            }
            end = self.token().end;
            self.bump();
        }
        Ok(self.src[start..end].trim().to_string())
    }
}
