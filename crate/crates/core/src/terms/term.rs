use std::fmt;

use super::atom::Atom;

/// An argument position inside a term or annotation.
#[derive(Debug, Clone, PartialEq)]
pub enum Arg {
    Term(Term),
    Var(Atom),
    Num(f64),
    Str(String),
}

/// Metadata attached to a term, e.g. `subject(marshall)` or `affective_relevant`.
#[derive(Debug, Clone, PartialEq)]
pub struct Annotation {
    pub functor: Atom,
    pub args: Vec<Arg>,
}

/// Atomic formula `functor(args)[annots]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub functor: Atom,
    pub args: Vec<Arg>,
    pub annots: Vec<Annotation>,
}

impl Arg {
    pub fn atom(name: &str) -> Arg {
        Arg::Term(Term::atom(name))
    }

    /// The atom this argument denotes, if it is a bare zero-arity term.
    pub fn as_atom(&self) -> Option<Atom> {
        match self {
            Arg::Term(t) if t.args.is_empty() => Some(t.functor),
            _ => None,
        }
    }

    pub fn as_num(&self) -> Option<f64> {
        match self {
            Arg::Num(n) => Some(*n),
            _ => None,
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Arg::Var(_) => false,
            Arg::Term(t) => t.is_ground(),
            Arg::Num(_) | Arg::Str(_) => true,
        }
    }

    pub(crate) fn collect_vars(&self, out: &mut Vec<Atom>) {
        match self {
            Arg::Var(v) => {
                if !out.contains(v) {
                    out.push(*v)
                }
            }
            Arg::Term(t) => t.collect_vars(out),
            _ => {}
        }
    }
}

impl Annotation {
    pub fn new(functor: &str, args: Vec<Arg>) -> Self {
        Annotation { functor: Atom::new(functor), args }
    }

    pub fn flag(functor: &str) -> Self {
        Annotation::new(functor, Vec::new())
    }
}

impl Term {
    pub fn atom(name: &str) -> Term {
        Term { functor: Atom::new(name), args: Vec::new(), annots: Vec::new() }
    }

    pub fn new(functor: &str, args: Vec<Arg>) -> Term {
        Term { functor: Atom::new(functor), args, annots: Vec::new() }
    }

    pub fn with_annots(mut self, annots: Vec<Annotation>) -> Term {
        self.annots = annots;
        self
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(Arg::is_ground) && self.annots.iter().all(|a| a.args.iter().all(Arg::is_ground))
    }

    pub fn annotation(&self, functor: Atom) -> Option<&Annotation> {
        self.annots.iter().find(|a| a.functor == functor)
    }

    pub fn has_annotation(&self, functor: &str) -> bool {
        let f = Atom::new(functor);
        self.annots.iter().any(|a| a.functor == f)
    }

    /// Adds `annot`, replacing any existing annotation with the same functor.
    pub fn set_annotation(&mut self, annot: Annotation) {
        if let Some(slot) = self.annots.iter_mut().find(|a| a.functor == annot.functor) {
            *slot = annot;
        } else {
            self.annots.push(annot);
        }
    }

    pub fn without_annots(&self) -> Term {
        Term { functor: self.functor, args: self.args.clone(), annots: Vec::new() }
    }

    /// Structural equality on functor and arguments only.
    pub fn same_atomic_formula(&self, other: &Term) -> bool {
        self.functor == other.functor
            && self.args.len() == other.args.len()
            && self.args.iter().zip(&other.args).all(|(a, b)| arg_eq_ignoring_annots(a, b))
    }

    /// Annotation-set equality, insensitive to order.
    pub fn same_annotations(&self, other: &Term) -> bool {
        self.annots.len() == other.annots.len() && self.annots.iter().all(|a| other.annots.contains(a))
    }

    pub fn vars(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut Vec<Atom>) {
        for a in &self.args {
            a.collect_vars(out);
        }
        for an in &self.annots {
            for a in &an.args {
                a.collect_vars(out);
            }
        }
    }
}

fn arg_eq_ignoring_annots(a: &Arg, b: &Arg) -> bool {
    match (a, b) {
        (Arg::Term(x), Arg::Term(y)) => x.same_atomic_formula(y),
        _ => a == b,
    }
}

/// `+` or `-` prefix of a triggering event.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventOp {
    Add,
    Del,
}

/// What the event is about: a belief, an achievement goal (`!`), or a test goal (`?`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    Belief,
    Achieve,
    Test,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriggeringEvent {
    pub op: EventOp,
    pub kind: EventKind,
    pub literal: Term,
}

impl TriggeringEvent {
    pub fn new(op: EventOp, kind: EventKind, literal: Term) -> Self {
        TriggeringEvent { op, kind, literal }
    }

    pub fn add_belief(literal: Term) -> Self {
        Self::new(EventOp::Add, EventKind::Belief, literal)
    }

    pub fn achieve(literal: Term) -> Self {
        Self::new(EventOp::Add, EventKind::Achieve, literal)
    }
}

pub(crate) fn is_anonymous_var(name: &str) -> bool {
    name.starts_with("_#")
}

pub(crate) fn fmt_num(n: f64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if n == 0.0 {
        // avoid printing "-0"
        f.write_str("0")
    } else {
        write!(f, "{}", n)
    }
}

pub(crate) fn fmt_str(s: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str("\"")?;
    for c in s.chars() {
        match c {
            '"' => f.write_str("\\\"")?,
            '\\' => f.write_str("\\\\")?,
            '\n' => f.write_str("\\n")?,
            '\t' => f.write_str("\\t")?,
            '\r' => f.write_str("\\r")?,
            c => write!(f, "{}", c)?,
        }
    }
    f.write_str("\"")
}

fn fmt_args(args: &[Arg], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if !args.is_empty() {
        f.write_str("(")?;
        for (i, a) in args.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", a)?;
        }
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Term(t) => write!(f, "{}", t),
            Arg::Var(v) if is_anonymous_var(v.as_str()) => f.write_str("_"),
            Arg::Var(v) => write!(f, "{}", v),
            Arg::Num(n) => fmt_num(*n, f),
            Arg::Str(s) => fmt_str(s, f),
        }
    }
}

impl fmt::Display for Annotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.functor)?;
        fmt_args(&self.args, f)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.functor)?;
        fmt_args(&self.args, f)?;
        if !self.annots.is_empty() {
            f.write_str("[")?;
            for (i, a) in self.annots.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", a)?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Display for TriggeringEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.op {
            EventOp::Add => "+",
            EventOp::Del => "-",
        };
        let kind = match self.kind {
            EventKind::Belief => "",
            EventKind::Achieve => "!",
            EventKind::Test => "?",
        };
        write!(f, "{}{}{}", op, kind, self.literal)
    }
}
