//! Logic terms, annotations, substitution and unification.

mod annotations;
mod atom;
mod expr;
mod term;
mod unify;

pub use annotations::{
    aff_rel_ev, get_iv, get_prob, get_subject, get_target, subject_of, validate_annotations, Subject, TermError,
    AFFECTIVE_RELEVANT, INTERACTION_VALUE, PROB, RESERVED, SOURCE, SUBJECT, TARGET,
};
pub use atom::Atom;
pub use expr::{BinOp, CmpOp, EvalError, Expr, Func};
pub use term::{Annotation, Arg, EventKind, EventOp, Term, TriggeringEvent};
pub use unify::{match_pattern, unify, unify_events, unify_with, Substitution};
