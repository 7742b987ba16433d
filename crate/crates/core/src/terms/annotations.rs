//! Queries over the reserved annotations that identify the actors of an
//! empathic interaction.

use thiserror::Error;

use super::atom::Atom;
use super::term::{Arg, Term, TriggeringEvent};

pub const SUBJECT: &str = "subject";
pub const TARGET: &str = "target";
pub const INTERACTION_VALUE: &str = "interaction_value";
pub const AFFECTIVE_RELEVANT: &str = "affective_relevant";
pub const SOURCE: &str = "source";
pub const PROB: &str = "prob__";

pub const RESERVED: [&str; 6] = [SUBJECT, TARGET, INTERACTION_VALUE, AFFECTIVE_RELEVANT, SOURCE, PROB];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TermError {
    #[error("annotation `{0}` appears more than once")]
    DuplicateAnnotation(String),
    #[error("annotation `{functor}` expects {expected} argument(s), found {found}")]
    AnnotationArity { functor: String, expected: usize, found: usize },
    #[error("annotation `{functor}` expects {expected}")]
    AnnotationType { functor: String, expected: &'static str },
    #[error("{functor} value {value} outside [{min}, {max}]")]
    OutOfRange { functor: String, value: f64, min: f64, max: f64 },
}

/// Who caused an event, relative to the agent asking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Agent(Atom),
    SelfAgent,
    Null,
}

impl Subject {
    pub fn label(&self) -> &'static str {
        match self {
            Subject::Agent(a) => a.as_str(),
            Subject::SelfAgent => "self",
            Subject::Null => "null",
        }
    }
}

fn single_atom(te: &Term, functor: &str) -> Option<Atom> {
    te.annotation(Atom::new(functor)).and_then(|a| match a.args.as_slice() {
        [arg] => arg.as_atom(),
        _ => None,
    })
}

pub fn get_subject(te: &TriggeringEvent, self_id: Atom) -> Subject {
    subject_of(&te.literal, self_id)
}

pub fn subject_of(literal: &Term, self_id: Atom) -> Subject {
    match single_atom(literal, SUBJECT) {
        Some(a) if a == self_id => Subject::SelfAgent,
        Some(a) => Subject::Agent(a),
        None => Subject::Null,
    }
}

pub fn get_target(te: &TriggeringEvent) -> Option<Atom> {
    single_atom(&te.literal, TARGET)
}

fn bounded_number(te: &Term, functor: &str, min: f64, max: f64) -> Result<Option<f64>, TermError> {
    let Some(annot) = te.annotation(Atom::new(functor)) else {
        return Ok(None);
    };
    let value = match annot.args.as_slice() {
        [Arg::Num(n)] => *n,
        [_] => return Err(TermError::AnnotationType { functor: functor.into(), expected: "a number" }),
        args => return Err(TermError::AnnotationArity { functor: functor.into(), expected: 1, found: args.len() }),
    };
    if !(min..=max).contains(&value) {
        return Err(TermError::OutOfRange { functor: functor.into(), value, min, max });
    }
    Ok(Some(value))
}

/// Interaction value in [-1, 1]; 0 when the annotation is absent.
pub fn get_iv(te: &TriggeringEvent) -> Result<f64, TermError> {
    Ok(bounded_number(&te.literal, INTERACTION_VALUE, -1.0, 1.0)?.unwrap_or(0.0))
}

/// The `prob__(n)` annotation, when present.
pub fn get_prob(te: &TriggeringEvent) -> Result<Option<f64>, TermError> {
    bounded_number(&te.literal, PROB, 0.0, 1.0)
}

pub fn aff_rel_ev(te: &TriggeringEvent) -> bool {
    te.literal.has_annotation(AFFECTIVE_RELEVANT)
}

/// Checks the reserved annotations of `term`: each at most once, correct
/// arity, and, when ground, correct argument type and range.
pub fn validate_annotations(term: &Term) -> Result<(), TermError> {
    for name in RESERVED {
        let f = Atom::new(name);
        let mut hits = term.annots.iter().filter(|a| a.functor == f);
        let Some(annot) = hits.next() else { continue };
        if hits.next().is_some() {
            return Err(TermError::DuplicateAnnotation(name.into()));
        }
        let expected = if name == AFFECTIVE_RELEVANT { 0 } else { 1 };
        if annot.args.len() != expected {
            return Err(TermError::AnnotationArity { functor: name.into(), expected, found: annot.args.len() });
        }
        let Some(arg) = annot.args.first() else { continue };
        match name {
            SUBJECT | TARGET | SOURCE => {
                if !matches!(arg, Arg::Var(_)) && arg.as_atom().is_none() {
                    return Err(TermError::AnnotationType { functor: name.into(), expected: "an atom" });
                }
            }
            INTERACTION_VALUE => {
                if !matches!(arg, Arg::Var(_)) {
                    bounded_number(term, name, -1.0, 1.0)?;
                }
            }
            PROB if !matches!(arg, Arg::Var(_)) => {
                bounded_number(term, name, 0.0, 1.0)?;
            }
            _ => {}
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::Annotation;

    fn ev(annots: Vec<Annotation>) -> TriggeringEvent {
        TriggeringEvent::add_belief(Term::atom("slap").with_annots(annots))
    }

    fn who(name: &str, id: &str) -> Annotation {
        Annotation::new(name, vec![Arg::atom(id)])
    }

    #[test]
    fn subject_three_branches() {
        let lily = Atom::new("lily");
        let e = ev(vec![who(SUBJECT, "marshall"), who(TARGET, "barney")]);
        assert_eq!(get_subject(&e, lily), Subject::Agent(Atom::new("marshall")));
        let e = ev(vec![who(SUBJECT, "lily")]);
        assert_eq!(get_subject(&e, lily), Subject::SelfAgent);
        let e = TriggeringEvent::add_belief(Term::new("time", vec![Arg::atom("cloudy")]));
        assert_eq!(get_subject(&e, lily), Subject::Null);
    }

    #[test]
    fn target_and_order_independence() {
        let e = ev(vec![who(TARGET, "lily"), who(SUBJECT, "marshall")]);
        assert_eq!(get_target(&e), Some(Atom::new("lily")));
        let e = TriggeringEvent::add_belief(Term::atom("time"));
        assert_eq!(get_target(&e), None);
    }

    #[test]
    fn interaction_value() {
        let e = ev(vec![Annotation::new(INTERACTION_VALUE, vec![Arg::Num(0.2)])]);
        assert_eq!(get_iv(&e), Ok(0.2));
        let e = ev(vec![Annotation::new(INTERACTION_VALUE, vec![Arg::Num(-0.5)])]);
        assert_eq!(get_iv(&e), Ok(-0.5));
        assert_eq!(get_iv(&ev(vec![who(SUBJECT, "a"), who(TARGET, "b")])), Ok(0.0));
        let bad = ev(vec![Annotation::new(INTERACTION_VALUE, vec![Arg::Num(1.5)])]);
        assert!(matches!(get_iv(&bad), Err(TermError::OutOfRange { .. })));
    }

    #[test]
    fn affective_relevance() {
        assert!(aff_rel_ev(&ev(vec![Annotation::flag(AFFECTIVE_RELEVANT)])));
        assert!(!aff_rel_ev(&ev(vec![who(SUBJECT, "marshall")])));
    }

    #[test]
    fn duplicate_reserved_rejected() {
        let t = Term::atom("x").with_annots(vec![who(SUBJECT, "a"), who(SUBJECT, "b")]);
        assert_eq!(validate_annotations(&t), Err(TermError::DuplicateAnnotation("subject".into())));
        let t = Term::atom("x").with_annots(vec![Annotation::new(SUBJECT, vec![])]);
        assert!(matches!(validate_annotations(&t), Err(TermError::AnnotationArity { .. })));
        let t = Term::atom("x").with_annots(vec![Annotation::new(PROB, vec![Arg::Num(1.2)])]);
        assert!(validate_annotations(&t).is_err());
    }
}
