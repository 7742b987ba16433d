use crate::parser::ConcernDef;
use crate::terms::{get_prob, get_subject, match_pattern, Atom, EventOp, Subject, TriggeringEvent};

/// Appraisal variables of one event.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppraisalVariables {
    pub desirability: f64,
    pub likelihood: f64,
    pub causal_attribution: Subject,
}

impl AppraisalVariables {
    pub fn new(desirability: f64, likelihood: f64, causal_attribution: Subject) -> Self {
        AppraisalVariables { desirability, likelihood, causal_attribution }
    }
}

/// Whose concerns an event is judged against.
#[derive(Debug, Clone, Copy)]
pub enum Concerns<'a> {
    Own(&'a [ConcernDef]),
    /// Constant values keyed by event functor, as declared for another agent.
    Declared(&'a [(Atom, f64)]),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Appraisal {
    pub vars: AppraisalVariables,
    /// Functor of the concern that matched, if any.
    pub concern: Option<Atom>,
    pub warnings: Vec<String>,
}

/// Desirability from the first matching concern, negated for deletions and
/// clamped to [-1, 1]. Returns the value, the matched concern and any
/// evaluation warning.
pub fn desirability(te: &TriggeringEvent, concerns: Concerns) -> (f64, Option<Atom>, Option<String>) {
    let (raw, label) = match concerns {
        Concerns::Own(defs) => {
            let Some((def, subst)) = defs.iter().find_map(|d| {
                let mut s = crate::terms::Substitution::new();
                match_pattern(&d.pattern, &te.literal, &mut s).then_some((d, s))
            }) else {
                return (0.0, None, None);
            };
            let lookup = |v: Atom| subst.number(v);
            match def.value.eval(&lookup) {
                Ok(v) => (v, def.label()),
                Err(e) => {
                    return (0.0, Some(def.label()), Some(format!("concern `{}` not evaluable: {}", def.label(), e)));
                }
            }
        }
        Concerns::Declared(pairs) => match pairs.iter().find(|(f, _)| *f == te.literal.functor) {
            Some((f, v)) => (*v, *f),
            None => return (0.0, None, None),
        },
    };
    let signed = match te.op {
        EventOp::Add => raw,
        EventOp::Del => -raw,
    };
    (signed.clamp(-1.0, 1.0), Some(label), None)
}

/// Likelihood from `prob__(n)`, 1 when absent.
pub fn likelihood(te: &TriggeringEvent) -> (f64, Option<String>) {
    match get_prob(te) {
        Ok(p) => (p.unwrap_or(1.0), None),
        Err(e) => (1.0, Some(e.to_string())),
    }
}

pub fn derive_av(te: &TriggeringEvent, self_id: Atom, concerns: Concerns) -> Appraisal {
    let (d, concern, w1) = desirability(te, concerns);
    let (l, w2) = likelihood(te);
    let ca = get_subject(te, self_id);
    Appraisal { vars: AppraisalVariables::new(d, l, ca), concern, warnings: w1.into_iter().chain(w2).collect() }
}
