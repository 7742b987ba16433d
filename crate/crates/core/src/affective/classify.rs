use crate::terms::{aff_rel_ev, get_subject, get_target, Atom, Subject, TriggeringEvent};

/// Outcome of event classification. `Gap` is an affectively relevant event
/// without a target: no classification rule covers it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Not affective and not an interaction aimed at us by someone else.
    EvClass1,
    /// Someone else interacted with us: adjust the link with the subject.
    EvClass2 {
        subject: Atom,
    },
    /// Affective event aimed at another agent: empathic path.
    EvClass3 {
        target: Atom,
    },
    /// Affective event aimed at us: self appraisal.
    EvClass4,
    Gap,
}

impl Classification {
    pub fn rule(&self) -> &'static str {
        match self {
            Classification::EvClass1 | Classification::Gap => "EvClass1",
            Classification::EvClass2 { .. } => "EvClass2",
            Classification::EvClass3 { .. } => "EvClass3",
            Classification::EvClass4 => "EvClass4",
        }
    }
}

pub const GAP_WARNING: &str =
    "affectively relevant event has no target; no classification rule applies, handled as EvClass1";

pub fn classify(aff_rel: bool, target: Option<Atom>, subject: Subject, self_id: Atom) -> Classification {
    let tg_self = target == Some(self_id);
    match (aff_rel, target) {
        (false, _) if tg_self => match subject {
            Subject::Agent(s) => Classification::EvClass2 { subject: s },
            Subject::SelfAgent | Subject::Null => Classification::EvClass1,
        },
        (false, _) => Classification::EvClass1,
        (true, None) => Classification::Gap,
        (true, Some(_)) if tg_self => Classification::EvClass4,
        (true, Some(t)) => Classification::EvClass3 { target: t },
    }
}

pub fn classify_event(te: &TriggeringEvent, self_id: Atom) -> Classification {
    classify(aff_rel_ev(te), get_target(te), get_subject(te, self_id), self_id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_term;

    fn ev(s: &str) -> TriggeringEvent {
        let mut c = parse_term(s).unwrap();
        // capitalised names in the examples
        for a in &mut c.annots {
            for arg in &mut a.args {
                if let crate::terms::Arg::Var(v) = arg {
                    *arg = crate::terms::Arg::atom(&v.as_str().to_ascii_lowercase());
                }
            }
        }
        TriggeringEvent::add_belief(c)
    }

    #[test]
    fn narrative_events() {
        let lily = Atom::new("lily");
        assert_eq!(classify_event(&ev("time(cloudy)"), lily), Classification::EvClass1);
        assert_eq!(
            classify_event(&ev("hello[subject(Marshall),target(Lily),interaction_value(0.2)]"), lily),
            Classification::EvClass2 { subject: Atom::new("marshall") }
        );
        assert_eq!(
            classify_event(
                &ev("slap[subject(Marshall),target(Barney),affective_relevant,interaction_value(-0.5)]"),
                lily
            ),
            Classification::EvClass3 { target: Atom::new("barney") }
        );
        assert_eq!(
            classify_event(
                &ev("slap[subject(Marshall),target(Lily),affective_relevant,interaction_value(-0.5)]"),
                lily
            ),
            Classification::EvClass4
        );
        assert_eq!(classify_event(&ev("storm[affective_relevant]"), lily), Classification::Gap);
    }
}
