//! Syntax trees produced by the parsers.

use std::collections::BTreeMap;

use crate::affect::CorrelationMatrix;
use crate::rational::RationalStep;
use crate::terms::{Annotation, Arg, Atom, CmpOp, Expr, Term, TriggeringEvent};

pub const OCEAN: [&str; 5] = ["openness", "conscientiousness", "extraversion", "agreeableness", "neuroticism"];

/// A parsed agent program (`.easl`).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AgentProgram {
    pub init_beliefs: Vec<Term>,
    pub concerns: Vec<ConcernDef>,
    pub personality: Option<PersonalityDef>,
    pub others: Vec<OtherAgentDef>,
    pub affect: Option<AffectSettings>,
    pub w_matrix: Option<CorrelationMatrix>,
    pub init_goals: Vec<Term>,
    pub plans: Vec<PlanDef>,
}

impl AgentProgram {
    pub fn plan_by_label(&self, label: Atom) -> Option<(usize, &PlanDef)> {
        self.plans.iter().enumerate().find(|(_, p)| p.label == Some(label))
    }
}

/// `concern__: pattern : value.` The pattern is matched against event
/// literals; the expression may use the pattern's variables.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcernDef {
    pub pattern: Term,
    pub value: Expr,
}

impl ConcernDef {
    pub fn label(&self) -> Atom {
        self.pattern.functor
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PersonalityDef {
    pub traits: BTreeMap<Atom, f64>,
    pub rationality_level: Option<f64>,
    pub coping_strategies: Vec<Atom>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AttrValue {
    Num(f64),
    Atom(Atom),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OtherAgentDef {
    pub id: Atom,
    pub attributes: Vec<(Atom, AttrValue)>,
}

impl OtherAgentDef {
    pub fn attribute(&self, label: &str) -> Option<&AttrValue> {
        let l = Atom::new(label);
        self.attributes.iter().find(|(k, _)| *k == l).map(|(_, v)| v)
    }

    pub fn affective_link(&self) -> Option<f64> {
        match self.attribute("affective_link") {
            Some(AttrValue::Num(n)) => Some(*n),
            _ => None,
        }
    }

    /// Numeric `concern_<functor>` attributes: what this agent is believed
    /// to care about.
    pub fn declared_concerns(&self) -> impl Iterator<Item = (&str, f64)> {
        self.attributes.iter().filter_map(|(k, v)| match (k.as_str().strip_prefix("concern_"), v) {
            (Some(f), AttrValue::Num(n)) if !f.is_empty() => Some((f, *n)),
            _ => None,
        })
    }
}

/// Whose concerns the empathic appraisal evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmpathyPerspective {
    #[default]
    SelfProjection,
    Target,
}

/// `affect__: [ ... ]`: initial mood and mood dynamics of one agent.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AffectSettings {
    pub mood: Option<Vec<f64>>,
    pub equilibrium: Option<Vec<f64>>,
    pub decay_rate: Option<f64>,
    pub empathy: Option<EmpathyPerspective>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Condition {
    Belief(Term),
    Not(Term),
    Compare(CmpOp, Expr, Expr),
}

#[derive(Debug, Clone, PartialEq)]
pub enum BodyStep {
    AddBelief(Term),
    DelBelief(Term),
    Achieve(Term),
    Test(Term),
    Print(Vec<Arg>),
    Send { receiver: Arg, ilf: Arg, content: Arg },
    Action(Term),
}

/// Guards that make a plan part of the affective applicable set.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AffectiveConditions {
    pub mood: Option<(Atom, f64)>,
    pub traits: Vec<(Atom, f64)>,
}

impl AffectiveConditions {
    pub fn is_empty(&self) -> bool {
        self.mood.is_none() && self.traits.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanDef {
    pub label: Option<Atom>,
    pub label_annots: Vec<Annotation>,
    pub trigger: TriggeringEvent,
    pub context: Vec<Condition>,
    /// Empty means `true`.
    pub body: Vec<BodyStep>,
    pub priority: f64,
    pub affective: AffectiveConditions,
    /// For coping strategies: the rational step at which belief updates land.
    pub cope_step: Option<RationalStep>,
}

pub const DEFAULT_PRIORITY: f64 = 1.0;

/// `.emas` project file.
#[derive(Debug, Clone, PartialEq)]
pub struct MasProject {
    pub name: Atom,
    pub infrastructure: Option<String>,
    pub environment: Option<String>,
    pub exec_control: Option<String>,
    pub agents: Vec<AgentDecl>,
    pub settings: MasSettings,
    pub w_matrix: Option<CorrelationMatrix>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AgentDecl {
    pub id: Atom,
    pub path: String,
}

/// `settings__: [ ... ]`: MAS-wide runtime parameters.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MasSettings {
    pub al_weight: Option<f64>,
    pub prototypes: Option<String>,
    pub emotion_table: Option<String>,
    pub empathic_table: Option<String>,
    pub traits: Option<Vec<Atom>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipient {
    Agent(Atom),
    Broadcast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Injection {
    pub tick: u64,
    pub recipient: Recipient,
    pub event: TriggeringEvent,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scenario {
    pub injections: Vec<Injection>,
    pub run_length: Option<u64>,
}
