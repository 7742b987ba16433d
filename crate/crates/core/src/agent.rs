//! The full configuration of one agent and the per-tick reasoning pass.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::affect::{AffectError, AffectVector, CorrelationMatrix, Traits};
use crate::affective::{AffectiveMemory, AffectiveTransient};
use crate::design::AffectiveDesign;
use crate::parser::{AgentProgram, AttrValue, ConcernDef, EmpathyPerspective, PlanDef};
use crate::rational::{BeliefBase, Circumstance, Event, Mailbox, RationalTransient, DEFAULT_RATIONALITY};
use crate::terms::{Atom, TriggeringEvent};
use crate::trace::Tracer;

pub const DEFAULT_DECAY_RATE: f64 = 0.05;

/// What an agent knows about another agent.
#[derive(Debug, Clone, PartialEq)]
pub struct OtherAgentInfo {
    pub id: Atom,
    pub al: f64,
    /// Believed mood; stored and traced, not read by the default formulas.
    pub mood: AffectVector,
    /// `concern_<functor>` attributes: what the other agent is believed to care about.
    pub concerns: Vec<(Atom, f64)>,
    pub attributes: Vec<(Atom, AttrValue)>,
}

impl OtherAgentInfo {
    pub fn unknown(id: Atom, dim: usize) -> Self {
        OtherAgentInfo { id, al: 0.0, mood: AffectVector::zero(dim), concerns: Vec::new(), attributes: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Personality {
    pub traits: Traits,
    pub rationality: f64,
    pub coping: Vec<Atom>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RuntimeError {
    #[error("agent {agent}: {source}")]
    Affect { agent: String, source: AffectError },
    #[error("agent {agent}: {message}")]
    Config { agent: String, message: String },
}

#[derive(Debug, Clone)]
pub struct AgentState {
    pub id: Atom,
    pub plans: Arc<Vec<PlanDef>>,
    pub concerns: Arc<Vec<ConcernDef>>,
    pub beliefs: BeliefBase,
    pub circumstance: Circumstance,
    pub mailbox: Mailbox,
    pub transient: RationalTransient,
    pub memory: AffectiveMemory,
    pub affective: AffectiveTransient,
    pub others: BTreeMap<Atom, OtherAgentInfo>,
    pub personality: Personality,
    pub omega: Arc<CorrelationMatrix>,
    pub equilibrium: AffectVector,
    pub decay_rate: f64,
    pub empathy: EmpathyPerspective,
    /// Plan indices eligible for rational selection (coping strategies excluded).
    pub(crate) selectable: Vec<bool>,
    pub(crate) round_robin: usize,
}

impl AgentState {
    /// Builds the initial configuration. `dim` is the affect-space dimension
    /// of the prototype table in use.
    pub fn new(id: Atom, prog: &AgentProgram, omega: Arc<CorrelationMatrix>, dim: usize) -> Result<Self, RuntimeError> {
        let cfg = |message: String| RuntimeError::Config { agent: id.to_string(), message };
        let affect = prog.affect.clone().unwrap_or_default();
        let vec_of = |v: Option<Vec<f64>>, what: &str| -> Result<AffectVector, RuntimeError> {
            match v {
                None => Ok(AffectVector::zero(dim)),
                Some(c) if c.len() == dim => Ok(AffectVector::new(c)),
                Some(c) => Err(cfg(format!("{} has {} components, the affect space has {}", what, c.len(), dim))),
            }
        };
        let mood = vec_of(affect.mood, "mood")?;
        let equilibrium = vec_of(affect.equilibrium, "equilibrium")?;
        let p = prog.personality.clone().unwrap_or_default();
        let personality = Personality {
            traits: p.traits,
            rationality: p.rationality_level.unwrap_or(DEFAULT_RATIONALITY),
            coping: p.coping_strategies,
        };
        let selectable =
            prog.plans.iter().map(|pl| pl.label.is_none_or(|l| !personality.coping.contains(&l))).collect();
        let others = prog
            .others
            .iter()
            .map(|o| {
                let info = OtherAgentInfo {
                    id: o.id,
                    al: o.affective_link().unwrap_or(0.0),
                    mood: AffectVector::zero(dim),
                    concerns: o.declared_concerns().map(|(f, v)| (Atom::new(f), v)).collect(),
                    attributes: o.attributes.clone(),
                };
                (o.id, info)
            })
            .collect();
        let mut circumstance = Circumstance::default();
        for g in &prog.init_goals {
            circumstance.events.push_back(Event::external(TriggeringEvent::achieve(g.clone())));
        }
        Ok(AgentState {
            id,
            plans: Arc::new(prog.plans.clone()),
            concerns: Arc::new(prog.concerns.clone()),
            beliefs: prog.init_beliefs.iter().cloned().collect(),
            circumstance,
            mailbox: Mailbox::default(),
            transient: RationalTransient::default(),
            memory: AffectiveMemory::default(),
            affective: AffectiveTransient::new(mood),
            others,
            personality,
            omega,
            equilibrium,
            decay_rate: affect.decay_rate.unwrap_or(DEFAULT_DECAY_RATE),
            empathy: affect.empathy.unwrap_or_default(),
            selectable,
            round_robin: 0,
        })
    }

    pub fn mood(&self) -> &AffectVector {
        &self.affective.mood
    }

    pub fn affective_link(&self, other: Atom) -> Option<f64> {
        self.others.get(&other).map(|o| o.al)
    }

    pub fn dim(&self) -> usize {
        self.affective.mood.dim()
    }

    pub(crate) fn affect_err(&self, source: AffectError) -> RuntimeError {
        RuntimeError::Affect { agent: self.id.to_string(), source }
    }

    /// One tick of reasoning: the rational cycle with a full affective pass
    /// on the selected event right after event selection.
    pub fn reason(&mut self, design: &dyn AffectiveDesign, tr: &mut Tracer) -> Result<(), RuntimeError> {
        self.proc_msg(tr);
        self.aff_mod_b(tr);
        if let Some(ev) = self.select_event(tr) {
            self.affective_pass(&ev.te, design, tr)?;
        }
        self.relevant_plans(tr);
        self.applicable_plans(design, tr);
        self.select_plan(tr);
        self.add_intended_means(tr);
        self.select_intention(tr);
        self.execute_intention(tr);
        self.clear_intention(tr);
        Ok(())
    }

    /// Mood drift toward equilibrium, once per tick.
    pub fn as_decay(&mut self, tr: &mut Tracer) {
        let before = self.affective.mood.clone();
        self.affective.mood = crate::affect::decay(&before, &self.equilibrium, self.decay_rate);
        tr.affective(
            "AsDecay",
            crate::trace::object(vec![
                ("mood_before", crate::trace::vector(&before)),
                ("mood_after", crate::trace::vector(&self.affective.mood)),
                ("rate", crate::trace::num(self.decay_rate)),
            ]),
        );
    }
}
