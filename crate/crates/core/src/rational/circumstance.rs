use std::collections::VecDeque;

use crate::terms::{Atom, Substitution, Term, TriggeringEvent};

use super::step::RationalStep;

pub type IntentionId = u64;

/// A pending event and the intention waiting on it, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub te: TriggeringEvent,
    pub intention: Option<IntentionId>,
}

impl Event {
    pub fn external(te: TriggeringEvent) -> Self {
        Event { te, intention: None }
    }
}

/// One plan instance on an intention stack.
#[derive(Debug, Clone, PartialEq)]
pub struct IntendedMeans {
    pub plan: usize,
    pub trigger: TriggeringEvent,
    pub subst: Substitution,
    /// Index of the next body step.
    pub pc: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Intention {
    pub id: IntentionId,
    pub stack: Vec<IntendedMeans>,
    /// Waiting for its subgoal event to be handled.
    pub suspended: bool,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Circumstance {
    pub intentions: Vec<Intention>,
    pub events: VecDeque<Event>,
    /// Primitive actions issued, in order.
    pub actions: Vec<Term>,
    pub next_intention: IntentionId,
}

impl Circumstance {
    pub fn intention(&self, id: IntentionId) -> Option<&Intention> {
        self.intentions.iter().find(|i| i.id == id)
    }

    pub fn intention_mut(&mut self, id: IntentionId) -> Option<&mut Intention> {
        self.intentions.iter_mut().find(|i| i.id == id)
    }

    pub fn remove_intention(&mut self, id: IntentionId) -> Option<Intention> {
        let pos = self.intentions.iter().position(|i| i.id == id)?;
        Some(self.intentions.remove(pos))
    }

    pub fn fresh_intention_id(&mut self) -> IntentionId {
        self.next_intention += 1;
        self.next_intention
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Message {
    pub mid: u64,
    pub sender: Atom,
    pub receiver: Atom,
    pub ilf: Atom,
    pub content: Term,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Mailbox {
    pub inbox: VecDeque<Message>,
    pub outbox: Vec<Message>,
    /// Intentions suspended on an ask-style exchange; the fixed performative
    /// set never fills it.
    pub suspended: Vec<(u64, IntentionId)>,
    pub next_mid: u64,
}

/// Scratch state of the current rational cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalTransient {
    pub event: Option<Event>,
    pub relevant: Vec<(usize, Substitution)>,
    pub applicable: Vec<Applicable>,
    pub chosen: Option<Applicable>,
    pub intention: Option<IntentionId>,
    pub step: RationalStep,
}

impl Default for RationalTransient {
    fn default() -> Self {
        RationalTransient {
            event: None,
            relevant: Vec::new(),
            applicable: Vec::new(),
            chosen: None,
            intention: None,
            step: RationalStep::ProcMsg,
        }
    }
}

/// An applicable plan option, tagged with the sets it belongs to.
#[derive(Debug, Clone, PartialEq)]
pub struct Applicable {
    pub plan: usize,
    pub subst: Substitution,
    pub in_r: bool,
    pub in_a: bool,
    pub priority: f64,
}
