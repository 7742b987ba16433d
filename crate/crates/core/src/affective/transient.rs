use std::fmt;

use crate::affect::{AffectVector, Emotion};
use crate::design::AppraisalVariables;
use crate::rational::RationalStep;
use crate::terms::{Substitution, Term, TriggeringEvent};

/// Steps of the affective cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AffectiveStep {
    EvClass,
    Appr,
    EmphAppr,
    EmReg,
    EmphReg,
    EmSel,
    AffAd,
    SelCs,
    Cope,
}

impl AffectiveStep {
    pub const ALL: [AffectiveStep; 9] = [
        AffectiveStep::EvClass,
        AffectiveStep::Appr,
        AffectiveStep::EmphAppr,
        AffectiveStep::EmReg,
        AffectiveStep::EmphReg,
        AffectiveStep::EmSel,
        AffectiveStep::AffAd,
        AffectiveStep::SelCs,
        AffectiveStep::Cope,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AffectiveStep::EvClass => "EvClass",
            AffectiveStep::Appr => "Appr",
            AffectiveStep::EmphAppr => "EmphAppr",
            AffectiveStep::EmReg => "EmReg",
            AffectiveStep::EmphReg => "EmphReg",
            AffectiveStep::EmSel => "EmSel",
            AffectiveStep::AffAd => "AffAd",
            AffectiveStep::SelCs => "SelCs",
            AffectiveStep::Cope => "Cope",
        }
    }
}

impl fmt::Display for AffectiveStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Belief changes requested by coping, applied when the rational cycle
/// enters `step`.
#[derive(Debug, Clone, PartialEq)]
pub struct BeliefUpdate {
    pub add: Vec<Term>,
    pub remove: Vec<Term>,
    pub step: RationalStep,
}

/// A coping strategy picked at SelCs, with its context bindings.
#[derive(Debug, Clone, PartialEq)]
pub struct CopingChoice {
    pub plan: usize,
    pub subst: Substitution,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AffectiveTransient {
    pub ub: Vec<BeliefUpdate>,
    pub av: Option<AppraisalVariables>,
    pub cs: Vec<CopingChoice>,
    pub ae: Vec<Emotion>,
    pub ee: Vec<Emotion>,
    pub fe: Option<Emotion>,
    pub mood: AffectVector,
    pub step: AffectiveStep,
}

impl AffectiveTransient {
    pub fn new(mood: AffectVector) -> Self {
        AffectiveTransient {
            ub: Vec::new(),
            av: None,
            cs: Vec::new(),
            ae: Vec::new(),
            ee: Vec::new(),
            fe: None,
            mood,
            step: AffectiveStep::EvClass,
        }
    }

    /// Drops per-event scratch values before a new pass.
    pub fn reset_event(&mut self) {
        self.av = None;
        self.cs.clear();
        self.ae.clear();
        self.ee.clear();
        self.fe = None;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MemoryEntry {
    pub tick: u64,
    pub event: TriggeringEvent,
    pub emotion: Emotion,
}

/// Append-only log of events and the emotion each one produced.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AffectiveMemory {
    entries: Vec<MemoryEntry>,
}

impl AffectiveMemory {
    pub fn push(&mut self, e: MemoryEntry) {
        self.entries.push(e);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[MemoryEntry] {
        &self.entries
    }
}
