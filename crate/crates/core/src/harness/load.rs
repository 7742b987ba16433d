//! Reads a project file and everything it points to.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

use super::sim::Simulation;
use crate::affect::{CorrelationMatrix, PrototypeTable, NEUTRAL};
use crate::agent::{AgentState, RuntimeError};
use crate::design::{DefaultDesign, EmotionTable, DEFAULT_AL_WEIGHT};
use crate::parser::{
    ocean, parse_agent_with, parse_mas, parse_scenario_for, AgentDecl, AgentOptions, AgentProgram, BodyStep,
    MasProject, ParseError, Scenario,
};
use crate::terms::{Arg, Atom};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{error}")]
    Parse { path: String, error: ParseError },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    #[error(transparent)]
    Runtime(#[from] RuntimeError),
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.display().to_string(), source })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub subject: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.severity, self.subject, self.message)
    }
}

#[derive(Debug, Clone)]
pub struct LoadedAgent {
    pub decl: AgentDecl,
    pub path: PathBuf,
    pub program: AgentProgram,
}

impl LoadedAgent {
    /// Local matrix first, then the project-wide one.
    pub fn omega<'a>(&'a self, mas: &'a MasProject) -> Option<&'a CorrelationMatrix> {
        self.program.w_matrix.as_ref().or(mas.w_matrix.as_ref())
    }
}

#[derive(Debug, Clone)]
pub struct Project {
    pub path: PathBuf,
    pub mas: MasProject,
    pub agents: Vec<LoadedAgent>,
    pub design: DefaultDesign,
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

fn load_table(base: &Path, rel: Option<&str>, default: EmotionTable) -> Result<EmotionTable, LoadError> {
    let Some(rel) = rel else { return Ok(default) };
    let path = resolve(base, rel);
    EmotionTable::parse(&read(&path)?)
        .map_err(|e| LoadError::Invalid { path: path.display().to_string(), message: e.to_string() })
}

/// Loads a `.emas` file, its agent programs and any table overrides.
/// Paths are relative to the project file's directory.
pub fn load_project(path: &Path) -> Result<Project, LoadError> {
    let shown = path.display().to_string();
    let mas = parse_mas(&read(path)?).map_err(|error| LoadError::Parse { path: shown.clone(), error })?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let s = &mas.settings;

    let prototypes = match &s.prototypes {
        None => PrototypeTable::default_table(),
        Some(rel) => {
            let p = resolve(&base, rel);
            PrototypeTable::parse(&read(&p)?)
                .map_err(|e| LoadError::Invalid { path: p.display().to_string(), message: e.to_string() })?
        }
    };
    let emotions = load_table(&base, s.emotion_table.as_deref(), EmotionTable::default_emotions())?;
    let empathic = load_table(&base, s.empathic_table.as_deref(), EmotionTable::default_empathic())?;
    for (table, which) in [(&emotions, "emotion table"), (&empathic, "empathic table")] {
        let missing = table.missing_prototypes(&prototypes);
        if !missing.is_empty() {
            let names: Vec<&str> = missing.iter().map(|a| a.as_str()).collect();
            return Err(LoadError::Invalid {
                path: shown,
                message: format!("{} labels without a prototype: {}", which, names.join(", ")),
            });
        }
    }
    let design = DefaultDesign { prototypes, emotions, empathic, al_weight: s.al_weight.unwrap_or(DEFAULT_AL_WEIGHT) };

    let opts = AgentOptions {
        traits: s.traits.clone().unwrap_or_else(ocean),
        emotion_labels: Some(design.prototypes.labels().collect()),
    };
    let mut agents = Vec::new();
    for decl in &mas.agents {
        let p = resolve(&base, &decl.path);
        let program = parse_agent_with(&read(&p)?, &opts)
            .map_err(|error| LoadError::Parse { path: p.display().to_string(), error })?;
        agents.push(LoadedAgent { decl: decl.clone(), path: p, program });
    }
    Ok(Project { path: path.to_path_buf(), mas, agents, design })
}

pub fn load_scenario(path: &Path, agents: &[Atom]) -> Result<Scenario, LoadError> {
    parse_scenario_for(&read(path)?, agents)
        .map_err(|error| LoadError::Parse { path: path.display().to_string(), error })
}

/// Functors an event can carry at run time, as far as the sources show.
fn declared_event_functors(project: &Project) -> BTreeSet<Atom> {
    let mut out = BTreeSet::new();
    for a in &project.agents {
        let prog = &a.program;
        out.extend(prog.init_beliefs.iter().map(|b| b.functor));
        out.extend(prog.init_goals.iter().map(|g| g.functor));
        out.extend(prog.concerns.iter().map(|c| c.pattern.functor));
        for plan in &prog.plans {
            for step in &plan.body {
                match step {
                    BodyStep::AddBelief(t) | BodyStep::DelBelief(t) | BodyStep::Achieve(t) => {
                        out.insert(t.functor);
                    }
                    BodyStep::Send { content: Arg::Term(t), .. } => {
                        out.insert(t.functor);
                    }
                    _ => {}
                }
            }
        }
    }
    out
}

impl Project {
    pub fn agent_ids(&self) -> Vec<Atom> {
        self.agents.iter().map(|a| a.decl.id).collect()
    }

    /// Labels whose weighting factor is undefined for `agent`: every
    /// prototype label except `neutral` needs a positive ω row.
    pub fn uncovered(&self, agent: &LoadedAgent) -> Vec<Atom> {
        match agent.omega(&self.mas) {
            None => self.design.prototypes.labels().filter(|l| l.as_str() != NEUTRAL).collect(),
            Some(m) => m.uncovered(&self.design.prototypes).filter(|l| l.as_str() != NEUTRAL).collect(),
        }
    }

    /// Static checks. `scenario` adds its injected functors to the set of
    /// known events.
    pub fn diagnostics(&self, scenario: Option<&Scenario>) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let mut functors = declared_event_functors(self);
        if let Some(sc) = scenario {
            functors.extend(sc.injections.iter().map(|i| i.event.literal.functor));
        }
        let ids: BTreeSet<Atom> = self.agent_ids().into_iter().collect();
        for a in &self.agents {
            let id = a.decl.id.to_string();
            let diag = |severity, message: String| Diagnostic { severity, subject: id.clone(), message };
            if a.omega(&self.mas).is_none() {
                out.push(diag(
                    Severity::Error,
                    "no correlation matrix: declare w_matrix__ in the project or the agent".into(),
                ));
            } else {
                let un = self.uncovered(a);
                if !un.is_empty() {
                    let names: Vec<&str> = un.iter().map(|l| l.as_str()).collect();
                    out.push(diag(
                        Severity::Warning,
                        format!("rows absent from the correlation matrix: {}", names.join(", ")),
                    ));
                }
            }
            let coping = a.program.personality.as_ref().map(|p| p.coping_strategies.clone()).unwrap_or_default();
            for (i, plan) in a.program.plans.iter().enumerate() {
                if plan.label.is_some_and(|l| coping.contains(&l)) {
                    continue;
                }
                let f = plan.trigger.literal.functor;
                if !functors.contains(&f) {
                    let name = plan.label.map_or(format!("#{}", i), |l| l.to_string());
                    out.push(diag(
                        Severity::Warning,
                        format!("plan {} is unreachable: no source produces `{}` events", name, f),
                    ));
                }
            }
            for o in &a.program.others {
                match o.affective_link() {
                    Some(al) => out.push(diag(Severity::Info, format!("affective link with {} is {}", o.id, al))),
                    None => out.push(diag(Severity::Info, format!("affective link with {} defaults to 0", o.id))),
                }
                if !ids.contains(&o.id) {
                    out.push(diag(
                        Severity::Warning,
                        format!("{} is listed under others but is not part of the project", o.id),
                    ));
                }
            }
        }
        out
    }

    /// Builds the initial simulation state. Fails when some agent lacks a
    /// usable correlation matrix.
    pub fn simulation(&self, scenario: Scenario, seed: u64) -> Result<Simulation, LoadError> {
        let dim = self.design.prototypes.dim();
        let mut states = Vec::new();
        for a in &self.agents {
            let un = self.uncovered(a);
            let invalid = |message: String| LoadError::Invalid { path: a.path.display().to_string(), message };
            let Some(omega) = a.omega(&self.mas) else {
                return Err(invalid("no correlation matrix".into()));
            };
            if !un.is_empty() {
                let names: Vec<&str> = un.iter().map(|l| l.as_str()).collect();
                return Err(invalid(format!("personality weighting undefined for: {}", names.join(", "))));
            }
            states.push(AgentState::new(a.decl.id, &a.program, Arc::new(omega.clone()), dim)?);
        }
        Ok(Simulation::new(self.mas.name, states, Arc::new(self.design.clone()), scenario, seed))
    }
}
