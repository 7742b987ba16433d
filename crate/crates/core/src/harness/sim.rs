//! The multi-agent tick loop.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::agent::{AgentState, RuntimeError};
use crate::design::AffectiveDesign;
use crate::parser::{Recipient, Scenario};
use crate::rational::Message;
use crate::terms::{Annotation, Arg, Atom, EventOp, Term, TriggeringEvent, SOURCE};
use crate::trace::{num, vector, Cycle, TraceRecord, Tracer};

/// Agent column of records that concern the whole simulation.
pub const ALL_AGENTS: &str = "*";

pub const DEFAULT_TICKS: u64 = 10;

pub struct Simulation {
    pub name: Atom,
    pub tick: u64,
    pub agents: BTreeMap<Atom, AgentState>,
    pub design: Arc<dyn AffectiveDesign>,
    pub scenario: Scenario,
    pub seed: u64,
    /// Run agents of a tick on worker threads. The trace is the same.
    pub parallel: bool,
    pub records: Vec<TraceRecord>,
    /// Messages sent during the previous tick, delivered at the next one.
    in_flight: Vec<Message>,
}

fn percept(mut t: Term) -> Term {
    t.set_annotation(Annotation::new(SOURCE, vec![Arg::atom("percept")]));
    t
}

impl Simulation {
    pub fn new(
        name: Atom,
        agents: Vec<AgentState>,
        design: Arc<dyn AffectiveDesign>,
        scenario: Scenario,
        seed: u64,
    ) -> Self {
        Simulation {
            name,
            tick: 0,
            agents: agents.into_iter().map(|a| (a.id, a)).collect(),
            design,
            scenario,
            seed,
            parallel: false,
            records: Vec::new(),
            in_flight: Vec::new(),
        }
    }

    fn harness(&mut self, agent: &str, step: &str, payload: Value) {
        self.records.push(TraceRecord::new(self.tick, agent, Cycle::Harness, step, payload));
    }

    fn deliver_percepts(&mut self) {
        let due: Vec<_> = self.scenario.injections.iter().filter(|i| i.tick == self.tick).cloned().collect();
        for inj in due {
            let targets: Vec<Atom> = match inj.recipient {
                Recipient::Agent(id) => vec![id],
                Recipient::Broadcast => self.agents.keys().copied().collect(),
            };
            for id in targets {
                let lit = percept(inj.event.literal.clone());
                let te = TriggeringEvent::new(inj.event.op, inj.event.kind, lit.clone());
                let Some(agent) = self.agents.get_mut(&id) else {
                    self.harness(id.as_str(), "Percept", json!({"event": te.to_string(), "warning": "unknown agent"}));
                    continue;
                };
                match inj.event.op {
                    EventOp::Add => {
                        agent.beliefs.add(lit);
                    }
                    EventOp::Del => {
                        agent.beliefs.remove(&inj.event.literal);
                    }
                }
                agent.enqueue(te.clone(), None);
                self.harness(id.as_str(), "Percept", json!({"event": te.to_string()}));
            }
        }
    }

    fn deliver_messages(&mut self) {
        for m in std::mem::take(&mut self.in_flight) {
            let p = json!({
                "mid": m.mid,
                "from": m.sender.as_str(),
                "to": m.receiver.as_str(),
                "ilf": m.ilf.as_str(),
                "content": m.content.to_string(),
            });
            match self.agents.get_mut(&m.receiver) {
                Some(a) => {
                    a.mailbox.inbox.push_back(m.clone());
                    self.harness(m.receiver.as_str(), "Deliver", p);
                }
                None => self.harness(m.sender.as_str(), "Undeliverable", p),
            }
        }
    }

    fn reason_all(&mut self) -> Result<(), RuntimeError> {
        let tick = self.tick;
        let design = self.design.clone();
        if self.parallel && self.agents.len() > 1 {
            let results: Vec<(Vec<TraceRecord>, Result<(), RuntimeError>)> = std::thread::scope(|s| {
                let handles: Vec<_> = self
                    .agents
                    .values_mut()
                    .map(|a| {
                        let design = design.clone();
                        s.spawn(move || {
                            let mut out = Vec::new();
                            let r = a.reason(design.as_ref(), &mut Tracer::new(tick, a.id, &mut out));
                            (out, r)
                        })
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("agent worker panicked")).collect()
            });
            for (out, r) in results {
                self.records.extend(out);
                r?;
            }
        } else {
            for a in self.agents.values_mut() {
                let mut tr = Tracer::new(tick, a.id, &mut self.records);
                a.reason(design.as_ref(), &mut tr)?;
            }
        }
        Ok(())
    }

    /// Advances the simulation by one tick.
    pub fn step_tick(&mut self) -> Result<(), RuntimeError> {
        self.harness(ALL_AGENTS, "Tick", json!({}));
        self.deliver_percepts();
        self.deliver_messages();
        self.reason_all()?;
        for a in self.agents.values_mut() {
            let mut tr = Tracer::new(self.tick, a.id, &mut self.records);
            a.as_decay(&mut tr);
            self.in_flight.append(&mut a.mailbox.outbox);
        }
        self.tick += 1;
        Ok(())
    }

    /// Header, `ticks` steps, summary. On error the records so far stay
    /// available.
    pub fn run(&mut self, ticks: u64) -> Result<(), RuntimeError> {
        let header = json!({
            "mas": self.name.as_str(),
            "agents": self.agents.keys().map(|a| a.as_str()).collect::<Vec<_>>(),
            "ticks": ticks,
            "seed": self.seed,
        });
        self.harness(ALL_AGENTS, "Header", header);
        for _ in 0..ticks {
            self.step_tick()?;
        }
        let summary = self.summary();
        self.harness(ALL_AGENTS, "Summary", summary);
        Ok(())
    }

    pub fn summary(&self) -> Value {
        let protos = self.design.prototypes();
        let agents: Map<String, Value> = self
            .agents
            .values()
            .map(|a| {
                let links: Map<String, Value> = a.others.values().map(|o| (o.id.to_string(), num(o.al))).collect();
                let s = json!({
                    "mood": vector(a.mood()),
                    "mood_label": protos.label_of(a.mood()).as_str(),
                    "mood_intensity": num(a.mood().intensity()),
                    "links": links,
                    "memory": a.memory.len(),
                    "beliefs": a.beliefs.len(),
                    "intentions": a.circumstance.intentions.len(),
                });
                (a.id.to_string(), s)
            })
            .collect();
        json!({"agents": agents})
    }

    /// Clones of the messages waiting for delivery at the next tick.
    pub fn in_flight(&self) -> &[Message] {
        &self.in_flight
    }
}
