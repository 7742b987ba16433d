#![allow(dead_code)]

use std::path::{Path, PathBuf};

use empath_core::harness::{load_project, load_scenario, Simulation};
use empath_core::trace::TraceRecord;
use serde_json::Value;

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn slap_sim() -> Simulation {
    let dir = fixtures().join("slap");
    let project = load_project(&dir.join("slap.emas")).expect("project loads");
    let sc = load_scenario(&dir.join("slap.scn"), &project.agent_ids()).expect("scenario loads");
    project.simulation(sc, 7).expect("simulation builds")
}

/// Runs the bundled scenario for its declared length.
pub fn run_slap() -> Simulation {
    let mut sim = slap_sim();
    let ticks = sim.scenario.run_length.unwrap_or(10);
    sim.run(ticks).expect("run succeeds");
    sim
}

pub fn jsonl(records: &[TraceRecord]) -> String {
    let mut buf = Vec::new();
    empath_core::trace::write_jsonl(&mut buf, records).unwrap();
    String::from_utf8(buf).unwrap()
}

pub fn affective<'a>(records: &'a [TraceRecord], tick: u64, agent: &str) -> Vec<&'a TraceRecord> {
    records
        .iter()
        .filter(|r| r.tick == tick && r.agent == agent && r.cycle.name() == "affective" && r.step != "AsDecay")
        .collect()
}

pub fn steps(records: &[&TraceRecord]) -> Vec<String> {
    records.iter().map(|r| r.step.clone()).collect()
}

pub fn record<'a>(records: &[&'a TraceRecord], step: &str) -> &'a TraceRecord {
    records.iter().find(|r| r.step == step).unwrap_or_else(|| panic!("no {} record", step))
}

pub fn f(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {}", v))
}

pub fn vec3(v: &Value) -> Vec<f64> {
    v.as_array().expect("array").iter().map(f).collect()
}
