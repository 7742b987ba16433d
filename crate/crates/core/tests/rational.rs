//! Behaviour of the plain reasoning cycle on small programs with no affect.

use std::sync::Arc;

use empath_core::affect::{CorrelationMatrix, PrototypeTable};
use empath_core::agent::AgentState;
use empath_core::design::DefaultDesign;
use empath_core::harness::Simulation;
use empath_core::parser::{parse_agent, parse_scenario};
use empath_core::terms::Atom;
use empath_core::trace::TraceRecord;

fn omega() -> Arc<CorrelationMatrix> {
    let mut m = CorrelationMatrix::new();
    for l in PrototypeTable::default_table().labels() {
        m.set(l, Atom::new("extraversion"), 1.0);
    }
    Arc::new(m)
}

fn sim(agents: &[(&str, &str)], scenario: &str) -> Simulation {
    let om = omega();
    let states = agents
        .iter()
        .map(|(id, src)| {
            let prog = parse_agent(src).unwrap_or_else(|e| panic!("{}: {}", id, e));
            AgentState::new(Atom::new(id), &prog, om.clone(), 3).unwrap()
        })
        .collect();
    let sc = parse_scenario(scenario).unwrap();
    Simulation::new(Atom::new("t"), states, Arc::new(DefaultDesign::default()), sc, 1)
}

fn run(agents: &[(&str, &str)], scenario: &str, ticks: u64) -> Simulation {
    let mut s = sim(agents, scenario);
    s.run(ticks).unwrap();
    s
}

fn prints<'a>(records: &'a [TraceRecord], agent: &str) -> Vec<(u64, &'a str)> {
    records
        .iter()
        .filter(|r| r.agent == agent && r.step == "ExcInt")
        .filter_map(|r| r.payload["effect"]["print"].as_str().map(|s| (r.tick, s)))
        .collect()
}

fn texts<'a>(records: &'a [TraceRecord], agent: &str) -> Vec<&'a str> {
    prints(records, agent).into_iter().map(|(_, s)| s).collect()
}

#[test]
fn subgoal_runs_before_the_rest_of_the_body() {
    let s = run(&[("a", "!start.\n+!start <- !sub; .print(\"after\").\n+!sub <- .print(\"in sub\").")], "", 8);
    assert_eq!(texts(&s.records, "a"), ["in sub", "after"]);
    let ids: Vec<_> = s
        .records
        .iter()
        .filter(|r| r.step == "ExcInt" && !r.payload["intention"].is_null())
        .map(|r| r.payload["intention"].clone())
        .collect();
    assert!(ids.windows(2).all(|w| w[0] == w[1]), "subgoal stayed on one intention: {:?}", ids);
}

#[test]
fn failed_subgoal_posts_failure_event() {
    let src = "!g.\n+!g <- !missing; .print(\"unreachable\").\n-!g <- .print(\"recovered\").";
    let s = run(&[("a", src)], "", 8);
    assert_eq!(texts(&s.records, "a"), ["recovered"]);
    assert!(s.agents[&Atom::new("a")].circumstance.intentions.is_empty());
}

#[test]
fn failure_without_handler_drops_intention() {
    let s = run(&[("a", "!g.\n+!g <- !missing.")], "", 6);
    assert!(texts(&s.records, "a").is_empty());
    let a = &s.agents[&Atom::new("a")];
    assert!(a.circumstance.intentions.is_empty());
    assert!(a.circumstance.events.is_empty());
}

#[test]
fn intentions_interleave_round_robin() {
    let src = "!x.\n!y.\n+!x <- .print(\"x1\"); .print(\"x2\"); .print(\"x3\").\n\
               +!y <- .print(\"y1\"); .print(\"y2\"); .print(\"y3\").";
    let s = run(&[("a", src)], "", 12);
    let t = texts(&s.records, "a");
    assert_eq!(t.len(), 6);
    let pos = |x: &str| t.iter().position(|s| *s == x).unwrap();
    assert!(pos("y1") < pos("x3"), "no interleaving: {:?}", t);
    assert!(pos("x1") < pos("x2") && pos("x2") < pos("x3"));
    assert!(pos("y1") < pos("y2") && pos("y2") < pos("y3"));
}

#[test]
fn messages_arrive_next_tick() {
    let a = "!go.\n+!go <- .send(b, tell, ping).";
    let b = "+ping[source(S)] <- .print(\"ping from \", S).";
    let s = run(&[("a", a), ("b", b)], "", 6);
    let sent = s
        .records
        .iter()
        .find(|r| r.agent == "a" && r.step == "ExcInt" && !r.payload["effect"].is_null())
        .expect("send executed");
    let deliver = s.records.iter().find(|r| r.step == "Deliver").expect("delivered");
    assert_eq!(deliver.agent, "b");
    assert_eq!(deliver.tick, sent.tick + 1);
    let got = prints(&s.records, "b");
    assert_eq!(got, [(deliver.tick, "ping from a")]);
}

#[test]
fn achieve_message_posts_goal() {
    let a = "!go.\n+!go <- .send(b, achieve, wave).";
    let b = "+!wave[source(S)] <- .print(\"waving at \", S).";
    let s = run(&[("a", a), ("b", b)], "", 6);
    assert_eq!(texts(&s.records, "b"), ["waving at a"]);
}

#[test]
fn unknown_recipient_is_reported() {
    let s = run(&[("a", "!go.\n+!go <- .send(nobody, tell, hi).")], "", 4);
    let u = s.records.iter().find(|r| r.step == "Undeliverable").expect("undeliverable record");
    assert_eq!(u.agent, "a");
}

#[test]
fn context_selects_plan() {
    let src = "ready.\n!g.\n+!g : not ready <- .print(\"wait\").\n+!g : ready <- .print(\"go\").";
    let s = run(&[("a", src)], "", 5);
    assert_eq!(texts(&s.records, "a"), ["go"]);
}

#[test]
fn belief_update_triggers_plan() {
    let src = "!g.\n+!g <- +seen(slap).\n+seen(X) <- .print(\"saw \", X).";
    let s = run(&[("a", src)], "", 6);
    assert_eq!(texts(&s.records, "a"), ["saw slap"]);
}

#[test]
fn percept_reaches_only_recipient() {
    let prog = "+rain <- .print(\"wet\").";
    let s = run(&[("a", prog), ("b", prog)], "tick 1 b +rain.", 4);
    assert!(texts(&s.records, "a").is_empty());
    assert_eq!(prints(&s.records, "b"), [(1, "wet")]);
}

#[test]
fn every_rational_step_is_traced_each_tick() {
    let s = run(&[("a", "!g.\n+!g <- .print(\"hi\").")], "", 3);
    let names = ["ProcMsg", "AffModB", "SelEv", "RelPl", "ApplPl", "SelAppPl", "AddIM", "SelInt", "ExcInt", "ClrInt"];
    for tick in 0..3 {
        let got: Vec<_> = s
            .records
            .iter()
            .filter(|r| r.tick == tick && r.agent == "a" && r.cycle.name() == "rational")
            .map(|r| r.step.as_str())
            .collect();
        assert_eq!(got, names, "tick {}", tick);
    }
}
