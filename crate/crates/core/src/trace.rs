//! Trace records and their JSON Lines encoding.
//!
//! Every float is written with exactly six fractional digits so traces are
//! stable across platforms and diff cleanly.

use std::fmt::Write as _;
use std::io::{self, Write};

use serde_json::{json, Map, Value};

use crate::affect::{AffectVector, Emotion};
use crate::terms::Atom;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cycle {
    Rational,
    Affective,
    Harness,
}

impl Cycle {
    pub fn name(&self) -> &'static str {
        match self {
            Cycle::Rational => "rational",
            Cycle::Affective => "affective",
            Cycle::Harness => "harness",
        }
    }

    pub fn from_name(s: &str) -> Option<Cycle> {
        match s {
            "rational" => Some(Cycle::Rational),
            "affective" => Some(Cycle::Affective),
            "harness" => Some(Cycle::Harness),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub tick: u64,
    pub agent: String,
    pub cycle: Cycle,
    pub step: String,
    pub payload: Value,
}

impl TraceRecord {
    pub fn new(tick: u64, agent: &str, cycle: Cycle, step: &str, payload: Value) -> Self {
        TraceRecord { tick, agent: agent.to_string(), cycle, step: step.to_string(), payload }
    }

    /// One JSON line (no trailing newline) with keys in fixed order.
    pub fn to_json_line(&self) -> String {
        let mut s = String::with_capacity(128);
        s.push_str("{\"tick\":");
        let _ = write!(s, "{}", self.tick);
        s.push_str(",\"agent\":");
        write_str(&mut s, &self.agent);
        s.push_str(",\"cycle\":");
        write_str(&mut s, self.cycle.name());
        s.push_str(",\"step\":");
        write_str(&mut s, &self.step);
        s.push_str(",\"payload\":");
        write_value(&mut s, &self.payload);
        s.push('}');
        s
    }

    pub fn from_json_line(line: &str) -> Result<TraceRecord, String> {
        let v: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let obj = v.as_object().ok_or("record is not an object")?;
        let tick = obj.get("tick").and_then(Value::as_u64).ok_or("missing tick")?;
        let agent = obj.get("agent").and_then(Value::as_str).ok_or("missing agent")?.to_string();
        let cycle =
            obj.get("cycle").and_then(Value::as_str).and_then(Cycle::from_name).ok_or("missing or unknown cycle")?;
        let step = obj.get("step").and_then(Value::as_str).ok_or("missing step")?.to_string();
        let payload = obj.get("payload").cloned().unwrap_or(Value::Null);
        Ok(TraceRecord { tick, agent, cycle, step, payload })
    }
}

pub fn fmt_float(x: f64) -> String {
    let s = format!("{:.6}", x);
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn write_str(out: &mut String, s: &str) {
    out.push_str(&serde_json::to_string(s).unwrap_or_else(|_| "\"\"".into()));
}

fn write_value(out: &mut String, v: &Value) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                out.push_str(&fmt_float(n.as_f64().unwrap_or(0.0)));
            } else {
                let _ = write!(out, "{}", n);
            }
        }
        Value::String(s) => write_str(out, s),
        Value::Array(items) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(out, x);
            }
            out.push(']');
        }
        Value::Object(map) => {
            out.push('{');
            for (i, (k, x)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_str(out, k);
                out.push(':');
                write_value(out, x);
            }
            out.push('}');
        }
    }
}

pub fn write_jsonl<W: Write>(w: &mut W, records: &[TraceRecord]) -> io::Result<()> {
    for r in records {
        writeln!(w, "{}", r.to_json_line())?;
    }
    Ok(())
}

/// A float that always serializes as a float, even when integral.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}

pub fn vector(v: &AffectVector) -> Value {
    Value::Array(v.components().iter().map(|c| num(*c)).collect())
}

pub fn emotion(e: &Emotion) -> Value {
    json!({
        "label": e.label.as_str(),
        "intensity": num(e.intensity()),
        "angle": e.angle().map(num).unwrap_or(Value::Null),
        "vector": vector(&e.vector),
    })
}

pub fn emotions(es: &[Emotion]) -> Value {
    Value::Array(es.iter().map(emotion).collect())
}

/// Collects records for one agent during one tick.
pub struct Tracer<'a> {
    pub tick: u64,
    pub agent: Atom,
    out: &'a mut Vec<TraceRecord>,
}

impl<'a> Tracer<'a> {
    pub fn new(tick: u64, agent: Atom, out: &'a mut Vec<TraceRecord>) -> Self {
        Tracer { tick, agent, out }
    }

    pub fn emit(&mut self, cycle: Cycle, step: &str, payload: Value) {
        self.out.push(TraceRecord::new(self.tick, self.agent.as_str(), cycle, step, payload));
    }

    pub fn rational(&mut self, step: &str, payload: Value) {
        self.emit(Cycle::Rational, step, payload)
    }

    pub fn affective(&mut self, step: &str, payload: Value) {
        self.emit(Cycle::Affective, step, payload)
    }
}

/// Builds an object payload from key/value pairs.
pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}
