//! Canonical text for parsed files. Output reparses to an equal structure.

use std::fmt::Write;

use super::ast::*;
use crate::affect::CorrelationMatrix;
use crate::terms::{Arg, Term};

fn num(n: f64) -> String {
    Arg::Num(n).to_string()
}

fn quoted(s: &str) -> String {
    Arg::Str(s.to_string()).to_string()
}

fn list<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(", ")
}

fn vector(v: &[f64]) -> String {
    format!("[{}]", list(v, |x| num(*x)))
}

pub fn matrix(m: &CorrelationMatrix) -> String {
    let by_trait = m.by_trait();
    if by_trait.is_empty() {
        return "[]".into();
    }
    let rows: Vec<String> = by_trait
        .iter()
        .map(|(t, ws)| format!("{}: [ {} ]", t, list(ws, |(e, w)| format!("{}: {}", e, num(*w)))))
        .collect();
    format!("[ {} ]", rows.join(",\n             "))
}

pub fn condition(c: &Condition) -> String {
    match c {
        Condition::Belief(t) => t.to_string(),
        Condition::Not(t) => format!("not {}", t),
        Condition::Compare(op, l, r) => format!("{} {} {}", l, op.symbol(), r),
    }
}

pub fn body_step(s: &BodyStep) -> String {
    match s {
        BodyStep::AddBelief(t) => format!("+{}", t),
        BodyStep::DelBelief(t) => format!("-{}", t),
        BodyStep::Achieve(t) => format!("!{}", t),
        BodyStep::Test(t) => format!("?{}", t),
        BodyStep::Print(args) => format!(".print({})", list(args, |a| a.to_string())),
        BodyStep::Send { receiver, ilf, content } => format!(".send({}, {}, {})", receiver, ilf, content),
        BodyStep::Action(t) => t.to_string(),
    }
}

pub fn plan(p: &PlanDef) -> String {
    let mut out = String::new();
    if let Some(l) = p.label {
        let head = Term { functor: l, args: Vec::new(), annots: p.label_annots.clone() };
        let _ = write!(out, "@{} ", head);
    }
    let _ = write!(out, "{}", p.trigger);
    if !p.context.is_empty() {
        let _ = write!(out, " : {}", p.context.iter().map(condition).collect::<Vec<_>>().join(" & "));
    }
    out.push_str(" <- ");
    if p.body.is_empty() {
        out.push_str("true");
    } else {
        out.push_str(&p.body.iter().map(body_step).collect::<Vec<_>>().join("; "));
    }
    out.push('.');
    out
}

pub fn agent(p: &AgentProgram) -> String {
    let mut out = String::new();
    for b in &p.init_beliefs {
        let _ = writeln!(out, "{}.", b);
    }
    for c in &p.concerns {
        let _ = writeln!(out, "concern__: {} : {}.", c.pattern, c.value);
    }
    if let Some(ps) = &p.personality {
        let traits = ps.traits.iter().map(|(t, v)| format!("{}: {}", t, num(*v))).collect::<Vec<_>>();
        let _ = write!(out, "personality__: {{ [ {} ]", traits.join(", "));
        if let Some(rl) = ps.rationality_level {
            let _ = write!(out, ", rat_level: {}", num(rl));
        }
        if !ps.coping_strategies.is_empty() {
            let _ = write!(out, ", coping_strats: [ {} ]", list(&ps.coping_strategies, |a| a.to_string()));
        }
        out.push_str(" }\n");
    }
    if !p.others.is_empty() {
        let rows = p
            .others
            .iter()
            .map(|o| {
                let attrs = list(&o.attributes, |(k, v)| match v {
                    AttrValue::Num(n) => format!("{}: {}", k, num(*n)),
                    AttrValue::Atom(a) => format!("{}: {}", k, a),
                });
                format!("{}: [ {} ]", o.id, attrs)
            })
            .collect::<Vec<_>>();
        let _ = writeln!(out, "others__: [ {} ]", rows.join(",\n           "));
    }
    if let Some(a) = &p.affect {
        let mut items = Vec::new();
        if let Some(m) = &a.mood {
            items.push(format!("mood: {}", vector(m)));
        }
        if let Some(e) = &a.equilibrium {
            items.push(format!("equilibrium: {}", vector(e)));
        }
        if let Some(r) = a.decay_rate {
            items.push(format!("decay_rate: {}", num(r)));
        }
        if let Some(e) = a.empathy {
            items.push(format!(
                "empathy: {}",
                match e {
                    EmpathyPerspective::SelfProjection => "self",
                    EmpathyPerspective::Target => "target",
                }
            ));
        }
        let _ = writeln!(out, "affect__: [ {} ]", items.join(", "));
    }
    if let Some(m) = &p.w_matrix {
        let _ = writeln!(out, "w_matrix__: {}", matrix(m));
    }
    for g in &p.init_goals {
        let _ = writeln!(out, "!{}.", g);
    }
    for pl in &p.plans {
        let _ = writeln!(out, "{}", plan(pl));
    }
    out
}

pub fn mas(m: &MasProject) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "MAS {} {{", m.name);
    if let Some(s) = &m.infrastructure {
        let _ = writeln!(out, "    infrastructure: {}", s);
    }
    if let Some(s) = &m.environment {
        let _ = writeln!(out, "    environment: {}", s);
    }
    if let Some(s) = &m.exec_control {
        let _ = writeln!(out, "    executionControl: {}", s);
    }
    if !m.agents.is_empty() {
        let decls = m.agents.iter().map(|a| format!("{} {};", a.id, quoted(&a.path))).collect::<Vec<_>>();
        let _ = writeln!(out, "    agents: {}", decls.join(" "));
    }
    let s = &m.settings;
    let mut items = Vec::new();
    if let Some(w) = s.al_weight {
        items.push(format!("al_weight: {}", num(w)));
    }
    if let Some(p) = &s.prototypes {
        items.push(format!("prototypes: {}", quoted(p)));
    }
    if let Some(p) = &s.emotion_table {
        items.push(format!("emotion_table: {}", quoted(p)));
    }
    if let Some(p) = &s.empathic_table {
        items.push(format!("empathic_table: {}", quoted(p)));
    }
    if let Some(ts) = &s.traits {
        items.push(format!("traits: [{}]", list(ts, |t| t.to_string())));
    }
    if !items.is_empty() {
        let _ = writeln!(out, "    settings__: [ {} ]", items.join(", "));
    }
    if let Some(w) = &m.w_matrix {
        let _ = writeln!(out, "    w_matrix__: {}", matrix(w));
    }
    out.push_str("}\n");
    out
}

pub fn scenario(s: &Scenario) -> String {
    let mut out = String::new();
    for inj in &s.injections {
        let who = match inj.recipient {
            Recipient::Agent(a) => a.to_string(),
            Recipient::Broadcast => "*".into(),
        };
        let _ = writeln!(out, "tick {} {} {}.", inj.tick, who, inj.event);
    }
    if let Some(n) = s.run_length {
        let _ = writeln!(out, "run {}.", n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_agent, parse_mas, parse_scenario};

    #[test]
    fn agent_round_trip() {
        let src = r#"
            likes(tea)[source(self)].
            concern__: exam(S, M) : S / M - (-0.5).
            personality__: { [ Extraversion: 0.9, neuroticism: 0.1 ], 0.4, [c1] }
            others__: [ Lily: [ affective_link: 0.9, mood: happy ], ted: [] ]
            affect__: [ mood: [0.1, 0.05, 0], decay_rate: 0.1, empathy: target ]
            !start.
            @c1[mood(sadness, 0.3), step(proc_msg)] +!x(_) : d > 0 & not busy(_) <- .print("a\"b", 1); !y; ?z; -q; act(1).
            +!y <- true.
        "#;
        let p = parse_agent(src).unwrap();
        let text = agent(&p);
        assert_eq!(parse_agent(&text).unwrap(), p, "{}", text);
    }

    #[test]
    fn mas_round_trip() {
        let src = "MAS m { infrastructure: Centralised\n agents: a; b \"x/b.easl\"; settings__: [al_weight: 0.25, traits: [e, n]]\n w_matrix__: [ e: [ Joy: 0.5 ], n: [ Joy: 0, Fear: 1 ] ] }";
        let m = parse_mas(src).unwrap();
        let text = mas(&m);
        assert_eq!(parse_mas(&text).unwrap(), m, "{}", text);
    }

    #[test]
    fn scenario_round_trip() {
        let s = parse_scenario(
            "tick 1 * hello[subject(Marshall),interaction_value(0.2)].\ntick 4 lily -x(\"s\", 2).\nrun 8.",
        )
        .unwrap();
        assert_eq!(parse_scenario(&scenario(&s)).unwrap(), s);
    }
}
