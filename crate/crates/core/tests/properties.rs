//! Randomised properties of terms, affect arithmetic, the default design and
//! the harness.

use std::sync::Arc;

use empath_core::affect::{decay, psi, AffectVector, CorrelationMatrix, Emotion, PrototypeTable, Traits};
use empath_core::agent::AgentState;
use empath_core::design::{
    phi1, phi2, phi3, sel_emotion, AffectiveDesign, AppraisalVariables, DefaultDesign, Weighting,
};
use empath_core::harness::Simulation;
use empath_core::parser::{parse_agent, parse_term, pretty, Scenario};
use empath_core::rational::{select_applicable_plan, Applicable};
use empath_core::terms::{
    aff_rel_ev, get_iv, get_subject, get_target, unify, Annotation, Arg, Atom, Subject, Term, TriggeringEvent,
};
use proptest::prelude::*;

fn atom_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["a", "b", "lily", "slap", "f", "g"])
}

fn arg() -> impl Strategy<Value = Arg> {
    let leaf = prop_oneof![
        atom_name().prop_map(Arg::atom),
        prop::sample::select(vec!["X", "Y", "Z"]).prop_map(|v| Arg::Var(Atom::new(v))),
        (-5i32..5).prop_map(|n| Arg::Num(n as f64)),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        (atom_name(), prop::collection::vec(inner, 1..3))
            .prop_map(|(f, args)| Arg::Term(Term { functor: Atom::new(f), args, annots: vec![] }))
    })
}

fn term() -> impl Strategy<Value = Term> {
    (atom_name(), prop::collection::vec(arg(), 0..3)).prop_map(|(f, args)| Term {
        functor: Atom::new(f),
        args,
        annots: vec![],
    })
}

fn unit() -> impl Strategy<Value = f64> {
    -1.0f64..=1.0
}

fn vec3(r: f64) -> impl Strategy<Value = AffectVector> {
    prop::collection::vec(-r..=r, 3).prop_map(AffectVector::new)
}

fn labels() -> Vec<Atom> {
    PrototypeTable::default_table().labels().collect()
}

fn omega_strategy() -> impl Strategy<Value = CorrelationMatrix> {
    prop::collection::vec(0.05f64..1.0, labels().len() * 2).prop_map(|w| {
        let mut m = CorrelationMatrix::new();
        for (i, l) in labels().into_iter().enumerate() {
            m.set(l, Atom::new("extraversion"), w[2 * i]);
            m.set(l, Atom::new("neuroticism"), w[2 * i + 1]);
        }
        m
    })
}

fn traits(e: f64, n: f64) -> Traits {
    [(Atom::new("extraversion"), e), (Atom::new("neuroticism"), n)].into_iter().collect()
}

fn in_bounds(v: &AffectVector) -> bool {
    v.components().iter().all(|x| (-1.0..=1.0).contains(x))
}

fn annotated_event(annots: &[Annotation]) -> TriggeringEvent {
    TriggeringEvent::add_belief(Term::atom("slap").with_annots(annots.to_vec()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn unification_is_sound(a in term(), b in term()) {
        if let Some(s) = unify(&a, &b) {
            prop_assert_eq!(s.apply(&a).without_annots(), s.apply(&b).without_annots());
        }
    }

    #[test]
    fn unification_with_itself_succeeds(a in term()) {
        prop_assert!(unify(&a, &a).is_some());
    }

    #[test]
    fn term_display_reparses(a in term()) {
        prop_assert_eq!(parse_term(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn annotation_order_is_irrelevant(
        sbj in prop::option::of(atom_name()),
        tg in prop::option::of(atom_name()),
        iv in prop::option::of(unit()),
        rel in any::<bool>(),
        perm in Just(()).prop_perturb(|_, mut rng| rng.next_u64()),
    ) {
        let mut annots = Vec::new();
        if let Some(s) = sbj { annots.push(Annotation::new("subject", vec![Arg::atom(s)])); }
        if let Some(t) = tg { annots.push(Annotation::new("target", vec![Arg::atom(t)])); }
        if let Some(v) = iv { annots.push(Annotation::new("interaction_value", vec![Arg::Num(v)])); }
        if rel { annots.push(Annotation::flag("affective_relevant")); }
        let a = annotated_event(&annots);
        let mut shuffled = annots.clone();
        let n = shuffled.len().max(1);
        shuffled.rotate_left((perm as usize) % n);
        if perm % 2 == 1 { shuffled.reverse(); }
        let b = annotated_event(&shuffled);
        let me = Atom::new("lily");
        prop_assert_eq!(get_subject(&a, me), get_subject(&b, me));
        prop_assert_eq!(get_target(&a), get_target(&b));
        prop_assert_eq!(get_iv(&a).ok(), get_iv(&b).ok());
        prop_assert_eq!(aff_rel_ev(&a), aff_rel_ev(&b));
        let iv = get_iv(&a).unwrap();
        prop_assert!((-1.0..=1.0).contains(&iv));
    }

    #[test]
    fn subject_self_is_recognised(who in atom_name()) {
        let e = annotated_event(&[Annotation::new("subject", vec![Arg::atom(who)])]);
        let s = get_subject(&e, Atom::new("lily"));
        if who == "lily" { prop_assert_eq!(s, Subject::SelfAgent) } else { prop_assert_eq!(s, Subject::Agent(Atom::new(who))) }
    }

    #[test]
    fn clamping_is_idempotent(c in prop::collection::vec(-5.0f64..5.0, 3)) {
        let v = AffectVector::new(c);
        prop_assert!(in_bounds(&v));
        prop_assert_eq!(AffectVector::new(v.components().to_vec()), v);
    }

    #[test]
    fn decay_approaches_equilibrium(m in vec3(1.0), e in vec3(1.0), rate in 0.001f64..=1.0) {
        let d = decay(&m, &e, rate);
        prop_assert!(in_bounds(&d));
        prop_assert!(d.distance(&e) <= m.distance(&e) + 1e-15);
        prop_assert_eq!(decay(&e, &e, rate), e);
    }

    #[test]
    fn psi_is_monotone_in_traits(om in omega_strategy(), e in 0.0f64..1.0, n in 0.0f64..1.0, bump in 0.0f64..0.5) {
        for l in labels() {
            let lo = psi(&traits(e, n), &om, l).unwrap();
            let hi = psi(&traits(e + bump, n), &om, l).unwrap();
            prop_assert!(hi >= lo - 1e-12);
        }
    }

    #[test]
    fn label_of_has_highest_probability(v in vec3(1.0)) {
        let p = PrototypeTable::default_table();
        prop_assume!(v.angle().is_some());
        let l = p.label_of(&v);
        let best = p.max_probability(&v);
        prop_assert!((p.label_probability(&v, l) - best).abs() <= 1e-12, "{} {:?}", l, p.probabilities(&v));
        let total: f64 = p.probabilities(&v).iter().map(|(_, x)| x).sum();
        prop_assert!((total - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn intensity_is_homogeneous(v in vec3(1.0), k in 0.0f64..=1.0) {
        let p = PrototypeTable::default_table();
        let s = v.scale(k);
        prop_assert!((s.intensity() - k * v.intensity()).abs() <= 1e-12);
        prop_assert!(v.intensity() <= 1.0);
        if k > 0.0 && v.angle().is_some() {
            prop_assert_eq!(p.label_of(&s), p.label_of(&v));
        }
    }

    #[test]
    fn formulas_stay_in_bounds(om in omega_strategy(), e in 0.0f64..1.0, n in 0.0f64..1.0,
                               mood in vec3(1.0), x in vec3(1.0), al in unit()) {
        let t = traits(e, n);
        let p = PrototypeTable::default_table();
        let w = Weighting { traits: &t, omega: &om, prototypes: &p };
        prop_assert!(in_bounds(&phi1(w, &mood, &x).unwrap()));
        prop_assert!(in_bounds(&phi2(w, &mood, &x, al).unwrap()));
        prop_assert!(in_bounds(&phi3(w, &x, &mood).unwrap()));
    }

    #[test]
    fn selection_ignores_uniform_intensity_scaling(vs in prop::collection::vec(vec3(1.0), 1..6), k in 0.01f64..1.0) {
        let p = PrototypeTable::default_table();
        let es: Vec<Emotion> = vs.iter().map(|v| Emotion::new(p.label_of(v), v.clone())).collect();
        let scaled: Vec<Emotion> = es.iter().map(|e| e.with_vector(e.vector.scale(k))).collect();
        let a = sel_emotion(&es, &[], &p).map(|(i, _)| i);
        let b = sel_emotion(&scaled, &[], &p).map(|(i, _)| i);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn plan_choice_is_deterministic_and_scale_free(
        opts in prop::collection::vec((any::<bool>(), any::<bool>(), 0.0f64..2.0), 1..8),
        rl in 0.0f64..=1.0, k in 0.001f64..100.0,
    ) {
        let opts: Vec<Applicable> = opts.into_iter().enumerate().map(|(i, (r, a, pr))| Applicable {
            plan: i, subst: Default::default(), in_r: r || !a, in_a: a, priority: pr,
        }).collect();
        let scaled: Vec<Applicable> = opts.iter().cloned().map(|mut o| { o.priority *= k; o }).collect();
        let first = select_applicable_plan(&opts, rl);
        prop_assert!(first.is_some());
        prop_assert_eq!(first, select_applicable_plan(&opts, rl));
        prop_assert_eq!(first, select_applicable_plan(&scaled, rl));
    }

    #[test]
    fn links_stay_bounded(start in unit(), ivs in prop::collection::vec(unit(), 0..200), weight in 0.0f64..=1.0) {
        let d = DefaultDesign { al_weight: weight, ..DefaultDesign::default() };
        let mut al = start;
        for iv in ivs {
            al = d.update_al(al, iv);
            prop_assert!((-1.0..=1.0).contains(&al));
        }
    }
}

#[test]
fn emotion_table_grid_is_exact() {
    let d = DefaultDesign::default();
    let me = Atom::new("marshall");
    for dv in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        for l in [0.0, 0.5, 1.0] {
            for ca in [Subject::SelfAgent, Subject::Agent(me), Subject::Null] {
                let av = AppraisalVariables::new(dv, l, ca);
                let got: Vec<(String, f64)> =
                    d.derive_em(&av).unwrap().iter().map(|e| (e.label.to_string(), e.intensity())).collect();
                let mut want: Vec<(&str, f64)> = Vec::new();
                if dv > 0.0 && l < 1.0 {
                    want.push(("hope", dv * l));
                }
                if dv > 0.0 && l == 1.0 {
                    want.push(("joy", dv));
                }
                if dv < 0.0 && l < 1.0 {
                    want.push(("fear", -dv * l));
                }
                if dv < 0.0 && l == 1.0 {
                    want.push(("sadness", -dv));
                }
                if dv < 0.0 && ca == Subject::SelfAgent {
                    want.push(("guilt", -dv));
                }
                let p = d.prototypes();
                let got_labels: Vec<&str> = got.iter().map(|(l, _)| l.as_str()).collect();
                let want_labels: Vec<&str> = want.iter().map(|(l, _)| *l).collect();
                assert_eq!(got_labels, want_labels, "d={} l={} ca={:?}", dv, l, ca);
                for ((label, g), (_, k)) in got.iter().zip(&want) {
                    let scale = p.get(Atom::new(label)).unwrap().intensity();
                    assert!((g - k * scale).abs() < 1e-12, "{} intensity {} vs {}", label, g, k * scale);
                }
            }
        }
    }
}

fn chatter_sim(sends: &[(String, String)]) -> Simulation {
    let mut om = CorrelationMatrix::new();
    for l in labels() {
        om.set(l, Atom::new("extraversion"), 1.0);
    }
    let om = Arc::new(om);
    let ids = ["a", "b", "c"];
    let agents = ids
        .iter()
        .map(|id| {
            let body: Vec<String> = sends
                .iter()
                .filter(|(from, _)| from == id)
                .map(|(_, to)| format!(".send({}, tell, note)", to))
                .collect();
            let src = if body.is_empty() {
                "+note <- .print(\"got\").".to_string()
            } else {
                format!("!go.\n+!go <- {}.\n+note <- .print(\"got\").", body.join("; "))
            };
            let prog = parse_agent(&src).unwrap();
            assert_eq!(parse_agent(&pretty::agent(&prog)).unwrap(), prog);
            AgentState::new(Atom::new(id), &prog, om.clone(), 3).unwrap()
        })
        .collect();
    Simulation::new(Atom::new("chat"), agents, Arc::new(DefaultDesign::default()), Scenario::default(), 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn messages_are_conserved(sends in prop::collection::vec(
        (prop::sample::select(vec!["a", "b", "c"]), prop::sample::select(vec!["a", "b", "c", "zed"])), 0..10)) {
        let sends: Vec<(String, String)> = sends.into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let mut sim = chatter_sim(&sends);
        sim.run(sends.len() as u64 + 4).unwrap();
        let count = |step: &str| sim.records.iter().filter(|r| r.step == step).count();
        let unknown = sends.iter().filter(|(_, to)| to == "zed").count();
        prop_assert_eq!(count("Deliver"), sends.len() - unknown);
        prop_assert_eq!(count("Undeliverable"), unknown);
        prop_assert!(sim.in_flight().is_empty());
    }

    #[test]
    fn runs_are_reproducible(sends in prop::collection::vec(
        (prop::sample::select(vec!["a", "b", "c"]), prop::sample::select(vec!["a", "b", "c"])), 0..6)) {
        let sends: Vec<(String, String)> = sends.into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let mut x = chatter_sim(&sends);
        let mut y = chatter_sim(&sends);
        y.parallel = true;
        x.run(8).unwrap();
        y.run(8).unwrap();
        prop_assert_eq!(x.records, y.records);
    }
}
