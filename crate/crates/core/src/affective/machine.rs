//! The affective pass: one run of the state machine on the selected event,
//! from EvClass back to EvClass.

use serde_json::{json, Value};

use super::classify::{classify_event, Classification, GAP_WARNING};
use super::transient::{AffectiveStep, BeliefUpdate, CopingChoice, MemoryEntry};
use crate::agent::{AgentState, OtherAgentInfo, RuntimeError};
use crate::design::{AffectiveDesign, Concerns, Weighting};
use crate::parser::{BodyStep, EmpathyPerspective};
use crate::rational::RationalStep;
use crate::terms::{get_iv, unify_events, Atom, TriggeringEvent};
use crate::trace::{emotion, emotions, num, vector, Tracer};

impl AgentState {
    fn weighting<'a>(&'a self, design: &'a dyn AffectiveDesign) -> Weighting<'a> {
        Weighting { traits: &self.personality.traits, omega: &self.omega, prototypes: design.prototypes() }
    }

    fn other_mut(&mut self, id: Atom) -> &mut OtherAgentInfo {
        let dim = self.dim();
        self.others.entry(id).or_insert_with(|| OtherAgentInfo::unknown(id, dim))
    }

    /// Applies `update_al` for `other`, registering it if unknown.
    /// Returns (before, after, registered).
    fn bump_al(&mut self, design: &dyn AffectiveDesign, other: Atom, iv: f64) -> (f64, f64, bool) {
        let registered = !self.others.contains_key(&other);
        let o = self.other_mut(other);
        let before = o.al;
        o.al = design.update_al(before, iv);
        (before, o.al, registered)
    }

    fn read_iv(te: &TriggeringEvent, warnings: &mut Vec<Value>) -> f64 {
        get_iv(te).unwrap_or_else(|e| {
            warnings.push(Value::String(format!("{}; interaction value taken as 0", e)));
            0.0
        })
    }

    pub(crate) fn affective_pass(
        &mut self,
        te: &TriggeringEvent,
        design: &dyn AffectiveDesign,
        tr: &mut Tracer,
    ) -> Result<(), RuntimeError> {
        self.affective.reset_event();
        self.affective.step = AffectiveStep::EvClass;
        let class = classify_event(te, self.id);
        let mut warnings = Vec::new();
        let mut p = json!({"event": te.to_string()});
        match class {
            Classification::EvClass1 => {
                tr.affective(class.rule(), p);
                return Ok(());
            }
            Classification::Gap => {
                p["gap"] = Value::Bool(true);
                p["warning"] = Value::String(GAP_WARNING.to_string());
                tr.affective(class.rule(), p);
                return Ok(());
            }
            Classification::EvClass2 { subject } => {
                let iv = Self::read_iv(te, &mut warnings);
                let (before, after, reg) = self.bump_al(design, subject, iv);
                p["subject"] = Value::String(subject.to_string());
                p["iv"] = num(iv);
                p["al_before"] = num(before);
                p["al_after"] = num(after);
                if reg {
                    p["registered"] = Value::Bool(true);
                }
                if !warnings.is_empty() {
                    p["warnings"] = Value::Array(warnings);
                }
                tr.affective(class.rule(), p);
                return Ok(());
            }
            Classification::EvClass3 { target } => {
                let iv = Self::read_iv(te, &mut warnings);
                let (before, after, reg) = self.bump_al(design, target, iv);
                p["target"] = Value::String(target.to_string());
                p["iv"] = num(iv);
                p["al_before"] = num(before);
                p["al_after"] = num(after);
                if reg {
                    p["registered"] = Value::Bool(true);
                }
                if !warnings.is_empty() {
                    p["warnings"] = Value::Array(warnings);
                }
                tr.affective(class.rule(), p);
                self.empathic_path(te, target, iv, design, tr)?;
            }
            Classification::EvClass4 => {
                tr.affective(class.rule(), p);
                self.self_path(te, design, tr)?;
            }
        }
        if self.select_final(te, design, tr) {
            self.adapt(design, tr)?;
            self.coping(te, design, tr);
        }
        self.affective.step = AffectiveStep::EvClass;
        Ok(())
    }

    fn appraisal_payload(&self, te: &TriggeringEvent, a: &crate::design::Appraisal) -> Value {
        let mut p = json!({
            "event": te.to_string(),
            "av": {
                "desirability": num(a.vars.desirability),
                "likelihood": num(a.vars.likelihood),
                "causal_attribution": a.vars.causal_attribution.label(),
            },
            "concern": a.concern.map(|c| Value::String(c.to_string())).unwrap_or(Value::Null),
        });
        if !a.warnings.is_empty() {
            p["warnings"] = Value::Array(a.warnings.iter().cloned().map(Value::String).collect());
        }
        p
    }

    fn self_path(
        &mut self,
        te: &TriggeringEvent,
        design: &dyn AffectiveDesign,
        tr: &mut Tracer,
    ) -> Result<(), RuntimeError> {
        self.affective.step = AffectiveStep::Appr;
        let concerns = self.concerns.clone();
        let a = design.derive_av(te, self.id, Concerns::Own(&concerns));
        let ae = design.derive_em(&a.vars).map_err(|e| self.affect_err(e))?;
        let mut p = self.appraisal_payload(te, &a);
        p["ae"] = emotions(&ae);
        tr.affective("Appr1", p);
        self.affective.av = Some(a.vars);
        self.affective.ae = ae;
        self.affective.ee.clear();

        self.affective.step = AffectiveStep::EmReg;
        let mood = self.affective.mood.clone();
        let before = self.affective.ae.clone();
        let w = self.weighting(design);
        let after: Vec<_> = before
            .iter()
            .map(|e| design.regulate(w, &mood, &e.vector).map(|v| e.with_vector(v)))
            .collect::<Result<_, _>>()
            .map_err(|e| self.affect_err(e))?;
        tr.affective("EmReg1", json!({"mood": vector(&mood), "before": emotions(&before), "after": emotions(&after)}));
        self.affective.ae = after;
        Ok(())
    }

    fn empathic_path(
        &mut self,
        te: &TriggeringEvent,
        target: Atom,
        iv: f64,
        design: &dyn AffectiveDesign,
        tr: &mut Tracer,
    ) -> Result<(), RuntimeError> {
        self.affective.step = AffectiveStep::EmphAppr;
        let own = self.concerns.clone();
        let declared = self.others.get(&target).map(|o| o.concerns.clone()).unwrap_or_default();
        let concerns = match self.empathy {
            EmpathyPerspective::SelfProjection => Concerns::Own(&own),
            EmpathyPerspective::Target => Concerns::Declared(&declared),
        };
        let a = design.derive_av(te, self.id, concerns);
        let ee = design.derive_emph_em(&a.vars).map_err(|e| self.affect_err(e))?;
        let mut p = self.appraisal_payload(te, &a);
        p["target"] = Value::String(target.to_string());
        p["perspective"] = Value::String(
            match self.empathy {
                EmpathyPerspective::SelfProjection => "self",
                EmpathyPerspective::Target => "target",
            }
            .into(),
        );
        p["ee"] = emotions(&ee);
        tr.affective("EmphAppr1", p);
        self.affective.av = Some(a.vars);
        self.affective.ee = ee;
        self.affective.ae.clear();

        self.affective.step = AffectiveStep::EmphReg;
        let mood = self.affective.mood.clone();
        let al = self.affective_link(target).unwrap_or(0.0);
        let before = self.affective.ee.clone();
        let w = self.weighting(design);
        let after: Vec<_> = before
            .iter()
            .map(|e| design.regulate_empathic(w, &mood, &e.vector, al).map(|v| e.with_vector(v)))
            .collect::<Result<_, _>>()
            .map_err(|e| self.affect_err(e))?;
        let (al_before, al_after, _) = self.bump_al(design, target, iv);
        tr.affective(
            "EmphReg1",
            json!({
                "target": target.as_str(),
                "al": num(al),
                "mood": vector(&mood),
                "before": emotions(&before),
                "after": emotions(&after),
                "al_before": num(al_before),
                "al_after": num(al_after),
                "second_al_update": true,
            }),
        );
        self.affective.ee = after;
        Ok(())
    }

    /// EmSel; returns whether a final emotion was selected.
    fn select_final(&mut self, te: &TriggeringEvent, design: &dyn AffectiveDesign, tr: &mut Tracer) -> bool {
        self.affective.step = AffectiveStep::EmSel;
        let fe = design.select(&self.affective.ae, &self.affective.ee).map(|(_, e)| e);
        if let Some(e) = &fe {
            self.memory.push(MemoryEntry { tick: tr.tick, event: te.clone(), emotion: e.clone() });
        }
        tr.affective(
            "EmSel1",
            json!({
                "candidates": emotions(&[self.affective.ae.clone(), self.affective.ee.clone()].concat()),
                "fe": fe.as_ref().map(emotion).unwrap_or(Value::Null),
                "memory_size": self.memory.len(),
            }),
        );
        let some = fe.is_some();
        self.affective.fe = fe;
        some
    }

    fn adapt(&mut self, design: &dyn AffectiveDesign, tr: &mut Tracer) -> Result<(), RuntimeError> {
        self.affective.step = AffectiveStep::AffAd;
        let fe = self.affective.fe.clone().expect("AffAd needs a final emotion");
        let before = self.affective.mood.clone();
        let w = self.weighting(design);
        let after = design.adapt(w, &fe.vector, &before).map_err(|e| self.affect_err(e))?;
        let p = json!({
            "fe": emotion(&fe),
            "mood_before": vector(&before),
            "mood_after": vector(&after),
            "mood_label": design.prototypes().label_of(&after).as_str(),
            "mood_intensity": num(after.intensity()),
        });
        self.affective.mood = after;
        tr.affective("AffAd1", p);
        Ok(())
    }

    fn coping(&mut self, te: &TriggeringEvent, design: &dyn AffectiveDesign, tr: &mut Tracer) {
        self.affective.step = AffectiveStep::SelCs;
        let plans = self.plans.clone();
        let mut chosen = Vec::new();
        for label in self.personality.coping.clone() {
            let Some(idx) = plans.iter().position(|p| p.label == Some(label)) else { continue };
            let plan = &plans[idx];
            if !self.affective_conditions_hold(plan, design) {
                continue;
            }
            let start = unify_events(&plan.trigger, te).unwrap_or_default();
            if let Some(subst) = self.beliefs.solve(&plan.context, &start) {
                chosen.push(CopingChoice { plan: idx, subst });
            }
        }
        let names: Vec<Value> = chosen.iter().map(|c| Value::String(self.plan_name(c.plan))).collect();
        tr.affective("SelCs", json!({"mood": vector(&self.affective.mood), "selected": names}));
        self.affective.cs = chosen.clone();

        self.affective.step = AffectiveStep::Cope;
        let mut done = Vec::new();
        for c in chosen {
            let plan = &plans[c.plan];
            let mut subst = c.subst.clone();
            let mut update = BeliefUpdate {
                add: Vec::new(),
                remove: Vec::new(),
                step: plan.cope_step.unwrap_or(RationalStep::ProcMsg),
            };
            let mut effects = Vec::new();
            let mut failed = None;
            for step in &plan.body {
                match step {
                    BodyStep::AddBelief(t) => update.add.push(subst.apply(t)),
                    BodyStep::DelBelief(t) => update.remove.push(subst.apply(t)),
                    other => match self.run_body_step(other, &mut subst, None) {
                        Ok(Some(e)) => effects.push(e),
                        Ok(None) => {}
                        Err(reason) => {
                            failed = Some(reason);
                            break;
                        }
                    },
                }
            }
            let mut entry = json!({
                "plan": self.plan_name(c.plan),
                "ub_add": update.add.iter().map(|t| Value::String(t.to_string())).collect::<Vec<_>>(),
                "ub_remove": update.remove.iter().map(|t| Value::String(t.to_string())).collect::<Vec<_>>(),
                "ub_step": update.step.snake(),
                "effects": effects,
            });
            if let Some(r) = failed {
                entry["failed"] = Value::String(r);
            }
            if !update.add.is_empty() || !update.remove.is_empty() {
                self.affective.ub.push(update);
            }
            done.push(entry);
        }
        tr.affective("Cope", json!({"strategies": done}));
    }
}
