//! Rational-cycle steps, run in order once per tick.

use serde_json::{json, Value};

use super::circumstance::{Applicable, Event, IntendedMeans, Intention, IntentionId, Message};
use super::select::{plan_score, select_applicable_plan};
use super::step::RationalStep;
use crate::agent::AgentState;
use crate::design::AffectiveDesign;
use crate::parser::{BodyStep, PlanDef};
use crate::terms::{
    unify_events, Annotation, Arg, Atom, EventKind, EventOp, Substitution, Term, TriggeringEvent, SOURCE,
};
use crate::trace::{num, Tracer};

fn with_source(mut t: Term, source: Atom) -> Term {
    t.set_annotation(Annotation {
        functor: Atom::new(SOURCE),
        args: vec![Arg::Term(Term { functor: source, args: vec![], annots: vec![] })],
    });
    t
}

impl AgentState {
    pub fn plan_name(&self, idx: usize) -> String {
        match self.plans.get(idx).and_then(|p| p.label) {
            Some(l) => l.to_string(),
            None => format!("#{}", idx),
        }
    }

    pub(crate) fn enqueue(&mut self, te: TriggeringEvent, intention: Option<IntentionId>) {
        self.circumstance.events.push_back(Event { te, intention });
    }

    /// Applies coping belief updates scheduled for `step`.
    pub(crate) fn apply_ub(&mut self, step: RationalStep) -> Vec<String> {
        let mut applied = Vec::new();
        let (due, keep): (Vec<_>, Vec<_>) =
            std::mem::take(&mut self.affective.ub).into_iter().partition(|u| u.step == step);
        self.affective.ub = keep;
        for u in due {
            for t in u.remove {
                if let Some(old) = self.beliefs.remove(&t) {
                    applied.push(format!("-{}", old));
                    self.enqueue(TriggeringEvent::new(EventOp::Del, EventKind::Belief, old), None);
                }
            }
            for t in u.add {
                let t = if t.has_annotation(SOURCE) { t } else { with_source(t, Atom::new("self")) };
                if self.beliefs.add(t.clone()) {
                    applied.push(format!("+{}", t));
                    self.enqueue(TriggeringEvent::add_belief(t), None);
                }
            }
        }
        applied
    }

    fn ub_field(applied: Vec<String>) -> Value {
        Value::Array(applied.into_iter().map(Value::String).collect())
    }

    pub(crate) fn proc_msg(&mut self, tr: &mut Tracer) {
        self.transient.step = RationalStep::ProcMsg;
        let ub = self.apply_ub(RationalStep::ProcMsg);
        let mut handled = Vec::new();
        let mut warnings = Vec::new();
        while let Some(m) = self.mailbox.inbox.pop_front() {
            let entry = json!({"mid": m.mid, "from": m.sender.as_str(), "ilf": m.ilf.as_str(), "content": m.content.to_string()});
            match m.ilf.as_str() {
                "tell" => {
                    let b = with_source(m.content, m.sender);
                    self.beliefs.add(b.clone());
                    self.enqueue(TriggeringEvent::add_belief(b), None);
                }
                "achieve" => {
                    let g = with_source(m.content, m.sender);
                    self.enqueue(TriggeringEvent::achieve(g), None);
                }
                other => {
                    warnings.push(Value::String(format!("message {} dropped: unknown performative `{}`", m.mid, other)))
                }
            }
            handled.push(entry);
        }
        let mut p = json!({"messages": handled, "belief_updates": Self::ub_field(ub)});
        if !warnings.is_empty() {
            p["warnings"] = Value::Array(warnings);
        }
        tr.rational(RationalStep::ProcMsg.name(), p);
    }

    /// Belief modulation hook; the default keeps beliefs as they are.
    pub(crate) fn aff_mod_b(&mut self, tr: &mut Tracer) {
        self.transient.step = RationalStep::AffModB;
        let mut ub = self.apply_ub(RationalStep::AffModB);
        ub.extend(self.apply_ub(RationalStep::EvalExp));
        tr.rational(RationalStep::AffModB.name(), json!({"belief_updates": Self::ub_field(ub)}));
    }

    pub(crate) fn select_event(&mut self, tr: &mut Tracer) -> Option<Event> {
        self.transient.step = RationalStep::SelEv;
        let ub = self.apply_ub(RationalStep::SelEv);
        let ev = self.circumstance.events.pop_front();
        self.transient.event = ev.clone();
        tr.rational(
            RationalStep::SelEv.name(),
            json!({
                "event": ev.as_ref().map(|e| Value::String(e.te.to_string())).unwrap_or(Value::Null),
                "intention": ev.as_ref().and_then(|e| e.intention).map(Value::from).unwrap_or(Value::Null),
                "queued": self.circumstance.events.len(),
                "belief_updates": Self::ub_field(ub),
            }),
        );
        ev
    }

    pub(crate) fn relevant_plans(&mut self, tr: &mut Tracer) {
        self.transient.step = RationalStep::RelPl;
        let ub = self.apply_ub(RationalStep::RelPl);
        self.transient.relevant.clear();
        let Some(ev) = self.transient.event.clone() else {
            tr.rational(RationalStep::RelPl.name(), json!({"event": null, "belief_updates": Self::ub_field(ub)}));
            return;
        };
        let relevant: Vec<(usize, Substitution)> = self
            .plans
            .iter()
            .enumerate()
            .filter(|(i, _)| self.selectable[*i])
            .filter_map(|(i, p)| unify_events(&p.trigger, &ev.te).map(|s| (i, s)))
            .collect();
        let names: Vec<Value> = relevant.iter().map(|(i, _)| Value::String(self.plan_name(*i))).collect();
        self.transient.relevant = relevant;
        let mut p = json!({"event": ev.te.to_string(), "relevant": names, "belief_updates": Self::ub_field(ub)});
        if self.transient.relevant.is_empty() {
            p["discarded"] = Value::Bool(true);
            if let Some(f) = self.fail_event(&ev) {
                p["failure"] = Value::String(f);
            }
            self.transient.event = None;
        }
        tr.rational(RationalStep::RelPl.name(), p);
    }

    /// Whether the plan's mood and trait guards hold now.
    pub(crate) fn affective_conditions_hold(&self, plan: &PlanDef, design: &dyn AffectiveDesign) -> bool {
        let a = &plan.affective;
        if let Some((label, min)) = a.mood {
            let mood = &self.affective.mood;
            if design.prototypes().label_of(mood) != label || mood.intensity() < min {
                return false;
            }
        }
        a.traits.iter().all(|(t, min)| self.personality.traits.get(t).copied().unwrap_or(0.0) >= *min)
    }

    pub(crate) fn applicable_plans(&mut self, design: &dyn AffectiveDesign, tr: &mut Tracer) {
        self.transient.step = RationalStep::ApplPl;
        let ub = self.apply_ub(RationalStep::ApplPl);
        self.transient.applicable.clear();
        let Some(ev) = self.transient.event.clone() else {
            tr.rational(RationalStep::ApplPl.name(), json!({"event": null, "belief_updates": Self::ub_field(ub)}));
            return;
        };
        let mut out = Vec::new();
        for (i, s) in &self.transient.relevant {
            let plan = &self.plans[*i];
            let Some(s2) = self.beliefs.solve(&plan.context, s) else { continue };
            let (in_r, in_a) = if plan.affective.is_empty() {
                (true, false)
            } else if self.affective_conditions_hold(plan, design) {
                (false, true)
            } else {
                continue;
            };
            out.push(Applicable { plan: *i, subst: s2, in_r, in_a, priority: plan.priority });
        }
        let listed: Vec<Value> = out
            .iter()
            .map(|a| json!({"plan": self.plan_name(a.plan), "set": if a.in_r { "R" } else { "A" }}))
            .collect();
        let mut p = json!({"event": ev.te.to_string(), "applicable": listed, "belief_updates": Self::ub_field(ub)});
        if out.is_empty() {
            p["discarded"] = Value::Bool(true);
            if let Some(f) = self.fail_event(&ev) {
                p["failure"] = Value::String(f);
            }
            self.transient.event = None;
        }
        self.transient.applicable = out;
        tr.rational(RationalStep::ApplPl.name(), p);
    }

    pub(crate) fn select_plan(&mut self, tr: &mut Tracer) {
        self.transient.step = RationalStep::SelAppPl;
        let ub = self.apply_ub(RationalStep::SelAppPl);
        self.transient.chosen = None;
        if self.transient.event.is_none() {
            tr.rational(RationalStep::SelAppPl.name(), json!({"event": null, "belief_updates": Self::ub_field(ub)}));
            return;
        }
        let rl = self.personality.rationality;
        let scores: Vec<Value> = self
            .transient
            .applicable
            .iter()
            .map(|a| {
                json!({
                    "plan": self.plan_name(a.plan),
                    "set": if a.in_r { "R" } else { "A" },
                    "priority": num(a.priority),
                    "score": num(plan_score(a.priority, a.in_r, rl)),
                })
            })
            .collect();
        let chosen = select_applicable_plan(&self.transient.applicable, rl);
        self.transient.chosen = chosen.map(|i| self.transient.applicable[i].clone());
        tr.rational(
            RationalStep::SelAppPl.name(),
            json!({
                "rl": num(rl),
                "options": scores,
                "selected": self.transient.chosen.as_ref().map(|a| Value::String(self.plan_name(a.plan))).unwrap_or(Value::Null),
                "belief_updates": Self::ub_field(ub),
            }),
        );
    }

    pub(crate) fn add_intended_means(&mut self, tr: &mut Tracer) {
        self.transient.step = RationalStep::AddIm;
        let ub = self.apply_ub(RationalStep::AddIm);
        let (Some(ev), Some(ch)) = (self.transient.event.clone(), self.transient.chosen.clone()) else {
            tr.rational(RationalStep::AddIm.name(), json!({"intention": null, "belief_updates": Self::ub_field(ub)}));
            return;
        };
        let im = IntendedMeans { plan: ch.plan, trigger: ch.subst.apply_event(&ev.te), subst: ch.subst.clone(), pc: 0 };
        let target = ev.intention.filter(|id| self.circumstance.intention(*id).is_some());
        let id = match target {
            Some(id) => {
                let i = self.circumstance.intention_mut(id).expect("live intention");
                i.stack.push(im);
                i.suspended = false;
                id
            }
            None => {
                let id = self.circumstance.fresh_intention_id();
                self.circumstance.intentions.push(Intention { id, stack: vec![im], suspended: false });
                id
            }
        };
        let depth = self.circumstance.intention(id).map_or(0, |i| i.stack.len());
        tr.rational(
            RationalStep::AddIm.name(),
            json!({"intention": id, "plan": self.plan_name(ch.plan), "depth": depth, "belief_updates": Self::ub_field(ub)}),
        );
    }

    pub(crate) fn select_intention(&mut self, tr: &mut Tracer) {
        self.transient.step = RationalStep::SelInt;
        let ub = self.apply_ub(RationalStep::SelInt);
        let runnable: Vec<IntentionId> =
            self.circumstance.intentions.iter().filter(|i| !i.suspended).map(|i| i.id).collect();
        let last = self.round_robin as IntentionId;
        let pick = runnable.iter().copied().find(|id| *id > last).or_else(|| runnable.first().copied());
        if let Some(id) = pick {
            self.round_robin = id as usize;
        }
        self.transient.intention = pick;
        tr.rational(
            RationalStep::SelInt.name(),
            json!({
                "intention": pick.map(Value::from).unwrap_or(Value::Null),
                "runnable": runnable.len(),
                "belief_updates": Self::ub_field(ub),
            }),
        );
    }

    /// Drops an intention and every event waiting for it.
    fn drop_intention(&mut self, id: IntentionId) -> Option<Intention> {
        self.circumstance.events.retain(|e| e.intention != Some(id));
        self.circumstance.remove_intention(id)
    }

    /// Failure handling for an event no plan can take: the waiting intention
    /// is dropped and `-!g` is posted for the innermost failed achievement
    /// goal that has a relevant failure plan. Returns the posted event.
    fn fail_event(&mut self, ev: &Event) -> Option<String> {
        match ev.intention {
            Some(id) => self.fail_intention(id, Some(&ev.te)),
            None => self.post_goal_failure(&ev.te),
        }
    }

    /// Drops `id`, then tries `first` and each goal of the old stack, top down.
    fn fail_intention(&mut self, id: IntentionId, first: Option<&TriggeringEvent>) -> Option<String> {
        let dropped = self.drop_intention(id);
        let goals = dropped.iter().flat_map(|i| i.stack.iter().rev()).map(|im| im.subst.apply_event(&im.trigger));
        let candidates: Vec<TriggeringEvent> = first.cloned().into_iter().chain(goals).collect();
        candidates.iter().find_map(|te| self.post_goal_failure(te))
    }

    fn post_goal_failure(&mut self, te: &TriggeringEvent) -> Option<String> {
        if te.op != EventOp::Add || te.kind != EventKind::Achieve {
            return None;
        }
        let fail = TriggeringEvent::new(EventOp::Del, EventKind::Achieve, te.literal.clone());
        let handled =
            self.plans.iter().enumerate().any(|(i, p)| self.selectable[i] && unify_events(&p.trigger, &fail).is_some());
        if !handled {
            return None;
        }
        let text = fail.to_string();
        self.enqueue(fail, None);
        Some(text)
    }

    pub(crate) fn execute_intention(&mut self, tr: &mut Tracer) {
        self.transient.step = RationalStep::ExcInt;
        let ub = self.apply_ub(RationalStep::ExcInt);
        let Some(id) = self.transient.intention else {
            tr.rational(RationalStep::ExcInt.name(), json!({"intention": null, "belief_updates": Self::ub_field(ub)}));
            return;
        };
        let Some(top) = self.circumstance.intention(id).and_then(|i| i.stack.last()).cloned() else {
            tr.rational(RationalStep::ExcInt.name(), json!({"intention": id, "belief_updates": Self::ub_field(ub)}));
            return;
        };
        let plans = self.plans.clone();
        let plan = &plans[top.plan];
        let mut p = json!({"intention": id, "plan": self.plan_name(top.plan), "belief_updates": Self::ub_field(ub)});
        let Some(step) = plan.body.get(top.pc) else {
            p["done"] = Value::Bool(true);
            tr.rational(RationalStep::ExcInt.name(), p);
            return;
        };
        p["step"] = Value::String(crate::parser::pretty::body_step(step));
        let mut subst = top.subst.clone();
        let outcome = self.run_body_step(step, &mut subst, Some(id));
        match outcome {
            Ok(effect) => {
                if let Some(i) = self.circumstance.intention_mut(id) {
                    if let Some(im) = i.stack.last_mut() {
                        im.pc += 1;
                        im.subst = subst;
                    }
                }
                if let Some(e) = effect {
                    p["effect"] = e;
                }
            }
            Err(reason) => {
                p["failed"] = Value::String(reason);
                if let Some(f) = self.fail_intention(id, None) {
                    p["failure"] = Value::String(f);
                }
            }
        }
        tr.rational(RationalStep::ExcInt.name(), p);
    }

    /// Executes one body step. `intention` is the owner, or `None` for
    /// coping bodies run by the affective cycle, whose subgoals become
    /// external events.
    pub(crate) fn run_body_step(
        &mut self,
        step: &BodyStep,
        subst: &mut Substitution,
        intention: Option<IntentionId>,
    ) -> Result<Option<Value>, String> {
        match step {
            BodyStep::AddBelief(t) => {
                let t = subst.apply(t);
                let t = if t.has_annotation(SOURCE) { t } else { with_source(t, Atom::new("self")) };
                if self.beliefs.add(t.clone()) {
                    self.enqueue(TriggeringEvent::add_belief(t.clone()), None);
                }
                Ok(Some(json!({"belief_added": t.to_string()})))
            }
            BodyStep::DelBelief(t) => {
                let t = subst.apply(t);
                match self.beliefs.remove(&t) {
                    Some(old) => {
                        let text = old.to_string();
                        self.enqueue(TriggeringEvent::new(EventOp::Del, EventKind::Belief, old), None);
                        Ok(Some(json!({"belief_removed": text})))
                    }
                    None => Ok(None),
                }
            }
            BodyStep::Achieve(t) => {
                let g = subst.apply(t);
                let text = format!("+!{}", g);
                self.enqueue(TriggeringEvent::achieve(g), intention);
                if let Some(id) = intention {
                    if let Some(i) = self.circumstance.intention_mut(id) {
                        i.suspended = true;
                    }
                }
                Ok(Some(json!({"subgoal": text})))
            }
            BodyStep::Test(t) => {
                let found = self.beliefs.matches(t, subst).next();
                match found {
                    Some(s) => {
                        *subst = s;
                        Ok(None)
                    }
                    None => Err(format!("test goal ?{} has no answer", subst.apply(t))),
                }
            }
            BodyStep::Print(args) => {
                let text: String = args
                    .iter()
                    .map(|a| match subst.apply_arg(a) {
                        Arg::Str(s) => s,
                        other => other.to_string(),
                    })
                    .collect();
                Ok(Some(json!({"print": text})))
            }
            BodyStep::Send { receiver, ilf, content } => {
                let r = subst.apply_arg(receiver).as_atom().ok_or_else(|| format!("bad receiver {}", receiver))?;
                let f = subst.apply_arg(ilf).as_atom().ok_or_else(|| format!("bad performative {}", ilf))?;
                let content = match subst.apply_arg(content) {
                    Arg::Term(t) => t,
                    other => return Err(format!("bad message content {}", other)),
                };
                self.mailbox.next_mid += 1;
                let mid = self.mailbox.next_mid;
                let text = content.to_string();
                self.mailbox.outbox.push(Message { mid, sender: self.id, receiver: r, ilf: f, content });
                Ok(Some(json!({"sent": {"mid": mid, "to": r.as_str(), "ilf": f.as_str(), "content": text}})))
            }
            BodyStep::Action(t) => {
                let a = subst.apply(t);
                let text = a.to_string();
                self.circumstance.actions.push(a);
                Ok(Some(json!({"action": text})))
            }
        }
    }

    pub(crate) fn clear_intention(&mut self, tr: &mut Tracer) {
        self.transient.step = RationalStep::ClrInt;
        let ub = self.apply_ub(RationalStep::ClrInt);
        let Some(id) = self.transient.intention.take() else {
            tr.rational(RationalStep::ClrInt.name(), json!({"intention": null, "belief_updates": Self::ub_field(ub)}));
            return;
        };
        let plans = self.plans.clone();
        let mut popped = Vec::new();
        let mut finished = false;
        if let Some(i) = self.circumstance.intention_mut(id) {
            if !i.suspended {
                while let Some(top) = i.stack.last() {
                    if top.pc < plans[top.plan].body.len() {
                        break;
                    }
                    popped.push(top.plan);
                    i.stack.pop();
                }
            }
            finished = i.stack.is_empty();
        }
        if finished {
            self.circumstance.remove_intention(id);
        }
        let names: Vec<Value> = popped.iter().map(|p| Value::String(self.plan_name(*p))).collect();
        tr.rational(
            RationalStep::ClrInt.name(),
            json!({"intention": id, "popped": names, "finished": finished, "belief_updates": Self::ub_field(ub)}),
        );
    }
}
