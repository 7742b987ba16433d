//! Agent programs (`.easl`).

use super::ast::*;
use super::config::{self, check_term, optional_dot};
use super::cursor::Cursor;
use super::error::{PResult, ParseError, ParseErrorKind};
use super::lexer::{Tok, Token};
use crate::rational::RationalStep;
use crate::terms::{Annotation, Arg, Atom, EventKind, EventOp, Term, TriggeringEvent};

/// Label sets the parser validates against.
#[derive(Debug, Clone)]
pub struct AgentOptions {
    pub traits: Vec<Atom>,
    /// `None` skips emotion-label checks in a local matrix.
    pub emotion_labels: Option<Vec<Atom>>,
}

impl Default for AgentOptions {
    fn default() -> Self {
        AgentOptions { traits: config::ocean(), emotion_labels: Some(config::default_emotion_labels()) }
    }
}

pub fn parse_agent(src: &str) -> PResult<AgentProgram> {
    parse_agent_with(src, &AgentOptions::default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Beliefs,
    Concerns,
    Personality,
    Others,
    Affect,
    Matrix,
    Goals,
    Plans,
}

impl Section {
    fn name(self) -> &'static str {
        match self {
            Section::Beliefs => "initial beliefs",
            Section::Concerns => "concern__",
            Section::Personality => "personality__",
            Section::Others => "others__",
            Section::Affect => "affect__",
            Section::Matrix => "w_matrix__",
            Section::Goals => "initial goals",
            Section::Plans => "plans",
        }
    }

    fn single(self) -> bool {
        matches!(self, Section::Personality | Section::Others | Section::Affect | Section::Matrix)
    }
}

pub fn parse_agent_with(src: &str, opts: &AgentOptions) -> PResult<AgentProgram> {
    let mut c = Cursor::new(src);
    let mut prog = AgentProgram::default();
    let mut current = Section::Beliefs;
    let mut seen: Vec<Section> = Vec::new();
    let mut coping_tok: Option<Token> = None;

    while !c.at_eof() {
        let tok = c.token().clone();
        let section = match (c.peek(), c.peek_at(1)) {
            (Tok::Ident(k), Tok::Colon) if k == "concern__" => Section::Concerns,
            (Tok::Ident(k), Tok::Colon) if k == "personality__" => Section::Personality,
            (Tok::Ident(k), Tok::Colon) if k == "others__" => Section::Others,
            (Tok::Ident(k), Tok::Colon) if k == "affect__" => Section::Affect,
            (Tok::Ident(k), Tok::Colon) if k == "w_matrix__" => Section::Matrix,
            (Tok::Ident(_), _) => Section::Beliefs,
            (Tok::Bang, _) => Section::Goals,
            (Tok::At | Tok::Plus | Tok::Minus, _) => Section::Plans,
            _ => return Err(c.unexpected("belief, goal, plan or section keyword")),
        };
        if section < current {
            return Err(c.error_at(
                &tok,
                ParseErrorKind::Order,
                format!("{} must come before {}", section.name(), current.name()),
            ));
        }
        if section.single() && seen.contains(&section) {
            return Err(c.error_at(&tok, ParseErrorKind::Duplicate, format!("{} given twice", section.name())));
        }
        seen.push(section);
        current = section;

        match section {
            Section::Beliefs => {
                let t = c.term()?;
                check_term(&c, &tok, &t)?;
                if !t.is_ground() {
                    return Err(c.error_at(&tok, ParseErrorKind::Syntax, "initial beliefs must be ground"));
                }
                c.expect(Tok::Dot, "`.`")?;
                prog.init_beliefs.push(t);
            }
            Section::Concerns => {
                c.bump();
                c.bump();
                let pattern = c.term()?;
                c.expect(Tok::Colon, "`:`")?;
                let value = c.expr()?;
                c.expect(Tok::Dot, "`.`")?;
                prog.concerns.push(ConcernDef { pattern, value });
            }
            Section::Personality => {
                c.bump();
                c.bump();
                coping_tok = Some(c.token().clone());
                prog.personality = Some(personality(&mut c, opts)?);
                optional_dot(&mut c);
            }
            Section::Others => {
                c.bump();
                c.bump();
                prog.others = others(&mut c)?;
                optional_dot(&mut c);
            }
            Section::Affect => {
                c.bump();
                c.bump();
                prog.affect = Some(affect(&mut c)?);
                optional_dot(&mut c);
            }
            Section::Matrix => {
                c.bump();
                c.bump();
                let (m, entries) = config::w_matrix(&mut c)?;
                config::check_matrix_labels(&entries, opts.emotion_labels.as_deref(), &opts.traits)?;
                prog.w_matrix = Some(m);
                optional_dot(&mut c);
            }
            Section::Goals => {
                c.bump();
                let t = c.term()?;
                check_term(&c, &tok, &t)?;
                c.expect(Tok::Dot, "`.`")?;
                prog.init_goals.push(t);
            }
            Section::Plans => {
                let p = plan(&mut c)?;
                if let Some(l) = p.label {
                    if prog.plans.iter().any(|q| q.label == Some(l)) {
                        return Err(c.error_at(
                            &tok,
                            ParseErrorKind::Duplicate,
                            format!("plan label @{} given twice", l),
                        ));
                    }
                }
                prog.plans.push(p);
            }
        }
    }

    if let (Some(p), Some(tok)) = (&prog.personality, &coping_tok) {
        for cs in &p.coping_strategies {
            if prog.plan_by_label(*cs).is_none() {
                return Err(c.error_at(
                    tok,
                    ParseErrorKind::Unknown,
                    format!("coping strategy `{}` names no plan", cs),
                ));
            }
        }
    }
    Ok(prog)
}

fn personality(c: &mut Cursor, opts: &AgentOptions) -> PResult<PersonalityDef> {
    let mut p = PersonalityDef::default();
    c.expect(Tok::LBrace, "`{`")?;
    c.expect(Tok::LBracket, "`[`")?;
    if !c.eat(&Tok::RBracket) {
        loop {
            let tok = c.token().clone();
            let t = c.label("trait label")?;
            if !opts.traits.contains(&t) {
                return Err(c.error_at(&tok, ParseErrorKind::Unknown, format!("unknown trait `{}`", t)));
            }
            c.expect(Tok::Colon, "`:`")?;
            let v = c.number_in(t.as_str(), 0.0, 1.0)?;
            if p.traits.insert(t, v).is_some() {
                return Err(c.error_at(&tok, ParseErrorKind::Duplicate, format!("trait `{}` given twice", t)));
            }
            if !c.eat(&Tok::Comma) {
                break;
            }
        }
        c.expect(Tok::RBracket, "`]`")?;
    }
    let mut have_rl = false;
    let mut have_cs = false;
    while c.eat(&Tok::Comma) {
        let tok = c.token().clone();
        let keyed = match (c.peek(), c.peek_at(1)) {
            (Tok::Ident(k), Tok::Colon) => Some(k.clone()),
            _ => None,
        };
        let is_rl = match keyed.as_deref() {
            Some("rat_level") => true,
            Some("coping_strats") => false,
            Some(other) => {
                return Err(c.error(ParseErrorKind::Syntax, format!("unknown personality attribute `{}`", other)))
            }
            None => !matches!(c.peek(), Tok::LBracket),
        };
        if keyed.is_some() {
            c.bump();
            c.bump();
        }
        if is_rl {
            if have_rl || have_cs {
                return Err(c.error_at(
                    &tok,
                    ParseErrorKind::Syntax,
                    "rationality level must precede coping strategies and appear once",
                ));
            }
            have_rl = true;
            p.rationality_level = Some(c.number_in("rationality level", 0.0, 1.0)?);
        } else {
            if have_cs {
                return Err(c.error_at(&tok, ParseErrorKind::Duplicate, "coping strategies given twice"));
            }
            have_cs = true;
            c.expect(Tok::LBracket, "`[`")?;
            if !c.eat(&Tok::RBracket) {
                loop {
                    let l = Atom::new(&c.ident("plan label")?);
                    if !p.coping_strategies.contains(&l) {
                        p.coping_strategies.push(l);
                    }
                    if !c.eat(&Tok::Comma) {
                        break;
                    }
                }
                c.expect(Tok::RBracket, "`]`")?;
            }
        }
    }
    c.expect(Tok::RBrace, "`}`")?;
    Ok(p)
}

fn others(c: &mut Cursor) -> PResult<Vec<OtherAgentDef>> {
    let mut out: Vec<OtherAgentDef> = Vec::new();
    c.expect(Tok::LBracket, "`[`")?;
    if c.eat(&Tok::RBracket) {
        return Ok(out);
    }
    loop {
        let tok = c.token().clone();
        let id = c.label("agent id")?;
        if out.iter().any(|o| o.id == id) {
            return Err(c.error_at(&tok, ParseErrorKind::Duplicate, format!("agent `{}` listed twice", id)));
        }
        c.expect(Tok::Colon, "`:`")?;
        c.expect(Tok::LBracket, "`[`")?;
        let mut attributes: Vec<(Atom, AttrValue)> = Vec::new();
        if !c.eat(&Tok::RBracket) {
            loop {
                let atok = c.token().clone();
                let label = c.label("attribute label")?;
                if attributes.iter().any(|(k, _)| *k == label) {
                    return Err(c.error_at(
                        &atok,
                        ParseErrorKind::Duplicate,
                        format!("attribute `{}` given twice", label),
                    ));
                }
                c.expect(Tok::Colon, "`:`")?;
                let value = match c.peek() {
                    Tok::Num(_) | Tok::Minus => {
                        if label.as_str() == "affective_link" {
                            AttrValue::Num(c.number_in("affective_link", -1.0, 1.0)?)
                        } else {
                            AttrValue::Num(c.number("number")?)
                        }
                    }
                    _ => {
                        let vtok = c.token().clone();
                        let a = c.label("number or atom")?;
                        if label.as_str() == "affective_link" {
                            return Err(c.error_at(&vtok, ParseErrorKind::Syntax, "affective_link must be a number"));
                        }
                        AttrValue::Atom(a)
                    }
                };
                attributes.push((label, value));
                if !c.eat(&Tok::Comma) {
                    break;
                }
            }
            c.expect(Tok::RBracket, "`]`")?;
        }
        out.push(OtherAgentDef { id, attributes });
        if !c.eat(&Tok::Comma) {
            break;
        }
    }
    c.expect(Tok::RBracket, "`]`")?;
    Ok(out)
}

fn affect(c: &mut Cursor) -> PResult<AffectSettings> {
    let mut a = AffectSettings::default();
    c.expect(Tok::LBracket, "`[`")?;
    if c.eat(&Tok::RBracket) {
        return Ok(a);
    }
    loop {
        let tok = c.token().clone();
        let key = c.ident("affect setting")?;
        c.expect(Tok::Colon, "`:`")?;
        let dup = match key.as_str() {
            "mood" => a.mood.replace(config::vector(c, "mood component")?).is_some(),
            "equilibrium" => a.equilibrium.replace(config::vector(c, "equilibrium component")?).is_some(),
            "decay_rate" => a.decay_rate.replace(c.number_in("decay_rate", 0.0, 1.0)?).is_some(),
            "empathy" => {
                let vtok = c.token().clone();
                let v = match c.ident("`self` or `target`")?.as_str() {
                    "self" => EmpathyPerspective::SelfProjection,
                    "target" => EmpathyPerspective::Target,
                    other => {
                        return Err(c.error_at(
                            &vtok,
                            ParseErrorKind::Syntax,
                            format!("expected `self` or `target`, found `{}`", other),
                        ))
                    }
                };
                a.empathy.replace(v).is_some()
            }
            other => {
                return Err(c.error_at(&tok, ParseErrorKind::Syntax, format!("unknown affect setting `{}`", other)))
            }
        };
        if dup {
            return Err(c.error_at(&tok, ParseErrorKind::Duplicate, format!("`{}` given twice", key)));
        }
        if !c.eat(&Tok::Comma) {
            break;
        }
    }
    c.expect(Tok::RBracket, "`]`")?;
    if let (Some(m), Some(e)) = (&a.mood, &a.equilibrium) {
        if m.len() != e.len() {
            return Err(c.error(ParseErrorKind::Syntax, "mood and equilibrium differ in length"));
        }
    }
    Ok(a)
}

fn plan(c: &mut Cursor) -> PResult<PlanDef> {
    let mut label = None;
    let mut label_annots = Vec::new();
    let mut priority = DEFAULT_PRIORITY;
    let mut affective = AffectiveConditions::default();
    let mut cope_step = None;
    if c.eat(&Tok::At) {
        let lt = c.term()?;
        if !lt.args.is_empty() {
            return Err(c.error(ParseErrorKind::Syntax, "plan labels take no arguments"));
        }
        label = Some(lt.functor);
        let ltok = c.token().clone();
        for an in &lt.annots {
            label_annotation(&ltok, an, &mut priority, &mut affective, &mut cope_step)?;
        }
        label_annots = lt.annots;
    }
    let ttok = c.token().clone();
    let trigger = trigger(c)?;
    check_term(c, &ttok, &trigger.literal)?;
    let mut context = Vec::new();
    if c.eat(&Tok::Colon) {
        context = conditions(c)?;
    }
    c.expect(Tok::Arrow, "`<-`")?;
    let body = body(c)?;
    c.expect(Tok::Dot, "`.` or `;`")?;
    Ok(PlanDef { label, label_annots, trigger, context, body, priority, affective, cope_step })
}

fn label_annotation(
    tok: &Token,
    an: &Annotation,
    priority: &mut f64,
    affective: &mut AffectiveConditions,
    cope_step: &mut Option<RationalStep>,
) -> PResult<()> {
    let bad = |msg: String| ParseError::new(ParseErrorKind::Syntax, tok.line, tok.col, msg);
    let range = |msg: String| ParseError::new(ParseErrorKind::Range, tok.line, tok.col, msg);
    match (an.functor.as_str(), an.args.as_slice()) {
        ("priority", [Arg::Num(n)]) => {
            if *n < 0.0 {
                return Err(range(format!("priority {} is negative", n)));
            }
            *priority = *n;
        }
        ("priority", _) => return Err(bad("priority expects one number".into())),
        ("mood", [l]) | ("mood", [l, _]) => {
            let label = l.as_atom().ok_or_else(|| bad("mood expects an emotion label".into()))?;
            let min = match an.args.get(1) {
                None => 0.0,
                Some(Arg::Num(n)) if (0.0..=1.0).contains(n) => *n,
                Some(Arg::Num(n)) => return Err(range(format!("mood intensity {} outside [0, 1]", n))),
                Some(_) => return Err(bad("mood intensity must be a number".into())),
            };
            if affective.mood.replace((label, min)).is_some() {
                return Err(ParseError::new(
                    ParseErrorKind::Duplicate,
                    tok.line,
                    tok.col,
                    "mood condition given twice",
                ));
            }
        }
        ("mood", _) => return Err(bad("mood expects (label) or (label, intensity)".into())),
        ("trait", [t, Arg::Num(n)]) => {
            let t = t.as_atom().ok_or_else(|| bad("trait expects a trait label".into()))?;
            if !(0.0..=1.0).contains(n) {
                return Err(range(format!("trait threshold {} outside [0, 1]", n)));
            }
            affective.traits.push((t, *n));
        }
        ("trait", _) => return Err(bad("trait expects (label, threshold)".into())),
        ("step", [s]) => {
            let name = s.as_atom().map(|a| a.as_str()).unwrap_or("");
            let st = RationalStep::from_snake(name).ok_or_else(|| bad(format!("unknown rational step `{}`", s)))?;
            *cope_step = Some(st);
        }
        ("step", _) => return Err(bad("step expects one step name".into())),
        _ => {}
    }
    Ok(())
}

fn trigger(c: &mut Cursor) -> PResult<TriggeringEvent> {
    let op = match c.bump() {
        Tok::Plus => EventOp::Add,
        Tok::Minus => EventOp::Del,
        _ => return Err(c.unexpected("`+` or `-`")),
    };
    let kind = if c.eat(&Tok::Bang) {
        EventKind::Achieve
    } else if c.eat(&Tok::Question) {
        EventKind::Test
    } else {
        EventKind::Belief
    };
    Ok(TriggeringEvent::new(op, kind, c.term()?))
}

fn conditions(c: &mut Cursor) -> PResult<Vec<Condition>> {
    let mut out = Vec::new();
    if c.eat_ident("true") {
        return Ok(out);
    }
    loop {
        out.push(condition(c)?);
        if !c.eat(&Tok::Amp) {
            break;
        }
    }
    Ok(out)
}

fn condition(c: &mut Cursor) -> PResult<Condition> {
    let tok = c.token().clone();
    if matches!(c.peek(), Tok::Ident(k) if k == "not") && matches!(c.peek_at(1), Tok::Ident(_)) {
        c.bump();
        let t = c.term()?;
        check_term(c, &tok, &t)?;
        return Ok(Condition::Not(t));
    }
    if matches!(c.peek(), Tok::Ident(_)) {
        let mark = c.mark();
        if let Ok(t) = c.term() {
            if !matches!(
                c.peek(),
                Tok::Lt
                    | Tok::Le
                    | Tok::Gt
                    | Tok::Ge
                    | Tok::EqEq
                    | Tok::NotEq
                    | Tok::Plus
                    | Tok::Minus
                    | Tok::Star
                    | Tok::Slash
            ) {
                check_term(c, &tok, &t)?;
                return Ok(Condition::Belief(t));
            }
        }
        c.restore(mark);
    }
    let lhs = c.expr()?;
    let op = c.cmp_op().ok_or_else(|| c.unexpected("comparison operator"))?;
    let rhs = c.expr()?;
    Ok(Condition::Compare(op, lhs, rhs))
}

fn body(c: &mut Cursor) -> PResult<Vec<BodyStep>> {
    if c.eat_ident("true") {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    loop {
        out.push(body_step(c)?);
        if !c.eat(&Tok::Semi) {
            break;
        }
    }
    Ok(out)
}

fn body_step(c: &mut Cursor) -> PResult<BodyStep> {
    let tok = c.token().clone();
    let literal = |c: &mut Cursor| -> PResult<Term> {
        let t = c.term()?;
        check_term(c, &tok, &t)?;
        Ok(t)
    };
    match c.peek().clone() {
        Tok::Plus => {
            c.bump();
            Ok(BodyStep::AddBelief(literal(c)?))
        }
        Tok::Minus => {
            c.bump();
            Ok(BodyStep::DelBelief(literal(c)?))
        }
        Tok::Bang => {
            c.bump();
            Ok(BodyStep::Achieve(literal(c)?))
        }
        Tok::Question => {
            c.bump();
            Ok(BodyStep::Test(literal(c)?))
        }
        Tok::Internal(name) => {
            c.bump();
            let mut args = Vec::new();
            if c.eat(&Tok::LParen) {
                c.enter()?;
                if !matches!(c.peek(), Tok::RParen) {
                    loop {
                        args.push(c.arg()?);
                        if !c.eat(&Tok::Comma) {
                            break;
                        }
                    }
                }
                c.expect(Tok::RParen, "`)`")?;
                c.leave();
            }
            match name.as_str() {
                "print" => Ok(BodyStep::Print(args)),
                "send" => {
                    if args.len() != 3 {
                        return Err(c.error_at(
                            &tok,
                            ParseErrorKind::Syntax,
                            ".send expects (receiver, performative, content)",
                        ));
                    }
                    if let Arg::Term(t) = &args[2] {
                        check_term(c, &tok, t)?;
                    }
                    let mut it = args.into_iter();
                    let (receiver, ilf, content) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
                    Ok(BodyStep::Send { receiver, ilf, content })
                }
                other => {
                    Err(c.error_at(&tok, ParseErrorKind::Unknown, format!("unsupported internal action `.{}`", other)))
                }
            }
        }
        Tok::Ident(_) => Ok(BodyStep::Action(literal(c)?)),
        _ => Err(c.unexpected("plan body step")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file() {
        assert_eq!(parse_agent("").unwrap(), AgentProgram::default());
        assert_eq!(parse_agent("  // nothing\n").unwrap(), AgentProgram::default());
    }

    #[test]
    fn others_sample() {
        let p = parse_agent("others__: [ Lily: [ affective_link: 0.9 ],\n        Barney: [ affective_link: -0.5 ] ]")
            .unwrap();
        assert_eq!(p.others.len(), 2);
        assert_eq!(p.others[0].id.as_str(), "lily");
        assert_eq!(p.others[0].affective_link(), Some(0.9));
        assert_eq!(p.others[1].id.as_str(), "barney");
        assert_eq!(p.others[1].affective_link(), Some(-0.5));
    }

    #[test]
    fn personality_sample() {
        let p = parse_agent("personality__:  { [ extraversion: 0.9,\n    neuroticism: 0.1 ] }").unwrap();
        let ps = p.personality.unwrap();
        assert_eq!(ps.traits[&Atom::new("extraversion")], 0.9);
        assert_eq!(ps.traits[&Atom::new("neuroticism")], 0.1);
        assert_eq!(ps.rationality_level, None);
    }

    #[test]
    fn personality_positional_and_keyed() {
        let src = "personality__: { [openness: 0.2], 0.7, [cope] }.\n@cope +!x <- true.";
        let ps = parse_agent(src).unwrap().personality.unwrap();
        assert_eq!(ps.rationality_level, Some(0.7));
        assert_eq!(ps.coping_strategies, vec![Atom::new("cope")]);
        let src = "personality__: { [openness: 0.2], rat_level: 0.3, coping_strats: [cope] }\n@cope +!x <- true.";
        assert_eq!(parse_agent(src).unwrap().personality.unwrap().rationality_level, Some(0.3));
    }

    #[test]
    fn range_errors() {
        let e = parse_agent("personality__: { [ extraversion: 1.3 ] }").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Range);
        let e = parse_agent("others__: [ lily: [ affective_link: 1.5 ] ]").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Range);
        assert_eq!((e.line, e.col), (1, 37));
        let e = parse_agent("time(cloudy)[interaction_value(2)].").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Range);
    }

    #[test]
    fn unknown_trait() {
        let e = parse_agent("personality__: { [ charm: 0.3 ] }").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Unknown);
    }

    #[test]
    fn section_rules() {
        let e = parse_agent("others__: []\nothers__: []").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Duplicate);
        let e = parse_agent("!start.\nlikes(tea).").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Order);
        assert_eq!(e.line, 2);
    }

    #[test]
    fn plans_and_concerns() {
        let src = r#"
            exam_max(100).
            concern__: exam(S, M) : S / M.
            concern__: slap : -0.8.
            !start.
            @p1[priority(0.6)] +!start : exam_max(M) & M > 50 & not busy <- .print("go", M); +done; !next(_).
            @p2[mood(sadness, 0.3), step(sel_ev)] +!next(X) <- .send(lily, tell, hi[subject(me)]); wave(X).
            -!next(_) <- true.
        "#;
        let p = parse_agent(src).unwrap();
        assert_eq!(p.concerns.len(), 2);
        assert_eq!(p.plans.len(), 3);
        assert_eq!(p.plans[0].priority, 0.6);
        assert_eq!(p.plans[0].context.len(), 3);
        assert!(matches!(p.plans[0].context[1], Condition::Compare(..)));
        assert!(matches!(p.plans[0].context[2], Condition::Not(_)));
        assert_eq!(p.plans[1].affective.mood, Some((Atom::new("sadness"), 0.3)));
        assert_eq!(p.plans[1].cope_step, Some(RationalStep::SelEv));
        assert!(p.plans[2].body.is_empty());
    }

    #[test]
    fn plan_errors() {
        assert!(parse_agent("+!g <- .stopMAS.").is_err());
        assert!(parse_agent("+!g : true.").is_err());
        assert_eq!(parse_agent("@a +!g <- true.\n@a +!h <- true.").unwrap_err().kind, ParseErrorKind::Duplicate);
        assert_eq!(
            parse_agent("personality__: { [], coping_strats: [nope] }").unwrap_err().kind,
            ParseErrorKind::Unknown
        );
        assert_eq!(parse_agent("@a[priority(-1)] +!g <- true.").unwrap_err().kind, ParseErrorKind::Range);
    }

    #[test]
    fn local_matrix() {
        let p = parse_agent("w_matrix__: [ extraversion: [ Joy: 0.5 ] ]").unwrap();
        assert_eq!(p.w_matrix.unwrap().get(Atom::new("joy"), Atom::new("extraversion")), 0.5);
        let e = parse_agent("w_matrix__: [ extraversion: [ Bliss: 0.5 ] ]").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Unknown);
    }
}
