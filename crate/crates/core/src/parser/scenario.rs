//! Scenario files (`.scn`): timed percept injections.
//!
//! ```text
//! tick 3 * slap[subject(Marshall),target(Barney),affective_relevant,interaction_value(-0.5)].
//! tick 5 lily -busy.
//! run 10.
//! ```
//!
//! Percept terms are ground; capitalized names are read as atoms.

use super::ast::{Injection, Recipient, Scenario};
use super::config::check_term;
use super::cursor::{Cursor, TermMode};
use super::error::{PResult, ParseErrorKind};
use super::lexer::Tok;
use crate::terms::{Atom, EventKind, EventOp, TriggeringEvent};

pub fn parse_scenario(src: &str) -> PResult<Scenario> {
    parse(src, None)
}

/// Like [`parse_scenario`], also rejecting recipients outside `agents`.
pub fn parse_scenario_for(src: &str, agents: &[Atom]) -> PResult<Scenario> {
    parse(src, Some(agents))
}

fn tick_number(c: &mut Cursor, what: &str) -> PResult<u64> {
    let tok = c.token().clone();
    match c.peek().clone() {
        Tok::Num(n) if n.fract() == 0.0 && n >= 0.0 && n <= u32::MAX as f64 => {
            c.bump();
            Ok(n as u64)
        }
        Tok::Num(_) | Tok::Minus => {
            Err(c.error_at(&tok, ParseErrorKind::Range, format!("{} must be a non-negative integer", what)))
        }
        _ => Err(c.unexpected(what)),
    }
}

fn parse(src: &str, agents: Option<&[Atom]>) -> PResult<Scenario> {
    let mut c = Cursor::new(src);
    c.mode = TermMode::Ground;
    let mut sc = Scenario::default();
    let mut last = 0u64;
    while !c.at_eof() {
        let tok = c.token().clone();
        match c.peek().clone() {
            Tok::Ident(k) if k == "tick" => {
                c.bump();
                let ttok = c.token().clone();
                let tick = tick_number(&mut c, "tick")?;
                if tick < last {
                    return Err(c.error_at(
                        &ttok,
                        ParseErrorKind::Order,
                        format!("tick {} comes after tick {}", tick, last),
                    ));
                }
                last = tick;
                let rtok = c.token().clone();
                let recipient = if c.eat(&Tok::Star) {
                    Recipient::Broadcast
                } else {
                    let id = c.label("agent id or `*`")?;
                    if let Some(ids) = agents {
                        if !ids.contains(&id) {
                            return Err(c.error_at(&rtok, ParseErrorKind::Unknown, format!("unknown agent `{}`", id)));
                        }
                    }
                    Recipient::Agent(id)
                };
                let op = if c.eat(&Tok::Minus) {
                    EventOp::Del
                } else {
                    c.eat(&Tok::Plus);
                    EventOp::Add
                };
                let ptok = c.token().clone();
                let literal = c.term()?;
                check_term(&c, &ptok, &literal)?;
                c.expect(Tok::Dot, "`.`")?;
                sc.injections.push(Injection {
                    tick,
                    recipient,
                    event: TriggeringEvent::new(op, EventKind::Belief, literal),
                });
            }
            Tok::Ident(k) if k == "run" => {
                c.bump();
                let n = tick_number(&mut c, "run length")?;
                c.expect(Tok::Dot, "`.`")?;
                if sc.run_length.replace(n).is_some() {
                    return Err(c.error_at(&tok, ParseErrorKind::Duplicate, "`run` given twice"));
                }
            }
            _ => return Err(c.unexpected("`tick` or `run`")),
        }
    }
    Ok(sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::{aff_rel_ev, get_iv, get_target};

    #[test]
    fn example_two_percept() {
        let sc = parse_scenario(
            "tick 3 lily slap[subject(Marshall),target(Barney),affective_relevant,interaction_value(-0.5)].",
        )
        .unwrap();
        assert_eq!(sc.injections.len(), 1);
        let inj = &sc.injections[0];
        assert_eq!(inj.tick, 3);
        assert_eq!(inj.recipient, Recipient::Agent(Atom::new("lily")));
        assert_eq!(get_target(&inj.event), Some(Atom::new("barney")));
        assert!(aff_rel_ev(&inj.event));
        assert_eq!(get_iv(&inj.event), Ok(-0.5));
    }

    #[test]
    fn empty_and_run() {
        assert_eq!(parse_scenario("").unwrap(), Scenario::default());
        let sc = parse_scenario("run 10.\ntick 0 * -busy.").unwrap();
        assert_eq!(sc.run_length, Some(10));
        assert_eq!(sc.injections[0].event.op, EventOp::Del);
        assert_eq!(sc.injections[0].recipient, Recipient::Broadcast);
    }

    #[test]
    fn ticks_must_not_decrease() {
        let e = parse_scenario("tick 5 lily a.\ntick 2 lily b.").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Order);
        assert_eq!(e.line, 2);
        assert!(parse_scenario("tick 2 lily a.\ntick 2 lily b.").is_ok());
    }

    #[test]
    fn agent_ids_checked() {
        let ids = [Atom::new("lily")];
        assert!(parse_scenario_for("tick 1 Lily a.", &ids).is_ok());
        assert_eq!(parse_scenario_for("tick 1 ted a.", &ids).unwrap_err().kind, ParseErrorKind::Unknown);
    }

    #[test]
    fn bad_ticks() {
        assert_eq!(parse_scenario("tick -1 lily a.").unwrap_err().kind, ParseErrorKind::Range);
        assert_eq!(parse_scenario("tick 1.5 lily a.").unwrap_err().kind, ParseErrorKind::Range);
        assert!(parse_scenario("tick x lily a.").is_err());
    }
}
