//! Project files (`.emas`).

use super::ast::*;
use super::config::{self, optional_dot};
use super::cursor::Cursor;
use super::error::{PResult, ParseErrorKind};
use super::lexer::Tok;
use crate::terms::Atom;

pub fn parse_mas(src: &str) -> PResult<MasProject> {
    let mut c = Cursor::new(src);
    let tok = c.token().clone();
    match c.bump() {
        Tok::Var(k) if k == "MAS" => {}
        _ => return Err(c.error_at(&tok, ParseErrorKind::Syntax, "expected `MAS`")),
    }
    let name = c.label("project name")?;
    c.expect(Tok::LBrace, "`{`")?;
    let mut mas = MasProject {
        name,
        infrastructure: None,
        environment: None,
        exec_control: None,
        agents: Vec::new(),
        settings: MasSettings::default(),
        w_matrix: None,
    };
    let mut seen: Vec<String> = Vec::new();
    let mut matrix_entries = Vec::new();

    while !c.eat(&Tok::RBrace) {
        let tok = c.token().clone();
        let key = match c.bump() {
            Tok::Ident(k) | Tok::Var(k) => k,
            Tok::Eof => return Err(c.error_at(&tok, ParseErrorKind::Syntax, "unterminated MAS block, expected `}`")),
            _ => {
                return Err(c.error_at(
                    &tok,
                    ParseErrorKind::Syntax,
                    format!("expected block name, found {}", tok.tok.describe()),
                ))
            }
        };
        let canon = match key.as_str() {
            "executionControl" | "execcontrol" | "exec_control" => "execcontrol".to_string(),
            k => k.to_string(),
        };
        if seen.contains(&canon) {
            return Err(c.error_at(&tok, ParseErrorKind::Duplicate, format!("block `{}` given twice", key)));
        }
        seen.push(canon.clone());
        c.expect(Tok::Colon, "`:`")?;
        match canon.as_str() {
            "infrastructure" => mas.infrastructure = Some(c.rest_of_line()?),
            "environment" => mas.environment = Some(c.rest_of_line()?),
            "execcontrol" => mas.exec_control = Some(c.rest_of_line()?),
            "agents" => {
                agents(&mut c, &mut mas.agents)?;
            }
            "settings__" => {
                mas.settings = settings(&mut c)?;
                optional_dot(&mut c);
                c.eat(&Tok::Semi);
            }
            "w_matrix__" => {
                let (m, entries) = config::w_matrix(&mut c)?;
                mas.w_matrix = Some(m);
                matrix_entries = entries;
                optional_dot(&mut c);
                c.eat(&Tok::Semi);
            }
            _ => return Err(c.error_at(&tok, ParseErrorKind::Syntax, format!("unknown block `{}`", key))),
        }
    }
    if !c.at_eof() {
        return Err(c.unexpected("end of input"));
    }

    let traits = mas.settings.traits.clone().unwrap_or_else(config::ocean);
    // a custom prototype table is checked when the project is loaded
    let emotions = if mas.settings.prototypes.is_none() { Some(config::default_emotion_labels()) } else { None };
    config::check_matrix_labels(&matrix_entries, emotions.as_deref(), &traits)?;
    Ok(mas)
}

fn agents(c: &mut Cursor, out: &mut Vec<AgentDecl>) -> PResult<()> {
    // `id [path] ;` repeated while the next token is not another block key
    loop {
        let is_decl = match (c.peek(), c.peek_at(1)) {
            (Tok::Ident(_) | Tok::Var(_), Tok::Colon) => false,
            (Tok::Ident(_) | Tok::Var(_), _) => true,
            _ => false,
        };
        if !is_decl {
            return Ok(());
        }
        let tok = c.token().clone();
        let id = c.label("agent id")?;
        if out.iter().any(|a| a.id == id) {
            return Err(c.error_at(&tok, ParseErrorKind::Duplicate, format!("agent `{}` declared twice", id)));
        }
        let path = match c.peek().clone() {
            Tok::Str(s) => {
                c.bump();
                s
            }
            Tok::Semi => format!("{}.easl", id),
            _ => {
                // bare path such as lily.easl or agents/lily.easl
                let start = c.token().start;
                let mut end = start;
                while !matches!(c.peek(), Tok::Semi | Tok::Eof | Tok::RBrace) && c.token().line == tok.line {
                    end = c.token().end;
                    c.bump();
                }
                let p = c.src[start..end].trim().to_string();
                if p.is_empty() {
                    return Err(c.unexpected("agent file path or `;`"));
                }
                p
            }
        };
        c.expect(Tok::Semi, "`;`")?;
        out.push(AgentDecl { id, path });
    }
}

fn settings(c: &mut Cursor) -> PResult<MasSettings> {
    let mut s = MasSettings::default();
    c.expect(Tok::LBracket, "`[`")?;
    if c.eat(&Tok::RBracket) {
        return Ok(s);
    }
    loop {
        let tok = c.token().clone();
        let key = c.ident("setting name")?;
        c.expect(Tok::Colon, "`:`")?;
        let dup = match key.as_str() {
            "al_weight" => s.al_weight.replace(c.number_in("al_weight", 0.0, 1.0)?).is_some(),
            "prototypes" => s.prototypes.replace(c.string("file path")?).is_some(),
            "emotion_table" => s.emotion_table.replace(c.string("file path")?).is_some(),
            "empathic_table" => s.empathic_table.replace(c.string("file path")?).is_some(),
            "traits" => {
                c.expect(Tok::LBracket, "`[`")?;
                let mut ts: Vec<Atom> = Vec::new();
                loop {
                    let ttok = c.token().clone();
                    let t = c.label("trait label")?;
                    if ts.contains(&t) {
                        return Err(c.error_at(
                            &ttok,
                            ParseErrorKind::Duplicate,
                            format!("trait `{}` listed twice", t),
                        ));
                    }
                    ts.push(t);
                    if !c.eat(&Tok::Comma) {
                        break;
                    }
                }
                c.expect(Tok::RBracket, "`]`")?;
                s.traits.replace(ts).is_some()
            }
            other => return Err(c.error_at(&tok, ParseErrorKind::Syntax, format!("unknown setting `{}`", other))),
        };
        if dup {
            return Err(c.error_at(&tok, ParseErrorKind::Duplicate, format!("setting `{}` given twice", key)));
        }
        if !c.eat(&Tok::Comma) {
            break;
        }
    }
    c.expect(Tok::RBracket, "`]`")?;
    Ok(s)
}
