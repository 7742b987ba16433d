//! Data-driven mapping from appraisal variables to emotions.
//!
//! One row per line: `sign(d) rel(l) ca_filter label intensity_expr`, e.g.
//! `neg eq1 any sadness abs(d)`. Every row whose guards hold contributes an
//! emotion; `d` and `l` are bound in the expression.

use std::fmt;

use super::appraisal::AppraisalVariables;
use crate::affect::{AffectError, Emotion, PrototypeTable};
use crate::terms::{Atom, Expr, Subject};

pub const DEFAULT_EMOTION_TABLE: &str = include_str!("../../data/emotion_table.txt");
pub const DEFAULT_EMPATHIC_TABLE: &str = include_str!("../../data/empathic_table.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignGuard {
    Pos,
    Neg,
    Zero,
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LikelihoodGuard {
    /// l < 1: a prospect.
    Lt1,
    /// l = 1: an outcome.
    Eq1,
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CauseGuard {
    SelfAgent,
    Other,
    Null,
    Any,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub sign: SignGuard,
    pub likelihood: LikelihoodGuard,
    pub cause: CauseGuard,
    pub label: Atom,
    pub intensity: Expr,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmotionTable {
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "emotion table line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for TableError {}

fn expr_vars_ok(e: &Expr) -> Result<(), String> {
    match e {
        Expr::Num(_) => Ok(()),
        Expr::Var(v) if matches!(v.as_str(), "d" | "l") => Ok(()),
        Expr::Var(v) => Err(format!("unknown variable `{}` (only d and l are bound)", v)),
        Expr::Neg(x) => expr_vars_ok(x),
        Expr::Bin(_, a, b) => expr_vars_ok(a).and_then(|_| expr_vars_ok(b)),
        Expr::Call(_, args) => args.iter().try_for_each(expr_vars_ok),
    }
}

impl TableRow {
    pub fn matches(&self, av: &AppraisalVariables) -> bool {
        let d = av.desirability;
        let sign = match self.sign {
            SignGuard::Pos => d > 0.0,
            SignGuard::Neg => d < 0.0,
            SignGuard::Zero => d == 0.0,
            SignGuard::Any => true,
        };
        let rel = match self.likelihood {
            LikelihoodGuard::Lt1 => av.likelihood < 1.0,
            LikelihoodGuard::Eq1 => av.likelihood == 1.0,
            LikelihoodGuard::Any => true,
        };
        let cause = matches!(
            (self.cause, av.causal_attribution),
            (CauseGuard::Any, _)
                | (CauseGuard::SelfAgent, Subject::SelfAgent)
                | (CauseGuard::Other, Subject::Agent(_))
                | (CauseGuard::Null, Subject::Null)
        );
        sign && rel && cause
    }

    /// Intensity in [0, 1]; evaluation failures read as 0.
    pub fn intensity(&self, av: &AppraisalVariables) -> f64 {
        let lookup = |v: Atom| match v.as_str() {
            "d" => Some(av.desirability),
            "l" => Some(av.likelihood),
            _ => None,
        };
        self.intensity.eval(&lookup).map(|x| x.clamp(0.0, 1.0)).unwrap_or(0.0)
    }
}

impl EmotionTable {
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |m: String| TableError { line, message: m };
            let mut rest = content;
            let mut fields = Vec::new();
            for _ in 0..4 {
                let f = rest.split_whitespace().next().unwrap_or("");
                if !f.is_empty() {
                    fields.push(f);
                    rest = rest.trim_start()[f.len()..].trim_start();
                }
            }
            if fields.len() < 4 || rest.is_empty() {
                return Err(err("expected `sign rel ca_filter label intensity_expr`".into()));
            }
            let sign = match fields[0] {
                "pos" => SignGuard::Pos,
                "neg" => SignGuard::Neg,
                "zero" => SignGuard::Zero,
                "any" => SignGuard::Any,
                other => return Err(err(format!("sign guard must be pos, neg, zero or any, got `{}`", other))),
            };
            let likelihood = match fields[1] {
                "lt1" => LikelihoodGuard::Lt1,
                "eq1" => LikelihoodGuard::Eq1,
                "any" => LikelihoodGuard::Any,
                other => return Err(err(format!("likelihood guard must be lt1, eq1 or any, got `{}`", other))),
            };
            let cause = match fields[2] {
                "self" => CauseGuard::SelfAgent,
                "other" => CauseGuard::Other,
                "null" => CauseGuard::Null,
                "any" => CauseGuard::Any,
                other => {
                    return Err(err(format!("attribution filter must be self, other, null or any, got `{}`", other)))
                }
            };
            let label = fields[3];
            if !label.starts_with(|c: char| c.is_ascii_lowercase())
                || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(err(format!("bad label `{}`", label)));
            }
            let label = Atom::new(label);
            let intensity = crate::parser::parse_expr(rest).map_err(|e| err(e.message))?;
            expr_vars_ok(&intensity).map_err(err)?;
            rows.push(TableRow { sign, likelihood, cause, label, intensity });
        }
        Ok(EmotionTable { rows })
    }

    pub fn default_emotions() -> Self {
        Self::parse(DEFAULT_EMOTION_TABLE).expect("bundled emotion table parses")
    }

    pub fn default_empathic() -> Self {
        Self::parse(DEFAULT_EMPATHIC_TABLE).expect("bundled empathic table parses")
    }

    pub fn labels(&self) -> impl Iterator<Item = Atom> + '_ {
        self.rows.iter().map(|r| r.label)
    }

    /// Labels that have no prototype in `prototypes`.
    pub fn missing_prototypes(&self, prototypes: &PrototypeTable) -> Vec<Atom> {
        let mut out: Vec<Atom> = self.labels().filter(|l| !prototypes.contains(*l)).collect();
        out.dedup();
        out
    }

    /// Emotions for `av`: one per matching row, in row order, even at zero intensity.
    pub fn derive(&self, av: &AppraisalVariables, prototypes: &PrototypeTable) -> Result<Vec<Emotion>, AffectError> {
        let mut out = Vec::new();
        for row in self.rows.iter().filter(|r| r.matches(av)) {
            let k = row.intensity(av);
            let proto = prototypes
                .get(row.label)
                .ok_or_else(|| AffectError::Table { line: 0, message: format!("no prototype for `{}`", row.label) })?;
            out.push(Emotion::new(row.label, proto.scale(k)));
        }
        Ok(out)
    }
}

impl fmt::Display for EmotionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let sign = match r.sign {
                SignGuard::Pos => "pos",
                SignGuard::Neg => "neg",
                SignGuard::Zero => "zero",
                SignGuard::Any => "any",
            };
            let rel = match r.likelihood {
                LikelihoodGuard::Lt1 => "lt1",
                LikelihoodGuard::Eq1 => "eq1",
                LikelihoodGuard::Any => "any",
            };
            let ca = match r.cause {
                CauseGuard::SelfAgent => "self",
                CauseGuard::Other => "other",
                CauseGuard::Null => "null",
                CauseGuard::Any => "any",
            };
            writeln!(f, "{} {} {} {} {}", sign, rel, ca, r.label, r.intensity)?;
        }
        Ok(())
    }
}
