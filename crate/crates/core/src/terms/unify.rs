//! Most-general unification over terms. Annotations are metadata and never
//! take part in matching; callers query them separately.

use std::collections::BTreeMap;
use std::fmt;

use super::atom::Atom;
use super::term::{Annotation, Arg, Term, TriggeringEvent};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Substitution {
    bindings: BTreeMap<Atom, Arg>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn get(&self, var: Atom) -> Option<&Arg> {
        self.bindings.get(&var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, &Arg)> {
        self.bindings.iter()
    }

    /// Binds `var` and keeps the substitution in solved form, so that
    /// `apply` is idempotent.
    pub fn bind(&mut self, var: Atom, value: Arg) {
        let value = self.apply_arg(&value);
        let single = Substitution { bindings: BTreeMap::from([(var, value.clone())]) };
        for v in self.bindings.values_mut() {
            *v = single.apply_arg(v);
        }
        self.bindings.insert(var, value);
    }

    fn walk<'a>(&'a self, arg: &'a Arg) -> &'a Arg {
        let mut cur = arg;
        while let Arg::Var(v) = cur {
            match self.bindings.get(v) {
                Some(next) => cur = next,
                None => break,
            }
        }
        cur
    }

    pub fn apply_arg(&self, arg: &Arg) -> Arg {
        match self.walk(arg) {
            Arg::Term(t) => Arg::Term(self.apply(t)),
            other => other.clone(),
        }
    }

    pub fn apply(&self, term: &Term) -> Term {
        Term {
            functor: term.functor,
            args: term.args.iter().map(|a| self.apply_arg(a)).collect(),
            annots: term
                .annots
                .iter()
                .map(|an| Annotation { functor: an.functor, args: an.args.iter().map(|a| self.apply_arg(a)).collect() })
                .collect(),
        }
    }

    pub fn apply_event(&self, te: &TriggeringEvent) -> TriggeringEvent {
        TriggeringEvent { op: te.op, kind: te.kind, literal: self.apply(&te.literal) }
    }

    /// Numeric value of `var` under this substitution, if bound to a number.
    pub fn number(&self, var: Atom) -> Option<f64> {
        match self.walk(&Arg::Var(var)) {
            Arg::Num(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={}", k, v)?;
        }
        f.write_str("}")
    }
}

fn occurs(var: Atom, arg: &Arg, s: &Substitution) -> bool {
    match s.walk(arg) {
        Arg::Var(v) => *v == var,
        Arg::Term(t) => t.args.iter().any(|a| occurs(var, a, s)),
        _ => false,
    }
}

pub(crate) fn unify_args(a: &Arg, b: &Arg, s: &mut Substitution) -> bool {
    let a = s.walk(a).clone();
    let b = s.walk(b).clone();
    match (&a, &b) {
        (Arg::Var(x), Arg::Var(y)) if x == y => true,
        (Arg::Var(x), other) | (other, Arg::Var(x)) => {
            if occurs(*x, other, s) {
                return false;
            }
            s.bind(*x, other.clone());
            true
        }
        (Arg::Num(x), Arg::Num(y)) => x == y,
        (Arg::Str(x), Arg::Str(y)) => x == y,
        (Arg::Term(x), Arg::Term(y)) => unify_terms(x, y, s),
        _ => false,
    }
}

pub(crate) fn unify_terms(a: &Term, b: &Term, s: &mut Substitution) -> bool {
    if a.functor != b.functor || a.args.len() != b.args.len() {
        return false;
    }
    a.args.iter().zip(&b.args).all(|(x, y)| unify_args(x, y, s))
}

/// Most-general unifier of `a` and `b`, ignoring annotations on both sides.
pub fn unify(a: &Term, b: &Term) -> Option<Substitution> {
    let mut s = Substitution::new();
    unify_with(a, b, &mut s).then_some(s)
}

/// Extends `s` in place; on failure `s` may hold partial bindings, so callers
/// that need to backtrack should clone first.
pub fn unify_with(a: &Term, b: &Term, s: &mut Substitution) -> bool {
    unify_terms(a, b, s)
}

fn annots_subset(pat: &[Annotation], target: &[Annotation], s: &Substitution) -> Option<Substitution> {
    let Some((first, rest)) = pat.split_first() else {
        return Some(s.clone());
    };
    target
        .iter()
        .filter(|t| t.functor == first.functor && t.args.len() == first.args.len())
        .find_map(|t| {
            let mut ext = s.clone();
            first.args.iter().zip(&t.args).all(|(a, b)| unify_args(a, b, &mut ext)).then_some(ext)
        })
        .and_then(|ext| annots_subset(rest, target, &ext))
}

/// Pattern match: like [`unify_with`], and every annotation of `pattern`
/// must also unify with one of `target`'s. On failure `s` is unchanged.
pub fn match_pattern(pattern: &Term, target: &Term, s: &mut Substitution) -> bool {
    let mut ext = s.clone();
    if !unify_terms(pattern, target, &mut ext) {
        return false;
    }
    match annots_subset(&pattern.annots, &target.annots, &ext) {
        Some(done) => {
            *s = done;
            true
        }
        None => false,
    }
}

/// Matches a plan trigger pattern against a concrete event.
pub fn unify_events(pattern: &TriggeringEvent, event: &TriggeringEvent) -> Option<Substitution> {
    if pattern.op != event.op || pattern.kind != event.kind {
        return None;
    }
    let mut s = Substitution::new();
    match_pattern(&pattern.literal, &event.literal, &mut s).then_some(s)
}
