use crate::parser::Condition;
use crate::terms::{match_pattern, unify_with, Arg, CmpOp, Expr, Substitution, Term};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BeliefBase {
    beliefs: Vec<Term>,
}

impl BeliefBase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Term> {
        self.beliefs.iter()
    }

    pub fn len(&self) -> usize {
        self.beliefs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beliefs.is_empty()
    }

    /// Adds `t`. A belief with the same atomic formula absorbs the new
    /// annotations, each replacing any old one with the same functor.
    /// Returns whether the base changed.
    pub fn add(&mut self, t: Term) -> bool {
        if let Some(old) = self.beliefs.iter_mut().find(|b| b.same_atomic_formula(&t)) {
            let before = old.clone();
            for a in t.annots {
                old.set_annotation(a);
            }
            return *old != before;
        }
        self.beliefs.push(t);
        true
    }

    /// Removes the first belief unifying with `pattern`, ignoring annotations.
    pub fn remove(&mut self, pattern: &Term) -> Option<Term> {
        let pos = self.beliefs.iter().position(|b| {
            let mut s = Substitution::new();
            unify_with(pattern, b, &mut s)
        })?;
        Some(self.beliefs.remove(pos))
    }

    /// Every extension of `s` under which `pattern` matches some belief.
    /// Annotations in the pattern must appear on the belief.
    pub fn matches<'a>(&'a self, pattern: &'a Term, s: &'a Substitution) -> impl Iterator<Item = Substitution> + 'a {
        let p = s.apply(pattern);
        self.beliefs.iter().filter_map(move |b| {
            let mut ext = s.clone();
            if match_pattern(&p, b, &mut ext) {
                Some(ext)
            } else {
                None
            }
        })
    }

    /// First solution of a conjunctive context, searching beliefs in order
    /// with backtracking.
    pub fn solve(&self, conds: &[Condition], s: &Substitution) -> Option<Substitution> {
        let Some((first, rest)) = conds.split_first() else {
            return Some(s.clone());
        };
        match first {
            Condition::Belief(t) => self.matches(t, s).find_map(|ext| self.solve(rest, &ext)),
            Condition::Not(t) => {
                if self.matches(t, s).next().is_some() {
                    None
                } else {
                    self.solve(rest, s)
                }
            }
            Condition::Compare(op, l, r) => {
                let lookup = |v| s.number(v);
                let holds = match (l.eval(&lookup), r.eval(&lookup)) {
                    (Ok(a), Ok(b)) => op.holds(a, b),
                    _ => match (op, operand(l, s), operand(r, s)) {
                        (CmpOp::Eq, Some(a), Some(b)) => a == b,
                        (CmpOp::Ne, Some(a), Some(b)) => a != b,
                        _ => false,
                    },
                };
                if holds {
                    self.solve(rest, s)
                } else {
                    None
                }
            }
        }
    }
}

/// A non-numeric comparison operand: a bound variable or a bare atom.
fn operand(e: &Expr, s: &Substitution) -> Option<Arg> {
    let Expr::Var(name) = e else { return None };
    if name.as_str().starts_with(|c: char| c.is_ascii_lowercase()) {
        return Some(Arg::Term(Term { functor: *name, args: vec![], annots: vec![] }));
    }
    match s.apply_arg(&Arg::Var(*name)) {
        Arg::Var(_) => None,
        bound => Some(bound),
    }
}

impl FromIterator<Term> for BeliefBase {
    fn from_iter<I: IntoIterator<Item = Term>>(iter: I) -> Self {
        let mut b = BeliefBase::new();
        for t in iter {
            b.add(t);
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_agent, parse_term};
    use crate::terms::Atom;

    fn base(src: &[&str]) -> BeliefBase {
        src.iter().map(|s| parse_term(s).unwrap()).collect()
    }

    fn context(src: &str) -> Vec<Condition> {
        parse_agent(&format!("+!g : {} <- true.", src)).unwrap().plans.remove(0).context
    }

    #[test]
    fn backtracking_conjunction() {
        let b = base(&["friend(ted)", "friend(lily)", "happy(lily)"]);
        let s = b.solve(&context("friend(X) & happy(X)"), &Substitution::new()).unwrap();
        assert_eq!(s.get(Atom::new("X")), Some(&Arg::atom("lily")));
        assert!(b.solve(&context("friend(X) & not happy(X) & X == 1"), &Substitution::new()).is_none());
    }

    #[test]
    fn negation_and_comparison() {
        let b = base(&["score(80)"]);
        assert!(b.solve(&context("score(S) & S > 50 & not busy"), &Substitution::new()).is_some());
        assert!(b.solve(&context("score(S) & S / 0 > 1"), &Substitution::new()).is_none());
    }

    #[test]
    fn query_annotations_must_be_present() {
        let b = base(&["time(cloudy)[source(marshall)]"]);
        assert!(b.solve(&context("time(cloudy)"), &Substitution::new()).is_some());
        let s = b.solve(&context("time(W)[source(S)]"), &Substitution::new()).unwrap();
        assert_eq!(s.get(Atom::new("S")), Some(&Arg::atom("marshall")));
        assert!(b.solve(&context("time(cloudy)[source(lily)]"), &Substitution::new()).is_none());
    }

    #[test]
    fn term_equality() {
        let b = base(&["friend(ted)", "friend(lily)"]);
        let s = b.solve(&context("friend(X) & X \\== ted"), &Substitution::new()).unwrap();
        assert_eq!(s.get(Atom::new("X")), Some(&Arg::atom("lily")));
        assert!(b.solve(&context("friend(X) & X == robin"), &Substitution::new()).is_none());
        assert!(b.solve(&context("friend(X) & X == lily"), &Substitution::new()).is_some());
        assert!(b.solve(&context("Y == lily"), &Substitution::new()).is_none());
    }

    #[test]
    fn add_merges_annotations() {
        let mut b = BeliefBase::new();
        assert!(b.add(parse_term("slap[target(barney)]").unwrap()));
        assert!(b.add(parse_term("slap[target(lily),affective_relevant]").unwrap()));
        assert!(!b.add(parse_term("slap[target(lily)]").unwrap()));
        assert_eq!(b.len(), 1);
        assert_eq!(b.iter().next().unwrap().to_string(), "slap[target(lily),affective_relevant]");
        assert!(b.remove(&parse_term("slap").unwrap()).is_some());
        assert!(b.is_empty());
    }
}
