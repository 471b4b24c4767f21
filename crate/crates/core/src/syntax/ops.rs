use std::collections::HashMap;

use super::expr::{Expr, Kind};
use crate::error::{Error, Result};

/// `(a/u)e`, clause by clause. No capture check; see [`substitutable`].
pub fn substitute(a: &Expr, u: u64, e: &Expr) -> Expr {
    assert!(a.is_term(), "only terms are substituted");
    let mut memo = HashMap::new();
    subst(a, u, e, &mut memo)
}

fn subst(a: &Expr, u: u64, e: &Expr, memo: &mut HashMap<usize, Expr>) -> Expr {
    // nothing to replace when u is not present
    if !e.has_noema(u) {
        return e.clone();
    }
    if let Some(r) = memo.get(&e.addr()) {
        return r.clone();
    }
    let out = match e.kind() {
        Kind::Noema(w) if *w == u => a.clone(),
        Kind::Noema(_) | Kind::Alethizor | Kind::Enumerator => e.clone(),
        Kind::JointTerm(l, r) => Expr::joint_term(subst(a, u, l, memo), subst(a, u, r, memo)),
        Kind::JointFormula(l, r) => Expr::joint_formula(subst(a, u, l, memo), subst(a, u, r, memo)),
        Kind::Atom(b, c) => Expr::atom(subst(a, u, b, memo), subst(a, u, c, memo)),
        Kind::Abstraction(y, body) if *y != u => Expr::abstraction(*y, subst(a, u, body, memo)),
        Kind::Universal(y, body) if *y != u => Expr::universal(*y, subst(a, u, body, memo)),
        Kind::Abstraction(..) | Kind::Universal(..) => e.clone(),
    };
    memo.insert(e.addr(), out.clone());
    out
}

/// Simultaneous substitution of closed terms for several noemata.
pub fn substitute_all(bindings: &[(u64, Expr)], e: &Expr) -> Expr {
    debug_assert!(bindings.iter().all(|(_, t)| t.is_closed()));
    bindings
        .iter()
        .fold(e.clone(), |acc, (u, t)| substitute(t, *u, &acc))
}

/// F(a, u, e): `a` is substitutable for `u` in `e`.
///
/// Under a binder `y` the test is: `u` not present in the bound expression,
/// or (`y` not a noema of `a` and `a` substitutable in the body).
pub fn substitutable(a: &Expr, u: u64, e: &Expr) -> bool {
    match e.kind() {
        Kind::Noema(_) | Kind::Alethizor | Kind::Enumerator => true,
        Kind::JointTerm(l, r) | Kind::JointFormula(l, r) | Kind::Atom(l, r) => {
            substitutable(a, u, l) && substitutable(a, u, r)
        }
        Kind::Abstraction(y, body) | Kind::Universal(y, body) => {
            !e.has_noema(u) || (!a.has_noema(*y) && substitutable(a, u, body))
        }
    }
}

/// Nesting depth of the juncture over caliber-0 cognomina.
pub fn caliber(a: &Expr) -> Result<u64> {
    if !a.is_term() || !a.is_closed() {
        return Err(Error::NotCognomen(a.to_string()));
    }
    fn go(a: &Expr) -> u64 {
        match a.kind() {
            Kind::JointTerm(l, r) => 1 + go(l).max(go(r)),
            _ => 0,
        }
    }
    Ok(go(a))
}

/// Classification of a term by its noemata and sort constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermClass {
    pub praenomen: bool,
    pub cognomen: bool,
    pub pronomen: bool,
}

impl TermClass {
    pub fn label(&self) -> &'static str {
        if self.pronomen {
            "pronomen"
        } else if self.cognomen {
            "cognomen"
        } else {
            "nomen-with-noemata"
        }
    }
}

pub fn classify_term(a: &Expr) -> Result<TermClass> {
    if !a.is_term() {
        return Err(Error::NotInCategory {
            expected: "term",
            found: a.to_string(),
        });
    }
    let praenomen = matches!(
        a.kind(),
        Kind::Noema(_) | Kind::Alethizor | Kind::Enumerator
    );
    let cognomen = a.is_closed();
    Ok(TermClass {
        praenomen,
        cognomen,
        pronomen: cognomen && !a.mentions_sort_constant(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Expr {
        Expr::alethizor()
    }
    fn eu() -> Expr {
        Expr::enumerator()
    }
    fn v(i: u64) -> Expr {
        Expr::noema(i)
    }

    #[test]
    fn substitution_clauses() {
        let e = Expr::atom(v(1), v(0));
        assert_eq!(substitute(&t(), 0, &e), Expr::atom(v(1), t()));
        let bound = Expr::abstraction(0, Expr::atom(v(0), v(0)));
        assert_eq!(substitute(&t(), 0, &bound), bound);
        let all = Expr::universal(1, Expr::atom(v(1), v(0)));
        assert_eq!(
            substitute(&eu(), 0, &all),
            Expr::universal(1, Expr::atom(v(1), eu()))
        );
    }

    #[test]
    fn substitutability() {
        let all = Expr::universal(1, Expr::atom(v(1), v(0)));
        assert!(!substitutable(&v(1), 0, &all));
        assert!(substitutable(&t(), 0, &all));
        assert!(substitutable(&v(1), 0, &Expr::atom(v(0), v(0))));
    }

    #[test]
    fn calibers() {
        assert_eq!(caliber(&t()).unwrap(), 0);
        assert_eq!(caliber(&Expr::joint_term(t(), eu())).unwrap(), 1);
        let s = Expr::abstraction(0, Expr::member(v(0), v(0)));
        let c = Expr::joint_term(Expr::joint_term(t(), t()), s);
        assert_eq!(caliber(&c).unwrap(), 2);
        assert!(matches!(caliber(&v(0)), Err(Error::NotCognomen(_))));
    }

    #[test]
    fn term_classes() {
        let c = classify_term(&eu()).unwrap();
        assert!(c.praenomen && c.cognomen && !c.pronomen);
        let r = classify_term(&Expr::abstraction(0, Expr::member(v(0), v(0)))).unwrap();
        assert!(r.cognomen && r.pronomen && !r.praenomen);
        let n = classify_term(&Expr::joint_term(v(0), t())).unwrap();
        assert_eq!(n.label(), "nomen-with-noemata");
    }
}
