//! Defined notation over the primitive joint, universal and abstraction.

use super::expr::{Expr, Kind};

/// Builders for the defined connectives, term operators and the truth operator.
pub struct Sugar;

impl Sugar {
    pub fn not(a: Expr) -> Expr {
        Expr::joint_formula(a.clone(), a)
    }

    pub fn or(a: Expr, b: Expr) -> Expr {
        let j = Expr::joint_formula(a, b);
        Expr::joint_formula(j.clone(), j)
    }

    pub fn and(a: Expr, b: Expr) -> Expr {
        Expr::joint_formula(Sugar::not(a), Sugar::not(b))
    }

    pub fn implies(a: Expr, b: Expr) -> Expr {
        Sugar::or(Sugar::not(a), b)
    }

    pub fn iff(a: Expr, b: Expr) -> Expr {
        Sugar::and(Sugar::implies(a.clone(), b.clone()), Sugar::implies(b, a))
    }

    pub fn exists(y: u64, a: Expr) -> Expr {
        Sugar::not(Expr::universal(y, Sugar::not(a)))
    }

    pub fn forall(y: u64, a: Expr) -> Expr {
        Expr::universal(y, a)
    }

    pub fn comp(a: Expr) -> Expr {
        Expr::joint_term(a.clone(), a)
    }

    pub fn union(a: Expr, b: Expr) -> Expr {
        let j = Expr::joint_term(a, b);
        Expr::joint_term(j.clone(), j)
    }

    pub fn inter(a: Expr, b: Expr) -> Expr {
        Expr::joint_term(Sugar::comp(a), Sugar::comp(b))
    }

    pub fn minus(a: Expr, b: Expr) -> Expr {
        Sugar::inter(a, Sugar::comp(b))
    }

    /// `a ∈ b`.
    pub fn member(a: Expr, b: Expr) -> Expr {
        Expr::atom(b, a)
    }

    pub fn non_member(a: Expr, b: Expr) -> Expr {
        Sugar::not(Sugar::member(a, b))
    }

    pub fn set(y: u64, a: Expr) -> Expr {
        Expr::abstraction(y, a)
    }

    /// The binder the truth operator uses for `a`: the least index absent
    /// from ℵ(a), so that every smaller noema is present.
    pub fn truth_binder(a: &Expr) -> u64 {
        let mut y = 0;
        for &n in a.noemata() {
            if n == y {
                y += 1;
            } else {
                break;
            }
        }
        y
    }

    /// 𝕋A = ∃y(y ∈ {y | A}).
    pub fn truth(a: Expr) -> Expr {
        let y = Sugar::truth_binder(&a);
        Sugar::exists(y, Sugar::member(Expr::noema(y), Expr::abstraction(y, a)))
    }

    /// A fresh noema for binding over `exprs`: one above every index present.
    pub fn fresh(exprs: &[&Expr]) -> u64 {
        exprs
            .iter()
            .flat_map(|e| e.noemata().iter().copied())
            .max()
            .map_or(0, |m| m + 1)
    }

    /// Leibniz identity a = b ≜ ∀u(a ∈ u → b ∈ u) with u fresh for a and b.
    pub fn identity(a: Expr, b: Expr) -> Expr {
        let u = Sugar::fresh(&[&a, &b]);
        let uu = Expr::noema(u);
        Expr::universal(
            u,
            Sugar::implies(Sugar::member(a, uu.clone()), Sugar::member(b, uu)),
        )
    }

    /// Kuratowski pair {{a},{a,b}} with singletons by identity.
    pub fn pair(a: Expr, b: Expr) -> Expr {
        let z = Sugar::fresh(&[&a, &b]);
        let zz = Expr::noema(z);
        let single = Expr::abstraction(z, Sugar::identity(zz.clone(), a.clone()));
        let double = Expr::abstraction(
            z,
            Sugar::or(Sugar::identity(zz.clone(), a), Sugar::identity(zz, b)),
        );
        let w = Sugar::fresh(&[&single, &double]);
        let ww = Expr::noema(w);
        Expr::abstraction(
            w,
            Sugar::or(
                Sugar::identity(ww.clone(), single),
                Sugar::identity(ww, double),
            ),
        )
    }

    /// The Curry set c^F = {x | x ∈ x → F}.
    pub fn curry(f: Expr) -> Expr {
        let x = Sugar::fresh(&[&f]);
        let xx = Expr::noema(x);
        Expr::abstraction(x, Sugar::implies(Sugar::member(xx.clone(), xx), f))
    }

    /// Russell's set {v0 | v0 ∉ v0}.
    pub fn russell() -> Expr {
        let v = Expr::noema(0);
        Expr::abstraction(0, Sugar::non_member(v.clone(), v))
    }

    /// ∅ = {x | x ≠ x}.
    pub fn empty() -> Expr {
        let x = Expr::noema(0);
        Expr::abstraction(0, Sugar::not(Sugar::identity(x.clone(), x)))
    }
}

/// Recognized surface shape of an expression, used by the printer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum View {
    Not(Expr),
    Or(Expr, Expr),
    And(Expr, Expr),
    Implies(Expr, Expr),
    Iff(Expr, Expr),
    Exists(u64, Expr),
    Truth(Expr),
    Comp(Expr),
    Union(Expr, Expr),
    Inter(Expr, Expr),
    Minus(Expr, Expr),
    Identity(Expr, Expr),
    Primitive,
}

fn as_not(e: &Expr) -> Option<Expr> {
    match e.kind() {
        Kind::JointFormula(a, b) if a == b => Some(a.clone()),
        _ => None,
    }
}

fn as_comp(e: &Expr) -> Option<Expr> {
    match e.kind() {
        Kind::JointTerm(a, b) if a == b => Some(a.clone()),
        _ => None,
    }
}

impl View {
    /// Most specific defined notation matching `e`.
    pub fn of(e: &Expr) -> View {
        match e.kind() {
            Kind::JointFormula(x, y) if x == y => {
                if let Kind::JointFormula(p, q) = x.kind() {
                    return match as_not(p) {
                        Some(r) => View::Implies(r, q.clone()),
                        None => View::Or(p.clone(), q.clone()),
                    };
                }
                if let Kind::Universal(v, body) = x.kind() {
                    if let Some(inner) = as_not(body) {
                        if let Some(a) = truth_body(*v, &inner) {
                            return View::Truth(a);
                        }
                        return View::Exists(*v, inner);
                    }
                }
                View::Not(x.clone())
            }
            Kind::JointFormula(x, y) => match (as_not(x), as_not(y)) {
                (Some(a), Some(b)) => {
                    if let (View::Implies(p, q), View::Implies(q2, p2)) =
                        (View::of(&a), View::of(&b))
                    {
                        if p == p2 && q == q2 {
                            return View::Iff(p, q);
                        }
                    }
                    View::And(a, b)
                }
                _ => View::Primitive,
            },
            Kind::Universal(u, body) => match View::of(body) {
                View::Implies(p, q) => match (p.kind(), q.kind()) {
                    (Kind::Atom(u1, a), Kind::Atom(u2, b))
                        if u1 == u2 && *u1 == Expr::noema(*u) && Sugar::fresh(&[a, b]) == *u =>
                    {
                        View::Identity(a.clone(), b.clone())
                    }
                    _ => View::Primitive,
                },
                _ => View::Primitive,
            },
            Kind::JointTerm(x, y) if x == y => match x.kind() {
                Kind::JointTerm(p, q) => View::Union(p.clone(), q.clone()),
                _ => View::Comp(x.clone()),
            },
            Kind::JointTerm(x, y) => match (as_comp(x), as_comp(y)) {
                (Some(a), Some(b)) => match as_comp(&b) {
                    Some(c) => View::Minus(a, c),
                    None => View::Inter(a, b),
                },
                _ => View::Primitive,
            },
            _ => View::Primitive,
        }
    }
}

/// Recognizes `v ∈ {v | A}` with `v` the truth binder of `A`.
fn truth_body(v: u64, inner: &Expr) -> Option<Expr> {
    if let Kind::Atom(b, a) = inner.kind() {
        if let (Kind::Noema(m), Kind::Abstraction(y, body)) = (a.kind(), b.kind()) {
            if *m == v && *y == v && Sugar::truth_binder(body) == v {
                return Some(body.clone());
            }
        }
    }
    None
}
