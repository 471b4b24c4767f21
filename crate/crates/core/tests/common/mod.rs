#![allow(dead_code)]

pub mod brute;
pub mod laws;
pub mod numerals;

use std::collections::BTreeSet;

use libra_core::syntax::Sugar;
use libra_core::{Expr, Kind};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Noema indices drawn by the generators.
pub const NOEMATA: u64 = 4;

pub fn term(depth: u32) -> BoxedStrategy<Expr> {
    expr(depth).prop_map(|(t, _)| t).boxed()
}

pub fn formula(depth: u32) -> BoxedStrategy<Expr> {
    expr(depth).prop_map(|(_, f)| f).boxed()
}

/// A term and a formula, each of nesting depth at most `depth`.
fn expr(depth: u32) -> BoxedStrategy<(Expr, Expr)> {
    let leaf_term = prop_oneof![
        (0..NOEMATA).prop_map(Expr::noema),
        Just(Expr::alethizor()),
        Just(Expr::enumerator()),
    ];
    let leaf = (leaf_term.clone(), leaf_term).prop_map(|(a, b)| (a.clone(), Expr::atom(b, a)));
    leaf.prop_recursive(depth, 64, 2, |inner| {
        let t = prop_oneof![
            inner.clone().prop_map(|(t, _)| t),
            (inner.clone(), inner.clone()).prop_map(|((l, _), (r, _))| Expr::joint_term(l, r)),
            (0..NOEMATA, inner.clone()).prop_map(|(y, (_, f))| Expr::abstraction(y, f)),
        ];
        let f = prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|((b, _), (a, _))| Expr::atom(b, a)),
            (inner.clone(), inner.clone()).prop_map(|((_, l), (_, r))| Expr::joint_formula(l, r)),
            (0..NOEMATA, inner.clone()).prop_map(|(y, (_, f))| Expr::universal(y, f)),
        ];
        (t, f)
    })
    .boxed()
}

pub fn any_expr(depth: u32) -> BoxedStrategy<Expr> {
    prop_oneof![term(depth), formula(depth)].boxed()
}

/// Closed terms: random terms with every noema bound by an outer abstraction.
pub fn closed_term(depth: u32) -> BoxedStrategy<Expr> {
    term(depth).prop_map(close_term).boxed()
}

pub fn close_term(t: Expr) -> Expr {
    if t.is_closed() {
        return t;
    }
    let open: Vec<u64> = free(&t).into_iter().collect();
    let body = open
        .iter()
        .fold(Expr::atom(t, Expr::noema(open[0])), |acc, &u| {
            Expr::universal(u, acc)
        });
    Expr::abstraction(open[0], body)
}

/// Symbol subscripts of an expression in Polish order, built from the
/// grammar clauses directly.
pub fn symbols(e: &Expr) -> Vec<u64> {
    match e.kind() {
        Kind::Noema(i) => vec![i + 5],
        Kind::Alethizor => vec![3],
        Kind::Enumerator => vec![4],
        Kind::JointTerm(l, r) | Kind::JointFormula(l, r) => {
            let mut v = vec![2];
            v.extend(symbols(l));
            v.extend(symbols(r));
            v
        }
        Kind::Atom(b, a) => {
            let mut v = symbols(b);
            v.extend(symbols(a));
            v
        }
        Kind::Abstraction(y, body) => {
            let mut v = vec![0, y + 5];
            v.extend(symbols(body));
            v
        }
        Kind::Universal(y, body) => {
            let mut v = vec![1, y + 5];
            v.extend(symbols(body));
            v
        }
    }
}

pub fn austere_of(symbols: &[u64]) -> String {
    symbols
        .iter()
        .map(|&k| format!("|{}", ".".repeat(k as usize)))
        .collect()
}

/// Reads a bar/dot string as a binary numeral, character by character.
pub fn binary_value(austere: &str) -> BigUint {
    let bits: String = austere
        .chars()
        .map(|c| if c == '|' { '1' } else { '0' })
        .collect();
    BigUint::parse_bytes(bits.as_bytes(), 2).expect("binary digits")
}

/// Free noemata, computed from the binding clauses.
pub fn free(e: &Expr) -> BTreeSet<u64> {
    match e.kind() {
        Kind::Noema(i) => BTreeSet::from([*i]),
        Kind::Alethizor | Kind::Enumerator => BTreeSet::new(),
        Kind::JointTerm(l, r) | Kind::JointFormula(l, r) | Kind::Atom(l, r) => {
            free(l).union(&free(r)).copied().collect()
        }
        Kind::Abstraction(y, body) | Kind::Universal(y, body) => {
            let mut s = free(body);
            s.remove(y);
            s
        }
    }
}

/// Replaces free occurrences of v_u by `a`, with no capture check.
pub fn replace(a: &Expr, u: u64, e: &Expr) -> Expr {
    match e.kind() {
        Kind::Noema(i) if *i == u => a.clone(),
        Kind::Noema(_) | Kind::Alethizor | Kind::Enumerator => e.clone(),
        Kind::JointTerm(l, r) => Expr::joint_term(replace(a, u, l), replace(a, u, r)),
        Kind::JointFormula(l, r) => Expr::joint_formula(replace(a, u, l), replace(a, u, r)),
        Kind::Atom(b, c) => Expr::atom(replace(a, u, b), replace(a, u, c)),
        Kind::Abstraction(y, _) | Kind::Universal(y, _) if *y == u => e.clone(),
        Kind::Abstraction(y, body) => Expr::abstraction(*y, replace(a, u, body)),
        Kind::Universal(y, body) => Expr::universal(*y, replace(a, u, body)),
    }
}

pub fn russell() -> Expr {
    Sugar::russell()
}

/// Formulas whose only noema is v0: other noemata are bound to T.
pub fn in_v0(depth: u32) -> impl Strategy<Value = Expr> {
    formula(depth).prop_map(|a| {
        let others: Vec<u64> = free(&a).into_iter().filter(|&u| u != 0).collect();
        let a = others
            .iter()
            .fold(a, |acc, &u| replace(&Expr::alethizor(), u, &acc));
        if free(&a).contains(&0) {
            a
        } else {
            Sugar::and(a, Expr::member(Expr::noema(0), Expr::alethizor()))
        }
    })
}
