//! Brute-force enumeration of closed terms from the grammar clauses.

use std::collections::BTreeSet;

use libra_core::{Expr, Kind};

use super::{austere_of, binary_value, free, symbols};

pub fn bits(e: &Expr) -> u64 {
    symbols(e).iter().map(|k| k + 1).sum()
}

/// Every expression of the category costing at most `budget` bits, built
/// from the grammar clauses.
pub fn all_within(budget: u64, want_term: bool) -> Vec<Expr> {
    let mut out = Vec::new();
    if want_term {
        for i in 0..budget.saturating_sub(5) {
            out.push(Expr::noema(i));
        }
        if budget >= 4 {
            out.push(Expr::alethizor());
        }
        if budget >= 5 {
            out.push(Expr::enumerator());
        }
    } else {
        for b in all_within(budget.saturating_sub(4), true) {
            for a in all_within(budget - bits(&b), true) {
                out.push(Expr::atom(b.clone(), a));
            }
        }
    }
    if budget > 3 {
        for l in all_within(budget - 3, want_term) {
            for r in all_within(budget - 3 - bits(&l), want_term) {
                out.push(if want_term {
                    Expr::joint_term(l.clone(), r)
                } else {
                    Expr::joint_formula(l.clone(), r)
                });
            }
        }
    }
    let head = if want_term { 1 } else { 2 };
    for y in 0..(budget + 1).saturating_sub(head + 6 + 8) {
        for body in all_within(budget - head - (y + 6), false) {
            out.push(if want_term {
                Expr::abstraction(y, body)
            } else {
                Expr::universal(y, body)
            });
        }
    }
    out
}

/// Class key: binders renamed to nesting depth, joint operands unordered.
pub fn key(e: &Expr, scope: &mut Vec<u64>) -> String {
    match e.kind() {
        Kind::Noema(i) => match scope.iter().rposition(|y| y == i) {
            Some(d) => format!("b{d}"),
            None => format!("v{i}"),
        },
        Kind::Alethizor => "T".into(),
        Kind::Enumerator => "E".into(),
        Kind::JointTerm(l, r) | Kind::JointFormula(l, r) => {
            let mut pair = [key(l, scope), key(r, scope)];
            pair.sort();
            format!("↓({},{})", pair[0], pair[1])
        }
        Kind::Atom(b, a) => format!("({}∈{})", key(a, scope), key(b, scope)),
        Kind::Abstraction(y, body) | Kind::Universal(y, body) => {
            scope.push(*y);
            let k = format!(
                "{}{}[{}]",
                if e.is_term() { "S" } else { "A" },
                scope.len(),
                key(body, scope)
            );
            scope.pop();
            k
        }
    }
}

/// Closed terms below 2^max_bits by value, keeping the first of each class.
pub fn oracle(max_bits: u64) -> Vec<Expr> {
    let mut closed: Vec<Expr> = all_within(max_bits, true)
        .into_iter()
        .filter(|t| free(t).is_empty())
        .collect();
    closed.sort_by_key(|t| binary_value(&austere_of(&symbols(t))));
    let mut seen = BTreeSet::new();
    closed
        .into_iter()
        .filter(|t| seen.insert(key(t, &mut Vec::new())))
        .collect()
}
