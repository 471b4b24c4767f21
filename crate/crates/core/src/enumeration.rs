//! Alphabetological variants of cognomina and the enumeration `e` that
//! lists one representative per variant class, in order of size.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::codec;
use crate::error::{Error, Result};
use crate::syntax::{self, Category, Expr, Kind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariantVerdict {
    Variant,
    NotVariant,
    Unknown,
}

impl VariantVerdict {
    fn and(self, other: VariantVerdict) -> VariantVerdict {
        use VariantVerdict::*;
        match (self, other) {
            (NotVariant, _) | (_, NotVariant) => NotVariant,
            (Variant, Variant) => Variant,
            _ => Unknown,
        }
    }

    fn or(self, other: VariantVerdict) -> VariantVerdict {
        use VariantVerdict::*;
        match (self, other) {
            (Variant, _) | (_, Variant) => Variant,
            (NotVariant, NotVariant) => NotVariant,
            _ => Unknown,
        }
    }
}

/// Canonical form: binders renamed to their nesting depth above `base`,
/// joint operands in structural order.
pub fn canonical(e: &Expr) -> Expr {
    let base = e.noemata().last().map_or(0, |m| m + 1);
    canon(e, base, 0, &mut Vec::new())
}

fn canon(e: &Expr, base: u64, depth: u64, env: &mut Vec<(u64, u64)>) -> Expr {
    let rename =
        |env: &Vec<(u64, u64)>, y: u64| env.iter().rev().find(|(o, _)| *o == y).map(|p| p.1);
    match e.kind() {
        Kind::Noema(i) => Expr::noema(rename(env, *i).unwrap_or(*i)),
        Kind::Alethizor | Kind::Enumerator => e.clone(),
        Kind::JointTerm(l, r) | Kind::JointFormula(l, r) => {
            let (a, b) = (canon(l, base, depth, env), canon(r, base, depth, env));
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            if e.is_term() {
                Expr::joint_term(a, b)
            } else {
                Expr::joint_formula(a, b)
            }
        }
        Kind::Atom(b, a) => Expr::atom(canon(b, base, depth, env), canon(a, base, depth, env)),
        Kind::Abstraction(y, body) | Kind::Universal(y, body) => {
            let fresh = base + depth;
            env.push((*y, fresh));
            let inner = canon(body, base, depth + 1, env);
            env.pop();
            if matches!(e.kind(), Kind::Abstraction(..)) {
                Expr::abstraction(fresh, inner)
            } else {
                Expr::universal(fresh, inner)
            }
        }
    }
}

// Letters are atoms and universal formulas; universals whose bodies are
// provably equivalent share a letter.
const MAX_LETTERS: usize = 14;

struct Letters {
    items: Vec<Expr>,
}

impl Letters {
    fn index(&mut self, e: &Expr) -> Option<usize> {
        for (i, l) in self.items.iter().enumerate() {
            if l == e || same_universal(l, e) {
                return Some(i);
            }
        }
        if self.items.len() >= MAX_LETTERS {
            return None;
        }
        self.items.push(e.clone());
        Some(self.items.len() - 1)
    }
}

fn same_universal(a: &Expr, b: &Expr) -> bool {
    match (a.kind(), b.kind()) {
        (Kind::Universal(y, p), Kind::Universal(z, q)) if y == z => {
            prop_equivalent(p, q) == Some(true)
        }
        _ => false,
    }
}

enum Prop {
    Letter(usize),
    Nor(Box<Prop>, Box<Prop>),
}

fn to_prop(e: &Expr, letters: &mut Letters) -> Option<Prop> {
    match e.kind() {
        Kind::JointFormula(a, b) => Some(Prop::Nor(
            Box::new(to_prop(a, letters)?),
            Box::new(to_prop(b, letters)?),
        )),
        _ => letters.index(e).map(Prop::Letter),
    }
}

fn value(p: &Prop, bits: u32) -> bool {
    match p {
        Prop::Letter(i) => bits >> i & 1 == 1,
        Prop::Nor(a, b) => !value(a, bits) && !value(b, bits),
    }
}

/// Truth-table equivalence with atoms and quantified formulas as letters;
/// `None` when too many letters.
fn prop_equivalent(a: &Expr, b: &Expr) -> Option<bool> {
    let mut letters = Letters { items: Vec::new() };
    let pa = to_prop(a, &mut letters)?;
    let pb = to_prop(b, &mut letters)?;
    let n = letters.items.len() as u32;
    Some((0..1u32 << n).all(|bits| value(&pa, bits) == value(&pb, bits)))
}

/// Variance of propositions: canonical identity or propositional
/// equivalence proves it; nothing here refutes it.
pub fn proposition_variant(a: &Expr, b: &Expr) -> VariantVerdict {
    let (ca, cb) = (canonical(a), canonical(b));
    if ca == cb || prop_equivalent(&ca, &cb) == Some(true) {
        VariantVerdict::Variant
    } else {
        VariantVerdict::Unknown
    }
}

pub fn variant(a: &Expr, b: &Expr) -> Result<VariantVerdict> {
    for t in [a, b] {
        if !t.is_term() || !t.is_closed() {
            return Err(Error::NotCognomen(t.to_string()));
        }
    }
    Ok(variant_terms(a, b))
}

fn variant_terms(a: &Expr, b: &Expr) -> VariantVerdict {
    use VariantVerdict::*;
    if a == b {
        return Variant;
    }
    match (a.kind(), b.kind()) {
        (Kind::Alethizor, Kind::Alethizor) | (Kind::Enumerator, Kind::Enumerator) => Variant,
        (Kind::JointTerm(c, d), Kind::JointTerm(e, f)) => {
            let straight = variant_terms(c, e).and(variant_terms(d, f));
            if straight == Variant {
                return Variant;
            }
            straight.or(variant_terms(c, f).and(variant_terms(d, e)))
        }
        (Kind::Abstraction(x, p), Kind::Abstraction(y, q)) => {
            let ex = |v: u64, body: &Expr| syntax::Sugar::exists(v, body.clone());
            if canonical(a) == canonical(b) {
                return Variant;
            }
            proposition_variant(&ex(*x, p), &ex(*y, q))
        }
        _ => NotVariant,
    }
}

/// One enumerated cognomen.
#[derive(Debug, Clone, Serialize)]
pub struct EnumEntry {
    pub index: usize,
    #[serde(serialize_with = "ser_display")]
    pub term: Expr,
    pub value: String,
    pub austere: String,
    /// Earlier entries this one was compared to with an unknown verdict.
    pub unknown_against: Vec<usize>,
}

fn ser_display<S: serde::Serializer>(e: &Expr, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumPrefix {
    pub entries: Vec<EnumEntry>,
    pub max_bits: u32,
}

impl EnumPrefix {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn term(&self, n: usize) -> Option<&Expr> {
        self.entries.get(n).map(|e| &e.term)
    }

    /// Whether any entry was admitted on an unknown verdict.
    pub fn flagged(&self) -> bool {
        self.entries.iter().any(|e| !e.unknown_against.is_empty())
    }

    /// Index of the entry whose class contains `a`.
    pub fn index_of(&self, a: &Expr) -> Result<usize> {
        self.entries
            .iter()
            .find(|e| variant_terms(&e.term, a) == VariantVerdict::Variant)
            .map(|e| e.index)
            .ok_or_else(|| Error::NotEnumerated(a.to_string()))
    }
}

/// All cognomina whose formation has exactly `bits` bits, ascending.
fn cognomina_of_length(bits: u32) -> Vec<Expr> {
    let lo = 1u64 << (bits - 1);
    let hi = 1u64 << bits;
    let found: Vec<(u64, Expr)> = (lo..hi)
        .into_par_iter()
        .filter_map(|n| {
            let f = codec::formation_of(&n.into()).ok()?;
            let rs = syntax::parse_readings(f.symbols(), Category::Term);
            rs.into_iter().find(|t| t.is_closed()).map(|t| (n, t))
        })
        .collect();
    found.into_iter().map(|(_, t)| t).collect()
}

/// The first `count` entries of `e`, scanning formations below 2^max_bits.
pub fn enumerate(count: usize, max_bits: u32) -> Result<EnumPrefix> {
    if max_bits > 30 {
        return Err(Error::Invalid(format!(
            "max_bits {max_bits} exceeds the exhaustive limit 30"
        )));
    }
    let mut entries: Vec<EnumEntry> = Vec::new();
    if count == 0 {
        return Ok(EnumPrefix { entries, max_bits });
    }
    for bits in 1..=max_bits {
        for t in cognomina_of_length(bits) {
            let mut unknown = Vec::new();
            let mut claimed = false;
            for e in &entries {
                match variant_terms(&e.term, &t) {
                    VariantVerdict::Variant => {
                        claimed = true;
                        break;
                    }
                    VariantVerdict::Unknown => unknown.push(e.index),
                    VariantVerdict::NotVariant => {}
                }
            }
            if claimed {
                continue;
            }
            entries.push(EnumEntry {
                index: entries.len(),
                value: t.value().to_string(),
                austere: syntax::print(&t, syntax::Form::Austere),
                term: t,
                unknown_against: unknown,
            });
            if entries.len() == count {
                return Ok(EnumPrefix { entries, max_bits });
            }
        }
    }
    Err(Error::EnumerationExhausted { max_bits })
}

/// a ◂ b: a is enumerated before b.
pub fn order_lt(a: &Expr, b: &Expr, ctx: &EnumPrefix) -> Result<bool> {
    Ok(ctx.index_of(a)? < ctx.index_of(b)?)
}

/// a ⊴ b: a is b or a ◂ b.
pub fn order_le(a: &Expr, b: &Expr, ctx: &EnumPrefix) -> Result<bool> {
    Ok(a == b || order_lt(a, b, ctx)?)
}

/// Shared prefixes keyed by length, so repeated fragment builds do not
/// rescan.
pub fn cached_prefix(count: usize) -> Result<EnumPrefix> {
    use once_cell::sync::Lazy;
    use std::sync::Mutex;
    static CACHE: Lazy<Mutex<HashMap<usize, EnumPrefix>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(p) = CACHE.lock().unwrap_or_else(|e| e.into_inner()).get(&count) {
        return Ok(p.clone());
    }
    let p = enumerate(count, 22)?;
    CACHE
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(count, p.clone());
    Ok(p)
}
