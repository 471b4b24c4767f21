use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use once_cell::sync::Lazy;

use super::formation::Symbol;

/// Syntactic category of an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Term,
    Formula,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Term => "term",
            Category::Formula => "formula",
        })
    }
}

/// Shape of an expression node.
///
/// `Atom(b, a)` is the formula `ba`, read `a ∈ b`: the applier comes first.
/// `JointTerm(l, r)` and `JointFormula(l, r)` are `|_2 l r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Kind {
    Noema(u64),
    Alethizor,
    Enumerator,
    JointTerm(Expr, Expr),
    Abstraction(u64, Expr),
    Atom(Expr, Expr),
    JointFormula(Expr, Expr),
    Universal(u64, Expr),
}

pub struct Node {
    kind: Kind,
    noemata: Box<[u64]>,
    bits: u64,
    symbols: u64,
}

/// A hash-consed expression. Structurally equal expressions share one node,
/// so equality and hashing are by pointer.
#[derive(Clone)]
pub struct Expr(Arc<Node>);

static INTERNER: Lazy<Mutex<HashMap<Kind, Expr>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn union_sorted(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn symbol_bits(k: u64) -> u64 {
    k.saturating_add(1)
}

impl Expr {
    fn intern(kind: Kind) -> Expr {
        let mut table = INTERNER.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(e) = table.get(&kind) {
            return e.clone();
        }
        let (noemata, bits, symbols): (Vec<u64>, u64, u64) = match &kind {
            Kind::Noema(i) => (vec![*i], symbol_bits(i.saturating_add(5)), 1),
            Kind::Alethizor => (vec![], 4, 1),
            Kind::Enumerator => (vec![], 5, 1),
            Kind::JointTerm(l, r) | Kind::JointFormula(l, r) => (
                union_sorted(l.noemata(), r.noemata()),
                3u64.saturating_add(l.bit_len()).saturating_add(r.bit_len()),
                1 + l.symbol_count() + r.symbol_count(),
            ),
            Kind::Atom(b, a) => (
                union_sorted(b.noemata(), a.noemata()),
                b.bit_len().saturating_add(a.bit_len()),
                b.symbol_count() + a.symbol_count(),
            ),
            Kind::Abstraction(y, body) | Kind::Universal(y, body) => {
                let head = if matches!(kind, Kind::Abstraction(..)) {
                    1
                } else {
                    2
                };
                (
                    body.noemata().iter().copied().filter(|n| n != y).collect(),
                    (head as u64)
                        .saturating_add(symbol_bits(y.saturating_add(5)))
                        .saturating_add(body.bit_len()),
                    2 + body.symbol_count(),
                )
            }
        };
        let e = Expr(Arc::new(Node {
            kind: kind.clone(),
            noemata: noemata.into_boxed_slice(),
            bits,
            symbols,
        }));
        table.insert(kind, e.clone());
        e
    }

    pub fn noema(i: u64) -> Expr {
        Expr::intern(Kind::Noema(i))
    }

    pub fn alethizor() -> Expr {
        Expr::intern(Kind::Alethizor)
    }

    pub fn enumerator() -> Expr {
        Expr::intern(Kind::Enumerator)
    }

    /// `↓lr` on terms.
    ///
    /// # Panics
    /// If either operand is a formula.
    pub fn joint_term(l: Expr, r: Expr) -> Expr {
        assert!(l.is_term() && r.is_term(), "joint term needs term operands");
        Expr::intern(Kind::JointTerm(l, r))
    }

    /// `{v_binder | body}`.
    pub fn abstraction(binder: u64, body: Expr) -> Expr {
        assert!(body.is_formula(), "abstraction body must be a formula");
        Expr::intern(Kind::Abstraction(binder, body))
    }

    /// The atomic formula `ba`, i.e. `a ∈ b`.
    pub fn atom(b: Expr, a: Expr) -> Expr {
        assert!(b.is_term() && a.is_term(), "atom needs term operands");
        Expr::intern(Kind::Atom(b, a))
    }

    /// Convenience for `a ∈ b` written in reading order.
    pub fn member(a: Expr, b: Expr) -> Expr {
        Expr::atom(b, a)
    }

    /// `↓AB` on formulas.
    pub fn joint_formula(l: Expr, r: Expr) -> Expr {
        assert!(
            l.is_formula() && r.is_formula(),
            "joint formula needs formula operands"
        );
        Expr::intern(Kind::JointFormula(l, r))
    }

    pub fn universal(binder: u64, body: Expr) -> Expr {
        assert!(body.is_formula(), "universal body must be a formula");
        Expr::intern(Kind::Universal(binder, body))
    }

    pub fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn category(&self) -> Category {
        match self.kind() {
            Kind::Atom(..) | Kind::JointFormula(..) | Kind::Universal(..) => Category::Formula,
            _ => Category::Term,
        }
    }

    pub fn is_term(&self) -> bool {
        self.category() == Category::Term
    }

    pub fn is_formula(&self) -> bool {
        self.category() == Category::Formula
    }

    /// ℵ(e): the noemata present in the expression, ascending.
    pub fn noemata(&self) -> &[u64] {
        &self.0.noemata
    }

    pub fn has_noema(&self, u: u64) -> bool {
        self.0.noemata.binary_search(&u).is_ok()
    }

    /// No noema present.
    pub fn is_closed(&self) -> bool {
        self.0.noemata.is_empty()
    }

    /// Length of the austere string, i.e. l(value).
    pub fn bit_len(&self) -> u64 {
        self.0.bits
    }

    pub fn symbol_count(&self) -> u64 {
        self.0.symbols
    }

    pub fn ptr_eq(&self, other: &Expr) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Address used as a cheap identity key inside a single process.
    pub fn addr(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Symbol sequence of the flattened formation.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.symbol_count() as usize);
        self.push_symbols(&mut out);
        out
    }

    fn push_symbols(&self, out: &mut Vec<Symbol>) {
        match self.kind() {
            Kind::Noema(i) => out.push(Symbol::noema(*i)),
            Kind::Alethizor => out.push(Symbol::ALETHIZOR),
            Kind::Enumerator => out.push(Symbol::ENUMERATOR),
            Kind::JointTerm(l, r) | Kind::JointFormula(l, r) => {
                out.push(Symbol::NORIFYER);
                l.push_symbols(out);
                r.push_symbols(out);
            }
            Kind::Atom(b, a) => {
                b.push_symbols(out);
                a.push_symbols(out);
            }
            Kind::Abstraction(y, body) => {
                out.push(Symbol::SORTIFIER);
                out.push(Symbol::noema(*y));
                body.push_symbols(out);
            }
            Kind::Universal(y, body) => {
                out.push(Symbol::UNIVERSALIZOR);
                out.push(Symbol::noema(*y));
                body.push_symbols(out);
            }
        }
    }

    /// The formation as a number (bar = 1, dot = 0).
    pub fn value(&self) -> BigUint {
        super::Formation::from_symbols(self.symbols())
            .expect("expressions are nonempty")
            .value()
    }

    /// Direct subexpressions in written order.
    pub fn children(&self) -> Vec<Expr> {
        match self.kind() {
            Kind::Noema(_) | Kind::Alethizor | Kind::Enumerator => vec![],
            Kind::JointTerm(l, r) | Kind::JointFormula(l, r) | Kind::Atom(l, r) => {
                vec![l.clone(), r.clone()]
            }
            Kind::Abstraction(_, b) | Kind::Universal(_, b) => vec![b.clone()],
        }
    }

    /// True when `T` or `€` occurs anywhere.
    pub fn mentions_sort_constant(&self) -> bool {
        match self.kind() {
            Kind::Alethizor | Kind::Enumerator => true,
            Kind::Noema(_) => false,
            _ => self.children().iter().any(Expr::mentions_sort_constant),
        }
    }

    /// Every closed term occurring in the expression (including itself),
    /// parents before children, without duplicates.
    pub fn closed_subterms(&self) -> Vec<Expr> {
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        fn walk(e: &Expr, out: &mut Vec<Expr>, seen: &mut std::collections::HashSet<usize>) {
            if !seen.insert(e.addr()) {
                return;
            }
            if e.is_term() && e.is_closed() {
                out.push(e.clone());
            }
            for c in e.children() {
                walk(&c, out, seen);
            }
        }
        walk(self, &mut out, &mut seen);
        out
    }

    fn rank(&self) -> u8 {
        match self.kind() {
            Kind::Noema(_) => 0,
            Kind::Alethizor => 1,
            Kind::Enumerator => 2,
            Kind::JointTerm(..) => 3,
            Kind::Abstraction(..) => 4,
            Kind::Atom(..) => 5,
            Kind::JointFormula(..) => 6,
            Kind::Universal(..) => 7,
        }
    }
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for Expr {}

impl Hash for Expr {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.addr().hash(state)
    }
}

/// Structural order, independent of allocation order.
impl Ord for Expr {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.ptr_eq(other) {
            return Ordering::Equal;
        }
        self.rank()
            .cmp(&other.rank())
            .then_with(|| match (self.kind(), other.kind()) {
                (Kind::Noema(a), Kind::Noema(b)) => a.cmp(b),
                (Kind::Abstraction(y, a), Kind::Abstraction(z, b))
                | (Kind::Universal(y, a), Kind::Universal(z, b)) => y.cmp(z).then_with(|| a.cmp(b)),
                (Kind::JointTerm(a, b), Kind::JointTerm(c, d))
                | (Kind::Atom(a, b), Kind::Atom(c, d))
                | (Kind::JointFormula(a, b), Kind::JointFormula(c, d)) => {
                    a.cmp(c).then_with(|| b.cmp(d))
                }
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Expr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expr({})", super::print(self, super::Form::Presentable))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print(self, super::Form::Presentable))
    }
}
