//! The numeral coding ⌜n⌝ of naturals as £ terms.
//!
//! Codes grow about sixfold per successor, so a [`CodeDag`] is kept lazy:
//! it records its source and exact bit length and unfolds into a shared
//! expression or a materialized number only on request.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::codec;
use crate::error::{Error, Result};
use crate::syntax::{Expr, Kind, Sugar, View};

/// Symbols of ⌜0⌝, as subscripts `k` of `|_k`.
pub const ZERO_SYMBOLS: [u64; 21] = [
    0, 5, 1, 6, 2, 2, 2, 6, 5, 6, 5, 6, 5, 2, 2, 6, 5, 6, 5, 6, 5,
];
/// Fixed symbols of the successor case around its two `⌜n⌝ |_5 △` groups.
pub const SUCC_OPEN: [u64; 4] = [0, 5, 2, 2];
pub const SUCC_AFTER_CODE: [u64; 1] = [5];
pub const SUCC_MIDDLE: [u64; 1] = [2];
/// △ is `DELTA_HEAD ⌜n⌝ DELTA_TAIL ⌜n⌝`.
pub const DELTA_HEAD: [u64; 10] = [1, 5, 2, 2, 2, 5, 6, 5, 6, 5];
pub const DELTA_TAIL: [u64; 7] = [2, 2, 5, 6, 5, 6, 5];

// Sources above this keep no exact bit length: 6^n has ~2.6n bits.
const EXACT_LENGTH_CAP: u64 = 1 << 16;
// Deepest numeral unfolded into an expression DAG.
const UNFOLD_CAP: u64 = 1 << 14;

fn bits_of(symbols: &[u64]) -> u64 {
    symbols.iter().map(|k| k + 1).sum()
}

/// L(0): bit length of ⌜0⌝.
pub fn base_length() -> u64 {
    bits_of(&ZERO_SYMBOLS)
}

/// Bits of the successor case not belonging to the six inner copies of ⌜n⌝.
pub fn successor_overhead() -> u64 {
    let wrapper = bits_of(&SUCC_OPEN) + 2 * bits_of(&SUCC_AFTER_CODE) + bits_of(&SUCC_MIDDLE);
    wrapper + 2 * delta_overhead()
}

pub fn wrapper_overhead() -> u64 {
    successor_overhead() - 2 * delta_overhead()
}

pub fn delta_overhead() -> u64 {
    bits_of(&DELTA_HEAD) + bits_of(&DELTA_TAIL)
}

/// L(n) in closed form: L(n) = (6^n·(5·L₀ + C) − C) / 5.
pub fn code_length(n: u64) -> BigUint {
    let l0 = BigUint::from(base_length());
    let c = BigUint::from(successor_overhead());
    let p = BigUint::from(6u8).pow(n as u32);
    (p * (&l0 * 5u8 + &c) - c) / 5u8
}

/// Lazy code ⌜n⌝.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeDag {
    source: BigUint,
    bit_length: Option<BigUint>,
}

/// One layer of a code: the base numeral or a successor over a smaller code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeNode {
    Zero,
    Successor(CodeDag),
}

pub fn goedel_code(n: &BigUint) -> CodeDag {
    let bit_length = n
        .to_u64()
        .filter(|&k| k <= EXACT_LENGTH_CAP)
        .map(code_length);
    CodeDag {
        source: n.clone(),
        bit_length,
    }
}

/// ⌜e⌝⌜⌢⌝⌜f⌝ = ⌜e⌢f⌝.
pub fn code_concat(e: &BigUint, f: &BigUint) -> Result<CodeDag> {
    Ok(goedel_code(&codec::concat(e, f)?))
}

impl CodeDag {
    pub fn source(&self) -> &BigUint {
        &self.source
    }

    /// Exact bit length, unless the source is too large for it to be
    /// written down.
    pub fn bit_length(&self) -> Option<&BigUint> {
        self.bit_length.as_ref()
    }

    pub fn node(&self) -> CodeNode {
        if self.source.is_zero() {
            CodeNode::Zero
        } else {
            CodeNode::Successor(goedel_code(&(&self.source - 1u8)))
        }
    }

    /// The exact bit length, or a lower bound for it when none is kept.
    pub fn required_bits(&self) -> BigUint {
        self.bit_length
            .clone()
            .unwrap_or_else(|| code_length(EXACT_LENGTH_CAP))
    }

    /// The code as a number, when it fits within `budget_bits`.
    pub fn materialize(&self, budget_bits: u64) -> Result<BigUint> {
        let required = self.required_bits();
        if self.bit_length.is_none() || required > BigUint::from(budget_bits) {
            return Err(Error::BudgetExceeded {
                required,
                budget: budget_bits,
            });
        }
        let n = self.source.to_u64().expect("bounded by the budget check");
        let pack = |acc: BigUint, symbols: &[u64]| {
            symbols
                .iter()
                .fold(acc, |acc, &k| (acc << (k + 1)) | (BigUint::one() << k))
        };
        let append = |acc: BigUint, code: &BigUint, len: u64| (acc << len) | code;
        let mut code = pack(BigUint::zero(), &ZERO_SYMBOLS);
        let mut len = base_length();
        for _ in 0..n {
            let delta = {
                let d = pack(BigUint::zero(), &DELTA_HEAD);
                let d = append(d, &code, len);
                let d = pack(d, &DELTA_TAIL);
                append(d, &code, len)
            };
            let dlen = delta_overhead() + 2 * len;
            let mut next = pack(BigUint::zero(), &SUCC_OPEN);
            next = append(next, &code, len);
            next = pack(next, &SUCC_AFTER_CODE);
            next = append(next, &delta, dlen);
            next = pack(next, &SUCC_MIDDLE);
            next = append(next, &code, len);
            next = pack(next, &SUCC_AFTER_CODE);
            next = append(next, &delta, dlen);
            code = next;
            len = successor_overhead() + 6 * len;
        }
        Ok(code)
    }

    /// The code as a shared expression DAG; `None` when the numeral is too
    /// deep to unfold.
    pub fn as_expr(&self) -> Option<Expr> {
        let n = self.source.to_u64().filter(|&k| k <= UNFOLD_CAP)?;
        Some((0..n).fold(zero_numeral(), |inner, _| successor_numeral(&inner)))
    }
}

/// ⌜0⌝ = {v0 | ∀v1(v0 ∈ v1 → v0 ∈ v1)}.
pub fn zero_numeral() -> Expr {
    let a = Expr::atom(Expr::noema(1), Expr::noema(0));
    Expr::abstraction(0, Expr::universal(1, Sugar::implies(a.clone(), a)))
}

/// ⌜n+1⌝ = {v0 | v0 ∈ ⌜n⌝ ∨ ∀v0(v1 ∈ v0 → ⌜n⌝ ∈ v0)}, the second disjunct
/// being △.
pub fn successor_numeral(inner: &Expr) -> Expr {
    let v0 = Expr::noema(0);
    let delta = Expr::universal(
        0,
        Sugar::implies(
            Expr::atom(v0.clone(), Expr::noema(1)),
            Expr::atom(v0.clone(), inner.clone()),
        ),
    );
    Expr::abstraction(0, Sugar::or(Expr::atom(inner.clone(), v0), delta))
}

/// Recognizes an expression built by [`zero_numeral`]/[`successor_numeral`]
/// and returns its source.
pub fn numeral_value(e: &Expr) -> Option<u64> {
    let mut cur = e.clone();
    let mut n = 0u64;
    let zero = zero_numeral();
    loop {
        if cur == zero {
            return Some(n);
        }
        let inner = match cur.kind() {
            Kind::Abstraction(0, body) => match View::of(body) {
                View::Or(a, _) => match a.kind() {
                    Kind::Atom(b, _) => b.clone(),
                    _ => return None,
                },
                _ => return None,
            },
            _ => return None,
        };
        if successor_numeral(&inner) != cur {
            return None;
        }
        cur = inner;
        n += 1;
    }
}

/// The commonly quoted size of ⌜0⌝ is about 2^111; the symbol count above
/// gives 2^108 ≤ ⌜0⌝ < 2^109.
pub const QUOTED_ESTIMATE_EXPONENT: u64 = 111;
