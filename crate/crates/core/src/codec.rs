//! Formations read as binary numerals: a bar is 1, a dot is 0.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::syntax::{Formation, Symbol};

pub fn value_of(f: &Formation) -> BigUint {
    f.value()
}

/// Inverse of [`value_of`]: each maximal `1 0…0` block is one symbol.
pub fn formation_of(n: &BigUint) -> Result<Formation> {
    if n.is_zero() {
        return Err(Error::ZeroNotFormation);
    }
    let mut symbols = Vec::with_capacity(n.count_ones() as usize);
    // walk set bits upward; each closes a symbol of the dots below it
    let mut next = 0u64;
    for (d, word) in n.iter_u64_digits().enumerate() {
        let mut w = word;
        while w != 0 {
            let pos = d as u64 * 64 + w.trailing_zeros() as u64;
            symbols.push(Symbol(pos - next));
            next = pos + 1;
            w &= w - 1;
        }
    }
    symbols.reverse();
    Formation::from_symbols(symbols)
}

/// l(n) = μy(2^y > n).
pub fn length(n: &BigUint) -> u64 {
    n.bits()
}

/// m⌢n = m·2^{l(n)} + n.
pub fn concat(m: &BigUint, n: &BigUint) -> Result<BigUint> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::ZeroOperand);
    }
    Ok((m << length(n)) + n)
}

/// Reads a decimal number, `0x` hexadecimal, or an austere/bare formation.
pub fn read_number(text: &str) -> Result<BigUint> {
    let t = text.trim();
    if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        return BigUint::parse_bytes(hex.as_bytes(), 16)
            .ok_or_else(|| Error::Invalid(format!("bad hexadecimal: {t}")));
    }
    if !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) {
        return BigUint::parse_bytes(t.as_bytes(), 10)
            .ok_or_else(|| Error::Invalid(format!("bad decimal: {t}")));
    }
    Ok(Formation::parse_text(t)?.value())
}
