//! The numeral coding recursion transcribed as bare strings.

use libra_core::syntax::Formation;

pub const ZERO: &str = "|₀|₅|₁|₆|₂|₂|₂|₆|₅|₆|₅|₆|₅|₂|₂|₆|₅|₆|₅|₆|₅";
pub const DELTA_HEAD: &str = "|₁|₅|₂|₂|₂|₅|₆|₅|₆|₅";
pub const DELTA_TAIL: &str = "|₂|₂|₅|₆|₅|₆|₅";

pub fn subscripts(bare: &str) -> Vec<u64> {
    Formation::parse_text(bare)
        .unwrap()
        .symbols()
        .iter()
        .map(|s| s.0)
        .collect()
}

pub fn oracle_code(n: u32) -> Vec<u64> {
    if n == 0 {
        return subscripts(ZERO);
    }
    let inner = oracle_code(n - 1);
    let delta: Vec<u64> = [
        subscripts(DELTA_HEAD),
        inner.clone(),
        subscripts(DELTA_TAIL),
        inner.clone(),
    ]
    .concat();
    [
        subscripts("|₀|₅|₂|₂"),
        inner.clone(),
        subscripts("|₅"),
        delta.clone(),
        subscripts("|₂"),
        inner,
        subscripts("|₅"),
        delta,
    ]
    .concat()
}
