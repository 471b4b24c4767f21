use std::fmt;

use serde::{Serialize, Serializer};

/// The lookback atoms' truth values at one stage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State {
    words: Vec<u64>,
    len: usize,
}

impl State {
    pub fn zero(len: usize) -> State {
        State {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count_true(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Liminf over an eventual cycle: an atom holds at the limit iff it holds
/// at every state of the cycle.
pub fn limit(history: &[State]) -> State {
    let mut out = history[0].clone();
    for s in &history[1..] {
        for (w, x) in out.words.iter_mut().zip(&s.words) {
            *w &= x;
        }
    }
    out
}

/// The ordinal ω·block + offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StageIndex {
    pub block: u64,
    pub offset: u64,
}

impl StageIndex {
    pub fn new(block: u64, offset: u64) -> StageIndex {
        StageIndex { block, offset }
    }
}

impl fmt::Display for StageIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.block, self.offset) {
            (0, b) => write!(f, "{b}"),
            (1, 0) => write!(f, "ω"),
            (1, b) => write!(f, "ω+{b}"),
            (a, 0) => write!(f, "ω·{a}"),
            (a, b) => write!(f, "ω·{a}+{b}"),
        }
    }
}

impl Serialize for StageIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinal_display() {
        assert_eq!(StageIndex::new(0, 3).to_string(), "3");
        assert_eq!(StageIndex::new(1, 0).to_string(), "ω");
        assert_eq!(StageIndex::new(2, 1).to_string(), "ω·2+1");
        assert!(StageIndex::new(0, 900) < StageIndex::new(1, 0));
    }

    #[test]
    fn limit_keeps_stable_atoms() {
        let mut a = State::zero(3);
        a.set(0, true);
        a.set(1, true);
        let mut b = State::zero(3);
        b.set(0, true);
        let l = limit(&[a.clone(), b]);
        assert!(l.get(0) && !l.get(1) && !l.get(2));
        assert_eq!(limit(&[a.clone()]), a);
    }
}
