use std::fmt;

use serde::{Serialize, Serializer};

use super::state::StageIndex;

/// A sentence's truth values through one block: the transient stages, then
/// a cycle that repeats until the block's limit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BlockWord {
    pub transient: Vec<bool>,
    pub cycle: Vec<bool>,
}

fn bit_str(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl fmt::Display for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", bit_str(&self.transient), bit_str(&self.cycle))
    }
}

impl Serialize for BlockWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Shortest description of the infinite word `prefix · cycle^ω`.
fn canonical_lasso<T: Clone + PartialEq>(prefix: &[T], cycle: &[T]) -> (Vec<T>, Vec<T>) {
    let n = cycle.len();
    let period = (1..=n)
        .find(|&p| n % p == 0 && (0..n).all(|i| cycle[i] == cycle[i % p]))
        .unwrap_or(n);
    let mut cycle: Vec<T> = cycle[..period].to_vec();
    let mut prefix = prefix.to_vec();
    while let (Some(p), Some(c)) = (prefix.last(), cycle.last()) {
        if p != c {
            break;
        }
        prefix.pop();
        cycle.rotate_right(1);
    }
    (prefix, cycle)
}

impl BlockWord {
    fn zip(&self, other: &BlockWord, f: impl Fn(bool, bool) -> bool) -> BlockWord {
        let pair = |a: &[bool], b: &[bool]| a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect();
        BlockWord {
            transient: pair(&self.transient, &other.transient),
            cycle: pair(&self.cycle, &other.cycle),
        }
    }

    fn map(&self, f: impl Fn(bool) -> bool) -> BlockWord {
        BlockWord {
            transient: self.transient.iter().map(|&x| f(x)).collect(),
            cycle: self.cycle.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.transient.iter().chain(&self.cycle).copied()
    }

    pub fn canonical(&self) -> BlockWord {
        let (transient, cycle) = canonical_lasso(&self.transient, &self.cycle);
        BlockWord { transient, cycle }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    MaximThesis,
    MinorThesis,
    NonThesis,
}

impl Status {
    pub fn is_thesis(self) -> bool {
        self != Status::NonThesis
    }

    pub fn is_maxim(self) -> bool {
        self == Status::MaximThesis
    }

    pub fn is_minor(self) -> bool {
        self == Status::MinorThesis
    }

    pub fn is_stable(self) -> bool {
        self != Status::MinorThesis
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::MaximThesis => "MaximThesis",
            Status::MinorThesis => "MinorThesis",
            Status::NonThesis => "NonThesis",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub status: Status,
    pub veridic: bool,
    pub pseudic: bool,
    pub paradoxical: bool,
}

/// The least upper bound of a valency: the closure for theses, a stage
/// below it otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valor {
    Closure(StageIndex),
    Below(StageIndex),
}

impl fmt::Display for Valor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valor::Closure(i) => write!(f, "closure {i}"),
            Valor::Below(i) => write!(f, "{i}"),
        }
    }
}

impl Serialize for Valor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// 𝕍(A): one word per recorded block; blocks from `regime_start` on repeat
/// forever.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Valency {
    pub blocks: Vec<BlockWord>,
    pub regime_start: usize,
    pub closure: StageIndex,
}

impl Valency {
    pub fn new(blocks: Vec<BlockWord>, regime_start: usize, closure: StageIndex) -> Valency {
        Valency {
            blocks,
            regime_start,
            closure,
        }
    }

    fn zip(&self, other: &Valency, f: impl Fn(bool, bool) -> bool + Copy) -> Valency {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.zip(b, f))
            .collect();
        Valency {
            blocks,
            ..self.clone()
        }
    }

    /// Contravalence: the valency of ¬A.
    pub fn complement(&self) -> Valency {
        Valency {
            blocks: self.blocks.iter().map(|w| w.map(|x| !x)).collect(),
            ..self.clone()
        }
    }

    /// Ambovalence: the valency of A ∧ B.
    pub fn and(&self, other: &Valency) -> Valency {
        self.zip(other, |a, b| a && b)
    }

    /// Velvalence: the valency of A ∨ B.
    pub fn or(&self, other: &Valency) -> Valency {
        self.zip(other, |a, b| a || b)
    }

    /// Subvalence of A under B: the valency of A → B.
    pub fn implies(&self, other: &Valency) -> Valency {
        self.zip(other, |a, b| !a || b)
    }

    /// Homovalence: the valency of A ↔ B.
    pub fn iff(&self, other: &Valency) -> Valency {
        self.zip(other, |a, b| a == b)
    }

    pub fn regime(&self) -> &[BlockWord] {
        &self.blocks[self.regime_start..]
    }

    pub fn status(&self) -> Status {
        let mut bits = self.regime().iter().flat_map(BlockWord::bits);
        let first = bits.next().unwrap_or(false);
        match (first, bits.all(|b| b == first)) {
            (true, true) => Status::MaximThesis,
            (false, true) => Status::NonThesis,
            _ => Status::MinorThesis,
        }
    }

    pub fn is_thesis(&self) -> bool {
        self.status().is_thesis()
    }

    pub fn classification(&self) -> Classification {
        let status = self.status();
        Classification {
            status,
            veridic: status == Status::MaximThesis,
            pseudic: status == Status::NonThesis,
            paradoxical: status == Status::MinorThesis,
        }
    }

    pub fn valor(&self) -> Valor {
        if self.is_thesis() {
            return Valor::Closure(self.closure);
        }
        let mut best = StageIndex::default();
        for (b, w) in self.blocks.iter().enumerate() {
            if w.cycle.iter().any(|&x| x) {
                best = best.max(StageIndex::new(b as u64 + 1, 0));
            } else if let Some(t) = w.transient.iter().rposition(|&x| x) {
                best = best.max(StageIndex::new(b as u64, t as u64));
            }
        }
        Valor::Below(best)
    }

    /// Canonical description of the stage set, comparable across traces.
    pub fn canonical(&self) -> (Vec<BlockWord>, Vec<BlockWord>) {
        let words: Vec<BlockWord> = self.blocks.iter().map(BlockWord::canonical).collect();
        canonical_lasso(&words[..self.regime_start], &words[self.regime_start..])
    }

    /// Whether both valencies are the same set of stages.
    pub fn same_stages(&self, other: &Valency) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_empty_in_regime(&self) -> bool {
        self.regime().iter().flat_map(BlockWord::bits).all(|b| !b)
    }
}

/// Valency relations between two sentences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relations {
    pub parivalent: bool,
    pub altervalent: bool,
    pub contravalent: bool,
    pub ambovalence: Vec<BlockWord>,
    pub velvalence: Vec<BlockWord>,
    pub subvalence: Vec<BlockWord>,
    pub homovalence: Vec<BlockWord>,
    pub paridictive: bool,
    pub contradictive: bool,
    pub complementary: bool,
    pub connected: bool,
}

impl Relations {
    pub fn of(a: &Valency, b: &Valency) -> Relations {
        let parivalent = a.same_stages(b);
        let contravalent = a.complement().same_stages(b);
        let paridictive = a.valor() == b.valor();
        let ambo = a.and(b);
        let connected = !(a.is_thesis() && b.is_thesis()) || ambo.is_thesis();
        Relations {
            parivalent,
            altervalent: !parivalent,
            contravalent,
            ambovalence: ambo.blocks,
            velvalence: a.or(b).blocks,
            subvalence: a.implies(b).blocks,
            homovalence: a.iff(b).blocks,
            paridictive,
            contradictive: contravalent && !paridictive,
            complementary: contravalent && paridictive,
            connected,
        }
    }
}
