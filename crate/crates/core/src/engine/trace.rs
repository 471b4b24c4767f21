use std::collections::HashMap;
use std::sync::RwLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::syntax::{Expr, Kind, Sugar};

use super::fragment::{Fragment, GateId};
use super::spec::Budget;
use super::state::{limit, StageIndex, State};
use super::valency::{BlockWord, Classification, Relations, Valency, Valor};

/// One ω-block: the states from its opening until the first repeat.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    /// Index of the opening state among all recorded states.
    pub start: usize,
    pub len: usize,
    /// Offset at which the eventual cycle begins; `None` when the step
    /// budget ran out first.
    pub cycle_start: Option<usize>,
}

impl Block {
    fn global(&self, offset: u64) -> usize {
        let cs = self.cycle_start.unwrap_or(0);
        let offset = offset as usize;
        if offset < self.len {
            self.start + offset
        } else {
            let period = self.len - cs;
            self.start + cs + (offset - cs) % period
        }
    }
}

/// The opening of block `block` repeats the opening of block `repeats`;
/// blocks `repeats..block` form the repeating regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Closure {
    pub block: usize,
    pub repeats: usize,
}

impl Closure {
    pub fn index(&self) -> StageIndex {
        StageIndex::new(self.block as u64, 0)
    }
}

struct Evaluated {
    fragment: Fragment,
    values: Vec<Vec<bool>>,
}

/// A recorded revision sequence with every stage's valuation.
pub struct StageTrace {
    inner: RwLock<Evaluated>,
    states: Vec<State>,
    blocks: Vec<Block>,
    closure: Option<Closure>,
    budget: Budget,
    banner: String,
}

/// Iterates successor steps block by block, opening each block with the
/// liminf of the previous block's cycle, until a block opening repeats.
/// A trace whose budget ran out has no closure.
pub fn run(fragment: Fragment, budget: Budget) -> StageTrace {
    let budget = Budget {
        max_steps_per_block: budget.max_steps_per_block.max(1),
        max_blocks: budget.max_blocks.max(1),
    };
    let mut states: Vec<State> = Vec::new();
    let mut values: Vec<Vec<bool>> = Vec::new();
    let mut blocks = Vec::new();
    let mut openings = vec![State::zero(fragment.atom_count())];
    let mut closure = None;
    for b in 0..budget.max_blocks {
        let start = states.len();
        let mut seen: HashMap<State, usize> = HashMap::new();
        let mut s = openings[b].clone();
        let mut cycle_start = None;
        for t in 0..=budget.max_steps_per_block {
            if let Some(&j) = seen.get(&s) {
                cycle_start = Some(j);
                break;
            }
            if t == budget.max_steps_per_block {
                break;
            }
            seen.insert(s.clone(), t);
            let mut v = Vec::new();
            fragment.extend_values(&s, &mut v);
            let next = fragment.step_from(&v);
            states.push(std::mem::replace(&mut s, next));
            values.push(v);
        }
        let len = states.len() - start;
        blocks.push(Block {
            start,
            len,
            cycle_start,
        });
        let Some(j) = cycle_start else { break };
        let opening = limit(&states[start + j..start + len]);
        if let Some(k) = openings.iter().position(|o| *o == opening) {
            closure = Some(Closure {
                block: b + 1,
                repeats: k,
            });
            break;
        }
        openings.push(opening);
    }
    let banner = fragment.banner();
    StageTrace {
        inner: RwLock::new(Evaluated { fragment, values }),
        states,
        blocks,
        closure,
        budget,
        banner,
    }
}

impl StageTrace {
    pub fn closure(&self) -> Option<Closure> {
        self.closure
    }

    pub fn converged(&self) -> Result<Closure> {
        self.closure.ok_or(Error::NotConverged {
            max_steps: self.budget.max_steps_per_block,
            max_blocks: self.budget.max_blocks,
        })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn banner(&self) -> &str {
        &self.banner
    }

    pub fn stage_count(&self) -> usize {
        self.states.len()
    }

    pub fn state(&self, i: usize) -> &State {
        &self.states[i]
    }

    /// Runs `f` against the compiled fragment.
    pub fn with_fragment<R>(&self, f: impl FnOnce(&Fragment) -> R) -> R {
        f(&self
            .inner
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .fragment)
    }

    pub fn universe(&self) -> Vec<Expr> {
        self.with_fragment(|f| f.universe().to_vec())
    }

    pub fn tracked(&self) -> Vec<Expr> {
        self.with_fragment(|f| f.tracked().to_vec())
    }

    pub fn declared(&self) -> Vec<Expr> {
        self.with_fragment(|f| f.declared().to_vec())
    }

    fn gate(&self, a: &Expr) -> Result<GateId> {
        {
            let inner = self.inner.read().unwrap_or_else(|e| e.into_inner());
            let resolved = inner.fragment.resolve(a)?;
            if let Some(g) = inner.fragment.lookup(&resolved) {
                if (g as usize) < inner.values.first().map_or(usize::MAX, Vec::len) {
                    return Ok(g);
                }
            }
        }
        let mut inner = self.inner.write().unwrap_or_else(|e| e.into_inner());
        let Evaluated { fragment, values } = &mut *inner;
        let g = fragment.gate_for(a)?;
        let frag = &*fragment;
        values
            .par_iter_mut()
            .zip(self.states.par_iter())
            .for_each(|(v, s)| frag.extend_values(s, v));
        Ok(g)
    }

    fn bits(&self, g: GateId) -> Vec<bool> {
        let inner = self.inner.read().unwrap_or_else(|e| e.into_inner());
        inner.values.iter().map(|v| v[g as usize]).collect()
    }

    /// Raw per-block words of `a`, available on partial traces too.
    pub fn words(&self, a: &Expr) -> Result<Vec<BlockWord>> {
        let bits = self.bits(self.gate(a)?);
        Ok(self
            .blocks
            .iter()
            .map(|b| {
                let cs = b.cycle_start.unwrap_or(b.len);
                BlockWord {
                    transient: bits[b.start..b.start + cs].to_vec(),
                    cycle: bits[b.start + cs..b.start + b.len].to_vec(),
                }
            })
            .collect())
    }

    /// The truth value of `a` at a recorded stage.
    pub fn value_at(&self, a: &Expr, at: StageIndex) -> Result<bool> {
        let block = self
            .blocks
            .get(at.block as usize)
            .filter(|b| b.cycle_start.is_some() || (at.offset as usize) < b.len)
            .ok_or_else(|| Error::Invalid(format!("stage {at} was not recorded")))?;
        let g = self.gate(a)?;
        let inner = self.inner.read().unwrap_or_else(|e| e.into_inner());
        Ok(inner.values[block.global(at.offset)][g as usize])
    }

    /// 𝕍(a) over the recorded blocks, with the repeating regime marked.
    pub fn valency(&self, a: &Expr) -> Result<Valency> {
        let closure = self.converged()?;
        Ok(Valency::new(
            self.words(a)?,
            closure.repeats,
            closure.index(),
        ))
    }

    pub fn classify(&self, a: &Expr) -> Result<Classification> {
        Ok(self.valency(a)?.classification())
    }

    pub fn valor(&self, a: &Expr) -> Result<Valor> {
        Ok(self.valency(a)?.valor())
    }

    pub fn relations(&self, a: &Expr, b: &Expr) -> Result<Relations> {
        Ok(Relations::of(&self.valency(a)?, &self.valency(b)?))
    }

    /// Whether every membership question `x ∈ a`, x in the universe, is
    /// stable over the regime.
    pub fn kind(&self, a: &Expr) -> Result<bool> {
        let a = self.with_fragment(|f| f.resolve(a))?;
        if !a.is_term() || !self.with_fragment(|f| f.in_universe(&a)) {
            return Err(Error::UnresolvedTerm(a.to_string()));
        }
        for x in self.universe() {
            if !self
                .valency(&Sugar::member(x, a.clone()))?
                .status()
                .is_stable()
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Universe terms that are abstractions.
    pub fn abstractions(&self) -> Vec<Expr> {
        self.universe()
            .into_iter()
            .filter(|t| matches!(t.kind(), Kind::Abstraction(..)))
            .collect()
    }
}
