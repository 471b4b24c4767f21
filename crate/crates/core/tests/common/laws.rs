//! Stagewise semantic laws checked from the recorded words alone.

use std::collections::HashSet;

use libra_core::engine::{BlockWord, IdentityMode, StageIndex, StageTrace};
use libra_core::syntax::Sugar;
use libra_core::{Expr, Kind, Result};

use super::replace;

#[derive(Debug, Default)]
pub struct Laws {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Laws {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn merge(mut self, other: Laws) -> Laws {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        self
    }
}

fn seq(w: &BlockWord) -> Vec<bool> {
    w.bits().collect()
}

/// At stage 0 every identity between universe terms holds and every
/// membership in an abstraction fails.
pub fn stage_zero(t: &StageTrace) -> Result<Laws> {
    let mut laws = Laws::default();
    let zero = StageIndex::new(0, 0);
    let u = t.universe();
    for a in &u {
        for b in &u {
            let id = Sugar::identity(a.clone(), b.clone());
            laws.expect(t.value_at(&id, zero)?, || format!("stage 0 falsifies {id}"));
            if matches!(b.kind(), Kind::Abstraction(..)) {
                let m = Sugar::member(a.clone(), b.clone());
                laws.expect(!t.value_at(&m, zero)?, || format!("stage 0 verifies {m}"));
            }
        }
    }
    Ok(laws)
}

/// Same-stage clauses for every subformula reachable from the tracked
/// sentences, and the successor and limit rules for every lookback atom.
pub fn progression(t: &StageTrace) -> Result<Laws> {
    let (registry, mode, euro) =
        t.with_fragment(|f| (f.registry().to_vec(), f.identity_mode(), f.euro_enabled()));
    let ctx = Ctx {
        t,
        universe: t.universe(),
        registry,
        structural: mode == IdentityMode::Structural,
        euro,
    };
    let mut laws = Laws::default();
    let mut seen = HashSet::new();
    for a in t.tracked() {
        ctx.visit(&a, &mut seen, &mut laws)?;
    }
    Ok(laws)
}

struct Ctx<'a> {
    t: &'a StageTrace,
    universe: Vec<Expr>,
    registry: Vec<(Expr, Expr)>,
    structural: bool,
    euro: bool,
}

impl Ctx<'_> {
    fn words(&self, e: &Expr) -> Result<Vec<Vec<bool>>> {
        Ok(self.t.words(e)?.iter().map(seq).collect())
    }

    fn same_stage(
        &self,
        e: &Expr,
        parts: &[Expr],
        f: impl Fn(&[bool]) -> bool,
        laws: &mut Laws,
    ) -> Result<()> {
        let whole = self.words(e)?;
        let parts: Vec<Vec<Vec<bool>>> =
            parts.iter().map(|p| self.words(p)).collect::<Result<_>>()?;
        for (b, w) in whole.iter().enumerate() {
            for (i, &v) in w.iter().enumerate() {
                let args: Vec<bool> = parts.iter().map(|p| p[b][i]).collect();
                laws.expect(v == f(&args), || {
                    format!("{e} at {}", StageIndex::new(b as u64, i as u64))
                });
            }
        }
        Ok(())
    }

    fn lookback(&self, atom: &Expr, body: &Expr, laws: &mut Laws) -> Result<()> {
        let words = self.t.words(atom)?;
        let bodies = self.t.words(body)?;
        let mut opening = false;
        for (b, (w, d)) in words.iter().zip(&bodies).enumerate() {
            let (a, d2) = (seq(w), seq(d));
            let at = |i: usize| StageIndex::new(b as u64, i as u64);
            laws.expect(a[0] == opening, || {
                format!("{atom} at the opening {}", at(0))
            });
            for i in 1..a.len() {
                laws.expect(a[i] == d2[i - 1], || {
                    format!("{atom} at {} against its body", at(i))
                });
            }
            if !w.cycle.is_empty() {
                let cs = w.transient.len();
                laws.expect(a[cs] == d2[a.len() - 1], || {
                    format!("{atom} where block {b} cycles")
                });
            }
            opening = d.cycle.iter().all(|&x| x) && !d.cycle.is_empty();
        }
        Ok(())
    }

    fn visit(&self, e: &Expr, seen: &mut HashSet<Expr>, laws: &mut Laws) -> Result<()> {
        if !seen.insert(e.clone()) {
            return Ok(());
        }
        let mut next = Vec::new();
        match e.kind() {
            Kind::JointFormula(l, r) => {
                self.same_stage(e, &[l.clone(), r.clone()], |v| !v[0] && !v[1], laws)?;
                next.extend([l.clone(), r.clone()]);
            }
            Kind::Universal(y, body) => {
                let instances: Vec<Expr> = if body.has_noema(*y) {
                    self.universe.iter().map(|a| replace(a, *y, body)).collect()
                } else if self.universe.is_empty() {
                    Vec::new()
                } else {
                    vec![body.clone()]
                };
                self.same_stage(e, &instances, |v| v.iter().all(|&x| x), laws)?;
                next.extend(instances);
            }
            Kind::Atom(b, a) => match b.kind() {
                Kind::JointTerm(c, d) => {
                    let parts = [
                        Sugar::member(a.clone(), c.clone()),
                        Sugar::member(a.clone(), d.clone()),
                    ];
                    self.same_stage(e, &parts, |v| !v[0] && !v[1], laws)?;
                    next.extend(parts);
                }
                Kind::Abstraction(u, body) => {
                    let inst = if body.has_noema(*u) {
                        replace(a, *u, body)
                    } else {
                        body.clone()
                    };
                    self.lookback(e, &inst, laws)?;
                    next.push(inst);
                }
                Kind::Alethizor if self.structural => {
                    let parts: Vec<Expr> = self
                        .registry
                        .iter()
                        .filter(|(t, _)| t == a)
                        .map(|(_, s)| Sugar::truth(s.clone()))
                        .collect();
                    self.same_stage(e, &parts, |v| v.iter().any(|&x| x), laws)?;
                    next.extend(parts);
                }
                Kind::Enumerator if !self.euro => self.same_stage(e, &[], |_| false, laws)?,
                _ => {}
            },
            _ => {}
        }
        for n in next {
            self.visit(&n, seen, laws)?;
        }
        Ok(())
    }
}

/// Negjunction completeness, maxim duality and contravalence over the
/// tracked sentences.
pub fn negation(t: &StageTrace) -> Result<Laws> {
    let mut laws = Laws::default();
    for a in t.tracked() {
        let na = Sugar::not(a.clone());
        let (wa, wn) = (t.words(&a)?, t.words(&na)?);
        for (x, y) in wa.iter().zip(&wn) {
            let exactly_one = seq(x).iter().zip(seq(y)).all(|(&p, q)| p != q);
            laws.expect(exactly_one, || {
                format!("{a} and its negjunction agree at some stage")
            });
        }
        let (va, vn) = (t.valency(&a)?, t.valency(&na)?);
        laws.expect(va.status().is_maxim() == !vn.status().is_thesis(), || {
            format!("maxim duality fails for {a}")
        });
        laws.expect(vn == va.complement(), || {
            format!("valency of the negjunction of {a} is not the complement")
        });
    }
    Ok(laws)
}

pub fn all(t: &StageTrace) -> Result<Laws> {
    Ok(progression(t)?.merge(negation(t)?))
}
