use std::collections::HashMap;

use crate::enumeration::cached_prefix;
use crate::error::{Error, Result};
use crate::goedel::goedel_code;
use crate::syntax::{
    print, read, substitutable, substitute, substitute_all, Expr, Form, Kind, ParseMode, Sugar,
};

use super::spec::{Budget, FragmentSpec, IdentityMode};
use super::state::State;

pub(crate) type GateId = u32;

/// Most lookback atoms a fragment may grow to while instances are closed.
pub const ATOM_LIMIT: usize = 50_000;

#[derive(Debug, Clone)]
pub(crate) enum Gate {
    Const(bool),
    Atom(u32),
    Nor(GateId, GateId),
    All(Vec<GateId>),
    Any(Vec<GateId>),
}

/// A membership `a ∈ {u|A}` whose truth looks back over earlier stages.
/// Abstractions whose binder is absent from the body share one atom.
#[derive(Debug, Clone)]
pub struct LookbackAtom {
    pub member: Option<Expr>,
    pub set: Expr,
    body: GateId,
}

/// A finite fragment of £ compiled into a circuit: every tracked sentence
/// is a gate over the lookback atoms, and every atom's defining body is a
/// gate too. Quantifiers range over the fragment universe.
#[derive(Debug, Clone)]
pub struct Fragment {
    universe: Vec<Expr>,
    registry: Vec<(Expr, Expr)>,
    declared: Vec<Expr>,
    tracked: Vec<Expr>,
    aliases: Vec<Expr>,
    pairs: Vec<Expr>,
    euro_enabled: bool,
    identity_mode: IdentityMode,
    budget: Budget,
    gates: Vec<Gate>,
    memo: HashMap<Expr, GateId>,
    atoms: Vec<LookbackAtom>,
    atom_index: HashMap<(Expr, Option<Expr>), u32>,
    pending: Vec<(u32, Expr)>,
    frozen: bool,
}

impl Fragment {
    pub fn build(spec: &FragmentSpec) -> Result<Fragment> {
        Fragment::build_with(spec, &[])
    }

    /// Builds the fragment and additionally tracks `extra` sentences. Extra
    /// sentences never widen the quantifier domain.
    pub fn build_with(spec: &FragmentSpec, extra: &[Expr]) -> Result<Fragment> {
        let aliases = if spec.enum_prefix_size > 0 {
            cached_prefix(spec.enum_prefix_size)?
                .entries
                .into_iter()
                .map(|e| e.term)
                .collect()
        } else {
            Vec::new()
        };
        let mut f = Fragment {
            universe: Vec::new(),
            registry: Vec::new(),
            declared: Vec::new(),
            tracked: Vec::new(),
            aliases,
            pairs: Vec::new(),
            euro_enabled: spec.euro_enabled,
            identity_mode: spec.identity_mode,
            budget: spec.budget,
            gates: Vec::new(),
            memo: HashMap::new(),
            atoms: Vec::new(),
            atom_index: HashMap::new(),
            pending: Vec::new(),
            frozen: false,
        };
        let mut seen = HashMap::new();
        let mut add_subterms = |f: &mut Fragment, e: &Expr| {
            for t in e.closed_subterms() {
                if seen.insert(t.clone(), ()).is_none() {
                    f.universe.push(t);
                }
            }
        };
        for text in &spec.terms {
            let t = f.resolve(&read(text, ParseMode::Term)?.expr)?;
            add_subterms(&mut f, &t);
        }
        for entry in &spec.registry {
            let t = f.resolve(&read(&entry.term, ParseMode::Term)?.expr)?;
            let a = f.resolve(&read(&entry.formula, ParseMode::Formula)?.expr)?;
            if let Some((_, prior)) = f.registry.iter().find(|(u, _)| *u == t) {
                if *prior != a {
                    return Err(Error::Invalid(format!(
                        "registry term {t} codes two sentences"
                    )));
                }
                continue;
            }
            add_subterms(&mut f, &t);
            add_subterms(&mut f, &a);
            f.registry.push((t, a));
        }
        for text in &spec.formulas {
            let a = f.resolve(&read(text, ParseMode::Formula)?.expr)?;
            add_subterms(&mut f, &a);
            f.declared.push(a);
        }
        if f.euro_enabled {
            for (n, alias) in f.aliases.clone().into_iter().enumerate() {
                let numeral = goedel_code(&(n as u64).into())
                    .as_expr()
                    .expect("prefix sizes are small");
                let p = Sugar::pair(numeral, alias);
                add_subterms(&mut f, &p);
                f.pairs.push(p);
            }
        }

        for (_, a) in f.registry.clone() {
            f.compile(&Sugar::truth(a))?;
        }
        let universe = f.universe.clone();
        for x in &universe {
            for y in &universe {
                f.compile(&Sugar::member(x.clone(), y.clone()))?;
            }
        }
        let declared = f.declared.clone();
        for a in declared.iter().chain(extra) {
            let a = f.resolve(a)?;
            for s in [a.clone(), Sugar::not(a)] {
                if !f.tracked.contains(&s) {
                    f.compile(&s)?;
                    f.tracked.push(s);
                }
            }
        }
        f.drain()?;
        f.frozen = true;
        Ok(f)
    }

    /// Replaces free noemata by their enumeration aliases.
    pub fn resolve(&self, e: &Expr) -> Result<Expr> {
        if e.is_closed() {
            return Ok(e.clone());
        }
        let mut bindings = Vec::new();
        for &n in e.noemata() {
            let alias = usize::try_from(n)
                .ok()
                .and_then(|i| self.aliases.get(i))
                .ok_or(Error::MissingAlias(n))?;
            bindings.push((n, alias.clone()));
        }
        Ok(substitute_all(&bindings, e))
    }

    pub fn universe(&self) -> &[Expr] {
        &self.universe
    }

    pub fn declared(&self) -> &[Expr] {
        &self.declared
    }

    /// Declared and extra sentences with their negjunctions.
    pub fn tracked(&self) -> &[Expr] {
        &self.tracked
    }

    pub fn registry(&self) -> &[(Expr, Expr)] {
        &self.registry
    }

    pub fn aliases(&self) -> &[Expr] {
        &self.aliases
    }

    /// The pair terms ⟨⌜n⌝, e(n)⟩ that P7 recognizes.
    pub fn enumerated_pairs(&self) -> Result<&[Expr]> {
        if !self.euro_enabled {
            return Err(Error::EuroDisabled(
                "fragment declares euro_enabled = false".into(),
            ));
        }
        Ok(&self.pairs)
    }

    pub fn euro_enabled(&self) -> bool {
        self.euro_enabled
    }

    pub fn identity_mode(&self) -> IdentityMode {
        self.identity_mode
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn atoms(&self) -> &[LookbackAtom] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn in_universe(&self, t: &Expr) -> bool {
        self.universe.contains(t)
    }

    pub fn banner(&self) -> String {
        format!(
            "fragment-relative semantics: quantifiers range over {} terms; {} lookback atoms; identity {}; enumerator {}",
            self.universe.len(),
            self.atoms.len(),
            match self.identity_mode {
                IdentityMode::Structural => "structural",
                IdentityMode::Leibniz => "leibniz",
            },
            if self.euro_enabled { "enabled" } else { "disabled" },
        )
    }

    pub(crate) fn lookup(&self, e: &Expr) -> Option<GateId> {
        self.memo.get(e).copied()
    }

    /// Compiles a sentence after the build. Fails with `Untracked` when it
    /// would need a lookback atom the run did not follow.
    pub(crate) fn gate_for(&mut self, e: &Expr) -> Result<GateId> {
        let e = self.resolve(e)?;
        if !e.is_formula() {
            return Err(Error::NotInCategory {
                expected: "formula",
                found: e.to_string(),
            });
        }
        let g = self.compile(&e)?;
        self.drain()?;
        Ok(g)
    }

    fn push(&mut self, e: &Expr, gate: Gate) -> GateId {
        let id = self.gates.len() as GateId;
        self.gates.push(gate);
        self.memo.insert(e.clone(), id);
        id
    }

    fn drain(&mut self) -> Result<()> {
        while let Some((i, body)) = self.pending.pop() {
            let g = self.compile(&body)?;
            self.atoms[i as usize].body = g;
        }
        Ok(())
    }

    fn atom(&mut self, set: &Expr, member: Option<&Expr>, body: Expr) -> Result<u32> {
        let key = (set.clone(), member.cloned());
        if let Some(&i) = self.atom_index.get(&key) {
            return Ok(i);
        }
        if self.frozen {
            let shown = match member {
                Some(a) => Sugar::member(a.clone(), set.clone()).to_string(),
                None => set.to_string(),
            };
            return Err(Error::Untracked(shown));
        }
        if self.atoms.len() >= ATOM_LIMIT {
            return Err(Error::FragmentTooLarge { limit: ATOM_LIMIT });
        }
        let i = self.atoms.len() as u32;
        self.atoms.push(LookbackAtom {
            member: member.cloned(),
            set: set.clone(),
            body: GateId::MAX,
        });
        self.atom_index.insert(key, i);
        self.pending.push((i, body));
        Ok(i)
    }

    fn compile(&mut self, e: &Expr) -> Result<GateId> {
        if let Some(&g) = self.memo.get(e) {
            return Ok(g);
        }
        if !e.is_closed() {
            return Err(Error::UnresolvedTerm(print(e, Form::Presentable)));
        }
        let gate = match e.kind() {
            Kind::JointFormula(l, r) => {
                let l = self.compile(l)?;
                let r = self.compile(r)?;
                Gate::Nor(l, r)
            }
            Kind::Universal(y, body) => {
                if self.universe.is_empty() {
                    Gate::Const(true)
                } else if !body.has_noema(*y) {
                    let g = self.compile(body)?;
                    self.memo.insert(e.clone(), g);
                    return Ok(g);
                } else {
                    let mut parts = Vec::new();
                    for i in 0..self.universe.len() {
                        let a = self.universe[i].clone();
                        if substitutable(&a, *y, body) {
                            parts.push(self.compile(&substitute(&a, *y, body))?);
                        }
                    }
                    Gate::All(parts)
                }
            }
            Kind::Atom(b, a) => self.membership(a, b)?,
            _ => {
                return Err(Error::NotInCategory {
                    expected: "formula",
                    found: e.to_string(),
                })
            }
        };
        Ok(self.push(e, gate))
    }

    fn membership(&mut self, a: &Expr, b: &Expr) -> Result<Gate> {
        Ok(match b.kind() {
            Kind::JointTerm(c, d) => {
                let l = self.compile(&Sugar::member(a.clone(), c.clone()))?;
                let r = self.compile(&Sugar::member(a.clone(), d.clone()))?;
                Gate::Nor(l, r)
            }
            Kind::Abstraction(u, body) => {
                if !body.has_noema(*u) {
                    Gate::Atom(self.atom(b, None, body.clone())?)
                } else if !substitutable(a, *u, body) {
                    Gate::Const(false)
                } else {
                    Gate::Atom(self.atom(b, Some(a), substitute(a, *u, body))?)
                }
            }
            Kind::Alethizor => {
                let mut parts = Vec::new();
                for (t, sentence) in self.registry.clone() {
                    let truth = self.compile(&Sugar::truth(sentence))?;
                    match self.identity_mode {
                        IdentityMode::Structural => {
                            if t == *a {
                                parts.push(truth);
                            }
                        }
                        IdentityMode::Leibniz => {
                            let same = self.match_identity(a, &t)?;
                            parts.push(self.and_gate(same, truth));
                        }
                    }
                }
                Gate::Any(parts)
            }
            Kind::Enumerator => {
                if !self.euro_enabled {
                    Gate::Const(false)
                } else {
                    match self.identity_mode {
                        IdentityMode::Structural => Gate::Const(self.pairs.contains(a)),
                        IdentityMode::Leibniz => {
                            let mut parts = Vec::new();
                            for p in self.pairs.clone() {
                                parts.push(self.match_identity(a, &p)?);
                            }
                            Gate::Any(parts)
                        }
                    }
                }
            }
            _ => return Err(Error::UnresolvedTerm(print(b, Form::Presentable))),
        })
    }

    // The identity a = t inside P5/P7, with u ranging over universe terms
    // built from abstractions only, so that the test does not reenter T or €.
    fn match_identity(&mut self, a: &Expr, t: &Expr) -> Result<GateId> {
        fn lookback_only(e: &Expr) -> bool {
            match e.kind() {
                Kind::Abstraction(..) => true,
                Kind::JointTerm(c, d) => lookback_only(c) && lookback_only(d),
                _ => false,
            }
        }
        let mut parts = Vec::new();
        for i in 0..self.universe.len() {
            let u = self.universe[i].clone();
            if lookback_only(&u) {
                let step = Sugar::implies(
                    Sugar::member(a.clone(), u.clone()),
                    Sugar::member(t.clone(), u),
                );
                parts.push(self.compile(&step)?);
            }
        }
        let id = self.gates.len() as GateId;
        self.gates.push(Gate::All(parts));
        Ok(id)
    }

    fn and_gate(&mut self, l: GateId, r: GateId) -> GateId {
        let nl = self.gates.len() as GateId;
        self.gates.push(Gate::Nor(l, l));
        let nr = nl + 1;
        self.gates.push(Gate::Nor(r, r));
        self.gates.push(Gate::Nor(nl, nr));
        nl + 2
    }

    /// Evaluates every gate not yet in `values` at `state`.
    pub(crate) fn extend_values(&self, state: &State, values: &mut Vec<bool>) {
        values.reserve(self.gates.len().saturating_sub(values.len()));
        for g in values.len()..self.gates.len() {
            let v = match &self.gates[g] {
                Gate::Const(b) => *b,
                Gate::Atom(i) => state.get(*i as usize),
                Gate::Nor(l, r) => !values[*l as usize] && !values[*r as usize],
                Gate::All(parts) => parts.iter().all(|&p| values[p as usize]),
                Gate::Any(parts) => parts.iter().any(|&p| values[p as usize]),
            };
            values.push(v);
        }
    }

    /// The successor stage: each atom takes its body's value at `values`.
    pub(crate) fn step_from(&self, values: &[bool]) -> State {
        let mut next = State::zero(self.atoms.len());
        for (i, atom) in self.atoms.iter().enumerate() {
            if values[atom.body as usize] {
                next.set(i, true);
            }
        }
        next
    }
}
