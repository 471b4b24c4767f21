//! Fragment-relative revision semantics: stage valuations, successor and
//! limit rules, block-cycle closure, classification and valency algebra.
//!
//! Quantifiers range over a finite universe of terms rather than over all
//! terms; every report carries the fragment banner saying so.

mod fragment;
mod spec;
mod state;
mod trace;
mod valency;

pub use fragment::{Fragment, LookbackAtom, ATOM_LIMIT};
pub use spec::{Budget, FragmentSpec, IdentityMode, RegistryEntry};
pub use state::{limit, StageIndex, State};
pub use trace::{run, Block, Closure, StageTrace};
pub use valency::{BlockWord, Classification, Relations, Status, Valency, Valor};

use crate::error::Result;

/// Builds and runs a fragment with its declared budget.
pub fn simulate(spec: &FragmentSpec) -> Result<StageTrace> {
    Ok(run(Fragment::build(spec)?, spec.budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{read, Expr, ParseMode, Sugar};

    const R: &str = "{v0 | not (v0 in v0)}";

    fn f(text: &str) -> Expr {
        read(text, ParseMode::Formula).unwrap().expr
    }

    fn t(text: &str) -> Expr {
        read(text, ParseMode::Term).unwrap().expr
    }

    fn spec(terms: &[&str], formulas: &[&str]) -> FragmentSpec {
        FragmentSpec {
            terms: terms.iter().map(|s| s.to_string()).collect(),
            formulas: formulas.iter().map(|s| s.to_string()).collect(),
            ..FragmentSpec::default()
        }
    }

    #[test]
    fn russell_flips_and_is_minor() {
        let rr = format!("{R} in {R}");
        let trace = simulate(&spec(&[R], &[&rr])).unwrap();
        let c = trace.converged().unwrap();
        assert_eq!((c.block, c.repeats), (1, 0));
        let words = trace.words(&f(&rr)).unwrap();
        assert_eq!(words[0].to_string(), "(01)");
        assert_eq!(trace.classify(&f(&rr)).unwrap().status, Status::MinorThesis);
        assert_eq!(
            trace.classify(&Sugar::not(f(&rr))).unwrap().status,
            Status::MinorThesis
        );
        assert!(!trace.kind(&t(R)).unwrap());
        let rel = trace.relations(&f(&rr), &Sugar::not(f(&rr))).unwrap();
        assert!(rel.complementary && !rel.connected);
    }

    #[test]
    fn tautology_body_is_kind() {
        let s = format!("{{v0 | v0 in {R} -> v0 in {R}}}");
        let m = format!("T in {s}");
        let trace = simulate(&spec(&[&s, "T"], &[&m])).unwrap();
        assert_eq!(trace.classify(&f(&m)).unwrap().status, Status::MaximThesis);
        assert_eq!(
            trace.classify(&Sugar::not(f(&m))).unwrap().status,
            Status::NonThesis
        );
        assert!(trace.kind(&t(&s)).unwrap());
        assert!(matches!(
            trace.valor(&Sugar::not(f(&m))).unwrap(),
            Valor::Below(_)
        ));
    }

    #[test]
    fn stage_zero_laws() {
        let trace = simulate(&spec(&[R, "T", &format!("nor({R}, {R})")], &[])).unwrap();
        let u = trace.universe();
        let zero = StageIndex::default();
        for a in &u {
            for b in &u {
                assert!(trace
                    .value_at(&Sugar::identity(a.clone(), b.clone()), zero)
                    .unwrap());
            }
        }
        let joint = t(&format!("nor({R}, {R})"));
        assert!(trace.value_at(&Sugar::member(t("T"), joint), zero).unwrap());
        assert!(!trace.value_at(&Sugar::member(t("T"), t(R)), zero).unwrap());
    }

    #[test]
    fn empty_fragment_closes_at_once() {
        let trace = simulate(&FragmentSpec::default()).unwrap();
        assert_eq!(trace.converged().unwrap().block, 1);
    }

    #[test]
    fn unknown_atom_is_untracked() {
        let trace = simulate(&spec(&[R], &[])).unwrap();
        let other = f("T in {v0 | v0 in v0}");
        assert!(matches!(
            trace.classify(&other),
            Err(crate::Error::Untracked(_))
        ));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let mut s = spec(&[R], &[]);
        s.budget = Budget {
            max_steps_per_block: 1,
            max_blocks: 1,
        };
        let trace = simulate(&s).unwrap();
        assert!(trace.converged().unwrap_err().is_budget());
    }
}
