mod common;

use common::laws;
use common::russell;
use libra_core::audit;
use libra_core::engine::{self, BlockWord, FragmentSpec, StageIndex, StageTrace, Status};
use libra_core::scenario;
use libra_core::syntax::{read, ParseMode, Sugar};
use libra_core::Expr;

fn shipped() -> Vec<(&'static str, FragmentSpec)> {
    scenario::all()
        .iter()
        .map(|s| (s.name, s.spec().unwrap()))
        .collect()
}

fn prepared(spec: &FragmentSpec) -> StageTrace {
    engine::run(audit::prepare(spec).unwrap(), spec.budget)
}

fn formula(text: &str) -> Expr {
    read(text, ParseMode::Formula).unwrap().expr
}

#[test]
fn stage_zero_on_shipped_fragments() {
    for (name, spec) in shipped() {
        let t = prepared(&spec);
        let l = laws::stage_zero(&t).unwrap();
        assert!(l.checked > 0, "{name}");
        assert!(l.violations.is_empty(), "{name}: {:?}", l.violations);
    }
}

#[test]
fn progression_on_shipped_fragments() {
    for (name, spec) in shipped() {
        let t = prepared(&spec);
        t.converged().unwrap();
        let l = laws::progression(&t).unwrap();
        assert!(l.checked > 0, "{name}");
        assert!(
            l.violations.is_empty(),
            "{name}: {:?}",
            &l.violations[..l.violations.len().min(5)]
        );
    }
}

#[test]
fn negation_laws_on_shipped_fragments() {
    for (name, spec) in shipped() {
        let t = prepared(&spec);
        let l = laws::negation(&t).unwrap();
        assert!(
            l.violations.is_empty(),
            "{name}: {:?}",
            &l.violations[..l.violations.len().min(5)]
        );
    }
}

#[test]
fn runs_are_deterministic() {
    for (name, spec) in shipped() {
        let (a, b) = (prepared(&spec), prepared(&spec));
        assert_eq!(a.closure(), b.closure(), "{name}");
        assert_eq!(a.blocks(), b.blocks(), "{name}");
        for s in a.tracked() {
            assert_eq!(a.words(&s).unwrap(), b.words(&s).unwrap(), "{name}: {s}");
        }
    }
}

#[test]
fn russell_membership_flips() {
    let r = russell();
    let spec = scenario::find("russell").unwrap().spec().unwrap();
    let t = engine::simulate(&spec).unwrap();
    let rr = Sugar::member(r.clone(), r);
    let first = &t.words(&rr).unwrap()[0];
    assert_eq!(
        *first,
        BlockWord {
            transient: vec![],
            cycle: vec![false, true]
        }
    );
    assert!(!t.value_at(&rr, StageIndex::new(0, 0)).unwrap());
    assert!(t.value_at(&rr, StageIndex::new(0, 1)).unwrap());
    assert!(!t.value_at(&rr, StageIndex::new(0, 2)).unwrap());
    assert!(t.value_at(&rr, StageIndex::new(0, 1001)).unwrap());
    assert!(t.closure().unwrap().block <= 2);
}

#[test]
fn tautologous_body_is_true_from_stage_one() {
    let spec = scenario::find("tautology-kind").unwrap().spec().unwrap();
    let t = engine::simulate(&spec).unwrap();
    let a = formula("T in {v0 | v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)}}");
    let w = t.words(&a).unwrap();
    let bits: Vec<bool> = w[0].bits().collect();
    assert!(!bits[0]);
    assert!(bits[1..].iter().all(|&x| x));
    assert_eq!(t.classify(&a).unwrap().status, Status::MaximThesis);
}

#[test]
fn partial_traces_refuse_classification() {
    let mut spec = scenario::find("curry-false").unwrap().spec().unwrap();
    spec.budget.max_blocks = 1;
    let t = prepared(&spec);
    assert!(t.closure().is_none());
    let a = formula(&spec.formulas[1]);
    assert!(t.words(&a).is_ok());
    assert!(matches!(
        t.classify(&a),
        Err(libra_core::Error::NotConverged { .. })
    ));
}
