mod common;

use common::*;
use libra_core::goedel::goedel_code;
use libra_core::substitution::{diagonal, sub, sub_tag, CodedExpr, Sub, SUB};
use libra_core::syntax::Sugar;
use libra_core::{Error, Expr};
use num_bigint::BigUint;
use proptest::prelude::*;

fn value(e: &Expr) -> BigUint {
    binary_value(&austere_of(&symbols(e)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sub_identity(a in formula(4), t in term(3), pick in any::<prop::sample::Index>()) {
        let fv: Vec<u64> = free(&a).into_iter().collect();
        let i = if fv.is_empty() { 0 } else { fv[pick.index(fv.len())] };
        let r = sub(&CodedExpr::of(&a), i, &CodedExpr::of(&t)).unwrap();
        let want = replace(&t, i, &a);
        prop_assert_eq!(r.source(), &value(&want));
        prop_assert_eq!(r.expr(), Some(&want));
    }

    #[test]
    fn sub_on_terms(a in term(4), t in closed_term(2), i in 0..NOEMATA) {
        let r = sub(&CodedExpr::of(&a), i, &CodedExpr::of(&t)).unwrap();
        prop_assert_eq!(r.source(), &value(&replace(&t, i, &a)));
    }

    #[test]
    fn sub_twice_fills_the_two_least_noemata(a in formula(4), t in closed_term(2), s in closed_term(2)) {
        let fv: Vec<u64> = free(&a).into_iter().collect();
        prop_assume!(fv.len() >= 2);
        let once = Sub(&CodedExpr::of(&a), &CodedExpr::of(&t)).unwrap();
        let twice = Sub(&once, &CodedExpr::of(&s)).unwrap();
        let want = replace(&s, fv[1], &replace(&t, fv[0], &a));
        prop_assert_eq!(twice.source(), &value(&want));
    }

    #[test]
    fn non_expressions_fall_through(n in 1u64..(1 << 40), t in closed_term(2)) {
        let x = CodedExpr::from_number(&BigUint::from(n));
        prop_assume!(x.expr().is_none());
        prop_assert_eq!(sub(&x, 0, &CodedExpr::of(&t)).unwrap(), x);
    }

    #[test]
    fn diagonal_certificates_verify(a in in_v0(3)) {
        let d = diagonal(&a).unwrap();
        prop_assert!(d.certificate.verified, "{:?}", d.certificate.steps);
        let hole = Expr::noema(d.sentence.hole);
        let v0 = Expr::noema(0);
        // D = A(Sub(v0, v0)) and B = A(Sub(h, h)) with h standing for ⌜m⌝
        prop_assert_eq!(&d.carrier, &replace(&sub_tag(v0.clone(), v0), 0, &a));
        prop_assert_eq!(&d.sentence.template, &replace(&sub_tag(hole.clone(), hole.clone()), 0, &a));
        prop_assert_eq!(d.m.source(), &value(&d.carrier));
        prop_assert_eq!(&d.sentence.numeral, &value(&d.carrier));
        prop_assert_eq!(replace(&hole, 0, &d.carrier), d.sentence.template);
    }
}

#[test]
fn sub_accepts_term_codes_that_also_read_as_formulas() {
    let r = russell();
    let y = CodedExpr::from_number(&r.value());
    let x = CodedExpr::of(&Expr::member(Expr::noema(0), Expr::alethizor()));
    let out = sub(&x, 0, &y).unwrap();
    assert_eq!(out.expr().unwrap(), &Expr::member(r, Expr::alethizor()));
}

#[test]
fn capital_sub_inserts_numerals() {
    let a = Expr::member(Expr::noema(2), Expr::noema(2));
    for n in 0..=1u32 {
        let numeral = goedel_code(&BigUint::from(n)).as_expr().unwrap();
        let r = SUB(&CodedExpr::of(&a), &BigUint::from(n), 1 << 16).unwrap();
        assert_eq!(r.source(), &value(&replace(&numeral, 2, &a)));
    }
    let closed = CodedExpr::of(&Expr::member(Expr::alethizor(), Expr::alethizor()));
    assert_eq!(SUB(&closed, &BigUint::from(5u8), 0).unwrap(), closed);
    assert!(matches!(
        SUB(&CodedExpr::of(&a), &BigUint::from(3u8), 1000),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn ten_fixed_diagonals() {
    let t = Expr::alethizor();
    let e = Expr::enumerator();
    let v0 = Expr::noema(0);
    let inputs = [
        Expr::member(v0.clone(), t.clone()),
        Sugar::not(Expr::member(v0.clone(), t.clone())),
        Sugar::implies(
            Expr::member(v0.clone(), t.clone()),
            Expr::member(v0.clone(), t.clone()),
        ),
        Expr::member(v0.clone(), e.clone()),
        Expr::member(t.clone(), v0.clone()),
        Sugar::or(
            Expr::member(v0.clone(), v0.clone()),
            Expr::member(t.clone(), e.clone()),
        ),
        Sugar::forall(1, Expr::member(v0.clone(), Expr::noema(1))),
        Expr::member(v0.clone(), russell()),
        Sugar::truth(Expr::member(v0.clone(), t.clone())),
        Sugar::not(Sugar::truth(Sugar::not(Expr::member(v0.clone(), t)))),
    ];
    for a in &inputs {
        let d = diagonal(a).unwrap();
        assert!(d.certificate.verified, "{a}: {:?}", d.certificate.steps);
    }
    let open_in_v1 = Expr::member(Expr::noema(1), Expr::alethizor());
    assert!(matches!(diagonal(&open_in_v1), Err(Error::WrongNoemata(_))));
}
