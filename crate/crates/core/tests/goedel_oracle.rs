mod common;

use common::numerals::{oracle_code, subscripts, DELTA_HEAD, DELTA_TAIL, ZERO};
use common::*;
use libra_core::codec;
use libra_core::goedel::{self, code_concat, goedel_code};
use libra_core::syntax::{self, classify_term, ParseMode};
use libra_core::Error;
use num_bigint::BigUint;

#[test]
fn materialized_codes_match_the_recursion() {
    for n in 0..=2u32 {
        let want = binary_value(&austere_of(&oracle_code(n)));
        let c = goedel_code(&BigUint::from(n));
        assert_eq!(c.materialize(1 << 16).unwrap(), want, "n = {n}");
        assert_eq!(*c.bit_length().unwrap(), BigUint::from(want.bits()));
        assert_eq!(c.as_expr().unwrap().value(), want);
    }
}

#[test]
fn fixed_bit_counts() {
    let bits = |s: &str| subscripts(s).iter().map(|k| k + 1).sum::<u64>();
    assert_eq!(bits(ZERO), 109);
    assert_eq!(bits(DELTA_HEAD) + bits(DELTA_TAIL), 87);
    assert_eq!(bits("|₀|₅|₂|₂") + 2 * bits("|₅") + bits("|₂"), 28);
    assert_eq!(goedel::successor_overhead(), 28 + 2 * 87);
    assert_eq!(
        *goedel_code(&BigUint::from(1u8)).bit_length().unwrap(),
        BigUint::from(856u32)
    );
}

#[test]
fn length_recurrence_to_twenty() {
    let mut l = BigUint::from(109u32);
    for n in 0..=20u32 {
        assert_eq!(
            *goedel_code(&BigUint::from(n)).bit_length().unwrap(),
            l,
            "n = {n}"
        );
        l = BigUint::from(202u32) + l * 6u32;
    }
}

#[test]
fn zero_is_a_pronomen() {
    let m = goedel_code(&BigUint::from(0u8)).materialize(1024).unwrap();
    assert_eq!(m.bits(), 109);
    let f = codec::formation_of(&m).unwrap();
    let t = syntax::parse_formation(&f, ParseMode::Term).unwrap().expr;
    assert!(classify_term(&t).unwrap().pronomen);
    assert_eq!(syntax::caliber(&t).unwrap(), 0);
    assert_eq!(t.to_string(), "{v0 | v0 = v0}");
}

#[test]
fn successor_codes_leave_v1_free() {
    for n in 1..=2u32 {
        let t = goedel_code(&BigUint::from(n)).as_expr().unwrap();
        assert_eq!(t.noemata(), [1]);
        assert!(!classify_term(&t).unwrap().cognomen);
    }
}

#[test]
fn codes_are_injective() {
    let sources: Vec<BigUint> = (0..=50u32)
        .map(|n| goedel_code(&BigUint::from(n)).source().clone())
        .collect();
    for (i, a) in sources.iter().enumerate() {
        assert!(sources[i + 1..].iter().all(|b| a != b));
    }
    let m: Vec<BigUint> = (0..=2u32)
        .map(|n| goedel_code(&BigUint::from(n)).materialize(1 << 16).unwrap())
        .collect();
    assert!(m[0] != m[1] && m[1] != m[2] && m[0] != m[2]);
    for n in 0..=2u64 {
        assert_eq!(
            goedel::numeral_value(&goedel_code(&BigUint::from(n)).as_expr().unwrap()),
            Some(n)
        );
    }
}

#[test]
fn shifted_variant_of_zero_is_a_different_formation() {
    let zero = goedel_code(&BigUint::from(0u8)).as_expr().unwrap();
    let renamed: Vec<u64> = oracle_code(0)
        .into_iter()
        .map(|k| if k >= 5 { k + 3 } else { k })
        .collect();
    assert_ne!(binary_value(&austere_of(&renamed)), zero.value());
}

#[test]
fn budget_and_concatenation() {
    let three = goedel_code(&BigUint::from(3u8));
    match three.materialize(1000) {
        Err(Error::BudgetExceeded { required, .. }) => {
            assert_eq!(required, BigUint::from(32230u32))
        }
        other => panic!("expected a budget error, got {other:?}"),
    }
    assert_eq!(
        *code_concat(&BigUint::from(1u8), &BigUint::from(2u8))
            .unwrap()
            .source(),
        BigUint::from(6u8)
    );
    assert_eq!(
        code_concat(&BigUint::from(1u8), &BigUint::from(2u8))
            .unwrap()
            .bit_length(),
        goedel_code(&BigUint::from(6u8)).bit_length()
    );
    for a in 1..=10u32 {
        for b in 1..=10u32 {
            let (a, b) = (BigUint::from(a), BigUint::from(b));
            assert_eq!(
                *code_concat(&a, &b).unwrap().source(),
                codec::concat(&a, &b).unwrap()
            );
        }
    }
    assert!(matches!(
        code_concat(&BigUint::from(0u8), &BigUint::from(1u8)),
        Err(Error::ZeroOperand)
    ));
}
