mod common;

use common::*;
use libra_core::codec::{concat, formation_of, length, read_number, value_of};
use libra_core::Error;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_positive(rng: &mut ChaCha8Rng) -> BigUint {
    let bytes: Vec<u8> = (0..rng.gen_range(1..=20)).map(|_| rng.gen()).collect();
    BigUint::from_bytes_le(&bytes) | BigUint::from(1u8) << rng.gen_range(0..160u32)
}

/// m⌢n by writing both numerals out and joining the strings.
fn concat_oracle(m: &BigUint, n: &BigUint) -> BigUint {
    BigUint::parse_bytes(
        format!("{}{}", m.to_str_radix(2), n.to_str_radix(2)).as_bytes(),
        2,
    )
    .unwrap()
}

#[test]
fn concatenation_laws_on_random_operands() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let (a, b, c) = (
            random_positive(&mut rng),
            random_positive(&mut rng),
            random_positive(&mut rng),
        );
        let ab = concat(&a, &b).unwrap();
        assert_eq!(ab, concat_oracle(&a, &b));
        assert_eq!(length(&ab), length(&a) + length(&b));
        assert_eq!(
            concat(&ab, &c).unwrap(),
            concat(&a, &concat(&b, &c).unwrap()).unwrap()
        );
    }
}

#[test]
fn length_is_least_power_above() {
    for n in 0u64..5000 {
        let l = length(&BigUint::from(n));
        assert!(BigUint::from(1u8) << l > BigUint::from(n));
        assert!(l == 0 || BigUint::from(1u8) << (l - 1) <= BigUint::from(n));
    }
    assert_eq!(length(&BigUint::from(0u8)), 0);
}

#[test]
fn zero_is_rejected() {
    let z = BigUint::from(0u8);
    assert!(matches!(formation_of(&z), Err(Error::ZeroNotFormation)));
    assert!(matches!(
        concat(&z, &BigUint::from(3u8)),
        Err(Error::ZeroOperand)
    ));
    assert_eq!(
        concat(&BigUint::from(1u8), &BigUint::from(2u8)).unwrap(),
        BigUint::from(6u8)
    );
}

#[test]
fn number_forms() {
    assert_eq!(read_number("136").unwrap(), BigUint::from(136u32));
    assert_eq!(read_number("0x88").unwrap(), BigUint::from(136u32));
    assert_eq!(read_number("|...|...").unwrap(), BigUint::from(136u32));
    assert_eq!(read_number("|₃|₃").unwrap(), BigUint::from(136u32));
}

proptest! {
    #[test]
    fn round_trip_through_formations(n in 1u64..u64::MAX) {
        let n = BigUint::from(n);
        let f = formation_of(&n).unwrap();
        prop_assert_eq!(value_of(&f), n.clone());
        prop_assert_eq!(binary_value(&f.austere()), n);
    }

    #[test]
    fn value_is_concatenation_of_symbols(e in any_expr(4)) {
        let folded = symbols(&e)
            .into_iter()
            .map(|k| BigUint::from(1u8) << k)
            .reduce(|acc, s| concat(&acc, &s).unwrap())
            .unwrap();
        prop_assert_eq!(e.value(), folded);
    }
}
