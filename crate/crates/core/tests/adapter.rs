mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use semistar::zadapter::{
    colon_oracle, module_member, parse_rational, rational_from_exponents, vector_of_module,
};
use semistar::{Error, ExtInt, FracIdealSpec};

const PRIMES: [u64; 3] = [2, 3, 5];

fn exponents() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 1..=3)
}

fn ideal(exps: &[Vec<i64>]) -> FracIdealSpec {
    let gens = exps
        .iter()
        .map(|e| rational_from_exponents(&PRIMES, e, false))
        .collect();
    FracIdealSpec::new(PRIMES.to_vec(), gens).unwrap()
}

fn as_i128(r: &BigRational) -> (i128, i128) {
    (
        r.numer().try_into().unwrap(),
        r.denom().try_into().unwrap(),
    )
}

proptest! {
    #[test]
    fn vector_matches_counted_valuations(exps in exponents(), extra in 1i128..50) {
        // scale generators by a unit at 2,3,5 to exercise the factoring
        let unit = [7i128, 11, 13, 49][extra as usize % 4];
        let gens: Vec<BigRational> = exps
            .iter()
            .map(|e| rational_from_exponents(&PRIMES, e, false) * BigRational::from(BigInt::from(unit)))
            .collect();
        let spec = FracIdealSpec::new(PRIMES.to_vec(), gens.clone()).unwrap();
        let f = vector_of_module(&spec).unwrap();
        for (i, &p) in PRIMES.iter().enumerate() {
            let least = gens
                .iter()
                .map(|g| {
                    let (num, den) = as_i128(g);
                    valuation(num, den, p as i128)
                })
                .min()
                .unwrap();
            prop_assert_eq!(f.get(i), fin(-least));
        }
    }

    #[test]
    fn product_of_ideals_is_product_of_vectors(a in exponents(), b in exponents()) {
        let (i, j) = (ideal(&a), ideal(&b));
        let prod = vector_of_module(&i.product(&j).unwrap()).unwrap();
        prop_assert_eq!(prod, vector_of_module(&i).unwrap().mul(&vector_of_module(&j).unwrap()).unwrap());
    }

    #[test]
    fn colon_matches_oracle(a in exponents(), b in exponents()) {
        let (i, j) = (ideal(&a), ideal(&b));
        let fast = vector_of_module(&i).unwrap().colon(&vector_of_module(&j).unwrap()).unwrap();
        prop_assert_eq!(fast, colon_oracle(&i, &j).unwrap());
    }

    // r lies in the ideal iff r/d is a local integer, d the gcd of the generators
    #[test]
    fn membership_by_gcd(a in exponents(), r in prop::collection::vec(-6i64..=6, 3)) {
        let i = ideal(&a);
        let f = vector_of_module(&i).unwrap();
        let gcd: Vec<i64> = (0..3).map(|p| a.iter().map(|g| g[p]).min().unwrap()).collect();
        let want = (0..3).all(|p| r[p] >= gcd[p]);
        let x = rational_from_exponents(&PRIMES, &r, true);
        prop_assert_eq!(module_member(&f, &x).unwrap(), want);
    }
}

#[test]
fn worked_examples() {
    let v = |p: &str, g: &str| vector_of_module(&FracIdealSpec::parse(p, g).unwrap()).unwrap();
    assert_eq!(v("2,3", "1/2").to_string(), "(1,0)");
    assert_eq!(v("2,3,5", "10,15").to_string(), "(0,0,-1)");
    let six = v("2,3", "6");
    assert!(!module_member(&six, &parse_rational("1/6").unwrap()).unwrap());
    assert!(module_member(&six, &parse_rational("-12").unwrap()).unwrap());
    // 7 is a unit at 2 and 3
    assert!(module_member(&six, &parse_rational("6/7").unwrap()).unwrap());
}

#[test]
fn bad_inputs() {
    assert!(matches!(FracIdealSpec::parse("2,3", "0"), Err(Error::ZeroRational(_))));
    assert!(matches!(FracIdealSpec::parse("2,4", "1"), Err(Error::NotPrime(4))));
    assert!(FracIdealSpec::parse("2", "1/0").is_err());
    assert!(FracIdealSpec::parse("2", "x").is_err());
    let f = vector_of_module(&FracIdealSpec::parse("2", "1").unwrap()).unwrap();
    assert!(module_member(&f, &parse_rational("0").unwrap()).is_err());
    assert_eq!(f.entries(), Some(&[ExtInt::Finite(0)][..]));
}
