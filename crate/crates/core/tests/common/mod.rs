//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the library routine it is used to check.

#![allow(dead_code)]

use rand::Rng;
use semistar::{ExtInt, Spectrum, Subset, ValVector};

pub const INF: ExtInt = ExtInt::PosInf;

pub fn fin(v: i64) -> ExtInt {
    ExtInt::Finite(v)
}

pub fn vector(spectrum: &Spectrum, entries: &[ExtInt]) -> ValVector {
    ValVector::new(spectrum.clone(), entries.to_vec()).unwrap()
}

/// Every Moore family on `n <= 4` points, as sorted member bitmasks, found
/// by testing all `2^(2^n)` candidate families.
pub fn brute_moore(n: usize) -> Vec<Vec<u64>> {
    assert!(n <= 4);
    let universe = 1usize << n;
    let full = (universe - 1) as u64;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << universe) {
        let members: Vec<u64> = (0..universe as u64).filter(|s| mask >> s & 1 == 1).collect();
        if !members.contains(&full) {
            continue;
        }
        let closed = members
            .iter()
            .all(|a| members.iter().all(|b| members.contains(&(a & b))));
        if closed {
            out.push(members);
        }
    }
    out.sort();
    out
}

pub fn member_bits(family: &semistar::MooreFamily) -> Vec<u64> {
    family.members().iter().map(|s| s.bits()).collect()
}

/// `members` is `{Y : U ⊆ Y}` for some `U`.
pub fn is_upfilter(members: &[u64], n: usize) -> bool {
    let Some(&base) = members.iter().min_by_key(|m| m.count_ones()) else {
        return false;
    };
    let want: Vec<u64> = (0..1u64 << n).filter(|y| y & base == base).collect();
    let mut got = members.to_vec();
    got.sort();
    got == want
}

/// Every vector with entries in `{-bound..bound, inf}`.
pub fn window(spectrum: &Spectrum, bound: i64) -> Vec<ValVector> {
    let values: Vec<ExtInt> = (-bound..=bound).map(fin).chain([INF]).collect();
    let mut rows: Vec<Vec<ExtInt>> = vec![vec![]];
    for _ in 0..spectrum.len() {
        rows = rows
            .into_iter()
            .flat_map(|r| {
                values.iter().map(move |&v| {
                    let mut r = r.clone();
                    r.push(v);
                    r
                })
            })
            .collect();
    }
    rows.iter().map(|r| vector(spectrum, r)).collect()
}

pub fn support_bits(f: &ValVector) -> u64 {
    f.entries()
        .unwrap()
        .iter()
        .enumerate()
        .filter(|(_, e)| **e == INF)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

pub fn pointwise_le(a: &ValVector, b: &ValVector) -> bool {
    match (a.entries(), b.entries()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x.iter().zip(y).all(|(p, q)| p <= q),
    }
}

/// Least closed window vector above `f`: the pointwise minimum of every
/// window vector `h >= f` whose `inf`-support is a member. Asserts that the
/// minimum is itself such a vector.
pub fn closure_by_search(members: &[u64], f: &ValVector, candidates: &[ValVector]) -> ValVector {
    let above: Vec<&ValVector> = candidates
        .iter()
        .filter(|h| pointwise_le(f, h) && members.contains(&support_bits(h)))
        .collect();
    let n = f.len();
    let mut least: Vec<ExtInt> = vec![INF; n];
    for h in &above {
        for (i, e) in h.entries().unwrap().iter().enumerate() {
            least[i] = least[i].min(*e);
        }
    }
    let least = vector(f.spectrum(), &least);
    assert!(above.contains(&&least), "closed vectors above {f} have no least element");
    least
}

pub fn random_entry(rng: &mut impl Rng, bound: i64, p_inf: f64) -> ExtInt {
    if rng.gen_bool(p_inf) {
        INF
    } else {
        fin(rng.gen_range(-bound..=bound))
    }
}

pub fn random_vector(rng: &mut impl Rng, spectrum: &Spectrum, bound: i64, p_inf: f64) -> ValVector {
    let entries: Vec<ExtInt> = (0..spectrum.len())
        .map(|_| random_entry(rng, bound, p_inf))
        .collect();
    vector(spectrum, &entries)
}

pub fn random_finite(rng: &mut impl Rng, spectrum: &Spectrum, bound: i64) -> ValVector {
    random_vector(rng, spectrum, bound, 0.0)
}

/// `v_p(num/den)` by repeated division.
pub fn valuation(mut num: i128, mut den: i128, p: i128) -> i64 {
    assert!(num != 0 && den != 0);
    let mut v = 0;
    while num % p == 0 {
        num /= p;
        v += 1;
    }
    while den % p == 0 {
        den /= p;
        v -= 1;
    }
    v
}

pub fn subset(bits: u64) -> Subset {
    Subset::from_bits(bits)
}
