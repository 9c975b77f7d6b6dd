//! Moore families (intersection-closed set families) on `{0..n-1}`.
//!
//! The intersection of the empty subfamily is the whole ground set, so every
//! Moore family contains `S = {0..n-1}`; the empty set is optional.
//!
//! Enumeration decides the `2^n` subsets in ascending encoding order. Any
//! intersection of a subset with an earlier member is a submask, hence has a
//! smaller encoding and is already decided, so including a subset only needs
//! a membership check against the current prefix. Excluding is always
//! allowed, and `S` is added last, so no branch dead-ends. Taking the
//! "include" branch first emits families in lexicographic order of their
//! sorted member lists.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND};

/// Largest `n` enumerated without an explicit override.
pub const ENUMERATION_GUARD: usize = 5;
/// Published number of Moore families on `n = 1..=7` elements.
pub const KNOWN_COUNTS: [u64; 7] = [
    2,
    7,
    61,
    2_480,
    1_385_552,
    75_973_751_474,
    14_087_648_235_707_352_472,
];

/// Largest `n` the enumerator can represent at all (`2^7` subsets in a `u128`).
pub const ENUMERATION_LIMIT: usize = 7;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MooreFamily {
    n: usize,
    // ascending by encoding
    members: Vec<Subset>,
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptySpectrum)
    } else if n > MAX_GROUND {
        Err(Error::Refused(format!(
            "ground sets are limited to {MAX_GROUND} elements"
        )))
    } else {
        Ok(())
    }
}

fn check_members(n: usize, family: &[Subset]) -> Result<()> {
    match family.iter().find(|s| !s.fits(n)) {
        Some(s) => Err(Error::Malformed(format!(
            "subset {s} is not inside a {n}-element ground set"
        ))),
        None => Ok(()),
    }
}

/// Full set present and pairwise intersections present.
pub fn is_moore(family: &[Subset], n: usize) -> bool {
    if n > MAX_GROUND || family.iter().any(|s| !s.fits(n)) {
        return false;
    }
    let set: BTreeSet<Subset> = family.iter().copied().collect();
    set.contains(&Subset::full(n))
        && set
            .iter()
            .all(|&a| set.range(..a).all(|&b| set.contains(&a.intersection(b))))
}

/// Smallest Moore family containing `family`.
pub fn moore_generate(family: &[Subset], n: usize) -> Result<MooreFamily> {
    check_ground(n)?;
    check_members(n, family)?;
    let mut set: BTreeSet<Subset> = family.iter().copied().collect();
    set.insert(Subset::full(n));
    let mut frontier: Vec<Subset> = set.iter().copied().collect();
    while let Some(a) = frontier.pop() {
        let fresh: Vec<Subset> = set
            .iter()
            .map(|&b| a.intersection(b))
            .filter(|c| !set.contains(c))
            .collect();
        for c in fresh {
            if set.insert(c) {
                frontier.push(c);
            }
        }
    }
    Ok(MooreFamily {
        n,
        members: set.into_iter().collect(),
    })
}

impl MooreFamily {
    /// Validating constructor; members may be given in any order.
    pub fn new(n: usize, members: impl IntoIterator<Item = Subset>) -> Result<Self> {
        check_ground(n)?;
        let members: Vec<Subset> = members
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        check_members(n, &members)?;
        if !is_moore(&members, n) {
            return Err(Error::NotMoore(format!(
                "{:?} on {n} elements",
                members
            )));
        }
        Ok(MooreFamily { n, members })
    }

    /// `2^S`: every subset closed, the identity closure.
    pub fn power_set(n: usize) -> Result<Self> {
        check_ground(n)?;
        if n > 20 {
            return Err(Error::Refused(format!("power set of a {n}-element set")));
        }
        Ok(MooreFamily {
            n,
            members: Subset::all(n).collect(),
        })
    }

    /// `{S}`, the least Moore family.
    pub fn trivial(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(MooreFamily {
            n,
            members: vec![Subset::full(n)],
        })
    }

    /// `{T : T ⊇ base}`.
    pub fn upfilter(n: usize, base: Subset) -> Result<Self> {
        check_ground(n)?;
        check_members(n, &[base])?;
        let free = base.complement(n);
        let mut members: Vec<Subset> = Vec::with_capacity(1 << free.len());
        // walk all submasks of `free`
        let mut sub = free.bits();
        loop {
            members.push(Subset::from_bits(base.bits() | sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free.bits();
        }
        members.sort_unstable();
        Ok(MooreFamily { n, members })
    }

    fn from_bitset(n: usize, bits: u128) -> Self {
        let mut members = Vec::with_capacity(bits.count_ones() as usize);
        let mut b = bits;
        while b != 0 {
            members.push(Subset::from_bits(b.trailing_zeros() as u64));
            b &= b - 1;
        }
        MooreFamily { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// Intersection of all members; itself a member.
    pub fn min_member(&self) -> Subset {
        self.members
            .iter()
            .fold(Subset::full(self.n), |acc, &m| acc.intersection(m))
    }

    /// Smallest member containing `x`.
    pub fn closure(&self, x: Subset) -> Subset {
        self.members
            .iter()
            .filter(|m| x.is_subset_of(**m))
            .fold(Subset::full(self.n), |acc, &m| acc.intersection(m))
    }

    pub fn is_subfamily_of(&self, other: &MooreFamily) -> bool {
        self.n == other.n && self.members.iter().all(|&m| other.contains(m))
    }

    fn check_same_n(&self, other: &MooreFamily) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SpectrumMismatch(format!(
                "families on {} and {} elements",
                self.n, other.n
            )))
        }
    }

    /// Member-wise intersection; again a Moore family.
    pub fn meet(&self, other: &MooreFamily) -> Result<MooreFamily> {
        self.check_same_n(other)?;
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains(m))
            .collect();
        Ok(MooreFamily { n: self.n, members })
    }

    /// Moore family generated by the union.
    pub fn join(&self, other: &MooreFamily) -> Result<MooreFamily> {
        self.check_same_n(other)?;
        let union: Vec<Subset> = self
            .members
            .iter()
            .chain(other.members.iter())
            .copied()
            .collect();
        moore_generate(&union, self.n)
    }

    /// `Some(U)` when the members are exactly the supersets of `U`.
    pub fn principal_upfilter_base(&self) -> Option<Subset> {
        let base = self.min_member();
        let expected = 1usize.checked_shl(base.complement(self.n).len() as u32)?;
        // members are distinct supersets of `base`, so counting suffices
        (self.members.len() == expected).then_some(base)
    }

    pub fn is_principal_upfilter(&self) -> (bool, Option<Subset>) {
        let base = self.principal_upfilter_base();
        (base.is_some(), base)
    }
}

impl fmt::Display for MooreFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for MooreFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MooreFamily(n={}, {self})", self.n)
    }
}

pub fn family_meet(a: &MooreFamily, b: &MooreFamily) -> Result<MooreFamily> {
    a.meet(b)
}

pub fn family_join(a: &MooreFamily, b: &MooreFamily) -> Result<MooreFamily> {
    a.join(b)
}

pub fn closure(family: &MooreFamily, x: Subset) -> Subset {
    family.closure(x)
}

fn check_enumerable(n: usize, force: bool) -> Result<()> {
    check_ground(n)?;
    if n > ENUMERATION_LIMIT {
        return Err(Error::Refused(format!(
            "enumeration is implemented for n <= {ENUMERATION_LIMIT}"
        )));
    }
    if n > ENUMERATION_GUARD && !force {
        return Err(Error::Refused(format!(
            "full enumeration at n = {n} is infeasible; pass an override to try anyway"
        )));
    }
    Ok(())
}

#[inline]
fn can_include(family: u128, candidate: u32) -> bool {
    let mut rest = family;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        if family >> (candidate & y) & 1 == 0 {
            return false;
        }
    }
    true
}

/// Streams every Moore family on `n` elements once, lexicographically by
/// sorted member list.
pub struct MooreEnumerator {
    n: usize,
    last: u32,
    // pending branches: (next subset to decide, members chosen so far)
    stack: Vec<(u32, u128)>,
}

impl Iterator for MooreEnumerator {
    type Item = MooreFamily;

    fn next(&mut self) -> Option<MooreFamily> {
        let (mut k, mut fam) = self.stack.pop()?;
        while k < self.last {
            if can_include(fam, k) {
                self.stack.push((k + 1, fam));
                fam |= 1u128 << k;
            }
            k += 1;
        }
        fam |= 1u128 << self.last;
        Some(MooreFamily::from_bitset(self.n, fam))
    }
}

pub fn enumerate_moore(n: usize, force: bool) -> Result<MooreEnumerator> {
    check_enumerable(n, force)?;
    let last = (1u32 << n) - 1;
    Ok(MooreEnumerator {
        n,
        last,
        stack: vec![(0, 0)],
    })
}

fn count_from(k: u32, fam: u128, last: u32) -> u64 {
    if k == last {
        return 1;
    }
    let mut total = count_from(k + 1, fam, last);
    if can_include(fam, k) {
        total += count_from(k + 1, fam | 1u128 << k, last);
    }
    total
}

fn prefixes(k: u32, fam: u128, depth: u32, out: &mut Vec<(u32, u128)>) {
    if k == depth {
        out.push((k, fam));
        return;
    }
    prefixes(k + 1, fam, depth, out);
    if can_include(fam, k) {
        prefixes(k + 1, fam | 1u128 << k, depth, out);
    }
}

/// Number of Moore families on `n` elements. The top of the decision tree
/// is split across the rayon pool; the sum does not depend on the split.
pub fn count_moore(n: usize, force: bool) -> Result<u64> {
    check_enumerable(n, force)?;
    let last = (1u32 << n) - 1;
    let depth = last.min(12);
    let mut starts = Vec::new();
    prefixes(0, 0, depth, &mut starts);
    Ok(starts
        .into_par_iter()
        .map(|(k, fam)| count_from(k, fam, last))
        .sum())
}

/// `2^C(n, floor(n/2))`, the number of antichain-generated families on a
/// middle layer and a lower bound on the number of Moore families.
pub fn binom_lower_bound(n: usize) -> BigUint {
    let k = n / 2;
    let mut c = BigUint::from(1u32);
    for i in 0..k {
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    let exp: u32 = c.try_into().expect("binomial coefficient exponent too large");
    BigUint::from(1u32) << exp
}

/// `2^(2^n)`, the number of all set families on `n` elements.
pub fn family_upper_bound(n: usize) -> BigUint {
    BigUint::from(1u32) << (1u64 << n)
}
