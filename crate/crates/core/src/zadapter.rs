//! The concrete Dedekind domain `Z_(p_1,...,p_n)`: the integers localized at
//! a finite set of rational primes.
//!
//! Fractional ideals are entered by rational generators; rationals at primes
//! outside the declared list are units and carry no information.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::extvec::{ExtInt, Spectrum, ValVector};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn multiplicity(mut m: BigInt, p: &BigInt) -> i64 {
    let mut k = 0;
    while (&m % p).is_zero() {
        m /= p;
        k += 1;
    }
    k
}

/// Exponent of `p` in the nonzero rational `r`.
pub fn padic_val(r: &BigRational, p: u64) -> Result<i64> {
    if r.is_zero() {
        return Err(Error::ZeroRational("p-adic valuation of 0"));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = BigInt::from(p);
    Ok(multiplicity(r.numer().abs(), &p) - multiplicity(r.denom().abs(), &p))
}

/// Parse `a/b` or `a` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Malformed(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a = BigInt::from_str(a.trim()).map_err(|_| bad())?;
            let b = BigInt::from_str(b.trim()).map_err(|_| bad())?;
            if b.is_zero() {
                return Err(Error::ZeroRational("denominator"));
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// Comma-separated rationals, e.g. `1/2,3,-5/9`.
pub fn parse_rationals(s: &str) -> Result<Vec<BigRational>> {
    s.split(',').map(parse_rational).collect()
}

/// Comma-separated primes, e.g. `2,3,5`.
pub fn parse_primes(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Malformed(format!("not a prime: {t:?}")))
        })
        .collect()
}

/// A finitely generated fractional ideal of the localization at `primes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracIdealSpec {
    primes: Vec<u64>,
    gens: Vec<BigRational>,
    spectrum: Spectrum,
}

impl FracIdealSpec {
    pub fn new(primes: Vec<u64>, gens: Vec<BigRational>) -> Result<Self> {
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        if gens.is_empty() {
            return Err(Error::Malformed("a fractional ideal needs a generator".into()));
        }
        if gens.iter().any(Zero::is_zero) {
            return Err(Error::ZeroRational("generator"));
        }
        let spectrum = Spectrum::new(primes.iter().map(u64::to_string))?;
        Ok(FracIdealSpec { primes, gens, spectrum })
    }

    pub fn parse(primes: &str, gens: &str) -> Result<Self> {
        Self::new(parse_primes(primes)?, parse_rationals(gens)?)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn gens(&self) -> &[BigRational] {
        &self.gens
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// Generators of the product ideal: all pairwise products.
    pub fn product(&self, other: &FracIdealSpec) -> Result<FracIdealSpec> {
        if self.primes != other.primes {
            return Err(Error::SpectrumMismatch("different prime lists".into()));
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a * b))
            .collect();
        FracIdealSpec::new(self.primes.clone(), gens)
    }
}

/// `p ↦ -min_x v_p(x)` over the generators.
pub fn vector_of_module(spec: &FracIdealSpec) -> Result<ValVector> {
    let entries = spec
        .primes
        .iter()
        .map(|&p| {
            let mut lowest = i64::MAX;
            for g in &spec.gens {
                lowest = lowest.min(padic_val(g, p)?);
            }
            Ok(ExtInt::Finite(-lowest))
        })
        .collect::<Result<Vec<_>>>()?;
    ValVector::new(spec.spectrum.clone(), entries)
}

/// Whether `r` lies in `[f]`: `v_p(r) >= -f(p)` at each finite entry.
pub fn module_member(f: &ValVector, r: &BigRational) -> Result<bool> {
    if r.is_zero() {
        return Err(Error::ZeroRational("membership of 0"));
    }
    let Some(entries) = f.entries() else {
        return Ok(false);
    };
    for (label, &e) in f.spectrum().labels().iter().zip(entries) {
        if let ExtInt::Finite(bound) = e {
            let p: u64 = label
                .parse()
                .map_err(|_| Error::Malformed(format!("prime label {label:?} is not a number")))?;
            if padic_val(r, p)? < -bound {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(I :_K J)` computed as `⋂_{x ∈ gens(J)} x⁻¹ I`.
///
/// Each `x⁻¹ I` has valuation `v_p(I) - v_p(x)`, so its vector entry is
/// `-v_p(I) + v_p(x)`. Works on valuations directly and never calls
/// [`ValVector::colon`].
pub fn colon_oracle(i: &FracIdealSpec, j: &FracIdealSpec) -> Result<ValVector> {
    if i.primes != j.primes {
        return Err(Error::SpectrumMismatch("different prime lists".into()));
    }
    let mut entries = Vec::with_capacity(i.primes.len());
    for &p in &i.primes {
        let mut v_i = i64::MAX;
        for g in &i.gens {
            v_i = v_i.min(padic_val(g, p)?);
        }
        let mut best = i64::MAX;
        for x in &j.gens {
            let shifted = padic_val(x, p)?
                .checked_sub(v_i)
                .ok_or(Error::Overflow("colon oracle"))?;
            best = best.min(shifted);
        }
        entries.push(ExtInt::Finite(best));
    }
    ValVector::new(i.spectrum.clone(), entries)
}

/// `±∏ p^e` for exponents over the given primes.
pub fn rational_from_exponents(primes: &[u64], exps: &[i64], negative: bool) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (&p, &e) in primes.iter().zip(exps) {
        let pow = num_traits::pow(BigInt::from(p), e.unsigned_abs() as usize);
        if e >= 0 {
            num *= pow;
        } else {
            den *= pow;
        }
    }
    if negative {
        num = -num;
    }
    BigRational::new(num, den)
}
