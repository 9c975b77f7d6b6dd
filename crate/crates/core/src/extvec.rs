//! Extended integers and valuation vectors.
//!
//! A nonzero submodule `I` of the quotient field of a Dedekind domain with
//! maximal ideals `p_0..p_{n-1}` is determined by the vector
//! `f(p) = -v_p(I)`, with `f(p) = inf` exactly when `I D_p = K`. The module
//! attached to `f` is `{x : v_p(x) >= -f(p) for all p}`, so pointwise `<=`
//! on vectors is inclusion of modules, pointwise `+` is the module product
//! and pointwise minimum is intersection.
//!
//! `-inf` plays the role of an annihilator: any vector with a `-inf` entry
//! describes the zero module and is normalized to [`ValVector::is_zero`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND};

/// `Z ∪ {-inf, +inf}` with `-inf + inf = -inf`.
///
/// Finite values live in `[-i64::MAX, i64::MAX]` so that negation is total;
/// additions leaving that range are reported as [`Error::Overflow`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub const ZERO: ExtInt = ExtInt::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn checked_add(self, rhs: ExtInt) -> Result<ExtInt> {
        use ExtInt::*;
        Ok(match (self, rhs) {
            (NegInf, _) | (_, NegInf) => NegInf,
            (PosInf, _) | (_, PosInf) => PosInf,
            (Finite(a), Finite(b)) => match a.checked_add(b) {
                Some(s) if s != i64::MIN => Finite(s),
                _ => return Err(Error::Overflow("addition")),
            },
        })
    }

    pub fn checked_sub(self, rhs: ExtInt) -> Result<ExtInt> {
        self.checked_add(-rhs)
    }
}

impl Neg for ExtInt {
    type Output = ExtInt;

    fn neg(self) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::PosInf,
            ExtInt::PosInf => ExtInt::NegInf,
            ExtInt::Finite(v) => ExtInt::Finite(
                v.checked_neg()
                    .expect("finite extended integers exclude i64::MIN"),
            ),
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::PosInf => f.write_str("inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtInt::PosInf),
            "-inf" => Ok(ExtInt::NegInf),
            t => match t.parse::<i64>() {
                Ok(v) if v != i64::MIN => Ok(ExtInt::Finite(v)),
                _ => Err(Error::Malformed(format!("not an extended integer: {t:?}"))),
            },
        }
    }
}

pub fn ext_add(a: ExtInt, b: ExtInt) -> Result<ExtInt> {
    a.checked_add(b)
}

pub fn ext_neg(a: ExtInt) -> ExtInt {
    -a
}

/// An ordered list of distinct prime labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Spectrum(Arc<[String]>);

impl Spectrum {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        if labels.len() > MAX_GROUND {
            return Err(Error::Refused(format!(
                "spectra are limited to {MAX_GROUND} primes"
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::Malformed(format!("duplicate prime label {a:?}")));
            }
        }
        Ok(Spectrum(labels.into()))
    }

    /// Labels `p0..p{n-1}`.
    pub fn indexed(n: usize) -> Result<Self> {
        Spectrum::new((0..n).map(|i| format!("p{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    fn same(&self, other: &Spectrum) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    pub(crate) fn check(&self, other: &Spectrum) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::SpectrumMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A point of `Z[±inf]^S` for a finite spectrum `S`, normalized so that the
/// zero module has a single representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ValVector {
    spectrum: Spectrum,
    // `None` is the zero module.
    entries: Option<Box<[ExtInt]>>,
}

impl ValVector {
    pub fn new(spectrum: Spectrum, entries: Vec<ExtInt>) -> Result<Self> {
        if entries.len() != spectrum.len() {
            return Err(Error::SpectrumMismatch(format!(
                "{} entries for {} primes",
                entries.len(),
                spectrum.len()
            )));
        }
        Ok(Self::normalized(spectrum, entries))
    }

    fn normalized(spectrum: Spectrum, entries: Vec<ExtInt>) -> Self {
        let entries = if entries.contains(&ExtInt::NegInf) {
            None
        } else {
            Some(entries.into_boxed_slice())
        };
        ValVector { spectrum, entries }
    }

    /// Convenience constructor over finite entries.
    pub fn finite(spectrum: Spectrum, entries: &[i64]) -> Result<Self> {
        Self::new(spectrum, entries.iter().map(|&v| ExtInt::Finite(v)).collect())
    }

    pub fn zero(spectrum: Spectrum) -> Self {
        ValVector { spectrum, entries: None }
    }

    /// The all-`inf` vector, i.e. the quotient field `K`.
    pub fn top(spectrum: Spectrum) -> Self {
        let n = spectrum.len();
        Self::normalized(spectrum, vec![ExtInt::PosInf; n])
    }

    /// The all-zero vector, i.e. `D` itself.
    pub fn one(spectrum: Spectrum) -> Self {
        let n = spectrum.len();
        Self::normalized(spectrum, vec![ExtInt::ZERO; n])
    }

    /// `inf` on `support`, `0` elsewhere.
    pub fn iota(spectrum: Spectrum, support: Subset) -> Self {
        let entries = (0..spectrum.len())
            .map(|i| {
                if support.contains(i) {
                    ExtInt::PosInf
                } else {
                    ExtInt::ZERO
                }
            })
            .collect();
        Self::normalized(spectrum, entries)
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn len(&self) -> usize {
        self.spectrum.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spectrum.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_none()
    }

    /// Entries of a nonzero vector; `None` for the zero module.
    pub fn entries(&self) -> Option<&[ExtInt]> {
        self.entries.as_deref()
    }

    /// Entry `i`; the zero module reads as `-inf` everywhere.
    pub fn get(&self, i: usize) -> ExtInt {
        match &self.entries {
            Some(e) => e[i],
            None => ExtInt::NegInf,
        }
    }

    fn nonzero(&self, op: &'static str) -> Result<&[ExtInt]> {
        self.entries.as_deref().ok_or(Error::ZeroModule(op))
    }

    /// Module product `[f][g] = [f+g]`.
    pub fn mul(&self, other: &ValVector) -> Result<ValVector> {
        self.spectrum.check(&other.spectrum)?;
        let (Some(a), Some(b)) = (&self.entries, &other.entries) else {
            return Ok(ValVector::zero(self.spectrum.clone()));
        };
        let entries = a
            .iter()
            .zip(b.iter())
            .map(|(&x, &y)| x.checked_add(y))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::normalized(self.spectrum.clone(), entries))
    }

    /// Pointwise minimum of two vectors (intersection of modules).
    pub fn meet(&self, other: &ValVector) -> Result<ValVector> {
        self.spectrum.check(&other.spectrum)?;
        let (Some(a), Some(b)) = (&self.entries, &other.entries) else {
            return Ok(ValVector::zero(self.spectrum.clone()));
        };
        let entries = a.iter().zip(b.iter()).map(|(&x, &y)| x.min(y)).collect();
        Ok(Self::normalized(self.spectrum.clone(), entries))
    }

    /// Pointwise minimum of any number of vectors; the empty infimum is `K`.
    pub fn inf<'a, I>(spectrum: &Spectrum, vectors: I) -> Result<ValVector>
    where
        I: IntoIterator<Item = &'a ValVector>,
    {
        vectors
            .into_iter()
            .try_fold(ValVector::top(spectrum.clone()), |acc, v| acc.meet(v))
    }

    /// `([f] :_K [g]) = [-(-f + g)]`.
    ///
    /// When the colon is the zero module (some `g` entry is `inf` where `f`
    /// is finite) the result is the canonical zero vector.
    pub fn colon(&self, other: &ValVector) -> Result<ValVector> {
        self.spectrum.check(&other.spectrum)?;
        let spectrum = self.spectrum.clone();
        match (&self.entries, &other.entries) {
            // (I : 0) = K
            (_, None) => Ok(ValVector::top(spectrum)),
            // (0 : J) = 0
            (None, Some(_)) => Ok(ValVector::zero(spectrum)),
            (Some(f), Some(g)) => {
                let entries = f
                    .iter()
                    .zip(g.iter())
                    .map(|(&a, &b)| Ok(-((-a).checked_add(b)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Self::normalized(spectrum, entries))
            }
        }
    }

    /// Principal scaling by a vector with finite entries everywhere.
    pub fn scale(&self, by: &ValVector) -> Result<ValVector> {
        match by.entries() {
            Some(c) if c.iter().all(|e| e.is_finite()) => self.mul(by),
            _ => Err(Error::Malformed(
                "scaling vector must have finite entries".into(),
            )),
        }
    }

    /// Pointwise `<=`, i.e. `[self] ⊆ [other]`. Vectors over different
    /// spectra are incomparable.
    pub fn le(&self, other: &ValVector) -> bool {
        if self.spectrum.check(&other.spectrum).is_err() {
            return false;
        }
        match (&self.entries, &other.entries) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a.iter().zip(b.iter()).all(|(x, y)| x <= y),
        }
    }

    /// Partial-order comparison by [`ValVector::le`].
    pub fn partial_cmp_pointwise(&self, other: &ValVector) -> Option<Ordering> {
        match (self.le(other), other.le(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// `f ≼ g`: the `inf`-entries coincide and `f <= g` at almost every prime.
    pub fn preceq(&self, other: &ValVector) -> bool {
        if self.spectrum.check(&other.spectrum).is_err() {
            return false;
        }
        let (Some(f), Some(g)) = (&self.entries, &other.entries) else {
            return false;
        };
        let same_infinities = f
            .iter()
            .zip(g.iter())
            .all(|(a, b)| (*a == ExtInt::PosInf) == (*b == ExtInt::PosInf));
        let exceptions = f.iter().zip(g.iter()).filter(|(a, b)| a > b).map(|_| ());
        same_infinities && holds_almost_everywhere(exceptions)
    }

    /// Indices carrying `inf`.
    pub fn inf_support(&self) -> Result<Subset> {
        let f = self.nonzero("inf_support")?;
        Ok(Subset::from_indices(
            f.iter()
                .enumerate()
                .filter(|(_, e)| **e == ExtInt::PosInf)
                .map(|(i, _)| i),
        ))
    }

    /// Copy of `self` with `inf` written on `support`.
    pub fn with_infinite(&self, support: Subset) -> Result<ValVector> {
        let f = self.nonzero("with_infinite")?;
        let entries = f
            .iter()
            .enumerate()
            .map(|(i, &e)| if support.contains(i) { ExtInt::PosInf } else { e })
            .collect();
        Ok(Self::normalized(self.spectrum.clone(), entries))
    }
}

/// An "almost all" condition on an index set holds when its exception set is
/// finite. Every exception set drawn from a finite spectrum is finite, so
/// draining the iterator always terminates with `true`.
fn holds_almost_everywhere(exceptions: impl Iterator<Item = ()>) -> bool {
    let _finite_count = exceptions.count();
    true
}

pub fn vec_mul(f: &ValVector, g: &ValVector) -> Result<ValVector> {
    f.mul(g)
}

pub fn vec_inf<'a>(
    spectrum: &Spectrum,
    fs: impl IntoIterator<Item = &'a ValVector>,
) -> Result<ValVector> {
    ValVector::inf(spectrum, fs)
}

pub fn vec_colon(f: &ValVector, g: &ValVector) -> Result<ValVector> {
    f.colon(g)
}

pub fn preceq(f: &ValVector, g: &ValVector) -> bool {
    f.preceq(g)
}

pub fn inf_support(f: &ValVector) -> Result<Subset> {
    f.inf_support()
}

pub fn scale(f: &ValVector, c: &ValVector) -> Result<ValVector> {
    f.scale(c)
}

impl fmt::Display for ValVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.entries {
            None => f.write_str("zero"),
            Some(e) => {
                f.write_str("(")?;
                for (i, x) in e.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for ValVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
