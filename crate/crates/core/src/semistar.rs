//! Semistar operations on a Dedekind domain with finitely many maximal
//! ideals.
//!
//! A semistar operation is determined by its closed modules, and a nonzero
//! module `[f]` is closed exactly when the set of primes where `f = inf`
//! belongs to a fixed Moore family on the spectrum. The star order is the
//! reverse of family inclusion: more closed modules means a smaller star.
//!
//! Applying a star to `f` writes `inf` on the family closure of the
//! `inf`-support of `f` and leaves the other entries alone. This is the
//! least closed vector above `f`; [`bounded_closure_oracle`] recomputes it by
//! brute force inside an entry window.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::extvec::{ExtInt, Spectrum, ValVector};
use crate::moore::{moore_generate, MooreFamily};
use crate::subset::Subset;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Star {
    spectrum: Spectrum,
    family: MooreFamily,
    min_member: Subset,
}

impl Star {
    pub fn from_moore(spectrum: Spectrum, family: MooreFamily) -> Result<Self> {
        if family.n() != spectrum.len() {
            return Err(Error::SpectrumMismatch(format!(
                "family on {} elements for {} primes",
                family.n(),
                spectrum.len()
            )));
        }
        let min_member = family.min_member();
        Ok(Star {
            spectrum,
            family,
            min_member,
        })
    }

    /// Star over the default labels `p0..p{n-1}`.
    pub fn indexed(family: MooreFamily) -> Result<Self> {
        Star::from_moore(Spectrum::indexed(family.n())?, family)
    }

    /// `d`: every module is closed.
    pub fn identity(spectrum: Spectrum) -> Result<Self> {
        let family = MooreFamily::power_set(spectrum.len())?;
        Star::from_moore(spectrum, family)
    }

    /// `e`: every module closes to `K`.
    pub fn trivial_extension(spectrum: Spectrum) -> Result<Self> {
        let family = MooreFamily::trivial(spectrum.len())?;
        Star::from_moore(spectrum, family)
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn family(&self) -> &MooreFamily {
        &self.family
    }

    pub fn min_member(&self) -> Subset {
        self.min_member
    }

    pub fn n(&self) -> usize {
        self.spectrum.len()
    }

    fn check_vector(&self, f: &ValVector, op: &'static str) -> Result<()> {
        self.spectrum.check(f.spectrum())?;
        if f.is_zero() {
            return Err(Error::ZeroModule(op));
        }
        Ok(())
    }

    pub fn apply(&self, f: &ValVector) -> Result<ValVector> {
        self.check_vector(f, "a semistar operation")?;
        let support = f.inf_support()?;
        f.with_infinite(self.family.closure(support))
    }

    pub fn is_closed(&self, f: &ValVector) -> Result<bool> {
        self.check_vector(f, "a semistar operation")?;
        Ok(self.family.contains(f.inf_support()?))
    }

    /// `self <= other` as semistar operations.
    pub fn le(&self, other: &Star) -> bool {
        self.spectrum == other.spectrum && other.family.is_subfamily_of(&self.family)
    }

    pub fn is_finite_type(&self) -> bool {
        self.family.principal_upfilter_base().is_some()
    }

    /// For an overring-induced star `d_A` with `A = ⋂_{p ∈ X} D_p`, the
    /// index set `X`.
    pub fn overring_base(&self) -> Option<Subset> {
        self.family
            .principal_upfilter_base()
            .map(|u| u.complement(self.n()))
    }

    pub fn classify(&self) -> Vec<Label> {
        let n = self.n();
        let full = Subset::full(n);
        let mut labels = Vec::new();
        if self.family.len() == 1usize.checked_shl(n as u32).unwrap_or(0) {
            labels.push(Label::Identity);
        }
        if self.family.len() == 1 {
            labels.push(Label::TrivialExtension);
        }
        if self.is_finite_type() {
            labels.push(Label::FiniteType);
        }
        if self.family.len() == 2 && self.min_member != full {
            labels.push(Label::DivisoriallyGenerated(self.min_member));
        }
        if let Some(x) = self.overring_base() {
            labels.push(Label::OverringInduced(x));
        }
        labels
    }
}

impl fmt::Debug for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Star({:?}, {})", self.spectrum, self.family)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Identity,
    TrivialExtension,
    FiniteType,
    /// `v(J)` for a `J` whose `inf`-support is the given set.
    DivisoriallyGenerated(Subset),
    /// `d_A` for `A = ⋂_{p ∈ X} D_p`.
    OverringInduced(Subset),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Identity => f.write_str("identity"),
            Label::TrivialExtension => f.write_str("trivial-extension"),
            Label::FiniteType => f.write_str("finite-type"),
            Label::DivisoriallyGenerated(_) => f.write_str("divisorially-generated"),
            Label::OverringInduced(x) => write!(f, "overring-induced X={x}"),
        }
    }
}

pub fn star_from_moore(spectrum: Spectrum, family: MooreFamily) -> Result<Star> {
    Star::from_moore(spectrum, family)
}

pub fn moore_of_star(s: &Star) -> MooreFamily {
    s.family.clone()
}

pub fn apply(s: &Star, f: &ValVector) -> Result<ValVector> {
    s.apply(f)
}

pub fn is_closed(s: &Star, f: &ValVector) -> Result<bool> {
    s.is_closed(f)
}

pub fn is_finite_type(s: &Star) -> bool {
    s.is_finite_type()
}

pub fn classify(s: &Star) -> Vec<Label> {
    s.classify()
}

/// Moore family classifying the dagger closure of `gens`: the family
/// generated by the `inf`-supports of the generators.
pub fn dagger_supports(spectrum: &Spectrum, gens: &[ValVector]) -> Result<MooreFamily> {
    let supports = gens
        .iter()
        .map(|g| {
            spectrum.check(g.spectrum())?;
            g.inf_support()
        })
        .collect::<Result<Vec<_>>>()?;
    moore_generate(&supports, spectrum.len())
}

/// Limits for [`dagger_bounded_oracle`]: (primes, window bound, generators).
pub const DAGGER_ORACLE_GUARD: (usize, i64, usize) = (3, 4, 4);

/// Every vector with entries in `{-bound..bound, inf}`.
pub fn bounded_window(spectrum: &Spectrum, bound: i64) -> Vec<ValVector> {
    let values: Vec<ExtInt> = (-bound..=bound)
        .map(ExtInt::Finite)
        .chain(std::iter::once(ExtInt::PosInf))
        .collect();
    let n = spectrum.len();
    let mut out = Vec::with_capacity(values.len().pow(n as u32));
    let mut idx = vec![0usize; n];
    loop {
        let entries = idx.iter().map(|&k| values[k]).collect();
        out.push(ValVector::new(spectrum.clone(), entries).expect("window vector"));
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Literal `(X^≼)^inf` restricted to the window `{-bound..bound, inf}^n`:
/// all window vectors `≼` some generator, saturated under infima (the empty
/// infimum `K` included).
pub fn dagger_bounded_oracle(
    spectrum: &Spectrum,
    gens: &[ValVector],
    bound: i64,
) -> Result<HashSet<ValVector>> {
    let (max_n, max_bound, max_gens) = DAGGER_ORACLE_GUARD;
    if spectrum.len() > max_n || !(0..=max_bound).contains(&bound) || gens.len() > max_gens {
        return Err(Error::Refused(format!(
            "dagger oracle window is limited to n <= {max_n}, 0 <= B <= {max_bound}, \
             at most {max_gens} generators"
        )));
    }
    for g in gens {
        spectrum.check(g.spectrum())?;
        if g.is_zero() {
            return Err(Error::ZeroModule("the dagger closure"));
        }
    }
    let mut set: HashSet<ValVector> = bounded_window(spectrum, bound)
        .into_iter()
        .filter(|v| gens.iter().any(|g| v.preceq(g)))
        .collect();
    set.insert(ValVector::top(spectrum.clone()));
    let mut frontier: Vec<ValVector> = set.iter().cloned().collect();
    while let Some(a) = frontier.pop() {
        let fresh: Vec<ValVector> = set
            .iter()
            .map(|b| a.meet(b))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|c| !set.contains(c))
            .collect();
        for c in fresh {
            if set.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    Ok(set)
}

fn check_spectra(ss: &[Star]) -> Result<&Star> {
    let first = ss.first().ok_or(Error::Malformed(
        "meet/join of an empty list of stars".into(),
    ))?;
    for s in &ss[1..] {
        first.spectrum.check(&s.spectrum)?;
    }
    Ok(first)
}

/// Greatest lower bound: the family generated by all closed supports.
pub fn star_meet(ss: &[Star]) -> Result<Star> {
    let first = check_spectra(ss)?;
    let family = ss[1..]
        .iter()
        .try_fold(first.family.clone(), |acc, s| acc.join(&s.family))?;
    Star::from_moore(first.spectrum.clone(), family)
}

/// Least upper bound: supports closed under every input star.
pub fn star_join(ss: &[Star]) -> Result<Star> {
    let first = check_spectra(ss)?;
    let family = ss[1..]
        .iter()
        .try_fold(first.family.clone(), |acc, s| acc.meet(&s.family))?;
    Star::from_moore(first.spectrum.clone(), family)
}

/// `v(J)`: divisorial closure with respect to `[j]`.
pub fn v_of(j: &ValVector) -> Result<Star> {
    if j.is_zero() {
        return Err(Error::ZeroModule("divisorial closure"));
    }
    let n = j.len();
    let family = moore_generate(&[j.inf_support()?], n)?;
    Star::from_moore(j.spectrum().clone(), family)
}

/// `(J :_K (J :_K I))` computed through two colons. When the inner colon is
/// the zero module the result is taken to be `K`.
pub fn divisorial_closure(j: &ValVector, f: &ValVector) -> Result<ValVector> {
    if j.is_zero() || f.is_zero() {
        return Err(Error::ZeroModule("divisorial closure"));
    }
    let inner = j.colon(f)?;
    if inner.is_zero() {
        return Ok(ValVector::top(j.spectrum().clone()));
    }
    j.colon(&inner)
}

/// `ι_{S∖X}`: the vector of the overring `⋂_{p ∈ X} D_p`.
pub fn overring_vector(spectrum: &Spectrum, x: Subset) -> Result<ValVector> {
    if !x.fits(spectrum.len()) {
        return Err(Error::Malformed(format!(
            "{x} is not a set of prime indices for {} primes",
            spectrum.len()
        )));
    }
    Ok(ValVector::iota(spectrum.clone(), x.complement(spectrum.len())))
}

/// `d_A` for `A = ⋂_{p ∈ X} D_p`, i.e. `I ↦ AI`.
pub fn d_of_overring(spectrum: &Spectrum, x: Subset) -> Result<Star> {
    let n = spectrum.len();
    overring_vector(spectrum, x)?;
    let family = MooreFamily::upfilter(n, x.complement(n))?;
    Star::from_moore(spectrum.clone(), family)
}

/// `AI` as a module product.
pub fn apply_overring(spectrum: &Spectrum, x: Subset, f: &ValVector) -> Result<ValVector> {
    if f.is_zero() {
        return Err(Error::ZeroModule("an overring extension"));
    }
    f.mul(&overring_vector(spectrum, x)?)
}

/// Finite-type test by truncation: for each `inf`-pattern, compare `f^*`
/// with the supremum of `trunc_k(f)^*`, where `trunc_k` replaces `inf` by
/// `k`. The supremum is read off two consecutive witnesses: entries that
/// still grow from `k = 1` to `k = 2` are unbounded.
pub fn finite_type_by_truncation(s: &Star) -> Result<bool> {
    let n = s.n();
    if n > 16 {
        return Err(Error::Refused("truncation census is limited to 16 primes".into()));
    }
    let trunc = |f: &ValVector, k: i64| -> Result<ValVector> {
        let entries = f
            .entries()
            .expect("nonzero")
            .iter()
            .map(|&e| if e == ExtInt::PosInf { ExtInt::Finite(k) } else { e })
            .collect();
        ValVector::new(f.spectrum().clone(), entries)
    };
    for x in Subset::all(n) {
        let f = ValVector::iota(s.spectrum.clone(), x);
        let lo = s.apply(&trunc(&f, 1)?)?;
        let hi = s.apply(&trunc(&f, 2)?)?;
        let sup: Vec<ExtInt> = (0..n)
            .map(|i| if hi.get(i) > lo.get(i) { ExtInt::PosInf } else { lo.get(i) })
            .collect();
        if ValVector::new(s.spectrum.clone(), sup)? != s.apply(&f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least `s`-closed vector `>= f` by brute force over the window
/// `{-bound..bound, inf}^n`: the pointwise minimum of all closed window
/// vectors above `f`. Closedness is judged by `is_closed`; the window must
/// contain `f`.
pub fn bounded_closure_oracle(s: &Star, f: &ValVector, bound: i64) -> Result<ValVector> {
    let uppers: Vec<ValVector> = bounded_window(&s.spectrum, bound)
        .into_iter()
        .filter(|g| f.le(g))
        .filter(|g| s.is_closed(g).unwrap_or(false))
        .collect();
    ValVector::inf(&s.spectrum, &uppers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extvec::ExtInt::PosInf;
    use crate::moore::enumerate_moore;

    const F: fn(i64) -> ExtInt = ExtInt::Finite;

    fn sp(n: usize) -> Spectrum {
        Spectrum::indexed(n).unwrap()
    }

    fn v(entries: &[ExtInt]) -> ValVector {
        ValVector::new(sp(entries.len()), entries.to_vec()).unwrap()
    }

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    fn star(n: usize, ms: &[&[usize]]) -> Star {
        Star::from_moore(sp(n), MooreFamily::new(n, ms.iter().map(|m| s(m))).unwrap()).unwrap()
    }

    #[test]
    fn roundtrip_and_count() {
        for n in 1..=3 {
            for f in enumerate_moore(n, false).unwrap() {
                assert_eq!(moore_of_star(&star_from_moore(sp(n), f.clone()).unwrap()), f);
            }
        }
        assert_eq!(enumerate_moore(1, false).unwrap().count(), 2);
        assert!(Star::from_moore(sp(2), MooreFamily::trivial(3).unwrap()).is_err());
    }

    #[test]
    fn apply_examples() {
        let d = Star::identity(sp(2)).unwrap();
        let e = Star::trivial_extension(sp(2)).unwrap();
        for f in bounded_window(&sp(2), 2) {
            assert_eq!(d.apply(&f).unwrap(), f);
            assert_eq!(e.apply(&f).unwrap(), ValVector::top(sp(2)));
        }
        let st = star(2, &[&[0], &[0, 1]]);
        assert_eq!(st.apply(&v(&[F(0), F(0)])).unwrap(), v(&[PosInf, F(0)]));
        assert!(matches!(
            st.apply(&ValVector::zero(sp(2))),
            Err(Error::ZeroModule(_))
        ));
    }

    #[test]
    fn apply_matches_bounded_brute_force() {
        // n=2 example: least closed vector above (0,0) under {{0},S}
        let st = star(2, &[&[0], &[0, 1]]);
        let f = v(&[F(0), F(0)]);
        assert_eq!(bounded_closure_oracle(&st, &f, 2).unwrap(), st.apply(&f).unwrap());
    }

    #[test]
    fn is_closed_examples() {
        let st = star(2, &[&[0], &[0, 1]]);
        assert!(st.is_closed(&v(&[PosInf, F(3)])).unwrap());
        assert!(!st.is_closed(&v(&[F(0), F(0)])).unwrap());
        for fam in enumerate_moore(2, false).unwrap() {
            let st = Star::indexed(fam).unwrap();
            assert!(st.is_closed(&ValVector::top(sp(2))).unwrap());
        }
    }

    #[test]
    fn dagger_supports_examples() {
        assert_eq!(
            dagger_supports(&sp(2), &[]).unwrap(),
            MooreFamily::trivial(2).unwrap()
        );
        assert_eq!(
            dagger_supports(&sp(2), &[v(&[PosInf, F(0)]), v(&[F(0), PosInf])]).unwrap(),
            MooreFamily::power_set(2).unwrap()
        );
        assert_eq!(
            dagger_supports(&sp(2), &[v(&[F(3), F(-2)])]).unwrap(),
            MooreFamily::new(2, [Subset::EMPTY, Subset::full(2)]).unwrap()
        );
    }

    #[test]
    fn dagger_oracle_examples() {
        let got = dagger_bounded_oracle(&sp(2), &[v(&[F(0), F(0)])], 1).unwrap();
        let mut want: HashSet<ValVector> = bounded_window(&sp(2), 1)
            .into_iter()
            .filter(|w| w.inf_support().unwrap().is_empty())
            .collect();
        want.insert(ValVector::top(sp(2)));
        assert_eq!(got, want);
        assert_eq!(want.len(), 10);

        let only_top = dagger_bounded_oracle(&sp(2), &[], 3).unwrap();
        assert_eq!(only_top, HashSet::from([ValVector::top(sp(2))]));

        assert!(dagger_bounded_oracle(&sp(4), &[], 1).is_err());
        assert!(dagger_bounded_oracle(&sp(2), &[], 5).is_err());
    }

    #[test]
    fn meet_join_examples() {
        let d = Star::identity(sp(2)).unwrap();
        let e = Star::trivial_extension(sp(2)).unwrap();
        assert!(d.le(&e) && !e.le(&d));
        assert_eq!(star_meet(&[e.clone(), d.clone()]).unwrap(), d);
        assert_eq!(star_join(&[e.clone(), d.clone()]).unwrap(), e);
        let m = star_meet(&[
            v_of(&v(&[PosInf, F(0)])).unwrap(),
            v_of(&v(&[F(0), PosInf])).unwrap(),
        ])
        .unwrap();
        assert_eq!(m.family(), &MooreFamily::power_set(2).unwrap());
        assert!(star_meet(&[]).is_err());
        assert!(star_join(&[d, Star::identity(sp(3)).unwrap()]).is_err());
    }

    #[test]
    fn v_of_examples() {
        assert_eq!(v_of(&v(&[F(0), F(0)])).unwrap(), star(2, &[&[], &[0, 1]]));
        assert_eq!(v_of(&v(&[PosInf, F(0)])).unwrap(), star(2, &[&[0], &[0, 1]]));
        assert_eq!(
            v_of(&ValVector::top(sp(2))).unwrap(),
            Star::trivial_extension(sp(2)).unwrap()
        );
        assert!(v_of(&ValVector::zero(sp(2))).is_err());
    }

    #[test]
    fn v_of_agrees_with_double_colon() {
        let window = bounded_window(&sp(2), 2);
        for j in &window {
            let st = v_of(j).unwrap();
            for f in &window {
                assert_eq!(
                    st.apply(f).unwrap(),
                    divisorial_closure(j, f).unwrap(),
                    "j={j} f={f}"
                );
            }
        }
    }

    #[test]
    fn d_of_overring_examples() {
        let full = Subset::full(2);
        assert_eq!(d_of_overring(&sp(2), full).unwrap(), Star::identity(sp(2)).unwrap());
        assert_eq!(
            d_of_overring(&sp(2), Subset::EMPTY).unwrap(),
            Star::trivial_extension(sp(2)).unwrap()
        );
        assert_eq!(d_of_overring(&sp(2), s(&[0])).unwrap(), star(2, &[&[1], &[0, 1]]));
        assert!(d_of_overring(&sp(2), s(&[2])).is_err());
    }

    #[test]
    fn d_of_overring_is_multiplication_by_the_overring() {
        let window = bounded_window(&sp(2), 2);
        for x in Subset::all(2) {
            let st = d_of_overring(&sp(2), x).unwrap();
            for f in &window {
                assert_eq!(st.apply(f).unwrap(), apply_overring(&sp(2), x, f).unwrap());
            }
        }
    }

    #[test]
    fn finite_type_examples() {
        for n in 1..=3 {
            for x in Subset::all(n) {
                let st = d_of_overring(&sp(n), x).unwrap();
                assert!(st.is_finite_type());
                assert!(finite_type_by_truncation(&st).unwrap());
            }
        }
        assert!(Star::trivial_extension(sp(3)).unwrap().is_finite_type());
        let v00 = v_of(&v(&[F(0), F(0)])).unwrap();
        assert!(!v00.is_finite_type());
        assert!(!finite_type_by_truncation(&v00).unwrap());
        // (inf,0): every truncation closes to itself, but (inf,0) closes to K
        let f = v(&[PosInf, F(0)]);
        assert_eq!(v00.apply(&v(&[F(5), F(0)])).unwrap(), v(&[F(5), F(0)]));
        assert_eq!(v00.apply(&f).unwrap(), ValVector::top(sp(2)));
    }

    #[test]
    fn truncation_oracle_agrees_with_upfilter_test() {
        for n in 1..=3 {
            for fam in enumerate_moore(n, false).unwrap() {
                let st = Star::indexed(fam).unwrap();
                assert_eq!(st.is_finite_type(), finite_type_by_truncation(&st).unwrap());
            }
        }
    }

    #[test]
    fn classify_examples() {
        let d = Star::identity(sp(2)).unwrap();
        assert_eq!(
            d.classify(),
            vec![Label::Identity, Label::FiniteType, Label::OverringInduced(Subset::full(2))]
        );
        let e = Star::trivial_extension(sp(2)).unwrap();
        assert_eq!(
            e.classify(),
            vec![
                Label::TrivialExtension,
                Label::FiniteType,
                Label::OverringInduced(Subset::EMPTY)
            ]
        );
        assert_eq!(
            star(2, &[&[], &[0, 1]]).classify(),
            vec![Label::DivisoriallyGenerated(Subset::EMPTY)]
        );
        let labels: Vec<String> = e.classify().iter().map(ToString::to_string).collect();
        assert_eq!(labels, ["trivial-extension", "finite-type", "overring-induced X={}"]);
    }
}
