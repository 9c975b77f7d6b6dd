//! Self-check suites behind `semistar verify <suite>`.
//!
//! Each suite returns one [`Check`] per assertion. Random instances come from
//! a fixed-seed ChaCha stream so reruns print identical reports.

use std::fmt;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extvec::{ExtInt, Spectrum, ValVector};
use crate::moore::{
    binom_lower_bound, count_moore, enumerate_moore, family_upper_bound, MooreFamily,
    ENUMERATION_GUARD, KNOWN_COUNTS,
};
use crate::poset::{poset_iso, Orientation, Poset};
use crate::semistar::{
    bounded_window, d_of_overring, dagger_bounded_oracle, dagger_supports, divisorial_closure,
    finite_type_by_truncation, v_of, Star,
};
use crate::subset::Subset;
use crate::zadapter::{colon_oracle, rational_from_exponents, vector_of_module, FracIdealSpec};

pub const SEED: u64 = 0x5e41_57a2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Table1,
    Bounds,
    FiniteType,
    N2Shape,
    Oracles,
    Axioms,
}

fn guard(n: usize) -> Result<()> {
    if n == 0 || n > ENUMERATION_GUARD {
        Err(Error::Refused(format!(
            "suite needs 1 <= n <= {ENUMERATION_GUARD}, got {n}"
        )))
    } else {
        Ok(())
    }
}

pub fn run_suite(suite: Suite, n: Option<usize>) -> Result<Vec<Check>> {
    match suite {
        Suite::Table1 => table1(n.unwrap_or(4)),
        Suite::Bounds => bounds(n.unwrap_or(4)),
        Suite::FiniteType => finite_type(n.unwrap_or(3)),
        Suite::N2Shape => n2_shape(),
        Suite::Oracles => oracles(),
        Suite::Axioms => axioms(n.unwrap_or(3)),
    }
}

pub fn table1(max_n: usize) -> Result<Vec<Check>> {
    guard(max_n)?;
    (1..=max_n)
        .map(|n| {
            let got = count_moore(n, false)?;
            let want = KNOWN_COUNTS[n - 1];
            Ok(Check::new(
                format!("table1 n={n}"),
                got == want,
                format!("count {got}, expected {want}"),
            ))
        })
        .collect()
}

pub fn bounds(max_n: usize) -> Result<Vec<Check>> {
    guard(max_n)?;
    (1..=max_n)
        .map(|n| {
            let count = BigUint::from(count_moore(n, false)?);
            let lo = binom_lower_bound(n);
            let hi = family_upper_bound(n);
            Ok(Check::new(
                format!("bounds n={n}"),
                lo <= count && count <= hi,
                format!("{lo} <= {count} <= {hi}"),
            ))
        })
        .collect()
}

pub fn finite_type(n: usize) -> Result<Vec<Check>> {
    guard(n)?;
    let spectrum = Spectrum::indexed(n)?;
    let mut upfilters = 0u64;
    let mut disagreements = 0u64;
    // the truncation oracle walks all 2^n patterns per family; keep it to n <= 4
    let cross_check = n <= 4;
    for family in enumerate_moore(n, false)? {
        let star = Star::from_moore(spectrum.clone(), family)?;
        let ft = star.is_finite_type();
        upfilters += u64::from(ft);
        if cross_check && ft != finite_type_by_truncation(&star)? {
            disagreements += 1;
        }
    }
    let want = 1u64 << n;
    let mut checks = vec![Check::new(
        format!("finite-type census n={n}"),
        upfilters == want,
        format!("{upfilters} principal up-filters, expected 2^{n} = {want}"),
    )];
    if cross_check {
        checks.push(Check::new(
            format!("finite-type truncation oracle n={n}"),
            disagreements == 0,
            format!("{disagreements} disagreements"),
        ));
    }
    let overring_stars: Vec<Star> = Subset::all(n)
        .map(|x| d_of_overring(&spectrum, x))
        .collect::<Result<_>>()?;
    let distinct = overring_stars
        .iter()
        .enumerate()
        .all(|(i, a)| overring_stars[..i].iter().all(|b| a != b));
    checks.push(Check::new(
        format!("overring stars n={n}"),
        distinct && overring_stars.iter().all(Star::is_finite_type),
        format!("{} stars d_A, pairwise distinct and finite type", overring_stars.len()),
    ));
    Ok(checks)
}

/// The seven stars at `n = 2`, ordered as semistar operations.
pub fn star_lattice(n: usize) -> Result<(Vec<Star>, Poset)> {
    guard(n)?;
    let spectrum = Spectrum::indexed(n)?;
    let stars = enumerate_moore(n, false)?
        .map(|f| Star::from_moore(spectrum.clone(), f))
        .collect::<Result<Vec<_>>>()?;
    let poset = Poset::from_elements(&stars, |a, b| a.le(b));
    Ok((stars, poset))
}

/// `2^{1,2,3}` without `{1}`, under inclusion.
pub fn cube_minus_singleton() -> Poset {
    let sets: Vec<u8> = (0u8..8).filter(|&s| s != 0b001).collect();
    Poset::from_elements(&sets, |a, b| a & !b == 0)
}

pub fn n2_shape() -> Result<Vec<Check>> {
    let (stars, lattice) = star_lattice(2)?;
    let target = cube_minus_singleton();
    let iso = poset_iso(&lattice, &target, Orientation::Iso)?;
    Ok(vec![
        Check::new("n2-shape size", stars.len() == 7, format!("{} stars", stars.len())),
        Check::new(
            "n2-shape isomorphism",
            iso,
            "star lattice vs 2^{1,2,3} minus {{1}}",
        ),
    ])
}

fn random_spec(rng: &mut ChaCha8Rng, primes: &[u64]) -> FracIdealSpec {
    let gens = (0..rng.gen_range(1..=3))
        .map(|_| {
            let exps: Vec<i64> = primes.iter().map(|_| rng.gen_range(-5..=5)).collect();
            rational_from_exponents(primes, &exps, rng.gen_bool(0.5))
        })
        .collect();
    FracIdealSpec::new(primes.to_vec(), gens).expect("valid generators")
}

fn random_vector(rng: &mut ChaCha8Rng, spectrum: &Spectrum, bound: i64, p_inf: f64) -> ValVector {
    let entries = (0..spectrum.len())
        .map(|_| {
            if rng.gen_bool(p_inf) {
                ExtInt::PosInf
            } else {
                ExtInt::Finite(rng.gen_range(-bound..=bound))
            }
        })
        .collect();
    ValVector::new(spectrum.clone(), entries).expect("window vector")
}

pub fn oracles() -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = Vec::new();

    let primes = [2u64, 3, 5];
    let pairs = 1000;
    let mut bad = 0;
    for _ in 0..pairs {
        let i = random_spec(&mut rng, &primes);
        let j = random_spec(&mut rng, &primes);
        let fast = vector_of_module(&i)?.colon(&vector_of_module(&j)?)?;
        if fast != colon_oracle(&i, &j)? {
            bad += 1;
        }
    }
    checks.push(Check::new(
        "colon oracle",
        bad == 0,
        format!("{bad} of {pairs} random pairs disagree"),
    ));

    let sp2 = Spectrum::indexed(2)?;
    let window = bounded_window(&sp2, 2);
    let mut bad = 0;
    for j in &window {
        let star = v_of(j)?;
        for f in &window {
            if star.apply(f)? != divisorial_closure(j, f)? {
                bad += 1;
            }
        }
    }
    checks.push(Check::new(
        "divisorial closure",
        bad == 0,
        format!("{bad} mismatches between v(J) and (J:(J:I)) over the n=2 window"),
    ));

    let mut bad = 0;
    let subsets: Vec<Subset> = Subset::all(2).collect();
    let mut sets = 0;
    for a in 0..subsets.len() {
        for b in a..subsets.len() {
            let gens: Vec<ValVector> = [subsets[a], subsets[b]]
                .iter()
                .map(|&x| {
                    random_vector(&mut rng, &sp2, 6, 0.0)
                        .with_infinite(x)
                        .expect("nonzero")
                })
                .collect();
            let family = dagger_supports(&sp2, &gens)?;
            let oracle = dagger_bounded_oracle(&sp2, &gens, 3)?;
            sets += 1;
            for w in bounded_window(&sp2, 3) {
                if oracle.contains(&w) != family.contains(w.inf_support()?) {
                    bad += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "dagger oracle",
        bad == 0,
        format!("{bad} window disagreements over {sets} generator sets"),
    ));
    Ok(checks)
}

pub fn axioms(n: usize) -> Result<Vec<Check>> {
    guard(n)?;
    let n = n.min(4);
    let spectrum = Spectrum::indexed(n)?;
    let families: Vec<MooreFamily> = enumerate_moore(n, false)?.collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
    let samples = 2000;
    let mut failures = [0u32; 4];
    for _ in 0..samples {
        let star = Star::from_moore(
            spectrum.clone(),
            families.choose(&mut rng).expect("nonempty").clone(),
        )?;
        let f = random_vector(&mut rng, &spectrum, 10, 0.25);
        let g = random_vector(&mut rng, &spectrum, 10, 0.25);
        let fs = star.apply(&f)?;
        let bigger = f.meet(&g)?;
        let closure_ok = f.le(&fs)
            && star.apply(&fs)? == fs
            && star.apply(&bigger)?.le(&fs);
        failures[0] += u32::from(!closure_ok);

        let c = random_vector(&mut rng, &spectrum, 10, 0.0);
        failures[1] += u32::from(star.apply(&f.scale(&c)?)? != fs.scale(&c)?);

        let gs = star.apply(&g)?;
        failures[2] += u32::from(star.apply(&fs.mul(&gs)?)? != star.apply(&f.mul(&g)?)?);

        let h = random_vector(&mut rng, &spectrum, 10, 0.25);
        let hs = star.apply(&h)?;
        failures[3] += u32::from(f.mul(&g)?.le(&hs) != f.mul(&gs)?.le(&hs));
    }
    let names = ["closure", "scaling", "nucleus", "residuation"];
    Ok(names
        .iter()
        .zip(failures)
        .map(|(name, bad)| {
            Check::new(
                format!("axioms {name} n={n}"),
                bad == 0,
                format!("{bad} of {samples} samples fail"),
            )
        })
        .collect())
}
