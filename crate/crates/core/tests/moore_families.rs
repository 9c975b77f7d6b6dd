mod common;

use common::*;
use semistar::moore::{
    closure, count_moore, enumerate_moore, family_join, family_meet, is_moore, moore_generate,
    MooreFamily,
};
use semistar::{Error, Subset};

#[test]
fn enumeration_matches_exhaustive_search() {
    for n in 1..=4 {
        let listed: Vec<Vec<u64>> = enumerate_moore(n, false).unwrap().map(|f| member_bits(&f)).collect();
        let brute = brute_moore(n);
        // already in lexicographic order of sorted member lists
        assert_eq!(listed, brute, "n={n}");
        assert_eq!(count_moore(n, false).unwrap(), brute.len() as u64);
    }
}

#[test]
fn counts_do_not_depend_on_thread_count() {
    let pool = |k| rayon::ThreadPoolBuilder::new().num_threads(k).build().unwrap();
    let one = pool(1).install(|| count_moore(5, false).unwrap());
    let four = pool(4).install(|| count_moore(5, false).unwrap());
    assert_eq!(one, 1_385_552);
    assert_eq!(one, four);
}

#[test]
fn guards() {
    assert!(matches!(count_moore(6, false), Err(Error::Refused(_))));
    assert!(count_moore(0, false).is_err());
    assert!(enumerate_moore(8, true).is_err());
}

#[test]
fn closure_operator_axioms() {
    for n in 1..=3 {
        for fam in enumerate_moore(n, false).unwrap() {
            for x in Subset::all(n) {
                let cx = closure(&fam, x);
                assert!(x.is_subset_of(cx));
                assert_eq!(closure(&fam, cx), cx);
                assert!(fam.contains(cx));
                // least member above x
                for m in fam.members() {
                    if x.is_subset_of(*m) {
                        assert!(cx.is_subset_of(*m));
                    }
                }
                for y in Subset::all(n).filter(|y| x.is_subset_of(*y)) {
                    assert!(cx.is_subset_of(closure(&fam, y)));
                }
            }
        }
    }
}

#[test]
fn lattice_of_families_n3() {
    let fams: Vec<MooreFamily> = enumerate_moore(3, false).unwrap().collect();
    assert_eq!(fams.len(), 61);
    for a in &fams {
        for b in &fams {
            let m = family_meet(a, b).unwrap();
            let j = family_join(a, b).unwrap();
            assert!(is_moore(m.members(), 3) && is_moore(j.members(), 3));
            assert_eq!(m, family_meet(b, a).unwrap());
            assert_eq!(j, family_join(b, a).unwrap());
            assert_eq!(family_meet(a, &family_join(a, b).unwrap()).unwrap(), *a);
            // meet is the intersection; join is the least family containing both
            let both: Vec<u64> = member_bits(a).into_iter().filter(|x| member_bits(b).contains(x)).collect();
            assert_eq!(member_bits(&m), both);
            for c in &fams {
                if a.is_subfamily_of(c) && b.is_subfamily_of(c) {
                    assert!(j.is_subfamily_of(c));
                }
            }
        }
    }
}

#[test]
fn generation_is_intersection_closure() {
    let n = 4;
    for gens_bits in [vec![], vec![0b0011, 0b0110], vec![0b1010, 0b0101, 0b1100]] {
        let gens: Vec<Subset> = gens_bits.iter().map(|&b| subset(b)).collect();
        let fam = moore_generate(&gens, n).unwrap();
        let want: Vec<u64> = brute_moore(n)
            .into_iter()
            .filter(|m| gens_bits.iter().all(|g| m.contains(g)))
            .min_by_key(Vec::len)
            .unwrap();
        assert_eq!(member_bits(&fam), want);
    }
}

#[test]
fn invalid_families_are_rejected() {
    let s = |v: &[u64]| v.iter().map(|&b| subset(b)).collect::<Vec<_>>();
    assert!(matches!(MooreFamily::new(2, s(&[1, 2, 3])), Err(Error::NotMoore(_))));
    assert!(matches!(MooreFamily::new(2, s(&[1])), Err(Error::NotMoore(_))));
    assert!(!is_moore(&s(&[1, 2, 3]), 2));
    assert!(is_moore(&s(&[0, 1, 2, 3]), 2));
}
