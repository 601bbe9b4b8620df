use std::collections::BTreeSet;

use hecke_core::cali::*;
use hecke_core::crystal::*;
use hecke_core::multipartition::*;
use proptest::prelude::*;

fn ch(s: &[i64], e: i64) -> Charge {
    Charge::new(s.to_vec(), e).unwrap()
}

// partitions of n with no part divisible by e; equinumerous with e-regular partitions
fn glaisher_count(n: usize, e: usize) -> usize {
    partitions(n).iter().filter(|p| p.iter().all(|&x| x % e != 0)).count()
}

#[test]
fn level_one_reachable_count() {
    for e in 2..=5 {
        for n in 0..=9 {
            assert_eq!(reachable(n, &ch(&[0], e as i64)).len(), glaisher_count(n, e), "n={n} e={e}");
        }
    }
}

#[test]
fn enumerate_cali_is_the_no_stuttering_set() {
    for e in 2..=5 {
        for l in 1..=2 {
            for c in Charge::cylindrical_with_origin(l, e) {
                for n in 0..=6 {
                    let got: BTreeSet<_> = enumerate_cali(n, &c).unwrap().into_iter().collect();
                    let want: BTreeSet<_> =
                        multipartitions(n, l).into_iter().filter(|mp| is_no_stuttering(mp, &c)).collect();
                    assert_eq!(got, want, "n={n} s={:?} e={e}", c.s);
                }
            }
        }
    }
}

#[test]
fn example_multipartitions() {
    let c = ch(&[0, 1, 4], 7);
    let good = Multipartition::from_parts(&[&[2, 2], &[2], &[3, 2]]);
    assert_eq!(border_multiset(&good, &c), vec![0, 1, 2, 4, 6]);
    assert!(is_cali(&good, &c).unwrap());
    assert!(is_flotw(&good, &c));
    assert!(is_cylindrical_mp(&good, &c));
    let bad = Multipartition::from_parts(&[&[2, 2], &[2, 2, 1], &[3, 2, 1]]);
    assert_eq!(reading_word(&bad, &c), vec![0, 1, -1, 1, 2, 2, 4, 6]);
    assert!(!is_cali(&bad, &c).unwrap());
}

#[test]
fn wide_border_is_not_cali() {
    let c = ch(&[14, 16, 17, 23], 12);
    let mu = Multipartition::from_parts(&[&[12, 12, 10], &[13, 1], &[13], &[10, 9]]);
    assert!(c.is_cylindrical());
    assert!(!is_cali(&mu, &c).unwrap());
}

#[test]
fn horizontal_cuts_recover_the_multipartition() {
    for e in 3..=5 {
        for l in 1..=3 {
            for c in Charge::cylindrical_with_origin(l, e) {
                for n in 1..=6 {
                    for mp in enumerate_cali(n, &c).unwrap() {
                        if mp.components().iter().any(|p| p.is_empty()) {
                            continue;
                        }
                        let cuts = horizontal_cut_splittings(&skew_shape(&mp, &c).unwrap());
                        assert!(cuts.iter().any(|(m, s)| *m == mp && *s == c.s), "{mp} s={:?} e={e}", c.s);
                    }
                }
            }
        }
    }
}

#[test]
fn border_splittings_are_cali_with_that_border() {
    for e in 3..=6 {
        for l in 1..=3 {
            for c in Charge::cylindrical_with_origin(l, e) {
                for n in 1..=5 {
                    for mp in enumerate_cali(n, &c).unwrap() {
                        let border = skew_shape(&mp, &c).unwrap().border();
                        let mut want = border.clone();
                        want.sort_unstable();
                        for (m, s) in charged_splittings_of_border(&border, l, e).unwrap() {
                            assert!(s.is_cylindrical() && is_cali(&m, &s).unwrap(), "{m} s={:?}", s.s);
                            assert_eq!(border_multiset(&m, &s), want, "{m} s={:?}", s.s);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn border_cylindricity_agrees_with_direct_check() {
    for e in 2..=5 {
        for l in 1..=3 {
            for c in Charge::cylindrical_with_origin(l, e) {
                for n in 0..=6 {
                    for mp in multipartitions(n, l) {
                        if border_conditions(&mp, &c) {
                            assert_eq!(is_cylindrical_mp_from_border(&mp, &c).unwrap(), is_cylindrical_mp(&mp, &c));
                        }
                    }
                }
            }
        }
    }
}

fn word_and_charge() -> impl Strategy<Value = (Vec<i64>, Charge)> {
    (2i64..=5, 1usize..=3).prop_flat_map(|(e, l)| {
        let all = Charge::cylindrical_with_origin(l, e);
        (prop::collection::vec(0..e, 0..10), 0..all.len()).prop_map(move |(w, i)| (w, all[i].clone()))
    })
}

proptest! {
    #[test]
    fn crystal_operators_are_inverse((word, c) in word_and_charge(), i in 0i64..5) {
        let i = i % c.e;
        // follow the word as far as it goes
        let mut mp = Multipartition::empty(c.level());
        for &j in &word {
            match f_tilde(&mp, &c, j) {
                Some(next) => mp = next,
                None => break,
            }
        }
        prop_assert!(is_reachable(&mp, &c));
        prop_assert!(is_flotw(&mp, &c));
        if let Some(up) = f_tilde(&mp, &c, i) {
            prop_assert_eq!(e_tilde(&up, &c, i), Some(mp.clone()));
        }
        if let Some(down) = e_tilde(&mp, &c, i) {
            prop_assert_eq!(f_tilde(&down, &c, i), Some(mp.clone()));
        }
    }

    #[test]
    fn cali_implies_reachable_and_short((word, c) in word_and_charge()) {
        if let Some(mp) = build_from_word(&word, &c) {
            if is_cali(&mp, &c).unwrap() {
                prop_assert!(is_flotw(&mp, &c));
                prop_assert!(mp.heights().iter().sum::<usize>() < c.e as usize);
                prop_assert!(is_increasing(&reading_word(&mp, &c)));
            }
        }
    }
}
