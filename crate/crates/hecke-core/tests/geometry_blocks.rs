use std::collections::{BTreeMap, BTreeSet};

use hecke_core::alcove::*;
use hecke_core::bgg::*;
use hecke_core::multipartition::*;
use proptest::prelude::*;

/// `(charge, hbar)` with admissible heights and `0 < h < e`.
fn setups(max_e: i64, max_level: usize) -> Vec<(Charge, Vec<usize>)> {
    let mut out = Vec::new();
    for e in 2..=max_e {
        for l in 1..=max_level {
            for ch in Charge::cylindrical_with_origin(l, e) {
                for hbar in admissible_heights(&ch) {
                    let h: usize = hbar.iter().sum();
                    if h > 0 && (h as i64) < e {
                        out.push((ch.clone(), hbar));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn paths_and_tableaux_correspond() {
    for (ch, hbar) in setups(5, 2) {
        for n in 0..=5 {
            for mp in multipartitions(n, ch.level()) {
                if !mp.fits(&hbar) {
                    continue;
                }
                let tabs = standard_tableaux(&mp);
                let paths: BTreeSet<Vec<usize>> = tabs.iter().map(|t| path_of_tableau(t, &hbar).unwrap()).collect();
                assert_eq!(paths.len(), tabs.len());
                for t in &tabs {
                    let p = path_of_tableau(t, &hbar).unwrap();
                    assert_eq!(tableau_of_path(&p, &hbar).as_ref(), Some(t));
                }
                if in_fundamental_alcove(&mp, &ch, &hbar).unwrap() {
                    let f = fundamental_paths(&mp, &ch, &hbar).unwrap();
                    assert!(f.len() <= tabs.len());
                    assert!(f.iter().all(|p| paths.contains(p)));
                }
            }
        }
    }
}

#[test]
fn reflection_classes_are_residue_classes() {
    for (ch, hbar) in setups(5, 2) {
        for n in 1..=4 {
            let mut by_residues: BTreeMap<Vec<i64>, BTreeSet<Vec<usize>>> = BTreeMap::new();
            for mp in multipartitions(n, ch.level()) {
                if !mp.fits(&hbar) {
                    continue;
                }
                for t in standard_tableaux(&mp) {
                    let p = path_of_tableau(&t, &hbar).unwrap();
                    by_residues.entry(path_residues(&p, &ch, &hbar)).or_default().insert(p);
                }
            }
            for class in by_residues.values() {
                let p = class.iter().next().unwrap();
                let refl: BTreeSet<Vec<usize>> = wall_reflection_class(p, &ch, &hbar)
                    .into_iter()
                    .filter(|q| q.len() == p.len() && tableau_of_path(q, &hbar).is_some())
                    .collect();
                assert_eq!(&refl, class, "s={:?} e={} hbar={hbar:?}", ch.s, ch.e);
            }
        }
    }
}

#[test]
fn one_wall_crossing_has_length_one() {
    for (ch, hbar) in setups(6, 2) {
        let h = hbar.iter().sum::<usize>();
        let y = rho(&ch, &hbar);
        assert!(in_fundamental_alcove_shifted(&y, ch.e));
        assert_eq!(length_shifted(&y, ch.e).unwrap(), 0);
        // each wall of F is t -> t+1 at level 0, or the affine wall 1 -> h at level 1
        for t in 0..h.saturating_sub(1) {
            let z = reflect_shifted(&y, Root::new(t, t + 1), 0, ch.e);
            assert_eq!(length_shifted(&z, ch.e).unwrap(), 1);
        }
        if h > 1 {
            let z = reflect_shifted(&y, Root::new(0, h - 1), 1, ch.e);
            assert_eq!(length_shifted(&z, ch.e).unwrap(), 1);
        }
    }
}

#[test]
fn blocks_by_three_constructions() {
    for (ch, hbar) in setups(5, 2) {
        for la in fundamental_multipartitions(&ch, &hbar, 5).unwrap() {
            let a = block_members(&la, &ch, &hbar).unwrap();
            assert_eq!(a, block_members_by_reflection(&la, &ch, &hbar).unwrap(), "{la}");
            assert_eq!(a, dominance_block(&la, &ch).unwrap(), "{la}");
        }
    }
}

#[test]
fn block_structure() {
    for (ch, hbar) in setups(6, 2) {
        for la in fundamental_multipartitions(&ch, &hbar, 6).unwrap() {
            let p = block_poset(&la, &ch, &hbar).unwrap();
            let zero: Vec<_> = p.nodes.iter().filter(|n| n.length == 0).collect();
            assert_eq!(zero.len(), 1);
            assert_eq!(zero[0].mp, la);
            // gauge freedom: one sign flip per vertex, less the global one
            let s = sign_assignment(&p).unwrap();
            assert_eq!(s.kernel_dim, p.nodes.len() - 1, "{la}");
            assert!(signs_valid(&p, &s.signs));
            if p.diamonds.is_empty() {
                assert!(s.signs.iter().all(|&x| x == 1));
            }
            for node in &p.nodes {
                let g = graded_specht_character(&node.mp, &ch);
                assert_eq!(g.at_one() as u128, count_standard_tableaux(&node.mp));
            }
        }
    }
}

#[test]
fn graded_convention_is_stable() {
    for e in 3..=5 {
        let mut holds = 0;
        let mut other = 0;
        for (ch, hbar) in setups(e, 2).into_iter().filter(|(c, _)| c.e == e) {
            for la in fundamental_multipartitions(&ch, &hbar, 6).unwrap() {
                let p = block_poset(&la, &ch, &hbar).unwrap();
                holds += usize::from(graded_character_identity(&p, GRADED_SHIFT).unwrap());
                other += usize::from(graded_character_identity(&p, -GRADED_SHIFT).unwrap());
            }
        }
        let blocks: usize = setups(e, 2)
            .iter()
            .filter(|(c, _)| c.e == e)
            .map(|(c, h)| fundamental_multipartitions(c, h, 6).unwrap().len())
            .sum();
        assert_eq!(holds, blocks, "e = {e}");
        assert!(other < blocks, "e = {e}");
    }
}

#[test]
fn klr_idempotents_sum_to_identity() {
    for (ch, hbar) in setups(6, 2).into_iter().filter(|(c, _)| c.e > 2) {
        for la in fundamental_multipartitions(&ch, &hbar, 5).unwrap() {
            let m = build_klr_module(&la, &ch, &hbar).unwrap();
            let seqs: BTreeSet<Vec<i64>> = m.residues.iter().cloned().collect();
            let mut sum = IntMatrix::zero(m.dim());
            for i in &seqs {
                sum = sum.add(&m.idempotent(i));
            }
            assert_eq!(sum, IntMatrix::identity(m.dim()));
            assert!(verify_klr_relations(&m).all_pass());
        }
    }
}

fn setup_and_multipartition() -> impl Strategy<Value = (Charge, Vec<usize>, Multipartition)> {
    let all = setups(6, 3);
    (0..all.len(), 0usize..=7, any::<prop::sample::Index>()).prop_filter_map("no fitting shape", move |(k, n, pick)| {
        let (ch, hbar) = all[k].clone();
        let fits: Vec<_> = multipartitions(n, ch.level()).into_iter().filter(|m| m.fits(&hbar)).collect();
        if fits.is_empty() {
            return None;
        }
        let mp = fits[pick.index(fits.len())].clone();
        Some((ch, hbar, mp))
    })
}

proptest! {
    #[test]
    fn reflections_are_involutions((ch, hbar, mp) in setup_and_multipartition(), a in 0usize..6, b in 0usize..6, r in -2i64..3) {
        let y = shifted(&mp, &ch, &hbar).unwrap();
        let h = y.len();
        prop_assume!(h >= 2);
        let (a, b) = (a % h, b % h);
        prop_assume!(a != b);
        let al = Root::new(a, b);
        let z = reflect_shifted(&y, al, r, ch.e);
        prop_assert_eq!(reflect_shifted(&z, al, r, ch.e), y.clone());
        prop_assert_eq!(al.pair(&z) - r * ch.e, -(al.pair(&y) - r * ch.e));
        // reflections preserve the residue multiset of the coordinates
        let res = |v: &[i64]| { let mut r: Vec<i64> = v.iter().map(|x| x.rem_euclid(ch.e)).collect(); r.sort(); r };
        prop_assert_eq!(res(&z), res(&y));
    }

    #[test]
    fn embedding_round_trips((ch, hbar, mp) in setup_and_multipartition()) {
        let x = embed(&mp, &hbar).unwrap();
        prop_assert_eq!(unembed(&x, &hbar), Some(mp.clone()));
        let y = shifted(&mp, &ch, &hbar).unwrap();
        if !on_wall(&y, ch.e) {
            let f = in_fundamental_alcove_shifted(&y, ch.e);
            prop_assert_eq!(f, length_shifted(&y, ch.e).unwrap() == 0);
        }
    }

    #[test]
    fn path_degree_matches_tableau_degree((ch, hbar, mp) in setup_and_multipartition(), pick in any::<prop::sample::Index>()) {
        let tabs = standard_tableaux(&mp);
        let t = &tabs[pick.index(tabs.len())];
        let p = path_of_tableau(t, &hbar).unwrap();
        prop_assert_eq!(path_degree(&p, &ch, &hbar), tableau_degree(t, &ch));
    }
}
