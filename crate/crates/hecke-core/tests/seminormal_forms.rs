use hecke_core::cali::enumerate_cali;
use hecke_core::cyclotomic::Cyc;
use hecke_core::multipartition::Charge;
use hecke_core::seminormal::*;
use proptest::prelude::*;

#[test]
fn member_classes_are_counted_by_cali() {
    for e in 2..=4i64 {
        for l in 1..=2 {
            for ch in Charge::cylindrical_with_origin(l, e) {
                for n in 1..=5 {
                    let members = all_calibrated_classes(n, e)
                        .into_iter()
                        .filter(|c| cyclotomic_membership(&seminormal_module(c, e, 1).unwrap(), &ch))
                        .count();
                    assert_eq!(members, enumerate_cali(n, &ch).unwrap().len(), "n={n} s={:?} e={e}", ch.s);
                }
            }
        }
    }
}

#[test]
fn invariance_ratio_has_closed_form() {
    for e in 2..=5i64 {
        for a in (1..e).filter(|a| num_integer::gcd(*a, e) == 1) {
            for n in 2..=4 {
                for class in all_calibrated_classes(n, e) {
                    let m = seminormal_module(&class, e, a).unwrap();
                    for w in &class {
                        for i in 0..n - 1 {
                            if is_admissible_transposition(w, i, e) {
                                let r = invariance_ratio(&m, w, i).unwrap();
                                assert_eq!(r, ratio_closed_form(w, i, e, a).unwrap());
                                assert!(r.is_real());
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn one_dimensional_scalars() {
    // (0,1): T acts by q; (0,-1): T acts by -1
    for e in 3..=6i64 {
        let m = seminormal_module(&weight_class(&[0, 1], e).unwrap(), e, 1).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.t[0].get(0, 0), Cyc::root(e as usize, 1));
        let m = seminormal_module(&weight_class(&[0, -1], e).unwrap(), e, 1).unwrap();
        assert_eq!(m.t[0].get(0, 0), Cyc::from_int(e as usize, -1));
    }
}

#[test]
fn zero_characteristic_is_rejected() {
    assert!(seminormal_module(&[vec![0]], 0, 1).is_err());
}

fn level_one_weight() -> impl Strategy<Value = (Vec<i64>, i64)> {
    (3i64..=8, prop::collection::vec(any::<bool>(), 0..6)).prop_map(|(e, steps)| {
        // grow a shape-like chain: each entry adjacent to an earlier one
        let mut m = vec![0i64];
        for up in steps {
            let base = *m.last().unwrap();
            m.push(if up { base + 1 } else { base - 1 });
        }
        (m, e)
    })
}

proptest! {
    #[test]
    fn level_one_weights_satisfy_the_definition((m, e) in level_one_weight()) {
        if is_level_one_weight(&m, e) {
            prop_assert!(is_calibrated_weight(&m, e));
            let class = weight_class(&m, e).unwrap();
            prop_assert!(class.iter().all(|w| is_calibrated_weight(w, e)));
        }
    }

    #[test]
    fn classes_are_closed_and_relations_hold((m, e) in level_one_weight(), a in 1i64..8) {
        prop_assume!(num_integer::gcd(a, e) == 1 && is_calibrated_weight(&m, e));
        let class = weight_class(&m, e).unwrap();
        let module = seminormal_module(&class, e, a).unwrap();
        prop_assert!(verify_hecke_relations(&module).all_pass());
        let f = form_values(&module).unwrap();
        prop_assert!(is_hermitian_invariant(&module, &f.values));
        if a == 1 && cyclotomic_membership(&module, &Charge::new(vec![0], e).unwrap()) {
            prop_assert!(f.signs.iter().all(|&s| s == 1));
        }
    }
}
