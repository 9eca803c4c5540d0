//! Property tests for the generic ideal and complex machinery, and for the
//! closed-form lemmas that are not acceptance criteria on their own.

use proptest::prelude::*;

use mixprod::complex::reisner_cm;
use mixprod::ideal::{
    alexander_dual, ideal_intersect, ideal_of_complex, ideal_sum, minimal_primes, minimalize,
    stanley_reisner_complex,
};
use mixprod::sweep::enumerate_specs;
use mixprod::{
    duval_scm, find_shelling, is_strongly_connected, reduced_homology_ranks, verify_shelling_order,
    Caps, Monomial, ShellingSearch, SquarefreeIdeal, VarSet, VariableUniverse,
};

fn arb_ideal() -> impl Strategy<Value = SquarefreeIdeal> {
    (1usize..=4, 0usize..=4)
        .prop_flat_map(|(n, m)| {
            let len = n + m;
            (
                Just((n, m)),
                prop::collection::vec(1u64..(1u64 << len), 1..6),
            )
        })
        .prop_map(|((n, m), supports)| {
            minimalize(
                VariableUniverse::new(n, m).unwrap(),
                supports
                    .into_iter()
                    .map(|b| Monomial::new(VarSet::from_bits(b))),
            )
            .unwrap()
        })
}

fn same_universe_pair() -> impl Strategy<Value = (SquarefreeIdeal, SquarefreeIdeal)> {
    (1usize..=4, 0usize..=4).prop_flat_map(|(n, m)| {
        let len = n + m;
        let gens = prop::collection::vec(1u64..(1u64 << len), 1..5);
        (gens.clone(), gens).prop_map(move |(a, b)| {
            let u = VariableUniverse::new(n, m).unwrap();
            let mk = |v: Vec<u64>| {
                minimalize(
                    u,
                    v.into_iter().map(|b| Monomial::new(VarSet::from_bits(b))),
                )
                .unwrap()
            };
            (mk(a), mk(b))
        })
    })
}

fn is_antichain(sets: &[VarSet]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset(*b))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_is_an_involution(i in arb_ideal()) {
        let dual = alexander_dual(&i).unwrap();
        prop_assert_eq!(alexander_dual(&dual).unwrap(), i);
    }

    #[test]
    fn dual_of_sum_is_intersection_of_duals((a, b) in same_universe_pair()) {
        let lhs = alexander_dual(&ideal_sum(&a, &b).unwrap()).unwrap();
        let rhs = ideal_intersect(&alexander_dual(&a).unwrap(), &alexander_dual(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn primes_intersect_back_to_the_ideal(i in arb_ideal()) {
        let u = i.universe();
        let primes = minimal_primes(&i).unwrap();
        let sets: Vec<VarSet> = primes.iter().map(|p| p.variables()).collect();
        prop_assert!(is_antichain(&sets));
        let mut acc = SquarefreeIdeal::unit(u);
        for p in &primes {
            acc = ideal_intersect(&acc, &p.to_ideal(u).unwrap()).unwrap();
        }
        prop_assert_eq!(acc, i.clone());
        let gens: Vec<VarSet> = i.supports().collect();
        prop_assert!(is_antichain(&gens));
    }

    #[test]
    fn stanley_reisner_round_trip(i in arb_ideal()) {
        let c = stanley_reisner_complex(&i).unwrap();
        prop_assert_eq!(ideal_of_complex(&c), i);
    }

    #[test]
    fn verdicts_are_relabel_invariant(i in arb_ideal(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let c = stanley_reisner_complex(&i).unwrap();
        let mut perm: Vec<usize> = (0..c.universe().len()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let d = c.relabel(&perm).unwrap();
        prop_assert_eq!(reduced_homology_ranks(&c).unwrap(), reduced_homology_ranks(&d).unwrap());
        prop_assert_eq!(reisner_cm(&c).unwrap().holds(), reisner_cm(&d).unwrap().holds());
        prop_assert_eq!(duval_scm(&c).unwrap().holds(), duval_scm(&d).unwrap().holds());
        for k in -1..=c.dim() {
            prop_assert_eq!(c.faces_of_dim(k).unwrap().len(), d.faces_of_dim(k).unwrap().len());
        }
    }

    #[test]
    fn skeleton_and_link_laws(i in arb_ideal()) {
        let c = stanley_reisner_complex(&i).unwrap();
        if c.is_pure() {
            prop_assert_eq!(c.skeleton((c.dim() + 1) as usize).unwrap(), c.clone());
        }
        for l in 0..=(c.dim() + 1) as usize {
            let s = c.skeleton(l).unwrap();
            prop_assert_eq!(s.skeleton(l).unwrap(), s.clone());
        }
        prop_assert_eq!(c.link(VarSet::EMPTY).unwrap(), c.clone());
        if c.is_pure() {
            let top = c.facets()[0];
            for k in 0..=top.len() {
                for f in top.subsets_of_size(k) {
                    prop_assert_eq!(c.link(f).unwrap().dim(), c.dim() - k as isize);
                }
            }
        }
    }

    #[test]
    fn shelling_certificates_verify_and_imply_cm(i in arb_ideal()) {
        let c = stanley_reisner_complex(&i).unwrap();
        let reisner = reisner_cm(&c).unwrap().holds();
        if c.is_pure() && reisner {
            prop_assert!(is_strongly_connected(&c).unwrap());
        }
        if let ShellingSearch::Found(cert) = find_shelling(&c, 10) {
            prop_assert!(cert.verified);
            prop_assert!(verify_shelling_order(&c, &cert.order).unwrap().holds());
            if c.is_pure() {
                prop_assert!(reisner);
            }
            prop_assert!(duval_scm(&c).unwrap().holds());
        }
    }
}

#[test]
fn round_trip_over_mixed_products_up_to_seven_variables() {
    let caps = Caps::default();
    for spec in enumerate_specs(7, 7, 3)
        .into_iter()
        .filter(|s| s.n() + s.m() <= 7)
    {
        let ideal = spec.expand_generators(&caps).unwrap();
        let c = stanley_reisner_complex(&ideal).unwrap();
        assert_eq!(ideal_of_complex(&c), ideal, "{spec}");
    }
}

#[test]
fn skeleton_profile_describes_skeleton_facets() {
    let caps = Caps::default();
    for spec in enumerate_specs(4, 4, 3) {
        let c = spec.complex(&caps).unwrap();
        let dim_ring = spec.qr_profile().dim_ring;
        for l in 0..=dim_ring {
            let sp = spec.skeleton_profile(l).unwrap();
            let u = spec.universe();
            let mut expected: Vec<VarSet> = sp
                .q_bar
                .iter()
                .zip(&sp.r_bar)
                .flat_map(|(&q, &r)| {
                    let ys = u.y_block().subsets_of_size(r);
                    u.x_block()
                        .subsets_of_size(q)
                        .into_iter()
                        .flat_map(move |a| ys.clone().into_iter().map(move |b| a.union(b)))
                })
                .collect();
            expected.sort();
            assert_eq!(
                c.skeleton(l).unwrap().facets(),
                expected.as_slice(),
                "{spec} l={l}"
            );
            assert!(sp.q_bar.windows(2).all(|w| w[0] < w[1]));
        }
        // top level keeps exactly the blocks of maximal sigma
        let p = spec.qr_profile();
        let top = spec.skeleton_profile(dim_ring).unwrap();
        let maximal: Vec<usize> = (0..p.s_prime)
            .filter(|&k| p.sigma[k] == dim_ring)
            .map(|k| p.q_bar[k])
            .collect();
        assert_eq!(top.q_bar, maximal, "{spec}");
    }
}

#[test]
fn ridge_adjacent_facets_lie_in_neighbouring_blocks() {
    let caps = Caps::default();
    for spec in enumerate_specs(4, 4, 3) {
        if !spec.is_unmixed_closed_form().holds() {
            continue;
        }
        let p = spec.qr_profile();
        let blocks = spec.facet_partition(&caps).unwrap();
        for (i, bi) in blocks.iter().enumerate() {
            for (j, bj) in blocks.iter().enumerate().skip(i + 1) {
                for f in &bi.facets {
                    for g in &bj.facets {
                        if f.intersection(*g).len() + 1 == f.len() {
                            assert_eq!(j, i + 1, "{spec}");
                            assert_eq!(p.q_bar[i + 1], p.q_bar[i] + 1, "{spec}");
                            assert_eq!(p.r_bar[i + 1] + 1, p.r_bar[i], "{spec}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn implication_chain_over_the_sweep() {
    for spec in enumerate_specs(4, 4, 3) {
        if spec.is_cm_closed_form().holds() {
            assert!(spec.is_unmixed_closed_form().holds(), "{spec}");
            assert!(spec.is_scm_closed_form().holds(), "{spec}");
            assert!(
                spec.shelling_order(&Caps::default()).unwrap().is_some(),
                "{spec}"
            );
        }
        assert_eq!(
            spec.closed_form_primary_decomposition(&Caps::default())
                .unwrap()
                .height,
            spec.qr_profile().height
        );
    }
}

#[test]
fn maximal_ideal_is_vacuously_cm() {
    let spec = mixprod::MixedProductSpec::from_pairs(2, 2, &[(0, 1), (1, 0)]).unwrap();
    let c = spec.complex(&Caps::default()).unwrap();
    assert_eq!(c.facets(), &[VarSet::EMPTY]);
    assert!(spec.is_cm_closed_form().holds());
    assert!(spec.is_scm_closed_form().holds());
    assert!(reisner_cm(&c).unwrap().holds());
    assert!(duval_scm(&c).unwrap().holds());
}

#[test]
fn closed_forms_need_no_enumeration() {
    // far beyond any enumeration cap
    let spec = mixprod::MixedProductSpec::from_pairs(1000, 900, &[(10, 500), (11, 499), (400, 3)])
        .unwrap();
    let p = spec.qr_profile();
    assert_eq!(p.s_prime, 4);
    assert!(!spec.is_cm_closed_form().holds());
    assert_eq!(spec.closed_form_dual().closed_form_dual(), spec);
    assert_eq!(p.spec_from_profile().unwrap(), spec);
    assert!(spec.expand_generators(&Caps::default()).is_err());
}
