use kanforge::cosk::{coskeletal_extend, csq_prime, csq_prime_with_unit};
use kanforge::group::FiniteGroup;
use kanforge::hom::{find_isomorphism, hom_sset};
use kanforge::kan::{classify, kan_status};
use kanforge::loops::{check_shift, loop_space, LoopVariant};
use kanforge::nerve::nerve_group;
use kanforge::pi::{pi, pi0};
use kanforge::standard::{
    boundary_sub, circle, constant, delta, disjoint_union, horn_sub, product, quotient, restrict, simplex_mod_vertices,
    square_mod_vertical, suspension_square, Sub,
};
use kanforge::{Budget, Error, SSet};
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn levels(x: &SSet) -> Vec<usize> {
    (0..=x.dim()).map(|k| x.len(k)).collect()
}

/// Brute-force count of nondegenerate simplices of `Δ^n` in level `k`:
/// strictly increasing sequences, `C(n + 1, k + 1)`.
fn strict_sequences(n: usize, k: usize) -> usize {
    let mut count = 0;
    let total = (n + 1).pow(k as u32 + 1);
    for code in 0..total {
        let seq: Vec<usize> = (0..=k).map(|i| code / (n + 1).pow(i as u32) % (n + 1)).collect();
        if seq.windows(2).all(|w| w[0] < w[1]) {
            count += 1;
        }
    }
    count
}

#[test]
fn standard_simplex_level_sizes() {
    // Monotone sequences of length k + 1 in [0, n].
    for n in 0..4 {
        let d = delta(n, 3);
        for k in 0..=3 {
            assert_eq!(d.len(k), binomial(n + k + 1, k + 1), "Δ^{n} level {k}");
            assert_eq!(d.nondegenerate_counts()[k], strict_sequences(n, k));
        }
        assert!(d.validate().is_valid());
    }
}

#[test]
fn boundary_and_horn_counts() {
    let (d, sub) = boundary_sub(2, 3);
    assert_eq!(restrict(&d, &sub).unwrap().nondegenerate_counts(), vec![3, 3, 0, 0]);
    let (d, sub) = horn_sub(2, 1, 3).unwrap();
    assert_eq!(restrict(&d, &sub).unwrap().nondegenerate_counts(), vec![3, 2, 0, 0]);
    assert!(matches!(horn_sub(2, 3, 3), Err(Error::BadHornIndex { .. })));
}

#[test]
fn circle_is_delta1_mod_boundary() {
    let (d1, ends) = boundary_sub(1, 3);
    let q = quotient(&d1, &ends).unwrap();
    assert!(q.validate().is_valid());
    assert!(find_isomorphism(&q, &circle(3), &Budget::unlimited()).unwrap().is_some());
    assert_eq!(circle(3).nondegenerate_counts(), vec![1, 1, 0, 0]);
    assert_eq!(levels(&circle(3)), vec![1, 2, 3, 4]);
}

#[test]
fn quotient_examples_nondegenerate_counts() {
    assert_eq!(square_mod_vertical(4).nondegenerate_counts(), vec![1, 3, 2, 0, 0]);
    assert_eq!(suspension_square(2, 4).nondegenerate_counts(), vec![1, 6, 8, 3, 0]);
    assert_eq!(simplex_mod_vertices(2, 3).nondegenerate_counts(), vec![1, 3, 1, 0]);
    for x in [square_mod_vertical(3), suspension_square(2, 3), simplex_mod_vertices(2, 3)] {
        assert!(x.validate().is_valid());
        assert!(x.is_reduced());
    }
}

#[test]
fn validation_reports_a_broken_identity() {
    let d = delta(1, 2);
    let ids: Vec<Vec<String>> = (0..=2).map(|k| d.ids(k).to_vec()).collect();
    let mut face: Vec<Vec<Vec<usize>>> =
        (0..=2).map(|k| (0..if k == 0 { 0 } else { k + 1 }).map(|i| d.face_table(k, i).to_vec()).collect()).collect();
    let degen: Vec<Vec<Vec<usize>>> =
        (0..=2).map(|k| (0..if k < 2 { k + 1 } else { 0 }).map(|j| d.degen_table(k, j).to_vec()).collect()).collect();
    face[1][0].swap(0, 1);
    let broken = SSet::from_tables(ids, face, degen).unwrap();
    let report = broken.validate();
    assert!(!report.is_valid());
    assert!(report.violations.iter().any(|v| v.level >= 1));
}

#[test]
fn delta1_outer_horns_are_unfilled() {
    let row = kan_status(&delta(1, 2), 1).unwrap();
    let h0 = &row.horns[0];
    assert!(!h0.surjective);
    assert_eq!(h0.unfilled.as_deref(), Some(&["00".to_string(), "01".to_string()][..]));
    assert!(row.horns[1].surjective);
    assert!(!row.horns[2].surjective);
}

#[test]
fn group_nerve_is_a_one_kan_groupoid() {
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()] {
        let n = nerve_group(&g, 3);
        let c = classify(&n, 1).unwrap();
        assert!(c.n_kan_groupoid && c.n_kan_groupoid_direct && c.weakly_n_coskeletal && c.n_minimal);
        assert_eq!(levels(&n), (0..=3).map(|k| g.order().pow(k as u32)).collect::<Vec<_>>());
    }
}

#[test]
fn classify_needs_enough_levels() {
    let x = delta(2, 1);
    assert!(matches!(classify(&x, 1), Err(Error::DimensionOutOfRange { .. })));
}

#[test]
fn coskeletal_extension_of_tau2_nerve() {
    let z2 = FiniteGroup::cyclic(2);
    let tau2 = nerve_group(&z2, 2);
    assert_eq!(tau2.coskeletal_at(), Some(2));
    let ext = coskeletal_extend(&tau2, 3).unwrap();
    assert_eq!(ext.len(3), 8);
    assert!(ext.validate().is_valid());
    assert!(find_isomorphism(&ext, &nerve_group(&z2, 3), &Budget::unlimited()).unwrap().is_some());
}

#[test]
fn coskeletal_extension_needs_a_mark() {
    assert!(matches!(coskeletal_extend(&delta(1, 2), 3), Err(Error::NotCoskeletal(_))));
}

#[test]
fn csq0_of_a_two_point_set_uses_tuples_of_vertices() {
    // Level n of the 0-coskeleton of a set S is S^{n+1}.
    let pts = constant(&["a".to_string(), "b".to_string()], 0).with_coskeletal_at(Some(0));
    let c = coskeletal_extend(&pts, 2).unwrap();
    assert_eq!(levels(&c), vec![2, 4, 8]);
    assert!(c.validate().is_valid());
}

#[test]
fn delta0_extends_to_singletons() {
    let c = coskeletal_extend(&delta(0, 0).with_coskeletal_at(Some(0)), 4).unwrap();
    assert_eq!(levels(&c), vec![1; 5]);
}

#[test]
fn csq_prime_of_delta2_at_0() {
    // The six edges of Δ² have pairwise distinct endpoints, so none merge.
    let q = csq_prime(&delta(2, 3), 0).unwrap();
    assert_eq!(q.len(1), 6);
    assert!(classify(&q, 0).unwrap().weakly_n_coskeletal);
    assert!(q.validate().is_valid());
}

#[test]
fn csq_prime_is_identity_on_weakly_coskeletal_input() {
    let x = nerve_group(&FiniteGroup::cyclic(3), 3);
    let (q, unit) = csq_prime_with_unit(&x, 1).unwrap();
    assert!(unit.is_simplicial(&x, &q));
    assert!(unit.is_levelwise_bijective(&q));
}

#[test]
fn csq_prime_identifies_parallel_simplices() {
    let x = nerve_group(&FiniteGroup::cyclic(2), 3);
    let q = csq_prime(&x, 0).unwrap();
    assert_eq!(q.len(1), 1);
    assert!(classify(&q, 0).unwrap().weakly_n_coskeletal);
    assert!(q.validate().is_valid());
}

#[test]
fn path_components() {
    let two = disjoint_union(&circle(2), &delta(1, 2));
    assert_eq!(pi0(&two).len(), 2);
    assert_eq!(pi0(&delta(2, 2)).len(), 1);
}

#[test]
fn fundamental_group_of_group_nerves() {
    for g in
        [FiniteGroup::cyclic(4), FiniteGroup::symmetric3(), FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2))]
    {
        let h = pi(&nerve_group(&g, 3), 1, 0).unwrap();
        assert!(h.group.is_isomorphic(&g));
        assert_eq!(h.kan_checked_through, 2);
    }
}

#[test]
fn pi_rejects_non_kan_input() {
    assert!(matches!(pi(&circle(3), 1, 0), Err(Error::NotKan(_))));
}

#[test]
fn loop_spaces_of_the_circle() {
    let s1 = circle(3);
    let plain = loop_space(&s1, 0, LoopVariant::Plain).unwrap();
    let reduced = loop_space(&s1, 0, LoopVariant::Reduced).unwrap();
    let degenerate = s1.id(1, s1.degen(0, 0, 0)).to_string();
    let e = (0..s1.len(1)).find(|&a| !s1.is_degenerate(1, a)).map(|a| s1.id(1, a).to_string()).unwrap();
    assert_eq!(plain.ids(0), &[degenerate.clone(), e]);
    assert_eq!(reduced.ids(0), &[degenerate]);
    assert!(plain.validate().is_valid() && reduced.validate().is_valid());
}

#[test]
fn loop_space_of_group_nerve_is_discrete_group() {
    let g = FiniteGroup::cyclic(3);
    let omega = loop_space(&nerve_group(&g, 3), 0, LoopVariant::Plain).unwrap();
    assert_eq!(omega.len(0), 3);
    assert_eq!(pi0(&omega).len(), 3);
}

#[test]
fn shift_retraction() {
    for x in [circle(3), delta(2, 3), nerve_group(&FiniteGroup::cyclic(2), 3)] {
        assert!(check_shift(&x).unwrap().passed());
    }
}

#[test]
fn hom_counts_into_group_nerves() {
    // Maps S¹ -> BG are elements of G; maps Δ²/sq₀Δ² -> BG are pairs.
    let b = Budget::unlimited();
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()] {
        let bg = nerve_group(&g, 3);
        assert_eq!(hom_sset(&circle(3), &bg, &b).unwrap().len(), g.order());
        assert_eq!(hom_sset(&simplex_mod_vertices(2, 3), &bg, &b).unwrap().len(), g.order().pow(2));
    }
}

#[test]
fn budget_is_enforced() {
    let b = Budget::new(3);
    let out = hom_sset(&simplex_mod_vertices(2, 3), &nerve_group(&FiniteGroup::symmetric3(), 3), &b);
    assert!(matches!(out, Err(Error::BudgetExceeded(3))));
}

proptest! {
    #[test]
    fn products_of_simplices_are_valid(n in 0usize..3, m in 0usize..3, dim in 1usize..3) {
        let (a, b) = (delta(n, dim), delta(m, dim));
        let p = product(&a, &b);
        prop_assert!(p.validate().is_valid());
        for k in 0..=dim {
            prop_assert_eq!(p.len(k), a.len(k) * b.len(k));
        }
    }

    #[test]
    fn generated_subcomplexes_restrict_and_quotient(n in 1usize..4, picks in proptest::collection::vec(0usize..64, 1..4)) {
        let d = delta(n, 3);
        let gens: Vec<(usize, usize)> = picks.iter().map(|&p| {
            let k = p % (n + 1);
            (k, p / (n + 1) % d.len(k))
        }).collect();
        let sub = Sub::generated(&d, &gens);
        prop_assert!(sub.check(&d).is_ok());
        let r = restrict(&d, &sub).unwrap();
        prop_assert!(r.validate().is_valid());
        let q = quotient(&d, &sub).unwrap();
        prop_assert!(q.validate().is_valid());
        for k in 0..=3 {
            prop_assert!(q.len(k) <= d.len(k));
        }
    }

    #[test]
    fn cyclic_nerves_are_kan(n in 1usize..6) {
        let g = FiniteGroup::cyclic(n);
        let x = nerve_group(&g, 3);
        prop_assert!(x.validate().is_valid());
        prop_assert!(classify(&x, 1).unwrap().n_kan_groupoid);
        prop_assert_eq!(pi(&x, 1, 0).unwrap().group.order(), n);
    }

    #[test]
    fn degenerate_simplices_have_roots(n in 0usize..4) {
        let d = delta(n, 3);
        for k in 1..=3 {
            for a in 0..d.len(k) {
                if let Some((j, r)) = d.degenerate_root(k, a) {
                    prop_assert_eq!(d.degen(k - 1, j, r), a);
                }
            }
        }
    }
}
