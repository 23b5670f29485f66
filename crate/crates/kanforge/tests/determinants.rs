mod common;

use common::{canned, twisted_z2};
use kanforge::budget::Budget;
use kanforge::corpus;
use kanforge::determinants::{
    det_morphisms, enumerate_additive, enumerate_determinants, enumerate_segal_determinants, pi0_det,
    segal_det_groupoid, segal_pi0, verify_additive, verify_determinants, verify_segal_determinants, AdditiveFunction,
    Determinant,
};
use kanforge::group::FiniteGroup;
use kanforge::hom::hom_sset;
use kanforge::monoidal::Monoidal;
use kanforge::nerve::nerve_category;
use kanforge::nerve2::nerve_two_group;
use kanforge::segal::{default_shape, mu3_determined, segal_nerve};
use kanforge::sset::SSet;
use kanforge::standard::{circle, simplex_mod_vertices, square_mod_vertical};
use kanforge::verify::{canned_reduced_sources, canned_segal_sources};
use kanforge::Error;
use proptest::prelude::*;

/// Every function `X_1 -> H`, filtered by the additivity rule on each
/// 2-simplex and normalization at the degenerate edge.
fn brute_force_additive(x: &SSet, h: &FiniteGroup) -> usize {
    let n1 = x.len(1);
    let unit = x.degen(0, 0, 0);
    let mut count = 0;
    let mut vals = vec![0usize; n1];
    loop {
        let ok = vals[unit] == h.identity()
            && (0..x.len(2)).all(|a| vals[x.face(2, 1, a)] == h.mul(vals[x.face(2, 2, a)], vals[x.face(2, 0, a)]));
        if ok {
            count += 1;
        }
        let mut i = 0;
        while i < n1 && vals[i] + 1 == h.order() {
            vals[i] = 0;
            i += 1;
        }
        if i == n1 {
            return count;
        }
        vals[i] += 1;
    }
}

/// Determinant counts and component counts, by source and 2-group, in the
/// order of the canned 2-groups.
const TABLE: [(&str, [(usize, usize); 8]); 3] = [
    ("circle", [(1, 1), (2, 2), (3, 3), (4, 4), (6, 6), (1, 1), (1, 1), (2, 2)]),
    ("delta2_mod_vertices", [(1, 1), (4, 4), (9, 9), (16, 16), (36, 36), (2, 1), (3, 1), (8, 4)]),
    ("square_mod_vertical", [(1, 1), (2, 2), (3, 3), (4, 4), (6, 6), (4, 1), (9, 1), (8, 2)]),
];

#[test]
fn additive_counts_against_brute_force() {
    let groups = [("z2", 2usize), ("z3", 3), ("s3", 6)];
    // Exponent of |H| in the count for each source.
    let exponents = [("circle", 1u32), ("delta2_mod_vertices", 2), ("square_mod_vertical", 1)];
    let budget = Budget::unlimited();
    for ((name, x), (ename, e)) in canned_reduced_sources().into_iter().zip(exponents) {
        assert_eq!(name, ename);
        for (gname, order) in groups {
            let h = corpus::group(gname).unwrap();
            let adds = enumerate_additive(&x, &h, &budget).unwrap();
            assert_eq!(adds.len(), order.pow(e), "{name} / {gname}");
            assert_eq!(adds.len(), brute_force_additive(&x, &h), "{name} / {gname}");
            assert!(adds.iter().all(|d| d.check(&x, &h)));
            let r = verify_additive(&x, &h, &budget).unwrap();
            assert!(r.bijection_verified, "{name} / {gname}");
        }
    }
}

#[test]
fn additive_functions_round_trip_through_maps() {
    let x = simplex_mod_vertices(2, 3);
    let h = FiniteGroup::symmetric3();
    let nerve = kanforge::nerve::nerve_group(&h, 3);
    for d in enumerate_additive(&x, &h, &Budget::unlimited()).unwrap() {
        let f = d.to_map(&x, &h, &nerve).unwrap();
        assert!(f.is_simplicial(&x, &nerve));
        assert_eq!(AdditiveFunction::from_map(&f, &h, &nerve), Some(d));
    }
}

#[test]
fn additive_needs_a_reduced_source() {
    let x = corpus::get("delta1").unwrap();
    let kanforge::io::Document::SSet(x) = x else { panic!("delta1 is a simplicial set") };
    assert!(matches!(enumerate_additive(&x, &FiniteGroup::cyclic(2), &Budget::unlimited()), Err(Error::NotReduced(_))));
}

#[test]
fn determinant_table() {
    let budget = Budget::from_env();
    let groups = canned();
    for ((name, x), (tname, row)) in canned_reduced_sources().into_iter().zip(TABLE) {
        assert_eq!(name, tname);
        for ((gname, g), (dets, comps)) in groups.iter().zip(row) {
            let c = pi0_det(&x, g, &budget.scope()).unwrap();
            assert_eq!(c.determinants.len(), dets, "{name} / {gname}");
            assert_eq!(c.classes.len(), comps, "{name} / {gname}");
            assert!(c.symmetric, "{name} / {gname}");
        }
    }
}

#[test]
fn determinants_match_maps_into_the_nerve() {
    let budget = Budget::from_env();
    for (name, x) in canned_reduced_sources() {
        for (gname, g) in canned().into_iter().chain([("twisted", twisted_z2())]) {
            let r = verify_determinants(&x, &g, &budget.scope()).unwrap();
            assert!(r.passed(), "{name} / {gname}: {r:?}");
            assert_eq!(r.maps.count, r.maps.oracle_count);
            assert_eq!(r.pi0_count, r.oracle_pi0_count);
        }
    }
}

#[test]
fn determinants_round_trip_through_maps() {
    let budget = Budget::unlimited();
    for (name, x) in canned_reduced_sources() {
        for (gname, g) in [("product", corpus::two_group("product").unwrap()), ("twisted", twisted_z2())] {
            let nerve = nerve_two_group(&g, 3);
            let maps = hom_sset(&x, &nerve.sset, &budget).unwrap();
            let dets = enumerate_determinants(&x, &g, &budget).unwrap();
            assert_eq!(dets.len(), maps.len(), "{name} / {gname}");
            for d in dets {
                assert!(d.check(&x, &g) && d.forcing_holds(&x, &g), "{name} / {gname}");
                let f = d.to_map(&x, &g, &nerve).unwrap();
                assert!(maps.contains(&f));
                assert_eq!(Determinant::from_map(&f, &nerve), d);
            }
        }
    }
}

#[test]
fn square_into_oneobj_z3() {
    let g = corpus::two_group("oneobj_z3").unwrap();
    let dets = enumerate_determinants(&square_mod_vertical(3), &g, &Budget::unlimited()).unwrap();
    assert_eq!(dets.len(), 9);
}

#[test]
fn circle_into_one_object_two_groups() {
    // One determinant, whose automorphisms are the elements of A.
    for a in [2usize, 3, 4] {
        let g = Monoidal::one_object(&FiniteGroup::cyclic(a)).unwrap();
        let x = circle(3);
        let budget = Budget::unlimited();
        let dets = enumerate_determinants(&x, &g, &budget).unwrap();
        assert_eq!(dets.len(), 1);
        assert_eq!(det_morphisms(&x, &g, &dets[0], &dets[0], &budget).unwrap().len(), a);
    }
}

#[test]
fn discrete_two_groups_have_only_identity_morphisms() {
    let g = Monoidal::discrete(&FiniteGroup::symmetric3());
    let x = simplex_mod_vertices(2, 3);
    let budget = Budget::unlimited();
    let dets = enumerate_determinants(&x, &g, &budget).unwrap();
    for (i, a) in dets.iter().enumerate() {
        for (j, b) in dets.iter().enumerate() {
            let n = det_morphisms(&x, &g, a, b, &budget).unwrap().len();
            assert_eq!(n, usize::from(i == j));
        }
    }
}

#[test]
fn segal_determinant_counts_match_reduced_ones() {
    let budget = Budget::from_env();
    let groups = canned();
    for ((name, x), (_, row)) in canned_segal_sources().unwrap().into_iter().zip(TABLE) {
        for ((gname, g), (dets, comps)) in groups.iter().zip(row) {
            let r = verify_segal_determinants(&x, g, &budget.scope()).unwrap();
            assert_eq!(r.count, dets, "{name} / {gname}");
            assert_eq!(r.oracle_count, dets, "{name} / {gname}");
            assert!(r.bijection_verified, "{name} / {gname}");
            let p = segal_pi0(&x, g, &budget.scope()).unwrap();
            assert_eq!(p.classes.len(), comps, "{name} / {gname}");
            assert!(p.matches && p.symmetric, "{name} / {gname}");
        }
    }
}

#[test]
fn maps_into_the_segal_nerve_are_determined_below_total_degree_four() {
    let budget = Budget::from_env();
    for (gname, g) in canned() {
        let y = segal_nerve(&g, &default_shape()).unwrap();
        for (name, x) in canned_segal_sources().unwrap() {
            let r = mu3_determined(&x, &y, &budget.scope()).unwrap();
            assert_eq!(r.full_maps, r.truncated_maps, "{name} / {gname}");
            assert!(r.bijective, "{name} / {gname}");
        }
    }
}

#[test]
fn the_segal_nerve_has_a_tautological_determinant() {
    let budget = Budget::from_env();
    for id in ["disc_z2", "oneobj_z2"] {
        let g = corpus::two_group(id).unwrap();
        let x = segal_nerve(&g, &default_shape()).unwrap();
        let col = x.column(1).unwrap();
        let nerve = nerve_category(g.cat(), 2);
        let dets = enumerate_segal_determinants(&x, &g, &budget).unwrap();
        let tautological = dets
            .iter()
            .filter(|d| (0..=2).all(|p| (0..col.len(p)).all(|a| nerve.id(p, d.d.levels[p][a]) == col.id(p, a))))
            .count();
        assert_eq!(tautological, 1, "{id}");
    }
}

#[test]
fn segal_determinant_groupoid_of_the_circle() {
    let budget = Budget::from_env();
    let x = canned_segal_sources().unwrap().remove(0).1;
    let g = corpus::two_group("oneobj_z2").unwrap();
    let gr = segal_det_groupoid(&x, &g, &budget).unwrap();
    assert_eq!(gr.determinants.len(), 1);
    assert_eq!(gr.morphisms.len(), 2);
    let identity = (0..2).find(|&m| gr.compose(m, m).unwrap() == m).unwrap();
    let other = 1 - identity;
    assert_eq!(gr.compose(other, other).unwrap(), identity);
    assert_eq!(gr.compose(0, 1).unwrap(), 1);
    assert_eq!(gr.components(), (vec![vec![0]], true));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn additive_enumeration_matches_brute_force(src in 0usize..3, n in 1usize..5) {
        let (_, x) = canned_reduced_sources().swap_remove(src);
        let h = FiniteGroup::cyclic(n);
        let adds = enumerate_additive(&x, &h, &Budget::unlimited()).unwrap();
        prop_assert_eq!(adds.len(), brute_force_additive(&x, &h));
    }

    #[test]
    fn every_determinant_satisfies_the_forcing_identities(src in 0usize..3, gi in 0usize..8) {
        let (_, x) = canned_reduced_sources().swap_remove(src);
        let (_, g) = canned().swap_remove(gi);
        for d in enumerate_determinants(&x, &g, &Budget::unlimited()).unwrap() {
            prop_assert!(d.check(&x, &g));
            prop_assert!(d.forcing_holds(&x, &g));
        }
    }
}
