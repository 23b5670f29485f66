mod common;

use common::{canned, twisted_z2, z2_with_associator};
use kanforge::category::{FinCategory, Morphism};
use kanforge::group::FiniteGroup;
use kanforge::monoidal::Monoidal;
use kanforge::nerve2::{cocycle_holds, q_simplices};
use kanforge::twogroup::{certify, pi0, pi1, LaxFunctor};
use kanforge::Error;
use proptest::prelude::*;

fn group_axioms_hold(g: &FiniteGroup) -> bool {
    let n = g.order();
    let e = g.identity();
    (0..n).all(|a| g.mul(a, e) == a && g.mul(e, a) == a && g.mul(a, g.inv(a)) == e)
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)))))
}

#[test]
fn canned_groups_satisfy_the_axioms() {
    for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(4), FiniteGroup::symmetric3()] {
        assert!(group_axioms_hold(&g));
    }
    assert!(!FiniteGroup::symmetric3().is_abelian());
}

#[test]
fn group_table_without_inverses_is_rejected() {
    let names = vec!["e".to_string(), "a".to_string()];
    assert!(FiniteGroup::new(names, vec![vec![0, 1], vec![1, 1]]).is_err());
}

#[test]
fn isomorphism_search() {
    let z4 = FiniteGroup::cyclic(4);
    let v4 = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2));
    assert!(!z4.is_isomorphic(&v4));
    let m = v4.find_isomorphism(&v4).unwrap();
    assert!(v4.is_iso(&m, &v4));
}

#[test]
fn group_category_composes_diagrammatically() {
    let s3 = FiniteGroup::symmetric3();
    let c = FinCategory::from_group(&s3, "*");
    for f in 0..6 {
        for g in 0..6 {
            assert_eq!(c.compose(g, f), s3.mul(f, g));
        }
    }
    assert!(c.is_groupoid());
}

#[test]
fn category_with_missing_composite_is_rejected() {
    let objects = vec!["a".to_string(), "b".to_string()];
    let morphisms = vec![
        Morphism { id: "1a".into(), src: 0, tgt: 0 },
        Morphism { id: "1b".into(), src: 1, tgt: 1 },
        Morphism { id: "f".into(), src: 0, tgt: 1 },
    ];
    // f ∘ 1a is missing.
    let comp = [(0, 0, 0), (1, 1, 1), (1, 2, 2)];
    assert!(FinCategory::new(objects.clone(), morphisms.clone(), &comp).is_err());
    let full = [(0, 0, 0), (1, 1, 1), (1, 2, 2), (2, 0, 2)];
    let arrow = FinCategory::new(objects, morphisms, &full).unwrap();
    assert!(!arrow.is_groupoid());
    assert_eq!(arrow.inverse(2), None);
}

#[test]
fn indiscrete_groupoid_hom_sets() {
    let c = FinCategory::indiscrete(&["a", "b", "c"]);
    for x in 0..3 {
        for y in 0..3 {
            assert_eq!(c.hom(x, y).len(), 1);
        }
    }
    assert!(c.is_groupoid());
}

#[test]
fn canned_two_groups_certify() {
    for (name, g) in canned() {
        assert!(g.check().passed(), "{name}");
        certify(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    certify(&twisted_z2()).unwrap();
}

#[test]
fn one_object_needs_an_abelian_group() {
    assert!(matches!(Monoidal::one_object(&FiniteGroup::symmetric3()), Err(Error::NotTwoGroup(_))));
}

#[test]
fn unitors_point_into_the_tensor() {
    for (name, g) in canned() {
        let c = g.cat();
        for x in 0..c.num_objects() {
            assert_eq!(c.src(g.lunit(x)), x, "{name}");
            assert_eq!(c.tgt(g.lunit(x)), g.tensor(g.unit(), x), "{name}");
            assert_eq!(c.src(g.runit(x)), x, "{name}");
            assert_eq!(c.tgt(g.runit(x)), g.tensor(x, g.unit()), "{name}");
        }
    }
}

#[test]
fn pentagon_detects_a_non_cocycle() {
    // ω = xyz is a cocycle; ω = xy (constant in z) is not.
    assert!(z2_with_associator(|x, y, z| x * y * z).check().passed());
    assert!(!z2_with_associator(|x, y, _| x * y).check().passed());
}

#[test]
fn homotopy_groups_of_two_groups() {
    // (|π₀|, |π₁|) for each canned 2-group.
    let expected = [
        ("trivial", 1, 1),
        ("disc_z2", 2, 1),
        ("disc_z3", 3, 1),
        ("disc_z4", 4, 1),
        ("disc_s3", 6, 1),
        ("oneobj_z2", 1, 2),
        ("oneobj_z3", 1, 3),
        ("product", 2, 2),
    ];
    for ((name, g), (n2, p0, p1)) in canned().into_iter().zip(expected) {
        assert_eq!(name, n2);
        assert_eq!(pi0(&g).unwrap().0.order(), p0, "{name}");
        assert_eq!(pi1(&g).unwrap().0.order(), p1, "{name}");
    }
    let disc_s3 = Monoidal::discrete(&FiniteGroup::symmetric3());
    assert!(pi0(&disc_s3).unwrap().0.is_isomorphic(&FiniteGroup::symmetric3()));
}

#[test]
fn identity_lax_functor() {
    for (name, g) in canned().into_iter().chain([("twisted", twisted_z2())]) {
        let c = g.cat();
        let n = c.num_objects();
        let f = LaxFunctor {
            obj: (0..n).collect(),
            mor: (0..c.num_morphisms()).collect(),
            m: (0..n * n).map(|i| g.id(g.tensor(i / n, i % n))).collect(),
        };
        assert!(f.check(&g, &g).is_empty(), "{name}");
        assert!(f.is_weak_equivalence(&g, &g).unwrap(), "{name}");
    }
}

#[test]
fn cocycle_condition_on_three_simplices() {
    for (name, g) in canned().into_iter().chain([("twisted", twisted_z2())]) {
        for s in q_simplices(&g, 3) {
            assert!(cocycle_holds(&g, &s, 0, 1, 2, 3), "{name}");
        }
    }
}

#[test]
fn three_simplex_counts_of_one_object_two_groups() {
    // For OneObj(A) with trivial structure, q-simplices are normalized
    // 2-cochains on Δ^q that are cocycles: |A|^{C(q,2)} of them.
    for a in [2usize, 3] {
        let g = Monoidal::one_object(&FiniteGroup::cyclic(a)).unwrap();
        for (q, exp) in [(1, 0u32), (2, 1), (3, 3), (4, 6)] {
            assert_eq!(q_simplices(&g, q).len(), a.pow(exp), "Z/{a}, q = {q}");
        }
    }
}

proptest! {
    #[test]
    fn products_of_cyclic_groups_are_groups(a in 1usize..5, b in 1usize..5) {
        let g = FiniteGroup::cyclic(a).product(&FiniteGroup::cyclic(b));
        prop_assert!(group_axioms_hold(&g));
        prop_assert!(g.is_abelian());
        prop_assert_eq!(g.order(), a * b);
    }

    #[test]
    fn products_of_two_groups_certify(i in 0usize..8, j in 0usize..8) {
        let all = canned();
        let (g, h) = (&all[i].1, &all[j].1);
        prop_assume!(g.cat().num_morphisms() * h.cat().num_morphisms() <= 36);
        let p = g.product(h);
        prop_assert!(certify(&p).is_ok());
        prop_assert_eq!(pi0(&p).unwrap().0.order(), pi0(g).unwrap().0.order() * pi0(h).unwrap().0.order());
        prop_assert_eq!(pi1(&p).unwrap().0.order(), pi1(g).unwrap().0.order() * pi1(h).unwrap().0.order());
    }

    #[test]
    fn discrete_two_groups_of_cyclic_groups(n in 1usize..7) {
        let g = Monoidal::discrete(&FiniteGroup::cyclic(n));
        prop_assert!(certify(&g).is_ok());
        prop_assert!(pi0(&g).unwrap().0.is_isomorphic(&FiniteGroup::cyclic(n)));
        prop_assert_eq!(pi1(&g).unwrap().0.order(), 1);
    }
}
