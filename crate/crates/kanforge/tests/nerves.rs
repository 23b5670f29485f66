mod common;

use common::{canned, twisted_z2};
use kanforge::budget::Budget;
use kanforge::category::{FinCategory, Morphism};
use kanforge::corpus;
use kanforge::determinants::enriched_hom0;
use kanforge::duskin::{comparison_functor, grho_check, loop_gamma, round_trips, two_group_from_nerve};
use kanforge::group::FiniteGroup;
use kanforge::io::Document;
use kanforge::kan::classify;
use kanforge::monoidal::Monoidal;
use kanforge::nerve::{groupoid_from_nerve, nerve_category, nerve_group};
use kanforge::nerve2::nerve_two_group;
use kanforge::segal::{
    default_shape, hom1, is_one_kan_groupoid, q_simplex_groupoid, segal_fibrancy_check, segal_nerve, vertical_circle,
};
use kanforge::standard::circle;
use kanforge::verify::same_category;
use kanforge::Error;

fn binom2(q: usize) -> u32 {
    (q * q.saturating_sub(1) / 2) as u32
}

/// Size of level `q` of the nerve of a 2-group with `n` objects and `k`
/// morphisms out of each object: the edges `X_{i,i+1}` and the triangles at
/// vertex 0 are free, the rest is forced.
fn nerve_level_oracle(n: usize, k: usize, q: usize) -> usize {
    if q == 0 {
        return 1;
    }
    n.pow(q as u32) * k.pow(binom2(q))
}

fn shape_of(g: &Monoidal) -> (usize, usize) {
    let c = g.cat();
    (c.num_objects(), c.num_morphisms() / c.num_objects())
}

fn all_two_groups() -> Vec<(&'static str, Monoidal)> {
    let mut v = canned();
    v.push(("twisted", twisted_z2()));
    v
}

fn groupoid(id: &str) -> FinCategory {
    match corpus::get(id).unwrap() {
        Document::Category(c) => c,
        other => panic!("{id} is a {}", other.kind()),
    }
}

fn arrow_category() -> FinCategory {
    let objects = vec!["a".to_string(), "b".to_string()];
    let morphisms = vec![
        Morphism { id: "1a".into(), src: 0, tgt: 0 },
        Morphism { id: "1b".into(), src: 1, tgt: 1 },
        Morphism { id: "f".into(), src: 0, tgt: 1 },
    ];
    FinCategory::new(objects, morphisms, &[(0, 0, 0), (1, 1, 1), (1, 2, 2), (2, 0, 2)]).unwrap()
}

#[test]
fn groupoid_nerve_level_counts() {
    let cases = [
        ("groupoid_z2", vec![1, 2, 4, 8]),
        ("groupoid_z3", vec![1, 3, 9, 27]),
        ("indiscrete2", vec![2, 4, 8, 16]),
        ("indiscrete3", vec![3, 9, 27, 81]),
    ];
    for (id, expected) in cases {
        let c = groupoid(id);
        let x = nerve_category(&c, 3);
        let levels: Vec<usize> = (0..=3).map(|k| x.len(k)).collect();
        assert_eq!(levels, expected, "{id}");
    }
}

#[test]
fn groupoids_are_recovered_from_their_nerves() {
    for id in ["groupoid_z2", "groupoid_z3", "indiscrete2", "indiscrete3"] {
        let c = groupoid(id);
        let x = nerve_category(&c, 3);
        assert!(classify(&x, 1).unwrap().n_kan_groupoid, "{id}");
        assert!(same_category(&groupoid_from_nerve(&x).unwrap(), &c), "{id}");
    }
}

#[test]
fn nerve_of_a_non_groupoid_is_rejected() {
    let x = nerve_category(&arrow_category(), 3);
    assert!(!classify(&x, 1).unwrap().n_kan_groupoid);
    assert!(matches!(groupoid_from_nerve(&x), Err(Error::NotOneKanGroupoid(_))));
}

#[test]
fn group_nerve_is_one_object_groupoid_nerve() {
    let s3 = FiniteGroup::symmetric3();
    let a = nerve_group(&s3, 3);
    let b = nerve_category(&FinCategory::from_group(&s3, "*"), 3);
    for k in 0..=3 {
        assert_eq!(a.ids(k), b.ids(k));
    }
}

#[test]
fn two_group_nerve_level_counts() {
    for (name, g) in all_two_groups() {
        let (n, k) = shape_of(&g);
        let x = nerve_two_group(&g, 4);
        for q in 0..=4 {
            assert_eq!(x.sset.len(q), nerve_level_oracle(n, k, q), "{name}, q = {q}");
        }
    }
    let z3 = nerve_two_group(&corpus::two_group("oneobj_z3").unwrap(), 3);
    assert_eq!((0..=3).map(|q| z3.sset.len(q)).collect::<Vec<_>>(), vec![1, 1, 3, 27]);
}

#[test]
fn two_group_nerves_are_two_kan_groupoids() {
    for (name, g) in all_two_groups() {
        let x = nerve_two_group(&g, 4);
        assert!(classify(&x.sset, 2).unwrap().n_kan_groupoid, "{name}");
    }
}

#[test]
fn one_kan_only_without_second_homotopy() {
    let disc = nerve_two_group(&corpus::two_group("disc_z3").unwrap(), 4);
    assert!(classify(&disc.sset, 1).unwrap().n_kan_groupoid);
    let oneobj = nerve_two_group(&corpus::two_group("oneobj_z2").unwrap(), 4);
    assert!(!classify(&oneobj.sset, 1).unwrap().n_kan_groupoid);
}

#[test]
fn reconstruction_round_trips() {
    let budget = Budget::unlimited();
    for (name, g) in all_two_groups() {
        let nerve = nerve_two_group(&g, 3);
        let rec = two_group_from_nerve(&nerve.sset).unwrap();
        assert!(rec.two_group.check().passed(), "{name}");
        assert!(round_trips(&nerve.sset, &rec, &budget).unwrap(), "{name}");
        let f = comparison_functor(&g, &nerve, &rec);
        assert!(f.check(&rec.two_group, &g).is_empty(), "{name}");
        assert!(f.is_weak_equivalence(&rec.two_group, &g).unwrap(), "{name}");
    }
}

#[test]
fn reconstruction_rejects_a_plain_kan_complex() {
    assert!(two_group_from_nerve(&circle(3)).is_err());
}

#[test]
fn homotopy_groups_match_through_the_nerve() {
    for (name, g) in all_two_groups() {
        let r = grho_check(&g).unwrap();
        assert!(r.passed(), "{name}");
        assert_eq!(r.pi0.order(), r.nerve_pi1.order(), "{name}");
        assert_eq!(r.pi1.order(), r.nerve_pi2.order(), "{name}");
    }
}

#[test]
fn loop_space_of_nerve_is_groupoid_nerve() {
    for (name, g) in all_two_groups() {
        let lg = loop_gamma(&g).unwrap();
        assert!(lg.is_isomorphism(), "{name}");
    }
}

#[test]
fn segal_nerve_cell_counts() {
    // Cell (p, q): chains of p families, each a free choice of one morphism
    // per pair i < j in [q], starting at a q-simplex.
    for (name, g) in canned() {
        let (n, k) = shape_of(&g);
        let x = segal_nerve(&g, &default_shape()).unwrap();
        for (p, &top) in default_shape().iter().enumerate() {
            for q in 0..=top {
                let expected = if q == 0 { 1 } else { nerve_level_oracle(n, k, q) * k.pow(p as u32 * binom2(q + 1)) };
                assert_eq!(x.len(p, q), expected, "{name}, ({p}, {q})");
            }
        }
    }
}

#[test]
fn segal_nerve_rows_of_oneobj_z2() {
    let x = segal_nerve(&corpus::two_group("oneobj_z2").unwrap(), &default_shape()).unwrap();
    let rows: Vec<Vec<usize>> =
        default_shape().iter().enumerate().map(|(p, &top)| (0..=top).map(|q| x.len(p, q)).collect()).collect();
    assert_eq!(rows, vec![vec![1, 1, 2, 8, 64], vec![1, 2, 16, 512], vec![1, 4, 128], vec![1, 8], vec![1]]);
    assert!(x.is_segal_premonoid());
    assert!(x.validate().is_empty());
}

#[test]
fn segal_nerve_column_one_is_the_groupoid_nerve() {
    for (name, g) in canned() {
        let x = segal_nerve(&g, &default_shape()).unwrap();
        let col = x.column(1).unwrap();
        let direct = nerve_category(g.cat(), 3);
        for p in 0..=3 {
            assert_eq!(col.ids(p), direct.ids(p), "{name}, p = {p}");
        }
    }
}

#[test]
fn q_simplex_groupoids() {
    for (name, g) in canned() {
        assert!(same_category(&q_simplex_groupoid(&g, 1).unwrap(), g.cat()), "{name}");
        let g2 = q_simplex_groupoid(&g, 2).unwrap();
        assert!(g2.is_groupoid(), "{name}");
        let (n, k) = shape_of(&g);
        assert_eq!(g2.num_objects(), nerve_level_oracle(n, k, 2), "{name}");
        assert_eq!(g2.num_morphisms(), g2.num_objects() * k.pow(3), "{name}");
    }
}

#[test]
fn segal_nerves_are_fibrant() {
    let budget = Budget::from_env();
    for id in ["trivial", "disc_z2", "disc_z3"] {
        let x = segal_nerve(&corpus::two_group(id).unwrap(), &default_shape()).unwrap();
        let r = segal_fibrancy_check(&x, &budget.scope()).unwrap();
        assert!(r.passed(), "{id}: {:?}", r.restrictions.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
    }
}

#[test]
fn enriched_hom_into_the_segal_nerve_is_one_kan() {
    let budget = Budget::from_env();
    let y = segal_nerve(&corpus::two_group("oneobj_z2").unwrap(), &default_shape()).unwrap();
    let h = hom1(&vertical_circle(&default_shape()).unwrap(), &y, 2, &budget).unwrap();
    assert_eq!((0..=2).map(|k| h.sset.len(k)).collect::<Vec<_>>(), vec![1, 2, 4]);
    assert!(is_one_kan_groupoid(&h.sset).unwrap());
}

#[test]
fn simplicial_hom_into_the_nerve_is_not_one_kan() {
    let budget = Budget::from_env();
    let y = nerve_two_group(&corpus::two_group("oneobj_z2").unwrap(), 3);
    let m = enriched_hom0(&circle(3), &y.sset, 2, &budget).unwrap();
    assert_eq!((0..=2).map(|k| m.sset.len(k)).collect::<Vec<_>>(), vec![1, 4, 32]);
    assert!(!classify(&m.sset, 1).unwrap().n_kan_groupoid);
}
