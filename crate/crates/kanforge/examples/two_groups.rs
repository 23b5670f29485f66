//! 2-groups, their nerves and the reconstruction from a nerve.

use kanforge::duskin::{comparison_functor, grho_check, loop_gamma, round_trips, two_group_from_nerve};
use kanforge::group::FiniteGroup;
use kanforge::monoidal::Monoidal;
use kanforge::nerve2::nerve_two_group;
use kanforge::twogroup::{certify, pi0, pi1};
use kanforge::{Budget, Result};

pub fn run_example() -> Result<()> {
    let g = Monoidal::one_object(&FiniteGroup::cyclic(3))?;
    certify(&g)?;
    let (p0, _) = pi0(&g)?;
    let (p1, _) = pi1(&g)?;
    println!("OneObj(Z/3): π₀ order {}, π₁ order {}", p0.order(), p1.order());

    let nerve = nerve_two_group(&g, 3);
    println!("nerve levels {:?}", (0..=3).map(|k| nerve.sset.len(k)).collect::<Vec<_>>());

    let rec = two_group_from_nerve(&nerve.sset)?;
    let f = comparison_functor(&g, &nerve, &rec);
    println!(
        "reconstruction: round trip {}, comparison functor lax {}, weak equivalence {}",
        round_trips(&nerve.sset, &rec, &Budget::from_env())?,
        f.check(&rec.two_group, &g).is_empty(),
        f.is_weak_equivalence(&rec.two_group, &g)?
    );

    let r = grho_check(&g)?;
    println!("π₀ ≅ π₁(nerve): {}, π₁ ≅ π₂(nerve): {}", r.pi0_to_pi1, r.pi1_to_pi2);
    println!("Ω(nerve) ≅ nerve of the underlying groupoid: {}", loop_gamma(&g)?.is_isomorphism());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
