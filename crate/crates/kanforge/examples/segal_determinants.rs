//! Determinants of Segal pre-monoids and their groupoid of morphisms.

use kanforge::determinants::{segal_det_groupoid, segal_pi0, verify_segal_determinants};
use kanforge::group::FiniteGroup;
use kanforge::monoidal::Monoidal;
use kanforge::segal::{default_shape, mu3_determined, segal_nerve, vertical_circle};
use kanforge::{Budget, Result};

pub fn run_example() -> Result<()> {
    let budget = Budget::from_env();
    let x = vertical_circle(&default_shape())?;
    let g = Monoidal::one_object(&FiniteGroup::cyclic(2))?;
    let r = verify_segal_determinants(&x, &g, &budget)?;
    println!("Segal determinants S¹ -> OneObj(Z/2): {} = {} bisimplicial maps", r.count, r.oracle_count);

    let grp = segal_det_groupoid(&x, &g, &budget)?;
    println!("morphisms between them: {}", grp.morphisms.len());
    if grp.morphisms.len() >= 2 {
        println!("composite of morphisms 0 and 1: {}", grp.compose(0, 1)?);
    }
    let p = segal_pi0(&x, &g, &budget)?;
    println!("components {:?}, matching π₀ of the enriched hom: {}", p.classes, p.matches);

    let mu3 = mu3_determined(&x, &segal_nerve(&g, &default_shape())?, &budget)?;
    println!(
        "maps on p+q<=4: {}, on p+q<=3: {}, restriction bijective: {}",
        mu3.full_maps, mu3.truncated_maps, mu3.bijective
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
