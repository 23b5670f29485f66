//! Additive functions and reduced determinants, with their oracles.

use kanforge::determinants::{enumerate_determinants, pi0_det, verify_additive, verify_determinants};
use kanforge::group::FiniteGroup;
use kanforge::monoidal::Monoidal;
use kanforge::standard::{circle, simplex_mod_vertices, square_mod_vertical};
use kanforge::{Budget, Result};

pub fn run_example() -> Result<()> {
    let budget = Budget::from_env();
    let s3 = FiniteGroup::symmetric3();
    let a = verify_additive(&simplex_mod_vertices(2, 3), &s3, &budget)?;
    println!("additive functions Δ²/sq₀Δ² -> S3: {} (maps into the nerve: {})", a.count, a.oracle_count);

    let g = Monoidal::one_object(&FiniteGroup::cyclic(3))?;
    let x = square_mod_vertical(3);
    let dets = enumerate_determinants(&x, &g, &budget)?;
    println!("determinants on the square with values in OneObj(Z/3): {}", dets.len());
    for d in &dets {
        assert!(d.forcing_holds(&x, &g));
    }
    let comps = pi0_det(&x, &g, &budget)?;
    println!("  components: {:?}", comps.classes);

    let r = verify_determinants(&circle(3), &Monoidal::discrete(&s3), &budget)?;
    println!(
        "S¹ -> Disc(S3): {} determinants = {} maps, {} components = {} mapping-space components",
        r.maps.count, r.maps.oracle_count, r.pi0_count, r.oracle_pi0_count
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
