//! Segal nerves of 2-groups, the fibrancy conditions and enriched homs.

use kanforge::determinants::enriched_hom0;
use kanforge::group::FiniteGroup;
use kanforge::kan::classify;
use kanforge::monoidal::Monoidal;
use kanforge::nerve2::nerve_two_group;
use kanforge::segal::{default_shape, hom1, is_one_kan_groupoid, segal_fibrancy_check, segal_nerve, vertical_circle};
use kanforge::standard::circle;
use kanforge::{Budget, Result};

pub fn run_example() -> Result<()> {
    let budget = Budget::from_env();
    let g = Monoidal::one_object(&FiniteGroup::cyclic(2))?;
    let y = segal_nerve(&g, &default_shape())?;
    for p in 0..y.shape().len() {
        let row: Vec<usize> = (0..=y.shape()[p]).map(|q| y.len(p, q)).collect();
        println!("row {p}: {row:?}");
    }
    let fib = segal_fibrancy_check(&y, &budget)?;
    for c in ["i", "ii", "iii", "iv"] {
        println!("fibrancy ({c}): {}", fib.condition_passed(c));
    }

    let h0 = enriched_hom0(&circle(3), &nerve_two_group(&g, 3).sset, 2, &budget)?;
    println!("pointed mapping space S¹ -> nerve: 1-Kan groupoid {}", classify(&h0.sset, 1)?.n_kan_groupoid);
    let h1 = hom1(&vertical_circle(&default_shape())?, &y, 2, &budget)?;
    println!("enriched hom of Segal pre-monoids: 1-Kan groupoid {}", is_one_kan_groupoid(&h1.sset)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
