//! Horn filling and the n-Kan groupoid classification.

use kanforge::category::FinCategory;
use kanforge::group::FiniteGroup;
use kanforge::kan::{classify, kan_status};
use kanforge::monoidal::Monoidal;
use kanforge::nerve::{groupoid_from_nerve, nerve_category, nerve_group};
use kanforge::nerve2::nerve_two_group;
use kanforge::standard::delta;
use kanforge::Result;

pub fn run_example() -> Result<()> {
    // Δ¹ is not Kan: the outer 2-horns have no filler.
    let d1 = delta(1, 2);
    for h in kan_status(&d1, 1)?.horns {
        println!("Δ¹, Λ^{{2,{}}}: fillable {}, unfilled {:?}", h.k, h.surjective, h.unfilled);
    }

    let z3 = FiniteGroup::cyclic(3);
    let bz3 = nerve_group(&z3, 3);
    let c = classify(&bz3, 1)?;
    println!("nerve of Z/3: 1-Kan groupoid {}, weakly 1-coskeletal {}", c.n_kan_groupoid, c.weakly_n_coskeletal);

    let indiscrete = FinCategory::indiscrete(&["a", "b", "c"]);
    let back = groupoid_from_nerve(&nerve_category(&indiscrete, 3))?;
    println!("indiscrete groupoid recovered: {} objects, {} morphisms", back.num_objects(), back.num_morphisms());

    let g = Monoidal::one_object(&FiniteGroup::cyclic(2))?;
    let nerve = nerve_two_group(&g, 4);
    let c2 = classify(&nerve.sset, 2)?;
    println!("nerve of OneObj(Z/2): 2-Kan groupoid {}, 2-minimal {}", c2.n_kan_groupoid, c2.n_minimal);
    assert!(c.n_kan_groupoid && c2.n_kan_groupoid);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
