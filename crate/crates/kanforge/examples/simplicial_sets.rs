//! Standard simplices, boundaries, quotients and their nondegenerate simplices.

use kanforge::standard::{boundary_sub, circle, delta, quotient, restrict, square_mod_vertical, suspension_square};
use kanforge::Result;

pub fn run_example() -> Result<()> {
    let d2 = delta(2, 3);
    println!("Δ² through level 3: levels {:?}", (0..=3).map(|k| d2.len(k)).collect::<Vec<_>>());
    println!("  nondegenerate {:?}", d2.nondegenerate_counts());

    let (d, sub) = boundary_sub(2, 3);
    let boundary = restrict(&d, &sub)?;
    println!("∂Δ²: nondegenerate {:?}", boundary.nondegenerate_counts());

    // Collapsing the boundary of Δ¹ gives the circle.
    let (d1, ends) = boundary_sub(1, 3);
    let s1 = quotient(&d1, &ends)?;
    assert_eq!(s1.nondegenerate_counts(), circle(3).nondegenerate_counts());
    println!("Δ¹/∂Δ¹: nondegenerate {:?}, reduced: {}", s1.nondegenerate_counts(), s1.is_reduced());

    let square = square_mod_vertical(4);
    let prism = suspension_square(2, 4);
    println!("(Δ¹×Δ¹)/(sq₀Δ¹×Δ¹): nondegenerate {:?}", square.nondegenerate_counts());
    println!("(Δ¹×Δ²)/(sq₀Δ¹×Δ²): nondegenerate {:?}", prism.nondegenerate_counts());
    assert_eq!(square.nondegenerate_counts()[..3], [1, 3, 2]);
    assert_eq!(prism.nondegenerate_counts()[..4], [1, 6, 8, 3]);

    let report = square.validate();
    println!("simplicial identities hold: {}", report.is_valid());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
