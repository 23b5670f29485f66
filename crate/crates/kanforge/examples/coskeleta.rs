//! Coskeletal extension and the weak coskeleton quotient.

use kanforge::cosk::{coskeletal_extend, csq_prime, csq_prime_with_unit};
use kanforge::group::FiniteGroup;
use kanforge::kan::classify;
use kanforge::nerve::nerve_group;
use kanforge::Result;

pub fn run_example() -> Result<()> {
    let z2 = FiniteGroup::cyclic(2);
    let tau2 = nerve_group(&z2, 2);
    println!("τ₂ nerve of Z/2: marked coskeletal at {:?}", tau2.coskeletal_at());
    let ext = coskeletal_extend(&tau2, 3)?;
    println!("extended to level 3: {} simplices (the nerve itself has {})", ext.len(3), nerve_group(&z2, 3).len(3));

    // A weakly 1-coskeletal input is fixed by the quotient.
    let (q, unit) = csq_prime_with_unit(&nerve_group(&z2, 3), 1)?;
    println!("csq' of the nerve of Z/2 at 1 is an isomorphism: {}", unit.is_levelwise_bijective(&q));

    // At 0 the two loops of the nerve of Z/2 share their boundary and are identified.
    let q0 = csq_prime(&nerve_group(&z2, 3), 0)?;
    println!(
        "csq' of the nerve of Z/2 at 0: {} edge, weakly 0-coskeletal {}",
        q0.len(1),
        classify(&q0, 0)?.weakly_n_coskeletal
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
