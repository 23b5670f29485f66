//! Path components, homotopy groups and loop spaces.

use kanforge::group::FiniteGroup;
use kanforge::loops::{loop_space, LoopVariant};
use kanforge::monoidal::Monoidal;
use kanforge::nerve::nerve_group;
use kanforge::nerve2::nerve_two_group;
use kanforge::pi::{pi, pi0};
use kanforge::standard::circle;
use kanforge::Result;

pub fn run_example() -> Result<()> {
    let s3 = FiniteGroup::symmetric3();
    let bs3 = nerve_group(&s3, 3);
    let p1 = pi(&bs3, 1, 0)?;
    println!("π₁ of the nerve of S3: order {}, abelian {}", p1.group.order(), p1.group.is_abelian());
    assert!(p1.group.is_isomorphic(&s3));

    let g = Monoidal::discrete(&FiniteGroup::cyclic(2)).product(&Monoidal::one_object(&FiniteGroup::cyclic(2))?);
    let nerve = nerve_two_group(&g, 4);
    println!(
        "nerve of Disc(Z/2) x OneObj(Z/2): π₀ has {} class, π₁ order {}, π₂ order {}",
        pi0(&nerve.sset).len(),
        pi(&nerve.sset, 1, 0)?.group.order(),
        pi(&nerve.sset, 2, 0)?.group.order()
    );

    let s1 = circle(3);
    let plain = loop_space(&s1, 0, LoopVariant::Plain)?;
    let reduced = loop_space(&s1, 0, LoopVariant::Reduced)?;
    println!("Ω(S¹) level 0: {:?}", plain.ids(0));
    println!("reduced Ω(S¹) level 0: {:?}", reduced.ids(0));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
