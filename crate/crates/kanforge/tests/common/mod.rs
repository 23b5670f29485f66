#![allow(dead_code)]

use kanforge::corpus;
use kanforge::monoidal::Monoidal;

/// `Disc(Z/2) x OneObj(Z/2)` with the associator replaced by `ω(x, y, z) =
/// xyz`, a 3-cochain of Z/2 with values in Z/2.
pub fn z2_with_associator(omega: impl Fn(usize, usize, usize) -> usize) -> Monoidal {
    let strict = corpus::two_group("product").unwrap();
    let c = strict.cat().clone();
    let n = c.num_objects();
    let m = c.num_morphisms();
    let tensor_obj = (0..n * n).map(|i| strict.tensor(i / n, i % n)).collect();
    let tensor_mor = (0..m * m).map(|i| strict.tensor_mor(i / m, i % m)).collect();
    let auto = |x: usize, a: usize| c.morphism_index(&format!("(id:{}|{a})", x)).unwrap();
    let assoc = (0..n * n * n)
        .map(|i| {
            let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
            auto(strict.tensor(strict.tensor(x, y), z), omega(x, y, z))
        })
        .collect();
    let lunit = (0..n).map(|x| strict.lunit(x)).collect();
    let runit = (0..n).map(|x| strict.runit(x)).collect();
    Monoidal::from_tables(c, tensor_obj, tensor_mor, strict.unit(), assoc, lunit, runit).unwrap()
}

/// The 2-group with the nontrivial associator.
pub fn twisted_z2() -> Monoidal {
    z2_with_associator(|x, y, z| x * y * z)
}

pub fn canned() -> Vec<(&'static str, Monoidal)> {
    corpus::TWO_GROUPS.iter().map(|n| (*n, corpus::two_group(n).unwrap())).collect()
}
