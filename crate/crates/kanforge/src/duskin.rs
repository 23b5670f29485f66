use crate::budget::Budget;
use crate::category::{FinCategory, Morphism};
use crate::cosk::coskeletal_extend;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::find_isomorphism;
use crate::kan::classify;
use crate::loops::{loop_space, LoopVariant};
use crate::monoidal::Monoidal;
use crate::nerve::nerve_category;
use crate::nerve2::{nerve_two_group, QSimplex, TwoGroupNerve, Unitors};
use crate::pi::pi;
use crate::sset::{SMap, SSet};
use crate::twogroup::{certify, pi0, pi1, LaxFunctor};
use std::collections::HashMap;

/// Horn fillers of a 2-Kan groupoid, first in id order.
struct Fillers<'a> {
    z: &'a SSet,
    horn3: Vec<HashMap<Vec<usize>, usize>>,
    horn2_1: HashMap<(usize, usize), usize>,
}

impl<'a> Fillers<'a> {
    fn new(z: &'a SSet) -> Self {
        let horn3 = (0..4)
            .map(|k| {
                let mut m = HashMap::new();
                for eta in 0..z.len(3) {
                    let key: Vec<usize> = (0..4).filter(|&i| i != k).map(|i| z.face(3, i, eta)).collect();
                    m.entry(key).or_insert(eta);
                }
                m
            })
            .collect();
        let mut horn2_1 = HashMap::new();
        for xi in 0..z.len(2) {
            horn2_1.entry((z.face(2, 2, xi), z.face(2, 0, xi))).or_insert(xi);
        }
        Fillers { z, horn3, horn2_1 }
    }

    /// The chosen 2-simplex with `d_2 = x` and `d_0 = y`.
    fn product_cell(&self, x: usize, y: usize) -> Result<usize> {
        self.horn2_1.get(&(x, y)).copied().ok_or_else(|| {
            Error::NotKan(format!("no filler for Λ^{{2,1}} at ({}, {})", self.z.id(1, x), self.z.id(1, y)))
        })
    }

    /// Face `k` of the filler of a `Λ^{3,k}` horn given by the other faces.
    fn fill(&self, k: usize, faces: [usize; 3]) -> Result<usize> {
        let eta = self.horn3[k].get(faces.as_slice()).copied().ok_or_else(|| {
            let ids: Vec<&str> = faces.iter().map(|&f| self.z.id(2, f)).collect();
            Error::NotKan(format!("no filler for Λ^{{3,{k}}} at {ids:?}"))
        })?;
        Ok(self.z.face(3, k, eta))
    }
}

/// A 2-group rebuilt from a reduced 2-Kan groupoid.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub two_group: Monoidal,
    /// For each morphism, the 2-simplex of the input representing it.
    pub morphism_simplex: Vec<usize>,
    /// For each pair of objects, the chosen product 2-simplex.
    pub product_cell: Vec<usize>,
}

/// Rebuilds a 2-group from a reduced 2-Kan groupoid `z`.
///
/// Objects are the 1-simplices and `X ⊗ Y` is `d_1` of the first
/// `Λ^{2,1}` filler of `(X, Y)`. A morphism `X -> Y` is a 2-simplex with
/// `d_2 = X`, `d_1 = Y` and `d_0` the degenerate edge. Composition, the
/// tensor of morphisms, the associator and the unitors come from `Λ^{3,k}`
/// fillers. The result must certify as a 2-group.
pub fn two_group_from_nerve(z: &SSet) -> Result<Reconstruction> {
    if !z.is_reduced() {
        return Err(Error::NotReduced(format!("level 0 has {} vertices", z.len(0))));
    }
    let cls = classify(z, 2)?;
    if !cls.n_kan_groupoid {
        return Err(Error::NotTwoKanGroupoid(format!("classification: {cls:?}")));
    }
    let owned;
    let z = if z.dim() < 3 {
        owned = coskeletal_extend(z, 3)?;
        &owned
    } else {
        z
    };
    let f = Fillers::new(z);
    let u = z.degen(0, 0, 0);
    let uu = z.degen(1, 0, u);
    let s0 = |x: usize| z.degen(1, 0, x);
    let s1 = |x: usize| z.degen(1, 1, x);
    let n = z.len(1);
    let morphisms: Vec<usize> = (0..z.len(2)).filter(|&xi| z.face(2, 0, xi) == u).collect();
    let mor_index: HashMap<usize, usize> = morphisms.iter().enumerate().map(|(t, &xi)| (xi, t)).collect();
    let as_mor = |xi: usize| -> Result<usize> {
        mor_index.get(&xi).copied().ok_or_else(|| Error::NotKan("filler is not a morphism".into()))
    };
    let mut mu = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            mu[x * n + y] = f.product_cell(x, y)?;
        }
    }
    let prod = |x: usize, y: usize| z.face(2, 1, mu[x * n + y]);
    let mut comp = Vec::new();
    for &xf in &morphisms {
        for &xg in &morphisms {
            if z.face(2, 1, xf) != z.face(2, 2, xg) {
                continue;
            }
            let h = f.fill(2, [uu, xg, xf])?;
            comp.push((as_mor(xg)?, as_mor(xf)?, as_mor(h)?));
        }
    }
    let mors: Vec<Morphism> = morphisms
        .iter()
        .map(|&xi| Morphism { id: z.id(2, xi).to_string(), src: z.face(2, 2, xi), tgt: z.face(2, 1, xi) })
        .collect();
    let cat = FinCategory::new(z.ids(1).to_vec(), mors, &comp).map_err(|e| Error::NotTwoKanGroupoid(e.to_string()))?;
    let tensor_obj: Vec<usize> = (0..n * n).map(|i| prod(i / n, i % n)).collect();
    let m = morphisms.len();
    let mut tensor_mor = vec![0; m * m];
    for (a, &xf) in morphisms.iter().enumerate() {
        for (b, &xg) in morphisms.iter().enumerate() {
            let (x, x2) = (z.face(2, 2, xf), z.face(2, 1, xf));
            let (y, y2) = (z.face(2, 2, xg), z.face(2, 1, xg));
            let sigma_a = f.fill(2, [s0(y2), mu[x2 * n + y2], xf])?;
            let sigma = f.fill(3, [xg, s1(prod(x2, y2)), sigma_a])?;
            let h = f.fill(1, [s1(y), sigma, mu[x * n + y]])?;
            tensor_mor[a * m + b] = as_mor(h)?;
        }
    }
    let mut assoc = vec![0; n * n * n];
    for x in 0..n {
        for y in 0..n {
            for w in 0..n {
                let tau = f.fill(1, [mu[y * n + w], mu[x * n + prod(y, w)], mu[x * n + y]])?;
                let h = f.fill(1, [s1(w), tau, mu[prod(x, y) * n + w]])?;
                assoc[(x * n + y) * n + w] = as_mor(h)?;
            }
        }
    }
    let mut lunit = Vec::with_capacity(n);
    let mut runit = Vec::with_capacity(n);
    for x in 0..n {
        let back_l = as_mor(f.fill(1, [s1(x), s0(x), mu[u * n + x]])?)?;
        let back_r = as_mor(f.fill(1, [s1(u), s1(x), mu[x * n + u]])?)?;
        let inv =
            |g: usize| cat.inverse(g).ok_or_else(|| Error::NotTwoKanGroupoid("unit cell is not invertible".into()));
        lunit.push(inv(back_l)?);
        runit.push(inv(back_r)?);
    }
    let two_group = Monoidal::from_tables(cat, tensor_obj, tensor_mor, u, assoc, lunit, runit)?;
    certify(&two_group).map_err(|e| Error::NotTwoKanGroupoid(format!("reconstruction does not certify: {e}")))?;
    Ok(Reconstruction { two_group, morphism_simplex: morphisms, product_cell: mu })
}

/// Checks that the nerve of the reconstruction is isomorphic to `z`.
pub fn round_trips(z: &SSet, rec: &Reconstruction, budget: &Budget) -> Result<bool> {
    let dim = z.dim().max(3);
    let z3 = if z.dim() < dim { coskeletal_extend(z, dim)? } else { z.clone() };
    let back = nerve_two_group(&rec.two_group, dim).sset;
    Ok(find_isomorphism(&back, &z3, budget)?.is_some())
}

/// The comparison functor from the reconstruction of `nerve(g)` back to `g`:
/// identity on objects, a 2-simplex `ξ: X ⊗ 𝟙 -> Y` goes to `ξ ∘ r_X`, and the
/// structure map at `(X, Y)` is the chosen product cell.
pub fn comparison_functor(g: &Monoidal, nerve: &TwoGroupNerve, rec: &Reconstruction) -> LaxFunctor {
    let simplex = |xi: usize| -> &QSimplex { &nerve.simplices[2][xi] };
    let mor = rec
        .morphism_simplex
        .iter()
        .map(|&xi| {
            let s = simplex(xi);
            g.comp(s.mor[0], g.runit(s.x(0, 1)))
        })
        .collect();
    let m = rec.product_cell.iter().map(|&xi| simplex(xi).mor[0]).collect();
    LaxFunctor { obj: (0..g.cat().num_objects()).collect(), mor, m }
}

/// Outcome of comparing homotopy groups of a 2-group and of its nerve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrhoReport {
    /// `[X] -> class of X` is an isomorphism onto the first homotopy group.
    pub pi0_to_pi1: bool,
    /// `φ -> class of φ ∘ l_𝟙^{-1}` is an isomorphism onto the second one.
    pub pi1_to_pi2: bool,
    pub pi0: FiniteGroup,
    pub nerve_pi1: FiniteGroup,
    /// Image of each element of `pi0` in `nerve_pi1`.
    pub map0: Option<Vec<usize>>,
    pub pi1: FiniteGroup,
    pub nerve_pi2: FiniteGroup,
    /// Image of each element of `pi1` in `nerve_pi2`.
    pub map1: Option<Vec<usize>>,
}

impl GrhoReport {
    pub fn passed(&self) -> bool {
        self.pi0_to_pi1 && self.pi1_to_pi2
    }
}

/// Compares the homotopy groups of a 2-group with those of its nerve
/// through the explicit maps on representatives.
pub fn grho_check(g: &Monoidal) -> Result<GrhoReport> {
    let nerve = nerve_two_group(g, 4);
    let z = &nerve.sset;
    let h1 = pi(z, 1, 0)?;
    let h2 = pi(z, 2, 0)?;
    let (p0, cls0) = pi0(g)?;
    let (p1, els1) = pi1(g)?;
    let map0: Option<Vec<usize>> = (0..p0.order())
        .map(|k| {
            let x = cls0.iter().position(|&c| c == k)?;
            h1.class(x)
        })
        .collect();
    let u = Unitors::new(g);
    let one = g.unit();
    let map1: Option<Vec<usize>> = els1
        .iter()
        .map(|&phi| {
            let s = QSimplex { q: 2, obj: vec![one, one, one], mor: vec![g.comp(phi, u.linv[one])] };
            h2.class(z.index(2, &s.id(g))?)
        })
        .collect();
    Ok(GrhoReport {
        pi0_to_pi1: map0.as_ref().is_some_and(|m| p0.is_iso(m, &h1.group)),
        pi1_to_pi2: map1.as_ref().is_some_and(|m| p1.is_iso(m, &h2.group)),
        pi0: p0,
        nerve_pi1: h1.group,
        map0,
        pi1: p1,
        nerve_pi2: h2.group,
        map1,
    })
}

/// The map from the loop space of the nerve to the nerve of the underlying
/// groupoid, built levelwise.
#[derive(Clone, Debug)]
pub struct LoopGamma {
    pub loop_space: SSet,
    pub groupoid_nerve: SSet,
    pub map: SMap,
}

impl LoopGamma {
    pub fn is_isomorphism(&self) -> bool {
        self.map.is_simplicial(&self.loop_space, &self.groupoid_nerve)
            && self.map.is_levelwise_bijective(&self.groupoid_nerve)
    }
}

/// Builds the comparison `Ω(nerve g) -> N(g)` through level 3.
///
/// On vertices it is the identity on objects; a 1-simplex `ξ: 𝟙 ⊗ X -> Y`
/// goes to `l_X^{-1} ∘ ξ^{-1}: Y -> X`. Higher simplices go to the unique
/// simplex with the image faces.
pub fn loop_gamma(g: &Monoidal) -> Result<LoopGamma> {
    let nerve = nerve_two_group(g, 4);
    let omega = loop_space(&nerve.sset, 0, LoopVariant::Plain)?;
    let target = nerve_category(g.cat(), 3);
    let u = Unitors::new(g);
    let c = g.cat();
    let mut levels: Vec<Vec<usize>> = Vec::new();
    levels.push((0..omega.len(0)).map(|a| target.require(0, omega.id(0, a))).collect::<Result<_>>()?);
    let mut row = Vec::with_capacity(omega.len(1));
    for a in 0..omega.len(1) {
        let zi = nerve.sset.require(2, omega.id(1, a))?;
        let s = &nerve.simplices[2][zi];
        let f = c.compose(u.linv[s.x(1, 2)], g.inv(s.mor[0]));
        row.push(target.require(1, &c.morphisms()[f].id)?);
    }
    levels.push(row);
    for k in 2..=omega.dim() {
        let mut by_faces: HashMap<Vec<usize>, usize> = HashMap::new();
        for y in 0..target.len(k) {
            by_faces.entry(target.faces_of(k, y)).or_insert(y);
        }
        let mut row = Vec::with_capacity(omega.len(k));
        for a in 0..omega.len(k) {
            let key: Vec<usize> = (0..=k).map(|i| levels[k - 1][omega.face(k, i, a)]).collect();
            row.push(
                *by_faces
                    .get(&key)
                    .ok_or_else(|| Error::Invalid(format!("no image for loop simplex {}", omega.id(k, a))))?,
            );
        }
        levels.push(row);
    }
    Ok(LoopGamma { loop_space: omega, groupoid_nerve: target, map: SMap { levels } })
}
