use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::monoidal::Monoidal;
use crate::pi::UnionFind;

/// Inverse data certifying that a monoidal groupoid is a 2-group.
///
/// `right_inv[x]` is an object with `alpha[x]: X ⊗ right_inv[x] -> 𝟙`;
/// `left_inv[x]` one with `beta[x]: left_inv[x] ⊗ X -> 𝟙`. On morphisms,
/// `right_inv_mor[f]` is the unique morphism making `alpha` natural, and
/// likewise for `left_inv_mor` and `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGroupCertificate {
    pub right_inv: Vec<usize>,
    pub alpha: Vec<usize>,
    pub right_inv_mor: Vec<usize>,
    pub left_inv: Vec<usize>,
    pub beta: Vec<usize>,
    pub left_inv_mor: Vec<usize>,
}

/// Certifies a 2-group: a coherent monoidal groupoid in which every object
/// has functorial left and right inverses with natural counits.
///
/// On failure the error names a non-invertible morphism or object.
pub fn certify(g: &Monoidal) -> Result<TwoGroupCertificate> {
    let report = g.check();
    if let Some(f) = report.failures.first() {
        return Err(Error::NotTwoGroup(f.clone()));
    }
    let c = g.cat();
    if let Some(f) = (0..c.num_morphisms()).find(|&f| c.inverse(f).is_none()) {
        return Err(Error::NotTwoGroup(format!("morphism {} is not invertible", c.morphisms()[f].id)));
    }
    let n = c.num_objects();
    let one = g.unit();
    let mut right_inv = Vec::with_capacity(n);
    let mut alpha = Vec::with_capacity(n);
    let mut left_inv = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    for x in 0..n {
        let r = (0..n)
            .find_map(|y| c.hom(g.tensor(x, y), one).first().map(|&a| (y, a)))
            .ok_or_else(|| Error::NotTwoGroup(format!("object {} has no right inverse", c.objects()[x])))?;
        let l = (0..n)
            .find_map(|y| c.hom(g.tensor(y, x), one).first().map(|&b| (y, b)))
            .ok_or_else(|| Error::NotTwoGroup(format!("object {} has no left inverse", c.objects()[x])))?;
        right_inv.push(r.0);
        alpha.push(r.1);
        left_inv.push(l.0);
        beta.push(l.1);
    }
    let mut right_inv_mor = Vec::with_capacity(c.num_morphisms());
    let mut left_inv_mor = Vec::with_capacity(c.num_morphisms());
    for f in 0..c.num_morphisms() {
        let (x, y) = (c.src(f), c.tgt(f));
        let rf = c
            .hom(right_inv[x], right_inv[y])
            .into_iter()
            .find(|&h| c.compose(alpha[y], g.tensor_mor(f, h)) == alpha[x])
            .ok_or_else(|| Error::NotTwoGroup(format!("right inverse is not functorial at {}", c.morphisms()[f].id)))?;
        let lf = c
            .hom(left_inv[x], left_inv[y])
            .into_iter()
            .find(|&h| c.compose(beta[y], g.tensor_mor(h, f)) == beta[x])
            .ok_or_else(|| Error::NotTwoGroup(format!("left inverse is not functorial at {}", c.morphisms()[f].id)))?;
        right_inv_mor.push(rf);
        left_inv_mor.push(lf);
    }
    for (f, g2) in (0..c.num_morphisms()).flat_map(|f| (0..c.num_morphisms()).map(move |g2| (f, g2))) {
        if let Some(gf) = c.try_compose(g2, f) {
            if right_inv_mor[gf] != c.compose(right_inv_mor[g2], right_inv_mor[f])
                || left_inv_mor[gf] != c.compose(left_inv_mor[g2], left_inv_mor[f])
            {
                return Err(Error::NotTwoGroup("inverse assignment is not a functor".into()));
            }
        }
    }
    for x in 0..n {
        if right_inv_mor[c.identity(x)] != c.identity(right_inv[x])
            || left_inv_mor[c.identity(x)] != c.identity(left_inv[x])
        {
            return Err(Error::NotTwoGroup("inverse assignment does not preserve identities".into()));
        }
    }
    Ok(TwoGroupCertificate { right_inv, alpha, right_inv_mor, left_inv, beta, left_inv_mor })
}

/// Isomorphism classes of objects, with the induced product.
///
/// Returns the group together with the class index of every object.
pub fn pi0(g: &Monoidal) -> Result<(FiniteGroup, Vec<usize>)> {
    let c = g.cat();
    let n = c.num_objects();
    let mut uf = UnionFind::new(n);
    for f in 0..c.num_morphisms() {
        uf.union(c.src(f), c.tgt(f));
    }
    let roots = uf.roots();
    let class: Vec<usize> = (0..n).map(|x| roots.iter().position(|&r| r == uf.find(x)).expect("root")).collect();
    let k = roots.len();
    let mut table = vec![vec![usize::MAX; k]; k];
    for x in 0..n {
        for y in 0..n {
            let slot = &mut table[class[x]][class[y]];
            let v = class[g.tensor(x, y)];
            if *slot != usize::MAX && *slot != v {
                return Err(Error::NotTwoGroup("tensor is not well defined on isomorphism classes".into()));
            }
            *slot = v;
        }
    }
    let names = roots.iter().map(|&r| c.objects()[r].clone()).collect();
    let group = FiniteGroup::new(names, table).map_err(|e| Error::NotTwoGroup(format!("classes of objects: {e}")))?;
    Ok((group, class))
}

/// Automorphisms of the unit object under composition, with the morphism
/// index of every element.
pub fn pi1(g: &Monoidal) -> Result<(FiniteGroup, Vec<usize>)> {
    let c = g.cat();
    let one = g.unit();
    let elems = c.hom(one, one);
    let table = elems
        .iter()
        .map(|&a| elems.iter().map(|&b| elems.iter().position(|&e| e == c.compose(b, a)).expect("closed")).collect())
        .collect();
    let names = elems.iter().map(|&e| c.morphisms()[e].id.clone()).collect();
    let group = FiniteGroup::new(names, table).map_err(|e| Error::NotTwoGroup(format!("automorphisms of 𝟙: {e}")))?;
    if !group.is_abelian() {
        return Err(Error::NotTwoGroup("automorphisms of 𝟙 do not commute".into()));
    }
    Ok((group, elems))
}

/// A lax unitary monoidal functor between finite monoidal categories.
///
/// `m[x * n + y]: F X ⊗ F Y -> F(X ⊗ Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxFunctor {
    pub obj: Vec<usize>,
    pub mor: Vec<usize>,
    pub m: Vec<usize>,
}

impl LaxFunctor {
    pub fn structure(&self, src: &Monoidal, x: usize, y: usize) -> usize {
        self.m[x * src.cat().num_objects() + y]
    }

    /// Checks the functor laws, strict preservation of the unit, naturality
    /// of `m`, the hexagon and both unit conditions.
    pub fn check(&self, src: &Monoidal, tgt: &Monoidal) -> Vec<String> {
        let mut failures = Vec::new();
        let (cs, ct) = (src.cat(), tgt.cat());
        let n = cs.num_objects();
        if self.obj.len() != n || self.mor.len() != cs.num_morphisms() || self.m.len() != n * n {
            return vec!["functor tables have the wrong shape".into()];
        }
        if self.obj.iter().any(|&x| x >= ct.num_objects())
            || self.mor.iter().chain(&self.m).any(|&f| f >= ct.num_morphisms())
        {
            return vec!["functor tables point outside the target".into()];
        }
        for f in 0..cs.num_morphisms() {
            if ct.src(self.mor[f]) != self.obj[cs.src(f)] || ct.tgt(self.mor[f]) != self.obj[cs.tgt(f)] {
                failures.push(format!("F({}) has the wrong endpoints", cs.morphisms()[f].id));
            }
        }
        for x in 0..n {
            if self.mor[cs.identity(x)] != ct.identity(self.obj[x]) {
                failures.push(format!("F does not preserve the identity of {}", cs.objects()[x]));
            }
        }
        for (g, f, h) in cs.composition_triples() {
            if ct.try_compose(self.mor[g], self.mor[f]) != Some(self.mor[h]) {
                failures.push("F does not preserve composition".into());
                break;
            }
        }
        if self.obj[src.unit()] != tgt.unit() {
            failures.push("F does not send 𝟙 to 𝟙".into());
        }
        if !failures.is_empty() {
            return failures;
        }
        for x in 0..n {
            for y in 0..n {
                let m = self.structure(src, x, y);
                if ct.src(m) != tgt.tensor(self.obj[x], self.obj[y]) || ct.tgt(m) != self.obj[src.tensor(x, y)] {
                    failures.push(format!("m at ({}, {}) has the wrong endpoints", cs.objects()[x], cs.objects()[y]));
                }
            }
        }
        if !failures.is_empty() {
            return failures;
        }
        for f in 0..cs.num_morphisms() {
            for g in 0..cs.num_morphisms() {
                let lhs =
                    ct.compose(self.structure(src, cs.tgt(f), cs.tgt(g)), tgt.tensor_mor(self.mor[f], self.mor[g]));
                let rhs = ct.compose(self.mor[src.tensor_mor(f, g)], self.structure(src, cs.src(f), cs.src(g)));
                if lhs != rhs {
                    failures.push(format!("m is not natural at ({}, {})", cs.morphisms()[f].id, cs.morphisms()[g].id));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (fx, fy, fz) = (self.obj[x], self.obj[y], self.obj[z]);
                    let left = tgt.chain(&[
                        tgt.assoc(fx, fy, fz),
                        tgt.tensor_mor(ct.identity(fx), self.structure(src, y, z)),
                        self.structure(src, x, src.tensor(y, z)),
                    ]);
                    let right = tgt.chain(&[
                        tgt.tensor_mor(self.structure(src, x, y), ct.identity(fz)),
                        self.structure(src, src.tensor(x, y), z),
                        self.mor[src.assoc(x, y, z)],
                    ]);
                    if left.is_none() || left != right {
                        failures.push(format!(
                            "hexagon fails at ({}, {}, {})",
                            cs.objects()[x],
                            cs.objects()[y],
                            cs.objects()[z]
                        ));
                    }
                }
            }
            let fx = self.obj[x];
            let l = tgt.chain(&[tgt.lunit(fx), self.structure(src, src.unit(), x)]);
            if l != Some(self.mor[src.lunit(x)]) {
                failures.push(format!("left unit condition fails at {}", cs.objects()[x]));
            }
            let r = tgt.chain(&[tgt.runit(fx), self.structure(src, x, src.unit())]);
            if r != Some(self.mor[src.runit(x)]) {
                failures.push(format!("right unit condition fails at {}", cs.objects()[x]));
            }
        }
        failures
    }

    /// The composite `other ∘ self`, with `m = other(m_self) ∘ m_other`.
    pub fn then(&self, src: &Monoidal, mid: &Monoidal, tgt: &Monoidal, other: &LaxFunctor) -> LaxFunctor {
        let n = src.cat().num_objects();
        let m = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                let inner = other.structure(mid, self.obj[x], self.obj[y]);
                tgt.comp(other.mor[self.structure(src, x, y)], inner)
            })
            .collect();
        LaxFunctor {
            obj: self.obj.iter().map(|&x| other.obj[x]).collect(),
            mor: self.mor.iter().map(|&f| other.mor[f]).collect(),
            m,
        }
    }

    /// True when the induced maps on classes of objects and on
    /// automorphisms of the unit are both group isomorphisms.
    pub fn is_weak_equivalence(&self, src: &Monoidal, tgt: &Monoidal) -> Result<bool> {
        let (p0s, cls_s) = pi0(src)?;
        let (p0t, cls_t) = pi0(tgt)?;
        let map0: Vec<usize> = (0..p0s.order())
            .map(|k| {
                let x = cls_s.iter().position(|&c| c == k).expect("class representative");
                cls_t[self.obj[x]]
            })
            .collect();
        let (p1s, els_s) = pi1(src)?;
        let (p1t, els_t) = pi1(tgt)?;
        let map1: Option<Vec<usize>> = els_s.iter().map(|&e| els_t.iter().position(|&t| t == self.mor[e])).collect();
        let Some(map1) = map1 else {
            return Ok(false);
        };
        Ok(p0s.is_iso(&map0, &p0t) && p1s.is_iso(&map1, &p1t))
    }
}
