//! Additive functions, determinants valued in 2-groups, their morphisms, and
//! their comparison with maps into nerves.
//!
//! Every enumerator here is a direct constraint search over the defining
//! conditions. The comparison functions check the result against the
//! independent map enumerators of [`crate::hom`] and [`crate::bisimplicial`]
//! through explicit bijections.

use crate::bisimplicial::{for_each_map, total_degree_shape, BiMap, BiSSet};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::{hom_sset, mapping_space, simplex_vertices, MappingSpace};
use crate::monoidal::Monoidal;
use crate::nerve::{nerve_category, nerve_group};
use crate::nerve2::{cocycle_holds, nerve_two_group, pair_pos, triple_pos, QSimplex, TwoGroupNerve};
use crate::pi::{pi0, UnionFind};
use crate::segal::{hom1, segal_nerve, EnrichedHom, QGroupoid, QMorphism};
use crate::sset::{SMap, SSet};
use crate::standard::{delta, pair_index, product};
use std::collections::{BTreeSet, HashMap, HashSet};

/// Depth-first search over variables `0..n` in order.
///
/// `domain(v, vals)` lists the candidates for `v` given the values of the
/// earlier variables. `triggers[v]` lists the constraints whose last
/// variable is `v`; they are tested by `holds` once `v` is set.
fn search(
    n: usize,
    budget: &Budget,
    domain: &dyn Fn(usize, &[usize]) -> Vec<usize>,
    triggers: &[Vec<usize>],
    holds: &dyn Fn(usize, &[usize]) -> bool,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    fn go(
        v: usize,
        vals: &mut Vec<usize>,
        n: usize,
        budget: &Budget,
        domain: &dyn Fn(usize, &[usize]) -> Vec<usize>,
        triggers: &[Vec<usize>],
        holds: &dyn Fn(usize, &[usize]) -> bool,
        visit: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        if v == n {
            return visit(vals);
        }
        for c in domain(v, vals) {
            budget.charge(1)?;
            vals.push(c);
            if triggers[v].iter().all(|&k| holds(k, vals)) {
                go(v + 1, vals, n, budget, domain, triggers, holds, visit)?;
            }
            vals.pop();
        }
        Ok(())
    }
    let mut vals = Vec::with_capacity(n);
    go(0, &mut vals, n, budget, domain, triggers, holds, visit)
}

/// Files each constraint under the largest variable it reads.
fn triggers_for(n: usize, constraints: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (k, vars) in constraints.iter().enumerate() {
        let last = vars.iter().copied().max().expect("constraint reads a variable");
        out[last].push(k);
    }
    out
}

/// The face of simplex `a` (level `k`) spanned by the sorted vertex list `verts`.
pub fn subsimplex(x: &SSet, k: usize, a: usize, verts: &[usize]) -> usize {
    let mut s = a;
    let mut level = k;
    for v in (0..=k).rev() {
        if !verts.contains(&v) {
            s = x.face(level, v, s);
            level -= 1;
        }
    }
    s
}

fn require_reduced(x: &SSet, min_dim: usize) -> Result<()> {
    if !x.is_reduced() {
        return Err(Error::NotReduced(format!("{} vertices", x.len(0))));
    }
    if x.dim() < min_dim {
        return Err(Error::DimensionOutOfRange { requested: min_dim, available: x.dim() });
    }
    Ok(())
}

/// Outcome of a comparison between a constraint enumeration and a map
/// enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representability {
    pub count: usize,
    pub oracle_count: usize,
    /// The explicit correspondence was checked in both directions.
    pub bijection_verified: bool,
}

/// A function `D: X_1 -> H` with `D(s_0 ⋆) = e` and
/// `D(d_1 α) = D(d_2 α) · D(d_0 α)` for every 2-simplex `α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdditiveFunction {
    pub values: Vec<usize>,
}

impl AdditiveFunction {
    pub fn check(&self, x: &SSet, h: &FiniteGroup) -> bool {
        self.values.len() == x.len(1)
            && self.values[x.degen(0, 0, 0)] == h.identity()
            && (0..x.len(2)).all(|a| {
                let d = |i| self.values[x.face(2, i, a)];
                d(1) == h.mul(d(2), d(0))
            })
    }

    /// The simplicial map `X -> N(H)` sending each simplex to the chain of
    /// values on its spine. `None` when a chain is missing from `nerve`.
    pub fn to_map(&self, x: &SSet, h: &FiniteGroup, nerve: &SSet) -> Option<SMap> {
        let levels = (0..=x.dim())
            .map(|k| {
                (0..x.len(k))
                    .map(|a| match k {
                        0 => Some(0),
                        _ => {
                            let chain: Vec<&str> =
                                (0..k).map(|i| h.name(self.values[subsimplex(x, k, a, &[i, i + 1])])).collect();
                            nerve.index(k, &chain.join(","))
                        }
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(SMap { levels })
    }

    /// The restriction of a map `X -> N(H)` to level 1.
    pub fn from_map(f: &SMap, h: &FiniteGroup, nerve: &SSet) -> Option<AdditiveFunction> {
        let values = f.levels[1].iter().map(|&e| h.index(nerve.id(1, e))).collect::<Option<Vec<_>>>()?;
        Some(AdditiveFunction { values })
    }
}

/// All additive functions on a reduced `X` with values in `H`.
pub fn enumerate_additive(x: &SSet, h: &FiniteGroup, budget: &Budget) -> Result<Vec<AdditiveFunction>> {
    require_reduced(x, 2)?;
    let unit_edge = x.degen(0, 0, 0);
    let constraints: Vec<Vec<usize>> = (0..x.len(2)).map(|a| x.faces_of(2, a)).collect();
    let triggers = triggers_for(x.len(1), &constraints);
    let all: Vec<usize> = (0..h.order()).collect();
    let domain = |v: usize, _: &[usize]| if v == unit_edge { vec![h.identity()] } else { all.clone() };
    let holds = |k: usize, vals: &[usize]| {
        let f = &constraints[k];
        vals[f[1]] == h.mul(vals[f[2]], vals[f[0]])
    };
    let mut out = Vec::new();
    search(x.len(1), budget, &domain, &triggers, &holds, &mut |vals| {
        out.push(AdditiveFunction { values: vals.to_vec() });
        Ok(())
    })?;
    Ok(out)
}

/// Compares [`enumerate_additive`] with `Hom(X, N(H))`.
pub fn verify_additive(x: &SSet, h: &FiniteGroup, budget: &Budget) -> Result<Representability> {
    let adds = enumerate_additive(x, h, budget)?;
    let nerve = nerve_group(h, x.dim());
    let maps = hom_sset(x, &nerve, budget)?;
    let oracle: HashSet<&SMap> = maps.iter().collect();
    let mut images = HashSet::new();
    let forward = adds.iter().all(|d| match d.to_map(x, h, &nerve) {
        Some(f) => f.is_simplicial(x, &nerve) && oracle.contains(&f) && images.insert(f),
        None => false,
    });
    let found: HashSet<&AdditiveFunction> = adds.iter().collect();
    let backward = maps.iter().all(|f| {
        AdditiveFunction::from_map(f, h, &nerve)
            .is_some_and(|d| found.contains(&d) && d.to_map(x, h, &nerve).as_ref() == Some(f))
    });
    Ok(Representability {
        count: adds.len(),
        oracle_count: maps.len(),
        bijection_verified: forward && backward && adds.len() == maps.len(),
    })
}

/// A determinant `(D, T)` of a reduced simplicial set: `D: X_1 -> objects`
/// and `T: X_2 -> morphisms`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Determinant {
    pub d: Vec<usize>,
    pub t: Vec<usize>,
}

/// The simplex of `𝒩G` with `D` on the edges and `T` on the triangles of a
/// simplex of `X`.
fn qsimplex_of(x: &SSet, k: usize, a: usize, d: &dyn Fn(usize) -> usize, t: &dyn Fn(usize) -> usize) -> QSimplex {
    let mut obj = Vec::new();
    let mut mor = Vec::new();
    if k == 1 {
        obj.push(d(a));
    }
    if k >= 2 {
        for i in 0..=k {
            for j in i + 1..=k {
                obj.push(d(subsimplex(x, k, a, &[i, j])));
            }
        }
        for i in 0..=k {
            for j in i + 1..=k {
                for l in j + 1..=k {
                    mor.push(t(subsimplex(x, k, a, &[i, j, l])));
                }
            }
        }
    }
    debug_assert!(k < 2 || obj.len() == pair_pos(k, k - 1, k) + 1);
    debug_assert!(k < 2 || mor.len() == triple_pos(k, k - 2, k - 1, k) + 1);
    QSimplex { q: k, obj, mor }
}

impl Determinant {
    /// Checks edge compatibility, the unit conditions and the pentagon on
    /// every 3-simplex.
    pub fn check(&self, x: &SSet, g: &Monoidal) -> bool {
        let c = g.cat();
        if self.d.len() != x.len(1) || self.t.len() != x.len(2) {
            return false;
        }
        let unit_edge = x.degen(0, 0, 0);
        let unit_tri = x.degen(1, 0, unit_edge);
        let compatible = (0..x.len(2)).all(|a| {
            let f = self.t[a];
            let e = |i| self.d[x.face(2, i, a)];
            c.src(f) == g.tensor(e(2), e(0)) && c.tgt(f) == e(1)
        });
        compatible
            && self.d[unit_edge] == g.unit()
            && self.t[unit_tri] == g.inv(g.lunit(g.unit()))
            && (0..x.len(3)).all(|a| self.pentagon(x, g, a))
    }

    fn pentagon(&self, x: &SSet, g: &Monoidal, eta: usize) -> bool {
        let s = qsimplex_of(x, 3, eta, &|e| self.d[e], &|t| self.t[t]);
        cocycle_holds(g, &s, 0, 1, 2, 3)
    }

    /// `T(s_0 A) = l⁻¹` and `T(s_1 A) = r⁻¹` at `D(A)`, for every edge `A`.
    pub fn forcing_holds(&self, x: &SSet, g: &Monoidal) -> bool {
        (0..x.len(1)).all(|a| {
            let da = self.d[a];
            self.t[x.degen(1, 0, a)] == g.inv(g.lunit(da)) && self.t[x.degen(1, 1, a)] == g.inv(g.runit(da))
        })
    }

    /// The map `X -> 𝒩G` with `f_1 = D` and `f_2 = T`. `None` when some
    /// image is not a simplex of `nerve`.
    pub fn to_map(&self, x: &SSet, g: &Monoidal, nerve: &TwoGroupNerve) -> Option<SMap> {
        let levels = (0..=x.dim().min(nerve.sset.dim()))
            .map(|k| {
                (0..x.len(k))
                    .map(|a| nerve.sset.index(k, &qsimplex_of(x, k, a, &|e| self.d[e], &|t| self.t[t]).id(g)))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(SMap { levels })
    }

    /// `(f_1, f_2)` for a map `f: X -> 𝒩G`.
    pub fn from_map(f: &SMap, nerve: &TwoGroupNerve) -> Determinant {
        Determinant {
            d: f.levels[1].iter().map(|&e| nerve.simplices[1][e].obj[0]).collect(),
            t: f.levels[2].iter().map(|&s| nerve.simplices[2][s].mor[0]).collect(),
        }
    }
}

/// All determinants of a reduced `X` (of dimension at least 3) valued in `G`.
///
/// Variables are the edges, then the triangles. Only `D(s_0 ⋆)` and
/// `T(s_0 s_0 ⋆)` are fixed in advance; the values on other degenerate
/// simplices are left to the search.
pub fn enumerate_determinants(x: &SSet, g: &Monoidal, budget: &Budget) -> Result<Vec<Determinant>> {
    require_reduced(x, 3)?;
    let c = g.cat();
    let (n1, n2) = (x.len(1), x.len(2));
    let unit_edge = x.degen(0, 0, 0);
    let unit_tri = x.degen(1, 0, unit_edge);
    let unit_mor = g.inv(g.lunit(g.unit()));
    let constraints: Vec<Vec<usize>> =
        (0..x.len(3)).map(|a| x.faces_of(3, a).into_iter().map(|t| n1 + t).collect()).collect();
    let triggers = triggers_for(n1 + n2, &constraints);
    let objects: Vec<usize> = (0..c.num_objects()).collect();
    let domain = |v: usize, vals: &[usize]| {
        if v < n1 {
            return if v == unit_edge { vec![g.unit()] } else { objects.clone() };
        }
        let a = v - n1;
        let e = |i| vals[x.face(2, i, a)];
        let hom = c.hom(g.tensor(e(2), e(0)), e(1));
        if a == unit_tri {
            hom.into_iter().filter(|&f| f == unit_mor).collect()
        } else {
            hom
        }
    };
    let holds = |k: usize, vals: &[usize]| {
        let s = qsimplex_of(x, 3, k, &|e| vals[e], &|t| vals[n1 + t]);
        cocycle_holds(g, &s, 0, 1, 2, 3)
    };
    let mut out = Vec::new();
    search(n1 + n2, budget, &domain, &triggers, &holds, &mut |vals| {
        out.push(Determinant { d: vals[..n1].to_vec(), t: vals[n1..].to_vec() });
        Ok(())
    })?;
    Ok(out)
}

/// A morphism of determinants `H: (D, T) -> (D', T')`: `H(A): D(A) -> D'(A)`
/// on every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeterminantMorphism {
    pub h: Vec<usize>,
}

/// All morphisms between two determinants of the same `X`.
pub fn det_morphisms(
    x: &SSet,
    g: &Monoidal,
    d1: &Determinant,
    d2: &Determinant,
    budget: &Budget,
) -> Result<Vec<DeterminantMorphism>> {
    require_reduced(x, 2)?;
    let c = g.cat();
    let unit_edge = x.degen(0, 0, 0);
    let constraints: Vec<Vec<usize>> = (0..x.len(2)).map(|a| x.faces_of(2, a)).collect();
    let triggers = triggers_for(x.len(1), &constraints);
    let domain = |v: usize, _: &[usize]| {
        let hom = c.hom(d1.d[v], d2.d[v]);
        if v == unit_edge {
            hom.into_iter().filter(|&f| f == g.id(g.unit())).collect()
        } else {
            hom
        }
    };
    let holds = |a: usize, vals: &[usize]| {
        let f = &constraints[a];
        g.comp(vals[f[1]], d1.t[a]) == g.comp(d2.t[a], g.tensor_mor(vals[f[2]], vals[f[0]]))
    };
    let mut out = Vec::new();
    search(x.len(1), budget, &domain, &triggers, &holds, &mut |vals| {
        out.push(DeterminantMorphism { h: vals.to_vec() });
        Ok(())
    })?;
    Ok(out)
}

/// Path components of the determinants of `X` under "there is a morphism".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetComponents {
    pub determinants: Vec<Determinant>,
    /// Classes of determinant indices, each sorted, ordered by least member.
    pub classes: Vec<Vec<usize>>,
    /// Whether every pair related one way is related the other way too.
    pub symmetric: bool,
}

/// [`DetComponents`] by union-find over the existence of morphisms.
pub fn pi0_det(x: &SSet, g: &Monoidal, budget: &Budget) -> Result<DetComponents> {
    let dets = enumerate_determinants(x, g, budget)?;
    let n = dets.len();
    let mut related = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            related[i][j] = !det_morphisms(x, g, &dets[i], &dets[j], budget)?.is_empty();
        }
    }
    let symmetric = (0..n).all(|i| (0..n).all(|j| related[i][j] == related[j][i]));
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in 0..n {
            if related[i][j] {
                uf.union(i, j);
            }
        }
    }
    let classes = uf.roots().into_iter().map(|r| (0..n).filter(|&i| uf.find(i) == r).collect()).collect();
    Ok(DetComponents { determinants: dets, classes, symmetric })
}

/// Full comparison for reduced determinants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantReport {
    pub maps: Representability,
    /// Every determinant satisfies the forcing identities on degenerate
    /// triangles.
    pub forcing: bool,
    pub symmetric: bool,
    pub pi0_count: usize,
    pub oracle_pi0_count: usize,
    /// The classes agree with the path components of the mapping space
    /// under the bijection.
    pub pi0_matches: bool,
}

impl DeterminantReport {
    pub fn passed(&self) -> bool {
        self.maps.bijection_verified && self.forcing && self.symmetric && self.pi0_matches
    }
}

/// The pointed mapping space `Hom(X ∧ Δ^n_+, Y)` for `n <= n_max`.
pub fn enriched_hom0(x: &SSet, y: &SSet, n_max: usize, budget: &Budget) -> Result<MappingSpace> {
    mapping_space(x, y, n_max, budget)
}

/// Compares determinants with `Hom(X, 𝒩G)` and their components with the
/// components of the mapping space.
pub fn verify_determinants(x: &SSet, g: &Monoidal, budget: &Budget) -> Result<DeterminantReport> {
    let comps = pi0_det(x, g, budget)?;
    let dets = &comps.determinants;
    let nerve = nerve_two_group(g, x.dim());
    let maps = hom_sset(x, &nerve.sset, budget)?;
    let oracle: HashMap<&SMap, usize> = maps.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut det_to_map = Vec::with_capacity(dets.len());
    for d in dets {
        match d.to_map(x, g, &nerve) {
            Some(f) if f.is_simplicial(x, &nerve.sset) => det_to_map.push(oracle.get(&f).copied()),
            _ => det_to_map.push(None),
        }
    }
    let images: HashSet<usize> = det_to_map.iter().flatten().copied().collect();
    let found: HashSet<&Determinant> = dets.iter().collect();
    let backward = maps.iter().all(|f| {
        let d = Determinant::from_map(f, &nerve);
        found.contains(&d) && d.to_map(x, g, &nerve).as_ref() == Some(f)
    });
    let bijection_verified =
        det_to_map.iter().all(Option::is_some) && images.len() == dets.len() && backward && dets.len() == maps.len();

    let space = enriched_hom0(x, &nerve.sset, 1, budget)?;
    let space_index: HashMap<&SMap, usize> = space.maps[0].iter().enumerate().map(|(i, f)| (f, i)).collect();
    let oracle_classes = pi0(&space.sset);
    let as_space: Option<Vec<usize>> = det_to_map
        .iter()
        .map(|m| {
            let f = maps.get((*m)?)?;
            let dim = space.maps[0].first().map_or(0, |h| h.levels.len() - 1);
            let t = SMap { levels: f.levels[..=dim].to_vec() };
            space_index.get(&t).copied()
        })
        .collect();
    let ours: BTreeSet<BTreeSet<usize>> = match &as_space {
        Some(ix) => comps.classes.iter().map(|cl| cl.iter().map(|&i| ix[i]).collect()).collect(),
        None => BTreeSet::new(),
    };
    let theirs: BTreeSet<BTreeSet<usize>> =
        oracle_classes.iter().map(|cl| cl.iter().filter_map(|id| space.sset.index(0, id)).collect()).collect();
    Ok(DeterminantReport {
        maps: Representability { count: dets.len(), oracle_count: maps.len(), bijection_verified },
        forcing: dets.iter().all(|d| d.forcing_holds(x, g)),
        symmetric: comps.symmetric,
        pi0_count: comps.classes.len(),
        oracle_pi0_count: oracle_classes.len(),
        pi0_matches: as_space.is_some() && ours == theirs,
    })
}

/// A determinant of a Segal pre-monoid: a simplicial map `D` from the
/// column `X_{•,1}` (levels 0 to 2) to the nerve of the groupoid underlying
/// `G`, and `T: X_{0,2} -> morphisms`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegalDeterminant {
    /// Levels 0 to 2, valued in `nerve_category(G, 2)`.
    pub d: SMap,
    pub t: Vec<usize>,
}

/// The truncation of `X` to `p + q <= 3`, checked to be a Segal pre-monoid.
fn segal_truncation(x: &BiSSet) -> Result<BiSSet> {
    if !x.is_segal_premonoid() {
        return Err(Error::Invalid("not a Segal pre-monoid: some X_{p,0} is not a point".into()));
    }
    x.truncate(&total_degree_shape(3))
}

/// Simplicial maps `src -> N(C)` for a category nerve, by search over the
/// edges. `vertex(v)` fixes the vertices; `edge(e, candidates)` filters the
/// candidate morphisms of an edge; `extra` adds constraints on edges, each
/// listed with the edges it reads.
fn maps_to_category_nerve(
    src: &SSet,
    nerve: &SSet,
    c: &crate::category::FinCategory,
    vertex: &dyn Fn(usize) -> usize,
    edge: &dyn Fn(usize, Vec<usize>) -> Vec<usize>,
    extra: &[(Vec<usize>, Box<dyn Fn(&[usize]) -> bool + '_>)],
    budget: &Budget,
) -> Result<Vec<SMap>> {
    let n1 = src.len(1);
    let mut constraints: Vec<Vec<usize>> = (0..src.len(2)).map(|a| src.faces_of(2, a)).collect();
    constraints.extend(extra.iter().map(|(vars, _)| vars.clone()));
    let triggers = triggers_for(n1, &constraints);
    let domain = |e: usize, _: &[usize]| {
        let (s, t) = (vertex(src.face(1, 1, e)), vertex(src.face(1, 0, e)));
        let hom = if src.degen(0, 0, src.face(1, 0, e)) == e { vec![c.identity(s)] } else { c.hom(s, t) };
        edge(e, hom)
    };
    let n2 = src.len(2);
    let holds = |k: usize, vals: &[usize]| {
        if k < n2 {
            let f = &constraints[k];
            c.try_compose(vals[f[0]], vals[f[2]]) == Some(vals[f[1]])
        } else {
            (extra[k - n2].1)(vals)
        }
    };
    let mut out = Vec::new();
    search(n1, budget, &domain, &triggers, &holds, &mut |vals| {
        let level2 = (0..n2)
            .map(|a| {
                let f = src.faces_of(2, a);
                let id = format!("{},{}", c.morphisms()[vals[f[2]]].id, c.morphisms()[vals[f[0]]].id);
                nerve.index(2, &id).ok_or_else(|| Error::Invalid(format!("chain {id} is missing")))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(SMap { levels: vec![(0..src.len(0)).map(vertex).collect(), vals.to_vec(), level2] });
        Ok(())
    })?;
    Ok(out)
}

/// All determinants of a Segal pre-monoid with values in `G`.
///
/// `D` is enumerated first as a map of simplicial sets with `D_0(s_0^v ⋆)`
/// fixed to the unit; `T` follows with compatibility, the unit condition,
/// naturality over `X_{1,2}` and associativity over `X_{0,3}`.
pub fn enumerate_segal_determinants(x: &BiSSet, g: &Monoidal, budget: &Budget) -> Result<Vec<SegalDeterminant>> {
    let x = segal_truncation(x)?;
    let c = g.cat();
    let col = x.column(1)?;
    let nerve = nerve_category(c, 2);
    let unit_vertex = x.vdegen(0, 0, 0, 0);
    let n0 = col.len(0);
    // D_0 is searched with the edges: objects first, as constant edges.
    let mut ds = Vec::new();
    {
        let objects: Vec<usize> = (0..c.num_objects()).collect();
        let domain = |v: usize, _: &[usize]| if v == unit_vertex { vec![g.unit()] } else { objects.clone() };
        search(n0, budget, &domain, &vec![Vec::new(); n0], &|_, _| true, &mut |d0| {
            ds.extend(maps_to_category_nerve(&col, &nerve, c, &|v| d0[v], &|_, h| h, &[], budget)?);
            Ok(())
        })?;
    }
    let row0 = x.row(0);
    let n02 = x.len(0, 2);
    let unit_tri = x.vdegen(0, 1, 0, unit_vertex);
    let unit_mor = g.inv(g.lunit(g.unit()));
    let mut constraints: Vec<Vec<usize>> =
        (0..x.len(1, 2)).map(|z| vec![x.hface(1, 2, 1, z), x.hface(1, 2, 0, z)]).collect();
    let nat = constraints.len();
    constraints.extend((0..x.len(0, 3)).map(|e| row0.faces_of(3, e)));
    let triggers = triggers_for(n02, &constraints);
    let mut out = Vec::new();
    for d in ds {
        let d0 = |a: usize| d.levels[0][a];
        let d1 = |a: usize| d.levels[1][a];
        let domain = |v: usize, _: &[usize]| {
            let e = |i| d0(x.vface(0, 2, i, v));
            let hom = c.hom(g.tensor(e(2), e(0)), e(1));
            if v == unit_tri {
                hom.into_iter().filter(|&f| f == unit_mor).collect()
            } else {
                hom
            }
        };
        let holds = |k: usize, vals: &[usize]| {
            if k < nat {
                let z = k;
                let e = |i| d1(x.vface(1, 2, i, z));
                g.comp(e(1), vals[x.hface(1, 2, 1, z)]) == g.comp(vals[x.hface(1, 2, 0, z)], g.tensor_mor(e(2), e(0)))
            } else {
                let s = qsimplex_of(&row0, 3, k - nat, &d0, &|t| vals[t]);
                cocycle_holds(g, &s, 0, 1, 2, 3)
            }
        };
        search(n02, budget, &domain, &triggers, &holds, &mut |vals| {
            out.push(SegalDeterminant { d: d.clone(), t: vals.to_vec() });
            Ok(())
        })?;
    }
    Ok(out)
}

/// Translation between the Segal nerve `𝒩_S G` over `p + q <= 3` and the
/// data of Segal determinants.
struct SegalTarget<'a> {
    g: &'a Monoidal,
    y: BiSSet,
    nerve: SSet,
    g2: QGroupoid<'a>,
}

impl<'a> SegalTarget<'a> {
    fn new(g: &'a Monoidal) -> Result<SegalTarget<'a>> {
        Ok(SegalTarget {
            g,
            y: segal_nerve(g, &total_degree_shape(3))?,
            nerve: nerve_category(g.cat(), 2),
            g2: QGroupoid::new(g, 2),
        })
    }

    /// The bisimplicial map determined by a Segal determinant, or `None`
    /// when some cell has no image.
    fn to_map(&self, x: &BiSSet, det: &SegalDeterminant) -> Option<BiMap> {
        let g = self.g;
        let y = &self.y;
        let row0 = x.row(0);
        let d0 = |a: usize| det.d.levels[0][a];
        let d1 = |a: usize| det.d.levels[1][a];
        let tri = |xi: usize| qsimplex_of(&row0, 2, xi, &d0, &|t| det.t[t]);
        let mut cells = Vec::new();
        for p in 0..x.shape().len() {
            let mut row = Vec::new();
            for q in 0..=x.shape()[p] {
                let level = (0..x.len(p, q))
                    .map(|a| match (p, q) {
                        (_, 0) => Some(0),
                        (_, 1) => y.index(p, 1, self.nerve.id(p, det.d.levels[p][a])),
                        (0, _) => y.index(0, q, &qsimplex_of(&row0, q, a, &d0, &|t| det.t[t]).id(g)),
                        (1, 2) => {
                            let src = self.g2.object_index(&tri(x.hface(1, 2, 1, a)))?;
                            let family =
                                vec![d1(x.vface(1, 2, 2, a)), d1(x.vface(1, 2, 1, a)), d1(x.vface(1, 2, 0, a))];
                            y.index(1, 2, &self.g2.morphism_id(&QMorphism { src, family }))
                        }
                        _ => None,
                    })
                    .collect::<Option<Vec<_>>>()?;
                row.push(level);
            }
            cells.push(row);
        }
        Some(BiMap { cells })
    }

    /// `(F_{•,1}, F_{0,2})` for a bisimplicial map `F`.
    fn determinant_of(&self, x: &BiSSet, f: &BiMap) -> Option<SegalDeterminant> {
        let levels = (0..=2)
            .map(|p| (0..x.len(p, 1)).map(|a| self.nerve.index(p, self.y.id(p, 1, f.at(p, 1, a)))).collect())
            .collect::<Option<Vec<Vec<usize>>>>()?;
        let t = (0..x.len(0, 2))
            .map(|a| {
                let s = &self.g2.objects()[self.g2_index(f.at(0, 2, a))?];
                Some(s.mor[0])
            })
            .collect::<Option<Vec<_>>>()?;
        Some(SegalDeterminant { d: SMap { levels }, t })
    }

    fn g2_index(&self, cell: usize) -> Option<usize> {
        let id = self.y.id(0, 2, cell);
        (0..self.g2.objects().len()).find(|&i| self.g2.object_id(i) == id)
    }
}

/// Compares Segal determinants with `Hom(X, 𝒩_S G)` over `p + q <= 3`.
pub fn verify_segal_determinants(x: &BiSSet, g: &Monoidal, budget: &Budget) -> Result<Representability> {
    let dets = enumerate_segal_determinants(x, g, budget)?;
    let xt = segal_truncation(x)?;
    let target = SegalTarget::new(g)?;
    let mut maps = Vec::new();
    for_each_map(&xt, &target.y, budget, &mut |f| {
        maps.push(f.clone());
        Ok(())
    })?;
    let oracle: HashSet<&BiMap> = maps.iter().collect();
    let mut images = HashSet::new();
    let forward = dets.iter().all(|d| match target.to_map(&xt, d) {
        Some(f) => f.is_bisimplicial(&xt, &target.y) && oracle.contains(&f) && images.insert(f),
        None => false,
    });
    let found: HashSet<&SegalDeterminant> = dets.iter().collect();
    let backward = maps.iter().all(|f| {
        target.determinant_of(&xt, f).is_some_and(|d| found.contains(&d) && target.to_map(&xt, &d).as_ref() == Some(f))
    });
    Ok(Representability {
        count: dets.len(),
        oracle_count: maps.len(),
        bijection_verified: forward && backward && dets.len() == maps.len(),
    })
}

/// A morphism of Segal determinants: a simplicial map
/// `H: X_{•,1} × Δ^1 -> N(G)` (levels 0 to 2) restricting to `D` at vertex 0
/// and to `D'` at vertex 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegalDeterminantMorphism {
    pub h: SMap,
}

/// Position of the simplex `0...01...1` (`zeros` zeros) in level `k` of `Δ^1`.
fn delta1_simplex(d1: &SSet, k: usize, zeros: usize) -> usize {
    let want: Vec<usize> = (0..=k).map(|i| usize::from(i >= zeros)).collect();
    (0..d1.len(k)).find(|&s| simplex_vertices(d1, k, s) == want).expect("monotone sequence")
}

/// All morphisms of Segal determinants `a -> b`.
pub fn segal_det_morphisms(
    x: &BiSSet,
    g: &Monoidal,
    a: &SegalDeterminant,
    b: &SegalDeterminant,
    budget: &Budget,
) -> Result<Vec<SegalDeterminantMorphism>> {
    let x = segal_truncation(x)?;
    let c = g.cat();
    let col = x.column(1)?;
    let nerve = nerve_category(c, 2);
    let d1 = delta(1, 2);
    let prod = product(&col, &d1);
    let len = |k: usize| d1.len(k);
    let (v0, v1) = (delta1_simplex(&d1, 0, 1), delta1_simplex(&d1, 0, 0));
    let (e00, e01, e11) = (delta1_simplex(&d1, 1, 2), delta1_simplex(&d1, 1, 1), delta1_simplex(&d1, 1, 0));
    let vertex = |v: usize| {
        let (p, s) = (v / len(0), v % len(0));
        if s == v0 {
            a.d.levels[0][p]
        } else {
            debug_assert_eq!(s, v1);
            b.d.levels[0][p]
        }
    };
    let pointed = x.vdegen(1, 0, 0, 0);
    let edge = |e: usize, hom: Vec<usize>| {
        let (z, s) = (e / len(1), e % len(1));
        if s == e00 {
            hom.into_iter().filter(|&f| f == a.d.levels[1][z]).collect()
        } else if s == e11 {
            hom.into_iter().filter(|&f| f == b.d.levels[1][z]).collect()
        } else if z == pointed {
            hom.into_iter().filter(|&f| f == g.id(g.unit())).collect()
        } else {
            hom
        }
    };
    let diag = |z: usize| pair_index(len(1), z, e01);
    let mut extra: Vec<(Vec<usize>, Box<dyn Fn(&[usize]) -> bool + '_>)> = Vec::new();
    for chi in 0..x.len(1, 2) {
        let v = |i| diag(x.vface(1, 2, i, chi));
        let (h2, h1, h0) = (v(2), v(1), v(0));
        let (t_src, t_tgt) = (a.t[x.hface(1, 2, 1, chi)], b.t[x.hface(1, 2, 0, chi)]);
        extra.push((
            vec![h2, h1, h0],
            Box::new(move |vals: &[usize]| g.comp(vals[h1], t_src) == g.comp(t_tgt, g.tensor_mor(vals[h2], vals[h0]))),
        ));
    }
    let maps = maps_to_category_nerve(&prod, &nerve, c, &vertex, &edge, &extra, budget)?;
    Ok(maps.into_iter().map(|h| SegalDeterminantMorphism { h }).collect())
}

/// Segal determinants with their morphisms, identified with levels 0 and 1
/// of `Hom^(1)(X, 𝒩_S G)`.
#[derive(Clone, Debug)]
pub struct SegalDetGroupoid {
    pub determinants: Vec<SegalDeterminant>,
    /// `(source, target, morphism)` for every morphism.
    pub morphisms: Vec<(usize, usize, SegalDeterminantMorphism)>,
    /// The enriched hom, up to level 2.
    pub hom: EnrichedHom,
    /// Level-0 element of `hom` for each determinant.
    pub det_to_hom: Vec<usize>,
    /// Level-1 element of `hom` for each morphism.
    pub mor_to_hom: Vec<usize>,
}

impl SegalDetGroupoid {
    /// `b ∘ a` through the unique `Λ^{2,1}` filler of the enriched hom.
    /// Zero or several fillers is an error.
    pub fn compose(&self, a: usize, b: usize) -> Result<usize> {
        let h = &self.hom.sset;
        let (ea, eb) = (self.mor_to_hom[a], self.mor_to_hom[b]);
        let fillers: Vec<usize> = (0..h.len(2)).filter(|&s| h.face(2, 2, s) == ea && h.face(2, 0, s) == eb).collect();
        if fillers.len() != 1 {
            return Err(Error::NotOneKanGroupoid(format!(
                "{} fillers for the composite of {a} and {b}",
                fillers.len()
            )));
        }
        let e = h.face(2, 1, fillers[0]);
        self.mor_to_hom.iter().position(|&m| m == e).ok_or_else(|| Error::Invalid("composite is not a morphism".into()))
    }

    /// Classes of determinants by union-find over the morphisms, with the
    /// symmetry of the relation.
    pub fn components(&self) -> (Vec<Vec<usize>>, bool) {
        let n = self.determinants.len();
        let rel: HashSet<(usize, usize)> = self.morphisms.iter().map(|(s, t, _)| (*s, *t)).collect();
        let symmetric = rel.iter().all(|&(s, t)| rel.contains(&(t, s)));
        let mut uf = UnionFind::new(n);
        for &(s, t) in &rel {
            uf.union(s, t);
        }
        let classes = uf.roots().into_iter().map(|r| (0..n).filter(|&i| uf.find(i) == r).collect()).collect();
        (classes, symmetric)
    }
}

/// Builds [`SegalDetGroupoid`], failing when the identification with the
/// enriched hom breaks down.
pub fn segal_det_groupoid(x: &BiSSet, g: &Monoidal, budget: &Budget) -> Result<SegalDetGroupoid> {
    let dets = enumerate_segal_determinants(x, g, budget)?;
    let xt = segal_truncation(x)?;
    let target = SegalTarget::new(g)?;
    let hom = hom1(&xt, &target.y, 2, budget)?;
    let level0: HashMap<&BiMap, usize> = hom.maps[0].iter().enumerate().map(|(i, f)| (f, i)).collect();
    let det_to_hom = dets
        .iter()
        .map(|d| target.to_map(&xt, d).and_then(|f| level0.get(&f).copied()))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invalid("a determinant has no map".into()))?;
    let mut morphisms = Vec::new();
    for (i, a) in dets.iter().enumerate() {
        for (j, b) in dets.iter().enumerate() {
            for h in segal_det_morphisms(&xt, g, a, b, budget)? {
                morphisms.push((i, j, h));
            }
        }
    }
    let d1 = delta(1, 2);
    let col_len = |p: usize| xt.len(p, 1) * d1.len(p);
    let index: HashMap<(usize, usize, &SMap), usize> =
        morphisms.iter().enumerate().map(|(m, (s, t, h))| ((*s, *t, &h.h), m)).collect();
    let mut mor_to_hom = vec![usize::MAX; morphisms.len()];
    let h = &hom.sset;
    for (e, f) in hom.maps[1].iter().enumerate() {
        let levels = (0..=2)
            .map(|p| (0..col_len(p)).map(|c| target.nerve.index(p, target.y.id(p, 1, f.at(p, 1, c)))).collect())
            .collect::<Option<Vec<Vec<usize>>>>()
            .ok_or_else(|| Error::Invalid("column 1 of the segal nerve differs from the groupoid nerve".into()))?;
        let (s, t) = (h.face(1, 1, e), h.face(1, 0, e));
        let (Some(s), Some(t)) = (det_to_hom.iter().position(|&d| d == s), det_to_hom.iter().position(|&d| d == t))
        else {
            return Err(Error::Invalid("an endpoint is not a determinant".into()));
        };
        let m = index
            .get(&(s, t, &SMap { levels }))
            .copied()
            .ok_or_else(|| Error::Invalid(format!("enriched hom edge {e} is not a morphism")))?;
        if mor_to_hom[m] != usize::MAX {
            return Err(Error::Invalid(format!("morphism {m} is hit twice")));
        }
        mor_to_hom[m] = e;
    }
    if mor_to_hom.contains(&usize::MAX) || det_to_hom.len() != hom.maps[0].len() {
        return Err(Error::Invalid("the identification with the enriched hom is not a bijection".into()));
    }
    Ok(SegalDetGroupoid { determinants: dets, morphisms, hom, det_to_hom, mor_to_hom })
}

/// Components of Segal determinants, compared with `π_0` of the enriched hom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegalPi0 {
    pub classes: Vec<Vec<usize>>,
    pub symmetric: bool,
    pub oracle_count: usize,
    pub matches: bool,
}

pub fn segal_pi0(x: &BiSSet, g: &Monoidal, budget: &Budget) -> Result<SegalPi0> {
    let grp = segal_det_groupoid(x, g, budget)?;
    let (classes, symmetric) = grp.components();
    let oracle = pi0(&grp.hom.sset);
    let ours: BTreeSet<BTreeSet<usize>> =
        classes.iter().map(|cl| cl.iter().map(|&i| grp.det_to_hom[i]).collect()).collect();
    let theirs: BTreeSet<BTreeSet<usize>> =
        oracle.iter().map(|cl| cl.iter().filter_map(|id| grp.hom.sset.index(0, id)).collect()).collect();
    Ok(SegalPi0 { classes, symmetric, oracle_count: oracle.len(), matches: ours == theirs })
}
