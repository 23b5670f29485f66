use crate::bisimplicial::{
    box_product, build, check_shape, for_each_map, product, rectangle, restrict, sub_from_predicate,
    total_degree_shape, BiMap, BiSSet, Inclusion,
};
use crate::budget::Budget;
use crate::category::{FinCategory, Morphism};
use crate::error::{invalid, Error, Result};
use crate::kan::classify;
use crate::monoidal::Monoidal;
use crate::nerve2::{codegeneracy, coface, pair_pos, pullback, q_simplices, triple_pos, QSimplex, Unitors};
use crate::pi::pi;
use crate::sset::{SMap, SSet};
use crate::standard::{boundary_sub, delta, horn_sub, sequence_id};
use std::collections::HashMap;

/// The groupoid of `q`-simplices of a 2-group.
///
/// Objects are the `q`-simplices `(X, α)`. A morphism `(X, α) -> (Y, β)` is a
/// family `f_ij: X_ij -> Y_ij` with `f_ik ∘ α_ijk = β_ijk ∘ (f_ij ⊗ f_jk)`;
/// composition is componentwise. Every family out of `(X, α)` determines its
/// target, so morphisms are stored as `(source, family)`.
#[derive(Clone, Debug)]
pub struct QGroupoid<'a> {
    g: &'a Monoidal,
    q: usize,
    objects: Vec<QSimplex>,
    lookup: HashMap<QSimplex, usize>,
    out: Vec<Vec<usize>>,
}

/// A morphism of [`QGroupoid`]: a source object and one morphism of `G` per
/// pair `i < j`, in lexicographic order of pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMorphism {
    pub src: usize,
    pub family: Vec<usize>,
}

impl<'a> QGroupoid<'a> {
    pub fn new(g: &'a Monoidal, q: usize) -> QGroupoid<'a> {
        let objects = q_simplices(g, q);
        let lookup = objects.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let c = g.cat();
        let out = (0..c.num_objects()).map(|x| (0..c.num_morphisms()).filter(|&f| c.src(f) == x).collect()).collect();
        QGroupoid { g, q, objects, lookup, out }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn objects(&self) -> &[QSimplex] {
        &self.objects
    }

    pub fn object_index(&self, s: &QSimplex) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    /// Object id: `*` for `q = 0`, otherwise the simplex id.
    pub fn object_id(&self, x: usize) -> String {
        self.objects[x].id(self.g)
    }

    /// Morphism id: `*` for `q = 0`, the morphism id of `G` for `q = 1`, and
    /// `(f01,f02,...)@<source id>` otherwise.
    pub fn morphism_id(&self, m: &QMorphism) -> String {
        let c = self.g.cat();
        match self.q {
            0 => "*".to_string(),
            1 => c.morphisms()[m.family[0]].id.clone(),
            _ => {
                let fs: Vec<&str> = m.family.iter().map(|&f| c.morphisms()[f].id.as_str()).collect();
                format!("({})@{}", fs.join(","), self.object_id(m.src))
            }
        }
    }

    pub fn identity(&self, x: usize) -> QMorphism {
        QMorphism { src: x, family: self.objects[x].obj.iter().map(|&o| self.g.id(o)).collect() }
    }

    /// The simplex `β` forced by a family out of `(X, α)`.
    pub fn target_simplex(&self, m: &QMorphism) -> QSimplex {
        let g = self.g;
        let c = g.cat();
        let s = &self.objects[m.src];
        let q = self.q;
        let f = |i: usize, j: usize| m.family[pair_pos(q, i, j)];
        let obj = m.family.iter().map(|&h| c.tgt(h)).collect();
        let mut mor = Vec::with_capacity(s.mor.len());
        for i in 0..=q {
            for j in i + 1..=q {
                for k in j + 1..=q {
                    let back = g.inv(g.tensor_mor(f(i, j), f(j, k)));
                    mor.push(g.comp(f(i, k), g.comp(s.mor[triple_pos(q, i, j, k)], back)));
                }
            }
        }
        QSimplex { q, obj, mor }
    }

    pub fn target(&self, m: &QMorphism) -> usize {
        self.lookup[&self.target_simplex(m)]
    }

    /// `b ∘ a` for `a: X -> Y`, `b: Y -> Z`.
    pub fn compose(&self, b: &QMorphism, a: &QMorphism) -> QMorphism {
        debug_assert_eq!(self.target(a), b.src);
        QMorphism { src: a.src, family: a.family.iter().zip(&b.family).map(|(&x, &y)| self.g.comp(y, x)).collect() }
    }

    /// Every morphism out of `x`, in lexicographic order of families.
    pub fn morphisms_from(&self, x: usize) -> Vec<QMorphism> {
        let obj = &self.objects[x].obj;
        let mut out = vec![Vec::new()];
        for &o in obj {
            let mut next = Vec::with_capacity(out.len() * self.out[o].len());
            for fam in &out {
                for &f in &self.out[o] {
                    let mut v: Vec<usize> = fam.clone();
                    v.push(f);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(|family| QMorphism { src: x, family }).collect()
    }

    /// Checks that each morphism satisfies the commuting-square condition
    /// against its computed target.
    pub fn check_morphism(&self, m: &QMorphism) -> bool {
        let g = self.g;
        let c = g.cat();
        let s = &self.objects[m.src];
        let t = self.target_simplex(m);
        if !self.lookup.contains_key(&t) {
            return false;
        }
        let q = self.q;
        let f = |i: usize, j: usize| m.family[pair_pos(q, i, j)];
        for i in 0..=q {
            for j in i + 1..=q {
                if c.src(f(i, j)) != s.x(i, j) {
                    return false;
                }
                for k in j + 1..=q {
                    let left = g.chain(&[s.alpha(i, j, k), f(i, k)]);
                    let right = g.chain(&[g.tensor_mor(f(i, j), f(j, k)), t.alpha(i, j, k)]);
                    if left.is_none() || left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The groupoid as a [`FinCategory`], validated by its constructor.
    pub fn to_category(&self) -> Result<FinCategory> {
        let mut morphisms = Vec::new();
        let mut index: HashMap<QMorphism, usize> = HashMap::new();
        for x in 0..self.objects.len() {
            for m in self.morphisms_from(x) {
                index.insert(m.clone(), morphisms.len());
                morphisms.push(m);
            }
        }
        let mut comp = Vec::new();
        for (ai, a) in morphisms.iter().enumerate() {
            let y = self.target(a);
            for b in self.morphisms_from(y) {
                comp.push((index[&b], ai, index[&self.compose(&b, a)]));
            }
        }
        let objects = (0..self.objects.len()).map(|x| self.object_id(x)).collect();
        let mors =
            morphisms.iter().map(|m| Morphism { id: self.morphism_id(m), src: m.src, tgt: self.target(m) }).collect();
        let cat = FinCategory::new(objects, mors, &comp)?;
        if !cat.is_groupoid() {
            return Err(Error::NotGroupoid(format!("q = {} simplex category has a non-invertible morphism", self.q)));
        }
        Ok(cat)
    }

    /// Pullback of a morphism along a monotone `phi: [p] -> [q]`: collapsed
    /// pairs get `id_𝟙`, the others `f_{φi φj}`.
    fn pull_family(&self, fam: &[usize], phi: &[usize]) -> Vec<usize> {
        let p = phi.len() - 1;
        let mut out = Vec::with_capacity(p * (p + 1) / 2);
        for i in 0..=p {
            for j in i + 1..=p {
                out.push(if phi[i] == phi[j] {
                    self.g.id(self.g.unit())
                } else {
                    fam[pair_pos(self.q, phi[i], phi[j])]
                });
            }
        }
        out
    }
}

/// The groupoid `𝒢_q` of `q`-simplices as a validated finite category.
pub fn q_simplex_groupoid(g: &Monoidal, q: usize) -> Result<FinCategory> {
    QGroupoid::new(g, q).to_category()
}

/// A cell of the Segal nerve: a chain of `p` composable families in `𝒢_q`
/// starting at object `src`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Chain {
    src: usize,
    families: Vec<Vec<usize>>,
}

/// The Segal nerve `𝒩_S(G)` on a down-closed shape (default: `p + q <= 4`).
///
/// Cell `(p, q)` is a chain of `p` composable morphisms of `𝒢_q`, with id the
/// object id for `p = 0` and the comma-joined morphism ids otherwise; every
/// cell of vertical degree 0 is `*`. Horizontal operators are those of the
/// nerve of `𝒢_q`; vertical ones pull objects and families back along
/// cofaces and codegeneracies.
pub fn segal_nerve(g: &Monoidal, shape: &[usize]) -> Result<BiSSet> {
    check_shape(shape)?;
    let u = Unitors::new(g);
    let qmax = shape[0];
    let grpds: Vec<QGroupoid> = (0..=qmax).map(|q| QGroupoid::new(g, q)).collect();
    let height = |q: usize| (0..shape.len()).rev().find(|&p| shape[p] >= q).expect("row 0 covers every q");
    let mut by_q: Vec<Vec<Vec<Chain>>> = Vec::new();
    for (q, gq) in grpds.iter().enumerate() {
        let top = height(q);
        let mut levels: Vec<Vec<Chain>> =
            vec![(0..gq.objects.len()).map(|x| Chain { src: x, families: vec![] }).collect()];
        let mut ends: Vec<usize> = (0..gq.objects.len()).collect();
        for _ in 1..=top {
            let mut next = Vec::new();
            let mut next_ends = Vec::new();
            for (ch, &end) in levels.last().expect("level").iter().zip(&ends) {
                for m in gq.morphisms_from(end) {
                    let t = gq.target(&m);
                    let mut fams = ch.families.clone();
                    fams.push(m.family);
                    next.push(Chain { src: ch.src, families: fams });
                    next_ends.push(t);
                }
            }
            levels.push(next);
            ends = next_ends;
        }
        by_q.push(levels);
    }
    let cells: Vec<Vec<Vec<Chain>>> =
        (0..shape.len()).map(|p| (0..=shape[p]).map(|q| by_q[q][p].clone()).collect()).collect();
    let target = |q: usize, src: usize, fam: &[usize]| grpds[q].target(&QMorphism { src, family: fam.to_vec() });
    let pull = |q: usize, ch: &Chain, phi: &[usize]| -> Chain {
        let gq = &grpds[q];
        let target_q = phi.len() - 1;
        let s = pullback(g, &u, &gq.objects[ch.src], phi);
        let src = grpds[target_q].lookup[&s];
        Chain { src, families: ch.families.iter().map(|f| gq.pull_family(f, phi)).collect() }
    };
    build(
        shape,
        cells,
        |_, q, ch| {
            let gq = &grpds[q];
            if q == 0 {
                return "*".to_string();
            }
            if ch.families.is_empty() {
                return gq.object_id(ch.src);
            }
            let mut x = ch.src;
            let mut parts = Vec::with_capacity(ch.families.len());
            for fam in &ch.families {
                let m = QMorphism { src: x, family: fam.clone() };
                parts.push(gq.morphism_id(&m));
                x = gq.target(&m);
            }
            parts.join(",")
        },
        |p, q, i, ch| {
            let gq = &grpds[q];
            let mut fams = ch.families.clone();
            let mut src = ch.src;
            if i == 0 {
                src = target(q, src, &fams[0]);
                fams.remove(0);
            } else if i == p {
                fams.pop();
            } else {
                let x = fams[..i - 1].iter().fold(src, |x, fam| target(q, x, fam));
                let a = QMorphism { src: x, family: fams[i - 1].clone() };
                let b = QMorphism { src: target(q, x, &fams[i - 1]), family: fams[i].clone() };
                let ba = gq.compose(&b, &a).family;
                fams.splice(i - 1..=i, [ba]);
            }
            Chain { src, families: fams }
        },
        |_, q, i, ch| pull(q, ch, &coface(q, i)),
        |_, q, j, ch| {
            let gq = &grpds[q];
            let obj = if j == 0 { ch.src } else { ch.families[..j].iter().fold(ch.src, |x, fam| target(q, x, fam)) };
            let mut fams = ch.families.clone();
            fams.insert(j, gq.identity(obj).family);
            Chain { src: ch.src, families: fams }
        },
        |_, q, j, ch| pull(q, ch, &codegeneracy(q, j)),
    )
}

/// The default Segal nerve shape, all bidegrees with `p + q <= 4`.
pub fn default_shape() -> Vec<usize> {
    total_degree_shape(4)
}

/// Maps of bisimplicial sets `X → Y` and their restrictions to a smaller
/// shape, compared: true when restriction is a bijection.
pub fn mu3_determined(x: &BiSSet, y: &BiSSet, budget: &Budget) -> Result<Mu3Report> {
    let big = x.truncate(&default_shape())?;
    let small_shape = total_degree_shape(3);
    let small = x.truncate(&small_shape)?;
    let y_small = y.truncate(&small_shape)?;
    let mut restricted: HashMap<BiMap, usize> = HashMap::new();
    let mut full = 0usize;
    for_each_map(&big, y, budget, &mut |f| {
        full += 1;
        *restricted.entry(f.restrict_to(&big, &small)?).or_default() += 1;
        Ok(())
    })?;
    let mut truncated = 0usize;
    let mut hit = 0usize;
    for_each_map(&small, &y_small, budget, &mut |f| {
        truncated += 1;
        if restricted.contains_key(f) {
            hit += 1;
        }
        Ok(())
    })?;
    let injective = restricted.values().all(|&n| n == 1);
    Ok(Mu3Report {
        full_maps: full,
        truncated_maps: truncated,
        bijective: injective && hit == truncated && full == truncated,
    })
}

/// Outcome of [`mu3_determined`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mu3Report {
    /// Maps over `p + q <= 4`.
    pub full_maps: usize,
    /// Maps over `p + q <= 3`.
    pub truncated_maps: usize,
    pub bijective: bool,
}

/// One row of a restriction check: the map `Hom(A, X) -> Hom(B, X)` for a
/// sub-bisimplicial set `B ⊆ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCheck {
    pub condition: String,
    pub label: String,
    pub domain_maps: usize,
    pub restricted_maps: usize,
    pub surjective: bool,
    pub injective: bool,
    /// Whether this row requires injectivity as well.
    pub needs_bijective: bool,
}

impl RestrictionCheck {
    pub fn passed(&self) -> bool {
        self.surjective && (!self.needs_bijective || self.injective)
    }
}

/// The induced map on `π_m` for a horizontal operator between two rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEquivalenceCheck {
    pub label: String,
    pub m: usize,
    pub isomorphism: bool,
}

/// Result of [`segal_fibrancy_check`].
#[derive(Clone, Debug, Default)]
pub struct FibrancyReport {
    pub condition_i: Vec<RowEquivalenceCheck>,
    pub restrictions: Vec<RestrictionCheck>,
    /// Rows or conditions skipped because the shape does not reach them.
    pub skipped: Vec<String>,
}

impl FibrancyReport {
    pub fn condition_passed(&self, name: &str) -> bool {
        if name == "i" {
            return !self.condition_i.is_empty() && self.condition_i.iter().all(|c| c.isomorphism);
        }
        let rows: Vec<_> = self.restrictions.iter().filter(|r| r.condition == name).collect();
        !rows.is_empty() && rows.iter().all(|r| r.passed())
    }

    pub fn passed(&self) -> bool {
        ["i", "ii", "iii", "iv"].iter().all(|c| self.condition_passed(c))
    }
}

/// Cells `(a|b)` of `Δ^p ⊠ Δ^q` with `a` in `sa` and `b` in `sb`.
fn box_members<'a>(
    dq: &'a SSet,
    sa: &'a dyn Fn(usize, usize) -> bool,
    sb: &'a dyn Fn(usize, usize) -> bool,
) -> impl Fn(usize, usize, usize) -> bool + 'a {
    move |pp: usize, qq: usize, c: usize| {
        let lb = dq.len(qq);
        sa(pp, c / lb) && sb(qq, c % lb)
    }
}

/// Checks `Hom(A, X) -> Hom(B, X)` for every `B` in `subs`, enumerating
/// `Hom(A, X)` once. Returns `(|Hom(A, X)|, |Hom(B, X)|, surjective,
/// injective)` per sub.
fn restrictions(a: &BiSSet, subs: &[BiSSet], x: &BiSSet, budget: &Budget) -> Result<Vec<(usize, usize, bool, bool)>> {
    let incs = subs.iter().map(|b| Inclusion::by_ids(b, a)).collect::<Result<Vec<_>>>()?;
    let mut images: Vec<HashMap<Vec<usize>, usize>> = vec![HashMap::new(); subs.len()];
    let mut domain = 0usize;
    let scoped = budget.scope();
    for_each_map(a, x, &scoped, &mut |f| {
        domain += 1;
        for (inc, image) in incs.iter().zip(images.iter_mut()) {
            *image.entry(f.restrict_flat(inc)).or_default() += 1;
        }
        Ok(())
    })?;
    budget.absorb(&scoped);
    let mut out = Vec::with_capacity(subs.len());
    for (b, image) in subs.iter().zip(&images) {
        let mut restricted = 0usize;
        let mut missing = 0usize;
        let scoped = budget.scope();
        for_each_map(b, x, &scoped, &mut |f| {
            restricted += 1;
            if !image.contains_key(&f.flatten()) {
                missing += 1;
            }
            Ok(())
        })?;
        budget.absorb(&scoped);
        out.push((domain, restricted, missing == 0, image.values().all(|&n| n == 1)));
    }
    Ok(out)
}

fn full(_: usize, _: usize) -> bool {
    true
}

/// `Δ^p ⊠ Δ^q` on the rectangle `p' <= p`, `q' <= q`. Cells outside the
/// rectangle are degenerate, so maps out of it and out of any sub of it are
/// already determined there.
fn box_rectangle(p: usize, q: usize) -> Result<(SSet, SSet, BiSSet)> {
    let (a, b) = (delta(p, p), delta(q, q));
    let bx = box_product(&a, &b, &rectangle(p, q))?;
    Ok((a, b, bx))
}

/// Evaluates the four fibrancy conditions for `n = 2` on a Segal
/// pre-monoid, within the bidegrees its shape provides.
///
/// (i) every horizontal face and degeneracy between rows `0..=2` induces
/// isomorphisms on `π_1`, and on `π_2` when both rows reach vertical degree 3;
/// (ii) `Hom(Δ^p ⊠ Δ^q, X) -> Hom(Δ^p ⊠ Λ^{q,k}, X)` is surjective for
/// `q = 2` and bijective for `q >= 3`; (iii) `Hom(∂Δ^2 ⊠ Δ^2, X) ->
/// Hom(∂Δ^2 ⊠ Λ^{2,k}, X)` is surjective; (iv) `Hom(Δ^p ⊠ Δ^2, X)` maps onto
/// maps from `∂Δ^p ⊠ Δ^2 ∪ Δ^p ⊠ Λ^{2,k}` for `p = 1, 2`.
pub fn segal_fibrancy_check(x: &BiSSet, budget: &Budget) -> Result<FibrancyReport> {
    if !x.is_segal_premonoid() {
        return invalid("not a Segal pre-monoid: some X_{p,0} is not a single cell");
    }
    let shape = x.shape().to_vec();
    let mut report = FibrancyReport::default();
    condition_i(x, &mut report)?;
    let mut push =
        |condition: &str, labels: Vec<String>, results: Vec<(usize, usize, bool, bool)>, needs_bijective: bool| {
            for (label, (d, r, s, i)) in labels.into_iter().zip(results) {
                report.restrictions.push(RestrictionCheck {
                    condition: condition.into(),
                    label,
                    domain_maps: d,
                    restricted_maps: r,
                    surjective: s,
                    injective: i,
                    needs_bijective,
                });
            }
        };
    for p in 0..shape.len() {
        for q in 2..=shape[p] {
            let (_, dq, a) = box_rectangle(p, q)?;
            let mut subs = Vec::new();
            let mut labels = Vec::new();
            for k in 0..=q {
                let (_, horn) = horn_sub(q, k, q)?;
                subs.push(restrict(&a, &sub_from_predicate(&a, box_members(&dq, &full, &|l, y| horn.contains(l, y))))?);
                labels.push(format!("Δ^{p}⊠Λ^{{{q},{k}}}"));
            }
            push("ii", labels, restrictions(&a, &subs, x, budget)?, q >= 3);
        }
    }
    for p in 1..=2usize {
        if !(p < shape.len() && shape[p] >= 2) {
            report.skipped.push(format!("conditions at p = {p}, q = 2 are outside the shape"));
            continue;
        }
        let (_, dq, a) = box_rectangle(p, 2)?;
        let (_, bd) = boundary_sub(p, p);
        let in_bd = |l: usize, y: usize| bd.contains(l, y);
        let horns = (0..=2).map(|k| horn_sub(2, k, 2).map(|h| h.1)).collect::<Result<Vec<_>>>()?;
        if p == 2 {
            let big = restrict(&a, &sub_from_predicate(&a, box_members(&dq, &in_bd, &full)))?;
            let mut subs = Vec::new();
            let mut labels = Vec::new();
            for (k, horn) in horns.iter().enumerate() {
                let in_horn = |l: usize, y: usize| horn.contains(l, y);
                subs.push(restrict(&a, &sub_from_predicate(&a, box_members(&dq, &in_bd, &in_horn)))?);
                labels.push(format!("∂Δ^2⊠Λ^{{2,{k}}}"));
            }
            push("iii", labels, restrictions(&big, &subs, x, budget)?, false);
        }
        let mut subs = Vec::new();
        let mut labels = Vec::new();
        for (k, horn) in horns.iter().enumerate() {
            let union = |pp: usize, qq: usize, c: usize| {
                let lb = dq.len(qq);
                in_bd(pp, c / lb) || horn.contains(qq, c % lb)
            };
            subs.push(restrict(&a, &sub_from_predicate(&a, union))?);
            labels.push(format!("∂Δ^{p}⊠Δ^2 ∪ Δ^{p}⊠Λ^{{2,{k}}}"));
        }
        push("iv", labels, restrictions(&a, &subs, x, budget)?, false);
    }
    Ok(report)
}

/// Induced maps on `π_1` and `π_2` for the horizontal faces and degeneracies
/// between rows `0..=2`.
fn condition_i(x: &BiSSet, report: &mut FibrancyReport) -> Result<()> {
    let shape = x.shape();
    let rows: Vec<usize> = (0..shape.len().min(3)).filter(|&p| shape[p] >= 2).collect();
    for p in (shape.len().min(3))..shape.len() {
        report.skipped.push(format!("row {p} is too short for π_1"));
    }
    let row_sets: HashMap<usize, SSet> = rows.iter().map(|&p| (p, x.row(p))).collect();
    let mut ops: Vec<(String, usize, usize, SMap)> = Vec::new();
    for &p in &rows {
        if p >= 1 && rows.contains(&(p - 1)) {
            for i in 0..=p {
                ops.push((format!("d^h_{i}: row {p} -> row {}", p - 1), p, p - 1, x.row_face(p, i)));
            }
        }
        if rows.contains(&(p + 1)) {
            for j in 0..=p {
                ops.push((format!("s^h_{j}: row {p} -> row {}", p + 1), p, p + 1, x.row_degen(p, j)));
            }
        }
    }
    for (label, from, to, map) in ops {
        let (a, b) = (&row_sets[&from], &row_sets[&to]);
        for m in 1..=2usize {
            if a.dim() < m + 1 || b.dim() < m + 1 {
                report.skipped.push(format!("π_{m} for {label}: rows stop below degree {}", m + 1));
                continue;
            }
            let ga = pi(a, m, 0)?;
            let gb = pi(b, m, 0)?;
            report.condition_i.push(RowEquivalenceCheck {
                label: label.clone(),
                m,
                isomorphism: induced_iso(a, &ga, &gb, &map, m),
            });
        }
    }
    Ok(())
}

fn induced_iso(a: &SSet, ga: &crate::pi::HomotopyGroup, gb: &crate::pi::HomotopyGroup, map: &SMap, m: usize) -> bool {
    let n = ga.group.order();
    let mut table: Vec<Option<usize>> = vec![None; n];
    for s in 0..a.len(m) {
        let Some(c) = ga.class(s) else { continue };
        let Some(d) = gb.class(map.at(m, s)) else { return false };
        match table[c] {
            None => table[c] = Some(d),
            Some(old) if old != d => return false,
            _ => {}
        }
    }
    let Some(image): Option<Vec<usize>> = table.into_iter().collect() else { return false };
    ga.group.is_iso(&image, &gb.group)
}

/// The enriched hom `Hom^(1)(X, Y)` over the shape `p + q <= 3`: level `n`
/// holds the maps `X × p₁*Δ^n -> Y`, with faces and degeneracies by
/// precomposition on the `Δ^n` factor. Level ids are `h<n>.<i>`.
#[derive(Clone, Debug)]
pub struct EnrichedHom {
    pub sset: SSet,
    /// The maps of each level, on `X × p₁*Δ^n`.
    pub maps: Vec<Vec<BiMap>>,
    /// The sources `X × p₁*Δ^n`.
    pub sources: Vec<BiSSet>,
}

/// Builds [`EnrichedHom`] up to level `n_max`.
pub fn hom1(x: &BiSSet, y: &BiSSet, n_max: usize, budget: &Budget) -> Result<EnrichedHom> {
    let shape = total_degree_shape(3);
    let x = x.truncate(&shape)?;
    let y = y.truncate(&shape)?;
    let mut sources = Vec::new();
    let mut maps: Vec<Vec<BiMap>> = Vec::new();
    let mut deltas = Vec::new();
    for n in 0..=n_max {
        let dn = delta(n, shape.len() - 1);
        let src = product(&x, &crate::bisimplicial::horizontal_pullback(&dn, &shape)?)?;
        let mut level = Vec::new();
        for_each_map(&src, &y, budget, &mut |f| {
            level.push(f.clone());
            Ok(())
        })?;
        maps.push(level);
        sources.push(src);
        deltas.push(dn);
    }
    let index: Vec<HashMap<&BiMap, usize>> =
        maps.iter().map(|l| l.iter().enumerate().map(|(t, f)| (f, t)).collect()).collect();
    let along = |f: &BiMap, n_from: usize, n_to: usize, theta: &dyn Fn(usize) -> usize| -> BiMap {
        let (d_from, d_to) = (&deltas[n_from], &deltas[n_to]);
        let cells = (0..shape.len())
            .map(|p| {
                (0..=shape[p])
                    .map(|q| {
                        let mut row = Vec::with_capacity(x.len(p, q) * d_from.len(p));
                        for a in 0..x.len(p, q) {
                            for s in 0..d_from.len(p) {
                                let seq = crate::hom::simplex_vertices(d_from, p, s);
                                let image: Vec<usize> = seq.iter().map(|&v| theta(v)).collect();
                                let t = d_to.index(p, &sequence_id(&image)).expect("monotone image");
                                row.push(f.at(p, q, a * d_to.len(p) + t));
                            }
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        BiMap { cells }
    };
    let ids: Vec<Vec<String>> =
        maps.iter().enumerate().map(|(n, l)| (0..l.len()).map(|i| format!("h{n}.{i}")).collect()).collect();
    let mut face = vec![Vec::new(); n_max + 1];
    let mut degen = vec![Vec::new(); n_max + 1];
    for n in 0..=n_max {
        if n > 0 {
            for i in 0..=n {
                let cf = move |v: usize| if v >= i { v + 1 } else { v };
                let table = maps[n]
                    .iter()
                    .map(|f| {
                        index[n - 1]
                            .get(&along(f, n - 1, n, &cf))
                            .copied()
                            .ok_or_else(|| Error::Invalid("face map missing".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                face[n].push(table);
            }
        }
        if n < n_max {
            for j in 0..=n {
                let cd = move |v: usize| if v > j { v - 1 } else { v };
                let table = maps[n]
                    .iter()
                    .map(|f| {
                        index[n + 1]
                            .get(&along(f, n + 1, n, &cd))
                            .copied()
                            .ok_or_else(|| Error::Invalid("degenerate map missing".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                degen[n].push(table);
            }
        }
    }
    let sset = SSet::from_tables(ids, face, degen)?;
    Ok(EnrichedHom { sset, maps, sources })
}

/// True when the enriched hom is a 1-Kan groupoid.
pub fn is_one_kan_groupoid(h: &SSet) -> Result<bool> {
    Ok(classify(h, 1)?.n_kan_groupoid)
}

/// `p₂*(S¹)` on a shape: the circle in every row.
pub fn vertical_circle(shape: &[usize]) -> Result<BiSSet> {
    crate::bisimplicial::vertical_pullback(&crate::standard::circle(shape[0]), shape)
}
