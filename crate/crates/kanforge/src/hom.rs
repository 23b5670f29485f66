use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::sset::{SMap, SSet};
use crate::standard::{delta, pair_index, product};
use std::collections::HashMap;

/// Optional fixed values for the enumerator: `pins[k][x] = Some(y)` forces
/// simplex `x` of level `k` to go to `y`.
pub type Pins = Vec<Vec<Option<usize>>>;

/// Prepares the target so that it covers the source dimension.
///
/// A coskeletal target only needs the source truncated at its stored
/// dimension, since maps into it are determined there.
fn align<'a>(src: &'a SSet, tgt: &SSet, owned: &'a mut Option<SSet>) -> Result<&'a SSet> {
    if src.dim() <= tgt.dim() {
        return Ok(src);
    }
    match tgt.coskeletal_at() {
        Some(c) if c <= tgt.dim() => {
            *owned = Some(src.truncate(tgt.dim())?);
            Ok(owned.as_ref().expect("just set"))
        }
        _ => Err(Error::DimensionOutOfRange { requested: src.dim(), available: tgt.dim() }),
    }
}

/// Orders simplices so that each one comes right after its faces, top
/// dimension first. Constraints from a simplex then prune as early as possible.
fn face_first_order(src: &SSet) -> Vec<(usize, usize)> {
    let mut seen: Vec<Vec<bool>> = (0..=src.dim()).map(|k| vec![false; src.len(k)]).collect();
    let mut order = Vec::new();
    fn visit(src: &SSet, k: usize, x: usize, seen: &mut Vec<Vec<bool>>, order: &mut Vec<(usize, usize)>) {
        if seen[k][x] {
            return;
        }
        seen[k][x] = true;
        if k > 0 {
            if let Some((_, root)) = src.degenerate_root(k, x) {
                visit(src, k - 1, root, seen, order);
            }
            for i in 0..=k {
                visit(src, k - 1, src.face(k, i, x), seen, order);
            }
        }
        order.push((k, x));
    }
    for k in (0..=src.dim()).rev() {
        for x in 0..src.len(k) {
            visit(src, k, x, &mut seen, &mut order);
        }
    }
    order
}

struct Search<'a> {
    src: &'a SSet,
    tgt: &'a SSet,
    pins: Option<&'a Pins>,
    order: Vec<(usize, usize)>,
    by_faces: Vec<HashMap<Vec<usize>, Vec<usize>>>,
    budget: &'a Budget,
}

impl<'a> Search<'a> {
    fn new(src: &'a SSet, tgt: &'a SSet, pins: Option<&'a Pins>, budget: &'a Budget) -> Self {
        let order = face_first_order(src);
        let by_faces = (0..=src.dim())
            .map(|k| {
                let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                if k > 0 {
                    for y in 0..tgt.len(k) {
                        m.entry(tgt.faces_of(k, y)).or_default().push(y);
                    }
                }
                m
            })
            .collect();
        Search { src, tgt, pins, order, by_faces, budget }
    }

    fn run(&self, out: &mut Vec<SMap>) -> Result<()> {
        let mut levels: Vec<Vec<usize>> = (0..=self.src.dim()).map(|k| vec![usize::MAX; self.src.len(k)]).collect();
        self.step(0, &mut levels, out)
    }

    fn step(&self, pos: usize, levels: &mut Vec<Vec<usize>>, out: &mut Vec<SMap>) -> Result<()> {
        if pos == self.order.len() {
            out.push(SMap { levels: levels.clone() });
            return Ok(());
        }
        let (k, x) = self.order[pos];
        let pin = self.pins.and_then(|p| p[k][x]);
        let accept = |y: usize, levels: &Vec<Vec<usize>>| {
            pin.is_none_or(|p| p == y)
                && (k == 0 || (0..=k).all(|i| self.tgt.face(k, i, y) == levels[k - 1][self.src.face(k, i, x)]))
        };
        if let Some((j, root)) = self.src.degenerate_root(k, x) {
            self.budget.charge(1)?;
            let y = self.tgt.degen(k - 1, j, levels[k - 1][root]);
            if accept(y, levels) {
                levels[k][x] = y;
                self.step(pos + 1, levels, out)?;
                levels[k][x] = usize::MAX;
            }
            return Ok(());
        }
        let candidates: Vec<usize> = if k == 0 {
            (0..self.tgt.len(0)).collect()
        } else {
            let key: Vec<usize> = (0..=k).map(|i| levels[k - 1][self.src.face(k, i, x)]).collect();
            self.by_faces[k].get(&key).cloned().unwrap_or_default()
        };
        for y in candidates {
            self.budget.charge(1)?;
            if accept(y, levels) {
                levels[k][x] = y;
                self.step(pos + 1, levels, out)?;
                levels[k][x] = usize::MAX;
            }
        }
        Ok(())
    }
}

/// All simplicial maps `src -> tgt`, in lexicographic order of images.
///
/// Degenerate simplices take forced values; nondegenerate ones draw
/// candidates from target simplices with the required faces.
pub fn hom_sset(src: &SSet, tgt: &SSet, budget: &Budget) -> Result<Vec<SMap>> {
    hom_sset_pinned(src, tgt, None, budget)
}

/// [`hom_sset`] with some simplices sent to fixed targets.
pub fn hom_sset_pinned(src: &SSet, tgt: &SSet, pins: Option<&Pins>, budget: &Budget) -> Result<Vec<SMap>> {
    let mut owned = None;
    let src = align(src, tgt, &mut owned)?;
    if let Some(p) = pins {
        if p.len() < src.dim() + 1 {
            return Err(Error::Invalid("pins do not cover the source levels".into()));
        }
    }
    let search = Search::new(src, tgt, pins, budget);
    let mut out = Vec::new();
    search.run(&mut out)?;
    Ok(out)
}

/// Some levelwise bijective simplicial map `src -> tgt`, if one exists.
pub fn find_isomorphism(src: &SSet, tgt: &SSet, budget: &Budget) -> Result<Option<SMap>> {
    if src.dim() != tgt.dim() || (0..=src.dim()).any(|k| src.len(k) != tgt.len(k)) {
        return Ok(None);
    }
    if src.nondegenerate_counts() != tgt.nondegenerate_counts() {
        return Ok(None);
    }
    let maps = hom_sset(src, tgt, budget)?;
    Ok(maps.into_iter().find(|f| f.is_levelwise_bijective(tgt)))
}

/// Pins sending `{base} × Δ^n` to the basepoint of a reduced target.
fn base_pins(x: &SSet, dn: &SSet, prod: &SSet, y: &SSet) -> Result<Pins> {
    let xb = x.basepoint().ok_or_else(|| Error::NotReduced("source has no basepoint".into()))?;
    let yb = y.basepoint().ok_or_else(|| Error::NotReduced("target has no basepoint".into()))?;
    Ok((0..=prod.dim())
        .map(|k| {
            let xs = x.iterated_degen(xb, k);
            let ys = y.iterated_degen(yb, k);
            (0..prod.len(k)).map(|p| if p / dn.len(k) == xs { Some(ys) } else { None }).collect()
        })
        .collect())
}

/// The pointed mapping space: level `n` consists of maps
/// `(X × Δ^n)/({base} × Δ^n) -> Y`, with faces and degeneracies by
/// precomposition. Level ids are `m<n>.<i>` in enumeration order.
#[derive(Clone, Debug)]
pub struct MappingSpace {
    pub sset: SSet,
    /// The maps in each level, on `X × Δ^n`.
    pub maps: Vec<Vec<SMap>>,
}

/// Builds the pointed mapping space up to level `n_max`.
///
/// The source is truncated at the target's coskeletal dimension when that is
/// lower, which does not change the maps.
pub fn mapping_space(x: &SSet, y: &SSet, n_max: usize, budget: &Budget) -> Result<MappingSpace> {
    let dim = match y.coskeletal_at() {
        Some(c) if c <= y.dim() => x.dim().min(y.dim()),
        _ => x.dim(),
    };
    if dim > y.dim() {
        return Err(Error::DimensionOutOfRange { requested: dim, available: y.dim() });
    }
    let x = x.truncate(dim)?;
    let mut deltas = Vec::new();
    let mut prods = Vec::new();
    let mut maps: Vec<Vec<SMap>> = Vec::new();
    for n in 0..=n_max {
        let dn = delta(n, dim);
        let prod = product(&x, &dn);
        let pins = base_pins(&x, &dn, &prod, y)?;
        maps.push(hom_sset_pinned(&prod, y, Some(&pins), budget)?);
        deltas.push(dn);
        prods.push(prod);
    }
    let index: Vec<HashMap<&SMap, usize>> =
        maps.iter().map(|l| l.iter().enumerate().map(|(t, f)| (f, t)).collect()).collect();
    let along = |f: &SMap, n_from: usize, n_to: usize, theta: &dyn Fn(usize) -> usize| -> SMap {
        let d_from = &deltas[n_from];
        let d_to = &deltas[n_to];
        SMap {
            levels: (0..=dim)
                .map(|k| {
                    let mut row = Vec::with_capacity(x.len(k) * d_from.len(k));
                    for a in 0..x.len(k) {
                        for s in 0..d_from.len(k) {
                            let seq = simplex_vertices(d_from, k, s);
                            let image: Vec<usize> = seq.iter().map(|&v| theta(v)).collect();
                            let t = d_to.index(k, &crate::standard::sequence_id(&image)).expect("monotone image");
                            row.push(f.at(k, pair_index(d_to.len(k), a, t)));
                        }
                    }
                    row
                })
                .collect(),
        }
    };
    let ids: Vec<Vec<String>> =
        maps.iter().enumerate().map(|(n, l)| (0..l.len()).map(|i| format!("m{n}.{i}")).collect()).collect();
    let mut face = vec![Vec::new(); n_max + 1];
    let mut degen = vec![Vec::new(); n_max + 1];
    for n in 0..=n_max {
        if n > 0 {
            for i in 0..=n {
                let coface = move |v: usize| if v >= i { v + 1 } else { v };
                let table = maps[n]
                    .iter()
                    .map(|f| {
                        let g = along(f, n - 1, n, &coface);
                        index[n - 1].get(&g).copied().ok_or_else(|| Error::Invalid("face map missing".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                face[n].push(table);
            }
        }
        if n < n_max {
            for j in 0..=n {
                let codegen = move |v: usize| if v > j { v - 1 } else { v };
                let table = maps[n]
                    .iter()
                    .map(|f| {
                        let g = along(f, n + 1, n, &codegen);
                        index[n + 1].get(&g).copied().ok_or_else(|| Error::Invalid("degenerate map missing".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                degen[n].push(table);
            }
        }
    }
    let sset = SSet::from_tables(ids, face, degen)?;
    Ok(MappingSpace { sset, maps })
}

/// Vertices of simplex `s` of level `k` in a standard simplex built by
/// [`delta`], recovered from its id.
pub fn simplex_vertices(d: &SSet, k: usize, s: usize) -> Vec<usize> {
    let id = d.id(k, s);
    if id.contains('.') {
        id.split('.').map(|p| p.parse().expect("vertex")).collect()
    } else {
        id.bytes().map(|b| (b - b'0') as usize).collect()
    }
}
