use crate::cosk::coskeletal_extend;
use crate::error::{Error, Result};
use crate::sset::SSet;
use serde::Serialize;
use std::collections::HashMap;

/// Enumerates tuples `(a_i)_{i in indices}` of level-`m` simplices with
/// `d_i a_j = d_{j-1} a_i` for all `i < j` in `indices`.
///
/// With `indices = 0..=m+1` these are the boundary tuples of an
/// `(m+1)`-simplex; dropping `k` gives the `(m+1, k)`-horn tuples.
pub fn compatible_tuples(x: &SSet, m: usize, indices: &[usize]) -> Vec<Vec<usize>> {
    let n = x.len(m);
    let by_face: Vec<Vec<Vec<usize>>> = if m == 0 {
        Vec::new()
    } else {
        (0..=m)
            .map(|i| {
                let mut buckets = vec![Vec::new(); x.len(m - 1)];
                for a in 0..n {
                    buckets[x.face(m, i, a)].push(a);
                }
                buckets
            })
            .collect()
    };
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(indices.len());
    extend_tuple(x, m, indices, &by_face, &mut current, &mut out);
    out
}

fn extend_tuple(
    x: &SSet,
    m: usize,
    indices: &[usize],
    by_face: &[Vec<Vec<usize>>],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let t = current.len();
    if t == indices.len() {
        out.push(current.clone());
        return;
    }
    let j = indices[t];
    let fits = |a: usize, current: &[usize], skip: usize| {
        (0..t).filter(|&s| s != skip).all(|s| x.face(m, indices[s], a) == x.face(m, j - 1, current[s]))
    };
    if m == 0 || t == 0 {
        for a in 0..x.len(m) {
            if m == 0 || fits(a, current, usize::MAX) {
                current.push(a);
                extend_tuple(x, m, indices, by_face, current, out);
                current.pop();
            }
        }
        return;
    }
    let key = x.face(m, j - 1, current[0]);
    for &a in &by_face[indices[0]][key] {
        if fits(a, current, 0) {
            current.push(a);
            extend_tuple(x, m, indices, by_face, current, out);
            current.pop();
        }
    }
}

/// Boundary tuples of `(m+1)`-simplices built from level `m`.
pub fn boundary_tuples(x: &SSet, m: usize) -> Vec<Vec<usize>> {
    let idx: Vec<usize> = (0..=m + 1).collect();
    compatible_tuples(x, m, &idx)
}

/// Tuples of the horn `Λ^{m+1,k}` built from level `m`.
pub fn horn_tuples(x: &SSet, m: usize, k: usize) -> Vec<Vec<usize>> {
    let idx: Vec<usize> = (0..=m + 1).filter(|&i| i != k).collect();
    compatible_tuples(x, m, &idx)
}

/// Status of the boundary map `X_{m+1} -> (boundary tuples of X_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryStatus {
    pub m: usize,
    pub injective: bool,
    pub surjective: bool,
}

pub fn boundary_map_status(x: &SSet, m: usize) -> BoundaryStatus {
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut injective = true;
    for a in 0..x.len(m + 1) {
        if seen.insert(x.faces_of(m + 1, a), a).is_some() {
            injective = false;
        }
    }
    let surjective = boundary_tuples(x, m).len() == seen.len();
    BoundaryStatus { m, injective, surjective }
}

/// Kan data for one horn `Λ^{m+1,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornStatus {
    pub k: usize,
    pub surjective: bool,
    pub injective: bool,
    /// An unfilled horn, by face ids in index order (the omitted face skipped).
    pub unfilled: Option<Vec<String>>,
    /// Two simplices with the same horn.
    pub collision: Option<(String, String)>,
}

/// Kan status in dimension `m`: horns `Λ^{m+1,k}` for every `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KanRow {
    pub m: usize,
    pub horns: Vec<HornStatus>,
}

impl KanRow {
    pub fn surjective(&self) -> bool {
        self.horns.iter().all(|h| h.surjective)
    }

    pub fn injective(&self) -> bool {
        self.horns.iter().all(|h| h.injective)
    }
}

/// Kan status in dimension `m`.
///
/// Needs level `m + 1`. Coskeletal inputs are extended when it is missing.
pub fn kan_status(x: &SSet, m: usize) -> Result<KanRow> {
    if m + 1 > x.dim() {
        if x.coskeletal_at().is_some() {
            let ext = coskeletal_extend(x, m + 1)?;
            return kan_status(&ext, m);
        }
        return Err(Error::DimensionOutOfRange { requested: m + 1, available: x.dim() });
    }
    let horns = (0..=m + 1).map(|k| horn_status(x, m, k)).collect();
    Ok(KanRow { m, horns })
}

fn horn_status(x: &SSet, m: usize, k: usize) -> HornStatus {
    let mut image: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut collision = None;
    for a in 0..x.len(m + 1) {
        let horn: Vec<usize> = (0..=m + 1).filter(|&i| i != k).map(|i| x.face(m + 1, i, a)).collect();
        if let Some(&b) = image.get(&horn) {
            if collision.is_none() {
                collision = Some((x.id(m + 1, b).to_string(), x.id(m + 1, a).to_string()));
            }
        } else {
            image.insert(horn, a);
        }
    }
    let tuples = horn_tuples(x, m, k);
    let unfilled =
        tuples.iter().find(|t| !image.contains_key(*t)).map(|t| t.iter().map(|&a| x.id(m, a).to_string()).collect());
    HornStatus { k, surjective: unfilled.is_none(), injective: collision.is_none(), unfilled, collision }
}

/// Minimality in dimension `n`: `(n+1)`-simplices agreeing off face `k`
/// agree on face `k`.
pub fn is_minimal(x: &SSet, n: usize) -> Result<bool> {
    if n + 1 > x.dim() {
        return Err(Error::DimensionOutOfRange { requested: n + 1, available: x.dim() });
    }
    for k in 0..=n + 1 {
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for a in 0..x.len(n + 1) {
            let horn: Vec<usize> = (0..=n + 1).filter(|&i| i != k).map(|i| x.face(n + 1, i, a)).collect();
            let dk = x.face(n + 1, k, a);
            if let Some(&prev) = seen.get(&horn) {
                if prev != dk {
                    return Ok(false);
                }
            } else {
                seen.insert(horn, dk);
            }
        }
    }
    Ok(true)
}

/// Classification of a truncated simplicial set relative to `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    /// Highest level examined, after any coskeletal extension.
    pub checked_through: usize,
    pub n_coskeletal: bool,
    pub weakly_n_coskeletal: bool,
    pub n_minimal: bool,
    /// Kan in dimensions `1..=n+1` (as far as levels allow).
    pub kan_through_n_plus_1: bool,
    /// Weakly coskeletal, Kan in low dimensions and minimal.
    pub n_kan_groupoid: bool,
    /// The defining horn conditions, checked directly.
    pub n_kan_groupoid_direct: bool,
}

/// Classifies `x` relative to `n`.
///
/// Coskeletal inputs are extended to level `n + 2` so that every condition can
/// be decided; otherwise checks stop at the stored dimension.
pub fn classify(x: &SSet, n: usize) -> Result<Classification> {
    if n + 1 > x.dim() && x.coskeletal_at().is_none() {
        return Err(Error::DimensionOutOfRange { requested: n + 1, available: x.dim() });
    }
    let owned;
    let x = if x.dim() < n + 2 && x.coskeletal_at().is_some() {
        owned = coskeletal_extend(x, n + 2)?;
        &owned
    } else {
        x
    };
    let top = x.dim();
    let statuses: Vec<BoundaryStatus> = (0..top).map(|m| boundary_map_status(x, m)).collect();
    let n_coskeletal = statuses[n..].iter().all(|s| s.injective && s.surjective);
    let weakly = statuses[n].injective && statuses[n + 1..].iter().all(|s| s.injective && s.surjective);
    let n_minimal = is_minimal(x, n)?;
    let rows: Vec<KanRow> = (0..top).map(|m| kan_status(x, m)).collect::<Result<_>>()?;
    let kan_low = rows.iter().filter(|r| r.m >= 1 && r.m <= n + 1).all(|r| r.surjective());
    let direct = rows.iter().filter(|r| r.m >= 1).all(|r| r.surjective() && (r.m < n || r.injective()));
    Ok(Classification {
        n,
        checked_through: top,
        n_coskeletal,
        weakly_n_coskeletal: weakly,
        n_minimal,
        kan_through_n_plus_1: kan_low,
        n_kan_groupoid: weakly && kan_low && n_minimal,
        n_kan_groupoid_direct: direct,
    })
}

/// Kan rows for every dimension the stored levels allow.
pub fn kan_report(x: &SSet) -> Result<Vec<KanRow>> {
    (0..x.dim()).map(|m| kan_status(x, m)).collect()
}
