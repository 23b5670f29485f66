use crate::error::{invalid, Error, Result};
use serde::Serialize;
use std::collections::HashMap;
use std::hash::Hash;

/// A simplicial set truncated at dimension `dim`, stored explicitly.
///
/// Simplices are addressed by `(level, index)`. Every level keeps its ids in a
/// fixed order; that order is the "id order" used by every search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSet {
    ids: Vec<Vec<String>>,
    lookup: Vec<HashMap<String, usize>>,
    face: Vec<Vec<Vec<usize>>>,
    degen: Vec<Vec<Vec<usize>>>,
    coskeletal_at: Option<usize>,
    base: Option<usize>,
}

impl SSet {
    /// Assembles a truncated simplicial set from raw tables.
    ///
    /// `face[k][i][x]` is the index of `d_i x` for `x` in level `k >= 1`;
    /// `degen[k][j][x]` is the index of `s_j x` for `x` in level `k < dim`.
    /// Only the shape of the tables is checked here; use [`SSet::validate`]
    /// for the simplicial identities.
    pub fn from_tables(ids: Vec<Vec<String>>, face: Vec<Vec<Vec<usize>>>, degen: Vec<Vec<Vec<usize>>>) -> Result<SSet> {
        if ids.is_empty() {
            return invalid("a simplicial set needs at least level 0");
        }
        let dim = ids.len() - 1;
        if face.len() != dim + 1 || degen.len() != dim + 1 {
            return invalid("face and degeneracy tables must have one entry per level");
        }
        let mut lookup = Vec::with_capacity(dim + 1);
        for (k, level) in ids.iter().enumerate() {
            let mut map = HashMap::with_capacity(level.len());
            for (x, id) in level.iter().enumerate() {
                if map.insert(id.clone(), x).is_some() {
                    return invalid(format!("duplicate id {id:?} in level {k}"));
                }
            }
            lookup.push(map);
        }
        for k in 0..=dim {
            let want_faces = if k == 0 { 0 } else { k + 1 };
            if face[k].len() != want_faces {
                return invalid(format!("level {k} needs {want_faces} face maps"));
            }
            for (i, map) in face[k].iter().enumerate() {
                check_table(map, ids[k].len(), ids[k - 1].len(), &format!("d_{i} on level {k}"))?;
            }
            let want_degens = if k < dim { k + 1 } else { 0 };
            if degen[k].len() != want_degens {
                return invalid(format!("level {k} needs {want_degens} degeneracy maps"));
            }
            for (j, map) in degen[k].iter().enumerate() {
                check_table(map, ids[k].len(), ids[k + 1].len(), &format!("s_{j} on level {k}"))?;
            }
        }
        Ok(SSet { ids, lookup, face, degen, coskeletal_at: None, base: None })
    }

    pub fn dim(&self) -> usize {
        self.ids.len() - 1
    }

    pub fn len(&self, k: usize) -> usize {
        self.ids[k].len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids[0].is_empty()
    }

    pub fn ids(&self, k: usize) -> &[String] {
        &self.ids[k]
    }

    pub fn id(&self, k: usize, x: usize) -> &str {
        &self.ids[k][x]
    }

    pub fn index(&self, k: usize, id: &str) -> Option<usize> {
        self.lookup.get(k)?.get(id).copied()
    }

    /// Index of `id` in level `k`, or an error naming it.
    pub fn require(&self, k: usize, id: &str) -> Result<usize> {
        self.index(k, id).ok_or_else(|| Error::Invalid(format!("no simplex {id:?} in level {k}")))
    }

    pub fn face(&self, k: usize, i: usize, x: usize) -> usize {
        self.face[k][i][x]
    }

    pub fn degen(&self, k: usize, j: usize, x: usize) -> usize {
        self.degen[k][j][x]
    }

    pub fn face_table(&self, k: usize, i: usize) -> &[usize] {
        &self.face[k][i]
    }

    pub fn degen_table(&self, k: usize, j: usize) -> &[usize] {
        &self.degen[k][j]
    }

    /// All faces of `x` in level `k`, in index order.
    pub fn faces_of(&self, k: usize, x: usize) -> Vec<usize> {
        (0..=k).map(|i| self.face[k][i][x]).collect()
    }

    /// Applies `s_0` to a vertex `k` times.
    pub fn iterated_degen(&self, v: usize, k: usize) -> usize {
        let mut x = v;
        for level in 0..k {
            x = self.degen[level][0][x];
        }
        x
    }

    /// Vertex `t` of a simplex in level `k`.
    pub fn vertex(&self, k: usize, x: usize, t: usize) -> usize {
        let mut y = x;
        let mut level = k;
        let mut pos = t;
        while level > 0 {
            if pos == level {
                y = self.face[level][0][y];
                pos -= 1;
            } else {
                y = self.face[level][level][y];
            }
            level -= 1;
        }
        y
    }

    pub fn coskeletal_at(&self) -> Option<usize> {
        self.coskeletal_at
    }

    pub fn with_coskeletal_at(mut self, c: Option<usize>) -> Self {
        self.coskeletal_at = c;
        self
    }

    pub fn set_coskeletal_at(&mut self, c: Option<usize>) {
        self.coskeletal_at = c;
    }

    pub fn base(&self) -> Option<usize> {
        self.base
    }

    pub fn with_base(mut self, base: Option<usize>) -> Self {
        self.base = base;
        self
    }

    pub fn set_base(&mut self, base: Option<usize>) {
        self.base = base;
    }

    /// The declared basepoint, or the unique vertex when there is one.
    pub fn basepoint(&self) -> Option<usize> {
        self.base.or(if self.len(0) == 1 { Some(0) } else { None })
    }

    /// True when level 0 is a single vertex.
    pub fn is_reduced(&self) -> bool {
        self.len(0) == 1
    }

    /// The first `(j, y)` with `s_j y = x`, if `x` is degenerate.
    pub fn degenerate_root(&self, k: usize, x: usize) -> Option<(usize, usize)> {
        if k == 0 {
            return None;
        }
        for j in 0..k {
            let y = self.face[k][j][x];
            if self.degen[k - 1][j][y] == x {
                return Some((j, y));
            }
        }
        None
    }

    pub fn is_degenerate(&self, k: usize, x: usize) -> bool {
        self.degenerate_root(k, x).is_some()
    }

    /// Number of nondegenerate simplices in each level.
    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| (0..self.len(k)).filter(|&x| !self.is_degenerate(k, x)).count()).collect()
    }

    /// The truncation to levels `0..=d`.
    pub fn truncate(&self, d: usize) -> Result<SSet> {
        if d > self.dim() {
            return Err(Error::DimensionOutOfRange { requested: d, available: self.dim() });
        }
        let mut degen: Vec<Vec<Vec<usize>>> = self.degen[..=d].to_vec();
        degen[d].clear();
        let out = SSet {
            ids: self.ids[..=d].to_vec(),
            lookup: self.lookup[..=d].to_vec(),
            face: self.face[..=d].to_vec(),
            degen,
            coskeletal_at: self.coskeletal_at.filter(|&c| c <= d),
            base: self.base,
        };
        Ok(out)
    }

    /// Checks every simplicial identity that the stored levels allow.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let dim = self.dim();
        for k in 2..=dim {
            for x in 0..self.len(k) {
                for j in 1..=k {
                    for i in 0..j {
                        let lhs = self.face(k - 1, i, self.face(k, j, x));
                        let rhs = self.face(k - 1, j - 1, self.face(k, i, x));
                        if lhs != rhs {
                            violations.push(Violation::new(
                                format!("d_{i} d_{j} = d_{} d_{i}", j - 1),
                                k,
                                self.id(k, x),
                            ));
                        }
                    }
                }
            }
        }
        for k in 0..dim.saturating_sub(1) {
            for x in 0..self.len(k) {
                for j in 0..=k {
                    for i in 0..=j {
                        let lhs = self.degen(k + 1, i, self.degen(k, j, x));
                        let rhs = self.degen(k + 1, j + 1, self.degen(k, i, x));
                        if lhs != rhs {
                            violations.push(Violation::new(
                                format!("s_{i} s_{j} = s_{} s_{i}", j + 1),
                                k,
                                self.id(k, x),
                            ));
                        }
                    }
                }
            }
        }
        for k in 0..dim {
            for x in 0..self.len(k) {
                for j in 0..=k {
                    let sx = self.degen(k, j, x);
                    for i in 0..=k + 1 {
                        let lhs = self.face(k + 1, i, sx);
                        let rhs = if i == j || i == j + 1 {
                            Some(x)
                        } else if i < j {
                            Some(self.degen(k - 1, j - 1, self.face(k, i, x)))
                        } else if k >= 1 {
                            Some(self.degen(k - 1, j, self.face(k, i - 1, x)))
                        } else {
                            None
                        };
                        if let Some(rhs) = rhs {
                            if lhs != rhs {
                                violations.push(Violation::new(format!("d_{i} s_{j}"), k, self.id(k, x)));
                            }
                        }
                    }
                }
            }
        }
        if let Some(b) = self.base {
            if b >= self.len(0) {
                violations.push(Violation::new("base vertex exists".into(), 0, &b.to_string()));
            }
        }
        if let Some(c) = self.coskeletal_at {
            if c > dim {
                violations.push(Violation::new(format!("coskeletal_at {c} within dimension {dim}"), dim, ""));
            } else {
                for m in c..dim {
                    let row = crate::kan::boundary_map_status(self, m);
                    if !(row.injective && row.surjective) {
                        violations.push(Violation::new(
                            format!("boundary map bijective at level {}", m + 1),
                            m + 1,
                            "",
                        ));
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

fn check_table(map: &[usize], len: usize, target_len: usize, what: &str) -> Result<()> {
    if map.len() != len {
        return invalid(format!("{what} has {} entries, expected {len}", map.len()));
    }
    if let Some(v) = map.iter().find(|&&v| v >= target_len) {
        return invalid(format!("{what} points to missing simplex {v}"));
    }
    Ok(())
}

/// One failed simplicial identity, with the simplex witnessing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: String,
    pub level: usize,
    pub simplex: String,
}

impl Violation {
    fn new(identity: String, level: usize, simplex: &str) -> Self {
        Violation { identity, level, simplex: simplex.to_string() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Builds an [`SSet`] from structured simplices.
///
/// `levels[k]` lists the simplices of level `k` in id order. `face(k, i, x)`
/// must return a simplex of level `k - 1`, `degen(k, j, x)` one of level
/// `k + 1`. Degeneracies of the top level are not requested.
pub fn build<K, I, F, D>(levels: Vec<Vec<K>>, id: I, face: F, degen: D) -> Result<SSet>
where
    K: Eq + Hash + Clone + std::fmt::Debug,
    I: Fn(usize, &K) -> String,
    F: Fn(usize, usize, &K) -> K,
    D: Fn(usize, usize, &K) -> K,
{
    if levels.is_empty() {
        return invalid("no levels");
    }
    let dim = levels.len() - 1;
    let index: Vec<HashMap<&K, usize>> =
        levels.iter().map(|level| level.iter().enumerate().map(|(x, key)| (key, x)).collect()).collect();
    let find = |k: usize, key: &K, what: &str| -> Result<usize> {
        index[k].get(key).copied().ok_or_else(|| Error::Invalid(format!("{what} {key:?} is missing from level {k}")))
    };
    let mut faces = vec![Vec::new(); dim + 1];
    let mut degens = vec![Vec::new(); dim + 1];
    for k in 0..=dim {
        if k > 0 {
            for i in 0..=k {
                let table =
                    levels[k].iter().map(|x| find(k - 1, &face(k, i, x), "face")).collect::<Result<Vec<_>>>()?;
                faces[k].push(table);
            }
        }
        if k < dim {
            for j in 0..=k {
                let table =
                    levels[k].iter().map(|x| find(k + 1, &degen(k, j, x), "degeneracy")).collect::<Result<Vec<_>>>()?;
                degens[k].push(table);
            }
        }
    }
    let ids = levels.iter().enumerate().map(|(k, level)| level.iter().map(|x| id(k, x)).collect()).collect();
    SSet::from_tables(ids, faces, degens)
}

/// A levelwise map between truncated simplicial sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SMap {
    pub levels: Vec<Vec<usize>>,
}

impl SMap {
    pub fn identity(x: &SSet) -> SMap {
        SMap { levels: (0..=x.dim()).map(|k| (0..x.len(k)).collect()).collect() }
    }

    pub fn at(&self, k: usize, x: usize) -> usize {
        self.levels[k][x]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &SMap) -> SMap {
        SMap { levels: self.levels.iter().zip(&other.levels).map(|(a, b)| a.iter().map(|&x| b[x]).collect()).collect() }
    }

    /// True when the map commutes with all faces and degeneracies.
    pub fn is_simplicial(&self, src: &SSet, tgt: &SSet) -> bool {
        let dim = src.dim();
        if self.levels.len() != dim + 1 || tgt.dim() < dim {
            return false;
        }
        for k in 0..=dim {
            if self.levels[k].len() != src.len(k) || self.levels[k].iter().any(|&y| y >= tgt.len(k)) {
                return false;
            }
        }
        for k in 1..=dim {
            for x in 0..src.len(k) {
                for i in 0..=k {
                    if self.at(k - 1, src.face(k, i, x)) != tgt.face(k, i, self.at(k, x)) {
                        return false;
                    }
                }
            }
        }
        for k in 0..dim {
            for x in 0..src.len(k) {
                for j in 0..=k {
                    if self.at(k + 1, src.degen(k, j, x)) != tgt.degen(k, j, self.at(k, x)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_levelwise_bijective(&self, tgt: &SSet) -> bool {
        self.levels.iter().enumerate().all(|(k, level)| {
            if level.len() != tgt.len(k) {
                return false;
            }
            let mut seen = vec![false; level.len()];
            level.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
    }
}
