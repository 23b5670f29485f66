use crate::cosk::coskeletal_extend;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::kan::kan_status;
use crate::sset::SSet;
use std::collections::HashMap;

/// Simple union-find over `0..n`.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = a;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    /// Merges two classes, keeping the smaller index as root.
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Class roots, in increasing order.
    pub fn roots(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        (0..n).filter(|&a| self.find(a) == a).collect()
    }
}

/// Path components: classes of vertices under the 1-simplices.
pub fn pi0(x: &SSet) -> Vec<Vec<String>> {
    let mut uf = UnionFind::new(x.len(0));
    if x.dim() >= 1 {
        for e in 0..x.len(1) {
            uf.union(x.face(1, 0, e), x.face(1, 1, e));
        }
    }
    let roots = uf.roots();
    roots
        .iter()
        .map(|&r| (0..x.len(0)).filter(|&v| uf.find(v) == r).map(|v| x.id(0, v).to_string()).collect())
        .collect()
}

/// A homotopy group with the spheres representing each element.
#[derive(Clone, Debug)]
pub struct HomotopyGroup {
    pub m: usize,
    pub group: FiniteGroup,
    /// Class index of every level-`m` sphere, keyed by simplex index.
    pub class_of: HashMap<usize, usize>,
    /// Highest dimension in which the Kan condition was confirmed.
    pub kan_checked_through: usize,
}

impl HomotopyGroup {
    /// Class of a sphere given by its simplex index.
    pub fn class(&self, a: usize) -> Option<usize> {
        self.class_of.get(&a).copied()
    }
}

/// The homotopy group `π_m(x, base)` for `m >= 1`.
///
/// The Kan condition is checked in dimensions `1..=m+1` (coskeletal inputs are
/// extended as needed). When level `m + 2` is unavailable the Kan condition in
/// dimension `m + 1` cannot be read off; the relation and the product are then
/// checked exhaustively to be an equivalence and a well-defined group law.
pub fn pi(x: &SSet, m: usize, base: usize) -> Result<HomotopyGroup> {
    if m == 0 {
        return Err(Error::Invalid("use pi0 for path components".into()));
    }
    if base >= x.len(0) {
        return Err(Error::Invalid(format!("basepoint index {base} is out of range")));
    }
    let owned;
    let x = if x.dim() < m + 2 && x.coskeletal_at().is_some() {
        owned = coskeletal_extend(x, m + 2)?;
        &owned
    } else {
        x
    };
    if x.dim() < m + 1 {
        return Err(Error::DimensionOutOfRange { requested: m + 1, available: x.dim() });
    }
    let top_kan = (m + 1).min(x.dim() - 1);
    for d in 1..=top_kan {
        let row = kan_status(x, d)?;
        if let Some(h) = row.horns.iter().find(|h| !h.surjective) {
            return Err(Error::NotKan(format!(
                "horn Λ^{{{},{}}} has no filler: {:?}",
                d + 1,
                h.k,
                h.unfilled.clone().unwrap_or_default()
            )));
        }
    }
    let bm = x.iterated_degen(base, m);
    let bm1 = x.iterated_degen(base, m - 1);
    let spheres: Vec<usize> = (0..x.len(m)).filter(|&a| (0..=m).all(|i| x.face(m, i, a) == bm1)).collect();
    let pos: HashMap<usize, usize> = spheres.iter().enumerate().map(|(t, &a)| (a, t)).collect();
    let n = spheres.len();
    let mut related = vec![vec![false; n]; n];
    let mut product: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
    for w in 0..x.len(m + 1) {
        if (0..m.saturating_sub(1)).any(|i| x.face(m + 1, i, w) != bm) {
            continue;
        }
        let (Some(&a), Some(&c)) = (pos.get(&x.face(m + 1, m + 1, w)), pos.get(&x.face(m + 1, m, w))) else {
            continue;
        };
        let dm1 = x.face(m + 1, m - 1, w);
        if dm1 == bm {
            related[a][c] = true;
        }
        if let Some(&b) = pos.get(&dm1) {
            product[a][b].push(c);
        }
    }
    for a in 0..n {
        if !related[a][a] {
            return Err(Error::NotKan(format!("sphere {} is not related to itself", x.id(m, spheres[a]))));
        }
        for b in 0..n {
            if related[a][b] && !related[b][a] {
                return Err(Error::NotKan("homotopy relation is not symmetric".into()));
            }
            for c in 0..n {
                if related[a][b] && related[b][c] && !related[a][c] {
                    return Err(Error::NotKan("homotopy relation is not transitive".into()));
                }
            }
        }
    }
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        for b in 0..n {
            if related[a][b] {
                uf.union(a, b);
            }
        }
    }
    let roots = uf.roots();
    let class_index: HashMap<usize, usize> = roots.iter().enumerate().map(|(t, &r)| (r, t)).collect();
    let cls: Vec<usize> = (0..n).map(|a| class_index[&uf.find(a)]).collect();
    let g = roots.len();
    let mut table = vec![vec![usize::MAX; g]; g];
    for a in 0..n {
        for b in 0..n {
            for &c in &product[a][b] {
                let slot = &mut table[cls[a]][cls[b]];
                if *slot == usize::MAX {
                    *slot = cls[c];
                } else if *slot != cls[c] {
                    return Err(Error::NotKan("product of homotopy classes is not well defined".into()));
                }
            }
        }
    }
    if table.iter().flatten().any(|&c| c == usize::MAX) {
        return Err(Error::NotKan("some product of homotopy classes is missing".into()));
    }
    let names = roots.iter().map(|&r| x.id(m, spheres[r]).to_string()).collect();
    let group = FiniteGroup::new(names, table).map_err(|e| Error::NotKan(format!("homotopy classes: {e}")))?;
    let class_of = spheres.iter().enumerate().map(|(t, &a)| (a, cls[t])).collect();
    Ok(HomotopyGroup { m, group, class_of, kan_checked_through: top_kan })
}
