use crate::budget::Budget;
use crate::error::{invalid, Error, Result};
use crate::sset::{SMap, SSet};
use crate::standard::pair_index;
use std::collections::HashMap;
use std::hash::Hash;

/// A bisimplicial set stored on a down-closed set of bidegrees.
///
/// `shape[p]` is the highest vertical degree `q` kept in row `p`; it never
/// increases with `p`. Cells are addressed by `(p, q, index)`.
/// Horizontal operators move along `p`, vertical ones along `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSSet {
    shape: Vec<usize>,
    ids: Vec<Vec<Vec<String>>>,
    lookup: Vec<Vec<HashMap<String, usize>>>,
    hface: Vec<Vec<Vec<Vec<usize>>>>,
    vface: Vec<Vec<Vec<Vec<usize>>>>,
    hdegen: Vec<Vec<Vec<Vec<usize>>>>,
    vdegen: Vec<Vec<Vec<Vec<usize>>>>,
}

/// Raw operator tables, indexed `[p][q][i][x]`.
#[derive(Clone, Debug, Default)]
pub struct BiTables {
    pub hface: Vec<Vec<Vec<Vec<usize>>>>,
    pub vface: Vec<Vec<Vec<Vec<usize>>>>,
    pub hdegen: Vec<Vec<Vec<Vec<usize>>>>,
    pub vdegen: Vec<Vec<Vec<Vec<usize>>>>,
}

/// Checks that a shape is nonempty and non-increasing.
pub fn check_shape(shape: &[usize]) -> Result<()> {
    if shape.is_empty() {
        return invalid("a bisimplicial shape needs row 0");
    }
    if shape.windows(2).any(|w| w[1] > w[0]) {
        return invalid(format!("shape {shape:?} is not down-closed"));
    }
    Ok(())
}

/// The shape of all bidegrees with `p + q <= n`.
pub fn total_degree_shape(n: usize) -> Vec<usize> {
    (0..=n).map(|p| n - p).collect()
}

/// The rectangular shape `p <= p_max`, `q <= q_max`.
pub fn rectangle(p_max: usize, q_max: usize) -> Vec<usize> {
    vec![q_max; p_max + 1]
}

/// True when `inner` is contained in `outer`.
pub fn shape_within(inner: &[usize], outer: &[usize]) -> bool {
    inner.len() <= outer.len() && inner.iter().zip(outer).all(|(a, b)| a <= b)
}

fn in_shape(shape: &[usize], p: usize, q: usize) -> bool {
    p < shape.len() && q <= shape[p]
}

impl BiSSet {
    /// Assembles a bisimplicial set from raw tables; only shapes are checked.
    pub fn from_tables(shape: Vec<usize>, ids: Vec<Vec<Vec<String>>>, t: BiTables) -> Result<BiSSet> {
        check_shape(&shape)?;
        if ids.len() != shape.len() || ids.iter().zip(&shape).any(|(row, &q)| row.len() != q + 1) {
            return invalid("levels do not match the shape");
        }
        let mut lookup = Vec::with_capacity(shape.len());
        for (p, row) in ids.iter().enumerate() {
            let mut lrow = Vec::with_capacity(row.len());
            for (q, level) in row.iter().enumerate() {
                let mut m = HashMap::with_capacity(level.len());
                for (x, id) in level.iter().enumerate() {
                    if m.insert(id.clone(), x).is_some() {
                        return invalid(format!("duplicate id {id:?} in level ({p},{q})"));
                    }
                }
                lrow.push(m);
            }
            lookup.push(lrow);
        }
        let len = |p: usize, q: usize| ids[p][q].len();
        for p in 0..shape.len() {
            for q in 0..=shape[p] {
                let check = |tables: &Vec<Vec<Vec<Vec<usize>>>>,
                             count: usize,
                             to: Option<(usize, usize)>,
                             what: &str|
                 -> Result<()> {
                    let row = tables
                        .get(p)
                        .and_then(|r| r.get(q))
                        .ok_or_else(|| Error::Invalid(format!("{what} missing at ({p},{q})")))?;
                    if row.len() != count {
                        return invalid(format!("level ({p},{q}) needs {count} {what} maps"));
                    }
                    for map in row {
                        let (tp, tq) = to.expect("target level");
                        if map.len() != len(p, q) || map.iter().any(|&v| v >= len(tp, tq)) {
                            return invalid(format!("{what} table at ({p},{q}) has the wrong shape"));
                        }
                    }
                    Ok(())
                };
                check(&t.hface, if p == 0 { 0 } else { p + 1 }, p.checked_sub(1).map(|pp| (pp, q)), "horizontal face")?;
                check(&t.vface, if q == 0 { 0 } else { q + 1 }, q.checked_sub(1).map(|qq| (p, qq)), "vertical face")?;
                let hd = in_shape(&shape, p + 1, q);
                check(&t.hdegen, if hd { p + 1 } else { 0 }, hd.then_some((p + 1, q)), "horizontal degeneracy")?;
                let vd = q < shape[p];
                check(&t.vdegen, if vd { q + 1 } else { 0 }, vd.then_some((p, q + 1)), "vertical degeneracy")?;
            }
        }
        Ok(BiSSet { shape, ids, lookup, hface: t.hface, vface: t.vface, hdegen: t.hdegen, vdegen: t.vdegen })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn contains_degree(&self, p: usize, q: usize) -> bool {
        in_shape(&self.shape, p, q)
    }

    pub fn len(&self, p: usize, q: usize) -> usize {
        self.ids[p][q].len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids[0][0].is_empty()
    }

    pub fn ids(&self, p: usize, q: usize) -> &[String] {
        &self.ids[p][q]
    }

    pub fn id(&self, p: usize, q: usize, x: usize) -> &str {
        &self.ids[p][q][x]
    }

    pub fn index(&self, p: usize, q: usize, id: &str) -> Option<usize> {
        self.lookup.get(p)?.get(q)?.get(id).copied()
    }

    pub fn hface(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.hface[p][q][i][x]
    }

    pub fn vface(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.vface[p][q][i][x]
    }

    pub fn hdegen(&self, p: usize, q: usize, j: usize, x: usize) -> usize {
        self.hdegen[p][q][j][x]
    }

    pub fn vdegen(&self, p: usize, q: usize, j: usize, x: usize) -> usize {
        self.vdegen[p][q][j][x]
    }

    /// True when every row `X_{p,0}` is a single cell.
    pub fn is_segal_premonoid(&self) -> bool {
        (0..self.shape.len()).all(|p| self.len(p, 0) == 1)
    }

    /// The highest horizontal degree present at vertical degree `q`.
    pub fn column_height(&self, q: usize) -> Option<usize> {
        (0..self.shape.len()).rev().find(|&p| self.shape[p] >= q)
    }

    /// The simplicial set `X_{p,•}`.
    pub fn row(&self, p: usize) -> SSet {
        let top = self.shape[p];
        let ids = (0..=top).map(|q| self.ids[p][q].clone()).collect();
        let face = (0..=top).map(|q| self.vface[p][q].clone()).collect();
        let degen = (0..=top).map(|q| if q < top { self.vdegen[p][q].clone() } else { Vec::new() }).collect();
        SSet::from_tables(ids, face, degen).expect("row of a bisimplicial set")
    }

    /// The simplicial set `X_{•,q}`.
    pub fn column(&self, q: usize) -> Result<SSet> {
        let top = self.column_height(q).ok_or(Error::DimensionOutOfRange { requested: q, available: self.shape[0] })?;
        let ids = (0..=top).map(|p| self.ids[p][q].clone()).collect();
        let face = (0..=top).map(|p| self.hface[p][q].clone()).collect();
        let degen = (0..=top).map(|p| if p < top { self.hdegen[p][q].clone() } else { Vec::new() }).collect();
        SSet::from_tables(ids, face, degen)
    }

    /// The horizontal face `d^h_i` as a map of rows `X_{p,•} -> X_{p-1,•}`,
    /// on the vertical degrees both rows share.
    pub fn row_face(&self, p: usize, i: usize) -> SMap {
        let top = self.shape[p];
        SMap { levels: (0..=top).map(|q| self.hface[p][q][i].clone()).collect() }
    }

    /// The horizontal degeneracy `s^h_j: X_{p,•} -> X_{p+1,•}` on the vertical
    /// degrees of row `p + 1`.
    pub fn row_degen(&self, p: usize, j: usize) -> SMap {
        let top = self.shape[p + 1];
        SMap { levels: (0..=top).map(|q| self.hdegen[p][q][j].clone()).collect() }
    }

    /// Restriction to a smaller down-closed shape.
    pub fn truncate(&self, shape: &[usize]) -> Result<BiSSet> {
        check_shape(shape)?;
        if !shape_within(shape, &self.shape) {
            return invalid(format!("shape {shape:?} is not inside {:?}", self.shape));
        }
        let cut = |tables: &Vec<Vec<Vec<Vec<usize>>>>, keep: &dyn Fn(usize, usize) -> bool| {
            (0..shape.len())
                .map(|p| (0..=shape[p]).map(|q| if keep(p, q) { tables[p][q].clone() } else { Vec::new() }).collect())
                .collect()
        };
        let ids = (0..shape.len()).map(|p| (0..=shape[p]).map(|q| self.ids[p][q].clone()).collect()).collect();
        let t = BiTables {
            hface: cut(&self.hface, &|_, _| true),
            vface: cut(&self.vface, &|_, _| true),
            hdegen: cut(&self.hdegen, &|p, q| in_shape(shape, p + 1, q)),
            vdegen: cut(&self.vdegen, &|p, q| q < shape[p]),
        };
        BiSSet::from_tables(shape.to_vec(), ids, t)
    }

    /// Horizontal or vertical degenerate root: `(horizontal, j, root)` with
    /// `x = s_j root` in that direction, horizontal checked first.
    pub fn degenerate_root(&self, p: usize, q: usize, x: usize) -> Option<(bool, usize, usize)> {
        for j in 0..p {
            let r = self.hface(p, q, j, x);
            if self.hdegen(p - 1, q, j, r) == x {
                return Some((true, j, r));
            }
        }
        for j in 0..q {
            let r = self.vface(p, q, j, x);
            if self.vdegen(p, q - 1, j, r) == x {
                return Some((false, j, r));
            }
        }
        None
    }

    /// Every violated identity: rows and columns are validated as simplicial
    /// sets, and horizontal operators must commute with vertical ones.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        for p in 0..self.shape.len() {
            for v in self.row(p).validate().violations {
                out.push(format!("row {p}: {} at level {} on {}", v.identity, v.level, v.simplex));
            }
        }
        for q in 0..=self.shape[0] {
            match self.column(q) {
                Ok(c) => {
                    for v in c.validate().violations {
                        out.push(format!("column {q}: {} at level {} on {}", v.identity, v.level, v.simplex));
                    }
                }
                Err(e) => out.push(format!("column {q}: {e}")),
            }
        }
        for p in 0..self.shape.len() {
            for q in 0..=self.shape[p] {
                for x in 0..self.len(p, q) {
                    let id = self.id(p, q, x);
                    if p >= 1 && q >= 1 {
                        for i in 0..=p {
                            for j in 0..=q {
                                if self.vface(p - 1, q, j, self.hface(p, q, i, x))
                                    != self.hface(p, q - 1, i, self.vface(p, q, j, x))
                                {
                                    out.push(format!("d^v_{j} d^h_{i} = d^h_{i} d^v_{j} at ({p},{q}) on {id}"));
                                }
                            }
                        }
                    }
                    if p >= 1 && q < self.shape[p] {
                        for i in 0..=p {
                            for j in 0..=q {
                                if self.vdegen(p - 1, q, j, self.hface(p, q, i, x))
                                    != self.hface(p, q + 1, i, self.vdegen(p, q, j, x))
                                {
                                    out.push(format!("s^v_{j} d^h_{i} = d^h_{i} s^v_{j} at ({p},{q}) on {id}"));
                                }
                            }
                        }
                    }
                    if q >= 1 && in_shape(&self.shape, p + 1, q) {
                        for i in 0..=p {
                            for j in 0..=q {
                                if self.hdegen(p, q - 1, i, self.vface(p, q, j, x))
                                    != self.vface(p + 1, q, j, self.hdegen(p, q, i, x))
                                {
                                    out.push(format!("s^h_{i} d^v_{j} = d^v_{j} s^h_{i} at ({p},{q}) on {id}"));
                                }
                            }
                        }
                    }
                    if in_shape(&self.shape, p + 1, q + 1) {
                        for i in 0..=p {
                            for j in 0..=q {
                                if self.vdegen(p + 1, q, j, self.hdegen(p, q, i, x))
                                    != self.hdegen(p, q + 1, i, self.vdegen(p, q, j, x))
                                {
                                    out.push(format!("s^v_{j} s^h_{i} = s^h_{i} s^v_{j} at ({p},{q}) on {id}"));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The diagonal simplicial set `n -> X_{n,n}`, as far as the shape allows.
    pub fn diag(&self) -> Result<SSet> {
        let top = (0..self.shape.len()).take_while(|&n| self.shape[n] >= n).last().expect("(0,0) is in every shape");
        let ids = (0..=top).map(|n| self.ids[n][n].clone()).collect();
        let face = (0..=top)
            .map(|n| {
                (0..if n == 0 { 0 } else { n + 1 })
                    .map(|i| (0..self.len(n, n)).map(|x| self.hface(n, n - 1, i, self.vface(n, n, i, x))).collect())
                    .collect()
            })
            .collect();
        let degen = (0..=top)
            .map(|n| {
                (0..if n < top { n + 1 } else { 0 })
                    .map(|j| (0..self.len(n, n)).map(|x| self.hdegen(n, n + 1, j, self.vdegen(n, n, j, x))).collect())
                    .collect()
            })
            .collect();
        SSet::from_tables(ids, face, degen)
    }
}

/// Builds a [`BiSSet`] from structured cells.
///
/// `cells[p][q]` lists the cells of bidegree `(p, q)` in id order. The
/// operator closures receive `(p, q, i, cell)` and must return a cell of the
/// target bidegree.
pub fn build<K, I, HF, VF, HD, VD>(
    shape: &[usize],
    cells: Vec<Vec<Vec<K>>>,
    id: I,
    hface: HF,
    vface: VF,
    hdegen: HD,
    vdegen: VD,
) -> Result<BiSSet>
where
    K: Eq + Hash + Clone + std::fmt::Debug,
    I: Fn(usize, usize, &K) -> String,
    HF: Fn(usize, usize, usize, &K) -> K,
    VF: Fn(usize, usize, usize, &K) -> K,
    HD: Fn(usize, usize, usize, &K) -> K,
    VD: Fn(usize, usize, usize, &K) -> K,
{
    check_shape(shape)?;
    let index: Vec<Vec<HashMap<&K, usize>>> = cells
        .iter()
        .map(|row| row.iter().map(|level| level.iter().enumerate().map(|(x, k)| (k, x)).collect()).collect())
        .collect();
    let find = |p: usize, q: usize, key: &K| -> Result<usize> {
        index[p][q]
            .get(key)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("cell {key:?} is missing from level ({p},{q})")))
    };
    let mut t = BiTables::default();
    for p in 0..shape.len() {
        let (mut hf, mut vf, mut hd, mut vd) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for q in 0..=shape[p] {
            let level = &cells[p][q];
            let table = |count: usize, tp: usize, tq: usize, op: &dyn Fn(usize, &K) -> K| -> Result<Vec<Vec<usize>>> {
                (0..count).map(|i| level.iter().map(|c| find(tp, tq, &op(i, c))).collect()).collect()
            };
            hf.push(if p == 0 { Vec::new() } else { table(p + 1, p - 1, q, &|i, c| hface(p, q, i, c))? });
            vf.push(if q == 0 { Vec::new() } else { table(q + 1, p, q - 1, &|i, c| vface(p, q, i, c))? });
            hd.push(if in_shape(shape, p + 1, q) {
                table(p + 1, p + 1, q, &|j, c| hdegen(p, q, j, c))?
            } else {
                Vec::new()
            });
            vd.push(if q < shape[p] { table(q + 1, p, q + 1, &|j, c| vdegen(p, q, j, c))? } else { Vec::new() });
        }
        t.hface.push(hf);
        t.vface.push(vf);
        t.hdegen.push(hd);
        t.vdegen.push(vd);
    }
    let ids = cells
        .iter()
        .enumerate()
        .map(|(p, row)| row.iter().enumerate().map(|(q, level)| level.iter().map(|c| id(p, q, c)).collect()).collect())
        .collect();
    BiSSet::from_tables(shape.to_vec(), ids, t)
}

/// The external product `A ⊠ B` with cells `(a|b)` of bidegree `(p, q)` for
/// `a ∈ A_p`, `b ∈ B_q`, indexed `a * |B_q| + b`.
pub fn box_product(a: &SSet, b: &SSet, shape: &[usize]) -> Result<BiSSet> {
    check_shape(shape)?;
    if shape.len() > a.dim() + 1 || shape[0] > b.dim() {
        return Err(Error::DimensionOutOfRange {
            requested: shape.len().max(shape[0] + 1) - 1,
            available: a.dim().min(b.dim()),
        });
    }
    let cells: Vec<Vec<Vec<(usize, usize)>>> = (0..shape.len())
        .map(|p| {
            (0..=shape[p]).map(|q| (0..a.len(p)).flat_map(|x| (0..b.len(q)).map(move |y| (x, y))).collect()).collect()
        })
        .collect();
    build(
        shape,
        cells,
        |p, q, &(x, y)| format!("({}|{})", a.id(p, x), b.id(q, y)),
        |p, _, i, &(x, y)| (a.face(p, i, x), y),
        |_, q, i, &(x, y)| (x, b.face(q, i, y)),
        |p, _, j, &(x, y)| (a.degen(p, j, x), y),
        |_, q, j, &(x, y)| (x, b.degen(q, j, y)),
    )
}

/// `p₂*(S)`: constant in the horizontal direction, `S` vertically.
pub fn vertical_pullback(s: &SSet, shape: &[usize]) -> Result<BiSSet> {
    let point = crate::standard::delta(0, shape.len() - 1);
    box_product(&point, s, shape)
}

/// `p₁*(S)`: `S` horizontally, constant vertically.
pub fn horizontal_pullback(s: &SSet, shape: &[usize]) -> Result<BiSSet> {
    let point = crate::standard::delta(0, shape[0]);
    box_product(s, &point, shape)
}

/// The levelwise product; cells `(x|y)` indexed `x * |Y_{p,q}| + y`.
pub fn product(x: &BiSSet, y: &BiSSet) -> Result<BiSSet> {
    let shape: Vec<usize> = x.shape.iter().zip(&y.shape).map(|(a, b)| *a.min(b)).collect();
    let cells: Vec<Vec<Vec<(usize, usize)>>> = (0..shape.len())
        .map(|p| {
            (0..=shape[p])
                .map(|q| (0..x.len(p, q)).flat_map(|a| (0..y.len(p, q)).map(move |b| (a, b))).collect())
                .collect()
        })
        .collect();
    build(
        &shape,
        cells,
        |p, q, &(a, b)| format!("({}|{})", x.id(p, q, a), y.id(p, q, b)),
        |p, q, i, &(a, b)| (x.hface(p, q, i, a), y.hface(p, q, i, b)),
        |p, q, i, &(a, b)| (x.vface(p, q, i, a), y.vface(p, q, i, b)),
        |p, q, j, &(a, b)| (x.hdegen(p, q, j, a), y.hdegen(p, q, j, b)),
        |p, q, j, &(a, b)| (x.vdegen(p, q, j, a), y.vdegen(p, q, j, b)),
    )
}

/// Membership of cells in a sub-bisimplicial set, `members[p][q][x]`.
pub type BiSub = Vec<Vec<Vec<bool>>>;

/// The sub-bisimplicial set cut out by a predicate on `(p, q, cell)`.
pub fn sub_from_predicate(x: &BiSSet, pred: impl Fn(usize, usize, usize) -> bool) -> BiSub {
    (0..x.shape.len())
        .map(|p| (0..=x.shape[p]).map(|q| (0..x.len(p, q)).map(|c| pred(p, q, c)).collect()).collect())
        .collect()
}

/// Fails unless the membership is closed under every operator.
pub fn check_sub(x: &BiSSet, sub: &BiSub) -> Result<()> {
    for p in 0..x.shape.len() {
        for q in 0..=x.shape[p] {
            for c in (0..x.len(p, q)).filter(|&c| sub[p][q][c]) {
                let bad = (p >= 1 && (0..=p).any(|i| !sub[p - 1][q][x.hface(p, q, i, c)]))
                    || (q >= 1 && (0..=q).any(|i| !sub[p][q - 1][x.vface(p, q, i, c)]))
                    || (in_shape(&x.shape, p + 1, q) && (0..=p).any(|j| !sub[p + 1][q][x.hdegen(p, q, j, c)]))
                    || (q < x.shape[p] && (0..=q).any(|j| !sub[p][q + 1][x.vdegen(p, q, j, c)]));
                if bad {
                    return Err(Error::NotSubcomplex(format!("cell {} of ({p},{q}) leaves the subset", x.id(p, q, c))));
                }
            }
        }
    }
    Ok(())
}

/// Keeps only the cells of a sub-bisimplicial set, with their ids.
pub fn restrict(x: &BiSSet, sub: &BiSub) -> Result<BiSSet> {
    check_sub(x, sub)?;
    relabel(x, &|p, q, c| sub[p][q][c].then_some(c))
}

/// Collapses a nonempty sub-bisimplicial set to a single cell per bidegree;
/// the collapsed cell keeps the least id of its class.
pub fn quotient(x: &BiSSet, sub: &BiSub) -> Result<BiSSet> {
    check_sub(x, sub)?;
    let mut rep: Vec<Vec<usize>> = Vec::new();
    for p in 0..x.shape.len() {
        let mut row = Vec::new();
        for q in 0..=x.shape[p] {
            let r = (0..x.len(p, q))
                .filter(|&c| sub[p][q][c])
                .min_by(|&a, &b| x.id(p, q, a).cmp(x.id(p, q, b)))
                .ok_or_else(|| Error::NotSubcomplex(format!("nothing to collapse in level ({p},{q})")))?;
            row.push(r);
        }
        rep.push(row);
    }
    relabel(x, &|p, q, c| Some(if sub[p][q][c] { rep[p][q] } else { c }))
}

/// Rebuilds `x` on the cells `c` with `class(c) == Some(c)`, sending every
/// cell to `class(c)`.
fn relabel(x: &BiSSet, class: &dyn Fn(usize, usize, usize) -> Option<usize>) -> Result<BiSSet> {
    let shape = x.shape.clone();
    let mut pos: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut ids: Vec<Vec<Vec<String>>> = Vec::new();
    for p in 0..shape.len() {
        let (mut prow, mut irow) = (Vec::new(), Vec::new());
        for q in 0..=shape[p] {
            let mut at = vec![usize::MAX; x.len(p, q)];
            let mut level = Vec::new();
            for c in 0..x.len(p, q) {
                if class(p, q, c) == Some(c) {
                    at[c] = level.len();
                    level.push(x.id(p, q, c).to_string());
                }
            }
            prow.push(at);
            irow.push(level);
        }
        pos.push(prow);
        ids.push(irow);
    }
    let kept = |p: usize, q: usize| -> Vec<usize> { (0..x.len(p, q)).filter(|&c| class(p, q, c) == Some(c)).collect() };
    let send = |p: usize, q: usize, c: usize| pos[p][q][class(p, q, c).expect("closed subset")];
    let mut t = BiTables::default();
    for p in 0..shape.len() {
        let (mut hf, mut vf, mut hd, mut vd) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for q in 0..=shape[p] {
            let cells = kept(p, q);
            let table = |count: usize, op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
                (0..count).map(|i| cells.iter().map(|&c| op(i, c)).collect()).collect()
            };
            hf.push(if p == 0 { Vec::new() } else { table(p + 1, &|i, c| send(p - 1, q, x.hface(p, q, i, c))) });
            vf.push(if q == 0 { Vec::new() } else { table(q + 1, &|i, c| send(p, q - 1, x.vface(p, q, i, c))) });
            hd.push(if in_shape(&shape, p + 1, q) {
                table(p + 1, &|j, c| send(p + 1, q, x.hdegen(p, q, j, c)))
            } else {
                Vec::new()
            });
            vd.push(if q < shape[p] { table(q + 1, &|j, c| send(p, q + 1, x.vdegen(p, q, j, c))) } else { Vec::new() });
        }
        t.hface.push(hf);
        t.vface.push(vf);
        t.hdegen.push(hd);
        t.vdegen.push(vd);
    }
    BiSSet::from_tables(shape, ids, t)
}

/// A map of bisimplicial sets, `cells[p][q][x]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiMap {
    pub cells: Vec<Vec<Vec<usize>>>,
}

impl BiMap {
    pub fn at(&self, p: usize, q: usize, x: usize) -> usize {
        self.cells[p][q][x]
    }

    /// True when the map commutes with every operator of the source.
    pub fn is_bisimplicial(&self, src: &BiSSet, tgt: &BiSSet) -> bool {
        if !shape_within(&src.shape, &tgt.shape) || self.cells.len() != src.shape.len() {
            return false;
        }
        for p in 0..src.shape.len() {
            if self.cells[p].len() != src.shape[p] + 1 {
                return false;
            }
            for q in 0..=src.shape[p] {
                if self.cells[p][q].len() != src.len(p, q) || self.cells[p][q].iter().any(|&y| y >= tgt.len(p, q)) {
                    return false;
                }
                for x in 0..src.len(p, q) {
                    let y = self.at(p, q, x);
                    let ok = (p == 0
                        || (0..=p).all(|i| self.at(p - 1, q, src.hface(p, q, i, x)) == tgt.hface(p, q, i, y)))
                        && (q == 0
                            || (0..=q).all(|i| self.at(p, q - 1, src.vface(p, q, i, x)) == tgt.vface(p, q, i, y)))
                        && (!in_shape(&src.shape, p + 1, q)
                            || (0..=p).all(|j| self.at(p + 1, q, src.hdegen(p, q, j, x)) == tgt.hdegen(p, q, j, y)))
                        && (q >= src.shape[p]
                            || (0..=q).all(|j| self.at(p, q + 1, src.vdegen(p, q, j, x)) == tgt.vdegen(p, q, j, y)));
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The restriction to a sub-bisimplicial set, matched by cell id.
    pub fn restrict_to(&self, src: &BiSSet, sub: &BiSSet) -> Result<BiMap> {
        Ok(self.restrict_along(&Inclusion::by_ids(sub, src)?))
    }

    /// All images in one vector, level by level.
    pub fn flatten(&self) -> Vec<usize> {
        self.cells.iter().flatten().flatten().copied().collect()
    }

    /// The restriction along a precomputed inclusion, flattened.
    pub fn restrict_flat(&self, inc: &Inclusion) -> Vec<usize> {
        let mut out = Vec::new();
        for (p, row) in inc.pos.iter().enumerate() {
            for (q, level) in row.iter().enumerate() {
                out.extend(level.iter().map(|&x| self.cells[p][q][x]));
            }
        }
        out
    }

    /// The restriction along a precomputed inclusion.
    pub fn restrict_along(&self, inc: &Inclusion) -> BiMap {
        let cells = inc
            .pos
            .iter()
            .enumerate()
            .map(|(p, row)| {
                row.iter().enumerate().map(|(q, level)| level.iter().map(|&x| self.at(p, q, x)).collect()).collect()
            })
            .collect();
        BiMap { cells }
    }
}

/// Positions of the cells of a sub-bisimplicial set inside an ambient one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub pos: Vec<Vec<Vec<usize>>>,
}

impl Inclusion {
    /// Matches cells by id; fails when a cell of `sub` is missing from `ambient`.
    pub fn by_ids(sub: &BiSSet, ambient: &BiSSet) -> Result<Inclusion> {
        if !shape_within(&sub.shape, &ambient.shape) {
            return invalid(format!("shape {:?} is not inside {:?}", sub.shape, ambient.shape));
        }
        let pos = (0..sub.shape.len())
            .map(|p| {
                (0..=sub.shape[p])
                    .map(|q| {
                        sub.ids(p, q)
                            .iter()
                            .map(|id| {
                                ambient.index(p, q, id).ok_or_else(|| {
                                    Error::Invalid(format!("cell {id} of ({p},{q}) is not in the ambient set"))
                                })
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Inclusion { pos })
    }
}

/// Orders cells so that each comes right after its faces and degenerate root.
/// Nondegenerate cells of highest total degree go first; degenerate cells,
/// whose values are forced, are reached through them or at the end.
fn face_first_order(src: &BiSSet) -> Vec<(usize, usize, usize)> {
    let mut seen: Vec<Vec<Vec<bool>>> =
        (0..src.shape.len()).map(|p| (0..=src.shape[p]).map(|q| vec![false; src.len(p, q)]).collect()).collect();
    let mut order = Vec::new();
    fn visit(
        src: &BiSSet,
        p: usize,
        q: usize,
        x: usize,
        seen: &mut Vec<Vec<Vec<bool>>>,
        order: &mut Vec<(usize, usize, usize)>,
    ) {
        if seen[p][q][x] {
            return;
        }
        seen[p][q][x] = true;
        if let Some((h, _, r)) = src.degenerate_root(p, q, x) {
            if h {
                visit(src, p - 1, q, r, seen, order);
            } else {
                visit(src, p, q - 1, r, seen, order);
            }
        }
        if p >= 1 {
            for i in 0..=p {
                visit(src, p - 1, q, src.hface(p, q, i, x), seen, order);
            }
        }
        if q >= 1 {
            for i in 0..=q {
                visit(src, p, q - 1, src.vface(p, q, i, x), seen, order);
            }
        }
        order.push((p, q, x));
    }
    let mut degrees: Vec<(usize, usize)> =
        (0..src.shape.len()).flat_map(|p| (0..=src.shape[p]).map(move |q| (p, q))).collect();
    degrees.sort_by_key(|&(p, q)| std::cmp::Reverse((p + q, p)));
    for degenerate in [false, true] {
        for &(p, q) in &degrees {
            for x in 0..src.len(p, q) {
                if src.degenerate_root(p, q, x).is_some() == degenerate {
                    visit(src, p, q, x, &mut seen, &mut order);
                }
            }
        }
    }
    order
}

/// One step of the search: the flat position of a source cell, the flat
/// positions of its faces (horizontal then vertical), and the forced value
/// rule when it is degenerate.
struct Step {
    p: usize,
    q: usize,
    at: usize,
    faces: Vec<usize>,
    root: Option<(bool, usize, usize)>,
}

struct BiSearch<'a> {
    src: &'a BiSSet,
    tgt: &'a BiSSet,
    steps: Vec<Step>,
    offsets: Vec<Vec<usize>>,
    by_faces: Vec<Vec<HashMap<Vec<usize>, Vec<usize>>>>,
    all_vertices: Vec<usize>,
    budget: &'a Budget,
}

const KEY_CAP: usize = 32;

impl<'a> BiSearch<'a> {
    fn target_faces(x: &BiSSet, p: usize, q: usize, c: usize) -> Vec<usize> {
        let mut key = Vec::with_capacity(p + q + 2);
        if p >= 1 {
            key.extend((0..=p).map(|i| x.hface(p, q, i, c)));
        }
        if q >= 1 {
            key.extend((0..=q).map(|i| x.vface(p, q, i, c)));
        }
        key
    }

    fn new(src: &'a BiSSet, tgt: &'a BiSSet, budget: &'a Budget) -> Self {
        let mut offsets = Vec::new();
        let mut total = 0;
        for p in 0..src.shape.len() {
            let mut row = Vec::new();
            for q in 0..=src.shape[p] {
                row.push(total);
                total += src.len(p, q);
            }
            offsets.push(row);
        }
        let steps = face_first_order(src)
            .into_iter()
            .map(|(p, q, x)| {
                let mut faces = Vec::new();
                if p >= 1 {
                    faces.extend((0..=p).map(|i| offsets[p - 1][q] + src.hface(p, q, i, x)));
                }
                if q >= 1 {
                    faces.extend((0..=q).map(|i| offsets[p][q - 1] + src.vface(p, q, i, x)));
                }
                let root = src.degenerate_root(p, q, x).map(|(h, j, r)| {
                    let flat = if h { offsets[p - 1][q] + r } else { offsets[p][q - 1] + r };
                    (h, j, flat)
                });
                Step { p, q, at: offsets[p][q] + x, faces, root }
            })
            .collect();
        let by_faces = (0..src.shape.len())
            .map(|p| {
                (0..=src.shape[p])
                    .map(|q| {
                        let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                        if p + q > 0 {
                            for y in 0..tgt.len(p, q) {
                                m.entry(Self::target_faces(tgt, p, q, y)).or_default().push(y);
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        let all_vertices = (0..tgt.len(0, 0)).collect();
        BiSearch { src, tgt, steps, offsets, by_faces, all_vertices, budget }
    }

    fn emit(&self, flat: &[usize]) -> BiMap {
        let cells = (0..self.src.shape.len())
            .map(|p| {
                (0..=self.src.shape[p]).map(|q| flat[self.offsets[p][q]..][..self.src.len(p, q)].to_vec()).collect()
            })
            .collect();
        BiMap { cells }
    }

    fn step(&self, pos: usize, flat: &mut Vec<usize>, visit: &mut dyn FnMut(&BiMap) -> Result<()>) -> Result<()> {
        if pos == self.steps.len() {
            return visit(&self.emit(flat));
        }
        let st = &self.steps[pos];
        let (p, q) = (st.p, st.q);
        let mut buf = [0usize; KEY_CAP];
        for (slot, &f) in buf.iter_mut().zip(&st.faces) {
            *slot = flat[f];
        }
        let key = &buf[..st.faces.len()];
        if let Some((h, j, r)) = st.root {
            self.budget.charge(1)?;
            let y = if h { self.tgt.hdegen(p - 1, q, j, flat[r]) } else { self.tgt.vdegen(p, q - 1, j, flat[r]) };
            if self.faces_match(p, q, y, key) {
                flat[st.at] = y;
                self.step(pos + 1, flat, visit)?;
            }
            return Ok(());
        }
        let candidates: &[usize] = if p == 0 && q == 0 {
            &self.all_vertices
        } else {
            self.by_faces[p][q].get(key).map(Vec::as_slice).unwrap_or(&[])
        };
        for &y in candidates {
            self.budget.charge(1)?;
            flat[st.at] = y;
            self.step(pos + 1, flat, visit)?;
        }
        Ok(())
    }

    fn faces_match(&self, p: usize, q: usize, y: usize, key: &[usize]) -> bool {
        let t = self.tgt;
        let mut k = 0;
        if p >= 1 {
            for i in 0..=p {
                if t.hface(p, q, i, y) != key[k] {
                    return false;
                }
                k += 1;
            }
        }
        if q >= 1 {
            for i in 0..=q {
                if t.vface(p, q, i, y) != key[k] {
                    return false;
                }
                k += 1;
            }
        }
        true
    }
}

/// Visits every bisimplicial map `src -> tgt` in a deterministic order. The
/// source shape must lie inside the target shape.
pub fn for_each_map(
    src: &BiSSet,
    tgt: &BiSSet,
    budget: &Budget,
    visit: &mut dyn FnMut(&BiMap) -> Result<()>,
) -> Result<()> {
    if !shape_within(&src.shape, &tgt.shape) {
        return invalid(format!("source shape {:?} is not inside target shape {:?}", src.shape, tgt.shape));
    }
    if src.shape.len() + src.shape[0] + 2 > KEY_CAP {
        return invalid("source shape is too large for the map search");
    }
    let search = BiSearch::new(src, tgt, budget);
    let total: usize = search.offsets.last().and_then(|r| r.last()).copied().unwrap_or(0)
        + src.len(src.shape.len() - 1, src.shape[src.shape.len() - 1]);
    let mut flat = vec![usize::MAX; total];
    search.step(0, &mut flat, visit)
}

/// All bisimplicial maps `src -> tgt`.
pub fn hom_bisimplicial(src: &BiSSet, tgt: &BiSSet, budget: &Budget) -> Result<Vec<BiMap>> {
    let mut out = Vec::new();
    for_each_map(src, tgt, budget, &mut |f| {
        out.push(f.clone());
        Ok(())
    })?;
    Ok(out)
}

/// Index of the cell `(x, s)` of `X × p₁*(S)` at bidegree `(p, q)`.
pub fn horizontal_product_index(s: &SSet, p: usize, x: usize, t: usize) -> usize {
    pair_index(s.len(p), x, t)
}
