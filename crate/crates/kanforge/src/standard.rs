use crate::error::{Error, Result};
use crate::sset::{build, SSet};
use std::collections::HashMap;

/// Nondecreasing sequences of length `k + 1` with values in `0..=n`,
/// in lexicographic order.
pub fn monotone_sequences(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k + 1);
    fn rec(k: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            rec(k, n, v, cur, out);
            cur.pop();
        }
    }
    rec(k, n, 0, &mut cur, &mut out);
    out
}

/// Id of a simplex of a standard simplex, written by its vertices.
pub fn sequence_id(seq: &[usize]) -> String {
    if seq.iter().all(|&v| v < 10) {
        seq.iter().map(|v| char::from(b'0' + *v as u8)).collect()
    } else {
        seq.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(".")
    }
}

fn delete(seq: &[usize], i: usize) -> Vec<usize> {
    let mut out = seq.to_vec();
    out.remove(i);
    out
}

fn repeat(seq: &[usize], j: usize) -> Vec<usize> {
    let mut out = seq.to_vec();
    out.insert(j, seq[j]);
    out
}

/// The standard simplex `Δ^n`, truncated at `dim`.
pub fn delta(n: usize, dim: usize) -> SSet {
    let levels = (0..=dim).map(|k| monotone_sequences(k, n)).collect();
    build(levels, |_, s| sequence_id(s), |_, i, s| delete(s, i), |_, j, s| repeat(s, j))
        .expect("standard simplex is well formed")
}

/// Membership flags for a sub-simplicial set, one vector per level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sub {
    pub members: Vec<Vec<bool>>,
}

impl Sub {
    pub fn from_predicate(x: &SSet, pred: impl Fn(usize, usize) -> bool) -> Sub {
        Sub { members: (0..=x.dim()).map(|k| (0..x.len(k)).map(|a| pred(k, a)).collect()).collect() }
    }

    pub fn contains(&self, k: usize, a: usize) -> bool {
        self.members[k][a]
    }

    /// Checks closure under faces and degeneracies.
    pub fn check(&self, x: &SSet) -> Result<()> {
        for k in 0..=x.dim() {
            for a in 0..x.len(k) {
                if !self.members[k][a] {
                    continue;
                }
                if k > 0 && (0..=k).any(|i| !self.members[k - 1][x.face(k, i, a)]) {
                    return Err(Error::NotSubcomplex(format!("a face of {} is missing", x.id(k, a))));
                }
                if k < x.dim() && (0..=k).any(|j| !self.members[k + 1][x.degen(k, j, a)]) {
                    return Err(Error::NotSubcomplex(format!("a degeneracy of {} is missing", x.id(k, a))));
                }
            }
        }
        Ok(())
    }

    /// The sub-simplicial set generated by the given simplices.
    pub fn generated(x: &SSet, gens: &[(usize, usize)]) -> Sub {
        let mut members: Vec<Vec<bool>> = (0..=x.dim()).map(|k| vec![false; x.len(k)]).collect();
        for &(k, a) in gens {
            members[k][a] = true;
        }
        for k in (1..=x.dim()).rev() {
            for a in 0..x.len(k) {
                if members[k][a] {
                    for i in 0..=k {
                        members[k - 1][x.face(k, i, a)] = true;
                    }
                }
            }
        }
        for k in 0..x.dim() {
            for a in 0..x.len(k) {
                if members[k][a] {
                    for j in 0..=k {
                        members[k + 1][x.degen(k, j, a)] = true;
                    }
                }
            }
        }
        Sub { members }
    }
}

/// The boundary `∂Δ^n` inside `Δ^n`, truncated at `dim`.
pub fn boundary_sub(n: usize, dim: usize) -> (SSet, Sub) {
    let d = delta(n, dim);
    let levels: Vec<Vec<Vec<usize>>> = (0..=dim).map(|k| monotone_sequences(k, n)).collect();
    let sub = Sub::from_predicate(&d, |k, a| (0..=n).any(|v| !levels[k][a].contains(&v)));
    (d, sub)
}

/// The horn `Λ^{n,k}` inside `Δ^n`, truncated at `dim`.
pub fn horn_sub(n: usize, k: usize, dim: usize) -> Result<(SSet, Sub)> {
    if k > n || n == 0 {
        return Err(Error::BadHornIndex { n, k });
    }
    let d = delta(n, dim);
    let levels: Vec<Vec<Vec<usize>>> = (0..=dim).map(|l| monotone_sequences(l, n)).collect();
    let sub = Sub::from_predicate(&d, |l, a| (0..=n).any(|v| v != k && !levels[l][a].contains(&v)));
    Ok((d, sub))
}

/// The `n`-skeleton: simplices of level `<= n` and all their degeneracies.
pub fn skeleton_sub(x: &SSet, n: usize) -> Sub {
    let mut members: Vec<Vec<bool>> = (0..=x.dim()).map(|k| vec![k <= n; x.len(k)]).collect();
    for k in n..x.dim() {
        for a in 0..x.len(k) {
            if members[k][a] {
                for j in 0..=k {
                    members[k + 1][x.degen(k, j, a)] = true;
                }
            }
        }
    }
    Sub { members }
}

/// The sub-simplicial set on the listed members, as a simplicial set.
pub fn restrict(x: &SSet, sub: &Sub) -> Result<SSet> {
    sub.check(x)?;
    let keep: Vec<Vec<usize>> =
        (0..=x.dim()).map(|k| (0..x.len(k)).filter(|&a| sub.contains(k, a)).collect()).collect();
    let pos: Vec<HashMap<usize, usize>> =
        keep.iter().map(|l| l.iter().enumerate().map(|(t, &a)| (a, t)).collect()).collect();
    let ids = (0..=x.dim()).map(|k| keep[k].iter().map(|&a| x.id(k, a).to_string()).collect()).collect();
    let face = (0..=x.dim())
        .map(|k| {
            (0..if k == 0 { 0 } else { k + 1 })
                .map(|i| keep[k].iter().map(|&a| pos[k - 1][&x.face(k, i, a)]).collect())
                .collect()
        })
        .collect();
    let degen = (0..=x.dim())
        .map(|k| {
            (0..if k < x.dim() { k + 1 } else { 0 })
                .map(|j| keep[k].iter().map(|&a| pos[k + 1][&x.degen(k, j, a)]).collect())
                .collect()
        })
        .collect();
    SSet::from_tables(ids, face, degen)
}

/// The quotient `X/A` collapsing a nonempty sub-simplicial set to a point.
///
/// Each collapsed class is named by its least id; the basepoint of the result
/// is the collapsed vertex.
pub fn quotient(x: &SSet, sub: &Sub) -> Result<SSet> {
    sub.check(x)?;
    if !sub.members[0].iter().any(|&b| b) {
        return Err(Error::NotSubcomplex("cannot collapse an empty sub-simplicial set".into()));
    }
    let dim = x.dim();
    let mut keep: Vec<Vec<usize>> = Vec::new();
    let mut class: Vec<Vec<usize>> = Vec::new();
    for k in 0..=dim {
        let rep = (0..x.len(k))
            .filter(|&a| sub.contains(k, a))
            .min_by(|&a, &b| x.id(k, a).cmp(x.id(k, b)))
            .expect("collapsed level is nonempty");
        let kept: Vec<usize> = (0..x.len(k)).filter(|&a| a == rep || !sub.contains(k, a)).collect();
        let pos: HashMap<usize, usize> = kept.iter().enumerate().map(|(t, &a)| (a, t)).collect();
        class.push((0..x.len(k)).map(|a| if sub.contains(k, a) { pos[&rep] } else { pos[&a] }).collect());
        keep.push(kept);
    }
    let ids = (0..=dim).map(|k| keep[k].iter().map(|&a| x.id(k, a).to_string()).collect()).collect();
    let face = (0..=dim)
        .map(|k| {
            (0..if k == 0 { 0 } else { k + 1 })
                .map(|i| keep[k].iter().map(|&a| class[k - 1][x.face(k, i, a)]).collect())
                .collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|k| {
            (0..if k < dim { k + 1 } else { 0 })
                .map(|j| keep[k].iter().map(|&a| class[k + 1][x.degen(k, j, a)]).collect())
                .collect()
        })
        .collect();
    let base = class[0][(0..x.len(0)).find(|&a| sub.contains(0, a)).expect("nonempty")];
    Ok(SSet::from_tables(ids, face, degen)?.with_base(Some(base)))
}

/// Index of the pair `(a, b)` in a product level.
pub fn pair_index(len_b: usize, a: usize, b: usize) -> usize {
    a * len_b + b
}

/// The levelwise product, truncated at the smaller dimension.
///
/// Pairs are ordered by first then second factor and named `(x|y)`.
pub fn product(x: &SSet, y: &SSet) -> SSet {
    let dim = x.dim().min(y.dim());
    let ids = (0..=dim)
        .map(|k| {
            let mut level = Vec::with_capacity(x.len(k) * y.len(k));
            for a in 0..x.len(k) {
                for b in 0..y.len(k) {
                    level.push(format!("({}|{})", x.id(k, a), y.id(k, b)));
                }
            }
            level
        })
        .collect();
    let table = |k: usize, tk: usize, fx: &dyn Fn(usize) -> usize, fy: &dyn Fn(usize) -> usize| {
        let mut t = Vec::with_capacity(x.len(k) * y.len(k));
        for a in 0..x.len(k) {
            for b in 0..y.len(k) {
                t.push(pair_index(y.len(tk), fx(a), fy(b)));
            }
        }
        t
    };
    let face = (0..=dim)
        .map(|k| {
            (0..if k == 0 { 0 } else { k + 1 })
                .map(|i| table(k, k - 1, &|a| x.face(k, i, a), &|b| y.face(k, i, b)))
                .collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|k| {
            (0..if k < dim { k + 1 } else { 0 })
                .map(|j| table(k, k + 1, &|a| x.degen(k, j, a), &|b| y.degen(k, j, b)))
                .collect()
        })
        .collect();
    let base = match (x.basepoint(), y.basepoint()) {
        (Some(a), Some(b)) => Some(pair_index(y.len(0), a, b)),
        _ => None,
    };
    SSet::from_tables(ids, face, degen).expect("product is well formed").with_base(base)
}

/// The disjoint union, truncated at the smaller dimension; ids gain `0:`/`1:`.
pub fn disjoint_union(x: &SSet, y: &SSet) -> SSet {
    let dim = x.dim().min(y.dim());
    let ids = (0..=dim)
        .map(|k| x.ids(k).iter().map(|s| format!("0:{s}")).chain(y.ids(k).iter().map(|s| format!("1:{s}"))).collect())
        .collect();
    let join = |k_tgt: usize, fx: &dyn Fn(usize) -> usize, fy: &dyn Fn(usize) -> usize, lx: usize, ly: usize| {
        (0..lx).map(fx).chain((0..ly).map(|b| x.len(k_tgt) + fy(b))).collect::<Vec<usize>>()
    };
    let face = (0..=dim)
        .map(|k| {
            (0..if k == 0 { 0 } else { k + 1 })
                .map(|i| join(k - 1, &|a| x.face(k, i, a), &|b| y.face(k, i, b), x.len(k), y.len(k)))
                .collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|k| {
            (0..if k < dim { k + 1 } else { 0 })
                .map(|j| join(k + 1, &|a| x.degen(k, j, a), &|b| y.degen(k, j, b), x.len(k), y.len(k)))
                .collect()
        })
        .collect();
    SSet::from_tables(ids, face, degen).expect("disjoint union is well formed")
}

/// The constant simplicial set on a finite set.
pub fn constant(points: &[String], dim: usize) -> SSet {
    let ids = vec![points.to_vec(); dim + 1];
    let face =
        (0..=dim).map(|k| (0..if k == 0 { 0 } else { k + 1 }).map(|_| (0..points.len()).collect()).collect()).collect();
    let degen = (0..=dim)
        .map(|k| (0..if k < dim { k + 1 } else { 0 }).map(|_| (0..points.len()).collect()).collect())
        .collect();
    SSet::from_tables(ids, face, degen).expect("constant simplicial set is well formed")
}

/// The simplicial circle `Δ^1 / ∂Δ^1`.
pub fn circle(dim: usize) -> SSet {
    let (d, sub) = boundary_sub(1, dim);
    quotient(&d, &sub).expect("circle is well formed")
}

/// `Δ^n / sq_0 Δ^n`: the standard simplex with its vertices collapsed.
pub fn simplex_mod_vertices(n: usize, dim: usize) -> SSet {
    let d = delta(n, dim);
    let sub = skeleton_sub(&d, 0);
    quotient(&d, &sub).expect("quotient is well formed")
}

/// `(Δ^1 × Δ^n) / (∂Δ^1 × Δ^n)`.
pub fn suspension_square(n: usize, dim: usize) -> SSet {
    let (d1, bd) = boundary_sub(1, dim);
    let dn = delta(n, dim);
    let p = product(&d1, &dn);
    let sub = Sub::from_predicate(&p, |k, a| bd.contains(k, a / dn.len(k)));
    quotient(&p, &sub).expect("quotient is well formed")
}

/// `(Δ^1 × Δ^1) / (sq_0 Δ^1 × Δ^1)`; the 0-skeleton of `Δ^1` is `∂Δ^1`.
pub fn square_mod_vertical(dim: usize) -> SSet {
    suspension_square(1, dim)
}
