use crate::monoidal::Monoidal;
use crate::sset::{build, SSet};
use std::collections::HashMap;

/// Position of the pair `i < j` among the pairs of `[q]` in lexicographic order.
pub fn pair_pos(q: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j <= q);
    (0..i).map(|a| q - a).sum::<usize>() + (j - i - 1)
}

/// Position of the triple `i < j < k` among the triples of `[q]` in
/// lexicographic order.
pub fn triple_pos(q: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k <= q);
    let mut pos = 0;
    for a in 0..=q {
        for b in a + 1..=q {
            for c in b + 1..=q {
                if (a, b, c) == (i, j, k) {
                    return pos;
                }
                pos += 1;
            }
        }
    }
    unreachable!("triple in range")
}

/// A `q`-simplex of the nerve of a 2-group: objects `X_ij` for `i < j` and
/// morphisms `α_ijk: X_ij ⊗ X_jk -> X_ik` satisfying the cocycle condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QSimplex {
    pub q: usize,
    pub obj: Vec<usize>,
    pub mor: Vec<usize>,
}

impl QSimplex {
    pub fn x(&self, i: usize, j: usize) -> usize {
        self.obj[pair_pos(self.q, i, j)]
    }

    pub fn alpha(&self, i: usize, j: usize, k: usize) -> usize {
        self.mor[triple_pos(self.q, i, j, k)]
    }

    /// Id: `*` in level 0, the object id in level 1, and otherwise the
    /// objects and morphisms in lexicographic order, as `X,..,Y/f,..,g`.
    pub fn id(&self, g: &Monoidal) -> String {
        let c = g.cat();
        match self.q {
            0 => "*".to_string(),
            1 => c.objects()[self.obj[0]].clone(),
            _ => {
                let objs: Vec<&str> = self.obj.iter().map(|&x| c.objects()[x].as_str()).collect();
                let mors: Vec<&str> = self.mor.iter().map(|&f| c.morphisms()[f].id.as_str()).collect();
                format!("{}/{}", objs.join(","), mors.join(","))
            }
        }
    }
}

/// Precomputed inverse unitors.
#[derive(Clone, Debug)]
pub struct Unitors {
    pub linv: Vec<usize>,
    pub rinv: Vec<usize>,
}

impl Unitors {
    pub fn new(g: &Monoidal) -> Unitors {
        let n = g.cat().num_objects();
        Unitors { linv: (0..n).map(|x| g.inv(g.lunit(x))).collect(), rinv: (0..n).map(|x| g.inv(g.runit(x))).collect() }
    }
}

/// Pulls a simplex back along a monotone map `phi: [p] -> [q]`.
///
/// Collapsed edges become `𝟙`; a triangle with a collapsed first edge uses
/// `l^{-1}`, one with a collapsed second edge uses `r^{-1}`.
pub fn pullback(g: &Monoidal, u: &Unitors, s: &QSimplex, phi: &[usize]) -> QSimplex {
    let p = phi.len() - 1;
    let mut obj = Vec::with_capacity(p * (p + 1) / 2);
    for i in 0..=p {
        for j in i + 1..=p {
            obj.push(if phi[i] == phi[j] { g.unit() } else { s.x(phi[i], phi[j]) });
        }
    }
    let mut mor = Vec::new();
    for i in 0..=p {
        for j in i + 1..=p {
            for k in j + 1..=p {
                let (a, b, c) = (phi[i], phi[j], phi[k]);
                mor.push(if a == b && b == c {
                    u.linv[g.unit()]
                } else if a == b {
                    u.linv[s.x(b, c)]
                } else if b == c {
                    u.rinv[s.x(a, b)]
                } else {
                    s.alpha(a, b, c)
                });
            }
        }
    }
    QSimplex { q: p, obj, mor }
}

/// The coface `[q-1] -> [q]` skipping `i`.
pub fn coface(q: usize, i: usize) -> Vec<usize> {
    (0..q).map(|v| if v < i { v } else { v + 1 }).collect()
}

/// The codegeneracy `[q+1] -> [q]` repeating `j`.
pub fn codegeneracy(q: usize, j: usize) -> Vec<usize> {
    (0..=q + 1).map(|v| if v <= j { v } else { v - 1 }).collect()
}

/// True when `α_ijl ∘ (X_ij ⊗ α_jkl) ∘ a = α_ikl ∘ (α_ijk ⊗ X_kl)`.
pub fn cocycle_holds(g: &Monoidal, s: &QSimplex, i: usize, j: usize, k: usize, l: usize) -> bool {
    let (xij, xjk, xkl) = (s.x(i, j), s.x(j, k), s.x(k, l));
    let left = g.chain(&[g.assoc(xij, xjk, xkl), g.tensor_mor(g.id(xij), s.alpha(j, k, l)), s.alpha(i, j, l)]);
    let right = g.chain(&[g.tensor_mor(s.alpha(i, j, k), g.id(xkl)), s.alpha(i, k, l)]);
    left.is_some() && left == right
}

/// All `q`-simplices, in lexicographic order of their data.
pub fn q_simplices(g: &Monoidal, q: usize) -> Vec<QSimplex> {
    let c = g.cat();
    match q {
        0 => return vec![QSimplex { q: 0, obj: vec![], mor: vec![] }],
        1 => return (0..c.num_objects()).map(|x| QSimplex { q: 1, obj: vec![x], mor: vec![] }).collect(),
        _ => {}
    }
    let mut out = Vec::new();
    for prev in q_simplices(g, q - 1) {
        extend_simplex(g, &prev, q, &mut out);
    }
    out.sort();
    out
}

/// Every `q`-simplex whose face `d_q` is `prev`.
fn extend_simplex(g: &Monoidal, prev: &QSimplex, q: usize, out: &mut Vec<QSimplex>) {
    let mut xs: HashMap<(usize, usize), usize> = HashMap::new();
    let mut als: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for i in 0..q {
        for j in i + 1..q {
            xs.insert((i, j), prev.x(i, j));
            for k in j + 1..q {
                als.insert((i, j, k), prev.alpha(i, j, k));
            }
        }
    }
    extend_row(g, q, q - 1, &mut xs, &mut als, out);
}

fn extend_row(
    g: &Monoidal,
    q: usize,
    i: usize,
    xs: &mut HashMap<(usize, usize), usize>,
    als: &mut HashMap<(usize, usize, usize), usize>,
    out: &mut Vec<QSimplex>,
) {
    let c = g.cat();
    for xiq in 0..c.num_objects() {
        xs.insert((i, q), xiq);
        let js: Vec<usize> = (i + 1..q).collect();
        let choices: Vec<Vec<usize>> = js.iter().map(|&j| c.hom(g.tensor(xs[&(i, j)], xs[&(j, q)]), xiq)).collect();
        if choices.iter().any(|v| v.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; js.len()];
        loop {
            for (t, &j) in js.iter().enumerate() {
                als.insert((i, j, q), choices[t][idx[t]]);
            }
            let ok = (i + 1..q).all(|j| {
                (j + 1..q).all(|k| {
                    let (xij, xjk, xkq) = (xs[&(i, j)], xs[&(j, k)], xs[&(k, q)]);
                    let left =
                        g.chain(&[g.assoc(xij, xjk, xkq), g.tensor_mor(g.id(xij), als[&(j, k, q)]), als[&(i, j, q)]]);
                    let right = g.chain(&[g.tensor_mor(als[&(i, j, k)], g.id(xkq)), als[&(i, k, q)]]);
                    left.is_some() && left == right
                })
            });
            if ok {
                if i == 0 {
                    out.push(assemble(q, xs, als));
                } else {
                    extend_row(g, q, i - 1, xs, als, out);
                }
            }
            let mut t = 0;
            while t < idx.len() {
                idx[t] += 1;
                if idx[t] < choices[t].len() {
                    break;
                }
                idx[t] = 0;
                t += 1;
            }
            if t == idx.len() {
                break;
            }
        }
    }
}

fn assemble(q: usize, xs: &HashMap<(usize, usize), usize>, als: &HashMap<(usize, usize, usize), usize>) -> QSimplex {
    let mut obj = Vec::new();
    let mut mor = Vec::new();
    for i in 0..=q {
        for j in i + 1..=q {
            obj.push(xs[&(i, j)]);
        }
    }
    for i in 0..=q {
        for j in i + 1..=q {
            for k in j + 1..=q {
                mor.push(als[&(i, j, k)]);
            }
        }
    }
    QSimplex { q, obj, mor }
}

/// The nerve of a 2-group with its structured simplices.
#[derive(Clone, Debug)]
pub struct TwoGroupNerve {
    pub sset: SSet,
    pub simplices: Vec<Vec<QSimplex>>,
}

/// The nerve of a 2-group, truncated at `dim`.
///
/// Level 0 is `*`, level 1 the objects, level 2 the morphisms
/// `X_01 ⊗ X_12 -> X_02`, level 3 the cocycles. Faces and degeneracies are
/// pullbacks along cofaces and codegeneracies. Marked coskeletal at 3.
pub fn nerve_two_group(g: &Monoidal, dim: usize) -> TwoGroupNerve {
    let u = Unitors::new(g);
    let simplices: Vec<Vec<QSimplex>> = (0..=dim).map(|q| q_simplices(g, q)).collect();
    let sset = build(
        simplices.clone(),
        |_, s| s.id(g),
        |k, i, s| pullback(g, &u, s, &coface(k, i)),
        |k, j, s| pullback(g, &u, s, &codegeneracy(k, j)),
    )
    .expect("2-group nerve is well formed")
    .with_coskeletal_at(if dim >= 3 { Some(3) } else { None })
    .with_base(Some(0));
    TwoGroupNerve { sset, simplices }
}
