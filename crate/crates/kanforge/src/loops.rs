use crate::error::{Error, Result};
use crate::sset::{SMap, SSet};
use std::collections::HashMap;

/// The décalage: level `n` is level `n + 1` of `x`, with the last face and
/// the last degeneracy forgotten.
pub fn shift(x: &SSet) -> Result<SSet> {
    if x.dim() == 0 {
        return Err(Error::DimensionOutOfRange { requested: 1, available: 0 });
    }
    let dim = x.dim() - 1;
    let ids = (0..=dim).map(|n| x.ids(n + 1).to_vec()).collect();
    let face = (0..=dim)
        .map(|n| (0..if n == 0 { 0 } else { n + 1 }).map(|i| x.face_table(n + 1, i).to_vec()).collect())
        .collect();
    let degen = (0..=dim)
        .map(|n| (0..if n < dim { n + 1 } else { 0 }).map(|j| x.degen_table(n + 1, j).to_vec()).collect())
        .collect();
    SSet::from_tables(ids, face, degen)
}

/// The retraction `shift(x) -> X_0` (last vertex) and section `X_0 -> shift(x)`
/// (total degeneracy), as levelwise tables into and out of the constant
/// simplicial set on `X_0`.
pub fn shift_retraction(x: &SSet) -> Result<(SMap, SMap)> {
    let d = shift(x)?;
    let alpha = SMap {
        levels: (0..=d.dim())
            .map(|n| {
                (0..d.len(n))
                    .map(|a| {
                        let mut y = a;
                        for level in (1..=n + 1).rev() {
                            y = x.face(level, 0, y);
                        }
                        y
                    })
                    .collect()
            })
            .collect(),
    };
    let beta =
        SMap { levels: (0..=d.dim()).map(|n| (0..x.len(0)).map(|v| x.iterated_degen(v, n + 1)).collect()).collect() };
    Ok((alpha, beta))
}

/// The homotopy component `H(t)_n = s_n ... s_t d_t ... d_n` on level `n`
/// of the décalage, for `0 <= t <= n + 1`.
pub fn shift_homotopy(x: &SSet, t: usize, n: usize, a: usize) -> usize {
    let mut y = a;
    for i in (t..=n).rev() {
        y = x.face(i + 1, i, y);
    }
    for j in t..=n {
        y = x.degen(j, j, y);
    }
    y
}

/// Result of checking the combinatorial homotopy on the décalage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftReport {
    pub retraction: bool,
    pub endpoints: bool,
    pub face_rules: bool,
    pub degeneracy_rules: bool,
}

impl ShiftReport {
    pub fn passed(&self) -> bool {
        self.retraction && self.endpoints && self.face_rules && self.degeneracy_rules
    }
}

/// Checks that the décalage deformation retracts onto its vertices.
pub fn check_shift(x: &SSet) -> Result<ShiftReport> {
    let d = shift(x)?;
    let (alpha, beta) = shift_retraction(x)?;
    let retraction = (0..=d.dim()).all(|n| (0..x.len(0)).all(|v| alpha.at(n, beta.at(n, v)) == v));
    let mut endpoints = true;
    let mut face_rules = true;
    let mut degeneracy_rules = true;
    for n in 0..=d.dim() {
        for a in 0..d.len(n) {
            endpoints &= shift_homotopy(x, n + 1, n, a) == a;
            endpoints &= shift_homotopy(x, 0, n, a) == beta.at(n, alpha.at(n, a));
            for t in 0..=n + 1 {
                let h = shift_homotopy(x, t, n, a);
                if n >= 1 {
                    for i in 0..=n {
                        let lhs = d.face(n, i, h);
                        let rhs = if t <= i {
                            shift_homotopy(x, t, n - 1, d.face(n, i, a))
                        } else {
                            shift_homotopy(x, t - 1, n - 1, d.face(n, i, a))
                        };
                        face_rules &= lhs == rhs;
                    }
                }
                if n < d.dim() {
                    for j in 0..=n {
                        let lhs = d.degen(n, j, h);
                        let rhs = if t <= j {
                            shift_homotopy(x, t, n + 1, d.degen(n, j, a))
                        } else {
                            shift_homotopy(x, t + 1, n + 1, d.degen(n, j, a))
                        };
                        degeneracy_rules &= lhs == rhs;
                    }
                }
            }
        }
    }
    Ok(ShiftReport { retraction, endpoints, face_rules, degeneracy_rules })
}

/// Which loop space to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopVariant {
    /// `{a in X_{n+1} : d_{n+1} a = base}`.
    Plain,
    /// The plain loop space restricted to simplices whose vertices are all
    /// the constant loop; level 0 is the constant loop alone.
    Reduced,
}

/// The loop space of `x` at `base`, together with the inclusion of each of
/// its levels into the levels of `x` (level `n` into level `n + 1`).
pub fn loop_space_with_inclusion(x: &SSet, base: usize, variant: LoopVariant) -> Result<(SSet, Vec<Vec<usize>>)> {
    if x.dim() == 0 {
        return Err(Error::DimensionOutOfRange { requested: 1, available: 0 });
    }
    if base >= x.len(0) {
        return Err(Error::Invalid(format!("basepoint index {base} is out of range")));
    }
    let dim = x.dim() - 1;
    let star = x.degen(0, 0, base);
    let mut keep: Vec<Vec<usize>> = Vec::with_capacity(dim + 1);
    for n in 0..=dim {
        let target = x.iterated_degen(base, n);
        let level: Vec<usize> = (0..x.len(n + 1))
            .filter(|&a| x.face(n + 1, n + 1, a) == target)
            .filter(|&a| match variant {
                LoopVariant::Plain => true,
                LoopVariant::Reduced => (0..=n).all(|t| loop_vertex(x, n, a, t) == star),
            })
            .collect();
        keep.push(level);
    }
    let pos: Vec<HashMap<usize, usize>> =
        keep.iter().map(|l| l.iter().enumerate().map(|(t, &a)| (a, t)).collect()).collect();
    let ids = (0..=dim).map(|n| keep[n].iter().map(|&a| x.id(n + 1, a).to_string()).collect()).collect();
    let face = (0..=dim)
        .map(|n| {
            (0..if n == 0 { 0 } else { n + 1 })
                .map(|i| keep[n].iter().map(|&a| pos[n - 1][&x.face(n + 1, i, a)]).collect())
                .collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|n| {
            (0..if n < dim { n + 1 } else { 0 })
                .map(|j| keep[n].iter().map(|&a| pos[n + 1][&x.degen(n + 1, j, a)]).collect())
                .collect()
        })
        .collect();
    let base_loop = pos[0].get(&star).copied();
    let out = SSet::from_tables(ids, face, degen)?.with_base(base_loop);
    Ok((out, keep))
}

/// The loop space of `x` at `base`.
pub fn loop_space(x: &SSet, base: usize, variant: LoopVariant) -> Result<SSet> {
    Ok(loop_space_with_inclusion(x, base, variant)?.0)
}

/// Vertex `t` of a loop-space simplex `a` in loop level `n` (a 1-simplex of `x`).
fn loop_vertex(x: &SSet, n: usize, a: usize, t: usize) -> usize {
    let mut y = a;
    let mut level = n;
    let mut pos = t;
    while level > 0 {
        if pos == level {
            y = x.face(level + 1, 0, y);
            pos -= 1;
        } else {
            y = x.face(level + 1, level, y);
        }
        level -= 1;
    }
    y
}
