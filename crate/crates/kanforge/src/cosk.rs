use crate::error::{Error, Result};
use crate::kan::boundary_tuples;
use crate::sset::{SMap, SSet};
use std::collections::HashMap;

/// Id of a simplex given by its boundary tuple.
pub fn tuple_id(x: &SSet, m: usize, tuple: &[usize]) -> String {
    let parts: Vec<&str> = tuple.iter().map(|&a| x.id(m, a)).collect();
    format!("[{}]", parts.join(";"))
}

/// Appends one coskeletal level: the boundary tuples of the top level.
fn push_tuple_level(x: &SSet) -> Result<SSet> {
    let m = x.dim();
    let tuples = boundary_tuples(x, m);
    let index: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(t, v)| (v.as_slice(), t)).collect();
    let mut ids: Vec<Vec<String>> = (0..=m).map(|k| x.ids(k).to_vec()).collect();
    ids.push(tuples.iter().map(|t| tuple_id(x, m, t)).collect());
    let mut face: Vec<Vec<Vec<usize>>> =
        (0..=m).map(|k| (0..if k == 0 { 0 } else { k + 1 }).map(|i| x.face_table(k, i).to_vec()).collect()).collect();
    face.push((0..=m + 1).map(|i| tuples.iter().map(|t| t[i]).collect()).collect());
    let mut degen: Vec<Vec<Vec<usize>>> =
        (0..m).map(|k| (0..=k).map(|j| x.degen_table(k, j).to_vec()).collect()).collect();
    let mut top = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let mut table = Vec::with_capacity(x.len(m));
        for a in 0..x.len(m) {
            let b: Vec<usize> = (0..=m + 1)
                .map(|k| {
                    if k == i || k == i + 1 {
                        a
                    } else if k < i {
                        x.degen(m - 1, i - 1, x.face(m, k, a))
                    } else {
                        x.degen(m - 1, i, x.face(m, k - 1, a))
                    }
                })
                .collect();
            let t = index
                .get(b.as_slice())
                .copied()
                .ok_or_else(|| Error::Invalid(format!("degeneracy s_{i} of {} is not a boundary tuple", x.id(m, a))))?;
            table.push(t);
        }
        top.push(table);
    }
    degen.push(top);
    degen.push(Vec::new());
    let out = SSet::from_tables(ids, face, degen)?;
    Ok(out.with_coskeletal_at(x.coskeletal_at()).with_base(x.base()))
}

/// Materializes the levels of a coskeletal simplicial set up to `to_dim`.
///
/// Requires `coskeletal_at = c` with `c <= dim`: the boundary map is then
/// bijective from level `c + 1` on, so every new level is the set of boundary
/// tuples of the previous one.
pub fn coskeletal_extend(x: &SSet, to_dim: usize) -> Result<SSet> {
    let c = x.coskeletal_at().ok_or_else(|| Error::NotCoskeletal("no coskeletal dimension declared".into()))?;
    if c > x.dim() {
        return Err(Error::NotCoskeletal(format!("coskeletal dimension {c} exceeds stored dimension {}", x.dim())));
    }
    if to_dim <= x.dim() {
        return x.truncate(to_dim);
    }
    let mut cur = x.clone();
    while cur.dim() < to_dim {
        cur = push_tuple_level(&cur)?;
    }
    Ok(cur)
}

/// Quotients level `n + 1` by "same boundary" and extends coskeletally above.
///
/// The result is weakly `n`-coskeletal, coskeletal at `n + 1`, and has the same
/// stored dimension as the input. Classes are named by their least id.
pub fn csq_prime(x: &SSet, n: usize) -> Result<SSet> {
    let (out, _) = csq_prime_with_unit(x, n)?;
    Ok(out)
}

/// [`csq_prime`] together with the canonical map `x -> csq_prime(x, n)`.
pub fn csq_prime_with_unit(x: &SSet, n: usize) -> Result<(SSet, SMap)> {
    if n + 1 > x.dim() {
        return Err(Error::DimensionOutOfRange { requested: n + 1, available: x.dim() });
    }
    let top = n + 1;
    let mut rep: HashMap<Vec<usize>, usize> = HashMap::new();
    for a in 0..x.len(top) {
        let key = x.faces_of(top, a);
        rep.entry(key)
            .and_modify(|r| {
                if x.id(top, a) < x.id(top, *r) {
                    *r = a;
                }
            })
            .or_insert(a);
    }
    let mut reps: Vec<usize> = rep.values().copied().collect();
    reps.sort_unstable();
    let new_index: HashMap<usize, usize> = reps.iter().enumerate().map(|(t, &a)| (a, t)).collect();
    let class_of: Vec<usize> = (0..x.len(top)).map(|a| new_index[&rep[&x.faces_of(top, a)]]).collect();

    let mut ids: Vec<Vec<String>> = (0..top).map(|k| x.ids(k).to_vec()).collect();
    ids.push(reps.iter().map(|&a| x.id(top, a).to_string()).collect());
    let mut face: Vec<Vec<Vec<usize>>> =
        (0..top).map(|k| (0..if k == 0 { 0 } else { k + 1 }).map(|i| x.face_table(k, i).to_vec()).collect()).collect();
    face.push((0..=top).map(|i| reps.iter().map(|&a| x.face(top, i, a)).collect()).collect());
    let mut degen: Vec<Vec<Vec<usize>>> =
        (0..n).map(|k| (0..=k).map(|j| x.degen_table(k, j).to_vec()).collect()).collect();
    degen.push((0..=n).map(|j| x.degen_table(n, j).iter().map(|&a| class_of[a]).collect()).collect());
    degen.push(Vec::new());
    let mut out = SSet::from_tables(ids, face, degen)?.with_coskeletal_at(Some(top)).with_base(x.base());
    out = coskeletal_extend(&out, x.dim())?;

    let mut levels: Vec<Vec<usize>> = (0..top).map(|k| (0..x.len(k)).collect()).collect();
    levels.push(class_of);
    for k in top + 1..=x.dim() {
        let prev = &levels[k - 1];
        let mut row = Vec::with_capacity(x.len(k));
        for a in 0..x.len(k) {
            let tuple: Vec<usize> = x.faces_of(k, a).iter().map(|&f| prev[f]).collect();
            let id = tuple_id(&out, k - 1, &tuple);
            row.push(out.require(k, &id)?);
        }
        levels.push(row);
    }
    Ok((out, SMap { levels }))
}
