use crate::category::{FinCategory, Morphism};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::kan::classify;
use crate::sset::{build, SSet};

/// A simplex of a category nerve: a vertex or a chain of composable morphisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Chain {
    Vertex(usize),
    Arrows(Vec<usize>),
}

/// The nerve of a finite category, truncated at `dim`.
///
/// Level 0 holds the objects, level 1 the morphisms, level `m >= 2` the
/// chains `f1,...,fm` with `f_i` followed by `f_{i+1}`. `d_0` drops `f1`,
/// `d_m` drops `fm`, inner faces compose. The result is marked coskeletal at 2.
pub fn nerve_category(c: &FinCategory, dim: usize) -> SSet {
    let mut levels: Vec<Vec<Chain>> = vec![(0..c.num_objects()).map(Chain::Vertex).collect()];
    if dim >= 1 {
        levels.push((0..c.num_morphisms()).map(|f| Chain::Arrows(vec![f])).collect());
    }
    for _ in 2..=dim {
        let prev = levels.last().expect("level");
        let mut next = Vec::new();
        for ch in prev {
            let Chain::Arrows(fs) = ch else { unreachable!() };
            let end = c.tgt(*fs.last().expect("nonempty"));
            for g in 0..c.num_morphisms() {
                if c.src(g) == end {
                    let mut v = fs.clone();
                    v.push(g);
                    next.push(Chain::Arrows(v));
                }
            }
        }
        levels.push(next);
    }
    let id = |_: usize, ch: &Chain| match ch {
        Chain::Vertex(x) => c.objects()[*x].clone(),
        Chain::Arrows(fs) => fs.iter().map(|&f| c.morphisms()[f].id.as_str()).collect::<Vec<_>>().join(","),
    };
    let face = |k: usize, i: usize, ch: &Chain| {
        let Chain::Arrows(fs) = ch else { unreachable!() };
        if k == 1 {
            return Chain::Vertex(if i == 0 { c.tgt(fs[0]) } else { c.src(fs[0]) });
        }
        let mut v = fs.clone();
        if i == 0 {
            v.remove(0);
        } else if i == k {
            v.pop();
        } else {
            let gf = c.compose(v[i], v[i - 1]);
            v.splice(i - 1..=i, [gf]);
        }
        Chain::Arrows(v)
    };
    let degen = |_: usize, j: usize, ch: &Chain| match ch {
        Chain::Vertex(x) => Chain::Arrows(vec![c.identity(*x)]),
        Chain::Arrows(fs) => {
            let obj = if j == 0 { c.src(fs[0]) } else { c.tgt(fs[j - 1]) };
            let mut v = fs.clone();
            v.insert(j, c.identity(obj));
            Chain::Arrows(v)
        }
    };
    build(levels, id, face, degen).expect("category nerve is well formed").with_coskeletal_at(if dim >= 2 {
        Some(2)
    } else {
        None
    })
}

/// The nerve of a group, seen as a one-object category with vertex `*`.
pub fn nerve_group(g: &FiniteGroup, dim: usize) -> SSet {
    let mut n = nerve_category(&FinCategory::from_group(g, "*"), dim);
    n.set_base(Some(0));
    n
}

/// The groupoid recovered from a 1-Kan groupoid: objects are vertices,
/// morphisms are edges from `d_1` to `d_0`, and `g ∘ f` is `d_1` of the
/// unique 2-simplex with `d_2 = f` and `d_0 = g`.
pub fn groupoid_from_nerve(w: &SSet) -> Result<FinCategory> {
    let cls = classify(w, 1)?;
    if !cls.n_kan_groupoid {
        return Err(Error::NotOneKanGroupoid(format!("classification: {cls:?}")));
    }
    let objects = w.ids(0).to_vec();
    let morphisms: Vec<Morphism> = (0..w.len(1))
        .map(|e| Morphism { id: w.id(1, e).to_string(), src: w.face(1, 1, e), tgt: w.face(1, 0, e) })
        .collect();
    let level2 = if w.dim() >= 2 {
        std::borrow::Cow::Borrowed(w)
    } else {
        std::borrow::Cow::Owned(crate::cosk::coskeletal_extend(w, 2)?)
    };
    let mut comp = Vec::new();
    for eta in 0..level2.len(2) {
        let f = level2.face(2, 2, eta);
        let g = level2.face(2, 0, eta);
        comp.push((g, f, level2.face(2, 1, eta)));
    }
    FinCategory::new(objects, morphisms, &comp).map_err(|e| Error::NotOneKanGroupoid(e.to_string()))
}
