use crate::error::{invalid, Error, Result};
use crate::group::FiniteGroup;
use std::collections::HashMap;

/// A morphism of a finite category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category with a total composition table on composable pairs.
///
/// `compose(g, f)` is `g ∘ f` for `f: X -> Y` and `g: Y -> Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    comp: Vec<Option<usize>>,
    identity: Vec<usize>,
    obj_lookup: HashMap<String, usize>,
    mor_lookup: HashMap<String, usize>,
}

impl FinCategory {
    /// Builds a category from composition triples `(g, f, g∘f)`.
    ///
    /// Checks that every composable pair has exactly one composite with the
    /// right endpoints, that identities exist and that composition is
    /// associative.
    pub fn new(objects: Vec<String>, morphisms: Vec<Morphism>, comp: &[(usize, usize, usize)]) -> Result<FinCategory> {
        let n = morphisms.len();
        let obj_lookup = unique_lookup(objects.iter(), "object")?;
        let mor_lookup = unique_lookup(morphisms.iter().map(|m| &m.id), "morphism")?;
        if morphisms.iter().any(|m| m.src >= objects.len() || m.tgt >= objects.len()) {
            return invalid("morphism endpoint out of range");
        }
        let mut table = vec![None; n * n];
        for &(g, f, h) in comp {
            if g >= n || f >= n || h >= n {
                return invalid("composition entry out of range");
            }
            let (mf, mg, mh) = (&morphisms[f], &morphisms[g], &morphisms[h]);
            if mf.tgt != mg.src {
                return invalid(format!("{} and {} are not composable", mg.id, mf.id));
            }
            if mh.src != mf.src || mh.tgt != mg.tgt {
                return invalid(format!("{} ∘ {} = {} has the wrong endpoints", mg.id, mf.id, mh.id));
            }
            if table[g * n + f].replace(h).is_some_and(|old| old != h) {
                return invalid(format!("{} ∘ {} is given twice", mg.id, mf.id));
            }
        }
        for f in 0..n {
            for g in 0..n {
                if morphisms[f].tgt == morphisms[g].src && table[g * n + f].is_none() {
                    return invalid(format!("{} ∘ {} is missing", morphisms[g].id, morphisms[f].id));
                }
            }
        }
        let mut identity = Vec::with_capacity(objects.len());
        for x in 0..objects.len() {
            let e = (0..n)
                .find(|&e| {
                    morphisms[e].src == x
                        && morphisms[e].tgt == x
                        && (0..n).all(|f| {
                            (morphisms[f].tgt != x || table[e * n + f] == Some(f))
                                && (morphisms[f].src != x || table[f * n + e] == Some(f))
                        })
                })
                .ok_or_else(|| Error::Invalid(format!("object {} has no identity", objects[x])))?;
            identity.push(e);
        }
        let cat = FinCategory { objects, morphisms, comp: table, identity, obj_lookup, mor_lookup };
        for f in 0..n {
            for g in 0..n {
                if cat.morphisms[f].tgt != cat.morphisms[g].src {
                    continue;
                }
                let gf = cat.compose(g, f);
                for h in 0..n {
                    if cat.morphisms[g].tgt == cat.morphisms[h].src
                        && cat.compose(h, gf) != cat.compose(cat.compose(h, g), f)
                    {
                        return invalid("composition is not associative");
                    }
                }
            }
        }
        Ok(cat)
    }

    /// The one-object category of a group, composing diagrammatically:
    /// `g ∘ f` is the product `f · g`.
    pub fn from_group(group: &FiniteGroup, object: &str) -> FinCategory {
        let morphisms = group.names().iter().map(|n| Morphism { id: n.clone(), src: 0, tgt: 0 }).collect();
        let n = group.order();
        let comp: Vec<(usize, usize, usize)> =
            (0..n).flat_map(|g| (0..n).map(move |f| (g, f, group.mul(f, g)))).collect();
        FinCategory::new(vec![object.to_string()], morphisms, &comp).expect("group category")
    }

    /// The indiscrete groupoid: exactly one morphism between any two objects,
    /// named `x>y`.
    pub fn indiscrete(objects: &[&str]) -> FinCategory {
        let n = objects.len();
        let mut morphisms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                morphisms.push(Morphism { id: format!("{}>{}", objects[a], objects[b]), src: a, tgt: b });
            }
        }
        let mut comp = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    comp.push((b * n + c, a * n + b, a * n + c));
                }
            }
        }
        FinCategory::new(objects.iter().map(|s| s.to_string()).collect(), morphisms, &comp)
            .expect("indiscrete groupoid")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_index(&self, id: &str) -> Option<usize> {
        self.obj_lookup.get(id).copied()
    }

    pub fn morphism_index(&self, id: &str) -> Option<usize> {
        self.mor_lookup.get(id).copied()
    }

    pub fn src(&self, f: usize) -> usize {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.morphisms[f].tgt
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.src(f)] == f
    }

    /// `g ∘ f`; panics when the pair is not composable.
    pub fn compose(&self, g: usize, f: usize) -> usize {
        self.comp[g * self.morphisms.len() + f].expect("composable pair")
    }

    /// `g ∘ f` when composable.
    pub fn try_compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.morphisms.len() + f]
    }

    /// Morphisms `x -> y`, in index order.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms.len()).filter(|&f| self.src(f) == x && self.tgt(f) == y).collect()
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (x, y) = (self.src(f), self.tgt(f));
        self.hom(y, x)
            .into_iter()
            .find(|&g| self.compose(g, f) == self.identity[x] && self.compose(f, g) == self.identity[y])
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.morphisms.len()).all(|f| self.inverse(f).is_some())
    }

    /// Composition triples `(g, f, g∘f)` in index order.
    pub fn composition_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.morphisms.len();
        let mut out = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if let Some(h) = self.comp[g * n + f] {
                    out.push((g, f, h));
                }
            }
        }
        out
    }
}

fn unique_lookup<'a>(ids: impl Iterator<Item = &'a String>, what: &str) -> Result<HashMap<String, usize>> {
    let mut map = HashMap::new();
    for (i, id) in ids.enumerate() {
        if map.insert(id.clone(), i).is_some() {
            return invalid(format!("duplicate {what} id {id:?}"));
        }
    }
    Ok(map)
}
