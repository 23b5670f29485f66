use crate::category::{FinCategory, Morphism};
use crate::error::{invalid, Error, Result};
use crate::group::FiniteGroup;

/// A finite monoidal category.
///
/// Unitors point into the tensor: `l_X: X -> 𝟙 ⊗ X` and `r_X: X -> X ⊗ 𝟙`.
/// The associator is `a_{X,Y,Z}: (X ⊗ Y) ⊗ Z -> X ⊗ (Y ⊗ Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoidal {
    cat: FinCategory,
    tensor_obj: Vec<usize>,
    tensor_mor: Vec<usize>,
    unit: usize,
    assoc: Vec<usize>,
    lunit: Vec<usize>,
    runit: Vec<usize>,
}

/// Outcome of the coherence checks on a monoidal structure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonoidalReport {
    pub failures: Vec<String>,
}

impl MonoidalReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Monoidal {
    /// Assembles a monoidal structure from dense tables.
    ///
    /// `tensor_obj[x * n + y]`, `tensor_mor[f * m + g]`, `assoc[(x * n + y) * n + z]`.
    /// Only table shapes are checked; see [`Monoidal::check`].
    pub fn from_tables(
        cat: FinCategory,
        tensor_obj: Vec<usize>,
        tensor_mor: Vec<usize>,
        unit: usize,
        assoc: Vec<usize>,
        lunit: Vec<usize>,
        runit: Vec<usize>,
    ) -> Result<Monoidal> {
        let n = cat.num_objects();
        let m = cat.num_morphisms();
        if tensor_obj.len() != n * n || tensor_obj.iter().any(|&x| x >= n) {
            return invalid("object tensor table has the wrong shape");
        }
        if tensor_mor.len() != m * m || tensor_mor.iter().any(|&f| f >= m) {
            return invalid("morphism tensor table has the wrong shape");
        }
        if unit >= n {
            return invalid("unit object out of range");
        }
        if assoc.len() != n * n * n || lunit.len() != n || runit.len() != n {
            return invalid("coherence tables have the wrong shape");
        }
        if assoc.iter().chain(&lunit).chain(&runit).any(|&f| f >= m) {
            return invalid("coherence morphism out of range");
        }
        Ok(Monoidal { cat, tensor_obj, tensor_mor, unit, assoc, lunit, runit })
    }

    /// Builds and checks; fails with the first coherence failure.
    pub fn new(
        cat: FinCategory,
        tensor_obj: Vec<usize>,
        tensor_mor: Vec<usize>,
        unit: usize,
        assoc: Vec<usize>,
        lunit: Vec<usize>,
        runit: Vec<usize>,
    ) -> Result<Monoidal> {
        let out = Monoidal::from_tables(cat, tensor_obj, tensor_mor, unit, assoc, lunit, runit)?;
        let report = out.check();
        match report.failures.first() {
            Some(f) => invalid(f.clone()),
            None => Ok(out),
        }
    }

    pub fn cat(&self) -> &FinCategory {
        &self.cat
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn tensor(&self, x: usize, y: usize) -> usize {
        self.tensor_obj[x * self.cat.num_objects() + y]
    }

    pub fn tensor_mor(&self, f: usize, g: usize) -> usize {
        self.tensor_mor[f * self.cat.num_morphisms() + g]
    }

    pub fn assoc(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.cat.num_objects();
        self.assoc[(x * n + y) * n + z]
    }

    pub fn lunit(&self, x: usize) -> usize {
        self.lunit[x]
    }

    pub fn runit(&self, x: usize) -> usize {
        self.runit[x]
    }

    pub fn id(&self, x: usize) -> usize {
        self.cat.identity(x)
    }

    pub fn comp(&self, g: usize, f: usize) -> usize {
        self.cat.compose(g, f)
    }

    /// Composite of a chain written in application order: `chain[0]` first.
    pub fn chain(&self, chain: &[usize]) -> Option<usize> {
        let mut acc = *chain.first()?;
        for &g in &chain[1..] {
            acc = self.cat.try_compose(g, acc)?;
        }
        Some(acc)
    }

    pub fn inv(&self, f: usize) -> usize {
        self.cat.inverse(f).expect("invertible morphism")
    }

    /// Checks functoriality of the tensor, naturality and invertibility of the
    /// coherence morphisms, the pentagon and the triangle.
    pub fn check(&self) -> MonoidalReport {
        let mut failures = Vec::new();
        let c = &self.cat;
        let n = c.num_objects();
        let m = c.num_morphisms();
        let name = |f: usize| c.morphisms()[f].id.clone();
        let oname = |x: usize| c.objects()[x].clone();
        for f in 0..m {
            for g in 0..m {
                let t = self.tensor_mor(f, g);
                if c.src(t) != self.tensor(c.src(f), c.src(g)) || c.tgt(t) != self.tensor(c.tgt(f), c.tgt(g)) {
                    failures.push(format!("{} ⊗ {} has the wrong endpoints", name(f), name(g)));
                }
            }
        }
        if !failures.is_empty() {
            return MonoidalReport { failures };
        }
        for x in 0..n {
            for y in 0..n {
                if self.tensor_mor(self.id(x), self.id(y)) != self.id(self.tensor(x, y)) {
                    failures.push(format!("id ⊗ id is not an identity at ({}, {})", oname(x), oname(y)));
                }
            }
        }
        for f in 0..m {
            for g in 0..m {
                for f2 in 0..m {
                    if c.tgt(f) != c.src(f2) {
                        continue;
                    }
                    for g2 in 0..m {
                        if c.tgt(g) != c.src(g2) {
                            continue;
                        }
                        let lhs = self.tensor_mor(c.compose(f2, f), c.compose(g2, g));
                        let rhs = c.compose(self.tensor_mor(f2, g2), self.tensor_mor(f, g));
                        if lhs != rhs {
                            failures.push(format!(
                                "interchange fails for {}, {}, {}, {}",
                                name(f),
                                name(g),
                                name(f2),
                                name(g2)
                            ));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            let l = self.lunit(x);
            let r = self.runit(x);
            if c.src(l) != x || c.tgt(l) != self.tensor(self.unit, x) {
                failures.push(format!("l_{} has the wrong endpoints", oname(x)));
            }
            if c.src(r) != x || c.tgt(r) != self.tensor(x, self.unit) {
                failures.push(format!("r_{} has the wrong endpoints", oname(x)));
            }
            if c.inverse(l).is_none() || c.inverse(r).is_none() {
                failures.push(format!("a unitor at {} is not invertible", oname(x)));
            }
            for y in 0..n {
                for z in 0..n {
                    let a = self.assoc(x, y, z);
                    if c.src(a) != self.tensor(self.tensor(x, y), z) || c.tgt(a) != self.tensor(x, self.tensor(y, z)) {
                        failures.push(format!("a_{{{},{},{}}} has the wrong endpoints", oname(x), oname(y), oname(z)));
                    } else if c.inverse(a).is_none() {
                        failures.push(format!("a_{{{},{},{}}} is not invertible", oname(x), oname(y), oname(z)));
                    }
                }
            }
        }
        if !failures.is_empty() {
            return MonoidalReport { failures };
        }
        for f in 0..m {
            let (x, y) = (c.src(f), c.tgt(f));
            let u = self.id(self.unit);
            if c.compose(self.lunit(y), f) != c.compose(self.tensor_mor(u, f), self.lunit(x)) {
                failures.push(format!("l is not natural at {}", name(f)));
            }
            if c.compose(self.runit(y), f) != c.compose(self.tensor_mor(f, u), self.runit(x)) {
                failures.push(format!("r is not natural at {}", name(f)));
            }
            for g in 0..m {
                for h in 0..m {
                    let src_side =
                        c.compose(self.assoc(c.tgt(f), c.tgt(g), c.tgt(h)), self.tensor_mor(self.tensor_mor(f, g), h));
                    let tgt_side =
                        c.compose(self.tensor_mor(f, self.tensor_mor(g, h)), self.assoc(c.src(f), c.src(g), c.src(h)));
                    if src_side != tgt_side {
                        failures.push(format!("a is not natural at ({}, {}, {})", name(f), name(g), name(h)));
                    }
                }
            }
        }
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let left = self.chain(&[
                            self.tensor_mor(self.assoc(w, x, y), self.id(z)),
                            self.assoc(w, self.tensor(x, y), z),
                            self.tensor_mor(self.id(w), self.assoc(x, y, z)),
                        ]);
                        let right =
                            self.chain(&[self.assoc(self.tensor(w, x), y, z), self.assoc(w, x, self.tensor(y, z))]);
                        if left.is_none() || left != right {
                            failures.push(format!(
                                "pentagon fails at ({}, {}, {}, {})",
                                oname(w),
                                oname(x),
                                oname(y),
                                oname(z)
                            ));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let left = self.chain(&[self.tensor_mor(self.runit(x), self.id(y)), self.assoc(x, self.unit, y)]);
                let right = Some(self.tensor_mor(self.id(x), self.lunit(y)));
                if left != right {
                    failures.push(format!("triangle fails at ({}, {})", oname(x), oname(y)));
                }
            }
        }
        if self.lunit(self.unit) != self.runit(self.unit) {
            failures.push("l_𝟙 differs from r_𝟙".into());
        }
        MonoidalReport { failures }
    }

    /// The strict 2-group with a group of objects and only identity morphisms.
    pub fn discrete(group: &FiniteGroup) -> Monoidal {
        let n = group.order();
        let objects: Vec<String> = group.names().to_vec();
        let morphisms = (0..n).map(|x| Morphism { id: format!("id:{}", group.name(x)), src: x, tgt: x }).collect();
        let comp: Vec<(usize, usize, usize)> = (0..n).map(|x| (x, x, x)).collect();
        let cat = FinCategory::new(objects, morphisms, &comp).expect("discrete category");
        let tensor: Vec<usize> = (0..n).flat_map(|x| (0..n).map(move |y| group.mul(x, y))).collect();
        let assoc = (0..n * n * n)
            .map(|i| {
                let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
                group.mul(group.mul(x, y), z)
            })
            .collect();
        Monoidal::new(cat, tensor.clone(), tensor, group.identity(), assoc, (0..n).collect(), (0..n).collect())
            .expect("discrete 2-group")
    }

    /// The strict 2-group with one object and an abelian group of morphisms.
    pub fn one_object(group: &FiniteGroup) -> Result<Monoidal> {
        if !group.is_abelian() {
            return Err(Error::NotTwoGroup("a one-object 2-group needs an abelian group".into()));
        }
        let cat = FinCategory::from_group(group, "I");
        let m = group.order();
        let tensor_mor = (0..m).flat_map(|f| (0..m).map(move |g| group.mul(f, g))).collect();
        let e = group.identity();
        Monoidal::new(cat, vec![0], tensor_mor, 0, vec![e], vec![e], vec![e])
    }

    /// The product monoidal category; ids are `(a|b)`.
    pub fn product(&self, other: &Monoidal) -> Monoidal {
        let (c1, c2) = (&self.cat, &other.cat);
        let (n1, n2) = (c1.num_objects(), c2.num_objects());
        let (m1, m2) = (c1.num_morphisms(), c2.num_morphisms());
        let objects = (0..n1 * n2).map(|i| format!("({}|{})", c1.objects()[i / n2], c2.objects()[i % n2])).collect();
        let morphisms = (0..m1 * m2)
            .map(|i| {
                let (f, g) = (i / m2, i % m2);
                Morphism {
                    id: format!("({}|{})", c1.morphisms()[f].id, c2.morphisms()[g].id),
                    src: c1.src(f) * n2 + c2.src(g),
                    tgt: c1.tgt(f) * n2 + c2.tgt(g),
                }
            })
            .collect();
        let mut comp = Vec::new();
        for (g1, f1, h1) in c1.composition_triples() {
            for (g2, f2, h2) in c2.composition_triples() {
                comp.push((g1 * m2 + g2, f1 * m2 + f2, h1 * m2 + h2));
            }
        }
        let cat = FinCategory::new(objects, morphisms, &comp).expect("product category");
        let obj = |x: usize| (x / n2, x % n2);
        let mor = |f: usize| (f / m2, f % m2);
        let n = n1 * n2;
        let m = m1 * m2;
        let tensor_obj = (0..n * n)
            .map(|i| {
                let ((a1, a2), (b1, b2)) = (obj(i / n), obj(i % n));
                self.tensor(a1, b1) * n2 + other.tensor(a2, b2)
            })
            .collect();
        let tensor_mor = (0..m * m)
            .map(|i| {
                let ((f1, f2), (g1, g2)) = (mor(i / m), mor(i % m));
                self.tensor_mor(f1, g1) * m2 + other.tensor_mor(f2, g2)
            })
            .collect();
        let assoc = (0..n * n * n)
            .map(|i| {
                let ((x1, x2), (y1, y2), (z1, z2)) = (obj(i / (n * n)), obj((i / n) % n), obj(i % n));
                self.assoc(x1, y1, z1) * m2 + other.assoc(x2, y2, z2)
            })
            .collect();
        let lunit = (0..n).map(|x| self.lunit(obj(x).0) * m2 + other.lunit(obj(x).1)).collect();
        let runit = (0..n).map(|x| self.runit(obj(x).0) * m2 + other.runit(obj(x).1)).collect();
        Monoidal::new(cat, tensor_obj, tensor_mor, self.unit * n2 + other.unit, assoc, lunit, runit)
            .expect("product of monoidal categories")
    }
}
