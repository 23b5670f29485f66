//! JSON interchange for simplicial sets, groups, categories, 2-groups and
//! bisimplicial sets.
//!
//! Every document carries `"format": 1`. Output is canonical: keys sorted,
//! arrays in id order, two-space indentation, newline-terminated.

use crate::bisimplicial::{BiSSet, BiTables};
use crate::category::{FinCategory, Morphism};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupJson};
use crate::monoidal::Monoidal;
use crate::sset::SSet;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

pub const FORMAT: u32 = 1;

/// Serializes with sorted keys and a trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn check_format(format: u32) -> Result<()> {
    if format != FORMAT {
        return Err(Error::Parse(format!("unsupported format {format}, expected {FORMAT}")));
    }
    Ok(())
}

fn lookup<'a>(ids: impl IntoIterator<Item = &'a String>, what: &str) -> Result<HashMap<&'a str, usize>> {
    let mut map = HashMap::new();
    for (i, id) in ids.into_iter().enumerate() {
        if map.insert(id.as_str(), i).is_some() {
            return Err(Error::Parse(format!("duplicate {what} id {id:?}")));
        }
    }
    Ok(map)
}

fn resolve(map: &HashMap<&str, usize>, id: &str, what: &str) -> Result<usize> {
    map.get(id).copied().ok_or_else(|| Error::Parse(format!("unknown {what} {id:?}")))
}

fn take_table(
    tables: &mut BTreeMap<String, Vec<String>>,
    key: &str,
    len: usize,
    target: &HashMap<&str, usize>,
) -> Result<Vec<usize>> {
    let ids = tables.remove(key).ok_or_else(|| Error::Parse(format!("missing table {key:?}")))?;
    if ids.len() != len {
        return Err(Error::Parse(format!("table {key:?} has {} entries, expected {len}", ids.len())));
    }
    ids.iter().map(|id| resolve(target, id, "simplex")).collect()
}

fn no_leftovers(tables: &BTreeMap<String, Vec<String>>, what: &str) -> Result<()> {
    match tables.keys().next() {
        Some(k) => Err(Error::Parse(format!("unexpected {what} table {k:?}"))),
        None => Ok(()),
    }
}

/// Serialized truncated simplicial set. `face["k.i"]` lists the ids of
/// `d_i x` for `x` in level `k`, in level order; likewise `degen["k.j"]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SSetJson {
    pub format: u32,
    pub dim: usize,
    pub levels: Vec<Vec<String>>,
    pub face: BTreeMap<String, Vec<String>>,
    pub degen: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coskeletal_at: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
}

pub fn sset_to_json(x: &SSet) -> SSetJson {
    let mut face = BTreeMap::new();
    let mut degen = BTreeMap::new();
    for k in 0..=x.dim() {
        if k > 0 {
            for i in 0..=k {
                face.insert(
                    format!("{k}.{i}"),
                    x.face_table(k, i).iter().map(|&y| x.id(k - 1, y).to_string()).collect(),
                );
            }
        }
        if k < x.dim() {
            for j in 0..=k {
                degen.insert(
                    format!("{k}.{j}"),
                    x.degen_table(k, j).iter().map(|&y| x.id(k + 1, y).to_string()).collect(),
                );
            }
        }
    }
    SSetJson {
        format: FORMAT,
        dim: x.dim(),
        levels: (0..=x.dim()).map(|k| x.ids(k).to_vec()).collect(),
        face,
        degen,
        coskeletal_at: x.coskeletal_at(),
        base: x.base().map(|b| x.id(0, b).to_string()),
    }
}

pub fn sset_from_json(j: &SSetJson) -> Result<SSet> {
    check_format(j.format)?;
    if j.levels.len() != j.dim + 1 {
        return Err(Error::Parse(format!("dim {} needs {} levels, found {}", j.dim, j.dim + 1, j.levels.len())));
    }
    let maps =
        j.levels.iter().enumerate().map(|(k, l)| lookup(l, &format!("level {k}"))).collect::<Result<Vec<_>>>()?;
    let mut faces = j.face.clone();
    let mut degens = j.degen.clone();
    let mut face = vec![Vec::new(); j.dim + 1];
    let mut degen = vec![Vec::new(); j.dim + 1];
    for k in 0..=j.dim {
        let n = j.levels[k].len();
        if k > 0 {
            for i in 0..=k {
                face[k].push(take_table(&mut faces, &format!("{k}.{i}"), n, &maps[k - 1])?);
            }
        }
        if k < j.dim {
            for i in 0..=k {
                degen[k].push(take_table(&mut degens, &format!("{k}.{i}"), n, &maps[k + 1])?);
            }
        }
    }
    no_leftovers(&faces, "face")?;
    no_leftovers(&degens, "degeneracy")?;
    let base = j.base.as_deref().map(|b| resolve(&maps[0], b, "base vertex")).transpose()?;
    let x = SSet::from_tables(j.levels.clone(), face, degen)?;
    if let Some(c) = j.coskeletal_at {
        if c > j.dim {
            return Err(Error::Parse(format!("coskeletal_at {c} exceeds dim {}", j.dim)));
        }
    }
    Ok(x.with_coskeletal_at(j.coskeletal_at).with_base(base))
}

/// One morphism of a serialized category; endpoints are object ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// Serialized finite category. `comp` lists `[g, f, g∘f]` for every
/// composable pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryJson {
    pub format: u32,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismJson>,
    pub comp: Vec<[String; 3]>,
}

fn morphisms_json(c: &FinCategory) -> Vec<MorphismJson> {
    c.morphisms()
        .iter()
        .map(|m| MorphismJson { id: m.id.clone(), src: c.objects()[m.src].clone(), tgt: c.objects()[m.tgt].clone() })
        .collect()
}

fn comp_json(c: &FinCategory) -> Vec<[String; 3]> {
    let name = |f: usize| c.morphisms()[f].id.clone();
    let mut out: Vec<(usize, usize, usize)> = c.composition_triples();
    out.sort_by_key(|&(g, f, _)| (f, g));
    out.into_iter().map(|(g, f, h)| [name(g), name(f), name(h)]).collect()
}

pub fn category_to_json(c: &FinCategory) -> CategoryJson {
    CategoryJson { format: FORMAT, objects: c.objects().to_vec(), morphisms: morphisms_json(c), comp: comp_json(c) }
}

fn category_from_parts(objects: &[String], morphisms: &[MorphismJson], comp: &[[String; 3]]) -> Result<FinCategory> {
    let objs = lookup(objects, "object")?;
    let mors = lookup(morphisms.iter().map(|m| &m.id), "morphism")?;
    let ms = morphisms
        .iter()
        .map(|m| {
            Ok(Morphism {
                id: m.id.clone(),
                src: resolve(&objs, &m.src, "object")?,
                tgt: resolve(&objs, &m.tgt, "object")?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let triples = comp
        .iter()
        .map(|[g, f, h]| {
            Ok((resolve(&mors, g, "morphism")?, resolve(&mors, f, "morphism")?, resolve(&mors, h, "morphism")?))
        })
        .collect::<Result<Vec<_>>>()?;
    FinCategory::new(objects.to_vec(), ms, &triples)
}

pub fn category_from_json(j: &CategoryJson) -> Result<FinCategory> {
    check_format(j.format)?;
    category_from_parts(&j.objects, &j.morphisms, &j.comp)
}

/// Tensor tables of a serialized 2-group: `[x, y, x⊗y]` and `[f, g, f⊗g]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJson {
    pub objects: Vec<[String; 3]>,
    pub morphisms: Vec<[String; 3]>,
}

/// Serialized monoidal category. `assoc` lists `[x, y, z, a_{x,y,z}]`;
/// `lunit[x]` is `l_x: x -> 𝟙⊗x` and `runit[x]` is `r_x: x -> x⊗𝟙`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoGroupJson {
    pub format: u32,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismJson>,
    pub comp: Vec<[String; 3]>,
    pub tensor: TensorJson,
    pub assoc: Vec<[String; 4]>,
    pub lunit: BTreeMap<String, String>,
    pub runit: BTreeMap<String, String>,
    pub unit_object: String,
}

pub fn two_group_to_json(g: &Monoidal) -> TwoGroupJson {
    let c = g.cat();
    let (n, m) = (c.num_objects(), c.num_morphisms());
    let on = |x: usize| c.objects()[x].clone();
    let mn = |f: usize| c.morphisms()[f].id.clone();
    let tensor = TensorJson {
        objects: (0..n * n).map(|i| [on(i / n), on(i % n), on(g.tensor(i / n, i % n))]).collect(),
        morphisms: (0..m * m).map(|i| [mn(i / m), mn(i % m), mn(g.tensor_mor(i / m, i % m))]).collect(),
    };
    let assoc = (0..n * n * n)
        .map(|i| {
            let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
            [on(x), on(y), on(z), mn(g.assoc(x, y, z))]
        })
        .collect();
    TwoGroupJson {
        format: FORMAT,
        objects: c.objects().to_vec(),
        morphisms: morphisms_json(c),
        comp: comp_json(c),
        tensor,
        assoc,
        lunit: (0..n).map(|x| (on(x), mn(g.lunit(x)))).collect(),
        runit: (0..n).map(|x| (on(x), mn(g.runit(x)))).collect(),
        unit_object: on(g.unit()),
    }
}

/// Parses a 2-group table and runs the coherence checks.
pub fn two_group_from_json(j: &TwoGroupJson) -> Result<Monoidal> {
    check_format(j.format)?;
    let cat = category_from_parts(&j.objects, &j.morphisms, &j.comp)?;
    let objs = lookup(&j.objects, "object")?;
    let mors = lookup(j.morphisms.iter().map(|m| &m.id), "morphism")?;
    let (n, m) = (j.objects.len(), j.morphisms.len());
    let o = |s: &str| resolve(&objs, s, "object");
    let f = |s: &str| resolve(&mors, s, "morphism");
    let fill = |len: usize, entries: Vec<(usize, usize)>, what: &str| -> Result<Vec<usize>> {
        let mut table = vec![None; len];
        for (k, v) in entries {
            if table[k].replace(v).is_some() {
                return Err(Error::Parse(format!("{what} entry given twice")));
            }
        }
        table.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| Error::Parse(format!("{what} table is incomplete")))
    };
    let tensor_obj = fill(
        n * n,
        j.tensor.objects.iter().map(|[x, y, z]| Ok((o(x)? * n + o(y)?, o(z)?))).collect::<Result<_>>()?,
        "object tensor",
    )?;
    let tensor_mor = fill(
        m * m,
        j.tensor.morphisms.iter().map(|[a, b, c]| Ok((f(a)? * m + f(b)?, f(c)?))).collect::<Result<_>>()?,
        "morphism tensor",
    )?;
    let assoc = fill(
        n * n * n,
        j.assoc.iter().map(|[x, y, z, a]| Ok(((o(x)? * n + o(y)?) * n + o(z)?, f(a)?))).collect::<Result<_>>()?,
        "associator",
    )?;
    let unitor = |t: &BTreeMap<String, String>, what: &str| -> Result<Vec<usize>> {
        fill(n, t.iter().map(|(x, a)| Ok((o(x)?, f(a)?))).collect::<Result<_>>()?, what)
    };
    let lunit = unitor(&j.lunit, "lunit")?;
    let runit = unitor(&j.runit, "runit")?;
    Monoidal::new(cat, tensor_obj, tensor_mor, o(&j.unit_object)?, assoc, lunit, runit)
}

/// Serialized bisimplicial set. `levels[p][q]` lists the ids of cell
/// `(p, q)`; row `p` has `shape[p] + 1` entries. Operator tables are keyed
/// `"p.q.i"` by the bidegree of their source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiSSetJson {
    pub format: u32,
    #[serde(rename = "P")]
    pub p: usize,
    #[serde(rename = "Q")]
    pub q: usize,
    pub levels: Vec<Vec<Vec<String>>>,
    pub hface: BTreeMap<String, Vec<String>>,
    pub vface: BTreeMap<String, Vec<String>>,
    pub hdegen: BTreeMap<String, Vec<String>>,
    pub vdegen: BTreeMap<String, Vec<String>>,
}

/// Operator counts at `(p, q)`: horizontal faces, vertical faces,
/// horizontal and vertical degeneracies.
fn op_counts(shape: &[usize], p: usize, q: usize) -> (usize, usize, usize, usize) {
    let hf = if p > 0 { p + 1 } else { 0 };
    let vf = if q > 0 { q + 1 } else { 0 };
    let hd = if p + 1 < shape.len() && q <= shape[p + 1] { p + 1 } else { 0 };
    let vd = if q < shape[p] { q + 1 } else { 0 };
    (hf, vf, hd, vd)
}

pub fn bisset_to_json(x: &BiSSet) -> BiSSetJson {
    let shape = x.shape();
    let mut t: [BTreeMap<String, Vec<String>>; 4] = Default::default();
    for p in 0..shape.len() {
        for q in 0..=shape[p] {
            let (hf, vf, hd, vd) = op_counts(shape, p, q);
            let n = x.len(p, q);
            let mut put = |slot: usize, count: usize, tp: usize, tq: usize, op: &dyn Fn(usize, usize) -> usize| {
                for i in 0..count {
                    t[slot]
                        .insert(format!("{p}.{q}.{i}"), (0..n).map(|a| x.id(tp, tq, op(i, a)).to_string()).collect());
                }
            };
            put(0, hf, p.wrapping_sub(1), q, &|i, a| x.hface(p, q, i, a));
            put(1, vf, p, q.wrapping_sub(1), &|i, a| x.vface(p, q, i, a));
            put(2, hd, p + 1, q, &|i, a| x.hdegen(p, q, i, a));
            put(3, vd, p, q + 1, &|i, a| x.vdegen(p, q, i, a));
        }
    }
    let [hface, vface, hdegen, vdegen] = t;
    BiSSetJson {
        format: FORMAT,
        p: shape.len() - 1,
        q: shape[0],
        levels: (0..shape.len()).map(|p| (0..=shape[p]).map(|q| x.ids(p, q).to_vec()).collect()).collect(),
        hface,
        vface,
        hdegen,
        vdegen,
    }
}

pub fn bisset_from_json(j: &BiSSetJson) -> Result<BiSSet> {
    check_format(j.format)?;
    let shape: Vec<usize> = j
        .levels
        .iter()
        .map(|row| row.len().checked_sub(1).ok_or_else(|| Error::Parse("empty row".into())))
        .collect::<Result<_>>()?;
    if shape.len() != j.p + 1 || shape.first() != Some(&j.q) {
        return Err(Error::Parse(format!("P = {}, Q = {} do not match the levels", j.p, j.q)));
    }
    crate::bisimplicial::check_shape(&shape).map_err(|e| Error::Parse(e.to_string()))?;
    let maps: Vec<Vec<HashMap<&str, usize>>> = j
        .levels
        .iter()
        .enumerate()
        .map(|(p, row)| row.iter().enumerate().map(|(q, l)| lookup(l, &format!("cell ({p},{q})"))).collect())
        .collect::<Result<_>>()?;
    let mut src = [j.hface.clone(), j.vface.clone(), j.hdegen.clone(), j.vdegen.clone()];
    let mut t = BiTables::default();
    for p in 0..shape.len() {
        let (mut hf, mut vf, mut hd, mut vd) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for q in 0..=shape[p] {
            let (chf, cvf, chd, cvd) = op_counts(&shape, p, q);
            let n = j.levels[p][q].len();
            let mut grab = |slot: usize, count: usize, tp: usize, tq: usize| -> Result<Vec<Vec<usize>>> {
                (0..count).map(|i| take_table(&mut src[slot], &format!("{p}.{q}.{i}"), n, &maps[tp][tq])).collect()
            };
            hf.push(grab(0, chf, p.wrapping_sub(1).min(shape.len() - 1), q)?);
            vf.push(grab(1, cvf, p, q.wrapping_sub(1).min(shape[p]))?);
            hd.push(grab(2, chd, (p + 1).min(shape.len() - 1), q)?);
            vd.push(grab(3, cvd, p, (q + 1).min(shape[p]))?);
        }
        t.hface.push(hf);
        t.vface.push(vf);
        t.hdegen.push(hd);
        t.vdegen.push(vd);
    }
    for (name, rest) in ["hface", "vface", "hdegen", "vdegen"].iter().zip(&src) {
        no_leftovers(rest, name)?;
    }
    BiSSet::from_tables(shape, j.levels.clone(), t)
}

/// Any interchange document, recognised by its keys.
#[derive(Clone, Debug)]
pub enum Document {
    SSet(SSet),
    Group(FiniteGroup),
    Category(FinCategory),
    TwoGroup(Monoidal),
    BiSSet(BiSSet),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::SSet(_) => "simplicial set",
            Document::Group(_) => "group",
            Document::Category(_) => "category",
            Document::TwoGroup(_) => "2-group",
            Document::BiSSet(_) => "bisimplicial set",
        }
    }

    /// Canonical serialization.
    pub fn to_canonical(&self) -> Result<String> {
        match self {
            Document::SSet(x) => canonical_json(&sset_to_json(x)),
            Document::Group(g) => canonical_json(&g.to_json()),
            Document::Category(c) => canonical_json(&category_to_json(c)),
            Document::TwoGroup(g) => canonical_json(&two_group_to_json(g)),
            Document::BiSSet(x) => canonical_json(&bisset_to_json(x)),
        }
    }
}

fn typed<T: DeserializeOwned>(v: serde_json::Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses any interchange document.
pub fn parse_document(text: &str) -> Result<Document> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| Error::Parse("top level is not an object".into()))?;
    let has = |k: &str| obj.contains_key(k);
    if has("P") {
        Ok(Document::BiSSet(bisset_from_json(&typed(v)?)?))
    } else if has("elements") {
        let j: GroupJson = typed(v)?;
        check_format(j.format)?;
        Ok(Document::Group(FiniteGroup::from_json(&j)?))
    } else if has("unit_object") {
        Ok(Document::TwoGroup(two_group_from_json(&typed(v)?)?))
    } else if has("objects") {
        Ok(Document::Category(category_from_json(&typed(v)?)?))
    } else if has("levels") {
        Ok(Document::SSet(sset_from_json(&typed(v)?)?))
    } else {
        Err(Error::Parse(
            "unrecognised document: expected a simplicial set, group, category, 2-group or bisimplicial set".into(),
        ))
    }
}

/// Parses `text`, serializes canonically, parses again and serializes
/// again. Returns the canonical text when both serializations agree.
pub fn roundtrip(text: &str) -> Result<Option<String>> {
    let first = parse_document(text)?.to_canonical()?;
    let second = parse_document(&first)?.to_canonical()?;
    Ok((first == second).then_some(first))
}

pub fn parse_sset(text: &str) -> Result<SSet> {
    match parse_document(text)? {
        Document::SSet(x) => Ok(x),
        d => Err(Error::Parse(format!("expected a simplicial set, found a {}", d.kind()))),
    }
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    match parse_document(text)? {
        Document::Group(g) => Ok(g),
        d => Err(Error::Parse(format!("expected a group, found a {}", d.kind()))),
    }
}

pub fn parse_two_group(text: &str) -> Result<Monoidal> {
    match parse_document(text)? {
        Document::TwoGroup(g) => Ok(g),
        d => Err(Error::Parse(format!("expected a 2-group, found a {}", d.kind()))),
    }
}

pub fn parse_bisset(text: &str) -> Result<BiSSet> {
    match parse_document(text)? {
        Document::BiSSet(x) => Ok(x),
        d => Err(Error::Parse(format!("expected a bisimplicial set, found a {}", d.kind()))),
    }
}

/// The result of an enumeration checked against an oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerationJson {
    pub format: u32,
    pub count: usize,
    pub items: Vec<serde_json::Value>,
    pub oracle_count: usize,
    pub bijection_verified: bool,
}
