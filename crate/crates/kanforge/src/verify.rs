//! The acceptance criteria as named, runnable checks.
//!
//! Each criterion produces one line per subject it examines. A criterion
//! passes when it produced at least one line and every line passed. All
//! comparisons are exact: counts, group orders and table entries must match
//! with no tolerance.

use crate::bisimplicial::{vertical_pullback, BiSSet};
use crate::budget::Budget;
use crate::category::FinCategory;
use crate::corpus;
use crate::cosk::{coskeletal_extend, csq_prime_with_unit};
use crate::determinants::{enriched_hom0, verify_additive, verify_determinants, verify_segal_determinants};
use crate::duskin::{comparison_functor, grho_check, loop_gamma, round_trips, two_group_from_nerve};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::io::Document;
use crate::kan::classify;
use crate::monoidal::Monoidal;
use crate::nerve::{groupoid_from_nerve, nerve_category, nerve_group};
use crate::nerve2::nerve_two_group;
use crate::segal::{
    default_shape, hom1, is_one_kan_groupoid, mu3_determined, segal_fibrancy_check, segal_nerve, vertical_circle,
};
use crate::sset::SSet;
use crate::standard::{circle, simplex_mod_vertices, square_mod_vertical, suspension_square};
use serde::Serialize;
use std::collections::HashMap;

/// Criterion names and one-line titles, in order.
pub const CRITERIA: &[(&str, &str)] = &[
    ("groupoid-nerve", "groupoid nerves are 1-Kan groupoids and give back the groupoid"),
    ("two-group-nerve", "2-group nerves are 2-Kan groupoids and the reconstruction is weakly equivalent"),
    ("grho", "homotopy groups of a 2-group match those of its nerve"),
    ("loop-gamma", "the loop space of the nerve is the nerve of the underlying groupoid"),
    ("additive", "additive functions correspond to maps into the group nerve"),
    ("determinants", "reduced determinants correspond to maps into the 2-group nerve, with matching components"),
    ("segal-determinants", "Segal determinants correspond to bisimplicial maps into the Segal nerve"),
    ("simplex-counts", "nondegenerate simplex counts of the two quotient examples"),
    ("strictness", "enriched homs: the level-0 hom is not 1-Kan, the level-1 hom is"),
    ("fibrancy", "Segal nerves satisfy the four fibrancy conditions"),
    ("coskeleton", "coskeletal extension and the weak coskeleton quotient"),
];

/// One examined subject.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of one criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub number: usize,
    pub name: String,
    pub title: String,
    pub lines: Vec<CheckLine>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        !self.lines.is_empty() && self.lines.iter().all(|l| l.passed)
    }
}

/// Looks up the position and title of a criterion.
pub fn criterion(name: &str) -> Option<(usize, &'static str)> {
    CRITERIA.iter().position(|(n, _)| *n == name).map(|i| (i + 1, CRITERIA[i].1))
}

/// Turns a check outcome into a line. Budget exhaustion is passed on to the
/// caller; any other error is a failed line.
fn line(subject: impl Into<String>, outcome: Result<(bool, String)>) -> Result<CheckLine> {
    let subject = subject.into();
    match outcome {
        Ok((passed, detail)) => Ok(CheckLine { subject, passed, detail }),
        Err(e @ Error::BudgetExceeded(_)) => Err(e),
        Err(e) => Ok(CheckLine { subject, passed: false, detail: format!("error: {e}") }),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Canned groupoids for the groupoid nerve criterion.
pub fn canned_groupoids() -> Vec<(String, FinCategory)> {
    ["groupoid_z2", "groupoid_z3", "indiscrete2", "indiscrete3"]
        .iter()
        .map(|id| match corpus::get(id) {
            Ok(Document::Category(c)) => (id.to_string(), c),
            _ => unreachable!("canned category"),
        })
        .collect()
}

/// Canned 2-groups by short name.
pub fn canned_two_groups() -> Vec<(String, Monoidal)> {
    corpus::TWO_GROUPS.iter().map(|n| (n.to_string(), corpus::two_group(n).expect("canned"))).collect()
}

/// The groups used as coefficients for additive functions.
pub fn canned_coefficient_groups() -> Vec<(String, FiniteGroup)> {
    ["z2", "z3", "s3"].iter().map(|n| (n.to_string(), corpus::group(n).expect("canned"))).collect()
}

/// The reduced simplicial sets used as sources for determinants, through
/// level 3.
pub fn canned_reduced_sources() -> Vec<(String, SSet)> {
    vec![
        ("circle".into(), circle(3)),
        ("delta2_mod_vertices".into(), simplex_mod_vertices(2, 3)),
        ("square_mod_vertical".into(), square_mod_vertical(3)),
    ]
}

/// The Segal pre-monoids used as sources for Segal determinants: each
/// reduced source placed in every row, on `p + q <= 4`.
pub fn canned_segal_sources() -> Result<Vec<(String, BiSSet)>> {
    let shape = default_shape();
    Ok(vec![
        ("segal_circle".into(), vertical_circle(&shape)?),
        ("segal_delta2_mod_vertices".into(), vertical_pullback(&simplex_mod_vertices(2, 4), &shape)?),
        ("segal_square_mod_vertical".into(), vertical_pullback(&square_mod_vertical(4), &shape)?),
    ])
}

/// Same objects, same morphism ids with the same endpoints, and the same
/// composition table, all compared by id.
pub fn same_category(a: &FinCategory, b: &FinCategory) -> bool {
    if a.objects() != b.objects() || a.num_morphisms() != b.num_morphisms() {
        return false;
    }
    let mut to_b = Vec::with_capacity(a.num_morphisms());
    for m in a.morphisms() {
        match b.morphism_index(&m.id) {
            Some(j) if b.src(j) == m.src && b.tgt(j) == m.tgt => to_b.push(j),
            _ => return false,
        }
    }
    (0..a.num_morphisms()).all(|g| {
        (0..a.num_morphisms()).all(|f| match a.try_compose(g, f) {
            Some(h) => b.try_compose(to_b[g], to_b[f]) == Some(to_b[h]),
            None => b.try_compose(to_b[g], to_b[f]).is_none(),
        })
    })
}

/// The `groupoid-nerve` criterion on one groupoid.
pub fn check_groupoid_nerve(c: &FinCategory) -> Result<(bool, String)> {
    let nerve = nerve_category(c, 3);
    let cls = classify(&nerve, 1)?;
    let back = groupoid_from_nerve(&nerve)?;
    let same = same_category(c, &back);
    let detail = format!(
        "levels {:?}; 1-Kan groupoid: {}; recovered groupoid equal by ids: {}",
        (0..=3).map(|k| nerve.len(k)).collect::<Vec<_>>(),
        yes(cls.n_kan_groupoid),
        yes(same)
    );
    Ok((cls.n_kan_groupoid && same, detail))
}

/// The `two-group-nerve` criterion on one 2-group.
pub fn check_two_group_nerve(g: &Monoidal, budget: &Budget) -> Result<(bool, String)> {
    let nerve = nerve_two_group(g, 4);
    let cls = classify(&nerve.sset, 2)?;
    let nerve3 = nerve_two_group(g, 3);
    let rec = two_group_from_nerve(&nerve3.sset)?;
    let round = round_trips(&nerve3.sset, &rec, budget)?;
    let f = comparison_functor(g, &nerve3, &rec);
    let failures = f.check(&rec.two_group, g);
    let weq = failures.is_empty() && f.is_weak_equivalence(&rec.two_group, g)?;
    let detail = format!(
        "2-Kan groupoid: {}; nerve of reconstruction isomorphic through level 3: {}; comparison functor lax: {}{}; weak equivalence on pi0 and pi1: {}",
        yes(cls.n_kan_groupoid),
        yes(round),
        yes(failures.is_empty()),
        failures.first().map(|s| format!(" ({s})")).unwrap_or_default(),
        yes(weq)
    );
    Ok((cls.n_kan_groupoid && round && weq, detail))
}

fn witness(src: &FiniteGroup, tgt: &FiniteGroup, map: &Option<Vec<usize>>) -> String {
    match map {
        None => "no map".into(),
        Some(m) => {
            let pairs: Vec<String> =
                m.iter().enumerate().map(|(a, &b)| format!("{}->{}", src.name(a), tgt.name(b))).collect();
            format!("{{{}}}", pairs.join(", "))
        }
    }
}

/// The `grho` criterion on one 2-group.
pub fn check_grho(g: &Monoidal) -> Result<(bool, String)> {
    let r = grho_check(g)?;
    let detail = format!(
        "pi0 (order {}) -> pi1 of nerve (order {}) iso: {} {}; pi1 (order {}) -> pi2 of nerve (order {}) iso: {} {}",
        r.pi0.order(),
        r.nerve_pi1.order(),
        yes(r.pi0_to_pi1),
        witness(&r.pi0, &r.nerve_pi1, &r.map0),
        r.pi1.order(),
        r.nerve_pi2.order(),
        yes(r.pi1_to_pi2),
        witness(&r.pi1, &r.nerve_pi2, &r.map1)
    );
    Ok((r.passed(), detail))
}

/// The `loop-gamma` criterion on one 2-group.
pub fn check_loop_gamma(g: &Monoidal) -> Result<(bool, String)> {
    let lg = loop_gamma(g)?;
    let simplicial = lg.map.is_simplicial(&lg.loop_space, &lg.groupoid_nerve);
    let bijective = lg.map.is_levelwise_bijective(&lg.groupoid_nerve);
    let levels: Vec<(usize, usize)> =
        (0..=lg.loop_space.dim()).map(|k| (lg.loop_space.len(k), lg.groupoid_nerve.len(k))).collect();
    let detail = format!(
        "level sizes (loop, groupoid nerve) {levels:?}; simplicial: {}; levelwise bijective: {}",
        yes(simplicial),
        yes(bijective)
    );
    Ok((lg.is_isomorphism(), detail))
}

/// The `additive` criterion on one source and one group.
pub fn check_additive(x: &SSet, h: &FiniteGroup, budget: &Budget) -> Result<(bool, String)> {
    let r = verify_additive(x, h, budget)?;
    let ok = r.bijection_verified && r.count == r.oracle_count;
    Ok((
        ok,
        format!(
            "additive functions {} = maps {} (exact); bijection verified: {}",
            r.count,
            r.oracle_count,
            yes(r.bijection_verified)
        ),
    ))
}

/// The `determinants` criterion on one source and one 2-group.
pub fn check_determinants(x: &SSet, g: &Monoidal, budget: &Budget) -> Result<(bool, String)> {
    let r = verify_determinants(x, g, budget)?;
    let detail = format!(
        "determinants {} = maps {} (exact); bijection: {}; forcing identities: {}; components {} = mapping-space components {} (exact), classes match: {}, relation symmetric: {}",
        r.maps.count,
        r.maps.oracle_count,
        yes(r.maps.bijection_verified),
        yes(r.forcing),
        r.pi0_count,
        r.oracle_pi0_count,
        yes(r.pi0_matches),
        yes(r.symmetric)
    );
    Ok((r.passed() && r.maps.count == r.maps.oracle_count && r.pi0_count == r.oracle_pi0_count, detail))
}

/// The `segal-determinants` criterion on one Segal source and one 2-group, with its Segal nerve.
pub fn check_segal_determinants(x: &BiSSet, g: &Monoidal, nerve: &BiSSet, budget: &Budget) -> Result<(bool, String)> {
    let r = verify_segal_determinants(x, g, budget)?;
    let mu3 = mu3_determined(x, nerve, budget)?;
    let detail = format!(
        "Segal determinants {} = bisimplicial maps on p+q<=3 {} (exact); bijection: {}; maps on p+q<=4 {} restrict bijectively to p+q<=3 {}: {}",
        r.count,
        r.oracle_count,
        yes(r.bijection_verified),
        mu3.full_maps,
        mu3.truncated_maps,
        yes(mu3.bijective)
    );
    Ok((r.bijection_verified && r.count == r.oracle_count && mu3.bijective, detail))
}

/// The `simplex-counts` criterion: the nondegenerate counts of `x` are `expected` followed by
/// zeros.
pub fn check_simplex_counts(x: &SSet, expected: &[usize]) -> (bool, String) {
    let counts = x.nondegenerate_counts();
    let ok = counts.len() >= expected.len()
        && counts[..expected.len()] == *expected
        && counts[expected.len()..].iter().all(|&c| c == 0);
    (ok, format!("nondegenerate counts {counts:?}, expected {expected:?} then zeros (exact)"))
}

/// The `strictness` criterion, negative half: the pointed mapping space `circle -> nerve`.
pub fn check_strictness_negative(g: &Monoidal, n_max: usize, budget: &Budget) -> Result<(bool, String)> {
    let m = enriched_hom0(&circle(3), &nerve_two_group(g, 3).sset, n_max, budget)?;
    let cls = classify(&m.sset, 1)?;
    let levels: Vec<usize> = (0..=n_max).map(|k| m.sset.len(k)).collect();
    Ok((!cls.n_kan_groupoid, format!("levels {levels:?}; 1-Kan groupoid: {} (expected no)", yes(cls.n_kan_groupoid))))
}

/// The `strictness` criterion, positive half: the enriched hom of Segal pre-monoids.
pub fn check_strictness_positive(g: &Monoidal, n_max: usize, budget: &Budget) -> Result<(bool, String)> {
    let y = segal_nerve(g, &default_shape())?;
    let h = hom1(&vertical_circle(&default_shape())?, &y, n_max, budget)?;
    let ok = is_one_kan_groupoid(&h.sset)?;
    let levels: Vec<usize> = (0..=n_max).map(|k| h.sset.len(k)).collect();
    Ok((ok, format!("levels {levels:?}; 1-Kan groupoid: {} (expected yes)", yes(ok))))
}

/// The `fibrancy` criterion on one Segal nerve.
pub fn check_fibrancy(x: &BiSSet, budget: &Budget) -> Result<(bool, String)> {
    let r = segal_fibrancy_check(x, budget)?;
    let parts: Vec<String> =
        ["i", "ii", "iii", "iv"].iter().map(|c| format!("({c}) {}", yes(r.condition_passed(c)))).collect();
    let failing: Vec<&str> = r.restrictions.iter().filter(|c| !c.passed()).map(|c| c.label.as_str()).collect();
    let mut detail = format!("{}; {} restriction rows", parts.join(", "), r.restrictions.len());
    if !failing.is_empty() {
        detail.push_str(&format!("; failing: {}", failing.join(", ")));
    }
    Ok((r.passed(), detail))
}

/// The `coskeleton` criterion, first half: extending `x` coskeletally to `to_dim` agrees
/// with `direct` in every level, matched by face tuples, with the same
/// degeneracies.
pub fn check_coskeletal_extension(x: &SSet, direct: &SSet, to_dim: usize) -> Result<(bool, String)> {
    let ext = coskeletal_extend(x, to_dim)?;
    let low = x.dim();
    let mut ok = ext.dim() == direct.dim() && (0..=low).all(|k| ext.ids(k) == direct.ids(k));
    let mut matched = 0;
    for k in low + 1..=to_dim.min(direct.dim()) {
        // Lower levels are compared by id, so face tuples line up.
        let by_faces: HashMap<Vec<usize>, usize> = (0..direct.len(k)).map(|a| (direct.faces_of(k, a), a)).collect();
        let image: Option<Vec<usize>> = (0..ext.len(k)).map(|a| by_faces.get(&ext.faces_of(k, a)).copied()).collect();
        match image {
            Some(m) if ext.len(k) == direct.len(k) && by_faces.len() == direct.len(k) => {
                ok &=
                    (0..k).all(|j| (0..ext.len(k - 1)).all(|a| m[ext.degen(k - 1, j, a)] == direct.degen(k - 1, j, a)));
                matched += m.len();
            }
            _ => ok = false,
        }
    }
    let sizes: Vec<usize> = (0..=ext.dim()).map(|k| ext.len(k)).collect();
    Ok((ok, format!("extended levels {sizes:?}; {matched} simplices above level {low} matched by boundary with the direct nerve: {}", yes(ok))))
}

/// The `coskeleton` criterion, second half: on a weakly `n`-coskeletal input the quotient
/// map is an isomorphism.
pub fn check_csq_identity(x: &SSet, n: usize) -> Result<(bool, String)> {
    let weakly = classify(x, n)?.weakly_n_coskeletal;
    let (q, unit) = csq_prime_with_unit(x, n)?;
    let iso = unit.is_simplicial(x, &q) && unit.is_levelwise_bijective(&q);
    Ok((weakly && iso, format!("weakly {n}-coskeletal: {}; quotient map is an isomorphism: {}", yes(weakly), yes(iso))))
}

/// A fresh counter with the same cap: every subject gets the full budget.
fn fresh(budget: &Budget) -> Budget {
    Budget::new(budget.limit())
}

/// Runs a criterion over the canned inputs.
pub fn run(name: &str, budget: &Budget) -> Result<CriterionReport> {
    let (number, title) = criterion(name).ok_or_else(|| Error::Parse(format!("unknown criterion {name:?}")))?;
    let mut lines = Vec::new();
    match name {
        "groupoid-nerve" => {
            for (id, c) in canned_groupoids() {
                lines.push(line(id, check_groupoid_nerve(&c))?);
            }
        }
        "two-group-nerve" | "grho" | "loop-gamma" | "fibrancy" => {
            for (id, g) in canned_two_groups() {
                lines.push(two_group_line(name, &id, &g, &fresh(budget))?);
            }
        }
        "additive" => {
            for (xid, x) in canned_reduced_sources() {
                for (hid, h) in canned_coefficient_groups() {
                    lines.push(line(format!("{xid} -> {hid}"), check_additive(&x, &h, &fresh(budget)))?);
                }
            }
        }
        "determinants" => {
            for (xid, x) in canned_reduced_sources() {
                for (gid, g) in canned_two_groups() {
                    lines.push(line(format!("{xid} -> {gid}"), check_determinants(&x, &g, &fresh(budget)))?);
                }
            }
        }
        "segal-determinants" => {
            let sources = canned_segal_sources()?;
            for (gid, g) in canned_two_groups() {
                let nerve = segal_nerve(&g, &default_shape())?;
                for (xid, x) in &sources {
                    lines.push(line(
                        format!("{xid} -> {gid}"),
                        check_segal_determinants(x, &g, &nerve, &fresh(budget)),
                    )?);
                }
            }
        }
        "simplex-counts" => {
            let (ok, d) = check_simplex_counts(&square_mod_vertical(4), &[1, 3, 2]);
            lines.push(CheckLine { subject: "square_mod_vertical".into(), passed: ok, detail: d });
            let (ok, d) = check_simplex_counts(&suspension_square(2, 4), &[1, 6, 8, 3]);
            lines.push(CheckLine { subject: "prism_mod_vertical".into(), passed: ok, detail: d });
        }
        "strictness" => {
            let g = corpus::two_group("oneobj_z2").expect("canned");
            lines.push(line(
                "hom0(circle, nerve oneobj_z2)",
                check_strictness_negative(&g, STRICTNESS_LEVELS, &fresh(budget)),
            )?);
            lines.push(line(
                "hom1(segal_circle, segal nerve oneobj_z2)",
                check_strictness_positive(&g, STRICTNESS_LEVELS, &fresh(budget)),
            )?);
        }
        "coskeleton" => {
            let z2 = FiniteGroup::cyclic(2);
            lines.push(line(
                "tau2_nerve_z2 to level 3",
                check_coskeletal_extension(&nerve_group(&z2, 2), &nerve_group(&z2, 3), 3),
            )?);
            let g = corpus::two_group("oneobj_z2").expect("canned");
            lines.push(line("nerve_z2, n = 1", check_csq_identity(&nerve_group(&z2, 3), 1))?);
            lines.push(line(
                "indiscrete3 nerve, n = 1",
                check_csq_identity(&nerve_category(&FinCategory::indiscrete(&["a", "b", "c"]), 3), 1),
            )?);
            lines.push(line("nerve oneobj_z2, n = 2", check_csq_identity(&nerve_two_group(&g, 3).sset, 2))?);
        }
        _ => unreachable!("criterion table covers every name"),
    }
    Ok(CriterionReport { number, name: name.to_string(), title: title.to_string(), lines })
}

/// Levels of the enriched homs built for the strictness criterion.
pub const STRICTNESS_LEVELS: usize = 2;

fn two_group_line(name: &str, id: &str, g: &Monoidal, budget: &Budget) -> Result<CheckLine> {
    let outcome = match name {
        "two-group-nerve" => check_two_group_nerve(g, budget),
        "grho" => check_grho(g),
        "loop-gamma" => check_loop_gamma(g),
        _ => segal_nerve(g, &default_shape()).and_then(|y| check_fibrancy(&y, budget)),
    };
    line(id, outcome)
}

/// Runs a criterion on a user-supplied document instead of the canned
/// inputs. Returns `None` when the criterion does not take that kind of
/// input.
pub fn run_on(name: &str, doc: &Document, budget: &Budget) -> Result<Option<CriterionReport>> {
    let (number, title) = criterion(name).ok_or_else(|| Error::Parse(format!("unknown criterion {name:?}")))?;
    let mut lines = Vec::new();
    match (name, doc) {
        ("groupoid-nerve", Document::Category(c)) => lines.push(line("input", check_groupoid_nerve(c))?),
        ("two-group-nerve" | "grho" | "loop-gamma" | "fibrancy", Document::TwoGroup(g)) => {
            lines.push(two_group_line(name, "input", g, &fresh(budget))?)
        }
        ("additive", Document::SSet(x)) => {
            for (hid, h) in canned_coefficient_groups() {
                lines.push(line(format!("input -> {hid}"), check_additive(x, &h, &fresh(budget)))?);
            }
        }
        ("additive", Document::Group(h)) => {
            for (xid, x) in canned_reduced_sources() {
                lines.push(line(format!("{xid} -> input"), check_additive(&x, h, &fresh(budget)))?);
            }
        }
        ("determinants", Document::SSet(x)) => {
            for (gid, g) in canned_two_groups() {
                lines.push(line(format!("input -> {gid}"), check_determinants(x, &g, &fresh(budget)))?);
            }
        }
        ("determinants", Document::TwoGroup(g)) => {
            for (xid, x) in canned_reduced_sources() {
                lines.push(line(format!("{xid} -> input"), check_determinants(&x, g, &fresh(budget)))?);
            }
        }
        ("segal-determinants", Document::BiSSet(x)) => {
            for (gid, g) in canned_two_groups() {
                let nerve = segal_nerve(&g, &default_shape())?;
                lines.push(line(format!("input -> {gid}"), check_segal_determinants(x, &g, &nerve, &fresh(budget)))?);
            }
        }
        ("segal-determinants", Document::TwoGroup(g)) => {
            let nerve = segal_nerve(g, &default_shape())?;
            for (xid, x) in canned_segal_sources()? {
                lines.push(line(format!("{xid} -> input"), check_segal_determinants(&x, g, &nerve, &fresh(budget)))?);
            }
        }
        ("strictness", Document::TwoGroup(g)) => {
            lines.push(line(
                "hom0(circle, nerve input)",
                check_strictness_negative(g, STRICTNESS_LEVELS, &fresh(budget)),
            )?);
            lines.push(line(
                "hom1(segal_circle, segal nerve input)",
                check_strictness_positive(g, STRICTNESS_LEVELS, &fresh(budget)),
            )?);
        }
        ("fibrancy", Document::BiSSet(x)) => lines.push(line("input", check_fibrancy(x, &fresh(budget)))?),
        _ => return Ok(None),
    }
    Ok(Some(CriterionReport { number, name: name.to_string(), title: title.to_string(), lines }))
}
