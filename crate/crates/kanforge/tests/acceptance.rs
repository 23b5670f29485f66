//! The acceptance gate: every criterion over its canned inputs, plus frozen
//! values checked independently of the report. Prints one PASS/FAIL line
//! per criterion. Run with `--nocapture` to see the report.

use kanforge::budget::Budget;
use kanforge::corpus;
use kanforge::determinants::{enriched_hom0, pi0_det, verify_additive};
use kanforge::nerve2::nerve_two_group;
use kanforge::segal::{default_shape, hom1, segal_nerve, vertical_circle};
use kanforge::standard::{circle, square_mod_vertical, suspension_square};
use kanforge::twogroup::{pi0, pi1};
use kanforge::verify::{self, canned_coefficient_groups, canned_reduced_sources, CriterionReport, CRITERIA};
use kanforge::Result;

/// Tolerance wording printed with each criterion. Every comparison is on
/// finite sets, so all are exact.
const TOLERANCE: &str = "exact: equal counts, bijections and isomorphisms, no slack";

/// Number of subjects each criterion must examine.
const SUBJECTS: [usize; 11] = [4, 8, 8, 8, 9, 24, 24, 2, 2, 8, 4];

/// `(determinants, components)` by reduced source and canned 2-group.
const DETERMINANTS: [[(usize, usize); 8]; 3] = [
    [(1, 1), (2, 2), (3, 3), (4, 4), (6, 6), (1, 1), (1, 1), (2, 2)],
    [(1, 1), (4, 4), (9, 9), (16, 16), (36, 36), (2, 1), (3, 1), (8, 4)],
    [(1, 1), (2, 2), (3, 3), (4, 4), (6, 6), (4, 1), (9, 1), (8, 2)],
];

/// `(|π₀|, |π₁|)` of the canned 2-groups.
const HOMOTOPY: [(usize, usize); 8] = [(1, 1), (2, 1), (3, 1), (4, 1), (6, 1), (1, 2), (1, 3), (2, 2)];

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T, out: &mut Vec<String>) {
    if got != want {
        out.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

/// Frozen values for one criterion, recomputed outside the report.
fn frozen(name: &str, budget: &Budget) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    match name {
        "grho" => {
            for (k, (id, g)) in verify::canned_two_groups().iter().enumerate() {
                let got = (pi0(g)?.0.order(), pi1(g)?.0.order());
                expect(&format!("{id} homotopy orders"), got, HOMOTOPY[k], &mut bad);
            }
        }
        "additive" => {
            let exponents = [1u32, 2, 1];
            for ((xid, x), e) in canned_reduced_sources().iter().zip(exponents) {
                for (hid, h) in canned_coefficient_groups() {
                    let r = verify_additive(x, &h, &budget.scope())?;
                    expect(&format!("{xid} -> {hid} count"), r.count, h.order().pow(e), &mut bad);
                }
            }
        }
        "determinants" => {
            for ((xid, x), row) in canned_reduced_sources().iter().zip(DETERMINANTS) {
                for ((gid, g), want) in verify::canned_two_groups().iter().zip(row) {
                    let c = pi0_det(x, g, &budget.scope())?;
                    expect(&format!("{xid} -> {gid}"), (c.determinants.len(), c.classes.len()), want, &mut bad);
                }
            }
        }
        "simplex-counts" => {
            expect("square_mod_vertical", square_mod_vertical(4).nondegenerate_counts(), vec![1, 3, 2, 0, 0], &mut bad);
            expect("prism_mod_vertical", suspension_square(2, 4).nondegenerate_counts(), vec![1, 6, 8, 3, 0], &mut bad);
        }
        "strictness" => {
            let g = corpus::two_group("oneobj_z2").expect("canned");
            let n = verify::STRICTNESS_LEVELS;
            let m = enriched_hom0(&circle(3), &nerve_two_group(&g, 3).sset, n, &budget.scope())?;
            expect("hom0 levels", (0..=n).map(|k| m.sset.len(k)).collect(), vec![1, 4, 32], &mut bad);
            let y = segal_nerve(&g, &default_shape())?;
            let h = hom1(&vertical_circle(&default_shape())?, &y, n, &budget.scope())?;
            expect("hom1 levels", (0..=n).map(|k| h.sset.len(k)).collect(), vec![1, 2, 4], &mut bad);
        }
        _ => {}
    }
    Ok(bad)
}

fn evaluate(k: usize, name: &str, budget: &Budget) -> (bool, String) {
    let report: Result<CriterionReport> = verify::run(name, budget);
    let mut text = String::new();
    let mut ok = match &report {
        Ok(r) => {
            for l in &r.lines {
                text.push_str(&format!(
                    "      {} {}: {}\n",
                    if l.passed { "ok  " } else { "FAIL" },
                    l.subject,
                    l.detail
                ));
            }
            if r.lines.len() != SUBJECTS[k] {
                text.push_str(&format!("      FAIL examined {} subjects, expected {}\n", r.lines.len(), SUBJECTS[k]));
            }
            r.passed() && r.lines.len() == SUBJECTS[k]
        }
        Err(e) => {
            text.push_str(&format!("      FAIL error: {e}\n"));
            false
        }
    };
    match frozen(name, budget) {
        Ok(bad) => {
            for b in &bad {
                text.push_str(&format!("      FAIL frozen value {b}\n"));
            }
            ok &= bad.is_empty();
        }
        Err(e) => {
            text.push_str(&format!("      FAIL frozen values: error: {e}\n"));
            ok = false;
        }
    }
    (ok, text)
}

#[test]
fn acceptance() {
    let budget = Budget::from_env();
    println!("budget per enumeration: {}", budget.limit());
    let mut failed = Vec::new();
    for (k, (name, title)) in CRITERIA.iter().enumerate() {
        let (ok, text) = evaluate(k, name, &budget);
        println!("{} {:>2} {name}: {title} [{TOLERANCE}]", if ok { "PASS" } else { "FAIL" }, k + 1);
        print!("{text}");
        if !ok {
            failed.push(*name);
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed.len(), CRITERIA.len());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
