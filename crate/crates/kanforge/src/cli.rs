//! The `kanforge` command line: argument parsing and command execution.
//!
//! [`run`] returns the exit code and both output streams instead of
//! printing, so the binary stays a thin wrapper and tests can drive it.
//! Exit codes: 0 when the check passed, 1 when it failed or the input lacks
//! a required property (not Kan, not reduced, ...), 2 for usage, parse and
//! budget errors.

use crate::bisimplicial::total_degree_shape;
use crate::budget::Budget;
use crate::corpus;
use crate::cosk::{coskeletal_extend, csq_prime};
use crate::determinants::{
    enumerate_additive, enumerate_determinants, enumerate_segal_determinants, pi0_det, segal_pi0,
};
use crate::determinants::{verify_additive, verify_determinants, verify_segal_determinants};
use crate::error::{Error, Result};
use crate::io::{canonical_json, parse_document, roundtrip, sset_to_json, Document, EnumerationJson, FORMAT};
use crate::kan::{boundary_map_status, classify, kan_report, kan_status, KanRow};
use crate::loops::{loop_space, LoopVariant};
use crate::nerve::{nerve_category, nerve_group};
use crate::nerve2::nerve_two_group;
use crate::pi::{pi, pi0};
use crate::segal::segal_nerve;
use crate::sset::SSet;
use crate::verify::{self, CriterionReport};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::ffi::OsString;

#[derive(Parser, Debug)]
#[command(
    name = "kanforge",
    version,
    about = "Finite simplicial sets, Kan conditions, 2-group nerves and determinants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Inputs are file paths, `-` for standard input, or `corpus:<id>`.
#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a document and check its identities.
    Validate {
        input: String,
        /// Print the canonical form after checking that it is stable.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Coskeletality, minimality and the Kan groupoid conditions relative to n.
    Classify {
        input: String,
        #[arg(long)]
        n: usize,
    },
    /// Horn filling. Exits 1 when some horn has no filler.
    Kan {
        input: String,
        /// Only horns of this dimension (Λ^{dim,k}).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// The weak coskeleton quotient at n, or a coskeletal extension.
    Cosq {
        input: String,
        #[arg(long)]
        n: Option<usize>,
        /// Extend a coskeletal input to this level instead.
        #[arg(long)]
        extend: Option<usize>,
    },
    /// Nerve of a group, category or 2-group.
    Nerve {
        input: String,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Segal nerve of a 2-group on bidegrees p + q <= total.
    SegalNerve {
        input: String,
        #[arg(long, default_value_t = 4)]
        total: usize,
    },
    /// Homotopy group π_m at a base vertex (π_0 lists components).
    Pi {
        input: String,
        #[arg(long)]
        m: usize,
        /// Base vertex id; defaults to the marked base, then the first vertex.
        #[arg(long)]
        base: Option<String>,
    },
    /// Loop space at a base vertex.
    Loop {
        input: String,
        #[arg(long)]
        base: Option<String>,
        /// Reduced loop space instead of the plain one.
        #[arg(long)]
        reduced: bool,
    },
    /// Determinants of X with values in a 2-group, checked against maps into
    /// the nerve.
    Det {
        /// A reduced simplicial set, or a Segal pre-monoid with --segal.
        x: String,
        /// A 2-group.
        g: String,
        #[arg(long)]
        segal: bool,
        /// Report path components instead of the list.
        #[arg(long)]
        pi0: bool,
    },
    /// Additive functions on X with values in a group, checked against maps
    /// into the group nerve.
    Add { x: String, h: String },
    /// Run one or all acceptance criteria.
    Verify {
        /// Criterion name; all when omitted.
        name: Option<String>,
        /// Run the criterion on this input instead of the canned ones.
        file: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// The canned corpus.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand, Debug)]
enum ExamplesAction {
    /// List corpus ids.
    List,
    /// Print a corpus entry as canonical JSON.
    Show { id: String },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn pass(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn check(passed: bool, stdout: String) -> Self {
        Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(message: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: message }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::pass(text),
                _ => Outcome::usage(text),
            };
        }
    };
    let budget = Budget::from_env();
    match execute(cli.command, &budget) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Structural failures of the input (not Kan, not a groupoid, ...) are
/// failed checks; everything else is a usage, parse or budget error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotCoskeletal(_)
        | Error::NotKan(_)
        | Error::NotSubcomplex(_)
        | Error::NotGroupoid(_)
        | Error::NotOneKanGroupoid(_)
        | Error::NotTwoKanGroupoid(_)
        | Error::NotTwoGroup(_)
        | Error::NotReduced(_) => 1,
        Error::DimensionOutOfRange { .. }
        | Error::BadHornIndex { .. }
        | Error::BudgetExceeded(_)
        | Error::Invalid(_)
        | Error::Parse(_) => 2,
    }
}

/// Reads a file, standard input (`-`) or a corpus entry (`corpus:<id>`).
fn load(input: &str) -> Result<Document> {
    if let Some(id) = input.strip_prefix("corpus:") {
        return corpus::get(id);
    }
    let text = if input == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(format!("stdin: {e}")))?
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Parse(format!("{input}: {e}")))?
    };
    parse_document(&text)
}

fn load_text(input: &str) -> Result<String> {
    if let Some(id) = input.strip_prefix("corpus:") {
        return corpus::get(id)?.to_canonical();
    }
    if input == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(format!("stdin: {e}")));
    }
    std::fs::read_to_string(input).map_err(|e| Error::Parse(format!("{input}: {e}")))
}

fn expect_sset(doc: Document) -> Result<SSet> {
    match doc {
        Document::SSet(x) => Ok(x),
        d => Err(Error::Parse(format!("expected a simplicial set, found a {}", d.kind()))),
    }
}

fn base_vertex(x: &SSet, base: Option<&str>) -> Result<usize> {
    match base {
        Some(id) => x.index(0, id).ok_or_else(|| Error::Parse(format!("no vertex {id:?}"))),
        None => Ok(x.basepoint().unwrap_or(0)),
    }
}

fn execute(command: Command, budget: &Budget) -> Result<Outcome> {
    match command {
        Command::Validate { input, roundtrip: rt } => validate(&input, rt),
        Command::Classify { input, n } => {
            let x = expect_sset(load(&input)?)?;
            let c = classify(&x, n)?;
            Ok(Outcome::check(c.n_kan_groupoid, canonical_json(&c)?))
        }
        Command::Kan { input, dim } => kan(&input, dim),
        Command::Cosq { input, n, extend } => {
            let x = expect_sset(load(&input)?)?;
            let out = match (n, extend) {
                (Some(n), None) => csq_prime(&x, n)?,
                (None, Some(d)) => coskeletal_extend(&x, d)?,
                _ => return Err(Error::Parse("give exactly one of --n and --extend".into())),
            };
            Ok(Outcome::pass(canonical_json(&sset_to_json(&out))?))
        }
        Command::Nerve { input, dim } => {
            let nerve = match load(&input)? {
                Document::Group(g) => nerve_group(&g, dim),
                Document::Category(c) => nerve_category(&c, dim),
                Document::TwoGroup(g) => nerve_two_group(&g, dim).sset,
                d => return Err(Error::Parse(format!("no nerve for a {}", d.kind()))),
            };
            Ok(Outcome::pass(canonical_json(&sset_to_json(&nerve))?))
        }
        Command::SegalNerve { input, total } => match load(&input)? {
            Document::TwoGroup(g) => {
                Ok(Outcome::pass(Document::BiSSet(segal_nerve(&g, &total_degree_shape(total))?).to_canonical()?))
            }
            d => Err(Error::Parse(format!("expected a 2-group, found a {}", d.kind()))),
        },
        Command::Pi { input, m, base } => {
            let x = expect_sset(load(&input)?)?;
            let out = if m == 0 {
                json!({ "format": FORMAT, "m": 0, "components": pi0(&x) })
            } else {
                let b = base_vertex(&x, base.as_deref())?;
                let h = pi(&x, m, b)?;
                json!({
                    "format": FORMAT,
                    "m": m,
                    "base": x.id(0, b),
                    "order": h.group.order(),
                    "abelian": h.group.is_abelian(),
                    "group": h.group.to_json(),
                    "kan_checked_through": h.kan_checked_through,
                })
            };
            Ok(Outcome::pass(canonical_json(&out)?))
        }
        Command::Loop { input, base, reduced } => {
            let x = expect_sset(load(&input)?)?;
            let b = base_vertex(&x, base.as_deref())?;
            let variant = if reduced { LoopVariant::Reduced } else { LoopVariant::Plain };
            Ok(Outcome::pass(canonical_json(&sset_to_json(&loop_space(&x, b, variant)?))?))
        }
        Command::Det { x, g, segal, pi0 } => det(&x, &g, segal, pi0, budget),
        Command::Add { x, h } => {
            let x = expect_sset(load(&x)?)?;
            let h = match load(&h)? {
                Document::Group(h) => h,
                d => return Err(Error::Parse(format!("expected a group, found a {}", d.kind()))),
            };
            let rep = verify_additive(&x, &h, budget)?;
            let items = enumerate_additive(&x, &h, &budget.scope())?
                .iter()
                .map(|f| Value::Object(by_id(x.ids(1), f.values.iter().map(|&v| h.name(v).to_string()))))
                .collect();
            let out = EnumerationJson {
                format: FORMAT,
                count: rep.count,
                items,
                oracle_count: rep.oracle_count,
                bijection_verified: rep.bijection_verified,
            };
            Ok(Outcome::check(rep.bijection_verified, canonical_json(&out)?))
        }
        Command::Verify { name, file, json } => run_verify(name.as_deref(), file.as_deref(), json, budget),
        Command::Examples { action } => match action {
            ExamplesAction::List => {
                let mut out = String::new();
                for (id, about) in corpus::ENTRIES {
                    out.push_str(&format!("{id:<28} {about}\n"));
                }
                Ok(Outcome::pass(out))
            }
            ExamplesAction::Show { id } => Ok(Outcome::pass(corpus::get(&id)?.to_canonical()?)),
        },
    }
}

fn by_id(ids: &[String], values: impl Iterator<Item = String>) -> Map<String, Value> {
    ids.iter().cloned().zip(values.map(Value::String)).collect()
}

#[derive(Serialize)]
struct ValidateJson {
    format: u32,
    kind: String,
    valid: bool,
    violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    roundtrip_stable: Option<bool>,
}

fn validate(input: &str, rt: bool) -> Result<Outcome> {
    let text = load_text(input)?;
    let doc = parse_document(&text)?;
    let mut violations = Vec::new();
    match &doc {
        Document::SSet(x) => {
            for v in x.validate().violations {
                violations.push(format!("{} at level {} on {}", v.identity, v.level, v.simplex));
            }
            if let Some(c) = x.coskeletal_at() {
                for m in c..x.dim() {
                    let s = boundary_map_status(x, m);
                    if !(s.injective && s.surjective) {
                        violations.push(format!(
                            "marked coskeletal at {c}, but the boundary map on level {} is not bijective",
                            m + 1
                        ));
                    }
                }
            }
        }
        Document::BiSSet(x) => violations.extend(x.validate()),
        // Groups, categories and 2-groups are checked while parsing.
        _ => {}
    }
    let stable = if rt { Some(roundtrip(&text)?.is_some()) } else { None };
    let valid = violations.is_empty();
    if rt && valid && stable == Some(true) {
        return Ok(Outcome::pass(doc.to_canonical()?));
    }
    let report =
        ValidateJson { format: FORMAT, kind: doc.kind().to_string(), valid, violations, roundtrip_stable: stable };
    Ok(Outcome::check(valid && stable != Some(false), canonical_json(&report)?))
}

#[derive(Serialize)]
struct HornJson {
    horn: String,
    fillable: bool,
    unique: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    unfilled: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    collision: Option<(String, String)>,
}

fn kan(input: &str, dim: Option<usize>) -> Result<Outcome> {
    let x = expect_sset(load(input)?)?;
    let rows: Vec<KanRow> = match dim {
        Some(0) => return Err(Error::Parse("horns start in dimension 1".into())),
        Some(n) => vec![kan_status(&x, n - 1)?],
        None => kan_report(&x)?,
    };
    let horns: Vec<HornJson> = rows
        .iter()
        .flat_map(|r| {
            r.horns.iter().map(move |h| HornJson {
                horn: format!("Λ^{{{},{}}}", r.m + 1, h.k),
                fillable: h.surjective,
                unique: h.injective,
                unfilled: h.unfilled.clone(),
                collision: h.collision.clone(),
            })
        })
        .collect();
    let passed = horns.iter().all(|h| h.fillable);
    Ok(Outcome::check(passed, canonical_json(&json!({ "format": FORMAT, "kan": passed, "horns": horns }))?))
}

fn det(x: &str, g: &str, segal: bool, want_pi0: bool, budget: &Budget) -> Result<Outcome> {
    let g = match load(g)? {
        Document::TwoGroup(g) => g,
        d => return Err(Error::Parse(format!("expected a 2-group, found a {}", d.kind()))),
    };
    let c = g.cat();
    let obj = |a: usize| c.objects()[a].clone();
    let mor = |f: usize| c.morphisms()[f].id.clone();
    if segal {
        let x = match load(x)? {
            Document::BiSSet(x) => x,
            d => return Err(Error::Parse(format!("expected a bisimplicial set, found a {}", d.kind()))),
        };
        if want_pi0 {
            let p = segal_pi0(&x, &g, budget)?;
            let out = json!({
                "format": FORMAT,
                "components": p.classes,
                "oracle_components": p.oracle_count,
                "symmetric": p.symmetric,
                "matches": p.matches,
            });
            return Ok(Outcome::check(p.matches, canonical_json(&out)?));
        }
        let rep = verify_segal_determinants(&x, &g, budget)?;
        let items = enumerate_segal_determinants(&x, &g, &budget.scope())?
            .iter()
            .map(|d| {
                json!({
                    "D0": by_id(x.ids(0, 1), d.d.levels[0].iter().map(|&a| obj(a))),
                    "D1": by_id(x.ids(1, 1), d.d.levels[1].iter().map(|&f| mor(f))),
                    "T": by_id(x.ids(0, 2), d.t.iter().map(|&f| mor(f))),
                })
            })
            .collect();
        let out = EnumerationJson {
            format: FORMAT,
            count: rep.count,
            items,
            oracle_count: rep.oracle_count,
            bijection_verified: rep.bijection_verified,
        };
        return Ok(Outcome::check(rep.bijection_verified, canonical_json(&out)?));
    }
    let x = expect_sset(load(x)?)?;
    if want_pi0 {
        let rep = verify_determinants(&x, &g, budget)?;
        let comps = pi0_det(&x, &g, &budget.scope())?;
        let out = json!({
            "format": FORMAT,
            "components": comps.classes,
            "oracle_components": rep.oracle_pi0_count,
            "symmetric": comps.symmetric,
            "matches": rep.pi0_matches,
        });
        return Ok(Outcome::check(rep.passed(), canonical_json(&out)?));
    }
    let rep = verify_determinants(&x, &g, budget)?;
    let items = enumerate_determinants(&x, &g, &budget.scope())?
        .iter()
        .map(|d| json!({ "D": by_id(x.ids(1), d.d.iter().map(|&a| obj(a))), "T": by_id(x.ids(2), d.t.iter().map(|&f| mor(f))) }))
        .collect();
    let out = EnumerationJson {
        format: FORMAT,
        count: rep.maps.count,
        items,
        oracle_count: rep.maps.oracle_count,
        bijection_verified: rep.maps.bijection_verified,
    };
    Ok(Outcome::check(rep.maps.bijection_verified && rep.forcing, canonical_json(&out)?))
}

/// One `PASS`/`FAIL` header per criterion, then its lines indented.
pub fn render_report(r: &CriterionReport) -> String {
    let mut out = format!("{} {:>2} {}: {}\n", if r.passed() { "PASS" } else { "FAIL" }, r.number, r.name, r.title);
    for l in &r.lines {
        out.push_str(&format!("     {} {}: {}\n", if l.passed { "ok  " } else { "FAIL" }, l.subject, l.detail));
    }
    out
}

fn run_verify(name: Option<&str>, file: Option<&str>, as_json: bool, budget: &Budget) -> Result<Outcome> {
    let reports = match (name, file) {
        (None, _) => verify::CRITERIA.iter().map(|(n, _)| verify::run(n, budget)).collect::<Result<Vec<_>>>()?,
        (Some(n), None) => vec![verify::run(n, budget)?],
        (Some(n), Some(f)) => {
            let doc = load(f)?;
            let kind = doc.kind();
            vec![verify::run_on(n, &doc, budget)?
                .ok_or_else(|| Error::Parse(format!("criterion {n} does not take a {kind} as input")))?]
        }
    };
    let passed = reports.iter().all(|r| r.passed());
    let out = if as_json {
        let list: Vec<Value> = reports
            .iter()
            .map(|r| {
                let mut v = serde_json::to_value(r).expect("report serializes");
                v["passed"] = Value::Bool(r.passed());
                v
            })
            .collect();
        canonical_json(&json!({ "format": FORMAT, "passed": passed, "criteria": list }))?
    } else {
        reports.iter().map(render_report).collect()
    };
    Ok(Outcome::check(passed, out))
}
