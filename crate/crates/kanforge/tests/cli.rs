use kanforge::cli::{run, Outcome};
use serde_json::Value;
use std::process::Command;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("kanforge").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn validate_accepts_corpus_entries() {
    for id in ["circle", "group_s3", "indiscrete2", "twogroup_product", "segal_circle", "tau2_nerve_z2"] {
        let out = cli(&["validate", &format!("corpus:{id}")]);
        assert_eq!(out.code, 0, "{id}: {}", out.stderr);
        assert_eq!(json(&out)["valid"], Value::Bool(true), "{id}");
    }
}

#[test]
fn validate_roundtrip_prints_canonical_text() {
    let out = cli(&["validate", "corpus:circle", "--roundtrip"]);
    assert_eq!(out.code, 0);
    let shown = cli(&["examples", "show", "circle"]);
    assert_eq!(out.stdout.trim(), shown.stdout.trim());
}

#[test]
fn validate_reads_files() {
    let path = std::env::temp_dir().join(format!("kanforge-cli-{}.json", std::process::id()));
    std::fs::write(&path, cli(&["examples", "show", "delta2"]).stdout).unwrap();
    let out = cli(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    std::fs::write(&path, "{\"levels\": 3}").unwrap();
    let bad = cli(&["validate", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(bad.code, 2);
}

#[test]
fn missing_input_is_a_usage_error() {
    assert_eq!(cli(&["validate", "/nonexistent/kanforge.json"]).code, 2);
    assert_eq!(cli(&["validate", "corpus:nothing"]).code, 2);
}

#[test]
fn classify_exit_codes() {
    assert_eq!(cli(&["classify", "corpus:nerve_z2", "--n", "1"]).code, 0);
    let out = cli(&["classify", "corpus:circle", "--n", "1"]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out)["n_kan_groupoid"], Value::Bool(false));
    assert_eq!(cli(&["classify", "corpus:nerve_twogroup_oneobj_z2", "--n", "2"]).code, 0);
}

#[test]
fn kan_reports_the_unfilled_horns_of_delta1() {
    let out = cli(&["kan", "corpus:delta1", "--dim", "2"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("Λ^{2,0}"));
    let v = json(&out);
    let horns = v["horns"].as_array().unwrap();
    let fillable: Vec<bool> = horns.iter().map(|h| h["fillable"].as_bool().unwrap()).collect();
    assert_eq!(fillable, vec![false, true, false]);
    assert_eq!(horns[0]["unfilled"], serde_json::json!(["00", "01"]));
    assert_eq!(cli(&["kan", "corpus:nerve_z2", "--dim", "2"]).code, 0);
}

#[test]
fn kan_rejects_a_dimension_beyond_the_data() {
    assert_eq!(cli(&["kan", "corpus:delta1", "--dim", "7"]).code, 2);
}

#[test]
fn cosq_truncates_and_extends() {
    let out = cli(&["cosq", "corpus:tau2_nerve_z2", "--extend", "3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(json(&out)["levels"][3].as_array().unwrap().len(), 8);
    assert_eq!(cli(&["cosq", "corpus:nerve_z2", "--n", "1"]).code, 0);
}

#[test]
fn nerves_from_the_command_line() {
    let out = cli(&["nerve", "corpus:group_z3", "--dim", "3"]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out)["levels"][3].as_array().unwrap().len(), 27);
    let two = cli(&["nerve", "corpus:twogroup_oneobj_z3", "--dim", "3"]);
    assert_eq!(json(&two)["levels"][3].as_array().unwrap().len(), 27);
    let segal = cli(&["segal-nerve", "corpus:twogroup_oneobj_z2"]);
    assert_eq!(segal.code, 0, "{}", segal.stderr);
    assert!(json(&segal).get("P").is_some());
}

#[test]
fn homotopy_groups_from_the_command_line() {
    let out = cli(&["pi", "corpus:nerve_twogroup_oneobj_z2", "--m", "2"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(json(&out)["order"], Value::from(2));
    let comps = cli(&["pi", "corpus:boundary_delta2", "--m", "0"]);
    assert_eq!(comps.code, 0);
    assert_eq!(cli(&["pi", "corpus:circle", "--m", "1"]).code, 1);
}

#[test]
fn loop_space_of_the_circle() {
    let out = cli(&["loop", "corpus:circle"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(json(&out)["levels"][0], serde_json::json!(["00", "01"]));
    let reduced = cli(&["loop", "corpus:circle", "--reduced"]);
    assert_eq!(json(&reduced)["levels"][0], serde_json::json!(["00"]));
}

#[test]
fn determinants_from_the_command_line() {
    let out = cli(&["det", "corpus:square_mod_vertical", "corpus:twogroup_oneobj_z2"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["count"], Value::from(4));
    assert_eq!(v["oracle_count"], Value::from(4));
    assert_eq!(v["bijection_verified"], Value::Bool(true));
    let pi0 = cli(&["det", "corpus:square_mod_vertical", "corpus:twogroup_oneobj_z2", "--pi0"]);
    assert_eq!(json(&pi0)["components"].as_array().unwrap().len(), 1);
    let segal = cli(&["det", "corpus:segal_circle", "corpus:twogroup_disc_z3", "--segal"]);
    assert_eq!(segal.code, 0, "{}", segal.stderr);
    assert_eq!(json(&segal)["count"], Value::from(3));
}

#[test]
fn determinants_need_a_reduced_source() {
    assert_eq!(cli(&["det", "corpus:delta2", "corpus:twogroup_disc_z2"]).code, 1);
}

#[test]
fn additive_functions_from_the_command_line() {
    let out = cli(&["add", "corpus:delta2_mod_vertices", "corpus:group_s3"]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out)["count"], Value::from(36));
}

#[test]
fn verify_single_criteria() {
    let out = cli(&["verify", "groupoid-nerve"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.starts_with("PASS  1 groupoid-nerve"));
    let j = cli(&["verify", "simplex-counts", "--json"]);
    assert_eq!(json(&j)["criteria"][0]["name"], Value::from("simplex-counts"));
    assert_eq!(cli(&["verify", "no-such-criterion"]).code, 2);
}

#[test]
fn verify_on_a_supplied_input() {
    let path = std::env::temp_dir().join(format!("kanforge-verify-{}.json", std::process::id()));
    std::fs::write(&path, cli(&["examples", "show", "twogroup_disc_z2"]).stdout).unwrap();
    let out = cli(&["verify", "grho", path.to_str().unwrap()]);
    let wrong_kind = cli(&["verify", "groupoid-nerve", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(wrong_kind.code, 2);
}

#[test]
fn examples_listing() {
    let out = cli(&["examples", "list"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), kanforge::corpus::ENTRIES.len());
    assert_eq!(cli(&["examples", "show", "nope"]).code, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["classify", "corpus:circle"]).code, 2);
    assert_eq!(cli(&[]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
    assert_eq!(cli(&["--version"]).code, 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["det", "corpus:delta2_mod_vertices", "corpus:twogroup_product"];
    assert_eq!(cli(&args), cli(&args));
}

#[test]
fn binary_honours_the_budget_variable() {
    let bin = env!("CARGO_BIN_EXE_kanforge");
    let starved = Command::new(bin)
        .args(["det", "corpus:delta2_mod_vertices", "corpus:twogroup_disc_s3"])
        .env("KANFORGE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(starved.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&starved.stderr).contains("budget"));
    let fed = Command::new(bin)
        .args(["det", "corpus:circle", "corpus:twogroup_disc_z2"])
        .env_remove("KANFORGE_BUDGET")
        .output()
        .unwrap();
    assert_eq!(fed.status.code(), Some(0));
}
