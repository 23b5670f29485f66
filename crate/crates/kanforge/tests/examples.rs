//! Runs every example in the examples directory as a test.

#[path = "../examples/acceptance_report.rs"]
mod acceptance_report;
#[path = "../examples/coskeleta.rs"]
mod coskeleta;
#[path = "../examples/determinants.rs"]
mod determinants;
#[path = "../examples/homotopy_and_loops.rs"]
mod homotopy_and_loops;
#[path = "../examples/kan_conditions.rs"]
mod kan_conditions;
#[path = "../examples/segal_determinants.rs"]
mod segal_determinants;
#[path = "../examples/segal_nerves.rs"]
mod segal_nerves;
#[path = "../examples/serialization.rs"]
mod serialization;
#[path = "../examples/simplicial_sets.rs"]
mod simplicial_sets;
#[path = "../examples/two_groups.rs"]
mod two_groups;

#[test]
fn example_acceptance_report() {
    acceptance_report::run_example().unwrap();
}

#[test]
fn example_coskeleta() {
    coskeleta::run_example().unwrap();
}

#[test]
fn example_determinants() {
    determinants::run_example().unwrap();
}

#[test]
fn example_homotopy_and_loops() {
    homotopy_and_loops::run_example().unwrap();
}

#[test]
fn example_kan_conditions() {
    kan_conditions::run_example().unwrap();
}

#[test]
fn example_segal_determinants() {
    segal_determinants::run_example().unwrap();
}

#[test]
fn example_segal_nerves() {
    segal_nerves::run_example().unwrap();
}

#[test]
fn example_serialization() {
    serialization::run_example().unwrap();
}

#[test]
fn example_simplicial_sets() {
    simplicial_sets::run_example().unwrap();
}

#[test]
fn example_two_groups() {
    two_groups::run_example().unwrap();
}
