//! Runs every acceptance criterion and prints the report.

use kanforge::cli::render_report;
use kanforge::verify::{run, CRITERIA};
use kanforge::{Budget, Result};

pub fn run_example() -> Result<()> {
    let budget = Budget::from_env();
    for (name, _) in CRITERIA {
        print!("{}", render_report(&run(name, &budget)?));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
