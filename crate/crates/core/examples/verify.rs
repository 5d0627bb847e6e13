//! Runs the fast comparison suites against the published values.
//! Run: cargo run --release --example verify

use lie_psi::verify::{run_suite, Status, Suite};

fn main() {
    let checks = run_suite(Suite::All, false);
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
    println!("{} checks, {failed} failed", checks.len());
}
