//! Runs the built-in verification suite — every distribution theorem,
//! recurrence, bijection contract, and encoding identity — over a
//! small parameter range and prints one report line per check.
//!
//! Run with: `cargo run --example verify_identities`

use rowinc::verify::{run_checks, CheckKind};

fn main() {
    let reports = run_checks(CheckKind::All, Some(5));
    for report in &reports {
        println!("{}", report.to_text());
    }
    let total: u64 = reports.iter().map(|r| r.cases).sum();
    let verdict = if reports.iter().all(|r| r.passed) {
        "all checks passed"
    } else {
        "FAILURES FOUND"
    };
    println!("\n{} checks, {} cases compared: {}", reports.len(), total, verdict);
    std::process::exit(if reports.iter().all(|r| r.passed) { 0 } else { 1 });
}
