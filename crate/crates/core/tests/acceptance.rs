//! Acceptance criteria: one PASS/FAIL line each. Exits nonzero if any fails.
//!
//! `PLCOMB_POINTS` overrides the sample size of the property suite
//! (default 10000 per rank).

use std::process::ExitCode;

fn main() -> ExitCode {
    let points = std::env::var("PLCOMB_POINTS").ok().and_then(|v| v.parse().ok()).unwrap_or(10_000);
    let checks = plcomb::verify::acceptance(points);
    for c in &checks {
        println!("{}", c.line());
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
