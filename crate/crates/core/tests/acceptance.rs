//! One line per acceptance criterion. Tolerances are exact throughout:
//! every comparison is structural equality over ℚ(i, √2, √3). Sampled
//! checks use seed 1 and 100 samples (50 Gram points per sphere).

use std::process::ExitCode;
use std::time::Instant;

use spinbits::verify::{criterion, VerifyOptions, TITLES};

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let mut failed = 0;
    for id in 1..=TITLES.len() {
        let start = Instant::now();
        let c = criterion(id, &opts);
        let elapsed = start.elapsed().as_secs_f64();
        let total = c.report.total();
        if c.passed() {
            println!("PASS  criterion {id}: {} ({total} checks, {elapsed:.1}s)", c.title);
        } else {
            failed += 1;
            let names: Vec<&str> = c.report.failures().map(|f| f.name.as_str()).collect();
            println!(
                "FAIL  criterion {id}: {} ({} of {total} checks failed: {}; {elapsed:.1}s)",
                c.title,
                c.report.fail,
                names.join(" | ")
            );
        }
    }
    println!("{} passed, {failed} failed", TITLES.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
