//! One line per acceptance criterion. Set `SCHURMF_SKIP_FAMILY=1` to check
//! the bundled small-plethysm family without recomputing it.
//!
//! Runs without the libtest harness so the table is printed on every run.

use std::process::ExitCode;

use schurmf::verify::{run_criterion, VerifyOptions, CRITERIA};

fn main() -> ExitCode {
    let opts = VerifyOptions {
        recompute_family: std::env::var_os("SCHURMF_SKIP_FAMILY").is_none(),
        ..VerifyOptions::default()
    };
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        let r = run_criterion(id, &opts);
        println!("{r}");
        if !r.passed {
            failed.push(r.id);
        }
    }
    if failed.is_empty() {
        println!(
            "acceptance: {} of {} criteria passed",
            CRITERIA.len(),
            CRITERIA.len()
        );
        ExitCode::SUCCESS
    } else {
        println!("acceptance: criteria failed: {failed:?}");
        ExitCode::FAILURE
    }
}
