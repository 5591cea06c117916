//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;

use nakarig::verify::{run_criterion, VerifyConfig, CRITERIA};

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let mut failed = 0;
    for &(id, title) in &CRITERIA {
        match run_criterion(id, &cfg) {
            Ok(outcome) => {
                failed += usize::from(!outcome.pass);
                println!("{outcome}");
            }
            Err(e) => {
                failed += 1;
                println!("[FAIL] {id:>2} {title} (error: {e})");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
