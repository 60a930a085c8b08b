//! Prints one PASS/FAIL line per acceptance criterion.
//! `PETERSON_VERIFY_DEPTH` lowers or raises the rank limits.

use std::process::ExitCode;

use peterson_core::verify::{run_criterion, Limits, CRITERIA};

fn main() -> ExitCode {
    let limits = match std::env::var("PETERSON_VERIFY_DEPTH") {
        Ok(d) => match d.parse() {
            Ok(d) => Limits::depth(d),
            Err(_) => {
                eprintln!("PETERSON_VERIFY_DEPTH must be a number, got {d:?}");
                return ExitCode::FAILURE;
            }
        },
        Err(_) => Limits::default(),
    };
    let mut failed = 0;
    for (id, _) in CRITERIA {
        let r = run_criterion(id, &limits);
        println!("{r}");
        if !r.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
