//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;

use salemforge::golden::{golden_cases, GoldenTable};

fn main() -> ExitCode {
    let table = GoldenTable::reference();
    let mut failed = 0;
    for case in golden_cases() {
        let r = case.execute(&table);
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status} {:<4} {:<24} {:>9.1} ms  {}", r.id, r.name, r.elapsed_ms, r.detail);
        if !r.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria fail");
        ExitCode::FAILURE
    }
}
