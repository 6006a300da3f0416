//! The acceptance suite as a test target: every criterion prints one
//! pass/fail line and the run fails if any criterion does.

use tesler::acceptance::run_all;

#[test]
fn acceptance_criteria() {
    let results = run_all();
    let mut all_passed = true;
    for result in &results {
        println!(
            "[{}] criterion {:>2}: {} ({})",
            if result.passed { "PASS" } else { "FAIL" },
            result.id,
            result.name,
            result.details
        );
        all_passed &= result.passed;
    }
    assert!(all_passed, "one or more acceptance criteria failed");
}
