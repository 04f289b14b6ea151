//! Acceptance suite: runs every criterion at its stated tolerance and
//! prints one pass/fail line per criterion.

use ringkt_cli::selftest;

#[test]
fn acceptance_criteria() {
    let results = selftest::run_all_with(|r| {
        println!(
            "criterion {:2} [{}] {:<28} ({:.2}s)  {}",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.seconds,
            r.detail
        );
    });
    assert_eq!(results.len(), 11, "all eleven criteria must run");
    let failures: Vec<String> = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("criterion {} ({}): {}", r.id, r.name, r.detail))
        .collect();
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}
