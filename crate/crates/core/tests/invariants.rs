//! Per-step ledger, strand-order and reconstruction assertions over every
//! insertion and inverse run in S4.

use schubert_core::par::Execution;
use schubert_core::verify::{summarize, sweep, VerifyConfig};

#[test]
fn step_assertions_hold_on_s4() {
    let config = VerifyConfig {
        lemma_checks: true,
        execution: Execution::Parallel,
    };
    let reports = sweep(4, 3, 3, config);
    if let Some(bad) = reports.iter().find(|r| !r.passed()) {
        panic!("{bad}");
    }
    let summary = summarize(&reports);
    assert_eq!(summary.reports, 24 * (1 + 2 * 9));
    assert_eq!(summary.failed, 0);
}
