//! End-to-end acceptance gate: every release criterion measured on the
//! default algebra roster with pinned seeds, counts, and tolerances.

use jordan_cone::{default_algebras, run_suite, SuiteConfig};

#[test]
fn acceptance_criteria() {
    let cfg = SuiteConfig { seed: 7, samples: 200, tol_scale: 1.0 };
    let report = run_suite("acceptance", &default_algebras(), &cfg).expect("known suite");
    assert_eq!(report.properties.len(), 11);
    let mut failed = 0usize;
    for (i, rec) in report.properties.iter().enumerate() {
        let verdict = if rec.pass { "pass" } else { "FAIL" };
        println!(
            "criterion {:>2}/11 [{verdict}] {:<38} samples={:<7} residual={:.3e} tolerance={:.1e}",
            i + 1,
            rec.name,
            rec.samples,
            rec.max_residual,
            rec.tolerance,
        );
        if !rec.pass {
            failed += 1;
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
    assert!(report.pass);
}
