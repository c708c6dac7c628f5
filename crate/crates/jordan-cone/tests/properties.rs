//! Module property suites over the full default roster.

use jordan_cone::{default_algebras, run_suite, SuiteConfig};

fn run(suite: &str) {
    let cfg = SuiteConfig { seed: 7, samples: 200, tol_scale: 1.0 };
    let report = run_suite(suite, &default_algebras(), &cfg).expect("known suite");
    for rec in &report.properties {
        println!(
            "[{}] {:<42} samples={:<7} residual={:.3e} tolerance={:.1e}",
            if rec.pass { "pass" } else { "FAIL" },
            rec.name,
            rec.samples,
            rec.max_residual,
            rec.tolerance,
        );
        assert!(rec.pass, "{}: residual {} > {}", rec.name, rec.max_residual, rec.tolerance);
    }
    assert!(report.pass);
}

#[test]
fn algebra_suite_passes() {
    run("algebra");
}

#[test]
fn spectral_suite_passes() {
    run("spectral");
}

#[test]
fn cone_suite_passes() {
    run("cone");
}

#[test]
fn dual_suite_passes() {
    run("dual");
}

#[test]
fn isometry_suite_passes() {
    run("isometry");
}

#[test]
fn sampling_suite_passes() {
    run("sampling");
}
