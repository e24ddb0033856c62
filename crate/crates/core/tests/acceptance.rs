//! Acceptance gate: every criterion runs through its named suite at the
//! pinned tolerances and must finish inside its runtime budget. One
//! pass/fail line prints per criterion (visible with `--nocapture`).

use siciak::suites::run_suite;

fn criterion(number: u32, suite: &str, limit_ms: u128) {
    let rep = run_suite(suite, 0).expect("known suite");
    let status = if rep.passed { "PASS" } else { "FAIL" };
    println!(
        "[{status}] criterion {number} ({suite}): {} ms (limit {limit_ms} ms)",
        rep.elapsed_ms
    );
    for line in &rep.lines {
        println!("    {line}");
    }
    assert!(rep.passed, "criterion {number} ({suite}) failed");
    assert!(
        rep.elapsed_ms < limit_ms,
        "criterion {number} ({suite}) exceeded its {limit_ms} ms budget: {} ms",
        rep.elapsed_ms
    );
}

#[test]
fn criterion_1_quadrilateral_cone_integrals() {
    criterion(1, "example74", 5_000);
}

#[test]
fn criterion_2_total_mass_identity() {
    criterion(2, "thm62", 5_000);
}

#[test]
fn criterion_3_monomial_bounds_and_lp_cap() {
    criterion(3, "prop43", 60_000);
}

#[test]
fn criterion_4_lower_set_equivalences() {
    criterion(4, "thm58", 30_000);
}

#[test]
fn criterion_5_cone_hull_identities() {
    criterion(5, "prop56", 30_000);
}

#[test]
fn criterion_6_irrational_gap_witness() {
    criterion(6, "prop47", 5_000);
}

#[test]
fn criterion_7_pullback_support_identity() {
    criterion(7, "prop81", 30_000);
}

#[test]
fn criterion_8_lens_axis_behavior() {
    criterion(8, "ex93", 10_000);
}

#[test]
fn criterion_9_interval_extremal_values() {
    criterion(9, "lp1d", 30_000);
}
