//! Audit-level properties: obstruction consistency against the CB
//! predicate, statement audits on structured families, and fuzz behaviour.

use cb_core::audit::{
    audit_statement, cg_obstruction, fuzz_search, points_on_plane_curve, AuditVerdict,
    ObstructionParams, ObstructionVariant, StatementId,
};
use cb_core::cb::is_cb_bool;
use cb_core::field::{Fp, PrimeField};
use cb_core::generators::{gen_collinear, gen_plane_config};

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

#[test]
fn obstruction_consistency_on_plane_curves() {
    // Points on a smooth plane curve of degree d (genus (d-1)(d-2)/2): when
    // the corollary-form obstruction fires, the set must fail is_cb.
    let mut checked = 0;
    for (d, m, k, seed) in [
        (2usize, 6usize, 3usize, 1u64),
        (2, 8, 4, 2),
        (2, 5, 3, 3),
        (3, 8, 3, 4),
        (3, 10, 4, 5),
    ] {
        let (gamma, genus) = points_on_plane_curve(d, m, f(11), seed).unwrap();
        let params = ObstructionParams {
            m: m as u64,
            p_a: genus,
            d: d as u64,
            n: 2,
            k: k as u64,
            variant: ObstructionVariant::CorollaryForm,
        };
        if cg_obstruction(&params).unwrap() {
            assert!(
                !is_cb_bool(&gamma, k),
                "obstructed instance certified CB: d={d} m={m} k={k} seed={seed}"
            );
            checked += 1;
        }
    }
    assert!(checked >= 4, "obstruction should fire on most of these shapes: {checked}");
}

#[test]
fn collinear_audits_pass_at_h2() {
    for k in 2..=6usize {
        let gen = gen_collinear::<Fp>(3, k, f(11), k as u64).unwrap();
        let report =
            audit_statement(StatementId::CurveBound { h: 2 }, &gen.points, k, None).unwrap();
        // m = k + 2 <= 2k + 1 for k >= 1, so the bound triggers and a line
        // is found.
        match report.verdict {
            AuditVerdict::Pass(_) => {}
            other => panic!("collinear family must pass at h=2: {other:?}"),
        }
    }
}

#[test]
fn two_skew_lines_pass_at_h3() {
    // k+1 points on each of two skew lines form a CB(k-1) set; with
    // kappa = k-1 the cardinality 2k+2 is at most 3*kappa - 1 once k >= 6.
    let k = 6usize;
    let gen = gen_plane_config::<Fp>(3, &[1, 1], &[k + 1, k + 1], f(31), 11).unwrap();
    let gamma = gen.points;
    let kappa = k - 1;
    assert!(is_cb_bool(&gamma, kappa), "two full lines are CB(k-1)");
    let report =
        audit_statement(StatementId::CurveBound { h: 3 }, &gamma, kappa, None).unwrap();
    match report.verdict {
        AuditVerdict::Pass(w) => match w {
            cb_core::audit::PassWitness::Curve(witness) => {
                assert_eq!(witness.components().len(), 2);
            }
            other => panic!("expected a curve witness: {other:?}"),
        },
        other => panic!("two-line family must pass at h=3: {other:?}"),
    }
}

#[test]
fn fuzz_h3_and_h4_produce_no_violations() {
    for (h, p) in [(3u32, 11u64), (4, 13)] {
        let summary = fuzz_search(h, f(p), 30, 7).unwrap();
        assert_eq!(
            summary.violation_count(),
            0,
            "h={h}: a violation of a proved statement indicates a bug"
        );
        assert!(summary.certified.len() > 10, "h={h}: too few certified instances");
    }
}

#[test]
fn fuzz_h5_never_absent_decisive() {
    let summary = fuzz_search(5, f(11), 30, 13).unwrap();
    assert_eq!(summary.violation_count(), 0);
    for finding in &summary.findings {
        match &finding.verdict {
            AuditVerdict::Undecided(ev) => {
                assert!(
                    !ev.hilbert_profile.is_empty(),
                    "undecided verdicts carry the evidence payload"
                );
            }
            other => panic!("unexpected finding at h=5: {other:?}"),
        }
    }
}

#[test]
fn fuzz_h6_is_informational() {
    // The open family: the run completes and reports findings without any
    // ground-truth assertion.
    let summary = fuzz_search(6, f(11), 10, 3).unwrap();
    assert_eq!(summary.trials, 10);
}

#[test]
fn fuzz_is_deterministic_across_runs() {
    let a = fuzz_search(3, f(11), 15, 99).unwrap();
    let b = fuzz_search(3, f(11), 15, 99).unwrap();
    assert_eq!(a.certified.len(), b.certified.len());
    assert_eq!(a.passes, b.passes);
    assert_eq!(a.triggered, b.triggered);
    assert_eq!(a.findings.len(), b.findings.len());
    for (x, y) in a.certified.iter().zip(b.certified.iter()) {
        assert_eq!(x.provenance, y.provenance);
        assert_eq!(x.k, y.k);
        assert_eq!(x.point_count, y.point_count);
    }
}
