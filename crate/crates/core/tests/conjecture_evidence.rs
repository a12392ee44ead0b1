//! Evidence runs for the conjectured h_λ p_μ and h_{λ'} p_μ bases. A singular
//! degree is printed as a finding; only structural invariants are asserted.

mod common;

use common::kn_grid;
use symquot::conjecture::{check_conjecture, ConjectureVariant};
use symquot::mixedbasis::BasisVerdict;

#[test]
fn evidence_up_to_n4_degree10() {
    let mut findings = Vec::new();
    for variant in [ConjectureVariant::Complete, ConjectureVariant::ConjugateComplete] {
        for (k, n) in kn_grid(4) {
            let report = check_conjecture(variant, k, n, 10).unwrap();
            assert!(report.degrees.iter().all(BasisVerdict::is_square), "{}", report.table());
            if variant == ConjectureVariant::Complete && k == 1 {
                assert!(report.is_ok(), "one variable: {}", report.table());
            }
            if let Some(v) = report.first_failure() {
                findings.push(format!("{variant} k={k} n={n}: singular at degree {} (rank {} of {})", v.degree, v.rank, v.candidates));
            }
        }
    }
    if findings.is_empty() {
        eprintln!("conjecture evidence: no singular degree for k <= n <= 4, degree <= 10");
    } else {
        eprintln!("conjecture evidence findings:\n{}", findings.join("\n"));
    }
}
