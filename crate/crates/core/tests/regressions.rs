//! Stored counterexamples from the control suites. Each must still be
//! reproduced by replaying its trial, and must still break the property when
//! checked directly from the recorded inputs.

use std::fs;
use std::path::PathBuf;

use traced_core::balanced::GradedVect;
use traced_core::check::{self, suites, Report};
use traced_core::thickened::{psi, tensor_triples_with, tr_hat, tr_hat_with, Crossings, Triple};
use traced_core::vect::q_int;
use traced_core::MonoidalCategory;

fn stored() -> Report {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/regressions/graded-controls-seed42.json");
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn inputs(report: &Report, suite: &str) -> (Triple<GradedVect>, Triple<GradedVect>) {
    let s = report.suites.iter().find(|s| s.id == suite).unwrap();
    let cx = s.first_counterexample.as_ref().expect("stored counterexample");
    let f1 = serde_json::from_value(cx.inputs["f1"].clone()).unwrap();
    let f2 = serde_json::from_value(cx.inputs["f2"].clone()).unwrap();
    (f1, f2)
}

#[test]
fn replay_reproduces_every_stored_counterexample() {
    let report = stored();
    let replays = check::replay(&report).unwrap();
    assert_eq!(replays.len(), 2);
    for r in &replays {
        assert!(r.reproduced, "{} trial {}: {}", r.suite, r.trial, r.detail);
    }
}

#[test]
fn braiding_without_twist_breaks_multiplicativity() {
    let cat = GradedVect::new(q_int(2)).unwrap();
    let (f1, f2) = inputs(&stored(), "balanced.no-twist-control");
    let both = traced_core::thickened::tensor_triples(&cat, &f1, &f2).unwrap();

    let naive = suites::braiding_only_graded(&cat);
    let lhs = tr_hat_with(&cat, &both, &naive).unwrap();
    let rhs = cat.tensor(&tr_hat_with(&cat, &f1, &naive).unwrap(), &tr_hat_with(&cat, &f2, &naive).unwrap()).unwrap();
    assert_ne!(lhs, rhs);

    // the balanced switching repairs it on the same inputs
    let lhs = tr_hat(&cat, &both).unwrap();
    let rhs = cat.tensor(&tr_hat(&cat, &f1).unwrap(), &tr_hat(&cat, &f2).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn mixed_crossings_break_psi() {
    let cat = GradedVect::new(q_int(2)).unwrap();
    let (f1, f2) = inputs(&stored(), "tensor.crossing-control");
    let product = cat.tensor(&psi(&cat, &f1).unwrap(), &psi(&cat, &f2).unwrap()).unwrap();
    let mixed = psi(&cat, &tensor_triples_with(&cat, &f1, &f2, Crossings::Mixed).unwrap()).unwrap();
    assert_ne!(mixed, product);
    for ok in [Crossings::Standard, Crossings::Mirrored] {
        assert_eq!(psi(&cat, &tensor_triples_with(&cat, &f1, &f2, ok).unwrap()).unwrap(), product, "{ok:?}");
    }
}

/// Replacing `s` by the plain swap leaves every trial multiplicative: the
/// components of `t` that survive have total degree zero, so the braiding
/// scalar is 1 on them. The control is recorded as failed, not faked.
#[test]
fn plain_swap_control_finds_nothing() {
    let s = stored().suites.into_iter().find(|s| s.id == "balanced.negative-control").unwrap();
    assert_eq!(s.counterexamples_found, 0);
    assert!(!s.passed);
}
