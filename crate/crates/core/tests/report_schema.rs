//! Reports validate against the shipped schema and are reproducible.

use std::fs;
use std::path::PathBuf;

use serde_json::Value;
use traced_core::check::{self, Config, SCHEMA};

fn load(rel: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel);
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn validate(report: &Value) {
    let schema = load("schema/report.schema.json");
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(report).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

fn small(seed: u64) -> Config {
    Config { seed, trials: 3, ..Config::default() }
}

#[test]
fn schema_names_the_current_version() {
    assert_eq!(load("schema/report.schema.json")["$id"], SCHEMA);
}

#[test]
fn every_suite_reports_valid_json() {
    for timings in [false, true] {
        let report = check::run(&small(5), timings).unwrap();
        assert_eq!(report.suites.len(), check::registry().len());
        validate(&serde_json::to_value(&report).unwrap());
    }
}

#[test]
fn stored_regressions_are_valid_reports() {
    validate(&load("tests/regressions/graded-controls-seed42.json"));
}

#[test]
fn same_seed_same_report() {
    let a = serde_json::to_string(&check::run(&small(11), false).unwrap()).unwrap();
    let b = serde_json::to_string(&check::run(&small(11), false).unwrap()).unwrap();
    assert_eq!(a, b);
    let c = serde_json::to_string(&check::run(&small(12), false).unwrap()).unwrap();
    assert_ne!(a, c);
}

#[test]
fn schema_rejects_a_malformed_report() {
    let mut report = serde_json::to_value(check::run(&small(1), false).unwrap()).unwrap();
    report["suites"][0]["instance"] = Value::from("hilbert");
    let schema = load("schema/report.schema.json");
    assert!(!jsonschema::validator_for(&schema).unwrap().is_valid(&report));
}
