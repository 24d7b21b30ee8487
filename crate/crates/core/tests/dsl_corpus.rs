//! The golden corpus: every program is in canonical form, so pretty-printing
//! its parse gives back the file byte for byte, and every printed value
//! equals the same computation done directly against the instance API.

mod common;

use std::path::PathBuf;

use common::corpus::{oracle, printed};
use traced_core::dsl;

fn corpus() -> Vec<(String, String)> {
    common::corpus::corpus(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus"))
}

#[test]
fn corpus_has_fifty_programs() {
    assert_eq!(corpus().len(), 50);
}

#[test]
fn pretty_print_of_parse_is_identity() {
    for (name, text) in corpus() {
        let program = dsl::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(dsl::pretty::program(&program), text, "{name}");
    }
}

#[test]
fn evaluation_matches_direct_calls() {
    for (name, text) in corpus() {
        let outcome = dsl::run_source(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(outcome.all_passed(), "{name}:\n{}", outcome.transcript());
        assert_eq!(printed(&outcome), oracle(&name), "{name}");
    }
}
