//! Every tag carried by a suite is documented, and every documented tag is
//! carried by at least one suite.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use traced_core::check;

fn documented() -> BTreeSet<String> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/traceability.md");
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter_map(|l| l.strip_prefix("| `"))
        .map(|rest| rest.split('`').next().unwrap().to_string())
        .collect()
}

fn carried() -> BTreeSet<String> {
    check::registry().iter().flat_map(|s| s.tags.iter().map(|t| t.to_string())).collect()
}

#[test]
fn no_orphan_tags() {
    let (doc, reg) = (documented(), carried());
    let orphaned: Vec<_> = doc.difference(&reg).collect();
    assert!(orphaned.is_empty(), "documented but no suite: {orphaned:?}");
    let undocumented: Vec<_> = reg.difference(&doc).collect();
    assert!(undocumented.is_empty(), "carried but not documented: {undocumented:?}");
}
