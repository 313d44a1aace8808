//! The acceptance gate: runs the full verification suite over the
//! standard corpus and prints one line per criterion.

#[test]
fn acceptance() {
    let results = ascheme::acceptance::run_acceptance();
    assert_eq!(results.len(), 11, "expected one result per criterion");
    let mut failed = Vec::new();
    for c in &results {
        let status = if c.pass { "pass" } else { "FAIL" };
        println!("[{status}] {} — {}", c.name, c.detail);
        if !c.pass {
            failed.push(c.name);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
