//! End-to-end tests against the compiled binary: exit codes, JSON
//! content, and artifact-level round-trips.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ascheme"))
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

const K3: &str = "3 2\n0 1 1\n1 0 1\n1 1 0\n";
const C3: &str = "3 3\n0 1 2\n2 0 1\n1 2 0\n";
const C3_GRP: &str = "3\n0 1 2\n1 2 0\n2 0 1\n";

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "k3.asc", K3);
    assert_eq!(run(&["validate", &good]).status.code(), Some(0));

    // well-formed text, but path counts are not constant per relation
    let bad = write(dir.path(), "bad.asc", "4 3\n0 1 1 1\n1 0 1 1\n1 1 0 2\n1 1 2 0\n");
    let out = run(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));

    let garbage = write(dir.path(), "garbage.asc", "3 2\n0 1 1\nnope\n1 1 0\n");
    assert_eq!(run(&["validate", &garbage]).status.code(), Some(2));

    assert_eq!(run(&["validate", "/no/such/file.asc"]).status.code(), Some(2));
}

#[test]
fn info_reports_structure() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.asc", K3);
    let out = run(&["info", &k3, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["data"]["valencies"], serde_json::json!([1, 2]));
    assert_eq!(v["data"]["thin_radical"], serde_json::json!([0]));
    assert_eq!(v["data"]["thin_residue"], serde_json::json!([0, 1]));
    assert_eq!(v["data"]["closed_subsets"].as_array().unwrap().len(), 2);
}

#[test]
fn check_morphism_reports_inadmissible_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write(dir.path(), "c3.asc", C3);
    let k3 = write(dir.path(), "k3.asc", K3);
    let mor = write(dir.path(), "collapse.mor", "3 3\n0 1 2\n");
    let out = run(&["check-morphism", &c3, &k3, &mor, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["data"]["admissible"], serde_json::json!(false));
    assert!(v["data"]["admissibility_witness"].is_object());
    assert_eq!(v["data"]["rel_map"], serde_json::json!([0, 1, 1]));

    // a map that is not a morphism at all fails the check
    let notmor = write(dir.path(), "not.mor", "3 3\n0 0 1\n");
    let out = run(&["check-morphism", &c3, &c3, &notmor]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn product_and_quotient_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write(dir.path(), "c3.asc", C3);
    let k3 = write(dir.path(), "k3.asc", K3);

    let out = run(&["product", &c3, &k3, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let emitted = v["data"]["scheme_asc"].as_str().unwrap();
    assert_eq!(v["data"]["n"], serde_json::json!(9));

    // the emitted scheme re-validates and re-emits byte-identically
    let prod = write(dir.path(), "prod.asc", emitted);
    assert_eq!(run(&["validate", &prod]).status.code(), Some(0));
    let out2 = run(&["quotient", &prod, "--closed", "0,1", "--json"]);
    assert_eq!(out2.status.code(), Some(0));
    let v2 = json_of(&out2);
    assert_eq!(v2["data"]["scheme_asc"].as_str().unwrap(), C3);
    assert_eq!(v2["data"]["input_was_closed"], serde_json::json!(true));

    let sub = run(&["subscheme", &prod, "--closed", "0,1", "--point", "0", "--json"]);
    assert_eq!(sub.status.code(), Some(0));
    let v3 = json_of(&sub);
    assert_eq!(v3["data"]["scheme_asc"].as_str().unwrap(), K3);
}

#[test]
fn group_scheme_and_bridge_commands() {
    let dir = tempfile::tempdir().unwrap();
    let grp = write(dir.path(), "c3.grp", C3_GRP);
    let out = run(&["group-scheme", &grp, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let asc = v["data"]["scheme_asc"].as_str().unwrap();
    let s = write(dir.path(), "sc3.asc", asc);

    let rad = run(&["rad-group", &s, "--json"]);
    assert_eq!(rad.status.code(), Some(0));
    assert_eq!(json_of(&rad)["data"]["order"], serde_json::json!(3));

    let k3 = write(dir.path(), "k3.asc", K3);
    let quo = run(&["quo-group", &k3, "--json"]);
    assert_eq!(quo.status.code(), Some(0));
    assert_eq!(json_of(&quo)["data"]["order"], serde_json::json!(1));

    let c2grp = write(dir.path(), "c2.grp", "2\n0 1\n1 0\n");
    assert_eq!(run(&["adjunction-check", "--rad", &c2grp, &k3]).status.code(), Some(0));
    assert_eq!(run(&["adjunction-check", "--quo", &c2grp, &k3]).status.code(), Some(0));
    assert_eq!(run(&["adjunction-check", &c2grp, &k3]).status.code(), Some(2));
}

#[test]
fn factorize_and_algebra_check() {
    let dir = tempfile::tempdir().unwrap();
    let c3k3 = {
        let c3 = write(dir.path(), "c3.asc", C3);
        let k3 = write(dir.path(), "k3.asc", K3);
        let out = run(&["product", &c3, &k3, "--json"]);
        let v = json_of(&out);
        write(dir.path(), "prod.asc", v["data"]["scheme_asc"].as_str().unwrap())
    };
    let c3 = dir.path().join("c3.asc").to_str().unwrap().to_string();
    // projection (x1, x2) -> x1
    let mor = write(dir.path(), "pi.mor", "9 3\n0 0 0 1 1 1 2 2 2\n");
    let fac = run(&["factorize", &c3k3, &c3, &mor, "--json"]);
    assert_eq!(fac.status.code(), Some(0));
    let v = json_of(&fac);
    assert_eq!(v["data"]["kernel"], serde_json::json!([0, 1]));

    let alg = run(&["algebra-check", &c3k3, &c3, &mor, "--json"]);
    assert_eq!(alg.status.code(), Some(0));
    let v = json_of(&alg);
    // relation [s1, s2] has valency n_{s2} in the complete factor and a
    // thin image, so the relative valency is 1 or 2
    assert_eq!(v["data"]["relative_valencies"], serde_json::json!(["1", "2", "1", "2", "1", "2"]));

    // an inadmissible morphism fails the admissible check
    let collapse = write(dir.path(), "collapse.mor", "3 3\n0 1 2\n");
    let k3 = dir.path().join("k3.asc").to_str().unwrap().to_string();
    assert_eq!(run(&["factorize", &c3, &k3, &collapse]).status.code(), Some(1));
    assert_eq!(run(&["algebra-check", &c3, &k3, &collapse]).status.code(), Some(1));
}

#[test]
fn hopf_and_comodule_commands() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write(dir.path(), "c3.asc", C3);
    let k3 = write(dir.path(), "k3.asc", K3);

    let out = run(&["hopf-check", &c3, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == serde_json::json!(true)));

    assert_eq!(run(&["hopf-check", &k3]).status.code(), Some(1));

    assert_eq!(run(&["comodule-check", &k3]).status.code(), Some(0));
    let mor = write(dir.path(), "id.mor", "3 3\n0 1 2\n");
    assert_eq!(run(&["comodule-check", &c3, &c3, &mor]).status.code(), Some(0));
    // codomain not thin
    assert_eq!(run(&["comodule-check", &k3, &k3, &mor]).status.code(), Some(1));
}

#[test]
fn enumeration_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.asc", K3);
    let out = run(&["enumerate-morphisms", &k3, &k3, "--admissible", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    // 6 bijections plus 3 constant maps
    assert_eq!(v["data"]["count"], serde_json::json!(9));

    let limited = bin()
        .args(["enumerate-morphisms", &k3, &k3])
        .env("ASCHEME_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(2));
}

#[test]
fn reports_carry_hashes_and_no_floats() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.asc", K3);
    let out = run(&["validate", &k3, "--json"]);
    let v = json_of(&out);
    assert!(v["inputs"][0]["sha256"].as_str().unwrap().len() == 64);
    assert!(v["checks"][0]["pass"].is_boolean());
}
