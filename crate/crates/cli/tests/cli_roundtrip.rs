//! End-to-end checks of the binary: document round-trips, canonical
//! serialization, and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_cb-lab")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cb-lab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn generated_documents_round_trip_byte_identically() {
    let dir = tempdir();
    for (name, args) in [
        ("ci", vec!["generate", "ci-plane", "--d", "2", "--e", "3", "--p", "11", "--seed", "3"]),
        ("col", vec!["generate", "collinear", "--n", "3", "--k", "4", "--field", "11", "--seed", "1"]),
        ("colq", vec!["generate", "collinear", "--n", "2", "--k", "3", "--field", "rational", "--seed", "1"]),
        ("rnc", vec!["generate", "rnc", "--n", "2", "--s", "6", "--field", "13", "--seed", "5"]),
        ("pc", vec!["generate", "plane-config", "--n", "3", "--dims", "1,1", "--counts", "4,4", "--field", "11", "--seed", "9"]),
        ("rnd", vec!["generate", "random", "--n", "2", "--m", "7", "--field", "31", "--seed", "8"]),
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let doc_bytes = out.stdout.clone();
        let (points, provenance) = cb_lab::docs::parse_document_bytes(&doc_bytes)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(provenance.is_some(), "{name}: generated documents carry provenance");

        // Re-serializing the parsed set reproduces the canonical point data.
        let file = dir.join(format!("{name}.json"));
        std::fs::write(&file, &doc_bytes).unwrap();
        let reread = std::fs::read(&file).unwrap();
        let (points2, _) = cb_lab::docs::parse_document_bytes(&reread).unwrap();
        assert_eq!(
            cb_lab::docs::digest(&points),
            cb_lab::docs::digest(&points2),
            "{name}: digest stable across the file round trip"
        );
        let doc1 = cb_lab::docs::document(&points, None);
        let doc2 = cb_lab::docs::document(&points2, None);
        assert_eq!(
            cb_lab::docs::canonical_bytes(&doc1),
            cb_lab::docs::canonical_bytes(&doc2),
            "{name}: canonical bytes identical"
        );
    }
}

#[test]
fn report_keys_are_sorted() {
    let out = run(&["generate", "ci-plane", "--d", "2", "--e", "2", "--p", "11", "--seed", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted, "canonical serialization sorts keys");
}

#[test]
fn exit_code_contract() {
    let dir = tempdir();

    // 0: condition holds.
    let ci = dir.join("ci33.json");
    let out = run(&[
        "generate", "ci-plane", "--d", "3", "--e", "3", "--p", "11", "--seed", "7", "--out",
        ci.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["check", ci.to_str().unwrap(), "--k", "3"]).status.code(), Some(0));

    // 1: condition fails.
    assert_eq!(run(&["check", ci.to_str().unwrap(), "--k", "4"]).status.code(), Some(1));

    // 64: usage errors.
    assert_eq!(run(&["check", ci.to_str().unwrap(), "--k", "0"]).status.code(), Some(64));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(
        run(&["bounds", "--formula", "lp", "--h", "9", "--k", "3"]).status.code(),
        Some(64)
    );
    assert_eq!(
        run(&["generate", "ci-plane", "--d", "2", "--e", "2", "--p", "10", "--seed", "1"])
            .status
            .code(),
        Some(64),
        "10 is not prime"
    );

    // 65: malformed documents.
    let bad = dir.join("bad.json");
    std::fs::write(&bad, b"{ not json").unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap(), "--k", "1"]).status.code(), Some(65));
    let dup = dir.join("dup.json");
    std::fs::write(
        &dup,
        serde_json::json!({
            "field": {"kind": "prime", "p": 11},
            "ambient_dim": 2,
            "points": [[1, 0, 0], [2, 0, 0]],
        })
        .to_string(),
    )
    .unwrap();
    assert_eq!(run(&["check", dup.to_str().unwrap(), "--k", "1"]).status.code(), Some(65));

    // 69: generator budget exhaustion. A (3,3) intersection needs 9 distinct
    // rational points but P^2(F_2) has only 7, so every draw is rejected and
    // the budget runs out deterministically.
    let out = run(&["generate", "ci-plane", "--d", "3", "--e", "3", "--p", "2", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(69), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn audit_exit_zero_and_violation_free_on_proved_statements() {
    let out = run(&["audit", "--statement", "all", "--generated", "collinear:n=3,k=4,p=11,seed=3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() >= 2);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["verdict"], "pass", "{line}");
    }
}

#[test]
fn fuzz_reports_are_json_lines() {
    let out = run(&["fuzz", "--h", "3", "--trials", "10", "--p", "11", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("command").is_some());
    }
}

#[test]
fn level_defaults_to_point_count_minus_two() {
    let dir = tempdir();
    let file = dir.join("two.json");
    std::fs::write(
        &file,
        serde_json::json!({
            "field": {"kind": "prime", "p": 11},
            "ambient_dim": 2,
            "points": [[1, 0, 0], [0, 1, 0]],
        })
        .to_string(),
    )
    .unwrap();
    let out = run(&["level", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(v["level"], serde_json::Value::Null, "two points admit no level");
    assert_eq!(v["max_k"], 0);
}

#[test]
fn rational_documents_work_end_to_end() {
    let dir = tempdir();
    let file = dir.join("q.json");
    std::fs::write(
        &file,
        serde_json::json!({
            "field": {"kind": "rational"},
            "ambient_dim": 2,
            "points": [[1, 0, 0], [0, 1, 0], ["1/2", "1/3", 0], [1, 1, 0]],
        })
        .to_string(),
    )
    .unwrap();
    // Four collinear points... all on the line x2 = 0 except none are off:
    // this set is CB(2).
    assert_eq!(run(&["check", file.to_str().unwrap(), "--k", "2"]).status.code(), Some(0));
    let out = run(&["find-curve", file.to_str().unwrap(), "--degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(v["result"]["outcome"], "found");
}
