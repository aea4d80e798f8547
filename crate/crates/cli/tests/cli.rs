//! End-to-end tests against the built binary: fixture values, JSON
//! determinism and round-trip re-assertions, and exit codes.

use std::process::{Command, Output};

fn perminv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perminv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn cyclic_four_json_fixture() {
    let out = perminv(&[
        "--n",
        "4",
        "--gens",
        "(1 2 3 4)",
        "--chars",
        "0,2",
        "--depth",
        "6",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["order"], 4);
    assert_eq!(doc["transpositions"], 0);
    assert_eq!(doc["index_G_over_N"], 4);
    assert_eq!(doc["per_char"]["0"]["quasi_gorenstein"], false);
    assert_eq!(doc["per_char"]["2"]["quasi_gorenstein"], true);
    assert_eq!(doc["per_char"]["0"]["splits"], true);
    assert_eq!(doc["per_char"]["2"]["splits"], false);
    assert_eq!(doc["per_char"]["2"]["a_invariant"], -4);
    assert_eq!(doc["per_char"]["2"]["canonical"]["base"], "invariant-ring");
    assert_eq!(doc["per_char"]["2"]["canonical"]["shift"], -4);
    assert_eq!(doc["uniformly_split"], false);
    assert_eq!(doc["generated_by_transpositions"], false);
}

#[test]
fn json_output_is_byte_deterministic() {
    let args = [
        "--n",
        "5",
        "--gens",
        "(1 2);(1 2 3 4 5)",
        "--chars",
        "0,2,3,2",
        "--depth",
        "8",
        "--format",
        "json",
    ];
    let first = stdout(&perminv(&args));
    let second = stdout(&perminv(&args));
    assert_eq!(first, second);
    // Duplicate characteristics collapse.
    let doc: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(doc["per_char"].as_object().unwrap().len(), 3);
}

#[test]
fn json_carries_enough_to_reassert_the_verdict_logic() {
    let out = perminv(&[
        "--n",
        "6",
        "--gens",
        "(1 2)(3 4)(5 6)",
        "--chars",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let index = doc["index_G_over_N"].as_u64().unwrap();
    assert_eq!(doc["uniformly_split"], (index == 1));
    assert_eq!(doc["generated_by_transpositions"], (index == 1));
    // p = 2 divides |G/N| = 2, so the inclusion must not split.
    assert_eq!(doc["per_char"]["2"]["splits"], false);
    // Characteristic two is always quasi-Gorenstein, with the a-invariant
    // pinned at -(c + n) and witnessed at the top of the window.
    assert_eq!(doc["per_char"]["2"]["quasi_gorenstein"], true);
    let c = doc["transpositions"].as_i64().unwrap();
    let n = doc["n"].as_i64().unwrap();
    let a = doc["per_char"]["2"]["a_invariant"].as_i64().unwrap();
    assert_eq!(a, -(c + n));
    let window = &doc["per_char"]["2"]["cohomology_window"];
    assert_eq!(window["hi"].as_i64().unwrap(), a);
    let dims = window["dims"].as_array().unwrap();
    assert!(dims.last().unwrap().as_u64().unwrap() > 0);
}

#[test]
fn trivial_group_report() {
    let out = perminv(&["--n", "3", "--chars", "0", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["order"], 1);
    // Hilb = 1 / (1 - t)^3.
    assert_eq!(doc["hilb_invariants"]["num"], serde_json::json!([1]));
    assert_eq!(
        doc["hilb_invariants"]["den"],
        serde_json::json!([1, -3, 3, -1])
    );
    assert_eq!(doc["per_char"]["0"]["a_invariant"], -3);
    assert_eq!(doc["per_char"]["0"]["quasi_gorenstein"], true);
    assert_eq!(doc["per_char"]["0"]["splits"], true);
    assert_eq!(doc["uniformly_split"], true);
}

#[test]
fn text_format_mentions_every_verdict() {
    let out = perminv(&["--n", "3", "--gens", "(1 2);(1 2 3)", "--chars", "0,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in [
        "characteristic 0",
        "characteristic 2",
        "a-invariant",
        "quasi-Gorenstein",
        "canonical module",
        "inclusion splits",
        "Gorenstein:",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
}

#[test]
fn exit_codes_separate_failure_classes() {
    // Malformed cycle notation.
    let out = perminv(&["--n", "4", "--gens", "(1 2"]);
    assert_eq!(out.status.code(), Some(2));
    // Index out of range.
    let out = perminv(&["--n", "4", "--gens", "(1 7)"]);
    assert_eq!(out.status.code(), Some(2));
    // Composite characteristic.
    let out = perminv(&["--n", "3", "--chars", "6"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown flag (handled by the argument parser).
    let out = perminv(&["--n", "3", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // Group order cap.
    let out = perminv(&["--n", "4", "--gens", "(1 2);(1 2 3 4)", "--max-order", "10"]);
    assert_eq!(out.status.code(), Some(3));
}
