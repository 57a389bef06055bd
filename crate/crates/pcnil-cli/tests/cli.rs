//! End-to-end tests driving the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_owned()
}

fn pcnil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcnil"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn basis_text_lists_the_example_by_weight() {
    let out = pcnil(&["basis", "--graph", &fixture("example.json"), "--class", "3"]);
    assert_eq!(code_of(&out), 0);
    let expected = "\
weight 1: x1, x2, x3
weight 2: (x1,x3), (x2,x3)
weight 3: (x1,(x1,x3)), ((x1,x3),x2), ((x1,x3),x3), (x2,(x2,x3)), ((x2,x3),x3)
total: 10
";
    assert_eq!(stdout_of(&out), expected);
}

#[test]
fn basis_json_has_schema_and_ten_elements() {
    let out = pcnil(&[
        "basis",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "--json",
    ]);
    assert_eq!(code_of(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["schema"], "pcnil/1");
    assert_eq!(doc["class"], 3);
    let elements = doc["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 10);
    assert_eq!(elements[0]["tree"], "x1");
    assert_eq!(elements[3]["tree"], "(x1,x3)");
    assert_eq!(elements[3]["weight"], 2);
    assert_eq!(elements[3]["foliage"], "x1 x3");
    assert_eq!(elements[9]["tree"], "((x2,x3),x3)");
    let weights: Vec<u64> = elements
        .iter()
        .map(|e| e["weight"].as_u64().unwrap())
        .collect();
    assert_eq!(weights, [1, 1, 1, 2, 2, 3, 3, 3, 3, 3]);
}

#[test]
fn nf_reorders_a_transposed_pair() {
    let out = pcnil(&[
        "nf",
        "--graph",
        &fixture("example.json"),
        "--class",
        "2",
        "--word",
        "x3 x1",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "x1:1, x3:1, (x1,x3):-1\n");
}

#[test]
fn nf_of_a_commuting_bracket_is_trivial() {
    let out = pcnil(&[
        "nf",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "--word",
        "[x1,x2]",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn nf_json_prints_exponents_as_strings() {
    let out = pcnil(&[
        "nf",
        "--graph",
        &fixture("example.json"),
        "--class",
        "2",
        "--word",
        "x3 x1",
        "--json",
    ]);
    assert_eq!(code_of(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["schema"], "pcnil/1");
    let terms = doc["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["commutator"], "x1");
    assert_eq!(terms[0]["exponent"], "1");
    assert_eq!(terms[2]["commutator"], "(x1,x3)");
    assert_eq!(terms[2]["exponent"], "-1");
}

#[test]
fn mul_cancels_a_word_with_its_inverse() {
    let out = pcnil(&[
        "mul",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "x1",
        "x1^-1",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn inv_negates_and_corrects() {
    let out = pcnil(&[
        "inv",
        "--graph",
        &fixture("example.json"),
        "--class",
        "2",
        "x3 x1",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "x1:-1, x3:-1\n");
}

#[test]
fn comm_of_noncommuting_generators_is_the_basis_element() {
    let out = pcnil(&[
        "comm",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "x1",
        "x3",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "(x1,x3):1\n");
}

#[test]
fn pow_scales_a_generator() {
    let out = pcnil(&[
        "pow",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "x2",
        "5",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "x2:5\n");
}

#[test]
fn pow_accepts_negative_exponents() {
    let out = pcnil(&[
        "pow",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "x2",
        "-7",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "x2:-7\n");
}

#[test]
fn pow_accepts_exponents_beyond_machine_width() {
    let out = pcnil(&[
        "pow",
        "--graph",
        &fixture("example.json"),
        "--class",
        "2",
        "x2",
        "123456789012345678901234567890",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "x2:123456789012345678901234567890\n");
}

#[test]
fn zero_exponents_are_rejected_with_a_position() {
    let out = pcnil(&[
        "nf",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "--word",
        "x1^0",
    ]);
    assert_eq!(code_of(&out), 2);
    let err = stderr_of(&out);
    assert!(err.contains("position 3"), "stderr: {err}");
    assert!(err.contains("zero exponent"), "stderr: {err}");
}

#[test]
fn unknown_generators_are_rejected() {
    let out = pcnil(&[
        "nf",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "--word",
        "x1 y2",
    ]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("unknown generator"));
}

#[test]
fn missing_graph_file_is_a_usage_error() {
    let out = pcnil(&["basis", "--graph", "/nonexistent/graph.json", "--class", "3"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn class_zero_is_a_usage_error() {
    let out = pcnil(&["basis", "--graph", &fixture("example.json"), "--class", "0"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn verify_passes_on_the_example_and_is_deterministic() {
    let args = [
        "verify",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "--trials",
        "50",
        "--seed",
        "7",
        "--json",
    ];
    let first = pcnil(&args);
    assert_eq!(code_of(&first), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&first)).unwrap();
    assert_eq!(doc["schema"], "pcnil/1");
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["round_trips_run"], 50);
    assert_eq!(doc["failures"], 0);
    assert_eq!(doc["degrees"].as_array().unwrap().len(), 3);
    let second = pcnil(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_text_reports_pass() {
    let out = pcnil(&[
        "verify",
        "--graph",
        &fixture("example.json"),
        "--class",
        "2",
        "--trials",
        "10",
    ]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("degree 1: als=3 standard=3 basis=3 rank=3 ok"));
    assert!(text.ends_with("PASS\n"));
}

#[test]
fn example_passes_and_is_byte_identical_across_runs() {
    let first = pcnil(&["example"]);
    assert_eq!(code_of(&first), 0);
    assert!(stdout_of(&first).contains("total: 10"));
    let second = pcnil(&["example"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn example_json_matches_basis_json_for_the_same_graph() {
    let from_example = pcnil(&["example", "--json"]);
    assert_eq!(code_of(&from_example), 0);
    let from_basis = pcnil(&[
        "basis",
        "--graph",
        &fixture("example.json"),
        "--class",
        "3",
        "--json",
    ]);
    assert_eq!(from_example.stdout, from_basis.stdout);
}
