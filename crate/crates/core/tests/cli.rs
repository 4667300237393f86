use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use biorder::ratpoly::PolyJson;
use biorder::{chi_poly, fixtures, omega_strict, omega_weak, Poly};

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    root.to_str().unwrap().to_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biorder")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_biorder"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chain_poset_poly_text() {
    let o = run(&[
        "poset-poly",
        "--input",
        &fixture("chain2-celeste-top.json"),
        "--mode",
        "strict",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/2*x^2 - 1/2*x - 1/2*y^2 + 1/2*y\n");
}

#[test]
fn k3_graph_poly_text() {
    let o = run(&["graph-poly", "--input", &fixture("k3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^3 - 3*x*y + 2*y\n");
}

#[test]
fn check_all_passes_on_fixtures() {
    for name in [
        "k3.json",
        "k4.json",
        "p3.json",
        "c4.json",
        "edgeless3.json",
        "pentagon.json",
        "chain2-celeste-top.json",
    ] {
        let o = run(&["check", "--kind", "all", "--input", &fixture(name)]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).lines().all(|l| l.starts_with("PASS ")));
    }
}

#[test]
fn check_json_reports() {
    let o = run(&[
        "check",
        "--kind",
        "poset-reciprocity",
        "--input",
        &fixture("pentagon.json"),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["name"], "poset-reciprocity");
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn check_kind_mismatch_exits_two() {
    let o = run(&[
        "check",
        "--kind",
        "graph-reciprocity",
        "--input",
        &fixture("pentagon.json"),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output_round_trips() {
    let o = run(&["graph-poly", "--input", &fixture("k4.json"), "--format", "json"]);
    let parsed: PolyJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(Poly::from_json(&parsed).unwrap(), chi_poly(&fixtures::complete(4)));

    for (mode, expected) in [
        ("strict", omega_strict(&fixtures::pentagon())),
        ("weak", omega_weak(&fixtures::pentagon())),
    ] {
        let o = run(&[
            "poset-poly",
            "--input",
            &fixture("pentagon.json"),
            "--mode",
            mode,
            "--format",
            "json",
        ]);
        let parsed: PolyJson = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(Poly::from_json(&parsed).unwrap(), expected);
    }
}

#[test]
fn counts() {
    let o = run(&[
        "poset-count",
        "--input",
        &fixture("chain2-celeste-top.json"),
        "--x",
        "3",
        "--y",
        "1",
    ]);
    assert_eq!(stdout(&o), "3\n");
    let o = run(&[
        "graph-count",
        "--input",
        &fixture("k3.json"),
        "--x",
        "2",
        "--y",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 4);
}

#[test]
fn listings() {
    assert_eq!(
        stdout(&run(&["list-flats", "--input", &fixture("k3.json")]))
            .lines()
            .count(),
        5
    );
    assert_eq!(
        stdout(&run(&["list-orientations", "--input", &fixture("k3.json")]))
            .lines()
            .count(),
        6
    );
    assert_eq!(
        stdout(&run(&["list-extensions", "--input", &fixture("pentagon.json")]))
            .lines()
            .count(),
        3
    );
}

#[test]
fn stdin_input() {
    let o = run_stdin(&["graph-poly", "--input", "-"], r#"{"n": 2, "edges": [[0, 1]]}"#);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^2 - y\n");
}

#[test]
fn file_input_from_temp_dir() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, r#"{"n": 1, "covers": [], "celeste": [0]}"#).unwrap();
    let o = run(&["poset-poly", "--input", path.to_str().unwrap(), "--mode", "weak"]);
    assert_eq!(stdout(&o), "x - y + 1\n");
}

#[test]
fn budget_exceeded_exits_two() {
    let o = run(&[
        "graph-count",
        "--input",
        &fixture("k4.json"),
        "--x",
        "50",
        "--y",
        "1",
        "--budget",
        "1000",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn malformed_input_exits_two() {
    for input in [
        "{not json",
        r#"{"n": 2, "covers": [[0, 1], [1, 0]], "celeste": []}"#,
        r#"{"n": 2, "edges": [[0, 5]]}"#,
    ] {
        let o = run_stdin(&["check", "--input", "-"], input);
        assert_eq!(o.status.code(), Some(2), "{input}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["list-flats", "--input", &fixture("k4.json"), "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
