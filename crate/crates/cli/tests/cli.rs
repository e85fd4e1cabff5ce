use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use skewalg::{Quaternion, SkewMatrix};

const EXAMPLE: &str = "[k,-i;k-1,-i-j]";

fn skewalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewalg")).args(args).output().unwrap()
}

fn skewalg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_skewalg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn demo_matches_golden_and_is_stable() {
    let golden = include_str!("golden/demo.txt");
    let first = skewalg(&["demo", "paper-example"]);
    let second = skewalg(&["demo", "paper-example"]);
    assert!(first.status.success());
    assert_eq!(stdout(&first), golden);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn quasideterminants_of_the_example() {
    let out = skewalg(&["qdet", "--kind", "rc", "--pos", "2,2", EXAMPLE]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");

    let out = skewalg(&["qdet", "--kind", "cr", "--pos", "1,1", EXAMPLE]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1+k\n");
}

#[test]
fn singular_inverse_exits_one() {
    let out = skewalg(&["inv", "--kind", "rc", EXAMPLE]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let diag = stderr(&out);
    assert_eq!(diag.lines().count(), 1);
    assert!(diag.starts_with("error[singular]:"), "{diag}");
}

#[test]
fn undefined_quasideterminant_exits_one() {
    let out = skewalg(&["qdet", "--kind", "rc", "--pos", "1,1", "[0,1;1,0]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error[undefined]:"));
}

#[test]
fn bad_input_exits_two() {
    let out = skewalg(&["inv", "--kind", "rc", "[1, 2; 3]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error["));

    let out = skewalg(&["qdet", "--kind", "rc", "--pos", "0,1", EXAMPLE]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[usage]:"));

    let out = skewalg(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr(&out).lines().count(), 1);
}

#[test]
fn inconsistent_system_exits_one() {
    let out = skewalg(&["solve", "--rhs", "[0, 1]", "[1, 0; 2, 0]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("consistent: false"));
    assert!(stderr(&out).starts_with("error[inconsistent]:"));
}

#[test]
fn solve_reports_a_solution_set() {
    let out = skewalg(&["solve", "--rhs", "[0, 0]", EXAMPLE]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("consistent: true"));
    assert!(text.contains("rank: 1"));
    let basis: Vec<&str> = text.lines().filter_map(|l| l.strip_prefix("homogeneous: ")).collect();
    assert_eq!(basis.len(), 1);
    let x: SkewMatrix<Quaternion> = basis[0].parse().unwrap();
    let a: SkewMatrix<Quaternion> = EXAMPLE.parse().unwrap();
    assert!(skewalg::rc_product(&x, &a).unwrap().is_zero());
}

#[test]
fn text_output_round_trips_through_the_parsers() {
    let left = "[1/2+i, j; -k, 3]";
    let right = "[2, i-1/3; j, k]";
    for kind in ["rc", "cr"] {
        let out = skewalg(&["mul", "--kind", kind, left, right]);
        assert!(out.status.success());
        let printed = stdout(&out);
        let parsed: SkewMatrix<Quaternion> = printed.trim().parse().unwrap();
        assert_eq!(parsed.to_string(), printed.trim());
    }
    let out = skewalg(&["inv", "--kind", "rc", left]);
    let inv: SkewMatrix<Quaternion> = stdout(&out).trim().parse().unwrap();
    let a: SkewMatrix<Quaternion> = left.parse().unwrap();
    assert_eq!(skewalg::rc_product(&a, &inv).unwrap(), SkewMatrix::identity(2));
}

#[test]
fn json_output_carries_exact_components() {
    let out = skewalg(&["--format", "json", "qdet", "--kind", "cr", "--pos", "1,1", EXAMPLE]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["text"], "1+k");
    assert_eq!(v["w"]["num"], "1");
    assert_eq!(v["w"]["den"], "1");
    assert_eq!(v["x"]["num"], "0");
    assert_eq!(v["z"]["num"], "1");

    let out = skewalg(&["--format", "json", "rank", "--kind", "rc", EXAMPLE]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rank"], 1);
    assert_eq!(v["rows"], serde_json::json!([1]));
}

#[test]
fn matrix_from_stdin_and_file() {
    let out = skewalg_stdin(&["rank", "--kind", "cr"], EXAMPLE);
    assert_eq!(stdout(&out), "2 rows={1,2} cols={1,2}\n");

    let path = std::env::temp_dir().join(format!("skewalg-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, format!("{EXAMPLE}\n")).unwrap();
    let out = skewalg(&["rank", "--kind", "rc", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(stdout(&out), "1 rows={1} cols={1}\n");
}

#[test]
fn repr_decompose_factors_a_rotation_morphism() {
    // Z/4 rotating four points, onto Z/2 swapping two points.
    let input = r#"{
        "source": {"algebra": {"size": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]], "unit": 0},
                   "carrier": 4, "action": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
        "target": {"algebra": {"size": 2, "table": [[0,1],[1,0]], "unit": 0},
                   "carrier": 2, "action": [[0,1],[1,0]]},
        "morphism": {"r": [0,1,0,1], "R": [0,1,0,1]}
    }"#;
    let out = skewalg_stdin(&["repr-decompose"], input);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["algebra_classes"], serde_json::json!([[0, 2], [1, 3]]));
    assert_eq!(v["carrier_classes"], serde_json::json!([[0, 2], [1, 3]]));
    assert_eq!(v["image_carrier"], serde_json::json!([0, 1]));

    let bad = input.replace(r#""R": [0,1,0,1]"#, r#""R": [0,0,0,0]"#);
    let out = skewalg_stdin(&["repr-decompose"], &bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[invalid-morphism]:"));
}
