//! Black-box tests of the command-line binary: exit codes, JSON output and
//! run-to-run determinism.

use std::process::{Command, Output};

fn milnor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_milnor"))
        .args(args)
        .output()
        .expect("failed to spawn the binary")
}

#[test]
fn compute_happy_path_json() {
    let out = milnor(&["compute", "--vars", "x,y,z", "--poly", "x*y*z", "--json"]);
    assert!(out.status.success());
    let line = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["tau"], 3);
    assert_eq!(v["ct"], 2);
    assert_eq!(v["st"], 1);
    assert_eq!(v["sat"], 0);
    assert_eq!(v["free"], true);
    assert_eq!(v["T"], 3);
    assert_eq!(v["series"][0], 1);
    assert_eq!(v["numerator_Q"], "1 + 2*t");
}

#[test]
fn smooth_input_reports_infinite_ct() {
    let out = milnor(&["compute", "--vars", "x,y,z", "--poly", "x^3+y^3+z^3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(v["ct"], "infinite");
    assert_eq!(v["tau"], 0);
    assert_eq!(v["reg"], serde_json::Value::Null);
}

#[test]
fn parse_error_exits_2() {
    let out = milnor(&["compute", "--vars", "x,y,z", "--poly", "x*+y"]);
    assert_eq!(out.status.code(), Some(2));
    let out = milnor(&["compute", "--vars", "x,y,z", "--poly", "x^2+y"]);
    assert_eq!(out.status.code(), Some(2));
    let out = milnor(&["compute", "--vars", "x,y,z", "--poly", "x*w"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_isolated_exits_3() {
    let out = milnor(&["compute", "--vars", "x,y,z", "--poly", "x^2*y"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("dim"));
}

#[test]
fn timeout_exits_4() {
    let out = milnor(&[
        "compute",
        "--vars",
        "x,y,z",
        "--poly",
        "x^12+y^12+z^12+x^3*y^4*z^5",
        "--timeout-secs",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn example_subcommand_passes_and_fails() {
    let out = milnor(&["example", "triangle"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("PASS triangle"));
    let out = milnor(&["example", "no-such-example"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn family_subcommand_json() {
    let out = milnor(&["family", "st", "--degrees", "5..6", "--json"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for (line, d) in lines.iter().zip([5u32, 6]) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["d"], d);
        assert_eq!(v["report"]["free"], true);
        assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    }
    let out = milnor(&["family", "nope", "--degrees", "5..6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = milnor(&["family", "st", "--degrees", "6..5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn max_degree_extends_the_series() {
    let out = milnor(&[
        "compute", "--vars", "x,y,z", "--poly", "x*y*z", "--max-degree", "9", "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(v["series"].as_array().unwrap().len(), 10);
    assert_eq!(v["series"][9], 3);
}

#[test]
fn output_is_deterministic() {
    let run = || {
        milnor(&[
            "compute",
            "--vars",
            "x,y,z",
            "--poly",
            "(x^2-y^2)*(y^2-z^2)*(x^2-z^2)",
            "--json",
        ])
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn list_examples_names_the_corpus() {
    let out = milnor(&["list-examples"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["triangle", "simis-sextic", "st-d15", "cd-d15"] {
        assert!(text.contains(name), "missing {name}");
    }
}
