//! End-to-end checks of the `ncx` binary against the fixture corpus.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

fn ncx_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncx"))
        .args(args)
        .current_dir(dir)
        .env_remove("NCX_THREADS")
        .output()
        .expect("binary runs")
}

fn ncx(args: &[&str]) -> Output {
    ncx_in(&fixtures(), args)
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixtures().join(name)).unwrap()
}

#[test]
fn validate_exit_codes() {
    let cases = [
        ("staircase3.json", 0),
        ("staircase2.json", 0),
        ("staircase2_cyc.json", 0),
        ("zero_differential.json", 0),
        ("ses_staircase.json", 0),
        ("qpoly3.json", 0),
        ("n2_nonzero_d2.json", 1),
        ("q_not_primitive.json", 1),
        ("ses_alpha_zero.json", 1),
        ("qpoly3_corrupt.json", 1),
        ("bad_shape.json", 2),
        ("float_scalar.json", 2),
        ("not_prime.json", 2),
        ("unknown_kind.json", 2),
        ("truncated.json", 2),
        ("does_not_exist.json", 2),
    ];
    for (file, expected) in cases {
        let out = ncx(&["validate", file]);
        assert_eq!(code(&out), expected, "{file}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn failures_name_degrees() {
    let out = ncx(&["validate", "n2_nonzero_d2.json"]);
    assert!(stdout(&out).contains("d^2 != 0 starting at degree 0"), "{}", stdout(&out));
    let err = ncx(&["validate", "bad_shape.json"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("degree 0"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&ncx(&["frobnicate"])), 2);
    assert_eq!(code(&ncx(&["qbinom"])), 2);
    assert_eq!(code(&ncx(&["hexagon", "staircase2.json", "--l", "5"])), 2);
    assert_eq!(code(&ncx(&["ses", "ses_staircase.json", "--n", "3"])), 2);
    assert_eq!(code(&ncx(&["cohomology", "staircase3.json", "--k", "7"])), 2);
    assert_eq!(code(&ncx(&["--help"])), 0);
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_ncx"))
        .args(["qbinom", "--N", "3"])
        .env("NCX_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(code(&bad_threads), 2);
}

#[test]
fn text_and_json_verdicts_agree() {
    for (file, expected) in [("staircase3.json", "pass"), ("n2_nonzero_d2.json", "fail"), ("qpoly3_corrupt.json", "fail")] {
        let text = ncx(&["validate", file]);
        let json = ncx(&["--json", "validate", file]);
        assert_eq!(code(&text), code(&json));
        let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
        assert_eq!(v["verdict"], expected);
        assert!(stdout(&text).contains(&format!("verdict: {}", expected.to_uppercase())));
        let digest = v["inputs"][0]["sha256"].as_str().unwrap();
        assert!(stdout(&text).contains(&format!("sha256={digest}")));
    }
}

#[test]
fn examples_reproduce_fixtures_byte_for_byte() {
    let cases: [(&[&str], &str); 5] = [
        (&["examples", "staircase", "--N", "3", "--len", "3", "--field", "fp:7:2"], "staircase3.json"),
        (&["examples", "staircase", "--N", "3", "--len", "2", "--field", "fp:7:2"], "staircase2.json"),
        (&["examples", "staircase", "--N", "3", "--len", "2"], "staircase2_cyc.json"),
        (&["examples", "ses", "--N", "3", "--len", "3", "--cut", "1", "--field", "fp:7:2"], "ses_staircase.json"),
        (&["examples", "qpoly", "--N", "3", "--window", "6", "--field", "fp:7:2"], "qpoly3.json"),
    ];
    for (args, file) in cases {
        let out = ncx(args);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), fixture_text(file), "{file}");
    }
}

#[test]
fn tensor_with_unit_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let unit = dir.path().join("unit.json");
    let made = ncx(&["examples", "staircase", "--N", "3", "--len", "1", "--field", "fp:7:2", "-o", unit.to_str().unwrap()]);
    assert_eq!(code(&made), 0);
    for file in ["staircase3.json", "staircase2.json", "zero_differential.json"] {
        let out = ncx(&["tensor", file, unit.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), fixture_text(file), "{file}");
    }
}

#[test]
fn tensor_of_two_term_staircases() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("t.json");
    let out = ncx(&["tensor", "staircase2.json", "staircase2.json", "-o", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["dims"], serde_json::json!({"0": 1, "1": 2, "2": 1}));
    assert_eq!(v["d"]["0"], serde_json::json!([["1"], ["1"]]));
    assert_eq!(v["d"]["1"], serde_json::json!([["1", "2"]]));
    assert!(stdout(&out).contains("wrote"));
    // the written product validates
    assert_eq!(code(&ncx_in(dir.path(), &["validate", "t.json"])), 0);
}

#[test]
fn tensor_rejects_invalid_factors() {
    let out = ncx(&["tensor", "n2_nonzero_d2.json", "n2_nonzero_d2.json"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("[FAIL] left factor: d^N = 0"), "{text}");
    assert!(text.contains("verdict: FAIL"));
    assert_eq!(code(&ncx(&["tensor", "staircase3.json", "n2_nonzero_d2.json"])), 2);
}

#[test]
fn qbinom_triangle() {
    let out = ncx(&["qbinom", "--N", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("row ")).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4], "row 4: 1,0,0,0,1");
    let fp = stdout(&ncx(&["qbinom", "--N", "3", "--field", "fp:7:2"]));
    assert!(fp.contains("row 2: 1,3,1"));
    assert!(fp.contains("row 3: 1,0,0,1"));
    assert_eq!(code(&ncx(&["qbinom", "--N", "3", "--field", "fp:7:1"])), 1);
}

#[test]
fn cohomology_tables() {
    let zero = stdout(&ncx(&["cohomology", "zero_differential.json"]));
    assert!(zero.contains("H_(1)      2   3"), "{zero}");
    assert!(zero.contains("H_(2)      2   3"), "{zero}");
    let contractible = stdout(&ncx(&["cohomology", "staircase3.json"]));
    assert!(contractible.contains("H_(1)      0   0   0"));
    assert!(contractible.contains("H_(2)      0   0   0"));
    let truncated = ncx(&["--json", "cohomology", "staircase2.json"]);
    let v: Value = serde_json::from_str(&stdout(&truncated)).unwrap();
    let table = &v["data"]["cohomology"];
    assert_eq!(table["1"], serde_json::json!({"1": 1}), "{v}");
    assert_eq!(table["2"], serde_json::json!({"0": 1}), "{v}");
    let reps = stdout(&ncx(&["cohomology", "staircase2.json", "--k", "2", "--representatives"]));
    assert!(!reps.contains("H_(1)"), "{reps}");
}

#[test]
fn ses_prints_connecting_maps() {
    let out = ncx(&["ses", "ses_staircase.json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("del_1 at degree 0: [[1]]"), "{text}");
    assert!(text.contains("del_2 at degree 0: [[1]]"), "{text}");
    assert!(text.contains("[PASS] snake hexagon (n=1) exact"));
    assert!(text.contains("[PASS] snake hexagon (n=2) exact"));
}

#[test]
fn hexagons_of_a_truncated_staircase() {
    let out = ncx(&["hexagon", "staircase2.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("[PASS] hexagon (l=1, m=1) exact"));
}

#[test]
fn nhomog_example_feeds_qdga_check() {
    let dir = tempfile::tempdir().unwrap();
    let made = ncx_in(
        dir.path(),
        &["examples", "nhomog", "--N", "3", "--n", "1", "--maxdeg-alg", "3", "--maxdeg-poly", "3", "-o", "a.json"],
    );
    assert_eq!(code(&made), 0);
    assert!(stdout(&made).contains("algebra dims by degree: (1, 1, 1, 0)"));
    let out = ncx_in(dir.path(), &["qdga", "check", "a.json"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("[PASS] graded algebra"), "{text}");
    assert!(text.contains("[PASS] d^N = 0"), "{text}");
    assert!(text.contains("[FAIL] twisted Leibniz rule"), "{text}");
    assert!(text.contains("x = 1⊗t, y = θ⊗1"), "{text}");
    let good = ncx(&["qdga", "check", "qpoly3.json"]);
    assert_eq!(code(&good), 0);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["cohomology", "staircase2_cyc.json", "--representatives"],
        vec!["--json", "ses", "ses_staircase.json"],
        vec!["selftest", "--seed", "7", "--trials", "4"],
        vec!["examples", "random", "--N", "4", "--seed", "3"],
    ] {
        let first = ncx(&args);
        let second = ncx(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
    let one = Command::new(env!("CARGO_BIN_EXE_ncx"))
        .args(["selftest", "--seed", "11", "--trials", "6"])
        .env("NCX_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_ncx"))
        .args(["selftest", "--seed", "11", "--trials", "6"])
        .env("NCX_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn timing_is_opt_in() {
    let plain = stdout(&ncx(&["qbinom", "--N", "3"]));
    assert!(!plain.contains("wall time"));
    let timed = stdout(&ncx(&["--timing", "qbinom", "--N", "3"]));
    assert!(timed.contains("wall time"));
}

#[test]
fn random_example_validates() {
    let dir = tempfile::tempdir().unwrap();
    for seed in ["0", "1", "2"] {
        let made = ncx_in(dir.path(), &["examples", "random", "--N", "5", "--seed", seed, "--field", "fp:11:3", "-o", "r.json"]);
        assert_eq!(code(&made), 0);
        assert_eq!(code(&ncx_in(dir.path(), &["validate", "r.json"])), 0);
        assert_eq!(code(&ncx_in(dir.path(), &["hexagon", "r.json"])), 0);
    }
}
