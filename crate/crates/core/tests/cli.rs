use std::path::Path;
use std::process::{Command, Output};

use gqd::cli::{EXIT_OK, EXIT_TOLERANCE, EXIT_VALIDATION};

const BELL: &str = r#"{"dim":4,"re":[[0.5,0,0,0.5],[0,0,0,0],[0,0,0,0],[0.5,0,0,0.5]],"im":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}"#;
const MIXED: &str = r#"{"dim":4,"re":[[0.25,0,0,0],[0,0.25,0,0],[0,0,0.25,0],[0,0,0,0.25]],"im":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}"#;
const NOT_X: &str = r#"{"dim":4,"re":[[0.25,0.1,0,0],[0.1,0.25,0,0],[0,0,0.25,0],[0,0,0,0.25]],"im":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}"#;

fn gqd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gqd")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn measure_bell_and_mixed() {
    let dir = tempfile::tempdir().unwrap();
    let out = gqd(&["measure", &write(dir.path(), "bell.json", BELL)]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let v = json(&out);
    for k in ["dg1", "dg2", "concurrence"] {
        assert!((v[k].as_f64().unwrap() - 1.0).abs() < 1e-12, "{k}");
    }
    let v = json(&gqd(&["measure", &write(dir.path(), "mixed.json", MIXED)]));
    for k in ["dg1", "dg2", "concurrence"] {
        assert!(v[k].as_f64().unwrap().abs() < 1e-15, "{k}");
    }
}

#[test]
fn measure_routes_non_x_to_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "nx.json", NOT_X);
    let out = gqd(&["measure", &path]);
    assert_eq!(out.status.code(), Some(EXIT_VALIDATION));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not X-shaped"));
    let out = gqd(&["measure", &path, "--oracle"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let v = json(&out);
    assert!(v.get("dg1").is_none() && v["oracle"]["dg2"].is_number());
}

#[test]
fn measure_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"dim":2,"re":[[0.7,0],[0,0.7]],"im":[[0,0],[0,0]]}"#);
    assert_eq!(gqd(&["measure", &bad]).status.code(), Some(EXIT_VALIDATION));
    let garbage = write(dir.path(), "garbage.json", "not json");
    assert_eq!(gqd(&["measure", &garbage]).status.code(), Some(EXIT_VALIDATION));
    let missing = dir.path().join("missing.json");
    assert_eq!(gqd(&["measure", missing.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn dynamics_rows() {
    let out =
        gqd(&["dynamics", "--alpha", "0.7071067811865476", "--kt", "0,0.6931471805599453", "--pairs", "c1c2,r1r2"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "alpha,kappa_t,pair,dg1,dg2,concurrence,hierarchy_gap");
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[2], "0.707106781187,0,r1r2,0,0,0,0");
    let half: Vec<&str> = lines[3].split(',').collect();
    assert_eq!((half[2], half[3]), ("c1c2", "0.5"));
    assert_eq!(gqd(&["dynamics", "--pairs", "c2r2"]).status.code(), Some(EXIT_VALIDATION));
    assert_eq!(gqd(&["dynamics", "--kt", "0:1:0"]).status.code(), Some(EXIT_VALIDATION));
}

#[test]
fn classify_report() {
    let out = gqd(&["classify", "--alpha", "0.4,0.7071067811865476,0.9"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[1].starts_with("0.4,I,2,"));
    assert!(lines[2].starts_with("0.707106781187,II,1,"));
    assert!(lines[3].starts_with("0.9,III,0,"));
    assert!(lines[4].starts_with("# alpha_revival,0.577"));
    assert!(lines[5].starts_with("# alpha_sudden,0.7647"));
}

#[test]
fn monogamy_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.csv");
    let out = gqd(&["monogamy", "--kt", "0:5:0.5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let m3sq = header.iter().position(|h| *h == "m3sq").unwrap();
    let mut rows = 0;
    for l in lines {
        let v: f64 = l.split(',').nth(m3sq).unwrap().parse().unwrap();
        assert!(v.abs() < 1e-12);
        rows += 1;
    }
    assert_eq!(rows, 11);
}

#[test]
fn oracle_check_report() {
    let out = gqd(&["oracle-check", "--samples", "10", "--gqd1-samples", "2", "--starts", "16", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().skip(1).take(4).all(|l| l.ends_with(",pass")), "{text}");
    assert_eq!(gqd(&["oracle-check", "--samples", "0"]).status.code(), Some(EXIT_VALIDATION));
    assert_ne!(EXIT_TOLERANCE, EXIT_VALIDATION);
}

#[test]
fn usage_errors() {
    assert_eq!(gqd(&["frobnicate"]).status.code(), Some(EXIT_VALIDATION));
    assert_eq!(gqd(&["classify", "--jobs", "0"]).status.code(), Some(EXIT_VALIDATION));
    assert_eq!(gqd(&["--help"]).status.code(), Some(EXIT_OK));
}
