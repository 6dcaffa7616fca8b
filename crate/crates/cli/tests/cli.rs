use std::process::{Command, Output};

fn homalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homalg")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn build_and_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oa.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&homalg(&["build", "octonions", "--twisted", "--out", p])), 0);
    let o = homalg(&["check", "multiplicative", p]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = homalg(&["check", "hpa", p]);
    assert_eq!(code(&o), 0);
    let line = String::from_utf8(o.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(line.lines().next().unwrap()).unwrap();
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn failing_check_exits_one() {
    let o = homalg(&["check", "hom-associative", "@twisted-octonions"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("\"fail\""));
}

#[test]
fn inapplicable_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&homalg(&["twist", "@sedenions", "--beta", "@sedenion-listed", "--out", p])), 2);
    // α(e0 e0) = e1 but α(e0)α(e0) = 0.
    let bad = dir.path().join("nm.json");
    std::fs::write(
        &bad,
        r#"{"format_version": 1, "dim": 2, "structure_constants": [[0, 0, 1, "1"]], "alpha": [["0", "0"], ["0", "1"]]}"#,
    )
    .unwrap();
    let o = homalg(&["check", "hpa", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("inapplicable"));
}

#[test]
fn zero_denominator_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"format_version": 1, "dim": 1, "structure_constants": [[0, 0, 0, "1/0"]], "alpha": [["1"]]}"#,
    )
    .unwrap();
    let o = homalg(&["check", "multiplicative", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("zero-denominator"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&homalg(&["frobnicate"])), 2);
    assert_eq!(code(&homalg(&["check", "no-such-property", "@octonions"])), 2);
    assert_eq!(code(&homalg(&["lambda", "@octonions", "--lambda", "x/y"])), 2);
}

#[test]
fn powers_are_seeded() {
    let a = homalg(&["powers", "@twisted-octonions", "--seed", "3", "--max-n", "4"]);
    let b = homalg(&["powers", "@twisted-octonions", "--seed", "3", "--max-n", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8(a.stdout).unwrap().lines().count(), 4);
}

#[test]
fn powers_of_given_element() {
    let o = homalg(&["powers", "@octonions", "--x", "0,1,0,0,0,0,0,0", "--max-n", "2"]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.lines().nth(1).unwrap().contains("\"display\":\"-e0\""), "{out}");
}

#[test]
fn repro_filter_passes() {
    let o = homalg(&["repro", "--filter", "oct-twisted-table"]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8(o.stdout).unwrap();
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("{\"id\":\"oct-twisted-table\",\"provenance\":\"paper\""));
}

#[test]
fn repro_listed_quadruple_fails() {
    let o = homalg(&["repro", "--filter", "sedenion-quadruple-automorphism"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn derive_and_lambda_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.json");
    let l = dir.path().join("l.json");
    assert_eq!(code(&homalg(&["derive", "@twisted-octonions", "--order", "1", "--out", d.to_str().unwrap()])), 0);
    assert_eq!(code(&homalg(&["lambda", "@twisted-octonions", "--lambda", "-3", "--out", l.to_str().unwrap()])), 0);
    assert_eq!(code(&homalg(&["check", "multiplicative", d.to_str().unwrap()])), 0);
    assert_eq!(code(&homalg(&["check", "multiplicative", l.to_str().unwrap()])), 0);
}
