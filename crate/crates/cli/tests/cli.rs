use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn lcsq() -> Command {
    let mut c = Command::cargo_bin("lcsq").unwrap();
    c.env_remove("LCSQ_RESOURCE_CAP");
    c
}

fn json(args: &[&str]) -> Value {
    let out = lcsq()
        .args(args)
        .args(["--format", "json"])
        .output()
        .unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn cyclic_word_dimensions() {
    lcsq()
        .args(["dims", "--m", "1", "--n", "2", "--deg-max", "5"])
        .assert()
        .success()
        .stdout("2, 3, 4, 6, 8\n");
}

#[test]
fn second_quotient_dimensions() {
    lcsq()
        .args(["dims", "--m", "2", "--n", "2", "--deg-max", "5"])
        .assert()
        .success()
        .stdout("0, 1, 2, 3, 4\n");
}

#[test]
fn dims_as_csv() {
    lcsq()
        .args([
            "dims",
            "--m",
            "3",
            "--n",
            "3",
            "--deg-max",
            "4",
            "--format",
            "csv",
        ])
        .assert()
        .success()
        .stdout("degree,dim\n1,0\n2,0\n3,8\n4,24\n");
}

#[test]
fn dims_json_is_versioned() {
    let v = json(&["dims", "--m", "3", "--n", "2", "--deg-max", "6"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["instance"]["m"], 3);
    assert_eq!(v["dims"], serde_json::json!([0, 0, 2, 4, 6, 8]));
}

#[test]
fn decompose_single_module() {
    let v = json(&["decompose", "--m", "3", "--n", "3", "--deg-max", "7"]);
    assert_eq!(v["decomposition"], serde_json::json!({ "[2,1,0]": 1 }));
    assert_eq!(v["deg_reliable"], 7);
    assert_eq!(v["remainder_zero"], true);
}

#[test]
fn decompose_second_quotient_into_one_column() {
    let v = json(&["decompose", "--m", "2", "--n", "2", "--deg-max", "8"]);
    assert_eq!(v["decomposition"], serde_json::json!({ "[1,1]": 1 }));
}

#[test]
fn decompose_zero_character() {
    let v = json(&["decompose", "--m", "3", "--n", "3", "--deg-max", "2"]);
    assert_eq!(v["decomposition"], serde_json::json!({}));
}

#[test]
fn verify_out_of_hypothesis_instance() {
    let v = json(&["verify", "--m", "2", "--n", "2"]);
    assert_eq!(v["checks"]["bound"]["status"], "skipped");
    assert_eq!(v["checks"]["de_rham"]["status"], "pass");
    assert_eq!(v["bound"], Value::Null);
    assert_eq!(v["pass"], true);
    lcsq()
        .args(["verify", "--m", "2", "--n", "2"])
        .assert()
        .code(0);
}

#[test]
fn verify_kernel_suite_by_numeric_id() {
    lcsq()
        .args(["verify", "--lemma", "3.1", "--n", "4"])
        .assert()
        .success()
        .stdout(predicate::str::contains("phi_kernel[n=4]: pass"));
}

#[test]
fn verify_rearrangement_suite_by_name() {
    lcsq()
        .args(["verify", "--lemma", "rearrangement", "--m", "5"])
        .assert()
        .success()
        .stdout(predicate::str::contains("14 certificates"));
}

#[test]
fn default_suite_reports_the_standard_monomial_mismatch() {
    let out = lcsq()
        .args(["verify", "--suite", "default", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.trim(), "failed: standard_monomials[m=3,n=2]");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 5);
    assert!(reports
        .iter()
        .all(|r| r["pass"] == true && r["domination_ok"] == true));
    let failing: Vec<&String> = v["checks"]
        .as_object()
        .unwrap()
        .iter()
        .filter(|(_, c)| c["status"] == "fail")
        .map(|(k, _)| k)
        .collect();
    assert_eq!(failing, ["standard_monomials[m=3,n=2]"]);
}

#[test]
fn unknown_lemma_is_a_config_error() {
    lcsq()
        .args(["verify", "--lemma", "9.9"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("unknown lemma"));
}

#[test]
fn resource_cap_from_environment() {
    lcsq()
        .env("LCSQ_RESOURCE_CAP", "10")
        .args(["dims", "--m", "2", "--n", "2", "--deg-max", "5"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("resource cap 10"));
}

#[test]
fn zero_degree_is_rejected() {
    lcsq()
        .args(["dims", "--m", "2", "--n", "2", "--deg-max", "0"])
        .assert()
        .code(2);
}

#[test]
fn prime_field_mode_agrees() {
    let exact = json(&["dims", "--m", "4", "--n", "2", "--deg-max", "8"]);
    let fast = json(&[
        "dims",
        "--m",
        "4",
        "--n",
        "2",
        "--deg-max",
        "8",
        "--mode",
        "prime-field",
    ]);
    assert_eq!(exact["dims"], fast["dims"]);
}

#[test]
fn fixtures_refuse_prime_field_mode() {
    let dir = tempfile::tempdir().unwrap();
    lcsq()
        .args(["fixtures", "--mode", "prime-field", "--dir"])
        .arg(dir.path())
        .assert()
        .code(2);
}

#[test]
fn output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dims.txt");
    lcsq()
        .args(["dims", "--m", "2", "--n", "3", "--deg-max", "4", "--out"])
        .arg(&path)
        .assert()
        .success()
        .stdout("");
    assert_eq!(std::fs::read_to_string(path).unwrap(), "0, 3, 8, 15\n");
}

#[test]
fn fixtures_regenerate_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    lcsq()
        .args(["fixtures", "--dir"])
        .arg(dir.path())
        .assert()
        .success();
    let golden = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures");
    let mut count = 0;
    for entry in std::fs::read_dir(&golden).unwrap() {
        let entry = entry.unwrap();
        let fresh = std::fs::read(dir.path().join(entry.file_name())).unwrap();
        assert_eq!(
            fresh,
            std::fs::read(entry.path()).unwrap(),
            "{:?}",
            entry.file_name()
        );
        count += 1;
    }
    assert_eq!(count, 5);
}
