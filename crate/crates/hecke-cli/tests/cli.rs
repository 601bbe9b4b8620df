use std::process::{Command, Output};

use hecke_core::cali::enumerate_cali;
use hecke_core::Charge;
use serde_json::Value;

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).output().expect("run hecke")
}

fn json(args: &[&str]) -> Value {
    let out = hecke(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn locus_of_two_one() {
    let v = json(&["locus", "--partition", "2,1"]);
    assert_eq!(v["interval"], serde_json::json!(["-1/3", "1/3"]));
    assert_eq!(v["points"], serde_json::json!([]));
    let v = json(&["locus", "--partition", "3,3,2", "--c", "1/4"]);
    assert_eq!(v["query"]["contains"], true);
}

#[test]
fn classify_empty() {
    let v = json(&["classify", "--e", "3", "--charge", "0,1", "--n", "0"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["multipartition"], serde_json::json!([[], []]));
    assert_eq!(rows[0]["cali"], true);
}

#[test]
fn classify_example_row() {
    let v = json(&["classify", "--e", "7", "--charge", "0,1,4", "--n", "11"]);
    let row = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["multipartition"] == serde_json::json!([[2, 2], [2], [3, 2]]))
        .expect("row present");
    assert_eq!(row["cali"], true);
    assert_eq!(row["flotw"], true);
    assert_eq!(row["alcove_length"], 0);
}

#[test]
fn classify_counts_match_enumeration() {
    for (s, e, n) in [("0,2", 4, 5), ("0,1,3", 5, 4), ("0", 3, 7)] {
        let v = json(&["classify", "--e", &e.to_string(), "--charge", s, "--n", &n.to_string()]);
        let rows = v["rows"].as_array().unwrap();
        let cali = rows.iter().filter(|r| r["cali"] == true).count();
        let ch = Charge::new(s.split(',').map(|x| x.parse().unwrap()).collect(), e).unwrap();
        assert_eq!(cali, enumerate_cali(n, &ch).unwrap().len(), "s={s} e={e} n={n}");
        assert!(rows.iter().all(|r| r["flotw"] == true));
    }
}

#[test]
fn malformed_charge_is_a_usage_error() {
    let out = hecke(&["classify", "--e", "3", "--charge", "0,5", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "CHARGE_NOT_CYLINDRICAL");
    let out = hecke(&["classify", "--e", "3", "--charge", "0,x", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hecke(&["seminormal", "--e", "4", "--a", "2", "--weight", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hecke(&["locus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seminormal_report() {
    let v = json(&["seminormal", "--e", "4", "--partition", "2,1", "--charge", "0"]);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["relations_hold"], true);
    assert_eq!(v["hermitian"], true);
    assert_eq!(v["unitary"], true);
    assert_eq!(v["cyclotomic_membership"], true);
}

#[test]
fn bgg_report() {
    let v = json(&["bgg", "--e", "4", "--charge", "0", "--multipartition", "[[2,2,2]]"]);
    assert_eq!(v["euler"]["holds"], true);
    // 5 - 9 + 5
    assert_eq!(v["euler"]["alternating_sum"], 1);
    assert_eq!(v["graded_identity"], true);
    assert_eq!(v["klr_relations"], true);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let args = ["bgg", "--e", "5", "--charge", "0,2", "--multipartition", "[[2,1],[1]]"];
    let a = hecke(&args);
    let b = hecke(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again.as_bytes(), a.stdout.as_slice());
}

#[test]
fn tsv_has_a_header_and_uniform_rows() {
    let out = hecke(&["classify", "--e", "4", "--charge", "0,2", "--n", "3", "--format", "tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let widths: Vec<usize> = text.lines().map(|l| l.split('\t').count()).collect();
    assert!(text.starts_with("multipartition\t"));
    assert!(widths.iter().all(|&w| w == 6));
}

#[test]
fn verify_klr_on_the_full_sweep() {
    let out = hecke(&["verify", "klr", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["outcomes"][0]["id"], 11);
}

#[test]
fn verify_small_suites() {
    for suite in ["crystal", "seminormal", "geometry", "locus", "dominance"] {
        let out = hecke(&["verify", suite, "--n", "4", "--format", "tsv"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
    }
}
