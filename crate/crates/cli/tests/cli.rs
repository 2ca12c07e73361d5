use std::io::Write;
use std::process::{Command, Output};

use fdiv_core::measures::{divergence, Measure};
use fdiv_core::simplex::normalize;
use fdiv_core::MeasureId;
use tempfile::NamedTempFile;

fn fdiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn file(suffix: &str, contents: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const GOLDEN_JSON: &str = r#"{"distributions": {"p": [0.75, 0.25], "q": [0.25, 0.75], "u": [1, 1], "z": [1, 0], "t": [1, 1, 1]}}"#;

fn value_of(text: &str, label: &str) -> f64 {
    text.lines()
        .find_map(|l| {
            let mut parts = l.split_whitespace();
            (parts.next() == Some(label)).then(|| parts.next().unwrap().parse().unwrap())
        })
        .unwrap_or_else(|| panic!("no `{label}` line in\n{text}"))
}

#[test]
fn compute_j_on_golden_pair() {
    let f = file(".json", GOLDEN_JSON);
    let path = f.path().to_str().unwrap();
    let out = fdiv(&[
        "compute",
        "--input",
        path,
        "--p",
        "p",
        "--q",
        "q",
        "--measure",
        "J",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let j = value_of(&stdout(&out), "J");
    assert!((j - 1.098_612_3).abs() < 1e-7);
}

#[test]
fn compute_on_identical_names_is_zero() {
    let f = file(".json", GOLDEN_JSON);
    let path = f.path().to_str().unwrap();
    let out = fdiv(&[
        "compute",
        "--input",
        path,
        "--p",
        "u",
        "--q",
        "u",
        "--measure",
        "I",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(value_of(&stdout(&out), "I"), 0.0);
}

#[test]
fn compute_chi2_prints_round_trip_digits() {
    let out = fdiv(&[
        "compute",
        "--p",
        "0.75,0.25",
        "--q",
        "0.25,0.75",
        "--measure",
        "CHI2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("CHI2           1.3333333333333333"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn json_report_round_trips_bit_exactly() {
    let f = file(".json", GOLDEN_JSON);
    let path = f.path().to_str().unwrap();
    let out = fdiv(&[
        "compute", "--input", path, "--p", "p", "--q", "q", "--all", "--s", "-1", "--s", "0.5",
        "--s", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let p = normalize(&[0.75, 0.25]).unwrap();
    let q = normalize(&[0.25, 0.75]).unwrap();
    let rows = doc["values"].as_array().unwrap();
    assert_eq!(rows.len(), 9 + 6 + 3);
    for row in rows {
        let name = row["measure"].as_str().unwrap();
        let s = row["s"].as_f64();
        let m = Measure::from_name(name, s).unwrap();
        let expected = divergence(m, &p, &q).unwrap();
        let got = row["value"].as_f64().unwrap();
        assert_eq!(got.to_bits(), expected.to_bits(), "{name}");
    }
    assert_eq!(doc["R"].as_f64(), Some(3.0));
}

#[test]
fn csv_input_and_output() {
    let f = file(".csv", "p,3,1\nq,1,3\n");
    let path = f.path().to_str().unwrap();
    let out = fdiv(&[
        "compute",
        "--input",
        path,
        "--p",
        "p",
        "--q",
        "q",
        "--measure",
        "J",
        "--measure",
        "K",
        "--format",
        "csv",
        "--bits",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("measure,s,value,units"));
    let j: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(j[0], "J");
    assert!((j[2].parse::<f64>().unwrap() - 3f64.log2()).abs() < 1e-12);
    assert_eq!(j[3], "bits");
}

#[test]
fn input_format_override() {
    let f = file(".txt", "p,3,1\nq,1,3\n");
    let path = f.path().to_str().unwrap();
    let out = fdiv(&[
        "compute",
        "--input",
        path,
        "--p",
        "p",
        "--q",
        "q",
        "--measure",
        "J",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = fdiv(&[
        "compute",
        "--input",
        path,
        "--input-format",
        "csv",
        "--p",
        "p",
        "--q",
        "q",
        "--measure",
        "J",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_2_and_name_the_distribution() {
    let f = file(".json", GOLDEN_JSON);
    let path = f.path().to_str().unwrap();

    let out = fdiv(&[
        "compute",
        "--input",
        path,
        "--p",
        "z",
        "--q",
        "u",
        "--measure",
        "J",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("`z`"), "{}", stderr(&out));

    let out = fdiv(&[
        "compute",
        "--input",
        path,
        "--p",
        "z",
        "--q",
        "u",
        "--measure",
        "J",
        "--smooth",
        "0.5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let out = fdiv(&[
        "compute",
        "--input",
        path,
        "--p",
        "nosuch",
        "--q",
        "u",
        "--measure",
        "J",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("nosuch"));

    let out = fdiv(&[
        "compute",
        "--input",
        path,
        "--p",
        "p",
        "--q",
        "t",
        "--measure",
        "J",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = fdiv(&[
        "compute",
        "--input",
        "/nonexistent/file.json",
        "--p",
        "p",
        "--q",
        "q",
        "--all",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = fdiv(&[
        "compute",
        "--p",
        "0.75,0.25",
        "--q",
        "0.25,0.75",
        "--measure",
        "PHI",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = fdiv(&["compute", "--p", "0.75,0.25", "--q", "0.25,0.75"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_for_i_at_s_1() {
    let out = fdiv(&[
        "bounds",
        "--p",
        "0.75,0.25",
        "--q",
        "0.25,0.75",
        "--measure",
        "I",
        "--s",
        "1",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((doc["lower"].as_f64().unwrap() - 0.068_663_3).abs() < 1e-6);
    assert!((doc["upper"].as_f64().unwrap() - 0.205_989_8).abs() < 1e-6);
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["source"], "closed_form");
    assert!((doc["A"].as_f64().unwrap() - 1.464_816_4).abs() < 1e-6);
}

#[test]
fn bounds_reports_fallback_in_the_gap() {
    let out = fdiv(&[
        "bounds",
        "--p",
        "0.75,0.25",
        "--q",
        "0.25,0.75",
        "--measure",
        "D1",
        "--s",
        "1",
        "--method",
        "closed",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("fell back to numeric"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn bounds_on_identical_pair_are_zero() {
    let out = fdiv(&[
        "bounds",
        "--p",
        "0.6,0.4",
        "--q",
        "0.6,0.4",
        "--measure",
        "T",
        "--s",
        "-0.5",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["lower", "value", "upper"] {
        assert_eq!(doc[key].as_f64(), Some(0.0), "{key}");
    }
}

#[test]
fn bounds_rejects_measures_without_generator() {
    let out = fdiv(&[
        "bounds",
        "--p",
        "0.6,0.4",
        "--q",
        "0.4,0.6",
        "--measure",
        "CHI2",
        "--s",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_suite_and_unknown_suite() {
    let out = fdiv(&["verify", "--suite", "eq194", "--trials", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("eq194"));

    let out = fdiv(&["verify", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("nosuch"));

    let out = fdiv(&["verify", "--suite", "eq3", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json() {
    let out = fdiv(&[
        "verify", "--suite", "prop51", "--suite", "thm41", "--trials", "25", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["violations"], 0);
    assert_eq!(doc["suites"].as_array().unwrap().len(), 2);
    assert_eq!(doc["suites"][0]["suite"], "prop51");
}

#[test]
fn catalog_text_and_json() {
    let out = fdiv(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("D1: relative J-divergence"));
    assert!(text.contains("f″(x) = (x+3)/(x+1)²"));
    assert!(text.contains("closed-form m, M: s ≤ 3/4 or s ≥ 2"));
    assert!(text.contains("global sup g at s = 1 is 9/8, attained at x = 3"));

    let out = fdiv(&["catalog", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = doc.as_array().unwrap();
    assert_eq!(entries.len(), 10);
    let ids: Vec<&str> = entries.iter().map(|e| e["id"].as_str().unwrap()).collect();
    let mut expected: Vec<&str> = MeasureId::FIXED.iter().map(MeasureId::name).collect();
    expected.push("PHI");
    assert_eq!(ids, expected);
    assert!(entries[9]["closed_form"].is_null());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fdiv(&[]).status.code(), Some(2));
    assert_eq!(fdiv(&["compute", "--measure", "J"]).status.code(), Some(2));
    assert_eq!(fdiv(&["verify"]).status.code(), Some(2));
    assert_eq!(fdiv(&["catalog", "--bogus"]).status.code(), Some(2));
}
