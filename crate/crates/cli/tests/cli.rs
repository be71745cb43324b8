use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use torus_jones_cli::OutputRecord;

fn jones_asy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jones-asy"))
        .args(args)
        .env_remove("JONES_ASY_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = jones_asy(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/output-record.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

const INVOCATIONS: &[&[&str]] = &[
    &["eval", "--a", "2", "--b", "3", "--N", "12", "--r", "1-0.1i", "--method", "all"],
    &["eval", "--a", "3", "--b", "5", "--N", "500", "--r", "1+0.1i", "--tol", "1e-9"],
    &["limit", "--a", "2", "--b", "3", "--r", "1-0.2i", "--n", "100:500:100"],
    &["limit", "--a", "2", "--b", "3", "--r", "1+0.1i", "--n", "60:300:20", "--threads", "3"],
    &["limit", "--a", "2", "--b", "5", "--r", "1.0", "--n", "50:500:50"],
    &["asympt", "--a", "2", "--b", "3", "--r", "1-0.1i", "--N", "200"],
    &["asympt", "--a", "2", "--b", "3", "--r", "1+0.1i", "--N", "200"],
    &["scan", "--a", "2", "--b", "3", "--im=-0.2,-0.1,0.1,0.2", "--n", "60:300:20"],
    &["residues", "--a", "2", "--b", "3", "--r", "1+0.3i"],
];

#[test]
fn every_output_validates_against_the_schema() {
    let validator = schema();
    for args in INVOCATIONS {
        let v = stdout_json(args);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn parsed_output_reproduces_the_record() {
    for args in INVOCATIONS {
        let out = jones_asy(args);
        let record: OutputRecord = serde_json::from_slice(&out.stdout).unwrap();
        let again = serde_json::to_string_pretty(&record).unwrap() + "\n";
        assert_eq!(again.as_bytes(), &out.stdout[..], "{args:?}");
    }
}

#[test]
fn inputs_are_echoed_exactly() {
    let v = stdout_json(&["eval", "--a", "2", "--b", "5", "--N", "7", "--r", "0.93-0.17i", "--tol", "1e-9"]);
    let inputs = &v["inputs"];
    assert_eq!(inputs["a"], 2);
    assert_eq!(inputs["N"], 7);
    assert_eq!(inputs["r"]["re"].as_f64(), Some(0.93));
    assert_eq!(inputs["r"]["im"].as_f64(), Some(-0.17));
    assert_eq!(inputs["tol"].as_f64(), Some(1e-9));
}

#[test]
fn identical_runs_write_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    for (i, args) in INVOCATIONS.iter().enumerate() {
        for format in ["json", "csv"] {
            let mut bytes = Vec::new();
            for (run, threads) in ["1", "4"].iter().enumerate() {
                let path = dir.path().join(format!("{i}-{run}.{format}"));
                let mut full: Vec<&str> = args.to_vec();
                if let Some(i) = full.iter().position(|a| *a == "--threads") {
                    full.drain(i..i + 2);
                }
                let p = path.to_str().unwrap();
                full.extend(["--format", format, "--out", p]);
                let out = Command::new(env!("CARGO_BIN_EXE_jones-asy"))
                    .args(&full)
                    .env("JONES_ASY_THREADS", threads)
                    .output()
                    .unwrap();
                assert!(out.status.success(), "{full:?}");
                assert!(out.stdout.is_empty());
                bytes.push(std::fs::read(&path).unwrap());
            }
            assert_eq!(bytes[0], bytes[1], "{args:?} as {format}");
        }
    }
}

#[test]
fn eval_examples() {
    let v = stdout_json(&["eval", "--a", "2", "--b", "3", "--N", "1", "--r", "1-0.1i", "--method", "sum"]);
    let row = &v["rows"][0];
    assert!((row["re"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(row["im"].as_f64().unwrap().abs() < 1e-12);

    let v = stdout_json(INVOCATIONS[0]);
    let rows = v["rows"].as_array().unwrap();
    let methods: Vec<&str> = rows.iter().map(|r| r["method"].as_str().unwrap()).collect();
    assert_eq!(methods, ["sum", "recursion", "integral"]);
    assert!(rows[1]["rel_diff_vs_first"].as_f64().unwrap() < 1e-10);
    assert!(rows[2]["rel_diff_vs_first"].as_f64().unwrap() < 1e-7);
    assert!(rows[2]["quad_error_estimate"].is_number());
}

#[test]
fn huge_values_are_reported_in_log_form() {
    let v = stdout_json(INVOCATIONS[1]);
    let row = &v["rows"][0];
    assert!(row["log_mag"].as_f64().unwrap() > 700.0);
    assert!(row.get("re").is_none() && row.get("im").is_none());
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn limit_compares_with_the_closed_forms() {
    let v = stdout_json(INVOCATIONS[2]);
    let fit = v["rows"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(fit["row"], "fit");
    assert!(fit["distance"].as_f64().unwrap() < 1e-3);

    let v = stdout_json(INVOCATIONS[3]);
    let fit = v["rows"].as_array().unwrap().last().unwrap().clone();
    assert!(fit["distance"].as_f64().unwrap() < 1e-2);

    let v = stdout_json(INVOCATIONS[4]);
    let fit = v["rows"].as_array().unwrap().last().unwrap().clone();
    let p = fit["p"].as_f64().unwrap();
    assert!((1.35..=1.65).contains(&p));
    assert!(v["warnings"][0].as_str().unwrap().contains("real"));
}

#[test]
fn asympt_reports_the_dominant_term() {
    let v = stdout_json(INVOCATIONS[5]);
    let rows = v["rows"].as_array().unwrap();
    let ks: Vec<i64> = rows.iter().filter_map(|r| r["k"].as_i64()).collect();
    assert_eq!(ks, [1, 5]);
    assert_eq!(rows.last().unwrap()["dominant"], "Saddle");

    let v = stdout_json(INVOCATIONS[6]);
    let total = v["rows"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(total["dominant"], "Residue(1)");
    assert!(total["rel_diff"].as_f64().unwrap() < 1e-10);
}

#[test]
fn scan_keeps_grid_order() {
    let v = stdout_json(INVOCATIONS[7]);
    let ims: Vec<f64> = v["rows"].as_array().unwrap().iter().map(|r| r["im_r"].as_f64().unwrap()).collect();
    assert_eq!(ims, [-0.2, -0.1, 0.1, 0.2]);
}

#[test]
fn csv_has_a_header_and_one_line_per_row() {
    let out = jones_asy(&["residues", "--a", "2", "--b", "3", "--r", "1+0.3i", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(&reader.headers().unwrap()[0], "k");
    let ks: Vec<String> = reader.records().map(|r| r.unwrap()[0].to_string()).collect();
    assert_eq!(ks, ["1", "5", "7"]);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| jones_asy(args).status.code().unwrap();
    // parse errors
    assert_eq!(code(&["eval", "--a", "2", "--b", "3", "--N", "3", "--r", "1 - 0.1i"]), 2);
    assert_eq!(code(&["eval", "--a", "2", "--b", "3", "--N", "3", "--r", "1-0.1j"]), 2);
    assert_eq!(code(&["limit", "--a", "2", "--b", "3", "--r", "1-0.1i", "--n", "10:5:1"]), 2);
    assert_eq!(code(&["scan", "--a", "2", "--b", "3", "--im=-0.1,0,0.1", "--n", "60:120:20"]), 2);
    assert_eq!(code(&["eval", "--a", "2", "--b", "3", "--N", "0", "--r", "1-0.1i"]), 2);
    // library errors
    assert_eq!(code(&["eval", "--a", "4", "--b", "6", "--N", "3", "--r", "1-0.1i"]), 3);
    assert_eq!(code(&["eval", "--a", "2", "--b", "3", "--N", "3", "--r", "1"]), 3);
    assert_eq!(code(&["limit", "--a", "2", "--b", "3", "--r", "1-0.2i", "--n", "10:30:10"]), 3);
    assert_eq!(code(&["limit", "--a", "2", "--b", "3", "--r", "0.5", "--n", "50:300:50"]), 3);
}

#[test]
fn library_errors_name_the_variant_on_stderr() {
    let out = jones_asy(&["eval", "--a", "4", "--b", "6", "--N", "3", "--r", "1-0.1i"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("InvalidKnot"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn boundary_residue_reports_k() {
    // r = 1 - 0.1i scaled so that ab |r| h(theta) lands on k = 5
    let theta = (-0.1f64).atan2(1.0);
    let h = theta.cos() + theta.sin() * (theta / 2.0 + std::f64::consts::FRAC_PI_4).tan();
    let scale = 5.0 / (6.0 * h);
    let r = format!("{:.15}-{:.15}i", scale * theta.cos(), -scale * theta.sin());
    let out = jones_asy(&["asympt", "--a", "2", "--b", "3", "--r", &r, "--N", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("BoundaryResidue") && err.contains("k = 5"), "{err}");
}

#[test]
fn bad_thread_environment_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_jones-asy"))
        .args(["residues", "--a", "2", "--b", "3", "--r", "1+0.3i"])
        .env("JONES_ASY_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
