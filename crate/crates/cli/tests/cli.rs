use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cogrowth"))
        .args(args)
        .env_remove("COGROWTH_ORACLE_MAX_LEN")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/schemas")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(schema_name: &str, text: &str) {
    let instance: Value = serde_json::from_str(text).unwrap();
    let validator = jsonschema::validator_for(&schema(schema_name)).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(&instance)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
}

#[test]
fn bs11_cogrowth_sequence() {
    assert_eq!(
        stdout(&["series", "--N", "1", "--M", "1", "--order", "6", "--q0"]).trim(),
        "1,0,4,0,36,0,400"
    );
}

#[test]
fn order_zero_series() {
    assert_eq!(
        stdout(&["series", "--N", "2", "--M", "2", "--order", "0", "--q1"]).trim(),
        "1"
    );
    assert_eq!(
        stdout(&["series", "--N", "2", "--M", "2", "--order", "0"]).trim(),
        "z^0: 1"
    );
}

#[test]
fn series_and_oracle_agree() {
    let series = stdout(&[
        "series", "--N", "2", "--M", "3", "--order", "8", "--q0", "--output", "json",
    ]);
    let oracle = stdout(&[
        "oracle", "--N", "2", "--M", "3", "--nmax", "8", "--family", "g", "--output", "json",
    ]);
    let series: Value = serde_json::from_str(&series).unwrap();
    let oracle: Value = serde_json::from_str(&oracle).unwrap();
    let mut diag = vec!["0".to_string(); 9];
    for row in oracle["rows"].as_array().unwrap() {
        if row["k"] == 0 {
            diag[row["n"].as_u64().unwrap() as usize] = row["count"].as_str().unwrap().to_string();
        }
    }
    let coeffs: Vec<String> = series["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect();
    assert_eq!(coeffs, diag);
}

#[test]
fn symbolic_series_match_oracle_for_l_family() {
    let series = stdout(&[
        "series", "--N", "2", "--M", "1", "--order", "7", "--gf", "L", "--output", "csv",
    ]);
    let oracle = stdout(&[
        "oracle", "--N", "2", "--M", "1", "--nmax", "7", "--family", "l",
    ]);
    assert_eq!(series, oracle);
}

#[test]
fn oracle_examples() {
    let g = stdout(&[
        "oracle", "--N", "2", "--M", "2", "--nmax", "6", "--family", "g",
    ]);
    assert!(g.lines().any(|l| l == "2,0,4"));
    let bs11 = stdout(&[
        "oracle", "--N", "1", "--M", "1", "--nmax", "8", "--output", "text",
    ]);
    assert!(bs11.lines().any(|l| l == "g(8,0) = 4900"));
    let d = stdout(&[
        "oracle", "--N", "2", "--M", "2", "--nmax", "8", "--family", "d",
    ]);
    assert!(d.starts_with("n,count\n0,1\n"));
    assert!(d.lines().any(|l| l == "6,12"));
}

#[test]
fn guard_and_argument_errors_exit_2() {
    assert_eq!(
        run(&["oracle", "--N", "2", "--nmax", "30"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["series", "--N", "0", "--M", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["series", "--N", "1", "--q0", "--q1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["rate", "--N", "9"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "--N", "12"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn poly_prints_canonical_form() {
    let text = stdout(&["poly", "--N", "2"]);
    assert!(text.starts_with("+1 +3*G*z*Q -1*G^2"), "{text}");
    let json = stdout(&["poly", "--N", "3", "--output", "json"]);
    assert_valid("poly.schema.json", &json);
}

#[test]
fn verify_exit_status() {
    assert!(run(&["verify", "--N", "3", "--order", "16"])
        .status
        .success());
    assert!(run(&["verify", "--N", "2", "--order", "12", "--q1"])
        .status
        .success());
}

#[test]
fn rate_outputs() {
    let json = stdout(&["rate", "--N", "2", "--method", "discriminant"]);
    assert_valid("rate.schema.json", &json);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert!((v["mu"].as_f64().unwrap() - 3.792765039).abs() < 5e-9);
    let text = stdout(&["rate", "--N", "2", "--output", "text"]);
    assert!(text.contains("mu=3.79276503818"), "{text}");
    let ratio = stdout(&["rate", "--N", "3", "--method", "ratio", "--order", "24"]);
    assert_valid("rate.schema.json", &ratio);
}

#[test]
fn json_outputs_validate() {
    for args in [
        &[
            "series", "--N", "2", "--M", "3", "--order", "6", "--output", "json",
        ][..],
        &[
            "series", "--N", "3", "--order", "6", "--q1", "--output", "json",
        ][..],
    ] {
        assert_valid("series.schema.json", &stdout(args));
    }
    for family in ["g", "l", "k", "d"] {
        let out = stdout(&[
            "oracle", "--N", "2", "--M", "3", "--nmax", "6", "--family", family, "--output", "json",
        ]);
        assert_valid("oracle.schema.json", &out);
    }
    let bad = serde_json::json!({"N": 0, "M": 1, "nmax": 3, "family": "x", "rows": []});
    assert!(!jsonschema::validator_for(&schema("oracle.schema.json"))
        .unwrap()
        .is_valid(&bad));
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("series.csv");
    let path_str = path.to_str().unwrap();
    let args = [
        "series",
        "--N",
        "3",
        "--M",
        "2",
        "--order",
        "9",
        "--output",
        "csv",
        "--output-path",
        path_str,
    ];
    assert!(run(&args).status.success());
    let first = std::fs::read(&path).unwrap();
    assert!(run(&args).status.success());
    assert_eq!(first, std::fs::read(&path).unwrap());
    let a = stdout(&["rate", "--N", "4"]);
    let b = stdout(&["rate", "--N", "4"]);
    assert_eq!(a, b);
}

#[test]
fn repro_report() {
    let out = run(&["repro"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_valid("repro.schema.json", &text);
    let report: Value = serde_json::from_str(&text).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let passed = |name: &str| {
        checks.iter().find(|c| c["name"] == name).unwrap()["passed"]
            .as_bool()
            .unwrap()
    };
    for name in [
        "bs11-closed-form",
        "oracle-BS(2,3)",
        "equation-N5",
        "rate-N2",
        "ratio-N6",
    ] {
        assert!(passed(name), "{name}");
    }
    let expected = if report["all_passed"].as_bool().unwrap() {
        0
    } else {
        1
    };
    assert_eq!(out.status.code(), Some(expected));
}
