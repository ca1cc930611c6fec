use std::process::{Command, Output};

use serde_json::Value;

fn trilat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trilat"))
        .args(args)
        .env_remove("TRILAT_GUARD_LIMIT")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn coeffs(v: &Value) -> Vec<String> {
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

fn totals(table: &Value) -> Vec<u64> {
    let mut t = vec![0; table["n_max"].as_u64().unwrap() as usize + 1];
    for e in table["entries"].as_array().unwrap() {
        let n = e["n"].as_u64().unwrap() as usize;
        t[n] += e["count"].as_str().unwrap().parse::<u64>().unwrap();
    }
    t
}

#[test]
fn count_corner_triangle() {
    let v = json_of(&trilat(&["count", "--d", "2", "--L", "2", "--start", "2,0,0", "--n", "6", "--format", "json"]));
    assert_eq!(v["d"], 2);
    assert_eq!(v["L"], 2);
    assert_eq!(totals(&v), vec![1, 2, 8, 24, 80, 256, 832]);
}

#[test]
fn count_small_domains() {
    let out = trilat(&["count", "--d", "1", "--L", "1", "--start", "1,0", "--n", "4", "--format", "plain"]);
    assert_eq!(stdout(&out), "1,1,1,1,1\n");
    let out = trilat(&["count", "--d", "2", "--L", "0", "--start", "0,0,0", "--n", "5", "--format", "plain"]);
    assert_eq!(stdout(&out), "1,0,0,0,0,0\n");
}

#[test]
fn count_csv_rows() {
    let out = trilat(&["count", "--d", "2", "--L", "1", "--start", "1,0,0", "--n", "1", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,p,q,count\n0,0,0,1\n1,0,1,1\n1,1,0,1\n");
}

#[test]
fn count_is_deterministic() {
    let args = ["count", "--d", "3", "--L", "2", "--start", "1,0,1,0", "--n", "5"];
    assert_eq!(trilat(&args).stdout, trilat(&args).stdout);
}

#[test]
fn count_writes_output_file() {
    let dir = std::env::temp_dir().join(format!("trilat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.json");
    let out = trilat(&["count", "--d", "1", "--L", "2", "--start", "1,1", "--n", "3", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(totals(&v), vec![1, 2, 2, 4]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_arguments_exit_2() {
    for args in [
        vec!["count", "--d", "2", "--L", "2", "--start", "1,0,0", "--n", "3"],
        vec!["count", "--d", "0", "--L", "2", "--start", "2", "--n", "3"],
        vec!["series", "corner", "--L", "1", "--alpha", "0.5", "--beta", "1"],
        vec!["series", "corner", "--L", "1", "--alpha", "1"],
        vec!["series", "triangle-total", "--u", "1", "--v", "0"],
        vec!["series", "line-total", "--u", "1", "--v", "0", "--alpha", "1", "--beta", "1"],
        vec!["verify", "nonsense"],
        vec!["frobnicate"],
    ] {
        assert_eq!(trilat(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn guard_trip_exits_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_trilat"))
        .args(["count", "--d", "2", "--L", "3", "--start", "3,0,0", "--n", "6"])
        .env("TRILAT_GUARD_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_trilat"))
        .args(["verify", "prop6", "--Lmax", "3", "--nmax", "6"])
        .env("TRILAT_GUARD_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn series_examples() {
    let v = json_of(&trilat(&["series", "corner", "--L", "1", "--alpha", "1", "--beta", "1", "--order", "4"]));
    assert_eq!(v["ring"], "int");
    assert_eq!(coeffs(&v), ["1", "2", "4", "8", "16"]);

    let v = json_of(&trilat(&["series", "kernel-root", "--model", "triangle", "--alpha", "1", "--beta", "0", "--order", "5"]));
    assert_eq!(coeffs(&v), ["0", "1", "1", "2", "4", "9"]);

    let v = json_of(&trilat(&["series", "corner", "--L", "0", "--order", "10"]));
    assert_eq!(v["ring"], "bivar");
    assert_eq!(v["order"], 10);
    let c = v["coeffs"].as_array().unwrap();
    assert_eq!(c[0], serde_json::json!([[0, 0, "1"]]));
    assert!(c[1..].iter().all(|x| x.as_array().unwrap().is_empty()));
}

#[test]
fn series_rational_weights() {
    let v = json_of(&trilat(&["series", "corner", "--L", "1", "--alpha", "1/2", "--beta", "1/3", "--order", "2"]));
    assert_eq!(v["ring"], "rat");
    assert_eq!(coeffs(&v), ["1/1", "5/6", "25/36"]);
}

#[test]
fn series_line_and_cf() {
    let v = json_of(&trilat(&["series", "line-total", "--u", "1", "--v", "1", "--order", "4"]));
    assert_eq!(coeffs(&v), ["1", "2", "2", "4", "4"]);
    let v = json_of(&trilat(&["series", "line-boundary", "--u", "1", "--v", "1", "--order", "4"]));
    assert_eq!(coeffs(&v["g10"]), ["0", "1", "0", "2", "0"]);
    let v = json_of(&trilat(&["series", "kernel-root", "--model", "line", "--order", "5"]));
    assert_eq!(coeffs(&v), ["0", "1", "0", "1", "0", "2"]);
    let v = json_of(&trilat(&["series", "cf-convergent", "--L", "2", "--alpha", "1", "--beta", "1", "--order", "4"]));
    assert_eq!(coeffs(&v), ["1", "2", "8", "24", "80"]);
    let out = trilat(&["series", "centre-side", "--u", "1", "--alpha", "1", "--beta", "1", "--order", "4", "--format", "plain"]);
    assert_eq!(stdout(&out), "0,2,8,32,128\n");
}

#[test]
fn reconstruct_examples() {
    let v = json_of(&trilat(&["reconstruct", "corner", "--L", "1"]));
    assert_eq!(v["numerator"], serde_json::json!(["1"]));
    assert_eq!(v["denominator"], serde_json::json!(["1", "-2"]));
    assert_eq!((v["deg_num"].as_u64(), v["deg_den"].as_u64()), (Some(0), Some(1)));

    let v = json_of(&trilat(&["reconstruct", "corner", "--L", "3", "--alpha", "1", "--beta", "1"]));
    assert_eq!(v["numerator"], serde_json::json!(["1", "-2"]));
    assert_eq!(v["denominator"], serde_json::json!(["1", "-4"]));

    let v = json_of(&trilat(&["reconstruct", "corner", "--L", "0"]));
    assert_eq!((v["deg_num"].as_u64(), v["deg_den"].as_u64()), (Some(0), Some(0)));
}

#[test]
fn reconstruct_without_match_exits_1() {
    let out = trilat(&["reconstruct", "corner", "--L", "8", "--deg-num", "1", "--deg-den", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "cor5", "--Hmax", "3", "--nmax", "12"],
        vec!["verify", "cf", "--Lmax", "8", "--order", "30"],
        vec!["verify", "kernel"],
    ] {
        let v = json_of(&trilat(&args));
        assert_eq!(v["status"], "pass", "{args:?}");
        assert_eq!(v["failed"], 0);
    }
}

#[test]
fn verify_prop6_reports_roundtrip_counts() {
    let v = json_of(&trilat(&["verify", "prop6", "--Lmax", "4", "--nmax", "10"]));
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 5);
    for r in reports {
        assert_eq!(r["status"], "pass");
        assert!(r["params"]["walks"].as_u64().unwrap() > 0);
        assert!(r["first_discrepancy"].is_null());
    }
}

#[test]
fn verify_all_default_grid() {
    let out = trilat(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
}
