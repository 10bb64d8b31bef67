use std::process::Command;

use serde_json::{json, Value};
use weylrigid::cli::{parse_char_json, run_args};
use weylrigid::weylchar::freudenthal_char;
use weylrigid::{RootSystem, Series};

fn bin(args: &str) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weylrigid"))
        .args(args.split_whitespace())
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn call(args: &str) -> weylrigid::cli::Outcome {
    run_args(std::iter::once("weylrigid").chain(args.split_whitespace()))
}

#[test]
fn golden_exit_codes() {
    let cases: &[(&str, i32)] = &[
        ("char --type A --rank 2 --weight 1,1", 0),
        ("char --type D --rank 4 --weight 0,1,0,0 --format tsv", 0),
        ("dim --type B --rank 3 --weight 0,0,1", 0),
        ("tensor --type C --rank 3 --left 1,0,0 --right 0,0,1", 0),
        ("orbit --type B --rank 2 --weight 1,0", 0),
        ("reconstruct --type A --rank 3 --cutoff 2", 0),
        ("reconstruct --type C --rank 2 --cutoff 1", 1),
        ("verify --type B --rank 2 --cutoff 3 --mode full", 0),
        ("verify --type D --rank 4 --cutoff 1 --mode fundamental-only --format json", 0),
        ("supp-lemma --type A --rank 3 --k-bound 2", 0),
        ("supp-lemma --type B --rank 3 --k-bound 2", 1),
        ("identities --type B --rank 3", 0),
        ("identities --type D --rank 5", 1),
        ("falsify --type A --rank 2 --lambda 1,1 --mu 0,0 --delta 1", 0),
        ("falsify --type B --rank 2 --lambda 0,2 --mu 0,0 --delta -1 --format tsv", 0),
        ("falsify --type A --rank 2 --lambda 1,1 --mu 1,1 --delta 1", 2),
        ("verify --type A --rank 2 --cutoff -1", 2),
        ("dim --type C --rank 1 --weight 1", 2),
        ("tensor --type A --rank 2 --left 1,0", 2),
    ];
    for (args, code) in cases {
        assert_eq!(call(args).code, *code, "{args}");
        assert_eq!(bin(args).0, *code, "binary: {args}");
    }
}

#[test]
fn verify_pass_prints_pass() {
    let (code, out) = bin("verify --type B --rank 2 --cutoff 3 --mode full");
    assert_eq!(code, 0);
    assert_eq!(out, "PASS\n");
    let (_, out) = bin("verify --type A --rank 2 --cutoff 1 --format json");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], "pass");
}

#[test]
fn falsify_report_schema() {
    let out = call("falsify --type A --rank 2 --lambda 2,0 --mu 0,1 --delta 1");
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"], "violation");
    assert_eq!(v["condition"], "C1");
    assert_eq!(v["witness"]["lambda"], json!([2, 0]));
    assert_eq!(v["witness"]["mu"], json!([0, 1]));
    assert_eq!(v["expected"], 1);
    assert_eq!(v["found"], 2);
}

#[test]
fn reconstruct_reports_routes() {
    let out = call("reconstruct --type A --rank 2 --cutoff 2");
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["agrees_with_freudenthal"], true);
    let adj = v["rows"].as_array().unwrap().iter().find(|r| r["lambda"] == json!([1, 1])).unwrap();
    let zero = adj["entries"].as_array().unwrap().iter().find(|e| e["mu"] == json!([0, 0])).unwrap();
    assert_eq!(zero["mult"], 2);
    assert_eq!(zero["route"], "duality(1)");
}

#[test]
fn identities_flag_d5() {
    let out = call("identities --type D --rank 5");
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let last = &v["rows"][4];
    assert_eq!(last["alpha_coeffs"], json!([1, 2, 3, 2, 2]));
    assert_eq!(last["agrees"], false);
    assert_eq!(last["stated"]["kind"], "exact");
}

#[test]
fn char_round_trip_all_series() {
    for (s, r, w) in [(Series::A, 3, "1,0,2"), (Series::B, 2, "1,1"), (Series::C, 3, "0,1,1"), (Series::D, 4, "1,0,0,1")] {
        let out = call(&format!("char --type {s} --rank {r} --weight {w}"));
        let (lambda, row) = parse_char_json(&out.stdout).unwrap();
        let rs = RootSystem::new(s, r).unwrap();
        assert_eq!(row, freudenthal_char(&rs, &lambda).unwrap());
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        "char --type C --rank 3 --weight 1,1,0",
        "tensor --type D --rank 4 --left 0,1,0,0 --right 1,0,0,0",
        "reconstruct --type B --rank 3 --cutoff 2 --format tsv",
        "supp-lemma --type C --rank 3 --k-bound 2",
        "falsify --type B --rank 2 --lambda 1,1 --mu 1,0 --delta 2",
    ] {
        assert_eq!(bin(args), bin(args), "{args}");
    }
}

#[test]
fn tsv_char_rows() {
    let (code, out) = bin("char --type A --rank 2 --weight 1,1 --format tsv");
    assert_eq!(code, 0);
    assert_eq!(out, "1,1\t1\n0,0\t2\n");
}
