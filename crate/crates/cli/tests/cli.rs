use std::process::{Command, Output};

use serde_json::Value;

const PHI30: &str = "1,1,0,-1,-1,-1,0,1,1";
const LEHMER_DEN: &str = "(z-1)*(z+1)*(z^2+z+1)*(z^4+z^3+z^2+z+1)";
const LEHMER: [i64; 11] = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_salemforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn lehmer_from_the_command_line() {
    let v = json(&["salem", "cc", PHI30, LEHMER_DEN]);
    assert_eq!(v["kind"], "SALEM");
    assert_eq!(ints(&v["core"]), LEHMER);
    assert_eq!(ints(&v["cofactor"]), [1]);
    assert_eq!(v["z_power"], 0);
    assert_eq!(v["trace"], -1);
    assert_eq!(v["root"]["lo"], "1.176280818259");
    assert_eq!(v["root"]["hi"], "1.176280818260");
    for key in ["kind", "core", "cofactor", "z_power", "root", "trace", "diagnostics"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn json_output_round_trips() {
    let v = json(&["pisot", "cc", PHI30, LEHMER_DEN, "--spec", r#"{"Bi": [[1, 7]]}"#]);
    let core: Vec<String> = ints(&v["core"]).iter().map(|c| c.to_string()).collect();
    let list = core.join(",");
    let again = json(&["classify", &list]);
    assert_eq!(again["core"], v["core"]);
    assert_eq!(again["kind"], "PISOT_POLY");
    assert_eq!(again["trace"], v["trace"]);
}

#[test]
fn text_and_json_agree() {
    let out = run(&["salem", "cc", PHI30, LEHMER_DEN, "--precision", "20"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v = json(&["salem", "cc", PHI30, LEHMER_DEN, "--precision", "20"]);
    let lo = v["root"]["lo"].as_str().unwrap();
    let hi = v["root"]["hi"].as_str().unwrap();
    assert_eq!(lo.len(), "1.".len() + 20);
    assert!(text.contains(&format!("[{lo}, {hi}]")));
    assert!(text.contains("[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]"));
    assert!(text.contains("SALEM"));
}

#[test]
fn pk_table() {
    let v = json(&["seq", "pk", "-1,-1,0,1", "--kmax", "12"]);
    assert_eq!(v["onset_k0"], 8);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 12);
    assert_eq!(ints(&entries[7]["pk"]), LEHMER);
    for e in entries {
        let k = e["k"].as_i64().unwrap();
        assert_eq!(e["value_at_one"].as_i64().unwrap(), 7 - k);
        assert_ne!(e["kind"], "NONE");
    }
}

#[test]
fn exit_codes() {
    let bad = run(&["classify", "1,1,0,x"]);
    assert_eq!(bad.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&bad.stderr);
    assert!(msg.contains("line 1, column 7"), "{msg}");

    let pre = run(&["salem", "ss", PHI30, LEHMER_DEN]);
    assert_eq!(pre.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&pre.stderr).contains("NOT_SS"));

    let unknown = run(&["classify", "z^2-3*z+1", "--frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));

    let spec = run(&["pisot", "cc", PHI30, LEHMER_DEN, "--spec", r#"{"Bi": [[1, 7]], "X": 1}"#]);
    assert_eq!(spec.status.code(), Some(2));

    let out = run(&["recover", "z^2-5*z+6", "--k", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "NOT_PISOT");
}

#[test]
fn boyd_is_deterministic_across_thread_counts() {
    let args = ["boyd", "1,1,0,-1,-1,-1,-1,-1,0,1,1", "--eps", "-1", "--bound", "1", "--format", "json"];
    let outputs: Vec<Vec<u8>> = ["1", "3"]
        .iter()
        .map(|n| {
            let out = Command::new(env!("CARGO_BIN_EXE_salemforge"))
                .args(args)
                .env("SALEMFORGE_THREADS", n)
                .output()
                .unwrap();
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    let v: Value = serde_json::from_slice(&outputs[0]).unwrap();
    assert!(!v["solutions"].as_array().unwrap().is_empty());
}

#[test]
fn small_salem_and_type() {
    let a = "1,3,4,3,1,-1,-3,-4,-4,-2,0,1";
    let lehmer = "1,1,0,-1,-1,-1,-1,-1,0,1,1";
    assert_eq!(json(&["type", lehmer, a])["type"], "IV");
    let v = json(&["smallsalem", lehmer, a, "--precision", "5"]);
    let roots = v["real_roots"].as_array().unwrap();
    assert_eq!(roots.len(), 3);
    let w = v["witness"].as_u64().unwrap() as usize;
    assert_eq!(roots[w]["lo"], "0.98389");
}

#[test]
fn rootplot_covers_every_circle_root() {
    let v = json(&["rootplot", PHI30, LEHMER_DEN]);
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 16);
    assert!(points.iter().all(|p| p["radius"] == 1.0));
    let owners: Vec<&str> = points.iter().map(|p| p["poly"].as_str().unwrap()).collect();
    assert!(owners.windows(2).all(|w| w[0] != w[1]));
}

#[test]
fn quotient_and_products() {
    assert_eq!(json(&["quotient", "classify", PHI30, LEHMER_DEN])["kind"], "CC");
    let v = json(&["salem", "product", PHI30, LEHMER_DEN, "z-1", "z+1", "--variant", "II"]);
    assert_eq!(ints(&v["core"]), LEHMER);
    let v = json(&[
        "pisot", "product", PHI30, LEHMER_DEN, PHI30, LEHMER_DEN, "--spec", r#"{"A": 1}"#, "--variant", "II",
    ]);
    assert_eq!(v["kind"], "PISOT");
}

#[test]
fn golden_suite_reports_every_case() {
    let v = json(&["golden"]);
    assert_eq!(v["passed"], true);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 10);
    assert!(cases.iter().all(|c| c["elapsed_ms"].as_f64().is_some()));
}
