use serde_json::Value;

use skewbrace::brace::SkewBrace;
use skewbrace::group::{build_group, builtin_group, builtin_names};
use skewbrace_cli::{brace_file_json, exit, run, strip_volatile};

fn call(args: &[&str]) -> (i32, Vec<Value>) {
    let mut argv = vec!["skewbrace"];
    argv.extend_from_slice(args);
    let o = run(argv);
    let lines = o.output.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    (o.code, lines)
}

fn last(args: &[&str]) -> (i32, Value) {
    let (code, mut lines) = call(args);
    (code, lines.pop().unwrap())
}

#[test]
fn verify_thm1_example() {
    let (code, v) = last(&["verify-thm1", "--p", "3", "--n", "2"]);
    assert_eq!(code, exit::OK);
    assert_eq!(v["left_simple_count"], 0);
    for key in ["tool_version", "command", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["command"], "verify-thm1");
}

#[test]
fn enumerate_streams_lines() {
    let (code, lines) = call(&["enumerate", "--group", "V4", "--up-to-iso"]);
    assert_eq!(code, exit::OK);
    assert_eq!(lines.len(), 3);
    let summary = &lines[2];
    assert_eq!(summary["count"], 2);
    assert_eq!(summary["up_to_iso"], true);
}

#[test]
fn bad_brace_file_fails_with_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // circle: C4 relabeled by swapping 1 and 2
    let c4 = builtin_group("C4").unwrap();
    let relabel = [0usize, 2, 1, 3];
    let circle: Vec<Vec<usize>> = (0..4)
        .map(|a| (0..4).map(|b| relabel[c4.mul(relabel[a], relabel[b])]).collect())
        .collect();
    let json = serde_json::json!({ "name": "bad", "order": 4, "dot": c4.table_rows(), "circle": circle });
    std::fs::write(&path, json.to_string()).unwrap();
    let (code, v) = last(&["brace-check", path.to_str().unwrap()]);
    assert_eq!(code, exit::FAILED);
    assert_eq!(v["error"]["triple"].as_array().unwrap().len(), 3);
}

#[test]
fn good_brace_file_checks() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    let b = SkewBrace::almost_trivial(&builtin_group("S3").unwrap()).unwrap();
    std::fs::write(&path, brace_file_json(&b)).unwrap();
    let p = path.to_str().unwrap();
    let (code, v) = last(&["brace-check", "--brace", p]);
    assert_eq!(code, exit::OK);
    assert_eq!(v["identities_hold"], true);
    let (code, v) = last(&["brace-ideals", "--brace", p]);
    assert_eq!(code, exit::OK);
    assert_eq!(v["count"], 3);
    let (_, v) = last(&["brace-simple", "--brace", p]);
    assert_eq!(v["result"]["left_simple"], false);
    let (_, v) = last(&["hgs-report", "--brace", p]);
    assert_eq!(v["report"]["degree"], 6);
}

#[test]
fn usage_and_resource_errors() {
    assert_eq!(last(&["frobnicate"]).0, exit::USAGE);
    assert_eq!(last(&["enumerate"]).0, exit::USAGE);
    assert_eq!(last(&["enumerate", "--group", "Nope"]).0, exit::USAGE);
    assert_eq!(last(&["verify-thm1", "--p", "2"]).0, exit::USAGE);
    assert_eq!(last(&["enumerate", "--group", "V4", "--workers", "x"]).0, exit::USAGE);
    let (code, v) = last(&["oracle-compare", "--group", "S3"]);
    assert_eq!(code, exit::RESOURCE);
    assert!(v["error"]["message"].as_str().unwrap().contains("size limit"));
    assert_eq!(last(&["verify-thm1", "--p", "2", "--n", "4"]).0, exit::RESOURCE);
    assert_eq!(last(&["classify-conditions", "--brace", "trivial", "--group", "S3"]).0, exit::RESOURCE);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, v) = last(&["group-inspect", "--group", "Q8", "--out", path.to_str().unwrap()]);
    assert_eq!(code, exit::OK);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["order"], v["order"]);
    assert_eq!(v["automorphisms"]["order"], 24);
}

#[test]
fn builtins_pass_validation() {
    for name in builtin_names() {
        let g = builtin_group(name).unwrap();
        assert_eq!(build_group(&g.table_rows(), None).unwrap().order(), g.order());
        let (code, v) = last(&["group-inspect", "--group", name]);
        assert_eq!(code, exit::OK, "{name}");
        assert_eq!(v["order"], g.order());
    }
}

#[test]
fn worker_count_does_not_change_output() {
    for args in [
        vec!["enumerate", "--group", "D4"],
        vec!["classify-conditions", "--brace", "almost-trivial", "--group", "A5"],
        vec!["hgs-report", "--brace", "trivial", "--group", "A4"],
    ] {
        let mut one = vec!["skewbrace"];
        one.extend(&args);
        let mut eight = one.clone();
        one.extend(["--workers", "1"]);
        eight.extend(["--workers", "8"]);
        let a = run(one);
        let b = run(eight);
        assert_eq!(a.code, b.code);
        assert_eq!(strip_volatile(&a.output), strip_volatile(&b.output));
    }
}
