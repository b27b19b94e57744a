use std::path::Path;

use lrc_ghw::cli::{run, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lrc-ghw").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn json(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).expect("valid JSON")
}

#[test]
fn analyze_tamo_barg_fixture_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("f.code").to_string_lossy().into_owned();
    let (code, ..) = invoke(&[
        "construct",
        "tamo-barg",
        "--q",
        "13",
        "--n",
        "12",
        "--k",
        "6",
        "--r",
        "3",
        "-o",
        &file,
    ]);
    assert_eq!(code, EXIT_OK);
    let (code, stdout, _) = invoke(&["analyze", &file, "--json"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&stdout);
    assert_eq!(
        v["primal_hierarchy"],
        serde_json::json!([6, 7, 8, 10, 11, 12])
    );
    assert_eq!(
        v["dual_hierarchy"],
        serde_json::json!([4, 8, 9, 10, 11, 12])
    );
    assert_eq!(v["dual_gaps"], serde_json::json!([1, 2, 3, 5, 6, 7]));
    assert_eq!(v["is_optimal"], true);
    assert_eq!(v["params"]["r"], 3);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in [
        "params",
        "locality",
        "primal_hierarchy",
        "primal_gaps",
        "dual_hierarchy",
        "dual_gaps",
        "bounds",
        "is_optimal",
        "timings",
    ] {
        assert!(keys.contains(&key), "missing key {key}");
    }
    let bounds = v["bounds"].as_object().unwrap();
    assert_eq!(bounds.len(), 15);
    assert!(bounds.values().all(|b| b["status"] == "holds"));
    // repair groups are the cosets of the order-4 subgroup {1, 5, 8, 12}, 1-based
    let groups: Vec<serde_json::Value> = v["locality"]["covering_rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["support"].clone())
        .collect();
    assert_eq!(groups.len(), 3);
    assert_eq!(groups[0], serde_json::json!([1, 5, 8, 12]));
}

#[test]
fn analyze_repetition_code_text() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "rep3.code",
        "# binary repetition\nq 2\nn 3\nk 1\n1 1 1\n",
    );
    let (code, stdout, _) = invoke(&["analyze", &file]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.contains("[n = 3, k = 1, d = 3]"), "{stdout}");
    assert!(stdout.contains("locality  r = 1"), "{stdout}");
    assert!(stdout.contains("optimal: true"), "{stdout}");
}

#[test]
fn analyze_with_witnesses_is_one_based() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c.code", "q 2\nn 4\nk 2\n1 1 0 0\n0 0 1 1\n");
    let (code, stdout, _) = invoke(&["analyze", &file, "--json", "--witnesses"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&stdout);
    assert_eq!(
        v["witnesses"]["primal"][0]["support"],
        serde_json::json!([1, 2])
    );
    assert_eq!(
        v["witnesses"]["primal"][1]["support"],
        serde_json::json!([1, 2, 3, 4])
    );
    let (_, plain, _) = invoke(&["analyze", &file, "--json"]);
    assert!(json(&plain).get("witnesses").is_none());
}

#[test]
fn analyze_limit_and_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("f.code").to_string_lossy().into_owned();
    invoke(&[
        "construct",
        "reed-solomon",
        "--q",
        "13",
        "--n",
        "12",
        "--k",
        "4",
        "-o",
        &file,
    ]);
    let (code, _, err) = invoke(&["analyze", &file, "--limit-n", "4"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("exceeds the enumeration limit"), "{err}");

    let bad = write(dir.path(), "bad.code", "q 2\nn 2\nk 1\n1 2\n");
    let (code, _, err) = invoke(&["analyze", &bad]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 4, column 3"), "{err}");

    let (code, _, err) = invoke(&["analyze", "/nonexistent/file.code"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
}

#[test]
fn promised_locality() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c.code", "q 2\nn 4\nk 2\n1 1 0 0\n0 0 1 1\n");
    let (code, stdout, _) = invoke(&["analyze", &file, "--json", "--promised-r", "2"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&stdout);
    assert_eq!(v["params"]["r"], 2);
    assert_eq!(v["locality"]["r"], 1);
    // d = 2 < 4 − 2 − 1 + 2 = 3 under r = 2
    assert_eq!(v["is_optimal"], false);
    let (code, _, err) = invoke(&["analyze", &file, "--promised-r", "3"]);
    assert_eq!(code, EXIT_USAGE, "{err}");
}

#[test]
fn uncovered_coordinate_is_reported_not_fatal() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c.code", "q 2\nn 3\nk 2\n1 0 0\n0 1 1\n");
    let (code, stdout, _) = invoke(&["analyze", &file, "--json"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&stdout);
    assert!(v["locality"]["r"].is_null());
    assert_eq!(v["bounds"]["thm1"]["status"], "not_applicable");
    assert_eq!(v["bounds"]["prop3_mu"]["status"], "holds");
}

#[test]
fn construct_to_stdout_and_reproducibly() {
    let (code, a, _) = invoke(&[
        "construct",
        "random",
        "--q",
        "2",
        "--n",
        "8",
        "--k",
        "4",
        "--seed",
        "1",
    ]);
    assert_eq!(code, EXIT_OK);
    let (_, b, _) = invoke(&[
        "construct",
        "random",
        "--q",
        "2",
        "--n",
        "8",
        "--k",
        "4",
        "--seed",
        "1",
    ]);
    assert_eq!(a, b);
    assert!(a.starts_with("q 2\nn 8\nk 4\n"));
    let (code, rs, _) = invoke(&[
        "construct",
        "reed-solomon",
        "--q",
        "7",
        "--n",
        "6",
        "--k",
        "3",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(rs.lines().count(), 6);
    let (code, _, err) = invoke(&[
        "construct",
        "tamo-barg",
        "--q",
        "13",
        "--n",
        "12",
        "--k",
        "6",
        "--r",
        "4",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("must divide"), "{err}");
    let (code, _, _) = invoke(&["construct", "hamming", "--q", "2", "--n", "7", "--k", "4"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn extension_field_files_round_trip_through_construct() {
    let (code, text, _) = invoke(&[
        "construct",
        "reed-solomon",
        "--q",
        "8",
        "--n",
        "7",
        "--k",
        "3",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(text.starts_with("q 8 modulus 1 1 0 1\n"), "{text}");
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "rs.code", &text);
    let (code, stdout, _) = invoke(&["analyze", &file, "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        json(&stdout)["primal_hierarchy"],
        serde_json::json!([5, 6, 7])
    );
}

#[test]
fn verify_small_suites() {
    let (code, stdout, _) = invoke(&["verify", "duality", "--count", "20", "--seed", "5"]);
    assert_eq!(code, EXIT_OK, "{stdout}");
    assert!(
        stdout.contains("suite duality [PASS]: 20 codes"),
        "{stdout}"
    );
    let (code, stdout, _) = invoke(&["verify", "optimal-rk"]);
    assert_eq!(code, EXIT_OK, "{stdout}");
    assert!(stdout.contains("certified        pass     5"), "{stdout}");
    let (code, _, _) = invoke(&["verify", "nonsense"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn help_exits_cleanly() {
    let (code, stdout, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.contains("analyze"));
    let (code, _, _) = invoke(&[]);
    assert_eq!(code, EXIT_USAGE);
}
