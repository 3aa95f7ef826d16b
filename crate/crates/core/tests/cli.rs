use b2crystal::cli::run;
use b2crystal::graph::{from_json, is_isomorphic};
use b2crystal::sails::build_s;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("b2crystal").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("b2crystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn build_s_emits_json() {
    let (code, out, _) = call(&["build-s", "--a", "1", "--b", "1"]);
    assert_eq!(code, 0);
    let g = from_json(&out).unwrap();
    assert!(is_isomorphic(&g, &build_s(1, 1).unwrap(), true)
        .unwrap()
        .is_some());
}

#[test]
fn build_w_accepts_a_box() {
    let (code, out, _) = call(&["build-w", "--box", "1,2,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(from_json(&out).unwrap().vertex_count(), 16);
    let (code, out, _) = call(&["build-w", "--a", "1", "--b", "0", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
}

#[test]
fn bad_box_is_a_usage_error() {
    let (code, _, err) = call(&["build-w", "--box", "2,1,0,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("--box"));
    let (code, _, _) = call(&["build-w"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_reports_pass_and_fail() {
    let (_, json, _) = call(&["build-s", "--a", "1", "--b", "0"]);
    let good = temp_file("good.json", &json);
    let (code, out, _) = call(&["verify", good.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = call(&["verify", good.to_str().unwrap(), "--report", "json"]);
    assert_eq!(code, 0);
    assert!(serde_json::from_str::<serde_json::Value>(&out).is_ok());

    let mut g = from_json(&json).unwrap();
    let v = g.central_vertices().next().unwrap();
    g.set_central(v, false);
    let bad = temp_file("bad.json", &b2crystal::graph::to_json(&g));
    let (code, out, _) = call(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"), "{out}");
}

#[test]
fn verify_rejects_malformed_input() {
    let path = temp_file("broken.json", "{\"format\": 3}");
    let (code, _, err) = call(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn compare_by_parameters_and_files() {
    let (code, out, _) = call(&["compare", "--a", "2", "--b", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("isomorphic"));
    let (_, s, _) = call(&["build-s", "--a", "1", "--b", "2"]);
    let (_, w, _) = call(&["build-w", "--a", "2", "--b", "1"]);
    let (f1, f2) = (temp_file("s12.json", &s), temp_file("w21.json", &w));
    let (code, out, _) = call(&["compare", f1.to_str().unwrap(), f2.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("not isomorphic"));
}

#[test]
fn quadruple_sweep_json_report() {
    let (code, out, _) = call(&["littelmann", "--depth", "2", "--report", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["checked"], 81);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn stats_counts() {
    let (_, json, _) = call(&["build-w", "--a", "1", "--b", "1"]);
    let path = temp_file("w11.json", &json);
    let (code, out, _) = call(&["stats", path.to_str().unwrap(), "--report", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vertices"], 16);
    let one = v["deltas"]["1"].as_object().unwrap();
    let two = v["deltas"]["2"].as_object().unwrap();
    assert!(one
        .keys()
        .all(|k| ["(-2,0)", "(0,2)", "(-1,1)"].contains(&k.as_str())));
    assert!(two
        .keys()
        .all(|k| ["(-1,0)", "(0,1)"].contains(&k.as_str())));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("build-s"));
}
