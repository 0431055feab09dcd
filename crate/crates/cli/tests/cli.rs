use std::path::Path;
use std::process::{Command, Output};

fn symtc(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symtc"));
    cmd.args(args).env_remove("SYMTC_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("SYMTC_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = symtc(args, None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn homology_of_the_circle() {
    let v = json(&["homology", "--generate", "sphere:1", "--format", "json"]);
    assert_eq!(v["betti"]["space"], serde_json::json!([1, 1]));
    assert_eq!(v["betti"]["symmetric_square"], serde_json::json!([1, 1, 0]));
    assert_eq!(v["betti"]["diagonal"], serde_json::json!([1, 1]));
}

#[test]
fn homology_of_a_point() {
    let v = json(&["homology", "--generate", "point", "--format", "json"]);
    for key in ["space", "product", "symmetric_square", "diagonal"] {
        assert_eq!(v["betti"][key], serde_json::json!([1]), "{key}");
    }
}

#[test]
fn missing_file_is_an_input_error() {
    let out = symtc(&["homology", "--in", "missing.cx"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("file not found"));
}

#[test]
fn malformed_file_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cx");
    std::fs::write(&path, "0,1\n1,x\n").unwrap();
    let out = symtc(&["homology", "--in", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(symtc(&["bounds"], None).status.code(), Some(2));
    assert_eq!(symtc(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(symtc(&["bounds", "--generate", "klein"], None).status.code(), Some(2));
}

#[test]
fn three_sphere_bounds() {
    let v = json(&["bounds", "--generate", "sphere:3", "--connectivity", "2", "--format", "json"]);
    assert_eq!(v["interval"], serde_json::json!([2, 2]));
}

#[test]
fn circle_bounds_default_connectivity() {
    let v = json(&["bounds", "--generate", "sphere:1", "--format", "json"]);
    assert_eq!(v["interval"], serde_json::json!([2, 2]));
    assert_eq!(v["connectivity"]["user_declared"], serde_json::json!(false));
}

#[test]
fn refuted_connectivity_exits_with_three() {
    let out = symtc(&["bounds", "--generate", "torus", "--connectivity", "1"], None);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("refuted"));
}

#[test]
fn disconnected_input_is_rejected_by_bounds() {
    let out = symtc(&["bounds", "--generate", "sphere:0"], None);
    assert_eq!(out.status.code(), Some(2));
    // Homology still works.
    assert!(symtc(&["homology", "--generate", "sphere:0"], None).status.success());
}

#[test]
fn circle_relative_square_is_nonzero() {
    let v = json(&["ring", "--generate", "sphere:1", "--format", "json"]);
    let products = v["rings"]["relative"]["products"].as_array().unwrap();
    let h1h1 = products
        .iter()
        .find(|t| t["p"] == 1 && t["q"] == 1)
        .expect("degree-1 table");
    assert_eq!(h1h1["table"], serde_json::json!([["1"]]));
    assert_eq!(v["maps"]["restriction"]["1"], serde_json::json!(["0"]));
}

#[test]
fn point_has_no_positive_products() {
    let v = json(&["ring", "--generate", "point", "--format", "json"]);
    for ring in v["rings"].as_object().unwrap().values() {
        for t in ring["products"].as_array().unwrap() {
            if t["p"] != 0 && t["q"] != 0 {
                assert!(t["table"].as_array().unwrap().iter().all(|r| r.as_array().unwrap().is_empty()));
            }
        }
    }
}

#[test]
fn rp2_generator_squares_nontrivially() {
    let v = json(&["ring", "--generate", "rp2", "--format", "json"]);
    let products = v["rings"]["space"]["products"].as_array().unwrap();
    let t = products.iter().find(|t| t["p"] == 1 && t["q"] == 1).unwrap();
    assert_eq!(t["table"], serde_json::json!([["1"]]));
}

#[test]
fn json_output_is_byte_deterministic() {
    for cmd in ["homology", "ring", "bounds"] {
        let args = [cmd, "--generate", "torus", "--format", "json"];
        let a = symtc(&args, None);
        let b = symtc(&args, None);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn cached_and_cold_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    for cmd in ["bounds", "ring"] {
        let args = [cmd, "--generate", "sphere:2", "--connectivity", "1", "--format", "json"];
        let cold = symtc(&args, None);
        let first = symtc(&args, Some(dir.path()));
        let cached = symtc(&args, Some(dir.path()));
        assert!(cold.status.success());
        assert_eq!(stdout(&cold), stdout(&first));
        assert_eq!(stdout(&cold), stdout(&cached));
    }
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 1);
}

#[test]
fn corrupt_cache_entries_are_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["bounds", "--generate", "sphere:1", "--format", "json"];
    let cold = symtc(&args, Some(dir.path()));
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "{ not json").unwrap();
    }
    let again = symtc(&args, Some(dir.path()));
    assert_eq!(cold.stdout, again.stdout);
}

#[test]
fn file_and_generator_inputs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("circle.json");
    let generated = symtc(&["generate", "--generate", "sphere:1", "--format", "json"], None);
    std::fs::write(&path, &generated.stdout).unwrap();
    let from_file = symtc(&["bounds", "--in", path.to_str().unwrap(), "--format", "json"], None);
    let direct = symtc(&["bounds", "--generate", "sphere:1", "--format", "json"], None);
    assert_eq!(from_file.stdout, direct.stdout);
}

#[test]
fn dump_debug_writes_to_stderr_only() {
    let plain = symtc(&["homology", "--generate", "sphere:1"], None);
    let debug = symtc(&["homology", "--generate", "sphere:1", "--dump-debug"], None);
    assert_eq!(plain.stdout, debug.stdout);
    assert!(String::from_utf8_lossy(&debug.stderr).contains("coboundary"));
}
