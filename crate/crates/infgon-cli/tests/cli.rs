//! End-to-end CLI tests: command output, exit codes, and golden files.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_infgon"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/goldens")
        .join(name)
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("infgon-cli-test-{name}"));
    let mut f = std::fs::File::create(&path).expect("temp file");
    f.write_all(contents.as_bytes()).expect("write temp");
    path
}

fn fountain_t2() -> String {
    json!({
        "window": [-2, 2],
        "core": [["-inf", 0], [-2, 0], [0, 2]],
        "tail": {
            "kind": "sided",
            "left": {"kind": "fountain", "vertex": 0},
            "right": {"kind": "fountain", "vertex": 0}
        }
    })
    .to_string()
}

fn split_t1() -> String {
    json!({
        "window": [-2, 2],
        "core": [["-inf", -1], ["-inf", 0], ["-inf", 1]],
        "tail": {
            "kind": "sided",
            "left": {"kind": "fountain", "vertex": -1},
            "right": {"kind": "fountain", "vertex": 1}
        }
    })
    .to_string()
}

#[test]
fn ext_crossing_pair() {
    let out = run(&["ext", "[-3,0]", "[-1,2]"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["dim"], json!(1));
}

#[test]
fn hom_reports_basis_kinds() {
    let out = run(&["hom", "[-3,0]", "[-1,2]"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["dim"], json!(2));
    assert_eq!(v["basis"], json!(["V", "U"]));
}

#[test]
fn stable_hom_dimension() {
    let out = run(&["stable-hom", "[-2,1]", "[-2,1]"]);
    assert_eq!(stdout_json(&out)["dim"], json!(1));
}

#[test]
fn sequences_output() {
    let out = run(&["sequences", "[-3,0]", "[-1,2]"]);
    let v = stdout_json(&out);
    let seqs = v["sequences"].as_array().unwrap();
    assert_eq!(seqs.len(), 1);
    assert_eq!(seqs[0]["middle"], json!([[-1, 0], [-3, 2]]));
}

#[test]
fn mutate_example_triangulation() {
    let input = write_temp("t1.json", &split_t1());
    let out = run(&["mutate", input.to_str().unwrap(), "--arc", "[\"-inf\",0]"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["added"], json!([-1, 1]));
    assert_eq!(v["removed"], json!(["-inf", 0]));
    assert_eq!(v["exchange"].as_array().unwrap().len(), 2);
}

#[test]
fn mutate_wrapping_arc_fails_with_witness() {
    let input = write_temp("t2.json", &fountain_t2());
    let out = run(&["mutate", input.to_str().unwrap(), "--arc", "[\"-inf\",0]"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert!(v["error"].as_str().unwrap().contains("not mutable"));
}

#[test]
fn classify_fountain() {
    let input = write_temp("classify.json", &fountain_t2());
    let out = run(&["classify", input.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["kind"], json!("fountain"));
    assert_eq!(v["at"], json!(0));
}

#[test]
fn check_properties() {
    let input = write_temp("check.json", &fountain_t2());
    let path = input.to_str().unwrap();
    for (prop, expected) in [
        ("rigid", true),
        ("almost-rigid", true),
        ("mar", true),
        ("maximal-rigid", true),
        ("cluster-tilting", true),
    ] {
        let out = run(&["check", path, "--property", prop]);
        assert!(out.status.success());
        assert_eq!(stdout_json(&out)["holds"], json!(expected), "property {prop}");
    }
    let out = run(&[
        "check",
        path,
        "--property",
        "cluster-tilting",
        "--ambient",
        "generically-free",
    ]);
    assert_eq!(out.status.code(), Some(1), "infinite arc under C2^f is a domain error");
}

#[test]
fn explore_pentagon() {
    let out = run(&["explore", "--polygon", "5"]);
    let v = stdout_json(&out);
    assert_eq!(v["vertices"], json!(5));
    assert_eq!(v["edges"], json!(5));
    assert_eq!(v["connected"], json!(true));
}

#[test]
fn schedule_stabilizes() {
    let fan = json!({
        "window": [-1, 1],
        "core": [["-inf", -1], ["-inf", 0], ["-inf", 1]],
        "tail": {"kind": "sided", "left": {"kind": "fan"}, "right": {"kind": "fan"}}
    })
    .to_string();
    let sched = json!({
        "steps": [{"rule": "toward-fountain", "vertex": 0}],
        "repeat": 20,
        "budget": 20
    })
    .to_string();
    let t = write_temp("fan.json", &fan);
    let s = write_temp("sched.json", &sched);
    let out = run(&[
        "schedule",
        t.to_str().unwrap(),
        s.to_str().unwrap(),
        "--region",
        "-3",
        "3",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["stabilized_after"].as_u64().is_some());
    assert!(v["halted"].is_null());
}

#[test]
fn verify_small_window_exits_zero() {
    let out = run(&["verify", "--window", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS hom-oracle"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn render_matches_golden_and_is_deterministic() {
    let input = golden("ses1_quadrilateral.json");
    let args = [
        "render",
        input.to_str().unwrap(),
        "--region",
        "-3",
        "3",
        "--highlight",
        "[-1,3]",
        "--highlight",
        "[-3,1]",
    ];
    let first = run(&args);
    assert!(first.status.success());
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "render must be byte-stable");
    let expected = std::fs::read(golden("ses1_quadrilateral.svg")).expect("golden exists");
    assert_eq!(first.stdout, expected, "render differs from the golden file");
    let svg = String::from_utf8(first.stdout).unwrap();
    assert_eq!(svg.matches("stroke-dasharray").count(), 2);
}

#[test]
fn sequences_empty_when_no_extension() {
    let out = run(&["sequences", "[0,2]", "[4,6]"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["sequences"], json!([]));
}

#[test]
fn approximate_precover_and_witness() {
    let input = write_temp("approx.json", &fountain_t2());
    let path = input.to_str().unwrap();
    let out = run(&["approximate", path, "--target", "[\"-inf\",3]"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["found"], json!(true));
    let summands = v["summands"].as_array().unwrap();
    assert!(summands.iter().any(|s| s["arc"] == json!(["-inf", 0])));

    // a locally finite set refuses with the nested witness family
    let zig = json!({
        "window": [-3, 3],
        "core": [[-1, 1]],
        "tail": {"kind": "zigzag", "base": [-1, 1], "pattern": "LR"}
    })
    .to_string();
    let zigpath = write_temp("zig.json", &zig);
    let out = run(&[
        "approximate",
        zigpath.to_str().unwrap(),
        "--target",
        "[\"-inf\",0]",
        "--kind",
        "precover",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["found"], json!(false));
    assert!(!v["witness"].as_array().unwrap().is_empty());
}

#[test]
fn render_descriptor_uses_window_as_default_region() {
    let input = write_temp("render-desc.json", &fountain_t2());
    let out = run(&["render", input.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("-inf"));
    // two fountain arcs and the wrap inside the window
    assert!(svg.matches("<path").count() >= 2);
}

#[test]
fn malformed_input_exits_two() {
    let out = run(&["ext", "oops", "[-1,2]"]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert!(v["error"].as_str().unwrap().contains("malformed"));

    let bad = write_temp("bad.json", "{run: amok}");
    let out = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stdin_input() {
    let mut child = bin()
        .args(["classify", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(fountain_t2().as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["kind"], json!("fountain"));
}
