use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use lincell::cli::{run_suite, Outcome, Report, RunOptions};

fn shipped() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("experiments")
}

fn copy_experiments(to: &Path) {
    for entry in fs::read_dir(shipped()).unwrap() {
        let p = entry.unwrap().path();
        fs::copy(&p, to.join(p.file_name().unwrap())).unwrap();
    }
}

fn lca(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lca")).args(args).output().unwrap()
}

const MALFORMED: &str = r#"{"format": 1, "name": "broken", "group": {"type": "cyclic", "n": 4}, "#;

#[test]
fn shipped_suite_passes_and_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    copy_experiments(dir.path());
    let summary = run_suite(dir.path(), None, &RunOptions::default()).unwrap();
    assert!(summary.total() >= 12);
    assert!(summary.success(), "{}", summary.to_text());
    for e in &summary.entries {
        let path = e.report_path.as_ref().unwrap();
        let back = Report::from_json_str(&fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(Outcome::Ran(back), e.outcome);
    }
    // reports left in the directory are not picked up as experiments
    let again = run_suite(dir.path(), None, &RunOptions::default()).unwrap();
    assert_eq!(again.total(), summary.total());
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let opts = RunOptions { seed: Some(17), ..RunOptions::default() };
    let first = run_suite(&shipped(), Some(&a), &opts).unwrap();
    run_suite(&shipped(), Some(&b), &opts).unwrap();
    for e in &first.entries {
        let name = e.report_path.as_ref().unwrap().file_name().unwrap();
        assert_eq!(fs::read(a.join(name)).unwrap(), fs::read(b.join(name)).unwrap());
    }
}

#[test]
fn empty_directory_is_a_successful_suite() {
    let dir = tempfile::tempdir().unwrap();
    let summary = run_suite(dir.path(), None, &RunOptions::default()).unwrap();
    assert_eq!(summary.total(), 0);
    assert!(summary.success());
}

#[test]
fn malformed_file_is_isolated() {
    let dir = tempfile::tempdir().unwrap();
    copy_experiments(dir.path());
    fs::write(dir.path().join("aaa_broken.json"), MALFORMED).unwrap();
    let summary = run_suite(dir.path(), None, &RunOptions::default()).unwrap();
    assert_eq!(summary.errors(), 1);
    assert_eq!(summary.passed(), summary.total() - 1);
    assert!(!summary.success());
    let broken = &summary.entries[0];
    assert!(broken.file.ends_with("aaa_broken.json"));
    assert!(matches!(&broken.outcome, Outcome::Error(msg) if msg.contains("line")));
}

#[test]
fn missing_path_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run_suite(&dir.path().join("nope"), None, &RunOptions::default()).is_err());
}

#[test]
fn binary_run_prints_json_and_exits_zero() {
    let file = shipped().join("decide_laplace_c6.json");
    let out = lca(&["run", file.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(report.passed());
    assert_eq!(report.command, "decide");
    assert_eq!(report.payload["injective"], false);
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    fs::write(&broken, MALFORMED).unwrap();
    assert_eq!(lca(&["validate", broken.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(lca(&["run", broken.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(lca(&["frobnicate"]).status.code(), Some(2));

    // a well-formed experiment whose expectation is wrong
    let wrong = dir.path().join("wrong.json");
    let text = fs::read_to_string(shipped().join("decide_laplace_c6.json"))
        .unwrap()
        .replace(r#""injective": false"#, r#""injective": true"#);
    fs::write(&wrong, text).unwrap();
    let out = lca(&["run", wrong.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("[FAIL]"));

    let ok = lca(&["validate", shipped().join("telescoping.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().contains("4 experiment(s)"));
}

#[test]
fn binary_suite_writes_to_out_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reports");
    let res = lca(&["suite", shipped().to_str().unwrap(), "--out", out.to_str().unwrap(), "--format", "json"]);
    assert_eq!(res.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_slice(&res.stdout).unwrap();
    let written = fs::read_dir(&out).unwrap().count();
    assert_eq!(summary["total"].as_u64().unwrap() as usize, written);
}
