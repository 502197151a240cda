use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

use cuspidal::cli::{parse_map, parse_point, run_with};
use cuspidal::poly::rat;
use serde_json::Value;

static COUNTER: AtomicUsize = AtomicUsize::new(0);

fn out_path() -> PathBuf {
    let n = COUNTER.fetch_add(1, Ordering::SeqCst);
    std::env::temp_dir().join(format!("cuspidal-cli-{}-{n}.json", std::process::id()))
}

/// Exit code and parsed report.
fn run(args: &[&str]) -> (i32, Value) {
    let path = out_path();
    let mut argv = vec!["cuspidal".to_string(), "--out".into(), path.display().to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let code = run_with(argv);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|_| "null".into());
    let _ = std::fs::remove_file(&path);
    (code, serde_json::from_str(&text).unwrap())
}

fn raw(args: &[&str]) -> String {
    let path = out_path();
    let mut argv = vec!["cuspidal".to_string(), "--out".into(), path.display().to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    run_with(argv);
    let text = std::fs::read_to_string(&path).unwrap();
    let _ = std::fs::remove_file(&path);
    text
}

#[test]
fn parsing_helpers() {
    let m = parse_map("f=x; g=y^3+x*y").unwrap();
    assert_eq!(m.d2, 3);
    assert_eq!(parse_point("1/2,-3").unwrap(), [rat(1) / rat(2), rat(-3)]);
    assert!(parse_map("f=x").is_err());
}

#[test]
fn formulas_command() {
    let (code, v) = run(&["formulas", "--d1", "3", "--d2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v.to_string().contains("\"cusp_count\":8"), true);
    let (code, v) = run(&["formulas", "--sweep", "5"]);
    assert_eq!(code, 0);
    assert!(v.to_string().len() > 100);
}

#[test]
fn local_commands() {
    let (code, v) = run(&["cusp-index", "--map", "f=x; g=y^4+x*y"]);
    assert_eq!(code, 0);
    assert_eq!(v["measured"]["mu"], 2);
    let (code, v) = run(&["cusp-index", "--map", "f=x; g=y^3"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"], "NonReducedJacobian");
    let (code, v) = run(&["puiseux", "--curve", "y^3-x^4"]);
    assert_eq!(code, 0);
    assert_eq!(v["measured"]["delta"], 3);
    let (code, v) = run(&["probe", "--map", "f=x; g=y^3+x*y", "--radius", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(v["measured"]["cusps"], 1);
}

#[test]
fn census_commands() {
    let (code, v) = run(&["plane-census", "--d1", "2", "--d2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert!(v.get("timings_ms").is_none_or(|t| t.as_object().is_none_or(|o| o.is_empty())));
    // an explicit map need not be generic, so the formula checks may fail
    let (code, v) = run(&["discriminant", "--map", "f=x; g=y^3+x*y"]);
    assert_eq!(code, 2);
    assert_eq!(v["measured"]["discriminant"], "4*u^3+27*v^2");
    assert_eq!(v["measured"]["cusp_count"], 1);
}

#[test]
fn thread_count_does_not_change_output() {
    let one = raw(&["--threads", "1", "--seed", "5", "plane-census", "--d1", "3", "--d2", "2", "--trials", "2"]);
    let four = raw(&["--threads", "4", "--seed", "5", "plane-census", "--d1", "3", "--d2", "2", "--trials", "2"]);
    assert_eq!(one, four);
}

#[test]
fn usage_errors() {
    assert_eq!(run_with(["cuspidal", "no-such-command"]), 3);
    assert_eq!(run_with(["cuspidal", "--help"]), 0);
    let (code, v) = run(&["cusp-index", "--map", "f=x; g=(y"]);
    assert_eq!(code, 3);
    assert!(v["error"].is_string());
}
