use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use actegory_cli::parse_report;

fn plan(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("plans").join(name)
}

fn actegory(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_actegory")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_plan(name: &str, body: &str) -> PathBuf {
    let p = scratch(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn z2_plan_passes_and_states_bounds() {
    let o = actegory(&["check", plan("z2.toml").to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}{}", stderr(&o));
    assert!(out.contains("bounds: carriers of size <= 2"), "{out}");
    assert!(out.contains("PASS skew"), "{out}");
    assert!(!out.contains("FAIL"), "{out}");
    assert!(out.contains("0 failure(s), 0 error(s)"), "{out}");
}

#[test]
fn mixed_plan_passes_with_probe_witness() {
    let o = actegory(&["check", plan("mixed.toml").to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}{}", stderr(&o));
    assert!(out.contains("instance arrow category [kan]"), "{out}");
    assert!(out.contains("probe γ:") && out.contains("not at ("), "{out}");
}

#[test]
fn every_mutation_fails_with_exit_one() {
    let report = scratch("mutations.json");
    let o = actegory(&[
        "check",
        plan("mutations.toml").to_str().unwrap(),
        "--format",
        "machine",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1), "{}{}", stdout(&o), stderr(&o));
    let r = parse_report(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let suites = &r.instances[0].suites;
    assert!(suites.len() > 20);
    for s in suites {
        assert!(s.failures() > 0, "{} was not caught", s.suite);
    }
}

#[test]
fn machine_report_round_trips() {
    let o = actegory(&["check", plan("z2.toml").to_str().unwrap(), "--format", "machine", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let r = parse_report(&text).unwrap();
    assert_eq!(r.seed, 5);
    assert_eq!(r.bounds.max_size, 2);
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);
}

#[test]
fn max_size_override_is_reported() {
    let o = actegory(&["check", plan("z2.toml").to_str().unwrap(), "--max-size", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("carriers of size <= 1"));
}

#[test]
fn unknown_suite_is_a_schema_error() {
    let p = write_plan("bad-suite.toml", "version = 1\nsuites = [\"pentagon\"]\n[[instances]]\nkind = \"power\"\nj = 1\n");
    let o = actegory(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("pentagon") && err.contains("braiding-left"), "{err}");
}

#[test]
fn unknown_field_is_named() {
    let p = write_plan("bad-field.toml", "version = 1\n[[instances]]\nkind = \"power\"\nj = 1\nwidth = 3\n");
    let o = actegory(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("width"), "{}", stderr(&o));
}

#[test]
fn missing_plan_and_unwritable_report_exit_two() {
    let o = actegory(&["check", "/nonexistent/plan.toml"]);
    assert_eq!(o.status.code(), Some(2));
    let o = actegory(&["check", plan("z2.toml").to_str().unwrap(), "--report", "/nonexistent/dir/out.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn probe_runs_only_probes() {
    let o = actegory(&["probe", plan("mixed.toml").to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}{}", stderr(&o));
    assert!(out.contains("probe γ"), "{out}");
    assert!(!out.contains("PASS skew"), "{out}");
}

#[test]
fn instances_lists_every_kind() {
    let o = actegory(&["instances"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for kind in ["monoid", "self-action", "copower", "power", "exponential", "kan", "mutation"] {
        assert!(out.contains(kind), "{kind} missing from {out}");
    }
}
