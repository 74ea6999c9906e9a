use std::process::{Command, Output};

fn toda2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toda2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn single_site_taut_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = toda2(&[
        "verify",
        "ultra.taut",
        "--sites",
        "1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["id"], "ultra.taut");
    assert_eq!(rows[0]["status"], "pass");
    for key in [
        "params",
        "residual_terms",
        "witness",
        "anchor",
        "elapsed_ms",
    ] {
        assert!(rows[0].get(key).is_some(), "{key}");
    }
}

#[test]
fn unknown_id_is_a_usage_error() {
    let o = toda2(&["verify", "ultra.taut", "no.such_check"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("no.such_check"));
    assert!(o.stdout.is_empty(), "no work before validation");
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(code(&toda2(&["verify", "all", "--sites", "0"])), 2);
    assert_eq!(code(&toda2(&["verify", "all", "--trunc", "0"])), 2);
    assert_eq!(code(&toda2(&["verify"])), 2);
}

#[test]
fn unwritable_report_path_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("r.json");
    assert_eq!(
        code(&toda2(&["verify", "ybe", "--json", path.to_str().unwrap()])),
        2
    );
}

#[test]
fn failing_check_exits_one() {
    let o = toda2(&["verify", "ultra.trace_identity"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("witness:"));
}

#[test]
fn degenerate_results_do_not_fail_the_run() {
    let o = toda2(&["verify", "classical.poissonL_explicit", "--sites", "2"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("degenerate"));
}

#[test]
fn term_cap_marks_the_check_failed() {
    let o = toda2(&["verify", "fm.ATT_TTD", "--max-terms", "4"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("cap"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    toda2(&[
        "verify",
        "all",
        "--seed",
        "9",
        "--json",
        a.to_str().unwrap(),
    ]);
    toda2(&[
        "verify",
        "all",
        "--seed",
        "9",
        "--json",
        b.to_str().unwrap(),
    ]);
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn list_covers_the_registry_in_order() {
    let o = toda2(&["list"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let ids: Vec<&str> = text
        .lines()
        .map(|l| l.split('\t').next().unwrap())
        .collect();
    let reg: Vec<&str> = toda2_core::registry::registry()
        .iter()
        .map(|e| e.id)
        .collect();
    assert_eq!(ids, reg);
    assert!(text.lines().any(|l| l.starts_with("ultra.taut\tquantum\t")));
    assert_eq!(text, String::from_utf8(toda2(&["list"]).stdout).unwrap());
}
