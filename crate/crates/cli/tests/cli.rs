use std::io::Write;
use std::process::{Command, Output};

fn rue(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rue"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn rue_on_gamma5() {
    let out = rue(&["rue", "gamma:5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("certified root-of-unity elements: 4 "), "{}", text);
    assert!(text.contains("agreement: true"));
    assert!(text.contains("structural verdict: RueByTheoremB"));
}

#[test]
fn classify_dicyclic12() {
    let out = rue(&["classify", "dicyclic:12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("verdict: RueByTheoremB"));
    assert!(text.contains("q multiset: {3}"));
    assert!(text.contains("|Z|: 2"));

    let out = rue(&["classify", "--json", "symmetric:4"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "NoRueElement");
    assert_eq!(v["failure"], "fitting_not_derived_times_center");
}

#[test]
fn table_prints_every_character() {
    let out = rue(&["table", "symmetric:3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("chi")).count(), 3);
    let out = rue(&["table", "alternating:5"]);
    assert!(stdout(&out).contains("30:["));
}

#[test]
fn symmetric_subcommands() {
    let out = rue(&["mn", "--lambda", "5,2", "--mu", "4,3"]);
    assert!(out.status.success());
    assert!(stdout(&out).trim().ends_with("= 0"));
    let out = rue(&["lemma33", "--n", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().count() > 5);
    let out = rue(&["lemma33", "--alpha", "4,3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("odd cycle type"));
}

#[test]
fn verify_writes_versioned_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = rue(&[
        "verify",
        "--suite",
        "theoremB",
        "--max-order",
        "24",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let first = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["failures"], 0);
    assert!(v["manifest"]["theoremB"].as_array().unwrap().len() == 3);
    assert!(v["summary"]["wall_time_seconds"].is_null());

    rue(&["verify", "--suite", "theoremB", "--max-order", "24", "--json", path.to_str().unwrap()]);
    assert_eq!(first, std::fs::read_to_string(&path).unwrap());
}

#[test]
fn usage_errors_exit_nonzero() {
    assert!(!rue(&[]).status.success());
    assert!(!rue(&["verify", "--suite", "nonsense", "--max-order", "6"]).status.success());
    assert!(!rue(&["rue", "gamma:6"]).status.success());
    assert!(!rue(&["mn", "--lambda", "3", "--mu", "2,1,1"]).status.success());
    assert!(!rue(&["lemma33", "--n", "5"]).status.success());
}

#[test]
fn group_files_and_line_numbers() {
    let mut good = tempfile::NamedTempFile::new().unwrap();
    writeln!(good, "# quaternion group\ndegree 8\n(0 1 2 3)(4 5 6 7)\n(0 4 2 6)(1 7 3 5)").unwrap();
    let spec = format!("@{}", good.path().display());
    let out = rue(&["rue", &spec]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("certified root-of-unity elements: 0 "));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "degree 3\n(0 1 2)\n(0 7)").unwrap();
    let out = rue(&["classify", &format!("@{}", bad.path().display())]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(&format!("{}:3:", bad.path().display())), "{}", err);
}
