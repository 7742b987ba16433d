use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_empath"))
}

fn slap() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/slap")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn run_slap(extra: &[&str]) -> (Output, String) {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.jsonl");
    let o = bin()
        .arg("run")
        .arg(slap().join("slap.emas"))
        .arg("--scenario")
        .arg(slap().join("slap.scn"))
        .arg("--trace")
        .arg(&trace)
        .args(extra)
        .output()
        .unwrap();
    let text = fs::read_to_string(&trace).unwrap_or_default();
    (o, text)
}

#[test]
fn run_writes_golden_trace() {
    let (o, text) = run_slap(&["--seed", "7"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let golden = fs::read_to_string(slap().join("slap.golden.jsonl")).unwrap();
    assert_eq!(text, golden);
    let summary = stdout(&o);
    assert!(summary.contains("lily: mood"), "{}", summary);
    assert!(summary.contains("sadness"), "{}", summary);
}

#[test]
fn every_line_has_the_five_keys() {
    let (_, text) = run_slap(&[]);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 5, "{}", line);
        for k in ["tick", "agent", "cycle", "step", "payload"] {
            assert!(v.get(k).is_some(), "{} missing in {}", k, line);
        }
    }
}

#[test]
fn ticks_and_parallel_flags() {
    let (o, seq) = run_slap(&["--ticks", "4"]);
    assert_eq!(code(&o), 0);
    assert!(!seq.contains("\"tick\":4,\"agent\":\"lily\""));
    assert!(seq.contains("\"tick\":3,\"agent\":\"lily\""));
    let (_, par) = run_slap(&["--ticks", "4", "--parallel"]);
    assert_eq!(seq, par);
}

#[test]
fn run_to_stdout_keeps_summary_off_it() {
    let o = bin().arg("run").arg(slap().join("slap.emas")).args(["--ticks", "2"]).output().unwrap();
    assert_eq!(code(&o), 0);
    for line in stdout(&o).lines() {
        assert!(line.starts_with("{\"tick\":"), "{}", line);
    }
    assert!(String::from_utf8_lossy(&o.stderr).contains("lily: mood"));
}

#[test]
fn check_accepts_fixture() {
    let o = bin()
        .arg("check")
        .arg(slap().join("slap.emas"))
        .arg("--scenario")
        .arg(slap().join("slap.scn"))
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("0 error(s)"));
}

fn project(dir: &Path, agent_src: &str, extra_mas: &str) -> PathBuf {
    fs::write(dir.join("a.easl"), agent_src).unwrap();
    let mas = dir.join("p.emas");
    fs::write(&mas, format!("MAS p {{ agents: a; {} }}", extra_mas)).unwrap();
    mas
}

#[test]
fn check_reports_syntax_error_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let mas = project(dir.path(), "+!g <- .print(\"x\")\n+!h <- true.", "");
    let o = bin().arg("check").arg(&mas).output().unwrap();
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("a.easl") && err.contains(":2:"), "{}", err);
}

#[test]
fn check_flags_missing_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let mas = project(dir.path(), "personality__: { [ extraversion: 0.5 ] }.\n+!g <- true.", "");
    let o = bin().arg("check").arg(&mas).output().unwrap();
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    let r = bin().arg("run").arg(&mas).output().unwrap();
    assert_eq!(code(&r), 1);
}

#[test]
fn run_rejects_bad_scenario() {
    let dir = tempfile::tempdir().unwrap();
    let scn = dir.path().join("bad.scn");
    fs::write(&scn, "tick 1 nobody +rain.").unwrap();
    let o = bin().arg("run").arg(slap().join("slap.emas")).arg("--scenario").arg(&scn).output().unwrap();
    assert_eq!(code(&o), 1);
}

#[test]
fn unwritable_trace_is_a_runtime_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing/dir/t.jsonl");
    let o = bin().arg("run").arg(slap().join("slap.emas")).arg("--trace").arg(&out).output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&bin().arg("run").output().unwrap()), 1);
    assert_eq!(code(&bin().arg("bogus").output().unwrap()), 1);
    assert_eq!(code(&bin().arg("--help").output().unwrap()), 0);
}

#[test]
fn trace_filter_selects_records() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.jsonl");
    fs::write(&trace, fs::read_to_string(slap().join("slap.golden.jsonl")).unwrap()).unwrap();
    let o = bin().args(["trace", "--filter", "agent=lily,rule=EmSel1"]).arg(&trace).output().unwrap();
    assert_eq!(code(&o), 0);
    let lines: Vec<_> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2, "{:?}", lines);
    assert!(lines[0].contains("sorry_for") && lines[1].contains("sadness"));

    let all = bin().args(["trace"]).arg(&trace).output().unwrap();
    assert_eq!(stdout(&all).lines().count(), fs::read_to_string(&trace).unwrap().lines().count());

    let bad = bin().args(["trace", "--filter", "colour=red"]).arg(&trace).output().unwrap();
    assert_eq!(code(&bad), 1);

    fs::write(&trace, "not json\n").unwrap();
    let broken = bin().args(["trace"]).arg(&trace).output().unwrap();
    assert_eq!(code(&broken), 1);
}
