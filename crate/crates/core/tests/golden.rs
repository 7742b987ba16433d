//! The bundled run must keep producing the checked-in trace.
//! Regenerate with `EMPATH_BLESS=1 cargo test -p empath-core --test golden`.

mod common;

use common::*;

#[test]
fn slap_trace_matches_golden_file() {
    let path = fixtures().join("slap/slap.golden.jsonl");
    let got = jsonl(&run_slap().records);
    if std::env::var_os("EMPATH_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).expect("golden file present");
    if got != want {
        let line = got
            .lines()
            .zip(want.lines())
            .position(|(a, b)| a != b)
            .unwrap_or(got.lines().count().min(want.lines().count()));
        panic!(
            "trace differs from golden file at line {}\n got: {}\nwant: {}",
            line + 1,
            got.lines().nth(line).unwrap_or("<end>"),
            want.lines().nth(line).unwrap_or("<end>")
        );
    }
}

#[test]
fn golden_file_parses_back() {
    if std::env::var_os("EMPATH_BLESS").is_some() {
        return;
    }
    let text = std::fs::read_to_string(fixtures().join("slap/slap.golden.jsonl")).unwrap();
    for (i, line) in text.lines().enumerate() {
        let r =
            empath_core::trace::TraceRecord::from_json_line(line).unwrap_or_else(|e| panic!("line {}: {}", i + 1, e));
        assert_eq!(r.to_json_line(), line, "line {}", i + 1);
    }
}
