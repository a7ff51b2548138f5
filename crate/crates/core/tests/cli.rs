use std::process::{Command, Output};

fn chesstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chesstab"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn pair_sum_prints_value() {
    let out = chesstab(&["pair-sum", "--e", "2", "--v", "0,1,0,1", "--w", "0,1,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "4\n");
}

#[test]
fn chess_table_is_deterministic_across_thread_counts() {
    let a = chesstab(&["chess-table", "--n-max", "18", "--threads", "1"]);
    let b = chesstab(&["chess-table", "--n-max", "18", "--threads", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("n,value,v2,bound,factorization,verdict\n"));
    assert!(text.contains("\n18,"));
    assert!(text.contains("2^15*103*163,PASS"));
}

#[test]
fn stability_suite_passes() {
    let out = chesstab(&["verify", "--suite", "stability", "--degree", "12"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn json_rows() {
    let out = chesstab(&["chess-table", "--n-max", "4", "--format", "json"]);
    let last = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .last()
        .unwrap()
        .to_owned();
    assert_eq!(
        last,
        r#"{"n":4,"e":2,"p":2,"value":"4","valuation":2,"bound":2,"factorization":"2^2","verdict":"PASS"}"#
    );
}

#[test]
fn bad_invocations_exit_with_usage_code() {
    assert_eq!(chesstab(&["chess-table", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        chesstab(&["pair-sum", "--v", "0,2", "--w", "0,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        chesstab(&["verify", "--suite", "bound", "--degree", "12"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn scan_emits_observed_rows() {
    let out = chesstab(&["scan", "--e", "3", "--p", "3", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",OBSERVED")));
}
