use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isingff")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_and_series_examples() {
    let o = run(&["table", "2", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "f^(2)_{0,0} = (t/4)·F_0·F_1");

    let o = run(&["series", "2", "1", "6"]);
    assert!(stdout(&o).starts_with("f^(2)_{1,1} = 3/64 t^2 + "), "{}", stdout(&o));

    let o = run(&["series", "3", "1", "8"]);
    assert!(stdout(&o).contains("= 1/1024 t^3 + "), "{}", stdout(&o));

    let o = run(&["series", "1", "0", "4"]);
    assert!(stdout(&o).contains("1 + 1/4 t + 9/64 t^2"), "{}", stdout(&o));

    let o = run(&["table", "3", "1", "latex"]);
    assert!(stdout(&o).contains("\\frac{3^{5}}{2^{9}} t^{3} F_{2}^{3}"), "{}", stdout(&o));
}

#[test]
fn series_json_round_trips() {
    let o = run(&["series", "3", "2", "9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let s = isingff::arith::json::series_from_json(&v["series"]).unwrap();
    assert_eq!(s, isingff::formfactor::assemble(3, 2, 9).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["table", "9", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "wronskian", "--N", "1..2", "--power", "2..3"]).status.code(), Some(0));
}

#[test]
fn verify_is_deterministic_across_job_counts() {
    let with_jobs = |j| run(&["verify", "--suite", "fixtures,leading,findings", "--format", "json", "--jobs", j]);
    let (a, b) = (with_jobs("1"), with_jobs("3"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let text = run(&["verify", "fixtures"]);
    assert!(stdout(&text).contains("13 tables compared"));
}
