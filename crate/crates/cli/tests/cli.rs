use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reciprocity"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn eis_split_json() {
    let o = run(&["eis", "split", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"p":"7","class":"split","pi":"2+3*w","conj":"-1-3*w"}"#
    );
}

#[test]
fn legendre_of_zero() {
    let o = run(&["legendre", "0", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
    assert_eq!(stdout(&run(&["legendre", "-1", "7"])).trim(), "-1");
}

#[test]
fn cubic_verify_small() {
    let v = json(&["cubic-verify", "--max-norm", "100", "--json"]);
    assert_eq!(v["law"], "cubic");
    assert_eq!(v["bound"], "100");
    assert_eq!(v["failures"], Value::Array(vec![]));
    assert!(v["cases_checked"].as_str().unwrap().parse::<u64>().unwrap() > 0);
}

#[test]
fn jobs_do_not_change_reports() {
    let strip = |mut v: Value| {
        v["elapsed_ms"] = Value::Null;
        v
    };
    for cmd in [&["biquad-verify", "--max-norm", "500"][..], &["verify", "cubic-two", "--bound", "2000"]] {
        let one = json(&[cmd, &["--json", "--jobs", "1", "--seed", "9"]].concat());
        let four = json(&[cmd, &["--json", "--jobs", "4", "--seed", "9"]].concat());
        assert_eq!(strip(one), strip(four));
    }
}

#[test]
fn literals_round_trip() {
    let v = json(&["eis", "primary", "3+w", "--json"]);
    let primary = v["primary"].as_str().unwrap();
    let again = json(&["eis", "primary", primary, "--json"]);
    assert_eq!(again["primary"], primary);
    assert_eq!(again["unit"], "1");

    let v = json(&["eis", "norm", "-1 - 3*w", "--json"]);
    assert_eq!(v["alpha"], "-1-3*w");
    assert_eq!(v["norm"], "7");

    let v = json(&["biquad-char", "-1+2i", "3", "--json"]);
    assert_eq!(v["pi"], "-1+2*i");
}

#[test]
fn malformed_literal_is_usage_error() {
    let o = run(&["eis", "norm", "2+3x"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("position 3"), "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["legendre", "3", "8"]).status.code(), Some(2));
    assert_eq!(run(&["cubic-char", "4", "5"]).status.code(), Some(2));
    assert_eq!(run(&["identity-check", "gauss-cube", "503"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "quadratic", "--bound", "1000000"]).status.code(), Some(3));
    assert_eq!(run(&["qr-check", "3", "5"]).status.code(), Some(0));
}

#[test]
fn small_commands() {
    assert_eq!(json(&["mobius", "30", "--json"])["mu"], "-1");
    assert_eq!(json(&["count-irreducibles", "3", "2", "--json"])["count"], "3");
    let census = json(&["field-census", "7", "1", "--json"]);
    assert_eq!(census["census"]["6"], "2");
    assert_eq!(census["matches_phi"], true);
    assert_eq!(json(&["hausner", "5", "11", "--json"])["tau_q"], true);
    assert_eq!(json(&["cubic-char", "2+3*w", "2", "--json"])["value"], "w");
    assert_eq!(json(&["supplement", "one-minus-omega", "2+3*w", "--json"])["agree"], true);
    let two = json(&["two-cubic", "43", "--json"]);
    assert_eq!((two["C"].as_str(), two["D"].as_str()), (Some("4"), Some("1")));
    assert_eq!(json(&["jacobi-sum", "7", "3", "3", "--json"])["value"], "-1-3*w");
    assert_eq!(json(&["identity-check", "magnitude", "13", "--json"])["holds"], true);
    assert_eq!(json(&["identity-check", "jacobi-relation", "13", "4", "--json"])["holds"], true);
    let g = json(&["gauss-sum", "5", "2", "--json"]);
    let re = g["approx"][0].as_f64().unwrap();
    assert!((re - 5f64.sqrt()).abs() < 1e-9);
}

#[test]
fn csv_report() {
    let o = run(&["verify", "quadratic", "--bound", "50", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("law,bound,cases_checked,elapsed_ms,case,detail"));
    assert!(lines.next().unwrap().starts_with("quadratic,50,182,"));
    assert_eq!(run(&["mobius", "6", "--csv"]).status.code(), Some(2));
}
