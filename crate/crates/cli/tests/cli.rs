use std::path::Path;
use std::process::{Command, Output};

fn cosint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cosint"))
        .args(args)
        .output()
        .expect("failed to run cosint")
}

fn stdout(args: &[&str]) -> String {
    let out = cosint(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn golden_table_i_0_8() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/table_I_0_8.txt");
    let expected = std::fs::read_to_string(golden).unwrap();
    assert_eq!(stdout(&["table", "I", "0", "8"]), expected);
}

#[test]
fn table_rows() {
    assert!(stdout(&["table", "I", "0", "5"]).contains("1/3*pi - 7/9"));
    assert!(stdout(&["table", "W", "0", "0"]).contains("1/2*pi"));
    assert!(stdout(&["table", "J", "6", "6"]).contains("5/128*pi^2"));
}

#[test]
fn table_bad_range_is_usage_error() {
    let out = cosint(&["table", "I", "5", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn coeff_rows() {
    let csv = stdout(&["coeffs", "0", "5", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "k,parity,pi_coeff,constant");
    assert_eq!(lines[1], "0,even,1/8,0");
    assert_eq!(lines[5], "4,even,3/64,-1/4");
    assert_eq!(lines[6], "5,odd,4/15,-149/225");
}

#[test]
fn coeff_json_uses_exact_strings() {
    let json = stdout(&["coeffs", "4", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[0]["a"], "3/64");
    assert_eq!(v[0]["b"], "-1/4");
}

#[test]
fn series_rows() {
    let csv = stdout(&["series", "inv_sqrt", "4", "--format", "csv"]);
    let exact: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(exact, ["1", "1/2", "3/8", "5/16"]);

    let csv = stdout(&["series", "w_odd_recip", "2", "--format", "csv"]);
    let exact: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(exact, ["1", "3/2"]);

    assert!(stdout(&["series", "j_even", "1"]).contains("1/8*pi^2"));
    assert_eq!(cosint(&["series", "j_even", "0"]).status.code(), Some(2));
}

#[test]
fn sawtooth_csv() {
    let out = stdout(&["sawtooth", "--angle", "1.0471975511965976", "--teeth", "2", "--csv"]);
    let mut sections = out.split("\n\n");
    let geometry = sections.next().unwrap();
    let averages = sections.next().unwrap();
    assert!(geometry.starts_with("tooth,t,x,y\n"));
    assert_eq!(geometry.lines().count(), 1 + 2 * 17);
    assert!(averages.contains("1/16*pi - 1/4*pi^-1"));
    // avg-upto defaults to 0: one row
    assert_eq!(averages.lines().count(), 2);
}

#[test]
fn sawtooth_svg() {
    let out = stdout(&["sawtooth", "--angle", "0.8", "--teeth", "3", "--svg", "--avg-upto", "2"]);
    assert_eq!(out.matches("<path").count(), 3);
    assert_eq!(out.matches("<line").count(), 2);
    assert!(out.contains("7/64*pi - 2/3 + 19/18*pi^-1"));
}

#[test]
fn sawtooth_rejects_bad_angle() {
    assert_eq!(cosint(&["sawtooth", "--angle", "1.6"]).status.code(), Some(2));
    assert_eq!(cosint(&["sawtooth", "--angle", "0"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = cosint(&["verify", "10", "1e-9"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = String::from_utf8(ok.stdout).unwrap();
    let oracle_rows = text.lines().filter(|l| l.contains(" exact ") && !l.starts_with('A')).count();
    assert_eq!(oracle_rows, 33);
    assert!(text.ends_with("0 failure(s)\n"));

    assert_eq!(cosint(&["verify", "3", "0"]).status.code(), Some(2));
    assert_eq!(cosint(&["verify", "--kmax", "3", "--tol", "-1"]).status.code(), Some(2));
    // a tolerance below rounding noise fails the oracle comparison
    assert_eq!(cosint(&["verify", "8", "1e-300"]).status.code(), Some(1));
}

#[test]
fn verify_zero_checks_bases_only() {
    let out = stdout(&["verify", "0", "1e-9", "--format", "csv"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("W,0,1.57079632679490e0,"));
    assert!(rows[1].starts_with("I,0,1.23370055013617e0,"));
    assert!(rows[2].starts_with("J,0,1.23370055013617e0,"));
}

#[test]
fn precision_flag() {
    let out = stdout(&["table", "W", "1", "1", "--format", "csv", "--precision", "3"]);
    assert_eq!(out.lines().nth(1).unwrap(), "W,1,1,1.00e0,closed;recurrence;series");
    assert_eq!(cosint(&["table", "W", "1", "1", "--precision", "18"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("cosint-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.csv");
    let status = cosint(&["table", "W", "0", "2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(status.status.success());
    assert!(status.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&["table", "W", "0", "2", "--format", "csv"]));
    std::fs::remove_dir_all(dir).ok();
}
