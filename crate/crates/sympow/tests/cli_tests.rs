//! End-to-end tests of the command-line binary and its emission formats.

use std::process::{Command, Output};

fn sympow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympow"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_of(args: &[&str]) -> String {
    let out = sympow(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn basis_csv_is_bit_stable_against_the_checked_in_tables() {
    for (args, golden) in [
        (
            vec!["basis", "--space", "sp2", "--field", "C", "--coeff", "F2", "--deg-to", "9", "--format", "csv"],
            include_str!("../../../data/golden/sp2_f2_c.csv"),
        ),
        (
            vec!["basis", "--space", "sp2", "--field", "H", "--coeff", "Z", "--deg-to", "24", "--format", "csv"],
            include_str!("../../../data/golden/sp2_z_h.csv"),
        ),
        (
            vec!["basis", "--space", "sp2n", "--n", "3", "--field", "C", "--coeff", "Z", "--deg-to", "12", "--format", "csv"],
            include_str!("../../../data/golden/sp2n3_z_c.csv"),
        ),
        (
            vec!["basis", "--space", "sp2n", "--n", "2", "--field", "H", "--coeff", "F2", "--deg-to", "16", "--format", "csv"],
            include_str!("../../../data/golden/sp2n2_f2_h.csv"),
        ),
    ] {
        let got = stdout_of(&args);
        assert_eq!(got, golden, "csv drift for {args:?}");
    }
}

#[test]
fn json_round_trips_and_keeps_key_order() {
    let text = stdout_of(&[
        "basis", "--space", "sp2", "--field", "C", "--coeff", "Z", "--deg-to", "11",
        "--format", "json",
    ]);
    let report: sympow::report::TableReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);

    let order = ["\"space\"", "\"field\"", "\"d\"", "\"coeff\"", "\"n\"", "\"degrees\""];
    let mut last = 0;
    for key in order {
        let at = text.find(key).unwrap_or_else(|| panic!("missing {key}"));
        assert!(at >= last, "{key} out of order");
        last = at;
    }

    let row = &report.degrees[7];
    assert_eq!(row.degree, 7);
    assert!(row.free.is_empty());
    assert_eq!(row.torsion2, vec!["u[1,2]".to_string()]);
}

#[test]
fn ring_lists_generators_and_relations() {
    let text = stdout_of(&["ring", "--space", "mp", "--field", "C", "--coeff", "F2"]);
    assert!(text.contains("generators:"), "{text}");
    assert!(text.contains("relations:"), "{text}");
    assert!(text.contains("t  (degree 2)"), "{text}");
}

#[test]
fn mul_prints_the_normalized_product() {
    let text = stdout_of(&[
        "mul", "--space", "sp2n", "--n", "3", "--field", "C", "--coeff", "Z",
        "g^3*h/2", "1",
    ]);
    assert_eq!(text, "degree 10: 3*(g*h^2/4)\n");
}

#[test]
fn poly_prints_family_members() {
    assert_eq!(stdout_of(&["poly", "--family", "r", "--k", "0"]), "2\n");
    assert_eq!(
        stdout_of(&["poly", "--family", "r", "--k", "3"]),
        "e1^3 - 3*e1*e2\n"
    );
    assert_eq!(
        stdout_of(&["poly", "--family", "delta", "--k", "2", "--field", "H"]),
        "a^5*t\n"
    );
}

#[test]
fn poincare_prints_aligned_rows() {
    let text = stdout_of(&[
        "poincare", "--space", "sp2", "--field", "C", "--coeff", "Z", "--max-deg", "8",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].contains("degree"), "{text}");
    assert!(lines.iter().any(|l| l.starts_with("7") && l.contains("1")), "{text}");
}

#[test]
fn verify_suites_pass_and_respect_the_thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_sympow"))
        .args(["verify", "--suite", "appendix"])
        .env("SYMPOW_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS appendix table SP2 mod2 C"), "{text}");
    assert!(text.trim_end().ends_with("0 failed"), "{text}");
}

#[test]
fn usage_errors_exit_with_code_two() {
    let out = sympow(&["basis", "--space", "sp2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = sympow(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = sympow(&["mul", "--space", "sp2", "--field", "C", "g + q", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse error at byte 4"), "{err}");
}

#[test]
fn element_outside_the_lattice_is_reported() {
    let out = sympow(&["mul", "--space", "sp2", "--field", "C", "h/2", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not"), "{err}");
}
