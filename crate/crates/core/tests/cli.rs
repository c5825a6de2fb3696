//! The command-line binary: outputs and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_immaculate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn expand_examples() {
    assert_eq!(
        stdout(&["expand", "--from", "dualimm", "--index", "1,2", "--to", "F"]),
        "F[1,2]"
    );
    assert_eq!(
        stdout(&["expand", "--from", "F", "--index", "1", "--to", "M"]),
        "M[1]"
    );
    assert_eq!(
        stdout(&["expand", "--from", "rsdualimm", "--index", "3", "--to", "F"]),
        "F[1,1,1]"
    );
    assert_eq!(
        stdout(&["expand", "--from", "imm", "--index", "2,1,2", "--to", "H"]),
        "H[2,1,2] - H[2,2,1]"
    );
}

#[test]
fn skew_pieri_worked_example() {
    assert_eq!(
        stdout(&["skew-pieri", "-s", "2", "--shape", "1,2,1/1,1"]),
        "S*[1,2,1] - S*[1,1,2,1/1] + S*[2,1,2,1/1,1] - S*[2,2,1/1] + S*[3,2,1/1,1]"
    );
    assert_eq!(
        stdout(&["skew-pieri", "-s", "1", "--shape", "2/", "--verify"]),
        "S*[2,1] + S*[3]\nMATCH"
    );
    let rs = stdout(&[
        "skew-pieri",
        "-s",
        "2",
        "--shape",
        "1,2,1/1,1",
        "--row-strict",
        "--verify",
    ]);
    assert!(rs.starts_with("RS*[1,2,1] - RS*[1,1,2,1/1]"), "{rs}");
    assert!(rs.ends_with("MATCH"));
}

#[test]
fn json_is_stable_and_sorted() {
    let args = ["--json", "skew-pieri", "-s", "2", "--shape", "1,2,1/1,1"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert!(
        a.starts_with(r#"[{"basis":"S*","coeff":1,"index":[1,2,1]},"#),
        "{a}"
    );
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn pieri_coeff_and_tableaux() {
    let out = stdout(&[
        "pieri-coeff",
        "--gamma",
        "1,2,1",
        "-s",
        "2",
        "--alpha",
        "3,2,1",
    ]);
    assert!(out.starts_with("+1\ncase: equal-length"), "{out}");
    let out = stdout(&[
        "--json",
        "pieri-coeff",
        "--gamma",
        "1,2,1",
        "-s",
        "2",
        "--alpha",
        "3,2,1",
    ]);
    assert_eq!(
        out,
        r#"{"case":"equal-length","j":null,"r":null,"value":1,"vector":[2,0,0]}"#
    );
    let out = stdout(&["tableaux", "--shape", "3,4,1/1"]);
    assert!(out.contains("Des = {1,5,6}\n7\n2 3 4 6\n. 1 5"), "{out}");
    assert!(stdout(&["--latex", "tableaux", "--shape", "2,1"]).contains("\\begin{ytableau}"));
}

#[test]
fn latex_output() {
    assert_eq!(
        stdout(&["--latex", "expand", "--from", "dualimm", "--index", "2/1", "--to", "F"]),
        "F_{(1)}"
    );
}

#[test]
fn verify_suite() {
    let out = stdout(&["verify", "--suite", "psi", "--max", "4"]);
    assert!(out.ends_with("PASS"), "{out}");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(
        code(&["expand", "--from", "F", "--index", "1,0", "--to", "M"]),
        Some(2)
    );
    assert_eq!(
        code(&["expand", "--from", "Q", "--index", "1", "--to", "M"]),
        Some(2)
    );
    assert_eq!(code(&["skew-pieri", "-s", "1", "--shape", "1/2"]), Some(2));
    assert_eq!(code(&["skew-pieri", "-s", "0", "--shape", "1"]), Some(2));
    assert_eq!(code(&["no-such-command"]), Some(2));
    assert_eq!(
        code(&["expand", "--from", "F", "--index", "1", "--to", "H"]),
        Some(3)
    );
    assert_eq!(code(&["verify", "--suite", "nope"]), Some(3));
    // the one recorded case that is not multiplicity-free still matches the product
    assert_eq!(
        code(&[
            "skew-pieri",
            "-s",
            "3",
            "--shape",
            "1,4,1/1,4,1",
            "--verify"
        ]),
        Some(0)
    );
}
