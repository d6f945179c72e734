use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poisson-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn structure(text: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const QUADRATIC: &str = r#"
variables = ["x", "y", "z", "a", "b", "c"]
central = ["a", "b", "c"]
[brackets]
"x,y" = "a*z^2"
"x,z" = "b*y^2"
"y,z" = "c*x^2"
"#;

const AXIS: &str = "variables = [\"x\", \"y\"]\n[brackets]\n\"x,y\" = \"x\"\n";

const PLANE: &str = "variables = [\"x\", \"y\"]\nomega = [[0, 1], [-1, 0]]\n";

#[test]
fn quadratic_brackets() {
    let f = structure(QUADRATIC);
    let p = f.path().to_str().unwrap();
    assert_eq!(
        stdout(&["bracket", "-s", p, "x", "y/z^2"]),
        "a - 2*b*y^3*z^-3\n"
    );
    assert_eq!(
        stdout(&["bracket", "-s", p, "x/z", "y/z"]),
        "a - b*y^3*z^-3 + c*x^3*z^-3\n"
    );
    assert_eq!(
        stdout(&["--machine", "bracket", "-s", p, "x", "y/z^2"]),
        "bracket = \"a - 2*b*y^3*z^-3\"\n"
    );
}

#[test]
fn bracket_factor_order() {
    let f = structure(QUADRATIC);
    let p = f.path().to_str().unwrap();
    assert_eq!(
        stdout(&["bracket", "-s", p, "--order", "z,y,x,a,b,c", "x", "y/z^2"]),
        "a - 2*z^-3*y^3*b\n"
    );
}

#[test]
fn jacobi_summary_and_failure() {
    let f = structure(QUADRATIC);
    let out = stdout(&["jacobi", "-s", f.path().to_str().unwrap()]);
    assert!(out.contains("jacobi identity holds"));
    let broken = structure(
        "variables = [\"x\", \"y\", \"z\"]\n[brackets]\n\"x,y\" = \"y^2\"\n\"x,z\" = \"z\"\n\"y,z\" = \"x\"\n",
    );
    let p = broken.path().to_str().unwrap();
    let out = stdout(&["--machine", "jacobi", "-s", p]);
    assert!(out.contains("valid = false"), "{out}");
    assert!(out.contains("triple = [\"x\", \"y\", \"z\"]"), "{out}");
    // Loading for any other command refuses the structure.
    let out = run(&["bracket", "-s", p, "x", "y"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Jacobi"));
    assert!(run(&["bracket", "-s", p, "--skip-jacobi", "x", "y"])
        .status
        .success());
}

#[test]
fn series_commands() {
    let out = stdout(&[
        "expand",
        "--vars",
        "x,y",
        "--order",
        "x,y",
        "--window",
        "x:-4..0,y:0..3",
        "1/(x+y)",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    for t in ["x^-1", "-x^-2*y", "x^-3*y^2", "-x^-4*y^3"] {
        assert!(lines.contains(&t), "{t} missing from {out}");
    }
    let f = structure(PLANE);
    let p = f.path().to_str().unwrap();
    assert_eq!(
        stdout(&[
            "coeff",
            "-s",
            p,
            "--index=1,-2",
            "--order",
            "y,x",
            "1/(x+y)"
        ]),
        "-1\n"
    );
    assert_eq!(
        stdout(&["coeff", "-s", p, "--index=1,-2", "1/(x+y)"]),
        "0\n"
    );
    assert_eq!(
        stdout(&["constant-term", "-s", p, "x/(x+y)", "y/(x-y)"]),
        "0\n"
    );
}

#[test]
fn closure_reports() {
    let f = structure(AXIS);
    let out = stdout(&["closure", "-s", f.path().to_str().unwrap(), "x", "y"]);
    assert!(out.contains("closed: true"));
    assert!(out.contains("dimension: 3"));
    assert!(out.contains("{b1, b2} = b1"));
    let g = structure(PLANE);
    let out = stdout(&[
        "--machine",
        "closure",
        "-s",
        g.path().to_str().unwrap(),
        "x",
        "y",
    ]);
    assert!(out.contains("closed = false"));
    assert!(out.contains("dimension = 16"));
}

#[test]
fn log_canonical_check() {
    let f = structure(PLANE);
    let p = f.path().to_str().unwrap();
    let out = stdout(&["check-log-canonical", "-s", p, "x*y", "y^-1"]);
    assert_eq!(out, "log-canonical\n  [0, -1]\n  [1, 0]\n");
    let out = stdout(&["check-log-canonical", "-s", p, "x + y", "y"]);
    assert!(out.starts_with("not log-canonical: {g1, g2}"));
}

#[test]
fn canonical_pairs_and_witnesses() {
    assert_eq!(
        stdout(&["canonical-pair", "1", "0"]),
        "u = x^-1\nv = -x*y\n{u, v} = 1\n"
    );
    assert!(stdout(&["canonical-pair", "1", "1"]).starts_with("no canonical pair"));
    let f = structure(AXIS);
    let p = f.path().to_str().unwrap();
    let out = stdout(&["witness", "-s", p, "1/x", "-x*y"]);
    assert!(out.contains("case: constant-bracket"));
    assert!(out.contains("f' = -y"));
    let g = structure(PLANE);
    let out = run(&["witness", "-s", g.path().to_str().unwrap(), "x", "y"]);
    assert!(!out.status.success());
}

#[test]
fn gallery_entries() {
    assert!(stdout(&["gallery"]).contains("quadratic-xyz"));
    let out = stdout(&["gallery", "sl2"]);
    assert!(out.contains("ok  {a, d} = b*c"));
    let out = stdout(&["--machine", "gallery", "borel-sl2"]);
    assert!(out.contains("\"alpha,beta\" = \"1/2*alpha*beta\""), "{out}");
    assert!(!run(&["gallery", "nope"]).status.success());
}

#[test]
fn errors_are_reported() {
    let f = structure(AXIS);
    let out = run(&["bracket", "-s", f.path().to_str().unwrap(), "x", "w"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown identifier"));
    let out = run(&["bracket", "-s", "/nonexistent.toml", "x", "y"]);
    assert!(!out.status.success());
}
