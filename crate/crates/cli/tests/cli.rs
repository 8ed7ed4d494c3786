use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_qclifford"));
    c.env_remove("CS_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn synth_worked_example_round_trips_through_verify() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.txt", "d 6 n 1\n10 9\n3 4\n");
    let out = run(&["synth", m.to_str().unwrap(), "--verify", "symplectic"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("# gates: 10"));
    assert!(text.contains("# symplectic: ok"));
    let prog = write(&dir, "p.txt", &text);
    let out = run(&[
        "verify",
        "--matrix",
        m.to_str().unwrap(),
        "--program",
        prog.to_str().unwrap(),
        "--unitary",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("# unitary: ok"));
}

#[test]
fn synth_identity_is_empty() {
    let dir = TempDir::new().unwrap();
    let m = write(
        &dir,
        "id.txt",
        "d 4 n 2\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n",
    );
    let out = run(&["synth", m.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "# gates: 0\n");
}

#[test]
fn synth_swap_passes_unitary_check() {
    let dir = TempDir::new().unwrap();
    let m = write(
        &dir,
        "swap.txt",
        "d 3 n 2\n0 1 0 0\n1 0 0 0\n0 0 0 1\n0 0 1 0\n",
    );
    let out = run(&["synth", m.to_str().unwrap(), "--verify", "unitary"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn random_matrices_synthesize_and_verify() {
    let dir = TempDir::new().unwrap();
    for (n, d, seed) in [("1", "12", "1"), ("3", "6", "2"), ("2", "5", "3")] {
        let out = run(&["random", "--n", n, "--d", d, "--seed", seed]);
        assert_eq!(out.status.code(), Some(0));
        let again = run(&["random", "--n", n, "--d", d, "--seed", seed]);
        assert_eq!(
            stdout(&out),
            stdout(&again),
            "seeded output is reproducible"
        );
        let m = write(&dir, "r.txt", &stdout(&out));
        let out = run(&["synth", m.to_str().unwrap(), "--verify", "symplectic"]);
        assert_eq!(out.status.code(), Some(0));
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "d 6 n 1\n1 1\n1 1\n");
    assert_eq!(
        run(&["synth", bad.to_str().unwrap()]).status.code(),
        Some(3)
    );
    let garbage = write(&dir, "g.txt", "hello\n");
    assert_eq!(
        run(&["synth", garbage.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["synth", "/nonexistent/file"]).status.code(), Some(2));

    let m = write(&dir, "m.txt", "d 5 n 1\n1 1\n0 1\n");
    let wrong = write(&dir, "w.txt", "F 0\n");
    let out = run(&[
        "verify",
        "--matrix",
        m.to_str().unwrap(),
        "--program",
        wrong.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));

    let big = write(&dir, "big.txt", &{
        let mut s = String::from("d 7 n 3\n");
        for r in 0..6 {
            let row: Vec<&str> = (0..6).map(|c| if r == c { "1" } else { "0" }).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    });
    let out = run(&["synth", big.to_str().unwrap(), "--verify", "unitary"]);
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(run(&["embed-check", "2", "3", "7"]).status.code(), Some(5));
}

#[test]
fn transport_examples() {
    let out = run(&["transport", "d=5 n=1 a=1 b=0", "d=5 n=1 a=0 b=1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("# gates:"));

    let out = run(&["transport", "d=4 n=1 a=0 b=2", "d=4 n=1 a=0 b=1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "infeasible\n");

    let out = run(&["transport", "d=6 n=2 a=1,0 b=0,3", "d=6 n=2 a=1,0 b=0,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "# gates: 0\n");

    let out = run(&["transport", "d=6 n=2 a=1 b=0,3", "d=6 n=1 a=1 b=0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn peg_reports_normal_form() {
    let out = run(&["peg", "d=6 n=2 a=2,0 b=4,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("# normal form: d=6 n=2 a=0,0 b=0,2"),
        "{text}"
    );
    assert!(text.contains("# gcd: 2"));
}

#[test]
fn embed_check_reports() {
    let out = run(&["embed-check", "2", "3", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("symplectic: no"));
    assert!(text.contains("QFT: infeasible"));
    assert!(text.contains("SUM: feasible"));

    for args in [["2", "2", "2"], ["2", "1", "1"]] {
        let out = run(&["embed-check", args[0], args[1], args[2], "--logical-action"]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        assert!(text.contains("symplectic: yes"));
        assert!(text.contains("QFT: feasible"));
        assert!(text.contains("PhaseShift: feasible"));
        assert!(text.contains("logical SUM action: ok"));
    }
}

#[test]
fn tolerance_from_environment() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.txt", "d 2 n 1\n0 3\n1 0\n");
    let out = bin()
        .args(["synth", m.to_str().unwrap(), "--verify", "unitary"])
        .env("CS_TOL", "1e-6")
        .output()
        .unwrap();
    assert!(stdout(&out).contains("tol 1e-6"));
    let out = bin()
        .args(["synth", m.to_str().unwrap()])
        .env("CS_TOL", "tight")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stdin_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = bin()
        .args(["synth", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"d 3 n 1\n0 2\n1 0\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "F 0\n# gates: 1\n");
}
