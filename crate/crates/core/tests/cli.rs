use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use hornsat::{horn_from_formula, parse_formula, TraceDocument};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn hornsat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hornsat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn hornsat_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hornsat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_paper_examples() {
    let e1 = hornsat(&["solve", fixture("example1.txt").to_str().unwrap()]);
    assert_eq!(e1.status.code(), Some(20));
    assert_eq!(stdout(&e1), "UNSAT\n");

    let e2 = hornsat(&["solve", fixture("example2.txt").to_str().unwrap()]);
    assert_eq!(e2.status.code(), Some(10));
    assert_eq!(stdout(&e2), "SAT\np=1 q=0 r=0 s=0\n");

    let e3 = hornsat(&["solve", fixture("example3.txt").to_str().unwrap()]);
    assert_eq!(e3.status.code(), Some(20));
}

#[test]
fn flags_do_not_change_verdicts() {
    for (name, code) in [
        ("example1.txt", 20),
        ("example2.txt", 10),
        ("example3.txt", 20),
    ] {
        let path = fixture(name);
        let path = path.to_str().unwrap();
        for flags in [
            vec!["solve", "--no-early-stop", path],
            vec!["solve", "--no-precheck", path],
            vec!["solve", "--no-early-stop", "--no-precheck", path],
        ] {
            assert_eq!(hornsat(&flags).status.code(), Some(code), "{flags:?}");
        }
    }
}

#[test]
fn json_traces_match_golden_files() {
    for i in 1..=3 {
        let input = fixture(&format!("example{i}.txt"));
        let out = hornsat(&["trace", "--json", input.to_str().unwrap()]);
        let golden = std::fs::read_to_string(fixture(&format!("example{i}.trace.json"))).unwrap();
        assert_eq!(stdout(&out), golden, "example {i}");
    }
}

#[test]
fn json_trace_replays_to_final_set() {
    for i in 1..=3 {
        let text = std::fs::read_to_string(fixture(&format!("example{i}.txt"))).unwrap();
        let horn = horn_from_formula(&parse_formula(&text).unwrap()).unwrap();
        let out = hornsat(&[
            "trace",
            "--json",
            "--no-early-stop",
            fixture(&format!("example{i}.txt")).to_str().unwrap(),
        ]);
        let doc = TraceDocument::from_json(stdout(&out).trim()).unwrap();
        assert_eq!(doc.replay(&horn).unwrap(), doc.final_set);
        assert_eq!(
            doc.model.is_some(),
            !doc.final_set.contains(&"bot".to_string())
        );
    }
}

#[test]
fn example1_trace_without_early_stop_matches() {
    let out = hornsat(&[
        "trace",
        "--json",
        "--no-early-stop",
        fixture("example1.txt").to_str().unwrap(),
    ]);
    let doc = TraceDocument::from_json(stdout(&out).trim()).unwrap();
    let fired: Vec<_> = doc.steps.iter().filter_map(|s| s.fired).collect();
    assert_eq!(fired, vec![0, 4, 2, 1, 3]);
    assert_eq!(doc.final_set, ["top", "p", "q", "r", "s", "bot"]);
    assert!(!doc.stopped_early);
}

#[test]
fn standard_input() {
    let out = hornsat_stdin(&["solve", "-"], "(p -> q) & p");
    assert_eq!(out.status.code(), Some(10));
    assert_eq!(stdout(&out), "SAT\np=1 q=1\n");

    let out = hornsat_stdin(
        &["solve", "--dimacs", "-"],
        "c tiny\np cnf 2 3\n1 0\n-1 2 0\n-2 0\n",
    );
    assert_eq!(out.status.code(), Some(20));
}

#[test]
fn diagnostics_go_to_stderr() {
    let out = hornsat_stdin(&["solve", "-"], "p | q");
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not Horn"));

    let out = hornsat(&["classify", "--json", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = hornsat(&["solve"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_examples() {
    let out = hornsat(&["classify", fixture("example1.txt").to_str().unwrap()]);
    assert_eq!(
        (out.status.code(), stdout(&out).as_str()),
        (Some(0), "Contradictory\n")
    );
    let out = hornsat(&["classify", fixture("example2.txt").to_str().unwrap()]);
    assert_eq!(stdout(&out), "Satisfiable\n");
    let out = hornsat(&[
        "classify",
        "--max-symbols",
        "3",
        fixture("example2.txt").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}
