use std::io::Write;
use std::process::{Command, Output, Stdio};

use sombor_core::{is_isomorphic, parse_graph6};

fn sombor(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sombor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_star() {
    let o = sombor(&["compute"], "D?{\n");
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "graph6,n,m,nu,SO,SO_red,SO_shifted,M1");
    assert_eq!(
        lines[1],
        "D?{,5,4,0,16.4924225025,12.0000000000,21.5406592285,20"
    );
    assert_eq!(lines.len(), 2);
}

#[test]
fn compute_empty_input_is_header_only() {
    let o = sombor(&["compute"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "graph6,n,m,nu,SO,SO_red,SO_shifted,M1\n");
}

#[test]
fn compute_reports_bad_line_number() {
    let o = sombor(&["compute"], "D?{\nBg\nD?\n");
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn construct_families() {
    let o = sombor(&["construct", "h_graph", "5", "2"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "D}_\n");
    let o = sombor(&["construct", "star", "4"], "");
    assert_eq!(stdout(&o), "Cs\n");
    let o = sombor(&["construct", "h_graph", "4", "7"], "");
    assert!(!o.status.success());
    assert!(stderr(&o).contains("usage"));
}

#[test]
fn construct_then_compute_matches_closed_form() {
    let o = sombor(&["construct", "h_graph", "5", "2", "--format", "csv"], "");
    let text = stdout(&o);
    let row: Vec<_> = text.lines().nth(1).unwrap().split(',').collect();
    let so: f64 = row[4].parse().unwrap();
    assert!((so - 25.27848).abs() < 1e-5);
}

#[test]
fn verify_extremal_small_orders() {
    let o = sombor(&["verify-extremal", "--n", "4..7", "--index", "so"], "");
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let rows: Vec<_> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3 + 4 + 5 + 6);
    assert!(rows.iter().all(|r| r.split(',').nth(4) == Some("true")));
}

#[test]
fn verify_extremal_single_cell() {
    let o = sombor(
        &[
            "verify-extremal",
            "--n",
            "7",
            "--nu",
            "5",
            "--index",
            "sored",
        ],
        "",
    );
    assert!(o.status.success());
    let h = stdout(&sombor(&["construct", "h_graph", "7", "5"], ""));
    let text = stdout(&o);
    let row: Vec<_> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..3], ["7", "5", "138"]);
    assert_eq!(row[3], "58.0612629478");
    let (found, h) = (
        parse_graph6(row[6]).unwrap(),
        parse_graph6(h.trim()).unwrap(),
    );
    assert!(is_isomorphic(&found, &h).unwrap());
}

#[test]
fn verify_extremal_cap() {
    let o = sombor(&["verify-extremal", "--n", "12"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
}

#[test]
fn verify_bounds_connected_six() {
    let o = sombor(
        &[
            "verify-bounds",
            "--universe",
            "connected",
            "--n",
            "6",
            "--bounds",
            "all",
        ],
        "",
    );
    // the degree-sequence lemma fails on three graphs of order 6
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let bad: Vec<_> = text
        .lines()
        .filter(|l| l.split(',').nth(5) == Some("false"))
        .collect();
    assert_eq!(bad.len(), 4);
    assert!(bad
        .iter()
        .all(|l| l.starts_with("degree-majorization,") || l.starts_with("degree-sum,")));
    assert!(text.contains("\nsummary,reports,holds,equality,vacuous,violations,anomalies\ntotal,"));

    let rest = "so-shifted-upper,so-red-upper,tree-corollary,epsilon-identities,so-lower,so-red-lower,zagreb-sandwich,hub-decomposition";
    let o = sombor(
        &[
            "verify-bounds",
            "--universe",
            "connected",
            "--n",
            "6",
            "--bounds",
            rest,
        ],
        "",
    );
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn verify_bounds_from_input() {
    let o = sombor(
        &[
            "verify-bounds",
            "--input",
            "-",
            "--bounds",
            "zagreb-sandwich",
        ],
        "D?{\nBw\n",
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let rows: Vec<_> = text.lines().skip(1).take_while(|l| !l.is_empty()).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows[0].starts_with("zagreb-so-upper,D?{,"));
}

#[test]
fn verify_bounds_unknown_bound() {
    let o = sombor(
        &["verify-bounds", "--n", "4", "--bounds", "no-such-bound"],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no-such-bound"));
}

#[test]
fn enumerate_counts() {
    let o = sombor(&["enumerate", "--n", "5"], "");
    assert_eq!(stdout(&o).lines().count(), 34);
    let o = sombor(&["enumerate", "--n", "6", "--universe", "connected"], "");
    assert_eq!(stdout(&o).lines().count(), 112);
    let o = sombor(
        &[
            "enumerate",
            "--n",
            "7",
            "--m",
            "6",
            "--universe",
            "connected",
        ],
        "",
    );
    assert_eq!(stdout(&o).lines().count(), 11);
}

#[test]
fn output_independent_of_workers() {
    for args in [
        &["enumerate", "--n", "7"][..],
        &["verify-bounds", "--universe", "all", "--n", "5..6"][..],
        &["verify-extremal", "--n", "4..6", "--index", "sored"][..],
    ] {
        let one = sombor(&[args, &["--workers", "1"]].concat(), "");
        let four = sombor(&[args, &["--workers", "4"]].concat(), "");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
        assert_eq!(one.status.code(), four.status.code());
    }
}

#[test]
fn output_to_file() {
    let dir = std::env::temp_dir().join(format!("sombor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s4.g6");
    let o = sombor(
        &["construct", "star", "4", "--output", path.to_str().unwrap()],
        "",
    );
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "Cs\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn zero_workers_rejected() {
    let o = sombor(&["enumerate", "--n", "3", "--workers", "0"], "");
    assert_eq!(o.status.code(), Some(2));
}
