use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mainspec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
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

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

fn main_values(record: &Value) -> Vec<f64> {
    record["groups"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|g| g["main"] == true)
        .map(|g| g["value"].as_f64().unwrap())
        .collect()
}

#[test]
fn analyze_path_from_edge_list() {
    let o = run(
        &["analyze", "--format", "edgelist", "--json"],
        "n 4\n0 1\n1 2\n2 3\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let r = &json_lines(&o)[0];
    assert_eq!(r["order"], 4);
    assert_eq!(r["main_count_exact"], 2);
    assert_eq!(r["main_count_float"], 2);
    assert_eq!(r["harmonic"], false);
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let main = main_values(r);
    assert!((main[0] - golden).abs() < 1e-9 && (main[1] + 1.0 / golden).abs() < 1e-9);
}

#[test]
fn analyze_cycle_is_harmonic() {
    let o = run(&["analyze", "Cr", "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let r = &json_lines(&o)[0];
    assert_eq!(r["edges"], 4);
    assert_eq!(r["main_count_exact"], 1);
    assert_eq!(r["harmonic"], true);
    assert_eq!(r["ell"], 2);
}

#[test]
fn harmonic_tree_main_spectrum() {
    let g = run(&["generate", "harmonictree", "2"], "");
    assert_eq!(g.status.code(), Some(0));
    let o = run(&["analyze", "--json"], &stdout(&g));
    let r = &json_lines(&o)[0];
    assert_eq!(r["ell"], 2);
    let main = main_values(r);
    assert_eq!(main.len(), 2);
    assert!(main
        .iter()
        .all(|x| x.abs() < 1e-9 || (x - 2.0).abs() < 1e-9));
}

#[test]
fn analyze_reads_one_record_per_line() {
    let o = run(&["analyze", "--json"], "A_\nBw\nC~\n");
    let records = json_lines(&o);
    let counts: Vec<_> = records
        .iter()
        .map(|r| r["main_count_exact"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, vec![1, 1, 1]);
    let orders: Vec<_> = records
        .iter()
        .map(|r| r["order"].as_u64().unwrap())
        .collect();
    assert_eq!(orders, vec![2, 3, 4]);
}

#[test]
fn generate_families() {
    for (words, order) in [
        (&["doublestar", "2", "3"][..], 7),
        (&["harmonictree", "3"][..], 22),
        (&["pendant", "cycle", "5", "q", "2"][..], 15),
    ] {
        let mut args = vec!["generate"];
        args.extend_from_slice(words);
        let g = run(&args, "");
        assert_eq!(g.status.code(), Some(0), "{words:?}");
        let o = run(&["analyze", "--json"], &stdout(&g));
        assert_eq!(json_lines(&o)[0]["order"], order, "{words:?}");
    }
}

#[test]
fn verify_rank_theorem_exhaustively() {
    let o = run(&["verify", "T45", "--exhaustive", "6", "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["instances"], 32768);
    assert_eq!(summary["failures"], 0);
    assert_eq!(summary["tallies"]["T45"]["holds"], 32768);
}

#[test]
fn verify_path_counts() {
    let o = run(&["verify", "C43", "--paths", "2..40"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("39 instances"));
    assert!(text.trim_end().ends_with("result: ok"));
}

#[test]
fn verify_connected_bipartite() {
    let o = run(
        &[
            "verify",
            "T37",
            "--exhaustive",
            "6",
            "--connected",
            "--bipartite",
            "--json",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["instances"], 3031);
    assert_eq!(summary["tallies"]["T37"]["fails"], 0);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "T99", "--paths", "2..4"][..],
        &["verify", "all"][..],
        &["verify", "all", "--paths", "5..2"][..],
        &["generate", "wheel", "4"][..],
        &["frobnicate"][..],
    ] {
        let o = run(args, "");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let bad = run(&["analyze"], "D?\n");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_code_ranks_errors_over_failures() {
    use mainspec::cli::{exit_code, EXIT_DISAGREEMENT, EXIT_FAILED, EXIT_OK};
    use mainspec::theorems::sweep::{InstanceError, SweepSummary};
    use mainspec::theorems::{TheoremId, TheoremReport};

    let mut s = SweepSummary::default();
    assert_eq!(exit_code(&s), EXIT_OK);
    s.failures
        .push(TheoremReport::new(TheoremId::T45, "C~", 0.0).holds_if(false));
    assert_eq!(exit_code(&s), EXIT_FAILED);
    s.errors.push(InstanceError {
        instance: "C~".into(),
        error: "float count 2, exact rank 1".into(),
        disagreement: true,
    });
    assert_eq!(exit_code(&s), EXIT_DISAGREEMENT);
}

#[test]
fn json_output_is_stable() {
    let a = run(
        &["verify", "all", "--doublestars", "3", "--json", "--verbose"],
        "",
    );
    let b = run(
        &["verify", "all", "--doublestars", "3", "--json", "--verbose"],
        "",
    );
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines = json_lines(&a);
    assert!(lines.len() > 9);
    for report in &lines[..lines.len() - 1] {
        assert!(matches!(
            report["verdict"].as_str(),
            Some("holds" | "not-applicable")
        ));
    }
}
