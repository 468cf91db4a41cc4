//! End-to-end checks of the `chebdiff` binary: output shapes and exit
//! codes.

use std::process::{Command, Output};

fn chebdiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebdiff"))
        .args(args)
        .output()
        .expect("spawn chebdiff")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn derive_classical_value() {
    let out = chebdiff(&[
        "derive", "--fn", "f1", "--x", "0.5", "--h", "1e-3", "--nodes", "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kind: classical"), "{text}");
    let value: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("value: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((value - 0.5).abs() < 1e-10);
}

#[test]
fn derive_subgradient_at_kink() {
    let out = chebdiff(&["derive", "--fn", "abs", "--x", "0", "--mode", "subgradient"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kind: subgradient"), "{text}");
    let left: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("left: "))
        .unwrap()
        .parse()
        .unwrap();
    let right: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("right: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((left + 1.0).abs() < 1e-10 && (right - 1.0).abs() < 1e-10);
}

#[test]
fn derive_weak_with_explicit_kinks() {
    let out = chebdiff(&[
        "derive", "--fn", "abs", "--x", "0", "--mode", "weak", "--kinks", "0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kind: weak"), "{text}");
}

#[test]
fn unknown_function_is_a_usage_error() {
    let out = chebdiff(&["derive", "--fn", "nosuch", "--x", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("available"), "{err}");
}

#[test]
fn bad_flag_is_a_usage_error() {
    // clap's own parse failures also exit with 2.
    let out = chebdiff(&["derive", "--fn", "f1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_of_domain_query_is_a_usage_error() {
    let out = chebdiff(&["derive", "--fn", "f1", "--x", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn numerical_failure_exits_with_three() {
    // Kinks accumulating around the query point exhaust the shrink loop.
    let kinks: Vec<String> = (1..=60)
        .map(|k| format!("{:e}", 0.3 * 0.5f64.powi(k)))
        .collect();
    let list = kinks.join(",");
    let out = chebdiff(&[
        "derive", "--fn", "abs", "--x", "0", "--h", "0.5", "--kinks", &list,
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("no admissible window"), "{err}");
}

#[test]
fn bench_table1_csv_shape() {
    let out = chebdiff(&["bench", "table1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,h,f_h,C3,C5"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn bench_table1_markdown() {
    let out = chebdiff(&["bench", "table1", "--out", "markdown"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("| x | h | f_h | C3 | C5 |"), "{text}");
}

#[test]
fn bench_table3_rows() {
    let out = chebdiff(&["bench", "table3", "--seed", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("function,method,iterations,termination,final_x0,final_x1\n"));
    assert_eq!(text.lines().count(), 10); // header + 3 variants x 3 methods
    assert!(text.contains("delta,fd,19999,iteration-cap"), "{text}");
}

#[test]
fn bench_output_file() {
    let dir = std::env::temp_dir().join(format!("chebdiff-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t1.csv");
    let out = chebdiff(&["bench", "table1", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("x,h,f_h,C3,C5\n"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn optimize_clean_converges() {
    let out = chebdiff(&["optimize", "--fn", "rosenbrock", "--method", "exact"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("termination: converged"), "{text}");
    assert!(text.contains("final: (0.999, 0.998)"), "{text}");
}

#[test]
fn optimize_noisy_fd_hits_cap() {
    let out = chebdiff(&[
        "optimize",
        "--fn",
        "rosenbrock-jump",
        "--method",
        "fd",
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("termination: iteration-cap"), "{text}");
    assert!(text.contains("iterations: 19999"), "{text}");
}

#[test]
fn optimize_rejects_one_dimensional_functions() {
    let out = chebdiff(&["optimize", "--fn", "f1", "--method", "exact"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn optimize_rejects_malformed_start() {
    let out = chebdiff(&[
        "optimize",
        "--fn",
        "rosenbrock",
        "--method",
        "exact",
        "--x0",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
