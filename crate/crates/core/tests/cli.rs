//! End-to-end tests of the command-line interface: file formats, exit codes,
//! and byte-for-byte report reproducibility.

use std::path::PathBuf;
use std::process::{Command, Output};

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_defring")
}

fn run(args: &[&str]) -> Output {
    Command::new(exe()).args(args).output().expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("defring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn gb_on_a_monomial_pair() {
    let file = write_temp("xy.ideal", "ring 0 x y; order degrevlex\nx\ny\n");
    let out = run(&["gb", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "ring 0 x y; order degrevlex\ny\nx\n");
}

#[test]
fn gb_twisted_cubic_lex_contains_the_plane_curve() {
    let file = write_temp(
        "cubic.ideal",
        "# twisted cubic\nring 0 x y z; order lex\ny - x^2\nz - x^3\n",
    );
    let out = run(&["gb", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "y^3 - z^2"), "{text}");
}

#[test]
fn gb_rejects_malformed_headers_with_exit_2() {
    let file = write_temp("bad.ideal", "ring 4 x y; order degrevlex\nx\n");
    let out = run(&["gb", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let missing = run(&["gb", "/nonexistent/path.ideal"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn mult_reports_dimension_and_multiplicity() {
    let file = write_temp("double-line.ideal", "ring 0 x y; order degrevlex\nx^2\n");
    let out = run(&["mult", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "dim 1, e 2");

    let file = write_temp("fat-point.ideal", "ring 0 x y; order degrevlex\nx^2\ny^2\n");
    let out = run(&["mult", file.to_str().unwrap()]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "dim 0, length 4");
}

#[test]
fn mult_local_routes_through_the_tangent_cone() {
    // the split-case ideal at p = 5, written out explicitly
    let file = write_temp(
        "split5.ideal",
        concat!(
            "ring 5 x11 x12 x21 y11 y12 y21; order negdegrevlex\n",
            "-x11^2 - x12*x21\n",
            "x11^2*y12 - 2*x11*x12*y11 - x12^2*y21\n",
            "x21^2*y12 + 2*x21*x11*y11 - x11^2*y21\n",
            "x11*x21*y12 - 2*x12*x21*y11 + x12*x11*y21\n"
        ),
    );
    let out = run(&["mult", file.to_str().unwrap(), "--local"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "dim 4, e 4");
}

#[test]
fn gb_with_local_order_computes_a_standard_basis() {
    let file = write_temp("local.ideal", "ring 0 x y; order negdegrevlex\ny^2 - x^3 - x^2\n");
    let out = run(&["gb", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("ring 0 x y; order negdegrevlex\n"));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn verify_paper_rejects_two_with_exit_2() {
    let out = run(&["verify-paper", "--prime", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("odd prime"), "{err}");
    let out = run(&["verify-paper", "--prime", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_paper_split_at_two_primes() {
    let out = run(&[
        "verify-paper",
        "--case",
        "split",
        "--prime",
        "3",
        "--prime",
        "13",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[verified] p003/split/multiplicity-tangent-cone"));
    assert!(text.contains("[verified] p013/split/multiplicity-tangent-cone"));
    assert!(text.trim_end().ends_with("verdict: verified"));
}

#[test]
fn reports_are_byte_identical_and_job_count_does_not_matter() {
    let r1 = write_temp("report1.json", "");
    let r2 = write_temp("report2.json", "");
    let r3 = write_temp("report3.json", "");
    let base = [
        "verify-paper",
        "--case",
        "all",
        "--prime",
        "5",
        "--report",
    ];
    let out = run(&[&base[..], &[r1.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[&base[..], &[r2.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[&base[..], &[r3.to_str().unwrap(), "--jobs", "4"]].concat());
    assert_eq!(out.status.code(), Some(0));
    let b1 = std::fs::read(&r1).unwrap();
    let b2 = std::fs::read(&r2).unwrap();
    let b3 = std::fs::read(&r3).unwrap();
    assert_eq!(b1, b2, "repeated runs differ");
    assert_eq!(b1, b3, "parallel run differs");
    let text = String::from_utf8(b1).unwrap();
    assert!(text.contains("\"schema\": \"defring-report/1\""));
    assert!(text.contains("\"claim_id\""));
    assert!(text.contains("\"paper_anchor\""));
    assert!(text.contains("\"witnesses\""));
    assert!(!text.contains("elapsed_ms"), "timings must be opt-in");
}

#[test]
fn timings_flag_adds_elapsed_ms() {
    let r = write_temp("report-timed.json", "");
    let out = run(&[
        "verify-paper",
        "--case",
        "ramified",
        "--prime",
        "5",
        "--report",
        r.to_str().unwrap(),
        "--timings",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&r).unwrap();
    assert!(text.contains("elapsed_ms"));
}

#[test]
fn corrupted_pipeline_exits_1_and_names_the_failure() {
    let out = run(&[
        "verify-paper",
        "--case",
        "split",
        "--prime",
        "5",
        "--corrupt-i3-sign",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[failed] char0/identities/3"), "{text}");
    assert!(text.contains("verdict: failed"));
}

#[test]
fn gb_with_a_block_elimination_order() {
    let file = write_temp(
        "block.ideal",
        "ring 0 x y z; order block:1\ny - x^2\nz - x^3\n",
    );
    let out = run(&["gb", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("ring 0 x y z; order block:1\n"));
    assert!(text.lines().any(|l| l == "y^3 - z^2"), "{text}");
}

#[test]
fn timeout_marks_claims_skipped_instead_of_hanging() {
    let r = write_temp("report-timeout.json", "");
    let out = run(&[
        "verify-paper",
        "--case",
        "ramified",
        "--prime",
        "5",
        "--timeout",
        "0",
        "--report",
        r.to_str().unwrap(),
    ]);
    // skipped claims do not fail the verdict
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&r).unwrap()).unwrap();
    for claim in report["claims"].as_array().unwrap() {
        let status = claim["status"].as_str().unwrap();
        assert!(status == "verified" || status == "skipped", "{status}");
    }
}
