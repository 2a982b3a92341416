//! End-to-end tests against the built `ssgs` binary: output formats, exit
//! codes, and byte-identical reruns.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

fn ssgs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssgs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

static SCRATCH_ID: AtomicU32 = AtomicU32::new(0);

/// A unique scratch path under the target directory.
fn scratch(name: &str) -> PathBuf {
    let id = SCRATCH_ID.fetch_add(1, Ordering::Relaxed);
    let mut dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.push(format!("{}-{id}-{name}", std::process::id()));
    if let Some(parent) = dir.parent() {
        fs::create_dir_all(parent).unwrap();
    }
    dir
}

#[test]
fn decompose_prints_the_square_sum() {
    let out = ssgs(&["decompose", "91"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "91 = 9^2 + 3^2 + 1^2\n");
}

#[test]
fn decompose_zero() {
    let out = ssgs(&["decompose", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "0 = 0\n");
}

#[test]
fn decompose_decimal_scales_the_roots() {
    let out = ssgs(&["decompose", "--decimal", "12.3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "12.3 = 3.5^2 + 0.2^2 + 0.1^2\n");
}

#[test]
fn decompose_rejects_garbage_with_exit_2() {
    assert_eq!(exit_code(&ssgs(&["decompose", "ninety"])), 2);
    assert_eq!(exit_code(&ssgs(&["decompose", "-5"])), 2);
    assert_eq!(exit_code(&ssgs(&["decompose", "--decimal", "-1.5"])), 2);
    // unknown flags are rejected by the parser
    assert_eq!(exit_code(&ssgs(&["decompose", "--bogus", "91"])), 2);
}

#[test]
fn decompose_decimal_overflow_exits_3() {
    let out = ssgs(&["decompose", "--decimal", "900000000000000000.5"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn mean_prints_five_labeled_lines() {
    let out = ssgs(&[
        "mean", "101", "118", "99", "131", "140", "141", "109", "121", "122", "110",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "am 119.200000");
    assert_eq!(lines[1], "new_mean 116.040000");
    assert_eq!(lines[2], "lambda 3.160000");
    assert!(lines[3].starts_with("sd "));
    assert!(lines[4].starts_with("new_sd "));
}

#[test]
fn mean_of_a_single_value() {
    let out = ssgs(&["mean", "91"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("am 91.000000\n"));
    assert!(text.contains("new_mean 91.000000\n"));
}

#[test]
fn mean_set_2_rounds_to_117_48() {
    let out = ssgs(&[
        "mean", "112", "107", "103", "135", "131", "130", "123", "109", "130", "112",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("new_mean 117.480000\n"));
}

#[test]
fn mean_reads_values_from_a_file() {
    let path = scratch("values.txt");
    fs::write(&path, "101\n118\n99\n131\n140\n141\n109\n121\n122\n110\n").unwrap();
    let out = ssgs(&["mean", "--input", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("new_mean 116.040000\n"));
}

#[test]
fn mean_exit_codes() {
    // empty set
    assert_eq!(exit_code(&ssgs(&["mean"])), 4);
    // parse failure
    assert_eq!(exit_code(&ssgs(&["mean", "12", "x"])), 2);
    // representation overflow: the smallest nine-term value
    assert_eq!(exit_code(&ssgs(&["mean", "42600227803223"])), 3);
    // unreadable input file
    assert_eq!(
        exit_code(&ssgs(&["mean", "--input", "/nonexistent/values.txt"])),
        2
    );
    // inline values and --input conflict
    assert_eq!(
        exit_code(&ssgs(&["mean", "5", "--input", "/tmp/values.txt"])),
        2
    );
}

#[test]
fn nma_writes_the_report_csv() {
    let input = scratch("series.csv");
    fs::write(&input, "128\n128\n145\n145\n171\n").unwrap();
    let output = scratch("report.csv");

    let out = ssgs(&[
        "nma",
        "--input",
        input.to_str().unwrap(),
        "--window",
        "5",
        "--output",
        output.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "windows 1\n");

    let report = fs::read_to_string(&output).unwrap();
    let mut lines = report.lines();
    assert_eq!(lines.next(), Some("position,am,nma,range,sd,new_sd"));
    // an already-positive integer series is windowed as given
    assert_eq!(
        lines.next(),
        Some("0,143.400000,141.880000,43,15.755634,15.828784")
    );
    assert_eq!(lines.next(), None);
}

#[test]
fn nma_normalizes_non_integer_series() {
    let input = scratch("series.csv");
    fs::write(&input, "0.5\n1.5\n2.5\n").unwrap();
    let output = scratch("report.csv");
    let out = ssgs(&[
        "nma",
        "--input",
        input.to_str().unwrap(),
        "--window",
        "3",
        "--output",
        output.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    // scaled to [1, 11, 21]: total 33, am 11
    let report = fs::read_to_string(&output).unwrap();
    let row = report.lines().nth(1).unwrap();
    assert!(row.starts_with("0,11.000000,"), "row was {row}");
}

#[test]
fn nma_output_is_byte_identical_across_runs() {
    let input = scratch("series.csv");
    let mut text = String::new();
    for i in 0..40 {
        text.push_str(&format!("{}\n", 100 + (i * 37) % 250));
    }
    fs::write(&input, &text).unwrap();

    let mut outputs = Vec::new();
    for run in 0..2 {
        let output = scratch(&format!("report-{run}.csv"));
        let out = ssgs(&[
            "nma",
            "--input",
            input.to_str().unwrap(),
            "--window",
            "5",
            "--output",
            output.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
        assert_eq!(stdout(&out), "windows 36\n");
        outputs.push(fs::read(&output).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn nma_exit_codes() {
    let input = scratch("series.csv");
    fs::write(&input, "128\n145\n").unwrap();
    let output = scratch("report.csv");
    let output = output.to_str().unwrap();
    let input = input.to_str().unwrap();

    // window out of range
    let args = ["nma", "--input", input, "--window", "0", "--output", output];
    assert_eq!(exit_code(&ssgs(&args)), 4);
    let args = ["nma", "--input", input, "--window", "9", "--output", output];
    assert_eq!(exit_code(&ssgs(&args)), 4);

    // malformed input
    let bad = scratch("bad.csv");
    fs::write(&bad, "1,2,3\n").unwrap();
    let args = [
        "nma",
        "--input",
        bad.to_str().unwrap(),
        "--window",
        "1",
        "--output",
        output,
    ];
    assert_eq!(exit_code(&ssgs(&args)), 2);

    // missing input file
    let args = [
        "nma",
        "--input",
        "/nonexistent/series.csv",
        "--window",
        "1",
        "--output",
        output,
    ];
    assert_eq!(exit_code(&ssgs(&args)), 2);
}

#[test]
fn nma_accepts_indexed_input_with_header() {
    let input = scratch("series.csv");
    fs::write(&input, "t,v\n0,1.5\n1,0.5\n2,2.5\n").unwrap();
    let output = scratch("report.csv");
    let out = ssgs(&[
        "nma",
        "--input",
        input.to_str().unwrap(),
        "--window",
        "2",
        "--output",
        output.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "windows 2\n");
}

#[test]
fn verify_passes_and_is_reproducible() {
    let out = ssgs(&["verify"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("seed 0 cases 1000\n"));
    for suite in [
        "reconstruction",
        "mean-inequality",
        "two-route",
        "lambda-identity",
        "algebra-table",
        "associativity",
    ] {
        assert!(text.contains(&format!("{suite}: pass")), "{suite} line");
    }

    let again = ssgs(&["verify"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_with_options() {
    let out = ssgs(&["verify", "--seed", "7", "--cases", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("seed 7 cases 1\n"));
}

#[test]
fn mean_stdout_is_byte_identical_across_runs() {
    let a = ssgs(&["mean", "128", "128", "145", "145", "171"]);
    let b = ssgs(&["mean", "128", "128", "145", "145", "171"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
