//! End-to-end tests of the `linkss` binary: exact output bytes for the
//! small frozen examples, exit codes, warning routing, and agreement of the
//! numeric content across the three output formats.

use std::process::{Command, Output};

fn linkss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkss"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn euler_csv_two_strings_is_byte_exact() {
    let out = linkss(&[
        "euler", "--ell", "2", "--dim", "4", "--max-degree", "9", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "degree,coefficient\n0,1\n3,3\n6,7\n9,15\n");
    assert!(stderr_str(&out).is_empty());
}

#[test]
fn euler_json_reports_lattice_degrees_in_order() {
    let out = linkss(&[
        "euler", "--ell", "1", "--dim", "4", "--max-degree", "6", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(doc["degrees"], serde_json::json!([0, 3, 6]));
    assert_eq!(doc["coefficients"], serde_json::json!([1, 1, 1]));
    assert_eq!(doc["params"]["ell"], serde_json::json!(1));
    assert_eq!(doc["meta"]["form"], serde_json::json!("closed"));

    // Key order of the envelope is part of the interface.
    let positions: Vec<usize> = ["\"params\"", "\"degrees\"", "\"coefficients\"", "\"meta\""]
        .iter()
        .map(|key| text.find(key).expect("key present"))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn rejects_ambient_dimension_below_three() {
    let out = linkss(&["euler", "--ell", "2", "--dim", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("at least 3"));
}

#[test]
fn rejects_unknown_flag() {
    let out = linkss(&["euler", "--ell", "2", "--dim", "4", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rejects_zero_strings() {
    let out = linkss(&["euler", "--ell", "0", "--dim", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("at least 1"));
}

#[test]
fn verify_stirling_passes_the_default_grid() {
    let out = linkss(&["verify", "--target", "stirling"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("OK 32/32 cases"));
}

#[test]
fn verify_transform_counts_factorial_and_random_families() {
    let out = linkss(&["verify", "--target", "transform"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("OK 109/109 cases"));
}

#[test]
fn verify_euler_compares_both_routes() {
    let out = linkss(&["verify", "--target", "euler", "--max-degree", "24"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("OK 8/8 cases"));
}

#[test]
fn relative_single_string_is_flagged_trivial() {
    let out = linkss(&["relative", "--ell", "1", "--dim", "4"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("ALL,0"));
    assert!(text.contains("pair is trivial for ell=1"));
}

#[test]
fn relative_single_string_csv_keeps_note_off_stdout() {
    let out = linkss(&["relative", "--ell", "1", "--dim", "4", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "degree,coefficient\nALL,0\n");
    assert!(stderr_str(&out).contains("pair is trivial for ell=1"));
}

#[test]
fn relative_two_strings_matches_the_frozen_coefficients() {
    let out = linkss(&[
        "relative", "--ell", "2", "--dim", "4", "--max-degree", "12", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout_str(&out),
        "degree,coefficient\n0,0\n3,1\n6,4\n9,11\n12,26\n"
    );
}

#[test]
fn table_csv_lists_nonzero_entries() {
    let out = linkss(&[
        "table", "--ell", "2", "--dim", "4", "--p-max", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.starts_with("p,q,dim\n"));
    assert!(text.contains("2,3,4\n"));
    assert!(text.contains("2,6,11\n"));
}

#[test]
fn table_text_reports_slopes_and_bounds() {
    let out = linkss(&[
        "table", "--ell", "2", "--dim", "4", "--p-max", "2", "--max-degree", "9",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("lower slope = 3/2"));
    assert!(text.contains("upper slope = "));
    // tot bound at degree 9 with the empirical slope 3/2: window [3, 9], value 15
    assert!(text.contains("9       [3, 9]  15"));
}

#[test]
fn growth_of_three_string_series_approaches_three() {
    let out = linkss(&[
        "growth", "--ell", "3", "--dim", "4", "--max-degree", "120", "--tail", "5",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let ratio: f64 = text
        .lines()
        .find_map(|line| line.strip_prefix("u_ratio = "))
        .expect("u_ratio line")
        .parse()
        .expect("a float");
    assert!((ratio - 3.0).abs() < 1e-2, "u_ratio = {ratio}");
}

#[test]
fn growth_errors_when_the_tail_window_is_too_wide() {
    let out = linkss(&[
        "growth", "--ell", "2", "--dim", "4", "--max-degree", "9", "--tail", "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).starts_with("error: "));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "table", "--ell", "3", "--dim", "5", "--p-max", "3", "--format", "json",
    ];
    let first = linkss(&args);
    let second = linkss(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let base = ["euler", "--ell", "3", "--dim", "5", "--max-degree", "40"];
    let csv_out = linkss(&[&base[..], &["--format", "csv"]].concat());
    let json_out = linkss(&[&base[..], &["--format", "json"]].concat());
    assert!(csv_out.status.success() && json_out.status.success());

    let csv_rows: Vec<(u64, String)> = stdout_str(&csv_out)
        .lines()
        .skip(1)
        .map(|line| {
            let (d, c) = line.split_once(',').expect("two fields");
            (d.parse().expect("degree"), c.to_string())
        })
        .collect();
    let doc: serde_json::Value =
        serde_json::from_str(&stdout_str(&json_out)).expect("valid JSON");
    let degrees = doc["degrees"].as_array().expect("array");
    let coefficients = doc["coefficients"].as_array().expect("array");
    assert_eq!(csv_rows.len(), degrees.len());
    assert_eq!(csv_rows.len(), coefficients.len());
    for (i, (degree, coefficient)) in csv_rows.iter().enumerate() {
        assert_eq!(degrees[i].as_u64(), Some(*degree));
        assert_eq!(coefficients[i].to_string(), *coefficient);
    }
}

#[test]
fn low_dimension_warns_on_stderr_only() {
    let out = linkss(&[
        "euler", "--ell", "1", "--dim", "3", "--max-degree", "4", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert!(stderr_str(&out).contains("warning:"));
    assert!(!stdout_str(&out).contains("warning:"));
    assert_eq!(stdout_str(&out), "degree,coefficient\n0,1\n2,1\n4,1\n");
}

#[test]
fn output_file_matches_stdout_bytes() {
    let path = std::env::temp_dir().join(format!(
        "linkss-test-{}-{}.csv",
        std::process::id(),
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .expect("clock")
            .as_nanos()
    ));
    let to_stdout = linkss(&[
        "euler", "--ell", "2", "--dim", "4", "--max-degree", "9", "--format", "csv",
    ]);
    let to_file = linkss(&[
        "euler", "--ell", "2", "--dim", "4", "--max-degree", "9", "--format", "csv",
        "--output",
        path.to_str().expect("temp path is UTF-8"),
    ]);
    assert!(to_stdout.status.success() && to_file.status.success());
    assert!(to_file.stdout.is_empty());
    let written = std::fs::read(&path).expect("output file");
    std::fs::remove_file(&path).ok();
    assert_eq!(written, to_stdout.stdout);
}

#[test]
fn stirling_triangle_row_five() {
    let out = linkss(&["stirling", "--kind", "first", "--n-max", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.starts_with("n,k,value\n"));
    assert!(text.contains("5,3,35\n"));
    assert!(text.contains("5,1,24\n"));
}
