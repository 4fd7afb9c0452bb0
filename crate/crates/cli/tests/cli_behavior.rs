//! End-to-end behavior of the `hv` binary: outputs, exit codes, and
//! stdout purity.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn hv(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hv"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    // the process may exit without reading stdin; a broken pipe is fine
    let _ = child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(stdin.unwrap_or("").as_bytes());
    child.wait_with_output().expect("binary exits")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_str(out)).expect("stdout parses as JSON")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn data_file(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .display()
        .to_string()
}

fn digram_table() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../crates/password/data/english_digrams.tsv")
        .display()
        .to_string()
}

// -- entropy ----------------------------------------------------------------

#[test]
fn entropy_reports_the_varied_table() {
    let out = hv(
        &[
            "entropy",
            "--input",
            &data_file("m1.csv"),
            "--base",
            "10",
            "--metrics",
            "hv,joint",
        ],
        None,
    );
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_str(&out));
    let json = stdout_json(&out);
    assert_eq!(json["hv_total"], 2.20683);
    assert_eq!(json["joint"], 0.954243);
    assert_eq!(json["base"], 10.0);
}

#[test]
fn entropy_reports_the_homogeneous_table_in_csv() {
    let out = hv(
        &[
            "entropy",
            "--input",
            &data_file("m2.csv"),
            "--base",
            "10",
            "--format",
            "csv",
        ],
        None,
    );
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_str(&out).contains("hv_total,0.954243\n"));
}

#[test]
fn entropy_single_variable_view() {
    let out = hv(
        &[
            "entropy",
            "--input",
            &data_file("m1.csv"),
            "--view",
            "v1",
            "--base",
            "10",
        ],
        None,
    );
    assert_eq!(exit_code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["per_variable"]["v1"], 0.954243);
    assert_eq!(json["per_variable"].as_object().unwrap().len(), 1);
    assert_eq!(json["hv_total"], 0.954243);
}

#[test]
fn entropy_reads_stdin_with_custom_delimiter() {
    let out = hv(
        &["entropy", "--delimiter", ";", "--metrics", "hv"],
        Some("a;b\nx;y\nx;z\n"),
    );
    assert_eq!(exit_code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["per_variable"]["a"], 0.0);
    assert_eq!(json["per_variable"]["b"], 1.0);
}

#[test]
fn entropy_conditional_metric() {
    let out = hv(
        &[
            "entropy",
            "--input",
            &data_file("m1.csv"),
            "--base",
            "10",
            "--metrics",
            "hv,conditional=v2:v1",
        ],
        None,
    );
    assert_eq!(exit_code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["conditional"][0]["target"], "v2");
    assert_eq!(json["conditional"][0]["given"], "v1");
    assert_eq!(json["conditional"][0]["value"], 0.0);
}

#[test]
fn unknown_view_variable_is_a_usage_error_listing_names() {
    let out = hv(
        &[
            "entropy",
            "--input",
            &data_file("m1.csv"),
            "--view",
            "bogus",
        ],
        None,
    );
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_str(&out).is_empty(), "stdout must stay clean");
    let err = stderr_str(&out);
    assert!(err.contains("unknown variable 'bogus'"));
    assert!(err.contains("v1, v2, v3"));
}

#[test]
fn ragged_table_is_a_data_error_with_line_number() {
    let out = hv(&["entropy"], Some("v1,v2\na\n"));
    assert_eq!(exit_code(&out), 2);
    assert!(stdout_str(&out).is_empty());
    assert!(stderr_str(&out).contains("row 2 has 1 cell, expected 2"));
}

#[test]
fn conditional_without_pair_is_a_usage_error() {
    let out = hv(
        &[
            "entropy",
            "--input",
            &data_file("m1.csv"),
            "--metrics",
            "conditional",
        ],
        None,
    );
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).contains("conditional"));
}

#[test]
fn unknown_metric_is_a_usage_error() {
    let out = hv(
        &[
            "entropy",
            "--input",
            &data_file("m1.csv"),
            "--metrics",
            "entropy",
        ],
        None,
    );
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).contains("unknown metric"));
}

#[test]
fn base_one_is_a_usage_error() {
    let out = hv(
        &["entropy", "--input", &data_file("m1.csv"), "--base", "1"],
        None,
    );
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).contains("invalid base"));
}

#[test]
fn empty_input_is_a_data_error() {
    let out = hv(&["entropy"], Some(""));
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("no header"));
}

// -- password ---------------------------------------------------------------

#[test]
fn password_csv_output_lists_all_fields() {
    let out = hv(&["password", "--format", "csv"], Some("aA1!"));
    assert_eq!(exit_code(&out), 0);
    let text = stdout_str(&out);
    assert!(text.starts_with("metric,value\n"));
    assert!(text.contains("length,4\n"));
    assert!(text.contains("mode,independent\n"));
    assert!(text.contains("h_char,2.00000\n"));
    assert!(text.contains("h_class,2.00000\n"));
    assert!(text.contains("hv,4.00000\n"));
}

#[test]
fn password_independent_rating() {
    let out = hv(&["password"], Some("aAbB"));
    assert_eq!(exit_code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["hv"], 3.0);
    assert_eq!(json["h_char"], 2.0);
    assert_eq!(json["h_class"], 1.0);
    assert_eq!(json["mode"], "independent");
    assert_eq!(json["length"], 4);
}

#[test]
fn password_constant_rating_is_zero() {
    let out = hv(&["password"], Some("aaaa\n"));
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_json(&out)["hv"], 0.0);
}

#[test]
fn password_empty_stdin_is_a_data_error() {
    let out = hv(&["password"], Some(""));
    assert_eq!(exit_code(&out), 2);
    assert!(stdout_str(&out).is_empty());
    assert!(stderr_str(&out).contains("empty password"));
}

#[test]
fn password_digram_mode_needs_a_table() {
    let out = hv(&["password", "--mode", "digram"], Some("secret"));
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).contains("--digram-table"));
}

#[test]
fn password_single_character_cannot_be_digram_rated() {
    let out = hv(
        &[
            "password",
            "--mode",
            "digram",
            "--digram-table",
            &digram_table(),
        ],
        Some("a"),
    );
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("need at least one digram"));
}

#[test]
fn english_text_rates_below_rare_pairs_under_the_digram_model() {
    let common = hv(
        &[
            "password",
            "--mode",
            "digram",
            "--digram-table",
            &digram_table(),
        ],
        Some("thethethe"),
    );
    let rare = hv(
        &[
            "password",
            "--mode",
            "digram",
            "--digram-table",
            &digram_table(),
        ],
        Some("zqjxqzjxq"),
    );
    assert_eq!(exit_code(&common), 0);
    assert_eq!(exit_code(&rare), 0);
    let h_common = stdout_json(&common)["h_conditional"].as_f64().unwrap();
    let h_rare = stdout_json(&rare)["h_conditional"].as_f64().unwrap();
    assert!(
        h_common < h_rare,
        "common English pairs should surprise less: {h_common} vs {h_rare}"
    );
}

// -- ga ---------------------------------------------------------------------

#[test]
fn ga_summary_shows_entropy_reduction() {
    let out = hv(
        &[
            "ga",
            "--fitness",
            "onemax",
            "--bits",
            "32",
            "--pop",
            "50",
            "--seed",
            "7",
        ],
        None,
    );
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_str(&out));
    let json = stdout_json(&out);
    let initial = json["initial_hv"].as_f64().unwrap();
    let final_hv = json["final_hv"].as_f64().unwrap();
    assert!(final_hv < initial);
    assert_eq!(json["best_fitness"], 32.0);
    assert_eq!(json["seed"], 7);
}

#[test]
fn ga_trap5_requires_multiple_of_five_bits() {
    let out = hv(&["ga", "--fitness", "trap5", "--bits", "32"], None);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_str(&out).is_empty());
    assert!(stderr_str(&out).contains("bits must be a multiple of 5"));
}

#[test]
fn ga_zero_generations_traces_only_generation_zero() {
    let dir = std::env::temp_dir().join("hv_cli_test_gen0");
    std::fs::create_dir_all(&dir).unwrap();
    let trace = dir.join("trace.csv");
    let out = hv(
        &[
            "ga",
            "--bits",
            "16",
            "--pop",
            "10",
            "--generations",
            "0",
            "--seed",
            "3",
            "--format",
            "csv",
            "--trace-out",
            trace.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_str(&out));
    let body = std::fs::read_to_string(&trace).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 2, "header plus the generation-0 row");
    assert!(lines[1].starts_with("0,"));
    assert!(stdout_str(&out).contains("max_generations"));
}

#[test]
fn ga_trace_files_are_deterministic() {
    let dir = std::env::temp_dir().join("hv_cli_test_determinism");
    std::fs::create_dir_all(&dir).unwrap();
    let args_for = |name: &str| {
        vec![
            "ga".to_string(),
            "--bits".into(),
            "32".into(),
            "--pop".into(),
            "50".into(),
            "--mutation".into(),
            "0.03125".into(),
            "--seed".into(),
            "7".into(),
            "--format".into(),
            "csv".into(),
            "--trace-out".into(),
            dir.join(name).display().to_string(),
        ]
    };
    let a_args = args_for("a.csv");
    let b_args = args_for("b.csv");
    let a = hv(&a_args.iter().map(String::as_str).collect::<Vec<_>>(), None);
    let b = hv(&b_args.iter().map(String::as_str).collect::<Vec<_>>(), None);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(exit_code(&b), 0);
    assert_eq!(stdout_str(&a), stdout_str(&b));
    let file_a = std::fs::read(dir.join("a.csv")).unwrap();
    let file_b = std::fs::read(dir.join("b.csv")).unwrap();
    assert_eq!(file_a, file_b);
}

#[test]
fn ga_seed_range_writes_batch_statistics_and_traces() {
    let dir = std::env::temp_dir().join("hv_cli_test_batch");
    std::fs::create_dir_all(&dir).unwrap();
    let trace = dir.join("run.csv");
    let out = hv(
        &[
            "ga",
            "--bits",
            "16",
            "--pop",
            "20",
            "--generations",
            "40",
            "--stall",
            "10",
            "--seeds",
            "3..5",
            "--format",
            "csv",
            "--trace-out",
            trace.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_str(&out));
    let output = stdout_str(&out);
    assert!(output.contains("seeds,3..5"));
    assert!(output.contains("trace_count,3"));
    assert!(output.contains("reduced_fraction,"));
    for seed in 3..=5 {
        assert!(dir.join(format!("run_seed{seed}.csv")).exists());
    }
}

#[test]
fn ga_without_bits_or_schema_is_a_usage_error() {
    let out = hv(&["ga"], None);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).contains("--bits"));
}

#[test]
fn ga_schema_bits_mismatch_is_a_usage_error() {
    let out = hv(&["ga", "--bits", "20", "--schema", "1x16"], None);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).contains("16 bits"));
}

#[test]
fn unknown_flags_are_usage_errors() {
    let out = hv(&["entropy", "--frobnicate"], None);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_str(&out).is_empty());
}

#[test]
fn entropy_output_is_byte_identical_across_runs() {
    let args = [
        "entropy",
        "--input",
        &data_file("m1.csv"),
        "--base",
        "10",
        "--metrics",
        "hv,joint,per-variable,conditional=v3:v1",
    ];
    let a = hv(&args, None);
    let b = hv(&args, None);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
