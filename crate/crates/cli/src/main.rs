//! `hv` — measure view-dependent entropy of categorical tables, rate
//! password complexity, and trace the diversity of genetic-algorithm
//! populations.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error. Machine-readable
//! output goes to stdout only; diagnostics go to stderr.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hv_core::{
    conditional_entropy, hv_entropy, joint_entropy, parse_table, round_significant, to_object_set,
    write_report, ConditionalEntry, EntropyError, ObjectSet, ReportFormat, VariableView,
};
use hv_galab::{
    run, theorem_report, DiversityTrace, Fitness, GaConfig, OneMax, SegmentSchema, Selection, Trap5,
};
use hv_password::{
    load_digram_table, rate_independent, rate_with_language_model, PasswordAnalysis, PasswordError,
};

#[derive(Parser)]
#[command(
    name = "hv",
    version,
    about = "View-dependent entropy over categorical data, with password rating and GA diversity tracing",
    after_help = "Cells and characters are compared verbatim; nothing is trimmed or \
                  numerically interpreted. All entropy values default to bits (base 2)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Measure entropies of a delimited table (header row = variable names)
    Entropy(EntropyArgs),
    /// Rate the password read from standard input
    Password(PasswordArgs),
    /// Run a seeded genetic algorithm and trace population diversity
    Ga(GaArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

impl From<OutputFormat> for ReportFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => ReportFormat::Json,
            OutputFormat::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Args)]
struct EntropyArgs {
    /// Input table path; omit or use '-' to read standard input
    #[arg(long)]
    input: Option<PathBuf>,

    /// Cell delimiter: a single ASCII character, or "\t" for tab
    #[arg(long, default_value = ",")]
    delimiter: String,

    /// Logarithm base for all entropy values
    #[arg(long, default_value_t = 2.0)]
    base: f64,

    /// Variables to examine: comma-separated names, or "all"
    #[arg(long, default_value = "all")]
    view: String,

    /// Metrics to include: hv, per-variable, joint, conditional=TARGET:GIVEN.
    /// hv and per-variable are always reported; joint and conditional are
    /// computed on request.
    #[arg(long, default_value = "hv,per-variable")]
    metrics: String,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct PasswordArgs {
    /// Rating mode: character+class entropies, or digram surprisal
    #[arg(long, value_enum, default_value_t = PasswordMode::Independent)]
    mode: PasswordMode,

    /// Digram table path (tab-separated `a TAB b TAB count` lines); required
    /// for --mode digram
    #[arg(long)]
    digram_table: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PasswordMode {
    Independent,
    Digram,
}

#[derive(Args)]
struct GaArgs {
    /// Fitness landscape
    #[arg(long, value_enum, default_value_t = FitnessKind::Onemax)]
    fitness: FitnessKind,

    /// Total chromosome bits; the schema defaults to one-bit segments
    #[arg(long)]
    bits: Option<usize>,

    /// Segment widths: comma-separated list (e.g. "5,5,5") or "WxN"
    /// repeat form (e.g. "1x32")
    #[arg(long)]
    schema: Option<String>,

    /// Population size
    #[arg(long, default_value_t = 50)]
    pop: usize,

    /// Maximum generations after generation 0
    #[arg(long, default_value_t = 300)]
    generations: usize,

    /// Converged once best fitness is unchanged this many generations
    #[arg(long, default_value_t = 30)]
    stall: usize,

    /// Per-bit mutation probability (default: 1/bits)
    #[arg(long)]
    mutation: Option<f64>,

    /// One-point crossover probability
    #[arg(long, default_value_t = 0.9)]
    crossover: f64,

    /// "roulette", "tournament" (best of 2), or "tournament:K"
    #[arg(long, default_value = "roulette")]
    selection: String,

    /// Members copied unchanged into each next generation
    #[arg(long, default_value_t = 1)]
    elitism: usize,

    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Inclusive seed range "A..B": run every seed and print batch
    /// statistics instead of a single-run summary
    #[arg(long)]
    seeds: Option<String>,

    /// Write the trace here; with --seeds, "_seedN" is inserted before
    /// the extension for each run
    #[arg(long)]
    trace_out: Option<PathBuf>,

    /// Applies to both the trace file and the stdout summary
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FitnessKind {
    Onemax,
    Trap5,
}

/// Errors mapped to the exit-code taxonomy.
#[derive(Debug)]
enum CliError {
    /// Exit 1: the flags themselves are wrong.
    Usage(String),
    /// Exit 2: the data behind the flags is wrong or unreadable.
    Data(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        Self::Usage(msg.into())
    }

    fn data(msg: impl Into<String>) -> Self {
        Self::Data(msg.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if e.kind() == clap::error::ErrorKind::DisplayHelp
                || e.kind() == clap::error::ErrorKind::DisplayVersion =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };

    let result = match cli.command {
        Command::Entropy(args) => cmd_entropy(&args),
        Command::Password(args) => cmd_password(&args),
        Command::Ga(args) => cmd_ga(&args),
    };

    match result {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<(String, String), CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::data(format!("{}: {e}", p.display())))?;
            Ok((text, p.display().to_string()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::data(format!("stdin: {e}")))?;
            Ok((text, "stdin".to_string()))
        }
    }
}

fn parse_delimiter(spec: &str) -> Result<char, CliError> {
    if spec == "\\t" {
        return Ok('\t');
    }
    let mut chars = spec.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii() && c != '"' && c != '\n' && c != '\r' => Ok(c),
        _ => Err(CliError::usage(format!(
            "delimiter must be a single ASCII character (or \"\\t\"), got {spec:?}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// entropy

struct MetricSelection {
    joint: bool,
    conditional: Vec<(String, String)>,
}

fn parse_metrics(spec: &str) -> Result<MetricSelection, CliError> {
    let mut selection = MetricSelection {
        joint: false,
        conditional: Vec::new(),
    };
    let mut any = false;
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        any = true;
        match token {
            "hv" | "per-variable" => {}
            "joint" => selection.joint = true,
            "conditional" => {
                return Err(CliError::usage(
                    "metric 'conditional' needs a target and given, e.g. conditional=v2:v1",
                ))
            }
            t => {
                if let Some(pair) = t.strip_prefix("conditional=") {
                    let parts: Vec<&str> = pair.split(':').collect();
                    match parts.as_slice() {
                        [target, given] if !target.is_empty() && !given.is_empty() => {
                            selection
                                .conditional
                                .push((target.to_string(), given.to_string()));
                        }
                        _ => {
                            return Err(CliError::usage(format!(
                                "conditional metric must be conditional=TARGET:GIVEN, got {t:?}"
                            )))
                        }
                    }
                } else {
                    return Err(CliError::usage(format!(
                        "unknown metric {token:?} (valid: hv, per-variable, joint, conditional=TARGET:GIVEN)"
                    )));
                }
            }
        }
    }
    if !any {
        return Err(CliError::usage("no metrics requested"));
    }
    Ok(selection)
}

fn resolve_variable(set: &ObjectSet, name: &str) -> Result<usize, CliError> {
    set.variable_index(name).ok_or_else(|| {
        CliError::usage(format!(
            "unknown variable '{name}' (valid: {})",
            set.variable_names().join(", ")
        ))
    })
}

fn resolve_view(set: &ObjectSet, spec: &str) -> Result<VariableView, CliError> {
    if spec.trim() == "all" {
        return Ok(VariableView::all(set));
    }
    let mut indices = Vec::new();
    for name in spec.split(',') {
        let name = name.trim();
        if name.is_empty() {
            return Err(CliError::usage("empty variable name in --view"));
        }
        indices.push(resolve_variable(set, name)?);
    }
    VariableView::new(indices).map_err(|e| CliError::usage(e.to_string()))
}

fn entropy_error(e: EntropyError) -> CliError {
    match e {
        EntropyError::InvalidBase(_) => CliError::usage(e.to_string()),
        _ => CliError::data(e.to_string()),
    }
}

fn cmd_entropy(args: &EntropyArgs) -> Result<String, CliError> {
    let delimiter = parse_delimiter(&args.delimiter)?;
    let metrics = parse_metrics(&args.metrics)?;
    let (text, source) = read_input(args.input.as_deref())?;
    let doc = parse_table(&text, delimiter, &source).map_err(|e| CliError::data(e.to_string()))?;
    let set = to_object_set(&doc).map_err(|e| CliError::data(e.to_string()))?;
    let view = resolve_view(&set, &args.view)?;

    let mut report = hv_entropy(&set, &view, args.base).map_err(entropy_error)?;
    if metrics.joint {
        report = report.with_joint(joint_entropy(&set, &view, args.base).map_err(entropy_error)?);
    }
    for (target, given) in &metrics.conditional {
        let t = resolve_variable(&set, target)?;
        let g = resolve_variable(&set, given)?;
        if t == g {
            return Err(CliError::usage(format!(
                "conditional target and given must differ (both are '{target}')"
            )));
        }
        let value = conditional_entropy(&set, t, g, args.base).map_err(entropy_error)?;
        report = report.with_conditional(ConditionalEntry {
            target: target.clone(),
            given: given.clone(),
            entropy: value,
        });
    }
    Ok(write_report(&report, args.format.into()))
}

// ---------------------------------------------------------------------------
// password

fn password_error(e: PasswordError) -> CliError {
    CliError::data(e.to_string())
}

fn cmd_password(args: &PasswordArgs) -> Result<String, CliError> {
    if args.mode == PasswordMode::Digram && args.digram_table.is_none() {
        return Err(CliError::usage("digram mode requires --digram-table"));
    }

    let mut raw = String::new();
    std::io::stdin()
        .read_to_string(&mut raw)
        .map_err(|e| CliError::data(format!("stdin: {e}")))?;
    let password = raw
        .strip_suffix("\r\n")
        .or_else(|| raw.strip_suffix('\n'))
        .unwrap_or(&raw);
    if password.is_empty() {
        return Err(CliError::data("empty password"));
    }

    let analysis = match args.mode {
        PasswordMode::Independent => rate_independent(password).map_err(password_error)?,
        PasswordMode::Digram => {
            let path = args.digram_table.as_ref().expect("checked above");
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::data(format!("{}: {e}", path.display())))?;
            let model = load_digram_table(&text).map_err(password_error)?;
            rate_with_language_model(password, &model).map_err(password_error)?
        }
    };
    Ok(render_analysis(&analysis, args.format))
}

fn render_analysis(a: &PasswordAnalysis, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut root = serde_json::Map::new();
            root.insert("length".into(), serde_json::json!(a.length));
            root.insert(
                "h_char".into(),
                serde_json::json!(round_significant(a.h_char, 6)),
            );
            root.insert(
                "h_class".into(),
                serde_json::json!(round_significant(a.h_class, 6)),
            );
            if let Some(h) = a.h_conditional {
                root.insert(
                    "h_conditional".into(),
                    serde_json::json!(round_significant(h, 6)),
                );
            }
            root.insert("hv".into(), serde_json::json!(round_significant(a.hv, 6)));
            root.insert("mode".into(), serde_json::json!(a.mode.to_string()));
            let mut out = serde_json::to_string_pretty(&serde_json::Value::Object(root))
                .expect("analysis serializes");
            out.push('\n');
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("metric,value\n");
            out.push_str(&format!("length,{}\n", a.length));
            out.push_str(&format!("mode,{}\n", a.mode));
            out.push_str(&format!(
                "h_char,{}\n",
                hv_core::format_significant(a.h_char, 6)
            ));
            out.push_str(&format!(
                "h_class,{}\n",
                hv_core::format_significant(a.h_class, 6)
            ));
            if let Some(h) = a.h_conditional {
                out.push_str(&format!(
                    "h_conditional,{}\n",
                    hv_core::format_significant(h, 6)
                ));
            }
            out.push_str(&format!("hv,{}\n", hv_core::format_significant(a.hv, 6)));
            out
        }
    }
}

// ---------------------------------------------------------------------------
// ga

fn parse_schema_spec(spec: &str) -> Result<SegmentSchema, CliError> {
    let spec = spec.trim();
    let widths: Vec<usize> = if let Some((width, count)) = spec.split_once('x') {
        let width: usize = width
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad schema width in {spec:?}")))?;
        let count: usize = count
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad schema count in {spec:?}")))?;
        vec![width; count]
    } else {
        spec.split(',')
            .map(|w| {
                w.trim()
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad segment width {w:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    SegmentSchema::new(widths).map_err(|e| CliError::usage(e.to_string()))
}

fn resolve_schema(args: &GaArgs) -> Result<SegmentSchema, CliError> {
    match (&args.schema, args.bits) {
        (None, None) => Err(CliError::usage("provide --bits and/or --schema")),
        (None, Some(bits)) => {
            SegmentSchema::one_bit_segments(bits).map_err(|e| CliError::usage(e.to_string()))
        }
        (Some(spec), bits) => {
            let schema = parse_schema_spec(spec)?;
            if let Some(bits) = bits {
                if schema.total_bits() != bits {
                    return Err(CliError::usage(format!(
                        "--schema covers {} bits but --bits says {bits}",
                        schema.total_bits()
                    )));
                }
            }
            Ok(schema)
        }
    }
}

fn parse_selection(spec: &str) -> Result<Selection, CliError> {
    match spec.trim() {
        "roulette" => Ok(Selection::Roulette),
        "tournament" => Ok(Selection::Tournament(2)),
        other => {
            if let Some(k) = other.strip_prefix("tournament:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad tournament size {k:?}")))?;
                Ok(Selection::Tournament(k))
            } else {
                Err(CliError::usage(format!(
                    "unknown selection {other:?} (valid: roulette, tournament, tournament:K)"
                )))
            }
        }
    }
}

fn parse_seed_range(spec: &str) -> Result<(u64, u64), CliError> {
    let (a, b) = spec
        .split_once("..")
        .ok_or_else(|| CliError::usage(format!("seed range must look like A..B, got {spec:?}")))?;
    let first: u64 = a
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad seed {a:?}")))?;
    let last: u64 = b
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad seed {b:?}")))?;
    if first > last {
        return Err(CliError::usage(format!(
            "seed range start {first} exceeds end {last}"
        )));
    }
    Ok((first, last))
}

fn trace_path_for_seed(base: &Path, seed: u64) -> PathBuf {
    let stem = base
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let mut name = format!("{stem}_seed{seed}");
    if let Some(ext) = base.extension() {
        name.push('.');
        name.push_str(&ext.to_string_lossy());
    }
    base.with_file_name(name)
}

fn write_trace(trace: &DiversityTrace, path: &Path, format: OutputFormat) -> Result<(), CliError> {
    let body = match format {
        OutputFormat::Json => trace.to_json(),
        OutputFormat::Csv => trace.to_csv(),
    };
    std::fs::write(path, body).map_err(|e| CliError::data(format!("{}: {e}", path.display())))
}

fn sig6(value: f64) -> String {
    hv_core::format_significant(value, 6)
}

fn render_run_summary(seed: u64, trace: &DiversityTrace, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut root = serde_json::Map::new();
            root.insert("seed".into(), serde_json::json!(seed));
            root.insert("generations".into(), serde_json::json!(trace.rows().len()));
            root.insert(
                "status".into(),
                serde_json::json!(trace.final_status().to_string()),
            );
            root.insert(
                "initial_hv".into(),
                serde_json::json!(round_significant(trace.initial_hv(), 6)),
            );
            root.insert(
                "final_hv".into(),
                serde_json::json!(round_significant(trace.final_hv(), 6)),
            );
            root.insert(
                "best_fitness".into(),
                serde_json::json!(round_significant(trace.final_best_fitness(), 6)),
            );
            let mut out = serde_json::to_string_pretty(&serde_json::Value::Object(root))
                .expect("summary serializes");
            out.push('\n');
            out
        }
        OutputFormat::Csv => {
            let mut out =
                String::from("seed,generations,status,initial_hv,final_hv,best_fitness\n");
            out.push_str(&format!(
                "{seed},{},{},{},{},{}\n",
                trace.rows().len(),
                trace.final_status(),
                sig6(trace.initial_hv()),
                sig6(trace.final_hv()),
                sig6(trace.final_best_fitness()),
            ));
            out
        }
    }
}

fn cmd_ga(args: &GaArgs) -> Result<String, CliError> {
    let schema = resolve_schema(args)?;
    let total_bits = schema.total_bits();
    let selection = parse_selection(&args.selection)?;
    let fitness: &dyn Fitness = match args.fitness {
        FitnessKind::Onemax => &OneMax,
        FitnessKind::Trap5 => &Trap5,
    };

    let build_config = |seed: u64| -> Result<GaConfig, CliError> {
        let config = GaConfig {
            population_size: args.pop,
            schema: schema.clone(),
            selection,
            crossover_rate: args.crossover,
            mutation_rate: args.mutation.unwrap_or(1.0 / total_bits as f64),
            elitism_count: args.elitism,
            max_generations: args.generations,
            stall_generations: args.stall,
            seed,
        };
        config
            .validate()
            .map_err(|e| CliError::usage(e.to_string()))?;
        fitness
            .validate_schema(&config.schema)
            .map_err(|e| CliError::usage(e.to_string()))?;
        Ok(config)
    };

    match &args.seeds {
        None => {
            let config = build_config(args.seed)?;
            let trace = run(&config, fitness).map_err(|e| CliError::data(e.to_string()))?;
            if let Some(path) = &args.trace_out {
                write_trace(&trace, path, args.format)?;
            }
            Ok(render_run_summary(args.seed, &trace, args.format))
        }
        Some(range) => {
            let (first, last) = parse_seed_range(range)?;
            let mut traces = Vec::new();
            for seed in first..=last {
                let config = build_config(seed)?;
                let trace = run(&config, fitness).map_err(|e| CliError::data(e.to_string()))?;
                if let Some(path) = &args.trace_out {
                    write_trace(&trace, &trace_path_for_seed(path, seed), args.format)?;
                }
                traces.push(trace);
            }
            let report = theorem_report(&traces).map_err(|e| CliError::data(e.to_string()))?;
            Ok(render_batch_report(first, last, &report, args.format))
        }
    }
}

fn render_batch_report(
    first: u64,
    last: u64,
    report: &hv_galab::TheoremReport,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            let trends: Vec<serde_json::Value> = report
                .trend_coefficients
                .iter()
                .map(|&c| serde_json::json!(round_significant(c, 6)))
                .collect();
            let mut root = serde_json::Map::new();
            root.insert(
                "seeds".into(),
                serde_json::json!(format!("{first}..{last}")),
            );
            root.insert("trace_count".into(), serde_json::json!(report.trace_count));
            root.insert(
                "reduced_fraction".into(),
                serde_json::json!(round_significant(report.reduced_fraction, 6)),
            );
            root.insert(
                "median_relative_drop".into(),
                serde_json::json!(round_significant(report.median_relative_drop, 6)),
            );
            root.insert(
                "trend_coefficients".into(),
                serde_json::Value::Array(trends),
            );
            let mut out = serde_json::to_string_pretty(&serde_json::Value::Object(root))
                .expect("report serializes");
            out.push('\n');
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("metric,value\n");
            out.push_str(&format!("seeds,{first}..{last}\n"));
            out.push_str(&format!("trace_count,{}\n", report.trace_count));
            out.push_str(&format!(
                "reduced_fraction,{}\n",
                sig6(report.reduced_fraction)
            ));
            out.push_str(&format!(
                "median_relative_drop,{}\n",
                sig6(report.median_relative_drop)
            ));
            for (i, &c) in report.trend_coefficients.iter().enumerate() {
                out.push_str(&format!("trend_seed_{},{}\n", first + i as u64, sig6(c)));
            }
            out
        }
    }
}
