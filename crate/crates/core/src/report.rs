//! Entropy reports and their serialized forms.

use serde_json::{json, Map, Value};

/// Entropy of one selected variable.
#[derive(Debug, Clone, PartialEq)]
pub struct VariableEntropy {
    pub index: usize,
    pub name: String,
    pub entropy: f64,
}

/// A conditional entropy attached to a report.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalEntry {
    pub target: String,
    pub given: String,
    pub entropy: f64,
}

/// The result of measuring an object set on a view: per-variable
/// entropies, their sum, and optionally the joint entropy of the view
/// and any requested conditional entropies. All values share one log
/// base.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    base: f64,
    per_variable: Vec<VariableEntropy>,
    hv_total: f64,
    joint: Option<f64>,
    conditional: Vec<ConditionalEntry>,
}

impl EntropyReport {
    pub(crate) fn new(base: f64, per_variable: Vec<VariableEntropy>) -> Self {
        let hv_total = per_variable.iter().map(|v| v.entropy).sum();
        Self {
            base,
            per_variable,
            hv_total,
            joint: None,
            conditional: Vec::new(),
        }
    }

    pub fn with_joint(mut self, joint: f64) -> Self {
        debug_assert!(
            joint <= self.hv_total + 1e-9,
            "joint entropy exceeds the sum"
        );
        self.joint = Some(joint);
        self
    }

    pub fn with_conditional(mut self, entry: ConditionalEntry) -> Self {
        self.conditional.push(entry);
        self
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn per_variable(&self) -> &[VariableEntropy] {
        &self.per_variable
    }

    /// Sum of the per-variable entropies.
    pub fn hv_total(&self) -> f64 {
        self.hv_total
    }

    pub fn joint(&self) -> Option<f64> {
        self.joint
    }

    pub fn conditional(&self) -> &[ConditionalEntry] {
        &self.conditional
    }
}

/// Output encodings for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Renders `value` with the given number of significant digits, in
/// plain decimal notation.
pub fn format_significant(value: f64, digits: u32) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let exponent = value.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
    format!("{value:.decimals$}")
}

/// `value` rounded to the given significant digits, as an f64. Used to
/// keep JSON numbers short without emitting strings.
pub fn round_significant(value: f64, digits: u32) -> f64 {
    format_significant(value, digits)
        .parse()
        .expect("formatted float reparses")
}

const REPORT_DIGITS: u32 = 6;

/// Serializes a report.
///
/// JSON form: object with keys `base`, `per_variable` (name → value),
/// `hv_total`, plus `joint` and `conditional` when present. CSV form:
/// `metric,value` rows with per-variable rows prefixed `H:`. Numeric
/// entropy values carry six significant digits in both forms.
pub fn write_report(report: &EntropyReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => write_json(report),
        ReportFormat::Csv => write_csv(report),
    }
}

fn sig(value: f64) -> f64 {
    round_significant(value, REPORT_DIGITS)
}

fn write_json(report: &EntropyReport) -> String {
    let mut per_variable = Map::new();
    for v in report.per_variable() {
        per_variable.insert(v.name.clone(), json!(sig(v.entropy)));
    }
    let mut root = Map::new();
    root.insert("base".into(), json!(report.base()));
    root.insert("per_variable".into(), Value::Object(per_variable));
    root.insert("hv_total".into(), json!(sig(report.hv_total())));
    if let Some(joint) = report.joint() {
        root.insert("joint".into(), json!(sig(joint)));
    }
    if !report.conditional().is_empty() {
        let entries: Vec<Value> = report
            .conditional()
            .iter()
            .map(|c| {
                json!({
                    "target": c.target,
                    "given": c.given,
                    "value": sig(c.entropy),
                })
            })
            .collect();
        root.insert("conditional".into(), Value::Array(entries));
    }
    let mut out = serde_json::to_string_pretty(&Value::Object(root)).expect("report serializes");
    out.push('\n');
    out
}

fn write_csv(report: &EntropyReport) -> String {
    let mut out = String::from("metric,value\n");
    out.push_str(&format!("base,{}\n", report.base()));
    for v in report.per_variable() {
        out.push_str(&format!(
            "H:{},{}\n",
            v.name,
            format_significant(v.entropy, REPORT_DIGITS)
        ));
    }
    out.push_str(&format!(
        "hv_total,{}\n",
        format_significant(report.hv_total(), REPORT_DIGITS)
    ));
    if let Some(joint) = report.joint() {
        out.push_str(&format!(
            "joint,{}\n",
            format_significant(joint, REPORT_DIGITS)
        ));
    }
    for c in report.conditional() {
        out.push_str(&format!(
            "H({}|{}),{}\n",
            c.target,
            c.given,
            format_significant(c.entropy, REPORT_DIGITS)
        ));
    }
    out
}
