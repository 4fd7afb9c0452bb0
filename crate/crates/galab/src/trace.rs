//! Per-generation diversity records and their export formats.

use hv_core::format_significant;
use serde_json::{json, Map, Value};

/// One generation's measurements. `hv` is the population's view
/// entropy in bits over all segments; `per_segment` holds the
/// per-segment entropies it sums.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub generation: usize,
    pub hv: f64,
    pub per_segment: Vec<f64>,
    pub best_fitness: f64,
    pub mean_fitness: f64,
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinalStatus {
    Converged,
    MaxGenerations,
}

impl std::fmt::Display for FinalStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FinalStatus::Converged => "converged",
            FinalStatus::MaxGenerations => "max_generations",
        })
    }
}

/// The record of a whole run: one row per generation, indices
/// contiguous from 0.
#[derive(Debug, Clone, PartialEq)]
pub struct DiversityTrace {
    rows: Vec<TraceRow>,
    final_status: FinalStatus,
}

const TRACE_DIGITS: u32 = 6;

impl DiversityTrace {
    pub(crate) fn new(rows: Vec<TraceRow>, final_status: FinalStatus) -> Self {
        debug_assert!(!rows.is_empty());
        debug_assert!(rows.iter().enumerate().all(|(i, r)| r.generation == i));
        Self { rows, final_status }
    }

    pub fn rows(&self) -> &[TraceRow] {
        &self.rows
    }

    pub fn final_status(&self) -> FinalStatus {
        self.final_status
    }

    /// View entropy of generation 0.
    pub fn initial_hv(&self) -> f64 {
        self.rows[0].hv
    }

    /// View entropy of the last generation.
    pub fn final_hv(&self) -> f64 {
        self.rows[self.rows.len() - 1].hv
    }

    /// Best fitness in the last generation.
    pub fn final_best_fitness(&self) -> f64 {
        self.rows[self.rows.len() - 1].best_fitness
    }

    /// Delimited-text export:
    /// `generation,hv,best_fitness,mean_fitness,seg_0,...`, numeric
    /// values with six significant digits.
    pub fn to_csv(&self) -> String {
        let segments = self.rows[0].per_segment.len();
        let mut out = String::from("generation,hv,best_fitness,mean_fitness");
        for i in 0..segments {
            out.push_str(&format!(",seg_{i}"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}",
                row.generation,
                format_significant(row.hv, TRACE_DIGITS),
                format_significant(row.best_fitness, TRACE_DIGITS),
                format_significant(row.mean_fitness, TRACE_DIGITS),
            ));
            for &h in &row.per_segment {
                out.push_str(&format!(",{}", format_significant(h, TRACE_DIGITS)));
            }
            out.push('\n');
        }
        out
    }

    /// JSON export mirroring the trace structure, full precision.
    pub fn to_json(&self) -> String {
        let generations: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                json!({
                    "generation": row.generation,
                    "hv": row.hv,
                    "per_segment": row.per_segment,
                    "best_fitness": row.best_fitness,
                    "mean_fitness": row.mean_fitness,
                })
            })
            .collect();
        let mut root = Map::new();
        root.insert("final_status".into(), json!(self.final_status.to_string()));
        root.insert("generations".into(), Value::Array(generations));
        let mut out = serde_json::to_string_pretty(&Value::Object(root)).expect("trace serializes");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_trace() -> DiversityTrace {
        DiversityTrace::new(
            vec![
                TraceRow {
                    generation: 0,
                    hv: 1.9182958340544896,
                    per_segment: vec![1.0, 0.9182958340544896],
                    best_fitness: 3.0,
                    mean_fitness: 1.5,
                },
                TraceRow {
                    generation: 1,
                    hv: 1.0,
                    per_segment: vec![1.0, 0.0],
                    best_fitness: 4.0,
                    mean_fitness: 2.25,
                },
            ],
            FinalStatus::Converged,
        )
    }

    #[test]
    fn csv_layout() {
        let csv = sample_trace().to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "generation,hv,best_fitness,mean_fitness,seg_0,seg_1"
        );
        assert_eq!(
            lines.next().unwrap(),
            "0,1.91830,3.00000,1.50000,1.00000,0.918296"
        );
        assert_eq!(lines.next().unwrap(), "1,1.00000,4.00000,2.25000,1.00000,0");
        assert!(lines.next().is_none());
    }

    #[test]
    fn json_mirrors_rows() {
        let text = sample_trace().to_json();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["final_status"], "converged");
        assert_eq!(value["generations"][0]["generation"], 0);
        assert_eq!(value["generations"][1]["hv"], 1.0);
        assert_eq!(
            value["generations"][0]["per_segment"][1],
            0.9182958340544896
        );
    }

    #[test]
    fn summary_accessors() {
        let trace = sample_trace();
        assert_eq!(trace.initial_hv(), 1.9182958340544896);
        assert_eq!(trace.final_hv(), 1.0);
        assert_eq!(trace.final_best_fitness(), 4.0);
    }
}
