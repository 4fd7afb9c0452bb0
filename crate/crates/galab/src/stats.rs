//! Aggregate statistics over a batch of diversity traces: did entropy
//! fall while the runs converged, and how consistently?

use crate::trace::DiversityTrace;
use crate::GaError;

/// Summary of entropy reduction across a batch of runs.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub trace_count: usize,
    /// Fraction of traces with final view entropy strictly below the
    /// initial one.
    pub reduced_fraction: f64,
    /// Median of (initial − final) / initial across traces; zero when a
    /// trace starts at zero entropy.
    pub median_relative_drop: f64,
    /// Per-trace rank correlation between generation index and view
    /// entropy; −1 means entropy fell monotonically.
    pub trend_coefficients: Vec<f64>,
}

/// Aggregates a nonempty batch of traces.
pub fn theorem_report(traces: &[DiversityTrace]) -> Result<TheoremReport, GaError> {
    if traces.is_empty() {
        return Err(GaError::NoTraces);
    }
    let reduced = traces
        .iter()
        .filter(|t| t.final_hv() < t.initial_hv())
        .count();
    let mut drops: Vec<f64> = traces
        .iter()
        .map(|t| {
            let initial = t.initial_hv();
            if initial > 0.0 {
                (initial - t.final_hv()) / initial
            } else {
                0.0
            }
        })
        .collect();
    drops.sort_unstable_by(f64::total_cmp);
    let median = if drops.len() % 2 == 1 {
        drops[drops.len() / 2]
    } else {
        (drops[drops.len() / 2 - 1] + drops[drops.len() / 2]) / 2.0
    };
    let trends = traces
        .iter()
        .map(|t| {
            let hv: Vec<f64> = t.rows().iter().map(|r| r.hv).collect();
            trend_against_index(&hv)
        })
        .collect();
    Ok(TheoremReport {
        trace_count: traces.len(),
        reduced_fraction: reduced as f64 / traces.len() as f64,
        median_relative_drop: median,
        trend_coefficients: trends,
    })
}

/// Spearman rank correlation between positions 0..n and the values.
/// Ties get average ranks; degenerate inputs (length < 2 or constant
/// values) report 0.
pub fn trend_against_index(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let x: Vec<f64> = (0..values.len()).map(|i| i as f64).collect();
    let y = average_ranks(values);
    pearson(&x, &y)
}

fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut pos = 0;
    while pos < order.len() {
        let mut end = pos;
        while end + 1 < order.len() && values[order[end + 1]] == values[order[pos]] {
            end += 1;
        }
        // average of the 1-based ranks pos+1 ..= end+1
        let rank = (pos + 1 + end + 1) as f64 / 2.0;
        for &i in &order[pos..=end] {
            ranks[i] = rank;
        }
        pos = end + 1;
    }
    ranks
}

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for i in 0..x.len() {
        let dx = x[i] - mx;
        let dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return 0.0;
    }
    sxy / (sxx * syy).sqrt()
}
