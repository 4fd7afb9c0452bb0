//! Entropy measures over object sets: per-variable entropy, the
//! view-dependent total, joint entropy, conditional entropy, and
//! diversity comparison between two sets.

use crate::distribution::{empirical_distribution, shannon_entropy};
use crate::error::EntropyError;
use crate::object_set::{ObjectSet, VariableView};
use crate::report::{EntropyReport, VariableEntropy};

/// Absolute tolerance under which two view entropies are reported equal.
pub const COMPARE_TIE_TOLERANCE: f64 = 1e-9;

/// Entropy of variable `j`: the Shannon entropy of the value sequence
/// read down column `j` across all objects.
pub fn variable_entropy(set: &ObjectSet, j: usize, base: f64) -> Result<f64, EntropyError> {
    let column = set.column(j)?;
    let dist = empirical_distribution(column)?;
    shannon_entropy(&dist, base)
}

/// View entropy: the sum of per-variable entropies over the selected
/// variables. This is the headline measure — it sums marginal
/// entropies even when variables are dependent, which is what lets it
/// tell a homogeneous set from a varied one when joint entropy cannot.
pub fn hv_entropy(
    set: &ObjectSet,
    view: &VariableView,
    base: f64,
) -> Result<EntropyReport, EntropyError> {
    view.check_against(set)?;
    let mut per_variable = Vec::with_capacity(view.indices().len());
    for &j in view.indices() {
        per_variable.push(VariableEntropy {
            index: j,
            name: set.variable_names()[j].clone(),
            entropy: variable_entropy(set, j, base)?,
        });
    }
    Ok(EntropyReport::new(base, per_variable))
}

/// Joint entropy of the view: each object restricted to the selected
/// variables becomes one composite token, and the result is the Shannon
/// entropy of that tuple distribution.
pub fn joint_entropy(set: &ObjectSet, view: &VariableView, base: f64) -> Result<f64, EntropyError> {
    view.check_against(set)?;
    let tuples: Vec<Vec<&str>> = set
        .objects()
        .iter()
        .map(|row| view.indices().iter().map(|&j| row[j].as_str()).collect())
        .collect();
    let dist = empirical_distribution(tuples)?;
    shannon_entropy(&dist, base)
}

/// Conditional entropy H(target | given) = H(target, given) − H(given),
/// from the empirical joint distribution of the two columns. Clamped at
/// zero against rounding.
pub fn conditional_entropy(
    set: &ObjectSet,
    target: usize,
    given: usize,
    base: f64,
) -> Result<f64, EntropyError> {
    set.check_index(target)?;
    set.check_index(given)?;
    if target == given {
        return Err(EntropyError::SelfConditioning(target));
    }
    let pair = VariableView::new(vec![target, given])?;
    let joint = joint_entropy(set, &pair, base)?;
    let given_h = variable_entropy(set, given, base)?;
    Ok((joint - given_h).max(0.0))
}

/// Which of two object sets is more diverse on a view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiversityOrdering {
    AMoreDiverse,
    BMoreDiverse,
    Equal,
}

impl std::fmt::Display for DiversityOrdering {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DiversityOrdering::AMoreDiverse => "a more diverse",
            DiversityOrdering::BMoreDiverse => "b more diverse",
            DiversityOrdering::Equal => "equal",
        };
        f.write_str(s)
    }
}

/// Result of comparing the view entropy of two object sets.
#[derive(Debug, Clone, PartialEq)]
pub struct HvComparison {
    pub hv_a: f64,
    pub hv_b: f64,
    pub ordering: DiversityOrdering,
}

/// Compares the diversity of two sets of the same kind of object on one
/// view. The sets must name identical variables; ties within
/// [`COMPARE_TIE_TOLERANCE`] are reported as equal.
pub fn compare_hv(
    a: &ObjectSet,
    b: &ObjectSet,
    view: &VariableView,
    base: f64,
) -> Result<HvComparison, EntropyError> {
    if a.variable_names() != b.variable_names() {
        return Err(EntropyError::IncomparableSchemas);
    }
    let hv_a = hv_entropy(a, view, base)?.hv_total();
    let hv_b = hv_entropy(b, view, base)?.hv_total();
    let ordering = if (hv_a - hv_b).abs() <= COMPARE_TIE_TOLERANCE {
        DiversityOrdering::Equal
    } else if hv_a > hv_b {
        DiversityOrdering::AMoreDiverse
    } else {
        DiversityOrdering::BMoreDiverse
    };
    Ok(HvComparison {
        hv_a,
        hv_b,
        ordering,
    })
}
