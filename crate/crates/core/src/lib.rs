//! View-dependent Shannon entropy over sets of categorical objects.
//!
//! The central idea: a set of objects can be described through many
//! different choices of variables, and its entropy depends on which
//! variables you look at. Pick a view (a subset of the variables) and
//! this crate measures, per variable, the Shannon entropy of the value
//! sequence read down that column; the view entropy is their sum.
//! Unlike the joint entropy of the view, the sum notices when
//! individual properties are homogeneous even while every object is
//! unique.
//!
//! The crate also carries the plumbing to drive those measures from
//! delimited text files and to serialize the results.
//!
//! Everything here is a pure function of its inputs; all values are
//! immutable once constructed and safe to share across threads.

pub mod distribution;
pub mod error;
pub mod measures;
pub mod object_set;
pub mod report;
pub mod table;

pub use distribution::{empirical_distribution, shannon_entropy, Distribution};
pub use error::{EntropyError, TableError};
pub use measures::{
    compare_hv, conditional_entropy, hv_entropy, joint_entropy, variable_entropy,
    DiversityOrdering, HvComparison, COMPARE_TIE_TOLERANCE,
};
pub use object_set::{ObjectSet, VariableView};
pub use report::{
    format_significant, round_significant, write_report, ConditionalEntry, EntropyReport,
    ReportFormat, VariableEntropy,
};
pub use table::{parse_table, serialize_object_set, to_object_set, TableDocument};
