//! A deterministic, seedable simple genetic algorithm instrumented for
//! diversity tracking.
//!
//! Chromosomes are fixed-length bit strings carved into segments by a
//! [`SegmentSchema`]; each segment is one discrete characteristic, so a
//! whole population can be viewed as an object set and measured with
//! the entropy machinery from `hv_core`. Every run records a
//! [`DiversityTrace`] — view entropy, per-segment entropies, and
//! fitness statistics for each generation — which is what lets you
//! watch diversity collapse as selection takes hold.
//!
//! The loop is the canonical generational GA: roulette or tournament
//! selection, one-point crossover, independent per-bit mutation,
//! optional elitism, stopping on a best-fitness stall or a generation
//! cap. All randomness comes from one ChaCha8 generator seeded from the
//! config, so traces are reproducible bit for bit.

mod engine;
mod fitness;
mod population;
mod schema;
mod stats;
mod trace;

use thiserror::Error;

pub use engine::{evaluate, init_random, run, run_from, step, GaConfig, Selection};
pub use fitness::{Fitness, OneMax, Trap5};
pub use population::{population_object_set, Population};
pub use schema::{decode_segments, Chromosome, SegmentSchema};
pub use stats::{theorem_report, trend_against_index, TheoremReport};
pub use trace::{DiversityTrace, FinalStatus, TraceRow};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaError {
    #[error("population size must be at least 2 (got {0})")]
    PopulationTooSmall(usize),

    #[error("population has {got} members, config expects {expected}")]
    PopulationSizeMismatch { got: usize, expected: usize },

    #[error("schema must have at least one segment")]
    EmptySchema,

    #[error("segment widths must be at least 1")]
    ZeroWidthSegment,

    #[error("segment width {0} exceeds the supported 128 bits")]
    SegmentTooWide(usize),

    #[error("chromosome has {got} bits, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("{name} = {value} is outside [0, 1]")]
    RateOutOfRange { name: &'static str, value: f64 },

    #[error("elitism count {elitism} must be smaller than the population size {size}")]
    ElitismTooLarge { elitism: usize, size: usize },

    #[error("tournament size must be at least 1")]
    ZeroTournament,

    #[error("bits must be a multiple of 5 (got {bits})")]
    Trap5Length { bits: usize },

    #[error("no traces")]
    NoTraces,

    #[error(transparent)]
    Entropy(#[from] hv_core::EntropyError),
}
