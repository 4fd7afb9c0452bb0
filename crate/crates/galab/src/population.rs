//! Populations of chromosomes and their view as object sets.

use hv_core::ObjectSet;

use crate::schema::{decode_segments, Chromosome, SegmentSchema};
use crate::GaError;

/// One generation of chromosomes. All members share one bit length and
/// the size never changes across generations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Population {
    members: Vec<Chromosome>,
    generation: usize,
}

impl Population {
    pub fn new(members: Vec<Chromosome>, generation: usize) -> Result<Self, GaError> {
        if members.len() < 2 {
            return Err(GaError::PopulationTooSmall(members.len()));
        }
        let len = members[0].len();
        for m in &members {
            if m.len() != len {
                return Err(GaError::LengthMismatch {
                    got: m.len(),
                    expected: len,
                });
            }
        }
        Ok(Self {
            members,
            generation,
        })
    }

    pub fn members(&self) -> &[Chromosome] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub(crate) fn successor(&self, members: Vec<Chromosome>) -> Self {
        Self {
            members,
            generation: self.generation + 1,
        }
    }
}

/// Views a population as an object set: one object per member, one
/// variable per segment (named `seg_0`, `seg_1`, ...), values from
/// [`decode_segments`]. Column `i` of the result is exactly the value
/// sequence of segment `i` read across the whole population.
pub fn population_object_set(
    population: &Population,
    schema: &SegmentSchema,
) -> Result<ObjectSet, GaError> {
    let names = (0..schema.segment_count())
        .map(|i| format!("seg_{i}"))
        .collect();
    let rows = population
        .members()
        .iter()
        .map(|m| decode_segments(m, schema))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ObjectSet::new(names, rows)?)
}
