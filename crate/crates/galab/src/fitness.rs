//! Fitness functions: the two built-in benchmark landscapes plus a
//! blanket impl so any `Fn(&[bool]) -> f64` works as a user hook.

use crate::schema::SegmentSchema;
use crate::GaError;

pub trait Fitness {
    fn evaluate(&self, bits: &[bool]) -> f64;

    /// Hook for declaring structural requirements on the chromosome;
    /// checked once before a run or step.
    fn validate_schema(&self, _schema: &SegmentSchema) -> Result<(), GaError> {
        Ok(())
    }
}

impl<F: Fn(&[bool]) -> f64> Fitness for F {
    fn evaluate(&self, bits: &[bool]) -> f64 {
        self(bits)
    }
}

/// Number of set bits. The easy, steadily converging benchmark.
#[derive(Debug, Clone, Copy, Default)]
pub struct OneMax;

impl Fitness for OneMax {
    fn evaluate(&self, bits: &[bool]) -> f64 {
        bits.iter().filter(|&&b| b).count() as f64
    }
}

/// Concatenated 5-bit deceptive traps: a block scores 5 when all five
/// bits are set and otherwise 4 minus its number of set bits, so the
/// gradient points away from the optimum. Chromosome length must be a
/// multiple of 5.
#[derive(Debug, Clone, Copy, Default)]
pub struct Trap5;

impl Fitness for Trap5 {
    fn evaluate(&self, bits: &[bool]) -> f64 {
        assert!(
            bits.len().is_multiple_of(5),
            "trap5 needs a multiple of 5 bits"
        );
        bits.chunks(5)
            .map(|block| {
                let ones = block.iter().filter(|&&b| b).count();
                if ones == 5 {
                    5.0
                } else {
                    (4 - ones) as f64
                }
            })
            .sum()
    }

    fn validate_schema(&self, schema: &SegmentSchema) -> Result<(), GaError> {
        let bits = schema.total_bits();
        if !bits.is_multiple_of(5) {
            return Err(GaError::Trap5Length { bits });
        }
        Ok(())
    }
}
