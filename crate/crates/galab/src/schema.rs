//! Chromosomes and the segment schema that maps their bits onto
//! discrete variables.

use crate::GaError;

/// Partition of a chromosome into contiguous bit segments. Each segment
/// encodes one discrete characteristic and becomes one variable when a
/// population is viewed as an object set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentSchema {
    widths: Vec<usize>,
}

impl SegmentSchema {
    /// Widths must be nonempty and every width in 1..=128.
    pub fn new(widths: Vec<usize>) -> Result<Self, GaError> {
        if widths.is_empty() {
            return Err(GaError::EmptySchema);
        }
        for &w in &widths {
            if w == 0 {
                return Err(GaError::ZeroWidthSegment);
            }
            if w > 128 {
                return Err(GaError::SegmentTooWide(w));
            }
        }
        Ok(Self { widths })
    }

    /// `count` one-bit segments: every bit is its own variable.
    pub fn one_bit_segments(count: usize) -> Result<Self, GaError> {
        Self::new(vec![1; count])
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn segment_count(&self) -> usize {
        self.widths.len()
    }

    pub fn total_bits(&self) -> usize {
        self.widths.iter().sum()
    }
}

/// A fixed-length bit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chromosome {
    bits: Vec<bool>,
}

impl Chromosome {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Parses a string of '0' and '1' characters.
    pub fn from_bit_str(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<bool>>>()
            .map(Self::new)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

/// Splits a chromosome by the schema widths, in order, and renders each
/// segment as the decimal value of its bits (most significant bit
/// first).
pub fn decode_segments(
    chromosome: &Chromosome,
    schema: &SegmentSchema,
) -> Result<Vec<String>, GaError> {
    if chromosome.len() != schema.total_bits() {
        return Err(GaError::LengthMismatch {
            got: chromosome.len(),
            expected: schema.total_bits(),
        });
    }
    let mut tokens = Vec::with_capacity(schema.segment_count());
    let mut offset = 0;
    for &width in schema.widths() {
        let mut value: u128 = 0;
        for &bit in &chromosome.bits()[offset..offset + width] {
            value = (value << 1) | u128::from(bit);
        }
        tokens.push(value.to_string());
        offset += width;
    }
    Ok(tokens)
}
