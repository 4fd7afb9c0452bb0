//! Conditional character models built from digram counts.
//!
//! A model stores, for every first character, a smoothed distribution
//! over the characters that may follow it. Counts go through add-one
//! smoothing over the model alphabet, so every row normalizes to 1 and
//! no pair gets probability zero. Pairs the model has never heard of at
//! all fall back to the model floor — the smallest smoothed probability
//! anywhere in the table.

use std::collections::{BTreeMap, BTreeSet};

use crate::PasswordError;

/// The bundled English letter digram table (lowercase a-z, tab
/// separated). Counts are approximate, taken from a small prose
/// sample; only their relative order should be relied on.
pub const ENGLISH_DIGRAMS_TSV: &str = include_str!("../data/english_digrams.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CaseFold {
    Lower,
    Upper,
    None,
}

/// A conditional model p(b | a) over characters.
#[derive(Debug, Clone)]
pub struct DigramModel {
    alphabet: BTreeSet<char>,
    /// p(b | a) per first character; keys cover the alphabet plus any
    /// first characters seen in the counts.
    rows: BTreeMap<char, BTreeMap<char, f64>>,
    /// Per-first-character count sums, before smoothing.
    totals: BTreeMap<char, u64>,
    /// Smallest smoothed probability in the table.
    floor: f64,
    fold: CaseFold,
}

impl DigramModel {
    /// Builds a model from `(first, second, count)` entries. The model
    /// alphabet is the set of characters appearing anywhere in the
    /// entries. At least one count must be positive.
    pub fn from_counts(entries: &[(char, char, u64)]) -> Result<Self, PasswordError> {
        let mut alphabet = BTreeSet::new();
        for &(a, b, _) in entries {
            alphabet.insert(a);
            alphabet.insert(b);
        }
        Self::build(entries, alphabet)
    }

    /// Builds a model over an explicit successor alphabet. Every
    /// entry's second character must belong to the alphabet; first
    /// characters outside it still get a conditional row.
    pub fn with_alphabet(
        entries: &[(char, char, u64)],
        alphabet: impl IntoIterator<Item = char>,
    ) -> Result<Self, PasswordError> {
        let alphabet: BTreeSet<char> = alphabet.into_iter().collect();
        if alphabet.is_empty() {
            return Err(PasswordError::EmptyAlphabet);
        }
        for &(a, b, _) in entries {
            if !alphabet.contains(&b) {
                return Err(PasswordError::PairOutsideAlphabet {
                    first: a,
                    second: b,
                });
            }
        }
        Self::build(entries, alphabet)
    }

    fn build(
        entries: &[(char, char, u64)],
        alphabet: BTreeSet<char>,
    ) -> Result<Self, PasswordError> {
        if alphabet.is_empty() || entries.iter().all(|&(_, _, c)| c == 0) {
            return Err(PasswordError::EmptyModel);
        }
        let mut counts: BTreeMap<(char, char), u64> = BTreeMap::new();
        let mut totals: BTreeMap<char, u64> = BTreeMap::new();
        for &(a, b, c) in entries {
            *counts.entry((a, b)).or_insert(0) += c;
            *totals.entry(a).or_insert(0) += c;
        }

        let mut row_keys: BTreeSet<char> = alphabet.clone();
        row_keys.extend(totals.keys().copied());

        let z = alphabet.len() as f64;
        let mut rows = BTreeMap::new();
        let mut floor = f64::INFINITY;
        for a in row_keys {
            let total = totals.get(&a).copied().unwrap_or(0) as f64;
            let denominator = total + z;
            let mut row = BTreeMap::new();
            for &b in &alphabet {
                let count = counts.get(&(a, b)).copied().unwrap_or(0) as f64;
                let p = (count + 1.0) / denominator;
                floor = floor.min(p);
                row.insert(b, p);
            }
            rows.insert(a, row);
        }

        let has_upper = alphabet.iter().any(|c| c.is_uppercase());
        let has_lower = alphabet.iter().any(|c| c.is_lowercase());
        let fold = match (has_upper, has_lower) {
            (true, true) => CaseFold::None,
            (true, false) => CaseFold::Upper,
            _ => CaseFold::Lower,
        };

        Ok(Self {
            alphabet,
            rows,
            totals,
            floor,
            fold,
        })
    }

    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    /// Smallest smoothed probability anywhere in the table; used for
    /// pairs outside the model.
    pub fn floor(&self) -> f64 {
        self.floor
    }

    /// Pre-smoothing count sum for a first character.
    pub fn total_count(&self, first: char) -> u64 {
        self.totals.get(&first).copied().unwrap_or(0)
    }

    /// The smoothed p(second | first) exactly as stored, without case
    /// folding or the floor fallback.
    pub fn conditional_probability(&self, first: char, second: char) -> Option<f64> {
        self.rows
            .get(&first)
            .and_then(|row| row.get(&second))
            .copied()
    }

    fn fold_char(&self, c: char) -> char {
        match self.fold {
            CaseFold::Lower => c.to_lowercase().next().unwrap_or(c),
            CaseFold::Upper => c.to_uppercase().next().unwrap_or(c),
            CaseFold::None => c,
        }
    }

    /// Probability used when rating: characters are folded to the
    /// model's case convention, and anything the model does not cover
    /// gets the floor.
    pub fn lookup(&self, first: char, second: char) -> f64 {
        let a = self.fold_char(first);
        let b = self.fold_char(second);
        self.conditional_probability(a, b).unwrap_or(self.floor)
    }
}

/// Parses a digram table: one `first<TAB>second<TAB>count` entry per
/// line, with blank lines and `#` comment lines ignored.
pub fn load_digram_table(text: &str) -> Result<DigramModel, PasswordError> {
    fn single_char(field: &str, line: usize) -> Result<char, PasswordError> {
        let mut chars = field.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Ok(c),
            _ => Err(PasswordError::Table {
                line,
                message: format!("expected a single character, got {field:?}"),
            }),
        }
    }

    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = content.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split('\t').collect();
        if fields.len() != 3 {
            return Err(PasswordError::Table {
                line,
                message: format!("expected 3 tab-separated fields, got {}", fields.len()),
            });
        }
        let first = single_char(fields[0], line)?;
        let second = single_char(fields[1], line)?;
        let count: u64 = fields[2].parse().map_err(|_| PasswordError::Table {
            line,
            message: "invalid count".to_string(),
        })?;
        entries.push((first, second, count));
    }
    DigramModel::from_counts(&entries)
}

/// The model built from [`ENGLISH_DIGRAMS_TSV`].
pub fn english_digram_model() -> DigramModel {
    load_digram_table(ENGLISH_DIGRAMS_TSV).expect("bundled digram table is well formed")
}
