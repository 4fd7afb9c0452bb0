//! Empirical probability distributions over a finite categorical alphabet.

use std::collections::BTreeMap;

use crate::error::EntropyError;

/// An empirical probability mass function over a finite categorical
/// alphabet. Categories with zero probability are never stored, so
/// `0 log 0` terms simply do not arise.
///
/// The token type is opaque: any totally ordered, clonable value works
/// (strings, chars, composite tuples, ...).
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution<T: Ord + Clone = String> {
    /// Sorted by token; every probability lies in (0, 1].
    probs: Vec<(T, f64)>,
}

impl<T: Ord + Clone> Distribution<T> {
    /// Empirical distribution of a token sequence: the probability of a
    /// token is its frequency of appearance in the sequence.
    pub fn from_tokens<I>(tokens: I) -> Result<Self, EntropyError>
    where
        I: IntoIterator<Item = T>,
    {
        let mut counts: BTreeMap<T, u64> = BTreeMap::new();
        let mut total: u64 = 0;
        for token in tokens {
            *counts.entry(token).or_insert(0) += 1;
            total += 1;
        }
        if total == 0 {
            return Err(EntropyError::EmptySequence);
        }
        let n = total as f64;
        Ok(Self {
            probs: counts
                .into_iter()
                .map(|(token, count)| (token, count as f64 / n))
                .collect(),
        })
    }

    /// Builds a distribution from explicit probabilities. Entries with
    /// probability exactly zero are dropped; the rest must be in (0, 1]
    /// and sum to 1 within 1e-9.
    pub fn from_probabilities<I>(entries: I) -> Result<Self, EntropyError>
    where
        I: IntoIterator<Item = (T, f64)>,
    {
        let mut map: BTreeMap<T, f64> = BTreeMap::new();
        let mut sum = 0.0;
        for (token, p) in entries {
            if !p.is_finite() || !(0.0..=1.0).contains(&p) {
                return Err(EntropyError::InvalidProbability(p));
            }
            if p == 0.0 {
                continue;
            }
            if map.insert(token, p).is_some() {
                return Err(EntropyError::DuplicateCategory);
            }
            sum += p;
        }
        if map.is_empty() {
            return Err(EntropyError::EmptySequence);
        }
        if (sum - 1.0).abs() > 1e-9 {
            return Err(EntropyError::NotNormalized { sum });
        }
        Ok(Self {
            probs: map.into_iter().collect(),
        })
    }

    /// Number of categories with nonzero probability.
    pub fn support_size(&self) -> usize {
        self.probs.len()
    }

    /// Probability of `token`, zero if absent.
    pub fn probability(&self, token: &T) -> f64 {
        self.probs
            .binary_search_by(|(t, _)| t.cmp(token))
            .map(|i| self.probs[i].1)
            .unwrap_or(0.0)
    }

    /// Iterates categories in token order.
    pub fn iter(&self) -> impl Iterator<Item = (&T, f64)> {
        self.probs.iter().map(|(t, p)| (t, *p))
    }

    /// Shannon entropy of this distribution in the given log base.
    pub fn entropy(&self, base: f64) -> Result<f64, EntropyError> {
        shannon_entropy(self, base)
    }
}

/// Empirical distribution of a token sequence; see
/// [`Distribution::from_tokens`].
pub fn empirical_distribution<T, I>(tokens: I) -> Result<Distribution<T>, EntropyError>
where
    T: Ord + Clone,
    I: IntoIterator<Item = T>,
{
    Distribution::from_tokens(tokens)
}

/// Shannon entropy `-sum p(i) log_base p(i)` of a distribution.
///
/// Terms are accumulated in ascending order of probability, so the
/// result depends only on the multiset of probabilities: renaming
/// categories or reordering the underlying objects cannot change it,
/// not even in the last bit.
pub fn shannon_entropy<T: Ord + Clone>(
    dist: &Distribution<T>,
    base: f64,
) -> Result<f64, EntropyError> {
    let log = LogBase::new(base)?;
    let mut ps: Vec<f64> = dist.iter().map(|(_, p)| p).collect();
    ps.sort_unstable_by(f64::total_cmp);
    let mut h = 0.0;
    for p in ps {
        h -= p * log.log(p);
    }
    Ok(h)
}

/// Logarithm in a configurable base. Base 2 and base 10 dispatch to the
/// dedicated libm routines; anything else goes through a ratio of
/// natural logs.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogBase {
    kind: LogKind,
}

#[derive(Debug, Clone, Copy)]
enum LogKind {
    Two,
    Ten,
    Other { ln_base: f64 },
}

impl LogBase {
    pub(crate) fn new(base: f64) -> Result<Self, EntropyError> {
        if !base.is_finite() || base <= 1.0 {
            return Err(EntropyError::InvalidBase(base));
        }
        let kind = if base == 2.0 {
            LogKind::Two
        } else if base == 10.0 {
            LogKind::Ten
        } else {
            LogKind::Other { ln_base: base.ln() }
        };
        Ok(Self { kind })
    }

    pub(crate) fn log(&self, x: f64) -> f64 {
        match self.kind {
            LogKind::Two => x.log2(),
            LogKind::Ten => x.log10(),
            LogKind::Other { ln_base } => x.ln() / ln_base,
        }
    }
}
