//! Password complexity rating that looks at more than one property of
//! the characters.
//!
//! A password is treated as a set of objects (its characters) with two
//! variables each: the character identity and its keyboard layer
//! (upper case, lower case, number, or symbol — the layers a user of a
//! handheld device has to switch between). The rating is the sum of
//! the two entropies, in bits.
//!
//! For passwords that might be natural language, the character-identity
//! term can be replaced by the average surprisal of each consecutive
//! character pair under an English digram model; see [`digram`].

pub mod digram;

use hv_core::Distribution;
use thiserror::Error;

pub use digram::{load_digram_table, DigramModel};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PasswordError {
    #[error("empty password")]
    EmptyPassword,

    #[error("need at least one digram")]
    NeedDigram,

    #[error("empty model")]
    EmptyModel,

    #[error("empty alphabet")]
    EmptyAlphabet,

    #[error("pair ({first:?}, {second:?}) has its second character outside the model alphabet")]
    PairOutsideAlphabet { first: char, second: char },

    #[error("line {line}: {message}")]
    Table { line: usize, message: String },
}

/// The keyboard layer of a character. Every character maps to exactly
/// one class; anything that is neither a letter nor a decimal digit is
/// a symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CharClass {
    Upper,
    Lower,
    Number,
    Symbol,
}

impl std::fmt::Display for CharClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CharClass::Upper => "upper",
            CharClass::Lower => "lower",
            CharClass::Number => "number",
            CharClass::Symbol => "symbol",
        };
        f.write_str(s)
    }
}

/// Classifies a character by keyboard layer.
pub fn classify_char(c: char) -> CharClass {
    if c.is_uppercase() {
        CharClass::Upper
    } else if c.is_lowercase() {
        CharClass::Lower
    } else if c.is_ascii_digit() {
        CharClass::Number
    } else {
        CharClass::Symbol
    }
}

/// How the total rating was assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatingMode {
    /// hv = h_char + h_class
    Independent,
    /// hv = h_conditional + h_class
    Digram,
}

impl std::fmt::Display for RatingMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RatingMode::Independent => "independent",
            RatingMode::Digram => "digram",
        })
    }
}

/// The complexity rating of one password. All entropies are in bits.
#[derive(Debug, Clone, PartialEq)]
pub struct PasswordAnalysis {
    /// Character count.
    pub length: usize,
    /// Entropy of the character identities within the password.
    pub h_char: f64,
    /// Entropy of the keyboard-layer sequence.
    pub h_class: f64,
    /// Average per-digram surprisal under a language model, when rated
    /// in digram mode.
    pub h_conditional: Option<f64>,
    /// Total rating.
    pub hv: f64,
    pub mode: RatingMode,
}

const BITS: f64 = 2.0;

fn entropy_of<T: Ord + Clone>(tokens: Vec<T>) -> f64 {
    Distribution::from_tokens(tokens)
        .expect("token sequence is nonempty")
        .entropy(BITS)
        .expect("base 2 is valid")
}

/// Rates a password as two independent properties: character identity
/// and keyboard layer. Frequencies are taken within the password
/// itself.
pub fn rate_independent(password: &str) -> Result<PasswordAnalysis, PasswordError> {
    let chars: Vec<char> = password.chars().collect();
    if chars.is_empty() {
        return Err(PasswordError::EmptyPassword);
    }
    let classes: Vec<CharClass> = chars.iter().map(|&c| classify_char(c)).collect();
    let h_char = entropy_of(chars.clone());
    let h_class = entropy_of(classes);
    Ok(PasswordAnalysis {
        length: chars.len(),
        h_char,
        h_class,
        h_conditional: None,
        hv: h_char + h_class,
        mode: RatingMode::Independent,
    })
}

/// Rates a password against a digram language model: the
/// character-identity term becomes the average surprisal
/// `-log2 p(b|a)` over the password's consecutive pairs, so a password
/// built from common language sequences rates lower than its raw
/// character variety suggests. The keyboard-layer term is unchanged
/// and still sees the original case.
pub fn rate_with_language_model(
    password: &str,
    model: &DigramModel,
) -> Result<PasswordAnalysis, PasswordError> {
    let chars: Vec<char> = password.chars().collect();
    if chars.len() < 2 {
        return Err(PasswordError::NeedDigram);
    }
    let classes: Vec<CharClass> = chars.iter().map(|&c| classify_char(c)).collect();
    let h_char = entropy_of(chars.clone());
    let h_class = entropy_of(classes);
    let surprisal: f64 = chars
        .windows(2)
        .map(|pair| -model.lookup(pair[0], pair[1]).log2())
        .sum();
    let h_conditional = surprisal / (chars.len() - 1) as f64;
    Ok(PasswordAnalysis {
        length: chars.len(),
        h_char,
        h_class,
        h_conditional: Some(h_conditional),
        hv: h_conditional + h_class,
        mode: RatingMode::Digram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn classification_covers_the_four_layers() {
        assert_eq!(classify_char('A'), CharClass::Upper);
        assert_eq!(classify_char('z'), CharClass::Lower);
        assert_eq!(classify_char('7'), CharClass::Number);
        assert_eq!(classify_char('#'), CharClass::Symbol);
        assert_eq!(classify_char(' '), CharClass::Symbol);
        assert_eq!(classify_char('É'), CharClass::Upper);
        assert_eq!(classify_char('µ'), CharClass::Lower);
    }

    #[test]
    fn constant_password_rates_zero() {
        let a = rate_independent("aaaa").unwrap();
        assert_eq!(a.h_char, 0.0);
        assert_eq!(a.h_class, 0.0);
        assert_eq!(a.hv, 0.0);
        assert_eq!(a.length, 4);
    }

    #[test]
    fn case_alternation_adds_one_class_bit() {
        let a = rate_independent("aAbB").unwrap();
        assert_eq!(a.h_char, 2.0);
        assert_eq!(a.h_class, 1.0);
        assert_eq!(a.hv, 3.0);
    }

    #[test]
    fn all_four_layers_add_two_class_bits() {
        let a = rate_independent("aA1!").unwrap();
        assert_eq!(a.h_char, 2.0);
        assert_eq!(a.h_class, 2.0);
        assert_eq!(a.hv, 4.0);
    }

    #[test]
    fn empty_password_is_an_error() {
        assert_eq!(
            rate_independent("").unwrap_err(),
            PasswordError::EmptyPassword
        );
    }

    #[test]
    fn deterministic_continuation_rates_zero() {
        // a single-successor alphabet makes p(b|a) = 1 after smoothing
        let model = DigramModel::with_alphabet(&[('a', 'b', 5)], ['b']).unwrap();
        assert_eq!(model.lookup('a', 'b'), 1.0);
        let a = rate_with_language_model("ab", &model).unwrap();
        assert_eq!(a.h_conditional, Some(0.0));
        assert_eq!(a.h_class, 0.0);
        assert_eq!(a.hv, 0.0);
    }

    #[test]
    fn uniform_model_charges_the_full_alphabet() {
        let model = digram::tests::uniform_letters_model();
        let a = rate_with_language_model("ab", &model).unwrap();
        let expected = 26.0f64.log2();
        assert_abs_diff_eq!(a.h_conditional.unwrap(), expected, epsilon = 1e-9);
        assert_eq!(a.h_class, 0.0);
        assert_abs_diff_eq!(a.hv, expected, epsilon = 1e-9);
        assert_abs_diff_eq!(a.hv, 4.700, epsilon = 1e-3);
    }

    #[test]
    fn mixed_case_folds_for_lookup_but_not_for_class() {
        let model = digram::tests::uniform_letters_model();
        let a = rate_with_language_model("aB", &model).unwrap();
        assert_abs_diff_eq!(a.h_conditional.unwrap(), 26.0f64.log2(), epsilon = 1e-9);
        assert_eq!(a.h_class, 1.0);
        assert_abs_diff_eq!(a.hv, 26.0f64.log2() + 1.0, epsilon = 1e-9);
    }

    #[test]
    fn single_character_cannot_be_rated_by_digrams() {
        let model = digram::tests::uniform_letters_model();
        assert_eq!(
            rate_with_language_model("a", &model).unwrap_err(),
            PasswordError::NeedDigram
        );
    }

    #[test]
    fn lowering_a_digram_probability_raises_the_rating() {
        // two-symbol models differing only in how likely b-after-a is
        let likely = DigramModel::from_counts(&[('a', 'b', 9), ('a', 'a', 1)]).unwrap();
        let unlikely = DigramModel::from_counts(&[('a', 'b', 1), ('a', 'a', 9)]).unwrap();
        assert!(likely.lookup('a', 'b') > unlikely.lookup('a', 'b'));
        let low = rate_with_language_model("ab", &likely).unwrap();
        let high = rate_with_language_model("ab", &unlikely).unwrap();
        assert!(high.h_conditional.unwrap() > low.h_conditional.unwrap());
    }

    proptest! {
        #[test]
        fn rating_bounds_hold(password in "[ -~]{1,40}") {
            let a = rate_independent(&password).unwrap();
            let n = a.length as f64;
            prop_assert!(a.h_char >= 0.0 && a.h_char <= n.log2() + 1e-9);
            prop_assert!(a.h_class >= 0.0 && a.h_class <= 2.0 + 1e-9);
            prop_assert_eq!(a.hv, a.h_char + a.h_class);
        }

        #[test]
        fn class_sequence_carries_no_more_information_than_characters(password in "[ -~]{1,60}") {
            // the class sequence is a function of the character sequence
            let a = rate_independent(&password).unwrap();
            prop_assert!(a.h_class <= a.h_char + 1e-9, "h_class = {}, h_char = {}", a.h_class, a.h_char);
        }

        #[test]
        fn digram_surprisal_is_nonnegative(password in "[a-zA-Z0-9]{2,30}") {
            let model = digram::tests::uniform_letters_model();
            let a = rate_with_language_model(&password, &model).unwrap();
            prop_assert!(a.h_conditional.unwrap() >= 0.0);
        }

        #[test]
        fn classification_is_total(c in any::<char>()) {
            let _ = classify_char(c);
        }
    }
}
