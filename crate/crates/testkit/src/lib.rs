//! Test support for the workspace: a brute-force entropy oracle.
//!
//! Everything here is deliberately naive. Category counts are found by
//! exhaustive pairwise comparison, probabilities are held as exact
//! rationals, and logarithms are taken only at the last step. None of
//! the production crates are dependencies, so these routines stay an
//! independent check on them.

pub mod oracle {
    use num_rational::Ratio;
    use num_traits::ToPrimitive;

    /// Occurrence count of every distinct item, by pairwise comparison.
    /// The order of returned counts follows first appearance.
    pub fn brute_counts<T: PartialEq>(items: &[T]) -> Vec<u64> {
        let mut counts = Vec::new();
        for (i, item) in items.iter().enumerate() {
            if items[..i].iter().any(|prev| prev == item) {
                continue;
            }
            let c = items.iter().filter(|other| *other == item).count();
            counts.push(c as u64);
        }
        counts
    }

    /// Shannon entropy of a token sequence: sum over categories of
    /// (c/n) * log_base(n/c), with c/n and n/c kept as exact rationals
    /// until the logarithm.
    pub fn sequence_entropy<T: PartialEq>(items: &[T], base: f64) -> f64 {
        assert!(!items.is_empty(), "oracle: empty sequence");
        assert!(base > 1.0, "oracle: base must exceed 1");
        let n = items.len() as u64;
        let log_base = base.ln();
        brute_counts(items)
            .into_iter()
            .map(|c| {
                let p = Ratio::new(c, n);
                let inv = Ratio::new(n, c);
                p.to_f64().unwrap() * (inv.to_f64().unwrap().ln() / log_base)
            })
            .sum()
    }

    /// Entropy of column `j` of a row-major table.
    pub fn column_entropy(rows: &[Vec<String>], j: usize, base: f64) -> f64 {
        let column: Vec<&str> = rows.iter().map(|r| r[j].as_str()).collect();
        sequence_entropy(&column, base)
    }

    /// Sum of per-column entropies over the selected columns.
    pub fn view_entropy_sum(rows: &[Vec<String>], view: &[usize], base: f64) -> f64 {
        view.iter().map(|&j| column_entropy(rows, j, base)).sum()
    }

    /// Joint entropy of the selected columns: each row restricted to the
    /// view is one composite symbol.
    pub fn joint_entropy(rows: &[Vec<String>], view: &[usize], base: f64) -> f64 {
        let tuples: Vec<Vec<&str>> = rows
            .iter()
            .map(|r| view.iter().map(|&j| r[j].as_str()).collect())
            .collect();
        sequence_entropy(&tuples, base)
    }

    /// Conditional entropy H(target | given) = H(target, given) - H(given).
    pub fn conditional_entropy(
        rows: &[Vec<String>],
        target: usize,
        given: usize,
        base: f64,
    ) -> f64 {
        joint_entropy(rows, &[target, given], base) - column_entropy(rows, given, base)
    }
}

#[cfg(test)]
mod tests {
    use super::oracle;

    #[test]
    fn counts_by_first_appearance() {
        let items = ["b", "a", "b", "c", "b"];
        assert_eq!(oracle::brute_counts(&items), vec![3, 1, 1]);
    }

    #[test]
    fn fair_coin_is_one_bit() {
        let h = oracle::sequence_entropy(&["h", "t"], 2.0);
        assert!((h - 1.0).abs() < 1e-15);
    }

    #[test]
    fn constant_sequence_is_zero() {
        let h = oracle::sequence_entropy(&["x", "x", "x"], 10.0);
        assert_eq!(h, 0.0);
    }

    #[test]
    fn conditioning_on_duplicate_column_is_zero() {
        let rows: Vec<Vec<String>> = (0..6)
            .map(|i| vec![format!("{}", i % 2), format!("{}", i % 2)])
            .collect();
        let h = oracle::conditional_entropy(&rows, 0, 1, 2.0);
        assert!(h.abs() < 1e-15);
    }
}
