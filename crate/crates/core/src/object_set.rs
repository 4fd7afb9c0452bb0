//! Sets of objects described by categorical variables, and views onto
//! a subset of those variables.

use std::collections::BTreeSet;

use crate::error::EntropyError;

/// A rectangular set of `k` objects, each described by the same ordered
/// list of categorical variables. Tokens are opaque: two cells belong
/// to the same category exactly when their text is identical.
///
/// The alphabet of a variable is empirical — the set of tokens that
/// actually appear in its column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectSet {
    variable_names: Vec<String>,
    objects: Vec<Vec<String>>,
}

impl ObjectSet {
    /// Validates shape: at least one variable, at least one object,
    /// distinct variable names, and every object row exactly as wide as
    /// the name list.
    pub fn new(
        variable_names: Vec<String>,
        objects: Vec<Vec<String>>,
    ) -> Result<Self, EntropyError> {
        if variable_names.is_empty() {
            return Err(EntropyError::NoVariables);
        }
        let mut seen = BTreeSet::new();
        for name in &variable_names {
            if !seen.insert(name.as_str()) {
                return Err(EntropyError::DuplicateVariable(name.clone()));
            }
        }
        if objects.is_empty() {
            return Err(EntropyError::EmptyObjectSet);
        }
        for (i, row) in objects.iter().enumerate() {
            if row.len() != variable_names.len() {
                return Err(EntropyError::RaggedObject {
                    object: i,
                    got: row.len(),
                    expected: variable_names.len(),
                });
            }
        }
        Ok(Self {
            variable_names,
            objects,
        })
    }

    /// Number of objects (`k`).
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// Number of variables describing each object.
    pub fn variable_count(&self) -> usize {
        self.variable_names.len()
    }

    pub fn variable_names(&self) -> &[String] {
        &self.variable_names
    }

    /// Index of the variable with this exact name.
    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variable_names.iter().position(|n| n == name)
    }

    /// Object rows, each in variable order.
    pub fn objects(&self) -> &[Vec<String>] {
        &self.objects
    }

    /// The value sequence of variable `j` read across all objects, in
    /// object order.
    pub fn column(&self, j: usize) -> Result<Vec<&str>, EntropyError> {
        self.check_index(j)?;
        Ok(self.objects.iter().map(|row| row[j].as_str()).collect())
    }

    /// Distinct tokens observed in column `j`.
    pub fn alphabet(&self, j: usize) -> Result<BTreeSet<&str>, EntropyError> {
        Ok(self.column(j)?.into_iter().collect())
    }

    pub(crate) fn check_index(&self, j: usize) -> Result<(), EntropyError> {
        if j >= self.variable_count() {
            return Err(EntropyError::IndexOutOfRange {
                index: j,
                variables: self.variable_count(),
            });
        }
        Ok(())
    }
}

/// An ordered, duplicate-free selection of variable indices: the choice
/// of which properties to examine. All entropy measures are taken with
/// respect to a view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableView {
    indices: Vec<usize>,
}

impl VariableView {
    pub fn new(indices: Vec<usize>) -> Result<Self, EntropyError> {
        if indices.is_empty() {
            return Err(EntropyError::EmptyView);
        }
        let mut seen = BTreeSet::new();
        for &j in &indices {
            if !seen.insert(j) {
                return Err(EntropyError::DuplicateViewIndex(j));
            }
        }
        Ok(Self { indices })
    }

    /// The view selecting every variable of `set`, in declaration order.
    pub fn all(set: &ObjectSet) -> Self {
        Self {
            indices: (0..set.variable_count()).collect(),
        }
    }

    /// The view selecting a single variable.
    pub fn single(j: usize) -> Self {
        Self { indices: vec![j] }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub(crate) fn check_against(&self, set: &ObjectSet) -> Result<(), EntropyError> {
        for &j in &self.indices {
            set.check_index(j)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn rows(rows: &[&[&str]]) -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn column_and_alphabet() {
        let set = ObjectSet::new(
            names(&["v1", "v2"]),
            rows(&[&["a", "0"], &["b", "0"], &["a", "1"]]),
        )
        .unwrap();
        assert_eq!(set.object_count(), 3);
        assert_eq!(set.variable_count(), 2);
        assert_eq!(set.column(0).unwrap(), vec!["a", "b", "a"]);
        let alpha: Vec<&str> = set.alphabet(1).unwrap().into_iter().collect();
        assert_eq!(alpha, vec!["0", "1"]);
    }

    #[test]
    fn ragged_row_is_rejected() {
        let err = ObjectSet::new(names(&["v1", "v2"]), rows(&[&["a", "0"], &["b"]])).unwrap_err();
        assert_eq!(
            err,
            EntropyError::RaggedObject {
                object: 1,
                got: 1,
                expected: 2
            }
        );
    }

    #[test]
    fn empty_shapes_are_rejected() {
        assert_eq!(
            ObjectSet::new(names(&["v1"]), vec![]).unwrap_err(),
            EntropyError::EmptyObjectSet
        );
        assert_eq!(
            ObjectSet::new(vec![], rows(&[&["a"]])).unwrap_err(),
            EntropyError::NoVariables
        );
    }

    #[test]
    fn duplicate_variable_names_are_rejected() {
        let err = ObjectSet::new(names(&["v1", "v1"]), rows(&[&["a", "b"]])).unwrap_err();
        assert_eq!(err, EntropyError::DuplicateVariable("v1".into()));
    }

    #[test]
    fn out_of_range_column_is_an_error() {
        let set = ObjectSet::new(names(&["v1"]), rows(&[&["a"]])).unwrap();
        assert_eq!(
            set.column(1).unwrap_err(),
            EntropyError::IndexOutOfRange {
                index: 1,
                variables: 1
            }
        );
    }

    #[test]
    fn views_must_be_nonempty_and_distinct() {
        assert_eq!(
            VariableView::new(vec![]).unwrap_err(),
            EntropyError::EmptyView
        );
        assert_eq!(
            VariableView::new(vec![0, 1, 0]).unwrap_err(),
            EntropyError::DuplicateViewIndex(0)
        );
        assert_eq!(VariableView::new(vec![2, 0]).unwrap().indices(), &[2, 0]);
    }

    #[test]
    fn tokens_differ_by_exact_text() {
        let set = ObjectSet::new(names(&["v1"]), rows(&[&["0"], &["00"], &["0"]])).unwrap();
        assert_eq!(set.alphabet(0).unwrap().len(), 2);
    }
}
