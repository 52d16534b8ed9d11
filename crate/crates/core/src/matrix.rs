//! Labeled symmetric distance matrices.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("label `{0}` occurs more than once")]
    DuplicateLabel(String),
    #[error("label {0:?} is empty or contains whitespace")]
    InvalidLabel(String),
    #[error("expected {expected} values, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("entry ({i}, {j}) = {value} is negative or not finite")]
    InvalidValue { i: usize, j: usize, value: f64 },
    #[error("entries ({i}, {j}) and ({j}, {i}) differ")]
    Asymmetric { i: usize, j: usize },
    #[error("diagonal entry {0} is not zero")]
    NonZeroDiagonal(usize),
}

/// Symmetric `n × n` matrix of non-negative distances with a zero diagonal.
///
/// Labels are unique and free of whitespace so the matrix can always be
/// written in OC format.
#[derive(Clone, PartialEq)]
pub struct DistanceMatrix {
    labels: Vec<String>,
    values: Vec<f64>,
}

impl DistanceMatrix {
    /// From full rows; checks symmetry, diagonal and sign.
    pub fn from_rows(labels: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self, MatrixError> {
        let n = labels.len();
        if rows.len() != n {
            return Err(MatrixError::Shape {
                expected: n,
                found: rows.len(),
            });
        }
        let mut values = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(MatrixError::Shape {
                    expected: n,
                    found: row.len(),
                });
            }
            values.extend(row);
        }
        check_labels(&labels)?;
        for i in 0..n {
            if values[i * n + i] != 0.0 {
                return Err(MatrixError::NonZeroDiagonal(i));
            }
            for j in 0..n {
                let v = values[i * n + j];
                if !(v.is_finite() && v >= 0.0) {
                    return Err(MatrixError::InvalidValue { i, j, value: v });
                }
                if v != values[j * n + i] {
                    return Err(MatrixError::Asymmetric { i, j });
                }
            }
        }
        Ok(DistanceMatrix { labels, values })
    }

    /// From the strict upper triangle in row order: `d(0,1), d(0,2), ..., d(n-2,n-1)`.
    pub fn from_upper(labels: Vec<String>, upper: &[f64]) -> Result<Self, MatrixError> {
        let n = labels.len();
        let expected = n * n.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(MatrixError::Shape {
                expected,
                found: upper.len(),
            });
        }
        check_labels(&labels)?;
        let mut values = vec![0.0; n * n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = *it.next().unwrap();
                if !(v.is_finite() && v >= 0.0) {
                    return Err(MatrixError::InvalidValue { i, j, value: v });
                }
                values[i * n + j] = v;
                values[j * n + i] = v;
            }
        }
        Ok(DistanceMatrix { labels, values })
    }

    /// Evaluates `dist(i, j)` for every `i < j`, in parallel. The result does
    /// not depend on scheduling: each cell is computed independently.
    pub fn from_fn<F>(labels: Vec<String>, dist: F) -> Result<Self, MatrixError>
    where
        F: Fn(usize, usize) -> f64 + Sync,
    {
        let n = labels.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let upper: Vec<f64> = pairs.par_iter().map(|&(i, j)| dist(i, j)).collect();
        DistanceMatrix::from_upper(labels, &upper)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.len() + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.len();
        &self.values[i * n..(i + 1) * n]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Strict upper triangle in row order.
    pub fn upper(&self) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect()
    }

    /// Reorders items: position `k` of the result holds item `order[k]`.
    ///
    /// # Panics
    ///
    /// If `order` is not a permutation of `0..n`.
    pub fn permuted(&self, order: &[usize]) -> DistanceMatrix {
        let n = self.len();
        assert_eq!(order.len(), n, "order must be a permutation");
        let mut seen = vec![false; n];
        for &o in order {
            assert!(
                !std::mem::replace(&mut seen[o], true),
                "order must be a permutation"
            );
        }
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        let mut values = vec![0.0; n * n];
        for (a, &i) in order.iter().enumerate() {
            for (b, &j) in order.iter().enumerate() {
                values[a * n + b] = self.get(i, j);
            }
        }
        DistanceMatrix { labels, values }
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (i, l) in self.labels.iter().enumerate() {
            m.entry(l, &self.row(i));
        }
        m.finish()
    }
}

fn check_labels(labels: &[String]) -> Result<(), MatrixError> {
    let mut seen = HashSet::new();
    for l in labels {
        if l.is_empty() || l.chars().any(char::is_whitespace) {
            return Err(MatrixError::InvalidLabel(l.clone()));
        }
        if !seen.insert(l.as_str()) {
            return Err(MatrixError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}
