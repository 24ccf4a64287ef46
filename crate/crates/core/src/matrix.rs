//! Integer matrices, skew-adjacency matrices and polynomial matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{determinant, IntPolynomial};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// # Panics
    ///
    /// If the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// The matrix with 0-based row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let rows = (0..self.rows)
            .filter(|&i| i != r)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != c)
                    .map(|j| self.get(i, j))
                    .collect()
            })
            .collect();
        let mut m = IntMatrix::from_rows(rows);
        m.cols = self.cols.saturating_sub(1);
        m
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Skew-adjacency matrix of a linearly ordered graph: skew-symmetric with
/// entries in `{-1, 0, 1}`, zero diagonal, and nonnegative above the
/// diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewMatrix(IntMatrix);

impl SkewMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        for i in 0..n {
            if m.get(i, i) != 0 {
                return Err(Error::NotSkew(format!(
                    "nonzero diagonal entry at {}",
                    i + 1
                )));
            }
            for j in i + 1..n {
                let (up, down) = (m.get(i, j), m.get(j, i));
                if !(up == 0 || up == 1) || down != -up {
                    return Err(Error::NotSkew(format!(
                        "entries ({}, {}) = {up} and ({}, {}) = {down}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(SkewMatrix(m))
    }

    pub(crate) fn new_unchecked(m: IntMatrix) -> Self {
        debug_assert!(SkewMatrix::new(m.clone()).is_ok());
        SkewMatrix(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }
}

impl AsRef<IntMatrix> for SkewMatrix {
    fn as_ref(&self) -> &IntMatrix {
        &self.0
    }
}

/// Square matrix of integer polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    entries: Vec<Vec<IntPolynomial>>,
}

impl PolyMatrix {
    /// `xI - M`.
    pub fn shifted(m: &IntMatrix) -> Self {
        assert!(m.is_square());
        let n = m.rows();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = IntPolynomial::from_i64s(&[-m.get(i, j)]);
                        if i == j {
                            &c + &IntPolynomial::x()
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i][j]
    }

    pub fn determinant(&self) -> IntPolynomial {
        determinant(&self.entries).expect("polynomial arithmetic is exact")
    }

    /// The `(u, v)` entry (1-based) of the adjugate, i.e. the `(v, u)`
    /// cofactor `(-1)^(u+v) det(M without row v and column u)`.
    pub fn adjugate_entry(&self, u: usize, v: usize) -> Result<IntPolynomial> {
        let n = self.dim();
        for idx in [u, v] {
            if idx == 0 || idx > n {
                return Err(Error::OutOfRange {
                    index: idx,
                    bound: n,
                });
            }
        }
        let minor: Vec<Vec<IntPolynomial>> = (0..n)
            .filter(|&i| i != v - 1)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != u - 1)
                    .map(|j| self.entries[i][j].clone())
                    .collect()
            })
            .collect();
        let det = determinant(&minor).expect("polynomial arithmetic is exact");
        Ok(if (u + v).is_multiple_of(2) { det } else { -det })
    }
}

/// The `(u, v)` entry of `adj(xI - M)`; see [`PolyMatrix::adjugate_entry`].
pub fn adjugate_entry(shifted: &PolyMatrix, u: usize, v: usize) -> Result<IntPolynomial> {
    shifted.adjugate_entry(u, v)
}
