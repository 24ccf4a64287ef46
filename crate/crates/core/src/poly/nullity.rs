use num_bigint::BigInt;
use num_traits::{CheckedDiv, Zero};

use super::charpoly::Ring;
use crate::matrix::IntMatrix;

trait Integral: Ring {
    fn is_zero(&self) -> bool;
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

impl Integral for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        debug_assert_eq!(self % rhs, 0, "Bareiss division must be exact");
        self.checked_div(rhs)
    }
}

impl Integral for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        debug_assert!(
            Zero::is_zero(&(self % rhs)),
            "Bareiss division must be exact"
        );
        CheckedDiv::checked_div(self, rhs)
    }
}

/// Fraction-free (Bareiss) row echelon reduction; returns the rank.
fn bareiss_rank<T: Integral>(mut a: Vec<Vec<T>>, cols: usize) -> Option<usize> {
    let rows = a.len();
    let mut prev = T::ring_one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = row[c].clone();
            for k in c + 1..cols {
                let v = pivot
                    .try_mul(&row[k])?
                    .try_sub(&lead.try_mul(&pivot_row[k])?)?;
                row[k] = v.exact_div(&prev)?;
            }
            row[c] = T::ring_zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals, computed by fraction-free elimination.
pub fn rank_q(m: &IntMatrix) -> usize {
    if let Some(r) = bareiss_rank(m.to_rows(), m.cols()) {
        return r;
    }
    let big = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    bareiss_rank::<BigInt>(big, m.cols()).expect("arbitrary precision cannot overflow")
}

/// Dimension of the right kernel over the rationals (`cols - rank`).
pub fn nullity_q(m: &IntMatrix) -> usize {
    m.cols() - rank_q(m)
}

/// Dimension of the right kernel over the two-element field, reading each
/// entry mod 2. Rows are packed into 64-bit words.
pub fn nullity_z2(m: &IntMatrix) -> usize {
    let cols = m.cols();
    let words = cols.div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            let mut bits = vec![0u64; words];
            for j in 0..cols {
                if m.get(i, j) & 1 == 1 {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    cols - rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_matrix_has_nullity_two() {
        let m = IntMatrix::from_rows(vec![
            vec![0, 1, 1, 0],
            vec![-1, 0, 0, 1],
            vec![-1, 0, 0, 1],
            vec![0, -1, -1, 0],
        ]);
        assert_eq!(nullity_q(&m), 2);
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            nullity_q(&IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]])),
            0
        );
        assert_eq!(nullity_z2(&IntMatrix::from_rows(vec![vec![1]])), 0);
        assert_eq!(nullity_z2(&IntMatrix::from_rows(vec![vec![0]])), 1);
        // Rank 2 over Q, rank 1 over Z2.
        let m = IntMatrix::from_rows(vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(nullity_q(&m), 0);
        assert_eq!(nullity_z2(&m), 1);
        assert_eq!(nullity_q(&IntMatrix::zeros(0, 0)), 0);
    }

    #[test]
    fn rectangular_rank() {
        let m = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(rank_q(&m), 1);
        assert_eq!(nullity_q(&m), 2);
        let m = IntMatrix::from_rows(vec![
            vec![0, 0, 1],
            vec![0, 2, 0],
            vec![0, 0, 5],
            vec![3, 0, 0],
        ]);
        assert_eq!(rank_q(&m), 3);
    }

    #[test]
    fn wide_rows_span_several_words() {
        let n = 130;
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n - 1 {
            m.set(i, i, 1);
            m.set(i, i + 1, 1);
        }
        assert_eq!(nullity_z2(&m), 1);
        assert_eq!(nullity_q(&m), 1);
    }
}
