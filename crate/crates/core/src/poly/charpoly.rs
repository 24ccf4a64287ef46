use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use super::IntPolynomial;
use crate::matrix::IntMatrix;

/// Commutative ring with possibly-failing arithmetic. Fixed-width integers
/// report overflow as `None`; exact types never fail.
pub trait Ring: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn try_add(&self, rhs: &Self) -> Option<Self>;
    fn try_sub(&self, rhs: &Self) -> Option<Self>;
    fn try_mul(&self, rhs: &Self) -> Option<Self>;
}

macro_rules! checked_ring {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn ring_zero() -> Self { <$t as Zero>::zero() }
            fn ring_one() -> Self { <$t as One>::one() }
            fn try_add(&self, rhs: &Self) -> Option<Self> { self.checked_add(rhs) }
            fn try_sub(&self, rhs: &Self) -> Option<Self> { self.checked_sub(rhs) }
            fn try_mul(&self, rhs: &Self) -> Option<Self> { self.checked_mul(rhs) }
        }
    )*};
}
checked_ring!(i64, i128, BigInt);

impl Ring for IntPolynomial {
    fn ring_zero() -> Self {
        IntPolynomial::zero()
    }
    fn ring_one() -> Self {
        IntPolynomial::one()
    }
    fn try_add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
}

/// Berkowitz's division-free algorithm: the coefficients of `det(yI - M)`,
/// constant term first, for a square matrix given row by row.
///
/// The leading `k x k` blocks are processed in turn; the characteristic
/// polynomial of block `k + 1` is a lower-triangular Toeplitz matrix built
/// from `1, -m_kk, -R C, -R A C, ..., -R A^(k-1) C` applied to that of
/// block `k`. Returns `None` if the ring arithmetic fails.
pub fn berkowitz<T: Ring>(m: &[Vec<T>]) -> Option<Vec<T>> {
    let n = m.len();
    // Highest-degree coefficient first while iterating.
    let mut poly: Vec<T> = vec![T::ring_one()];
    for k in 0..n {
        let mut toeplitz: Vec<T> = Vec::with_capacity(k + 2);
        toeplitz.push(T::ring_one());
        toeplitz.push(T::ring_zero().try_sub(&m[k][k])?);
        // v = C, then A v repeatedly, where A is the leading k x k block.
        let mut v: Vec<T> = (0..k).map(|i| m[i][k].clone()).collect();
        for step in 0..k {
            let mut rc = T::ring_zero();
            for (i, vi) in v.iter().enumerate() {
                rc = rc.try_add(&m[k][i].try_mul(vi)?)?;
            }
            toeplitz.push(T::ring_zero().try_sub(&rc)?);
            if step + 1 < k {
                let mut next = Vec::with_capacity(k);
                for row in m.iter().take(k) {
                    let mut acc = T::ring_zero();
                    for (a, vi) in row.iter().zip(&v) {
                        acc = acc.try_add(&a.try_mul(vi)?)?;
                    }
                    next.push(acc);
                }
                v = next;
            }
        }
        let mut next_poly = Vec::with_capacity(k + 2);
        for row in 0..k + 2 {
            let mut acc = T::ring_zero();
            for (col, c) in poly.iter().enumerate() {
                if row >= col {
                    acc = acc.try_add(&toeplitz[row - col].try_mul(c)?)?;
                }
            }
            next_poly.push(acc);
        }
        poly = next_poly;
    }
    poly.reverse();
    Some(poly)
}

/// Determinant of a square matrix over any ring, division-free.
pub fn determinant<T: Ring>(m: &[Vec<T>]) -> Option<T> {
    let coeffs = berkowitz(m)?;
    let c0 = coeffs.into_iter().next().expect("nonempty");
    if m.len() % 2 == 1 {
        T::ring_zero().try_sub(&c0)
    } else {
        Some(c0)
    }
}

/// Characteristic polynomial `det(xI - M)` of a square integer matrix.
///
/// Runs in 64-bit arithmetic with overflow detection and repeats in
/// arbitrary precision only if a machine word overflows, so the result is
/// always exact.
///
/// # Panics
///
/// If `m` is not square.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    assert_eq!(m.rows(), m.cols(), "char_poly needs a square matrix");
    let rows = m.to_rows();
    if let Some(c) = berkowitz(&rows) {
        return IntPolynomial::new(c.into_iter().map(BigInt::from).collect());
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    IntPolynomial::new(berkowitz(&big).expect("arbitrary precision cannot overflow"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    /// Leibniz expansion of det(xI - M) over all permutations.
    fn leibniz_char_poly(m: &IntMatrix) -> IntPolynomial {
        let n = m.rows();
        let entry = |i: usize, j: usize| {
            let c = IntPolynomial::from_i64s(&[-m.get(i, j)]);
            if i == j {
                &c + &IntPolynomial::x()
            } else {
                c
            }
        };
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = IntPolynomial::zero();
        permute(&mut perm, 0, &mut |perm| {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let mut term = IntPolynomial::one();
            for (i, &j) in perm.iter().enumerate() {
                term = &term * &entry(i, j);
            }
            total = if inversions % 2 == 0 {
                &total + &term
            } else {
                &total - &term
            };
        });
        total
    }

    fn permute(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, f);
            perm.swap(k, i);
        }
    }

    #[test]
    fn small_examples() {
        let k2 = IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(char_poly(&k2), p(&[1, 0, 1]));
        let k3 = IntMatrix::from_rows(vec![vec![0, 1, 1], vec![-1, 0, 1], vec![-1, -1, 0]]);
        assert_eq!(char_poly(&k3), p(&[0, 3, 0, 1]));
        assert_eq!(char_poly(&IntMatrix::zeros(3, 3)), p(&[0, 0, 0, 1]));
        assert_eq!(char_poly(&IntMatrix::zeros(0, 0)), p(&[1]));
    }

    #[test]
    fn agrees_with_leibniz_on_general_matrices() {
        let mats = [
            vec![vec![2, -1, 0], vec![4, 3, 7], vec![-5, 1, 1]],
            vec![
                vec![1, 2, 3, 4],
                vec![0, -1, 5, 2],
                vec![3, 3, 3, 3],
                vec![9, -8, 7, -6],
            ],
            vec![vec![7]],
        ];
        for rows in mats {
            let m = IntMatrix::from_rows(rows);
            assert_eq!(char_poly(&m), leibniz_char_poly(&m));
        }
    }

    #[test]
    fn falls_back_to_big_integers_on_overflow() {
        let big = 3_000_000_000i64;
        let m = IntMatrix::from_rows(vec![
            vec![big, big, 0],
            vec![-big, big, big],
            vec![big, -big, big],
        ]);
        assert!(berkowitz(&m.to_rows()).is_none());
        assert_eq!(char_poly(&m), leibniz_char_poly(&m));
    }

    #[test]
    fn polynomial_determinant() {
        // det [[x, 1], [-1, x]] = x^2 + 1
        let m = vec![
            vec![IntPolynomial::x(), p(&[1])],
            vec![p(&[-1]), IntPolynomial::x()],
        ];
        assert_eq!(determinant(&m), Some(p(&[1, 0, 1])));
        assert_eq!(determinant::<i64>(&[]), Some(1));
    }
}
