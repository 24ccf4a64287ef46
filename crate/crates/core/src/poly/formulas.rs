//! Closed forms and composition identities for characteristic polynomials
//! of linearly ordered graphs. Each function evaluates the right-hand side
//! of an identity from smaller pieces; the tests compare against the direct
//! computation on the composed graph.

use num_bigint::BigInt;
use num_integer::binomial;

use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::graph::LinearlyOrderedGraph;
use crate::matrix::PolyMatrix;

/// Characteristic polynomial of the ordered path on `n` vertices, from the
/// recurrence `P_n = x P_(n-1) + P_(n-2)` with `P_1 = x`, `P_2 = x^2 + 1`.
/// `n = 0` gives the empty determinant 1.
pub fn path_poly(n: usize) -> IntPolynomial {
    let x = IntPolynomial::x();
    let mut prev = IntPolynomial::one();
    let mut cur = x.clone();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&x * &cur) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Characteristic polynomial of `K_n`: `sum C(n, k) x^k` over `k` with the
/// parity of `n`, i.e. `((x + 1)^n + (x - 1)^n) / 2`.
pub fn complete_poly(n: usize) -> IntPolynomial {
    let coeffs = (0..=n)
        .map(|k| {
            if (n - k).is_multiple_of(2) {
                binomial(BigInt::from(n), BigInt::from(k))
            } else {
                BigInt::from(0)
            }
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// `P(G + uv) = P(G - u - v) + P(G) + θ_uv - θ_vu`, where `θ` is the
/// adjugate of `xI - A(G)`. Requires `v = u + 1` and `u`, `v` non-adjacent.
pub fn poly_add_edge_formula(
    g: &LinearlyOrderedGraph,
    u: usize,
    v: usize,
) -> Result<IntPolynomial> {
    let n = g.n();
    for idx in [u, v] {
        if idx == 0 || idx > n {
            return Err(Error::OutOfRange {
                index: idx,
                bound: n,
            });
        }
    }
    if v != u + 1 {
        return Err(Error::HypothesisViolated(format!(
            "labels {u} and {v} are not consecutive"
        )));
    }
    if g.adjacent(u, v) {
        return Err(Error::HypothesisViolated(format!(
            "vertices {u} and {v} are already adjacent"
        )));
    }
    let shifted = PolyMatrix::shifted(g.skew_adjacency().matrix());
    let theta_uv = shifted.adjugate_entry(u, v)?;
    let theta_vu = shifted.adjugate_entry(v, u)?;
    let without_both = g.delete_vertex(v)?.delete_vertex(u)?;
    Ok(&(&(&without_both.char_poly() + &g.char_poly()) + &theta_uv) - &theta_vu)
}

/// `P(G ⊔ H) = P(G) P(H)`.
pub fn poly_union_formula(g: &LinearlyOrderedGraph, h: &LinearlyOrderedGraph) -> IntPolynomial {
    &g.char_poly() * &h.char_poly()
}

/// `P(G ∇ H) = P(G) P(H) + (P(K1 ∇ G) - x P(G)) (P(K1 ∇ H) - x P(H))`.
pub fn poly_join_formula(g: &LinearlyOrderedGraph, h: &LinearlyOrderedGraph) -> IntPolynomial {
    let x = IntPolynomial::x();
    let k1 = LinearlyOrderedGraph::edgeless(1);
    let pg = g.char_poly();
    let ph = h.char_poly();
    let cone_g = &k1.join(g).char_poly() - &(&x * &pg);
    let cone_h = &k1.join(h).char_poly() - &(&x * &ph);
    &(&pg * &ph) + &(&cone_g * &cone_h)
}

/// Coalescence of `u` in `G` with `v` in `H`:
/// `P(G) P(H - v) + P(G - u) P(H ↔ v) - x P(G - u) P(H - v)`,
/// where `H ↔ v` is the promotion of `v`.
pub fn poly_coalescence_formula(
    g: &LinearlyOrderedGraph,
    u: usize,
    h: &LinearlyOrderedGraph,
    v: usize,
) -> Result<IntPolynomial> {
    let g_minus = g.delete_vertex(u)?.char_poly();
    let h_minus = h.delete_vertex(v)?.char_poly();
    let promoted = h.promote(v)?.char_poly();
    let first = &g.char_poly() * &h_minus;
    let second = &g_minus * &promoted;
    let third = &(&IntPolynomial::x() * &g_minus) * &h_minus;
    Ok(&(&first + &second) - &third)
}

/// `sum_j P(G - j)`, which equals the derivative of `P(G)`.
pub fn derivative_identity_rhs(g: &LinearlyOrderedGraph) -> IntPolynomial {
    (1..=g.n())
        .map(|j| g.delete_vertex(j).expect("vertex in range").char_poly())
        .fold(IntPolynomial::zero(), |acc, p| &acc + &p)
}
