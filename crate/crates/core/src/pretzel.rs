//! Smoothing censuses of pretzel knots: closed forms for the number of ways
//! to smooth `m` crossings (with zero or one unoriented smoothing) so that a
//! single curve remains, a brute-force census to check them against, and the
//! graph families whose characteristic polynomials the closed forms are
//! built from.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{pretzel_code, ChordDiagram};
use crate::error::{Error, Result};
use crate::graph::LinearlyOrderedGraph;
use crate::smoothing::{binomial, boundary_count_oracle, census_state, Combinations};

/// Twist counts of the pretzel knot `L(p, q, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PretzelParams {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

impl PretzelParams {
    /// Errors unless all parameters are nonzero and at most one is even.
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        if p == 0 || q == 0 || r == 0 {
            return Err(Error::ZeroParameter);
        }
        if [p, q, r].iter().filter(|x| *x % 2 == 0).count() > 1 {
            return Err(Error::InvalidPretzel(p, q, r));
        }
        Ok(PretzelParams { p, q, r })
    }

    /// `(|p|, |q|, |r|)`
    pub fn sizes(&self) -> (u64, u64, u64) {
        (
            self.p.unsigned_abs(),
            self.q.unsigned_abs(),
            self.r.unsigned_abs(),
        )
    }

    pub fn crossings(&self) -> u64 {
        let (a, b, c) = self.sizes();
        a + b + c
    }

    pub fn all_odd(&self) -> bool {
        [self.p, self.q, self.r].iter().all(|x| x % 2 != 0)
    }

    pub fn diagram(&self) -> ChordDiagram {
        pretzel_code(self.p, self.q, self.r).expect("parameters validated")
    }
}

impl fmt::Display for PretzelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.q, self.r)
    }
}

/// `C(n, k)` for signed arguments, zero outside `0 <= k <= n`.
fn choose(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as usize, k as usize)
    }
}

fn check_m(params: &PretzelParams, m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::OutOfRange {
            index: 0,
            bound: params.crossings() as usize,
        });
    }
    Ok(())
}

/// Sizes ordered so the even one (if any) comes first.
fn even_first(params: &PretzelParams) -> (i64, i64, i64) {
    let (p, q, r) = params.sizes();
    let (p, q, r) = (p as i64, q as i64, r as i64);
    if q % 2 == 0 {
        (q, p, r)
    } else if r % 2 == 0 {
        (r, p, q)
    } else {
        (p, q, r)
    }
}

/// Number of ways to smooth `m` crossings of `L(p, q, r)`, all oriented,
/// leaving one curve. `m` beyond the crossing count gives 0.
pub fn n0_closed(params: &PretzelParams, m: u64) -> Result<u128> {
    check_m(params, m)?;
    if m > params.crossings() {
        return Ok(0);
    }
    let (p, q, r) = even_first(params);
    let m = m as i64;
    if params.all_odd() {
        return Ok(if m == 2 {
            (p * q + q * r + r * p) as u128
        } else {
            0
        });
    }
    if m == 1 || m % 2 == 1 {
        return Ok(0);
    }
    let p = p as u128;
    Ok((0..=m / 2)
        .map(|k| {
            choose(q, 2 * k) * choose(r, m - 2 * k)
                + p * choose(q, 2 * k) * choose(r, m - 1 - 2 * k)
                + p * choose(r, 2 * k) * choose(q, m - 1 - 2 * k)
        })
        .sum())
}

/// How to read the one-even, odd-`m` formula for one unoriented smoothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    /// The term for an unoriented chord among the even family with one
    /// parallel oriented chord carries the factor `P`, as printed.
    #[default]
    Printed,
    /// The same term carries `P (P - 1)`: `P` choices for the unoriented
    /// chord and `P - 1` for the parallel one. This is what the census
    /// supports; the two readings coincide for `P = 2`.
    Corrected,
}

/// Number of ways to smooth `m` crossings of `L(p, q, r)`, exactly one of
/// them unoriented, leaving one curve. `m` beyond the crossing count gives 0.
pub fn n1_closed(params: &PretzelParams, m: u64) -> Result<u128> {
    n1_closed_with(params, m, Reading::Printed)
}

/// [`n1_closed`] with an explicit [`Reading`] of the one-even formula.
pub fn n1_closed_with(params: &PretzelParams, m: u64, reading: Reading) -> Result<u128> {
    check_m(params, m)?;
    if m > params.crossings() {
        return Ok(0);
    }
    let (pi, qi, ri) = even_first(params);
    let (p, q, r) = (pi as u128, qi as u128, ri as u128);
    if m == 1 {
        return Ok(p + q + r);
    }
    let mi = m as i64;
    if params.all_odd() {
        return Ok(match m {
            2 => 2 * (p * q + q * r + r * p),
            3 => {
                3 * p * q * r
                    + 2 * choose(pi, 2) * (q + r)
                    + 2 * choose(qi, 2) * (p + r)
                    + 2 * choose(ri, 2) * (p + q)
            }
            _ => 0,
        });
    }
    // Unoriented chord among the q chords, then among the r chords.
    let mixed = |own: i64, other: i64| -> u128 {
        let with_even: u128 = (0..=mi - 2)
            .map(|k| choose(own - 1, k) * choose(other, mi - 2 - k))
            .sum();
        let without_even: u128 = (0..=(mi - 1) / 2)
            .map(|k| choose(other, 2 * k) * choose(own - 1, mi - 1 - 2 * k))
            .sum();
        p * own as u128 * with_even + own as u128 * without_even
    };
    let odd_parts = mixed(qi, ri) + mixed(ri, qi);
    let even_part = if m.is_multiple_of(2) {
        p * (0..=(mi - 2) / 2)
            .map(|k| {
                choose(qi, 2 * k) * choose(ri, mi - 1 - 2 * k)
                    + choose(qi, mi - 1 - 2 * k) * choose(ri, 2 * k)
            })
            .sum::<u128>()
    } else {
        let none_parallel: u128 = (0..=(mi - 1) / 2)
            .map(|k| choose(qi, 2 * k) * choose(ri, mi - 1 - 2 * k))
            .sum();
        let one_parallel: u128 = (0..=(mi - 3) / 2)
            .map(|k| {
                choose(qi, 2 * k) * choose(ri, mi - 2 - 2 * k)
                    + choose(qi, mi - 2 - 2 * k) * choose(ri, 2 * k)
            })
            .sum();
        let parallel_factor = match reading {
            Reading::Printed => p,
            Reading::Corrected => p * (p - 1),
        };
        p * none_parallel + parallel_factor * one_parallel
    };
    Ok(even_part + odd_parts)
}

/// Closed form for `j` unoriented smoothings, where one is known.
pub fn closed_form(
    params: &PretzelParams,
    m: u64,
    j: u64,
    reading: Reading,
) -> Result<Option<u128>> {
    match j {
        0 => n0_closed(params, m).map(Some),
        1 => n1_closed_with(params, m, reading).map(Some),
        _ => Ok(None),
    }
}

/// Number of states of `d` with `m` smoothed chords, `j` of them
/// unoriented, that leave exactly one curve.
pub fn census_count(d: &ChordDiagram, m: usize, j: usize) -> u128 {
    let n = d.len();
    if m > n || j > m {
        return 0;
    }
    let total = binomial(n, m);
    let chunks = (rayon::current_num_threads() as u128 * 4).clamp(1, total.max(1));
    let per_chunk = total.div_ceil(chunks);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * per_chunk;
            let len = per_chunk.min(total.saturating_sub(start));
            Combinations::from_rank(n, m, start)
                .take(len as usize)
                .map(|smoothed| {
                    Combinations::new(m, j)
                        .filter(|u| {
                            let s = census_state(n, &smoothed, u);
                            boundary_count_oracle(d, &s)
                                .expect("state sized to the diagram")
                                .component_count()
                                == 1
                        })
                        .count() as u128
                })
                .sum::<u128>()
        })
        .sum()
}

/// One line of a census: the closed form (when `j` is 0 or 1) next to the
/// brute-force count. Either side may be left out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub params: PretzelParams,
    pub m: u64,
    pub j: u64,
    pub closed_form: Option<u128>,
    pub brute_force: Option<u128>,
    /// `None` unless both sides are present.
    pub agrees: Option<bool>,
}

/// Which sides of a census row to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CensusMode {
    #[default]
    Both,
    ClosedOnly,
    CensusOnly,
}

pub fn census_row(params: &PretzelParams, m: u64, j: u64, mode: CensusMode) -> Result<CensusRow> {
    census_row_with(params, m, j, mode, Reading::Printed)
}

pub fn census_row_with(
    params: &PretzelParams,
    m: u64,
    j: u64,
    mode: CensusMode,
    reading: Reading,
) -> Result<CensusRow> {
    if j > m {
        return Err(Error::OutOfRange {
            index: j as usize,
            bound: m as usize,
        });
    }
    // The closed forms start at one smoothed crossing.
    let closed_form = if mode == CensusMode::CensusOnly || m == 0 {
        None
    } else {
        closed_form(params, m, j, reading)?
    };
    let brute_force = (mode != CensusMode::ClosedOnly)
        .then(|| census_count(&params.diagram(), m as usize, j as usize));
    let agrees = match (closed_form, brute_force) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    Ok(CensusRow {
        params: *params,
        m,
        j,
        closed_form,
        brute_force,
        agrees,
    })
}

/// Full census with both sides computed.
pub fn census(params: &PretzelParams, m: u64, j: u64) -> Result<CensusRow> {
    census_row(params, m, j, CensusMode::Both)
}

/// Census rows for every `1 <= m <= crossings` and `j` in `{0, 1}`.
pub fn sweep(params: &PretzelParams, mode: CensusMode) -> Result<Vec<CensusRow>> {
    sweep_with(params, mode, Reading::Printed)
}

pub fn sweep_with(
    params: &PretzelParams,
    mode: CensusMode,
    reading: Reading,
) -> Result<Vec<CensusRow>> {
    let mut rows = Vec::new();
    for m in 1..=params.crossings() {
        for j in 0..=1 {
            rows.push(census_row_with(params, m, j, mode, reading)?);
        }
    }
    Ok(rows)
}

/// A census row where the closed form and the enumeration differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub params: PretzelParams,
    pub m: u64,
    pub j: u64,
    pub closed_form: u128,
    pub brute_force: u128,
    /// Which branch of the closed form produced the value.
    pub branch: String,
}

/// Name of the closed-form branch used for `(params, m, j)`.
pub fn branch_name(params: &PretzelParams, m: u64, j: u64) -> String {
    let parity = if params.all_odd() {
        "all odd"
    } else {
        "one even"
    };
    let m_case = if m > params.crossings() {
        "m above crossing count".to_string()
    } else if m == 1 {
        "m = 1".to_string()
    } else if params.all_odd() {
        match (j, m) {
            (0, 2) | (1, 2) | (1, 3) => format!("m = {m}"),
            (0, _) => "m != 2".to_string(),
            _ => "m > 3".to_string(),
        }
    } else if m.is_multiple_of(2) {
        "m even".to_string()
    } else {
        "m odd".to_string()
    };
    format!("N{j}, {parity}, {m_case}")
}

/// The rows of `rows` that disagree.
pub fn discrepancies(rows: &[CensusRow]) -> Vec<Discrepancy> {
    rows.iter()
        .filter_map(|row| match (row.closed_form, row.brute_force) {
            (Some(c), Some(b)) if c != b => Some(Discrepancy {
                params: row.params,
                m: row.m,
                j: row.j,
                closed_form: c,
                brute_force: b,
                branch: branch_name(&row.params, row.m, row.j),
            }),
            _ => None,
        })
        .collect()
}

/// The four graph families whose characteristic polynomials feed the closed
/// forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphFamily {
    /// `K(α+1)` and `K(β+1)` coalesced at their vertices labelled 1.
    TwoCliques,
    /// Two copies of [`GraphFamily::TwoCliques`] coalesced at vertex 1.
    FourCliques,
    /// `H = K2 ∇ (Kα ⊔ Kβ)` with the edge `{1, 2}` removed, then vertex 2 of
    /// one copy of `H` coalesced with vertex 1 of another.
    ParallelPair,
    /// `K(α+1)` with its highest vertex coalesced to vertex 1 of `K(β+1)`,
    /// then two copies coalesced at vertex 1.
    OffsetCliques,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 4] = [
        GraphFamily::TwoCliques,
        GraphFamily::FourCliques,
        GraphFamily::ParallelPair,
        GraphFamily::OffsetCliques,
    ];

    /// Short name accepted by [`FromStr`]: `two-cliques`, `four-cliques`,
    /// `parallel-pair` or `offset-cliques`.
    pub fn tag(self) -> &'static str {
        match self {
            GraphFamily::TwoCliques => "two-cliques",
            GraphFamily::FourCliques => "four-cliques",
            GraphFamily::ParallelPair => "parallel-pair",
            GraphFamily::OffsetCliques => "offset-cliques",
        }
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphFamily::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::HypothesisViolated(format!("unknown graph family {s:?}")))
    }
}

pub fn family_graph(which: GraphFamily, alpha: usize, beta: usize) -> Result<LinearlyOrderedGraph> {
    let k = LinearlyOrderedGraph::complete;
    match which {
        GraphFamily::TwoCliques => k(alpha + 1).coalesce(1, &k(beta + 1), 1),
        GraphFamily::FourCliques => {
            let h = k(alpha + 1).coalesce(1, &k(beta + 1), 1)?;
            h.coalesce(1, &h, 1)
        }
        GraphFamily::ParallelPair => {
            let h1 = k(2).join(&k(alpha).disjoint_union(&k(beta)));
            let h2 = h1.remove_edge(1, 2)?;
            h2.coalesce(2, &h2, 1)
        }
        GraphFamily::OffsetCliques => {
            let h = k(alpha + 1).coalesce(alpha + 1, &k(beta + 1), 1)?;
            h.coalesce(1, &h, 1)
        }
    }
}

/// Exact quotient, or an error naming the expression.
fn exact(num: i128, den: i128, what: &str) -> Result<i128> {
    if num % den != 0 {
        return Err(Error::NonIntegral(format!("{what} = {num}/{den}")));
    }
    Ok(num / den)
}

/// Closed-form `(P(0), P'(0))` for the characteristic polynomial of
/// [`family_graph`].
pub fn family_values(which: GraphFamily, alpha: usize, beta: usize) -> Result<(i128, i128)> {
    let sign = |e: usize| if e.is_multiple_of(2) { 1i128 } else { -1 };
    let (a, b) = (alpha as i128, beta as i128);
    let what = |v: &str| format!("{v} for family {} at ({alpha}, {beta})", which.tag());
    match which {
        GraphFamily::TwoCliques => {
            let at_zero = exact(1 - sign(alpha + beta), 2, &what("P(0)"))?;
            let slope = exact(
                1 + sign(alpha)
                    + sign(beta)
                    + 2 * a
                    + 2 * b
                    + sign(alpha + beta) * (1 + 2 * a + 2 * b),
                4,
                &what("P'(0)"),
            )?;
            Ok((at_zero, slope))
        }
        GraphFamily::FourCliques => {
            let ea = 1 + sign(alpha);
            let eb = 1 + sign(beta);
            let at_zero = exact(
                ea * eb * ((1 + sign(alpha + 1)) * eb + ea * (1 + sign(beta + 1))),
                8,
                &what("P(0)"),
            )?;
            let slope = exact(
                8 * a * eb * (1 + sign(2 * alpha + beta))
                    + ea * (ea * eb * eb + 8 * b * (1 + sign(alpha + 2 * beta))),
                16,
                &what("P'(0)"),
            )?;
            Ok((at_zero, slope))
        }
        GraphFamily::ParallelPair => {
            let d = -1 + sign(alpha + beta);
            Ok((0, exact(3 * d * d, 4, &what("P'(0)"))?))
        }
        GraphFamily::OffsetCliques => {
            let slope = exact(
                -1 + sign(beta)
                    + sign(alpha)
                    + 2 * sign(alpha + beta)
                    + sign(2 * alpha + beta)
                    + sign(alpha + 2 * beta)
                    + 8 * a
                    + 8 * b,
                4,
                &what("P'(0)"),
            )?;
            Ok((0, slope))
        }
    }
}

/// `(P(0), P'(0))` computed from the constructed graph.
pub fn family_values_direct(which: GraphFamily, alpha: usize, beta: usize) -> Result<(i128, i128)> {
    use num_traits::ToPrimitive;
    let poly = family_graph(which, alpha, beta)?.char_poly();
    let at_zero = poly.coeff(0).to_i128().expect("small value");
    let slope = poly.coeff(1).to_i128().expect("small value");
    Ok((at_zero, slope))
}
