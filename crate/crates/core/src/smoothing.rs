//! Counting the closed curves of a smoothing.
//!
//! Three independent routes are provided:
//!
//! * [`boundary_count_oracle`] traces the boundary of the band surface
//!   directly (a disk with one band per smoothed chord, untwisted for an
//!   oriented smoothing and half-twisted for an unoriented one);
//! * [`loop_count_rlcp`] uses the rational nullity of the skew-adjacency
//!   matrix, passing through a double cover when some smoothing is
//!   unoriented;
//! * [`loop_count_zlcp`] uses the nullity over the two-element field of the
//!   symmetric adjacency matrix plus the unoriented diagonal.

use serde::{Deserialize, Serialize};

use crate::diagram::{double_cover, ChordDiagram, Flavor, Label, PartialState, Smoothing};
use crate::error::{Error, Result};
use crate::graph::interlacement_graph;
use crate::matrix::IntMatrix;
use crate::poly::{char_poly, nullity_q, nullity_z2, rank_q};

/// Which of the two sides of a band a boundary component runs along. A
/// band over chord `c` with endpoints `a < b` leaves the circle at the two
/// corners just before and just after `a`; the side is named by the corner
/// it uses at `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// Uses the corner just before `a`.
    Leading,
    /// Uses the corner just after `a`.
    Trailing,
}

/// One traversal of a band side by a boundary component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandSide {
    /// Label in the input diagram.
    pub chord: Label,
    pub side: Side,
    /// `+1` for the leading side and `-1` for the trailing side of an
    /// untwisted band; `None` on a half-twisted band, whose sides are
    /// not consistently oriented.
    pub sigma: Option<i8>,
}

/// The boundary components of the band surface, each given by the band
/// sides it runs along in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryTrace {
    pub components: Vec<Vec<BandSide>>,
}

impl BoundaryTrace {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

/// Traces the boundary of the band surface of `d` under `s`.
///
/// Erased chords are dropped. The `2k` endpoints of the remaining chords
/// cut the circle into `2k` arcs; each endpoint `p` owns two corners, one
/// just before it and one just after it, and the arc from `p` to the next
/// endpoint joins the corner after `p` to the corner before the next one.
/// An untwisted band over `a < b` joins before-`a` to after-`b` and
/// after-`a` to before-`b`; a half-twisted band joins before-`a` to
/// before-`b` and after-`a` to after-`b`. The boundary components are the
/// cycles that alternate between arc and band edges.
pub fn boundary_count_oracle(d: &ChordDiagram, s: &PartialState) -> Result<BoundaryTrace> {
    s.check_against(d)?;
    let positions: Vec<usize> = (0..2 * d.len())
        .filter(|&p| s.get(d.word()[p]) != Smoothing::Erased)
        .collect();
    let len = positions.len();
    if len == 0 {
        return Ok(BoundaryTrace {
            components: vec![Vec::new()],
        });
    }
    // Index of every kept position among the kept positions.
    let mut compact = vec![usize::MAX; 2 * d.len()];
    for (i, &p) in positions.iter().enumerate() {
        compact[p] = i;
    }
    let before = |i: usize| 2 * i;
    let after = |i: usize| 2 * i + 1;

    let mut arc = vec![0; 2 * len];
    for i in 0..len {
        let next = (i + 1) % len;
        arc[after(i)] = before(next);
        arc[before(next)] = after(i);
    }
    let mut band = vec![0; 2 * len];
    // The band side each corner belongs to.
    let mut side_of = vec![None; 2 * len];
    for chord in 1..=d.len() {
        let kind = s.get(chord);
        if kind == Smoothing::Erased {
            continue;
        }
        let [a, b] = d.endpoints(chord).map(|p| compact[p]);
        let (lead_end, trail_end) = match kind {
            Smoothing::Oriented => (after(b), before(b)),
            _ => (before(b), after(b)),
        };
        let sigma = |v: i8| (kind == Smoothing::Oriented).then_some(v);
        let leading = BandSide {
            chord,
            side: Side::Leading,
            sigma: sigma(1),
        };
        let trailing = BandSide {
            chord,
            side: Side::Trailing,
            sigma: sigma(-1),
        };
        for (x, y, side) in [
            (before(a), lead_end, leading),
            (after(a), trail_end, trailing),
        ] {
            band[x] = y;
            band[y] = x;
            side_of[x] = Some(side);
            side_of[y] = Some(side);
        }
    }

    let mut seen = vec![false; 2 * len];
    let mut components = Vec::new();
    for start in 0..2 * len {
        if seen[start] {
            continue;
        }
        let mut trace = Vec::new();
        let mut corner = start;
        loop {
            seen[corner] = true;
            let across = arc[corner];
            seen[across] = true;
            trace.push(side_of[across].expect("every corner lies on a band"));
            corner = band[across];
            if corner == start {
                break;
            }
        }
        components.push(trace);
    }
    Ok(BoundaryTrace { components })
}

/// `m0(det(xI - A)) + 1` for the skew-adjacency matrix `A` of a diagram
/// smoothed entirely with oriented smoothings.
fn all_oriented_count_by_char_poly(d: &ChordDiagram) -> usize {
    let skew = interlacement_graph(d).skew_adjacency();
    char_poly(skew.matrix())
        .m0()
        .expect("characteristic polynomials are monic")
        + 1
}

/// `nullity(A) + 1` over the rationals.
fn all_oriented_count_by_nullity(d: &ChordDiagram) -> usize {
    nullity_q(interlacement_graph(d).skew_adjacency().matrix()) + 1
}

/// Curve count of the double cover `D_j` of `d` under `s`, whose state is
/// all-oriented by construction.
pub fn cover_count(d: &ChordDiagram, s: &PartialState, j: Label, flavor: Flavor) -> Result<usize> {
    let cover = double_cover(d, s, j, flavor)?;
    assert!(
        !cover.state.has_unoriented() && !cover.state.has_erased(),
        "the cover state is all-oriented"
    );
    Ok(all_oriented_count_by_nullity(&cover.diagram))
}

/// Loop count by rational nullity.
///
/// Without unoriented smoothings the count is one more than the
/// multiplicity of zero as a root of the characteristic polynomial of the
/// smoothed sub-diagram. Otherwise the count is half the all-oriented count
/// of the double cover `D_j` for the smallest unoriented chord `j`. Debug
/// builds also build the other flavor of cover and check the two agree.
pub fn loop_count_rlcp(d: &ChordDiagram, s: &PartialState) -> Result<usize> {
    s.check_against(d)?;
    let unoriented = s.unoriented();
    let Some(&j) = unoriented.first() else {
        let (kept, _) = d.restrict(|l| s.get(l) != Smoothing::Erased);
        return Ok(all_oriented_count_by_char_poly(&kept));
    };
    let doubled = cover_count(d, s, j, Flavor::First)?;
    if doubled % 2 == 1 {
        return Err(Error::OddCoverCount(doubled));
    }
    #[cfg(debug_assertions)]
    {
        let other = cover_count(d, s, j, Flavor::Second)?;
        if other != doubled {
            return Err(Error::MethodDisagreement(format!(
                "cover flavors give {doubled} and {other} for {d} under {s}"
            )));
        }
    }
    Ok(doubled / 2)
}

/// Loop count by nullity over the two-element field of `A + Δ`, where `A`
/// is the symmetric adjacency matrix of the interlacement graph and `Δ` is
/// diagonal with a 1 for each unoriented chord. Every chord must be
/// smoothed.
pub fn loop_count_zlcp(d: &ChordDiagram, s: &PartialState) -> Result<usize> {
    s.check_against(d)?;
    if s.has_erased() {
        return Err(Error::HasErasedChords);
    }
    let mut m = interlacement_graph(d).adjacency();
    for l in s.unoriented() {
        m.set(l - 1, l - 1, 1);
    }
    Ok(nullity_z2(&m) + 1)
}

/// One integer vector per boundary component of an oriented smoothing,
/// `θ_C = Σ σ e_c` over the band sides `c` the component runs along.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaVectors {
    /// Chords of the input diagram indexing the coordinates, in the order of
    /// the smoothed sub-diagram's labels.
    pub chords: Vec<Label>,
    pub vectors: Vec<Vec<i64>>,
}

impl ThetaVectors {
    /// Drops the first vector whose removal keeps the rank, which leaves a
    /// basis of the span.
    pub fn basis(&self) -> Vec<Vec<i64>> {
        let full = vectors_rank(&self.vectors, self.chords.len());
        for skip in 0..self.vectors.len() {
            let rest: Vec<Vec<i64>> = self
                .vectors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, v)| v.clone())
                .collect();
            if vectors_rank(&rest, self.chords.len()) == full && rest.len() == full {
                return rest;
            }
        }
        self.vectors.clone()
    }

    pub fn rank(&self) -> usize {
        vectors_rank(&self.vectors, self.chords.len())
    }
}

fn vectors_rank(vectors: &[Vec<i64>], dim: usize) -> usize {
    if vectors.is_empty() || dim == 0 {
        return 0;
    }
    rank_q(&IntMatrix::from_rows(vectors.to_vec()))
}

/// The vectors `θ_C` of an oriented (possibly partial) smoothing. They lie
/// in the kernel of the skew-adjacency matrix of the smoothed sub-diagram
/// and span it.
pub fn kernel_basis_theta(d: &ChordDiagram, s: &PartialState) -> Result<ThetaVectors> {
    s.check_against(d)?;
    if s.has_unoriented() {
        return Err(Error::HasUnoriented);
    }
    let trace = boundary_count_oracle(d, s)?;
    let (_, chords) = d.restrict(|l| s.get(l) != Smoothing::Erased);
    let mut index = vec![usize::MAX; d.len()];
    for (i, &c) in chords.iter().enumerate() {
        index[c - 1] = i;
    }
    let vectors = trace
        .components
        .iter()
        .map(|component| {
            let mut v = vec![0i64; chords.len()];
            for side in component {
                v[index[side.chord - 1]] += i64::from(side.sigma.expect("oriented band"));
            }
            v
        })
        .collect();
    Ok(ThetaVectors { chords, vectors })
}

/// Which states [`enumerate_states`] produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateFilter {
    /// Exactly `m` smoothed chords, `unoriented` of them unoriented.
    Census { m: usize, unoriented: usize },
    /// Every state with no erased chord (`2^n`).
    Full,
    /// Every partial state (`3^n`).
    All,
}

/// Lexicographic `k`-subsets of `0..n`.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }

    /// Starts at the subset of lexicographic rank `rank`.
    pub fn from_rank(n: usize, k: usize, mut rank: u128) -> Self {
        if k > n || rank >= binomial(n, k) {
            return Combinations { n, current: None };
        }
        let mut subset = Vec::with_capacity(k);
        let mut next = 0;
        for remaining in (1..=k).rev() {
            // Skip candidates whose block of subsets lies before `rank`.
            loop {
                let block = binomial(n - next - 1, remaining - 1);
                if rank < block {
                    break;
                }
                rank -= block;
                next += 1;
            }
            subset.push(next);
            next += 1;
        }
        Combinations {
            n,
            current: Some(subset),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut succ = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if succ[i] < self.n - k + i {
                succ[i] += 1;
                for t in i + 1..k {
                    succ[t] = succ[t - 1] + 1;
                }
                self.current = Some(succ);
                return Some(out);
            }
        }
        Some(out)
    }
}

/// `C(n, k)` as a `u128`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of states [`enumerate_states`] yields.
pub fn state_count(n: usize, filter: StateFilter) -> u128 {
    match filter {
        StateFilter::Census { m, unoriented } => binomial(n, m) * binomial(m, unoriented),
        StateFilter::Full => 1u128 << n,
        StateFilter::All => 3u128.pow(n as u32),
    }
}

/// The census state for a smoothed set (indices into `0..n`) and the
/// positions within it that are unoriented.
pub fn census_state(n: usize, smoothed: &[usize], unoriented: &[usize]) -> PartialState {
    let mut choices = vec![Smoothing::Erased; n];
    for &c in smoothed {
        choices[c] = Smoothing::Oriented;
    }
    for &u in unoriented {
        choices[smoothed[u]] = Smoothing::Unoriented;
    }
    PartialState::new(choices)
}

/// Every state on `n` chords admitted by `filter`, each exactly once.
pub fn enumerate_states(
    n: usize,
    filter: StateFilter,
) -> Result<Box<dyn Iterator<Item = PartialState>>> {
    match filter {
        StateFilter::Census { m, unoriented } => {
            if m > n {
                return Err(Error::OutOfRange { index: m, bound: n });
            }
            if unoriented > m {
                return Err(Error::OutOfRange {
                    index: unoriented,
                    bound: m,
                });
            }
            Ok(Box::new(Combinations::new(n, m).flat_map(
                move |smoothed| {
                    Combinations::new(m, unoriented).map(move |u| census_state(n, &smoothed, &u))
                },
            )))
        }
        StateFilter::Full => Ok(Box::new((0u64..1 << n).map(move |mask| {
            PartialState::new(
                (0..n)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            Smoothing::Unoriented
                        } else {
                            Smoothing::Oriented
                        }
                    })
                    .collect(),
            )
        }))),
        StateFilter::All => Ok(Box::new((0u64..3u64.pow(n as u32)).map(move |mut code| {
            PartialState::new(
                (0..n)
                    .map(|_| {
                        let c = code % 3;
                        code /= 3;
                        [
                            Smoothing::Oriented,
                            Smoothing::Unoriented,
                            Smoothing::Erased,
                        ][c as usize]
                    })
                    .collect(),
            )
        }))),
    }
}
