//! Linearly ordered graphs: simple graphs on vertices `1..=n` whose edges
//! are implicitly directed from the lower label to the higher one.
//!
//! Edges are stored undirected; the direction is always derived from the
//! labels.

use std::fmt;
use std::str::FromStr;

use crate::diagram::ChordDiagram;
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, SkewMatrix};
use crate::poly::{char_poly, IntPolynomial};

pub use crate::matrix::adjugate_entry;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearlyOrderedGraph {
    n: usize,
    adj: Vec<bool>,
}

impl LinearlyOrderedGraph {
    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        LinearlyOrderedGraph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n);
        for &(u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::MalformedGraph(format!("loop at vertex {u}")));
            }
            if g.adjacent(u, v) {
                return Err(Error::EdgeExists(u.min(v), u.max(v)));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    /// `K_n` with its natural labelling.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.set(u, v, true);
            }
        }
        g
    }

    /// The ordered path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 1..n {
            g.set(u, u + 1, true);
        }
        g
    }

    /// Every labelled simple graph on `n` vertices (`2^(n(n-1)/2)` of them).
    pub fn all_labelled(n: usize) -> impl Iterator<Item = Self> {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        assert!(pairs.len() < 40, "too many graphs to enumerate");
        (0u64..1 << pairs.len()).map(move |mask| {
            let mut g = Self::edgeless(n);
            for (bit, &(u, v)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    g.set(u, v, true);
                }
            }
            g
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::OutOfRange {
                index: v,
                bound: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        self.adj[(u - 1) * self.n + v - 1] = on;
        self.adj[(v - 1) * self.n + u - 1] = on;
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[(u - 1) * self.n + v - 1]
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|u| (u + 1..=self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adjacent(u, v))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.adjacent(u, v)).collect()
    }

    pub fn degree(&self, u: usize) -> usize {
        (1..=self.n).filter(|&v| self.adjacent(u, v)).count()
    }

    /// Symmetric 0/1 adjacency matrix.
    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for (u, v) in self.edges() {
            m.set(u - 1, v - 1, 1);
            m.set(v - 1, u - 1, 1);
        }
        m
    }

    /// Entry `(i, j)` is `+1` if `i ~ j` and `i < j`, `-1` if `i ~ j` and
    /// `i > j`, and `0` otherwise.
    pub fn skew_adjacency(&self) -> SkewMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for (u, v) in self.edges() {
            m.set(u - 1, v - 1, 1);
            m.set(v - 1, u - 1, -1);
        }
        SkewMatrix::new_unchecked(m)
    }

    /// `det(xI - A)` for the skew-adjacency matrix `A`.
    pub fn char_poly(&self) -> IntPolynomial {
        char_poly(self.skew_adjacency().matrix())
    }

    /// Relabels by `perm`, where `perm[old - 1]` is the new label.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::edgeless(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u - 1], perm[v - 1], true);
        }
        g
    }

    /// Removes `v`; labels above `v` move down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check(v)?;
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let mut g = Self::edgeless(self.n - 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.set(shift(a), shift(b), true);
            }
        }
        Ok(g)
    }

    /// Adds the edge `{u, v}` (directed from the lower label).
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::MalformedGraph(format!("loop at vertex {u}")));
        }
        if self.adjacent(u, v) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set(u, v, true);
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check(u)?;
        self.check(v)?;
        if u == v || !self.adjacent(u, v) {
            return Err(Error::EdgeMissing(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set(u, v, false);
        Ok(g)
    }

    /// `self ⊔ other`, with `other`'s labels shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let n1 = self.n;
        let mut g = Self::edgeless(n1 + other.n);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(u + n1, v + n1, true);
        }
        g
    }

    /// Disjoint union plus every edge between the two parts; the new edges
    /// run from `self` to `other`.
    pub fn join(&self, other: &Self) -> Self {
        let mut g = self.disjoint_union(other);
        for u in 1..=self.n {
            for v in 1..=other.n {
                g.set(u, self.n + v, true);
            }
        }
        g
    }

    /// Identifies vertex `u` of `self` with vertex `v` of `other`.
    ///
    /// Vertices of `self` keep their labels (the merged vertex is `u`); a
    /// vertex of `other - v` with label `l` there becomes `l + self.n()`.
    pub fn coalesce(&self, u: usize, other: &Self, v: usize) -> Result<Self> {
        self.check(u)?;
        other.check(v)?;
        let n1 = self.n;
        let place = |w: usize| {
            if w == v {
                u
            } else if w > v {
                w - 1 + n1
            } else {
                w + n1
            }
        };
        let mut g = Self::edgeless(n1 + other.n - 1);
        for (a, b) in self.edges() {
            g.set(a, b, true);
        }
        for (a, b) in other.edges() {
            g.set(place(a), place(b), true);
        }
        Ok(g)
    }

    /// The promotion of `u`: `u` is removed and replaced by a new vertex
    /// labelled 1 with the same neighbours; vertices below `u` move up by one.
    pub fn promote(&self, u: usize) -> Result<Self> {
        self.check(u)?;
        let perm: Vec<usize> = (1..=self.n)
            .map(|w| match w.cmp(&u) {
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Less => w + 1,
                std::cmp::Ordering::Greater => w,
            })
            .collect();
        Ok(self.relabel(&perm))
    }
}

/// Intersection graph of a chord diagram, labelled by the diagram's labels:
/// `{i, j}` is an edge iff exactly one endpoint of `j` lies strictly between
/// the endpoints of `i`.
pub fn interlacement_graph(d: &ChordDiagram) -> LinearlyOrderedGraph {
    let n = d.len();
    let mut g = LinearlyOrderedGraph::edgeless(n);
    // Sweep the word keeping the set of open chords; closing chord i crosses
    // exactly the chords opened after i that are still open.
    let mut open: Vec<usize> = Vec::with_capacity(n);
    for (pos, &l) in d.word().iter().enumerate() {
        if d.endpoints(l)[0] == pos {
            open.push(l);
        } else {
            let at = open.iter().position(|&x| x == l).expect("chord was opened");
            for &other in &open[at + 1..] {
                g.set(l, other, true);
            }
            open.remove(at);
        }
    }
    g
}

pub fn skew_adjacency(g: &LinearlyOrderedGraph) -> SkewMatrix {
    g.skew_adjacency()
}

impl fmt::Display for LinearlyOrderedGraph {
    /// First line `n`, then one `u v` line per edge with `u < v`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for (u, v) in self.edges() {
            write!(f, "\n{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for LinearlyOrderedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::MalformedGraph("missing vertex count".into()))?
            .parse()
            .map_err(|_| Error::MalformedGraph("bad vertex count".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::MalformedGraph(format!("bad edge line {line:?}")))
                })
                .collect::<Result<_>>()?;
            match nums[..] {
                [u, v] => edges.push((u, v)),
                _ => return Err(Error::MalformedGraph(format!("bad edge line {line:?}"))),
            }
        }
        Self::from_edges(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> LinearlyOrderedGraph {
        LinearlyOrderedGraph::from_edges(n, e).unwrap()
    }

    /// Interlacement straight from the definition, independent of the sweep.
    fn interlacement_by_definition(d: &ChordDiagram) -> LinearlyOrderedGraph {
        let n = d.len();
        let mut out = LinearlyOrderedGraph::edgeless(n);
        for i in 1..=n {
            for j in i + 1..=n {
                if d.interlaced(i, j) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    #[test]
    fn interlacement_examples() {
        let one = interlacement_graph(&"1 1".parse().unwrap());
        assert_eq!(one, LinearlyOrderedGraph::edgeless(1));
        let tre = interlacement_graph(&"1 2 3 1 2 3".parse().unwrap());
        assert_eq!(tre, LinearlyOrderedGraph::complete(3));
        let fig = interlacement_graph(&"1 2 3 1 4 3 2 4".parse().unwrap());
        assert_eq!(fig.edges(), vec![(1, 2), (1, 3), (2, 4), (3, 4)]);
        assert_eq!(
            fig.adjacency().to_rows(),
            vec![
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 1],
                vec![1, 0, 0, 1],
                vec![0, 1, 1, 0]
            ]
        );
    }

    #[test]
    fn sweep_matches_definition() {
        for n in 0..=5 {
            for d in ChordDiagram::all_canonical(n) {
                assert_eq!(interlacement_graph(&d), interlacement_by_definition(&d));
            }
        }
    }

    #[test]
    fn skew_examples() {
        let k2 = LinearlyOrderedGraph::complete(2).skew_adjacency();
        assert_eq!(k2.matrix().to_rows(), vec![vec![0, 1], vec![-1, 0]]);
        let fig = g(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).skew_adjacency();
        assert_eq!(
            fig.matrix().to_rows(),
            vec![
                vec![0, 1, 1, 0],
                vec![-1, 0, 0, 1],
                vec![-1, 0, 0, 1],
                vec![0, -1, -1, 0]
            ]
        );
        assert_eq!(
            LinearlyOrderedGraph::edgeless(3)
                .skew_adjacency()
                .into_matrix(),
            IntMatrix::zeros(3, 3)
        );
    }

    #[test]
    fn delete_vertex_examples() {
        let k3 = LinearlyOrderedGraph::complete(3);
        assert_eq!(
            k3.delete_vertex(2).unwrap(),
            LinearlyOrderedGraph::complete(2)
        );
        assert_eq!(
            LinearlyOrderedGraph::path(3).delete_vertex(2).unwrap(),
            LinearlyOrderedGraph::edgeless(2)
        );
        let fig = g(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]);
        assert_eq!(fig.delete_vertex(1).unwrap().edges(), vec![(1, 3), (2, 3)]);
        assert!(matches!(
            fig.delete_vertex(5),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn structural_ops() {
        let k1 = LinearlyOrderedGraph::edgeless(1);
        assert_eq!(k1.join(&k1), LinearlyOrderedGraph::complete(2));
        assert_eq!(k1.disjoint_union(&k1), LinearlyOrderedGraph::edgeless(2));

        let k2 = LinearlyOrderedGraph::complete(2);
        assert_eq!(k2.coalesce(1, &k2, 1).unwrap(), g(3, &[(1, 2), (1, 3)]));
        // Coalescing K3 over vertex 2 of each copy.
        let k3 = LinearlyOrderedGraph::complete(3);
        assert_eq!(
            k3.coalesce(2, &k3, 2).unwrap().edges(),
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (4, 5)]
        );

        for n in 1..=5 {
            let kn = LinearlyOrderedGraph::complete(n);
            for j in 1..=n {
                assert_eq!(kn.promote(j).unwrap(), kn);
            }
        }
        let p3 = LinearlyOrderedGraph::path(3);
        assert_eq!(p3.promote(3).unwrap().edges(), vec![(1, 3), (2, 3)]);
    }

    #[test]
    fn add_and_remove_edges() {
        let e = LinearlyOrderedGraph::edgeless(3);
        let one = e.add_edge(3, 1).unwrap();
        assert_eq!(one.edges(), vec![(1, 3)]);
        assert_eq!(one.add_edge(1, 3), Err(Error::EdgeExists(1, 3)));
        assert!(matches!(e.add_edge(0, 1), Err(Error::OutOfRange { .. })));
        assert_eq!(one.remove_edge(1, 3).unwrap(), e);
        assert_eq!(e.remove_edge(1, 2), Err(Error::EdgeMissing(1, 2)));
    }

    #[test]
    fn join_adds_product_of_sizes() {
        let a = g(3, &[(1, 2)]);
        let b = g(2, &[(1, 2)]);
        assert_eq!(
            a.join(&b).edge_count(),
            a.disjoint_union(&b).edge_count() + 6
        );
    }

    #[test]
    fn text_round_trip() {
        let fig = g(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]);
        let text = fig.to_string();
        assert_eq!(text, "4\n1 2\n1 3\n2 4\n3 4");
        assert_eq!(text.parse::<LinearlyOrderedGraph>().unwrap(), fig);
        assert!("2\n1 1".parse::<LinearlyOrderedGraph>().is_err());
        assert!("".parse::<LinearlyOrderedGraph>().is_err());
    }
}
