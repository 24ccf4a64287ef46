//! Exact loop counting for smoothings of chord diagrams.
//!
//! A chord diagram with a partial state (each chord smoothed oriented,
//! smoothed unoriented, or erased) determines a set of closed curves. This
//! crate counts them three ways: by tracing the boundary of the band
//! surface directly, by the rational nullity of the skew-adjacency matrix
//! of the interlacement graph (through an orientation double cover when some
//! smoothing is unoriented), and by a nullity over the two-element field.
//! It also implements the characteristic-polynomial calculus of linearly
//! ordered graphs and the pretzel-knot smoothing census.

pub mod diagram;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod pretzel;
pub mod smoothing;
pub mod verify;

pub use diagram::{
    double_cover, pretzel_code, ChordDiagram, DoubleCover, Flavor, PartialState, Smoothing,
};
pub use error::{Error, Result};
pub use graph::{interlacement_graph, skew_adjacency, LinearlyOrderedGraph};
pub use matrix::{IntMatrix, PolyMatrix, SkewMatrix};
pub use poly::{char_poly, nullity_q, nullity_z2, IntPolynomial};
pub use pretzel::{census, n0_closed, n1_closed, CensusRow, PretzelParams};
pub use smoothing::{
    boundary_count_oracle, kernel_basis_theta, loop_count_rlcp, loop_count_zlcp, BoundaryTrace,
};
