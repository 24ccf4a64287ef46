//! Exhaustive self-checks over small instances, grouped into property
//! families. Used by the command-line `verify` subcommand.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{ChordDiagram, Flavor, Smoothing};
use crate::graph::{interlacement_graph, LinearlyOrderedGraph};
use crate::poly::{
    char_poly, derivative_identity_rhs, nullity_q, poly_add_edge_formula, poly_coalescence_formula,
    poly_join_formula, poly_union_formula,
};
use crate::smoothing::{
    boundary_count_oracle, cover_count, enumerate_states, kernel_basis_theta, loop_count_rlcp,
    loop_count_zlcp, StateFilter,
};

/// Outcome of one property family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    /// Description of the first failing instance, if any.
    pub first_failure: Option<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Default)]
struct Tally {
    checked: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }

    fn report(self, name: &str) -> FamilyReport {
        FamilyReport {
            name: name.to_string(),
            checked: self.checked,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

const FAMILIES: [&str; 8] = [
    "parse round trip",
    "canonical relabelling idempotent",
    "mirror involution",
    "mirror spectrum",
    "loop counts agree",
    "double cover doubles",
    "zero multiplicity equals nullity",
    "kernel vectors",
];

fn check_diagram(d: &ChordDiagram) -> Vec<Tally> {
    let mut t: Vec<Tally> = vec![Tally::default(); FAMILIES.len()];
    let n = d.len();

    let reparsed = ChordDiagram::parse(&d.to_string());
    t[0].record(reparsed.as_ref() == Ok(d), || format!("{d}"));
    t[1].record(d.canonical_relabel() == *d, || format!("{d}"));
    let mirror = d.mirror();
    t[2].record(mirror.diagram.mirror().diagram == *d, || format!("{d}"));
    let poly = char_poly(interlacement_graph(d).skew_adjacency().matrix());
    t[3].record(
        char_poly(
            interlacement_graph(&mirror.diagram)
                .skew_adjacency()
                .matrix(),
        ) == poly,
        || format!("{d}"),
    );

    for s in enumerate_states(n, StateFilter::All).expect("unconstrained") {
        let describe = || format!("{d} under {s}");
        let Ok(trace) = boundary_count_oracle(d, &s) else {
            t[4].record(false, describe);
            continue;
        };
        let expected = trace.component_count();
        let rlcp = loop_count_rlcp(d, &s);
        let zlcp_ok = s.has_erased() || loop_count_zlcp(d, &s) == Ok(expected);
        t[4].record(rlcp == Ok(expected) && zlcp_ok, describe);

        for j in s.unoriented() {
            for flavor in [Flavor::First, Flavor::Second] {
                t[5].record(cover_count(d, &s, j, flavor) == Ok(2 * expected), || {
                    format!("{d} under {s}, chord {j}, {flavor:?}")
                });
            }
        }

        if !s.has_unoriented() {
            let (kept, _) = d.restrict(|l| s.get(l) != Smoothing::Erased);
            let skew = interlacement_graph(&kept).skew_adjacency();
            let nullity = nullity_q(skew.matrix());
            t[6].record(char_poly(skew.matrix()).m0() == Ok(nullity), describe);
            let ok = kernel_basis_theta(d, &s).is_ok_and(|theta| {
                theta
                    .vectors
                    .iter()
                    .all(|v| skew.matrix().mul_vec(v).iter().all(|&x| x == 0))
                    && theta.rank() == nullity
                    && theta.vectors.len() == nullity + 1
            });
            t[7].record(ok, describe);
        }
    }
    t
}

/// Checks every graph identity on every labelled graph with at most
/// `max_vertices` vertices.
fn check_graph_formulas(max_vertices: usize) -> Vec<FamilyReport> {
    let mut derivative = Tally::default();
    let mut add_edge = Tally::default();
    let mut compose = Tally::default();
    let small: Vec<LinearlyOrderedGraph> = (1..=2)
        .flat_map(LinearlyOrderedGraph::all_labelled)
        .collect();
    for n in 1..=max_vertices {
        for g in LinearlyOrderedGraph::all_labelled(n) {
            let poly = g.char_poly();
            derivative.record(derivative_identity_rhs(&g) == poly.derivative(), || {
                g.to_string()
            });
            for u in 1..n {
                if !g.adjacent(u, u + 1) {
                    let direct = g.add_edge(u, u + 1).expect("non-adjacent").char_poly();
                    add_edge.record(poly_add_edge_formula(&g, u, u + 1) == Ok(direct), || {
                        format!("{g} plus {u}-{}", u + 1)
                    });
                }
            }
            for h in &small {
                let ok = poly_union_formula(&g, h) == g.disjoint_union(h).char_poly()
                    && poly_join_formula(&g, h) == g.join(h).char_poly()
                    && (1..=n).all(|u| {
                        (1..=h.n()).all(|v| {
                            poly_coalescence_formula(&g, u, h, v)
                                == Ok(g.coalesce(u, h, v).expect("in range").char_poly())
                        })
                    });
                compose.record(ok, || format!("{g} with {h}"));
            }
        }
    }
    vec![
        derivative.report("derivative identity"),
        add_edge.report("add-edge formula"),
        compose.report("union, join and coalescence formulas"),
    ]
}

/// Runs every property family on all canonical diagrams with at most
/// `max_chords` chords (and all their partial states), plus the graph
/// identities on all graphs with at most `max_chords` vertices (capped at 5).
pub fn verify_all(max_chords: usize) -> Vec<FamilyReport> {
    let diagrams: Vec<ChordDiagram> = (0..=max_chords)
        .flat_map(ChordDiagram::all_canonical)
        .collect();
    let totals = diagrams.par_iter().map(check_diagram).reduce(
        || vec![Tally::default(); FAMILIES.len()],
        |a, b| a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect(),
    );
    let mut reports: Vec<FamilyReport> = totals
        .into_iter()
        .zip(FAMILIES)
        .map(|(t, name)| t.report(name))
        .collect();
    reports.extend(check_graph_formulas(max_chords.min(5)));
    reports
}
