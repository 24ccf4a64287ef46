use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use gauss_spectra::diagram::{double_cover, ChordDiagram, Flavor, PartialState, Smoothing};
use gauss_spectra::graph::{interlacement_graph, LinearlyOrderedGraph as Graph};
use gauss_spectra::poly::{char_poly, nullity_q, nullity_z2};
use gauss_spectra::pretzel::PretzelParams;
use gauss_spectra::smoothing::{boundary_count_oracle, loop_count_rlcp, loop_count_zlcp};

fn diagram(max_chords: usize) -> impl Strategy<Value = ChordDiagram> {
    (0..=max_chords)
        .prop_flat_map(|n| {
            Just((1..=n as u64).flat_map(|l| [l, l]).collect::<Vec<_>>()).prop_shuffle()
        })
        .prop_map(|labels| ChordDiagram::from_labels(&labels).unwrap())
}

fn smoothing() -> impl Strategy<Value = Smoothing> {
    prop_oneof![
        Just(Smoothing::Oriented),
        Just(Smoothing::Unoriented),
        Just(Smoothing::Erased)
    ]
}

fn diagram_with_state(max_chords: usize) -> impl Strategy<Value = (ChordDiagram, PartialState)> {
    diagram(max_chords).prop_flat_map(|d| {
        let n = d.len();
        (
            Just(d),
            prop::collection::vec(smoothing(), n).prop_map(PartialState::new),
        )
    })
}

fn graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (1..=g.n()).map(|u| g.degree(u)).collect();
    d.sort_unstable();
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn skew_matrix_is_antisymmetric_with_adjacency_magnitudes(g in graph(9)) {
        let skew = g.skew_adjacency().into_matrix();
        let adjacency = g.adjacency();
        for i in 0..g.n() {
            for j in 0..g.n() {
                prop_assert_eq!(skew.get(i, j), -skew.get(j, i));
                prop_assert_eq!(skew.get(i, j).abs(), adjacency.get(i, j));
            }
        }
    }

    #[test]
    fn skew_char_poly_is_monic_nonnegative_and_of_one_parity(g in graph(9)) {
        let poly = g.char_poly();
        let n = g.n();
        prop_assert_eq!(poly.coeff(n), BigInt::from(1));
        for k in 0..n {
            let c = poly.coeff(k);
            prop_assert!(!c.is_negative());
            if (n - k) % 2 == 1 {
                prop_assert!(c.is_zero());
            }
        }
    }

    #[test]
    fn zero_multiplicity_equals_rational_nullity(g in graph(10)) {
        let skew = g.skew_adjacency();
        prop_assert_eq!(char_poly(skew.matrix()).m0().unwrap(), nullity_q(skew.matrix()));
    }

    #[test]
    fn binary_nullity_is_at_least_rational_nullity(g in graph(10)) {
        let skew = g.skew_adjacency();
        prop_assert!(nullity_z2(skew.matrix()) >= nullity_q(skew.matrix()));
    }

    #[test]
    fn canonical_relabel_is_idempotent(d in diagram(8)) {
        let once = d.canonical_relabel();
        prop_assert!(once.is_canonical());
        prop_assert_eq!(once.canonical_relabel(), once);
    }

    #[test]
    fn diagram_text_round_trips(d in diagram(8)) {
        prop_assert_eq!(ChordDiagram::parse(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn graph_text_round_trips(g in graph(8)) {
        prop_assert_eq!(g.to_string().parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn mirror_keeps_the_spectrum(d in diagram(8)) {
        let mirrored = d.mirror().diagram;
        prop_assert_eq!(interlacement_graph(&mirrored).char_poly(), interlacement_graph(&d).char_poly());
    }

    #[test]
    fn loop_counts_agree((d, s) in diagram_with_state(7)) {
        let oracle = boundary_count_oracle(&d, &s).unwrap().component_count();
        prop_assert_eq!(loop_count_rlcp(&d, &s).unwrap(), oracle);
        if !s.has_erased() {
            prop_assert_eq!(loop_count_zlcp(&d, &s).unwrap(), oracle);
        }
    }

    #[test]
    fn double_cover_has_odd_size((d, s) in diagram_with_state(7)) {
        let smoothed = d.len() - s.erased().len();
        for j in s.unoriented() {
            for flavor in [Flavor::First, Flavor::Second] {
                let cover = double_cover(&d, &s, j, flavor).unwrap();
                prop_assert_eq!(cover.diagram.len(), 2 * smoothed - 1);
                prop_assert_eq!(cover.origins.len(), cover.diagram.len());
            }
        }
    }

    #[test]
    fn promote_preserves_degrees(g in graph(8), pick in any::<prop::sample::Index>()) {
        let u = pick.index(g.n()) + 1;
        let promoted = g.promote(u).unwrap();
        prop_assert_eq!(promoted.edge_count(), g.edge_count());
        prop_assert_eq!(degrees(&promoted), degrees(&g));
        prop_assert_eq!(promoted.degree(1), g.degree(u));
    }

    #[test]
    fn union_and_join_edge_counts(g in graph(6), h in graph(6)) {
        prop_assert_eq!(g.disjoint_union(&h).edge_count(), g.edge_count() + h.edge_count());
        prop_assert_eq!(g.join(&h).edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
    }

    #[test]
    fn coalescence_counts(g in graph(6), h in graph(6), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (u, v) = (a.index(g.n()) + 1, b.index(h.n()) + 1);
        let c = g.coalesce(u, &h, v).unwrap();
        prop_assert_eq!(c.n(), g.n() + h.n() - 1);
        prop_assert_eq!(c.edge_count(), g.edge_count() + h.edge_count());
        prop_assert_eq!(c.degree(u), g.degree(u) + h.degree(v));
    }

    #[test]
    fn pretzel_diagram_ignores_signs(p in 1i64..5, q in 1i64..5, r in 1i64..5, signs in 0u8..8) {
        prop_assume!([p, q, r].iter().filter(|x| *x % 2 == 0).count() <= 1);
        let flip = |x: i64, bit: u8| if signs >> bit & 1 == 1 { -x } else { x };
        let plain = PretzelParams::new(p, q, r).unwrap().diagram();
        let signed = PretzelParams::new(flip(p, 0), flip(q, 1), flip(r, 2)).unwrap().diagram();
        prop_assert_eq!(plain.len(), (p + q + r) as usize);
        prop_assert_eq!(signed, plain);
    }
}
