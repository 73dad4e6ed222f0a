use proptest::prelude::*;

use signcolor::coloring::{
    coloring_number, greedy_coloring, is_valid_coloring, signed_chromatic_number, ColorSet,
};
use signcolor::enumeration::{canonical_key, Equivalence};
use signcolor::io::{parse_graph, write_graph};
use signcolor::list_coloring::solve_list_coloring;
use signcolor::structure::{self, classify_brick};
use signcolor::{ListAssignment, Sign, SignedGraph, VertexSet};

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Negative)]
}

fn graph() -> impl Strategy<Value = SignedGraph> {
    (1usize..=6).prop_flat_map(|n| {
        let edge = (0..n, 1..n.max(2), sign()).prop_map(move |(u, d, s)| (u, (u + d) % n, s));
        let max_edges = if n > 1 { 10 } else { 0 };
        prop::collection::vec(edge, 0..=max_edges)
            .prop_map(move |edges| SignedGraph::new(n, edges).unwrap())
    })
}

fn graph_and_set() -> impl Strategy<Value = (SignedGraph, VertexSet)> {
    graph().prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::vec(any::<bool>(), n)).prop_map(|(g, bits)| {
            let set = VertexSet::from_predicate(bits.len(), |v| bits[v]);
            (g, set)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_preserves_invariants((g, x) in graph_and_set()) {
        let h = g.switch(&x).unwrap();
        prop_assert_eq!(signed_chromatic_number(&g).unwrap(), signed_chromatic_number(&h).unwrap());
        prop_assert_eq!(structure::is_balanced(&g), structure::is_balanced(&h));
        prop_assert_eq!(structure::is_antibalanced(&g), structure::is_antibalanced(&h));
        prop_assert_eq!(coloring_number(&g).value, coloring_number(&h).value);
        prop_assert!(structure::is_switching_equivalent(&g, &h).unwrap());
        if g.is_connected() && structure::blocks(&g).blocks.len() == 1 {
            prop_assert_eq!(classify_brick(&g).unwrap(), classify_brick(&h).unwrap());
        }
        prop_assert_eq!(
            canonical_key(&g, Equivalence::SwitchingIsomorphism).unwrap(),
            canonical_key(&h, Equivalence::SwitchingIsomorphism).unwrap()
        );
    }

    #[test]
    fn relabeling_preserves_canonical_key(g in graph(), shift in 0usize..6) {
        let n = g.vertex_count();
        let h = SignedGraph::new(n, g.edges().iter().map(|e| ((e.u + shift) % n, (e.v + shift) % n, e.sign))).unwrap();
        for modulo in [Equivalence::Isomorphism, Equivalence::SwitchingIsomorphism] {
            prop_assert_eq!(canonical_key(&g, modulo).unwrap(), canonical_key(&h, modulo).unwrap());
        }
    }

    #[test]
    fn chain_of_bounds(g in graph()) {
        let chi = signed_chromatic_number(&g).unwrap();
        let col = coloring_number(&g);
        prop_assert!(chi <= col.value);
        prop_assert!(col.value <= g.max_degree() + 1);
        let phi = greedy_coloring(&g, &col.coloring_order()).unwrap();
        prop_assert!(is_valid_coloring(&g, &phi).unwrap());
        let palette = ColorSet::z(col.value);
        prop_assert!(phi.colors().iter().all(|&c| palette.contains(c)));
    }

    #[test]
    fn antibalance_is_balance_of_negation(g in graph()) {
        prop_assert_eq!(structure::is_antibalanced(&g), structure::is_balanced(&g.negate()));
    }

    #[test]
    fn graph_text_round_trips(g in graph()) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap().graph;
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn list_solutions_respect_lists(g in graph(), seed in prop::collection::vec(prop::collection::btree_set(-3i64..=3, 1..=4), 6)) {
        let n = g.vertex_count();
        let lists = ListAssignment::new(seed[..n].iter().map(|s| s.iter().copied().collect()).collect());
        if let Some(phi) = solve_list_coloring(&g, &lists).unwrap() {
            prop_assert!(is_valid_coloring(&g, &phi).unwrap());
            for v in 0..n {
                prop_assert!(lists[v].contains(phi.color(v)));
            }
        }
    }
}
