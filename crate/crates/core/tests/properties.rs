use domhg::format::{
    format_graph_text, format_hypergraph_text, graph_json, hypergraph_json, parse_graph, parse_hypergraph,
};
use domhg::{Graph, GroundSet, Hypergraph, VertexSet};
use proptest::prelude::*;

fn antichain(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1u64 << n), 1..8).prop_map(move |masks| {
            let sets = masks.into_iter().map(VertexSet::from_bits).collect();
            Hypergraph::minimize(GroundSet::range(n).unwrap(), sets).unwrap()
        })
    })
}

fn same_ground_pair(max_n: usize) -> impl Strategy<Value = (Hypergraph, Hypergraph)> {
    (1..=max_n).prop_flat_map(|n| {
        let family = prop::collection::vec(1u64..(1u64 << n), 1..6);
        (family.clone(), family).prop_map(move |(a, b)| {
            let g = GroundSet::range(n).unwrap();
            let mk = |m: Vec<u64>| {
                Hypergraph::minimize(g.clone(), m.into_iter().map(VertexSet::from_bits).collect()).unwrap()
            };
            (mk(a), mk(b))
        })
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (0u64..(1u64 << pairs)).prop_map(move |code| Graph::from_edge_code(GroundSet::range(n).unwrap(), code))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn transversal_is_an_involution(h in antichain(7)) {
        prop_assert_eq!(h.transversal().transversal(), h);
    }

    #[test]
    fn transversal_is_antitone((a, b) in same_ground_pair(6)) {
        if a.is_leq(&b).unwrap() {
            prop_assert!(b.transversal().is_leq(&a.transversal()).unwrap());
        }
    }

    #[test]
    fn meet_is_greatest_lower_bound((a, b) in same_ground_pair(6), c in 0u64..64) {
        let m = Hypergraph::meet(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(m.is_leq(&a).unwrap() && m.is_leq(&b).unwrap());
        // Any lower bound, here the meet of a with a third family, sits below.
        let n = a.ground().len();
        let extra = VertexSet::from_bits((c & ((1u64 << n) - 1)).max(1));
        let k = Hypergraph::meet(&[m.clone(), Hypergraph::new(a.ground().clone(), vec![extra]).unwrap()]).unwrap();
        prop_assert!(k.is_leq(&m).unwrap());
    }

    #[test]
    fn domination_matches_closed_neighborhoods(g in graph(7)) {
        let d = g.minimal_dominating_sets();
        prop_assert_eq!(&d, &g.minimal_closed_neighborhoods().transversal());
        prop_assert_eq!(d.transversal(), g.minimal_closed_neighborhoods());
        for &s in d.edges() {
            prop_assert!(g.is_dominating(s).unwrap());
            for v in s.iter() {
                prop_assert!(!g.is_dominating(s.without(v)).unwrap());
            }
        }
    }

    #[test]
    fn hypergraph_text_round_trip(h in antichain(7)) {
        prop_assert_eq!(parse_hypergraph(&format_hypergraph_text(&h), false).unwrap(), h.clone());
        prop_assert_eq!(parse_hypergraph(&hypergraph_json(&h), false).unwrap(), h);
    }

    #[test]
    fn graph_text_round_trip(g in graph(7)) {
        prop_assert_eq!(parse_graph(&format_graph_text(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&graph_json(&g)).unwrap(), g);
    }
}
