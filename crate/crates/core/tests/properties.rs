use proptest::prelude::*;

use prismdom::bits::MaskGraph;
use prismdom::geodesic;
use prismdom::{
    gamma_variant, oracle_gamma_variant, GammaVariant, Graph, Permutation, PrismGraph, VertexSet,
};

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::new(n, edges).unwrap()
        })
        .prop_filter("connected", Graph::is_connected)
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Permutation)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(g, image)| (g, Permutation::from_image(image).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_matches_oracle((g, perm) in graph_and_perm(6)) {
        let prism = PrismGraph::build(&g, &perm).unwrap();
        for variant in GammaVariant::ALL {
            let a = gamma_variant(prism.graph(), variant).unwrap();
            let b = oracle_gamma_variant(prism.graph(), variant).unwrap();
            prop_assert_eq!(a.value, b.value);
            prop_assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn predicate_hierarchy(g in connected_graph(8), mask in any::<u64>()) {
        let n = g.n();
        let set = VertexSet::from_mask(n, mask & ((1u64 << n) - 1));
        let dist = g.all_pairs_distances();
        let convex = geodesic::is_convex(&dist, &set);
        let weak = geodesic::is_weakly_convex(&g, &dist, &set);
        let connected = geodesic::is_connected_set(&g, &set);
        prop_assert!(!convex || weak);
        prop_assert!(!weak || connected || set.is_empty());
    }

    #[test]
    fn bitmask_predicates_match_geodesics(g in connected_graph(7), mask in any::<u64>()) {
        let n = g.n();
        let mask = mask & ((1u64 << n) - 1);
        let set = VertexSet::from_mask(n, mask);
        let mg = MaskGraph::new(&g).unwrap();
        let members = set.to_vec();
        let mut convex = true;
        let mut weak = true;
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                let paths = geodesic::enumerate_geodesics(&g, u, v).unwrap();
                let inside = |p: &Vec<usize>| p.iter().all(|&x| set.contains(x));
                convex &= paths.iter().all(inside);
                weak &= paths.iter().any(inside);
            }
        }
        prop_assert_eq!(mg.is_convex(mask), convex);
        prop_assert_eq!(mg.is_weakly_convex(mask), weak);
    }

    #[test]
    fn prism_shape((g, perm) in graph_and_perm(8)) {
        let prism = PrismGraph::build(&g, &perm).unwrap();
        let n = g.n();
        prop_assert_eq!(prism.graph().n(), 2 * n);
        prop_assert_eq!(prism.graph().edge_count(), 2 * g.edge_count() + n);
        for u in 0..n {
            prop_assert!(prism.graph().has_edge(u, prism.copy_vertex(perm.apply(u))));
        }
    }

    #[test]
    fn prism_domination_bounds((g, perm) in graph_and_perm(6)) {
        // γ(G) <= γ(πG) <= 2γ(G) and γ(G) + 1 <= γ_c(πG)
        let gamma = gamma_variant(&g, GammaVariant::Plain).unwrap().value;
        let prism = PrismGraph::build(&g, &perm).unwrap();
        let p = gamma_variant(prism.graph(), GammaVariant::Plain).unwrap().value;
        let pc = gamma_variant(prism.graph(), GammaVariant::Connected).unwrap().value;
        prop_assert!(gamma <= p && p <= 2 * gamma);
        prop_assert!(gamma < pc);
    }
}
