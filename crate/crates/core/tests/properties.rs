//! Randomized properties: algebraic axioms on generated rings and oracle
//! agreement for the graph algorithms on arbitrary small graphs.

use std::sync::Arc;

use proptest::prelude::*;

use agraph_core::graph::{build_ag_graph, Graph};
use agraph_core::ideal::{
    annihilator, enumerate_ideals, ideal_closure, ideal_product, is_ideal, IdealLattice,
};
use agraph_core::naive;
use agraph_core::ring::{
    build_ring_with, parse_ring_spec, zn_table, BackendChoice, FiniteRing, Limits, RingSpec,
};

/// Small table-backed rings drawn from three shapes: Z_n, a product of two
/// cyclic rings, and a fixed pool of polynomial quotients.
fn ring_strategy() -> impl Strategy<Value = Arc<FiniteRing>> {
    let pool = [
        "Z2[x]/(x^2)",
        "Z2[x]/(x^3)",
        "Z3[x]/(x^2 + 1)",
        "Z4[x]/(x^2, 2x)",
        "Z2[x]/(x^2 + x + 1)",
        "Z6[x]/(x^2)",
    ];
    prop_oneof![
        (2u64..=24).prop_map(|n| Arc::new(zn_table(n, Limits::default()).unwrap())),
        (2u64..=6, 2u64..=6).prop_map(|(a, b)| {
            let spec = RingSpec::Product(vec![RingSpec::Zn(a), RingSpec::Zn(b)]);
            Arc::new(build_ring_with(&spec, BackendChoice::Table, Limits::default()).unwrap())
        }),
        (0usize..pool.len()).prop_map(move |i| {
            let spec = parse_ring_spec(pool[i]).unwrap();
            Arc::new(build_ring_with(&spec, BackendChoice::Table, Limits::default()).unwrap())
        }),
    ]
}

fn lattice_of(ring: &Arc<FiniteRing>) -> IdealLattice {
    enumerate_ideals(ring, Limits::default()).unwrap()
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges)
        })
    })
}

proptest! {
    #[test]
    fn spec_text_round_trips(parts in proptest::collection::vec(2u64..=50, 1..=3)) {
        let text = parts
            .iter()
            .map(|n| format!("Z{n}"))
            .collect::<Vec<_>>()
            .join(" x ");
        let spec = parse_ring_spec(&text).unwrap();
        prop_assert_eq!(parse_ring_spec(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn closure_of_generators_is_the_smallest_ideal(
        ring in ring_strategy(),
        raw in proptest::collection::vec(0usize..36, 0..4),
    ) {
        let gens: Vec<usize> = raw.iter().map(|&g| g % ring.order()).collect();
        let closed = ideal_closure(&ring, &gens);
        prop_assert!(is_ideal(&ring, &closed));
        for g in &gens {
            prop_assert!(closed.contains(g));
        }
        // Closing again adds nothing.
        prop_assert_eq!(ideal_closure(&ring, &closed), closed.clone());
        // Every ideal that contains the generators contains the closure.
        let lat = lattice_of(&ring);
        for id in 0..lat.count() {
            let elems = lat.elements(id);
            if gens.iter().all(|g| elems.contains(g)) {
                prop_assert!(closed.iter().all(|c| elems.contains(c)));
            }
        }
    }

    #[test]
    fn annihilator_reverses_containment_and_kills_its_ideal(ring in ring_strategy()) {
        let lat = lattice_of(&ring);
        for a in 0..lat.count() {
            let ann = lat.annihilator_id(a);
            prop_assert_eq!(lat.product(a, ann), lat.zero_id());
            // Double annihilator grows the ideal back (or past it).
            prop_assert!(lat.is_contained(a, lat.annihilator_id(ann)));
            for b in 0..lat.count() {
                if lat.is_contained(a, b) {
                    prop_assert!(lat.is_contained(lat.annihilator_id(b), ann));
                }
            }
        }
    }

    #[test]
    fn lattice_annihilator_matches_elementwise_annihilator(ring in ring_strategy()) {
        let lat = lattice_of(&ring);
        for id in 0..lat.count() {
            let by_scan = annihilator(&ring, &lat.elements(id));
            prop_assert_eq!(lat.elements(lat.annihilator_id(id)), by_scan);
        }
    }

    #[test]
    fn lattice_product_matches_elementwise_product(ring in ring_strategy()) {
        let lat = lattice_of(&ring);
        for a in 0..lat.count() {
            for b in 0..lat.count() {
                let by_scan = ideal_product(&ring, &lat.elements(a), &lat.elements(b));
                prop_assert_eq!(lat.elements(lat.product(a, b)), by_scan);
            }
        }
    }

    #[test]
    fn ag_adjacency_is_irreflexive_and_symmetric(ring in ring_strategy()) {
        let lat = lattice_of(&ring);
        let ag = build_ag_graph(&lat);
        let n = ag.graph.vertex_count();
        for i in 0..n {
            prop_assert!(!ag.graph.has_edge(i, i));
            for j in 0..n {
                prop_assert_eq!(ag.graph.has_edge(i, j), ag.graph.has_edge(j, i));
            }
        }
        for w in ag.graph.edges().windows(2) {
            prop_assert!(w[0] < w[1], "edge list not strictly sorted");
        }
        for &(u, v) in ag.graph.edges() {
            prop_assert!(u < v);
        }
    }

    #[test]
    fn units_and_zero_divisors_partition_the_ring(ring in ring_strategy()) {
        let mut both: Vec<usize> = ring.units();
        let zd = ring.zero_divisors();
        for &x in &zd {
            prop_assert!(!both.contains(&x), "element {x} is unit and zero-divisor");
        }
        both.extend(zd);
        both.sort_unstable();
        prop_assert_eq!(both, (0..ring.order()).collect::<Vec<_>>());
    }

    #[test]
    fn bfs_diameter_matches_floyd_warshall(g in graph_strategy()) {
        prop_assert_eq!(g.diameter(), naive::diameter_by_floyd_warshall(&g));
    }

    #[test]
    fn bfs_girth_matches_edge_removal_oracle(g in graph_strategy()) {
        prop_assert_eq!(g.girth(), naive::girth_by_edge_removal(&g));
    }
}
