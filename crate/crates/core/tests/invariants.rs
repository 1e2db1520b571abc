//! Randomized and exhaustive invariant checks for the library-wide
//! contracts that the unit tests only spot-check.

use proptest::prelude::*;

use transversal::dimacs::{parse_graph, serialize_graph};
use transversal::enumerate::DEFAULT_ORACLE_CEILING;
use transversal::solve::PadBudget;
use transversal::{
    brute_force_min_connected, connect_padding, min_connected_transversal, satisfies,
    EnumerationStream, Graph, TransversalKind, VertexSet,
};

/// A graph on `n` vertices decoded from a bitmask over the vertex pairs in
/// lexicographic order.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << pairs)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

/// Exhaustive edge-subset check for an induced matching of size s.
fn has_induced_matching_oracle(g: &Graph, s: usize) -> bool {
    fn rec(
        g: &Graph,
        edges: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        s: usize,
    ) -> bool {
        if chosen.len() == s {
            return true;
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            let independent = chosen.iter().all(|&(a, b)| {
                let mut ok = true;
                for x in [u, v] {
                    for y in [a, b] {
                        ok &= x != y && !g.has_edge(x, y);
                    }
                }
                ok
            });
            if independent {
                chosen.push((u, v));
                if rec(g, &edges[i + 1..], chosen, s) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(g, g.edges(), &mut Vec::new(), s)
}

proptest! {
    #[test]
    fn satisfies_is_superset_closed(g in arb_graph(8), extra in 0usize..8, seed: u64) {
        for kind in TransversalKind::ALL {
            let base = transversal::min_transversal(&g, kind).solution;
            let mut bigger = base.clone();
            bigger.insert(extra.min(g.n() - 1));
            // Deterministic pseudo-random extra vertex as well.
            bigger.insert((seed as usize) % g.n());
            prop_assert!(satisfies(&g, kind, &base));
            prop_assert!(satisfies(&g, kind, &bigger));
        }
    }

    #[test]
    fn padding_budget_is_monotone(g in arb_graph(7), mask in 0u64..128) {
        prop_assume!(g.is_connected());
        let s = VertexSet::from_iter(g.n(), (0..g.n()).filter(|v| mask & (1 << v) != 0));
        let mut last: Option<usize> = None;
        for budget in 0..=g.n() {
            let padded = connect_padding(&g, &s, budget).unwrap();
            if let Some(p) = padded {
                prop_assert!(g.is_connected_set(&p));
                prop_assert!(s.is_subset(&p));
                prop_assert!(p.len() <= s.len() + budget);
                if let Some(prev) = last {
                    // A larger budget never yields a larger padded set.
                    prop_assert!(p.len() <= prev);
                }
                last = Some(p.len());
            } else {
                prop_assert!(last.is_none());
            }
        }
    }

    #[test]
    fn mis_are_complements_of_minimal_vertex_covers(g in arb_graph(7)) {
        let mut mis: Vec<VertexSet> = EnumerationStream::maximal_independent_sets(&g)
            .map(|s| s.complemented())
            .collect();
        let mut vc: Vec<VertexSet> = EnumerationStream::minimal_vertex_covers(&g).collect();
        mis.sort_by_key(|s| s.canonical());
        vc.sort_by_key(|s| s.canonical());
        prop_assert_eq!(mis, vc);
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph(9)) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn sp2_freeness_matches_edge_subset_oracle(g in arb_graph(7), s in 1usize..4) {
        prop_assert_eq!(g.is_sp2_free(s), !has_induced_matching_oracle(&g, s));
        if let Some(witness) = g.find_induced_matching(s) {
            prop_assert_eq!(witness.len(), s);
        }
    }

    #[test]
    fn s1_freeness_means_edgeless(g in arb_graph(8)) {
        prop_assert_eq!(g.is_sp2_free(1), g.m() == 0);
    }

    #[test]
    fn connected_solver_agrees_with_oracle(g in arb_graph(7)) {
        prop_assume!(g.is_connected());
        for kind in TransversalKind::ALL {
            let fast = min_connected_transversal(&g, kind, PadBudget::Fixed(g.n())).unwrap();
            let slow = brute_force_min_connected(&g, kind, DEFAULT_ORACLE_CEILING).unwrap();
            prop_assert_eq!(fast.size, slow.size);
            prop_assert!(fast.certificate.verify(&g, &fast.solution));
        }
    }
}

/// Line graphs are claw-free: exhaustively for every graph on up to 6
/// vertices with at least one edge, and on a seeded sample at n = 7.
#[test]
fn line_graphs_are_claw_free() {
    for n in 2..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 1u64..(1 << pairs) {
            let g = graph_from_mask(n, mask);
            let (lg, _) = g.line_graph().unwrap();
            assert!(lg.is_claw_free(), "claw in L(G) for n={n} mask={mask}");
        }
    }
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let pairs = 7 * 6 / 2;
    for _ in 0..20_000 {
        let mask = rng.gen_range(1u64..(1 << pairs));
        let g = graph_from_mask(7, mask);
        let (lg, _) = g.line_graph().unwrap();
        assert!(lg.is_claw_free(), "claw in L(G) for n=7 mask={mask}");
    }
}
