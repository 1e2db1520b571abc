//! Deterministic corpus generation for tests and the `gen` command.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;

/// A corpus family selector with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    /// Erdos-Renyi draws filtered to graphs with no induced matching of
    /// size s.
    RandomSp2Free {
        n: usize,
        s: usize,
        edge_probability: f64,
        count: usize,
    },
    Petersen,
}

/// A generated graph together with its provenance.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
    /// For filtered families: the s for which the graph was verified
    /// sP2-free.
    pub verified_s: Option<usize>,
}

const FILTER_ATTEMPT_CAP: usize = 100_000;

/// Generates the requested family deterministically from the seed.
pub fn generate_corpus(family: &Family, seed: u64) -> Result<Vec<CorpusGraph>> {
    match family {
        Family::Path { n } => Ok(vec![CorpusGraph {
            name: format!("path-{n}"),
            graph: families::path(*n),
            verified_s: None,
        }]),
        Family::Cycle { n } => Ok(vec![CorpusGraph {
            name: format!("cycle-{n}"),
            graph: families::cycle(*n),
            verified_s: None,
        }]),
        Family::Complete { n } => Ok(vec![CorpusGraph {
            name: format!("complete-{n}"),
            graph: families::complete(*n),
            verified_s: None,
        }]),
        Family::CompleteMultipartite { parts } => {
            let graph = families::complete_multipartite(parts);
            // Complete multipartite graphs have no induced 2P2: the ends of
            // two disjoint non-adjacent edges would have to share parts both
            // ways.
            debug_assert!(graph.m() == 0 || graph.is_sp2_free(2));
            Ok(vec![CorpusGraph {
                name: format!("complete-multipartite-{parts:?}"),
                graph,
                verified_s: Some(2),
            }])
        }
        Family::Petersen => Ok(vec![CorpusGraph {
            name: "petersen".into(),
            graph: families::petersen(),
            verified_s: None,
        }]),
        Family::RandomSp2Free {
            n,
            s,
            edge_probability,
            count,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::new();
            let mut attempts = 0;
            while out.len() < *count {
                if attempts >= FILTER_ATTEMPT_CAP {
                    return Err(Error::FilterCapExceeded {
                        cap: FILTER_ATTEMPT_CAP,
                    });
                }
                attempts += 1;
                let g = random_graph(&mut rng, *n, *edge_probability);
                if g.is_sp2_free(*s) {
                    out.push(CorpusGraph {
                        name: format!("random-{n}v-s{s}-#{}", out.len()),
                        graph: g,
                        verified_s: Some(*s),
                    });
                }
            }
            Ok(out)
        }
    }
}

/// Erdos-Renyi draw G(n, p).
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Seeded list of connected graphs with `min_n..=max_n` vertices, mixing
/// named families with random draws. Used by the test corpora.
pub fn connected_corpus(min_n: usize, max_n: usize, per_size: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in min_n..=max_n {
        if n >= 2 {
            out.push(families::path(n));
        }
        if n >= 3 {
            out.push(families::cycle(n));
            out.push(families::complete(n));
            out.push(families::star(n - 1));
        }
        let mut found = 0;
        let mut attempts = 0;
        while found < per_size && attempts < FILTER_ATTEMPT_CAP {
            attempts += 1;
            let p = rng.gen_range(0.25..0.75);
            let g = random_graph(&mut rng, n, p);
            if g.is_connected() {
                out.push(g);
                found += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_is_2p2_free() {
        let corpus = generate_corpus(
            &Family::CompleteMultipartite {
                parts: vec![2, 2, 2],
            },
            0,
        )
        .unwrap();
        let g = &corpus[0].graph;
        assert_eq!((g.n(), g.m()), (6, 12));
        assert!(g.is_sp2_free(2));
    }

    #[test]
    fn random_filter_is_deterministic_and_correct() {
        let family = Family::RandomSp2Free {
            n: 10,
            s: 2,
            edge_probability: 0.5,
            count: 5,
        };
        let a = generate_corpus(&family, 7).unwrap();
        let b = generate_corpus(&family, 7).unwrap();
        assert_eq!(a.len(), 5);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph, y.graph);
            assert!(x.graph.is_sp2_free(2));
            assert_eq!(x.verified_s, Some(2));
        }
    }

    #[test]
    fn connected_corpus_is_connected_and_seeded() {
        let a = connected_corpus(3, 6, 4, 11);
        let b = connected_corpus(3, 6, 4, 11);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
            assert!(x.is_connected());
        }
    }
}
