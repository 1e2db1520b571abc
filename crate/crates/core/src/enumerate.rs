//! Streams of maximal independent sets and minimal transversals.
//!
//! All four streams emit each member of their family exactly once and are
//! output-sensitive: the work between emissions is polynomial in the graph
//! size (times the dedup bookkeeping for the already discovered sets).
//! Streams are restartable by re-creation only.

use std::collections::{HashSet, VecDeque};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Which family a stream enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamKind {
    MaximalIndependentSets,
    MinimalVertexCovers,
    MinimalFeedbackVertexSets,
    MinimalOddCycleTransversals,
}

/// Single-consumer stateful iterator over one of the four set families.
pub struct EnumerationStream {
    graph: Graph,
    kind: StreamKind,
    inner: Box<dyn Iterator<Item = VertexSet>>,
    emitted: usize,
}

impl EnumerationStream {
    pub fn maximal_independent_sets(g: &Graph) -> Self {
        EnumerationStream {
            graph: g.clone(),
            kind: StreamKind::MaximalIndependentSets,
            inner: Box::new(MisIter::new(g.clone())),
            emitted: 0,
        }
    }

    /// Minimal vertex covers, emitted as complements of the maximal
    /// independent sets.
    pub fn minimal_vertex_covers(g: &Graph) -> Self {
        EnumerationStream {
            graph: g.clone(),
            kind: StreamKind::MinimalVertexCovers,
            inner: Box::new(MisIter::new(g.clone()).map(|s| s.complemented())),
            emitted: 0,
        }
    }

    pub fn minimal_feedback_vertex_sets(g: &Graph) -> Self {
        EnumerationStream {
            graph: g.clone(),
            kind: StreamKind::MinimalFeedbackVertexSets,
            inner: Box::new(ForestTraversal::new(g.clone())),
            emitted: 0,
        }
    }

    pub fn minimal_odd_cycle_transversals(g: &Graph) -> Self {
        EnumerationStream {
            graph: g.clone(),
            kind: StreamKind::MinimalOddCycleTransversals,
            inner: Box::new(OctIter::new(g.clone())),
            emitted: 0,
        }
    }

    pub fn kind(&self) -> StreamKind {
        self.kind
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

impl Iterator for EnumerationStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let item = self.inner.next()?;
        debug_assert!(
            emitted_set_ok(&self.graph, self.kind, &item),
            "stream {:?} emitted a set violating its defining predicate: {}",
            self.kind,
            item
        );
        self.emitted += 1;
        Some(item)
    }
}

/// Defining predicate of each stream kind, used for per-item debug checks.
pub fn emitted_set_ok(g: &Graph, kind: StreamKind, s: &VertexSet) -> bool {
    match kind {
        StreamKind::MaximalIndependentSets => is_maximal_independent(g, s),
        StreamKind::MinimalVertexCovers => is_maximal_independent(g, &s.complemented()),
        StreamKind::MinimalFeedbackVertexSets => {
            is_minimal_for(g, s, |g, rest| g.set_is_acyclic(rest))
        }
        StreamKind::MinimalOddCycleTransversals => {
            is_minimal_for(g, s, |g, rest| g.set_is_bipartite(rest))
        }
    }
}

pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> bool {
    if s.iter().any(|v| s.intersects_bits(g.neighbors(v))) {
        return false;
    }
    g.vertices()
        .all(|v| s.contains(v) || s.intersects_bits(g.neighbors(v)))
}

/// True iff `G - S` satisfies the predicate and no proper subset of `S` does.
fn is_minimal_for(g: &Graph, s: &VertexSet, ok: impl Fn(&Graph, &VertexSet) -> bool) -> bool {
    let rest = s.complemented();
    if !ok(g, &rest) {
        return false;
    }
    s.iter().all(|v| {
        let mut larger = rest.clone();
        larger.insert(v);
        !ok(g, &larger)
    })
}

/// Maximal-independent-set enumeration by incremental backtracking over the
/// vertex order: each maximal independent set of `G[{0..i+1}]` has a unique
/// generating parent among those of `G[{0..i}]`, so the DFS emits every
/// set exactly once without storing the family.
struct MisIter {
    g: Graph,
    stack: Vec<(usize, VertexSet)>,
}

impl MisIter {
    fn new(g: Graph) -> Self {
        let n = g.n();
        MisIter {
            g,
            stack: vec![(0, VertexSet::empty(n))],
        }
    }

    /// Greedy completion within `G[{0..limit}]`, adding vertices in
    /// increasing order. Defines the canonical parent of a candidate.
    fn greedy_extend(&self, set: &mut VertexSet, limit: usize) {
        for u in 0..limit {
            if !set.contains(u) && !set.intersects_bits(self.g.neighbors(u)) {
                set.insert(u);
            }
        }
    }

    fn is_maximal_at(&self, set: &VertexSet, limit: usize) -> bool {
        (0..limit).all(|u| set.contains(u) || set.intersects_bits(self.g.neighbors(u)))
    }
}

impl Iterator for MisIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((level, set)) = self.stack.pop() {
            if level == self.g.n() {
                return Some(set);
            }
            let x = level;
            if !set.intersects_bits(self.g.neighbors(x)) {
                // x extends the set; the unextended set is no longer maximal.
                let mut child = set;
                child.insert(x);
                self.stack.push((level + 1, child));
            } else {
                // Candidate that swaps the neighbors of x for x itself.
                let mut swapped = set.clone();
                swapped.difference_with_bits(self.g.neighbors(x));
                swapped.insert(x);
                if self.is_maximal_at(&swapped, level + 1) {
                    let mut parent = swapped.clone();
                    parent.remove(x);
                    self.greedy_extend(&mut parent, level);
                    if parent == set {
                        self.stack.push((level + 1, swapped));
                    }
                }
                self.stack.push((level + 1, set));
            }
        }
        None
    }
}

/// Minimal feedback vertex sets, enumerated as complements of maximal
/// induced forests.
///
/// The traversal walks the solution graph of maximal induced forests: from a
/// forest T and a vertex v outside it, every maximal forest of G[T + v]
/// containing v is obtained by deleting a minimal set of T-vertices cutting
/// all forest paths between neighbors of v, and greedily re-extending. Any
/// target forest T* shares strictly more vertices with some successor than
/// with T, so the walk reaches the whole family.
struct ForestTraversal {
    g: Graph,
    queue: VecDeque<VertexSet>,
    seen: HashSet<VertexSet>,
    pending: VecDeque<VertexSet>,
}

impl ForestTraversal {
    fn new(g: Graph) -> Self {
        let mut first = VertexSet::empty(g.n());
        for v in g.vertices() {
            first.insert(v);
            if !g.set_is_acyclic(&first) {
                first.remove(v);
            }
        }
        let mut seen = HashSet::new();
        seen.insert(first.clone());
        ForestTraversal {
            g,
            queue: VecDeque::from([first.clone()]),
            seen,
            pending: VecDeque::from([first]),
        }
    }

    fn extend_to_maximal(&self, forest: &mut VertexSet) {
        for u in self.g.vertices() {
            if !forest.contains(u) {
                forest.insert(u);
                if !self.g.set_is_acyclic(forest) {
                    forest.remove(u);
                }
            }
        }
    }

    /// Unique path between u and w in the forest G[T], as a vertex set.
    fn forest_path(&self, t: &VertexSet, u: usize, w: usize) -> Option<BitSet> {
        let n = self.g.n();
        let mut parent = vec![usize::MAX; n];
        let mut seen = BitSet::new(n);
        let mut queue = VecDeque::from([u]);
        seen.insert(u);
        while let Some(v) = queue.pop_front() {
            if v == w {
                let mut path = BitSet::new(n);
                let mut x = w;
                loop {
                    path.insert(x);
                    if x == u {
                        return Some(path);
                    }
                    x = parent[x];
                }
            }
            for y in self.g.neighbors(v).iter() {
                if t.contains(y) && !seen.contains(y) {
                    seen.insert(y);
                    parent[y] = v;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// All minimal vertex sets hitting every path, by branching on the first
    /// unhit path with a final criticality check.
    fn minimal_hitting_sets(paths: &[BitSet], n: usize) -> Vec<BitSet> {
        let mut out: HashSet<BitSet> = HashSet::new();
        let mut chosen = BitSet::new(n);
        Self::hit_rec(paths, &mut chosen, &mut out);
        let mut sorted: Vec<BitSet> = out.into_iter().collect();
        sorted.sort_by_key(|b| b.iter().collect::<Vec<_>>());
        sorted
    }

    fn hit_rec(paths: &[BitSet], chosen: &mut BitSet, out: &mut HashSet<BitSet>) {
        match paths.iter().find(|p| !p.intersects(chosen)) {
            None => {
                let critical = chosen.iter().all(|c| {
                    paths
                        .iter()
                        .any(|p| p.contains(c) && p.iter().all(|x| x == c || !chosen.contains(x)))
                });
                if critical {
                    out.insert(chosen.clone());
                }
            }
            Some(path) => {
                for v in path.clone().iter() {
                    chosen.insert(v);
                    Self::hit_rec(paths, chosen, out);
                    chosen.remove(v);
                }
            }
        }
    }

    fn expand(&mut self, t: &VertexSet) {
        let n = self.g.n();
        for v in self.g.vertices() {
            if t.contains(v) {
                continue;
            }
            let nbrs: Vec<usize> = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&u| t.contains(u))
                .collect();
            let mut paths = Vec::new();
            for i in 0..nbrs.len() {
                for j in i + 1..nbrs.len() {
                    if let Some(p) = self.forest_path(t, nbrs[i], nbrs[j]) {
                        paths.push(p);
                    }
                }
            }
            if paths.is_empty() {
                // T + v is still a forest, contradicting maximality of T.
                debug_assert!(false, "maximal forest admitted an extension");
                continue;
            }
            for cut in Self::minimal_hitting_sets(&paths, n) {
                let mut forest = t.clone();
                forest.difference_with_bits(&cut);
                forest.insert(v);
                debug_assert!(self.g.set_is_acyclic(&forest));
                self.extend_to_maximal(&mut forest);
                if self.seen.insert(forest.clone()) {
                    self.queue.push_back(forest.clone());
                    self.pending.push_back(forest);
                }
            }
        }
    }
}

impl Iterator for ForestTraversal {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(forest) = self.pending.pop_front() {
                return Some(forest.complemented());
            }
            let t = self.queue.pop_front()?;
            self.expand(&t);
        }
    }
}

/// Minimal odd cycle transversals: for each maximal independent set X of G
/// and each maximal independent set Y of G - X, the complement of X + Y is
/// an odd cycle transversal; shrinking it greedily and deduplicating yields
/// exactly the family of minimal ones.
struct OctIter {
    g: Graph,
    outer: MisIter,
    current: Option<Inner>,
    seen: HashSet<VertexSet>,
}

struct Inner {
    x: VertexSet,
    back: Vec<usize>,
    ys: MisIter,
}

impl OctIter {
    fn new(g: Graph) -> Self {
        OctIter {
            outer: MisIter::new(g.clone()),
            g,
            current: None,
            seen: HashSet::new(),
        }
    }

    /// Removes the lowest-indexed removable vertex until the transversal is
    /// minimal.
    fn shrink(&self, s: &mut VertexSet) {
        'outer: loop {
            let rest = s.complemented();
            let members: Vec<usize> = s.iter().collect();
            for v in members {
                let mut larger = rest.clone();
                larger.insert(v);
                if self.g.set_is_bipartite(&larger) {
                    s.remove(v);
                    continue 'outer;
                }
            }
            return;
        }
    }
}

impl Iterator for OctIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(inner) = &mut self.current {
                if let Some(y_local) = inner.ys.next() {
                    let mut union = inner.x.clone();
                    for yv in y_local.iter() {
                        union.insert(inner.back[yv]);
                    }
                    let mut candidate = union.complemented();
                    debug_assert!(self.g.set_is_bipartite(&union));
                    self.shrink(&mut candidate);
                    if self.seen.insert(candidate.clone()) {
                        return Some(candidate);
                    }
                    continue;
                }
                self.current = None;
            }
            let x = self.outer.next()?;
            let (sub, back) = self.g.remove_vertices(&x);
            self.current = Some(Inner {
                x,
                back,
                ys: MisIter::new(sub),
            });
        }
    }
}

pub const DEFAULT_ORACLE_CEILING: usize = 16;

/// All minimal sets S such that `predicate(G, V - S)` holds, by exhaustive
/// subset scan. The independent oracle the streams are tested against.
pub fn brute_force_minimal_sets(
    g: &Graph,
    predicate: impl Fn(&Graph, &VertexSet) -> bool,
    ceiling: usize,
) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > ceiling {
        return Err(Error::OracleCeilingExceeded { n, ceiling });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let s = VertexSet::from_iter(n, (0..n).filter(|&v| mask & (1 << v) != 0));
        let rest = s.complemented();
        if !predicate(g, &rest) {
            continue;
        }
        let minimal = s.iter().all(|v| {
            let mut larger = rest.clone();
            larger.insert(v);
            !predicate(g, &larger)
        });
        if minimal {
            out.push(s);
        }
    }
    out.sort_by_key(|s| (s.len(), s.canonical()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, star};

    fn collect_sorted(stream: EnumerationStream) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = stream.collect();
        v.sort_by_key(|s| (s.len(), s.canonical()));
        v
    }

    fn sets(n: usize, families: &[&[usize]]) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = families
            .iter()
            .map(|f| VertexSet::from_iter(n, f.iter().copied()))
            .collect();
        v.sort_by_key(|s| (s.len(), s.canonical()));
        v
    }

    #[test]
    fn mis_of_small_graphs() {
        let c5 = cycle(5);
        let got = collect_sorted(EnumerationStream::maximal_independent_sets(&c5));
        assert_eq!(got, sets(5, &[&[0, 2], &[1, 3], &[2, 4], &[0, 3], &[1, 4]]));

        let k4 = complete(4);
        let got = collect_sorted(EnumerationStream::maximal_independent_sets(&k4));
        assert_eq!(got, sets(4, &[&[0], &[1], &[2], &[3]]));

        let c4 = cycle(4);
        let got = collect_sorted(EnumerationStream::maximal_independent_sets(&c4));
        assert_eq!(got, sets(4, &[&[0, 2], &[1, 3]]));
    }

    #[test]
    fn mis_handles_trivial_graphs() {
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(
            EnumerationStream::maximal_independent_sets(&empty).count(),
            1
        );
        let edgeless = Graph::new(3, &[]).unwrap();
        let got = collect_sorted(EnumerationStream::maximal_independent_sets(&edgeless));
        assert_eq!(got, sets(3, &[&[0, 1, 2]]));
    }

    #[test]
    fn minimal_vertex_covers_complement_mis() {
        let c5 = cycle(5);
        let covers = collect_sorted(EnumerationStream::minimal_vertex_covers(&c5));
        assert_eq!(covers.len(), 5);
        assert!(covers.iter().all(|c| c.len() == 3));

        let p2 = path(2);
        let covers = collect_sorted(EnumerationStream::minimal_vertex_covers(&p2));
        assert_eq!(covers, sets(2, &[&[0], &[1]]));

        let edgeless = Graph::new(3, &[]).unwrap();
        let covers = collect_sorted(EnumerationStream::minimal_vertex_covers(&edgeless));
        assert_eq!(covers, sets(3, &[&[]]));
    }

    #[test]
    fn minimal_fvs_families() {
        let c4 = cycle(4);
        let got = collect_sorted(EnumerationStream::minimal_feedback_vertex_sets(&c4));
        assert_eq!(got, sets(4, &[&[0], &[1], &[2], &[3]]));

        let k4 = complete(4);
        let got = collect_sorted(EnumerationStream::minimal_feedback_vertex_sets(&k4));
        assert_eq!(got.len(), 6);
        assert!(got.iter().all(|s| s.len() == 2));

        let tree = star(4);
        let got = collect_sorted(EnumerationStream::minimal_feedback_vertex_sets(&tree));
        assert_eq!(got, sets(5, &[&[]]));
    }

    #[test]
    fn minimal_oct_families() {
        let c3 = cycle(3);
        let got = collect_sorted(EnumerationStream::minimal_odd_cycle_transversals(&c3));
        assert_eq!(got, sets(3, &[&[0], &[1], &[2]]));

        let c4 = cycle(4);
        let got = collect_sorted(EnumerationStream::minimal_odd_cycle_transversals(&c4));
        assert_eq!(got, sets(4, &[&[]]));

        let k4 = complete(4);
        let got = collect_sorted(EnumerationStream::minimal_odd_cycle_transversals(&k4));
        assert_eq!(got.len(), 6);
        assert!(got.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn streams_match_brute_force_on_assorted_graphs() {
        let graphs = vec![
            cycle(5),
            cycle(6),
            complete(5),
            path(6),
            star(4),
            petersen_fragment(),
        ];
        for g in &graphs {
            let mis = collect_sorted(EnumerationStream::maximal_independent_sets(g));
            let mis_oracle: Vec<VertexSet> = {
                let covers = brute_force_minimal_sets(g, rest_is_edgeless, 16).unwrap();
                let mut v: Vec<VertexSet> = covers.iter().map(|c| c.complemented()).collect();
                v.sort_by_key(|s| (s.len(), s.canonical()));
                v
            };
            assert_eq!(mis, mis_oracle, "MIS mismatch");

            let fvs = collect_sorted(EnumerationStream::minimal_feedback_vertex_sets(g));
            let fvs_oracle =
                brute_force_minimal_sets(g, |g, rest| g.set_is_acyclic(rest), 16).unwrap();
            assert_eq!(fvs, fvs_oracle, "FVS mismatch");

            let oct = collect_sorted(EnumerationStream::minimal_odd_cycle_transversals(g));
            let oct_oracle =
                brute_force_minimal_sets(g, |g, rest| g.set_is_bipartite(rest), 16).unwrap();
            assert_eq!(oct, oct_oracle, "OCT mismatch");
        }
    }

    fn rest_is_edgeless(g: &Graph, rest: &VertexSet) -> bool {
        !g.edges()
            .iter()
            .any(|&(u, v)| rest.contains(u) && rest.contains(v))
    }

    fn petersen_fragment() -> Graph {
        // Induced subgraph of the Petersen graph on its first 8 vertices.
        let (g, _) = crate::families::petersen().induced_subgraph(&VertexSet::from_iter(10, 0..8));
        g
    }

    #[test]
    fn brute_force_examples() {
        let c4 = cycle(4);
        let fvs = brute_force_minimal_sets(&c4, |g, rest| g.set_is_acyclic(rest), 16).unwrap();
        assert_eq!(fvs.len(), 4);
        assert!(fvs.iter().all(|s| s.len() == 1));

        let c3 = cycle(3);
        let oct = brute_force_minimal_sets(&c3, |g, rest| g.set_is_bipartite(rest), 16).unwrap();
        assert_eq!(oct.len(), 3);

        let big = complete(17);
        assert!(matches!(
            brute_force_minimal_sets(&big, |g, rest| g.set_is_acyclic(rest), 16),
            Err(Error::OracleCeilingExceeded { n: 17, ceiling: 16 })
        ));
    }

    #[test]
    fn stream_counts_and_kind() {
        let mut s = EnumerationStream::maximal_independent_sets(&cycle(5));
        assert_eq!(s.kind(), StreamKind::MaximalIndependentSets);
        s.next();
        s.next();
        assert_eq!(s.emitted(), 2);
    }
}
