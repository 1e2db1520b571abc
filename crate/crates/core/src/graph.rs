//! Immutable simple undirected graphs with bitset adjacency rows, plus the
//! structural predicates and transformations the solvers and gadgets consume.

use std::cmp::Ordering;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Immutable simple undirected graph.
///
/// Adjacency is stored both as per-vertex neighbor bitsets and as an edge
/// list of unordered pairs `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs are collapsed,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![BitSet::new(n); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let mut dedup = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            for v in row.iter() {
                if v > u {
                    dedup.push((u, v));
                }
            }
        }
        let g = Graph {
            n,
            adj,
            edges: dedup,
        };
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    fn check_invariants(&self) -> bool {
        let degree_sum: usize = (0..self.n).map(|v| self.degree(v)).sum();
        degree_sum == 2 * self.m()
            && (0..self.n).all(|v| !self.adj[v].contains(v))
            && self
                .edges
                .iter()
                .all(|&(u, v)| self.adj[u].contains(v) && self.adj[v].contains(u))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// The subgraph induced by `set`, together with the map from new vertex
    /// indices back to the original ones (ascending order of `set`).
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let back: Vec<usize> = set.iter().collect();
        let mut fwd = vec![usize::MAX; self.n];
        for (new, &old) in back.iter().enumerate() {
            fwd[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if set.contains(u) && set.contains(v) {
                edges.push((fwd[u], fwd[v]));
            }
        }
        let g = Graph::new(back.len(), &edges).expect("induced edges are valid");
        (g, back)
    }

    /// The graph with the vertices of `set` deleted, plus the back map.
    pub fn remove_vertices(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let mut keep = set.clone();
        keep.complement();
        self.induced_subgraph(&keep)
    }

    /// True iff `G[set]` has at most one connected component. Empty sets and
    /// singletons count as connected.
    pub fn is_connected_set(&self, set: &VertexSet) -> bool {
        self.count_components(set) <= 1
    }

    /// Number of connected components of `G[set]`.
    pub fn count_components(&self, set: &VertexSet) -> usize {
        let mut seen = BitSet::new(self.n);
        let mut components = 0;
        let mut stack = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            components += 1;
            seen.insert(start);
            stack.push(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if set.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(&VertexSet::full(self.n))
    }

    /// True iff the graph is a forest.
    pub fn is_acyclic(&self) -> bool {
        self.set_is_acyclic(&VertexSet::full(self.n))
    }

    /// True iff `G[set]` is a forest.
    pub fn set_is_acyclic(&self, set: &VertexSet) -> bool {
        // DFS with parent edges; a visited non-parent neighbor closes a cycle.
        let mut seen = BitSet::new(self.n);
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            stack.push((start, usize::MAX));
            while let Some((v, parent)) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !set.contains(w) || w == parent {
                        continue;
                    }
                    if seen.contains(w) {
                        return false;
                    }
                    seen.insert(w);
                    stack.push((w, v));
                }
            }
        }
        true
    }

    /// Two-colorability test; returns a bipartition witness on success.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        self.set_bipartition(&VertexSet::full(self.n))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Two-coloring of `G[set]`, if it is bipartite.
    pub fn set_bipartition(&self, set: &VertexSet) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in set.iter() {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if !set.contains(w) {
                        continue;
                    }
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let mut x = VertexSet::empty(self.n);
        let mut y = VertexSet::empty(self.n);
        for v in set.iter() {
            if color[v] == 0 {
                x.insert(v);
            } else {
                y.insert(v);
            }
        }
        Some((x, y))
    }

    /// True iff `G[set]` has no odd cycle.
    pub fn set_is_bipartite(&self, set: &VertexSet) -> bool {
        self.set_bipartition(set).is_some()
    }

    /// Length of a shortest cycle, or `None` for forests. BFS from every
    /// vertex, O(nm).
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// The vertices of one shortest cycle, in cycle order, or `None` for
    /// forests.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            let mut queue = std::collections::VecDeque::new();
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if w != parent[v] && parent[w] != v {
                        // Non-tree edge: closes a cycle through the root of
                        // length at most dist[v] + dist[w] + 1. The bound is
                        // tight for some root on a shortest cycle.
                        let len = dist[v] + dist[w] + 1;
                        if best.as_ref().is_none_or(|b| len < b.len()) {
                            let mut left = Vec::new();
                            let mut x = v;
                            while x != usize::MAX {
                                left.push(x);
                                x = parent[x];
                            }
                            let mut right = Vec::new();
                            let mut y = w;
                            while y != usize::MAX {
                                right.push(y);
                                y = parent[y];
                            }
                            // Paths are vertex-disjoint except the root only
                            // when len equals the girth; otherwise the walk
                            // still contains a cycle no shorter than the
                            // girth, so the minimum over all roots is exact.
                            left.reverse();
                            right.pop();
                            right.reverse();
                            let mut cycle = left;
                            cycle.extend(right.into_iter().rev());
                            if cycle.iter().collect::<std::collections::HashSet<_>>().len()
                                == cycle.len()
                            {
                                best = Some(cycle);
                            }
                        }
                    }
                }
            }
        }
        best
    }

    /// True iff the graph has no induced matching of `s` edges.
    pub fn is_sp2_free(&self, s: usize) -> bool {
        self.find_induced_matching(s).is_none()
    }

    /// Searches for an induced matching of exactly `s` edges; returns the
    /// edges of one if present. Cost O(m^s).
    pub fn find_induced_matching(&self, s: usize) -> Option<Vec<(usize, usize)>> {
        assert!(s >= 1, "matching size must be positive");
        let mut chosen = Vec::new();
        let mut blocked = BitSet::new(self.n);
        self.induced_matching_rec(s, 0, &mut chosen, &mut blocked)
    }

    fn induced_matching_rec(
        &self,
        s: usize,
        from: usize,
        chosen: &mut Vec<(usize, usize)>,
        blocked: &mut BitSet,
    ) -> Option<Vec<(usize, usize)>> {
        if chosen.len() == s {
            return Some(chosen.clone());
        }
        for i in from..self.edges.len() {
            let (u, v) = self.edges[i];
            if blocked.contains(u) || blocked.contains(v) {
                continue;
            }
            let mut added = Vec::new();
            for x in [u, v] {
                if !blocked.contains(x) {
                    blocked.insert(x);
                    added.push(x);
                }
                for w in self.adj[x].iter() {
                    if !blocked.contains(w) {
                        blocked.insert(w);
                        added.push(w);
                    }
                }
            }
            chosen.push((u, v));
            if let Some(found) = self.induced_matching_rec(s, i + 1, chosen, blocked) {
                return Some(found);
            }
            chosen.pop();
            for x in added {
                blocked.remove(x);
            }
        }
        None
    }

    /// True iff the graph contains no induced K1,3.
    pub fn is_claw_free(&self) -> bool {
        for v in 0..self.n {
            let nbrs: Vec<usize> = self.adj[v].iter().collect();
            for i in 0..nbrs.len() {
                for j in i + 1..nbrs.len() {
                    if self.has_edge(nbrs[i], nbrs[j]) {
                        continue;
                    }
                    for k in j + 1..nbrs.len() {
                        if !self.has_edge(nbrs[i], nbrs[k]) && !self.has_edge(nbrs[j], nbrs[k]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The line graph: one vertex per edge, adjacency = shared endpoint.
    pub fn line_graph(&self) -> Result<(Graph, LineGraphMap)> {
        if self.edges.is_empty() {
            return Err(Error::EdgelessInput);
        }
        let m = self.edges.len();
        let mut line_edges = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    line_edges.push((i, j));
                }
            }
        }
        let lg = Graph::new(m, &line_edges).expect("line graph edges are valid");
        debug_assert!(lg.is_claw_free());
        Ok((lg, LineGraphMap::new(self.edges.clone())))
    }

    /// Replaces edge `e` by a path with `t` internal new vertices, indexed
    /// `n..n+t`. With `t = 0` the graph is returned unchanged.
    pub fn subdivide_edge(&self, e: (usize, usize), t: usize) -> Result<Graph> {
        let (u, v) = e;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotFound(u, v));
        }
        if t == 0 {
            return Ok(self.clone());
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
            .collect();
        let mut prev = u;
        for i in 0..t {
            edges.push((prev, self.n + i));
            prev = self.n + i;
        }
        edges.push((prev, v));
        Graph::new(self.n + t, &edges)
    }
}

/// Subset of the vertices of a graph on a fixed number of vertices.
///
/// Ordering is lexicographic on the ascending vertex list, which is the
/// canonical serialization used for deduplication and tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: BitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: BitSet::new(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        s.bits.complement();
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Self {
        let mut s = Self::empty(n);
        for v in items {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.universe()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.remove(v);
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn complement(&mut self) {
        self.bits.complement();
    }

    pub fn complemented(&self) -> Self {
        let mut c = self.clone();
        c.complement();
        c
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn difference_with_bits(&mut self, other: &BitSet) {
        self.bits.difference_with(other);
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.bits.intersects(&other.bits)
    }

    pub fn intersects_bits(&self, other: &BitSet) -> bool {
        self.bits.intersects(other)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Ascending vertex list; the canonical serialization.
    pub fn canonical(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Bijection between the edges of a graph and the vertices of its line graph.
#[derive(Debug, Clone)]
pub struct LineGraphMap {
    edges: Vec<(usize, usize)>,
}

impl LineGraphMap {
    fn new(edges: Vec<(usize, usize)>) -> Self {
        LineGraphMap { edges }
    }

    /// Edge of the source graph corresponding to a line-graph vertex.
    pub fn edge_of(&self, line_vertex: usize) -> (usize, usize) {
        self.edges[line_vertex]
    }

    /// Line-graph vertex corresponding to a source edge.
    pub fn vertex_of(&self, edge: (usize, usize)) -> Option<usize> {
        let key = (edge.0.min(edge.1), edge.0.max(edge.1));
        self.edges.iter().position(|&e| e == key)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, petersen, star};

    #[test]
    fn build_rejects_self_loop_and_range() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c3.m(), 3);
        let c4 = cycle(4);
        assert_eq!(c4.m(), 4);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let (p3, map) = c5.induced_subgraph(&VertexSet::from_iter(5, [0, 1, 2]));
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.m(), 2);
        assert_eq!(map, vec![0, 1, 2]);

        let (p2, _) = complete(4).induced_subgraph(&VertexSet::from_iter(4, [0, 1]));
        assert_eq!((p2.n(), p2.m()), (2, 1));

        let (iso, _) = cycle(4).induced_subgraph(&VertexSet::from_iter(4, [0, 2]));
        assert_eq!((iso.n(), iso.m()), (2, 0));
    }

    #[test]
    fn connected_sets() {
        let c5 = cycle(5);
        assert!(c5.is_connected_set(&VertexSet::from_iter(5, [0, 1, 2])));
        assert!(!c5.is_connected_set(&VertexSet::from_iter(5, [0, 2])));
        assert!(c5.is_connected_set(&VertexSet::empty(5)));
        assert!(c5.is_connected_set(&VertexSet::from_iter(5, [3])));
    }

    #[test]
    fn acyclic_bipartite() {
        assert!(!cycle(4).is_acyclic());
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(5).is_acyclic());
        assert!(!cycle(5).is_bipartite());
        assert!(path(4).is_acyclic());
        assert!(path(4).is_bipartite());
        let (x, y) = cycle(4).bipartition().unwrap();
        assert_eq!(x.len() + y.len(), 4);
        assert!(!cycle(4).edges().iter().any(|&(u, v)| {
            (x.contains(u) && x.contains(v)) || (y.contains(u) && y.contains(v))
        }));
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(cycle(3).girth(), Some(3));
        assert_eq!(path(6).girth(), None);
        assert_eq!(petersen().girth(), Some(5));
        let cyc = cycle(7).shortest_cycle().unwrap();
        assert_eq!(cyc.len(), 7);
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        for g in [cycle(3), cycle(6), complete(5), petersen()] {
            let c = g.shortest_cycle().unwrap();
            assert_eq!(c.len(), g.girth().unwrap());
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn sp2_freeness() {
        let two_p2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_p2.is_sp2_free(2));
        assert!(cycle(4).is_sp2_free(2));
        assert!(!path(5).is_sp2_free(2));
        // s = 1: exactly the edgeless graphs.
        assert!(Graph::new(4, &[]).unwrap().is_sp2_free(1));
        assert!(!path(2).is_sp2_free(1));
    }

    #[test]
    fn line_graphs() {
        let (p2, _) = path(3).line_graph().unwrap();
        assert_eq!((p2.n(), p2.m()), (2, 1));

        let (c3, _) = star(3).line_graph().unwrap();
        assert_eq!((c3.n(), c3.m()), (3, 3));
        assert_eq!(c3.girth(), Some(3));

        let (oct, map) = complete(4).line_graph().unwrap();
        assert_eq!((oct.n(), oct.m()), (6, 12));
        assert!(oct.vertices().all(|v| oct.degree(v) == 4));
        assert!(oct.is_claw_free());
        for lv in 0..map.len() {
            assert_eq!(map.vertex_of(map.edge_of(lv)), Some(lv));
        }

        assert!(matches!(
            Graph::new(3, &[]).unwrap().line_graph(),
            Err(Error::EdgelessInput)
        ));
    }

    #[test]
    fn subdivision() {
        let c5 = cycle(3).subdivide_edge((0, 1), 2).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert_eq!(c5.girth(), Some(5));

        let same = cycle(3).subdivide_edge((0, 1), 0).unwrap();
        assert_eq!(same, cycle(3));

        let p3 = path(2).subdivide_edge((0, 1), 1).unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        assert!(p3.is_acyclic());

        assert_eq!(
            cycle(4).subdivide_edge((0, 2), 1),
            Err(Error::EdgeNotFound(0, 2))
        );
    }

    #[test]
    fn subdividing_every_edge_once_increases_girth() {
        for g in [cycle(3), cycle(4), complete(4), petersen()] {
            let before = g.girth().unwrap();
            let mut subdivided = g.clone();
            // Subdivide the original edges only; new edges keep shifting.
            for &e in g.edges() {
                subdivided = subdivided.subdivide_edge(e, 1).unwrap();
            }
            assert!(subdivided.girth().unwrap() > before);
        }
    }
}
