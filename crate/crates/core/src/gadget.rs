//! Reduction-instance constructors and the brute-force deciders that verify
//! each claimed equivalence on small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{brute_force_has_transversal, TransversalKind};

/// Default ceiling for the exponential factor/path oracles.
pub const DEFAULT_FACTOR_CEILING: usize = 14;

/// Which reduction a gadget instance came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Line graph, budget m - n: even cycle factor vs. odd cycle transversal.
    OctLine,
    /// Apex + 4-cycle line graph, budget m: even cycle factor vs. connected
    /// odd cycle transversal.
    CoctLine,
    /// Double apex + pendants line graph, budget m + n - 1: Hamiltonian path
    /// vs. connected feedback vertex set.
    CfvsLine,
    /// Repeated double subdivision up to girth p, carried budget.
    OctGirth,
    /// Parallel even paths per edge, carried budget: connected vertex cover
    /// vs. connected odd cycle transversal.
    CoctGirth,
    /// Parallel paths of length p - 1 per edge, carried budget: connected
    /// vertex cover vs. connected feedback vertex set.
    CfvsGirth,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::OctLine => "oct-line",
            Provenance::CoctLine => "coct-line",
            Provenance::CfvsLine => "cfvs-line",
            Provenance::OctGirth => "oct-girth",
            Provenance::CoctGirth => "coct-girth",
            Provenance::CfvsGirth => "cfvs-girth",
        }
    }
}

/// Role of a constructed vertex, mapping it back to the source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexRole {
    /// Line-graph vertex for an edge of the source graph.
    OriginalEdge(usize, usize),
    /// Line-graph vertex for the edge joining apex x to a source vertex.
    ApexXEdge(usize),
    /// Line-graph vertex for the edge joining apex y to a source vertex.
    ApexYEdge(usize),
    /// Line-graph vertex for an edge of the attached x, y1, y2, y3 cycle.
    AttachedCycleEdge(u8),
    /// Line-graph vertex for a pendant edge (0 = x'x, 1 = y'y).
    PendantEdge(u8),
    /// Vertex carried over from the source graph.
    OriginalVertex(usize),
    /// Internal vertex of an added or subdividing path; `endpoints` are the
    /// path's attachment vertices at construction time.
    PathInternal {
        endpoints: (usize, usize),
        index: usize,
    },
}

/// A constructed reduction instance: target graph, budget, provenance, and
/// a role for every vertex.
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub budget_k: i64,
    pub provenance: Provenance,
    pub labels: Vec<VertexRole>,
}

impl GadgetInstance {
    fn check(&self) {
        assert_eq!(
            self.labels.len(),
            self.graph.n(),
            "labels must cover every constructed vertex"
        );
    }
}

/// Vertex-disjoint cycles covering the whole vertex set.
#[derive(Debug, Clone)]
pub struct CycleFactor {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleFactor {
    /// Checks the defining invariants against a graph, including evenness.
    pub fn is_valid_even_factor(&self, g: &Graph) -> bool {
        let mut covered = vec![false; g.n()];
        for cycle in &self.cycles {
            if cycle.len() < 3 || cycle.len() % 2 != 0 {
                return false;
            }
            for i in 0..cycle.len() {
                let v = cycle[i];
                if covered[v] || !g.has_edge(v, cycle[(i + 1) % cycle.len()]) {
                    return false;
                }
                covered[v] = true;
            }
        }
        covered.iter().all(|&c| c)
    }
}

/// Searches exhaustively for a 2-regular spanning subgraph whose cycles are
/// all even. Backtracks over the edge list with degree feasibility pruning.
pub fn has_even_cycle_factor(g: &Graph, ceiling: usize) -> Result<Option<CycleFactor>> {
    let n = g.n();
    if n > ceiling {
        return Err(Error::OracleCeilingExceeded { n, ceiling });
    }
    if n == 0 {
        return Ok(Some(CycleFactor { cycles: vec![] }));
    }
    // Even cycles only: total vertex count must be even, every vertex needs
    // degree at least 2.
    if n % 2 == 1 || g.vertices().any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    let m = g.m();
    let mut deg = vec![0usize; n];
    let mut rem: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut chosen = vec![false; m];
    let found = factor_rec(g, 0, &mut deg, &mut rem, &mut chosen);
    Ok(found)
}

fn factor_rec(
    g: &Graph,
    i: usize,
    deg: &mut [usize],
    rem: &mut [usize],
    chosen: &mut [bool],
) -> Option<CycleFactor> {
    if i == g.m() {
        if deg.iter().any(|&d| d != 2) {
            return None;
        }
        let factor = decompose_cycles(g, chosen);
        if factor.cycles.iter().all(|c| c.len() % 2 == 0) {
            return Some(factor);
        }
        return None;
    }
    let (u, v) = g.edges()[i];
    rem[u] -= 1;
    rem[v] -= 1;
    if deg[u] < 2 && deg[v] < 2 {
        deg[u] += 1;
        deg[v] += 1;
        chosen[i] = true;
        if deg[u] + rem[u] >= 2 && deg[v] + rem[v] >= 2 {
            if let Some(f) = factor_rec(g, i + 1, deg, rem, chosen) {
                return Some(f);
            }
        }
        chosen[i] = false;
        deg[u] -= 1;
        deg[v] -= 1;
    }
    if deg[u] + rem[u] >= 2 && deg[v] + rem[v] >= 2 {
        if let Some(f) = factor_rec(g, i + 1, deg, rem, chosen) {
            return Some(f);
        }
    }
    rem[u] += 1;
    rem[v] += 1;
    None
}

fn decompose_cycles(g: &Graph, chosen: &[bool]) -> CycleFactor {
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if chosen[i] {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = adj[start][0];
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            let next = if adj[cur][0] == prev {
                adj[cur][1]
            } else {
                adj[cur][0]
            };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    CycleFactor { cycles }
}

/// Bitmask DP for a Hamiltonian path; returns one as a vertex sequence.
pub fn has_hamiltonian_path(g: &Graph, ceiling: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > ceiling {
        return Err(Error::OracleCeilingExceeded { n, ceiling });
    }
    if n == 0 {
        return Ok(Some(vec![]));
    }
    let full: usize = (1 << n) - 1;
    let mut parent = vec![vec![u8::MAX; n]; 1 << n];
    let mut reachable = vec![0u32; 1 << n];
    for v in 0..n {
        reachable[1 << v] |= 1 << v;
    }
    for mask in 1..=full {
        if reachable[mask] == 0 {
            continue;
        }
        for last in 0..n {
            if reachable[mask] & (1 << last) == 0 {
                continue;
            }
            for w in g.neighbors(last).iter() {
                let bit = 1 << w;
                if mask & bit == 0 && reachable[mask | bit] & (1u32 << w) == 0 {
                    reachable[mask | bit] |= 1 << w;
                    parent[mask | bit][w] = last as u8;
                }
            }
        }
    }
    let last = (0..n).find(|&v| reachable[full] & (1 << v) != 0);
    Ok(last.map(|mut v| {
        let mut mask = full;
        let mut path = Vec::with_capacity(n);
        loop {
            path.push(v);
            let p = parent[mask][v];
            if p == u8::MAX {
                break;
            }
            mask &= !(1 << v);
            v = p as usize;
        }
        path.reverse();
        path
    }))
}

/// L(G) with budget m - n: the target of the even-cycle-factor reduction for
/// plain odd cycle transversal.
pub fn gadget_oct_linegraph(g: &Graph) -> Result<GadgetInstance> {
    let (lg, map) = g.line_graph()?;
    let labels = (0..lg.n())
        .map(|v| {
            let (a, b) = map.edge_of(v);
            VertexRole::OriginalEdge(a, b)
        })
        .collect();
    let inst = GadgetInstance {
        graph: lg,
        budget_k: g.m() as i64 - g.n() as i64,
        provenance: Provenance::OctLine,
        labels,
    };
    inst.check();
    Ok(inst)
}

fn classify_line_vertex(edge: (usize, usize), n: usize, apexes: &ApexNames) -> VertexRole {
    let (a, b) = edge;
    if a < n && b < n {
        return VertexRole::OriginalEdge(a, b);
    }
    apexes.classify(a.max(b), a.min(b), n)
}

enum ApexNames {
    /// x at n; cycle vertices y1..y3 at n+1..n+3.
    CoctStyle,
    /// x at n, y at n+1, pendants x' at n+2, y' at n+3.
    CfvsStyle,
}

impl ApexNames {
    fn classify(&self, hi: usize, lo: usize, n: usize) -> VertexRole {
        match self {
            ApexNames::CoctStyle => {
                if hi == n {
                    // xu with u original (x-y edges have hi > n).
                    VertexRole::ApexXEdge(lo)
                } else if lo >= n {
                    // Edge within {x, y1, y2, y3}.
                    VertexRole::AttachedCycleEdge((hi - n) as u8)
                } else {
                    unreachable!("y vertices only touch the attached cycle")
                }
            }
            ApexNames::CfvsStyle => {
                if lo < n {
                    if hi == n {
                        VertexRole::ApexXEdge(lo)
                    } else {
                        VertexRole::ApexYEdge(lo)
                    }
                } else {
                    // x'x is (n, n+2), y'y is (n+1, n+3).
                    VertexRole::PendantEdge((lo - n) as u8)
                }
            }
        }
    }
}

/// Apex construction: G plus a dominating vertex x and a 4-cycle x,y1,y2,y3,
/// then the line graph, with budget m. Links even cycle factors of G to
/// connected odd cycle transversals of the output.
pub fn gadget_coct_linegraph(g: &Graph) -> Result<GadgetInstance> {
    if g.m() == 0 {
        return Err(Error::EdgelessInput);
    }
    let n = g.n();
    let (x, y1, y2, y3) = (n, n + 1, n + 2, n + 3);
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend((0..n).map(|u| (x, u)));
    edges.extend([(x, y1), (y1, y2), (y2, y3), (y3, x)]);
    let gp = Graph::new(n + 4, &edges)?;
    assert_eq!(gp.n(), n + 4);
    assert_eq!(gp.m(), g.m() + n + 4);
    let (lg, map) = gp.line_graph()?;
    let labels = (0..lg.n())
        .map(|v| classify_line_vertex(map.edge_of(v), n, &ApexNames::CoctStyle))
        .collect();
    let inst = GadgetInstance {
        graph: lg,
        budget_k: g.m() as i64,
        provenance: Provenance::CoctLine,
        labels,
    };
    inst.check();
    Ok(inst)
}

/// Double-apex construction: G plus dominating vertices x, y and pendants
/// x', y', then the line graph, with budget m + n - 1. Links Hamiltonian
/// paths of G to connected feedback vertex sets of the output.
pub fn gadget_cfvs_linegraph(g: &Graph) -> Result<GadgetInstance> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices {
            required: 3,
            actual: n,
        });
    }
    let (x, y, xp, yp) = (n, n + 1, n + 2, n + 3);
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend((0..n).map(|u| (x, u)));
    edges.extend((0..n).map(|u| (y, u)));
    edges.extend([(x, xp), (y, yp)]);
    let gp = Graph::new(n + 4, &edges)?;
    assert_eq!(gp.n(), n + 4);
    assert_eq!(gp.m(), g.m() + 2 * n + 2);
    let (lg, map) = gp.line_graph()?;
    let labels = (0..lg.n())
        .map(|v| classify_line_vertex(map.edge_of(v), n, &ApexNames::CfvsStyle))
        .collect();
    let inst = GadgetInstance {
        graph: lg,
        budget_k: (g.m() + n) as i64 - 1,
        provenance: Provenance::CfvsLine,
        labels,
    };
    inst.check();
    Ok(inst)
}

/// Raises the girth to at least `p` by repeatedly double-subdividing an edge
/// on a currently shortest cycle. The minimum odd-cycle-transversal size is
/// invariant under each step, so the budget is carried through unchanged.
pub fn gadget_oct_girth(g: &Graph, p: usize, k: i64) -> Result<GadgetInstance> {
    assert!(p >= 3);
    let mut current = g.clone();
    let mut labels: Vec<VertexRole> = g.vertices().map(VertexRole::OriginalVertex).collect();
    while let Some(cycle) = current.shortest_cycle() {
        if cycle.len() >= p {
            break;
        }
        let e = (cycle[0], cycle[1]);
        current = current.subdivide_edge(e, 2)?;
        labels.push(VertexRole::PathInternal {
            endpoints: e,
            index: 0,
        });
        labels.push(VertexRole::PathInternal {
            endpoints: e,
            index: 1,
        });
    }
    assert!(current.girth().is_none_or(|girth| girth >= p));
    let inst = GadgetInstance {
        graph: current,
        budget_k: k,
        provenance: Provenance::OctGirth,
        labels,
    };
    inst.check();
    Ok(inst)
}

fn add_parallel_paths(g: &Graph, internal_per_edge: usize) -> (Graph, Vec<VertexRole>) {
    let mut labels: Vec<VertexRole> = g.vertices().map(VertexRole::OriginalVertex).collect();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut next = g.n();
    for &(u, v) in g.edges() {
        let mut prev = u;
        for i in 0..internal_per_edge {
            edges.push((prev, next));
            labels.push(VertexRole::PathInternal {
                endpoints: (u, v),
                index: i,
            });
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    let out = Graph::new(next, &edges).expect("path edges are valid");
    (out, labels)
}

fn require_girth_at_least(g: &Graph, p: usize) -> Result<()> {
    if let Some(girth) = g.girth() {
        if girth < p {
            return Err(Error::GirthTooSmall { girth, required: p });
        }
    }
    Ok(())
}

/// Adds a parallel path with 2*floor(p/2) edges alongside every edge, keeping
/// the original edge. Links connected vertex covers of G to connected odd
/// cycle transversals of the output, at the same budget.
pub fn gadget_coct_girth(g: &Graph, p: usize, k: i64) -> Result<GadgetInstance> {
    assert!(p >= 3);
    require_girth_at_least(g, p)?;
    if g.m() < 2 {
        return Err(Error::TooFewEdges {
            required: 2,
            actual: g.m(),
        });
    }
    // A path with 2*floor(p/2) edges has one fewer internal vertex.
    let (graph, labels) = add_parallel_paths(g, 2 * (p / 2) - 1);
    assert!(graph.girth().is_none_or(|girth| girth >= p));
    let inst = GadgetInstance {
        graph,
        budget_k: k,
        provenance: Provenance::CoctGirth,
        labels,
    };
    inst.check();
    Ok(inst)
}

/// Adds a parallel path of p - 1 edges alongside every edge, so each original
/// edge lies on a cycle of length exactly p. Links connected vertex covers of
/// G to connected feedback vertex sets of the output, at the same budget.
pub fn gadget_cfvs_girth(g: &Graph, p: usize, k: i64) -> Result<GadgetInstance> {
    assert!(p >= 3);
    require_girth_at_least(g, p)?;
    let (graph, labels) = add_parallel_paths(g, p - 2);
    assert!(graph.girth().is_none_or(|girth| girth >= p));
    let inst = GadgetInstance {
        graph,
        budget_k: k,
        provenance: Provenance::CfvsGirth,
        labels,
    };
    inst.check();
    Ok(inst)
}

/// Decides both sides of the instance's claimed biconditional by brute force
/// and reports whether they agree.
pub fn verify_gadget(inst: &GadgetInstance, source: &Graph, ceiling: usize) -> Result<bool> {
    let k = inst.budget_k;
    let target_ok = |kind: TransversalKind, connected: bool| -> Result<bool> {
        if k < 0 {
            return Ok(false);
        }
        brute_force_has_transversal(&inst.graph, kind, k as usize, connected, ceiling)
    };
    let source_has = |kind: TransversalKind, connected: bool| -> Result<bool> {
        if k < 0 {
            return Ok(false);
        }
        brute_force_has_transversal(source, kind, k as usize, connected, ceiling)
    };
    let (lhs, rhs) = match inst.provenance {
        Provenance::OctLine => (
            has_even_cycle_factor(source, ceiling)?.is_some(),
            target_ok(TransversalKind::OddCycleTransversal, false)?,
        ),
        Provenance::CoctLine => (
            has_even_cycle_factor(source, ceiling)?.is_some(),
            target_ok(TransversalKind::OddCycleTransversal, true)?,
        ),
        Provenance::CfvsLine => (
            has_hamiltonian_path(source, ceiling)?.is_some(),
            target_ok(TransversalKind::FeedbackVertexSet, true)?,
        ),
        Provenance::OctGirth => (
            source_has(TransversalKind::OddCycleTransversal, false)?,
            target_ok(TransversalKind::OddCycleTransversal, false)?,
        ),
        Provenance::CoctGirth => (
            source_has(TransversalKind::VertexCover, true)?,
            target_ok(TransversalKind::OddCycleTransversal, true)?,
        ),
        Provenance::CfvsGirth => (
            source_has(TransversalKind::VertexCover, true)?,
            target_ok(TransversalKind::FeedbackVertexSet, true)?,
        ),
    };
    Ok(lhs == rhs)
}

/// The minimum odd-cycle-transversal size by brute force; helper for the
/// subdivision-invariance checks.
pub fn brute_force_min_oct(g: &Graph, ceiling: usize) -> Result<usize> {
    crate::solve::brute_force_min_size(g, TransversalKind::OddCycleTransversal, ceiling)
}
