//! Minimum and minimum-connected transversal computation.
//!
//! The connected solver enumerates the minimal transversals and, for each,
//! searches for the smallest padding that makes the set connected. With an
//! AUTO budget the padding is capped by the price-of-connectivity constant
//! for the requested transversal kind, which is sound exactly when the input
//! graph has no induced matching of the configured size.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use crate::enumerate::{EnumerationStream, DEFAULT_ORACLE_CEILING};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Which forbidden family the transversal targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransversalKind {
    VertexCover,
    FeedbackVertexSet,
    OddCycleTransversal,
}

impl TransversalKind {
    pub const ALL: [TransversalKind; 3] = [
        TransversalKind::VertexCover,
        TransversalKind::FeedbackVertexSet,
        TransversalKind::OddCycleTransversal,
    ];

    /// True iff `G[rest]` satisfies the kind's target property
    /// (edgeless / forest / bipartite). Superset-closed in the transversal.
    pub fn rest_ok(self, g: &Graph, rest: &VertexSet) -> bool {
        match self {
            TransversalKind::VertexCover => !g
                .edges()
                .iter()
                .any(|&(u, v)| rest.contains(u) && rest.contains(v)),
            TransversalKind::FeedbackVertexSet => g.set_is_acyclic(rest),
            TransversalKind::OddCycleTransversal => g.set_is_bipartite(rest),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TransversalKind::VertexCover => "vc",
            TransversalKind::FeedbackVertexSet => "fvs",
            TransversalKind::OddCycleTransversal => "oct",
        }
    }
}

/// True iff S is a transversal of the requested kind.
pub fn satisfies(g: &Graph, kind: TransversalKind, s: &VertexSet) -> bool {
    kind.rest_ok(g, &s.complemented())
}

/// Additive price-of-connectivity constant for a transversal kind on graphs
/// with no induced matching of size s. The raw formula goes negative for
/// small s; the effective budget clamps at zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PriceBound {
    pub kind: TransversalKind,
    pub s: usize,
    pub constant: i64,
    pub effective: usize,
}

pub fn price_constant(kind: TransversalKind, s: usize) -> PriceBound {
    assert!(s >= 1);
    let s = s as i64;
    let constant = match kind {
        TransversalKind::VertexCover | TransversalKind::OddCycleTransversal => {
            4 * s * s + 2 * s - 10
        }
        TransversalKind::FeedbackVertexSet => 12 * s * s - 2 * s - 2,
    };
    PriceBound {
        kind,
        s: s as usize,
        constant,
        effective: constant.max(0) as usize,
    }
}

/// Re-verifiable witness that the solution's removal leaves the target
/// property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// G - S has no edge.
    Edgeless,
    /// G - S is a forest.
    Forest,
    /// Two-coloring of G - S.
    Bipartition { x: VertexSet, y: VertexSet },
}

impl Certificate {
    fn build(g: &Graph, kind: TransversalKind, solution: &VertexSet) -> Self {
        match kind {
            TransversalKind::VertexCover => Certificate::Edgeless,
            TransversalKind::FeedbackVertexSet => Certificate::Forest,
            TransversalKind::OddCycleTransversal => {
                let rest = solution.complemented();
                let (x, y) = g
                    .set_bipartition(&rest)
                    .expect("solution leaves a bipartite graph");
                Certificate::Bipartition { x, y }
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Certificate::Edgeless => "edgeless",
            Certificate::Forest => "forest",
            Certificate::Bipartition { .. } => "bipartition",
        }
    }

    /// Re-checks the certificate against the graph and solution without
    /// going through the solver's predicate path.
    pub fn verify(&self, g: &Graph, solution: &VertexSet) -> bool {
        let rest = solution.complemented();
        match self {
            Certificate::Edgeless => !g
                .edges()
                .iter()
                .any(|&(u, v)| rest.contains(u) && rest.contains(v)),
            Certificate::Forest => g.set_is_acyclic(&rest),
            Certificate::Bipartition { x, y } => {
                let mut union = x.clone();
                union.union_with(y);
                !x.intersects(y)
                    && union == rest
                    && !g.edges().iter().any(|&(u, v)| {
                        (x.contains(u) && x.contains(v)) || (y.contains(u) && y.contains(v))
                    })
            }
        }
    }
}

/// Result of a solver run.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub kind: TransversalKind,
    pub connected_required: bool,
    pub size: usize,
    pub solution: VertexSet,
    pub certificate: Certificate,
    pub padding_used: usize,
    pub elapsed: Duration,
}

fn minimal_stream(g: &Graph, kind: TransversalKind) -> EnumerationStream {
    match kind {
        TransversalKind::VertexCover => EnumerationStream::minimal_vertex_covers(g),
        TransversalKind::FeedbackVertexSet => EnumerationStream::minimal_feedback_vertex_sets(g),
        TransversalKind::OddCycleTransversal => {
            EnumerationStream::minimal_odd_cycle_transversals(g)
        }
    }
}

/// Minimum-size transversal, found as the smallest member of the minimal-set
/// enumeration. Ties broken by lexicographically smallest canonical form.
pub fn min_transversal(g: &Graph, kind: TransversalKind) -> SolveReport {
    let start = Instant::now();
    let best = minimal_stream(g, kind)
        .min_by(|a, b| (a.len(), a.canonical()).cmp(&(b.len(), b.canonical())))
        .expect("every graph has at least one minimal transversal");
    SolveReport {
        kind,
        connected_required: false,
        size: best.len(),
        certificate: Certificate::build(g, kind, &best),
        solution: best,
        padding_used: 0,
        elapsed: start.elapsed(),
    }
}

/// First k-subset of `pool` (in lexicographic order) accepted by `pred`.
fn first_combination<F: FnMut(&[usize]) -> bool>(
    pool: &[usize],
    k: usize,
    pred: &mut F,
) -> Option<Vec<usize>> {
    fn rec<F: FnMut(&[usize]) -> bool>(
        pool: &[usize],
        k: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        pred: &mut F,
    ) -> bool {
        if chosen.len() == k {
            return pred(chosen);
        }
        let needed = k - chosen.len();
        for i in from..pool.len() {
            if pool.len() - i < needed {
                break;
            }
            chosen.push(pool[i]);
            if rec(pool, k, i + 1, chosen, pred) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    rec(pool, k, 0, &mut chosen, pred).then_some(chosen)
}

/// Vertices within BFS distance `limit` of `s`, excluding `s` itself.
fn candidate_pool(g: &Graph, s: &VertexSet, limit: usize) -> Vec<usize> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in s.iter() {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        if dist[v] == limit {
            continue;
        }
        for w in g.neighbors(v).iter() {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    (0..n)
        .filter(|&v| !s.contains(v) && dist[v] != usize::MAX)
        .collect()
}

/// Smallest superset of `s` that is connected, obtained by adding at most
/// `budget` vertices, or `None` if no such augmentation exists.
///
/// Only vertices within distance `budget` of `s` are tried: in a connected
/// augmentation every added vertex reaches `s` through added vertices alone,
/// so it lies within that distance.
pub fn connect_padding(g: &Graph, s: &VertexSet, budget: usize) -> Result<Option<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if g.is_connected_set(s) {
        return Ok(Some(s.clone()));
    }
    let pool = candidate_pool(g, s, budget);
    for k in 1..=budget {
        let mut pred = |chosen: &[usize]| {
            let mut candidate = s.clone();
            for &v in chosen {
                candidate.insert(v);
            }
            g.is_connected_set(&candidate)
        };
        if let Some(found) = first_combination(&pool, k, &mut pred) {
            let mut result = s.clone();
            for v in found {
                result.insert(v);
            }
            return Ok(Some(result));
        }
    }
    Ok(None)
}

/// Padding budget for the connected solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PadBudget {
    /// Use the price-of-connectivity constant for the given matching
    /// parameter; requires the input to have no induced matching of size s.
    Auto {
        s: usize,
    },
    Fixed(usize),
}

/// Minimum-size connected transversal via enumerate-then-pad: every minimal
/// transversal is padded to connectivity within the budget, and the global
/// smallest result wins. Ties broken lexicographically.
pub fn min_connected_transversal(
    g: &Graph,
    kind: TransversalKind,
    budget: PadBudget,
) -> Result<SolveReport> {
    let start = Instant::now();
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    let budget = match budget {
        PadBudget::Fixed(b) => b,
        PadBudget::Auto { s } => {
            if let Some(witness) = g.find_induced_matching(s) {
                return Err(Error::NotSp2Free { s, witness });
            }
            price_constant(kind, s).effective
        }
    };
    let mut best: Option<(VertexSet, usize)> = None;
    for minimal in minimal_stream(g, kind) {
        // Padding beyond the current best size cannot improve the answer;
        // equality is kept so the lexicographic tie-break stays global.
        let cap = match &best {
            Some((b, _)) if b.len() < minimal.len() => continue,
            Some((b, _)) => budget.min(b.len() - minimal.len()),
            None => budget,
        };
        if let Some(padded) = connect_padding(g, &minimal, cap)? {
            let padding = padded.len() - minimal.len();
            let better = match &best {
                None => true,
                Some((b, _)) => (padded.len(), padded.canonical()) < (b.len(), b.canonical()),
            };
            if better {
                best = Some((padded, padding));
            }
        }
    }
    let (solution, padding_used) = best.ok_or(Error::BudgetExhausted { budget })?;
    debug_assert!(satisfies(g, kind, &solution) && g.is_connected_set(&solution));
    Ok(SolveReport {
        kind,
        connected_required: true,
        size: solution.len(),
        certificate: Certificate::build(g, kind, &solution),
        solution,
        padding_used,
        elapsed: start.elapsed(),
    })
}

/// Exhaustive minimum connected transversal: scans all subsets in increasing
/// size (then lexicographic) order. The independent oracle for the connected
/// solver.
pub fn brute_force_min_connected(
    g: &Graph,
    kind: TransversalKind,
    ceiling: usize,
) -> Result<SolveReport> {
    let start = Instant::now();
    let n = g.n();
    if n > ceiling {
        return Err(Error::OracleCeilingExceeded { n, ceiling });
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    let all: Vec<usize> = (0..n).collect();
    for k in 0..=n {
        let mut pred = |chosen: &[usize]| {
            let s = VertexSet::from_iter(n, chosen.iter().copied());
            satisfies(g, kind, &s) && g.is_connected_set(&s)
        };
        if let Some(found) = first_combination(&all, k, &mut pred) {
            let solution = VertexSet::from_iter(n, found);
            return Ok(SolveReport {
                kind,
                connected_required: true,
                size: solution.len(),
                certificate: Certificate::build(g, kind, &solution),
                solution,
                padding_used: 0,
                elapsed: start.elapsed(),
            });
        }
    }
    unreachable!("the full vertex set is a connected transversal of a connected graph");
}

/// Decides whether a transversal of size at most `k` exists, optionally
/// connected, by exhaustive scan over subsets of size 0..=k.
pub fn brute_force_has_transversal(
    g: &Graph,
    kind: TransversalKind,
    k: usize,
    connected: bool,
    ceiling: usize,
) -> Result<bool> {
    let n = g.n();
    if n > ceiling {
        return Err(Error::OracleCeilingExceeded { n, ceiling });
    }
    let all: Vec<usize> = (0..n).collect();
    for size in 0..=k.min(n) {
        let mut pred = |chosen: &[usize]| {
            let s = VertexSet::from_iter(n, chosen.iter().copied());
            satisfies(g, kind, &s) && (!connected || g.is_connected_set(&s))
        };
        if first_combination(&all, size, &mut pred).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Minimum (unconstrained) transversal size by exhaustive scan.
pub fn brute_force_min_size(g: &Graph, kind: TransversalKind, ceiling: usize) -> Result<usize> {
    let n = g.n();
    if n > ceiling {
        return Err(Error::OracleCeilingExceeded { n, ceiling });
    }
    let all: Vec<usize> = (0..n).collect();
    for size in 0..=n {
        let mut pred = |chosen: &[usize]| {
            let s = VertexSet::from_iter(n, chosen.iter().copied());
            satisfies(g, kind, &s)
        };
        if first_combination(&all, size, &mut pred).is_some() {
            return Ok(size);
        }
    }
    unreachable!("the full vertex set is a transversal");
}

/// Convenience wrapper using the default oracle ceiling.
pub fn default_ceiling() -> usize {
    DEFAULT_ORACLE_CEILING
}
