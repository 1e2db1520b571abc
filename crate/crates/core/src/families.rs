//! Constructors for the standard graph families used in tests and corpus
//! generation.

use crate::graph::Graph;

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Star K1,k: center 0, leaves 1..=k.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::new(k + 1, &edges).unwrap()
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// The Petersen graph: outer C5 on 0..5, inner pentagram on 5..10, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::new(10, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!((path(4).n(), path(4).m()), (4, 3));
        assert_eq!((cycle(6).n(), cycle(6).m()), (6, 6));
        assert_eq!((complete(5).n(), complete(5).m()), (5, 10));
        assert_eq!((star(4).n(), star(4).m()), (5, 4));
        let oct = complete_multipartite(&[2, 2, 2]);
        assert_eq!((oct.n(), oct.m()), (6, 12));
        assert!(oct.is_sp2_free(2));
        let pet = petersen();
        assert_eq!((pet.n(), pet.m()), (10, 15));
        assert!(pet.vertices().all(|v| pet.degree(v) == 3));
    }
}
