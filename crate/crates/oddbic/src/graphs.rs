//! Small named graphs and basic constructions used in tests, docs and the
//! CLI examples.

use crate::graph::Graph;

/// The cycle `C_k` on vertices `0..k` (requires `k >= 3`).
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycles need at least 3 vertices");
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::new(k, &edges).unwrap()
}

/// The path on `k` vertices (`k - 1` edges).
pub fn path(k: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::new(k, &edges).unwrap()
}

/// The complete graph `K_k`.
pub fn complete(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    Graph::new(k, &edges).unwrap()
}

/// The disjoint union of `a` and `b`, with `b`'s vertices shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (u + a.n(), v + a.n())));
    Graph::new(a.n() + b.n(), &edges).unwrap()
}

/// Two triangles {0,1,2} and {2,3,4} sharing vertex 2.
pub fn bowtie() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
}

/// Triangle {0,1,2} plus the open ear 0-3-4-1. Its two odd cycles, the
/// triangle 0-1-2 and the 5-cycle 0-3-4-1-2, share three vertices.
pub fn fused5() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (1, 4)]).unwrap()
}

/// Two triangles {0,1,2} and {3,4,5} joined by the single edge 2-3.
pub fn dumbbell() -> Graph {
    Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
}

/// Two triangles {0,1,2} and {4,5,6} joined by the path 2-3-4.
pub fn theta7() -> Graph {
    Graph::new(7, &[(0, 1), (1, 2), (0, 2), (4, 5), (5, 6), (4, 6), (2, 3), (3, 4)]).unwrap()
}

/// `K_4` minus one edge.
pub fn diamond() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_have_expected_sizes() {
        assert_eq!((cycle(5).n(), cycle(5).m()), (5, 5));
        assert_eq!((path(4).n(), path(4).m()), (4, 3));
        assert_eq!((complete(4).n(), complete(4).m()), (4, 6));
        assert_eq!((bowtie().n(), bowtie().m()), (5, 6));
        assert_eq!((fused5().n(), fused5().m()), (5, 6));
        assert_eq!((dumbbell().n(), dumbbell().m()), (6, 7));
        assert_eq!((theta7().n(), theta7().m()), (7, 8));
        assert_eq!((diamond().n(), diamond().m()), (4, 5));
        let two = disjoint_union(&cycle(3), &cycle(3));
        assert_eq!((two.n(), two.m()), (6, 6));
        assert_eq!(two.connected_components().len(), 2);
    }
}
