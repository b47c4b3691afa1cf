//! Simple undirected graphs on vertex set `0..n`, plus the two text formats
//! used throughout (edge-list files and graph6 lines) and the basic
//! traversals everything else builds on.

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Errors from graph construction and from both text formats.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed header line {0:?} (expected \"n m\")")]
    MalformedHeader(String),
    #[error("malformed edge line {0:?} (expected \"u v\")")]
    MalformedEdge(String),
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("invalid graph6 byte {byte:#04x} at position {pos}")]
    InvalidCharacter { byte: u8, pos: usize },
    #[error("graph6 payload truncated: expected {expected} bytes after the header, found {found}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("trailing data after graph6 payload")]
    TrailingData,
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Invariants enforced at construction: no self-loops, no duplicate edges,
/// endpoints in range. Adjacency lists are kept sorted ascending and the edge
/// list is kept as `(u, v)` pairs with `u < v` in lexicographic order, so
/// every traversal in the crate is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, validating every edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Neighborhoods as bitmasks; requires `n <= 64`.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency requires n <= 64");
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    /// The subgraph induced by `keep` (any order, duplicates ignored),
    /// relabeled to `0..keep.len()`, plus the new-to-old vertex map.
    pub fn induced_with_map(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_to_old: Vec<usize> = keep.to_vec();
        new_to_old.sort_unstable();
        new_to_old.dedup();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| old_to_new[u] != usize::MAX && old_to_new[v] != usize::MAX)
            .map(|&(u, v)| (old_to_new[u], old_to_new[v]))
            .collect();
        let g = Graph::new(new_to_old.len(), &edges).expect("induced subgraph of a valid graph");
        (g, new_to_old)
    }

    /// The graph with the vertices in `drop` deleted (and the rest relabeled).
    pub fn delete_vertices(&self, drop: &[usize]) -> Graph {
        let mut dead = vec![false; self.n];
        for &v in drop {
            dead[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !dead[v]).collect();
        self.induced_with_map(&keep).0
    }

    /// `G - v`.
    pub fn minus(&self, v: usize) -> Graph {
        self.delete_vertices(&[v])
    }

    /// Connected components as sorted vertex lists, ordered by their minimum
    /// vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Two-coloring if the graph is bipartite, `None` otherwise.
    ///
    /// Deterministic rule: in each connected component the lowest-numbered
    /// vertex goes into the first side. Both sides come back sorted.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let a: Vec<usize> = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b: Vec<usize> = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((VertexSet::from(a), VertexSet::from(b)))
    }

    /// Parses the plain edge-list format: a `"n m"` header line followed by
    /// `m` lines `"u v"`. Lines starting with `#` and blank lines are
    /// ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().unwrap_or("");
        let mut it = header.split_whitespace();
        let (n, m) = match (
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next(),
        ) {
            (Some(n), Some(m), None) => (n, m),
            _ => return Err(GraphError::MalformedHeader(header.to_string())),
        };
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let (u, v) = match (
                it.next().and_then(|t| t.parse::<usize>().ok()),
                it.next().and_then(|t| t.parse::<usize>().ok()),
                it.next(),
            ) {
                (Some(u), Some(v), None) => (u, v),
                _ => return Err(GraphError::MalformedEdge(line.to_string())),
            };
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::EdgeCountMismatch { declared: m, found: edges.len() });
        }
        Graph::new(n, &edges)
    }

    /// Serializes to the edge-list format parsed by [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses one graph6 line (short form for `n < 63`, the 4-byte long form
    /// otherwise; an optional `>>graph6<<` prefix is accepted).
    pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
        let bytes = line.strip_prefix(">>graph6<<").unwrap_or(line).as_bytes();
        let val = |pos: usize| -> Result<u64, GraphError> {
            let byte = bytes[pos];
            if !(63..=126).contains(&byte) {
                return Err(GraphError::InvalidCharacter { byte, pos });
            }
            Ok(u64::from(byte - 63))
        };
        if bytes.is_empty() {
            return Err(GraphError::TruncatedPayload { expected: 1, found: 0 });
        }
        let (n, header_len) = if bytes[0] == b'~' {
            if bytes.len() >= 2 && bytes[1] == b'~' {
                // 8-byte header for n >= 258048: far beyond anything this
                // crate operates on, but parse it for completeness.
                if bytes.len() < 8 {
                    return Err(GraphError::TruncatedPayload { expected: 8, found: bytes.len() });
                }
                let mut n = 0u64;
                for pos in 2..8 {
                    n = (n << 6) | val(pos)?;
                }
                (n as usize, 8)
            } else {
                if bytes.len() < 4 {
                    return Err(GraphError::TruncatedPayload { expected: 4, found: bytes.len() });
                }
                let n = (val(1)? << 12) | (val(2)? << 6) | val(3)?;
                (n as usize, 4)
            }
        } else {
            (val(0)? as usize, 1)
        };
        let bits = n * n.saturating_sub(1) / 2;
        let expected = header_len + bits.div_ceil(6);
        if bytes.len() < expected {
            return Err(GraphError::TruncatedPayload { expected, found: bytes.len() });
        }
        if bytes.len() > expected {
            return Err(GraphError::TrailingData);
        }
        let mut edges = Vec::new();
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                let group = val(header_len + k / 6)?;
                if (group >> (5 - k % 6)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges)
    }

    /// Serializes to one graph6 line (round-trips through
    /// [`Graph::parse_graph6`]).
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out: Vec<u8> = Vec::new();
        if n < 63 {
            out.push(63 + n as u8);
        } else {
            assert!(n < 258048, "graph6 4-byte header limit");
            out.push(b'~');
            out.push(63 + ((n >> 12) & 63) as u8);
            out.push(63 + ((n >> 6) & 63) as u8);
            out.push(63 + (n & 63) as u8);
        }
        let bits = n * n.saturating_sub(1) / 2;
        let mut payload = vec![0u8; bits.div_ceil(6)];
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    payload[k / 6] |= 1 << (5 - k % 6);
                }
                k += 1;
            }
        }
        out.extend(payload.into_iter().map(|b| b + 63));
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Serialize for Graph {
    /// Canonical JSON: `{"n": n, "edges": [[u, v], ...]}` with `u < v`,
    /// lexicographically sorted.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Graph::new(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

/// A set of vertices, kept sorted and deduplicated. Serializes as a plain
/// JSON array.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet(Vec::new())
    }

    /// The full vertex set `0..n`.
    pub fn full(n: usize) -> VertexSet {
        VertexSet((0..n).collect())
    }

    /// The set of bits in `mask` (bit `v` set means vertex `v` present).
    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet((0..64).filter(|&v| mask >> v & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        VertexSet::from(v)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// Neighborhood `N(S)` of this set in `g` (excluding the set itself).
    pub fn neighborhood(&self, g: &Graph) -> VertexSet {
        let mut out: Vec<usize> =
            self.iter().flat_map(|v| g.neighbors(v).iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        VertexSet(out.into_iter().filter(|&v| !self.contains(v)).collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(mut v: Vec<usize>) -> VertexSet {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        VertexSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl fmt::Debug for VertexSet {
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

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for v in &self.0 {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(VertexSet::from(Vec::<usize>::deserialize(deserializer)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { v: 3, n: 3 }));
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
    }

    #[test]
    fn edges_are_normalized() {
        let g = Graph::new(4, &[(2, 0), (3, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn parse_edge_list_triangle() {
        let g = Graph::parse_edge_list("# a triangle\n3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn parse_edge_list_errors() {
        assert_eq!(
            Graph::parse_edge_list("3\n0 1\n"),
            Err(GraphError::MalformedHeader("3".to_string()))
        );
        assert_eq!(
            Graph::parse_edge_list("3 2\n0 1\n0 1\n"),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::parse_edge_list("3 1\n0 3\n"),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        assert_eq!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::EdgeCountMismatch { declared: 2, found: 1 })
        );
        assert_eq!(
            Graph::parse_edge_list("2 1\n0 x\n"),
            Err(GraphError::MalformedEdge("0 x".to_string()))
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn graph6_known_lines() {
        // "Bw": n = 3, payload 'w' = 111000b, all three pairs present.
        let tri = Graph::parse_graph6("Bw").unwrap();
        assert_eq!(tri.n(), 3);
        assert_eq!(tri.edges(), &[(0, 1), (0, 2), (1, 2)]);
        // "B?": n = 3, payload '?' = 000000b, edgeless.
        let empty = Graph::parse_graph6("B?").unwrap();
        assert_eq!(empty.n(), 3);
        assert_eq!(empty.m(), 0);
        // "B_": payload '_' = 100000b, exactly the pair (0,1).
        let one = Graph::parse_graph6("B_").unwrap();
        assert_eq!(one.edges(), &[(0, 1)]);
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(
            Graph::parse_graph6("\x07abc"),
            Err(GraphError::InvalidCharacter { byte: 7, pos: 0 })
        );
        assert_eq!(
            Graph::parse_graph6("D"),
            Err(GraphError::TruncatedPayload { expected: 3, found: 1 })
        );
        assert_eq!(Graph::parse_graph6("Bw?"), Err(GraphError::TrailingData));
        assert_eq!(
            Graph::parse_graph6(""),
            Err(GraphError::TruncatedPayload { expected: 1, found: 0 })
        );
    }

    #[test]
    fn graph6_long_form_round_trip() {
        // 70 vertices forces the 4-byte header.
        let edges: Vec<(usize, usize)> = (0..69).map(|i| (i, i + 1)).collect();
        let g = Graph::new(70, &edges).unwrap();
        let line = g.to_graph6();
        assert!(line.starts_with('~'));
        assert_eq!(Graph::parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn bipartition_canonical_sides() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let (a, b) = path.bipartition().unwrap();
        assert_eq!(a.as_slice(), &[0, 2]);
        assert_eq!(b.as_slice(), &[1]);

        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let (a, b) = c4.bipartition().unwrap();
        assert_eq!(a.as_slice(), &[0, 2]);
        assert_eq!(b.as_slice(), &[1, 3]);

        let tri = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(tri.bipartition().is_none());

        // Two components: each has its own lowest vertex in the first side.
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let (a, b) = two.bipartition().unwrap();
        assert_eq!(a.as_slice(), &[0, 2]);
        assert_eq!(b.as_slice(), &[1, 3]);
    }

    #[test]
    fn components_ordered_by_minimum() {
        let g = Graph::new(6, &[(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(!g.is_connected());
        assert_eq!(Graph::empty(2).connected_components().len(), 2);
        assert_eq!(Graph::empty(0).connected_components().len(), 0);
    }

    #[test]
    fn induced_and_deleted_subgraphs() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let (h, map) = g.induced_with_map(&[1, 2, 4]);
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.edges(), &[(0, 1)]);
        let d = g.minus(0);
        assert_eq!(d.n(), 4);
        assert_eq!(d.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn vertex_set_operations() {
        let a = VertexSet::from(vec![3, 1, 1, 2]);
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        let b = VertexSet::from(vec![2, 4]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).as_slice(), &[2]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 3]);
        assert!(!a.is_disjoint(&b));
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = VertexSet::from(vec![0, 3]);
        assert_eq!(s.neighborhood(&g).as_slice(), &[1, 2]);
    }

    #[test]
    fn graph_json_canonical() {
        let g = Graph::new(3, &[(2, 0), (0, 1)]).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[0,2]]}"#);
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }
}
