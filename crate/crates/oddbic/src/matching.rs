//! Maximum matching in general graphs (Edmonds' blossom algorithm), the
//! Gallai–Edmonds decomposition, and the matchability tests built on top:
//! factor-criticality, matching-covered graphs, and matching a vertex set
//! into another.

use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("T and S overlap in {0:?}")]
    OverlappingSets(VertexSet),
}

/// A set of pairwise disjoint edges, kept as `(u, v)` pairs with `u < v` in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    fn from_pairs(mut pairs: Vec<(usize, usize)>) -> Matching {
        for p in &mut pairs {
            *p = (p.0.min(p.1), p.0.max(p.1));
        }
        pairs.sort_unstable();
        Matching { pairs }
    }

    /// Reads the matching out of a partner array (`usize::MAX` = unmatched).
    fn from_partners(partner: &[usize]) -> Matching {
        let pairs = partner
            .iter()
            .enumerate()
            .filter(|&(v, &w)| w != usize::MAX && v < w)
            .map(|(v, &w)| (v, w))
            .collect();
        Matching::from_pairs(pairs)
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The matching involution: the partner of `v`, or `v` itself when the
    /// matching misses `v`.
    pub fn partner(&self, v: usize) -> usize {
        for &(a, b) in &self.pairs {
            if a == v {
                return b;
            }
            if b == v {
                return a;
            }
        }
        v
    }

    pub fn covers(&self, v: usize) -> bool {
        self.partner(v) != v
    }

    /// Checks the matching is a set of disjoint edges of `g` (test support).
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        self.pairs.iter().all(|&(u, v)| {
            let fresh = !seen[u] && !seen[v];
            seen[u] = true;
            seen[v] = true;
            fresh && g.has_edge(u, v)
        })
    }
}

/// The Gallai–Edmonds partition of a vertex set: `d` holds the vertices
/// missed by some maximum matching, `a` their outside neighbors, `c` the
/// rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    #[serde(rename = "D")]
    pub d: VertexSet,
    #[serde(rename = "A")]
    pub a: VertexSet,
    #[serde(rename = "C")]
    pub c: VertexSet,
}

/// Maximum matching via Edmonds' blossom algorithm, O(V^3).
///
/// Alternating forests are grown from free vertices in ascending order and
/// neighbors are scanned in ascending order, so the returned matching is
/// deterministic. Odd cycles met during the search are contracted by
/// remapping their vertices to a common base.
pub fn maximum_matching(g: &Graph) -> Matching {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let mut partner = vec![NONE; n];

    // Finds an augmenting path from `root` in the graph with current
    // `partner`, returning its free endpoint (or NONE). `parent` records the
    // odd-level predecessor of each even-level vertex; `base` maps vertices
    // to the base of their contracted blossom.
    let find_augmenting = |partner: &[usize], root: usize| -> (usize, Vec<usize>) {
        let mut used = vec![false; n];
        let mut parent = vec![NONE; n];
        let mut base: Vec<usize> = (0..n).collect();
        let mut queue = VecDeque::from([root]);
        used[root] = true;

        let lowest_common_base = |base: &[usize], parent: &[usize], a: usize, b: usize| {
            let mut hit = vec![false; n];
            let mut v = a;
            loop {
                v = base[v];
                hit[v] = true;
                if partner[v] == NONE {
                    break;
                }
                v = parent[partner[v]];
            }
            let mut w = b;
            loop {
                w = base[w];
                if hit[w] {
                    return w;
                }
                w = parent[partner[w]];
            }
        };

        while let Some(v) = queue.pop_front() {
            for &to in g.neighbors(v) {
                if base[v] == base[to] || partner[v] == to {
                    continue;
                }
                if to == root || (partner[to] != NONE && parent[partner[to]] != NONE) {
                    // `to` is an even-level vertex: contract the blossom.
                    let cur_base = lowest_common_base(&base, &parent, v, to);
                    let mut in_blossom = vec![false; n];
                    let mark = |v: usize, mut child: usize, in_blossom: &mut Vec<bool>,
                                    parent: &mut Vec<usize>| {
                        let mut v = v;
                        while base[v] != cur_base {
                            in_blossom[base[v]] = true;
                            in_blossom[base[partner[v]]] = true;
                            parent[v] = child;
                            child = partner[v];
                            v = parent[partner[v]];
                        }
                    };
                    mark(v, to, &mut in_blossom, &mut parent);
                    mark(to, v, &mut in_blossom, &mut parent);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur_base;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if partner[to] == NONE {
                        return (to, parent);
                    }
                    used[partner[to]] = true;
                    queue.push_back(partner[to]);
                }
            }
        }
        (NONE, parent)
    };

    for root in 0..n {
        if partner[root] != NONE {
            continue;
        }
        let (endpoint, parent) = find_augmenting(&partner, root);
        if endpoint == NONE {
            continue;
        }
        // Flip matched/unmatched edges along the found path.
        let mut v = endpoint;
        while v != NONE {
            let pv = parent[v];
            let next = partner[pv];
            partner[v] = pv;
            partner[pv] = v;
            v = next;
        }
    }
    Matching::from_partners(&partner)
}

/// The matching number μ(g).
pub fn mu(g: &Graph) -> usize {
    maximum_matching(g).size()
}

/// Gallai–Edmonds decomposition, computed from its defining property:
/// `D = {v : μ(g−v) = μ(g)}` (some maximum matching misses v), `A = N(D)−D`,
/// `C` the rest. The structure theorem's conclusions are asserted on the
/// result before returning it.
pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let total = mu(g);
    let d: VertexSet = g.vertices().filter(|&v| mu(&g.minus(v)) == total).collect();
    let a = d.neighborhood(g);
    let c: VertexSet = g.vertices().filter(|v| !d.contains(*v) && !a.contains(*v)).collect();

    // Structure theorem conclusions, checked on every call: the components
    // of G[D] are factor-critical, and any maximum matching covers C within
    // C, and matches A into distinct D-components.
    let (gd, d_map) = g.induced_with_map(d.as_slice());
    let comps = gd.connected_components();
    for comp in &comps {
        let (sub, _) = gd.induced_with_map(comp);
        assert!(is_factor_critical(&sub), "Gallai-Edmonds: G[D] component not factor-critical");
    }
    let mut comp_of = vec![usize::MAX; g.n()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[d_map[v]] = i;
        }
    }
    let m = maximum_matching(g);
    let mut used_comp = vec![false; comps.len()];
    for v in a.iter() {
        let w = m.partner(v);
        assert!(
            w != v && d.contains(w),
            "Gallai-Edmonds: A-vertex {v} not matched into D"
        );
        assert!(!used_comp[comp_of[w]], "Gallai-Edmonds: two A-vertices in one D-component");
        used_comp[comp_of[w]] = true;
    }
    for v in c.iter() {
        let w = m.partner(v);
        assert!(w != v && c.contains(w), "Gallai-Edmonds: C-vertex {v} not matched within C");
    }

    GallaiEdmonds { d, a, c }
}

/// True iff `g − v` has a perfect matching for every vertex `v` (which
/// forces `n` odd). `K1` counts as factor-critical.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.n();
    if n % 2 == 0 {
        return false;
    }
    g.vertices().all(|v| mu(&g.minus(v)) == (n - 1) / 2)
}

/// True iff `g` is connected, has a perfect matching, and every edge lies in
/// some perfect matching.
pub fn is_matching_covered(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 || n % 2 != 0 || !g.is_connected() || mu(g) != n / 2 {
        return false;
    }
    g.edges().iter().all(|&(u, v)| mu(&g.delete_vertices(&[u, v])) == n / 2 - 1)
}

/// Tries to match every vertex of `t` to a distinct neighbor in `s`
/// (maximum bipartite matching on the T–S incidence structure, plain
/// augmenting paths). Returns the matching if all of `t` is covered.
pub fn can_match_into(
    g: &Graph,
    t: &VertexSet,
    s: &VertexSet,
) -> Result<Option<Matching>, MatchingError> {
    let overlap = t.intersection(s);
    if !overlap.is_empty() {
        return Err(MatchingError::OverlappingSets(overlap));
    }
    // holder[s-vertex position in s] = t-vertex currently matched there.
    let s_pos = |v: usize| s.as_slice().binary_search(&v).ok();
    let mut holder: Vec<Option<usize>> = vec![None; s.len()];

    fn try_place(
        g: &Graph,
        s: &VertexSet,
        s_pos: &dyn Fn(usize) -> Option<usize>,
        holder: &mut Vec<Option<usize>>,
        visited: &mut Vec<bool>,
        t_vertex: usize,
    ) -> bool {
        for &w in g.neighbors(t_vertex) {
            if let Some(pos) = s_pos(w) {
                if visited[pos] {
                    continue;
                }
                visited[pos] = true;
                let current = holder[pos];
                if current.is_none()
                    || try_place(g, s, s_pos, holder, visited, current.unwrap())
                {
                    holder[pos] = Some(t_vertex);
                    return true;
                }
            }
        }
        false
    }

    for v in t.iter() {
        let mut visited = vec![false; s.len()];
        if !try_place(g, s, &s_pos, &mut holder, &mut visited, v) {
            return Ok(None);
        }
    }
    let pairs: Vec<(usize, usize)> = holder
        .iter()
        .enumerate()
        .filter_map(|(pos, &t_v)| t_v.map(|t_v| (t_v, s.as_slice()[pos])))
        .collect();
    Ok(Some(Matching::from_pairs(pairs)))
}
