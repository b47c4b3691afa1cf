//! Exact independence computations: α(G), enumeration of all maximum
//! independent sets, and core/corona (their intersection and union).
//!
//! Two deliberately separate routes are provided. The oracle route
//! ([`alpha_exact`], [`enumerate_mis`], [`core_corona_oracle`]) is exhaustive
//! branch-and-bound over bitsets, limited to small graphs. The polynomial
//! route ([`alpha_poly_oct2`], [`core_corona_poly`]) only needs an
//! odd-cycle transversal of size ≤ 2 and reduces to König duality on
//! bipartite remainders. Keeping both allows every closed-form claim to be
//! checked by two independent computations.

use crate::graph::{Graph, VertexSet};
use crate::matching::{self, can_match_into};
use serde::Serialize;
use thiserror::Error;

/// Default ceiling for the exhaustive oracles ([`alpha_exact`] and friends).
pub const DEFAULT_ORACLE_LIMIT: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndependenceError {
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    OracleLimitExceeded { n: usize, limit: usize },
    #[error("no odd-cycle transversal of size <= 2 exists")]
    NoSmallTransversal,
}

/// How an [`IndependenceProfile`] was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    Oracle,
    PolyOct2,
}

/// α(G) together with core (vertices in every maximum independent set) and
/// corona (vertices in at least one).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceProfile {
    pub alpha: usize,
    pub core: VertexSet,
    pub corona: VertexSet,
    /// Number of maximum independent sets; only the oracle counts them.
    pub mis_count: Option<u64>,
    pub method: Method,
}

fn check_limit(g: &Graph, limit: usize) -> Result<(), IndependenceError> {
    // 64 is the bitset word the oracles run on, so it is a hard ceiling no
    // matter how the configured limit was raised.
    let limit = limit.min(64);
    if g.n() > limit {
        return Err(IndependenceError::OracleLimitExceeded { n: g.n(), limit });
    }
    Ok(())
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of the induced subgraph.
fn clique_cover_bound(masks: &[u64], cand: u64) -> usize {
    let mut rest = cand;
    let mut cliques = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= !(1u64 << v);
        let mut common = masks[v] & rest;
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            rest &= !(1u64 << w);
            common &= masks[w] & rest;
        }
        cliques += 1;
    }
    cliques
}

fn alpha_rec(masks: &[u64], cand: u64, current: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(current);
        return;
    }
    if current + clique_cover_bound(masks, cand) <= *best {
        return;
    }
    // Branch on a candidate of maximum degree within the candidate set
    // (lowest id on ties): include it, then exclude it.
    let mut pick = 0;
    let mut pick_deg = usize::MAX;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (masks[v] & cand).count_ones() as usize;
        if pick_deg == usize::MAX || deg > pick_deg {
            pick = v;
            pick_deg = deg;
        }
    }
    alpha_rec(masks, cand & !masks[pick] & !(1u64 << pick), current + 1, best);
    alpha_rec(masks, cand & !(1u64 << pick), current, best);
}

/// Exact α(G) by branch-and-bound (exhaustive oracle).
pub fn alpha_exact(g: &Graph) -> Result<usize, IndependenceError> {
    alpha_exact_limited(g, DEFAULT_ORACLE_LIMIT)
}

/// [`alpha_exact`] with an explicit oracle ceiling.
pub fn alpha_exact_limited(g: &Graph, limit: usize) -> Result<usize, IndependenceError> {
    check_limit(g, limit)?;
    let masks = g.neighbor_masks();
    let cand = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    alpha_rec(&masks, cand, 0, &mut best);
    Ok(best)
}

/// Visits every independent set of size exactly `alpha`, in lexicographic
/// order of their sorted vertex lists.
fn for_each_mis(masks: &[u64], alpha: usize, visit: &mut impl FnMut(u64)) {
    fn rec(
        masks: &[u64],
        cand: u64,
        current: u64,
        size: usize,
        alpha: usize,
        visit: &mut impl FnMut(u64),
    ) {
        if size == alpha {
            visit(current);
            return;
        }
        if size + clique_cover_bound(masks, cand) < alpha {
            return;
        }
        if cand == 0 {
            return;
        }
        // Taking the lowest candidate first yields lexicographic order.
        let v = cand.trailing_zeros() as usize;
        rec(masks, cand & !masks[v] & !(1u64 << v), current | 1 << v, size + 1, alpha, visit);
        rec(masks, cand & !(1u64 << v), current, size, alpha, visit);
    }
    let n = masks.len();
    let cand = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    rec(masks, cand, 0, 0, alpha, visit);
}

/// All maximum independent sets, each sorted, the list in lexicographic
/// order (exhaustive oracle).
pub fn enumerate_mis(g: &Graph) -> Result<Vec<VertexSet>, IndependenceError> {
    enumerate_mis_limited(g, DEFAULT_ORACLE_LIMIT)
}

/// [`enumerate_mis`] with an explicit oracle ceiling.
pub fn enumerate_mis_limited(g: &Graph, limit: usize) -> Result<Vec<VertexSet>, IndependenceError> {
    let alpha = alpha_exact_limited(g, limit)?;
    let mut out = Vec::new();
    for_each_mis(&g.neighbor_masks(), alpha, &mut |set| out.push(VertexSet::from_mask(set)));
    Ok(out)
}

/// Core, corona and MIS count by exhaustive enumeration. Only the
/// intersection/union accumulators are materialized, not the MIS list.
pub fn core_corona_oracle(g: &Graph) -> Result<IndependenceProfile, IndependenceError> {
    core_corona_oracle_limited(g, DEFAULT_ORACLE_LIMIT)
}

/// [`core_corona_oracle`] with an explicit oracle ceiling.
pub fn core_corona_oracle_limited(
    g: &Graph,
    limit: usize,
) -> Result<IndependenceProfile, IndependenceError> {
    let alpha = alpha_exact_limited(g, limit)?;
    let mut core_acc = u64::MAX;
    let mut corona_acc = 0u64;
    let mut count = 0u64;
    for_each_mis(&g.neighbor_masks(), alpha, &mut |set| {
        core_acc &= set;
        corona_acc |= set;
        count += 1;
    });
    Ok(IndependenceProfile {
        alpha,
        core: VertexSet::from_mask(core_acc & corona_acc),
        corona: VertexSet::from_mask(corona_acc),
        mis_count: Some(count),
        method: Method::Oracle,
    })
}

/// Searches for an odd-cycle transversal of size ≤ 2: the empty set, then
/// singletons ascending, then pairs in lexicographic order. First hit wins.
fn small_odd_cycle_transversal(g: &Graph) -> Option<Vec<usize>> {
    if g.bipartition().is_some() {
        return Some(Vec::new());
    }
    for v in g.vertices() {
        if g.minus(v).bipartition().is_some() {
            return Some(vec![v]);
        }
    }
    for u in g.vertices() {
        for v in u + 1..g.n() {
            if g.delete_vertices(&[u, v]).bipartition().is_some() {
                return Some(vec![u, v]);
            }
        }
    }
    None
}

/// α of a bipartite graph by König duality: `n − μ`.
fn alpha_bipartite(g: &Graph) -> usize {
    debug_assert!(g.bipartition().is_some());
    g.n() - matching::mu(g)
}

/// Exact α(G) for graphs whose odd cycles can all be hit by deleting at most
/// two vertices: α = max over independent T' ⊆ T of |T'| + α(bipartite rest).
pub fn alpha_poly_oct2(g: &Graph) -> Result<usize, IndependenceError> {
    let t = small_odd_cycle_transversal(g).ok_or(IndependenceError::NoSmallTransversal)?;
    let mut best = 0;
    // Every subset of a ≤2-set, kept when independent in g.
    let subsets: Vec<Vec<usize>> = match t.as_slice() {
        [] => vec![vec![]],
        &[a] => vec![vec![], vec![a]],
        &[a, b] => {
            let mut s = vec![vec![], vec![a], vec![b]];
            if !g.has_edge(a, b) {
                s.push(vec![a, b]);
            }
            s
        }
        _ => unreachable!(),
    };
    for chosen in subsets {
        // Delete all of T plus the neighborhoods of the chosen vertices;
        // the chosen vertices join the independent set.
        let mut dead = t.clone();
        for &v in &chosen {
            dead.extend_from_slice(g.neighbors(v));
        }
        let rest = g.delete_vertices(&dead);
        best = best.max(chosen.len() + alpha_bipartite(&rest));
    }
    Ok(best)
}

/// Core and corona via the membership tests `v ∈ core ⟺ α(g−v) = α−1` and
/// `v ∈ corona ⟺ α(g−v−N(v)) = α−1`, each α computed by [`alpha_poly_oct2`].
pub fn core_corona_poly(g: &Graph) -> Result<IndependenceProfile, IndependenceError> {
    let alpha = alpha_poly_oct2(g)?;
    let mut core = VertexSet::new();
    let mut corona = VertexSet::new();
    for v in g.vertices() {
        // Deleting vertices cannot create odd cycles, so the minors stay
        // within the transversal precondition whenever g is.
        if alpha_poly_oct2(&g.minus(v))? + 1 == alpha {
            core.insert(v);
        }
        let mut closed = vec![v];
        closed.extend_from_slice(g.neighbors(v));
        if alpha_poly_oct2(&g.delete_vertices(&closed))? + 1 == alpha {
            corona.insert(v);
        }
    }
    Ok(IndependenceProfile { alpha, core, corona, mis_count: None, method: Method::PolyOct2 })
}

/// Berge's matchability criterion: an independent `s` is maximum iff every
/// maximal independent set of `g − s` can be matched into `s`.
///
/// (Checking maximal sets suffices: a matching restricts to subsets, and
/// every independent set extends to a maximal one.)
pub fn berge_certifies_maximum(g: &Graph, s: &VertexSet) -> bool {
    outside_maximal_independent_sets(g, s)
        .iter()
        .all(|t| can_match_into(g, t, s).expect("T built disjoint from S").is_some())
}

/// Core membership by matchability: for `s` a maximum independent set and
/// `v ∈ s`, `v` lies in core(G) iff every maximal independent set of `g − s`
/// can be matched into `s ∖ {v}`.
pub fn certifies_core_membership(g: &Graph, s: &VertexSet, v: usize) -> bool {
    debug_assert!(s.contains(v));
    let s_minus: VertexSet = s.iter().filter(|&w| w != v).collect();
    outside_maximal_independent_sets(g, s)
        .iter()
        .all(|t| can_match_into(g, t, &s_minus).expect("T built disjoint from S").is_some())
}

/// Maximal independent sets of the subgraph induced on `V ∖ s`, as sets of
/// original vertex ids.
fn outside_maximal_independent_sets(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    assert!(g.n() <= 64, "certifiers are desk-scale helpers");
    let masks = g.neighbor_masks();
    let mut p = 0u64;
    for v in g.vertices().filter(|&v| !s.contains(v)) {
        p |= 1 << v;
    }
    let mut out = Vec::new();
    fn rec(masks: &[u64], p: u64, x: u64, r: u64, out: &mut Vec<VertexSet>) {
        if p == 0 {
            if x == 0 {
                out.push(VertexSet::from_mask(r));
            }
            return;
        }
        let v = p.trailing_zeros() as usize;
        rec(masks, p & !masks[v] & !(1u64 << v), x & !masks[v], r | 1 << v, out);
        rec(masks, p & !(1u64 << v), x | 1 << v, r, out);
    }
    rec(&masks, p, 0, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;

    #[test]
    fn alpha_on_named_graphs() {
        assert_eq!(alpha_exact(&graphs::cycle(5)).unwrap(), 2);
        assert_eq!(alpha_exact(&graphs::dumbbell()).unwrap(), 2);
        assert_eq!(alpha_exact(&graphs::theta7()).unwrap(), 3);
        assert_eq!(alpha_exact(&graphs::complete(4)).unwrap(), 1);
        assert_eq!(alpha_exact(&Graph::empty(4)).unwrap(), 4);
        assert_eq!(alpha_exact(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn oracle_limit_is_enforced() {
        let g = graphs::cycle(5);
        assert_eq!(
            alpha_exact_limited(&g, 4),
            Err(IndependenceError::OracleLimitExceeded { n: 5, limit: 4 })
        );
        // The ceiling never exceeds the bitset width.
        assert_eq!(
            alpha_exact_limited(&Graph::empty(70), 100),
            Err(IndependenceError::OracleLimitExceeded { n: 70, limit: 64 })
        );
    }

    #[test]
    fn mis_enumeration_is_lexicographic() {
        let sets = enumerate_mis(&graphs::cycle(4)).unwrap();
        assert_eq!(sets, vec![vec![0, 2].into(), vec![1, 3].into()]);

        let sets = enumerate_mis(&graphs::bowtie()).unwrap();
        let expect: Vec<VertexSet> =
            vec![vec![0, 3].into(), vec![0, 4].into(), vec![1, 3].into(), vec![1, 4].into()];
        assert_eq!(sets, expect);

        let sets = enumerate_mis(&graphs::complete(3)).unwrap();
        assert_eq!(sets, vec![vec![0].into(), vec![1].into(), vec![2].into()]);
    }

    #[test]
    fn core_corona_named_cases() {
        let p = core_corona_oracle(&graphs::theta7()).unwrap();
        assert_eq!(p.alpha, 3);
        assert_eq!(p.core.as_slice(), &[3]);
        assert_eq!(p.corona.as_slice(), &[0, 1, 3, 5, 6]);
        assert_eq!(p.mis_count, Some(4));

        let p = core_corona_oracle(&graphs::dumbbell()).unwrap();
        assert_eq!((p.alpha, p.core.len()), (2, 0));
        assert_eq!(p.corona, VertexSet::full(6));
        assert_eq!(p.mis_count, Some(8));

        let p = core_corona_oracle(&graphs::bowtie()).unwrap();
        assert_eq!((p.alpha, p.core.len()), (2, 0));
        assert_eq!(p.corona.as_slice(), &[0, 1, 3, 4]);

        let p = core_corona_oracle(&graphs::fused5()).unwrap();
        assert_eq!((p.alpha, p.core.len()), (2, 0));
        assert_eq!(p.corona, VertexSet::full(5));
    }

    #[test]
    fn degenerate_profiles() {
        let p = core_corona_oracle(&Graph::empty(3)).unwrap();
        assert_eq!(p.alpha, 3);
        assert_eq!(p.core, VertexSet::full(3));
        assert_eq!(p.corona, VertexSet::full(3));
        assert_eq!(p.mis_count, Some(1));

        let p = core_corona_oracle(&Graph::empty(0)).unwrap();
        assert_eq!((p.alpha, p.mis_count), (0, Some(1)));
        assert!(p.core.is_empty() && p.corona.is_empty());
    }

    #[test]
    fn poly_alpha_matches_oracle() {
        for g in [
            graphs::cycle(5),
            graphs::cycle(4),
            graphs::theta7(),
            graphs::dumbbell(),
            graphs::bowtie(),
            graphs::fused5(),
            graphs::path(6),
            Graph::empty(5),
            Graph::empty(0),
            graphs::disjoint_union(&graphs::cycle(3), &graphs::cycle(5)),
        ] {
            assert_eq!(alpha_poly_oct2(&g).unwrap(), alpha_exact(&g).unwrap(), "on {g:?}");
        }
    }

    #[test]
    fn poly_alpha_needs_small_transversal() {
        let three = graphs::disjoint_union(
            &graphs::disjoint_union(&graphs::cycle(3), &graphs::cycle(3)),
            &graphs::cycle(3),
        );
        assert_eq!(alpha_poly_oct2(&three), Err(IndependenceError::NoSmallTransversal));
    }

    #[test]
    fn poly_core_corona_matches_oracle() {
        for g in [
            graphs::cycle(5),
            graphs::theta7(),
            graphs::dumbbell(),
            graphs::bowtie(),
            graphs::fused5(),
            graphs::cycle(6),
            graphs::disjoint_union(&graphs::cycle(3), &graphs::cycle(3)),
        ] {
            let poly = core_corona_poly(&g).unwrap();
            let oracle = core_corona_oracle(&g).unwrap();
            assert_eq!((poly.alpha, &poly.core, &poly.corona), (oracle.alpha, &oracle.core, &oracle.corona), "on {g:?}");
            assert_eq!(poly.mis_count, None);
            assert_eq!(poly.method, Method::PolyOct2);
        }
    }

    #[test]
    fn berge_certifier_on_c5() {
        let c5 = graphs::cycle(5);
        assert!(berge_certifies_maximum(&c5, &vec![0, 2].into()));
        assert!(!berge_certifies_maximum(&c5, &vec![0].into()));
    }

    #[test]
    fn core_membership_certifier_on_theta7() {
        let g = graphs::theta7();
        let s: VertexSet = vec![0, 3, 5].into();
        assert!(certifies_core_membership(&g, &s, 3));
        assert!(!certifies_core_membership(&g, &s, 0));
        assert!(!certifies_core_membership(&g, &s, 5));
    }

    #[test]
    fn profile_json_shape() {
        let p = core_corona_oracle(&graphs::cycle(4)).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"alpha":2,"core":[],"corona":[0,1,2,3],"mis_count":2,"method":"Oracle"}"#
        );
        let p = core_corona_poly(&graphs::cycle(4)).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"alpha":2,"core":[],"corona":[0,1,2,3],"mis_count":null,"method":"PolyOct2"}"#
        );
    }
}
