//! The 2-bicritical test: every nonempty independent set `S` must satisfy
//! `|N(S)| > |S|`. Exhaustive at desk scale, with constructive certificates
//! via ear–pendant recipes as the scalable alternative.

use crate::graph::{Graph, VertexSet};
use crate::recipe::{EarPendantRecipe, RecipeError};
use serde::Serialize;
use thiserror::Error;

/// Default ceiling for the exhaustive [`is_2bicritical`] search.
pub const DEFAULT_BICRITICAL_LIMIT: usize = 26;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BicriticalError {
    #[error("graph has {n} vertices, bicriticality oracle limit is {limit}")]
    OracleLimitExceeded { n: usize, limit: usize },
}

/// Outcome of the 2-bicriticality test. The witness, present exactly when
/// the answer is negative, is a nonempty independent set with
/// `|N(witness)| <= |witness|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BicriticalVerdict {
    pub is_bicritical: bool,
    pub witness: Option<VertexSet>,
}

/// Exhaustively checks `|N(S)| > |S|` over all nonempty independent sets.
///
/// Independent sets are scanned by increasing size and lexicographically
/// within a size, so the returned witness is always the smallest violator.
/// Once some size has no independent sets at all the search stops (larger
/// ones cannot exist either).
pub fn is_2bicritical(g: &Graph) -> Result<BicriticalVerdict, BicriticalError> {
    is_2bicritical_limited(g, DEFAULT_BICRITICAL_LIMIT)
}

/// [`is_2bicritical`] with an explicit oracle ceiling.
pub fn is_2bicritical_limited(
    g: &Graph,
    limit: usize,
) -> Result<BicriticalVerdict, BicriticalError> {
    let limit = limit.min(64);
    if g.n() > limit {
        return Err(BicriticalError::OracleLimitExceeded { n: g.n(), limit });
    }
    let masks = g.neighbor_masks();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };

    // Visits independent sets of size exactly `want` in lexicographic
    // order; returns the first violator, and reports whether any set of
    // that size exists.
    fn scan(
        masks: &[u64],
        cand: u64,
        set: u64,
        nbrs: u64,
        size: usize,
        want: usize,
        any: &mut bool,
    ) -> Option<u64> {
        if size == want {
            *any = true;
            let outside = nbrs & !set;
            if (outside.count_ones() as usize) <= size {
                return Some(set);
            }
            return None;
        }
        if size + (cand.count_ones() as usize) < want {
            return None;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        scan(masks, cand & !masks[v] & !bit, set | bit, nbrs | masks[v], size + 1, want, any)
            .or_else(|| scan(masks, cand & !bit, set, nbrs, size, want, any))
    }

    for want in 1..=g.n() {
        let mut any = false;
        if let Some(set) = scan(&masks, all, 0, 0, 0, want, &mut any) {
            return Ok(BicriticalVerdict {
                is_bicritical: false,
                witness: Some(VertexSet::from_mask(set)),
            });
        }
        if !any {
            break;
        }
    }
    Ok(BicriticalVerdict { is_bicritical: true, witness: None })
}

/// Builds the recipe's graph, re-validating every step. A valid recipe is a
/// constructive certificate that the (always connected) result is
/// 2-bicritical, with no exhaustive search needed.
pub fn certify_by_recipe(recipe: &EarPendantRecipe) -> Result<Graph, RecipeError> {
    recipe.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;
    use crate::recipe::{RecipeBase, RecipeStep};

    #[test]
    fn verdicts_on_named_graphs() {
        assert!(is_2bicritical(&graphs::cycle(5)).unwrap().is_bicritical);
        assert!(is_2bicritical(&graphs::dumbbell()).unwrap().is_bicritical);
        assert!(is_2bicritical(&graphs::bowtie()).unwrap().is_bicritical);
        assert!(is_2bicritical(&graphs::fused5()).unwrap().is_bicritical);
        assert!(is_2bicritical(&graphs::theta7()).unwrap().is_bicritical);
        assert!(is_2bicritical(&graphs::complete(4)).unwrap().is_bicritical);

        let v = is_2bicritical(&graphs::cycle(4)).unwrap();
        assert!(!v.is_bicritical);
        assert_eq!(v.witness, Some(vec![0, 2].into()));

        let v = is_2bicritical(&graphs::diamond()).unwrap();
        assert!(!v.is_bicritical);
        assert_eq!(v.witness, Some(vec![2, 3].into()));
    }

    #[test]
    fn isolated_vertices_are_witnesses() {
        let g = Graph::new(4, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let v = is_2bicritical(&g).unwrap();
        assert_eq!(v.witness, Some(vec![0].into()));
    }

    #[test]
    fn witness_inequality_reverified() {
        for g in [graphs::cycle(4), graphs::cycle(6), graphs::path(5), graphs::diamond()] {
            let v = is_2bicritical(&g).unwrap();
            assert!(!v.is_bicritical);
            let w = v.witness.unwrap();
            assert!(!w.is_empty());
            assert!(w.iter().all(|a| w.iter().all(|b| a == b || !g.has_edge(a, b))));
            assert!(w.neighborhood(&g).len() <= w.len());
        }
    }

    #[test]
    fn limit_is_enforced() {
        let g = Graph::empty(30);
        assert_eq!(
            is_2bicritical_limited(&g, 26),
            Err(BicriticalError::OracleLimitExceeded { n: 30, limit: 26 })
        );
    }

    #[test]
    fn empty_graph_is_vacuously_bicritical() {
        assert!(is_2bicritical(&Graph::empty(0)).unwrap().is_bicritical);
    }

    #[test]
    fn recipes_certify_bicriticality() {
        let cases = [
            EarPendantRecipe::odd_cycle(3),
            EarPendantRecipe {
                base: RecipeBase::OddCycle { len: 3 },
                steps: vec![RecipeStep::Pendant { cycle_len: 3, path_len: 1, attach: 2 }],
            },
            EarPendantRecipe {
                base: RecipeBase::OddCycle { len: 5 },
                steps: vec![
                    RecipeStep::Ear { u: 0, v: 2, internal_len: 0 },
                    RecipeStep::Ear { u: 1, v: 1, internal_len: 2 },
                ],
            },
            EarPendantRecipe {
                base: RecipeBase::OddK4Homeomorph { lengths: [3, 1, 5] },
                steps: vec![RecipeStep::Pendant { cycle_len: 5, path_len: 2, attach: 0 }],
            },
        ];
        for recipe in &cases {
            let g = certify_by_recipe(recipe).unwrap();
            assert!(g.is_connected());
            assert!(
                is_2bicritical(&g).unwrap().is_bicritical,
                "recipe graph not 2-bicritical: {recipe:?}"
            );
        }
        let invalid = EarPendantRecipe {
            base: RecipeBase::OddCycle { len: 3 },
            steps: vec![RecipeStep::Ear { u: 0, v: 1, internal_len: 2 },
                        RecipeStep::Ear { u: 0, v: 1, internal_len: 1 }],
        };
        assert_eq!(certify_by_recipe(&invalid), Err(RecipeError::EvenEar { internal: 1 }));
    }
}
