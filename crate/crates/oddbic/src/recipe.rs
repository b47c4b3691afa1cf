//! Ear–pendant recipes: constructive certificates of 2-bicriticality.
//!
//! A recipe starts from an odd cycle (or an odd homeomorph of K4) and grows
//! the graph by odd-length ears (paths between existing vertices, both ends
//! allowed to coincide) and pendants (a fresh odd cycle joined by a path).
//! Replaying a recipe is deterministic: new vertices are numbered
//! consecutively in the order they appear.

use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecipeError {
    #[error("cycle length {0} must be odd and at least 3")]
    BadCycleLength(usize),
    #[error("ear with {internal} internal vertices has even total length {}", internal + 1)]
    EvenEar { internal: usize },
    #[error("closed ear at {0} needs at least 2 internal vertices")]
    ClosedEarTooShort(usize),
    #[error("ear endpoint {v} does not exist yet (graph has {n} vertices)")]
    EndpointOutOfRange { v: usize, n: usize },
    #[error("length-1 ear duplicates the existing edge {0}-{1}")]
    DuplicateEarEdge(usize, usize),
    #[error("pendant path length must be at least 1")]
    PendantPathTooShort,
    #[error("pendant attach vertex {v} does not exist yet (graph has {n} vertices)")]
    AttachOutOfRange { v: usize, n: usize },
    #[error("homeomorph path length {0} must be odd and at least 1")]
    BadHomeomorphLength(usize),
}

/// The starting graph of a recipe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RecipeBase {
    /// A single odd cycle on vertices `0..len`.
    OddCycle { len: usize },
    /// An odd homeomorph of K4: each edge of K4 is subdivided into a path,
    /// with the two edges of each perfect matching of K4 receiving the same
    /// odd length (`lengths[0]` for 01/23, `lengths[1]` for 02/13,
    /// `lengths[2]` for 03/12). All four "triangles" then have odd length.
    /// `[1,1,1]` is K4 itself.
    OddK4Homeomorph { lengths: [usize; 3] },
}

/// One growth step of a recipe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RecipeStep {
    /// A path of `internal_len + 1` edges (odd, so `internal_len` is even)
    /// through fresh vertices from `u` to `v`. `u == v` makes a closed ear
    /// and needs `internal_len >= 2`; `internal_len == 0` adds the edge
    /// `u-v` directly and must not duplicate an existing edge.
    Ear { u: usize, v: usize, internal_len: usize },
    /// A fresh odd cycle of `cycle_len` vertices joined to the existing
    /// vertex `attach` by a path of `path_len` edges. The cycle vertices are
    /// numbered first, then the path's internal vertices; the path leaves
    /// from the first new cycle vertex.
    Pendant { cycle_len: usize, path_len: usize, attach: usize },
}

/// A replayable construction certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarPendantRecipe {
    pub base: RecipeBase,
    pub steps: Vec<RecipeStep>,
}

impl EarPendantRecipe {
    pub fn odd_cycle(len: usize) -> EarPendantRecipe {
        EarPendantRecipe { base: RecipeBase::OddCycle { len }, steps: Vec::new() }
    }

    /// Replays the recipe, validating every step, and returns the graph.
    pub fn build(&self) -> Result<Graph, RecipeError> {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut n: usize;
        match self.base {
            RecipeBase::OddCycle { len } => {
                if len % 2 == 0 || len < 3 {
                    return Err(RecipeError::BadCycleLength(len));
                }
                for i in 0..len {
                    edges.push((i, (i + 1) % len));
                }
                n = len;
            }
            RecipeBase::OddK4Homeomorph { lengths } => {
                for &l in &lengths {
                    if l % 2 == 0 || l == 0 {
                        return Err(RecipeError::BadHomeomorphLength(l));
                    }
                }
                // K4's three perfect matchings, each subdivided to the same
                // odd length.
                let pairs =
                    [((0, 1), lengths[0]), ((2, 3), lengths[0]), ((0, 2), lengths[1]), ((1, 3), lengths[1]), ((0, 3), lengths[2]), ((1, 2), lengths[2])];
                n = 4;
                for ((a, b), len) in pairs {
                    let mut prev = a;
                    for _ in 0..len - 1 {
                        edges.push((prev, n));
                        prev = n;
                        n += 1;
                    }
                    edges.push((prev, b));
                }
            }
        }

        for step in &self.steps {
            match *step {
                RecipeStep::Ear { u, v, internal_len } => {
                    if u >= n {
                        return Err(RecipeError::EndpointOutOfRange { v: u, n });
                    }
                    if v >= n {
                        return Err(RecipeError::EndpointOutOfRange { v, n });
                    }
                    if internal_len % 2 != 0 {
                        return Err(RecipeError::EvenEar { internal: internal_len });
                    }
                    if u == v && internal_len < 2 {
                        return Err(RecipeError::ClosedEarTooShort(u));
                    }
                    if internal_len == 0 {
                        let e = (u.min(v), u.max(v));
                        if edges.contains(&e) {
                            return Err(RecipeError::DuplicateEarEdge(e.0, e.1));
                        }
                        edges.push(e);
                    } else {
                        let mut prev = u;
                        for _ in 0..internal_len {
                            edges.push((prev, n));
                            prev = n;
                            n += 1;
                        }
                        edges.push((prev, v));
                    }
                }
                RecipeStep::Pendant { cycle_len, path_len, attach } => {
                    if cycle_len % 2 == 0 || cycle_len < 3 {
                        return Err(RecipeError::BadCycleLength(cycle_len));
                    }
                    if path_len == 0 {
                        return Err(RecipeError::PendantPathTooShort);
                    }
                    if attach >= n {
                        return Err(RecipeError::AttachOutOfRange { v: attach, n });
                    }
                    let first = n;
                    for i in 0..cycle_len {
                        edges.push((first + i, first + (i + 1) % cycle_len));
                    }
                    n += cycle_len;
                    let mut prev = first;
                    for _ in 0..path_len - 1 {
                        edges.push((prev, n));
                        prev = n;
                        n += 1;
                    }
                    edges.push((prev, attach));
                }
            }
        }

        Graph::new(n, &edges).map_err(|e| match e {
            // Self-loops and range errors are impossible by construction;
            // collisions surface as duplicate edges.
            GraphError::DuplicateEdge(u, v) => RecipeError::DuplicateEarEdge(u, v),
            other => unreachable!("recipe replay produced {other}"),
        })
    }
}
