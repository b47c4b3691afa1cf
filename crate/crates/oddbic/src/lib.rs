//! Structure of maximum independent sets in 2-bicritical graphs with at most
//! two odd cycles.
//!
//! A graph is 2-bicritical when every nonempty independent set `S` has
//! `|N(S)| > |S|`. When such a graph also contains at most two odd cycles it
//! falls into one of four structural families (a single odd cycle, two odd
//! cycles fused on shared vertices, two disjoint odd cycles linked by an even
//! path, or by an odd path), plus the disconnected two-cycle case. For each
//! family the independence number, matching number, core (intersection of all
//! maximum independent sets) and corona (their union) have closed forms.
//!
//! This crate provides both routes and keeps them separate on purpose:
//!
//! * closed-form predictions driven by the structural classification
//!   ([`family`], [`closed_form`]), and
//! * exhaustive oracles that compute the same quantities from first
//!   principles ([`independence`], [`matching`], [`bicritical`]),
//!
//! together with seeded generators for every family ([`generators`],
//! [`recipe`]) and a comparison pipeline ([`verify`]) that reports any
//! disagreement between the two routes.

pub mod bicritical;
pub mod closed_form;
pub mod family;
pub mod generators;
pub mod graph;
pub mod graphs;
pub mod independence;
pub mod matching;
pub mod recipe;
pub mod verify;

pub use graph::{Graph, GraphError, VertexSet};
