//! Seeded construction of family members, companion graphs, factor-critical
//! graphs, and G(n, p) samples.
//!
//! Every generator is deterministic in its seed: the same `(arguments, seed)`
//! pair reproduces the same graph bit-for-bit on any platform. Corpora are
//! therefore reproducible from a single base seed by deriving per-instance
//! sub-seeds with [`sub_seed`] instead of storing graphs.
//!
//! Family members are produced as ear–pendant recipes and then replayed, so
//! each generated graph carries a constructive certificate of its
//! 2-bicriticality alongside the guarantee that it classifies into the
//! requested family.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::family::{FamilyClassification, FamilyTag};
use crate::graph::{Graph, VertexSet};
use crate::graphs;
use crate::matching::is_matching_covered;
use crate::recipe::{EarPendantRecipe, RecipeBase, RecipeStep};

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("{what} needs a size budget of at least {minimum}, got {budget}")]
    BudgetTooSmall { what: &'static str, minimum: usize, budget: usize },
    #[error("no companion construction applies to family {0:?}")]
    WrongFamily(FamilyTag),
    #[error("companion construction failed: {0}")]
    CompanionConstructionFailed(String),
}

/// Derives the sub-seed for instance `index` of a corpus keyed by `seed`.
///
/// This is the splitmix64 finalizer applied to `seed + index · φ64`, where
/// `φ64 = 0x9E3779B97F4A7C15` (the 64-bit golden ratio) and the finalizer
/// constants are `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`. All three
/// constants are fixed; this mapping is part of the reproducibility contract.
pub fn sub_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random odd number in `[lo, hi]`. The interval must contain
/// at least one odd number.
fn odd_between(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    let lo = if lo % 2 == 0 { lo + 1 } else { lo };
    debug_assert!(lo <= hi, "no odd number in [{lo}, {hi}]");
    let count = (hi - lo) / 2 + 1;
    lo + 2 * rng.random_range(0..count)
}

/// A uniformly random even number in `[lo, hi]`. The interval must contain
/// at least one even number.
fn even_between(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    let lo = if lo % 2 == 1 { lo + 1 } else { lo };
    debug_assert!(lo <= hi, "no even number in [{lo}, {hi}]");
    let count = (hi - lo) / 2 + 1;
    lo + 2 * rng.random_range(0..count)
}

/// The smallest vertex count a member of `kind` can have.
pub fn family_minimum(kind: FamilyTag) -> Option<usize> {
    match kind {
        FamilyTag::OneOddCycle => Some(3),
        FamilyTag::FusedOdd => Some(5),
        FamilyTag::DisconnectedPair | FamilyTag::OddLinked => Some(6),
        FamilyTag::EvenLinked => Some(7),
        FamilyTag::OutOfScope => None,
    }
}

/// A generated family member: the graph together with the recipe(s) that
/// rebuild it. Connected families carry one recipe; a disconnected pair
/// carries one per component (the graph is their disjoint union in order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub recipes: Vec<EarPendantRecipe>,
}

/// Generates a random member of `kind` with at most `size_budget` vertices.
///
/// Cycle lengths, linking-path lengths, and the optional extra odd ears
/// (whose endpoints always lie on the linking path, endpoints included) are
/// all drawn from the seeded stream. The result classifies back into `kind`
/// and, being recipe-built, is 2-bicritical by construction.
pub fn random_family(
    kind: FamilyTag,
    size_budget: usize,
    seed: u64,
) -> Result<FamilyInstance, GeneratorError> {
    let minimum = family_minimum(kind).ok_or(GeneratorError::WrongFamily(kind))?;
    if size_budget < minimum {
        let what = match kind {
            FamilyTag::OneOddCycle => "a one-odd-cycle graph",
            FamilyTag::FusedOdd => "a fused-odd graph",
            FamilyTag::EvenLinked => "an even-linked graph",
            FamilyTag::OddLinked => "an odd-linked graph",
            FamilyTag::DisconnectedPair => "a disconnected pair",
            FamilyTag::OutOfScope => unreachable!(),
        };
        return Err(GeneratorError::BudgetTooSmall { what, minimum, budget: size_budget });
    }
    let mut rng = rng_for(seed);

    let recipes = match kind {
        FamilyTag::OneOddCycle => {
            vec![EarPendantRecipe::odd_cycle(odd_between(&mut rng, 3, size_budget))]
        }
        FamilyTag::FusedOdd => vec![random_fused(&mut rng, size_budget)],
        FamilyTag::EvenLinked => vec![random_linked(&mut rng, size_budget, true)],
        FamilyTag::OddLinked => vec![random_linked(&mut rng, size_budget, false)],
        FamilyTag::DisconnectedPair => {
            let a = odd_between(&mut rng, 3, size_budget - 3);
            let b = odd_between(&mut rng, 3, size_budget - a);
            vec![EarPendantRecipe::odd_cycle(a), EarPendantRecipe::odd_cycle(b)]
        }
        FamilyTag::OutOfScope => unreachable!(),
    };

    let graph = recipes
        .iter()
        .map(|r| r.build().expect("generated recipes are valid by construction"))
        .reduce(|acc, g| graphs::disjoint_union(&acc, &g))
        .expect("at least one recipe");
    Ok(FamilyInstance { graph, recipes })
}

/// Two odd cycles sharing one vertex (a closed ear) or an odd path of
/// vertices (an open ear whose companion arc on the base cycle is even).
fn random_fused(rng: &mut ChaCha8Rng, budget: usize) -> EarPendantRecipe {
    let a = odd_between(rng, 3, budget - 2);
    let step = if rng.random_bool(0.5) {
        // Closed ear: the second odd cycle meets the first in exactly {u}.
        let u = rng.random_range(0..a);
        RecipeStep::Ear { u, v: u, internal_len: even_between(rng, 2, budget - a) }
    } else {
        // Open ear across an even arc of the base cycle: the two odd cycles
        // share the arc's vertices. A chord (no internal vertices) is only
        // possible when the endpoints are not adjacent on the cycle.
        let arc = even_between(rng, 2, a - 1);
        let start = rng.random_range(0..a);
        let min_internal = if arc == a - 1 { 2 } else { 0 };
        let internal_len = even_between(rng, min_internal, budget - a);
        RecipeStep::Ear { u: start, v: (start + arc) % a, internal_len }
    };
    EarPendantRecipe { base: RecipeBase::OddCycle { len: a }, steps: vec![step] }
}

/// Two disjoint odd cycles joined by a linking path of the requested parity,
/// plus up to two extra odd ears with both endpoints on the linking path.
fn random_linked(rng: &mut ChaCha8Rng, budget: usize, even_path: bool) -> EarPendantRecipe {
    let path_min = if even_path { 2 } else { 1 };
    let a = odd_between(rng, 3, budget - 2 - path_min);
    let b = odd_between(rng, 3, budget - a - path_min + 1);
    let k = if even_path {
        even_between(rng, 2, budget - a - b + 1)
    } else {
        odd_between(rng, 1, budget - a - b + 1)
    };
    let attach = rng.random_range(0..a);
    let mut steps = vec![RecipeStep::Pendant { cycle_len: b, path_len: k, attach }];

    // The linking path from x = attach to y = the pendant cycle's first
    // vertex, as laid out by recipe replay: the path internals are numbered
    // from the cycle end, so position m (from x) holds vertex a+b+k-1-m.
    let mut path = Vec::with_capacity(k + 1);
    path.push(attach);
    for m in 1..k {
        path.push(a + b + k - 1 - m);
    }
    path.push(a);

    let mut n = a + b + k - 1;
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for _ in 0..2 {
        if budget == n || !rng.random_bool(0.5) {
            continue;
        }
        // Endpoints at odd distance along the path keep every new cycle
        // even, so the graph gains no third odd cycle.
        let i = rng.random_range(0..k);
        let max_hops = (k - i - 1) / 2;
        let j = i + 1 + 2 * rng.random_range(0..=max_hops);
        let adjacent = j == i + 1;
        let taken = chords.contains(&(i, j));
        let min_internal = if adjacent || taken { 2 } else { 0 };
        if budget - n < min_internal {
            continue;
        }
        let internal_len = even_between(rng, min_internal, budget - n);
        if internal_len == 0 {
            chords.push((i, j));
        }
        n += internal_len;
        steps.push(RecipeStep::Ear { u: path[i], v: path[j], internal_len });
    }

    EarPendantRecipe { base: RecipeBase::OddCycle { len: a }, steps }
}

/// Which augmentation produced a [`Companion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Augmentation {
    /// One new vertex adjacent to both attachment vertices.
    SingleVertex,
    /// Two new vertices forming a path between the attachment vertices.
    TwoVertexPath,
}

/// A companion graph `H`: the input plus one or two fresh vertices bridging
/// the attachment vertices `x` and `y`, chosen so that `H − X` is bipartite
/// and matching-covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Companion {
    pub h: Graph,
    pub added: VertexSet,
    pub augmentation: Augmentation,
}

/// Builds the companion graph of a linked instance.
///
/// Both augmentations are tried in a fixed order (single vertex first) and
/// the first one under which `H − X` is bipartite and matching-covered is
/// returned, along with which one succeeded; trusting the parity argument
/// alone is deliberately avoided. Failure of both is a hard error.
pub fn companion_h(g: &Graph, cls: &FamilyClassification) -> Result<Companion, GeneratorError> {
    if cls.tag != FamilyTag::EvenLinked && cls.tag != FamilyTag::OddLinked {
        return Err(GeneratorError::WrongFamily(cls.tag));
    }
    let (x, y) = match (cls.x, cls.y) {
        (Some(x), Some(y)) => (x, y),
        _ => {
            return Err(GeneratorError::CompanionConstructionFailed(
                "classification lacks attachment vertices".to_owned(),
            ))
        }
    };
    let n = g.n();

    let single = {
        let mut edges = g.edges().to_vec();
        edges.push((x, n));
        edges.push((y, n));
        (Graph::new(n + 1, &edges).expect("fresh vertex"), VertexSet::from(vec![n]))
    };
    let double = {
        let mut edges = g.edges().to_vec();
        edges.push((x, n));
        edges.push((n, n + 1));
        edges.push((y, n + 1));
        (Graph::new(n + 2, &edges).expect("fresh vertices"), VertexSet::from(vec![n, n + 1]))
    };

    for ((h, added), augmentation) in
        [(single, Augmentation::SingleVertex), (double, Augmentation::TwoVertexPath)]
    {
        let rest = h.delete_vertices(cls.x_set.as_slice());
        if rest.bipartition().is_some() && is_matching_covered(&rest) {
            return Ok(Companion { h, added, augmentation });
        }
    }
    Err(GeneratorError::CompanionConstructionFailed(format!(
        "neither augmentation of the {:?} instance leaves H − X bipartite and matching-covered",
        cls.tag,
    )))
}

/// A random factor-critical graph on at most `size_budget` vertices: an odd
/// cycle grown by up to three random odd ears.
pub fn random_factor_critical(size_budget: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if size_budget < 3 {
        return Err(GeneratorError::BudgetTooSmall {
            what: "a factor-critical graph",
            minimum: 3,
            budget: size_budget,
        });
    }
    let mut rng = rng_for(seed);
    let mut recipe = EarPendantRecipe::odd_cycle(odd_between(&mut rng, 3, size_budget));
    for _ in 0..3 {
        if !rng.random_bool(0.5) {
            continue;
        }
        let current = recipe.build().expect("valid so far");
        if let Some(step) = random_ear(&mut rng, &current, size_budget - current.n()) {
            recipe.steps.push(step);
        }
    }
    Ok(recipe.build().expect("ears validated against the current graph"))
}

/// A random odd ear on `g` using at most `room` fresh vertices, or `None`
/// if the sampled endpoints admit none.
fn random_ear(rng: &mut ChaCha8Rng, g: &Graph, room: usize) -> Option<RecipeStep> {
    let u = rng.random_range(0..g.n());
    let v = rng.random_range(0..g.n());
    let min_internal = if u == v || g.has_edge(u, v) { 2 } else { 0 };
    if room < min_internal {
        return None;
    }
    Some(RecipeStep::Ear { u, v, internal_len: even_between(rng, min_internal, room) })
}

/// A random valid recipe (odd cycle or odd homeomorph of K4 base, then a
/// mixed sequence of ears and pendants) building at most `size_budget`
/// vertices.
pub fn random_recipe(size_budget: usize, seed: u64) -> Result<EarPendantRecipe, GeneratorError> {
    if size_budget < 3 {
        return Err(GeneratorError::BudgetTooSmall {
            what: "a recipe",
            minimum: 3,
            budget: size_budget,
        });
    }
    let mut rng = rng_for(seed);
    let base = if size_budget >= 4 && rng.random_bool(0.3) {
        // n = 2(l1 + l2 + l3) − 2, so the lengths must sum to at most this:
        let sum_cap = (size_budget + 2) / 2;
        let l1 = odd_between(&mut rng, 1, sum_cap - 2);
        let l2 = odd_between(&mut rng, 1, sum_cap - l1 - 1);
        let l3 = odd_between(&mut rng, 1, sum_cap - l1 - l2);
        RecipeBase::OddK4Homeomorph { lengths: [l1, l2, l3] }
    } else {
        RecipeBase::OddCycle { len: odd_between(&mut rng, 3, size_budget) }
    };
    let mut recipe = EarPendantRecipe { base, steps: Vec::new() };

    for _ in 0..3 {
        if !rng.random_bool(0.5) {
            continue;
        }
        let current = recipe.build().expect("valid so far");
        let room = size_budget - current.n();
        let step = if room >= 3 && rng.random_bool(0.4) {
            let cycle_len = odd_between(&mut rng, 3, room);
            let path_len = rng.random_range(1..=room - cycle_len + 1);
            let attach = rng.random_range(0..current.n());
            Some(RecipeStep::Pendant { cycle_len, path_len, attach })
        } else {
            random_ear(&mut rng, &current, room)
        };
        if let Some(step) = step {
            recipe.steps.push(step);
        }
    }
    Ok(recipe)
}

/// An Erdős–Rényi sample: every pair `u < v`, taken in lexicographic order,
/// becomes an edge independently with probability `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("lexicographic pair scan yields valid edges")
}
