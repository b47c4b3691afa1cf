//! Cycle enumeration and the structural classification of 2-bicritical
//! graphs with at most two odd cycles into their four families (plus the
//! disconnected pair of odd cycles).

use crate::bicritical::{self, BicriticalError};
use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use thiserror::Error;

/// Default cap on the number of cycles enumerated per graph.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    /// The graph contradicts the structure theorems despite passing the
    /// odd-cycle-count and bicriticality filters.
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error(transparent)]
    OracleLimitExceeded(#[from] BicriticalError),
}

/// All simple cycles of a graph (up to a cap), canonicalized: each cycle
/// starts at its minimum vertex and runs toward the smaller of that vertex's
/// two cycle-neighbors, so rotations and reflections collapse to one form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleList {
    pub cycles: Vec<Vec<usize>>,
    pub odd_count: usize,
    /// Set when enumeration stopped early; counts are then lower bounds.
    pub truncated: bool,
}

/// Enumerates every simple cycle, stopping at `cap`.
pub fn enumerate_cycles(g: &Graph, cap: usize) -> CycleList {
    assert!(cap >= 1);
    enumerate_cycles_bounded(g, cap, usize::MAX)
}

/// Cycle enumeration that additionally stops once more than `odd_limit` odd
/// cycles have been seen (the classifier only needs to know whether the
/// count exceeds two, which spares dense graphs a full enumeration).
fn enumerate_cycles_bounded(g: &Graph, cap: usize, odd_limit: usize) -> CycleList {
    let mut list = CycleList { cycles: Vec::new(), odd_count: 0, truncated: false };
    let mut on_path = vec![false; g.n()];
    let mut path: Vec<usize> = Vec::new();

    // Depth-first search from each anchor `s`, visiting only vertices > s,
    // so every cycle is found exactly once from its minimum vertex; the
    // direction is fixed by requiring the second vertex to be smaller than
    // the last.
    fn dfs(
        g: &Graph,
        s: usize,
        on_path: &mut Vec<bool>,
        path: &mut Vec<usize>,
        list: &mut CycleList,
        cap: usize,
        odd_limit: usize,
    ) -> bool {
        let v = *path.last().unwrap();
        for &w in g.neighbors(v) {
            if w == s && path.len() >= 3 && path[1] < v {
                list.cycles.push(path.clone());
                if path.len() % 2 == 1 {
                    list.odd_count += 1;
                    if list.odd_count > odd_limit {
                        list.truncated = true;
                        return true;
                    }
                }
                if list.cycles.len() >= cap {
                    list.truncated = true;
                    return true;
                }
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                if dfs(g, s, on_path, path, list, cap, odd_limit) {
                    return true;
                }
                path.pop();
                on_path[w] = false;
            }
        }
        false
    }

    'anchors: for s in 0..g.n() {
        on_path[s] = true;
        path.push(s);
        let stopped = dfs(g, s, &mut on_path, &mut path, &mut list, cap, odd_limit);
        path.pop();
        on_path[s] = false;
        if stopped {
            break 'anchors;
        }
    }
    list.cycles.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    list
}

/// The five structural outcomes, plus `OutOfScope` for anything the
/// classification theorems do not cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyTag {
    OneOddCycle,
    FusedOdd,
    EvenLinked,
    OddLinked,
    DisconnectedPair,
    OutOfScope,
}

/// Classification result with the structural witnesses the closed forms
/// need: the odd cycle(s), the shared vertices (fused), the attachment
/// vertices x and y, the degree-2 cycle vertices X, and the bipartition
/// (A, B) of G−X (linked families).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyClassification {
    pub tag: FamilyTag,
    #[serde(rename = "C")]
    pub c: Vec<usize>,
    #[serde(rename = "C_prime")]
    pub c_prime: Option<Vec<usize>>,
    pub shared: VertexSet,
    pub x: Option<usize>,
    pub y: Option<usize>,
    #[serde(rename = "X")]
    pub x_set: VertexSet,
    #[serde(rename = "A")]
    pub a: VertexSet,
    #[serde(rename = "B")]
    pub b: VertexSet,
    pub reason: Option<String>,
}

impl FamilyClassification {
    fn out_of_scope(reason: impl Into<String>) -> FamilyClassification {
        FamilyClassification {
            tag: FamilyTag::OutOfScope,
            c: Vec::new(),
            c_prime: None,
            shared: VertexSet::new(),
            x: None,
            y: None,
            x_set: VertexSet::new(),
            a: VertexSet::new(),
            b: VertexSet::new(),
            reason: Some(reason.into()),
        }
    }

    fn with_cycles(tag: FamilyTag, c: Vec<usize>, c_prime: Option<Vec<usize>>) -> Self {
        FamilyClassification {
            tag,
            c,
            c_prime,
            shared: VertexSet::new(),
            x: None,
            y: None,
            x_set: VertexSet::new(),
            a: VertexSet::new(),
            b: VertexSet::new(),
            reason: None,
        }
    }
}

fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len())
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Classifies `g` into one of the families. `assume_bicritical` skips the
/// exponential bicriticality check when the caller already certifies it
/// (recipe-generated corpora).
pub fn classify(g: &Graph, assume_bicritical: bool) -> Result<FamilyClassification, FamilyError> {
    classify_limited(g, assume_bicritical, DEFAULT_CYCLE_CAP, bicritical::DEFAULT_BICRITICAL_LIMIT)
}

/// [`classify`] with explicit cycle cap and bicriticality oracle ceiling.
pub fn classify_limited(
    g: &Graph,
    assume_bicritical: bool,
    cycle_cap: usize,
    bicritical_limit: usize,
) -> Result<FamilyClassification, FamilyError> {
    let cycles = enumerate_cycles_bounded(g, cycle_cap, 2);
    if cycles.odd_count > 2 {
        return Ok(FamilyClassification::out_of_scope("more than two odd cycles"));
    }
    if cycles.truncated {
        return Ok(FamilyClassification::out_of_scope(format!(
            "cycle enumeration hit the cap of {cycle_cap}"
        )));
    }
    if cycles.odd_count == 0 {
        return Ok(FamilyClassification::out_of_scope("no odd cycle"));
    }
    if !assume_bicritical {
        let verdict = bicritical::is_2bicritical_limited(g, bicritical_limit)?;
        if !verdict.is_bicritical {
            return Ok(FamilyClassification::out_of_scope(format!(
                "not 2-bicritical (witness {:?})",
                verdict.witness.unwrap()
            )));
        }
    }

    let odd: Vec<&Vec<usize>> = cycles.cycles.iter().filter(|c| c.len() % 2 == 1).collect();

    if odd.len() == 1 {
        let c = odd[0].clone();
        if g.n() == c.len() && g.m() == c.len() {
            return Ok(FamilyClassification::with_cycles(FamilyTag::OneOddCycle, c, None));
        }
        return Ok(FamilyClassification::out_of_scope(
            "single odd cycle but the graph has extra structure",
        ));
    }

    // Two odd cycles; the lexicographically smaller canonical sequence is C.
    let (c, c_prime) = if odd[0] < odd[1] {
        (odd[0].clone(), odd[1].clone())
    } else {
        (odd[1].clone(), odd[0].clone())
    };
    let c_set: VertexSet = c.iter().copied().collect();
    let cp_set: VertexSet = c_prime.iter().copied().collect();
    let shared = c_set.intersection(&cp_set);

    if !shared.is_empty() {
        // Fused: the graph must be exactly the union of its two cycles.
        let union = c_set.union(&cp_set);
        let mut union_edges = cycle_edges(&c);
        union_edges.extend(cycle_edges(&c_prime));
        union_edges.sort_unstable();
        union_edges.dedup();
        if union.len() != g.n() || union_edges != g.edges() {
            return Err(FamilyError::StructureViolation(
                "two overlapping odd cycles do not cover the graph".into(),
            ));
        }
        let mut cls =
            FamilyClassification::with_cycles(FamilyTag::FusedOdd, c, Some(c_prime));
        if shared.len() == 1 {
            cls.x = Some(shared.as_slice()[0]);
        }
        cls.shared = shared;
        return Ok(cls);
    }

    let comps = g.connected_components();
    if comps.len() == 2 {
        let ok = (comps[0] == c_set.as_slice() && comps[1] == cp_set.as_slice())
            && g.m() == c.len() + c_prime.len();
        if !ok {
            return Err(FamilyError::StructureViolation(
                "two components that are not two bare odd cycles".into(),
            ));
        }
        return Ok(FamilyClassification::with_cycles(
            FamilyTag::DisconnectedPair,
            c,
            Some(c_prime),
        ));
    }
    if comps.len() != 1 {
        return Err(FamilyError::StructureViolation(format!(
            "{} components with two odd cycles",
            comps.len()
        )));
    }

    // Linked: disjoint odd cycles in one component. Each cycle must expose
    // exactly one attachment (degree >= 3); the rest of its vertices form X.
    let attachment = |cyc: &[usize]| -> Result<usize, FamilyError> {
        let att: Vec<usize> = cyc.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
        match att.as_slice() {
            &[a] => Ok(a),
            [] => Err(FamilyError::StructureViolation(
                "odd cycle with no attachment vertex in a connected graph".into(),
            )),
            _ => Err(FamilyError::StructureViolation(format!(
                "odd cycle with {} attachment vertices",
                att.len()
            ))),
        }
    };
    let x = attachment(&c)?;
    let y = attachment(&c_prime)?;
    let x_set: VertexSet =
        c_set.union(&cp_set).iter().filter(|&v| g.degree(v) == 2).collect();

    let keep: Vec<usize> = g.vertices().filter(|v| !x_set.contains(*v)).collect();
    let (reduced, map) = g.induced_with_map(&keep);
    if !reduced.is_connected() {
        return Err(FamilyError::StructureViolation("G - X is disconnected".into()));
    }
    let Some((side0, side1)) = reduced.bipartition() else {
        return Err(FamilyError::StructureViolation("G - X is not bipartite".into()));
    };
    let side0: VertexSet = side0.iter().map(|v| map[v]).collect();
    let side1: VertexSet = side1.iter().map(|v| map[v]).collect();

    // A is the side containing x; for even-linked graphs y lands there too
    // and the theorem forces |A| = |B| + 1.
    let (a, b) = if side0.contains(x) { (side0, side1) } else { (side1, side0) };
    let tag = if a.contains(y) { FamilyTag::EvenLinked } else { FamilyTag::OddLinked };
    if tag == FamilyTag::EvenLinked && a.len() != b.len() + 1 {
        return Err(FamilyError::StructureViolation(format!(
            "even-linked bipartition sizes |A|={}, |B|={} violate |A| = |B| + 1",
            a.len(),
            b.len()
        )));
    }
    let mut cls = FamilyClassification::with_cycles(tag, c, Some(c_prime));
    cls.x = Some(x);
    cls.y = Some(y);
    cls.x_set = x_set;
    cls.a = a;
    cls.b = b;
    Ok(cls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;

    #[test]
    fn cycle_enumeration_counts() {
        let list = enumerate_cycles(&graphs::cycle(5), 100);
        assert_eq!(list.cycles, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!((list.odd_count, list.truncated), (1, false));

        let list = enumerate_cycles(&graphs::complete(4), 100);
        assert_eq!(list.cycles.len(), 7);
        assert_eq!(list.odd_count, 4);
        let lens: Vec<usize> = list.cycles.iter().map(Vec::len).collect();
        assert_eq!(lens, vec![3, 3, 3, 3, 4, 4, 4]);

        let list = enumerate_cycles(&graphs::dumbbell(), 100);
        assert_eq!(list.cycles.len(), 2);
        assert_eq!(list.odd_count, 2);

        let list = enumerate_cycles(&graphs::path(6), 100);
        assert!(list.cycles.is_empty());
    }

    #[test]
    fn cycles_are_canonical() {
        let list = enumerate_cycles(&graphs::fused5(), 100);
        assert_eq!(
            list.cycles,
            vec![vec![0, 1, 2], vec![0, 1, 4, 3], vec![0, 2, 1, 4, 3]]
        );
        assert_eq!(list.odd_count, 2);
    }

    #[test]
    fn cap_truncates() {
        let list = enumerate_cycles(&graphs::complete(5), 3);
        assert!(list.truncated);
        assert_eq!(list.cycles.len(), 3);
    }

    #[test]
    fn classify_named_graphs() {
        let cls = classify(&graphs::cycle(7), false).unwrap();
        assert_eq!(cls.tag, FamilyTag::OneOddCycle);
        assert_eq!(cls.c, vec![0, 1, 2, 3, 4, 5, 6]);

        let cls = classify(&graphs::bowtie(), false).unwrap();
        assert_eq!(cls.tag, FamilyTag::FusedOdd);
        assert_eq!(cls.shared.as_slice(), &[2]);
        assert_eq!(cls.x, Some(2));

        let cls = classify(&graphs::fused5(), false).unwrap();
        assert_eq!(cls.tag, FamilyTag::FusedOdd);
        assert_eq!(cls.shared.as_slice(), &[0, 1, 2]);
        assert_eq!(cls.x, None);

        let cls = classify(&graphs::theta7(), false).unwrap();
        assert_eq!(cls.tag, FamilyTag::EvenLinked);
        assert_eq!((cls.x, cls.y), (Some(2), Some(4)));
        assert_eq!(cls.x_set.as_slice(), &[0, 1, 5, 6]);
        assert_eq!(cls.a.as_slice(), &[2, 4]);
        assert_eq!(cls.b.as_slice(), &[3]);

        let cls = classify(&graphs::dumbbell(), false).unwrap();
        assert_eq!(cls.tag, FamilyTag::OddLinked);
        assert_eq!((cls.x, cls.y), (Some(2), Some(3)));
        assert_eq!(cls.x_set.as_slice(), &[0, 1, 4, 5]);

        let two = graphs::disjoint_union(&graphs::cycle(3), &graphs::cycle(3));
        let cls = classify(&two, false).unwrap();
        assert_eq!(cls.tag, FamilyTag::DisconnectedPair);
        assert_eq!(cls.c, vec![0, 1, 2]);
        assert_eq!(cls.c_prime, Some(vec![3, 4, 5]));
    }

    #[test]
    fn out_of_scope_cases() {
        let cls = classify(&graphs::cycle(4), false).unwrap();
        assert_eq!(cls.tag, FamilyTag::OutOfScope);
        assert!(cls.reason.as_deref().unwrap().contains("no odd cycle"));

        let cls = classify(&graphs::complete(4), false).unwrap();
        assert_eq!(cls.tag, FamilyTag::OutOfScope);
        assert!(cls.reason.as_deref().unwrap().contains("more than two"));

        // C5 with a pendant path is not 2-bicritical (degree-1 vertex).
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)]).unwrap();
        let cls = classify(&g, false).unwrap();
        assert_eq!(cls.tag, FamilyTag::OutOfScope);
        assert!(cls.reason.as_deref().unwrap().contains("not 2-bicritical"));
    }

    #[test]
    fn shared_single_vertex_is_a_cut_vertex() {
        let cls = classify(&graphs::bowtie(), false).unwrap();
        let x = cls.x.unwrap();
        assert!(graphs::bowtie().minus(x).connected_components().len() > 1);
    }

    #[test]
    fn linked_parity_via_bipartition() {
        // Lengthening the connecting path by one flips the family.
        // Triangles {0,1,2}, {4,5,6} with path 2-3-4 is even-linked (theta7);
        // adding one more path vertex gives an odd-linked graph.
        let g = Graph::new(
            8,
            &[(0, 1), (1, 2), (0, 2), (5, 6), (6, 7), (5, 7), (2, 3), (3, 4), (4, 5)],
        )
        .unwrap();
        let cls = classify(&g, false).unwrap();
        assert_eq!(cls.tag, FamilyTag::OddLinked);
        assert_eq!((cls.x, cls.y), (Some(2), Some(5)));
    }

    #[test]
    fn classification_json_shape() {
        let cls = classify(&graphs::theta7(), false).unwrap();
        let json = serde_json::to_value(&cls).unwrap();
        assert_eq!(json["tag"], "EvenLinked");
        assert_eq!(json["C"], serde_json::json!([0, 1, 2]));
        assert_eq!(json["C_prime"], serde_json::json!([4, 5, 6]));
        assert_eq!(json["x"], 2);
        assert_eq!(json["X"], serde_json::json!([0, 1, 5, 6]));
        assert_eq!(json["A"], serde_json::json!([2, 4]));
        assert_eq!(json["B"], serde_json::json!([3]));
        assert_eq!(json["reason"], serde_json::Value::Null);
    }
}
