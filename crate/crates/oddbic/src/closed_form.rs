//! Closed-form analysis of classified graphs.
//!
//! Given a [`FamilyClassification`], [`predict`] fills in α, μ, core, corona,
//! and (where the theory pins it down) the Gallai–Edmonds decomposition using
//! formulas alone — no matching or independent-set search. This is the whole
//! point of the module: it is an independent second computation path that the
//! oracle route can be checked against.
//!
//! [`check_summary_identities`] then evaluates the general summary statements
//! (the identity trichotomy, the corona/neighbourhood partition, and the
//! α + μ laws) on a finished report. Two of those statements, taken as
//! written, disagree with the sets the per-family theorems themselves
//! produce; the checks report both readings and flag the as-written ones as
//! expected divergences rather than hiding or "fixing" them.

use serde::Serialize;
use thiserror::Error;

use crate::family::{FamilyClassification, FamilyTag};
use crate::graph::{Graph, VertexSet};
use crate::matching::GallaiEdmonds;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    /// The classification is `OutOfScope`, so no closed form applies.
    #[error("classification is out of scope: {0}")]
    OutOfScopeClassification(String),
    /// The classification's witnesses contradict its own tag (wrong vertex
    /// parity, missing shared vertex, ...). Only reachable with a
    /// hand-assembled classification; `classify` never produces one.
    #[error("classification is internally inconsistent: {0}")]
    InconsistentClassification(String),
}

/// Which of the three possible values `|core| + |corona| − 2α` takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdentityClass {
    TwoAlpha,
    TwoAlphaPlus1,
    TwoAlphaPlus2,
}

impl IdentityClass {
    fn from_excess(excess: usize) -> Option<IdentityClass> {
        match excess {
            0 => Some(IdentityClass::TwoAlpha),
            1 => Some(IdentityClass::TwoAlphaPlus1),
            2 => Some(IdentityClass::TwoAlphaPlus2),
            _ => None,
        }
    }
}

/// How the numbers in an [`AnalysisReport`] were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Formulas applied to a family classification.
    ClosedForm,
    /// Exhaustive search (blossom matching + independent-set enumeration).
    Oracle,
}

/// Everything the analysis knows about one graph: the family it fell into,
/// the independence and matching numbers, the core/corona sets, the
/// Gallai–Edmonds triple where the theory provides one, and the identity
/// `|core| + |corona| = 2α + identity_value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub family: FamilyTag,
    pub alpha: usize,
    pub mu: usize,
    pub core: VertexSet,
    pub corona: VertexSet,
    /// Present for even-linked graphs (the decomposition is a theorem there)
    /// and for the factor-critical families, where it is trivially
    /// `D = V, A = ∅, C = ∅`. Omitted for odd-linked and disconnected
    /// graphs, where no closed form is claimed.
    pub ge: Option<GallaiEdmonds>,
    pub identity_class: IdentityClass,
    /// `|core| + |corona| − 2α`; always derived from the sets above, never
    /// from the family tag, so a formula bug shows up as a wrong value here
    /// instead of being masked.
    pub identity_value: usize,
    /// Whether `corona` and `N(core)` are disjoint and together cover `V`.
    pub partition_holds: bool,
    pub provenance: Provenance,
    /// Statement names found violated when this report was compared against
    /// an independently computed one; empty until a verifier fills it.
    pub mismatches: Vec<String>,
}

/// One summary statement evaluated on a report: its (stable) name, whether
/// it held, whether a failure was expected from the outset, and a
/// human-readable account of what was compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatementCheck {
    pub name: &'static str,
    pub passed: bool,
    /// `true` for the as-written readings that the per-family theorems
    /// themselves contradict; such failures are reported and counted but are
    /// not defects in the graph or the analysis.
    pub expected_divergent: bool,
    pub detail: String,
}

fn ensure_parity(n: usize, odd: bool, tag: FamilyTag) -> Result<(), ClosedFormError> {
    if (n % 2 == 1) != odd {
        return Err(ClosedFormError::InconsistentClassification(format!(
            "{tag:?} requires {} vertex count, got n = {n}",
            if odd { "an odd" } else { "an even" },
        )));
    }
    Ok(())
}

/// Compute an [`AnalysisReport`] for `g` from its classification using the
/// per-family formulas only.
///
/// * one odd cycle, or two fused odd cycles: `μ = α = (n−1)/2`, `core = ∅`;
///   `corona = V` except when the cycles share exactly one vertex, in which
///   case `corona = V − {x}` for the shared vertex `x`; `D = V`.
/// * even-linked: `μ = α = (n−1)/2`, `core = B`, `corona = V − A`,
///   Gallai–Edmonds `(V − B, B, ∅)`.
/// * odd-linked: perfect matching, so `μ = n/2`; `α = (n−2)/2`; `core = ∅`,
///   `corona = V`; no decomposition claimed.
/// * two disjoint odd cycles: `μ = α = (n−2)/2`, `core = ∅`, `corona = V`;
///   no decomposition claimed.
///
/// `cls` must be the classification of `g` itself; feeding a classification
/// of a different graph produces nonsense (and usually an
/// `InconsistentClassification` error).
pub fn predict(g: &Graph, cls: &FamilyClassification) -> Result<AnalysisReport, ClosedFormError> {
    let n = g.n();
    let full = VertexSet::full(n);
    let empty = VertexSet::new();

    let (alpha, mu, core, corona, ge) = match cls.tag {
        FamilyTag::OutOfScope => {
            let reason = cls.reason.clone().unwrap_or_else(|| "unclassified".to_owned());
            return Err(ClosedFormError::OutOfScopeClassification(reason));
        }
        FamilyTag::OneOddCycle => {
            ensure_parity(n, true, cls.tag)?;
            let half = (n - 1) / 2;
            let ge = GallaiEdmonds { d: full.clone(), a: empty.clone(), c: empty.clone() };
            (half, half, empty, full, Some(ge))
        }
        FamilyTag::FusedOdd => {
            ensure_parity(n, true, cls.tag)?;
            let half = (n - 1) / 2;
            let corona = if cls.shared.len() >= 2 {
                full.clone()
            } else {
                let x = cls.x.ok_or_else(|| {
                    ClosedFormError::InconsistentClassification(
                        "fused cycles sharing one vertex but no shared vertex recorded".to_owned(),
                    )
                })?;
                full.difference(&VertexSet::from(vec![x]))
            };
            let ge = GallaiEdmonds { d: full, a: empty.clone(), c: empty.clone() };
            (half, half, empty, corona, Some(ge))
        }
        FamilyTag::EvenLinked => {
            ensure_parity(n, true, cls.tag)?;
            let half = (n - 1) / 2;
            if cls.a.len() != cls.b.len() + 1 {
                return Err(ClosedFormError::InconsistentClassification(format!(
                    "even-linked sides must satisfy |A| = |B| + 1, got |A| = {}, |B| = {}",
                    cls.a.len(),
                    cls.b.len(),
                )));
            }
            let core = cls.b.clone();
            let corona = full.difference(&cls.a);
            let ge = GallaiEdmonds { d: full.difference(&core), a: core.clone(), c: empty };
            (half, half, core, corona, Some(ge))
        }
        FamilyTag::OddLinked => {
            ensure_parity(n, false, cls.tag)?;
            ((n - 2) / 2, n / 2, empty, full, None)
        }
        FamilyTag::DisconnectedPair => {
            ensure_parity(n, false, cls.tag)?;
            let half = (n - 2) / 2;
            (half, half, empty, full, None)
        }
    };

    debug_assert!(core.iter().all(|v| corona.contains(v)), "core must lie inside corona");

    let identity_value = (core.len() + corona.len())
        .checked_sub(2 * alpha)
        .ok_or_else(|| identity_out_of_range(&core, &corona, alpha))?;
    let identity_class = IdentityClass::from_excess(identity_value)
        .ok_or_else(|| identity_out_of_range(&core, &corona, alpha))?;

    let nbhd = core.neighborhood(g);
    let partition_holds = corona.is_disjoint(&nbhd) && corona.union(&nbhd) == VertexSet::full(n);

    Ok(AnalysisReport {
        family: cls.tag,
        alpha,
        mu,
        core,
        corona,
        ge,
        identity_class,
        identity_value,
        partition_holds,
        provenance: Provenance::ClosedForm,
        mismatches: Vec::new(),
    })
}

fn identity_out_of_range(core: &VertexSet, corona: &VertexSet, alpha: usize) -> ClosedFormError {
    ClosedFormError::InconsistentClassification(format!(
        "|core| + |corona| − 2α = {} + {} − {} falls outside {{0, 1, 2}}",
        core.len(),
        corona.len(),
        2 * alpha,
    ))
}

/// Evaluate the general summary statements on a finished report.
///
/// The entries, in order:
///
/// * `identity-trichotomy-as-written` — the summary claim: connected with the
///   odd cycles sharing at most one vertex ⟹ `2α`; sharing at least two ⟹
///   `2α+1`; disconnected ⟹ `2α+2` (a single odd cycle gives `2α+1`). The
///   odd-linked case contradicts this as written, so its failure there is
///   flagged `expected_divergent`.
/// * `identity-trichotomy-structural` — the same trichotomy with the
///   odd-linked value corrected to `2α+2`, the figure the per-family theorem
///   sets actually force. Expected to hold everywhere.
/// * `corona-core-partition-as-written` — "corona ⊔ N(core) = V iff no two
///   odd cycles share at least two vertices". Both fused subcases contradict
///   this as written (sharing one vertex the partition misses `x`; sharing
///   two or more it holds degenerately as `V ⊔ ∅`), so fused failures are
///   flagged `expected_divergent`.
/// * `corona-core-partition-structural` — the corrected reading: the
///   partition fails exactly when the two odd cycles share one vertex.
///   Expected to hold everywhere.
/// * `alpha-plus-mu-law` — `α + μ = n − 1` for connected graphs, `n − 2` for
///   disconnected ones.
/// * for even-linked graphs only, three more: `even-linked-core-size-formula`
///   (`|core| = (n − u + 1)/2` with `u` the number of cycle vertices),
///   `even-linked-corona-size-formula` (`|corona| = (n + u − 3)/2`), and
///   `even-linked-partition` (the partition must hold).
///
/// `g` and `cls` must be the graph and classification the report was
/// produced from; the statements condition on connectivity and on how many
/// vertices the two odd cycles share, which the report alone does not carry.
pub fn check_summary_identities(
    g: &Graph,
    cls: &FamilyClassification,
    report: &AnalysisReport,
) -> Vec<StatementCheck> {
    let mut checks = Vec::new();
    let shared = cls.shared.len();

    // Identity trichotomy, as written and with the odd-linked value taken
    // from the theorem sets instead of the summary.
    let as_written = match cls.tag {
        FamilyTag::OneOddCycle => 1,
        FamilyTag::FusedOdd | FamilyTag::EvenLinked | FamilyTag::OddLinked => {
            if shared >= 2 {
                1
            } else {
                0
            }
        }
        FamilyTag::DisconnectedPair => 2,
        FamilyTag::OutOfScope => {
            checks.push(StatementCheck {
                name: "identity-trichotomy-as-written",
                passed: false,
                expected_divergent: false,
                detail: "no identity claim applies to an out-of-scope graph".to_owned(),
            });
            return checks;
        }
    };
    let structural = if cls.tag == FamilyTag::OddLinked { 2 } else { as_written };
    checks.push(StatementCheck {
        name: "identity-trichotomy-as-written",
        passed: report.identity_value == as_written,
        expected_divergent: cls.tag == FamilyTag::OddLinked,
        detail: format!(
            "summary claims |core| + |corona| − 2α = {as_written} ({}); report has {}",
            trichotomy_case(cls.tag, shared),
            report.identity_value,
        ),
    });
    checks.push(StatementCheck {
        name: "identity-trichotomy-structural",
        passed: report.identity_value == structural,
        expected_divergent: false,
        detail: format!(
            "theorem sets force |core| + |corona| − 2α = {structural}; report has {}",
            report.identity_value,
        ),
    });

    // Corona/neighbourhood partition, as written and corrected.
    let partition_as_written = !(cls.tag == FamilyTag::FusedOdd && shared >= 2);
    checks.push(StatementCheck {
        name: "corona-core-partition-as-written",
        passed: report.partition_holds == partition_as_written,
        expected_divergent: cls.tag == FamilyTag::FusedOdd,
        detail: format!(
            "as written the partition should {} here; it {}",
            if partition_as_written { "hold" } else { "fail" },
            if report.partition_holds { "holds" } else { "fails" },
        ),
    });
    let partition_structural = !(cls.tag == FamilyTag::FusedOdd && shared == 1);
    checks.push(StatementCheck {
        name: "corona-core-partition-structural",
        passed: report.partition_holds == partition_structural,
        expected_divergent: false,
        detail: format!(
            "the theorem sets make the partition {} here; it {}",
            if partition_structural { "hold" } else { "fail" },
            if report.partition_holds { "holds" } else { "fails" },
        ),
    });

    // α + μ law, split on connectivity.
    let connected = g.is_connected();
    let expected_sum = if connected { g.n() - 1 } else { g.n() - 2 };
    checks.push(StatementCheck {
        name: "alpha-plus-mu-law",
        passed: report.alpha + report.mu == expected_sum,
        expected_divergent: false,
        detail: format!(
            "α + μ = {} + {} = {}, expected {expected_sum} for a {} graph on {} vertices",
            report.alpha,
            report.mu,
            report.alpha + report.mu,
            if connected { "connected" } else { "disconnected" },
            g.n(),
        ),
    });

    if cls.tag == FamilyTag::EvenLinked {
        let mut cycle_vertices = cls.c.clone();
        if let Some(cp) = &cls.c_prime {
            cycle_vertices.extend(cp.iter().copied());
        }
        cycle_vertices.sort_unstable();
        cycle_vertices.dedup();
        let u = cycle_vertices.len();
        let n = g.n();
        let expected_core = (n - u + 1) / 2;
        let expected_corona = (n + u - 3) / 2;
        checks.push(StatementCheck {
            name: "even-linked-core-size-formula",
            passed: report.core.len() == expected_core,
            expected_divergent: false,
            detail: format!(
                "|core| = {}, formula (n − u + 1)/2 gives {expected_core} with n = {n}, u = {u}",
                report.core.len(),
            ),
        });
        checks.push(StatementCheck {
            name: "even-linked-corona-size-formula",
            passed: report.corona.len() == expected_corona,
            expected_divergent: false,
            detail: format!(
                "|corona| = {}, formula (n + u − 3)/2 gives {expected_corona} with n = {n}, u = {u}",
                report.corona.len(),
            ),
        });
        checks.push(StatementCheck {
            name: "even-linked-partition",
            passed: report.partition_holds,
            expected_divergent: false,
            detail: format!(
                "corona ⊔ N(core) = V must hold on even-linked graphs; it {}",
                if report.partition_holds { "holds" } else { "fails" },
            ),
        });
    }

    checks
}

fn trichotomy_case(tag: FamilyTag, shared: usize) -> &'static str {
    match tag {
        FamilyTag::OneOddCycle => "single odd cycle",
        FamilyTag::DisconnectedPair => "disconnected",
        _ if shared >= 2 => "cycles share at least two vertices",
        _ => "connected, cycles share at most one vertex",
    }
}
