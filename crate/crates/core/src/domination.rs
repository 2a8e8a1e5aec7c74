//! Dominating sets: an exact branch-and-bound oracle, a greedy upper
//! bound, and the candidate extracted from labeled cycle structures.
//!
//! The structure-derived candidate is never trusted: callers compare it
//! against `brute_force_gamma`, and a rejected or oversized candidate is
//! reported as data rather than patched over.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{closed_neighborhood, Graph, VertexSet};
use crate::labeling::{minimal_assignments, PatternRule};
use crate::structure::{Family, Structure};

// ============================================================
// Results and errors
// ============================================================

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    Greedy,
    Structure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma: usize,
    pub witness: VertexSet,
    /// How the witness was produced.
    pub method: Method,
    /// True only when no smaller dominating set can exist.
    pub exact: bool,
}

/// Default cap on the oracle's input size; branch-and-bound stays
/// comfortably exact below it.
pub const DEFAULT_ORACLE_LIMIT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The graph exceeds the configured size cap (or the 64-vertex bitset
    /// width).  The oracle refuses rather than silently degrading to a
    /// heuristic.
    TooLarge { n: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n, limit } => {
                write!(f, "exact search refused: n = {n} exceeds limit {limit}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// True iff every vertex of `g` is in `x` or adjacent to a member of `x`.
pub fn is_dominating(g: &Graph, x: &VertexSet) -> bool {
    closed_neighborhood(g, x).len() == g.n()
}

// ============================================================
// Exact oracle
// ============================================================

struct OracleSearch {
    /// cover[v]: closed neighborhood of v as a bitset.  Undirected, so it
    /// doubles as "the vertices that dominate v".
    cover: Vec<u64>,
    full: u64,
    max_cover: usize,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl OracleSearch {
    /// Branch on the dominators of an uncovered vertex with the fewest
    /// options.  The bound uses `>` (not `>=`) so every minimum-size set
    /// stays reachable and the lexicographic tie-break is sound.
    fn descend(&mut self, covered: u64) {
        if covered == self.full {
            let mut cand = self.chosen.clone();
            cand.sort_unstable();
            if (cand.len(), &cand) < (self.best.len(), &self.best) {
                self.best = cand;
            }
            return;
        }
        let uncovered = (self.full & !covered).count_ones() as usize;
        let bound = self.chosen.len() + uncovered.div_ceil(self.max_cover);
        if bound > self.best.len() {
            return;
        }
        let v = (0..self.cover.len())
            .filter(|&v| covered & (1u64 << v) == 0)
            .min_by_key(|&v| (self.cover[v].count_ones(), v))
            .expect("some vertex is uncovered");
        let mut options = self.cover[v];
        while options != 0 {
            let w = options.trailing_zeros() as usize;
            options &= options - 1;
            self.chosen.push(w);
            self.descend(covered | self.cover[w]);
            self.chosen.pop();
        }
    }
}

/// Minimum dominating set by branch and bound over closed-neighborhood
/// bitsets.  The witness is the lexicographically smallest optimum (as a
/// sorted vertex list).  Deterministic.
pub fn brute_force_gamma(g: &Graph, limit: usize) -> Result<DominationResult, OracleError> {
    let n = g.n();
    if n > limit || n > 64 {
        return Err(OracleError::TooLarge {
            n,
            limit: limit.min(64),
        });
    }
    if n == 0 {
        return Ok(DominationResult {
            gamma: 0,
            witness: VertexSet::new(),
            method: Method::BruteForce,
            exact: true,
        });
    }
    let cover: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |acc, &w| acc | (1u64 << w))
        })
        .collect();
    let mut search = OracleSearch {
        max_cover: cover.iter().map(|m| m.count_ones() as usize).max().expect("n > 0"),
        cover,
        full: if n == 64 { !0 } else { (1u64 << n) - 1 },
        chosen: Vec::new(),
        best: (0..n).collect(),
    };
    search.descend(0);
    Ok(DominationResult {
        gamma: search.best.len(),
        witness: search.best.into_iter().collect(),
        method: Method::BruteForce,
        exact: true,
    })
}

// ============================================================
// Greedy upper bound
// ============================================================

/// Repeatedly takes the vertex covering the most still-uncovered vertices
/// (ties to the smallest id).  Cheap upper bound; never exact by fiat.
pub fn greedy_gamma(g: &Graph) -> DominationResult {
    let n = g.n();
    let mut covered = alloc::vec![false; n];
    let mut covered_count = 0usize;
    let mut witness = VertexSet::new();
    while covered_count < n {
        let (w, gain) = (0..n)
            .map(|w| {
                let gain = core::iter::once(w)
                    .chain(g.neighbors(w).iter().copied())
                    .filter(|&x| !covered[x])
                    .count();
                (w, gain)
            })
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("n > 0 while uncovered vertices remain");
        debug_assert!(gain > 0, "an uncovered vertex always covers itself");
        witness.insert(w);
        for x in core::iter::once(w).chain(g.neighbors(w).iter().copied()) {
            if !covered[x] {
                covered[x] = true;
                covered_count += 1;
            }
        }
    }
    DominationResult {
        gamma: witness.len(),
        witness,
        method: Method::Greedy,
        exact: false,
    }
}

// ============================================================
// Structure-derived candidate
// ============================================================

/// Per-member cap on minimal assignments considered.
pub const ASSIGNMENT_CAP: usize = 16;
/// Per-family cap on assignment combinations considered.
pub const CANDIDATE_CAP: usize = 256;

/// Why a family produced no accepted candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    /// A member structure has no feasible assignment (index into the
    /// structure list).
    NoFeasibleAssignment { member: usize },
    /// Removing the family's vertices leaves a component with two or more
    /// vertices.
    OversizeComponent { component: Vec<usize> },
    /// A leftover singleton has neighbors outside the label set.
    UnenclosedSingleton {
        vertex: usize,
        unlabeled_neighbors: Vec<usize>,
    },
    /// The candidate label set fails to dominate the graph.
    NotDominating { uncovered: Vec<usize> },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::NoFeasibleAssignment { member } => {
                write!(f, "structure {member} admits no label assignment")
            }
            RejectReason::OversizeComponent { component } => {
                write!(f, "leftover component {component:?} has more than one vertex")
            }
            RejectReason::UnenclosedSingleton {
                vertex,
                unlabeled_neighbors,
            } => write!(
                f,
                "leftover vertex {vertex} has unlabeled neighbors {unlabeled_neighbors:?}"
            ),
            RejectReason::NotDominating { uncovered } => {
                write!(f, "labels leave {uncovered:?} undominated")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRejection {
    /// Index into the family list.
    pub family: usize,
    pub reason: RejectReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureOutcome {
    /// Some family produced a label set that passed every check.
    Accepted {
        result: DominationResult,
        /// Index of the accepting family.
        family: usize,
    },
    /// Every family was rejected (first reason per family, in family
    /// order).  An empty list means there were no families at all.
    Failed { rejections: Vec<FamilyRejection> },
}

impl StructureOutcome {
    pub fn accepted(&self) -> Option<&DominationResult> {
        match self {
            StructureOutcome::Accepted { result, .. } => Some(result),
            StructureOutcome::Failed { .. } => None,
        }
    }
}

/// Extracts a dominating set from labeled structures.
///
/// For each family: the vertices off the family's union graphs must fall
/// into components of size at most one; every minimal assignment
/// combination of the member structures (capped) yields a candidate label
/// set, accepted when each leftover singleton has all neighbors labeled
/// and the labels dominate `g`.  The smallest accepted label set across
/// families wins (ties to the lexicographically smaller set, then the
/// earlier family).  `exact` is false: optimality is checked by callers
/// against the oracle, never assumed.
pub fn structure_gamma(
    g: &Graph,
    structures: &[Structure],
    families: &[Family],
    rule: PatternRule,
) -> StructureOutcome {
    let mut best: Option<(usize, VertexSet, usize)> = None;
    let mut rejections = Vec::new();

    'family: for (fi, fam) in families.iter().enumerate() {
        let mut first_reject: Option<RejectReason> = None;
        fn reject(slot: &mut Option<RejectReason>, r: RejectReason) {
            if slot.is_none() {
                *slot = Some(r);
            }
        }

        let components = g.components_excluding(&fam.covered);
        if let Some(big) = components.iter().find(|c| c.len() > 1) {
            rejections.push(FamilyRejection {
                family: fi,
                reason: RejectReason::OversizeComponent {
                    component: big.clone(),
                },
            });
            continue 'family;
        }
        let singletons: Vec<usize> = components.iter().map(|c| c[0]).collect();

        // Minimal assignments per member, then every combination (capped).
        let mut menus = Vec::with_capacity(fam.members.len());
        for &si in &fam.members {
            let menu = minimal_assignments(&structures[si], rule, ASSIGNMENT_CAP);
            if menu.assignments.is_empty() {
                rejections.push(FamilyRejection {
                    family: fi,
                    reason: RejectReason::NoFeasibleAssignment { member: si },
                });
                continue 'family;
            }
            menus.push(menu.assignments);
        }

        let mut pick = alloc::vec![0usize; menus.len()];
        let mut combos = 0usize;
        loop {
            combos += 1;
            let mut labels = VertexSet::new();
            for (mi, &ai) in pick.iter().enumerate() {
                labels.extend_from(&menus[mi][ai].labels);
            }

            let unenclosed = singletons.iter().copied().find_map(|x| {
                let missing: Vec<usize> = g
                    .neighbors(x)
                    .iter()
                    .copied()
                    .filter(|&w| !labels.contains(w))
                    .collect();
                (!missing.is_empty()).then_some((x, missing))
            });
            if let Some((vertex, unlabeled_neighbors)) = unenclosed {
                reject(
                    &mut first_reject,
                    RejectReason::UnenclosedSingleton {
                        vertex,
                        unlabeled_neighbors,
                    },
                );
            } else if !is_dominating(g, &labels) {
                let dominated = closed_neighborhood(g, &labels);
                let uncovered: Vec<usize> =
                    (0..g.n()).filter(|&v| !dominated.contains(v)).collect();
                reject(&mut first_reject, RejectReason::NotDominating { uncovered });
            } else {
                let better = match &best {
                    None => true,
                    Some((len, set, _)) => (labels.len(), &labels) < (*len, set),
                };
                if better {
                    best = Some((labels.len(), labels, fi));
                }
                first_reject = None; // the family accepted something
            }

            if combos == CANDIDATE_CAP || !advance(&mut pick, &menus) {
                break;
            }
        }

        if let Some(reason) = first_reject {
            rejections.push(FamilyRejection { family: fi, reason });
        }
    }

    match best {
        Some((len, witness, family)) => StructureOutcome::Accepted {
            result: DominationResult {
                gamma: len,
                witness,
                method: Method::Structure,
                exact: false,
            },
            family,
        },
        None => StructureOutcome::Failed { rejections },
    }
}

/// Odometer step over per-member assignment menus.
fn advance(pick: &mut [usize], menus: &[Vec<crate::labeling::Assignment>]) -> bool {
    for i in (0..pick.len()).rev() {
        pick[i] += 1;
        if pick[i] < menus[i].len() {
            return true;
        }
        pick[i] = 0;
    }
    false
}

// ============================================================
// Tests
// ============================================================
