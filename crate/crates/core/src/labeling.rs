//! Labeling every third vertex along a structure's pattern cycles.
//!
//! Each pattern cycle of a structure gets a phase in `{0, 1, 2}`; the label
//! set is the union, over pattern cycles, of the vertices at positions
//! congruent to the phase.  Under the exact rule an assignment is feasible
//! when, on every pattern cycle, the labels met along the canonical
//! traversal are precisely that cycle's own pattern positions; the loose
//! rule only asks that every three consecutive vertices contain a label,
//! which the cycle's own pattern already guarantees.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::structure::Structure;

/// How strictly cycle patterns are enforced across overlapping cycles.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum PatternRule {
    /// On every pattern cycle, labels appear exactly every third position.
    #[default]
    Exact,
    /// Extra labels on a cycle are permitted.
    Loose,
}

/// A feasible phase choice for a structure's pattern cycles.
///
/// `phases[k]` belongs to the k-th pattern cycle (in the structure's
/// order); `labels` is the resulting label set over the union graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub phases: Vec<u8>,
    pub labels: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentSet {
    /// Sorted by label-set size, then label set, then phases.
    pub assignments: Vec<Assignment>,
    /// False when the output cap or the search budget cut the enumeration.
    pub complete: bool,
}

/// Upper bound on backtracking states explored per enumeration call.
const SEARCH_BUDGET: usize = 5_000_000;

/// Labels induced by a full phase vector.
pub fn labels_for(s: &Structure, phases: &[u8]) -> VertexSet {
    let mut labels = VertexSet::new();
    for (k, c) in s.pattern_cycles().enumerate() {
        let phase = phases[k] as usize;
        for (pos, &v) in c.vertices().iter().enumerate() {
            if pos % 3 == phase {
                labels.insert(v);
            }
        }
    }
    labels
}

/// Direct two-sided feasibility check of a phase vector, straight from the
/// definition (no propagation shortcuts).
///
/// Exact: on every pattern cycle, a vertex is labeled iff its position is
/// congruent to the cycle's phase.  Loose: every three cyclically
/// consecutive vertices of every pattern cycle contain a label.
pub fn phases_feasible(s: &Structure, phases: &[u8], rule: PatternRule) -> bool {
    let k = s.pattern_indices().len();
    if phases.len() != k || phases.iter().any(|&p| p > 2) {
        return false;
    }
    let labels = labels_for(s, phases);
    match rule {
        PatternRule::Exact => s.pattern_cycles().enumerate().all(|(i, c)| {
            c.vertices().iter().enumerate().all(|(pos, &v)| {
                labels.contains(v) == (pos % 3 == phases[i] as usize)
            })
        }),
        PatternRule::Loose => s.pattern_cycles().all(|c| {
            let verts = c.vertices();
            (0..verts.len()).all(|i| {
                (0..3).any(|d| labels.contains(verts[(i + d) % verts.len()]))
            })
        }),
    }
}

// ============================================================
// Backtracking over phase vectors
// ============================================================

/// For one cycle j: the earlier cycles i it shares vertices with, each
/// with the residue pairs of the shared positions.
type SharedResidues = Vec<(usize, Vec<(u8, u8)>)>;

/// Pairwise phase constraints between pattern cycles that share vertices.
/// For cycles i < j sharing vertex v at positions with residues (ri, rj),
/// feasibility under the exact rule needs
/// `(ri == phase_i) == (rj == phase_j)`.
struct Csp {
    lens: Vec<usize>,
    /// constraints[j] lists (i, residue pairs) for all i < j.
    constraints: Vec<SharedResidues>,
}

impl Csp {
    fn build(s: &Structure) -> Csp {
        let pats: Vec<_> = s.pattern_cycles().collect();
        for c in &pats {
            assert!(
                c.len() % 3 == 0,
                "pattern cycle length {} not divisible by 3",
                c.len()
            );
        }
        let mut constraints = Vec::with_capacity(pats.len());
        for (j, cj) in pats.iter().enumerate() {
            let mut row = Vec::new();
            for (i, ci) in pats.iter().enumerate().take(j) {
                let mut pairs = Vec::new();
                for (pos_j, &v) in cj.vertices().iter().enumerate() {
                    if let Some(pos_i) = ci.position(v) {
                        pairs.push(((pos_i % 3) as u8, (pos_j % 3) as u8));
                    }
                }
                if !pairs.is_empty() {
                    row.push((i, pairs));
                }
            }
            constraints.push(row);
        }
        Csp {
            lens: pats.iter().map(|c| c.len()).collect(),
            constraints,
        }
    }

    fn consistent(&self, phases: &[u8], j: usize, p: u8) -> bool {
        self.constraints[j].iter().all(|(i, pairs)| {
            pairs
                .iter()
                .all(|&(ri, rj)| (ri == phases[*i]) == (rj == p))
        })
    }
}

/// All feasible assignments of a structure, up to `max_out` of them.
///
/// The result is sorted by `(label count, labels, phases)`.  `complete` is
/// false when the cap or search budget fired, in which case the minimum
/// reported by the caller may not be global.
pub fn enumerate_assignments(s: &Structure, rule: PatternRule, max_out: usize) -> AssignmentSet {
    let csp = Csp::build(s);
    let k = csp.lens.len();
    let mut phases = alloc::vec![0u8; k];
    let mut out = Vec::new();
    let mut nodes = 0usize;
    let complete = enum_rec(s, &csp, rule, &mut phases, 0, &mut out, max_out, &mut nodes);
    out.sort_unstable_by(|a, b| {
        (a.labels.len(), &a.labels, &a.phases).cmp(&(b.labels.len(), &b.labels, &b.phases))
    });
    AssignmentSet {
        assignments: out,
        complete,
    }
}

#[allow(clippy::too_many_arguments)]
fn enum_rec(
    s: &Structure,
    csp: &Csp,
    rule: PatternRule,
    phases: &mut Vec<u8>,
    depth: usize,
    out: &mut Vec<Assignment>,
    max_out: usize,
    nodes: &mut usize,
) -> bool {
    *nodes += 1;
    if *nodes > SEARCH_BUDGET {
        return false;
    }
    if depth == csp.lens.len() {
        if out.len() == max_out {
            return false;
        }
        out.push(Assignment {
            phases: phases.clone(),
            labels: labels_for(s, phases),
        });
        return true;
    }
    for p in 0..3u8 {
        if rule == PatternRule::Exact && !csp.consistent(phases, depth, p) {
            continue;
        }
        phases[depth] = p;
        if !enum_rec(s, csp, rule, phases, depth + 1, out, max_out, nodes) {
            return false;
        }
    }
    true
}

/// The feasible assignment minimizing the label count, ties broken by the
/// lexicographically smallest label set, then smallest phase vector.
/// `None` when no assignment is feasible (possible under the exact rule).
pub fn min_assignment(s: &Structure, rule: PatternRule) -> Option<Assignment> {
    minimal_assignments(s, rule, 1).assignments.into_iter().next()
}

/// All assignments achieving the minimum label count, up to `cap`.
pub fn minimal_assignments(s: &Structure, rule: PatternRule, cap: usize) -> AssignmentSet {
    let all = enumerate_assignments(s, rule, usize::MAX);
    let Some(min_len) = all.assignments.first().map(|a| a.labels.len()) else {
        return AssignmentSet {
            assignments: Vec::new(),
            complete: all.complete,
        };
    };
    let mut assignments: Vec<Assignment> = all
        .assignments
        .into_iter()
        .take_while(|a| a.labels.len() == min_len)
        .collect();
    let complete = all.complete && assignments.len() <= cap;
    assignments.truncate(cap);
    AssignmentSet {
        assignments,
        complete,
    }
}

// ============================================================
// Spaced paths
// ============================================================

/// True when every three consecutive vertices of `seq` contain a label.
/// Sequences shorter than three qualify vacuously.
pub fn is_spaced_path(seq: &[usize], labels: &VertexSet) -> bool {
    seq.windows(3).all(|w| w.iter().any(|&v| labels.contains(v)))
}

/// Search cap for `has_closed_spaced_path`: total path extensions tried.
const PATH_BUDGET: usize = 500_000;

/// True when the union graph of `s` carries two simple `u`-`v` paths, each
/// with a label in every three consecutive vertices, whose second vertices
/// differ and whose second-to-last vertices differ.
///
/// Only `u != v` is meaningful; `u == v` (and endpoints off the union
/// graph) return false.  The search is bounded; a result of `false` after
/// budget exhaustion is conservative.
pub fn has_closed_spaced_path(s: &Structure, a: &Assignment, u: usize, v: usize) -> bool {
    if u == v || !s.union_vertices().contains(u) || !s.union_vertices().contains(v) {
        return false;
    }
    let mut doors: Vec<(usize, usize)> = Vec::new();
    let mut path = alloc::vec![u];
    let mut on_path = VertexSet::new();
    on_path.insert(u);
    let mut budget = PATH_BUDGET;
    search_paths(s, &a.labels, v, &mut path, &mut on_path, &mut doors, &mut budget)
}

fn search_paths(
    s: &Structure,
    labels: &VertexSet,
    target: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
    doors: &mut Vec<(usize, usize)>,
    budget: &mut usize,
) -> bool {
    let last = *path.last().expect("path starts at u");
    for &w in s.union_neighbors(last) {
        if on_path.contains(w) {
            continue;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        path.push(w);
        // Every window of three consecutive vertices needs a label; the
        // trailing window is the only new one.
        let tail_ok = path.len() < 3
            || path[path.len() - 3..].iter().any(|&x| labels.contains(x));
        if tail_ok {
            if w == target {
                let door = (path[1], path[path.len() - 2]);
                if doors.iter().any(|&(a, b)| a != door.0 && b != door.1) {
                    path.pop();
                    return true;
                }
                doors.push(door);
            } else {
                on_path.insert(w);
                let found =
                    search_paths(s, labels, target, path, on_path, doors, budget);
                on_path.remove(w);
                if found {
                    path.pop();
                    return true;
                }
            }
        }
        path.pop();
    }
    false
}

// ============================================================
// Attachment classification
// ============================================================

/// How a vertex sits relative to a labeled structure, for vertices on the
/// union graph or in the designated attached set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttachmentType {
    /// On the union graph and labeled.
    StructureLabeled,
    /// On the union graph, unlabeled.
    StructureUnlabeled,
    /// In the attached set, no labeled neighbor on the union graph.
    OutsideNoLabeledNeighbor,
    /// In the attached set, some labeled neighbor on the union graph.
    OutsideLabeledNeighbor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutsideDomain {
    pub vertex: usize,
}

impl fmt::Display for OutsideDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} is neither on the structure nor in the attached set",
            self.vertex
        )
    }
}

impl core::error::Error for OutsideDomain {}

/// Classifies `o` against a structure with labels `a.labels`, where
/// `attached` is the caller's set of off-structure vertices under
/// consideration.
pub fn classify_attachment(
    g: &Graph,
    s: &Structure,
    a: &Assignment,
    attached: &VertexSet,
    o: usize,
) -> Result<AttachmentType, OutsideDomain> {
    if s.union_vertices().contains(o) {
        return Ok(if a.labels.contains(o) {
            AttachmentType::StructureLabeled
        } else {
            AttachmentType::StructureUnlabeled
        });
    }
    if attached.contains(o) {
        let has_labeled_neighbor = g
            .neighbors(o)
            .iter()
            .any(|&w| s.union_vertices().contains(w) && a.labels.contains(w));
        return Ok(if has_labeled_neighbor {
            AttachmentType::OutsideLabeledNeighbor
        } else {
            AttachmentType::OutsideNoLabeledNeighbor
        });
    }
    Err(OutsideDomain { vertex: o })
}

// ============================================================
// Tests
// ============================================================
