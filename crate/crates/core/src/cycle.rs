//! Elementary cycle enumeration with honest budgets.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};

// ============================================================
// Cycles
// ============================================================

/// An elementary cycle, stored in canonical form: the smallest vertex
/// first, oriented so that the second entry is the smaller of the first
/// vertex's two cycle neighbors.  Two cycles are equal exactly when they
/// visit the same vertices in the same cyclic order, and the derived `Ord`
/// on the canonical sequence gives every cycle list in this crate its
/// deterministic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    verts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleError {
    TooShort { len: usize },
    RepeatedVertex { v: usize },
    NotAdjacent { u: usize, v: usize },
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::TooShort { len } => write!(f, "cycle needs >= 3 vertices, got {len}"),
            CycleError::RepeatedVertex { v } => write!(f, "vertex {v} repeated in cycle"),
            CycleError::NotAdjacent { u, v } => write!(f, "({u}, {v}) is not an edge"),
        }
    }
}

impl core::error::Error for CycleError {}

impl Cycle {
    /// Validates that `verts` traces an elementary cycle of `g` and stores
    /// it in canonical form.
    pub fn new(g: &Graph, verts: &[usize]) -> Result<Self, CycleError> {
        if verts.len() < 3 {
            return Err(CycleError::TooShort { len: verts.len() });
        }
        let mut seen = VertexSet::new();
        for &v in verts {
            if !seen.insert(v) {
                return Err(CycleError::RepeatedVertex { v });
            }
        }
        for i in 0..verts.len() {
            let u = verts[i];
            let v = verts[(i + 1) % verts.len()];
            if !g.has_edge(u, v) {
                return Err(CycleError::NotAdjacent { u, v });
            }
        }
        Ok(Cycle {
            verts: canonical(verts),
        })
    }

    /// Number of vertices (equal to the number of edges).
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Canonical vertex sequence.
    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    /// Position of `v` in the canonical sequence.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.verts.iter().position(|&w| w == v)
    }

    /// Cycle edges, each normalized to `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.verts.len()).map(move |i| {
            let u = self.verts[i];
            let v = self.verts[(i + 1) % self.verts.len()];
            if u < v {
                (u, v)
            } else {
                (v, u)
            }
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.verts.iter().copied().collect()
    }
}

/// Canonical rotation and orientation of a cyclic vertex sequence.
fn canonical(verts: &[usize]) -> Vec<usize> {
    let n = verts.len();
    let start = (0..n).min_by_key(|&i| verts[i]).expect("non-empty");
    let fwd = verts[(start + 1) % n];
    let bwd = verts[(start + n - 1) % n];
    let mut out = Vec::with_capacity(n);
    if fwd < bwd {
        out.extend((0..n).map(|i| verts[(start + i) % n]));
    } else {
        out.extend((0..n).map(|i| verts[(start + n - i) % n]));
    }
    out
}

// ============================================================
// Enumeration
// ============================================================

/// Caps for cycle enumeration.  `max_length` bounds the cycle length in
/// vertices, `max_count` the number of cycles collected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBudget {
    pub max_length: usize,
    pub max_count: usize,
}

pub const DEFAULT_MAX_CYCLES: usize = 200_000;

impl CycleBudget {
    pub fn new(max_length: usize, max_count: usize) -> Self {
        CycleBudget {
            max_length,
            max_count,
        }
    }

    /// Default budget for a graph: no effective length cap, 200k cycles.
    pub fn default_for(g: &Graph) -> Self {
        CycleBudget {
            max_length: g.n(),
            max_count: DEFAULT_MAX_CYCLES,
        }
    }
}

/// Enumeration result.  `truncated` is set whenever the search may have
/// missed a cycle: either the count cap fired, or some path was cut off by
/// the length cap while it still had unexplored extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSet {
    pub cycles: Vec<Cycle>,
    pub truncated: bool,
}

struct Search<'a> {
    g: &'a Graph,
    budget: &'a CycleBudget,
    root: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    out: Vec<Cycle>,
    truncated: bool,
}

impl Search<'_> {
    /// Depth-first extension of the current root-anchored path.  Only
    /// vertices above the root are visited, so each cycle is discovered
    /// exactly once, rooted at its minimum vertex; emitting only when
    /// `path[1] < path[last]` picks one of the two traversal directions and
    /// makes the emitted sequence canonical as-is.
    fn extend(&mut self) -> bool {
        let v = *self.path.last().expect("path holds the root");
        for &w in self.g.neighbors(v) {
            if w == self.root && self.path.len() >= 3 {
                if self.path[1] < v {
                    self.out.push(Cycle {
                        verts: self.path.clone(),
                    });
                    if self.out.len() >= self.budget.max_count {
                        self.truncated = true;
                        return false;
                    }
                }
            } else if w > self.root && !self.on_path[w] {
                if self.path.len() < self.budget.max_length {
                    self.path.push(w);
                    self.on_path[w] = true;
                    let keep_going = self.extend();
                    self.on_path[w] = false;
                    self.path.pop();
                    if !keep_going {
                        return false;
                    }
                } else {
                    // A longer cycle through this path may exist.
                    self.truncated = true;
                }
            }
        }
        true
    }
}

/// All elementary cycles of `g` within `budget`, sorted canonically.
pub fn enumerate_cycles(g: &Graph, budget: &CycleBudget) -> CycleSet {
    let mut out = Vec::new();
    let mut truncated = false;
    'roots: for root in 0..g.n() {
        let mut search = Search {
            g,
            budget,
            root,
            path: alloc::vec![root],
            on_path: alloc::vec![false; g.n()],
            out,
            truncated,
        };
        search.on_path[root] = true;
        let keep_going = search.extend();
        out = search.out;
        truncated = search.truncated;
        if !keep_going {
            break 'roots;
        }
    }
    out.sort_unstable();
    CycleSet {
        cycles: out,
        truncated,
    }
}

/// The cycles of `g` whose length is divisible by three, within `budget`.
///
/// This is a filter of `enumerate_cycles` under the same budget, so every
/// returned cycle also appears there and the truncation flag carries over.
pub fn zero_mod3_cycles(g: &Graph, budget: &CycleBudget) -> CycleSet {
    let all = enumerate_cycles(g, budget);
    CycleSet {
        cycles: all
            .cycles
            .into_iter()
            .filter(|c| c.len() % 3 == 0)
            .collect(),
        truncated: all.truncated,
    }
}

// ============================================================
// Tests
// ============================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;
    use alloc::vec;

    fn cycle_graph(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn canonical_form_fixes_rotation_and_direction() {
        let g = NamedGraph::K4.build();
        let a = Cycle::new(&g, &[2, 0, 1]).unwrap();
        let b = Cycle::new(&g, &[1, 0, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 1, 2]);
        let c = Cycle::new(&g, &[3, 1, 0, 2]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 3, 2]);
    }

    #[test]
    fn cycle_validation_errors() {
        let g = cycle_graph(6);
        assert_eq!(
            Cycle::new(&g, &[0, 1]),
            Err(CycleError::TooShort { len: 2 })
        );
        assert_eq!(
            Cycle::new(&g, &[0, 1, 2, 1]),
            Err(CycleError::RepeatedVertex { v: 1 })
        );
        assert_eq!(
            Cycle::new(&g, &[0, 1, 3]),
            Err(CycleError::NotAdjacent { u: 1, v: 3 })
        );
    }

    #[test]
    fn k4_has_seven_cycles() {
        // Independently derived: four triangles and three quadrilaterals.
        let g = NamedGraph::K4.build();
        let all = enumerate_cycles(&g, &CycleBudget::default_for(&g));
        assert!(!all.truncated);
        assert_eq!(all.cycles.len(), 7);
        let triangles: Vec<_> = all.cycles.iter().filter(|c| c.len() == 3).collect();
        let quads: Vec<_> = all.cycles.iter().filter(|c| c.len() == 4).collect();
        assert_eq!(triangles.len(), 4);
        assert_eq!(quads.len(), 3);
        let mod3 = zero_mod3_cycles(&g, &CycleBudget::default_for(&g));
        assert_eq!(mod3.cycles.len(), 4);
        assert!(mod3.cycles.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn k4_length_cap_excludes_quadrilaterals() {
        let g = NamedGraph::K4.build();
        let capped = enumerate_cycles(&g, &CycleBudget::new(3, DEFAULT_MAX_CYCLES));
        assert_eq!(capped.cycles.len(), 4);
        assert!(capped.truncated, "length cap cut off real extensions");
    }

    #[test]
    fn count_cap_truncates_honestly() {
        let g = NamedGraph::K4.build();
        let capped = enumerate_cycles(&g, &CycleBudget::new(4, 3));
        assert_eq!(capped.cycles.len(), 3);
        assert!(capped.truncated);
    }

    #[test]
    fn c6_has_exactly_its_one_cycle() {
        let g = cycle_graph(6);
        let all = enumerate_cycles(&g, &CycleBudget::default_for(&g));
        assert!(!all.truncated);
        assert_eq!(all.cycles.len(), 1);
        assert_eq!(all.cycles[0].vertices(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn petersen_cycle_census() {
        // Independently derived census: 12 pentagons, 10 hexagons,
        // 15 octagons, 20 nonagons; 57 cycles in total.
        let g = NamedGraph::Petersen.build();
        let all = enumerate_cycles(&g, &CycleBudget::default_for(&g));
        assert!(!all.truncated);
        assert_eq!(all.cycles.len(), 57);
        let count = |len: usize| all.cycles.iter().filter(|c| c.len() == len).count();
        assert_eq!(count(5), 12);
        assert_eq!(count(6), 10);
        assert_eq!(count(7), 0);
        assert_eq!(count(8), 15);
        assert_eq!(count(9), 20);
        let mod3 = zero_mod3_cycles(&g, &CycleBudget::default_for(&g));
        assert_eq!(mod3.cycles.len(), 30);
    }

    #[test]
    fn petersen_girth_is_five() {
        let g = NamedGraph::Petersen.build();
        let all = enumerate_cycles(&g, &CycleBudget::default_for(&g));
        assert_eq!(all.cycles.iter().map(Cycle::len).min(), Some(5));
    }

    #[test]
    fn moebius_kantor_cycle_census() {
        // Independently derived: 400 cycles, girth 6.
        let g = NamedGraph::MoebiusKantor.build();
        let all = enumerate_cycles(&g, &CycleBudget::default_for(&g));
        assert!(!all.truncated);
        assert_eq!(all.cycles.len(), 400);
        assert_eq!(all.cycles.iter().map(Cycle::len).min(), Some(6));
        let mod3 = zero_mod3_cycles(&g, &CycleBudget::default_for(&g));
        assert_eq!(mod3.cycles.len(), 124);
    }

    #[test]
    fn triangle_free_graph_has_no_short_mod3_cycles() {
        let g = NamedGraph::CubeQ3.build();
        let mod3 = zero_mod3_cycles(&g, &CycleBudget::new(3, DEFAULT_MAX_CYCLES));
        assert!(mod3.cycles.is_empty());
    }

    #[test]
    fn enumeration_is_sorted_and_deduplicated() {
        let g = NamedGraph::Prism3.build();
        let all = enumerate_cycles(&g, &CycleBudget::default_for(&g));
        assert_eq!(all.cycles.len(), 14);
        for w in all.cycles.windows(2) {
            assert!(w[0] < w[1]);
        }
        let lens = vec![3, 4, 5, 6]
            .into_iter()
            .map(|l| all.cycles.iter().filter(|c| c.len() == l).count())
            .collect::<Vec<_>>();
        assert_eq!(lens, vec![2, 3, 6, 3]);
    }
}
