//! Structures: connected unions of cycles glued along shared paths.
//!
//! Two cycles "connect seamlessly" when their shared subgraph is a single
//! path.  A structure is the closure of one seed cycle under that relation
//! inside a fixed cycle pool.  Each structure carries its pattern cycles:
//! the members that survive iterated removal of cycles without a private
//! vertex.  Families group structures that are pairwise vertex-disjoint.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::cycle::{zero_mod3_cycles, Cycle, CycleBudget, CycleSet};
use crate::graph::{Graph, VertexSet};

// ============================================================
// Seam test
// ============================================================

/// What counts as a seamless connection between two cycles.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SeamRule {
    /// The shared path must contain at least one edge (the default).
    #[default]
    RequireEdge,
    /// A single shared vertex counts as a (degenerate) shared path.
    AllowVertex,
}

/// One connected component of the intersection of two cycles.
///
/// `vertices` lists the component's vertices in path order starting at the
/// smaller endpoint, or in cyclic canonical order when the component is a
/// cycle (`is_path == false`, possible only for two equal input cycles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedPiece {
    pub vertices: Vec<usize>,
    pub is_path: bool,
}

/// Shape of the intersection of two cycles: shared vertices plus shared
/// edges, split into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionShape {
    pub pieces: Vec<SharedPiece>,
    /// True when there is exactly one piece and it is a path with at least
    /// one edge.
    pub single_path: bool,
}

/// Computes the intersection subgraph of two cycles and classifies it.
pub fn intersection_shape(c1: &Cycle, c2: &Cycle) -> IntersectionShape {
    let verts2 = c2.vertex_set();
    let shared_verts: Vec<usize> = c1
        .vertices()
        .iter()
        .copied()
        .filter(|&v| verts2.contains(v))
        .collect();
    let edges2: BTreeSet<(usize, usize)> = c2.edges().collect();
    let mut adj: BTreeMap<usize, Vec<usize>> =
        shared_verts.iter().map(|&v| (v, Vec::new())).collect();
    for (u, v) in c1.edges().filter(|e| edges2.contains(e)) {
        adj.get_mut(&u).expect("edge endpoint is shared").push(v);
        adj.get_mut(&v).expect("edge endpoint is shared").push(u);
    }
    let mut pieces = Vec::new();
    let mut seen = BTreeSet::new();
    // adj is a BTreeMap, so components come out ordered by smallest vertex.
    for &start in adj.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = alloc::vec![start];
        seen.insert(start);
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[&comp[i]] {
                if seen.insert(w) {
                    comp.push(w);
                }
            }
            i += 1;
        }
        pieces.push(orient_piece(comp, &adj));
    }
    let single_path =
        pieces.len() == 1 && pieces[0].is_path && pieces[0].vertices.len() >= 2;
    IntersectionShape {
        pieces,
        single_path,
    }
}

/// Orders a component's vertices along the path (or around the cycle) and
/// classifies it.  Degrees in a cycle intersection never exceed two.
fn orient_piece(comp: Vec<usize>, adj: &BTreeMap<usize, Vec<usize>>) -> SharedPiece {
    let vert_count = comp.len();
    let edge_count: usize = comp.iter().map(|v| adj[v].len()).sum::<usize>() / 2;
    let is_path = edge_count == vert_count - 1;
    if vert_count == 1 {
        return SharedPiece {
            vertices: comp,
            is_path: true,
        };
    }
    let start = if is_path {
        // Walk from the smaller endpoint.
        comp.iter()
            .copied()
            .filter(|v| adj[v].len() == 1)
            .min()
            .expect("a path has endpoints")
    } else {
        *comp.iter().min().expect("non-empty")
    };
    let mut ordered = alloc::vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[&cur]
            .iter()
            .copied()
            .filter(|&w| w != prev)
            .min();
        let Some(next) = next else { break };
        if next == start {
            break;
        }
        ordered.push(next);
        prev = cur;
        cur = next;
        if ordered.len() == vert_count {
            break;
        }
    }
    SharedPiece {
        vertices: ordered,
        is_path,
    }
}

/// True when distinct cycles `c1` and `c2` connect seamlessly under `rule`.
pub fn is_seamless(c1: &Cycle, c2: &Cycle, rule: SeamRule) -> bool {
    if c1 == c2 {
        return false;
    }
    let shape = intersection_shape(c1, c2);
    match rule {
        SeamRule::RequireEdge => shape.single_path,
        SeamRule::AllowVertex => shape.pieces.len() == 1 && shape.pieces[0].is_path,
    }
}

/// Per-cycle bitmasks and position tables for the hot seam test.  Closure
/// growth checks up to |pool|^2 / 2 pairs, so the per-pair cost must stay
/// allocation-free; this fast path applies whenever all vertex ids fit in
/// a 64-bit mask (a cycle then has at most 64 vertices too).
struct SeamProbe {
    masks: Vec<u64>,
    /// pos[i][v] = position of v on cycle i, `u8::MAX` when absent.
    pos: Vec<[u8; 64]>,
}

impl SeamProbe {
    /// `None` when some vertex id is 64 or larger (callers fall back to
    /// the general shape computation).
    fn new(cycles: &[Cycle]) -> Option<SeamProbe> {
        let mut masks = Vec::with_capacity(cycles.len());
        let mut pos = Vec::with_capacity(cycles.len());
        for c in cycles {
            let mut mask = 0u64;
            let mut table = [u8::MAX; 64];
            for (i, &v) in c.vertices().iter().enumerate() {
                if v >= 64 {
                    return None;
                }
                mask |= 1 << v;
                table[v] = i as u8;
            }
            masks.push(mask);
            pos.push(table);
        }
        Some(SeamProbe { masks, pos })
    }

    /// Equivalent to `is_seamless(&cycles[i], &cycles[j], rule)`.
    ///
    /// The shared subgraph of two cycles contains a full cycle only when
    /// the two are identical (a cycle's proper edge subsets are disjoint
    /// paths), and every shared degree is at most two because each input
    /// is a cycle.  So for distinct inputs the shared subgraph is a
    /// disjoint union of paths, and it is a single path exactly when
    /// #shared edges == #shared vertices - 1.  Identical inputs fail that
    /// count (edges == vertices), matching `is_seamless` on equal cycles.
    fn seamless(&self, cycles: &[Cycle], i: usize, j: usize, rule: SeamRule) -> bool {
        let shared = self.masks[i] & self.masks[j];
        let k = shared.count_ones() as usize;
        let need = match rule {
            SeamRule::RequireEdge => 2,
            SeamRule::AllowVertex => 1,
        };
        if k < need {
            return false;
        }
        let (a, b) = if cycles[i].len() <= cycles[j].len() {
            (i, j)
        } else {
            (j, i)
        };
        let verts = cycles[a].vertices();
        let la = verts.len();
        let lb = cycles[b].len();
        let pb = &self.pos[b];
        let mut shared_edges = 0usize;
        for t in 0..la {
            let pu = pb[verts[t]];
            let pv = pb[verts[(t + 1) % la]];
            if pu != u8::MAX && pv != u8::MAX {
                let d = pu.abs_diff(pv) as usize;
                if d == 1 || d == lb - 1 {
                    shared_edges += 1;
                }
            }
        }
        shared_edges == k - 1
    }
}

// ============================================================
// Structures
// ============================================================

/// A set of cycles grown from one seed by seamless connection, with its
/// union graph and the reduction to pattern cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    cycles: Vec<Cycle>,
    rule: SeamRule,
    union_vertices: VertexSet,
    union_edges: Vec<(usize, usize)>,
    union_adj: BTreeMap<usize, Vec<usize>>,
    pattern: Vec<usize>,
}

impl Structure {
    fn from_cycles(mut cycles: Vec<Cycle>, rule: SeamRule) -> Self {
        cycles.sort_unstable();
        cycles.dedup();
        let mut union_vertices = VertexSet::new();
        let mut edge_set = BTreeSet::new();
        for c in &cycles {
            union_vertices.extend(c.vertices().iter().copied());
            edge_set.extend(c.edges());
        }
        let union_edges: Vec<(usize, usize)> = edge_set.into_iter().collect();
        let mut union_adj: BTreeMap<usize, Vec<usize>> =
            union_vertices.iter().map(|v| (v, Vec::new())).collect();
        for &(u, v) in &union_edges {
            union_adj.get_mut(&u).expect("endpoint in union").push(v);
            union_adj.get_mut(&v).expect("endpoint in union").push(u);
        }
        let pattern = reduce_pattern(&cycles);
        Structure {
            cycles,
            rule,
            union_vertices,
            union_edges,
            union_adj,
            pattern,
        }
    }

    /// Member cycles, sorted canonically.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn rule(&self) -> SeamRule {
        self.rule
    }

    /// Vertices of the union graph.
    pub fn union_vertices(&self) -> &VertexSet {
        &self.union_vertices
    }

    /// Edges of the union graph, sorted, `u < v`.
    pub fn union_edges(&self) -> &[(usize, usize)] {
        &self.union_edges
    }

    /// Neighbors of `v` in the union graph (empty if `v` is not on it).
    pub fn union_neighbors(&self, v: usize) -> &[usize] {
        self.union_adj.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Indices (into `cycles`) of the pattern cycles: the members kept by
    /// iterated removal of cycles without an exclusive vertex.
    pub fn pattern_indices(&self) -> &[usize] {
        &self.pattern
    }

    pub fn pattern_cycles(&self) -> impl Iterator<Item = &Cycle> {
        self.pattern.iter().map(|&i| &self.cycles[i])
    }

    /// Member pairs that connect seamlessly, derived on demand.  The full
    /// relation is quadratic in the member count, so it is not stored.
    pub fn seam_pairs(&self) -> Vec<(usize, usize)> {
        let probe = SeamProbe::new(&self.cycles);
        let mut out = Vec::new();
        for i in 0..self.cycles.len() {
            for j in (i + 1)..self.cycles.len() {
                let linked = match &probe {
                    Some(p) => p.seamless(&self.cycles, i, j, self.rule),
                    None => is_seamless(&self.cycles[i], &self.cycles[j], self.rule),
                };
                if linked {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True when the union graph is connected (it always is for a structure
    /// grown by seamless connection; re-checked by the test suite).
    pub fn union_is_connected(&self) -> bool {
        let Some(start) = self.union_vertices.first() else {
            return true;
        };
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut stack = alloc::vec![start];
        while let Some(v) = stack.pop() {
            for &w in self.union_neighbors(v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.union_vertices.len()
    }

    /// Identity of a structure for deduplication: its union graph.
    fn union_key(&self) -> (VertexSet, Vec<(usize, usize)>) {
        (self.union_vertices.clone(), self.union_edges.clone())
    }
}

/// Grows the seamless closure of `seed` inside `pool`.
///
/// The closure is the connected component of the seed under the seam
/// relation, so the discovery order cannot change the final set — a fact
/// the property tests lean on.
pub fn grow_structure(seed: &Cycle, pool: &[Cycle], rule: SeamRule) -> Structure {
    let mut ext: Vec<Cycle> = pool.to_vec();
    let seed_idx = match ext.iter().position(|c| c == seed) {
        Some(i) => i,
        None => {
            ext.push(seed.clone());
            ext.len() - 1
        }
    };
    let probe = SeamProbe::new(&ext);
    let members = closure_indices(&ext, seed_idx, rule, probe.as_ref());
    Structure::from_cycles(members.into_iter().map(|i| ext[i].clone()).collect(), rule)
}

/// Breadth-first search of the seam relation from one seed; returns the
/// sorted member indices.
fn closure_indices(
    cycles: &[Cycle],
    seed: usize,
    rule: SeamRule,
    probe: Option<&SeamProbe>,
) -> Vec<usize> {
    let mut in_set = alloc::vec![false; cycles.len()];
    in_set[seed] = true;
    let mut queue = alloc::vec![seed];
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head];
        head += 1;
        for j in 0..cycles.len() {
            if in_set[j] {
                continue;
            }
            let linked = match probe {
                Some(p) => p.seamless(cycles, cur, j, rule),
                None => is_seamless(&cycles[cur], &cycles[j], rule),
            };
            if linked {
                in_set[j] = true;
                queue.push(j);
            }
        }
    }
    queue.sort_unstable();
    queue
}

// ============================================================
// Pattern reduction
// ============================================================

/// Iteratively removes, always at the canonically smallest position, a
/// cycle none of whose vertices is exclusive to it among the survivors,
/// until every survivor keeps an exclusive vertex or one cycle remains.
/// Returns indices into `cycles` (which must be sorted).  The union of the
/// surviving cycles' vertices still covers the union of all of them.
pub fn reduce_pattern(cycles: &[Cycle]) -> Vec<usize> {
    // Multiplicity of each vertex over the surviving cycles.
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for c in cycles {
        for &v in c.vertices() {
            *mult.entry(v).or_insert(0) += 1;
        }
    }
    // One forward pass suffices: dropping a cycle only lowers
    // multiplicities, so a cycle that keeps an exclusive vertex when
    // scanned can never lose it to a later drop.  This matches the
    // restart-after-each-drop reading of the rule exactly (drops happen in
    // strictly increasing index order either way).
    let mut alive = Vec::with_capacity(cycles.len());
    for (i, c) in cycles.iter().enumerate() {
        if c.vertices().iter().all(|&v| mult[&v] > 1) {
            for &v in c.vertices() {
                *mult.get_mut(&v).expect("counted at startup") -= 1;
            }
        } else {
            alive.push(i);
        }
    }
    debug_assert!(cycles.is_empty() || !alive.is_empty());
    alive
}

// ============================================================
// Structure enumeration
// ============================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureSet {
    pub structures: Vec<Structure>,
    /// True when the structure cap fired.
    pub truncated: bool,
    /// The mod-3 cycle pool the structures were grown from.
    pub pool: CycleSet,
}

/// Grows a structure from every cycle of the pool and deduplicates by
/// union graph, in the pool's canonical order.  Seeds already absorbed by
/// an earlier closure are skipped: they would reproduce the same set.
pub fn structures_from_pool(
    pool: CycleSet,
    max_structures: usize,
    rule: SeamRule,
) -> StructureSet {
    let mut structures: Vec<Structure> = Vec::new();
    let mut seen_unions = BTreeSet::new();
    let mut absorbed = alloc::vec![false; pool.cycles.len()];
    let mut truncated = false;
    let probe = SeamProbe::new(&pool.cycles);
    for seed in 0..pool.cycles.len() {
        if absorbed[seed] {
            continue;
        }
        let members = closure_indices(&pool.cycles, seed, rule, probe.as_ref());
        let cycles = members
            .iter()
            .map(|&i| {
                absorbed[i] = true;
                pool.cycles[i].clone()
            })
            .collect();
        let s = Structure::from_cycles(cycles, rule);
        if seen_unions.insert(s.union_key()) {
            if structures.len() == max_structures {
                truncated = true;
                break;
            }
            structures.push(s);
        }
    }
    StructureSet {
        structures,
        truncated,
        pool,
    }
}

/// Structures over the cycles of length divisible by three, within budget.
pub fn enumerate_structures(
    g: &Graph,
    budget: &CycleBudget,
    max_structures: usize,
    rule: SeamRule,
) -> StructureSet {
    structures_from_pool(zero_mod3_cycles(g, budget), max_structures, rule)
}

// ============================================================
// Families
// ============================================================

/// A maximal set of pairwise vertex-disjoint structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    /// Indices into the structure list, ascending.
    pub members: Vec<usize>,
    /// Union of the members' vertex sets.
    pub covered: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySet {
    pub families: Vec<Family>,
    pub truncated: bool,
}

/// Enumerates every maximal set of pairwise vertex-disjoint structures
/// (maximal cliques of the disjointness relation), sorted by member list.
/// Collection stops, with the flag set, once `max_families` are found.
pub fn build_families(structures: &[Structure], max_families: usize) -> FamilySet {
    let n = structures.len();
    if n == 0 {
        return FamilySet {
            families: Vec::new(),
            truncated: false,
        };
    }
    let mut disjoint = alloc::vec![alloc::vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = structures[i]
                .union_vertices()
                .is_disjoint_from(structures[j].union_vertices());
            disjoint[i][j] = d;
            disjoint[j][i] = d;
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut clique = Vec::new();
    let p: Vec<usize> = (0..n).collect();
    let x: Vec<usize> = Vec::new();
    let mut truncated = false;
    bron_kerbosch(
        &disjoint,
        &mut clique,
        p,
        x,
        &mut out,
        max_families,
        &mut truncated,
    );
    out.sort_unstable();
    let families = out
        .into_iter()
        .map(|members| {
            let mut covered = VertexSet::new();
            for &i in &members {
                covered.extend_from(structures[i].union_vertices());
            }
            Family { members, covered }
        })
        .collect();
    FamilySet {
        families,
        truncated,
    }
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    clique: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
    truncated: &mut bool,
) {
    if *truncated {
        return;
    }
    if p.is_empty() && x.is_empty() {
        if out.len() == cap {
            *truncated = true;
        } else {
            out.push(clique.clone());
        }
        return;
    }
    // Deterministic pivot: the candidate covering most of P, ties to the
    // smallest index.
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .min_by_key(|&u| (p.iter().filter(|&&v| !adj[u][v]).count(), u))
        .expect("P or X is non-empty");
    let branch: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let mut p = p;
    let mut x = x;
    for v in branch {
        let p2: Vec<usize> = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let x2: Vec<usize> = x.iter().copied().filter(|&w| adj[v][w]).collect();
        clique.push(v);
        bron_kerbosch(adj, clique, p2, x2, out, cap, truncated);
        clique.pop();
        p.retain(|&w| w != v);
        x.push(v);
        if *truncated {
            return;
        }
    }
}

// ============================================================
// Tests
// ============================================================
