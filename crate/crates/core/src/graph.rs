//! Simple undirected graphs on dense vertex ids `0..n`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// ============================================================
// Errors
// ============================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge `(v, v)`.
    SelfLoop { v: usize },
    /// The same unordered pair appeared twice.
    DuplicateEdge { u: usize, v: usize },
    /// An endpoint is not in `0..n`.
    VertexOutOfRange { v: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for n = {n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    /// 3-connected graphs need at least four vertices.
    TooSmall { n: usize },
    /// No 3-connected graph was found within the attempt budget.
    AttemptsExhausted { n: usize, seed: u64, attempts: usize },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::TooSmall { n } => {
                write!(f, "no 3-connected graph on {n} < 4 vertices")
            }
            GenError::AttemptsExhausted { n, seed, attempts } => write!(
                f,
                "no 3-connected graph found for n = {n}, seed = {seed} in {attempts} attempts"
            ),
        }
    }
}

impl core::error::Error for GenError {}

// ============================================================
// Vertex sets
// ============================================================

/// A sorted set of vertex ids.
///
/// All set-valued results in this crate use this type so that iteration
/// order, and hence every downstream report, is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn extend_from(&mut self, other: &VertexSet) {
        self.0.extend(other.iter());
    }

    /// Sorted vector of the members, for serialization.
    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// ============================================================
// Graph
// ============================================================

/// An undirected simple graph with vertices `0..n`.
///
/// Edges are stored sorted with `u < v`; adjacency lists are sorted.  Both
/// stay private so every constructed graph is valid by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut sorted_edges = Vec::new();
        let mut adj = alloc::vec![Vec::new(); n];
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v: v.max(u), n });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            sorted_edges.push((u, v));
            adj[u].push(v);
            adj[v].push(u);
        }
        sorted_edges.sort_unstable();
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: sorted_edges,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each pair with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach_count(0, &[]) == self.n
    }

    /// Connected components of the graph with `removed` vertices deleted,
    /// each component sorted, components ordered by their smallest vertex.
    pub fn components_excluding(&self, removed: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.n];
        for v in removed.iter() {
            seen[v] = true;
        }
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = alloc::collections::VecDeque::new();
            queue.push_back(start);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Number of vertices reachable from `start` when `skip` are deleted.
    fn reach_count(&self, start: usize, skip: &[usize]) -> usize {
        let mut seen = alloc::vec![false; self.n];
        for &v in skip {
            seen[v] = true;
        }
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(start);
        seen[start] = true;
        let mut count = 0;
        while let Some(v) = queue.pop_front() {
            count += 1;
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        count
    }

    /// Definitional 3-connectivity test: `n >= 4` and deleting any two
    /// vertices leaves a connected graph.  O(n^2 (n + m)), meant for the
    /// small graphs this crate works on.
    pub fn is_3_connected(&self) -> bool {
        if self.n < 4 {
            return false;
        }
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                let start = (0..self.n).find(|&v| v != a && v != b).unwrap();
                if self.reach_count(start, &[a, b]) != self.n - 2 {
                    return false;
                }
            }
        }
        true
    }
}

/// Union of closed neighborhoods `N[s]` over all `s` in the set.
pub fn closed_neighborhood(g: &Graph, set: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new();
    for v in set.iter() {
        out.insert(v);
        out.extend(g.neighbors(v).iter().copied());
    }
    out
}

// ============================================================
// Named graphs
// ============================================================

/// The built-in test graphs.  All of them are 3-connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    K4,
    K5,
    Prism3,
    /// Hub 0 joined to the rim cycle `1..=k`; requires `k >= 3`.
    Wheel(usize),
    Petersen,
    CubeQ3,
    MoebiusKantor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownGraphName;

impl fmt::Display for UnknownGraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown graph name (expected k4, k5, prism3, wheel<k>, petersen, \
             cube_q3 or moebius_kantor)"
        )
    }
}

impl core::error::Error for UnknownGraphName {}

impl core::str::FromStr for NamedGraph {
    type Err = UnknownGraphName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "k4" => Ok(NamedGraph::K4),
            "k5" => Ok(NamedGraph::K5),
            "prism3" => Ok(NamedGraph::Prism3),
            "petersen" => Ok(NamedGraph::Petersen),
            "cube_q3" => Ok(NamedGraph::CubeQ3),
            "moebius_kantor" => Ok(NamedGraph::MoebiusKantor),
            _ => {
                let k = s.strip_prefix("wheel").ok_or(UnknownGraphName)?;
                let k: usize = k.parse().map_err(|_| UnknownGraphName)?;
                if k < 3 {
                    return Err(UnknownGraphName);
                }
                Ok(NamedGraph::Wheel(k))
            }
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::K4 => write!(f, "k4"),
            NamedGraph::K5 => write!(f, "k5"),
            NamedGraph::Prism3 => write!(f, "prism3"),
            NamedGraph::Wheel(k) => write!(f, "wheel{k}"),
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::CubeQ3 => write!(f, "cube_q3"),
            NamedGraph::MoebiusKantor => write!(f, "moebius_kantor"),
        }
    }
}

impl NamedGraph {
    pub fn build(self) -> Graph {
        let g = match self {
            NamedGraph::K4 => complete(4),
            NamedGraph::K5 => complete(5),
            NamedGraph::Prism3 => Graph::new(
                6,
                [
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (3, 4),
                    (4, 5),
                    (3, 5),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            ),
            NamedGraph::Wheel(k) => {
                assert!(k >= 3, "wheel needs a rim of at least 3 vertices");
                let mut edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
                edges.extend((1..k).map(|i| (i, i + 1)));
                edges.push((1, k));
                Graph::new(k + 1, edges)
            }
            NamedGraph::Petersen => {
                let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
                edges.extend((0..5).map(|i| (i, i + 5)));
                edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
                Graph::new(10, edges)
            }
            NamedGraph::CubeQ3 => {
                let mut edges = Vec::new();
                for u in 0..8usize {
                    for v in (u + 1)..8 {
                        if (u ^ v).count_ones() == 1 {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(8, edges)
            }
            NamedGraph::MoebiusKantor => {
                let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
                edges.extend((0..8).map(|i| (i, i + 8)));
                edges.extend((0..8).map(|i| (8 + i, 8 + (i + 3) % 8)));
                Graph::new(16, edges)
            }
        };
        g.expect("named graph construction is valid")
    }
}

fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

// ============================================================
// Random 3-connected graphs
// ============================================================

/// Deterministic random 3-connected graph on `n` vertices.
///
/// Draws an Erdos-Renyi graph with edge probability `min(1, 4 / (n - 1))`
/// (mean degree about four), adds edges from each vertex of degree below
/// three to random non-neighbors, and keeps the result if the definitional
/// 3-connectivity check passes.  The same `(n, seed, max_attempts)` always
/// produces the same graph.
pub fn random_3connected(n: usize, seed: u64, max_attempts: usize) -> Result<Graph, GenError> {
    if n < 4 {
        return Err(GenError::TooSmall { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = if n > 5 { 4.0 / (n - 1) as f64 } else { 1.0 };
    for _ in 0..max_attempts {
        let mut adj: Vec<BTreeSet<usize>> = alloc::vec![BTreeSet::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        for v in 0..n {
            while adj[v].len() < 3 {
                let candidates: Vec<usize> =
                    (0..n).filter(|&w| w != v && !adj[v].contains(&w)).collect();
                let w = candidates[rng.random_range(0..candidates.len())];
                adj[v].insert(w);
                adj[w].insert(v);
            }
        }
        let edges: Vec<(usize, usize)> = adj
            .iter()
            .enumerate()
            .flat_map(|(u, ws)| ws.iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
            .collect();
        let g = Graph::new(n, edges).expect("generated edges are valid");
        if g.is_3_connected() {
            return Ok(g);
        }
    }
    Err(GenError::AttemptsExhausted {
        n,
        seed,
        attempts: max_attempts,
    })
}

// ============================================================
// Tests
// ============================================================

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle_graph(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            Graph::new(3, [(0, 1), (2, 2)]),
            Err(GraphError::SelfLoop { v: 2 })
        );
    }

    #[test]
    fn rejects_duplicate_in_either_order() {
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Graph::new(2, [(0, 5)]),
            Err(GraphError::VertexOutOfRange { v: 5, n: 2 })
        );
    }

    #[test]
    fn isolated_vertices_are_allowed() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn closed_neighborhood_on_c6() {
        let g = cycle_graph(6);
        let s: VertexSet = [0].into_iter().collect();
        let nb = closed_neighborhood(&g, &s);
        assert_eq!(nb.to_vec(), vec![0, 1, 5]);
    }

    #[test]
    fn c5_is_not_3_connected() {
        assert!(!cycle_graph(5).is_3_connected());
    }

    #[test]
    fn k4_is_3_connected_but_k3_is_not() {
        assert!(NamedGraph::K4.build().is_3_connected());
        assert!(!complete(3).unwrap().is_3_connected());
    }

    #[test]
    fn disconnected_graph_fails_3_connectivity() {
        // K5 plus an isolated vertex: some pair deletion exposes the stray.
        let mut edges = vec![];
        for u in 0..5usize {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        let g = Graph::new(6, edges).unwrap();
        assert!(!g.is_3_connected());
    }

    #[test]
    fn named_graphs_are_3_connected_with_expected_sizes() {
        let cases = [
            (NamedGraph::K4, 4, 6),
            (NamedGraph::K5, 5, 10),
            (NamedGraph::Prism3, 6, 9),
            (NamedGraph::Wheel(5), 6, 10),
            (NamedGraph::Wheel(6), 7, 12),
            (NamedGraph::Petersen, 10, 15),
            (NamedGraph::CubeQ3, 8, 12),
            (NamedGraph::MoebiusKantor, 16, 24),
        ];
        for (name, n, m) in cases {
            let g = name.build();
            assert_eq!(g.n(), n, "{name}");
            assert_eq!(g.m(), m, "{name}");
            assert!(g.is_3_connected(), "{name}");
        }
    }

    #[test]
    fn petersen_is_cubic() {
        let g = NamedGraph::Petersen.build();
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn wheel_name_round_trip() {
        let name: NamedGraph = "wheel7".parse().unwrap();
        assert_eq!(name, NamedGraph::Wheel(7));
        assert!("wheel2".parse::<NamedGraph>().is_err());
        assert!("wheelx".parse::<NamedGraph>().is_err());
        assert!("grid".parse::<NamedGraph>().is_err());
    }

    #[test]
    fn components_excluding_splits_c6() {
        let g = cycle_graph(6);
        let removed: VertexSet = [0, 3].into_iter().collect();
        let comps = g.components_excluding(&removed);
        assert_eq!(comps, vec![vec![1, 2], vec![4, 5]]);
    }

    #[test]
    fn random_generation_is_deterministic_and_3_connected() {
        for n in [4, 6, 9, 14] {
            let a = random_3connected(n, 42, 100).unwrap();
            let b = random_3connected(n, 42, 100).unwrap();
            assert_eq!(a, b);
            assert!(a.is_3_connected());
            assert!(a.min_degree().unwrap() >= 3);
        }
    }

    #[test]
    fn random_generation_rejects_tiny_n() {
        assert_eq!(random_3connected(3, 1, 10), Err(GenError::TooSmall { n: 3 }));
    }
}
