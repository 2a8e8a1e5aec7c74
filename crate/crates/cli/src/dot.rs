//! Graphviz DOT rendering of structures for manual inspection.
//!
//! The drawing shows every member cycle of a structure as a colored edge
//! group: pattern cycles get solid colors from a fixed palette, dropped
//! cycles are dashed gray.  Edges lying on a seam (the shared path between
//! two seamlessly connected member cycles) are drawn thicker.  Labeled
//! vertices, when a labeling is supplied, are filled.

use domstruct_core::{intersection_shape, Structure, VertexSet};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Solid colors for pattern cycles, reused cyclically past eight.
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

/// Above this many member cycles a per-cycle drawing is unreadable and
/// quadratically expensive; fall back to the plain union graph.
const MAX_DRAWN_CYCLES: usize = 64;

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Edges that lie on a seam between two member cycles, normalized.
fn seam_edges(s: &Structure) -> BTreeSet<(usize, usize)> {
    let cycles = s.cycles();
    let mut out = BTreeSet::new();
    for (i, j) in s.seam_pairs() {
        let shape = intersection_shape(&cycles[i], &cycles[j]);
        for piece in &shape.pieces {
            for w in piece.vertices.windows(2) {
                out.insert(norm(w[0], w[1]));
            }
            if !piece.is_path && piece.vertices.len() >= 3 {
                let first = piece.vertices[0];
                let last = *piece.vertices.last().expect("nonempty piece");
                out.insert(norm(first, last));
            }
        }
    }
    out
}

/// Renders a structure as a Graphviz `graph`.  When `labels` is given, the
/// labeled vertices are drawn filled.  Output is deterministic.
pub fn structure_dot(s: &Structure, labels: Option<&VertexSet>) -> String {
    let mut out = String::new();
    out.push_str("graph structure {\n");
    out.push_str("  layout=neato;\n");
    out.push_str("  overlap=false;\n");
    out.push_str("  node [shape=circle, fontsize=10, fixedsize=true, width=0.35];\n");
    let _ = writeln!(
        out,
        "  // {} member cycles, {} in the pattern, {} union vertices",
        s.cycles().len(),
        s.pattern_indices().len(),
        s.union_vertices().len()
    );
    for v in s.union_vertices().iter() {
        if labels.is_some_and(|l| l.contains(v)) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=gold];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }

    if s.cycles().len() > MAX_DRAWN_CYCLES {
        let _ = writeln!(
            out,
            "  // too many member cycles to draw individually; union graph only"
        );
        for &(u, v) in s.union_edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        return out;
    }

    let seams = seam_edges(s);
    let pattern: BTreeSet<usize> = s.pattern_indices().iter().copied().collect();
    let mut pattern_rank = 0usize;
    for (i, c) in s.cycles().iter().enumerate() {
        let in_pattern = pattern.contains(&i);
        let (color, style) = if in_pattern {
            let color = PALETTE[pattern_rank % PALETTE.len()];
            pattern_rank += 1;
            (color, "solid")
        } else {
            ("gray60", "dashed")
        };
        let _ = writeln!(
            out,
            "  // cycle {i} ({}): {:?}",
            if in_pattern { "pattern" } else { "dropped" },
            c.vertices()
        );
        for (u, v) in c.edges() {
            let width = if seams.contains(&norm(u, v)) { "2.4" } else { "1.1" };
            let _ = writeln!(
                out,
                "  {u} -- {v} [color=\"{color}\", style={style}, penwidth={width}];"
            );
        }
    }
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
