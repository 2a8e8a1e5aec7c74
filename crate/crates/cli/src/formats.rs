//! Graph file formats: a plain edge-list format and graph6, both ways.
//!
//! Edge-list files: optional `#` comment lines, then a `n m` header line,
//! then exactly `m` lines `u v` with `u < v`.  Parsing is strict — every
//! deviation reports its line number.
//!
//! graph6: the compact ASCII format used by nauty and friends.  One graph
//! per file, optional `>>graph6<<` prefix, short (1-byte) and long (4- or
//! 8-byte) size headers.

use std::path::Path;

use domstruct_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

// ============================================================
// Edge lists
// ============================================================

/// Parses the edge-list format.  Strict: exactly the declared number of
/// edges, two tokens per line, endpoints in range with `u < v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "empty file: expected a `n m` header"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .ok_or_else(|| syntax(header_no, "expected a `n m` header"))?
        .parse()
        .map_err(|_| syntax(header_no, "vertex count is not a number"))?;
    let m: usize = parts
        .next()
        .ok_or_else(|| syntax(header_no, "header is missing the edge count"))?
        .parse()
        .map_err(|_| syntax(header_no, "edge count is not a number"))?;
    if let Some(extra) = parts.next() {
        return Err(syntax(header_no, format!("unexpected token `{extra}` in header")));
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = lines
            .next()
            .ok_or_else(|| syntax(0, format!("expected {m} edges, found {}", edges.len())))?;
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .ok_or_else(|| syntax(no, "expected `u v`"))?
            .parse()
            .map_err(|_| syntax(no, "endpoint is not a number"))?;
        let v: usize = parts
            .next()
            .ok_or_else(|| syntax(no, "edge line is missing its second endpoint"))?
            .parse()
            .map_err(|_| syntax(no, "endpoint is not a number"))?;
        if let Some(extra) = parts.next() {
            return Err(syntax(no, format!("unexpected token `{extra}` on edge line")));
        }
        if u >= v {
            return Err(syntax(no, format!("edges must satisfy u < v, got {u} {v}")));
        }
        edges.push((u, v));
    }
    if let Some((no, _)) = lines.next() {
        return Err(syntax(no, "content after the declared edges"));
    }
    Ok(Graph::new(n, edges)?)
}

/// Writes the canonical edge-list form: header, then sorted edges.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// ============================================================
// graph6
// ============================================================

const G6_HEADER: &str = ">>graph6<<";

/// Parses one graph in graph6 format (short and long size headers).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix(G6_HEADER) {
        body = rest.trim();
    }
    if body.is_empty() {
        return Err(ParseError::Graph6("empty input".into()));
    }
    if body.lines().count() > 1 {
        return Err(ParseError::Graph6("expected exactly one graph line".into()));
    }
    let bytes = body.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!(
            "byte {bad:#04x} outside the printable range 63..=126"
        )));
    }

    // Size header: one byte below '~'; '~' + 3 bytes (18-bit n); or
    // '~~' + 6 bytes (36-bit n).
    let (n, idx) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != b'~' {
        if bytes.len() < 4 {
            return Err(ParseError::Graph6("truncated long size header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(ParseError::Graph6("truncated very long size header".into()));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[idx..];
    if data.len() != expected {
        return Err(ParseError::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            data.len()
        )));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    // Upper triangle in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    for v in 1..n {
        for u in 0..v {
            let byte = data[bit / 6];
            let set = (byte - 63) >> (5 - bit % 6) & 1 == 1;
            if set {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    // Strict: padding bits beyond the triangle must be zero.
    while bit < data.len() * 6 {
        if (data[bit / 6] - 63) >> (5 - bit % 6) & 1 == 1 {
            return Err(ParseError::Graph6("nonzero padding bits".into()));
        }
        bit += 1;
    }
    Ok(Graph::new(n, edges)?)
}

/// Writes one graph in graph6 format (no `>>graph6<<` prefix, no trailing
/// newline), choosing the shortest size header that fits.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n < 63 {
        bytes.push(63 + n as u8);
    } else if n < 1 << 18 {
        bytes.push(b'~');
        for shift in [12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        bytes.extend(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bit_count.div_ceil(6)];
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                data[bit / 6] |= 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    bytes.extend(data.iter().map(|b| b + 63));
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

// ============================================================
// Loading
// ============================================================

/// Reads a graph file, choosing the parser by extension: `.g6` means
/// graph6, anything else is the edge-list format.
pub fn parse_by_extension(path: &Path, text: &str) -> Result<Graph, ParseError> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => parse_graph6(text),
        _ => parse_edge_list(text),
    }
}

// ============================================================
// Tests
// ============================================================
