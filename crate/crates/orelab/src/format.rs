//! Graph text format and graph6.
//!
//! The text format is a header line `n m` followed by `m` lines `u v`
//! with `u < v`, sorted lexicographically, each line ending in `\n`.

use std::fmt::Write as _;

use orelab_core::{Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Text { line: usize, message: String },
    #[error("graph6 line {line}: {message}")]
    Graph6 { line: usize, message: String },
    #[error("empty input")]
    Empty,
}

pub fn to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    out
}

fn text_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Text { line, message: message.into() }
}

fn two_numbers(line: &str, lineno: usize) -> Result<(usize, usize), FormatError> {
    let mut parts = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, FormatError> {
        let tok = parts.next().ok_or_else(|| text_err(lineno, format!("missing {what}")))?;
        tok.parse().map_err(|_| text_err(lineno, format!("`{tok}` is not a nonnegative integer")))
    };
    let a = next("first number")?;
    let b = next("second number")?;
    if parts.next().is_some() {
        return Err(text_err(lineno, "expected exactly two numbers"));
    }
    Ok((a, b))
}

/// Parses the text format. Blank lines are not allowed; the edge lines must
/// be exactly those produced by [`to_text`] up to order, which is checked.
pub fn parse_text(s: &str) -> Result<Graph, FormatError> {
    let mut lines = s.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or(FormatError::Empty)?;
    let (n, m) = two_numbers(header, 1)?;
    let mut edges = Vec::with_capacity(m);
    let mut last: Option<(usize, usize)> = None;
    for (lineno, line) in lines.by_ref().take(m) {
        let (u, v) = two_numbers(line, lineno)?;
        if u >= v {
            return Err(text_err(lineno, format!("edge `{u} {v}` must have u < v")));
        }
        if v >= n {
            return Err(text_err(lineno, format!("vertex {v} out of range for {n} vertices")));
        }
        if last.is_some_and(|p| p >= (u, v)) {
            return Err(text_err(lineno, "edges must be strictly ascending"));
        }
        last = Some((u, v));
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(text_err(edges.len() + 2, format!("expected {m} edge lines, found {}", edges.len())));
    }
    if let Some((lineno, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(text_err(lineno, format!("unexpected trailing line `{line}`")));
    }
    Graph::from_edges(n, edges).map_err(|e| text_err(1, e.to_string()))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(s: &str, line: usize) -> Result<Graph, FormatError> {
    let err = |message: String| FormatError::Graph6 { line, message };
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let data = s.as_bytes();
    if data.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(err("byte outside the graph6 range".into()));
    }
    let (n, body) = match data {
        [] => return Err(err("empty string".into())),
        [126, 126, ..] => return Err(err("graphs with more than 258047 vertices are not supported".into())),
        [126, a, b, c, rest @ ..] => ((((*a - 63) as usize) << 12) | (((*b - 63) as usize) << 6) | (*c - 63) as usize, rest),
        [126, ..] => return Err(err("truncated vertex count".into())),
        [first, rest @ ..] => ((*first - 63) as usize, rest),
    };
    if n > orelab_core::graph::MAX_VERTICES {
        return Err(err(format!("{n} vertices exceeds the 64-vertex cap")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(err(format!("expected {} data bytes, found {}", bits.div_ceil(6), body.len())));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj).map_err(|e| err(e.to_string()))
}

/// Parses a file holding either one graph in the text format or one graph6
/// string per line.
pub fn parse_any(s: &str) -> Result<Vec<Graph>, FormatError> {
    let first = s.lines().find(|l| !l.trim().is_empty()).ok_or(FormatError::Empty)?;
    if first.split_whitespace().count() == 2 {
        return Ok(vec![parse_text(s)?]);
    }
    s.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l, i + 1))
        .collect()
}

/// `0,2,5` or `0 2 5` into a vertex set.
pub fn parse_vertex_list(s: &str) -> Result<VertexSet, String> {
    let mut set = VertexSet::EMPTY;
    for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().map_err(|_| format!("`{tok}` is not a vertex index"))?;
        if v >= orelab_core::graph::MAX_VERTICES {
            return Err(format!("vertex {v} out of range"));
        }
        set.insert(v);
    }
    Ok(set)
}
