//! Text formats: graph6 and a plain edge list.
//!
//! graph6 follows McKay's definition: a size header `N(n)` followed by the
//! upper triangle of the adjacency matrix in column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte with 63 added.
//!
//! The edge-list format is a line `n m` followed by `m` lines `u v` (0-based).
//! Several graphs may be concatenated in one stream.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Encodes `g` as a graph6 string (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    String::from_utf8(to_graph6_bytes(g)).expect("graph6 is ASCII")
}

pub(crate) fn to_graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + BIAS);
    }
    out
}

fn sextet(b: u8) -> Result<usize> {
    if (BIAS..=BIAS + 63).contains(&b) {
        Ok((b - BIAS) as usize)
    } else {
        Err(g6_err(format!("byte {b:#04x} outside the printable graph6 range")))
    }
}

/// Decodes a single graph6 string. Leading `>>graph6<<` and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err("empty input"));
    }
    let (n, body) = if bytes[0] != 126 {
        (sextet(bytes[0])?, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(g6_err("truncated 8-byte size header"));
        }
        let mut n = 0;
        for &b in &bytes[2..8] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(g6_err("truncated 4-byte size header"));
        }
        let mut n = 0;
        for &b in &bytes[1..4] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[4..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < nbytes {
        return Err(g6_err(format!(
            "truncated adjacency: expected {nbytes} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > nbytes {
        return Err(g6_err("trailing characters after adjacency data"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_normalized(n, edges))
}

/// Formats `g` in the edge-list format, including a trailing newline.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses every edge-list graph in `text`. Blank lines and lines starting
/// with `#` are ignored.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut graphs = Vec::new();
    while let Some((lineno, header)) = lines.next() {
        let (n, m) = parse_pair(header, lineno)?;
        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| Error::EdgeList(format!("expected {m} edges after line {lineno}")))?;
            pairs.push(parse_pair(line, lineno)?);
        }
        graphs.push(Graph::from_edge_list(n, &pairs)?);
    }
    Ok(graphs)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::EdgeList(format!("line {lineno}: expected two integers")))?
            .parse()
            .map_err(|_| Error::EdgeList(format!("line {lineno}: not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::EdgeList(format!("line {lineno}: expected two integers")));
    }
    Ok(pair)
}

/// Input encodings understood by [`parse_graphs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

/// Guesses the format from the first meaningful line: two integers mean an
/// edge list, anything else is taken as graph6.
pub fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) => {
            let fields: Vec<_> = line.split_whitespace().collect();
            if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
                Format::EdgeList
            } else {
                Format::Graph6
            }
        }
        None => Format::Graph6,
    }
}

/// Parses a stream of graphs, one graph6 string per line or concatenated
/// edge lists. `format` overrides detection.
pub fn parse_graphs(text: &str, format: Option<Format>) -> Result<Vec<Graph>> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::EdgeList => parse_edge_lists(text),
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_graph6)
            .collect(),
    }
}
