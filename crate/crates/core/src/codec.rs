//! Text codecs: graph6, plain edge lists, hypergraph files, and weight
//! function files.
//!
//! All decoders report the offending 1-based line so command-line tools can
//! point at bad input. graph6 follows the standard header-less format:
//! every byte is offset by 63, the size comes first, and the upper triangle
//! of the adjacency matrix is packed in column order (x_{0,1}, x_{0,2},
//! x_{1,2}, x_{0,3}, …) padded with zero bits to a multiple of six.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::domination::WeightFunction;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodecError {
    /// 1-based line of the problem; 0 when the input as a whole is at fault.
    pub line: usize,
    pub msg: String,
}

impl CodecError {
    fn new(line: usize, msg: impl Into<String>) -> Self {
        CodecError { line, msg: msg.into() }
    }
}

impl fmt::Display for CodecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.msg)
        } else {
            write!(f, "line {}: {}", self.line, self.msg)
        }
    }
}

impl core::error::Error for CodecError {}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..36).step_by(6).rev() {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
}

/// Encodes a graph in graph6 format (one line, no trailing newline).
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut used = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 line. The whole line must be consumed and padding bits
/// must be zero.
pub fn graph6_decode(input: &str) -> Result<Graph, CodecError> {
    let line = input.trim();
    if line.is_empty() {
        return Err(CodecError::new(1, "empty graph6 input"));
    }
    let bytes: Vec<u8> = line.bytes().collect();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(CodecError::new(
                1,
                format!("invalid graph6 byte {:?} at position {}", b as char, i + 1),
            ));
        }
    }
    let vals: Vec<u64> = bytes.iter().map(|&b| (b - 63) as u64).collect();
    let (n, header) = if vals[0] != 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 2 && vals[1] != 63 {
        if vals.len() < 4 {
            return Err(CodecError::new(1, "truncated graph6 size header"));
        }
        (((vals[1] << 12) | (vals[2] << 6) | vals[3]) as usize, 4)
    } else {
        if vals.len() < 8 {
            return Err(CodecError::new(1, "truncated graph6 size header"));
        }
        let mut n = 0u64;
        for &v in &vals[2..8] {
            n = (n << 6) | v;
        }
        (n as usize, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let body = bits.div_ceil(6);
    if vals.len() != header + body {
        return Err(CodecError::new(
            1,
            format!(
                "graph6 body has {} bytes, expected {} for {} vertices",
                vals.len() - header,
                body,
                n
            ),
        ));
    }
    let bit_at = |pos: usize| -> bool {
        let val = vals[header + pos / 6];
        (val >> (5 - pos % 6)) & 1 == 1
    };
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(pos) {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    for pad in bits..body * 6 {
        if bit_at(pad) {
            return Err(CodecError::new(1, "nonzero padding bits in graph6 input"));
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| CodecError::new(1, e.to_string()))
}

// ---------------------------------------------------------------------------
// line-oriented formats
// ---------------------------------------------------------------------------

/// Data lines with their 1-based line numbers; `#` starts a comment, blank
/// lines are skipped.
fn data_lines(input: &str) -> Vec<(usize, &str)> {
    input
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let stripped = raw.split('#').next().unwrap_or("").trim();
            (!stripped.is_empty()).then_some((i + 1, stripped))
        })
        .collect()
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize, CodecError> {
    token
        .parse::<usize>()
        .map_err(|_| CodecError::new(line, format!("expected {what}, found {token:?}")))
}

fn parse_header(lines: &[(usize, &str)]) -> Result<(usize, usize, usize), CodecError> {
    let &(line, text) = lines
        .first()
        .ok_or_else(|| CodecError::new(0, "empty input"))?;
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(CodecError::new(line, format!("expected header `n m`, found {text:?}")));
    }
    let n = parse_usize(tokens[0], line, "vertex count")?;
    let m = parse_usize(tokens[1], line, "edge count")?;
    Ok((n, m, line))
}

/// Encodes a graph as an edge list: `n m` then one `u v` line per edge.
pub fn edge_list_encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes the edge list format. Endpoints are 0-based; `#` comments and
/// blank lines are ignored.
pub fn edge_list_decode(input: &str) -> Result<Graph, CodecError> {
    let lines = data_lines(input);
    let (n, m, _) = parse_header(&lines)?;
    let edge_lines = &lines[1..];
    if edge_lines.len() != m {
        let line = edge_lines.get(m).map_or(0, |&(l, _)| l);
        return Err(CodecError::new(
            line,
            format!("expected {m} edge lines, found {}", edge_lines.len()),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for &(line, text) in edge_lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(CodecError::new(line, format!("expected `u v`, found {text:?}")));
        }
        let u = parse_usize(tokens[0], line, "endpoint")?;
        let v = parse_usize(tokens[1], line, "endpoint")?;
        if u >= n || v >= n {
            return Err(CodecError::new(
                line,
                format!("endpoint out of range for {n} vertices"),
            ));
        }
        if u == v {
            return Err(CodecError::new(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges).map_err(|e| CodecError::new(0, e.to_string()))
}

/// Encodes a hypergraph: `n m` then one line per hyperedge listing its
/// vertices.
pub fn hypergraph_encode(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.m());
    for e in h.edges() {
        let verts: Vec<String> = e.iter().map(ToString::to_string).collect();
        out.push_str(&verts.join(" "));
        out.push('\n');
    }
    out
}

/// Decodes the hypergraph format, validating nonemptiness, vertex ranges,
/// and pairwise distinctness of hyperedges.
pub fn hypergraph_decode(input: &str) -> Result<Hypergraph, CodecError> {
    let lines = data_lines(input);
    let (n, m, _) = parse_header(&lines)?;
    let edge_lines = &lines[1..];
    if edge_lines.len() != m {
        let line = edge_lines.get(m).map_or(0, |&(l, _)| l);
        return Err(CodecError::new(
            line,
            format!("expected {m} hyperedge lines, found {}", edge_lines.len()),
        ));
    }
    let mut edges: Vec<BTreeSet<usize>> = Vec::with_capacity(m);
    let mut source = Vec::with_capacity(m);
    for &(line, text) in edge_lines {
        let mut edge = BTreeSet::new();
        for token in text.split_whitespace() {
            let v = parse_usize(token, line, "vertex")?;
            if v >= n {
                return Err(CodecError::new(
                    line,
                    format!("vertex {v} out of range for {n} vertices"),
                ));
            }
            if !edge.insert(v) {
                return Err(CodecError::new(line, format!("vertex {v} repeated in hyperedge")));
            }
        }
        if edge.is_empty() {
            return Err(CodecError::new(line, "empty hyperedge"));
        }
        edges.push(edge);
        source.push(line);
    }
    Hypergraph::new(n, edges).map_err(|e| match e {
        crate::hypergraph::HypergraphError::DuplicateEdge { first, second } => CodecError::new(
            source[second],
            format!("duplicate of the hyperedge on line {}", source[first]),
        ),
        other => CodecError::new(0, other.to_string()),
    })
}

/// One-line hypergraph form used inside verification reports:
/// `n m v,v,… v,v,…`.
pub fn hypergraph_line_encode(h: &Hypergraph) -> String {
    let mut out = format!("{} {}", h.n(), h.m());
    for e in h.edges() {
        let verts: Vec<String> = e.iter().map(ToString::to_string).collect();
        out.push(' ');
        out.push_str(&verts.join(","));
    }
    out
}

pub fn hypergraph_line_decode(input: &str) -> Result<Hypergraph, CodecError> {
    let tokens: Vec<&str> = input.split_whitespace().collect();
    if tokens.len() < 2 {
        return Err(CodecError::new(1, "expected `n m` prefix"));
    }
    let n = parse_usize(tokens[0], 1, "vertex count")?;
    let m = parse_usize(tokens[1], 1, "edge count")?;
    if tokens.len() != 2 + m {
        return Err(CodecError::new(
            1,
            format!("expected {m} hyperedges, found {}", tokens.len() - 2),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for token in &tokens[2..] {
        let mut edge = BTreeSet::new();
        for part in token.split(',') {
            let v = parse_usize(part, 1, "vertex")?;
            if v >= n {
                return Err(CodecError::new(1, format!("vertex {v} out of range")));
            }
            if !edge.insert(v) {
                return Err(CodecError::new(1, format!("vertex {v} repeated in hyperedge")));
            }
        }
        edges.push(edge);
    }
    Hypergraph::new(n, edges).map_err(|e| CodecError::new(0, e.to_string()))
}

/// Encodes a weight function: one line with `k`, one line with the weights
/// in vertex order.
pub fn weight_fn_encode(f: &WeightFunction) -> String {
    let weights: Vec<String> = f.weights().iter().map(ToString::to_string).collect();
    format!("{}\n{}\n", f.k(), weights.join(" "))
}

/// Decodes the weight function format.
pub fn weight_fn_decode(input: &str) -> Result<WeightFunction, CodecError> {
    let lines = data_lines(input);
    if lines.is_empty() {
        return Err(CodecError::new(0, "empty input"));
    }
    let (kline, ktext) = lines[0];
    let k = parse_usize(ktext, kline, "k")?;
    let weights = if let Some(&(line, text)) = lines.get(1) {
        text.split_whitespace()
            .map(|t| parse_usize(t, line, "weight"))
            .collect::<Result<Vec<usize>, CodecError>>()?
    } else {
        Vec::new()
    };
    if lines.len() > 2 {
        return Err(CodecError::new(lines[2].0, "unexpected extra line"));
    }
    let line = lines.get(1).map_or(kline, |&(l, _)| l);
    WeightFunction::new(k, weights).map_err(|e| CodecError::new(line, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, Graph};

    #[test]
    fn graph6_known_values() {
        assert_eq!(graph6_encode(&Graph::complete(4)), "C~");
        assert_eq!(graph6_encode(&Graph::complete(2)), "A_");
        assert_eq!(graph6_encode(&path(4)), "Ch");
        assert_eq!(graph6_encode(&Graph::empty(0)), "?");
        assert_eq!(graph6_encode(&Graph::empty(5)), "D??");
    }

    #[test]
    fn graph6_roundtrip_small() {
        for g in [path(4), cycle(7), Graph::complete(5), Graph::empty(3), crate::graph::star(4)] {
            assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn graph6_large_size_header() {
        let g = Graph::empty(100);
        let enc = graph6_encode(&g);
        assert!(enc.starts_with('~'));
        assert_eq!(graph6_decode(&enc).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_bad_bytes() {
        assert!(graph6_decode("C ").is_err());
        assert!(graph6_decode("").is_err());
    }

    #[test]
    fn graph6_rejects_wrong_length() {
        assert!(graph6_decode("C").is_err());
        assert!(graph6_decode("C~~").is_err());
    }

    #[test]
    fn graph6_rejects_nonzero_padding() {
        // K2 is "A_" (bit 100000); "A" + '?'+32.. any byte with low bits set
        // in the padding area must be rejected.
        assert!(graph6_decode("A`").is_err());
        assert!(graph6_decode("A_").is_ok());
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = cycle(5);
        assert_eq!(edge_list_decode(&edge_list_encode(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_accepts_comments() {
        let text = "# a path\n4 3\n0 1\n1 2 # middle edge\n\n2 3\n";
        assert_eq!(edge_list_decode(text).unwrap(), path(4));
    }

    #[test]
    fn edge_list_reports_offending_line() {
        let text = "3 2\n0 1\n1 5\n";
        let err = edge_list_decode(text).unwrap_err();
        assert_eq!(err.line, 3);
        let text = "3 2\n0 1\n";
        assert!(edge_list_decode(text).is_err());
    }

    #[test]
    fn hypergraph_roundtrip_and_validation() {
        let h = Hypergraph::new(
            5,
            alloc::vec![BTreeSet::from([0, 1, 2]), BTreeSet::from([2, 3, 4])],
        )
        .unwrap();
        assert_eq!(hypergraph_decode(&hypergraph_encode(&h)).unwrap(), h);

        let dup = "4 2\n0 1\n1 0\n";
        let err = hypergraph_decode(dup).unwrap_err();
        assert_eq!(err.line, 3);

        let empty_edge = "4 1\n# nothing\n \n";
        assert!(hypergraph_decode(empty_edge).is_err());
    }

    #[test]
    fn hypergraph_line_roundtrip() {
        let h = Hypergraph::new(
            6,
            alloc::vec![BTreeSet::from([0, 1, 2]), BTreeSet::from([3, 4, 5])],
        )
        .unwrap();
        let line = hypergraph_line_encode(&h);
        assert_eq!(line, "6 2 0,1,2 3,4,5");
        assert_eq!(hypergraph_line_decode(&line).unwrap(), h);
    }

    #[test]
    fn weight_fn_roundtrip() {
        let f = WeightFunction::new(2, alloc::vec![0, 2, 0, 1]).unwrap();
        let text = weight_fn_encode(&f);
        assert_eq!(text, "2\n0 2 0 1\n");
        assert_eq!(weight_fn_decode(&text).unwrap(), f);
    }

    #[test]
    fn weight_fn_rejects_weight_above_k() {
        let err = weight_fn_decode("2\n0 3\n").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
