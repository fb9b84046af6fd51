//! Graph serialization: graph6, plain edge lists and a small JSON schema.
//!
//! * graph6 uses the standard 6-bit packing of the upper triangle, column by
//!   column. A leading `>>graph6<<` header and trailing whitespace are
//!   accepted on input; output carries no header.
//! * Edge lists hold one `u v` pair per line, 0-based, in edge id order.
//!   Blank lines and `#` comments are ignored. The vertex count is one more
//!   than the largest index mentioned, unless a `# n=<count>` line says
//!   otherwise; the writer emits that line only when trailing vertices are
//!   isolated and would otherwise be lost.
//! * JSON is `{"n": <count>, "edges": [[u, v], ...]}`.
//!
//! Reading graph6 numbers edges in increasing `(u, v)` order, `u < v`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Supported graph payload formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
    Json,
}

impl GraphFormat {
    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Json => "json",
        }
    }

    /// Guesses the format of a payload: JSON objects start with `{`, edge
    /// lists contain only digits, whitespace and comments, anything else is
    /// treated as graph6.
    pub fn sniff(bytes: &[u8]) -> GraphFormat {
        let text = String::from_utf8_lossy(bytes);
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            return GraphFormat::Json;
        }
        if trimmed.starts_with(">>graph6<<") {
            return GraphFormat::Graph6;
        }
        let edge_list_like = text.lines().all(|line| {
            let line = line.trim();
            line.is_empty()
                || line.starts_with('#')
                || line.chars().all(|c| c.is_ascii_digit() || c.is_ascii_whitespace())
        });
        if edge_list_like && text.lines().any(|l| l.split_whitespace().count() == 2) {
            GraphFormat::EdgeList
        } else {
            GraphFormat::Graph6
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::precondition(format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn read_graph(bytes: &[u8], format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => from_graph6(bytes),
        GraphFormat::EdgeList => from_edge_list(&utf8(bytes, "edgelist")?),
        GraphFormat::Json => from_json(&utf8(bytes, "json")?),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> Vec<u8> {
    match format {
        GraphFormat::Graph6 => to_graph6(g).into_bytes(),
        GraphFormat::EdgeList => to_edge_list(g).into_bytes(),
        GraphFormat::Json => to_json(g).into_bytes(),
    }
}

fn utf8(bytes: &[u8], format: &'static str) -> Result<String> {
    String::from_utf8(bytes.to_vec())
        .map_err(|_| Error::Malformed { format, reason: "input is not UTF-8".into() })
}

fn g6_err(reason: impl Into<String>) -> Error {
    Error::Malformed { format: "graph6", reason: reason.into() }
}

const BIAS: u8 = 63;

fn decode_order(data: &[u8]) -> Result<(usize, &[u8])> {
    let first = *data.first().ok_or_else(|| g6_err("empty input"))?;
    let word = |bytes: &[u8]| -> Result<usize> {
        bytes.iter().try_fold(0usize, |acc, &b| {
            if !(BIAS..=BIAS + 63).contains(&b) {
                return Err(g6_err(format!("byte {b} outside the printable range")));
            }
            Ok((acc << 6) | (b - BIAS) as usize)
        })
    };
    match first {
        b if (BIAS..126).contains(&b) => Ok(((b - BIAS) as usize, &data[1..])),
        126 if data.get(1) == Some(&126) => {
            let rest = data.get(2..8).ok_or_else(|| g6_err("truncated vertex count"))?;
            Ok((word(rest)?, &data[8..]))
        }
        126 => {
            let rest = data.get(1..4).ok_or_else(|| g6_err("truncated vertex count"))?;
            Ok((word(rest)?, &data[4..]))
        }
        b => Err(g6_err(format!("invalid header byte {b}"))),
    }
}

fn encode_order(n: usize, out: &mut String) {
    let push6 = |out: &mut String, v: usize| out.push((BIAS + (v & 63) as u8) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

pub fn from_graph6(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|_| g6_err("input is not ASCII"))?;
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let (n, body) = decode_order(text.as_bytes())?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6];
            if !(BIAS..=BIAS + 63).contains(&byte) {
                return Err(g6_err(format!("byte {byte} outside the printable range")));
            }
            if ((byte - BIAS) >> (5 - k % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - BIAS;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(g6_err("nonzero padding bits"));
        }
    }
    edges.sort_unstable();
    Graph::new(n, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    encode_order(n, &mut out);
    let bits = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    for &(a, b) in g.edges() {
        let (u, v) = (a.min(b), a.max(b));
        let k = v * (v - 1) / 2 + u;
        packed[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(packed.into_iter().map(|b| (b + BIAS) as char));
    out
}

fn el_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Malformed { format: "edgelist", reason: format!("line {line}: {}", reason.into()) }
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(count) = comment.trim().strip_prefix("n=") {
                let n = count.trim().parse().map_err(|_| el_err(i + 1, "bad vertex count"))?;
                declared_n = Some(n);
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut next = || -> Result<VertexId> {
            fields
                .next()
                .ok_or_else(|| el_err(i + 1, "expected two vertex indices"))?
                .parse()
                .map_err(|_| el_err(i + 1, format!("not a vertex index: {line:?}")))
        };
        let (u, v) = (next()?, next()?);
        if fields.next().is_some() {
            return Err(el_err(i + 1, "trailing fields"));
        }
        edges.push((u, v));
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared_n.unwrap_or(implied);
    Graph::new(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let implied = g.edges().iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    if implied != g.vertex_count() {
        let _ = writeln!(out, "# n={}", g.vertex_count());
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// The JSON graph schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.vertex_count(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn from_json(text: &str) -> Result<Graph> {
    let parsed: GraphJson = serde_json::from_str(text)
        .map_err(|e| Error::Malformed { format: "json", reason: e.to_string() })?;
    Graph::try_from(parsed)
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON serialization")
}
