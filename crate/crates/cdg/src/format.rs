//! The `cdg1` text graph format.
//!
//! File form (two lines):
//! ```text
//! n=6
//! edges=1-2,1-3,5-6
//! ```
//!
//! Inline form (one line): `n=6;edges=1-2,1-3,5-6`. An empty edge list is
//! written `edges=`.

use cdg_core::graph::{Graph, GraphError};

/// A parse failure with a human-readable reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseError {}

impl From<GraphError> for ParseError {
    fn from(e: GraphError) -> Self {
        ParseError(e.to_string())
    }
}

/// Parses either the two-line or the inline form.
pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut fields = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for part in line.split(';') {
            let part = part.trim();
            if !part.is_empty() {
                fields.push(part.to_string());
            }
        }
    }
    if fields.len() != 2 {
        return Err(ParseError(format!(
            "expected the two fields n=<count> and edges=<list>, found {} field(s)",
            fields.len()
        )));
    }
    let n_text = fields[0]
        .strip_prefix("n=")
        .ok_or_else(|| ParseError(format!("expected n=<count>, found {:?}", fields[0])))?;
    let n: u8 = n_text
        .trim()
        .parse()
        .map_err(|_| ParseError(format!("invalid vertex count {n_text:?}")))?;
    let edge_text = fields[1]
        .strip_prefix("edges=")
        .ok_or_else(|| ParseError(format!("expected edges=<list>, found {:?}", fields[1])))?;
    let mut edges = Vec::new();
    for item in edge_text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (u, v) = item
            .split_once('-')
            .ok_or_else(|| ParseError(format!("invalid edge {item:?}, expected u-v")))?;
        let u: u8 = u
            .trim()
            .parse()
            .map_err(|_| ParseError(format!("invalid vertex {u:?}")))?;
        let v: u8 = v
            .trim()
            .parse()
            .map_err(|_| ParseError(format!("invalid vertex {v:?}")))?;
        edges.push((u, v));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn edge_list(g: &Graph) -> String {
    g.edges()
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Two-line file form, with a trailing newline.
pub fn emit(g: &Graph) -> String {
    format!("n={}\nedges={}\n", g.vertex_count(), edge_list(g))
}

/// One-line form used for streaming.
pub fn emit_inline(g: &Graph) -> String {
    format!("n={};edges={}", g.vertex_count(), edge_list(g))
}
