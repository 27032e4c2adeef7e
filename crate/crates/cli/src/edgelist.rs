//! Plain-text edge lists.
//!
//! The first line holds `n m`, followed by `m` lines `i j` of 0-indexed
//! endpoints. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use indexbound_core::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input: expected a header line `n m`")]
    MissingHeader,
    #[error("line {line}: expected two nonnegative integers, found `{text}`")]
    Malformed { line: usize, text: String },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let malformed = || ParseError::Malformed { line, text: text.to_string() };
    let mut fields = text.split_whitespace();
    let a = fields.next().and_then(|s| s.parse().ok()).ok_or_else(malformed)?;
    let b = fields.next().and_then(|s| s.parse().ok()).ok_or_else(malformed)?;
    if fields.next().is_some() {
        return Err(malformed());
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = pair(header_line, header)?;
    let mut pairs = Vec::with_capacity(m);
    for (line, text) in lines {
        let (i, j) = pair(line, text)?;
        // validate one edge at a time so errors point at a line
        Graph::from_edge_list(n, [(i, j)]).map_err(|source| ParseError::Graph { line, source })?;
        pairs.push((i, j));
    }
    if pairs.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: pairs.len() });
    }
    Graph::from_edge_list(n, pairs).map_err(|source| ParseError::Graph { line: header_line, source })
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.order(), graph.edge_count());
    for (i, j) in graph.edges() {
        writeln!(out, "{i} {j}").unwrap();
    }
    out
}
