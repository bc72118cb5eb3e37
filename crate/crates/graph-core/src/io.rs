use crate::error::GraphError;
use crate::graph::Graph;

/// Default soft cap on vertex count for files handed to exhaustive routines.
pub const DEFAULT_MAX_VERTICES: usize = 100_000;

impl Graph {
    /// Plain-text edge list: `n m`, then one `u v` line per edge with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { line, message: message.into() }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| parse_err(line_no, "expected two integers"))?;
        tok.parse().map_err(|_| parse_err(line_no, format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(line_no, "trailing tokens"));
    }
    Ok((a, b))
}

/// Reads the edge-list format. Blank lines and lines starting with `#` are
/// skipped. Rejects `u >= v`, duplicates, a wrong edge count and graphs above
/// `max_vertices`.
pub fn parse_edge_list(text: &str, max_vertices: usize) -> Result<Graph, GraphError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let (n, m) = two_numbers(hl, header)?;
    if n > max_vertices {
        return Err(GraphError::TooLarge { n, cap: max_vertices });
    }
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let (u, v) = two_numbers(ln, line)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if u > v {
            return Err(parse_err(ln, format!("edge {u} {v} must be written with the smaller id first")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}
