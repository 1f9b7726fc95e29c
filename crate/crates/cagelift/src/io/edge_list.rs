//! Plain edge-list format for human-edited simple graphs: an order line
//! followed by one `u v` line per edge. `#` comments allowed.

use thiserror::Error;

use crate::voltage::{GraphError, SimpleGraph};

#[derive(Error, Debug, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected `u v`, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("line {line}: {source}")]
    BadGraph { line: usize, source: GraphError },
    #[error("empty input")]
    Empty,
}

/// Parse an edge list. The first data line may be a single integer
/// giving the vertex count (needed for isolated vertices); otherwise the
/// count is one past the largest endpoint.
pub fn read_edge_list(text: &str) -> Result<SimpleGraph, EdgeListError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut first_data = true;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        last_line = line_no;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [count] if first_data => {
                n = Some(count.parse().map_err(|_| EdgeListError::BadLine {
                    line: line_no,
                    text: raw.to_owned(),
                })?);
            }
            [u, v] => {
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| EdgeListError::BadLine {
                        line: line_no,
                        text: raw.to_owned(),
                    })
                };
                edges.push((parse(u)?, parse(v)?));
            }
            _ => {
                return Err(EdgeListError::BadLine {
                    line: line_no,
                    text: raw.to_owned(),
                })
            }
        }
        first_data = false;
    }
    if first_data {
        return Err(EdgeListError::Empty);
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    SimpleGraph::from_unlabeled_edges(n, &edges).map_err(|source| EdgeListError::BadGraph {
        line: last_line,
        source,
    })
}

pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
