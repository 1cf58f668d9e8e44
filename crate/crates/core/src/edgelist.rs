//! Plain-text edge lists.
//!
//! ```text
//! n 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first line is `n <count>`; each following non-blank line is one
//! 0-based edge `u v`. Lines starting with `#` are ignored.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: expected `n <count>`")]
    MissingOrder { line: usize },
    #[error("line {line}: expected two vertex indices, got `{text}`")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first, header) = lines
        .next()
        .ok_or(EdgeListError::MissingOrder { line: 1 })?;
    let mut tok = header.split_whitespace();
    let n = match (tok.next(), tok.next().map(str::parse::<usize>), tok.next()) {
        (Some("n"), Some(Ok(n)), None) => n,
        _ => return Err(EdgeListError::MissingOrder { line: first }),
    };

    let mut g = Graph::empty(n).map_err(|source| EdgeListError::Graph {
        line: first,
        source,
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<_> = l.split_whitespace().map(str::parse::<usize>).collect();
        match parts.as_slice() {
            [Ok(u), Ok(v)] => {
                Graph::from_edges(n, [(*u, *v)])
                    .map_err(|source| EdgeListError::Graph { line, source })?;
                edges.push((*u, *v));
            }
            _ => {
                return Err(EdgeListError::BadEdge {
                    line,
                    text: l.to_string(),
                })
            }
        }
    }
    if !edges.is_empty() {
        g = Graph::from_edges(n, edges).expect("edges validated above");
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
