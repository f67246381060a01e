//! Plain-text edge list for hand-written fixtures.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```

use super::{Edge, Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjListError {
    #[error("line {line}: expected header \"n <count>\"")]
    MissingHeader { line: usize },
    #[error("line {line}: expected two vertex indices, got {text:?}")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

pub fn parse_adjlist(text: &str) -> Result<Graph, AdjListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(AdjListError::MissingHeader { line: 1 })?;
    let n = header
        .strip_prefix('n')
        .and_then(|rest| rest.trim().parse::<usize>().ok())
        .ok_or(AdjListError::MissingHeader { line: hline })?;
    let mut edges: Vec<(usize, Edge)> = Vec::new();
    for (line, l) in lines {
        let parts: Vec<_> = l.split_whitespace().collect();
        let parsed = match parts.as_slice() {
            [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
            _ => None,
        };
        let (a, b) = parsed.ok_or_else(|| AdjListError::BadEdge {
            line,
            text: l.to_string(),
        })?;
        // validate one edge at a time so errors carry their line number
        if let Err(source) = Graph::new(n, edges.iter().map(|&(_, e)| e).chain([(a, b).into()])) {
            return Err(AdjListError::Graph { line, source });
        }
        edges.push((line, Edge::new(a, b)));
    }
    Ok(Graph::new(n, edges.into_iter().map(|(_, e)| e)).expect("validated above"))
}

pub fn write_adjlist(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for &Edge(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_adjlist("# path\nn 3\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!(g.edges(), &[Edge(0, 1), Edge(1, 2)]);
        assert_eq!(parse_adjlist(&write_adjlist(&g)).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_adjlist("n 3\n0 1\n1 0\n"),
            Err(AdjListError::Graph {
                line: 3,
                source: GraphError::ParallelEdge(0, 1)
            })
        );
        assert!(matches!(
            parse_adjlist("0 1\n"),
            Err(AdjListError::MissingHeader { line: 1 })
        ));
        assert!(matches!(
            parse_adjlist("n 2\n0 x\n"),
            Err(AdjListError::BadEdge { line: 2, .. })
        ));
    }
}
