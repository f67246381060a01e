//! Simple undirected graphs with dense vertex indices.
//!
//! A [`Graph`] is immutable once built. Every operation that changes the
//! structure (see [`surgery`]) returns a fresh graph together with a record
//! of how the vertex indices moved.

pub mod adjlist;
pub mod graph6;
pub mod search;
pub mod structure;
pub mod surgery;

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

pub use search::{hamilton_cycle, perfect_matchings, two_factor_search, TwoFactor};
pub use structure::{block_decomposition, find_2_edge_cut, BlockDecomposition, Ladder};
pub use surgery::{Surgery, SurgeryKind, SurgeryRecord};

pub type Vertex = usize;

/// An unordered vertex pair, always stored with the smaller index first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(self, v: Vertex) -> Vertex {
        if self.0 == v {
            self.1
        } else {
            assert_eq!(self.1, v, "{v} is not an endpoint of {self:?}");
            self.0
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Edge {
        Edge::new(a, b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: Vertex, n: usize },
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting loops and repeated edges.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for e in edges {
            let e: Edge = e.into();
            let Edge(u, v) = e;
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (wi, bi) = (v / 64, v % 64);
            if bits[u * words + wi] >> bi & 1 == 1 {
                return Err(GraphError::ParallelEdge(u, v));
            }
            bits[u * words + wi] |= 1 << bi;
            bits[v * words + u / 64] |= 1 << (u % 64);
            adj[u].push(v);
            adj[v].push(u);
            list.push(e);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adj,
            words,
            bits,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, std::iter::empty::<Edge>()).expect("empty graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|nb| nb.len() == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_k_regular(3)
    }

    /// Every vertex has degree 2 or 3.
    pub fn is_23_graph(&self) -> bool {
        self.adj.iter().all(|nb| nb.len() == 2 || nb.len() == 3)
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// The subgraph induced by `keep`, relabelled in the order given.
    /// Returns the graph and the map from new index to old index.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_of[v] = i;
        }
        let edges = self.edges.iter().filter(|&&Edge(u, v)| new_of[u] != usize::MAX && new_of[v] != usize::MAX).map(|&Edge(u, v)| Edge::new(new_of[u], new_of[v]));
        let g = Graph::new(keep.len(), edges).expect("induced subgraph of a simple graph");
        (g, keep.to_vec())
    }

    /// Copy with extra edges. Fails on repeats.
    pub fn with_edges(&self, extra: &[Edge]) -> Result<Graph, GraphError> {
        Graph::new(self.n, self.edges.iter().copied().chain(extra.iter().copied()))
    }

    /// Copy without the listed edges; missing edges are ignored.
    pub fn without_edges(&self, drop: &[Edge]) -> Graph {
        Graph::new(
            self.n,
            self.edges.iter().copied().filter(|e| !drop.contains(e)),
        )
        .expect("subgraph of a simple graph")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        Graph::new(
            self.n,
            self.edges.iter().map(|&Edge(u, v)| Edge::new(perm[u], perm[v])),
        )
        .expect("permutation of a simple graph")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
