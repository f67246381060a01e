//! Generators for the named graphs and extremal families.
//!
//! Vertex numbering, per family:
//! - `triangle_ring(n)`: cycle `0..n`; vertex `i` plays `x_{i+1}`. The
//!   triangles are `{n-1, 0, 1}` and `{3j-1, 3j, 3j+1}`.
//! - `bad_graph`: ring vertices first, then one subdivision vertex per
//!   chosen edge, then five vertices per attached order-5 block.
//! - `fig1(n)`: cycle `0..n/4`; cycle vertex `i` is joined to `m + 3i`,
//!   which lies in the triangle `{m+3i, m+3i+1, m+3i+2}` (`m = n/4`).
//! - `petersen`: outer cycle `0..5`, inner pentagram `5..10`, spokes `i, i+5`.
//! - `tietze`: Petersen with vertex 0 blown up into the triangle `{0, 10, 11}`.
//! - `subdivided_complete(m)`: `K_m` on `0..m` with `01` subdivided by `m`.
//! - trees: breadth-first order from the root `0`.

use crate::graph::{Edge, Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    Params { family: &'static str, reason: String },
    #[error("unknown family {0:?}")]
    Unknown(String),
}

/// The three hamiltonian {2,3}-graphs of order 5 up to isomorphism, as
/// chords added to the cycle `0..5`. Vertex 0 has degree 2 in each.
pub const ORDER5_CHORDS: [&[(usize, usize)]; 3] = [&[], &[(1, 3)], &[(1, 3), (2, 4)]];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    TriangleRing { n: usize },
    /// `subdivided` lists indices `j` in `0..n/3` of the non-triangle ring
    /// edges `{3j+1, 3j+2}`; `block` picks an entry of [`ORDER5_CHORDS`].
    BadGraph { n: usize, subdivided: Vec<usize>, block: usize },
    Fig1 { n: usize },
    Petersen,
    Tietze,
    SubdividedComplete { m: usize },
    PerfectTree { k: usize, h: usize },
    OddKGluedTree { k: usize, h: usize },
    EvenKGluedCycle { k: usize, h: usize },
    C4BinaryTree { h: usize },
}

/// A generated graph and, for the degree-`k` families, the root whose
/// degree falls short of `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub deficient_root: Option<(Vertex, usize)>,
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Params {
        family,
        reason: reason.into(),
    }
}

fn build(n: usize, edges: Vec<Edge>) -> Graph {
    Graph::new(n, edges).expect("family constructions are simple graphs")
}

pub fn triangle_ring(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::TriangleRing { n }.generate().map(|g| g.graph)
}

pub fn petersen() -> Graph {
    FamilySpec::Petersen.generate().unwrap().graph
}

pub fn tietze() -> Graph {
    FamilySpec::Tietze.generate().unwrap().graph
}

pub fn fig1(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Fig1 { n }.generate().map(|g| g.graph)
}

pub fn perfect_tree(k: usize, h: usize) -> Result<Graph, FamilyError> {
    FamilySpec::PerfectTree { k, h }.generate().map(|g| g.graph)
}

pub fn subdivided_complete(m: usize) -> Result<Graph, FamilyError> {
    FamilySpec::SubdividedComplete { m }.generate().map(|g| g.graph)
}

fn ring_edges(n: usize) -> Vec<Edge> {
    let mut e: Vec<Edge> = (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect();
    e.push(Edge::new(n - 1, 1));
    for j in 1..n / 3 {
        e.push(Edge::new(3 * j - 1, 3 * j + 1));
    }
    e
}

/// Edges of a perfect `(k-1)`-ary tree of height `h` in BFS order, with
/// the number of vertices and the first leaf.
fn tree_edges(k: usize, h: usize) -> (usize, usize, Vec<Edge>) {
    let arity = k - 1;
    let mut edges = Vec::new();
    let mut level_start = 0;
    let mut level_len = 1;
    let mut next = 1;
    for _ in 0..h {
        for p in level_start..level_start + level_len {
            for _ in 0..arity {
                edges.push(Edge(p, next));
                next += 1;
            }
        }
        level_start += level_len;
        level_len *= arity;
    }
    (next, level_start, edges)
}

/// Appends `K_{m}` with one edge subdivided, the subdivision vertex being
/// the existing vertex `at`. Returns the new vertex count.
fn glue_subdivided_complete(edges: &mut Vec<Edge>, start: usize, m: usize, at: Vertex) -> usize {
    let v: Vec<Vertex> = (start..start + m).collect();
    for i in 0..m {
        for j in i + 1..m {
            if (i, j) != (0, 1) {
                edges.push(Edge(v[i], v[j]));
            }
        }
    }
    edges.push(Edge::new(v[0], at));
    edges.push(Edge::new(v[1], at));
    start + m
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::TriangleRing { .. } => "triangle_ring",
            FamilySpec::BadGraph { .. } => "bad_graph",
            FamilySpec::Fig1 { .. } => "fig1_subcubic",
            FamilySpec::Petersen => "petersen",
            FamilySpec::Tietze => "tietze",
            FamilySpec::SubdividedComplete { .. } => "subdivided_complete",
            FamilySpec::PerfectTree { .. } => "perfect_tree",
            FamilySpec::OddKGluedTree { .. } => "odd_k_glued_tree",
            FamilySpec::EvenKGluedCycle { .. } => "even_k_glued_cycle",
            FamilySpec::C4BinaryTree { .. } => "c4_binary_tree",
        }
    }

    /// Parses a family name and `key=value` parameters separated by commas,
    /// e.g. `("perfect_tree", "k=3,h=2")`. For `bad_graph` the subdivided
    /// edges are given as `edges=0:2`.
    pub fn parse(name: &str, params: &str) -> Result<FamilySpec, FamilyError> {
        let mut kv = std::collections::HashMap::new();
        for part in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| FamilyError::Unknown(format!("parameter {part:?}")))?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let family: &'static str = match name {
            "triangle_ring" => "triangle_ring",
            "bad_graph" => "bad_graph",
            "fig1" | "fig1_subcubic" => "fig1_subcubic",
            "petersen" => "petersen",
            "tietze" => "tietze",
            "subdivided_complete" => "subdivided_complete",
            "perfect_tree" => "perfect_tree",
            "odd_k_glued_tree" => "odd_k_glued_tree",
            "even_k_glued_cycle" => "even_k_glued_cycle",
            "c4_binary_tree" => "c4_binary_tree",
            other => return Err(FamilyError::Unknown(other.to_string())),
        };
        let int = |key: &str| -> Result<usize, FamilyError> {
            kv.get(key)
                .ok_or_else(|| bad(family, format!("missing {key}")))?
                .parse()
                .map_err(|_| bad(family, format!("{key} must be a nonnegative integer")))
        };
        Ok(match family {
            "triangle_ring" => FamilySpec::TriangleRing { n: int("n")? },
            "bad_graph" => FamilySpec::BadGraph {
                n: int("n")?,
                subdivided: match kv.get("edges") {
                    None => Vec::new(),
                    Some(s) => s
                        .split(':')
                        .filter(|x| !x.is_empty())
                        .map(|x| x.parse().map_err(|_| bad(family, "edges must be integers")))
                        .collect::<Result<_, _>>()?,
                },
                block: if kv.contains_key("block") { int("block")? } else { 1 },
            },
            "fig1_subcubic" => FamilySpec::Fig1 { n: int("n")? },
            "petersen" => FamilySpec::Petersen,
            "tietze" => FamilySpec::Tietze,
            "subdivided_complete" => FamilySpec::SubdividedComplete { m: int("m")? },
            "perfect_tree" => FamilySpec::PerfectTree {
                k: int("k")?,
                h: int("h")?,
            },
            "odd_k_glued_tree" => FamilySpec::OddKGluedTree {
                k: int("k")?,
                h: int("h")?,
            },
            "even_k_glued_cycle" => FamilySpec::EvenKGluedCycle {
                k: int("k")?,
                h: int("h")?,
            },
            _ => FamilySpec::C4BinaryTree { h: int("h")? },
        })
    }

    pub fn generate(&self) -> Result<Generated, FamilyError> {
        let plain = |graph| Generated {
            graph,
            deficient_root: None,
        };
        match *self {
            FamilySpec::TriangleRing { n } => {
                if n < 6 || n % 3 != 0 {
                    return Err(bad("triangle_ring", "need n >= 6 and n divisible by 3"));
                }
                Ok(plain(build(n, ring_edges(n))))
            }
            FamilySpec::BadGraph {
                n,
                ref subdivided,
                block,
            } => {
                if n < 6 || n % 3 != 0 {
                    return Err(bad("bad_graph", "need n >= 6 and n divisible by 3"));
                }
                if block >= ORDER5_CHORDS.len() {
                    return Err(bad("bad_graph", "block must be 0, 1 or 2"));
                }
                let mut chosen = subdivided.clone();
                chosen.sort_unstable();
                chosen.dedup();
                if chosen.len() != subdivided.len() || chosen.iter().any(|&j| j >= n / 3) {
                    return Err(bad("bad_graph", "edges must be distinct indices below n/3"));
                }
                let s = chosen.len();
                let total = n + 6 * s;
                let mut edges = ring_edges(n);
                for (t, &j) in chosen.iter().enumerate() {
                    let e = Edge(3 * j + 1, 3 * j + 2);
                    edges.retain(|&f| f != e);
                    let xe = n + t;
                    edges.push(Edge(e.0, xe));
                    edges.push(Edge(e.1, xe));
                    let base = n + s + 5 * t;
                    for i in 0..5 {
                        edges.push(Edge::new(base + i, base + (i + 1) % 5));
                    }
                    for &(a, b) in ORDER5_CHORDS[block] {
                        edges.push(Edge(base + a, base + b));
                    }
                    edges.push(Edge(xe, base));
                }
                Ok(plain(build(total, edges)))
            }
            FamilySpec::Fig1 { n } => {
                if n % 4 != 0 || n / 4 < 3 {
                    return Err(bad("fig1_subcubic", "need n divisible by 4 with n/4 >= 3"));
                }
                let m = n / 4;
                let mut edges: Vec<Edge> = (0..m).map(|i| Edge::new(i, (i + 1) % m)).collect();
                for i in 0..m {
                    let t = m + 3 * i;
                    edges.extend([Edge(i, t), Edge(t, t + 1), Edge(t, t + 2), Edge(t + 1, t + 2)]);
                }
                Ok(plain(build(n, edges)))
            }
            FamilySpec::Petersen => {
                let mut e: Vec<Edge> = (0..5).map(|i| Edge::new(i, (i + 1) % 5)).collect();
                e.extend((0..5).map(|i| Edge::new(5 + i, 5 + (i + 2) % 5)));
                e.extend((0..5).map(|i| Edge(i, i + 5)));
                Ok(plain(build(10, e)))
            }
            FamilySpec::Tietze => {
                let p = petersen();
                let mut e: Vec<Edge> = p.edges().iter().copied().filter(|e| !e.contains(0)).collect();
                e.extend([Edge(0, 10), Edge(0, 11), Edge(10, 11)]);
                e.extend([Edge(0, 1), Edge(4, 10), Edge(5, 11)]);
                Ok(plain(build(12, e)))
            }
            FamilySpec::SubdividedComplete { m } => {
                if m < 2 {
                    return Err(bad("subdivided_complete", "need m >= 2"));
                }
                let mut edges = Vec::new();
                glue_subdivided_complete(&mut edges, 0, m, m);
                Ok(plain(build(m + 1, edges)))
            }
            FamilySpec::PerfectTree { k, h } => {
                if k < 3 {
                    return Err(bad("perfect_tree", "need k >= 3"));
                }
                let (n, _, edges) = tree_edges(k, h);
                let root = (h > 0).then_some((0, 1));
                Ok(Generated {
                    graph: build(n, edges),
                    deficient_root: root,
                })
            }
            FamilySpec::OddKGluedTree { k, h } => {
                if k < 3 || k % 2 == 0 {
                    return Err(bad("odd_k_glued_tree", "need odd k >= 3"));
                }
                let (tn, first_leaf, mut edges) = tree_edges(k, h);
                let mut next = tn;
                for leaf in first_leaf..tn {
                    for _ in 0..(k - 1) / 2 {
                        next = glue_subdivided_complete(&mut edges, next, k + 1, leaf);
                    }
                }
                Ok(Generated {
                    graph: build(next, edges),
                    deficient_root: (h > 0).then_some((0, 1)),
                })
            }
            FamilySpec::EvenKGluedCycle { k, h } => {
                if k < 4 || k % 2 == 1 || h < 3 {
                    return Err(bad("even_k_glued_cycle", "need even k >= 4 and h >= 3"));
                }
                let mut edges: Vec<Edge> = (0..h).map(|i| Edge::new(i, (i + 1) % h)).collect();
                let mut next = h;
                for v in 0..h {
                    for _ in 0..(k - 2) / 2 {
                        next = glue_subdivided_complete(&mut edges, next, k + 1, v);
                    }
                }
                Ok(plain(build(next, edges)))
            }
            FamilySpec::C4BinaryTree { h } => {
                if h < 1 {
                    return Err(bad("c4_binary_tree", "need h >= 1"));
                }
                let (tn, first_leaf, mut edges) = tree_edges(3, h);
                for p in 0..first_leaf {
                    edges.push(Edge(2 * p + 1, 2 * p + 2));
                }
                let mut next = tn;
                for leaf in first_leaf..tn {
                    next = glue_subdivided_complete(&mut edges, next, 5, leaf);
                }
                Ok(Generated {
                    graph: build(next, edges),
                    deficient_root: Some((0, 2)),
                })
            }
        }
    }

    /// Degree every listed vertex should have, for the checkable families.
    pub fn degree_contract(&self, g: &Generated) -> bool {
        let graph = &g.graph;
        let regular_except_root = |k: usize| {
            graph.vertices().all(|v| match g.deficient_root {
                Some((r, d)) if r == v => graph.degree(v) == k - d,
                _ => graph.degree(v) == k,
            })
        };
        match *self {
            FamilySpec::TriangleRing { n } => {
                (0..n).all(|v| graph.degree(v) == if v % 3 == 0 { 2 } else { 3 })
            }
            FamilySpec::BadGraph { .. } => graph.is_23_graph() && graph.is_connected(),
            FamilySpec::Fig1 { n } => {
                let m = n / 4;
                (0..m).all(|v| graph.degree(v) == 3)
                    && (0..m).all(|i| {
                        let t = m + 3 * i;
                        [graph.degree(t), graph.degree(t + 1), graph.degree(t + 2)] == [3, 2, 2]
                    })
            }
            FamilySpec::Petersen | FamilySpec::Tietze => graph.is_cubic(),
            FamilySpec::SubdividedComplete { m } => {
                graph.degree(m) == 2 && (0..m).all(|v| graph.degree(v) == m - 1)
            }
            FamilySpec::PerfectTree { k, .. } => graph
                .vertices()
                .all(|v| graph.degree(v) == 1 || graph.degree(v) == k || v == 0),
            FamilySpec::OddKGluedTree { k, .. } | FamilySpec::EvenKGluedCycle { k, .. } => {
                regular_except_root(k)
            }
            FamilySpec::C4BinaryTree { .. } => regular_except_root(4),
        }
    }

    /// Vertex count implied by the construction, without building it.
    pub fn expected_order(&self) -> Option<usize> {
        let pow = |b: usize, e: usize| b.pow(e as u32);
        Some(match *self {
            FamilySpec::TriangleRing { n } => n,
            FamilySpec::BadGraph { n, ref subdivided, .. } => n + 6 * subdivided.len(),
            FamilySpec::Fig1 { n } => n,
            FamilySpec::Petersen => 10,
            FamilySpec::Tietze => 12,
            FamilySpec::SubdividedComplete { m } => m + 1,
            FamilySpec::PerfectTree { k, h } => (0..=h).map(|i| pow(k - 1, i)).sum(),
            FamilySpec::OddKGluedTree { k, h } => {
                let tree: usize = (0..=h).map(|i| pow(k - 1, i)).sum();
                tree + pow(k - 1, h) * (k - 1) / 2 * (k + 1)
            }
            FamilySpec::EvenKGluedCycle { k, h } => h + h * (k + 1) * (k - 2) / 2,
            FamilySpec::C4BinaryTree { h } => pow(2, h + 1) - 1 + 5 * pow(2, h),
        })
    }
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in g.vertices() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_of_six() {
        let g = triangle_ring(6).unwrap();
        assert_eq!((g.n(), g.m()), (6, 8));
        assert!(g.has_edge(5, 1) && g.has_edge(2, 4));
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(3), 2);
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.is_cubic());
        assert_eq!(girth(&g), Some(5));
    }

    #[test]
    fn tietze_shape() {
        let g = tietze();
        assert_eq!((g.n(), g.m()), (12, 18));
        assert!(g.is_cubic() && g.is_connected());
        assert_eq!(girth(&g), Some(3));
    }

    #[test]
    fn small_tree() {
        let g = perfect_tree(3, 2).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn orders_match_constructions() {
        let specs = [
            FamilySpec::OddKGluedTree { k: 3, h: 2 },
            FamilySpec::OddKGluedTree { k: 5, h: 1 },
            FamilySpec::EvenKGluedCycle { k: 4, h: 5 },
            FamilySpec::C4BinaryTree { h: 3 },
            FamilySpec::BadGraph {
                n: 9,
                subdivided: vec![0, 2],
                block: 0,
            },
        ];
        for s in specs {
            let g = s.generate().unwrap();
            assert_eq!(Some(g.graph.n()), s.expected_order(), "{s:?}");
            assert!(s.degree_contract(&g), "{s:?}");
        }
    }

    #[test]
    fn parameter_domains() {
        assert!(triangle_ring(7).is_err());
        assert!(fig1(8).is_err());
        assert!(FamilySpec::parse("perfect_tree", "k=3").is_err());
        assert_eq!(
            FamilySpec::parse("bad_graph", "n=6,edges=1").unwrap(),
            FamilySpec::BadGraph {
                n: 6,
                subdivided: vec![1],
                block: 1
            }
        );
    }
}
