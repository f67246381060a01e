//! Induced path factors stored as edge subsets, with verification and the
//! well-behaved and standardised predicates.

use crate::graph::structure::{block_decomposition, induced_k4_minus, K4Minus};
use crate::graph::{Edge, Graph, Vertex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IpfError {
    #[error("{0:?} is not an edge of the host graph")]
    NotAnEdge(Edge),
    #[error("edge {0:?} listed twice")]
    DuplicateEdge(Edge),
    #[error("vertex {0} has degree 3 or more in the edge set")]
    DegreeThree(Vertex),
    #[error("edge set contains a cycle through {0:?}")]
    Cycle(Vec<Vertex>),
    #[error("path {path:?} is not induced: chord {chord:?}")]
    Chord { path: Vec<Vertex>, chord: Edge },
    #[error("host graph is not subcubic")]
    NotSubcubic,
}

/// A verified IPF. Paths are stored smaller endpoint first and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ipf {
    #[serde(with = "edge_pairs")]
    pub edges: Vec<Edge>,
    pub path_count: usize,
    pub paths: Vec<Vec<Vertex>>,
}

mod edge_pairs {
    use crate::graph::Edge;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(edges: &[Edge], s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = edges.iter().map(|e| [e.0, e.1]).collect();
        pairs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Edge>, D::Error> {
        let pairs: Vec<[usize; 2]> = Vec::deserialize(d)?;
        Ok(pairs.into_iter().map(|[a, b]| Edge::new(a, b)).collect())
    }
}

impl Ipf {
    /// Verifies `edges` on `g` and builds the path list.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Ipf, IpfError> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|e| Edge::new(e.0, e.1)).collect();
        edges.sort_unstable();
        let paths = verify_ipf(g, &edges)?;
        Ok(Ipf {
            path_count: paths.len(),
            edges,
            paths,
        })
    }

    /// The IPF of `g` with every vertex a trivial path.
    pub fn trivial(g: &Graph) -> Ipf {
        Ipf::new(g, []).expect("empty edge set is an IPF")
    }

    /// Builds an IPF from paths given as vertex sequences.
    pub fn from_paths(g: &Graph, paths: &[Vec<Vertex>]) -> Result<Ipf, IpfError> {
        let edges = paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| Edge::new(w[0], w[1])));
        let ipf = Ipf::new(g, edges)?;
        let covered: usize = paths.iter().map(Vec::len).sum();
        debug_assert!(covered <= g.n());
        Ok(ipf)
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&Edge::new(e.0, e.1)).is_ok()
    }

    /// Degree of `v` in the edge set.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn is_endpoint(&self, v: Vertex) -> bool {
        self.degree(v) <= 1
    }

    /// Index of the path containing `v`.
    pub fn path_of(&self, v: Vertex) -> usize {
        self.paths
            .iter()
            .position(|p| p.contains(&v))
            .expect("every vertex lies on a path")
    }

    pub fn path_containing(&self, v: Vertex) -> &[Vertex] {
        &self.paths[self.path_of(v)]
    }

    /// True when `u` and `v` end two different paths.
    pub fn end_distinct_paths(&self, u: Vertex, v: Vertex) -> bool {
        self.is_endpoint(u) && self.is_endpoint(v) && self.path_of(u) != self.path_of(v)
    }
}

/// Splits `edges` into maximal paths of `g`, checking that each is induced.
/// Trivial paths are reported for vertices not covered by any edge.
pub fn verify_ipf(g: &Graph, edges: &[Edge]) -> Result<Vec<Vec<Vertex>>, IpfError> {
    let n = g.n();
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut sorted: Vec<Edge> = edges.iter().map(|e| Edge::new(e.0, e.1)).collect();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(IpfError::DuplicateEdge(w[0]));
        }
    }
    for &e in &sorted {
        if !g.has_edge(e.0, e.1) {
            return Err(IpfError::NotAnEdge(e));
        }
        adj[e.0].push(e.1);
        adj[e.1].push(e.0);
    }
    if let Some(v) = (0..n).find(|&v| adj[v].len() > 2) {
        return Err(IpfError::DegreeThree(v));
    }
    let mut seen = vec![false; n];
    let mut paths = Vec::new();
    for s in 0..n {
        if seen[s] || adj[s].len() == 2 {
            continue;
        }
        let mut path = vec![s];
        seen[s] = true;
        let mut prev = usize::MAX;
        let mut cur = s;
        while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
            seen[next] = true;
            path.push(next);
            prev = cur;
            cur = next;
        }
        paths.push(path);
    }
    if let Some(s) = (0..n).find(|&v| !seen[v]) {
        let mut cycle = vec![s];
        let (mut prev, mut cur) = (s, adj[s][0]);
        while cur != s {
            cycle.push(cur);
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        return Err(IpfError::Cycle(cycle));
    }
    let mut pos = vec![usize::MAX; n];
    for p in &mut paths {
        if p[p.len() - 1] < p[0] {
            p.reverse();
        }
        for (i, &v) in p.iter().enumerate() {
            pos[v] = i;
        }
        let mut chord: Option<Edge> = None;
        for (i, &v) in p.iter().enumerate() {
            for &w in g.neighbors(v) {
                let j = pos[w];
                if j != usize::MAX && j > i + 1 && p.get(j) == Some(&w) {
                    let e = Edge::new(v, w);
                    if chord.is_none_or(|c| e < c) {
                        chord = Some(e);
                    }
                }
            }
        }
        if let Some(chord) = chord {
            return Err(IpfError::Chord {
                path: p.clone(),
                chord,
            });
        }
        for &v in p.iter() {
            pos[v] = usize::MAX;
        }
    }
    paths.sort();
    Ok(paths)
}

/// Why a path fails both clauses of the well-behaved definition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ClauseFailure {
    /// More than two low-degree vertices, so the bridge clause cannot hold.
    TooManyLowDegree(usize),
    /// Two low-degree vertices that are not three steps apart on the path.
    NotThreeApart,
    /// The middle edge of the `[x, x', y', y]` subpath is not a bridge.
    MiddleNotBridge(Edge),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellBehavedWitness {
    pub path: Vec<Vertex>,
    /// Two low-degree vertices of the path lying in different blocks.
    pub pair: (Vertex, Vertex),
    pub failure: ClauseFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellBehavedReport {
    pub verdict: bool,
    pub exceptions_allowed: Vec<Vertex>,
    pub witnesses: Vec<WellBehavedWitness>,
}

/// Checks each path: its low-degree vertices (outside `except`) lie in one
/// block, or there are exactly two of them, `x` and `y`, ending a subpath
/// `[x, x', y', y]` whose middle edge is a bridge. A single low-degree
/// vertex counts as lying in one block even when it is in none.
pub fn is_well_behaved(
    g: &Graph,
    ipf: &Ipf,
    except: &[Vertex],
) -> Result<WellBehavedReport, IpfError> {
    if !g.is_subcubic() {
        return Err(IpfError::NotSubcubic);
    }
    let blocks = block_decomposition(g);
    let low = |v: Vertex| g.degree(v) <= 2 && !except.contains(&v);
    let mut witnesses = Vec::new();
    for p in &ipf.paths {
        let s: Vec<Vertex> = p.iter().copied().filter(|&v| low(v)).collect();
        if s.len() < 2 {
            continue;
        }
        let first_block = blocks.block_of(s[0]);
        let split = s[1..]
            .iter()
            .find(|&&y| first_block.is_none() || blocks.block_of(y) != first_block);
        let Some(&y) = split else { continue };
        let pair = (s[0], y);
        let failure = if s.len() > 2 {
            Some(ClauseFailure::TooManyLowDegree(s.len()))
        } else {
            let i = p.iter().position(|&v| v == s[0]).unwrap();
            let j = p.iter().position(|&v| v == s[1]).unwrap();
            let (i, j) = (i.min(j), i.max(j));
            if j != i + 3 {
                Some(ClauseFailure::NotThreeApart)
            } else {
                let mid = Edge::new(p[i + 1], p[i + 2]);
                (!blocks.is_bridge(mid)).then_some(ClauseFailure::MiddleNotBridge(mid))
            }
        };
        if let Some(failure) = failure {
            witnesses.push(WellBehavedWitness {
                path: p.clone(),
                pair,
                failure,
            });
        }
    }
    let mut exceptions_allowed = except.to_vec();
    exceptions_allowed.sort_unstable();
    Ok(WellBehavedReport {
        verdict: witnesses.is_empty(),
        exceptions_allowed,
        witnesses,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardisedReport {
    pub verdict: bool,
    /// Induced K4- subgraphs on which the IPF is not standardised.
    pub failing: Vec<K4Minus>,
}

/// Labelling of `h` under which `ipf` is standardised, if any: `c` ends a
/// path using `ac` and `d` ends a path using `bd`.
pub fn standard_labelling(ipf: &Ipf, h: &K4Minus) -> Option<K4Minus> {
    let K4Minus { a, b, c, d } = *h;
    let options = [
        K4Minus { a, b, c, d },
        K4Minus { a: b, b: a, c, d },
        K4Minus { a, b, c: d, d: c },
        K4Minus { a: b, b: a, c: d, d: c },
    ];
    options.into_iter().find(|o| {
        ipf.contains(Edge::new(o.a, o.c))
            && ipf.contains(Edge::new(o.b, o.d))
            && ipf.degree(o.c) == 1
            && ipf.degree(o.d) == 1
    })
}

pub fn is_standardised(g: &Graph, ipf: &Ipf) -> Result<StandardisedReport, IpfError> {
    if !g.is_subcubic() {
        return Err(IpfError::NotSubcubic);
    }
    let failing: Vec<K4Minus> = induced_k4_minus(g)
        .into_iter()
        .filter(|h| standard_labelling(ipf, h).is_none())
        .collect();
    Ok(StandardisedReport {
        verdict: failing.is_empty(),
        failing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k4_minus() -> Graph {
        Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn perfect_matching_of_k4() {
        let ipf = Ipf::new(&k4(), [Edge(0, 1), Edge(2, 3)]).unwrap();
        assert_eq!(ipf.path_count, 2);
        assert_eq!(ipf.paths, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn triangle_path_has_chord() {
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            verify_ipf(&tri, &[Edge(0, 1), Edge(1, 2)]),
            Err(IpfError::Chord {
                path: vec![0, 1, 2],
                chord: Edge(0, 2)
            })
        );
    }

    #[test]
    fn c5_minus_edge_has_chord_on_removed_edge() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let edges: Vec<Edge> = (0..4).map(|i| Edge(i, i + 1)).collect();
        match verify_ipf(&c5, &edges) {
            Err(IpfError::Chord { chord, .. }) => assert_eq!(chord, Edge(0, 4)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cycle_and_degree_errors() {
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            verify_ipf(&tri, tri.edges()),
            Err(IpfError::Cycle(_))
        ));
        assert_eq!(verify_ipf(&k4(), &[Edge(0, 1), Edge(0, 2), Edge(0, 3)]), Err(IpfError::DegreeThree(0)));
        assert_eq!(verify_ipf(&k4_minus(), &[Edge(0, 1)]), Err(IpfError::NotAnEdge(Edge(0, 1))));
    }

    #[test]
    fn empty_set_gives_trivial_paths() {
        let ipf = Ipf::trivial(&k4());
        assert_eq!(ipf.path_count, 4);
        assert_eq!(ipf.paths, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn k4_minus_standardisation() {
        let g = k4_minus();
        let good = Ipf::new(&g, [Edge(0, 2), Edge(1, 3)]).unwrap();
        assert!(is_standardised(&g, &good).unwrap().verdict);
        let bad = Ipf::new(&g, [Edge(2, 3)]).unwrap();
        let r = is_standardised(&g, &bad).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.failing.len(), 1);
    }

    #[test]
    fn bridge_clause() {
        // two triangles 0,1,2 and 3,4,5 joined by bridge 2-3; degree-2
        // vertices are 0,1,4,5
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let ok = Ipf::new(&g, [Edge(1, 2), Edge(2, 3), Edge(3, 4)]).unwrap();
        assert!(is_well_behaved(&g, &ok, &[]).unwrap().verdict);
        // [0,1] alone is inside one block; [1,2,3,4] is [x,x',y',y] over the bridge.
        let h = Graph::new(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6)]).unwrap();
        let long = Ipf::new(&h, [Edge(1, 2), Edge(2, 3), Edge(3, 5), Edge(5, 6)]).unwrap();
        let r = is_well_behaved(&h, &long, &[]).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witnesses[0].pair.0, 1);
        assert!(is_well_behaved(&h, &long, &h.vertices().collect::<Vec<_>>()).unwrap().verdict);
    }
}
