//! Bridges, blocks, small edge cuts and the ladder structure around a
//! 2-edge cut in a cubic graph.

use super::{Edge, Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a bridge {0:?}")]
    HasBridge(Edge),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("{0:?} and {1:?} do not form a 2-edge cut")]
    NotACut(Edge, Edge),
    #[error("ladder closes on itself; the graph has no 2-edge cut of this shape")]
    ClosedLadder,
}

/// Bridges plus the 2-connected blocks of order at least 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub bridges: Vec<Edge>,
    pub blocks: Vec<Vec<Vertex>>,
    block_of: Vec<Option<usize>>,
}

impl BlockDecomposition {
    /// Block containing `v`. For subcubic hosts blocks are disjoint, so this is unique;
    /// otherwise the first listed block is returned.
    pub fn block_of(&self, v: Vertex) -> Option<usize> {
        self.block_of.get(v).copied().flatten()
    }

    pub fn is_bridge(&self, e: Edge) -> bool {
        self.bridges.binary_search(&e).is_ok()
    }

    /// True when every vertex lies in exactly one listed block.
    pub fn blocks_partition(&self, n: usize) -> bool {
        let total: usize = self.blocks.iter().map(Vec::len).sum();
        total == n && self.block_of.iter().all(Option::is_some)
    }
}

/// Tarjan's biconnected components with an explicit edge stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut bridges = Vec::new();
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    // frame: (vertex, parent, next neighbour position)
    let mut stack: Vec<(Vertex, Vertex, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*pos) {
                *pos += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push(Edge::new(v, w));
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push(Edge::new(v, w));
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let tree_edge = Edge::new(parent, v);
                let mut verts = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    verts.push(e.0);
                    verts.push(e.1);
                    if e == tree_edge {
                        break;
                    }
                }
                verts.sort_unstable();
                verts.dedup();
                if verts.len() == 2 {
                    bridges.push(tree_edge);
                } else {
                    blocks.push(verts);
                }
            }
        }
    }
    bridges.sort_unstable();
    blocks.sort();
    let mut block_of = vec![None; n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            if block_of[v].is_none() {
                block_of[v] = Some(i);
            }
        }
    }
    if g.is_subcubic() {
        let total: usize = blocks.iter().map(Vec::len).sum();
        let covered = block_of.iter().filter(|b| b.is_some()).count();
        assert_eq!(total, covered, "blocks of a subcubic graph overlap");
    }
    BlockDecomposition {
        bridges,
        blocks,
        block_of,
    }
}

pub fn bridges(g: &Graph) -> Vec<Edge> {
    block_decomposition(g).bridges
}

/// Lexicographically first pair of edges whose joint removal disconnects
/// `g`, or `None` when `g` is 3-edge-connected.
pub fn find_2_edge_cut(g: &Graph) -> Result<Option<(Edge, Edge)>, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    if let Some(&b) = bridges(g).first() {
        return Err(StructureError::HasBridge(b));
    }
    for &e in g.edges() {
        let h = g.without_edges(&[e]);
        if let Some(&f) = bridges(&h).iter().find(|&&f| f > e) {
            return Ok(Some((e, f)));
        }
    }
    Ok(None)
}

/// A bridgeless cubic graph cut by two edges, written as `G1 ∪ H ∪ G2`
/// where `H` is a ladder: two paths `u[0..=s]`, `v[0..=s]` joined by rungs
/// `u[i]v[i]` for `0 < i < s`. `u[0], v[0]` lie in `G1` and are nonadjacent
/// there; likewise `u[s], v[s]` in `G2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ladder {
    pub g1: Vec<Vertex>,
    pub g2: Vec<Vertex>,
    pub u: Vec<Vertex>,
    pub v: Vec<Vertex>,
}

impl Ladder {
    pub fn s(&self) -> usize {
        self.u.len() - 1
    }

    /// Same decomposition read from the other end.
    pub fn reversed(&self) -> Ladder {
        let mut u = self.u.clone();
        let mut v = self.v.clone();
        u.reverse();
        v.reverse();
        Ladder {
            g1: self.g2.clone(),
            g2: self.g1.clone(),
            u,
            v,
        }
    }
}

fn third_neighbor(g: &Graph, x: Vertex, not: [Vertex; 2]) -> Vertex {
    *g.neighbors(x)
        .iter()
        .find(|w| !not.contains(w))
        .expect("cubic vertex has a third neighbour")
}

/// Grows the cut `{e1, e2}` into the maximal ladder around it.
pub fn ladder_decomposition(g: &Graph, cut: (Edge, Edge)) -> Result<Ladder, StructureError> {
    if !g.is_cubic() {
        return Err(StructureError::NotCubic);
    }
    let (e1, e2) = cut;
    let h = g.without_edges(&[e1, e2]);
    let comps = h.components();
    if comps.len() != 2 {
        return Err(StructureError::NotACut(e1, e2));
    }
    let side_a = &comps[0];
    let in_a = |x: Vertex| side_a.binary_search(&x).is_ok();
    let orient = |e: Edge| if in_a(e.0) { (e.0, e.1) } else { (e.1, e.0) };
    let (p1, q1) = orient(e1);
    let (p2, q2) = orient(e2);
    if in_a(q1) || in_a(q2) {
        return Err(StructureError::NotACut(e1, e2));
    }
    let mut u = std::collections::VecDeque::from([p1, q1]);
    let mut v = std::collections::VecDeque::from([p2, q2]);
    let limit = g.n();
    while g.has_edge(u[0], v[0]) {
        let a = third_neighbor(g, u[0], [v[0], u[1]]);
        let b = third_neighbor(g, v[0], [u[0], v[1]]);
        if a == b || u.contains(&a) || v.contains(&b) || u.len() > limit {
            return Err(StructureError::ClosedLadder);
        }
        u.push_front(a);
        v.push_front(b);
    }
    loop {
        let (s, t) = (u.len() - 1, v.len() - 1);
        if !g.has_edge(u[s], v[t]) {
            break;
        }
        let a = third_neighbor(g, u[s], [v[t], u[s - 1]]);
        let b = third_neighbor(g, v[t], [u[s], v[t - 1]]);
        if a == b || u.contains(&a) || v.contains(&b) || u.len() > limit {
            return Err(StructureError::ClosedLadder);
        }
        u.push_back(a);
        v.push_back(b);
    }
    let u: Vec<Vertex> = u.into();
    let v: Vec<Vertex> = v.into();
    let s = u.len() - 1;
    let near = g.without_edges(&[Edge::new(u[0], u[1]), Edge::new(v[0], v[1])]);
    let g1 = near
        .components()
        .into_iter()
        .find(|c| c.contains(&u[0]))
        .unwrap_or_default();
    let far = g.without_edges(&[Edge::new(u[s - 1], u[s]), Edge::new(v[s - 1], v[s])]);
    let g2 = far
        .components()
        .into_iter()
        .find(|c| c.contains(&u[s]))
        .unwrap_or_default();
    if !g1.contains(&v[0]) || !g2.contains(&v[s]) {
        return Err(StructureError::NotACut(e1, e2));
    }
    Ok(Ladder { g1, g2, u, v })
}

/// An induced copy of K4 minus the edge `ab`; `c` and `d` are adjacent to
/// each other and to both of `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct K4Minus {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub d: Vertex,
}

impl K4Minus {
    pub fn vertices(&self) -> [Vertex; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn edges(&self) -> [Edge; 5] {
        let K4Minus { a, b, c, d } = *self;
        [
            Edge::new(a, c),
            Edge::new(a, d),
            Edge::new(b, c),
            Edge::new(b, d),
            Edge::new(c, d),
        ]
    }
}

/// Induced K4- subgraphs, with `a < b` and `c < d`, ordered by `(c, d)`.
pub fn induced_k4_minus(g: &Graph) -> Vec<K4Minus> {
    let mut out = Vec::new();
    for &Edge(c, d) in g.edges() {
        let common: Vec<Vertex> = g
            .neighbors(c)
            .iter()
            .copied()
            .filter(|&x| x != d && g.has_edge(x, d))
            .collect();
        for i in 0..common.len() {
            for j in i + 1..common.len() {
                let (a, b) = (common[i], common[j]);
                if g.has_edge(a, b) {
                    continue;
                }
                // the pair {c, d} must be the only adjacent pair with both
                // others as common neighbours
                out.push(K4Minus { a, b, c, d });
            }
        }
    }
    out
}

/// Edge connectivity capped at 3 (0 for disconnected graphs).
pub fn edge_connectivity_capped(g: &Graph) -> usize {
    if !g.is_connected() {
        return 0;
    }
    if !bridges(g).is_empty() {
        return 1;
    }
    match find_2_edge_cut(g) {
        Ok(Some(_)) => 2,
        _ => 3,
    }
}

/// Vertex connectivity capped at 3, by brute-force deletion of one or two
/// vertices. Complete graphs report `min(n - 1, 3)`.
pub fn vertex_connectivity_capped(g: &Graph) -> usize {
    let n = g.n();
    if !g.is_connected() {
        return 0;
    }
    let remains_connected = |gone: &[Vertex]| {
        let keep: Vec<Vertex> = (0..n).filter(|v| !gone.contains(v)).collect();
        g.induced_subgraph(&keep).0.is_connected()
    };
    for a in 0..n {
        if n > 2 && !remains_connected(&[a]) {
            return 1;
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if n > 3 && !remains_connected(&[a, b]) {
                return 2;
            }
        }
    }
    3.min(n.saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles_bridged() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// K4 with edge 0-1 subdivided by a new vertex 4.
    fn subdivided_k4(offset: usize) -> Vec<(usize, usize)> {
        [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
            .iter()
            .map(|&(a, b)| (a + offset, b + offset))
            .collect()
    }

    #[test]
    fn triangles_joined_by_bridge() {
        let d = block_decomposition(&two_triangles_bridged());
        assert_eq!(d.bridges, vec![Edge(2, 3)]);
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(d.blocks_partition(6));
    }

    #[test]
    fn k4_single_block() {
        let d = block_decomposition(&k4());
        assert!(d.bridges.is_empty());
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn path_has_only_bridges() {
        let p = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = block_decomposition(&p);
        assert_eq!(d.bridges.len(), 3);
        assert!(d.blocks.is_empty());
        assert_eq!(d.block_of(1), None);
    }

    #[test]
    fn two_edge_cut_between_subdivided_k4s() {
        // two copies of K4 with one subdivided edge... joined at their degree-2
        // vertices would give a bridge; instead delete an edge of a K4 and join
        // the two degree-2 vertices of each copy across.
        let k4e = |o: usize| vec![(o, o + 2), (o, o + 3), (o + 1, o + 2), (o + 1, o + 3), (o + 2, o + 3)];
        let mut edges = k4e(0);
        edges.extend(k4e(4));
        edges.extend([(0, 4), (1, 5)]);
        let g = Graph::new(8, edges).unwrap();
        assert!(g.is_cubic());
        assert_eq!(find_2_edge_cut(&g).unwrap(), Some((Edge(0, 4), Edge(1, 5))));
        let l = ladder_decomposition(&g, (Edge(0, 4), Edge(1, 5))).unwrap();
        assert_eq!(l.s(), 1);
        assert_eq!((l.u.clone(), l.v.clone()), (vec![0, 4], vec![1, 5]));
        assert_eq!(l.g1, vec![0, 1, 2, 3]);
        assert_eq!(l.g2, vec![4, 5, 6, 7]);
    }

    #[test]
    fn two_edge_cut_precondition() {
        assert_eq!(
            find_2_edge_cut(&two_triangles_bridged()),
            Err(StructureError::HasBridge(Edge(2, 3)))
        );
        assert_eq!(find_2_edge_cut(&k4()), Ok(None));
    }

    #[test]
    fn ladder_extends_through_rungs() {
        // G1 = K4 - e on {0,1,2,3} (0,1 nonadjacent), rung 4-5, G2 = K4 - e on {6..9}
        let mut edges = vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(6, 8), (6, 9), (7, 8), (7, 9), (8, 9)]);
        edges.extend([(0, 4), (1, 5), (4, 5), (4, 6), (5, 7)]);
        let g = Graph::new(10, edges).unwrap();
        assert!(g.is_cubic());
        let cut = find_2_edge_cut(&g).unwrap().unwrap();
        let l = ladder_decomposition(&g, cut).unwrap();
        assert_eq!(l.s(), 2);
        assert_eq!(l.u, vec![0, 4, 6]);
        assert_eq!(l.v, vec![1, 5, 7]);
        assert_eq!(l.g1, vec![0, 1, 2, 3]);
        assert_eq!(l.g2, vec![6, 7, 8, 9]);
        assert_eq!(l.reversed().u, vec![6, 4, 0]);
    }

    #[test]
    fn k4_minus_found_once() {
        let g = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(induced_k4_minus(&g), vec![K4Minus { a: 0, b: 1, c: 2, d: 3 }]);
        assert!(induced_k4_minus(&k4()).is_empty());
    }

    #[test]
    fn bridge_between_subdivided_k4s() {
        let mut e = subdivided_k4(0);
        e.extend(subdivided_k4(5));
        e.push((4, 9));
        let g = Graph::new(10, e).unwrap();
        assert!(g.is_cubic());
        assert_eq!(bridges(&g), vec![Edge(4, 9)]);
        assert_eq!(edge_connectivity_capped(&g), 1);
        assert_eq!(vertex_connectivity_capped(&g), 1);
    }
}
