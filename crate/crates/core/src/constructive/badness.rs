//! Recognition of triangle rings and bad graphs.

use super::ConstructError;
use crate::graph::structure::block_decomposition;
use crate::graph::{hamilton_cycle, Edge, Graph, Surgery, Vertex};
use serde::Serialize;

/// One subdivided ring edge: the edge in the hub before subdivision (in the
/// host's indices), its subdivision vertex and the attached order-5 block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attachment {
    pub edge: Edge,
    pub vertex: Vertex,
    pub block: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadnessReport {
    pub is_triangle_ring: bool,
    pub is_bad: bool,
    pub hub: Option<usize>,
    pub attachments: Vec<Attachment>,
}

impl BadnessReport {
    fn not_bad(hub: Option<usize>) -> BadnessReport {
        BadnessReport {
            is_triangle_ring: false,
            is_bad: false,
            hub,
            attachments: Vec::new(),
        }
    }
}

/// Triangles of a triangle ring, each as `(degree-2 vertex, a, b)`, or
/// `None` if `g` is not one.
pub fn ring_triangles(g: &Graph) -> Option<Vec<(Vertex, Vertex, Vertex)>> {
    let n = g.n();
    if n < 6 || !n.is_multiple_of(3) || !g.is_23_graph() || !g.is_connected() {
        return None;
    }
    let twos: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
    if twos.len() != n / 3 {
        return None;
    }
    let mut owner = vec![usize::MAX; n];
    let mut tris = Vec::new();
    for (t, &d) in twos.iter().enumerate() {
        let (a, b) = (g.neighbors(d)[0], g.neighbors(d)[1]);
        if !g.has_edge(a, b) || g.degree(a) != 3 || g.degree(b) != 3 {
            return None;
        }
        for v in [d, a, b] {
            if owner[v] != usize::MAX {
                return None;
            }
            owner[v] = t;
        }
        tris.push((d, a, b));
    }
    // contract the triangles; the external edges must form one cycle
    let k = tris.len();
    let mut deg = vec![0; k];
    for &(_, a, b) in &tris {
        for x in [a, b] {
            g.neighbors(x).iter().find(|&&y| owner[y] != owner[x])?;
            deg[owner[x]] += 1;
        }
    }
    if deg.iter().any(|&d| d != 2) {
        return None;
    }
    // connectivity of the contracted graph follows from connectivity of g
    Some(tris)
}

pub fn is_triangle_ring(g: &Graph) -> bool {
    ring_triangles(g).is_some()
}

/// Decides whether `g` is a bad graph by matching its block structure: one
/// hub of order at least 6, order-5 hamiltonian blocks each joined to a
/// degree-2 vertex of the hub by a bridge, and a hub that becomes a
/// triangle ring once those vertices are suppressed, with each suppressed
/// vertex sitting on an edge outside every triangle.
pub fn recognize_bad(g: &Graph) -> Result<BadnessReport, ConstructError> {
    if let Some(v) = g.vertices().find(|&v| !(2..=3).contains(&g.degree(v))) {
        return Err(ConstructError::Precondition(format!(
            "recognize_bad needs a {{2,3}}-graph; vertex {v} has degree {}",
            g.degree(v)
        )));
    }
    if !g.is_connected() {
        return Err(ConstructError::Precondition("recognize_bad needs a connected graph".into()));
    }
    let n = g.n();
    if !n.is_multiple_of(3) || n < 6 {
        return Ok(BadnessReport::not_bad(None));
    }
    let d = block_decomposition(g);
    if !d.blocks_partition(n) {
        return Ok(BadnessReport::not_bad(None));
    }
    let big: Vec<usize> = (0..d.blocks.len()).filter(|&i| d.blocks[i].len() != 5).collect();
    if big.len() != 1 || d.blocks[big[0]].len() < 6 {
        return Ok(BadnessReport::not_bad(None));
    }
    let hub = big[0];
    let hub_vertices = &d.blocks[hub];
    let in_triangle = |v: Vertex| {
        let nb = g.neighbors(v);
        (0..nb.len()).any(|i| (i + 1..nb.len()).any(|j| g.has_edge(nb[i], nb[j])))
    };
    // fast negative: a degree-2 hub vertex outside every triangle
    if hub_vertices.iter().any(|&v| g.degree(v) == 2 && !in_triangle(v)) {
        return Ok(BadnessReport::not_bad(Some(hub)));
    }
    if d.bridges.len() != d.blocks.len() - 1 {
        return Ok(BadnessReport::not_bad(Some(hub)));
    }
    let mut attachments = Vec::new();
    let mut seen_leaf = vec![false; d.blocks.len()];
    for &Edge(p, q) in &d.bridges {
        let (bp, bq) = (d.block_of(p).unwrap(), d.block_of(q).unwrap());
        let (x, y, leaf) = if bp == hub && bq != hub {
            (p, q, bq)
        } else if bq == hub && bp != hub {
            (q, p, bp)
        } else {
            return Ok(BadnessReport::not_bad(Some(hub)));
        };
        if seen_leaf[leaf] {
            return Ok(BadnessReport::not_bad(Some(hub)));
        }
        seen_leaf[leaf] = true;
        let block = d.blocks[leaf].clone();
        let (h, _) = g.induced_subgraph(&block);
        if hamilton_cycle(&h).is_none() || !h.is_23_graph() {
            return Ok(BadnessReport::not_bad(Some(hub)));
        }
        let nb: Vec<Vertex> = g.neighbors(x).iter().copied().filter(|&w| w != y).collect();
        attachments.push(Attachment {
            edge: Edge::new(nb[0], nb[1]),
            vertex: x,
            block,
        });
    }
    // suppress each attachment vertex inside the hub
    let (mut h, mut new_to_old) = g.induced_subgraph(hub_vertices);
    for a in &attachments {
        let local = new_to_old.iter().position(|&v| v == a.vertex).unwrap();
        match Surgery::SuppressVertex(local).apply(&h) {
            Ok((next, rec)) => {
                new_to_old = rec
                    .new_to_old
                    .iter()
                    .map(|o| new_to_old[o.expect("suppression creates no vertex")])
                    .collect();
                h = next;
            }
            Err(_) => return Ok(BadnessReport::not_bad(Some(hub))),
        }
    }
    let Some(tris) = ring_triangles(&h) else {
        return Ok(BadnessReport::not_bad(Some(hub)));
    };
    let local_of = |v: Vertex| new_to_old.iter().position(|&w| w == v);
    for a in &attachments {
        let (Some(u), Some(v)) = (local_of(a.edge.0), local_of(a.edge.1)) else {
            return Ok(BadnessReport::not_bad(Some(hub)));
        };
        let in_tri = tris.iter().any(|&(p, q, r)| {
            let t = [p, q, r];
            t.contains(&u) && t.contains(&v)
        });
        if in_tri || !h.has_edge(u, v) {
            return Ok(BadnessReport::not_bad(Some(hub)));
        }
    }
    Ok(BadnessReport {
        is_triangle_ring: attachments.is_empty(),
        is_bad: true,
        hub: Some(hub),
        attachments,
    })
}

/// `recognize_bad(g).is_bad` with a `false` for graphs outside its domain.
pub fn is_bad(g: &Graph) -> bool {
    recognize_bad(g).map(|r| r.is_bad).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{triangle_ring, FamilySpec};

    #[test]
    fn rings_are_bad() {
        for n in [6, 9, 12, 15] {
            let r = recognize_bad(&triangle_ring(n).unwrap()).unwrap();
            assert!(r.is_triangle_ring && r.is_bad, "n={n}");
        }
    }

    #[test]
    fn cubic_graphs_are_not_bad() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!recognize_bad(&k4).unwrap().is_bad);
        assert!(!recognize_bad(&crate::families::petersen()).unwrap().is_bad);
    }

    #[test]
    fn ring_with_one_attachment() {
        let g = FamilySpec::BadGraph {
            n: 6,
            subdivided: vec![0],
            block: 0,
        }
        .generate()
        .unwrap()
        .graph;
        assert_eq!(g.n(), 12);
        let r = recognize_bad(&g).unwrap();
        assert!(r.is_bad && !r.is_triangle_ring);
        assert_eq!(r.attachments.len(), 1);
        assert_eq!(r.attachments[0].edge, Edge(1, 2));
        assert_eq!(r.attachments[0].vertex, 6);
    }

    #[test]
    fn subdivided_cycle_is_not_a_ring() {
        let c9 = Graph::new(9, (0..9).map(|i| (i, (i + 1) % 9))).unwrap();
        assert!(!recognize_bad(&c9).unwrap().is_bad);
    }
}
