//! Local graph edits. Each returns the new graph and a [`SurgeryRecord`]
//! mapping vertex indices across the edit.
//!
//! Index conventions: vertices created by a surgery are appended (`n`,
//! `n + 1`, ...); deleted vertices are removed and the survivors keep their
//! relative order.

use super::{Edge, Graph, GraphError, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Surgery {
    /// Replace `e` by a path through a new vertex.
    SubdivideEdge(Edge),
    /// Remove a degree-2 vertex with nonadjacent neighbours and join them.
    SuppressVertex(Vertex),
    /// Delete `ab` (both ends of degree 2) and add new `c, d` adjacent to
    /// `a`, `b` and each other.
    PasteK4Minus { a: Vertex, b: Vertex },
    /// Triangle `abc` with `deg a = deg b = 3`, `deg c = 2`: subdivide `ab`
    /// with a new vertex `d` and add `cd`.
    AugmentTriangle { a: Vertex, b: Vertex, c: Vertex },
    /// Identify `here` with vertex `there` of `other`. The vertices of
    /// `other` other than `there` are appended in order.
    GlueAtVertex {
        other: Graph,
        here: Vertex,
        there: Vertex,
    },
    AddEdge(Edge),
    DeleteEdges(Vec<Edge>),
    DeleteVertices(Vec<Vertex>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurgeryKind {
    SubdivideEdge,
    SuppressVertex,
    PasteK4Minus,
    AugmentTriangle,
    GlueAtVertex,
    AddEdge,
    DeleteEdges,
    DeleteVertices,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("{0:?} is not an edge")]
    MissingEdge(Edge),
    #[error("{0:?} is already an edge")]
    EdgeExists(Edge),
    #[error("vertex {0} out of range")]
    NoSuchVertex(Vertex),
    #[error("vertex {v} has degree {got}, expected {want}")]
    Degree { v: Vertex, got: usize, want: usize },
    #[error("neighbours {0} and {1} of the suppressed vertex are adjacent")]
    AdjacentNeighbours(Vertex, Vertex),
    #[error("{0}, {1}, {2} do not form a triangle")]
    NotATriangle(Vertex, Vertex, Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Index bookkeeping for one surgery. `surgery` keeps the arguments in the
/// input graph's indices; `added` lists the created vertices in the output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryRecord {
    pub surgery: Surgery,
    pub old_to_new: Vec<Option<Vertex>>,
    pub new_to_old: Vec<Option<Vertex>>,
    pub added: Vec<Vertex>,
    /// For gluing: the index in the output of each vertex of `other`.
    pub other_to_new: Vec<Vertex>,
}

impl SurgeryRecord {
    fn identity(surgery: Surgery, n_old: usize, n_new: usize) -> SurgeryRecord {
        let old_to_new = (0..n_old).map(Some).collect();
        let new_to_old = (0..n_new).map(|v| (v < n_old).then_some(v)).collect();
        SurgeryRecord {
            surgery,
            old_to_new,
            new_to_old,
            added: (n_old..n_new).collect(),
            other_to_new: Vec::new(),
        }
    }

    fn compacting(surgery: Surgery, n_old: usize, gone: &[Vertex]) -> SurgeryRecord {
        let mut old_to_new = vec![None; n_old];
        let mut new_to_old = Vec::new();
        for (v, slot) in old_to_new.iter_mut().enumerate() {
            if !gone.contains(&v) {
                *slot = Some(new_to_old.len());
                new_to_old.push(Some(v));
            }
        }
        SurgeryRecord {
            surgery,
            old_to_new,
            new_to_old,
            added: Vec::new(),
            other_to_new: Vec::new(),
        }
    }

    pub fn kind(&self) -> SurgeryKind {
        self.surgery.kind()
    }

    /// Output index of an input vertex. Panics if the vertex was deleted.
    pub fn new_of(&self, v: Vertex) -> Vertex {
        self.old_to_new[v].expect("vertex survives the surgery")
    }

    /// Input index of an output vertex, `None` for created vertices.
    pub fn old_of(&self, v: Vertex) -> Option<Vertex> {
        self.new_to_old[v]
    }
}

impl Surgery {
    pub fn kind(&self) -> SurgeryKind {
        match self {
            Surgery::SubdivideEdge(_) => SurgeryKind::SubdivideEdge,
            Surgery::SuppressVertex(_) => SurgeryKind::SuppressVertex,
            Surgery::PasteK4Minus { .. } => SurgeryKind::PasteK4Minus,
            Surgery::AugmentTriangle { .. } => SurgeryKind::AugmentTriangle,
            Surgery::GlueAtVertex { .. } => SurgeryKind::GlueAtVertex,
            Surgery::AddEdge(_) => SurgeryKind::AddEdge,
            Surgery::DeleteEdges(_) => SurgeryKind::DeleteEdges,
            Surgery::DeleteVertices(_) => SurgeryKind::DeleteVertices,
        }
    }

    pub fn apply(&self, g: &Graph) -> Result<(Graph, SurgeryRecord), SurgeryError> {
        let n = g.n();
        let check_v = |v: Vertex| if v < n { Ok(()) } else { Err(SurgeryError::NoSuchVertex(v)) };
        let need_edge = |e: Edge| {
            check_v(e.1)?;
            if g.has_edge(e.0, e.1) {
                Ok(())
            } else {
                Err(SurgeryError::MissingEdge(e))
            }
        };
        let need_degree = |v: Vertex, want: usize| {
            let got = g.degree(v);
            if got == want {
                Ok(())
            } else {
                Err(SurgeryError::Degree { v, got, want })
            }
        };
        let edges = g.edges().iter().copied();
        match self {
            &Surgery::SubdivideEdge(e) => {
                let e = Edge::new(e.0, e.1);
                need_edge(e)?;
                let out = Graph::new(
                    n + 1,
                    edges
                        .filter(|&f| f != e)
                        .chain([Edge(e.0, n), Edge(e.1, n)]),
                )?;
                Ok((out, SurgeryRecord::identity(self.clone(), n, n + 1)))
            }
            &Surgery::SuppressVertex(c) => {
                check_v(c)?;
                need_degree(c, 2)?;
                let (a, b) = (g.neighbors(c)[0], g.neighbors(c)[1]);
                if g.has_edge(a, b) {
                    return Err(SurgeryError::AdjacentNeighbours(a, b));
                }
                let rec = SurgeryRecord::compacting(self.clone(), n, &[c]);
                let map = |v: Vertex| rec.old_to_new[v].unwrap();
                let out = Graph::new(
                    n - 1,
                    edges
                        .filter(|e| !e.contains(c))
                        .map(|Edge(u, v)| Edge::new(map(u), map(v)))
                        .chain([Edge::new(map(a), map(b))]),
                )?;
                Ok((out, rec))
            }
            &Surgery::PasteK4Minus { a, b } => {
                let ab = Edge::new(a, b);
                need_edge(ab)?;
                need_degree(a, 2)?;
                need_degree(b, 2)?;
                let (c, d) = (n, n + 1);
                let out = Graph::new(
                    n + 2,
                    edges.filter(|&f| f != ab).chain([
                        Edge::new(a, c),
                        Edge::new(a, d),
                        Edge::new(b, c),
                        Edge::new(b, d),
                        Edge(c, d),
                    ]),
                )?;
                Ok((out, SurgeryRecord::identity(self.clone(), n, n + 2)))
            }
            &Surgery::AugmentTriangle { a, b, c } => {
                for v in [a, b, c] {
                    check_v(v)?;
                }
                if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
                    return Err(SurgeryError::NotATriangle(a, b, c));
                }
                need_degree(a, 3)?;
                need_degree(b, 3)?;
                need_degree(c, 2)?;
                let ab = Edge::new(a, b);
                let d = n;
                let out = Graph::new(
                    n + 1,
                    edges
                        .filter(|&f| f != ab)
                        .chain([Edge::new(a, d), Edge::new(b, d), Edge::new(c, d)]),
                )?;
                Ok((out, SurgeryRecord::identity(self.clone(), n, n + 1)))
            }
            Surgery::GlueAtVertex { other, here, there } => {
                check_v(*here)?;
                if *there >= other.n() {
                    return Err(SurgeryError::NoSuchVertex(*there));
                }
                let mut other_to_new = Vec::with_capacity(other.n());
                let mut next = n;
                for v in 0..other.n() {
                    if v == *there {
                        other_to_new.push(*here);
                    } else {
                        other_to_new.push(next);
                        next += 1;
                    }
                }
                let out = Graph::new(
                    next,
                    edges.chain(
                        other
                            .edges()
                            .iter()
                            .map(|&Edge(u, v)| Edge::new(other_to_new[u], other_to_new[v])),
                    ),
                )?;
                let mut rec = SurgeryRecord::identity(self.clone(), n, next);
                rec.other_to_new = other_to_new;
                Ok((out, rec))
            }
            &Surgery::AddEdge(e) => {
                let e = Edge::new(e.0, e.1);
                check_v(e.1)?;
                if g.has_edge(e.0, e.1) {
                    return Err(SurgeryError::EdgeExists(e));
                }
                let out = g.with_edges(&[e])?;
                Ok((out, SurgeryRecord::identity(self.clone(), n, n)))
            }
            Surgery::DeleteEdges(list) => {
                let list: Vec<Edge> = list.iter().map(|e| Edge::new(e.0, e.1)).collect();
                for &e in &list {
                    need_edge(e)?;
                }
                Ok((
                    g.without_edges(&list),
                    SurgeryRecord::identity(self.clone(), n, n),
                ))
            }
            Surgery::DeleteVertices(list) => {
                for &v in list {
                    check_v(v)?;
                }
                let rec = SurgeryRecord::compacting(self.clone(), n, list);
                let keep: Vec<Vertex> = rec.new_to_old.iter().map(|v| v.unwrap()).collect();
                Ok((g.induced_subgraph(&keep).0, rec))
            }
        }
    }

    /// Surgeries that undo this one on the output graph, applied in order.
    /// `None` for gluing, whose inverse is a vertex split.
    pub fn inverse(&self, g: &Graph, rec: &SurgeryRecord) -> Option<Vec<Surgery>> {
        let n = g.n();
        Some(match self {
            Surgery::SubdivideEdge(_) => vec![Surgery::SuppressVertex(n)],
            &Surgery::SuppressVertex(c) => {
                let (a, b) = (g.neighbors(c)[0], g.neighbors(c)[1]);
                // re-inserting `c` at its old index needs a relabelling, so
                // it is appended and the caller compares through the record
                vec![Surgery::SubdivideEdge(Edge::new(rec.new_of(a), rec.new_of(b)))]
            }
            &Surgery::PasteK4Minus { a, b } => vec![
                Surgery::DeleteVertices(vec![n, n + 1]),
                Surgery::AddEdge(Edge::new(a, b)),
            ],
            &Surgery::AugmentTriangle { a, b, .. } => vec![
                Surgery::DeleteVertices(vec![n]),
                Surgery::AddEdge(Edge::new(a, b)),
            ],
            Surgery::GlueAtVertex { .. } => return None,
            &Surgery::AddEdge(e) => vec![Surgery::DeleteEdges(vec![e])],
            Surgery::DeleteEdges(list) => list.iter().map(|&e| Surgery::AddEdge(e)).collect(),
            Surgery::DeleteVertices(_) => return None,
        })
    }
}

/// Applies a sequence of surgeries, returning the final graph.
pub fn apply_all(g: &Graph, steps: &[Surgery]) -> Result<Graph, SurgeryError> {
    let mut cur = g.clone();
    for s in steps {
        cur = s.apply(&cur)?.0;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn subdivide_k4_edge() {
        let (h, rec) = Surgery::SubdivideEdge(Edge(0, 1)).apply(&k4()).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(h.degree(4), 2);
        assert!(!h.has_edge(0, 1) && h.has_edge(0, 4) && h.has_edge(1, 4));
        assert_eq!(rec.added, vec![4]);
        assert!(h.is_23_graph());
    }

    #[test]
    fn suppress_middle_of_p3() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let (h, rec) = Surgery::SuppressVertex(1).apply(&p3).unwrap();
        assert_eq!(h, Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(rec.old_to_new, vec![Some(0), None, Some(1)]);
    }

    #[test]
    fn suppress_rejects_triangle_vertex() {
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            Surgery::SuppressVertex(1).apply(&tri).unwrap_err(),
            SurgeryError::AdjacentNeighbours(0, 2)
        );
    }

    #[test]
    fn paste_over_cycle_edge() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let (h, _) = Surgery::PasteK4Minus { a: 0, b: 1 }.apply(&c5).unwrap();
        assert_eq!(h.n(), 7);
        assert_eq!((h.degree(0), h.degree(1), h.degree(5), h.degree(6)), (3, 3, 3, 3));
        assert!(h.has_edge(5, 6) && !h.has_edge(0, 1));
        let err = Surgery::PasteK4Minus { a: 0, b: 1 }.apply(&k4()).unwrap_err();
        assert_eq!(err, SurgeryError::Degree { v: 0, got: 3, want: 2 });
    }

    #[test]
    fn augment_triangle_makes_k4_minus() {
        // triangle 0,1,2 with pendant edges at 0 and 1
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
        let (h, rec) = Surgery::AugmentTriangle { a: 0, b: 1, c: 2 }.apply(&g).unwrap();
        assert_eq!(rec.added, vec![5]);
        assert!(h.has_edge(2, 5) && h.has_edge(0, 5) && h.has_edge(1, 5) && !h.has_edge(0, 1));
        assert_eq!(h.degree(2), 3);
    }

    #[test]
    fn glue_two_paths_at_midpoints() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let s = Surgery::GlueAtVertex {
            other: p3.clone(),
            here: 1,
            there: 1,
        };
        let (h, rec) = s.apply(&p3).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(h.degree(1), 4);
        assert_eq!(rec.other_to_new, vec![3, 1, 4]);
    }

    #[test]
    fn inverse_of_paste_restores_graph() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let s = Surgery::PasteK4Minus { a: 0, b: 1 };
        let (h, rec) = s.apply(&c5).unwrap();
        let back = apply_all(&h, &s.inverse(&c5, &rec).unwrap()).unwrap();
        assert_eq!(back, c5);
    }
}
