//! Connected cubic graphs.
//!
//! The reduction order is: exact solution up to order 6, a bridge, a
//! hamilton cycle, an induced K4- with nonadjacent outer neighbours, a
//! 2-edge cut, and finally a 2-factor with no short cycles.

use super::ham23::ham23;
use super::lift::lift;
use super::small::ipf_small_ham;
use super::twofactor::with_2factor;
use super::{checked, in_triangle, side_of, within, ConstructError, Sub, Trace};
use crate::exact::{best_ipf_where, rho_exhaustive};
use crate::graph::graph6::write_graph6;
use crate::graph::structure::{bridges, find_2_edge_cut, induced_k4_minus, ladder_decomposition, Ladder};
use crate::graph::{hamilton_cycle, two_factor_search, Edge, Graph, Surgery, SurgeryRecord, Vertex};
use crate::ipf::Ipf;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicBound {
    /// `(n-1)/3`, for order at least 8.
    NMinusOneThirds,
    /// `n/3`.
    NThirds,
    /// Two paths, for orders 4 and 6.
    Two,
}

impl CubicBound {
    pub fn for_order(n: usize) -> CubicBound {
        if n <= 6 {
            CubicBound::Two
        } else {
            CubicBound::NMinusOneThirds
        }
    }

    pub fn value(self, n: usize) -> usize {
        match self {
            CubicBound::NMinusOneThirds => (n - 1) / 3,
            CubicBound::NThirds => n / 3,
            CubicBound::Two => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CubicBound::NMinusOneThirds => "(n-1)/3",
            CubicBound::NThirds => "n/3",
            CubicBound::Two => "2",
        }
    }
}

impl Serialize for CubicBound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A checked IPF together with the reduction steps that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub graph6: String,
    pub n: usize,
    pub bound: CubicBound,
    pub ipf: Ipf,
    pub verified: bool,
    pub trace: Vec<String>,
}

impl Certificate {
    pub(crate) fn new(g: &Graph, bound: CubicBound, ipf: Ipf, trace: Trace) -> Certificate {
        let verified = Ipf::new(g, ipf.edges.clone()).is_ok() && ipf.path_count <= bound.value(g.n());
        Certificate {
            graph6: write_graph6(g).unwrap_or_default(),
            n: g.n(),
            bound,
            ipf,
            verified,
            trace: trace.steps,
        }
    }
}

/// An IPF of a connected cubic graph with at most `(n-1)/3` paths when
/// `n >= 8`, and two paths on orders 4 and 6.
pub fn ipf_cubic(g: &Graph) -> Result<Certificate, ConstructError> {
    if !g.is_cubic() || !g.is_connected() {
        return Err(ConstructError::Precondition(
            "needs a connected cubic graph".into(),
        ));
    }
    let mut trace = Trace::default();
    let ipf = cubic(g, &mut trace)?;
    Ok(Certificate::new(g, CubicBound::for_order(g.n()), ipf, trace))
}

fn recurse(g: &Graph, host_n: usize, trace: &mut Trace) -> Result<Ipf, ConstructError> {
    if g.n() >= host_n {
        return Err(ConstructError::Postcondition {
            step: "cubic reduction",
            what: format!("reduced graph of order {} is not smaller than {host_n}", g.n()),
        });
    }
    cubic(g, trace)
}

pub(crate) fn cubic(g: &Graph, trace: &mut Trace) -> Result<Ipf, ConstructError> {
    let n = g.n();
    if !g.is_cubic() || !g.is_connected() {
        return Err(ConstructError::Precondition(
            "needs a connected cubic graph".into(),
        ));
    }
    let bound = CubicBound::for_order(n).value(n);
    let p = if n <= 6 {
        trace.push("exact base case");
        rho_exhaustive(g).expect("order is tiny").witness
    } else if let Some(&e) = bridges(g).first() {
        trace.push("bridge");
        bridge(g, e, trace)?
    } else if hamilton_cycle(g).is_some() {
        ham23(g, trace)?
    } else if let Some(p) = k4_minus(g, trace)? {
        p
    } else if let Some(cut) = find_2_edge_cut(g).map_err(|e| ConstructError::Precondition(e.to_string()))? {
        trace.push("2-edge cut");
        let lad = ladder_decomposition(g, cut).map_err(|e| ConstructError::Precondition(e.to_string()))?;
        two_edge_cut(g, &lad, trace)?
    } else {
        let f = two_factor_search(g, 5, true)
            .map_err(|e| ConstructError::Precondition(e.to_string()))?
            .ok_or_else(|| ConstructError::Postcondition {
                step: "2-factor",
                what: "no 2-factor with all cycles of length at least 5".into(),
            })?;
        with_2factor(g, &f, trace)?
    };
    let p = checked(g, p.edges, "cubic")?;
    within(&p, bound, "cubic")?;
    Ok(p)
}

/// An IPF of one side of a bridge (odd order, `x` the only degree-2
/// vertex) with a path ending at `x` and at most `(n+1)/3` paths.
fn bridge_side(h: &Graph, x: Vertex, host_n: usize, trace: &mut Trace) -> Result<Ipf, ConstructError> {
    let n = h.n();
    let p = if n <= 7 {
        ipf_small_ham(h, Some(x))?
    } else {
        let surgery = match in_triangle(h, x) {
            Some((a, b)) => {
                trace.push("augment triangle");
                Surgery::AugmentTriangle { a, b, c: x }
            }
            None => {
                trace.push("suppress");
                Surgery::SuppressVertex(x)
            }
        };
        let (h2, rec) = surgery.apply(h)?;
        let p2 = recurse(&h2, host_n, trace)?;
        lift(h, &h2, &rec, &p2)?
    };
    within(&p, (n + 1) / 3, "bridge side")?;
    if !p.is_endpoint(x) {
        return Err(ConstructError::Postcondition {
            step: "bridge side",
            what: format!("{x} is not a path end"),
        });
    }
    Ok(p)
}

fn bridge(g: &Graph, e: Edge, trace: &mut Trace) -> Result<Ipf, ConstructError> {
    let Edge(x1, x2) = e;
    let mut edges = vec![e];
    for x in [x1, x2] {
        let side = Sub::of(g, &side_of(g, &[e], x));
        let p = bridge_side(&side.g, side.local(x), g.n(), trace)?;
        edges.extend(side.host_edges(&p));
    }
    checked(g, edges, "bridge")
}

/// Suppress `z` or augment its triangle.
fn reduce_at(h: &Graph, z: Vertex, trace: &mut Trace) -> Result<(Graph, SurgeryRecord), ConstructError> {
    let surgery = match in_triangle(h, z) {
        Some((a, b)) => {
            trace.push("augment triangle");
            Surgery::AugmentTriangle { a, b, c: z }
        }
        None => {
            trace.push("suppress");
            Surgery::SuppressVertex(z)
        }
    };
    Ok(surgery.apply(h)?)
}

fn k4_minus(g: &Graph, trace: &mut Trace) -> Result<Option<Ipf>, ConstructError> {
    let outer = |v: Vertex, not: [Vertex; 2]| *g.neighbors(v).iter().find(|w| !not.contains(w)).unwrap();
    let Some((h, x0, y0)) = induced_k4_minus(g).into_iter().find_map(|h| {
        let x0 = outer(h.a, [h.c, h.d]);
        let y0 = outer(h.b, [h.c, h.d]);
        (x0 != y0 && !g.has_edge(x0, y0)).then_some((h, x0, y0))
    }) else {
        return Ok(None);
    };
    trace.push("K4- reduction");
    let g0 = Sub::without(g, &h.vertices());
    let (g1, r1) = reduce_at(&g0.g, g0.local(x0), trace)?;
    let y_in_g1 = r1.old_to_new[g0.local(y0)].expect("y0 survives");
    let (g2, r2) = reduce_at(&g1, y_in_g1, trace)?;
    let p2 = recurse(&g2, g.n(), trace)?;
    let p1 = lift(&g1, &g2, &r2, &p2)?;
    let mut p0 = lift(&g0.g, &g1, &r1, &p1)?;
    let (lx, ly) = (g0.local(x0), g0.local(y0));
    if !p0.end_distinct_paths(lx, ly) {
        p0 = split_ends(&g0.g, &p0, lx, ly)?;
    }
    let mut edges = g0.host_edges(&p0);
    edges.extend([
        Edge::new(h.a, h.c),
        Edge::new(h.b, h.d),
        Edge::new(x0, h.a),
        Edge::new(y0, h.b),
    ]);
    checked(g, edges, "K4- reduction").map(Some)
}

/// `x` and `y` end the same path: move the path edge at `y` to its other
/// neighbour.
fn split_ends(g: &Graph, p: &Ipf, x: Vertex, y: Vertex) -> Result<Ipf, ConstructError> {
    let fail = |what: String| ConstructError::Postcondition {
        step: "K4- reduction",
        what,
    };
    if !p.is_endpoint(x) || !p.is_endpoint(y) {
        return Err(fail(format!("{x} and {y} are not both path ends")));
    }
    let u = *g
        .neighbors(y)
        .iter()
        .find(|&&w| p.contains(Edge::new(y, w)))
        .ok_or_else(|| fail(format!("{y} is isolated but shares a path with {x}")))?;
    let v = *g.neighbors(y).iter().find(|&&w| w != u).expect("degree 2");
    let mut edges: Vec<Edge> = p.edges.iter().copied().filter(|&e| e != Edge::new(y, u)).collect();
    edges.push(Edge::new(y, v));
    let q = checked(g, edges, "K4- reduction")?;
    if !q.end_distinct_paths(x, y) {
        return Err(fail(format!("{x} and {y} still share a path")));
    }
    Ok(q)
}

/// An IPF of one end of a ladder, which meets the ladder in the
/// nonadjacent degree-2 vertices `x`, `y`.
struct LadderSide {
    sub: Sub,
    ipf: Ipf,
    x: Vertex,
    y: Vertex,
}

impl LadderSide {
    fn build(g: &Graph, verts: &[Vertex], x: Vertex, y: Vertex, trace: &mut Trace) -> Result<LadderSide, ConstructError> {
        let sub = Sub::of(g, verts);
        let (lx, ly) = (sub.local(x), sub.local(y));
        let ni = verts.len();
        let ipf = if ni <= 6 {
            best_ipf_where(&sub.g, |p| p.end_distinct_paths(lx, ly))
                .expect("order is tiny")
                .ok_or_else(|| ConstructError::Postcondition {
                    step: "2-edge cut",
                    what: "small end has no IPF with the required ends".into(),
                })?
        } else {
            let closed = sub.g.with_edges(&[Edge::new(lx, ly)]).map_err(|e| {
                ConstructError::Precondition(format!("ladder end: {e}"))
            })?;
            let p = recurse(&closed, g.n(), trace)?;
            let edges = p.edges.iter().copied().filter(|&e| e != Edge::new(lx, ly)).collect();
            checked(&sub.g, edges, "2-edge cut")?
        };
        within(&ipf, ni.div_ceil(3), "2-edge cut")?;
        Ok(LadderSide { sub, ipf, x: lx, y: ly })
    }

    fn n(&self) -> usize {
        self.sub.g.n()
    }

    fn ends(&self) -> bool {
        self.ipf.end_distinct_paths(self.x, self.y)
    }

    fn small(&self) -> bool {
        3 * self.ipf.path_count < self.n()
    }

    /// Delete path edges so that `x` and `y` end distinct paths.
    fn cut_to_ends(&self) -> Result<Vec<Edge>, ConstructError> {
        let mut edges = self.ipf.edges.clone();
        for z in [self.x, self.y] {
            if let Some(i) = edges.iter().position(|e| e.contains(z)) {
                if edges.iter().filter(|e| e.contains(z)).count() == 2 {
                    edges.remove(i);
                }
            }
        }
        let mut p = checked(&self.sub.g, edges.clone(), "2-edge cut")?;
        if !p.end_distinct_paths(self.x, self.y) {
            let i = edges.iter().position(|e| e.contains(self.x)).expect("shares a path");
            edges.remove(i);
            p = checked(&self.sub.g, edges, "2-edge cut")?;
        }
        Ok(self.sub.host_edges(&p))
    }
}

fn path_edges(p: &[Vertex]) -> impl Iterator<Item = Edge> + '_ {
    p.windows(2).map(|w| Edge::new(w[0], w[1]))
}

fn two_edge_cut(g: &Graph, lad: &Ladder, trace: &mut Trace) -> Result<Ipf, ConstructError> {
    let s = lad.s();
    let one = LadderSide::build(g, &lad.g1, lad.u[0], lad.v[0], trace)?;
    let two = LadderSide::build(g, &lad.g2, lad.u[s], lad.v[s], trace)?;
    if one.ends() && two.ends() {
        let mut edges = one.sub.host_edges(&one.ipf);
        edges.extend(two.sub.host_edges(&two.ipf));
        edges.extend(path_edges(&lad.u));
        edges.extend(path_edges(&lad.v));
        return checked(g, edges, "2-edge cut");
    }
    // make the first end the one lacking distinct ends
    let (lad, one, two) = if one.ends() {
        (lad.reversed(), two, one)
    } else {
        (lad.clone(), one, two)
    };
    if !one.small() {
        return Err(ConstructError::Postcondition {
            step: "2-edge cut",
            what: "an end has neither distinct path ends nor few paths".into(),
        });
    }
    if s <= 2 && two.small() {
        let mut edges = one.sub.host_edges(&one.ipf);
        edges.extend(two.sub.host_edges(&two.ipf));
        if s == 2 {
            edges.push(Edge::new(lad.u[1], lad.v[1]));
        }
        return checked(g, edges, "2-edge cut");
    }
    let far = if two.ends() {
        two.sub.host_edges(&two.ipf)
    } else if two.small() && s >= 3 {
        two.cut_to_ends()?
    } else {
        return Err(ConstructError::Postcondition {
            step: "2-edge cut",
            what: "far end admits no combination".into(),
        });
    };
    // G1 plus the first rung, with a K4- pasted over that rung
    trace.push("paste K4-");
    let n1 = one.n();
    let (u1, v1) = (n1, n1 + 1);
    let mut extra = vec![Edge::new(one.x, u1), Edge::new(one.y, v1), Edge::new(u1, v1)];
    extra.extend(one.sub.g.edges().iter().copied());
    let open = Graph::new(n1 + 2, extra.iter().map(|e| (e.0, e.1))).map_err(|e| {
        ConstructError::Precondition(format!("ladder end: {e}"))
    })?;
    let (closed, rec) = Surgery::PasteK4Minus { a: u1, b: v1 }.apply(&open)?;
    let pc = recurse(&closed, g.n(), trace)?;
    let po = lift(&open, &closed, &rec, &pc)?;
    let name = |w: Vertex| {
        if w == u1 {
            lad.u[1]
        } else if w == v1 {
            lad.v[1]
        } else {
            one.sub.map[w]
        }
    };
    let mut edges: Vec<Edge> = po.edges.iter().map(|e| Edge::new(name(e.0), name(e.1))).collect();
    edges.extend(far);
    edges.extend(path_edges(&lad.u[1..]));
    edges.extend(path_edges(&lad.v[1..]));
    checked(g, edges, "2-edge cut")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{petersen, tietze};

    #[test]
    fn small_cubic_graphs() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = ipf_cubic(&k4).unwrap();
        assert!(c.verified);
        assert_eq!(c.bound.as_str(), "2");
    }

    #[test]
    fn petersen_and_tietze() {
        for g in [petersen(), tietze()] {
            let c = ipf_cubic(&g).unwrap();
            assert!(c.verified, "{:?}", c.trace);
            assert!(c.ipf.path_count <= (g.n() - 1) / 3);
        }
    }

    #[test]
    fn rejects_non_cubic() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(ipf_cubic(&c5).is_err());
    }
}
