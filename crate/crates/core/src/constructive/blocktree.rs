//! {2,3}-graphs whose blocks are hamiltonian, of order at least 5, and
//! partition the vertex set.

use super::badness::is_bad;
use super::ham23::ham23;
use super::lift::lift;
use super::small::ipf_small_ham;
use super::{checked, in_triangle, side_of, within, ConstructError, Sub, Trace};
use crate::graph::structure::{block_decomposition, BlockDecomposition};
use crate::graph::{hamilton_cycle, Edge, Graph, Surgery, Vertex};
use crate::ipf::{is_well_behaved, Ipf};

pub(crate) fn check_hypotheses(g: &Graph) -> Result<BlockDecomposition, String> {
    if g.n() < 6 {
        return Err(format!("order {} is below 6", g.n()));
    }
    if !g.is_23_graph() {
        return Err("not a {2,3}-graph".into());
    }
    if !g.is_connected() {
        return Err("not connected".into());
    }
    let d = block_decomposition(g);
    if !d.blocks_partition(g.n()) {
        return Err("blocks do not partition the vertices".into());
    }
    for b in &d.blocks {
        if b.len() < 5 {
            return Err(format!("block of order {}", b.len()));
        }
        let (h, _) = g.induced_subgraph(b);
        if hamilton_cycle(&h).is_none() {
            return Err("a block is not hamiltonian".into());
        }
    }
    Ok(d)
}

/// An IPF with at most `(n-1)/3` paths, or `n/3` for bad graphs and order
/// 6, in which every path is well behaved.
pub fn ipf_blocktree(g: &Graph) -> Result<Ipf, ConstructError> {
    blocktree(g, &mut Trace::default())
}

pub(crate) fn blocktree(g: &Graph, trace: &mut Trace) -> Result<Ipf, ConstructError> {
    let d = check_hypotheses(g).map_err(ConstructError::Precondition)?;
    let n = g.n();
    let bad = is_bad(g);
    let bound = if n >= 7 && !bad { (n - 1) / 3 } else { n / 3 };
    let p = build(g, &d, bad, trace)?;
    within(&p, bound, "block tree")?;
    let wb = is_well_behaved(g, &p, &[]).map_err(|source| ConstructError::Invalid {
        step: "block tree",
        source,
    })?;
    if !wb.verdict {
        return Err(ConstructError::Postcondition {
            step: "block tree",
            what: format!("path {:?} is not well behaved", wb.witnesses[0].path),
        });
    }
    Ok(p)
}

struct Side {
    bridge: Edge,
    x1: Vertex,
    x2: Vertex,
    s1: Vec<Vertex>,
    s2: Vec<Vertex>,
    bad1: bool,
    bad2: bool,
}

fn build(g: &Graph, d: &BlockDecomposition, bad: bool, trace: &mut Trace) -> Result<Ipf, ConstructError> {
    let n = g.n();
    if d.blocks.len() == 1 {
        return ham23(g, trace);
    }
    let sides: Vec<Side> = d
        .bridges
        .iter()
        .map(|&e| {
            let Edge(x1, x2) = e;
            let s1 = side_of(g, &[e], x1);
            let s2 = side_of(g, &[e], x2);
            let bad1 = s1.len() >= 6 && is_bad(&Sub::of(g, &s1).g);
            let bad2 = s2.len() >= 6 && is_bad(&Sub::of(g, &s2).g);
            Side { bridge: e, x1, x2, s1, s2, bad1, bad2 }
        })
        .collect();

    if d.blocks.len() == 2 && n <= 12 {
        trace.push("two small blocks");
        let s = &sides[0];
        let (b1, b2) = (Sub::of(g, &s.s1), Sub::of(g, &s.s2));
        let p1 = ipf_small_ham(&b1.g, Some(b1.local(s.x1)))?;
        let p2 = ipf_small_ham(&b2.g, Some(b2.local(s.x2)))?;
        let mut edges = b1.host_edges(&p1);
        edges.extend(b2.host_edges(&p2));
        edges.push(s.bridge);
        return checked(g, edges, "two small blocks");
    }

    // a bridge with a large good side and a side of order at least 6
    for s in &sides {
        let (n1, n2) = (s.s1.len(), s.s2.len());
        if (n1 >= 7 && !s.bad1 && n2 >= 6) || (n2 >= 7 && !s.bad2 && n1 >= 6) {
            trace.push("bridge split");
            let (b1, b2) = (Sub::of(g, &s.s1), Sub::of(g, &s.s2));
            let p1 = blocktree(&b1.g, trace)?;
            let p2 = blocktree(&b2.g, trace)?;
            let mut edges = b1.host_edges(&p1);
            edges.extend(b2.host_edges(&p2));
            return checked(g, edges, "bridge split");
        }
    }

    // both sides of some bridge are large, and each is bad or of order 6
    for s in sides.iter().filter(|s| s.s1.len() >= 6 && s.s2.len() >= 6) {
        let (x1, x2, s1, s2) = if s.s1.len() != 6 {
            (s.x1, s.x2, &s.s1, &s.s2)
        } else {
            (s.x2, s.x1, &s.s2, &s.s1)
        };
        let g1 = Sub::of(g, s1);
        let g2 = Sub::of(g, s2);
        let hub_tip = |h: &Sub, x: Vertex| {
            let bd = block_decomposition(&h.g);
            let lx = h.local(x);
            in_triangle(&h.g, lx).is_some()
                && bd.block_of(lx).is_some_and(|b| bd.blocks[b].len() >= 6)
        };
        if !hub_tip(&g1, x1) || (s2.len() != 6 && !hub_tip(&g2, x2)) {
            continue;
        }
        trace.push("bad hubs across a bridge");
        let r1 = Sub::without(g, &complement_plus(g, s1, x1));
        let p1 = blocktree(&r1.g, trace)?;
        let mut edges = r1.host_edges(&p1);
        if s2.len() == 6 {
            let p2 = ipf_small_ham(&g2.g, Some(g2.local(x2)))?;
            edges.extend(g2.host_edges(&p2));
        } else {
            let r2 = Sub::without(g, &complement_plus(g, s2, x2));
            let p2 = blocktree(&r2.g, trace)?;
            edges.extend(r2.host_edges(&p2));
        }
        edges.push(Edge::new(x1, x2));
        return checked(g, edges, "bad hubs across a bridge");
    }

    star(g, d, &sides, bad, trace)
}

/// Vertices outside `side`, plus `x`.
fn complement_plus(g: &Graph, side: &[Vertex], x: Vertex) -> Vec<Vertex> {
    g.vertices().filter(|v| !side.contains(v) || *v == x).collect()
}

/// Every bridge cuts off a single order-5 block: a centre block with leaves.
fn star(
    g: &Graph,
    d: &BlockDecomposition,
    sides: &[Side],
    bad: bool,
    trace: &mut Trace,
) -> Result<Ipf, ConstructError> {
    // (x in the centre, y in the leaf, leaf vertices), sorted by x
    let mut leaves: Vec<(Vertex, Vertex, Vec<Vertex>)> = Vec::new();
    for s in sides {
        let (x, y, leaf) = match (s.s1.len(), s.s2.len()) {
            (_, 5) => (s.x1, s.x2, s.s2.clone()),
            (5, _) => (s.x2, s.x1, s.s1.clone()),
            _ => {
                return Err(ConstructError::Postcondition {
                    step: "block star",
                    what: format!("bridge {:?} separates no order-5 block", s.bridge),
                })
            }
        };
        leaves.push((x, y, leaf));
    }
    leaves.sort();
    let centre = d.block_of(leaves[0].0).expect("partitioned");
    let leaf_ipf = |y: Vertex, leaf: &[Vertex]| -> Result<Vec<Edge>, ConstructError> {
        let l = Sub::of(g, leaf);
        let p = ipf_small_ham(&l.g, Some(l.local(y)))?;
        Ok(l.host_edges(&p))
    };

    // two attachment vertices adjacent in the centre
    for i in 0..leaves.len() {
        for j in i + 1..leaves.len() {
            let (xi, yi, li) = &leaves[i];
            let (xj, yj, lj) = &leaves[j];
            if !g.has_edge(*xi, *xj) {
                continue;
            }
            trace.push("adjacent attachments");
            let drop: Vec<Vertex> = li.iter().chain(lj.iter()).copied().collect();
            let g0 = Sub::without(g, &drop);
            let (a, b) = (g0.local(*xi), g0.local(*xj));
            let (g0p, rec) = Surgery::PasteK4Minus { a, b }.apply(&g0.g)?;
            trace.push("paste K4-");
            let p0p = blocktree(&g0p, trace)?;
            let p0 = lift(&g0.g, &g0p, &rec, &p0p)?;
            let mut edges = g0.host_edges(&p0);
            edges.extend(leaf_ipf(*yi, li)?);
            edges.extend(leaf_ipf(*yj, lj)?);
            edges.push(Edge::new(*xi, *yi));
            edges.push(Edge::new(*xj, *yj));
            return checked(g, edges, "adjacent attachments");
        }
    }

    if d.blocks[centre].len() == 5 {
        trace.push("order-5 centre");
        if leaves.len() != 2 {
            return Err(ConstructError::Postcondition {
                step: "order-5 centre",
                what: format!("{} leaves on an order-5 centre", leaves.len()),
            });
        }
        let (x1, y1, l1) = &leaves[0];
        let (x2, y2, l2) = &leaves[1];
        let c = Sub::of(g, &d.blocks[centre]);
        let cyc = super::small::hamilton_cycles_from(&c.g, c.local(*x1))
            .into_iter()
            .find(|cyc| c.map[cyc[2]] == *x2)
            .ok_or_else(|| ConstructError::Postcondition {
                step: "order-5 centre",
                what: "attachments are not two apart on a hamilton cycle".into(),
            })?;
        let (u, v, w) = (c.map[cyc[1]], c.map[cyc[3]], c.map[cyc[4]]);
        let mut edges = leaf_ipf(*y1, l1)?;
        edges.extend(leaf_ipf(*y2, l2)?);
        edges.extend([
            Edge::new(*x1, *y1),
            Edge::new(*x2, *y2),
            Edge::new(u, *x1),
            Edge::new(u, *x2),
            Edge::new(v, w),
        ]);
        return checked(g, edges, "order-5 centre");
    }

    if let Some((x, y, leaf)) = leaves.iter().find(|(x, _, _)| in_triangle(g, *x).is_some()) {
        trace.push("attachment in a triangle");
        let mut drop = leaf.clone();
        drop.push(*x);
        let g0 = Sub::without(g, &drop);
        let p0 = blocktree(&g0.g, trace)?;
        let mut edges = g0.host_edges(&p0);
        edges.extend(leaf_ipf(*y, leaf)?);
        edges.push(Edge::new(*x, *y));
        return checked(g, edges, "attachment in a triangle");
    }

    trace.push("suppress attachment");
    let (x, y, leaf) = &leaves[0];
    let g0 = Sub::without(g, leaf);
    let (g0p, rec) = Surgery::SuppressVertex(g0.local(*x)).apply(&g0.g)?;
    let p0p = blocktree(&g0p, trace)?;
    let p0 = lift(&g0.g, &g0p, &rec, &p0p)?;
    let mut edges = g0.host_edges(&p0);
    edges.extend(leaf_ipf(*y, leaf)?);
    edges.push(Edge::new(*x, *y));
    let first = checked(g, edges, "suppress attachment")?;
    if bad || !is_bad(&g0p) {
        return Ok(first);
    }

    // the suppressed graph is bad although g is not
    let tip = g
        .neighbors(*x)
        .iter()
        .copied()
        .find(|&w| w != *y && g.degree(w) == 2);
    let mut drop = leaf.clone();
    drop.push(*x);
    let mut tail = vec![Edge::new(*x, *y)];
    if let Some(v) = tip {
        trace.push("bad repair on the cycle");
        drop.push(v);
        tail.push(Edge::new(v, *x));
    } else {
        trace.push("bad repair off the cycle");
    }
    let g2 = Sub::without(g, &drop);
    let p2 = blocktree(&g2.g, trace)?;
    let mut edges = g2.host_edges(&p2);
    edges.extend(leaf_ipf(*y, leaf)?);
    edges.extend(tail);
    checked(g, edges, "bad repair")
}
