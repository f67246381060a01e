//! {2,3}-graphs with a 2-factor whose cycles all have length at least 5.

use super::badness::{is_bad, recognize_bad};
use super::blocktree::{blocktree, check_hypotheses};
use super::{checked, within, ConstructError, Trace};
use crate::graph::structure::block_decomposition;
use crate::graph::{Edge, Graph, TwoFactor};
use crate::ipf::Ipf;

/// An IPF of `g` with at most `(n-1)/3` paths (`n/3` if `g` is bad), built
/// from a 2-factor `f` with every cycle of length at least 5.
///
/// Edges between cycles are deleted until only a spanning tree of them
/// remains; the result has hamiltonian blocks and is handled block by block.
pub fn ipf_23_with_2factor(g: &Graph, f: &TwoFactor) -> Result<Ipf, ConstructError> {
    with_2factor(g, f, &mut Trace::default())
}

pub(crate) fn with_2factor(g: &Graph, f: &TwoFactor, trace: &mut Trace) -> Result<Ipf, ConstructError> {
    let n = g.n();
    if n < 7 || !g.is_23_graph() || !g.is_connected() {
        return Err(ConstructError::Precondition(
            "2-factor construction needs a connected {2,3}-graph of order at least 7".into(),
        ));
    }
    if !f.is_valid_for(g) || f.min_cycle_len() < 5 {
        return Err(ConstructError::Precondition(
            "not a 2-factor with cycles of length at least 5".into(),
        ));
    }
    let bound = if is_bad(g) { n / 3 } else { (n - 1) / 3 };
    if check_hypotheses(g).is_ok() {
        trace.push("blocks already hamiltonian");
        let p = blocktree(g, trace)?;
        within(&p, bound, "2-factor")?;
        return Ok(p);
    }
    trace.push("2-factor");
    let cycle = f.cycle_of(n);
    let between: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| cycle[e.0] != cycle[e.1])
        .collect();
    // keep a spanning tree of the cycles, in lexicographic edge order
    let mut parent: Vec<usize> = (0..f.len()).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut removed = Vec::new();
    for &e in &between {
        let (a, b) = (root(&mut parent, cycle[e.0]), root(&mut parent, cycle[e.1]));
        if a == b {
            removed.push(e);
        } else {
            parent[a] = b;
        }
    }
    let mut h = g.without_edges(&removed);
    if is_bad(&h) {
        // reconnect one removed edge and cut the bridge of a leaf it touches
        trace.push("2-factor swap");
        let report = recognize_bad(&h)?;
        let d = block_decomposition(&h);
        let hub = report.hub.expect("bad graphs have a hub");
        let &uv = removed.first().ok_or_else(|| ConstructError::Postcondition {
            step: "2-factor swap",
            what: "bad graph but no removed edge".into(),
        })?;
        let u = if d.block_of(uv.0) != Some(hub) { uv.0 } else { uv.1 };
        let leaf = d.block_of(u).expect("partitioned");
        let bridge = report
            .attachments
            .iter()
            .find(|a| d.block_of(a.block[0]) == Some(leaf))
            .map(|a| {
                let y = *h
                    .neighbors(a.vertex)
                    .iter()
                    .find(|w| d.block_of(**w) == Some(leaf))
                    .expect("attachment edge");
                Edge::new(a.vertex, y)
            })
            .ok_or_else(|| ConstructError::Postcondition {
                step: "2-factor swap",
                what: format!("no hub bridge into the block of {u}"),
            })?;
        h = h.with_edges(&[uv]).expect("was an edge of g").without_edges(&[bridge]);
        if is_bad(&h) {
            return Err(ConstructError::Postcondition {
                step: "2-factor swap",
                what: "still bad after the swap".into(),
            });
        }
    }
    let p = blocktree(&h, trace)?;
    // removing host edges can only create chords from those edges
    let p = checked(g, p.edges, "2-factor")?;
    within(&p, bound, "2-factor")?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::petersen;
    use crate::graph::two_factor_search;

    #[test]
    fn petersen_two_pentagons() {
        let g = petersen();
        let f = two_factor_search(&g, 5, true).unwrap().unwrap();
        let p = ipf_23_with_2factor(&g, &f).unwrap();
        assert!(p.path_count <= 3);
    }

    #[test]
    fn rejects_short_cycles() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let f = TwoFactor::new(vec![vec![0, 1, 2, 3]]);
        assert!(ipf_23_with_2factor(&k4, &f).is_err());
    }
}
