//! Hamiltonian blocks of order 5, 6 and 7.

use super::{checked, ConstructError};
use crate::constructive::badness::is_triangle_ring;
use crate::exact::best_ipf_where;
use crate::graph::{Graph, Surgery, Vertex};
use crate::ipf::Ipf;

/// Every hamilton cycle of `g` written from `x`, once per direction.
pub(crate) fn hamilton_cycles_from(g: &Graph, x: Vertex) -> Vec<Vec<Vertex>> {
    fn go(g: &Graph, path: &mut Vec<Vertex>, used: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
        let last = *path.last().unwrap();
        if path.len() == g.n() {
            if g.has_edge(last, path[0]) {
                out.push(path.clone());
            }
            return;
        }
        for &w in g.neighbors(last) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                go(g, path, used, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    let mut used = vec![false; g.n()];
    used[x] = true;
    let mut out = Vec::new();
    if g.n() >= 3 {
        go(g, &mut vec![x], &mut used, &mut out);
    }
    out
}

/// The order-7 graph made by subdividing one non-triangle edge of the
/// order-6 triangle ring.
pub(crate) fn is_subdivided_ring6(c: &Graph) -> bool {
    c.n() == 7
        && c.vertices().any(|v| {
            c.degree(v) == 2
                && Surgery::SuppressVertex(v)
                    .apply(c)
                    .is_ok_and(|(h, _)| is_triangle_ring(&h))
        })
}

fn prefix_candidate(c: &Graph, cyc: &[Vertex]) -> Option<Ipf> {
    let n = c.n();
    let chords: Vec<(Vertex, Vertex)> = c
        .edges()
        .iter()
        .map(|e| (e.0, e.1))
        .filter(|&(u, v)| {
            let (i, j) = (pos(cyc, u), pos(cyc, v));
            let d = i.abs_diff(j);
            d != 1 && d != n - 1
        })
        .collect();
    let mut j = 0;
    while chords
        .iter()
        .any(|&(u, v)| !cyc[..=j].contains(&u) && !cyc[..=j].contains(&v))
    {
        j += 1;
    }
    let first = &cyc[..=j];
    // well-behavedness: the first path may hold x and, on order 6, its
    // successor as its only degree-2 vertices
    let allowed = if n == 6 { 2 } else { 1 };
    if first
        .iter()
        .enumerate()
        .any(|(i, &v)| i >= allowed && c.degree(v) != 3)
    {
        return None;
    }
    let mut paths = vec![first.to_vec()];
    if j + 1 < n {
        paths.push(cyc[j + 1..].to_vec());
    }
    Ipf::from_paths(c, &paths).ok()
}

fn seven_candidate(c: &Graph, cyc: &[Vertex]) -> Option<Ipf> {
    let x = |i: usize| cyc[i];
    let e = |i: usize, j: usize| c.has_edge(x(i), x(j));
    let paths: Vec<Vec<Vertex>> = match (e(1, 3), e(4, 6)) {
        (true, true) if e(2, 5) => vec![vec![x(0), x(1), x(2), x(5)], vec![x(3), x(4), x(6)]],
        (true, true) => vec![vec![x(0), x(1)], vec![x(2), x(3), x(4)], vec![x(5), x(6)]],
        (true, false) => vec![vec![x(0), x(1), x(2)], vec![x(3), x(4), x(5), x(6)]],
        // the mirrored labelling turns x4x6 into x1x3
        (false, true) => return None,
        (false, false) => vec![vec![x(0), x(1), x(2), x(3)], vec![x(4), x(5), x(6)]],
    };
    Ipf::from_paths(c, &paths).ok()
}

fn pos(cyc: &[Vertex], v: Vertex) -> usize {
    cyc.iter().position(|&w| w == v).unwrap()
}

/// An IPF of a hamiltonian {2,3}-graph of order 5, 6 or 7 with a path
/// ending at `x`.
///
/// Orders 5 and 6 give two paths. On order 5 every vertex other than `x` on
/// the path through `x` has degree 3; on order 6 the neighbour of `x` on
/// that path is also allowed degree 2. Order 7 gives two paths unless the
/// graph is the subdivided triangle ring of order 6, which needs three.
/// Without `x`, a degree-2 vertex is used; a cubic graph of order 6 gets a
/// two-path IPF with no endpoint condition.
pub fn ipf_small_ham(c: &Graph, x: Option<Vertex>) -> Result<Ipf, ConstructError> {
    let n = c.n();
    if !(5..=7).contains(&n) || !c.is_23_graph() {
        return Err(ConstructError::Precondition(format!(
            "small hamiltonian IPF needs a {{2,3}}-graph of order 5, 6 or 7, got order {n}"
        )));
    }
    let x = match x.or_else(|| c.vertices().find(|&v| c.degree(v) == 2)) {
        Some(x) => x,
        None => {
            let ipf = best_ipf_where(c, |_| true)
                .expect("order 6 is within the exhaustive cap")
                .expect("the trivial factor qualifies");
            return checked(c, ipf.edges, "order-6 cubic block");
        }
    };
    if x >= n || c.degree(x) != 2 {
        return Err(ConstructError::Precondition(format!(
            "path end {x} must be a degree-2 vertex"
        )));
    }
    let cycles = hamilton_cycles_from(c, x);
    if cycles.is_empty() {
        return Err(ConstructError::Precondition("block is not hamiltonian".into()));
    }
    let best = cycles
        .iter()
        .filter_map(|cyc| match n {
            7 => seven_candidate(c, cyc),
            _ => prefix_candidate(c, cyc),
        })
        .min_by_key(|p| p.path_count);
    let target = if n == 7 && is_subdivided_ring6(c) { 3 } else { 2 };
    let ipf = best.ok_or_else(|| ConstructError::Postcondition {
        step: "small block",
        what: "no labelling produced a factor".into(),
    })?;
    super::within(&ipf, target, "small block")?;
    if !ipf.is_endpoint(x) {
        return Err(ConstructError::Postcondition {
            step: "small block",
            what: format!("{x} is not a path end"),
        });
    }
    Ok(ipf)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_and_chords() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(ipf_small_ham(&c5, Some(0)).unwrap().path_count, 2);
        let g = c5.with_edges(&[(1, 3).into()]).unwrap();
        for x in [0, 2, 4] {
            let p = ipf_small_ham(&g, Some(x)).unwrap();
            assert_eq!(p.path_count, 2);
            assert!(p.is_endpoint(x));
        }
    }

    #[test]
    fn order_seven_exception() {
        // triangle ring of order 6 with edge 1-2 subdivided by 6
        let g = Graph::new(
            7,
            [(0, 1), (1, 6), (6, 2), (2, 3), (3, 4), (4, 5), (5, 0), (5, 1), (2, 4)],
        )
        .unwrap();
        assert!(is_subdivided_ring6(&g));
        assert_eq!(ipf_small_ham(&g, Some(6)).unwrap().path_count, 3);
    }

    #[test]
    fn prism_has_two_paths() {
        let prism = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(ipf_small_ham(&prism, None).unwrap().path_count, 2);
    }

    #[test]
    fn rejects_degree_three_end() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        assert!(ipf_small_ham(&g, Some(1)).is_err());
    }
}
