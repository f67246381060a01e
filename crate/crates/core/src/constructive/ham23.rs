//! Hamiltonian {2,3}-graphs.

use super::small::ipf_small_ham;
use super::{checked, within, ConstructError, Trace};
use crate::constructive::badness::is_triangle_ring;
use crate::graph::{hamilton_cycle, Edge, Graph, Vertex};
use crate::ipf::Ipf;

/// An IPF of a hamiltonian {2,3}-graph of order at least 6 with at most
/// `n/3` paths, and at most `(n-1)/3` when `n >= 7` and the graph is not a
/// triangle ring.
pub fn ipf_ham23(g: &Graph) -> Result<Ipf, ConstructError> {
    ham23(g, &mut Trace::default())
}

pub(crate) fn ham23(g: &Graph, trace: &mut Trace) -> Result<Ipf, ConstructError> {
    let n = g.n();
    if n < 6 || !g.is_23_graph() {
        return Err(ConstructError::Precondition(format!(
            "hamiltonian construction needs a {{2,3}}-graph of order at least 6, got order {n}"
        )));
    }
    let cycle = hamilton_cycle(g).ok_or_else(|| ConstructError::Precondition("graph is not hamiltonian".into()))?;
    if n == 6 {
        trace.push("hamiltonian order 6");
        return ipf_small_ham(g, None);
    }
    let ring = is_triangle_ring(g);
    let bound = if ring { n / 3 } else { (n - 1) / 3 };
    let on_cycle = |u: usize, v: usize| {
        let d = u.abs_diff(v);
        d == 1 || d == n - 1
    };
    let index: Vec<usize> = {
        let mut idx = vec![0; n];
        for (i, &v) in cycle.iter().enumerate() {
            idx[v] = i;
        }
        idx
    };
    // shortest chord, least endpoints first
    let chord = g
        .edges()
        .iter()
        .filter(|e| !on_cycle(index[e.0], index[e.1]))
        .min_by_key(|e| {
            let d = index[e.0].abs_diff(index[e.1]);
            (d.min(n - d), **e)
        })
        .copied();
    let Some(Edge(p, q)) = chord else {
        trace.push("hamiltonian cycle only");
        let path: Vec<Vertex> = cycle[..n - 1].to_vec();
        let ipf = Ipf::from_paths(g, &[path, vec![cycle[n - 1]]])
            .map_err(|source| ConstructError::Invalid { step: "hamiltonian cycle only", source })?;
        within(&ipf, bound, "hamiltonian cycle only")?;
        return Ok(ipf);
    };
    let (ip, iq) = (index[p], index[q]);
    let k = {
        let d = ip.abs_diff(iq);
        d.min(n - d)
    };
    // labels x[1..=n] with x[n] x[k] the chosen chord
    let start = if (iq + n - ip) % n == k { ip } else { iq };
    let mut x: Vec<Vertex> = (0..=n).map(|t| cycle[(start + t) % n]).collect();
    let adj = |x: &[Vertex], i: usize, j: usize| g.has_edge(x[i], x[j]);
    if k == 2 && (3..=n.div_ceil(2)).any(|j| adj(&x, 1, j)) {
        // mirror around x1, keeping the chord x_n x_2
        let old = x.clone();
        for t in 1..=n {
            x[t] = old[wrap(2 + n - t, n)];
        }
        x[0] = x[n];
    }
    if k == 3 {
        let old = x.clone();
        if let Some(s) = (0..3).find(|&s| {
            let y = |t: usize| old[wrap(t + s, n)];
            g.has_edge(y(n), y(3)) && !g.has_edge(y(1), y(4))
        }) {
            for t in 1..=n {
                x[t] = old[wrap(t + s, n)];
            }
            x[0] = x[n];
        }
    }
    trace.push("hamiltonian greedy");
    let mut paths: Vec<Vec<Vertex>> = Vec::new();
    let mut i = 1;
    while i <= n {
        let mut j = i;
        while j < n && extends_induced(g, &x[i..=j], x[j + 1]) {
            j += 1;
        }
        paths.push(x[i..=j].to_vec());
        i = j + 1;
    }
    let greedy = Ipf::from_paths(g, &paths)
        .map_err(|source| ConstructError::Invalid { step: "hamiltonian greedy", source })?;
    if greedy.path_count <= bound {
        return Ok(greedy);
    }
    trace.push("hamiltonian repair");
    let repaired = repair(g, &x)?;
    within(&repaired, bound, "hamiltonian repair")?;
    Ok(repaired)
}

fn wrap(t: usize, n: usize) -> usize {
    let r = t % n;
    if r == 0 {
        n
    } else {
        r
    }
}

fn extends_induced(g: &Graph, path: &[Vertex], next: Vertex) -> bool {
    let last = *path.last().unwrap();
    g.has_edge(last, next)
        && !path[..path.len() - 1].iter().any(|&v| g.has_edge(v, next))
        && !path.contains(&next)
}

/// The greedy factor reached `n/3` paths, so the labelled graph is a
/// triangle ring plus one edge x_a x_b with a, b in {1, 4, ..., n-2}.
fn repair(g: &Graph, x: &[Vertex]) -> Result<Ipf, ConstructError> {
    let n = x.len() - 1;
    let heads: Vec<usize> = (1..=n).filter(|t| t % 3 == 1).collect();
    let (a, b) = heads
        .iter()
        .flat_map(|&a| heads.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| a < b && g.has_edge(x[a], x[b]))
        .ok_or_else(|| ConstructError::Postcondition {
            step: "hamiltonian repair",
            what: "no edge between ring heads".into(),
        })?;
    let at = |t: usize| x[wrap(t, n)];
    if n == 9 {
        // rotate by a multiple of 3 so the extra edge is x1 x4
        let shift = match (a, b) {
            (1, 4) => 0,
            (4, 7) => 3,
            _ => 6,
        };
        let y = |t: usize| at(t + shift);
        let paths = [vec![y(8), y(9), y(1), y(4)], vec![y(2), y(3), y(5), y(6), y(7)]];
        return checked_paths(g, &paths);
    }
    let mut edges: Vec<Edge> = (1..=n)
        .filter(|i| i % 3 != 1)
        .map(|i| Edge::new(at(i), at(i + 1)))
        .collect();
    let drop = [Edge::new(at(a + n - 1), at(a)), Edge::new(at(b - 1), at(b))];
    edges.retain(|f| !drop.contains(f));
    edges.push(Edge::new(at(a + n - 1), at(a + 1)));
    edges.push(Edge::new(at(b - 1), at(b + 1)));
    edges.push(Edge::new(at(a), at(b)));
    checked(g, edges, "hamiltonian repair")
}

fn checked_paths(g: &Graph, paths: &[Vec<Vertex>]) -> Result<Ipf, ConstructError> {
    Ipf::from_paths(g, paths).map_err(|source| ConstructError::Invalid {
        step: "hamiltonian repair",
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::triangle_ring;

    #[test]
    fn rings_meet_n_over_3() {
        for n in [6, 9, 12, 15, 18] {
            let p = ipf_ham23(&triangle_ring(n).unwrap()).unwrap();
            assert!(p.path_count <= n / 3, "n={n}");
        }
    }

    #[test]
    fn ring_plus_head_edge_is_repaired() {
        for n in [9, 12, 15] {
            let ring = triangle_ring(n).unwrap();
            // degree-2 vertices are the multiples of 3
            let g = ring.with_edges(&[Edge::new(0, 3)]).unwrap();
            let p = ipf_ham23(&g).unwrap();
            assert!(p.path_count <= (n - 1) / 3, "n={n}: {}", p.path_count);
        }
    }

    #[test]
    fn plain_cycles() {
        for n in 6..12 {
            let c = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
            assert_eq!(ipf_ham23(&c).unwrap().path_count, 2);
        }
    }
}
