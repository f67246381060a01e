//! Standardising an IPF around its K4- subgraphs and carrying it back
//! across a surgery.

use super::{checked, ConstructError};
use crate::graph::structure::K4Minus;
use crate::graph::{Edge, Graph, Surgery, SurgeryRecord, Vertex};
use crate::ipf::{is_standardised, Ipf};

/// Rewrite `ipf` so that every induced K4- `{a, b, c, d}` (with `ab`
/// missing) can be labelled with `c` ending a path through `ac` and `d`
/// ending a path through `bd`. Never increases the number of paths.
pub fn standardise(g: &Graph, ipf: &Ipf) -> Result<Ipf, ConstructError> {
    let mut cur = ipf.clone();
    let mut rounds = 0;
    loop {
        let report = is_standardised(g, &cur).map_err(|source| ConstructError::Invalid {
            step: "standardise",
            source,
        })?;
        let Some(&h) = report.failing.first() else {
            return Ok(cur);
        };
        rounds += 1;
        if rounds > g.n() {
            return Err(ConstructError::Postcondition {
                step: "standardise",
                what: "rewriting did not converge".into(),
            });
        }
        let next = rewrite(g, &cur, h)?;
        if next.path_count > cur.path_count {
            return Err(ConstructError::Bound {
                step: "standardise",
                got: next.path_count,
                bound: cur.path_count,
            });
        }
        cur = next;
    }
}

fn rewrite(g: &Graph, p: &Ipf, h: K4Minus) -> Result<Ipf, ConstructError> {
    let K4Minus { a, b, c, d } = h;
    let inner = h.edges();
    let mut drop: Vec<Edge> = inner.to_vec();
    let shared = p.path_of(a) == p.path_of(b);
    if shared && p.path_of(c) != p.path_of(a) && p.path_of(d) != p.path_of(a) {
        // a and b end one path that avoids c and d; cut it next to b
        let e = *g
            .neighbors(b)
            .iter()
            .find(|&&w| w != c && w != d)
            .ok_or_else(|| ConstructError::Postcondition {
                step: "standardise",
                what: format!("{b} has no neighbour outside the K4-"),
            })?;
        drop.push(Edge::new(b, e));
    }
    let mut edges: Vec<Edge> = p.edges.iter().copied().filter(|e| !drop.contains(e)).collect();
    edges.push(Edge::new(a, c));
    edges.push(Edge::new(b, d));
    checked(g, edges, "standardise")
}

/// Carry an IPF of `g_prime` back to `g`, where `g_prime` came from `g` by
/// the surgery in `record`:
///
/// - triangle augmentation `abc -> d`: drop `ad` and `bd`; a path ends at `c`
/// - K4- paste over `ab`: drop the four edges from `a, b` to the new pair;
///   distinct paths end at `a` and `b`
/// - suppression of `c`: keep the factor, replacing the new edge by `ac` if
///   it was used; a path ends at `c` and the count grows by one at most
pub fn lift(
    g: &Graph,
    g_prime: &Graph,
    record: &SurgeryRecord,
    ipf_prime: &Ipf,
) -> Result<Ipf, ConstructError> {
    let star = standardise(g_prime, ipf_prime)?;
    let back = |v: Vertex| record.new_to_old[v];
    let fwd = |v: Vertex| record.old_to_new[v].expect("surviving vertex");
    let carry = |es: &[Edge]| -> Result<Vec<Edge>, ConstructError> {
        es.iter()
            .map(|&Edge(u, v)| match (back(u), back(v)) {
                (Some(x), Some(y)) => Ok(Edge::new(x, y)),
                _ => Err(ConstructError::Postcondition {
                    step: "lift",
                    what: format!("edge {u}-{v} touches a created vertex"),
                }),
            })
            .collect()
    };
    match record.surgery {
        Surgery::AugmentTriangle { a, b, c } => {
            let d = record.added[0];
            let kept: Vec<Edge> = star
                .edges
                .iter()
                .copied()
                .filter(|&e| e != Edge::new(fwd(a), d) && e != Edge::new(fwd(b), d))
                .collect();
            let p = checked(g, carry(&kept)?, "lift augmented triangle")?;
            expect(p.is_endpoint(c), "lift augmented triangle", || format!("{c} is not a path end"))?;
            same_count(&p, star.path_count, "lift augmented triangle")?;
            Ok(p)
        }
        Surgery::PasteK4Minus { a, b } => {
            let (c, d) = (record.added[0], record.added[1]);
            let cut: Vec<Edge> = [(a, c), (a, d), (b, c), (b, d)]
                .iter()
                .map(|&(x, y)| Edge::new(fwd(x), y))
                .collect();
            let kept: Vec<Edge> = star.edges.iter().copied().filter(|e| !cut.contains(e)).collect();
            let p = checked(g, carry(&kept)?, "lift pasted K4-")?;
            expect(p.end_distinct_paths(a, b), "lift pasted K4-", || {
                format!("{a} and {b} do not end distinct paths")
            })?;
            same_count(&p, star.path_count, "lift pasted K4-")?;
            Ok(p)
        }
        Surgery::SuppressVertex(c) => {
            let nb = g.neighbors(c);
            let (a, b) = (nb[0], nb[1]);
            let joined = Edge::new(fwd(a), fwd(b));
            let mut edges = carry(
                &star
                    .edges
                    .iter()
                    .copied()
                    .filter(|&e| e != joined)
                    .collect::<Vec<_>>(),
            )?;
            if star.contains(joined) {
                edges.push(Edge::new(a, c));
            }
            let p = checked(g, edges, "lift suppressed vertex")?;
            expect(p.is_endpoint(c), "lift suppressed vertex", || format!("{c} is not a path end"))?;
            same_count(&p, star.path_count + 1, "lift suppressed vertex")?;
            Ok(p)
        }
        ref other => Err(ConstructError::Precondition(format!(
            "no lift for {other:?}"
        ))),
    }
}

fn expect(ok: bool, step: &'static str, what: impl FnOnce() -> String) -> Result<(), ConstructError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructError::Postcondition { step, what: what() })
    }
}

fn same_count(p: &Ipf, want: usize, step: &'static str) -> Result<(), ConstructError> {
    expect(p.path_count == want, step, || {
        format!("lifted factor has {} paths, expected {want}", p.path_count)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rho_exhaustive;

    fn k4_minus_pair() -> Graph {
        // two K4- joined into a cubic graph of order 8
        Graph::new(
            8,
            [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (0, 4), (1, 5)],
        )
        .unwrap()
    }

    #[test]
    fn standardise_fixes_every_k4_minus() {
        let g = k4_minus_pair();
        let p = Ipf::new(&g, [(0, 4), (2, 3), (6, 7)].map(Edge::from)).unwrap();
        let s = standardise(&g, &p).unwrap();
        assert!(is_standardised(&g, &s).unwrap().verdict);
        assert!(s.path_count <= p.path_count);
    }

    #[test]
    fn suppress_lift_adds_one() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let (g2, rec) = Surgery::SuppressVertex(0).apply(&c6).unwrap();
        let p2 = rho_exhaustive(&g2).unwrap().witness;
        let p = lift(&c6, &g2, &rec, &p2).unwrap();
        assert_eq!(p.path_count, p2.path_count + 1);
        assert!(p.is_endpoint(0));
    }

    #[test]
    fn paste_lift_ends_at_both() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let (g2, rec) = Surgery::PasteK4Minus { a: 0, b: 1 }.apply(&c6).unwrap();
        let p2 = rho_exhaustive(&g2).unwrap().witness;
        let p = lift(&c6, &g2, &rec, &p2).unwrap();
        assert!(p.end_distinct_paths(0, 1));
        assert_eq!(p.path_count, p2.path_count);
    }

    #[test]
    fn augment_lift_ends_at_c() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // a triangle with one degree-2 vertex: K4 with vertex 3 split off
        let g = k4.without_edges(&[Edge(2, 3)]).with_edges(&[]).unwrap();
        let (g2, rec) = Surgery::AugmentTriangle { a: 0, b: 1, c: 2 }.apply(&g).unwrap();
        let p2 = rho_exhaustive(&g2).unwrap().witness;
        let p = lift(&g, &g2, &rec, &p2).unwrap();
        assert!(p.is_endpoint(2));
    }
}
