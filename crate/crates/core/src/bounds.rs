//! Exact values and lower bounds for path factors of trees and of graphs
//! glued together at vertices.

use crate::exact::{rho_exact, Budget};
use crate::graph::structure::block_decomposition;
use crate::graph::{Edge, Graph, Surgery, Vertex};
use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Q = Ratio<i128>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("decomposition does not describe the graph: {0}")]
    Inconsistent(String),
    #[error("exact value of a part is unknown: {0}")]
    Unsolved(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    TreeClosedForm,
    TreeRecurrence,
    CkOdd,
    CkEven,
    CkC3,
    CkC4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub k: u32,
    #[serde(serialize_with = "ratio_string")]
    pub value: Q,
    pub formula: Formula,
    pub h: Option<u32>,
}

fn ratio_string<S: Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn pow(b: i128, e: u32) -> Result<i128, BoundsError> {
    b.checked_pow(e).ok_or(BoundsError::Overflow)
}

fn tree_domain(k: u32) -> Result<(), BoundsError> {
    if k < 3 {
        return Err(BoundsError::Domain(format!("k = {k} < 3")));
    }
    Ok(())
}

/// ρ of the perfect `(k-1)`-ary tree of height `h`:
/// `((k-1)^(h+1) + (-1)^h) / k`.
pub fn rho_tree(k: u32, h: u32) -> Result<BoundReport, BoundsError> {
    tree_domain(k)?;
    let k1 = i128::from(k) - 1;
    let sign = if h.is_multiple_of(2) { 1 } else { -1 };
    let top = pow(k1, h + 1)?.checked_add(sign).ok_or(BoundsError::Overflow)?;
    Ok(BoundReport {
        k,
        value: Q::new(top, i128::from(k)),
        formula: Formula::TreeClosedForm,
        h: Some(h),
    })
}

/// Same quantity from `a(h) = 1 + (k-3) a(h-1) + 2(k-2) sum_{i<=h-2} a(i)`.
pub fn rho_tree_recurrence(k: u32, h: u32) -> Result<BoundReport, BoundsError> {
    tree_domain(k)?;
    let k = i128::from(k);
    let mut a: Vec<i128> = vec![1];
    let mut prefix: i128 = 0;
    for t in 1..=h as usize {
        if t >= 2 {
            prefix = prefix.checked_add(a[t - 2]).ok_or(BoundsError::Overflow)?;
        }
        let next = (k - 3)
            .checked_mul(a[t - 1])
            .and_then(|x| (2 * (k - 2)).checked_mul(prefix).and_then(|y| x.checked_add(y)))
            .and_then(|x| x.checked_add(1))
            .ok_or(BoundsError::Overflow)?;
        a.push(next);
    }
    Ok(BoundReport {
        k: k as u32,
        value: Q::from_integer(a[h as usize]),
        formula: Formula::TreeRecurrence,
        h: Some(h),
    })
}

/// The best lower bound on c_k available in closed form.
pub fn ck_lower(k: u32) -> Result<BoundReport, BoundsError> {
    if k < 3 {
        return Err(BoundsError::Domain(format!("k = {k} < 3")));
    }
    let kk = i128::from(k);
    let half = Q::new(1, 2);
    let (value, formula) = match k {
        3 => (Q::new(5, 18), Formula::CkC3),
        4 => (Q::new(3, 7), Formula::CkC4),
        _ if k % 2 == 1 => (half - Q::new(3 * kk - 4, kk * kk * (kk - 1)), Formula::CkOdd),
        _ => (half - Q::new(1, 2 * kk - 2), Formula::CkEven),
    };
    Ok(BoundReport {
        k,
        value,
        formula,
        h: None,
    })
}

/// How the ρ of one part is obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartRho {
    Known(usize),
    /// Solve the part exactly.
    Exact,
    /// The part is `K_m` with one edge subdivided; at least `ceil(m/2)`.
    SubdividedComplete(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluePart {
    pub vertices: Vec<Vertex>,
    pub rho: PartRho,
}

/// A graph written as parts glued one vertex at a time: parts share at most
/// one vertex pairwise, cover every edge, and their incidence with shared
/// vertices is a tree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GlueDecomposition {
    pub parts: Vec<GluePart>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlueBound {
    pub bound: i64,
    pub part_rho: Vec<usize>,
}

fn is_subdivided_complete(h: &Graph, m: usize) -> bool {
    if h.n() != m + 1 || h.m() != m * (m - 1) / 2 + 1 {
        return false;
    }
    h.vertices().filter(|&v| h.degree(v) == 2).any(|v| {
        Surgery::SuppressVertex(v)
            .apply(h)
            .is_ok_and(|(k, _)| k.is_k_regular(m - 1))
    })
}

impl GlueDecomposition {
    /// Blocks as parts, with each connected forest of bridges merged into a
    /// single part. Blocks shaped like a subdivided complete graph are
    /// tagged as such; everything else is solved exactly.
    pub fn coarse_blocks(g: &Graph) -> GlueDecomposition {
        let d = block_decomposition(g);
        let mut parts = Vec::new();
        for b in &d.blocks {
            let (h, _) = g.induced_subgraph(b);
            let m = b.len() - 1;
            let rho = if m >= 3 && is_subdivided_complete(&h, m) {
                PartRho::SubdividedComplete(m)
            } else {
                PartRho::Exact
            };
            parts.push(GluePart {
                vertices: b.clone(),
                rho,
            });
        }
        let forest = Graph::new(g.n(), d.bridges.iter().map(|e| (e.0, e.1))).expect("bridges are edges");
        for comp in forest.components() {
            if comp.len() >= 2 {
                parts.push(GluePart {
                    vertices: comp,
                    rho: PartRho::Exact,
                });
            }
        }
        // an isolated vertex is its own part
        if g.n() == 1 {
            parts.push(GluePart {
                vertices: vec![0],
                rho: PartRho::Known(1),
            });
        }
        GlueDecomposition { parts }
    }
}

/// `sum rho(part) - (parts - 1)`, a lower bound on ρ(g) by repeated use of
/// `ρ(A ∪ B) >= ρ(A) + ρ(B) - 1` for graphs sharing one vertex.
pub fn glue_lower_bound(g: &Graph, d: &GlueDecomposition) -> Result<GlueBound, BoundsError> {
    let n = g.n();
    let inconsistent = |s: String| Err(BoundsError::Inconsistent(s));
    if d.parts.is_empty() {
        return inconsistent("no parts".into());
    }
    let mut count = vec![0usize; n];
    for (i, p) in d.parts.iter().enumerate() {
        if p.vertices.is_empty() {
            return inconsistent(format!("part {i} is empty"));
        }
        for &v in &p.vertices {
            if v >= n {
                return inconsistent(format!("vertex {v} out of range"));
            }
            count[v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| count[v] == 0) {
        return inconsistent(format!("vertex {v} is in no part"));
    }
    for i in 0..d.parts.len() {
        for j in i + 1..d.parts.len() {
            let shared = d.parts[i]
                .vertices
                .iter()
                .filter(|v| d.parts[j].vertices.contains(v))
                .count();
            if shared > 1 {
                return inconsistent(format!("parts {i} and {j} share {shared} vertices"));
            }
        }
    }
    for &Edge(u, v) in g.edges() {
        if !d.parts.iter().any(|p| p.vertices.contains(&u) && p.vertices.contains(&v)) {
            return inconsistent(format!("edge {u}-{v} lies in no part"));
        }
    }
    // parts and shared vertices must form a tree
    let shared: Vec<Vertex> = (0..n).filter(|&v| count[v] >= 2).collect();
    let nodes = d.parts.len() + shared.len();
    let links: usize = shared.iter().map(|&v| count[v]).sum();
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (si, &v) in shared.iter().enumerate() {
        for (pi, p) in d.parts.iter().enumerate() {
            if p.vertices.contains(&v) {
                let (a, b) = (root(&mut parent, pi), root(&mut parent, d.parts.len() + si));
                parent[a] = b;
            }
        }
    }
    let roots = (0..nodes).filter(|&x| root(&mut parent, x) == x).count();
    if links + 1 != nodes || roots != 1 {
        return inconsistent("parts are not glued in a tree".into());
    }
    let mut part_rho = Vec::new();
    for (i, p) in d.parts.iter().enumerate() {
        let mut sorted = p.vertices.clone();
        sorted.sort_unstable();
        let (h, _) = g.induced_subgraph(&sorted);
        let r = match p.rho {
            PartRho::Known(r) => r,
            PartRho::SubdividedComplete(m) => {
                if !is_subdivided_complete(&h, m) {
                    return inconsistent(format!("part {i} is not a subdivided K{m}"));
                }
                m.div_ceil(2)
            }
            PartRho::Exact => {
                let res = rho_exact(&h, Budget::default()).map_err(|e| BoundsError::Unsolved(e.to_string()))?;
                if !res.optimal {
                    return Err(BoundsError::Unsolved(format!("part {i} exceeded the budget")));
                }
                res.rho
            }
        };
        part_rho.push(r);
    }
    let total: i64 = part_rho.iter().map(|&r| r as i64).sum();
    Ok(GlueBound {
        bound: total - (d.parts.len() as i64 - 1),
        part_rho,
    })
}

/// `1/2 - value`, handy for the `c_k < 1/2` check.
pub fn gap_to_half(r: &BoundReport) -> Q {
    Q::new(1, 2) - r.value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{fig1, subdivided_complete};

    #[test]
    fn closed_form_values() {
        assert_eq!(rho_tree(3, 0).unwrap().value, Q::from_integer(1));
        assert_eq!(rho_tree(3, 2).unwrap().value, Q::from_integer(3));
        assert_eq!(rho_tree(4, 1).unwrap().value, Q::from_integer(2));
        assert_eq!(ck_lower(3).unwrap().value, Q::new(5, 18));
        assert_eq!(ck_lower(4).unwrap().value, Q::new(3, 7));
        assert_eq!(ck_lower(5).unwrap().value, Q::new(39, 100));
        assert_eq!(ck_lower(6).unwrap().value, Q::new(2, 5));
        assert!(ck_lower(2).is_err());
    }

    #[test]
    fn recurrence_matches() {
        for k in 3..=10 {
            for h in 0..=12 {
                assert_eq!(rho_tree(k, h).unwrap().value, rho_tree_recurrence(k, h).unwrap().value);
            }
        }
    }

    #[test]
    fn fig1_glue_bound() {
        let g = fig1(16).unwrap();
        let b = glue_lower_bound(&g, &GlueDecomposition::coarse_blocks(&g)).unwrap();
        assert_eq!(b.bound, 6);
    }

    #[test]
    fn subdivided_k5() {
        let g = subdivided_complete(5).unwrap();
        let d = GlueDecomposition {
            parts: vec![GluePart {
                vertices: g.vertices().collect(),
                rho: PartRho::SubdividedComplete(5),
            }],
        };
        assert_eq!(glue_lower_bound(&g, &d).unwrap().bound, 3);
    }

    #[test]
    fn glued_paths() {
        // two P3s glued at their middle vertices: a star K_{1,4}
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let d = GlueDecomposition {
            parts: vec![
                GluePart { vertices: vec![0, 1, 2], rho: PartRho::Known(1) },
                GluePart { vertices: vec![0, 3, 4], rho: PartRho::Known(1) },
            ],
        };
        assert_eq!(glue_lower_bound(&g, &d).unwrap().bound, 1);
        let bad = GlueDecomposition {
            parts: vec![GluePart { vertices: vec![0, 1, 2], rho: PartRho::Known(1) }],
        };
        assert!(glue_lower_bound(&g, &bad).is_err());
    }
}
