//! Exact induced path numbers.
//!
//! [`rho_exact`] is a branch and bound over vertex subsets: the lowest
//! uncovered vertex is placed on each induced path through it in turn,
//! longest first. Subproblems split into connected components, a component
//! that is itself an induced path costs 1 and any other costs at least 2,
//! and solved subsets are kept in a transposition table.
//!
//! [`rho_exhaustive`] is an independent oracle that enumerates edge subsets.

use crate::graph::{Edge, Graph, Vertex};
use crate::ipf::{verify_ipf, Ipf};
use serde::Serialize;
use std::collections::HashMap;
use std::time::{Duration, Instant};
use thiserror::Error;

pub const MAX_EXACT_VERTICES: usize = 128;
pub const MAX_EXHAUSTIVE_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has {n} vertices; this solver accepts at most {cap}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bnb,
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_nodes: 100_000_000,
            max_time: Some(Duration::from_secs(60)),
        }
    }
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget {
            max_nodes: u64::MAX,
            max_time: None,
        }
    }

    pub fn nodes(max_nodes: u64) -> Budget {
        Budget {
            max_nodes,
            max_time: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub rho: usize,
    pub witness: Ipf,
    pub stats: SolveStats,
    pub method: Method,
    /// False when the budget ran out; `rho` is then an upper bound.
    pub optimal: bool,
}

type Mask = u128;

fn bit(v: Vertex) -> Mask {
    1u128 << v
}

fn vertices_of(mut m: Mask) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as Vertex;
            m &= m - 1;
            Some(v)
        }
    })
}

const TABLE_CAP: usize = 1 << 22;

#[derive(Clone, Copy)]
struct Entry {
    value: u32,
    exact: bool,
    /// Path placed first in an optimal solution of a connected subset.
    choice: Mask,
}

struct Solver<'a> {
    g: &'a Graph,
    nb: Vec<Mask>,
    table: HashMap<Mask, Entry>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    aborted: bool,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, budget: Budget) -> Solver<'a> {
        let nb = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(w)))
            .collect();
        Solver {
            g,
            nb,
            table: HashMap::new(),
            nodes: 0,
            budget,
            start: Instant::now(),
            aborted: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes >= self.budget.max_nodes {
            self.aborted = true;
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(t) = self.budget.max_time {
                if self.start.elapsed() >= t {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    fn components(&self, u: Mask) -> Vec<Mask> {
        let mut rest = u;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.nb[v] & u & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    /// A connected vertex set that induces a path.
    fn is_path(&self, c: Mask) -> bool {
        let k = c.count_ones();
        let mut edges = 0;
        for v in vertices_of(c) {
            let d = (self.nb[v] & c).count_ones();
            if d > 2 {
                return false;
            }
            edges += d;
        }
        edges / 2 + 1 == k
    }

    fn cost_lower_bound(&self, comps: &[Mask]) -> u32 {
        comps.iter().map(|&c| if self.is_path(c) { 1 } else { 2 }).sum()
    }

    /// Induced paths of `G[u]` through `v`, longest first.
    fn paths_through(&self, u: Mask, v: Vertex) -> Vec<Mask> {
        let mut arms: Vec<(Mask, Vertex, Option<Vertex>)> = vec![(bit(v), v, None)];
        let mut i = 0;
        while i < arms.len() {
            let (mask, end, first) = arms[i];
            for w in vertices_of(self.nb[end] & u & !mask) {
                if self.nb[w] & mask == bit(end) {
                    arms.push((mask | bit(w), w, first.or(Some(w))));
                }
            }
            i += 1;
        }
        let mut out = Vec::new();
        for &(a_mask, _, a_first) in &arms {
            out.push(a_mask);
            let Some(a1) = a_first else { continue };
            // second arm from v, starting above the first arm's start
            let mut stack: Vec<(Mask, Vertex)> = Vec::new();
            for w in vertices_of(self.nb[v] & u & !a_mask) {
                if w > a1 && self.nb[w] & a_mask == bit(v) {
                    stack.push((a_mask | bit(w), w));
                }
            }
            while let Some((mask, end)) = stack.pop() {
                out.push(mask);
                for w in vertices_of(self.nb[end] & u & !mask) {
                    if self.nb[w] & mask == bit(end) {
                        stack.push((mask | bit(w), w));
                    }
                }
            }
        }
        out.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        out
    }

    fn store(&mut self, u: Mask, e: Entry) {
        if self.table.len() < TABLE_CAP || self.table.contains_key(&u) {
            self.table.insert(u, e);
        }
    }

    /// Returns `f(u)` if it is below `alpha`, otherwise some value in
    /// `alpha..=f(u)`.
    fn solve(&mut self, u: Mask, alpha: u32) -> u32 {
        if u == 0 {
            return 0;
        }
        if self.tick() {
            return alpha;
        }
        let comps = self.components(u);
        if comps.len() > 1 {
            let lbs: Vec<u32> = comps
                .iter()
                .map(|&c| if self.is_path(c) { 1 } else { 2 })
                .collect();
            let mut rest_lb: u32 = lbs.iter().sum();
            let mut sum = 0;
            for (i, &c) in comps.iter().enumerate() {
                rest_lb -= lbs[i];
                if sum + rest_lb + lbs[i] >= alpha {
                    return sum + rest_lb + lbs[i];
                }
                let r = self.solve(c, alpha - sum - rest_lb);
                sum += r;
                if sum + rest_lb >= alpha {
                    return sum + rest_lb;
                }
            }
            return sum;
        }
        if self.is_path(u) {
            return 1;
        }
        let mut lb = 2;
        if let Some(e) = self.table.get(&u) {
            if e.exact || e.value >= alpha {
                return e.value;
            }
            lb = lb.max(e.value);
        }
        if lb >= alpha {
            return lb;
        }
        let v = u.trailing_zeros() as Vertex;
        let mut best = alpha;
        let mut choice = 0;
        for p in self.paths_through(u, v) {
            let rest = u & !p;
            let lb_rest = self.cost_lower_bound(&self.components(rest));
            if 1 + lb_rest >= best {
                continue;
            }
            let r = self.solve(rest, best - 1);
            if self.aborted {
                return alpha.max(lb);
            }
            if r + 1 < best {
                best = r + 1;
                choice = p;
                if best == lb {
                    break;
                }
            }
        }
        if best < alpha {
            self.store(
                u,
                Entry {
                    value: best,
                    exact: true,
                    choice,
                },
            );
        } else {
            self.store(
                u,
                Entry {
                    value: alpha,
                    exact: false,
                    choice: 0,
                },
            );
        }
        best
    }

    /// Paths of an optimal solution for `u`, whose value is `value`.
    fn reconstruct(&mut self, u: Mask, out: &mut Vec<Mask>) {
        for c in self.components(u) {
            if self.is_path(c) {
                out.push(c);
                continue;
            }
            let entry = match self.table.get(&c) {
                Some(e) if e.exact => *e,
                _ => {
                    // evicted by the table cap; solve again without a cutoff
                    let v = self.solve(c, u32::MAX);
                    debug_assert!(v < u32::MAX);
                    *self.table.get(&c).expect("fresh exact entry")
                }
            };
            out.push(entry.choice);
            self.reconstruct(c & !entry.choice, out);
        }
    }

    fn edges_of(&self, paths: &[Mask]) -> Vec<Edge> {
        let mut edges = Vec::new();
        for &p in paths {
            for v in vertices_of(p) {
                for w in vertices_of(self.nb[v] & p) {
                    if v < w {
                        edges.push(Edge(v, w));
                    }
                }
            }
        }
        edges
    }

    /// Lowest uncovered vertex, grown greedily along the longest path.
    fn greedy(&self) -> Vec<Mask> {
        let mut u: Mask = if self.g.n() == 128 {
            Mask::MAX
        } else {
            bit(self.g.n()) - 1
        };
        let mut out = Vec::new();
        while u != 0 {
            let v = u.trailing_zeros() as Vertex;
            let p = self.paths_through(u, v)[0];
            out.push(p);
            u &= !p;
        }
        out
    }
}

/// Exact ρ(G) by branch and bound. On budget exhaustion the best solution
/// found so far is returned with `optimal` false.
pub fn rho_exact(g: &Graph, budget: Budget) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n > MAX_EXACT_VERTICES {
        return Err(SolveError::TooLarge {
            n,
            cap: MAX_EXACT_VERTICES,
        });
    }
    let start = Instant::now();
    let mut s = Solver::new(g, budget);
    let full: Mask = if n == 128 { Mask::MAX } else { bit(n) - 1 };
    let incumbent = s.greedy();
    let alpha = incumbent.len() as u32;
    let r = s.solve(full, alpha);
    let (paths, optimal) = if s.aborted {
        (incumbent, false)
    } else if r < alpha {
        let mut out = Vec::new();
        s.budget = Budget::unlimited();
        s.reconstruct(full, &mut out);
        (out, true)
    } else {
        (incumbent, true)
    };
    let witness = Ipf::new(g, s.edges_of(&paths)).expect("solver paths are induced");
    Ok(SolveResult {
        rho: witness.path_count,
        witness,
        stats: SolveStats {
            nodes: s.nodes,
            elapsed: start.elapsed(),
        },
        method: Method::Bnb,
        optimal,
    })
}

/// Exact ρ(G) by enumerating edge subsets in which every vertex has degree
/// at most 2 and no cycle closes; each maximal candidate is checked with
/// [`verify_ipf`].
pub fn rho_exhaustive(g: &Graph) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let (best, nodes) = exhaustive_search(g, &|_| true)?;
    let witness = best.expect("the trivial factor always qualifies");
    Ok(SolveResult {
        rho: witness.path_count,
        witness,
        stats: SolveStats {
            nodes,
            elapsed: start.elapsed(),
        },
        method: Method::Exhaustive,
        optimal: true,
    })
}

/// A smallest IPF among those satisfying `pred`, by exhaustive search.
pub fn best_ipf_where(g: &Graph, pred: impl Fn(&Ipf) -> bool) -> Result<Option<Ipf>, SolveError> {
    exhaustive_search(g, &pred).map(|(best, _)| best)
}

fn exhaustive_search(g: &Graph, pred: &dyn Fn(&Ipf) -> bool) -> Result<(Option<Ipf>, u64), SolveError> {
    let n = g.n();
    if n > MAX_EXHAUSTIVE_VERTICES {
        return Err(SolveError::TooLarge {
            n,
            cap: MAX_EXHAUSTIVE_VERTICES,
        });
    }
    struct State<'a> {
        g: &'a Graph,
        pred: &'a dyn Fn(&Ipf) -> bool,
        deg: Vec<u8>,
        other_end: Vec<Vertex>,
        chosen: Vec<Edge>,
        best: Option<Ipf>,
        best_count: usize,
        nodes: u64,
    }
    fn dfs(st: &mut State<'_>, i: usize) {
        st.nodes += 1;
        let n = st.g.n();
        let m = st.g.m();
        let possible = (st.chosen.len() + (m - i)).min(n.saturating_sub(1));
        if n - possible >= st.best_count {
            return;
        }
        if i == m {
            if verify_ipf(st.g, &st.chosen).is_ok() {
                let ipf = Ipf::new(st.g, st.chosen.clone()).expect("just verified");
                if (st.pred)(&ipf) {
                    st.best_count = ipf.path_count;
                    st.best = Some(ipf);
                }
            }
            return;
        }
        let e = st.g.edges()[i];
        let Edge(u, v) = e;
        if st.deg[u] < 2 && st.deg[v] < 2 && st.other_end[u] != v {
            let (a, b) = (st.other_end[u], st.other_end[v]);
            st.deg[u] += 1;
            st.deg[v] += 1;
            st.other_end[a] = b;
            st.other_end[b] = a;
            st.chosen.push(e);
            dfs(st, i + 1);
            st.chosen.pop();
            st.other_end[a] = u;
            st.other_end[b] = v;
            st.deg[u] -= 1;
            st.deg[v] -= 1;
        }
        dfs(st, i + 1);
    }
    let mut st = State {
        g,
        pred,
        deg: vec![0; n],
        other_end: (0..n).collect(),
        chosen: Vec::new(),
        best: None,
        best_count: n + 1,
        nodes: 0,
    };
    dfs(&mut st, 0);
    Ok((st.best, st.nodes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn oracle_small_values() {
        assert_eq!(rho_exhaustive(&cycle(5)).unwrap().rho, 2);
        assert_eq!(rho_exhaustive(&k4()).unwrap().rho, 2);
        assert_eq!(rho_exhaustive(&k33()).unwrap().rho, 2);
    }

    #[test]
    fn bnb_small_values() {
        for g in [cycle(5), k4(), k33(), cycle(3)] {
            let r = rho_exact(&g, Budget::default()).unwrap();
            assert!(r.optimal);
            assert_eq!(r.rho, rho_exhaustive(&g).unwrap().rho);
        }
    }

    #[test]
    fn paths_and_empty_graph() {
        let p = Graph::new(5, (0..4).map(|i| (i, i + 1))).unwrap();
        assert_eq!(rho_exact(&p, Budget::default()).unwrap().rho, 1);
        assert_eq!(rho_exact(&Graph::empty(3), Budget::default()).unwrap().rho, 3);
        assert_eq!(rho_exact(&Graph::empty(0), Budget::default()).unwrap().rho, 0);
        assert_eq!(rho_exhaustive(&Graph::empty(0)).unwrap().rho, 0);
    }

    #[test]
    fn budget_exhaustion_reports_incumbent() {
        let r = rho_exact(&k33(), Budget::nodes(1)).unwrap();
        assert!(!r.optimal);
        assert!(r.rho >= 2);
    }

    #[test]
    fn oracle_cap() {
        assert_eq!(
            rho_exhaustive(&cycle(13)).unwrap_err(),
            SolveError::TooLarge { n: 13, cap: 12 }
        );
    }
}
