//! Exhaustive searches: hamilton cycles, perfect matchings, 2-factors.

use super::{Edge, Graph, Vertex};
use std::ops::ControlFlow;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("vertex {0} has degree {1}; a {{2,3}}-graph is required")]
    Not23Graph(Vertex, usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// First hamilton cycle found by backtracking from vertex 0 in sorted
/// adjacency order. The cycle is returned as a vertex sequence starting at 0.
pub fn hamilton_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    let mut path = vec![0];
    let mut on = vec![false; n];
    on[0] = true;
    if extend(g, &mut path, &mut on) {
        Some(path)
    } else {
        None
    }
}

fn extend(g: &Graph, path: &mut Vec<Vertex>, on: &mut [bool]) -> bool {
    let n = g.n();
    let v = *path.last().unwrap();
    if path.len() == n {
        return g.has_edge(v, 0);
    }
    // every unvisited vertex needs two usable neighbours (unvisited, the
    // current end, or the start)
    for w in 0..n {
        if on[w] {
            continue;
        }
        let free = g
            .neighbors(w)
            .iter()
            .filter(|&&x| !on[x] || x == v || x == 0)
            .count();
        if free < 2 {
            return false;
        }
    }
    for &w in g.neighbors(v) {
        if on[w] {
            continue;
        }
        on[w] = true;
        path.push(w);
        if extend(g, path, on) {
            return true;
        }
        path.pop();
        on[w] = false;
    }
    false
}

/// Calls `f` with each perfect matching of the subgraph induced by
/// `vertices`, in lexicographic order of the matching edges.
pub fn for_each_perfect_matching<F>(g: &Graph, vertices: &[Vertex], mut f: F)
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    let mut inside = vec![false; g.n()];
    for &v in vertices {
        inside[v] = true;
    }
    let mut used = vec![false; g.n()];
    let mut order: Vec<Vertex> = vertices.to_vec();
    order.sort_unstable();
    let mut chosen = Vec::new();
    let _ = match_rec(g, &order, 0, &inside, &mut used, &mut chosen, &mut f);
}

fn match_rec<F>(
    g: &Graph,
    order: &[Vertex],
    mut i: usize,
    inside: &[bool],
    used: &mut [bool],
    chosen: &mut Vec<Edge>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    while i < order.len() && used[order[i]] {
        i += 1;
    }
    if i == order.len() {
        return f(chosen);
    }
    let v = order[i];
    used[v] = true;
    for &w in g.neighbors(v) {
        if !inside[w] || used[w] {
            continue;
        }
        used[w] = true;
        chosen.push(Edge::new(v, w));
        let r = match_rec(g, order, i + 1, inside, used, chosen, f);
        chosen.pop();
        used[w] = false;
        r?;
    }
    used[v] = false;
    ControlFlow::Continue(())
}

/// All perfect matchings of `g`.
pub fn perfect_matchings(g: &Graph) -> Vec<Vec<Edge>> {
    let all: Vec<Vertex> = g.vertices().collect();
    let mut out = Vec::new();
    for_each_perfect_matching(g, &all, |m| {
        out.push(m.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// A spanning set of vertex-disjoint cycles, each rotated so that its
/// smallest vertex comes first followed by the smaller of its two
/// neighbours; cycles are ordered by first vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    pub cycles: Vec<Vec<Vertex>>,
}

impl TwoFactor {
    pub fn new(mut cycles: Vec<Vec<Vertex>>) -> TwoFactor {
        for c in &mut cycles {
            canonical_rotation(c);
        }
        cycles.sort();
        TwoFactor { cycles }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn min_cycle_len(&self) -> usize {
        self.cycles.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| Edge::new(c[i], c[(i + 1) % c.len()])))
            .collect();
        out.sort_unstable();
        out
    }

    /// Cycle index of every vertex.
    pub fn cycle_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, c) in self.cycles.iter().enumerate() {
            for &v in c {
                out[v] = i;
            }
        }
        out
    }

    /// Checks disjointness, coverage and that every cycle step is an edge.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for c in &self.cycles {
            if c.len() < 3 {
                return false;
            }
            for (i, &v) in c.iter().enumerate() {
                if v >= g.n() || seen[v] || !g.has_edge(v, c[(i + 1) % c.len()]) {
                    return false;
                }
                seen[v] = true;
            }
        }
        seen.iter().all(|&s| s)
    }
}

fn canonical_rotation(c: &mut [Vertex]) {
    if c.is_empty() {
        return;
    }
    let pos = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(pos);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
}

/// Splits a 2-regular spanning edge set into its cycles.
fn cycles_of(n: usize, edges: &[Edge]) -> Vec<Vec<Vertex>> {
    let mut adj = vec![Vec::with_capacity(2); n];
    for &Edge(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut cycle = vec![s];
        seen[s] = true;
        let (mut prev, mut cur) = (s, adj[s][0]);
        while cur != s {
            seen[cur] = true;
            cycle.push(cur);
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        out.push(cycle);
    }
    out
}

/// Searches the 2-factors of a {2,3}-graph whose cycles all have length
/// at least `min_cycle_len`. Each 2-factor is the complement of a perfect
/// matching on the degree-3 vertices. With `minimize_cycles` the first
/// factor with the fewest cycles is returned, otherwise the first found.
pub fn two_factor_search(
    g: &Graph,
    min_cycle_len: usize,
    minimize_cycles: bool,
) -> Result<Option<TwoFactor>, SearchError> {
    if let Some(v) = g.vertices().find(|&v| !(2..=3).contains(&g.degree(v))) {
        return Err(SearchError::Not23Graph(v, g.degree(v)));
    }
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let cubic_part: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    let mut best: Option<Vec<Vec<Vertex>>> = None;
    for_each_perfect_matching(g, &cubic_part, |m| {
        let rest = g.without_edges(m);
        let cycles = cycles_of(g.n(), rest.edges());
        if cycles.iter().any(|c| c.len() < min_cycle_len) {
            return ControlFlow::Continue(());
        }
        let better = best.as_ref().is_none_or(|b| cycles.len() < b.len());
        if better {
            let done = !minimize_cycles || cycles.len() == 1;
            best = Some(cycles);
            if done {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    Ok(best.map(TwoFactor::new))
}

/// Every 2-factor of a {2,3}-graph, without a length filter.
pub fn all_two_factors(g: &Graph) -> Result<Vec<TwoFactor>, SearchError> {
    if let Some(v) = g.vertices().find(|&v| !(2..=3).contains(&g.degree(v))) {
        return Err(SearchError::Not23Graph(v, g.degree(v)));
    }
    let cubic_part: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    let mut out = Vec::new();
    for_each_perfect_matching(g, &cubic_part, |m| {
        let rest = g.without_edges(m);
        out.push(TwoFactor::new(cycles_of(g.n(), rest.edges())));
        ControlFlow::Continue(())
    });
    Ok(out)
}
