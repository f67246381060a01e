//! Graph corpora shared by the test suites: the cubic census files,
//! exhaustive and random subcubic graphs, and a checker for the lift
//! surgeries.

use ipfactor::graph::graph6::parse_graph6;
use ipfactor::{Edge, Graph};
use std::path::PathBuf;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// Connected cubic graphs of order `n` from the census files, if present.
pub fn census(n: usize) -> Vec<Graph> {
    let path = data_dir().join(format!("cubic/cubic_{n:02}.g6"));
    let Ok(text) = std::fs::read_to_string(&path) else {
        return Vec::new();
    };
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l).expect("census line parses"))
        .collect()
}

/// Every graph on `0..n` made of the cycle `0 1 ... n-1` and a matching of
/// chords, i.e. every hamiltonian {2,3}-graph with a fixed hamilton cycle.
pub fn cycle_plus_matchings(n: usize) -> Vec<Graph> {
    let cycle: Vec<Edge> = (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect();
    let chords: Vec<Edge> = (0..n)
        .flat_map(|a| (a + 2..n).map(move |b| Edge(a, b)))
        .filter(|e| !(e.0 == 0 && e.1 == n - 1))
        .collect();
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut chosen = Vec::new();
    fn go(
        i: usize,
        chords: &[Edge],
        used: &mut [bool],
        chosen: &mut Vec<Edge>,
        cycle: &[Edge],
        n: usize,
        out: &mut Vec<Graph>,
    ) {
        if i == chords.len() {
            let edges: Vec<(usize, usize)> = cycle.iter().chain(chosen.iter()).map(|e| (e.0, e.1)).collect();
            out.push(Graph::new(n, edges).unwrap());
            return;
        }
        go(i + 1, chords, used, chosen, cycle, n, out);
        let Edge(a, b) = chords[i];
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            chosen.push(chords[i]);
            go(i + 1, chords, used, chosen, cycle, n, out);
            chosen.pop();
            used[a] = false;
            used[b] = false;
        }
    }
    go(0, &chords, &mut used, &mut chosen, &cycle, n, &mut out);
    out
}

/// Operations on cubic graphs that keep a non-hamiltonian graph
/// non-hamiltonian.
pub mod nonham {
    use ipfactor::families::petersen;
    use ipfactor::{Edge, Graph};
    use rand::Rng;

    fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        Graph::new(n, edges).expect("operation keeps the graph simple")
    }

    fn pairs(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().iter().map(|e| (e.0, e.1)).collect()
    }

    pub fn triangle_at(g: &Graph, v: usize) -> Graph {
        let n = g.n();
        let nb = g.neighbors(v).to_vec();
        let mut e: Vec<(usize, usize)> = pairs(g)
            .into_iter()
            .filter(|&(a, b)| !(a == v && (b == nb[1] || b == nb[2])) && !(b == v && (a == nb[1] || a == nb[2])))
            .collect();
        e.extend([(n, nb[1]), (n + 1, nb[2]), (v, n), (v, n + 1), (n, n + 1)]);
        build(n + 2, e)
    }

    pub fn k4_minus_on(g: &Graph, x: Edge) -> Graph {
        let n = g.n();
        let (a, b, c, d) = (n, n + 1, n + 2, n + 3);
        let mut e: Vec<(usize, usize)> = pairs(g).into_iter().filter(|&p| p != (x.0, x.1)).collect();
        e.extend([(x.0, a), (x.1, b), (a, c), (a, d), (b, c), (b, d), (c, d)]);
        build(n + 4, e)
    }

    fn union(g: &Graph, h: &Graph, drop_g: Edge, drop_h: Edge) -> (Vec<(usize, usize)>, usize) {
        let n = g.n();
        let mut e: Vec<(usize, usize)> = pairs(g).into_iter().filter(|&p| p != (drop_g.0, drop_g.1)).collect();
        e.extend(pairs(h).into_iter().filter(|&p| p != (drop_h.0, drop_h.1)).map(|(a, b)| (a + n, b + n)));
        (e, n)
    }

    /// A 2-edge cut between `g - eg` and `h - eh`.
    pub fn cut_join(g: &Graph, eg: Edge, h: &Graph, eh: Edge) -> Graph {
        let (mut e, n) = union(g, h, eg, eh);
        e.extend([(eg.0, eh.0 + n), (eg.1, eh.1 + n)]);
        build(n + h.n(), e)
    }

    /// Subdivide `eg` and `eh` and join the new vertices.
    pub fn bridge_join(g: &Graph, eg: Edge, h: &Graph, eh: Edge) -> Graph {
        let (mut e, n) = union(g, h, eg, eh);
        let (p, q) = (n + h.n(), n + h.n() + 1);
        e.extend([(eg.0, p), (eg.1, p), (eh.0 + n, q), (eh.1 + n, q), (p, q)]);
        build(n + h.n() + 2, e)
    }

    /// A random non-hamiltonian cubic graph grown from the Petersen graph
    /// by `steps` operations, joining with graphs from `partners`.
    pub fn random(rng: &mut impl Rng, steps: usize, partners: &[Graph], max_n: usize) -> Graph {
        let mut g = petersen();
        for _ in 0..steps {
            let pick = |rng: &mut dyn rand::RngCore, g: &Graph| g.edges()[rng.gen_range(0..g.m())];
            let next = match rng.gen_range(0..4) {
                0 => triangle_at(&g, rng.gen_range(0..g.n())),
                1 => {
                    let e = pick(rng, &g);
                    k4_minus_on(&g, e)
                }
                k => {
                    let h = &partners[rng.gen_range(0..partners.len())];
                    let (eg, eh) = (pick(rng, &g), pick(rng, h));
                    if k == 2 {
                        cut_join(&g, eg, h, eh)
                    } else {
                        bridge_join(&g, eg, h, eh)
                    }
                }
            };
            if next.n() > max_n {
                break;
            }
            g = next;
        }
        g
    }
}

/// Random {2,3}-graphs whose blocks are hamiltonian of order at least 5,
/// joined in a tree by bridges between degree-2 vertices.
pub fn random_block_tree(rng: &mut impl rand::Rng, pool: &[Graph], blocks: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut deg: Vec<usize> = Vec::new();
    let mut n = 0;
    for k in 0..blocks {
        let b = &pool[rng.gen_range(0..pool.len())];
        let free_old: Vec<usize> = (0..n).filter(|&v| deg[v] == 2).collect();
        let free_new: Vec<usize> = b.vertices().filter(|&v| b.degree(v) == 2).collect();
        if k > 0 && (free_old.is_empty() || free_new.is_empty()) {
            continue;
        }
        edges.extend(b.edges().iter().map(|e| (e.0 + n, e.1 + n)));
        deg.extend(b.vertices().map(|v| b.degree(v)));
        if k > 0 {
            let x = free_old[rng.gen_range(0..free_old.len())];
            let y = free_new[rng.gen_range(0..free_new.len())] + n;
            edges.push((x, y));
            deg[x] += 1;
            deg[y] += 1;
        }
        n += b.n();
    }
    Graph::new(n, edges).unwrap()
}

/// A random connected subcubic graph: a random tree of maximum degree 3
/// plus up to `extra` further edges.
pub fn random_subcubic(rng: &mut impl rand::Rng, n: usize, extra: usize) -> Graph {
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < 3).collect();
        let u = open[rng.gen_range(0..open.len())];
        edges.push((u, v));
        deg[u] += 1;
        deg[v] += 1;
    }
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (a, b) = (a.min(b), a.max(b));
        if a != b && deg[a] < 3 && deg[b] < 3 && !edges.contains(&(a, b)) && !edges.contains(&(b, a)) {
            edges.push((a, b));
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

/// A random IPF: edges are tried in random order and kept while the set
/// stays an induced path factor.
pub fn random_ipf(rng: &mut impl rand::Rng, g: &Graph) -> ipfactor::Ipf {
    use rand::seq::SliceRandom;
    let mut order = g.edges().to_vec();
    order.shuffle(rng);
    let mut kept: Vec<Edge> = Vec::new();
    for e in order {
        kept.push(e);
        if ipfactor::Ipf::new(g, kept.clone()).is_err() {
            kept.pop();
        }
    }
    ipfactor::Ipf::new(g, kept).unwrap()
}

/// `g` with its vertices renamed by a random permutation.
pub fn relabel(rng: &mut impl rand::Rng, g: &Graph) -> Graph {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// Every place one of the three lift surgeries applies to `g`.
pub fn lift_sites(g: &Graph) -> Vec<ipfactor::graph::Surgery> {
    use ipfactor::graph::Surgery;
    let mut out = Vec::new();
    for c in g.vertices().filter(|&c| g.degree(c) == 2) {
        let (a, b) = (g.neighbors(c)[0], g.neighbors(c)[1]);
        if g.has_edge(a, b) {
            if g.degree(a) == 3 && g.degree(b) == 3 {
                out.push(Surgery::AugmentTriangle { a: a.min(b), b: a.max(b), c });
            }
        } else {
            out.push(Surgery::SuppressVertex(c));
        }
    }
    for &Edge(a, b) in g.edges() {
        if g.degree(a) == 2 && g.degree(b) == 2 {
            out.push(Surgery::PasteK4Minus { a, b });
        }
    }
    out
}

/// Apply `s`, lift several IPFs of the result back, and check the count
/// bound, the endpoint guarantee and well-behavedness off the exempt set.
pub fn check_lift(g: &Graph, s: &ipfactor::graph::Surgery, rng: &mut impl rand::Rng) -> Result<usize, String> {
    use ipfactor::constructive::lift;
    use ipfactor::exact::{rho_exact, Budget};
    use ipfactor::graph::Surgery;
    use ipfactor::ipf::is_well_behaved;
    use ipfactor::Ipf;
    let (gp, rec) = s.apply(g).map_err(|e| e.to_string())?;
    let mut primes = vec![Ipf::trivial(&gp), rho_exact(&gp, Budget::unlimited()).unwrap().witness];
    for _ in 0..3 {
        primes.push(random_ipf(rng, &gp));
    }
    let (slack, exempt): (usize, Vec<usize>) = match *s {
        Surgery::AugmentTriangle { c, .. } => (0, vec![c]),
        Surgery::PasteK4Minus { a, b } => (0, vec![a, b]),
        Surgery::SuppressVertex(c) => (1, vec![c]),
        _ => unreachable!("not a lift surgery"),
    };
    for pp in &primes {
        let p = lift(g, &gp, &rec, pp).map_err(|e| format!("{s:?}: {e}"))?;
        let p = Ipf::new(g, p.edges).map_err(|e| format!("{s:?}: {e}"))?;
        if p.path_count > pp.path_count + slack {
            return Err(format!("{s:?}: {} paths from {}", p.path_count, pp.path_count));
        }
        let ends = match exempt.as_slice() {
            [c] => p.is_endpoint(*c),
            [a, b] => p.end_distinct_paths(*a, *b),
            _ => unreachable!(),
        };
        if !ends {
            return Err(format!("{s:?}: endpoint guarantee fails for {:?}", p.paths));
        }
        if is_well_behaved(&gp, pp, &[]).unwrap().verdict && !is_well_behaved(g, &p, &exempt).unwrap().verdict {
            return Err(format!("{s:?}: well-behavedness lost for {:?}", p.paths));
        }
    }
    Ok(primes.len())
}
