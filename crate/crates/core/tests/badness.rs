//! recognize_bad against a direct search over hamilton cycles.

use ipfactor_validation::{cycle_plus_matchings, random_subcubic, relabel};
use ipfactor::constructive::recognize_bad;
use ipfactor::families::FamilySpec;
use ipfactor::graph::Surgery;
use ipfactor::{Edge, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every hamilton cycle of the subgraph induced on `vs`, as a vertex
/// sequence starting at `vs[0]`, in both directions.
fn cycles(g: &Graph, vs: &[usize]) -> Vec<Vec<usize>> {
    fn go(g: &Graph, vs: &[usize], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() == vs.len() {
            if g.has_edge(last, path[0]) && vs.len() >= 3 {
                out.push(path.clone());
            }
            return;
        }
        for &w in g.neighbors(last) {
            if vs.contains(&w) && !path.contains(&w) {
                path.push(w);
                go(g, vs, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, vs, &mut vec![vs[0]], &mut out);
    out
}

fn components(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let h = Graph::new(n, edges.iter().map(|e| (e.0, e.1))).unwrap();
    h.components()
}

/// Is the hub, with subdivision vertices `subs`, a triangle ring whose
/// non-triangle edges carry the subdivisions?
fn ring_with(g: &Graph, hub: &[usize], subs: &[usize]) -> bool {
    let m = hub.len() - subs.len();
    if m < 6 || !m.is_multiple_of(3) {
        return false;
    }
    let hub_edges = g.edges().iter().filter(|e| hub.contains(&e.0) && hub.contains(&e.1)).count();
    if hub_edges != hub.len() + m / 3 {
        return false;
    }
    for c in cycles(g, hub) {
        // positions of the ring vertices; each subdivision vertex sits
        // after ring vertex `gap`
        let w: Vec<usize> = c.iter().copied().filter(|v| !subs.contains(v)).collect();
        let mut gaps = Vec::new();
        let mut ok = true;
        for (i, v) in c.iter().enumerate() {
            if subs.contains(v) {
                let prev = c[(i + c.len() - 1) % c.len()];
                if subs.contains(&prev) {
                    ok = false;
                }
                gaps.push(w.iter().position(|&x| x == prev).unwrap());
            }
        }
        if !ok {
            continue;
        }
        for r in 0..3 {
            let chords_ok = (0..m / 3).all(|j| g.has_edge(w[(3 * j + r) % m], w[(3 * j + r + 2) % m]));
            let gaps_ok = gaps.iter().all(|&i| (i + 3 - r) % 3 == 2);
            if chords_ok && gaps_ok {
                return true;
            }
        }
    }
    false
}

/// The definition, checked head on.
fn brute_is_bad(g: &Graph) -> bool {
    let n = g.n();
    let bridges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| !g.without_edges(&[e]).is_connected())
        .collect();
    let rest: Vec<Edge> = g.edges().iter().copied().filter(|e| !bridges.contains(e)).collect();
    let comps = components(n, &rest);
    let hub_size = comps.iter().map(Vec::len).max().unwrap();
    let hubs: Vec<&Vec<usize>> = comps.iter().filter(|c| c.len() == hub_size).collect();
    if hubs.len() != 1 {
        return false;
    }
    let hub = hubs[0];
    let mut subs = Vec::new();
    for c in comps.iter().filter(|c| c.len() != hub_size) {
        let out: Vec<&Edge> = bridges.iter().filter(|e| c.contains(&e.0) != c.contains(&e.1)).collect();
        if c.len() != 5 || out.len() != 1 || cycles(g, c).is_empty() {
            return false;
        }
        let x = if hub.contains(&out[0].0) { out[0].0 } else { out[0].1 };
        if !hub.contains(&x) {
            return false;
        }
        subs.push(x);
    }
    ring_with(g, hub, &subs)
}

fn agree(g: &Graph) {
    let got = recognize_bad(g).unwrap().is_bad;
    assert_eq!(got, brute_is_bad(g), "{:?}", g.edges());
}

fn bad_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in (6..=max_n).step_by(3) {
        for mask in 0u32..1 << (n / 3) {
            let subdivided: Vec<usize> = (0..n / 3).filter(|j| mask >> j & 1 == 1).collect();
            if n + 6 * subdivided.len() > max_n {
                continue;
            }
            for block in 0..3 {
                let spec = FamilySpec::BadGraph { n, subdivided: subdivided.clone(), block };
                out.push(spec.generate().unwrap().graph);
            }
        }
    }
    out
}

#[test]
fn generated_bad_graphs_are_recognised() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in bad_graphs(21) {
        let g = relabel(&mut rng, &g);
        assert!(brute_is_bad(&g));
        agree(&g);
    }
}

#[test]
fn perturbed_bad_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut seen = 0;
    for g in bad_graphs(15) {
        // subdivide a triangle edge, then add an edge if two degree-2
        // vertices allow it
        for &e in g.edges() {
            let (h, _) = Surgery::SubdivideEdge(e).apply(&g).unwrap();
            agree(&h);
            let twos: Vec<usize> = h.vertices().filter(|&v| h.degree(v) == 2).collect();
            let (a, b) = (twos[rng.gen_range(0..twos.len())], twos[rng.gen_range(0..twos.len())]);
            if a != b && !h.has_edge(a, b) {
                let h2 = h.with_edges(&[Edge::new(a, b)]).unwrap();
                agree(&relabel(&mut rng, &h2));
            }
            seen += 1;
        }
    }
    assert!(seen > 100);
}

#[test]
fn hamiltonian_graphs() {
    for n in 5..=10 {
        for g in cycle_plus_matchings(n) {
            agree(&g);
        }
    }
}

#[test]
fn random_23_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 2000 {
        let n = rng.gen_range(6..=15);
        let g = random_subcubic(&mut rng, n, 2 * n);
        if g.is_23_graph() {
            agree(&g);
            checked += 1;
        }
    }
}
