use ipfactor_validation::{census, cycle_plus_matchings};
use ipfactor::constructive::{ipf_cubic, ipf_ham23, ipf_small_ham, is_triangle_ring};
use ipfactor::exact::rho_exhaustive;

#[test]
fn small_blocks_every_end() {
    for n in 5..=7 {
        for g in cycle_plus_matchings(n) {
            for x in g.vertices().filter(|&v| g.degree(v) == 2) {
                let p = ipf_small_ham(&g, Some(x)).unwrap_or_else(|e| panic!("{:?} x={x}: {e}", g.edges()));
                assert!(p.is_endpoint(x));
            }
        }
    }
}

#[test]
fn ham23_meets_its_bound() {
    for n in 6..=10 {
        for g in cycle_plus_matchings(n) {
            let p = ipf_ham23(&g).unwrap_or_else(|e| panic!("{:?}: {e}", g.edges()));
            let bound = if n >= 7 && !is_triangle_ring(&g) { (n - 1) / 3 } else { n / 3 };
            assert!(p.path_count <= bound, "{:?}", g.edges());
        }
    }
}

#[test]
fn cubic_census() {
    for n in (4..=14).step_by(2) {
        for g in census(n) {
            let c = ipf_cubic(&g).unwrap_or_else(|e| panic!("{:?}: {e}", g.edges()));
            assert!(c.verified);
            if n <= 12 {
                assert!(rho_exhaustive(&g).unwrap().rho <= c.ipf.path_count);
            }
        }
    }
}

#[test]
fn nonhamiltonian_cubic_graphs() {
    use rand::SeedableRng;
    let partners: Vec<_> = (4..=10).step_by(2).flat_map(census).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for i in 0..300 {
        let g = ipfactor_validation::nonham::random(&mut rng, 1 + i % 4, &partners, 34);
        let c = ipf_cubic(&g).unwrap_or_else(|e| panic!("case {i} {:?}: {e}", g.edges()));
        assert!(c.verified, "case {i}");
        assert!(c.ipf.path_count <= (g.n() - 1) / 3, "case {i}");
    }
}

#[test]
fn block_trees() {
    use ipfactor::constructive::{ipf_blocktree, is_bad};
    use rand::{Rng, SeedableRng};
    let pool: Vec<_> = (5..=9)
        .flat_map(cycle_plus_matchings)
        .filter(|g| g.vertices().any(|v| g.degree(v) == 2))
        .collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for i in 0..400 {
        let blocks = rng.gen_range(2..6);
        let g = ipfactor_validation::random_block_tree(&mut rng, &pool, blocks);
        if g.n() < 6 {
            continue;
        }
        let p = ipf_blocktree(&g).unwrap_or_else(|e| panic!("case {i} {:?}: {e}", g.edges()));
        let n = g.n();
        let bound = if n >= 7 && !is_bad(&g) { (n - 1) / 3 } else { n / 3 };
        assert!(p.path_count <= bound, "case {i}");
    }
}

fn join_by_bridge(a: &ipfactor::Graph, x: usize, b: &ipfactor::Graph, y: usize) -> ipfactor::Graph {
    let n = a.n();
    let mut e: Vec<(usize, usize)> = a.edges().iter().map(|e| (e.0, e.1)).collect();
    e.extend(b.edges().iter().map(|e| (e.0 + n, e.1 + n)));
    e.push((x, y + n));
    ipfactor::Graph::new(n + b.n(), e).unwrap()
}

#[test]
fn bridged_triangle_rings() {
    use ipfactor::constructive::{construct, is_bad, Method};
    use ipfactor::families::triangle_ring;
    for (n1, n2) in [(9, 6), (9, 9), (12, 9), (12, 12), (15, 6)] {
        let g = join_by_bridge(&triangle_ring(n1).unwrap(), 0, &triangle_ring(n2).unwrap(), 3);
        let c = construct(&g, Method::Blocktree).unwrap_or_else(|e| panic!("{n1},{n2}: {e}"));
        assert!(c.trace.iter().any(|s| s == "bad hubs across a bridge"), "{:?}", c.trace);
        let bound = if is_bad(&g) { g.n() / 3 } else { (g.n() - 1) / 3 };
        assert!(c.ipf.path_count <= bound);
    }
}

#[test]
fn leaf_on_a_subdivided_triangle_edge() {
    use ipfactor::constructive::{construct, Method};
    use ipfactor::families::triangle_ring;
    use ipfactor::graph::Surgery;
    let leaf = ipfactor::Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
    for n in [9, 12, 15] {
        let (ring, rec) = Surgery::SubdivideEdge((0, 1).into()).apply(&triangle_ring(n).unwrap()).unwrap();
        let g = join_by_bridge(&ring, rec.added[0], &leaf, 0);
        let c = construct(&g, Method::Blocktree).unwrap_or_else(|err| panic!("n={n}: {err}"));
        assert!(c.trace.iter().any(|s| s == "bad repair on the cycle"), "{:?}", c.trace);
        assert!(c.ipf.path_count <= (g.n() - 1) / 3);
        // subdividing the chord of a triangle leaves the hub non-hamiltonian
        let (ring, rec) = Surgery::SubdivideEdge((1, n - 1).into()).apply(&triangle_ring(n).unwrap()).unwrap();
        let g = join_by_bridge(&ring, rec.added[0], &leaf, 0);
        assert!(matches!(
            construct(&g, Method::Blocktree),
            Err(ipfactor::constructive::ConstructError::Precondition(_))
        ));
    }
}

#[test]
fn two_factor_swap_on_a_bad_remainder() {
    use ipfactor::constructive::{construct, ipf_23_with_2factor, recognize_bad, Method};
    use ipfactor::families::FamilySpec;
    use ipfactor::graph::{hamilton_cycle, TwoFactor};
    for (n, block) in [(9, 0), (9, 1), (12, 0), (12, 1)] {
        let bad = FamilySpec::BadGraph { n, subdivided: vec![0, 1], block }.generate().unwrap().graph;
        let report = recognize_bad(&bad).unwrap();
        let free = |blk: &[usize]| *blk.iter().rev().find(|&&v| bad.degree(v) == 2).unwrap();
        let (u, v) = (free(&report.attachments[0].block), free(&report.attachments[1].block));
        let g = bad.with_edges(&[ipfactor::Edge::new(u, v)]).unwrap();
        // the 2-factor of block cycles of the bad graph
        let blocks = ipfactor::graph::block_decomposition(&bad).blocks;
        let cycles = blocks
            .iter()
            .map(|b| {
                let (h, map) = bad.induced_subgraph(b);
                hamilton_cycle(&h).unwrap().into_iter().map(|w| map[w]).collect()
            })
            .collect();
        let f = TwoFactor::new(cycles);
        let p = ipf_23_with_2factor(&g, &f).unwrap_or_else(|e| panic!("n={n}: {e}"));
        assert!(p.path_count <= (g.n() - 1) / 3, "n={n}");
        let c = construct(&g, Method::TwoFactor).unwrap();
        assert!(c.verified, "{:?}", c.trace);
    }
}
