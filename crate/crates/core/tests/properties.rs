use ipfactor_validation::{check_lift, lift_sites, random_ipf, random_subcubic};
use ipfactor::bounds::{glue_lower_bound, GlueDecomposition, GluePart, PartRho};
use ipfactor::constructive::standardise;
use ipfactor::exact::{rho_exact, rho_exhaustive, Budget};
use ipfactor::graph::Surgery;
use ipfactor::ipf::is_standardised;
use ipfactor::{Edge, Graph, Ipf};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rho(g: &Graph) -> usize {
    let r = rho_exact(g, Budget::unlimited()).unwrap();
    assert!(r.optimal);
    r.rho
}

fn graph(seed: u64, lo: usize, hi: usize) -> (Graph, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(lo..=hi);
    let extra = rng.gen_range(0..=n);
    (random_subcubic(&mut rng, n, extra), rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solvers_agree(seed in any::<u64>()) {
        let (g, _) = graph(seed, 1, 10);
        prop_assert_eq!(rho(&g), rho_exhaustive(&g).unwrap().rho);
    }

    #[test]
    fn path_count_is_n_minus_edges(seed in any::<u64>()) {
        let (g, mut rng) = graph(seed, 1, 14);
        let p = random_ipf(&mut rng, &g);
        prop_assert_eq!(p.path_count, g.n() - p.edges.len());
        prop_assert_eq!(p.paths.iter().map(Vec::len).sum::<usize>(), g.n());
        prop_assert_eq!(Ipf::new(&g, []).unwrap().path_count, g.n());
    }

    #[test]
    fn subdivision_never_decreases_rho(seed in any::<u64>()) {
        let (g, mut rng) = graph(seed, 2, 11);
        let e = g.edges()[rng.gen_range(0..g.m())];
        let (h, _) = Surgery::SubdivideEdge(e).apply(&g).unwrap();
        prop_assert!(rho(&h) >= rho(&g));
    }

    #[test]
    fn gluing_loses_at_most_one(seed in any::<u64>()) {
        let (a, mut rng) = graph(seed, 1, 7);
        let (b, _) = graph(rng.gen(), 1, 7);
        let here: Vec<usize> = a.vertices().filter(|&v| a.degree(v) <= 2).collect();
        let there: Vec<usize> = b.vertices().filter(|&v| b.degree(v) <= 1).collect();
        prop_assume!(!here.is_empty() && !there.is_empty());
        let (x, y) = (here[rng.gen_range(0..here.len())], there[rng.gen_range(0..there.len())]);
        prop_assume!(a.degree(x) + b.degree(y) <= 3);
        let (g, rec) = Surgery::GlueAtVertex { other: b.clone(), here: x, there: y }.apply(&a).unwrap();
        let (ra, rb, rg) = (rho(&a), rho(&b), rho(&g));
        prop_assert!(rg + 1 >= ra + rb);
        // the same bound through an explicit decomposition
        let mut bv: Vec<usize> = rec.other_to_new.clone();
        bv.sort_unstable();
        let d = GlueDecomposition { parts: vec![
            GluePart { vertices: (0..a.n()).collect(), rho: PartRho::Known(ra) },
            GluePart { vertices: bv, rho: PartRho::Exact },
        ]};
        let gb = glue_lower_bound(&g, &d).unwrap();
        prop_assert_eq!(gb.bound, (ra + rb) as i64 - 1);
        prop_assert!(gb.bound <= rg as i64);
    }

    #[test]
    fn standardise_is_idempotent(seed in any::<u64>()) {
        let (g, mut rng) = graph(seed, 4, 14);
        let p = random_ipf(&mut rng, &g);
        let s = standardise(&g, &p).unwrap();
        prop_assert!(s.path_count <= p.path_count);
        prop_assert!(is_standardised(&g, &s).unwrap().verdict);
        prop_assert_eq!(standardise(&g, &s).unwrap(), s);
    }

    #[test]
    fn lifts_keep_their_contracts(seed in any::<u64>()) {
        let (g, mut rng) = graph(seed, 3, 10);
        for s in lift_sites(&g) {
            if let Err(e) = check_lift(&g, &s, &mut rng) {
                prop_assert!(false, "{}", e);
            }
        }
    }
}

#[test]
fn strict_gluing_witnesses() {
    // two P3s glued at their middles: a star with four leaves
    let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    let (star, _) = Surgery::GlueAtVertex { other: p3.clone(), here: 1, there: 1 }.apply(&p3).unwrap();
    assert_eq!((rho(&p3), rho(&star)), (1, 3));
}

#[test]
fn subdivision_can_raise_rho() {
    // K6 minus two edges of a perfect matching, then subdivide the third
    let k6 = (0..6).flat_map(|a| (a + 1..6).map(move |b| Edge(a, b)));
    let g = Graph::new(6, k6.filter(|&e| e != Edge(0, 1) && e != Edge(2, 3))).unwrap();
    let (h, _) = Surgery::SubdivideEdge(Edge(4, 5)).apply(&g).unwrap();
    assert_eq!(rho_exhaustive(&g).unwrap().rho, 2);
    assert_eq!(rho_exhaustive(&h).unwrap().rho, 3);
    assert_eq!((rho(&g), rho(&h)), (2, 3));
}
