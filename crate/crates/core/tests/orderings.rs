mod common;

use comatch::generators::{complement_cycle, random_intervals, IntervalParams};
use comatch::orderings::{classify_triple, OrderingChecker, TripleClass};
use comatch::{complement, is_i_ordering, is_umbrella_free, VertexOrdering};
use rand::Rng;

/// Every labelled graph on 7 vertices with the identity ordering covers every
/// (graph, ordering) pair up to relabelling.
#[test]
fn every_i_ordering_is_ldfs_and_umbrella_free_up_to_seven() {
    let mut i_orderings = 0u64;
    for n in 0..=7usize {
        let pairs = n * n.saturating_sub(1) / 2;
        let sigma = VertexOrdering::identity(n);
        for mask in 0..1u64 << pairs {
            let g = common::graph_from_mask(n, mask);
            let ck = OrderingChecker::new(&g, &sigma).unwrap();
            if !ck.i_ordering().holds() {
                continue;
            }
            i_orderings += 1;
            assert!(ck.umbrella_free().holds(), "{g:?}");
            assert!(ck.ldfs().holds(), "{g:?}");
        }
    }
    assert!(i_orderings > 1000);
}

#[test]
fn interval_orderings_specialize() {
    let mut rng = common::seeded(3);
    for seed in 0..300 {
        let n = rng.gen_range(1..=60);
        let params = IntervalParams { span: 50.0, max_length: rng.gen_range(0.5..15.0) };
        let inst = random_intervals(n, params, seed).unwrap();
        let ck = OrderingChecker::new(&inst.graph, &inst.ordering).unwrap();
        assert!(ck.i_ordering().holds());
        assert!(ck.umbrella_free().holds());
        assert!(ck.ldfs().holds());
    }
}

fn umbrella_free_iff_cocomparability(n: usize, mask: u64) {
    let g = common::graph_from_mask(n, mask);
    let left = common::has_umbrella_free_ordering(&g);
    let right = common::transitively_orientable(&complement(&g));
    assert_eq!(left, right, "n={n} mask={mask:#x}");
}

#[test]
fn umbrella_free_ordering_exists_iff_complement_orientable_exhaustive() {
    for n in 0..=6usize {
        for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
            umbrella_free_iff_cocomparability(n, mask);
        }
    }
}

#[test]
fn umbrella_free_ordering_exists_iff_complement_orientable_sampled_seven() {
    let mut rng = common::seeded(77);
    for _ in 0..3000 {
        umbrella_free_iff_cocomparability(7, rng.gen_range(0..1u64 << 21));
    }
}

#[test]
fn orientation_search_knows_small_cases() {
    // C5 and its complement are not comparability graphs; C6's complement
    // is not either, but C6 (bipartite) is.
    assert!(!common::transitively_orientable(&comatch::Graph::cycle(5)));
    assert!(common::transitively_orientable(&comatch::Graph::cycle(6)));
    assert!(!common::transitively_orientable(&complement(&comatch::Graph::cycle(6))));
    assert!(common::transitively_orientable(&comatch::Graph::complete(5)));
}

#[test]
fn generated_orderings_pass_their_verifiers() {
    let mut rng = common::seeded(5);
    for seed in 0..300 {
        let n = rng.gen_range(0..=80);
        let p = [0.1, 0.3, 0.5, 0.8][seed as usize % 4];
        let (g, sigma) = common::poset_instance(n, p, seed);
        assert!(is_umbrella_free(&g, &sigma).unwrap().holds(), "n={n} p={p} seed={seed}");
    }
    for k in 2..=40 {
        let (g, sigma) = complement_cycle(k).unwrap();
        assert!(is_umbrella_free(&g, &sigma).unwrap().holds(), "k={k}");
    }
    for seed in 0..100 {
        let inst = random_intervals(50, IntervalParams::default(), seed).unwrap();
        assert!(is_i_ordering(&inst.graph, &inst.ordering).unwrap().holds());
    }
}

#[test]
fn good_witnesses_meet_their_definition() {
    let mut rng = common::seeded(9);
    let mut goods = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=12);
        let g = common::random_graph(n, 0.5, &mut rng);
        let sigma = common::shuffled(n, &mut rng);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if let TripleClass::Good { witness: d } = classify_triple(&g, &sigma, a, b, c).unwrap() {
                        goods += 1;
                        assert!(sigma.before(a, d) && sigma.before(d, b));
                        assert!(g.has_edge(d, b) && !g.has_edge(d, c));
                    }
                }
            }
        }
    }
    assert!(goods > 0);
}
