mod common;

use comatch::generators::complement_cycle;
use comatch::ldfs::{ldfs_plus_with_stats, ldfs_with_stats};
use comatch::{is_ldfs_ordering, is_umbrella_free, ldfs, ldfs_plus, Graph, VertexOrdering};
use proptest::prelude::*;
use rand::Rng;

/// Label of `v`: visit numbers of its numbered neighbours, newest first.
fn label(g: &Graph, number: &[Option<usize>], v: usize) -> Vec<usize> {
    let mut l: Vec<usize> = g.neighbors(v).iter().filter_map(|&w| number[w]).collect();
    l.sort_unstable_by(|a, b| b.cmp(a));
    l
}

/// Textbook LDFS: recompute every label each round and take the
/// lexicographic maximum, `first` on the opening round and `wins` on ties.
fn naive(g: &Graph, first: usize, wins: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let n = g.n();
    let mut number = vec![None; n];
    let mut out = Vec::new();
    for i in 0..n {
        let v = if i == 0 {
            first
        } else {
            let mut best: Option<(Vec<usize>, usize)> = None;
            for v in (0..n).filter(|&v| number[v].is_none()) {
                let l = label(g, &number, v);
                let better = match &best {
                    None => true,
                    Some((bl, bv)) => l > *bl || (l == *bl && wins(v, *bv)),
                };
                if better {
                    best = Some((l, v));
                }
            }
            best.unwrap().1
        };
        number[v] = Some(i);
        out.push(v);
    }
    out
}

fn graph_and_pi(n_max: usize) -> impl Strategy<Value = (Graph, VertexOrdering, u64)> {
    (1..=n_max, 0.0..1.0f64, any::<u64>()).prop_map(|(n, p, seed)| {
        let mut rng = common::seeded(seed);
        let g = common::random_graph(n, p, &mut rng);
        let pi = common::shuffled(n, &mut rng);
        (g, pi, seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn ldfs_matches_textbook_definition((g, pi, seed) in graph_and_pi(25)) {
        let start = (seed % g.n() as u64) as usize;
        let sigma = ldfs(&g, start);
        let expected = naive(&g, start, |a, b| a < b);
        prop_assert_eq!(sigma.as_slice(), expected.as_slice());
        let plus = ldfs_plus(&g, &pi);
        let first = pi.at(g.n() - 1);
        let expected = naive(&g, first, |a, b| pi.position(a) > pi.position(b));
        prop_assert_eq!(plus.as_slice(), expected.as_slice());
    }

    #[test]
    fn outputs_are_ldfs_orderings((g, pi, seed) in graph_and_pi(60)) {
        let start = (seed % g.n() as u64) as usize;
        let sigma = ldfs(&g, start);
        prop_assert_eq!(sigma.len(), g.n());
        prop_assert!(is_ldfs_ordering(&g, &sigma).unwrap().holds());
        let plus = ldfs_plus(&g, &pi);
        prop_assert!(is_ldfs_ordering(&g, &plus).unwrap().holds());
        prop_assert_eq!(ldfs_plus(&g, &pi), plus);
    }
}

#[test]
fn ldfs_plus_keeps_umbrella_free_orderings_umbrella_free() {
    let mut rng = common::seeded(21);
    for seed in 0..400 {
        let n = rng.gen_range(1..=60);
        let p = [0.1, 0.3, 0.5, 0.8][seed as usize % 4];
        let (g, pi) = common::poset_instance(n, p, seed);
        let sigma = ldfs_plus(&g, &pi);
        assert!(is_umbrella_free(&g, &sigma).unwrap().holds(), "n={n} p={p} seed={seed}");
        assert!(is_ldfs_ordering(&g, &sigma).unwrap().holds());
    }
    for k in 2..=20 {
        let (g, pi) = complement_cycle(k).unwrap();
        assert!(is_umbrella_free(&g, &ldfs_plus(&g, &pi)).unwrap().holds());
    }
}

#[test]
fn prepends_count_edges_towards_unnumbered_vertices() {
    // Each edge gets exactly one prepend: when its first endpoint is numbered.
    let mut rng = common::seeded(4);
    for _ in 0..50 {
        let n = rng.gen_range(1..30);
        let g = common::random_graph(n, 0.3, &mut rng);
        let (_, stats) = ldfs_with_stats(&g, 0);
        assert_eq!(stats.prepends, g.m() as u64);
        let (_, stats) = ldfs_plus_with_stats(&g, &VertexOrdering::identity(n));
        assert_eq!(stats.prepends, g.m() as u64);
    }
}
