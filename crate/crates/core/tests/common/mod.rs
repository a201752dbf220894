//! Helpers shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use comatch::generators::{cocomparability_from_poset, random_poset, rng_from_seed};
use comatch::orderings::OrderingChecker;
use comatch::{induced_prefix, Graph, Matching, VertexOrdering};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn poset_instance(n: usize, p: f64, seed: u64) -> (Graph, VertexOrdering) {
    cocomparability_from_poset(&random_poset(n, p, seed).expect("valid poset parameters"))
}

/// G(n, p) with each pair an edge independently.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// The graph on `n` vertices whose edge set is the bitmask `mask` over the
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> VertexOrdering {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    VertexOrdering::new(order).unwrap()
}

/// A uniformly random maximal-by-chance matching: edges in random order,
/// each taken with probability `keep` when both ends are free.
pub fn random_matching(g: &Graph, keep: f64, rng: &mut ChaCha8Rng) -> Matching {
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(rng);
    let mut used = vec![false; g.n()];
    let mut pairs = Vec::new();
    for (u, v) in edges {
        if !used[u] && !used[v] && rng.gen_bool(keep) {
            used[u] = true;
            used[v] = true;
            pairs.push((u, v));
        }
    }
    Matching::from_pairs(g, pairs).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    rng_from_seed(seed)
}

/// Whether `h` has an ordering with no umbrella, by backtracking over
/// prefixes: appending `c` is rejected if some earlier `a <_σ b` has
/// `ac ∈ E` while `ab, bc ∉ E`.
pub fn has_umbrella_free_ordering(h: &Graph) -> bool {
    fn extend(h: &Graph, prefix: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if prefix.len() == h.n() {
            return true;
        }
        for c in 0..h.n() {
            if used[c] {
                continue;
            }
            let umbrella = prefix.iter().enumerate().any(|(i, &a)| {
                h.has_edge(a, c) && prefix[i + 1..].iter().any(|&b| !h.has_edge(a, b) && !h.has_edge(b, c))
            });
            if umbrella {
                continue;
            }
            used[c] = true;
            prefix.push(c);
            if extend(h, prefix, used) {
                return true;
            }
            prefix.pop();
            used[c] = false;
        }
        false
    }
    extend(h, &mut Vec::new(), &mut vec![false; h.n()])
}

/// Whether the edges of `h` admit a transitive orientation, by exhaustive
/// search over orientations. Dead branches are cut with the forcing rule
/// `a→b`, `ac ∈ E`, `bc ∉ E` ⇒ `a→c` (and its mirror for heads), which any
/// transitive orientation obeys; leaves are checked for transitivity.
pub fn transitively_orientable(h: &Graph) -> bool {
    let n = h.n();
    // dir[u][v] = Some(true) means u→v.
    let edges: Vec<_> = h.edges().collect();
    let mut dir = vec![vec![None::<bool>; n]; n];

    fn set(h: &Graph, dir: &mut [Vec<Option<bool>>], trail: &mut Vec<(usize, usize)>, a: usize, b: usize) -> bool {
        let mut stack = vec![(a, b)];
        while let Some((a, b)) = stack.pop() {
            match dir[a][b] {
                Some(true) => continue,
                Some(false) => return false,
                None => {
                    dir[a][b] = Some(true);
                    dir[b][a] = Some(false);
                    trail.push((a, b));
                }
            }
            for &c in h.neighbors(a) {
                if c != b && !h.has_edge(b, c) {
                    stack.push((a, c));
                }
            }
            for &c in h.neighbors(b) {
                if c != a && !h.has_edge(a, c) {
                    stack.push((c, b));
                }
            }
        }
        true
    }

    fn transitive(h: &Graph, dir: &[Vec<Option<bool>>]) -> bool {
        let n = h.n();
        for a in 0..n {
            for b in 0..n {
                if dir[a][b] != Some(true) {
                    continue;
                }
                for c in 0..n {
                    if dir[b][c] == Some(true) && dir[a][c] != Some(true) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn go(h: &Graph, edges: &[(usize, usize)], i: usize, dir: &mut Vec<Vec<Option<bool>>>) -> bool {
        let Some(&(u, v)) = edges.get(i) else {
            return transitive(h, dir);
        };
        if dir[u][v].is_some() {
            return go(h, edges, i + 1, dir);
        }
        for (a, b) in [(u, v), (v, u)] {
            let mut trail = Vec::new();
            if set(h, dir, &mut trail, a, b) && go(h, edges, i + 1, dir) {
                return true;
            }
            for (x, y) in trail {
                dir[x][y] = None;
                dir[y][x] = None;
            }
        }
        false
    }

    go(h, &edges, 0, &mut dir)
}

/// Whether some odd-length alternating path from `from` inside `sub` ends
/// at a vertex satisfying `target`. The path leaves `from` by a non-matching
/// edge and alternates, so it ends on a non-matching edge as well.
pub fn odd_alternating_path(
    sub: &Graph,
    m: &Matching,
    from: usize,
    target: &dyn Fn(usize) -> bool,
) -> bool {
    fn dfs(
        sub: &Graph,
        m: &Matching,
        v: usize,
        on_path: &mut [bool],
        target: &dyn Fn(usize) -> bool,
    ) -> bool {
        // At `v` after an even number of edges: take a non-matching edge.
        for &w in sub.neighbors(v) {
            if on_path[w] || m.contains(v, w) {
                continue;
            }
            if target(w) {
                return true;
            }
            let Some(x) = m.partner(w) else { continue };
            if on_path[x] {
                continue;
            }
            on_path[w] = true;
            on_path[x] = true;
            let found = dfs(sub, m, x, on_path, target);
            on_path[w] = false;
            on_path[x] = false;
            if found {
                return true;
            }
        }
        false
    }
    let mut on_path = vec![false; sub.n()];
    on_path[from] = true;
    dfs(sub, m, from, &mut on_path, target)
}

/// Every quadruple `(a, b, c, x)` satisfying the six conditions of the
/// no-special-structure property for matching `m` under `sigma`:
/// `a < b < c ≤ x`; `ac, bc ∈ E`, `ab ∉ E`; `ac ∈ M`; and inside the prefix
/// graph up to `x`, no odd alternating path from `a` to `b`, from `a` to a
/// free vertex, or from `b` to a free vertex. Freeness is with respect to
/// `m` on the whole graph.
pub fn special_quadruples(g: &Graph, sigma: &VertexOrdering, m: &Matching) -> Vec<[usize; 4]> {
    let n = g.n();
    let mut out = Vec::new();
    for xi in 0..n {
        let x = sigma.at(xi);
        let (sub, remap) = induced_prefix(g, sigma, x);
        // Matching restricted to the prefix, in local indices.
        let pairs: Vec<_> = m
            .edges()
            .into_iter()
            .filter_map(|(u, v)| Some((remap.to_local(u)?, remap.to_local(v)?)))
            .collect();
        let local = Matching::from_pairs(&sub, pairs).unwrap();
        let free = |w: usize| m.is_free(remap.to_global(w));
        for ci in 0..=xi {
            let c = sigma.at(ci);
            let Some(a) = m.partner(c) else { continue };
            let ai = sigma.position(a);
            if ai >= ci {
                continue;
            }
            for bi in ai + 1..ci {
                let b = sigma.at(bi);
                if !g.has_edge(b, c) || g.has_edge(a, b) {
                    continue;
                }
                let (la, lb) = (ai, bi);
                if odd_alternating_path(&sub, &local, la, &|w| w == lb)
                    || odd_alternating_path(&sub, &local, la, &free)
                    || odd_alternating_path(&sub, &local, lb, &free)
                {
                    continue;
                }
                out.push([a, b, c, x]);
            }
        }
    }
    out
}

/// Cheap structural check: `sigma` is an LDFS umbrella-free ordering.
pub fn is_ldfs_umbrella_free(g: &Graph, sigma: &VertexOrdering) -> bool {
    let ck = OrderingChecker::new(g, sigma).unwrap();
    ck.umbrella_free().holds() && ck.ldfs().holds()
}

/// A cocomparability graph on `base_n` vertices with `k` extra vertices
/// `base_n..base_n + k` joined to random vertices. Returns the graph, the
/// extra vertices, and an umbrella-free ordering of the rest by original id.
pub fn with_deletion_set(
    base_n: usize,
    p: f64,
    k: usize,
    seed: u64,
) -> (Graph, Vec<usize>, Vec<usize>) {
    let (h, pi) = poset_instance(base_n, p, seed);
    let mut rng = seeded(seed ^ 0x5eed);
    let n = base_n + k;
    let mut edges: Vec<_> = h.edges().collect();
    let density = rng.gen_range(0.05..0.6);
    for x in base_n..n {
        for v in 0..x {
            if rng.gen_bool(density) {
                edges.push((v, x));
            }
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    (g, (base_n..n).collect(), pi.as_slice().to_vec())
}
