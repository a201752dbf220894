//! Instance factories that emit graphs together with a certified ordering.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, whose stream
//! is fixed across platforms, so outputs are reproducible byte for byte.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{complement, Graph, VertexOrdering};
use crate::interval::{intersection_graph, Interval};
use crate::io::Aliases;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A strict partial order on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// Generating relations: `v` in `succ[u]` means `u < v` was drawn.
    succ: Vec<Vec<usize>>,
    words: usize,
    /// Bit `v` of row `u` is set iff `u < v` in the transitive closure.
    closure: Vec<u64>,
    extension: VertexOrdering,
}

impl Poset {
    /// Builds the poset generated by `relations` (`(u, v)` meaning `u < v`).
    /// The linear extension is the topological order that always takes the
    /// smallest available vertex.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(u, v) in relations {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v) + 1, n });
            }
            if u == v {
                return Err(Error::CyclicRelation(u + 1));
            }
            succ[u].push(v);
        }
        for list in &mut succ {
            list.sort_unstable();
            list.dedup();
            for &v in list.iter() {
                indeg[v] += 1;
            }
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.pop_first() {
            order.push(u);
            for &v in &succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        if order.len() < n {
            let v = (0..n).find(|&v| indeg[v] > 0).expect("some vertex is on a cycle");
            return Err(Error::CyclicRelation(v + 1));
        }
        let extension = VertexOrdering::new(order).expect("topological order is a permutation");
        Ok(Self::with_extension(n, succ, extension))
    }

    fn with_extension(n: usize, succ: Vec<Vec<usize>>, extension: VertexOrdering) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut closure = vec![0u64; n * words];
        // Right to left along the extension, so successors are finished first.
        let mut scratch = vec![0u64; words];
        for u in extension.iter().rev() {
            scratch.iter_mut().for_each(|w| *w = 0);
            let mut direct = succ[u].clone();
            direct.sort_unstable_by_key(|&v| extension.position(v));
            for v in direct {
                if scratch[v / 64] >> (v % 64) & 1 == 1 {
                    // Already implied; its closure is contained in ours.
                    continue;
                }
                scratch[v / 64] |= 1 << (v % 64);
                let row = &closure[v * words..(v + 1) * words];
                for (s, r) in scratch.iter_mut().zip(row) {
                    *s |= r;
                }
            }
            closure[u * words..(u + 1) * words].copy_from_slice(&scratch);
        }
        Self { n, succ, words, closure, extension }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `u < v` in the order.
    pub fn less(&self, u: usize, v: usize) -> bool {
        self.closure[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.less(u, v) || self.less(v, u)
    }

    pub fn direct_successors(&self, u: usize) -> &[usize] {
        &self.succ[u]
    }

    pub fn linear_extension(&self) -> &VertexOrdering {
        &self.extension
    }

    /// Number of pairs `u < v` in the closure.
    pub fn closure_pairs(&self) -> usize {
        self.closure.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Irreflexivity, antisymmetry, transitivity and consistency with the
    /// linear extension. Cubic; for tests.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        for u in 0..self.n {
            if self.less(u, u) {
                return Err(format!("{} < {}", u + 1, u + 1));
            }
            for v in 0..self.n {
                if self.less(u, v) {
                    if self.less(v, u) {
                        return Err(format!("{} and {} both ways", u + 1, v + 1));
                    }
                    if !self.extension.before(u, v) {
                        return Err(format!("extension puts {} after {}", u + 1, v + 1));
                    }
                    for w in 0..self.n {
                        if self.less(v, w) && !self.less(u, w) {
                            return Err(format!("{} < {} < {} not closed", u + 1, v + 1, w + 1));
                        }
                    }
                }
            }
        }
        for u in 0..self.n {
            for &v in &self.succ[u] {
                if !self.less(u, v) {
                    return Err(format!("generator {} < {} lost", u + 1, v + 1));
                }
            }
        }
        Ok(())
    }
}

/// Random poset: a uniform random permutation is the linear extension, each
/// forward pair under it becomes a generating relation with probability `p`,
/// and the result is transitively closed.
pub fn random_poset(n: usize, p: f64, seed: u64) -> Result<Poset> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = rng_from_seed(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut succ = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                succ[order[i]].push(order[j]);
            }
        }
    }
    let extension = VertexOrdering::new(order).expect("shuffled indices form a permutation");
    Ok(Poset::with_extension(n, succ, extension))
}

/// The incomparability graph of `poset`, with the poset's linear extension
/// as its ordering. That extension is always umbrella-free: if `x < y < z`
/// in it and `y` were comparable to both `x` and `z`, then `x <_P y <_P z`
/// would make `x` and `z` comparable.
pub fn cocomparability_from_poset(poset: &Poset) -> (Graph, VertexOrdering) {
    let n = poset.n();
    let lists = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && !poset.comparable(u, v)).collect())
        .collect();
    let g = Graph::from_lists(lists);
    let sigma = poset.linear_extension().clone();
    debug_assert!(n > 300
        || crate::orderings::is_umbrella_free(&g, &sigma).map(|v| v.holds()).unwrap_or(true));
    (g, sigma)
}

/// Left endpoints uniform in `[0, span)`, lengths uniform in
/// `[0, max_length]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntervalParams {
    pub span: f64,
    pub max_length: f64,
}

impl IntervalParams {
    /// Scales `span` with `n` so the expected degree stays near
    /// `max_length` regardless of size.
    pub fn sparse(n: usize, max_length: f64) -> Self {
        Self { span: n.max(1) as f64, max_length }
    }
}

impl Default for IntervalParams {
    fn default() -> Self {
        Self { span: 100.0, max_length: 10.0 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntervalInstance {
    pub intervals: Vec<Interval>,
    pub graph: Graph,
    /// Sorted by left endpoint, then right endpoint, then index.
    pub ordering: VertexOrdering,
}

impl IntervalInstance {
    pub fn from_intervals(intervals: Vec<Interval>) -> Self {
        let (graph, ordering) = intersection_graph(&intervals);
        Self { intervals, graph, ordering }
    }
}

pub fn random_intervals(n: usize, params: IntervalParams, seed: u64) -> Result<IntervalInstance> {
    let IntervalParams { span, max_length } = params;
    if !(span.is_finite() && span > 0.0 && max_length.is_finite() && max_length >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "interval parameters span={span}, max_length={max_length}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let intervals = (0..n)
        .map(|_| {
            let left = rng.gen::<f64>() * span;
            let len = rng.gen::<f64>() * max_length;
            Interval::new(left, left + len).expect("finite, ordered endpoints")
        })
        .collect();
    Ok(IntervalInstance::from_intervals(intervals))
}

/// The complement of the cycle `1 - 2 - ... - 2k - 1` on `2k` vertices, with
/// the even-numbered cycle vertices first and then the odd ones.
pub fn complement_cycle(k: usize) -> Result<(Graph, VertexOrdering)> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("complement_cycle needs k >= 2, got {k}")));
    }
    let n = 2 * k;
    let g = complement(&Graph::cycle(n));
    // 1-based even vertices are 0-based odd indices.
    let order = (1..n).step_by(2).chain((0..n).step_by(2)).collect();
    Ok((g, VertexOrdering::new(order).expect("evens then odds is a permutation")))
}

/// The six-vertex antihole on `a..f` (mapped to vertices `1..6`): the
/// complement of the cycle `a-b-c-d-e-f-a`.
#[derive(Clone, Debug)]
pub struct Fig1Fixture {
    pub graph: Graph,
    pub aliases: Aliases,
    /// Umbrella-free ordering `(b, d, c, f, e, a)`.
    pub pi: VertexOrdering,
    /// LDFS from `a` with smallest-index tie-breaking: `(a, c, e, b, f, d)`.
    pub sigma_a: VertexOrdering,
    /// `LDFS+(G, pi)`: `(a, e, c, f, b, d)`.
    pub sigma_plus: VertexOrdering,
}

pub fn fixture_fig1() -> Fig1Fixture {
    let edges = [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)];
    let graph = Graph::from_edges(6, edges.iter().map(|&(u, v)| (u - 1, v - 1))).expect("fixture edges");
    let ord = |ids: &[usize]| VertexOrdering::from_one_based(ids).expect("fixture ordering");
    Fig1Fixture {
        graph,
        aliases: Aliases::from_names(["a", "b", "c", "d", "e", "f"]),
        pi: ord(&[2, 4, 3, 6, 5, 1]),
        sigma_a: ord(&[1, 3, 5, 2, 6, 4]),
        sigma_plus: ord(&[1, 5, 3, 6, 2, 4]),
    }
}
