//! Rightmost matching.
//!
//! Repeatedly visit the rightmost unvisited vertex `x` of an ordering `σ`;
//! if `x` still has an unvisited neighbour, visit the rightmost one, `y`, and
//! match `{x, y}`. When `σ` is simultaneously an LDFS ordering and
//! umbrella-free (for example `σ = LDFS+(G, π)` with `π` umbrella-free, or
//! any I-ordering of an interval graph) the result is a maximum matching.
//! On any other ordering the result is still a valid matching, but it may be
//! smaller than the maximum.
//!
//! The implementation keeps the unvisited vertices in a doubly linked list
//! `A`, and for every vertex `u` its unvisited neighbours in a doubly linked
//! list `N_u`, all in `σ`-order. Every vertex knows the list nodes that
//! represent it, so visiting a vertex unlinks it everywhere in `O(deg)` time
//! and a whole run, including building the lists, takes `O(n + m)`.

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching, VertexOrdering};
use crate::interval::{intersection_graph, Interval};
use crate::ldfs::ldfs_plus;
use crate::list::ListArena;
use crate::orderings::{OrderingChecker, Verdict};

/// Upper bound on `(visits + unlinks) / (n + m)` for a single run.
///
/// Every vertex is visited once and unlinked once from `A` and once from the
/// list of each neighbour, giving `2n + 2m` operations.
pub const RMM_OPERATION_FACTOR: u64 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RmmStats {
    pub visits: u64,
    pub unlinks: u64,
}

impl RmmStats {
    pub fn operations(&self) -> u64 {
        self.visits + self.unlinks
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RmmOutput {
    /// The vertices in visit order (`σ̂`).
    pub visit_order: VertexOrdering,
    pub matching: Matching,
    pub stats: RmmStats,
}

const LIST_A: usize = 0;

/// Works in position space: vertex `σ.at(i)` is `i` throughout, so for
/// orderings where neighbours sit close together (interval orders, LDFS
/// orderings of sparse graphs) the lists are touched almost sequentially.
pub(crate) struct RmmState<'a> {
    #[cfg_attr(not(test), allow(dead_code))]
    g: &'a Graph,
    sigma: &'a VertexOrdering,
    /// One list: the unvisited positions, node `i` holding `i`.
    unvisited: ListArena,
    /// List `p` holds the unvisited neighbours of `p` in the nodes
    /// `offsets[p]..offsets[p + 1]`. Node values never change, so the same
    /// range is also the adjacency of `p`.
    neighbors: ListArena,
    offsets: Vec<usize>,
    /// `twin[k]` is the node of `p` inside the list of the neighbour stored
    /// at node `k` of list `p`.
    twin: Vec<u32>,
    visited: Vec<bool>,
    visit_order: Vec<usize>,
    matching: Matching,
    stats: RmmStats,
}

impl<'a> RmmState<'a> {
    pub(crate) fn new(g: &'a Graph, sigma: &'a VertexOrdering) -> Self {
        let n = g.n();
        assert_eq!(sigma.len(), n, "ordering must cover every vertex");
        let identity: Vec<u32> = (0..n as u32).collect();
        let unvisited = ListArena::from_runs(&[0, n], &identity);
        let pos: Vec<u32> = g.vertices().map(|v| sigma.position(v) as u32).collect();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for (p, v) in sigma.iter().enumerate() {
            offsets.push(offsets[p] + g.degree(v));
        }
        // Relabel each adjacency into position space, reading the graph in
        // storage order; the runs are unsorted.
        let mut relabelled = vec![0u32; 2 * g.m()];
        for v in g.vertices() {
            let start = offsets[pos[v] as usize];
            for (j, &w) in g.neighbors(v).iter().enumerate() {
                relabelled[start + j] = pos[w];
            }
        }
        // Transpose: visiting p in increasing order appends p to the list of
        // each neighbour, so every list comes out sorted.
        let mut fill = offsets[..n].to_vec();
        let mut values = vec![0u32; 2 * g.m()];
        for p in 0..n {
            for &q in &relabelled[offsets[p]..offsets[p + 1]] {
                let q = q as usize;
                values[fill[q]] = p as u32;
                fill[q] += 1;
            }
        }
        drop(relabelled);
        // The k-th time q shows up as a neighbour, scanning p upwards, is the
        // k-th entry of q's sorted list.
        fill.copy_from_slice(&offsets[..n]);
        let mut twin = vec![0u32; 2 * g.m()];
        for p in 0..n {
            for k in offsets[p]..offsets[p + 1] {
                let q = values[k] as usize;
                twin[k] = fill[q] as u32;
                fill[q] += 1;
            }
        }
        let neighbors = ListArena::from_runs(&offsets, &values);
        Self {
            g,
            sigma,
            unvisited,
            neighbors,
            offsets,
            twin,
            visited: vec![false; n],
            visit_order: Vec::with_capacity(n),
            matching: Matching::empty(n),
            stats: RmmStats::default(),
        }
    }

    /// Visits the vertex at position `p`.
    fn visit(&mut self, p: usize) {
        debug_assert!(!self.visited[p]);
        self.visited[p] = true;
        self.visit_order.push(self.sigma.at(p));
        self.stats.visits += 1;
        self.unvisited.unlink(LIST_A, p);
        self.stats.unlinks += 1;
        for k in self.offsets[p]..self.offsets[p + 1] {
            let q = self.neighbors.value(k);
            self.neighbors.unlink(q, self.twin[k] as usize);
        }
        self.stats.unlinks += (self.offsets[p + 1] - self.offsets[p]) as u64;
    }

    /// One iteration of the main loop. Returns false once every vertex is
    /// visited.
    pub(crate) fn step(&mut self) -> bool {
        let Some(x) = self.unvisited.back(LIST_A) else {
            return false;
        };
        self.visit(x);
        if let Some(node) = self.neighbors.back(x) {
            let y = self.neighbors.value(node);
            self.visit(y);
            self.matching.insert(self.sigma.at(x), self.sigma.at(y));
        }
        true
    }

    /// Checks that `A` and every `N_u` hold exactly the unvisited vertices
    /// (resp. unvisited neighbours) in σ-order. `O(n + m)`.
    #[cfg(test)]
    pub(crate) fn check_lists(&self) -> std::result::Result<(), String> {
        let sigma = self.sigma;
        let as_vertices = |ps: Vec<usize>| ps.into_iter().map(|p| sigma.at(p)).collect::<Vec<_>>();
        let visited = |v: usize| self.visited[sigma.position(v)];
        let expected_a: Vec<usize> = sigma.iter().filter(|&v| !visited(v)).collect();
        if as_vertices(self.unvisited.values(LIST_A)) != expected_a {
            return Err("A out of sync".into());
        }
        for u in self.g.vertices() {
            let mut expected: Vec<usize> = self.g.neighbors(u).iter().copied().filter(|&v| !visited(v)).collect();
            expected.sort_by_key(|&v| sigma.position(v));
            if as_vertices(self.neighbors.values(sigma.position(u))) != expected {
                return Err(format!("N_{} out of sync", u + 1));
            }
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> RmmOutput {
        RmmOutput {
            visit_order: VertexOrdering::new(self.visit_order).expect("each vertex visited once"),
            matching: self.matching,
            stats: self.stats,
        }
    }
}

/// Runs the rightmost-matching greedy on `sigma` in `O(n + m)` time.
///
/// The result is maximum only when `sigma` is an LDFS umbrella-free ordering;
/// see [`max_matching_cocomparability`] for the guaranteed pipeline.
pub fn rmm(g: &Graph, sigma: &VertexOrdering) -> RmmOutput {
    let mut state = RmmState::new(g, sigma);
    while state.step() {}
    state.finish()
}

/// Computes `σ = LDFS+(G, π)` and runs [`rmm`] on it.
///
/// With `verify` set, `pi` is first checked to be umbrella-free, which costs
/// cubic time and defeats the linear bound.
pub fn cocomparability_pipeline(
    g: &Graph,
    pi: &VertexOrdering,
    verify: bool,
) -> Result<(VertexOrdering, RmmOutput)> {
    pi.check_fits(g)?;
    if verify {
        if let Verdict::Violated(t) = OrderingChecker::new(g, pi)?.umbrella_free() {
            return Err(Error::NotUmbrellaFree(t));
        }
    }
    let sigma = ldfs_plus(g, pi);
    let out = rmm(g, &sigma);
    Ok((sigma, out))
}

/// Maximum matching of a cocomparability graph given an umbrella-free
/// ordering `pi`.
pub fn max_matching_cocomparability(g: &Graph, pi: &VertexOrdering, verify: bool) -> Result<Matching> {
    cocomparability_pipeline(g, pi, verify).map(|(_, out)| out.matching)
}

/// Maximum matching of the intersection graph of closed intervals; vertex
/// `i` is `intervals[i]`.
pub fn max_matching_interval(intervals: &[Interval]) -> Matching {
    let (g, sigma) = intersection_graph(intervals);
    rmm(&g, &sigma).matching
}

/// Replays `out` against `sigma`: every matched pair `{x, y}` must have `y`
/// as the σ-rightmost neighbour of `x` still unvisited at `x`'s visit, and
/// every unmatched vertex must have had no unvisited neighbour.
pub fn check_greedy_shape(g: &Graph, sigma: &VertexOrdering, out: &RmmOutput) -> bool {
    let mut visited = vec![false; g.n()];
    let order = out.visit_order.as_slice();
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        let rightmost_unvisited = sigma.iter().rev().find(|&v| !visited[v]);
        if rightmost_unvisited != Some(x) {
            return false;
        }
        visited[x] = true;
        let best = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&v| !visited[v])
            .max_by_key(|&v| sigma.position(v));
        match (best, out.matching.partner(x)) {
            (None, None) => i += 1,
            (Some(y), Some(p)) if y == p && order.get(i + 1) == Some(&y) => {
                visited[y] = true;
                i += 2;
            }
            _ => return false,
        }
    }
    true
}
