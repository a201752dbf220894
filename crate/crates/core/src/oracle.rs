//! Reference matching machinery for general graphs: an Edmonds-style
//! augmenting-path search with blossom contraction, an exhaustive
//! maximum-matching search for tiny graphs, and the deletion-set hybrid that
//! repairs a cocomparability matching with a few augmentations.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, AlternatingPath, Graph, Matching, VertexOrdering};
use crate::rmm::max_matching_cocomparability;

/// Largest `n` accepted by [`brute_force_max_matching`].
pub const BRUTE_FORCE_LIMIT: usize = 16;

/// Breadth-first alternating-tree search from one free root, contracting odd
/// cycles by relabelling their base. `O(n * (n + m))` per search.
struct BlossomSearch<'a> {
    g: &'a Graph,
    m: &'a Matching,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> BlossomSearch<'a> {
    fn new(g: &'a Graph, m: &'a Matching) -> Self {
        let n = g.n();
        Self {
            g,
            m,
            parent: vec![None; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        self.parent.iter_mut().for_each(|p| *p = None);
        self.base.iter_mut().enumerate().for_each(|(i, b)| *b = i);
        self.in_tree.iter_mut().for_each(|u| *u = false);
        self.queue.clear();
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.m.partner(a) {
                None => break,
                Some(p) => a = self.parent[p].expect("matched outer vertex has a tree parent"),
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            let p = self.m.partner(b).expect("walk reaches the root");
            b = self.parent[p].expect("matched outer vertex has a tree parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, blossom: &mut [bool]) {
        while self.base[v] != b {
            let mv = self.m.partner(v).expect("inner path vertices are matched");
            blossom[self.base[v]] = true;
            blossom[self.base[mv]] = true;
            self.parent[v] = Some(child);
            child = mv;
            v = self.parent[mv].expect("matched outer vertex has a tree parent");
        }
    }

    /// Returns the free vertex reached from `root`, if any.
    fn search(&mut self, root: usize) -> Option<usize> {
        self.reset();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.m.partner(v) == Some(to) {
                    continue;
                }
                let outer = to == root
                    || self.m.partner(to).is_some_and(|p| self.parent[p].is_some());
                if outer {
                    let cur = self.lowest_common_base(v, to);
                    let mut blossom = vec![false; self.g.n()];
                    self.mark_path(v, cur, to, &mut blossom);
                    self.mark_path(to, cur, v, &mut blossom);
                    for i in 0..self.g.n() {
                        if blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.m.partner(to) {
                        None => return Some(to),
                        Some(p) => {
                            self.in_tree[p] = true;
                            self.queue.push_back(p);
                        }
                    }
                }
            }
        }
        None
    }

    /// Unwinds the tree from the free endpoint back to the root.
    fn path_to(&self, end: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut v = Some(end);
        while let Some(x) = v {
            let p = self.parent[x].expect("tree vertex has a parent");
            path.push(x);
            path.push(p);
            v = self.m.partner(p);
        }
        path.reverse();
        path
    }
}

/// Augmenting path from the smallest-index free vertex that has one, or
/// `None` when `m` is maximum.
pub fn find_augmenting_path(g: &Graph, m: &Matching) -> Option<AlternatingPath> {
    debug_assert!(m.validate(g).is_ok());
    let mut search = BlossomSearch::new(g, m);
    for root in g.vertices().filter(|&v| m.is_free(v)) {
        if let Some(end) = search.search(root) {
            let path = search.path_to(end);
            return Some(
                AlternatingPath::augmenting(g, m, path).expect("blossom search yields an augmenting path"),
            );
        }
    }
    None
}

/// Maximum matching of an arbitrary graph by repeated augmentation.
///
/// One search per initially free vertex suffices: a vertex with no augmenting
/// path keeps having none after later augmentations.
pub fn max_matching_reference(g: &Graph) -> Matching {
    augment_from(g, Matching::empty(g.n())).0
}

/// Augments `m` until no augmenting path remains; returns the matching and
/// the number of augmentations.
fn augment_from(g: &Graph, mut m: Matching) -> (Matching, usize) {
    let mut rounds = 0;
    for root in g.vertices() {
        if !m.is_free(root) {
            continue;
        }
        let found = {
            let mut search = BlossomSearch::new(g, &m);
            search.search(root).map(|end| search.path_to(end))
        };
        if let Some(path) = found {
            let path = AlternatingPath::augmenting(g, &m, path).expect("blossom search yields an augmenting path");
            m.augment(&path);
            rounds += 1;
        }
    }
    (m, rounds)
}

/// Maximum matching by exhaustive search over vertex subsets, memoized on
/// the set of still-available vertices. For `n <= 16` only.
pub fn brute_force_max_matching(g: &Graph) -> Result<(usize, Matching)> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeGuard { n, limit: BRUTE_FORCE_LIMIT });
    }
    let nbr_mask: Vec<u32> =
        g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u)).collect();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut memo = vec![u8::MAX; 1 << n];
    fn best(mask: u32, nbr: &[u32], memo: &mut [u8]) -> u8 {
        if mask == 0 {
            return 0;
        }
        if memo[mask as usize] != u8::MAX {
            return memo[mask as usize];
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut value = best(rest, nbr, memo);
        let mut cand = nbr[v] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            value = value.max(1 + best(rest & !(1 << u), nbr, memo));
        }
        memo[mask as usize] = value;
        value
    }
    let size = best(full, &nbr_mask, &mut memo) as usize;
    // Walk the memo table back to one maximizer.
    let mut m = Matching::empty(n);
    let mut mask = full;
    while mask != 0 {
        let target = best(mask, &nbr_mask, &mut memo);
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        if best(rest, &nbr_mask, &mut memo) == target {
            mask = rest;
            continue;
        }
        let mut cand = nbr_mask[v] & rest;
        loop {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            let after = rest & !(1 << u);
            if 1 + best(after, &nbr_mask, &mut memo) == target {
                m.insert(v, u as usize);
                mask = after;
                break;
            }
        }
    }
    debug_assert_eq!(m.len(), size);
    Ok((size, m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionSetOutcome {
    pub matching: Matching,
    /// Matching size on `G - X` before augmentation.
    pub initial_size: usize,
    /// Augmenting-path rounds run on the full graph.
    pub rounds: usize,
}

/// Maximum matching of `g` given a vertex set `deletion` whose removal leaves
/// a cocomparability graph, and an umbrella-free ordering `pi_rest` of the
/// remaining vertices (listed by their ids in `g`).
///
/// Solves `G - X` with the linear-time pipeline, lifts the result into `g`,
/// and augments until maximum. When `pi_rest` is umbrella-free this takes at
/// most `|X|` rounds.
pub fn matching_with_deletion_set(
    g: &Graph,
    deletion: &[usize],
    pi_rest: &[usize],
    verify: bool,
) -> Result<DeletionSetOutcome> {
    let n = g.n();
    let mut role = vec![0u8; n];
    for &x in deletion {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x + 1, n });
        }
        if role[x] != 0 {
            return Err(Error::InvalidParameter(format!("vertex {} repeated in deletion set", x + 1)));
        }
        role[x] = 1;
    }
    for &v in pi_rest {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v + 1, n });
        }
        if role[v] != 0 {
            return Err(Error::InvalidParameter(format!(
                "vertex {} listed twice or also in the deletion set",
                v + 1
            )));
        }
        role[v] = 2;
    }
    if let Some(v) = role.iter().position(|&r| r == 0) {
        return Err(Error::InvalidParameter(format!("vertex {} neither deleted nor ordered", v + 1)));
    }
    // Local index i is pi_rest[i], so the ordering of G - X is the identity.
    let (rest, remap) = induced_subgraph(g, pi_rest);
    let local = max_matching_cocomparability(&rest, &VertexOrdering::identity(rest.n()), verify)?;
    let initial_size = local.len();
    let (matching, rounds) = augment_from(g, local.lift(&remap, n));
    if rounds > deletion.len() {
        log::warn!(
            "{rounds} augmentations exceed |X| = {}; the ordering of G - X is likely not umbrella-free",
            deletion.len()
        );
    }
    Ok(DeletionSetOutcome { matching, initial_size, rounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixture_fig1;

    #[test]
    fn single_edge_path() {
        let g = Graph::path(2);
        let p = find_augmenting_path(&g, &Matching::empty(2)).unwrap();
        assert_eq!(p.vertices(), &[0, 1]);
    }

    #[test]
    fn p3_with_one_edge_has_no_path() {
        let g = Graph::path(3);
        let m = Matching::from_pairs(&g, [(0, 1)]).unwrap();
        assert!(find_augmenting_path(&g, &m).is_none());
    }

    #[test]
    fn c4_path_joins_free_vertices() {
        let g = Graph::cycle(4);
        let m = Matching::from_pairs(&g, [(0, 1)]).unwrap();
        let p = find_augmenting_path(&g, &m).unwrap();
        let mut vs = p.vertices().to_vec();
        vs.sort();
        assert_eq!(vs, vec![2, 3]);
    }

    #[test]
    fn blossom_is_contracted() {
        // Pentagon 0-1-2-3-4 matched {1,2}, {3,4}, with 5 hanging off 1. From
        // the free root 0, vertex 1 is first reached as inner; the only
        // augmenting path goes the long way round, 0-4-3-2-1-5.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5)]).unwrap();
        let m = Matching::from_pairs(&g, [(1, 2), (3, 4)]).unwrap();
        let p = find_augmenting_path(&g, &m).unwrap();
        assert_eq!(p.vertices(), &[0, 4, 3, 2, 1, 5]);
        let mut m2 = m.clone();
        m2.augment(&p);
        assert_eq!(m2.len(), 3);
        m2.validate(&g).unwrap();
    }

    #[test]
    fn reference_sizes() {
        assert_eq!(max_matching_reference(&Graph::cycle(5)).len(), 2);
        assert_eq!(max_matching_reference(&fixture_fig1().graph).len(), 3);
        assert_eq!(max_matching_reference(&Graph::complete(4)).len(), 2);
        assert_eq!(max_matching_reference(&Graph::empty(3)).len(), 0);
    }

    #[test]
    fn brute_force_sizes() {
        assert_eq!(brute_force_max_matching(&Graph::complete(3)).unwrap().0, 1);
        assert_eq!(brute_force_max_matching(&fixture_fig1().graph).unwrap().0, 3);
        assert_eq!(brute_force_max_matching(&Graph::empty(5)).unwrap().0, 0);
        assert_eq!(brute_force_max_matching(&Graph::cycle(5)).unwrap().0, 2);
        assert!(brute_force_max_matching(&Graph::empty(17)).is_err());
        let (_, m) = brute_force_max_matching(&Graph::path(6)).unwrap();
        m.validate(&Graph::path(6)).unwrap();
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn deletion_set_fig1_plus_pendant() {
        let base = fixture_fig1().graph;
        let g = Graph::from_edges(7, base.edges().chain([(0, 6)])).unwrap();
        let pi: Vec<usize> = fixture_fig1().pi.iter().collect();
        let out = matching_with_deletion_set(&g, &[6], &pi, true).unwrap();
        assert_eq!(out.matching.len(), 3);
        assert_eq!(out.rounds, 0);
    }

    #[test]
    fn deletion_set_c5() {
        let g = Graph::cycle(5);
        // G - {4} is the path 0-1-2-3, whose natural order is an I-ordering.
        let out = matching_with_deletion_set(&g, &[4], &[0, 1, 2, 3], true).unwrap();
        assert_eq!(out.matching.len(), 2);
        assert!(out.rounds <= 1);
    }

    #[test]
    fn deletion_set_rejects_bad_partitions() {
        let g = Graph::path(3);
        assert!(matching_with_deletion_set(&g, &[0], &[1], false).is_err());
        assert!(matching_with_deletion_set(&g, &[0], &[0, 1, 2], false).is_err());
        assert!(matching_with_deletion_set(&g, &[5], &[0, 1, 2], false).is_err());
    }

    #[test]
    fn empty_deletion_set_matches_pipeline() {
        let fx = fixture_fig1();
        let pi: Vec<usize> = fx.pi.iter().collect();
        let out = matching_with_deletion_set(&fx.graph, &[], &pi, true).unwrap();
        assert_eq!(out.rounds, 0);
        assert_eq!(out.matching, max_matching_cocomparability(&fx.graph, &fx.pi, true).unwrap());
    }
}
