//! Lexicographic depth-first search.
//!
//! Each vertex carries a label: the visit numbers of its already numbered
//! neighbours, most recent first. Every round numbers an unnumbered vertex
//! whose label is lexicographically largest. [`ldfs`] breaks ties by the
//! smallest vertex index; [`ldfs_plus`] breaks them by the rightmost position
//! in a reference ordering.
//!
//! Labels are kept explicitly and the maximum is found by a scan over the
//! unnumbered vertices, so a run costs `O(n^2 + n*m)` label work in the worst
//! case. This is the reference semantics, not a linear-time implementation.

use std::cmp::Ordering;

use crate::graph::{Graph, VertexOrdering};

/// A strictly decreasing sequence of visit numbers.
///
/// Comparison is lexicographic from the most recent entry, with an exhausted
/// sequence comparing smaller, so `(2,1) > (2) > ε`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LdfsLabel {
    // Stored oldest first; the label reads back to front.
    digits: Vec<u32>,
}

impl LdfsLabel {
    pub fn epsilon() -> Self {
        Self::default()
    }

    /// Builds a label from its entries in reading order (largest first).
    pub fn from_digits(digits: &[u32]) -> Self {
        Self { digits: digits.iter().rev().copied().collect() }
    }

    pub fn prepend(&mut self, i: u32) {
        debug_assert!(self.digits.last().is_none_or(|&d| d < i));
        self.digits.push(i);
    }

    /// Entries in reading order.
    pub fn digits(&self) -> impl Iterator<Item = u32> + '_ {
        self.digits.iter().rev().copied()
    }

    pub fn is_epsilon(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.digits.windows(2).all(|w| w[0] < w[1])
    }
}

impl Ord for LdfsLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.digits().cmp(other.digits())
    }
}

impl PartialOrd for LdfsLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LdfsStats {
    /// Number of label prepend operations.
    pub prepends: u64,
}

/// Generic search state; `prefer(a, b)` says whether `a` wins a label tie.
fn search(
    g: &Graph,
    first: Option<usize>,
    prefer: impl Fn(usize, usize) -> bool,
) -> (VertexOrdering, LdfsStats) {
    let n = g.n();
    let mut labels = vec![LdfsLabel::epsilon(); n];
    let mut numbered = vec![false; n];
    let mut unnumbered: Vec<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    let mut stats = LdfsStats::default();

    for i in 1..=n {
        let slot = match first {
            Some(u) if i == 1 => unnumbered.iter().position(|&v| v == u).expect("start vertex exists"),
            _ => {
                let mut best = 0;
                for (k, &v) in unnumbered.iter().enumerate().skip(1) {
                    let w = unnumbered[best];
                    match labels[v].cmp(&labels[w]) {
                        Ordering::Greater => best = k,
                        Ordering::Equal if prefer(v, w) => best = k,
                        _ => {}
                    }
                }
                best
            }
        };
        let v = unnumbered.swap_remove(slot);
        debug_assert!(labels[v].is_strictly_decreasing());
        numbered[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                labels[w].prepend(i as u32);
                stats.prepends += 1;
            }
        }
    }
    (VertexOrdering::new(order).expect("every vertex numbered once"), stats)
}

/// LDFS from `start`, ties broken by smallest vertex index.
///
/// On a disconnected graph the search restarts, whenever all remaining labels
/// are empty, at the smallest-index unnumbered vertex.
pub fn ldfs(g: &Graph, start: usize) -> VertexOrdering {
    ldfs_with_stats(g, start).0
}

pub fn ldfs_with_stats(g: &Graph, start: usize) -> (VertexOrdering, LdfsStats) {
    assert!(start < g.n(), "start vertex {} out of range", start + 1);
    search(g, Some(start), |a, b| a < b)
}

/// LDFS+: ties broken by the rightmost position in `pi`. The first vertex is
/// the rightmost of `pi`, and restarts on disconnected graphs follow the same
/// rule.
pub fn ldfs_plus(g: &Graph, pi: &VertexOrdering) -> VertexOrdering {
    ldfs_plus_with_stats(g, pi).0
}

pub fn ldfs_plus_with_stats(g: &Graph, pi: &VertexOrdering) -> (VertexOrdering, LdfsStats) {
    assert_eq!(pi.len(), g.n(), "reference ordering must cover every vertex");
    search(g, None, |a, b| pi.position(a) > pi.position(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixture_fig1;

    fn ord(ids: &[usize]) -> VertexOrdering {
        VertexOrdering::from_one_based(ids).unwrap()
    }

    #[test]
    fn label_order() {
        let e = LdfsLabel::epsilon();
        let two = LdfsLabel::from_digits(&[2]);
        let two_one = LdfsLabel::from_digits(&[2, 1]);
        let three = LdfsLabel::from_digits(&[3]);
        assert!(two_one > two && two > e);
        assert!(three > two_one);
        let mut l = LdfsLabel::epsilon();
        l.prepend(1);
        l.prepend(2);
        assert_eq!(l, two_one);
        assert_eq!(l.digits().collect::<Vec<_>>(), vec![2, 1]);
    }

    #[test]
    fn fig1_traces() {
        let fx = fixture_fig1();
        assert_eq!(ldfs(&fx.graph, 0), fx.sigma_a);
        assert_eq!(ldfs(&fx.graph, 0).to_one_based(), vec![1, 3, 5, 2, 6, 4]);
        assert_eq!(ldfs_plus(&fx.graph, &fx.pi).to_one_based(), vec![1, 5, 3, 6, 2, 4]);
    }

    #[test]
    fn small_cases() {
        assert_eq!(ldfs(&Graph::empty(1), 0).as_slice(), &[0]);
        assert_eq!(ldfs(&Graph::path(3), 1).to_one_based(), vec![2, 1, 3]);
        assert_eq!(ldfs_plus(&Graph::complete(3), &ord(&[1, 2, 3])).to_one_based(), vec![3, 2, 1]);
        let pi = ord(&[3, 1, 4, 2]);
        assert_eq!(ldfs_plus(&Graph::empty(4), &pi), pi.reversed());
    }

    #[test]
    fn disconnected_restart() {
        // Components {1,2} and {3,4}, start at 3.
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(ldfs(&g, 2).to_one_based(), vec![3, 4, 1, 2]);
        let pi = ord(&[2, 3, 1, 4]);
        assert_eq!(ldfs_plus(&g, &pi).to_one_based(), vec![4, 3, 1, 2]);
    }

    #[test]
    fn prepend_counter() {
        let (_, stats) = ldfs_with_stats(&Graph::complete(4), 0);
        assert_eq!(stats.prepends, 3 + 2 + 1);
    }
}
