//! Closed intervals on the real line and their intersection graphs.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub left: f64,
    pub right: f64,
}

impl Interval {
    pub fn new(left: f64, right: f64) -> Result<Self> {
        if !left.is_finite() || !right.is_finite() {
            return Err(Error::InvalidParameter(format!("non-finite interval [{left}, {right}]")));
        }
        if left > right {
            return Err(Error::InvalidParameter(format!("interval [{left}, {right}] has left > right")));
        }
        Ok(Self { left, right })
    }

    /// Closed intervals: touching endpoints intersect.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }
}

/// Sort key of the I-ordering: left endpoint, then right endpoint, then index.
fn by_left(intervals: &[Interval], a: usize, b: usize) -> Ordering {
    let (x, y) = (&intervals[a], &intervals[b]);
    x.left
        .total_cmp(&y.left)
        .then(x.right.total_cmp(&y.right))
        .then(a.cmp(&b))
}

/// Intersection graph (vertex `i` is `intervals[i]`) and the I-ordering that
/// sorts intervals by left endpoint.
///
/// Runs a sweep over the sorted intervals, so the cost is `O(n log n + m)`.
pub fn intersection_graph(intervals: &[Interval]) -> (Graph, VertexOrdering) {
    let n = intervals.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by(|&a, &b| by_left(intervals, a, b));
    let mut lists = vec![Vec::new(); n];
    for (i, &u) in order.iter().enumerate() {
        let right = intervals[u].right;
        // Later intervals start at or after u's left endpoint, so they meet u
        // exactly when they start no later than u's right endpoint.
        for &v in order[i + 1..].iter().take_while(|&&v| intervals[v].left <= right) {
            lists[u].push(v);
            lists[v].push(u);
        }
    }
    let g = Graph::from_lists(lists);
    (g, VertexOrdering::new(order).expect("sorted indices form a permutation"))
}
