//! Brute-force verifiers for vertex-ordering characterizations: I-orderings
//! (interval graphs), umbrella-free orderings (cocomparability graphs) and
//! LDFS orderings (no bad triple).
//!
//! These are test oracles. They work on a dense bit matrix indexed by
//! ordering position and cost cubic (umbrella-free) or quartic/64 (LDFS)
//! time, so [`OrderingChecker::new`] refuses graphs above
//! [`DEFAULT_SIZE_LIMIT`] vertices. Every verifier reports the violating
//! triple that is smallest by positions, compared lexicographically.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

pub const DEFAULT_SIZE_LIMIT: usize = 2000;

/// Three vertices `(a, b, c)`, displayed 1-based as `a b c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triple(pub usize, pub usize, pub usize);

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0 + 1, self.1 + 1, self.2 + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated(Triple),
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }

    pub fn witness(self) -> Option<Triple> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(t) => Some(t),
        }
    }
}

/// Classification of a triple `(a, b, c)` with respect to an ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleClass {
    /// Not `a < b < c` with `{a,c}` an edge and `{a,b}` a non-edge.
    NotCandidate,
    /// A vertex `d` with `a < d < b`, `{d,b}` an edge and `{d,c}` a non-edge
    /// exists; `witness` is the leftmost such `d`.
    Good { witness: usize },
    Bad,
}

/// Dense adjacency in position space, reusable across several checks on the
/// same `(graph, ordering)` pair.
pub struct OrderingChecker<'a> {
    sigma: &'a VertexOrdering,
    words: usize,
    bits: Vec<u64>,
}

impl<'a> OrderingChecker<'a> {
    pub fn new(g: &Graph, sigma: &'a VertexOrdering) -> Result<Self> {
        Self::with_limit(g, sigma, DEFAULT_SIZE_LIMIT)
    }

    pub fn with_limit(g: &Graph, sigma: &'a VertexOrdering, limit: usize) -> Result<Self> {
        if g.n() > limit {
            return Err(Error::SizeGuard { n: g.n(), limit });
        }
        sigma.check_fits(g)?;
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        for u in g.vertices() {
            let pu = sigma.position(u);
            for &v in g.neighbors(u) {
                let pv = sigma.position(v);
                bits[pu * words + pv / 64] |= 1 << (pv % 64);
            }
        }
        Ok(Self { sigma, words, bits })
    }

    fn n(&self) -> usize {
        self.sigma.len()
    }

    #[inline]
    fn row(&self, p: usize) -> &[u64] {
        &self.bits[p * self.words..(p + 1) * self.words]
    }

    #[inline]
    fn adj(&self, p: usize, q: usize) -> bool {
        self.row(p)[q / 64] >> (q % 64) & 1 == 1
    }

    fn triple(&self, p: usize, q: usize, r: usize) -> Triple {
        Triple(self.sigma.at(p), self.sigma.at(q), self.sigma.at(r))
    }

    /// For all `x < y < z` with `{x,z}` an edge, `{x,y}` is an edge.
    pub fn i_ordering(&self) -> Verdict {
        for x in 0..self.n() {
            let row = self.row(x);
            let Some(last) = last_set(row) else { continue };
            if last <= x {
                continue;
            }
            // The smallest non-neighbour right of x is the smallest usable y.
            if let Some(y) = first_set(x + 1, last, |w| !row[w]) {
                let z = first_set(y + 1, last + 1, |w| row[w]).expect("last is a neighbour");
                return Verdict::Violated(self.triple(x, y, z));
            }
        }
        Verdict::Holds
    }

    /// For all `x < y < z` with `{x,z}` an edge, `{x,y}` or `{y,z}` is an edge.
    pub fn umbrella_free(&self) -> Verdict {
        for x in 0..self.n() {
            let rx = self.row(x);
            let mut best: Option<(usize, usize)> = None;
            for z in x + 2..self.n() {
                if !self.adj(x, z) {
                    continue;
                }
                let rz = self.row(z);
                let limit = best.map_or(z, |(y, _)| y.min(z));
                if let Some(y) = first_set(x + 1, limit, |w| !(rx[w] | rz[w])) {
                    best = Some((y, z));
                }
            }
            if let Some((y, z)) = best {
                return Verdict::Violated(self.triple(x, y, z));
            }
        }
        Verdict::Holds
    }

    /// Classifies `(a, b, c)` given as vertices.
    pub fn classify(&self, a: usize, b: usize, c: usize) -> TripleClass {
        let (pa, pb, pc) = (self.sigma.position(a), self.sigma.position(b), self.sigma.position(c));
        match self.classify_positions(pa, pb, pc) {
            PosClass::NotCandidate => TripleClass::NotCandidate,
            PosClass::Bad => TripleClass::Bad,
            PosClass::Good(pd) => {
                let d = self.sigma.at(pd);
                debug_assert!(self.adj(pd, pb) && !self.adj(pd, pc) && pa < pd && pd < pb);
                TripleClass::Good { witness: d }
            }
        }
    }

    fn classify_positions(&self, a: usize, b: usize, c: usize) -> PosClass {
        if !(a < b && b < c) || !self.adj(a, c) || self.adj(a, b) {
            return PosClass::NotCandidate;
        }
        let (rb, rc) = (self.row(b), self.row(c));
        match first_set(a + 1, b, |w| rb[w] & !rc[w]) {
            Some(d) => PosClass::Good(d),
            None => PosClass::Bad,
        }
    }

    /// No bad triple exists.
    pub fn ldfs(&self) -> Verdict {
        let n = self.n();
        for a in 0..n {
            let ra = self.row(a);
            for b in a + 1..n {
                if self.adj(a, b) {
                    continue;
                }
                let rb = self.row(b);
                let mut c = b + 1;
                while let Some(next) = first_set(c, n, |w| ra[w]) {
                    let rc = self.row(next);
                    if first_set(a + 1, b, |w| rb[w] & !rc[w]).is_none() {
                        return Verdict::Violated(self.triple(a, b, next));
                    }
                    c = next + 1;
                }
            }
        }
        Verdict::Holds
    }
}

enum PosClass {
    NotCandidate,
    Good(usize),
    Bad,
}

/// Smallest index in `lo..hi` whose bit is set in the word stream `word`.
fn first_set(lo: usize, hi: usize, word: impl Fn(usize) -> u64) -> Option<usize> {
    if lo >= hi {
        return None;
    }
    let (first, last) = (lo / 64, (hi - 1) / 64);
    for w in first..=last {
        let mut bits = word(w);
        if w == first {
            bits &= !0u64 << (lo % 64);
        }
        if w == last {
            let top = (hi - 1) % 64;
            if top < 63 {
                bits &= (1u64 << (top + 1)) - 1;
            }
        }
        if bits != 0 {
            return Some(w * 64 + bits.trailing_zeros() as usize);
        }
    }
    None
}

fn last_set(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

pub fn is_i_ordering(g: &Graph, sigma: &VertexOrdering) -> Result<Verdict> {
    Ok(OrderingChecker::new(g, sigma)?.i_ordering())
}

pub fn is_umbrella_free(g: &Graph, sigma: &VertexOrdering) -> Result<Verdict> {
    Ok(OrderingChecker::new(g, sigma)?.umbrella_free())
}

pub fn is_ldfs_ordering(g: &Graph, sigma: &VertexOrdering) -> Result<Verdict> {
    Ok(OrderingChecker::new(g, sigma)?.ldfs())
}

pub fn classify_triple(
    g: &Graph,
    sigma: &VertexOrdering,
    a: usize,
    b: usize,
    c: usize,
) -> Result<TripleClass> {
    Ok(OrderingChecker::new(g, sigma)?.classify(a, b, c))
}
