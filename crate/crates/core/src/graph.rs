//! Undirected simple graphs, vertex orderings and matchings.
//!
//! Vertices are dense indices `0..n` inside the library. The text formats in
//! [`crate::io`] use `1..=n`, and conversion happens only there.

use std::fmt;

use crate::error::{Error, Result};

/// An undirected simple graph in compressed adjacency form.
///
/// Every neighbor list is sorted ascending and free of duplicates, and the
/// adjacency relation is symmetric.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Duplicate edges (in either orientation) are collapsed. Self-loops and
    /// endpoints outside `0..n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lists = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w + 1, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {}", u + 1)));
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        Ok(Self::from_lists(lists))
    }

    /// Builds a graph from raw neighbor lists, sorting and deduplicating them.
    /// The caller guarantees symmetry and the absence of self-loops.
    pub(crate) fn from_lists(mut lists: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let total: usize = lists.iter().map(Vec::len).sum();
        let mut targets = Vec::with_capacity(total);
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        let g = Self { offsets, targets };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    pub fn empty(n: usize) -> Self {
        Self { offsets: vec![0; n + 1], targets: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_lists((0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect())
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u).iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Checks symmetry, sortedness, and the absence of loops and duplicates.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if self.targets.len() % 2 != 0 {
            return Err("odd adjacency total".into());
        }
        for v in self.vertices() {
            let list = self.neighbors(v);
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(format!("neighbor list of {} not strictly ascending", v + 1));
                }
            }
            for &u in list {
                if u == v {
                    return Err(format!("self-loop at {}", v + 1));
                }
                if u >= self.n() || self.neighbors(u).binary_search(&v).is_err() {
                    return Err(format!("asymmetric entry {} -> {}", v + 1, u + 1));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().map(|(u, v)| (u + 1, v + 1)).collect::<Vec<_>>())
            .finish()
    }
}

/// A permutation of the vertices together with its inverse.
///
/// `order[i]` is the vertex at position `i`; `pos[v]` is the position of `v`.
/// `x <_σ y` means `position(x) < position(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::NotAPermutation { n, msg: format!("vertex {} out of range", v + 1) });
            }
            if pos[v] != usize::MAX {
                return Err(Error::NotAPermutation { n, msg: format!("vertex {} repeated", v + 1) });
            }
            pos[v] = i;
        }
        Ok(Self { order, pos })
    }

    /// Builds an ordering from 1-based vertex ids.
    pub fn from_one_based(ids: &[usize]) -> Result<Self> {
        let n = ids.len();
        let order = ids
            .iter()
            .map(|&id| {
                if id == 0 || id > n {
                    Err(Error::NotAPermutation { n, msg: format!("vertex {id} out of range") })
                } else {
                    Ok(id - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(order)
    }

    pub fn identity(n: usize) -> Self {
        Self { order: (0..n).collect(), pos: (0..n).collect() }
    }

    pub fn reversed(&self) -> Self {
        let order: Vec<usize> = self.order.iter().rev().copied().collect();
        Self::new(order).expect("reversal of a permutation is a permutation")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.order[i]
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    #[inline]
    pub fn before(&self, x: usize, y: usize) -> bool {
        self.pos[x] < self.pos[y]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.order.iter().copied()
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.order.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn check_fits(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::NotAPermutation {
                n: g.n(),
                msg: format!("ordering has {} entries", self.len()),
            });
        }
        Ok(())
    }
}

/// A set of pairwise disjoint edges, stored as a partner map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    partner: Vec<Option<usize>>,
    size: usize,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Self { partner: vec![None; n], size: 0 }
    }

    /// Builds a matching of `g` from vertex pairs, checking that every pair is
    /// an edge and that no vertex is used twice.
    pub fn from_pairs<I>(g: &Graph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut m = Self::empty(g.n());
        for (u, v) in pairs {
            if u >= g.n() || v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: u.max(v) + 1, n: g.n() });
            }
            if !g.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!("{{{}, {}}} is not an edge", u + 1, v + 1)));
            }
            if m.partner[u].is_some() || m.partner[v].is_some() {
                return Err(Error::InvalidMatching(format!(
                    "edge {{{}, {}}} shares an endpoint with another matched edge",
                    u + 1,
                    v + 1
                )));
            }
            m.insert(u, v);
        }
        Ok(m)
    }

    /// Matches two currently free vertices. No edge check.
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && self.partner[u].is_none() && self.partner[v].is_none());
        self.partner[u] = Some(v);
        self.partner[v] = Some(u);
        self.size += 1;
    }

    pub(crate) fn remove(&mut self, u: usize) {
        if let Some(v) = self.partner[u].take() {
            self.partner[v] = None;
            self.size -= 1;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.partner.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.partner[v]
    }

    #[inline]
    pub fn is_free(&self, v: usize) -> bool {
        self.partner[v].is_none()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.partner[u] == Some(v)
    }

    /// Matched edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter_map(|(u, p)| p.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Checks the partner-map invariants against a host graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::InvalidMatching(format!(
                "matching over {} vertices, graph has {}",
                self.n(),
                g.n()
            )));
        }
        let mut matched = 0;
        for (u, p) in self.partner.iter().enumerate() {
            if let Some(v) = *p {
                matched += 1;
                if v == u || self.partner[v] != Some(u) {
                    return Err(Error::InvalidMatching(format!("asymmetric partner at {}", u + 1)));
                }
                if !g.has_edge(u, v) {
                    return Err(Error::InvalidMatching(format!(
                        "{{{}, {}}} is not an edge",
                        u + 1,
                        v + 1
                    )));
                }
            }
        }
        if matched != 2 * self.size {
            return Err(Error::InvalidMatching("size does not match partner map".into()));
        }
        Ok(())
    }

    /// Flips every edge along an augmenting path, growing the matching by one.
    pub fn augment(&mut self, path: &AlternatingPath) {
        let vs = path.vertices();
        debug_assert!(vs.len() % 2 == 0);
        for pair in vs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if let Some(w) = self.partner[u] {
                self.partner[w] = None;
            }
            if let Some(w) = self.partner[v] {
                self.partner[w] = None;
            }
            self.partner[u] = Some(v);
            self.partner[v] = Some(u);
        }
        self.size += 1;
    }

    /// Relabels a matching of an induced subgraph back into its host.
    pub fn lift(&self, remap: &Remap, host_n: usize) -> Self {
        let mut lifted = Self::empty(host_n);
        for (u, v) in self.edges() {
            lifted.insert(remap.to_global(u), remap.to_global(v));
        }
        lifted
    }
}

/// A simple path whose edges alternate between matched and unmatched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingPath {
    vertices: Vec<usize>,
}

impl AlternatingPath {
    /// Validates simplicity, adjacency and alternation with respect to `m`.
    pub fn new(g: &Graph, m: &Matching, vertices: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; g.n()];
        for &v in &vertices {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v + 1, n: g.n() });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameter(format!("path revisits vertex {}", v + 1)));
            }
        }
        let mut last_matched = None;
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "path step {{{}, {}}} is not an edge",
                    w[0] + 1,
                    w[1] + 1
                )));
            }
            let matched = m.contains(w[0], w[1]);
            if last_matched == Some(matched) {
                return Err(Error::InvalidParameter("path does not alternate".into()));
            }
            last_matched = Some(matched);
        }
        Ok(Self { vertices })
    }

    /// Like [`AlternatingPath::new`], additionally requiring free endpoints and
    /// an odd number of edges.
    pub fn augmenting(g: &Graph, m: &Matching, vertices: Vec<usize>) -> Result<Self> {
        let path = Self::new(g, m, vertices)?;
        let vs = &path.vertices;
        let ok = vs.len() >= 2
            && vs.len() % 2 == 0
            && m.is_free(vs[0])
            && m.is_free(vs[vs.len() - 1]);
        if !ok {
            return Err(Error::InvalidParameter("path is not augmenting".into()));
        }
        Ok(path)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

/// Index correspondence between an induced subgraph and its host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remap {
    global: Vec<usize>,
    local: Vec<Option<usize>>,
}

impl Remap {
    pub fn to_global(&self, local: usize) -> usize {
        self.global[local]
    }

    pub fn to_local(&self, global: usize) -> Option<usize> {
        self.local[global]
    }

    pub fn globals(&self) -> &[usize] {
        &self.global
    }
}

/// The complement graph: `{u, v}` is an edge iff `u != v` and it is not an
/// edge of `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let lists = (0..n)
        .map(|v| {
            let mut nbrs = g.neighbors(v).iter().copied().peekable();
            let mut out = Vec::with_capacity(n - 1 - g.degree(v));
            for u in 0..n {
                if nbrs.peek() == Some(&u) {
                    nbrs.next();
                } else if u != v {
                    out.push(u);
                }
            }
            out
        })
        .collect();
    Graph::from_lists(lists)
}

/// Induced subgraph on `vertices`; local index `i` is `vertices[i]`.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> (Graph, Remap) {
    let mut local = vec![None; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = Some(i);
    }
    let lists = vertices
        .iter()
        .map(|&v| g.neighbors(v).iter().filter_map(|&u| local[u]).collect())
        .collect();
    (Graph::from_lists(lists), Remap { global: vertices.to_vec(), local })
}

/// The prefix subgraph: induced on every vertex at or before `v` in `sigma`.
/// Local indices follow `sigma`, so local vertex `i` is `sigma.at(i)`.
pub fn induced_prefix(g: &Graph, sigma: &VertexOrdering, v: usize) -> (Graph, Remap) {
    let end = sigma.position(v) + 1;
    induced_subgraph(g, &sigma.as_slice()[..end])
}
