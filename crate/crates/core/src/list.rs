//! Index-based doubly linked lists sharing one node arena.
//!
//! Each node belongs to at most one list and is addressed by its arena index,
//! so unlinking a known node is `O(1)` without any search. Lists built with
//! [`ListArena::from_runs`] occupy contiguous node ranges, which keeps the
//! neighbours touched by an unlink on nearby cache lines.

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
struct Node {
    prev: u32,
    next: u32,
    value: u32,
}

#[derive(Clone, Copy, Debug)]
struct Ends {
    head: u32,
    tail: u32,
    len: u32,
}

const EMPTY: Ends = Ends { head: NIL, tail: NIL, len: 0 };

#[derive(Clone, Debug)]
pub(crate) struct ListArena {
    nodes: Vec<Node>,
    lists: Vec<Ends>,
}

impl ListArena {
    #[cfg(test)]
    pub(crate) fn new(lists: usize, nodes: usize) -> Self {
        assert!(nodes < NIL as usize, "arena too large for 32-bit links");
        Self { nodes: Vec::with_capacity(nodes), lists: vec![EMPTY; lists] }
    }

    /// List `i` holds `values[offsets[i]..offsets[i + 1]]` in that order, as
    /// nodes with the same indices.
    pub(crate) fn from_runs(offsets: &[usize], values: &[u32]) -> Self {
        assert!(values.len() < NIL as usize, "arena too large for 32-bit links");
        assert_eq!(offsets.last().copied().unwrap_or(0), values.len());
        let nodes = (0..values.len())
            .map(|k| Node { prev: k.wrapping_sub(1) as u32, next: k as u32 + 1, value: values[k] })
            .collect::<Vec<_>>();
        let mut arena = Self { nodes, lists: vec![EMPTY; offsets.len().saturating_sub(1)] };
        for (i, w) in offsets.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            if a == b {
                continue;
            }
            arena.nodes[a].prev = NIL;
            arena.nodes[b - 1].next = NIL;
            arena.lists[i] = Ends { head: a as u32, tail: (b - 1) as u32, len: (b - a) as u32 };
        }
        arena
    }

    /// Appends a fresh node carrying `value` to `list`; returns the node.
    #[cfg(test)]
    pub(crate) fn push_back(&mut self, list: usize, value: usize) -> usize {
        let node = self.nodes.len() as u32;
        let ends = &mut self.lists[list];
        let tail = ends.tail;
        self.nodes.push(Node { prev: tail, next: NIL, value: value as u32 });
        if tail == NIL {
            ends.head = node;
        } else {
            self.nodes[tail as usize].next = node;
        }
        ends.tail = node;
        ends.len += 1;
        node as usize
    }

    pub(crate) fn unlink(&mut self, list: usize, node: usize) {
        let Node { prev: p, next: n, .. } = self.nodes[node];
        let ends = &mut self.lists[list];
        if p == NIL {
            ends.head = n;
        } else {
            self.nodes[p as usize].next = n;
        }
        if n == NIL {
            ends.tail = p;
        } else {
            self.nodes[n as usize].prev = p;
        }
        ends.len -= 1;
        let unlinked = &mut self.nodes[node];
        unlinked.prev = NIL;
        unlinked.next = NIL;
    }

    /// Last node of `list`.
    pub(crate) fn back(&self, list: usize) -> Option<usize> {
        let t = self.lists[list].tail;
        (t != NIL).then_some(t as usize)
    }

    pub(crate) fn value(&self, node: usize) -> usize {
        self.nodes[node].value as usize
    }

    #[cfg(test)]
    pub(crate) fn is_empty(&self, list: usize) -> bool {
        self.lists[list].len == 0
    }

    #[cfg(test)]
    pub(crate) fn len(&self, list: usize) -> usize {
        self.lists[list].len as usize
    }

    /// Values of `list`, front to back.
    #[cfg(test)]
    pub(crate) fn values(&self, list: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len(list));
        let mut cur = self.lists[list].head;
        while cur != NIL {
            out.push(self.nodes[cur as usize].value as usize);
            cur = self.nodes[cur as usize].next;
        }
        out
    }
}
