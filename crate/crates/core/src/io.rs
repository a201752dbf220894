//! Line-oriented text formats for graphs, orderings, matchings and interval
//! lists. All vertex ids in these formats are 1-based.
//!
//! Graph files:
//!
//! ```text
//! c optional comment
//! c alias 1 a
//! p <n> <m>
//! e <u> <v>
//! ```
//!
//! `c alias <id> <name>` comment lines attach display names to vertices.
//! Ordering files hold the `n` vertex ids of a permutation, whitespace
//! separated. Matching files hold `s <size>` followed by `m <u> <v>` lines
//! with `u < v`, sorted. Interval files hold one `<left> <right>` pair per line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching, VertexOrdering};
use crate::interval::Interval;

/// Optional display names for vertices, indexed by 0-based vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Aliases {
    names: Vec<Option<String>>,
}

impl Aliases {
    pub fn new(n: usize) -> Self {
        Self { names: vec![None; n] }
    }

    pub fn from_names<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Self { names: names.into_iter().map(|s| Some(s.into())).collect() }
    }

    pub fn get(&self, v: usize) -> Option<&str> {
        self.names.get(v).and_then(|s| s.as_deref())
    }

    pub fn set(&mut self, v: usize, name: impl Into<String>) {
        if v >= self.names.len() {
            self.names.resize(v + 1, None);
        }
        self.names[v] = Some(name.into());
    }

    /// Vertex carrying `name`, if any.
    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s.as_deref() == Some(name))
    }

    pub fn is_empty(&self) -> bool {
        self.names.iter().all(Option::is_none)
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("invalid {what} {tok:?}")))
}

/// Meaningful lines with their 1-based line numbers; blank lines are skipped.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn is_comment(line: &str) -> bool {
    line == "c" || line.starts_with("c ")
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph_with_aliases(text).map(|(g, _)| g)
}

pub fn parse_graph_with_aliases(text: &str) -> Result<(Graph, Aliases)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut pending_aliases = Vec::new();
    for (no, line) in lines(text) {
        if is_comment(line) {
            let mut toks = line.split_whitespace().skip(1);
            if toks.next() == Some("alias") {
                let id = parse_usize(toks.next(), no, "alias vertex")?;
                let name = toks.next().ok_or_else(|| parse_err(no, "missing alias name"))?;
                pending_aliases.push((no, id, name.to_string()));
            }
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(no, "duplicate header"));
                }
                let n = parse_usize(toks.next(), no, "vertex count")?;
                let m = parse_usize(toks.next(), no, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(no, "malformed header"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(no, "edge line before header"))?;
                let u = parse_usize(toks.next(), no, "edge endpoint")?;
                let v = parse_usize(toks.next(), no, "edge endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(no, "trailing tokens on edge line"));
                }
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(parse_err(no, format!("vertex {w} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(no, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(parse_err(no, format!("unrecognized line {line:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing header \"p <n> <m>\""))?;
    if edges.len() != m {
        log::warn!("header declares {m} edges, found {} edge lines", edges.len());
    }
    let lines_read = edges.len();
    let g = Graph::from_edges(n, edges)?;
    if g.m() != lines_read {
        log::warn!("collapsed {} duplicate edge lines", lines_read - g.m());
    }
    let mut aliases = Aliases::new(n);
    for (no, id, name) in pending_aliases {
        if id == 0 || id > n {
            return Err(parse_err(no, format!("alias vertex {id} out of range 1..={n}")));
        }
        aliases.set(id - 1, name);
    }
    Ok((g, aliases))
}

pub fn serialize_graph(g: &Graph) -> String {
    serialize_graph_with_aliases(g, &Aliases::default())
}

pub fn serialize_graph_with_aliases(g: &Graph, aliases: &Aliases) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        if let Some(name) = aliases.get(v) {
            writeln!(out, "c alias {} {}", v + 1, name).unwrap();
        }
    }
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses an ordering file; `n` is the expected vertex count.
pub fn parse_ordering(text: &str, n: usize) -> Result<VertexOrdering> {
    let mut ids = Vec::with_capacity(n);
    for (no, line) in lines(text) {
        if is_comment(line) {
            continue;
        }
        for tok in line.split_whitespace() {
            ids.push(parse_usize(Some(tok), no, "vertex id")?);
        }
    }
    if ids.len() != n {
        return Err(Error::NotAPermutation { n, msg: format!("ordering lists {} vertices", ids.len()) });
    }
    VertexOrdering::from_one_based(&ids)
}

/// Parses a whitespace-separated vertex list that need not cover every vertex.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (no, line) in lines(text) {
        if is_comment(line) {
            continue;
        }
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let id = parse_usize(Some(tok), no, "vertex id")?;
            if id == 0 || id > n {
                return Err(parse_err(no, format!("vertex {id} out of range 1..={n}")));
            }
            out.push(id - 1);
        }
    }
    Ok(out)
}

pub fn serialize_ordering(sigma: &VertexOrdering) -> String {
    serialize_vertex_list(sigma.as_slice())
}

pub fn serialize_vertex_list(vertices: &[usize]) -> String {
    let mut out = vertices.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
    out.push('\n');
    out
}

pub fn parse_matching(text: &str, g: &Graph) -> Result<Matching> {
    let mut declared = None;
    let mut pairs = Vec::new();
    for (no, line) in lines(text) {
        if is_comment(line) {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("s") if declared.is_none() => declared = Some(parse_usize(toks.next(), no, "size")?),
            Some("m") => {
                let u = parse_usize(toks.next(), no, "matched vertex")?;
                let v = parse_usize(toks.next(), no, "matched vertex")?;
                for w in [u, v] {
                    if w == 0 || w > g.n() {
                        return Err(parse_err(no, format!("vertex {w} out of range 1..={}", g.n())));
                    }
                }
                pairs.push((u - 1, v - 1));
            }
            _ => return Err(parse_err(no, format!("unrecognized line {line:?}"))),
        }
    }
    let declared = declared.ok_or_else(|| parse_err(0, "missing size line \"s <size>\""))?;
    if declared != pairs.len() {
        return Err(parse_err(0, format!("size line says {declared}, found {} pairs", pairs.len())));
    }
    Matching::from_pairs(g, pairs)
}

pub fn serialize_matching(m: &Matching) -> String {
    let edges = m.edges();
    let mut out = format!("s {}\n", edges.len());
    for (u, v) in edges {
        writeln!(out, "m {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_intervals(text: &str) -> Result<Vec<Interval>> {
    let mut out = Vec::new();
    for (no, line) in lines(text) {
        if is_comment(line) {
            continue;
        }
        let mut toks = line.split_whitespace();
        let mut coord = |what: &str| -> Result<f64> {
            let tok = toks.next().ok_or_else(|| parse_err(no, format!("missing {what} endpoint")))?;
            tok.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| parse_err(no, format!("invalid {what} endpoint {tok:?}")))
        };
        let left = coord("left")?;
        let right = coord("right")?;
        if toks.next().is_some() {
            return Err(parse_err(no, "trailing tokens on interval line"));
        }
        out.push(Interval::new(left, right).map_err(|e| parse_err(no, e.to_string()))?);
    }
    Ok(out)
}

pub fn serialize_intervals(intervals: &[Interval]) -> String {
    let mut out = String::new();
    for iv in intervals {
        writeln!(out, "{} {}", iv.left, iv.right).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_p3() {
        let g = parse_graph("p 3 2\ne 1 2\ne 2 3").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn self_loop_names_line() {
        let err = parse_graph("p 2 1\ne 1 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("self-loop"));
    }

    #[test]
    fn out_of_range_and_header_errors() {
        assert!(matches!(parse_graph("p 2 1\ne 1 3"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("e 1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("c hi\np 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("p 2 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("c only comments"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("p 2 0\np 2 0"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("p 3 1\nq 1 2"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_graph("p 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn serializes_small_graphs() {
        assert_eq!(serialize_graph(&Graph::empty(1)), "p 1 0\n");
        assert_eq!(serialize_graph(&Graph::path(3)), "p 3 2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn aliases_round_trip() {
        let text = "c alias 1 a\nc alias 2 b\np 2 1\ne 1 2\n";
        let (g, aliases) = parse_graph_with_aliases(text).unwrap();
        assert_eq!(aliases.get(1), Some("b"));
        assert_eq!(aliases.lookup("a"), Some(0));
        assert_eq!(serialize_graph_with_aliases(&g, &aliases), text);
    }

    #[test]
    fn ordering_format() {
        let o = parse_ordering("c pi\n2 4 3\n6 5 1\n", 6).unwrap();
        assert_eq!(o.to_one_based(), vec![2, 4, 3, 6, 5, 1]);
        assert_eq!(serialize_ordering(&o), "2 4 3 6 5 1\n");
        assert!(parse_ordering("1 2", 3).is_err());
        assert!(parse_ordering("1 1 2", 3).is_err());
        assert!(parse_ordering("1 x 2", 3).is_err());
    }

    #[test]
    fn matching_format() {
        let g = Graph::path(4);
        let m = parse_matching("s 2\nm 3 4\nm 1 2\n", &g).unwrap();
        assert_eq!(serialize_matching(&m), "s 2\nm 1 2\nm 3 4\n");
        assert!(parse_matching("s 1\nm 1 3\n", &g).is_err());
        assert!(parse_matching("s 2\nm 1 2\n", &g).is_err());
        assert!(parse_matching("m 1 2\n", &g).is_err());
    }

    #[test]
    fn interval_format() {
        let ivs = parse_intervals("0 1\n0.5 1.5\n").unwrap();
        assert_eq!(ivs.len(), 2);
        assert_eq!(ivs[1].left, 0.5);
        assert!(parse_intervals("2 1\n").is_err());
        assert!(parse_intervals("nan 1\n").is_err());
        assert_eq!(serialize_intervals(&ivs), "0 1\n0.5 1.5\n");
    }

    #[test]
    fn vertex_list_accepts_commas() {
        assert_eq!(parse_vertex_list("1,3 2", 3).unwrap(), vec![0, 2, 1]);
        assert!(parse_vertex_list("4", 3).is_err());
    }
}
