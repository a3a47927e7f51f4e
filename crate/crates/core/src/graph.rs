//! Graph and node-set primitives.
//!
//! Graphs are simple and undirected: nodes are dense indices `0..n`, edges
//! are unordered pairs stored in canonical `(min, max)` form, and the
//! structure is immutable once built. [`NodeSet`] is a fixed-universe bit
//! set with O(1) membership and sorted iteration; the boundary/tightness
//! helpers on [`Graph`] are the vocabulary the cut oracles are built from.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Index of a node, valid for graphs with more than `self.index()` nodes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn new(index: usize) -> NodeId {
        NodeId(u32::try_from(index).expect("node index exceeds u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Undirected edge in canonical form: `u() < v()` always holds.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: NodeId,
    v: NodeId,
}

impl Edge {
    /// Builds the canonical edge for an unordered pair. Panics on `a == b`;
    /// self-loops are rejected earlier by every graph constructor.
    pub fn new(a: NodeId, b: NodeId) -> Edge {
        assert!(a != b, "self-loop edge ({a}, {b})");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> NodeId {
        self.u
    }

    pub fn v(self) -> NodeId {
        self.v
    }

    /// The endpoint that is not `x`. Panics if `x` is not an endpoint.
    pub fn other(self, x: NodeId) -> NodeId {
        if x == self.u {
            self.v
        } else if x == self.v {
            self.u
        } else {
            panic!("node {x} is not an endpoint of ({}, {})", self.u, self.v)
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {0} out of range for a graph on {1} nodes")]
    NodeOutOfRange(usize, usize),
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

/// Set of nodes over a fixed universe `0..universe()`, with O(1) membership
/// and iteration in ascending node order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    blocks: Vec<u64>,
    universe: u32,
    len: u32,
}

impl NodeSet {
    pub fn new(universe: usize) -> NodeSet {
        NodeSet {
            blocks: vec![0; universe.div_ceil(64)],
            universe: universe as u32,
            len: 0,
        }
    }

    pub fn from_nodes(universe: usize, nodes: impl IntoIterator<Item = NodeId>) -> NodeSet {
        let mut set = NodeSet::new(universe);
        for v in nodes {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: NodeId) -> bool {
        let i = v.index();
        i < self.universe as usize && self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    /// Inserts `v`, returning whether it was newly added. Panics if `v` is
    /// outside the universe.
    pub fn insert(&mut self, v: NodeId) -> bool {
        let i = v.index();
        assert!(i < self.universe as usize, "node {v} outside set universe");
        let bit = 1u64 << (i % 64);
        let fresh = self.blocks[i / 64] & bit == 0;
        self.blocks[i / 64] |= bit;
        self.len += fresh as u32;
        fresh
    }

    pub fn remove(&mut self, v: NodeId) -> bool {
        let i = v.index();
        if i >= self.universe as usize {
            return false;
        }
        let bit = 1u64 << (i % 64);
        let present = self.blocks[i / 64] & bit != 0;
        self.blocks[i / 64] &= !bit;
        self.len -= present as u32;
        present
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let base = bi as u32 * 64;
            BitIter { block, base }
        })
    }

    pub fn to_vec(&self) -> Vec<NodeId> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<NodeId> {
        self.iter().next()
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        self.zip_blocks(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &NodeSet) -> NodeSet {
        self.zip_blocks(other, |a, b| a & b)
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        self.zip_blocks(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    fn zip_blocks(&self, other: &NodeSet, f: impl Fn(u64, u64) -> u64) -> NodeSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        let blocks: Vec<u64> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| f(a, b))
            .collect();
        let len = blocks.iter().map(|b| b.count_ones()).sum();
        NodeSet {
            blocks,
            universe: self.universe,
            len,
        }
    }
}

struct BitIter {
    block: u64,
    base: u32,
}

impl Iterator for BitIter {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        if self.block == 0 {
            return None;
        }
        let bit = self.block.trailing_zeros();
        self.block &= self.block - 1;
        Some(NodeId(self.base + bit))
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &NodeSet) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NodeSet {
    /// Lexicographic order on the ascending member sequence, so `{0, 5}`
    /// sorts before `{1, 2}`. Universe size breaks the remaining ties to
    /// stay consistent with `Eq`.
    fn cmp(&self, other: &NodeSet) -> std::cmp::Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph, immutable after construction.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<NodeId>>,
    edges: Vec<Edge>,
    edge_set: HashSet<Edge>,
}

impl Graph {
    /// Builds a graph on `n` nodes, rejecting out-of-range endpoints,
    /// self-loops, and duplicate edges.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut edge_set = HashSet::new();
        let mut edge_list = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::NodeOutOfRange(a, n));
            }
            if b >= n {
                return Err(GraphError::NodeOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = Edge::new(NodeId::new(a), NodeId::new(b));
            if !edge_set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.u.index(), e.v.index()));
            }
            adj[a].push(NodeId::new(b));
            adj[b].push(NodeId::new(a));
            edge_list.push(e);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        edge_list.sort_unstable();
        Ok(Graph {
            adj,
            edges: edge_list,
            edge_set,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn has_edge(&self, a: NodeId, b: NodeId) -> bool {
        a != b && self.edge_set.contains(&Edge::new(a, b))
    }

    /// All edges in canonical `(min, max)` order, ascending.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.n() as u32).map(NodeId)
    }

    /// Boundary of `a`: nodes outside `a` with at least one neighbor in `a`.
    pub fn boundary(&self, a: &NodeSet) -> NodeSet {
        assert_eq!(a.universe(), self.n(), "set universe mismatch");
        let mut out = NodeSet::new(self.n());
        for v in a.iter() {
            for &w in self.neighbors(v) {
                if !a.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// `a*`: nodes neither in `a` nor adjacent to it. The three parts
    /// `a`, `boundary(a)`, `node_complement(a)` partition the nodes.
    pub fn node_complement(&self, a: &NodeSet) -> NodeSet {
        let boundary = self.boundary(a);
        let mut out = NodeSet::new(self.n());
        for v in self.nodes() {
            if !a.contains(v) && !boundary.contains(v) {
                out.insert(v);
            }
        }
        out
    }

    /// A set is tight for `k` when it is nonempty, its boundary has exactly
    /// `k` nodes, and some node lies strictly beyond the boundary.
    pub fn is_tight(&self, a: &NodeSet, k: usize) -> bool {
        !a.is_empty()
            && self.boundary(a).len() == k
            && a.len() + k < self.n()
    }

    /// Small means `|a| <= (n - k) / 2`, evaluated exactly as
    /// `2|a| + k <= n` to avoid rounding.
    pub fn is_small(&self, a: &NodeSet, k: usize) -> bool {
        2 * a.len() + k <= self.n()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected header `n m`")]
    MalformedHeader,
    #[error("expected edge `u v`")]
    MalformedEdge,
    #[error("{0}")]
    Graph(GraphError),
    #[error("header declared {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let mut tokens = text.split_whitespace();
    let a = tokens.next()?.parse().ok()?;
    let b = tokens.next()?.parse().ok()?;
    if tokens.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Parses the text graph format: a `n m` header line followed by `m` lines
/// `u v`, one per edge. `#` starts a comment anywhere on a line; blank lines
/// are skipped. Errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pair_lines: Vec<usize> = Vec::new();
    let mut line_count = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        line_count = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match header {
            None => {
                header = Some(parse_pair(content).ok_or(ParseError {
                    line,
                    kind: ParseErrorKind::MalformedHeader,
                })?);
            }
            Some((_, m)) => {
                if pairs.len() == m {
                    return Err(ParseError {
                        line,
                        kind: ParseErrorKind::EdgeCount {
                            expected: m,
                            found: m + 1,
                        },
                    });
                }
                pairs.push(parse_pair(content).ok_or(ParseError {
                    line,
                    kind: ParseErrorKind::MalformedEdge,
                })?);
                pair_lines.push(line);
            }
        }
    }
    let (n, m) = header.ok_or(ParseError {
        line: line_count + 1,
        kind: ParseErrorKind::MalformedHeader,
    })?;
    if pairs.len() < m {
        return Err(ParseError {
            line: line_count + 1,
            kind: ParseErrorKind::EdgeCount {
                expected: m,
                found: pairs.len(),
            },
        });
    }
    Graph::from_edges(n, pairs.iter().copied()).map_err(|e| {
        let line = match &e {
            GraphError::NodeOutOfRange(v, _) => pairs
                .iter()
                .position(|&(a, b)| a == *v || b == *v)
                .map(|i| pair_lines[i]),
            GraphError::SelfLoop(v) => pairs
                .iter()
                .position(|&(a, b)| a == b && a == *v)
                .map(|i| pair_lines[i]),
            GraphError::DuplicateEdge(u, v) => pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| (a.min(b), a.max(b)) == (*u, *v))
                .nth(1)
                .map(|(i, _)| pair_lines[i]),
        };
        ParseError {
            line: line.unwrap_or(line_count),
            kind: ParseErrorKind::Graph(e),
        }
    })
}

/// Canonical emission: header line, then edges sorted by `(min, max)`.
/// `parse_graph(&emit_graph(g))` reproduces `g` exactly.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}
