//! Pairwise vertex connectivity via unit-capacity max flow.
//!
//! `kappa(s, t)` counts internally disjoint `st`-paths, or equivalently the
//! size of a minimum mixed `st`-cut (nodes plus, for an adjacent pair, the
//! edge `st` itself). Flows run on the split network: each node `v` becomes
//! an `in(v) -> out(v)` arc of capacity one, each undirected edge becomes
//! two infinite arcs. All computations cap the answer at a caller-supplied
//! bound, so a flow never runs more than `cap` augmentations.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Edge, Graph, NodeId, NodeSet};

/// Mixed cut: a set of nodes plus a set of edges whose joint removal
/// disconnects a pair. Both lists are sorted, so equal cuts compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    pub vertices: Vec<NodeId>,
    pub edges: Vec<Edge>,
}

impl Cut {
    pub fn size(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn contains_vertex(&self, v: NodeId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Outcome of a capped connectivity computation.
///
/// `kappa = min(kappa(s, t), cap)`. The cut and the source side are present
/// exactly when `kappa < cap`; `source_side` is then the inclusion-minimal
/// tight set around `s` (absent for adjacent pairs, whose cuts mix in the
/// edge `st`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub kappa: usize,
    pub cut: Option<Cut>,
    pub source_side: Option<NodeSet>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("query endpoints coincide at node {0}")]
    SameNode(NodeId),
    #[error("nodes {0} and {1} are adjacent")]
    Adjacent(NodeId, NodeId),
    #[error("nodes {0} and {1} are not adjacent")]
    NotAdjacent(NodeId, NodeId),
}

/// The split network of a graph, with reusable flow scratch space.
///
/// Topology is built once per graph; every query rewrites capacities and
/// runs breadth-first augmentations, scanning arcs in ascending target
/// order so results are deterministic.
pub struct SplitNetwork<'g> {
    g: &'g Graph,
    // Arc pair p occupies slots 2p (forward) and 2p+1 (reverse).
    // Pairs 0..n are the in(v)->out(v) internal arcs; pair n+2j is edge j
    // directed out(u)->in(v), pair n+2j+1 the opposite direction.
    to: Vec<u32>,
    head: Vec<u32>,
    arc_at: Vec<u32>,
    cap: Vec<u32>,
    parent: Vec<u32>,
    visited: Vec<bool>,
    queue: VecDeque<u32>,
}

const NO_ARC: u32 = u32::MAX;

fn node_in(v: NodeId) -> u32 {
    2 * v.index() as u32
}

fn node_out(v: NodeId) -> u32 {
    2 * v.index() as u32 + 1
}

impl<'g> SplitNetwork<'g> {
    pub fn new(g: &'g Graph) -> SplitNetwork<'g> {
        let n = g.n();
        let m = g.m();
        let pairs = n + 2 * m;
        let mut from = vec![0u32; 2 * pairs];
        let mut to = vec![0u32; 2 * pairs];
        for v in g.nodes() {
            let p = v.index();
            from[2 * p] = node_in(v);
            to[2 * p] = node_out(v);
        }
        for (j, e) in g.edges().iter().enumerate() {
            let p = n + 2 * j;
            from[2 * p] = node_out(e.u());
            to[2 * p] = node_in(e.v());
            from[2 * p + 2] = node_out(e.v());
            to[2 * p + 2] = node_in(e.u());
        }
        for p in 0..pairs {
            from[2 * p + 1] = to[2 * p];
            to[2 * p + 1] = from[2 * p];
        }
        // Bucket arcs by source node, then order each bucket by target so
        // breadth-first scans break ties toward the lowest node index.
        let mut order: Vec<u32> = (0..2 * pairs as u32).collect();
        order.sort_unstable_by_key(|&a| (from[a as usize], to[a as usize], a));
        let mut head = vec![0u32; 2 * n + 1];
        for &a in &order {
            head[from[a as usize] as usize + 1] += 1;
        }
        for i in 0..2 * n {
            head[i + 1] += head[i];
        }
        SplitNetwork {
            g,
            to,
            head,
            arc_at: order,
            cap: vec![0; 2 * pairs],
            parent: vec![NO_ARC; 2 * n],
            visited: vec![false; 2 * n],
            queue: VecDeque::new(),
        }
    }

    /// `min(kappa(s, t), cap)` for a non-adjacent pair, with the minimum cut
    /// and the minimal tight source side when the cap is not reached.
    pub fn kappa_nonadjacent(
        &mut self,
        s: NodeId,
        t: NodeId,
        cap: usize,
    ) -> Result<CutResult, PairError> {
        if s == t {
            return Err(PairError::SameNode(s));
        }
        if self.g.has_edge(s, t) {
            return Err(PairError::Adjacent(s, t));
        }
        Ok(self.run(s, t, cap, None))
    }

    /// Adjacent variant: `kappa(s, t) = 1 + kappa(s, t in G - st)`, so the
    /// flow runs with the edge masked and one unit less headroom. A returned
    /// cut always contains the edge `st` plus `kappa - 1` nodes.
    pub fn kappa_adjacent(
        &mut self,
        s: NodeId,
        t: NodeId,
        cap: usize,
    ) -> Result<CutResult, PairError> {
        if s == t {
            return Err(PairError::SameNode(s));
        }
        if !self.g.has_edge(s, t) {
            return Err(PairError::NotAdjacent(s, t));
        }
        assert!(cap >= 1, "cap must be positive");
        let e = Edge::new(s, t);
        let inner = self.run(s, t, cap - 1, Some(e));
        Ok(CutResult {
            kappa: inner.kappa + 1,
            cut: inner.cut.map(|c| Cut {
                vertices: c.vertices,
                edges: vec![e],
            }),
            source_side: None,
        })
    }

    /// Dispatches on adjacency.
    pub fn kappa_pair(&mut self, s: NodeId, t: NodeId, cap: usize) -> Result<CutResult, PairError> {
        if s != t && self.g.has_edge(s, t) {
            self.kappa_adjacent(s, t, cap)
        } else {
            self.kappa_nonadjacent(s, t, cap)
        }
    }

    fn reset(&mut self, s: NodeId, t: NodeId, cap: usize, mask: Option<Edge>) {
        let n = self.g.n();
        // "Infinite" capacity: the flow value never exceeds cap, so cap + 1
        // behaves as unbounded while keeping all arithmetic small.
        let inf = cap as u32 + 1;
        for v in 0..n {
            self.cap[2 * v] = 1;
            self.cap[2 * v + 1] = 0;
        }
        self.cap[2 * s.index()] = inf;
        self.cap[2 * t.index()] = inf;
        for j in 0..self.g.m() {
            let masked = mask == Some(self.g.edges()[j]);
            let c = if masked { 0 } else { inf };
            let p = n + 2 * j;
            self.cap[2 * p] = c;
            self.cap[2 * p + 1] = 0;
            self.cap[2 * p + 2] = c;
            self.cap[2 * p + 3] = 0;
        }
    }

    /// Breadth-first search over residual arcs from `out(s)` toward
    /// `in(t)`. Returns whether the sink was reached; `visited` and
    /// `parent` describe the search either way.
    fn bfs(&mut self, s: NodeId, t: NodeId) -> bool {
        let source = node_out(s);
        let sink = node_in(t);
        self.visited.fill(false);
        self.queue.clear();
        self.visited[source as usize] = true;
        self.queue.push_back(source);
        while let Some(x) = self.queue.pop_front() {
            let lo = self.head[x as usize] as usize;
            let hi = self.head[x as usize + 1] as usize;
            for &a in &self.arc_at[lo..hi] {
                if self.cap[a as usize] == 0 {
                    continue;
                }
                let y = self.to[a as usize];
                if self.visited[y as usize] {
                    continue;
                }
                self.visited[y as usize] = true;
                self.parent[y as usize] = a;
                if y == sink {
                    return true;
                }
                self.queue.push_back(y);
            }
        }
        false
    }

    fn run(&mut self, s: NodeId, t: NodeId, cap: usize, mask: Option<Edge>) -> CutResult {
        self.reset(s, t, cap, mask);
        let mut flow = 0;
        while flow < cap {
            if !self.bfs(s, t) {
                return self.extract(s, t, flow);
            }
            // Unit augmentation: every source-to-sink path crosses some
            // capacity-one internal arc.
            let mut x = node_in(t);
            while x != node_out(s) {
                let a = self.parent[x as usize] as usize;
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                x = self.to[a ^ 1];
            }
            flow += 1;
        }
        CutResult {
            kappa: cap,
            cut: None,
            source_side: None,
        }
    }

    /// Reads the minimum cut off the last (failed) search: a node is on the
    /// source side when both its copies are residual-reachable, and in the
    /// cut when only its in-copy is.
    fn extract(&self, s: NodeId, t: NodeId, flow: usize) -> CutResult {
        let mut side = NodeSet::new(self.g.n());
        let mut cut = Vec::new();
        for v in self.g.nodes() {
            if v == s || v == t {
                continue;
            }
            let in_reached = self.visited[node_in(v) as usize];
            let out_reached = self.visited[node_out(v) as usize];
            if in_reached && out_reached {
                side.insert(v);
            } else if in_reached {
                cut.push(v);
            }
        }
        side.insert(s);
        debug_assert_eq!(cut.len(), flow, "cut size must equal the flow value");
        CutResult {
            kappa: flow,
            cut: Some(Cut {
                vertices: cut,
                edges: Vec::new(),
            }),
            source_side: Some(side),
        }
    }
}

/// One-shot [`SplitNetwork::kappa_nonadjacent`].
pub fn kappa_nonadjacent(
    g: &Graph,
    s: NodeId,
    t: NodeId,
    cap: usize,
) -> Result<CutResult, PairError> {
    SplitNetwork::new(g).kappa_nonadjacent(s, t, cap)
}

/// One-shot [`SplitNetwork::kappa_adjacent`].
pub fn kappa_adjacent(g: &Graph, s: NodeId, t: NodeId, cap: usize) -> Result<CutResult, PairError> {
    SplitNetwork::new(g).kappa_adjacent(s, t, cap)
}

/// The unique inclusion-minimal `st`-tight set: the smallest `A` containing
/// `s` with `t` strictly beyond `boundary(A)` and `|boundary(A)| =
/// kappa(s, t)`. Runs an uncapped flow.
pub fn minimal_tight_set(g: &Graph, s: NodeId, t: NodeId) -> Result<NodeSet, PairError> {
    let result = SplitNetwork::new(g).kappa_nonadjacent(s, t, g.n())?;
    Ok(result
        .source_side
        .expect("uncapped flow always terminates with a cut"))
}

/// Whether `kappa(s, t) >= k` for every pair, returning the first violating
/// pair otherwise. Pairs sweep in lexicographic order.
pub fn check_k_connected(g: &Graph, k: usize) -> Result<(), (NodeId, NodeId, usize)> {
    let mut net = SplitNetwork::new(g);
    for s in g.nodes() {
        for t in g.nodes() {
            if t <= s {
                continue;
            }
            let r = net.kappa_pair(s, t, k).expect("distinct pair");
            if r.kappa < k {
                return Err((s, t, r.kappa));
            }
        }
    }
    Ok(())
}
