//! Constant-time connectivity oracle for k-connected graphs.
//!
//! For a k-connected G the oracle answers, for any pair, whether
//! kappa(s, t) >= k+1, and if not returns an id into a stored list of at
//! most 2n cuts of size k. The structure splits pairs three ways:
//!
//! * pairs touching a degree-k node: the incident edge set of that node
//!   is always a minimum cut;
//! * edges between higher-degree nodes with kappa = k ("critical" edges,
//!   a forest by Mader's theorem): one stored mixed cut each;
//! * remaining pairs: governed by R_s, the minimal small tight set
//!   around s. The R-sets are grouped into at most 2k+1 laminar families
//!   via a degeneracy coloring of their conflict digraph, and each family
//!   becomes a tree with O(1) descendant tests. A pair is separable iff
//!   one endpoint's R-set excludes the other endpoint and its boundary.
//!
//! Queries never touch the graph; everything they need is in the tables.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::flow::{Cut, PairError, SplitNetwork};
use crate::graph::{Edge, Graph, NodeId, NodeSet};
use crate::laminar::{LaminarForest, TreeNodeId};
use crate::sparsify::ni_certificate;

pub const NO_CUT: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("graph is not {k}-connected: node {v} has degree {d}")]
    MinDegree { k: usize, v: NodeId, d: usize },
    #[error("graph is not {k}-connected: kappa({s}, {t}) = {kappa}")]
    LowPair {
        k: usize,
        s: NodeId,
        t: NodeId,
        kappa: usize,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no node of degree <= {d} among {remaining} remaining nodes")]
pub struct DegeneracyError {
    pub d: usize,
    pub remaining: usize,
}

/// Query-time record for a node s with a minimal small tight set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceRecord {
    /// Which laminar forest holds R_s.
    pub forest: u32,
    /// Tree node of R_s inside that forest.
    pub node: TreeNodeId,
    /// Id of the stored cut boundary(R_s).
    pub cut: u32,
    /// boundary(R_s), sorted; k entries.
    pub boundary: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KConnOracle {
    k: u32,
    n: u32,
    /// Per node: cut id of its incident-edge cut when its degree is k.
    node_cut: Vec<u32>,
    /// Critical edges with their mixed-cut ids, sorted by edge.
    critical: Vec<(Edge, u32)>,
    critical_idx: HashMap<Edge, u32>,
    sources: Vec<Option<SourceRecord>>,
    forests: Vec<LaminarForest>,
    cuts: Vec<Cut>,
}

/// Content-addressed cut storage; equal cuts share one id.
#[derive(Debug, Default)]
struct CutInterner {
    ids: HashMap<Cut, u32>,
    list: Vec<Cut>,
}

impl CutInterner {
    fn intern(&mut self, cut: Cut) -> u32 {
        if let Some(&id) = self.ids.get(&cut) {
            return id;
        }
        let id = self.list.len() as u32;
        self.ids.insert(cut.clone(), id);
        self.list.push(cut);
        id
    }
}

/// Proper coloring of a graph whose every subgraph has a node of degree
/// <= d: peel minimum-degree nodes (ties toward the lowest index), then
/// greedily color in reverse with the smallest free color. Uses at most
/// d+1 colors.
pub fn degeneracy_coloring(adj: &[Vec<usize>], d: usize) -> Result<Vec<u32>, DegeneracyError> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for round in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("nodes remain");
        if degree[v] > d {
            return Err(DegeneracyError {
                d,
                remaining: n - round,
            });
        }
        removed[v] = true;
        order.push(v);
        for &w in &adj[v] {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    let mut colors = vec![0u32; n];
    let mut colored = vec![false; n];
    for &v in order.iter().rev() {
        let mut used = vec![false; d + 2];
        for &w in &adj[v] {
            if colored[w] {
                used[colors[w] as usize] = true;
            }
        }
        colors[v] = used
            .iter()
            .position(|&u| !u)
            .expect("degree <= d leaves a free color among d+1") as u32;
        colored[v] = true;
    }
    Ok(colors)
}

/// The inclusion-minimal small tight set containing s, if one exists.
///
/// Expects a k-connected graph (or its connectivity certificate, which
/// has the same tight sets). Scans non-neighbors t: whenever
/// kappa(s, t) = k, the minimal st-tight set around s either is small,
/// in which case it equals R_s outright and the scan stops, or small
/// tight sets around s exclude this witness entirely. Nodes in R_s's own
/// complement always produce the small answer, so when R_s exists at
/// least half the candidates finish the scan; candidates are tried in a
/// seed-shuffled order to hit one quickly regardless of labeling.
pub fn compute_r_s(g: &Graph, k: usize, s: NodeId) -> Option<NodeSet> {
    compute_r_s_with(&mut SplitNetwork::new(g), g, k, s)
}

fn compute_r_s_with(
    net: &mut SplitNetwork,
    g: &Graph,
    k: usize,
    s: NodeId,
) -> Option<NodeSet> {
    let mut candidates: Vec<NodeId> = g
        .nodes()
        .filter(|&t| t != s && !g.has_edge(s, t))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(s.index() as u64);
    candidates.shuffle(&mut rng);
    for t in candidates {
        let r = net
            .kappa_nonadjacent(s, t, k + 1)
            .expect("candidates are distinct non-neighbors");
        if r.kappa < k {
            // Only reachable when the caller skipped verification on a
            // graph that is not k-connected.
            continue;
        }
        if let Some(side) = r.source_side {
            if g.is_small(&side, k) {
                return Some(side);
            }
        }
    }
    None
}

impl KConnOracle {
    /// Builds the oracle. Degrees are always checked; with `verify` the
    /// full all-pairs condition kappa >= k is confirmed first (on the
    /// certificate, which preserves it).
    pub fn build(g: &Graph, k: usize, verify: bool) -> Result<KConnOracle, BuildError> {
        assert!(k >= 1, "oracle needs k >= 1");
        let n = g.n();
        for v in g.nodes() {
            if g.degree(v) < k {
                return Err(BuildError::MinDegree {
                    k,
                    v,
                    d: g.degree(v),
                });
            }
        }

        let mut interner = CutInterner::default();
        let mut node_cut = vec![NO_CUT; n];
        for v in g.nodes() {
            if g.degree(v) == k {
                let edges: Vec<Edge> = g.neighbors(v).iter().map(|&w| Edge::new(v, w)).collect();
                node_cut[v.index()] = interner.intern(Cut {
                    vertices: Vec::new(),
                    edges,
                });
            }
        }

        // All flows below run on the sparse certificate: it has the same
        // connectivity values, minimum cuts, and tight sets as g for
        // everything the oracle stores.
        let h = ni_certificate(g, k);
        let mut net = SplitNetwork::new(&h);

        if verify {
            for s in g.nodes() {
                for t in g.nodes() {
                    if s >= t {
                        continue;
                    }
                    let r = net.kappa_pair(s, t, k).expect("distinct pair");
                    if r.kappa < k {
                        return Err(BuildError::LowPair {
                            k,
                            s,
                            t,
                            kappa: r.kappa,
                        });
                    }
                }
            }
        }

        let mut critical = Vec::new();
        for &e in h.edges() {
            if node_cut[e.u().index()] != NO_CUT || node_cut[e.v().index()] != NO_CUT {
                continue;
            }
            let r = net
                .kappa_adjacent(e.u(), e.v(), k + 1)
                .expect("certificate edge");
            if r.kappa == k {
                let id = interner.intern(r.cut.expect("kappa below cap yields a cut"));
                critical.push((e, id));
            }
        }
        assert_critical_forest(n, &critical);

        // Minimal small tight sets. Sets are collected first, then
        // colored so each color class is laminar.
        let mut r_sets: Vec<(NodeId, NodeSet)> = Vec::new();
        for s in g.nodes() {
            if node_cut[s.index()] != NO_CUT {
                continue;
            }
            if let Some(side) = compute_r_s_with(&mut net, &h, k, s) {
                r_sets.push((s, side));
            }
        }

        let index_of: HashMap<NodeId, usize> =
            r_sets.iter().enumerate().map(|(i, &(s, _))| (s, i)).collect();
        let boundaries: Vec<NodeSet> = r_sets.iter().map(|(_, set)| g.boundary(set)).collect();
        let mut adj: Vec<HashSet<usize>> = vec![HashSet::new(); r_sets.len()];
        for (b, boundary) in boundaries.iter().enumerate() {
            for a_node in boundary.iter() {
                if let Some(&a) = index_of.get(&a_node) {
                    if a != b {
                        adj[a].insert(b);
                        adj[b].insert(a);
                    }
                }
            }
        }
        let adj: Vec<Vec<usize>> = adj
            .into_iter()
            .map(|set| {
                let mut v: Vec<usize> = set.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        let colors = degeneracy_coloring(&adj, 2 * k)
            .expect("conflict digraph has indegree <= k, so degeneracy <= 2k");
        let color_count = colors.iter().max().map_or(0, |&c| c as usize + 1);

        let mut sources: Vec<Option<SourceRecord>> = vec![None; n];
        let mut forests = Vec::with_capacity(color_count);
        for color in 0..color_count {
            let members: Vec<usize> = (0..r_sets.len())
                .filter(|&i| colors[i] == color as u32)
                .collect();
            let family: Vec<NodeSet> = members.iter().map(|&i| r_sets[i].1.clone()).collect();
            let (forest, nodes) = LaminarForest::build(&family, n)
                .expect("independent set in the conflict digraph is laminar");
            for (&i, &node) in members.iter().zip(&nodes) {
                let (s, _) = r_sets[i];
                let boundary = boundaries[i].to_vec();
                let cut = interner.intern(Cut {
                    vertices: boundary.clone(),
                    edges: Vec::new(),
                });
                sources[s.index()] = Some(SourceRecord {
                    forest: color as u32,
                    node,
                    cut,
                    boundary,
                });
            }
            forests.push(forest);
        }

        let critical_idx = critical.iter().copied().collect();
        Ok(KConnOracle {
            k: k as u32,
            n: n as u32,
            node_cut,
            critical,
            critical_idx,
            sources,
            forests,
            cuts: interner.list,
        })
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    pub fn cut(&self, id: u32) -> &Cut {
        &self.cuts[id as usize]
    }

    pub fn forests(&self) -> &[LaminarForest] {
        &self.forests
    }

    pub fn critical_edges(&self) -> &[(Edge, u32)] {
        &self.critical
    }

    pub fn node_cut_ids(&self) -> &[u32] {
        &self.node_cut
    }

    pub fn source_records(&self) -> &[Option<SourceRecord>] {
        &self.sources
    }

    /// True iff kappa(s, t) >= k+1.
    pub fn query_con(&self, s: NodeId, t: NodeId) -> Result<bool, PairError> {
        Ok(self.query_cut(s, t)?.is_none())
    }

    /// Id of a stored st-cut of size k, or None when kappa(s, t) >= k+1.
    pub fn query_cut(&self, s: NodeId, t: NodeId) -> Result<Option<u32>, PairError> {
        if s == t {
            return Err(PairError::SameNode(s));
        }
        if self.node_cut[s.index()] != NO_CUT {
            return Ok(Some(self.node_cut[s.index()]));
        }
        if self.node_cut[t.index()] != NO_CUT {
            return Ok(Some(self.node_cut[t.index()]));
        }
        if let Some(&id) = self.critical_idx.get(&Edge::new(s, t)) {
            return Ok(Some(id));
        }
        // For an edge st that is not critical neither branch below can
        // fire: t then lies in R_s or on its boundary, and psi(t) of a
        // member of R_s descends from R_s's node. So no adjacency test
        // is needed.
        if let Some(id) = self.tight_side(s, t) {
            return Ok(Some(id));
        }
        if let Some(id) = self.tight_side(t, s) {
            return Ok(Some(id));
        }
        Ok(None)
    }

    fn tight_side(&self, s: NodeId, t: NodeId) -> Option<u32> {
        let rec = self.sources[s.index()].as_ref()?;
        let forest = &self.forests[rec.forest as usize];
        if forest.is_descendant(forest.psi(t), rec.node) {
            return None;
        }
        if rec.boundary.binary_search(&t).is_ok() {
            return None;
        }
        Some(rec.cut)
    }

    pub(crate) fn from_parts(
        k: u32,
        n: u32,
        node_cut: Vec<u32>,
        critical: Vec<(Edge, u32)>,
        sources: Vec<Option<SourceRecord>>,
        forests: Vec<LaminarForest>,
        cuts: Vec<Cut>,
    ) -> KConnOracle {
        let critical_idx = critical.iter().copied().collect();
        KConnOracle {
            k,
            n,
            node_cut,
            critical,
            critical_idx,
            sources,
            forests,
            cuts,
        }
    }
}

/// Mader's theorem: critical edges between nodes of degree above k form
/// a forest in any k-connected graph. A cycle therefore signals either a
/// non-k-connected input that skipped verification, or a bug.
fn assert_critical_forest(n: usize, critical: &[(Edge, u32)]) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let r = find(parent, parent[v]);
            parent[v] = r;
        }
        parent[v]
    }
    for (e, _) in critical {
        let (a, b) = (find(&mut parent, e.u().index()), find(&mut parent, e.v().index()));
        assert!(a != b, "critical edges contain a cycle, violating Mader's theorem");
        parent[a] = b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::verify::{brute_kappa_flow, validate_cut};

    fn nid(v: usize) -> NodeId {
        NodeId::new(v)
    }

    /// Every ordered pair answered like the flow oracle, every cut valid.
    fn assert_equiv(g: &Graph, k: usize, oracle: &KConnOracle) {
        for s in g.nodes() {
            for t in g.nodes() {
                if s == t {
                    continue;
                }
                let want_con = brute_kappa_flow(g, s, t, k + 1) == k + 1;
                assert_eq!(
                    oracle.query_con(s, t),
                    Ok(want_con),
                    "con mismatch at ({s}, {t})"
                );
                if let Some(id) = oracle.query_cut(s, t).unwrap() {
                    let cut = oracle.cut(id);
                    assert_eq!(cut.size(), k, "stored cut has wrong size");
                    assert_eq!(validate_cut(g, s, t, cut), Ok(true), "cut fails at ({s}, {t})");
                }
            }
        }
    }

    #[test]
    fn cycle_oracle_uses_incident_cuts() {
        let g = families::cycle(5);
        let oracle = KConnOracle::build(&g, 2, true).unwrap();
        assert_eq!(oracle.cuts().len(), 5);
        assert_eq!(oracle.forests().len(), 0);
        assert_eq!(oracle.critical_edges().len(), 0);
        let id = oracle.query_cut(nid(0), nid(2)).unwrap().unwrap();
        let cut = oracle.cut(id);
        assert!(cut.vertices.is_empty());
        assert_eq!(cut.edges, vec![Edge::new(nid(0), nid(1)), Edge::new(nid(0), nid(4))]);
        assert_equiv(&g, 2, &oracle);
    }

    #[test]
    fn complete_graph_all_connected() {
        let g = families::complete(5);
        let oracle = KConnOracle::build(&g, 3, true).unwrap();
        for s in g.nodes() {
            for t in g.nodes() {
                if s != t {
                    assert_eq!(oracle.query_con(s, t), Ok(true));
                    assert_eq!(oracle.query_cut(s, t), Ok(None));
                }
            }
        }
    }

    #[test]
    fn bridged_cliques_structure() {
        let g = families::bridged_cliques(6, 3);
        let oracle = KConnOracle::build(&g, 3, true).unwrap();
        // No degree-3 nodes; the three bridges are the critical edges.
        assert!(oracle.node_cut_ids().iter().all(|&id| id == NO_CUT));
        let crit: Vec<Edge> = oracle.critical_edges().iter().map(|&(e, _)| e).collect();
        assert_eq!(
            crit,
            vec![
                Edge::new(nid(0), nid(6)),
                Edge::new(nid(1), nid(7)),
                Edge::new(nid(2), nid(8))
            ]
        );
        // Unbridged corners of each clique share one minimal tight set.
        for v in [3, 4, 5, 9, 10, 11] {
            assert!(oracle.source_records()[v].is_some(), "node {v} has no record");
        }
        let id = oracle.query_cut(nid(3), nid(9)).unwrap().unwrap();
        assert_eq!(oracle.cut(id).vertices, vec![nid(0), nid(1), nid(2)]);
        let id = oracle.query_cut(nid(9), nid(3)).unwrap().unwrap();
        assert_eq!(oracle.cut(id).vertices, vec![nid(6), nid(7), nid(8)]);
        assert_eq!(oracle.query_con(nid(3), nid(4)), Ok(true));
        assert_equiv(&g, 3, &oracle);
    }

    #[test]
    fn minimal_small_tight_sets_on_bridged_cliques() {
        let g = families::bridged_cliques(6, 3);
        let r = compute_r_s(&g, 3, nid(9)).unwrap();
        assert_eq!(r.to_vec(), vec![nid(9), nid(10), nid(11)]);
        // A bridged node's set reaches around its clique's free corner.
        let r = compute_r_s(&g, 3, nid(0)).unwrap();
        assert_eq!(r.to_vec(), vec![nid(0), nid(3), nid(4), nid(5)]);
    }

    #[test]
    fn no_small_tight_set_in_complete_graph() {
        let g = families::complete(6);
        assert_eq!(compute_r_s(&g, 5, nid(2)), None);
    }

    #[test]
    fn wheel_rim_is_low_degree() {
        let g = families::wheel(6);
        let oracle = KConnOracle::build(&g, 3, true).unwrap();
        // Rim nodes have degree exactly 3, the hub is above it.
        assert_eq!(oracle.node_cut_ids()[0], NO_CUT);
        assert!(oracle.node_cut_ids()[1..].iter().all(|&id| id != NO_CUT));
        let id = oracle.query_cut(nid(0), nid(4)).unwrap().unwrap();
        assert!(oracle.cut(id).edges.iter().all(|e| e.u() == nid(4) || e.v() == nid(4)));
        assert_equiv(&g, 3, &oracle);
    }

    #[test]
    fn four_connected_graph_at_k3_answers_all_con() {
        let g = families::hypercube(4);
        let oracle = KConnOracle::build(&g, 3, true).unwrap();
        assert!(oracle.source_records().iter().all(Option::is_none));
        assert_eq!(oracle.cuts().len(), 0);
        assert_equiv(&g, 3, &oracle);
    }

    #[test]
    fn petersen_oracle() {
        let g = families::petersen();
        let oracle = KConnOracle::build(&g, 3, true).unwrap();
        assert_eq!(oracle.cuts().len(), 10);
        assert_equiv(&g, 3, &oracle);
    }

    #[test]
    fn rejects_low_degree() {
        let err = KConnOracle::build(&families::path(4), 2, false).unwrap_err();
        assert_eq!(err, BuildError::MinDegree { k: 2, v: nid(0), d: 1 });
    }

    #[test]
    fn verification_catches_low_pair() {
        // Two triangles joined by a single edge: min degree 2 but only
        // 1-connected across the join.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
            .unwrap();
        let err = KConnOracle::build(&g, 2, true).unwrap_err();
        let BuildError::LowPair { k: 2, kappa: 1, .. } = err else {
            panic!("unexpected error {err:?}");
        };
    }

    #[test]
    fn coloring_on_simple_graphs() {
        let empty: Vec<Vec<usize>> = vec![vec![]; 4];
        assert_eq!(degeneracy_coloring(&empty, 0).unwrap(), vec![0; 4]);

        let path: Vec<Vec<usize>> = vec![vec![1], vec![0, 2], vec![1, 3], vec![2, 4], vec![3]];
        let colors = degeneracy_coloring(&path, 2).unwrap();
        assert!(colors.iter().max().unwrap() <= &2);
        for (v, nbrs) in path.iter().enumerate() {
            for &w in nbrs {
                assert_ne!(colors[v], colors[w]);
            }
        }

        let triangle = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        assert_eq!(
            degeneracy_coloring(&triangle, 1),
            Err(DegeneracyError { d: 1, remaining: 3 })
        );
        let colors = degeneracy_coloring(&triangle, 2).unwrap();
        assert_eq!(colors.iter().max(), Some(&2));
    }

    #[test]
    fn random_three_connected_graphs_agree_with_flows() {
        for seed in 0..6 {
            let g = families::gnp_k_connected(24, 0.45, seed * 100, 3, 60)
                .expect("a 3-connected draw exists");
            let oracle = KConnOracle::build(&g, 3, true).unwrap();
            assert_equiv(&g, 3, &oracle);
            assert!(oracle.cuts().len() <= 2 * g.n());
            assert!(oracle.forests().len() <= 7);
        }
    }

    #[test]
    fn deterministic_build() {
        let g = families::bridged_cliques(5, 2);
        let a = KConnOracle::build(&g, 2, true).unwrap();
        let b = KConnOracle::build(&g, 2, true).unwrap();
        assert_eq!(a, b);
    }
}
