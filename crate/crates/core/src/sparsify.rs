//! Sparse connectivity certificates.
//!
//! `ni_certificate(g, k)` returns a spanning subgraph H that is the union
//! of k+1 edge-disjoint forests, where forest i is a maximal spanning
//! forest of G minus the earlier forests. H keeps at most (k+1)(n-1)
//! edges, and for every pair min(kappa_H(s,t), k+1) = min(kappa_G(s,t),
//! k+1); in particular every minimum st-cut of size at most k found in H
//! is a minimum st-cut of G.
//!
//! The partition comes from a single maximum-adjacency scan: nodes are
//! scanned in order of how many scanned neighbors they already have, and
//! the j-th edge charged to a node joins forest j. This ordering (rather
//! than independent per-round extractions in, say, canonical edge order)
//! is what makes the per-pair guarantee hold; arbitrary maximal forests
//! do not certify vertex connectivity.

use crate::graph::{Edge, Graph};

/// The k+1 forests of the certificate, each sorted canonically.
/// Forests may be empty once the graph is exhausted.
pub fn ni_forests(g: &Graph, k: usize) -> Vec<Vec<Edge>> {
    assert!(k >= 1, "certificate needs k >= 1");
    let n = g.n();
    let mut forests = vec![Vec::new(); k + 1];
    let mut scanned = vec![false; n];
    // rank[v] counts edges already charged to v; the next one joins
    // forest rank[v].
    let mut rank = vec![0usize; n];
    for _ in 0..n {
        let x = (0..n)
            .filter(|&v| !scanned[v])
            .max_by_key(|&v| (rank[v], std::cmp::Reverse(v)))
            .expect("one unscanned node per iteration");
        scanned[x] = true;
        let x = crate::graph::NodeId::new(x);
        for &y in g.neighbors(x) {
            if scanned[y.index()] {
                continue;
            }
            let i = rank[y.index()];
            rank[y.index()] += 1;
            if i <= k {
                forests[i].push(Edge::new(x, y));
            }
        }
    }
    for f in &mut forests {
        f.sort_unstable();
    }
    forests
}

/// The union of the k+1 certificate forests as a graph on the same nodes.
pub fn ni_certificate(g: &Graph, k: usize) -> Graph {
    let edges = ni_forests(g, k)
        .into_iter()
        .flatten()
        .map(|e| (e.u().index(), e.v().index()));
    Graph::from_edges(g.n(), edges).expect("forest edges are distinct and valid")
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::families;
    use crate::flow::SplitNetwork;
    use crate::graph::NodeId;

    /// Union-find over node indices, enough for forest checks.
    struct Dsu(Vec<usize>);

    impl Dsu {
        fn new(n: usize) -> Dsu {
            Dsu((0..n).collect())
        }

        fn find(&mut self, v: usize) -> usize {
            if self.0[v] != v {
                let r = self.find(self.0[v]);
                self.0[v] = r;
            }
            self.0[v]
        }

        fn union(&mut self, a: usize, b: usize) -> bool {
            let (a, b) = (self.find(a), self.find(b));
            self.0[a] = b;
            a != b
        }
    }

    /// Asserts the defining shape: forest i is acyclic and maximal in the
    /// graph left over after removing forests 0..i.
    fn assert_forest_decomposition(g: &Graph, forests: &[Vec<Edge>]) {
        let mut remaining: HashSet<Edge> = g.edges().iter().copied().collect();
        for forest in forests {
            let mut dsu = Dsu::new(g.n());
            for e in forest {
                assert!(remaining.remove(e), "edge reused across forests");
                assert!(dsu.union(e.u().index(), e.v().index()), "cycle in forest");
            }
            for e in &remaining {
                assert_eq!(
                    dsu.find(e.u().index()),
                    dsu.find(e.v().index()),
                    "forest not maximal: {e:?} joins two of its trees"
                );
            }
        }
    }

    fn assert_values_preserved(g: &Graph, k: usize) {
        let h = ni_certificate(g, k);
        assert!(h.m() <= (k + 1) * (g.n().saturating_sub(1)));
        let mut on_g = SplitNetwork::new(g);
        let mut on_h = SplitNetwork::new(&h);
        for s in g.nodes() {
            for t in g.nodes() {
                if s >= t {
                    continue;
                }
                // The certificate drops edges only between highly
                // connected pairs, so adjacency may differ; compare by
                // each graph's own pair kind.
                let kg = on_g.kappa_pair(s, t, k + 1).unwrap().kappa;
                let kh = on_h.kappa_pair(s, t, k + 1).unwrap().kappa;
                assert_eq!(kg, kh, "pair ({s}, {t}) differs");
            }
        }
    }

    #[test]
    fn tree_passes_through() {
        let g = families::path(8);
        let forests = ni_forests(&g, 3);
        assert_eq!(forests[0].len(), 7);
        assert!(forests[1..].iter().all(Vec::is_empty));
        assert_eq!(ni_certificate(&g, 3).edges(), g.edges());
    }

    #[test]
    fn complete_graph_thins_out() {
        let g = families::complete(5);
        let h = ni_certificate(&g, 1);
        assert!(h.m() <= 8);
        assert_eq!(
            crate::flow::check_k_connected(&h, 2),
            Ok(()),
            "two forests of K_5 stay 2-connected"
        );
    }

    #[test]
    fn forests_decompose_residually() {
        assert_forest_decomposition(&families::petersen(), &ni_forests(&families::petersen(), 2));
        let g = families::gnp(24, 0.35, 11);
        assert_forest_decomposition(&g, &ni_forests(&g, 3));
        let g = families::hypercube(4);
        assert_forest_decomposition(&g, &ni_forests(&g, 4));
    }

    #[test]
    fn values_preserved_on_random_graph() {
        assert_values_preserved(&families::gnp(30, 0.4, 3), 3);
    }

    #[test]
    fn values_preserved_on_dense_families() {
        assert_values_preserved(&families::complete(12), 2);
        assert_values_preserved(&families::bridged_cliques(6, 3), 3);
    }

    #[test]
    fn cuts_found_in_certificate_are_cuts_of_g() {
        let g = families::gnp(26, 0.3, 9);
        let k = 3;
        let h = ni_certificate(&g, k);
        let mut net = SplitNetwork::new(&h);
        for s in g.nodes() {
            for t in g.nodes() {
                if s >= t || h.has_edge(s, t) {
                    continue;
                }
                let r = net.kappa_nonadjacent(s, t, k + 1).unwrap();
                if let Some(cut) = r.cut {
                    assert!(
                        !g.has_edge(s, t),
                        "low pair must keep its edge in the certificate"
                    );
                    assert_eq!(
                        crate::verify::validate_cut(&g, s, t, &cut),
                        Ok(true),
                        "certificate cut fails in the original graph"
                    );
                }
            }
        }
    }

    #[test]
    fn deterministic_output() {
        let g = families::gnp(20, 0.4, 5);
        assert_eq!(ni_forests(&g, 2), ni_forests(&g, 2));
    }

    #[test]
    fn disconnected_input() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let forests = ni_forests(&g, 2);
        assert_eq!(forests[0].len(), 4);
        let h = ni_certificate(&g, 2);
        assert_eq!(h.m(), g.m());
        let r = SplitNetwork::new(&h)
            .kappa_nonadjacent(NodeId::new(0), NodeId::new(3), 3)
            .unwrap();
        assert_eq!(r.kappa, 0);
    }
}
