//! Constant-time connectivity oracle for arbitrary graphs.
//!
//! An n x n matrix stores min(kappa(s, t), k+1) per pair together with an
//! id into a deduplicated cut list whenever the value is at most k. All
//! connectivity runs on the sparse certificate, which keeps the relevant
//! values and minimum cuts of the input: pairs joined in the certificate
//! get a mixed cut from the masked-edge flow; pairs not joined there get
//! the boundary of the smaller of the two minimal tight sides (ties to
//! the lexicographically smaller side). Edges the certificate drops
//! connect pairs with kappa at least k+1, which need no cut.

use thiserror::Error;

use crate::flow::{Cut, CutResult, SplitNetwork};
use crate::graph::{Graph, NodeId};
use crate::sparsify::ni_certificate;

pub const NO_CUT: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("query endpoints coincide at node {0}")]
    SameNode(NodeId),
}

/// Cut counts by pair kind, reported against the (k+1)n bound for
/// adjacent cuts and the (2k+1)n bound for the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralStats {
    pub adjacent_cuts: usize,
    pub nonadjacent_cuts: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralOracle {
    k: u32,
    n: u32,
    /// Row-major min(kappa, k+1); the diagonal is unused and zero.
    kappa: Vec<u8>,
    /// Row-major cut ids, NO_CUT where kappa exceeds k.
    cut_id: Vec<u32>,
    cuts: Vec<Cut>,
    stats: GeneralStats,
}

impl GeneralOracle {
    pub fn build(g: &Graph, k: usize) -> GeneralOracle {
        assert!(k >= 1, "oracle needs k >= 1");
        assert!(k < u8::MAX as usize, "capped values must fit a byte");
        let n = g.n();
        let h = ni_certificate(g, k);
        let mut net = SplitNetwork::new(&h);
        let mut kappa = vec![0u8; n * n];
        let mut cut_id = vec![NO_CUT; n * n];
        let mut ids: std::collections::HashMap<Cut, u32> = std::collections::HashMap::new();
        let mut cuts: Vec<Cut> = Vec::new();
        let mut stats = GeneralStats {
            adjacent_cuts: 0,
            nonadjacent_cuts: 0,
        };
        for s in g.nodes() {
            for t in g.nodes() {
                if s >= t {
                    continue;
                }
                let (value, cut) = if h.has_edge(s, t) {
                    let r = net.kappa_adjacent(s, t, k + 1).expect("adjacent pair");
                    (r.kappa, r.cut)
                } else {
                    let fwd = net.kappa_nonadjacent(s, t, k + 1).expect("distinct pair");
                    if fwd.cut.is_some() {
                        let bwd = net.kappa_nonadjacent(t, s, k + 1).expect("distinct pair");
                        (fwd.kappa, Some(smaller_side_cut(g, fwd, bwd)))
                    } else {
                        (fwd.kappa, None)
                    }
                };
                let id = match cut {
                    None => NO_CUT,
                    Some(cut) => {
                        let adjacent_kind = !cut.edges.is_empty() || h.has_edge(s, t);
                        *ids.entry(cut.clone()).or_insert_with(|| {
                            if adjacent_kind {
                                stats.adjacent_cuts += 1;
                            } else {
                                stats.nonadjacent_cuts += 1;
                            }
                            cuts.push(cut);
                            cuts.len() as u32 - 1
                        })
                    }
                };
                kappa[s.index() * n + t.index()] = value as u8;
                kappa[t.index() * n + s.index()] = value as u8;
                cut_id[s.index() * n + t.index()] = id;
                cut_id[t.index() * n + s.index()] = id;
            }
        }
        GeneralOracle {
            k: k as u32,
            n: n as u32,
            kappa,
            cut_id,
            cuts,
            stats,
        }
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

    pub fn stats(&self) -> GeneralStats {
        self.stats
    }

    /// min(kappa(s, t), k+1) straight from the matrix.
    pub fn capped_kappa(&self, s: NodeId, t: NodeId) -> Result<usize, QueryError> {
        if s == t {
            return Err(QueryError::SameNode(s));
        }
        Ok(self.kappa[s.index() * self.n() + t.index()] as usize)
    }

    /// True iff kappa(s, t) >= k+1.
    pub fn query_con(&self, s: NodeId, t: NodeId) -> Result<bool, QueryError> {
        Ok(self.capped_kappa(s, t)? == self.k() + 1)
    }

    /// Id of a stored st-cut whose size equals the capped kappa, or None
    /// when the pair clears k.
    pub fn query_cut(&self, s: NodeId, t: NodeId) -> Result<Option<u32>, QueryError> {
        if s == t {
            return Err(QueryError::SameNode(s));
        }
        match self.cut_id[s.index() * self.n() + t.index()] {
            NO_CUT => Ok(None),
            id => Ok(Some(id)),
        }
    }

    pub(crate) fn raw_parts(&self) -> (&[u8], &[u32], &[Cut], GeneralStats) {
        (&self.kappa, &self.cut_id, &self.cuts, self.stats)
    }

    pub(crate) fn from_parts(
        k: u32,
        n: u32,
        kappa: Vec<u8>,
        cut_id: Vec<u32>,
        cuts: Vec<Cut>,
        stats: GeneralStats,
    ) -> GeneralOracle {
        GeneralOracle {
            k,
            n,
            kappa,
            cut_id,
            cuts,
            stats,
        }
    }
}

/// Boundary of the smaller (tie: lexicographically smaller) of the two
/// tight sides. Both flow results carry their side and its boundary as
/// the cut; this picks one deterministically.
fn smaller_side_cut(g: &Graph, fwd: CutResult, bwd: CutResult) -> Cut {
    let side_fwd = fwd.source_side.expect("cut implies a source side");
    let side_bwd = bwd.source_side.expect("cut implies a source side");
    let pick_fwd = match side_fwd.len().cmp(&side_bwd.len()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => side_fwd < side_bwd,
    };
    let (side, cut) = if pick_fwd {
        (side_fwd, fwd.cut.expect("checked by caller"))
    } else {
        (side_bwd, bwd.cut.expect("cut and value travel together"))
    };
    debug_assert_eq!(
        g.boundary(&side).to_vec(),
        cut.vertices,
        "tight-side boundary must agree between graph and certificate"
    );
    let _ = side;
    cut
}
