//! Independent reference computations: brute-force connectivity by cut
//! enumeration, cut validation by deletion and search, and executable
//! forms of the tight-set intersection and uncrossing lemmas. Everything
//! here favors directness over speed and is the yardstick the oracles are
//! tested against.

use std::collections::VecDeque;

use thiserror::Error;

use crate::flow::{self, Cut};
use crate::format::Oracle;
use crate::graph::{Edge, Graph, NodeId, NodeSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("cut contains query endpoint {0}")]
    CutTouchesEndpoint(NodeId),
}

/// Violations of lemma conclusions. These indicate a bug (or a non-lemma
/// input slipped past a precondition); tests treat any of them as fatal.
#[derive(Debug, Error)]
pub enum LemmaViolation {
    #[error("{role} = {set:?} is not tight: boundary size {got}, expected {expected}")]
    NotTight {
        role: &'static str,
        set: NodeSet,
        got: usize,
        expected: usize,
    },
    #[error("{role} = {set:?} is not {x}{y}-tight")]
    NotPairTight {
        role: &'static str,
        set: NodeSet,
        x: NodeId,
        y: NodeId,
    },
    #[error("kappa mismatch: kappa(s,a) = {sa} but kappa(s,b) = {sb}")]
    KappaMismatch { sa: usize, sb: usize },
    #[error("uncrossing cases fired {fired:?}, expected exactly one")]
    NotExactlyOneCase { fired: Vec<UncrossCase> },
}

fn bfs_reaches(g: &Graph, s: NodeId, t: NodeId, removed: &NodeSet, masked: Option<Edge>) -> bool {
    if removed.contains(s) || removed.contains(t) {
        panic!("endpoints must survive the deletion");
    }
    let mut seen = NodeSet::new(g.n());
    seen.insert(s);
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if x == t {
            return true;
        }
        for &y in g.neighbors(x) {
            if seen.contains(y) || removed.contains(y) {
                continue;
            }
            if masked == Some(Edge::new(x, y)) {
                continue;
            }
            seen.insert(y);
            queue.push_back(y);
        }
    }
    false
}

/// `min(kappa(s, t), cap)` by exhaustive enumeration of candidate cuts in
/// increasing size. For an adjacent pair every minimum mixed cut consists
/// of the edge `st` plus a vertex set, so only such cuts are tried. Uses
/// nothing but breadth-first reachability; this is the ground truth the
/// flow engine is checked against.
pub fn brute_kappa_enum(g: &Graph, s: NodeId, t: NodeId, cap: usize) -> usize {
    assert_ne!(s, t, "kappa is defined for distinct nodes");
    let adjacent = g.has_edge(s, t);
    let masked = adjacent.then(|| Edge::new(s, t));
    let candidates: Vec<NodeId> = g.nodes().filter(|&v| v != s && v != t).collect();
    for total in usize::from(adjacent)..cap {
        let want = total - usize::from(adjacent);
        if want > candidates.len() {
            break;
        }
        let mut found = false;
        for_each_subset(candidates.len(), want, &mut |picks| {
            if found {
                return;
            }
            let removed = NodeSet::from_nodes(g.n(), picks.iter().map(|&i| candidates[i]));
            if !bfs_reaches(g, s, t, &removed, masked) {
                found = true;
            }
        });
        if found {
            return total;
        }
    }
    cap
}

/// Same quantity via the flow engine; agreement with the enumeration is
/// itself a tested property.
pub fn brute_kappa_flow(g: &Graph, s: NodeId, t: NodeId, cap: usize) -> usize {
    flow::SplitNetwork::new(g)
        .kappa_pair(s, t, cap)
        .expect("distinct nodes")
        .kappa
}

fn for_each_subset(len: usize, size: usize, f: &mut impl FnMut(&[usize])) {
    let mut picks: Vec<usize> = (0..size).collect();
    loop {
        f(&picks);
        // Advance the rightmost index that still has headroom.
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if picks[i] != i + len - size {
                break;
            }
        }
        if picks[i] == i + len - size {
            return;
        }
        picks[i] += 1;
        for j in (i + 1)..size {
            picks[j] = picks[j - 1] + 1;
        }
    }
}

/// Whether deleting the cut's vertices and edges leaves no st-path.
pub fn validate_cut(g: &Graph, s: NodeId, t: NodeId, cut: &Cut) -> Result<bool, VerifyError> {
    for &v in &cut.vertices {
        if v == s || v == t {
            return Err(VerifyError::CutTouchesEndpoint(v));
        }
    }
    let removed = NodeSet::from_nodes(g.n(), cut.vertices.iter().copied());
    let mut seen = NodeSet::new(g.n());
    seen.insert(s);
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if x == t {
            return Ok(false);
        }
        for &y in g.neighbors(x) {
            if seen.contains(y) || removed.contains(y) {
                continue;
            }
            if cut.edges.binary_search(&Edge::new(x, y)).is_ok() {
                continue;
            }
            seen.insert(y);
            queue.push_back(y);
        }
    }
    Ok(true)
}

/// Which hypotheses of the tight-set intersection lemma applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TightReport {
    /// Both cross-intersections were nonempty, so both were checked tight.
    pub crossing_checked: bool,
    /// A and B were small with nonzero overlap, so the overlap was checked.
    pub overlap_checked: bool,
}

/// Executable form of the intersection lemma for tight sets A, B of a
/// k-connected graph: if A 'cap' B* and B 'cap' A* are both nonempty they are
/// both tight, and if A, B are small with A 'cap' B nonempty then A 'cap' B
/// is tight.
pub fn check_tight_intersections(
    g: &Graph,
    k: usize,
    a: &NodeSet,
    b: &NodeSet,
) -> Result<TightReport, LemmaViolation> {
    assert!(g.is_tight(a, k) && g.is_tight(b, k), "inputs must be tight");
    let require_tight = |role: &'static str, set: NodeSet| -> Result<(), LemmaViolation> {
        if g.is_tight(&set, k) {
            Ok(())
        } else {
            let got = g.boundary(&set).len();
            Err(LemmaViolation::NotTight {
                role,
                set,
                got,
                expected: k,
            })
        }
    };
    let mut report = TightReport {
        crossing_checked: false,
        overlap_checked: false,
    };
    let a_cross = a.intersection(&g.node_complement(b));
    let b_cross = b.intersection(&g.node_complement(a));
    if !a_cross.is_empty() && !b_cross.is_empty() {
        report.crossing_checked = true;
        require_tight("A cap B*", a_cross)?;
        require_tight("B cap A*", b_cross)?;
    }
    let overlap = a.intersection(b);
    if g.is_small(a, k) && g.is_small(b, k) && !overlap.is_empty() {
        report.overlap_checked = true;
        require_tight("A cap B", overlap)?;
    }
    Ok(report)
}

/// The four mutually exclusive configurations of the uncrossing lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UncrossCase {
    /// a lies in A* cap B*: intersection and union are sa-tight, the
    /// intersection sb-tight, and kappa(s,a) = kappa(s,b).
    Ia,
    /// a does not but b lies in A* cap B*: intersection sa-tight, union
    /// sb-tight.
    Ib,
    /// a in A* cap B and b in B* cap A: the crossings A* cap B and
    /// B* cap A are as-tight and bs-tight respectively.
    Ii,
    /// a touches boundary(B) or b touches boundary(A); no tightness claim.
    Iii,
}

/// Classifies an (A, B) pair into exactly one uncrossing case by the
/// lemma's membership tests, then checks that case's tightness
/// conclusions. A must be sa-tight and B sb-tight with
/// kappa(s,a) >= kappa(s,b), both pairs non-adjacent.
pub fn check_uncrossing(
    g: &Graph,
    s: NodeId,
    a: NodeId,
    b: NodeId,
    set_a: &NodeSet,
    set_b: &NodeSet,
) -> Result<UncrossCase, LemmaViolation> {
    let kappa = |x: NodeId, y: NodeId| {
        flow::kappa_nonadjacent(g, x, y, g.n())
            .expect("uncrossing inputs are non-adjacent pairs")
            .kappa
    };
    let pair_tight = |role: &'static str,
                      set: &NodeSet,
                      x: NodeId,
                      y: NodeId,
                      value: usize|
     -> Result<(), LemmaViolation> {
        let ok = set.contains(x)
            && g.node_complement(set).contains(y)
            && g.boundary(set).len() == value;
        if ok {
            Ok(())
        } else {
            Err(LemmaViolation::NotPairTight {
                role,
                set: set.clone(),
                x,
                y,
            })
        }
    };
    let kappa_sa = kappa(s, a);
    let kappa_sb = kappa(s, b);
    assert!(kappa_sa >= kappa_sb, "caller must order kappa(s,a) >= kappa(s,b)");
    pair_tight("A", set_a, s, a, kappa_sa).expect("precondition: A is sa-tight");
    pair_tight("B", set_b, s, b, kappa_sb).expect("precondition: B is sb-tight");

    let a_star = g.node_complement(set_a);
    let b_star = g.node_complement(set_b);
    let a_in_b_star = b_star.contains(a);
    let b_in_a_star = a_star.contains(b);
    let a_in_bdry_b = g.boundary(set_b).contains(a);
    let b_in_bdry_a = g.boundary(set_a).contains(b);

    let mut fired = Vec::new();
    if a_in_b_star {
        fired.push(UncrossCase::Ia);
    }
    if !a_in_b_star && b_in_a_star {
        fired.push(UncrossCase::Ib);
    }
    if set_b.contains(a) && set_a.contains(b) {
        fired.push(UncrossCase::Ii);
    }
    if (a_in_bdry_b && set_a.contains(b)) || (b_in_bdry_a && set_b.contains(a)) || (a_in_bdry_b && b_in_bdry_a) {
        fired.push(UncrossCase::Iii);
    }
    let [case] = fired[..] else {
        return Err(LemmaViolation::NotExactlyOneCase { fired });
    };

    match case {
        UncrossCase::Ia => {
            if kappa_sa != kappa_sb {
                return Err(LemmaViolation::KappaMismatch {
                    sa: kappa_sa,
                    sb: kappa_sb,
                });
            }
            let meet = set_a.intersection(set_b);
            let join = set_a.union(set_b);
            pair_tight("A cap B (sa)", &meet, s, a, kappa_sa)?;
            pair_tight("A cup B (sa)", &join, s, a, kappa_sa)?;
            pair_tight("A cap B (sb)", &meet, s, b, kappa_sb)?;
        }
        UncrossCase::Ib => {
            let meet = set_a.intersection(set_b);
            let join = set_a.union(set_b);
            pair_tight("A cap B (sa)", &meet, s, a, kappa_sa)?;
            pair_tight("A cup B (sb)", &join, s, b, kappa_sb)?;
        }
        UncrossCase::Ii => {
            let left = a_star.intersection(set_b);
            let right = b_star.intersection(set_a);
            pair_tight("A* cap B (as)", &left, a, s, kappa_sa)?;
            pair_tight("B* cap A (bs)", &right, b, s, kappa_sb)?;
        }
        UncrossCase::Iii => {}
    }
    Ok(case)
}

/// One disagreement between an oracle answer and ground truth. The
/// check name is one of "shape", "verdict", "cut", "matrix".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub s: NodeId,
    pub t: NodeId,
    pub detail: String,
}

/// Outcome of replaying every ordered query against brute force.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EquivalenceReport {
    pub pairs_checked: usize,
    pub cuts_validated: usize,
    pub mismatches: Vec<Mismatch>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Replays every ordered pair of distinct nodes against flow-computed
/// ground truth on the original graph: the connectivity verdict must
/// match kappa(s, t) >= k+1, and any returned cut must have exactly
/// min(kappa, k) members and actually separate the pair.
pub fn oracle_equivalence(oracle: &Oracle, g: &Graph, k: usize) -> EquivalenceReport {
    let mut report = EquivalenceReport::default();
    let mismatch = |report: &mut EquivalenceReport, check, s, t, detail: String| {
        report.mismatches.push(Mismatch { check, s, t, detail });
    };
    if oracle.n() != g.n() || oracle.k() != k {
        let zero = NodeId::new(0);
        mismatch(
            &mut report,
            "shape",
            zero,
            zero,
            format!(
                "oracle shape (n={}, k={}) does not match the instance (n={}, k={})",
                oracle.n(),
                oracle.k(),
                g.n(),
                k
            ),
        );
        return report;
    }
    let mut net = flow::SplitNetwork::new(g);
    for s in g.nodes() {
        for t in g.nodes() {
            if t.index() <= s.index() {
                continue;
            }
            // Capped flow is exact both for deciding kappa >= k+1 and for
            // the min(kappa, k) size of any answered cut.
            let capped = net.kappa_pair(s, t, k + 1).expect("distinct nodes").kappa;
            for (a, b) in [(s, t), (t, s)] {
                report.pairs_checked += 1;
                match oracle.query_cut(a, b) {
                    Err(e) => {
                        mismatch(&mut report, "verdict", a, b, format!("query failed: {e}"))
                    }
                    Ok(None) => {
                        if capped <= k {
                            mismatch(
                                &mut report,
                                "verdict",
                                a,
                                b,
                                format!("oracle says connected but kappa = {capped} <= {k}"),
                            );
                        }
                    }
                    Ok(Some(id)) => {
                        if capped > k {
                            mismatch(
                                &mut report,
                                "verdict",
                                a,
                                b,
                                format!("oracle returned cut {id} but kappa >= {}", k + 1),
                            );
                            continue;
                        }
                        let cut = oracle.cut(id);
                        report.cuts_validated += 1;
                        if cut.size() != capped {
                            mismatch(
                                &mut report,
                                "cut",
                                a,
                                b,
                                format!("cut {id} has {} members, kappa = {capped}", cut.size()),
                            );
                        }
                        match validate_cut(g, a, b, cut) {
                            Ok(true) => {}
                            Ok(false) => mismatch(
                                &mut report,
                                "cut",
                                a,
                                b,
                                format!("cut {id} does not separate the pair"),
                            ),
                            Err(e) => {
                                mismatch(&mut report, "cut", a, b, format!("cut {id}: {e}"))
                            }
                        }
                    }
                }
                if let Oracle::General(o) = oracle {
                    let got = o.capped_kappa(a, b).expect("distinct nodes");
                    if got != capped {
                        mismatch(
                            &mut report,
                            "matrix",
                            a,
                            b,
                            format!("matrix says min(kappa, k+1) = {got}, flow says {capped}"),
                        );
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn nid(v: usize) -> NodeId {
        NodeId::new(v)
    }

    fn set(universe: usize, nodes: &[usize]) -> NodeSet {
        NodeSet::from_nodes(universe, nodes.iter().map(|&v| nid(v)))
    }

    #[test]
    fn enumeration_oracle_on_known_graphs() {
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(brute_kappa_enum(&star, nid(1), nid(2), 5), 1);
        let k4 = families::complete(4);
        assert_eq!(brute_kappa_enum(&k4, nid(0), nid(1), 4), 3);
        let pet = families::petersen();
        assert_eq!(brute_kappa_enum(&pet, nid(0), nid(2), 10), 3);
        assert_eq!(brute_kappa_enum(&pet, nid(0), nid(2), 2), 2);
    }

    #[test]
    fn subset_iteration_is_complete() {
        let mut count = 0;
        for_each_subset(6, 3, &mut |picks| {
            assert!(picks.windows(2).all(|w| w[0] < w[1]));
            count += 1;
        });
        assert_eq!(count, 20);
        let mut count = 0;
        for_each_subset(4, 0, &mut |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn validate_cut_on_cycle() {
        let g = families::cycle(5);
        let good = Cut {
            vertices: vec![nid(1), nid(4)],
            edges: vec![],
        };
        assert_eq!(validate_cut(&g, nid(0), nid(2), &good), Ok(true));
        let short = Cut {
            vertices: vec![nid(1)],
            edges: vec![],
        };
        assert_eq!(validate_cut(&g, nid(0), nid(2), &short), Ok(false));
        let touching = Cut {
            vertices: vec![nid(0)],
            edges: vec![],
        };
        assert_eq!(
            validate_cut(&g, nid(0), nid(2), &touching),
            Err(VerifyError::CutTouchesEndpoint(nid(0)))
        );
    }

    #[test]
    fn validate_mixed_cut() {
        let g = families::path(3);
        let cut = Cut {
            vertices: vec![],
            edges: vec![Edge::new(nid(0), nid(1))],
        };
        assert_eq!(validate_cut(&g, nid(0), nid(1), &cut), Ok(true));
        assert_eq!(validate_cut(&g, nid(0), nid(2), &cut), Ok(true));
        let g = families::cycle(4);
        assert_eq!(validate_cut(&g, nid(0), nid(1), &cut), Ok(false));
    }

    #[test]
    fn tight_intersections_on_bridged_cliques() {
        let g = families::bridged_cliques(6, 3);
        // Equal sets: crossings are empty, overlap small and tight.
        let a = set(12, &[9, 10, 11]);
        let report = check_tight_intersections(&g, 3, &a, &a).unwrap();
        assert!(!report.crossing_checked);
        assert!(report.overlap_checked);
        // Opposite cliques' corners: overlap empty, crossings nonempty.
        let b = set(12, &[3, 4, 5]);
        let report = check_tight_intersections(&g, 3, &a, &b).unwrap();
        assert!(report.crossing_checked);
        assert!(!report.overlap_checked);
    }

    #[test]
    fn tight_intersections_vacuous_on_cycle() {
        let g = families::cycle(5);
        let a = set(5, &[0]);
        let b = set(5, &[1]);
        let report = check_tight_intersections(&g, 2, &a, &b).unwrap();
        assert!(!report.crossing_checked);
        assert!(!report.overlap_checked);
    }

    #[test]
    fn uncrossing_equal_sets() {
        let g = families::cycle(5);
        let a = set(5, &[0]);
        let case = check_uncrossing(&g, nid(0), nid(2), nid(2), &a, &a).unwrap();
        assert_eq!(case, UncrossCase::Ia);
    }

    #[test]
    fn uncrossing_on_path() {
        let g = families::path(4);
        // A = {0} is 02-tight, B = {0, 1} is 03-tight; a = 2 sits on the
        // boundary of B but b = 3 lands in A* cap B*, so (ib) wins.
        let a = set(4, &[0]);
        let b = set(4, &[0, 1]);
        let case = check_uncrossing(&g, nid(0), nid(2), nid(3), &a, &b).unwrap();
        assert_eq!(case, UncrossCase::Ib);
        // Swapping roles: now a = 3 is vertex-complement to both.
        let case = check_uncrossing(&g, nid(0), nid(3), nid(2), &b, &a).unwrap();
        assert_eq!(case, UncrossCase::Ia);
    }

    #[test]
    fn uncrossing_swapped_case() {
        // Path 0-1-2-3-4 from the middle: cutting s = 2 from either end
        // strands the opposite endpoint on s's side, so a ends up inside
        // B and b inside A.
        let g = families::path(5);
        let s = nid(2);
        let a = nid(0);
        let b = nid(4);
        let set_a = set(5, &[2, 3, 4]);
        let set_b = set(5, &[0, 1, 2]);
        let case = check_uncrossing(&g, s, a, b, &set_a, &set_b).unwrap();
        assert_eq!(case, UncrossCase::Ii);
    }

    #[test]
    fn uncrossing_boundary_case() {
        // C_6 arcs around s = 0 chosen so each target sits on the other
        // set's boundary: A = {0, 1} is 03-tight with boundary {2, 5},
        // B = {0, 4, 5} is 02-tight with boundary {1, 3}.
        let g = families::cycle(6);
        let set_a = set(6, &[0, 1]);
        let set_b = set(6, &[0, 4, 5]);
        let case = check_uncrossing(&g, nid(0), nid(3), nid(2), &set_a, &set_b).unwrap();
        assert_eq!(case, UncrossCase::Iii);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (2usize..10).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
                proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
                    .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn flow_matches_enumeration(g in arb_graph()) {
                let n = g.n();
                for s in g.nodes() {
                    for t in g.nodes() {
                        if s < t {
                            prop_assert_eq!(
                                brute_kappa_enum(&g, s, t, n),
                                brute_kappa_flow(&g, s, t, n)
                            );
                        }
                    }
                }
            }

            #[test]
            fn flow_cuts_validate(g in arb_graph()) {
                let n = g.n();
                let mut net = flow::SplitNetwork::new(&g);
                for s in g.nodes() {
                    for t in g.nodes() {
                        if s >= t {
                            continue;
                        }
                        let r = net.kappa_pair(s, t, n).unwrap();
                        let cut = r.cut.expect("uncapped run yields a cut");
                        prop_assert_eq!(cut.size(), r.kappa);
                        prop_assert_eq!(validate_cut(&g, s, t, &cut), Ok(true));
                    }
                }
            }
        }
    }

    mod equivalence {
        use super::*;
        use crate::general::GeneralOracle;
        use crate::kconn::KConnOracle;

        #[test]
        fn cycle_oracle_matches_brute_force() {
            let g = families::cycle(5);
            let oracle = Oracle::KConn(KConnOracle::build(&g, 2, true).unwrap());
            let report = oracle_equivalence(&oracle, &g, 2);
            assert!(report.passed(), "{:?}", report.mismatches);
            assert_eq!(report.pairs_checked, 20);
            // Every pair in C_5 has kappa exactly 2, so every query cuts.
            assert_eq!(report.cuts_validated, 20);
        }

        #[test]
        fn bridged_cliques_oracle_matches_brute_force() {
            let g = families::bridged_cliques(6, 3);
            let oracle = Oracle::KConn(KConnOracle::build(&g, 3, true).unwrap());
            let report = oracle_equivalence(&oracle, &g, 3);
            assert!(report.passed(), "{:?}", report.mismatches);
            assert_eq!(report.pairs_checked, 12 * 11);
        }

        #[test]
        fn general_oracles_match_brute_force() {
            for seed in 0..4 {
                let g = families::gnp(16, 0.3, seed);
                for k in 1..=3 {
                    let oracle = Oracle::General(GeneralOracle::build(&g, k));
                    let report = oracle_equivalence(&oracle, &g, k);
                    assert!(report.passed(), "seed {seed} k {k}: {:?}", report.mismatches);
                }
            }
        }

        #[test]
        fn tampered_matrix_is_caught() {
            let g = families::cycle(6);
            let o = GeneralOracle::build(&g, 2);
            let (kappa, cut_id, cuts, stats) = o.raw_parts();
            let mut kappa = kappa.to_vec();
            let (mut cut_id, cuts) = (cut_id.to_vec(), cuts.to_vec());
            // Claim node 0 and node 3 clear the threshold when they do not.
            kappa[3] = 3;
            kappa[3 * 6] = 3;
            cut_id[3] = crate::general::NO_CUT;
            cut_id[3 * 6] = crate::general::NO_CUT;
            let forged = Oracle::General(GeneralOracle::from_parts(2, 6, kappa, cut_id, cuts, stats));
            let report = oracle_equivalence(&forged, &g, 2);
            assert_eq!(report.mismatches.len(), 4);
            assert!(!report.passed());
        }

        #[test]
        fn shape_mismatch_is_reported() {
            let g = families::cycle(5);
            let oracle = Oracle::KConn(KConnOracle::build(&g, 2, true).unwrap());
            let report = oracle_equivalence(&oracle, &g, 3);
            assert_eq!(report.mismatches.len(), 1);
            assert_eq!(report.pairs_checked, 0);
        }
    }
}
