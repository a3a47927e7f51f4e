//! Rooted-tree representation of laminar set families with O(1)
//! descendant queries via DFS timestamps.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{NodeId, NodeSet};

/// Identifies a tree node inside one forest; 0 is always the root, which
/// stands for the whole vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeNodeId(pub u32);

pub const ROOT: TreeNodeId = TreeNodeId(0);

#[derive(Debug, Error)]
pub enum LaminarError {
    #[error("sets {a:?} and {b:?} cross: neither contains the other and they overlap")]
    NotLaminar { a: NodeSet, b: NodeSet },
}

/// A laminar family as a rooted tree.
///
/// Node 0 represents the universe; every other node is one distinct set of
/// the family, with the containment order as ancestry. Queries work purely
/// on timestamps, so a loaded forest does not need the member sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaminarForest {
    parent: Vec<u32>,
    dfs_in: Vec<u32>,
    dfs_out: Vec<u32>,
    psi: Vec<u32>,
}

pub const NO_PARENT: u32 = u32::MAX;

impl LaminarForest {
    /// Builds the tree for a laminar family over universe size `n`.
    ///
    /// Equal input sets merge into one tree node; the returned vector maps
    /// each input position to its node. Children are ordered by minimum
    /// element and timestamps come from one DFS, so equal inputs produce
    /// identical forests.
    pub fn build(family: &[NodeSet], n: usize) -> Result<(LaminarForest, Vec<TreeNodeId>), LaminarError> {
        let mut distinct: Vec<NodeSet> = Vec::new();
        let mut node_of_input = Vec::with_capacity(family.len());
        let mut seen: HashMap<NodeSet, u32> = HashMap::new();
        for set in family {
            assert!(!set.is_empty(), "family members must be nonempty");
            assert!(set.len() < n, "family members must be proper subsets");
            assert_eq!(set.universe(), n, "universe mismatch");
            let next = distinct.len() as u32;
            let id = *seen.entry(set.clone()).or_insert_with(|| {
                distinct.push(set.clone());
                next
            });
            node_of_input.push(id);
        }

        // Insert by decreasing size: every previously inserted set either
        // contains the new one or is disjoint from it, so the deepest
        // current owner of each member is the prospective parent, and any
        // disagreement among members certifies a crossing pair.
        let mut order: Vec<u32> = (0..distinct.len() as u32).collect();
        order.sort_by(|&a, &b| {
            let (a, b) = (&distinct[a as usize], &distinct[b as usize]);
            b.len().cmp(&a.len()).then_with(|| a.cmp(b))
        });
        let count = distinct.len() + 1;
        let mut parent = vec![NO_PARENT; count];
        let mut owner: Vec<u32> = vec![0; n];
        for &d in &order {
            let node = d + 1;
            let set = &distinct[d as usize];
            let mut members = set.iter();
            let first_owner = owner[members.next().expect("nonempty").index()];
            for v in members {
                if owner[v.index()] != first_owner {
                    return Err(crossing_pair(&distinct, set));
                }
            }
            parent[node as usize] = first_owner;
            for v in set.iter() {
                owner[v.index()] = node;
            }
        }

        let mut children: Vec<Vec<u32>> = vec![Vec::new(); count];
        for node in 1..count {
            children[parent[node] as usize].push(node as u32);
        }
        for list in &mut children {
            list.sort_by_key(|&c| distinct[c as usize - 1].first().expect("nonempty"));
        }
        let mut dfs_in = vec![0u32; count];
        let mut dfs_out = vec![0u32; count];
        let mut clock = 0u32;
        let mut stack = vec![(0u32, 0usize)];
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if *next == 0 {
                dfs_in[node as usize] = clock;
                clock += 1;
            }
            if let Some(&child) = children[node as usize].get(*next) {
                *next += 1;
                stack.push((child, 0));
            } else {
                dfs_out[node as usize] = clock;
                clock += 1;
                stack.pop();
            }
        }

        let forest = LaminarForest {
            parent,
            dfs_in,
            dfs_out,
            psi: owner,
        };
        Ok((forest, node_of_input.iter().map(|&i| TreeNodeId(i + 1)).collect()))
    }

    /// Number of tree nodes, root included.
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn parent(&self, x: TreeNodeId) -> Option<TreeNodeId> {
        match self.parent[x.0 as usize] {
            NO_PARENT => None,
            p => Some(TreeNodeId(p)),
        }
    }

    /// The deepest family set containing `v`, or the root.
    pub fn psi(&self, v: NodeId) -> TreeNodeId {
        TreeNodeId(self.psi[v.index()])
    }

    /// Whether `x` is a descendant of `y` (or equal to it): one timestamp
    /// comparison each way.
    pub fn is_descendant(&self, x: TreeNodeId, y: TreeNodeId) -> bool {
        self.dfs_in[y.0 as usize] <= self.dfs_in[x.0 as usize]
            && self.dfs_out[x.0 as usize] <= self.dfs_out[y.0 as usize]
    }

    /// Raw arrays for serialization: (parent, dfs_in, dfs_out, psi).
    pub fn raw_parts(&self) -> (&[u32], &[u32], &[u32], &[u32]) {
        (&self.parent, &self.dfs_in, &self.dfs_out, &self.psi)
    }

    /// Rebuilds a forest from serialized arrays, trusting their shape.
    pub fn from_raw_parts(
        parent: Vec<u32>,
        dfs_in: Vec<u32>,
        dfs_out: Vec<u32>,
        psi: Vec<u32>,
    ) -> LaminarForest {
        assert_eq!(parent.len(), dfs_in.len());
        assert_eq!(parent.len(), dfs_out.len());
        LaminarForest {
            parent,
            dfs_in,
            dfs_out,
            psi,
        }
    }
}

/// Error path: scan for a pair where the new set crosses an earlier one.
fn crossing_pair(distinct: &[NodeSet], set: &NodeSet) -> LaminarError {
    for other in distinct {
        if other == set {
            continue;
        }
        let overlap = !set.intersection(other).is_empty();
        if overlap && !set.is_subset(other) && !other.is_subset(set) {
            return LaminarError::NotLaminar {
                a: set.clone(),
                b: other.clone(),
            };
        }
    }
    unreachable!("owner disagreement implies a crossing pair exists");
}
