//! Compact connectivity-query oracles for undirected graphs.
//!
//! Given a graph `G` and a threshold `k`, the oracles in this crate answer
//! `con(s, t)` (is the vertex connectivity `kappa(s, t)` at least `k + 1`?)
//! in constant time, and when the answer is no they return an identifier of a
//! stored `st`-cut of size at most `k`. Two oracle flavors are provided:
//!
//! * [`kconn::KConnOracle`] assumes `G` itself is `k`-connected and stores a
//!   list of `O(n)` cuts plus a few laminar forests, `O(kn)` space in total.
//! * [`general::GeneralOracle`] works for arbitrary `G` and stores a list of
//!   `O(kn)` cuts plus a pair matrix of capped connectivity values.
//!
//! Supporting modules: [`graph`] (graph and node-set primitives), [`flow`]
//! (unit-capacity max-flow on the vertex split network), [`sparsify`]
//! (spanning-forest connectivity certificates), [`laminar`] (laminar-family
//! forests with O(1) ancestry tests), [`verify`] (brute-force reference
//! oracles and structural checkers), [`families`] (named graph generators),
//! and [`format`] (the versioned binary oracle file format).

pub mod families;
pub mod flow;
pub mod format;
pub mod general;
pub mod graph;
pub mod kconn;
pub mod laminar;
pub mod sparsify;
pub mod verify;
