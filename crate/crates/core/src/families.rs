//! Named graph families and seeded random graphs for tests, benchmarks,
//! and the `gen` subcommand.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::flow::check_k_connected;
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "complete graph needs at least one node");
    let edges = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b)));
    Graph::from_edges(n, edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "path needs at least one node");
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three nodes");
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

/// Hub node 0 joined to every node of the rim cycle 1..=r.
pub fn wheel(r: usize) -> Graph {
    assert!(r >= 3, "wheel needs a rim of at least three nodes");
    let spokes = (1..=r).map(|v| (0, v));
    let rim = (1..=r).map(|v| (v, v % r + 1));
    Graph::from_edges(r + 1, spokes.chain(rim)).unwrap()
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i to i+5.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).unwrap()
}

/// The d-dimensional hypercube on 2^d nodes; adjacency by single-bit flips.
pub fn hypercube(d: u32) -> Graph {
    assert!(d <= 16, "hypercube dimension too large");
    let n = 1usize << d;
    let edges = (0..n).flat_map(move |u| {
        (0..d).filter_map(move |j| {
            let v = u ^ (1 << j);
            (u < v).then_some((u, v))
        })
    });
    Graph::from_edges(n, edges).unwrap()
}

/// Two c-cliques X = 0..c and Y = c..2c joined by b bridges (i, c+i).
/// With b < c the bridge endpoints form the only minimum cuts between
/// unbridged cross pairs, which makes the family a good oracle exercise.
pub fn bridged_cliques(c: usize, b: usize) -> Graph {
    assert!(c >= 2, "cliques need at least two nodes");
    assert!(b <= c, "cannot have more bridges than clique nodes");
    let cliques = (0..c).flat_map(|a| {
        ((a + 1)..c).flat_map(move |d| [(a, d), (c + a, c + d)])
    });
    let bridges = (0..b).map(|i| (i, c + i));
    Graph::from_edges(2 * c, cliques.chain(bridges)).unwrap()
}

/// Erdos-Renyi graph: each pair becomes an edge independently with
/// probability p, drawn from a seeded stream in pair order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Draws gnp graphs with seeds seed, seed+1, ... until one is k-connected,
/// giving up after `tries` attempts.
pub fn gnp_k_connected(n: usize, p: f64, seed: u64, k: usize, tries: u64) -> Option<Graph> {
    (0..tries).map(|i| gnp(n, p, seed + i)).find(|g| check_k_connected(g, k).is_ok())
}
