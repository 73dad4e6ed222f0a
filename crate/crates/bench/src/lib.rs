//! Graphs shared by the benchmarks under `benches/`.

use signcolor::{Sign, SignedGraph};

/// Positive wheel with `rim` rim vertices; vertex 0 is the hub.
pub fn wheel(rim: usize) -> SignedGraph {
    let spokes = (1..=rim).map(|v| (0, v, Sign::Positive));
    let cycle = (1..=rim).map(|v| (v, v % rim + 1, Sign::Positive));
    SignedGraph::new(rim + 1, spokes.chain(cycle)).unwrap()
}

pub fn doubled_complete(n: usize) -> SignedGraph {
    SignedGraph::double(&SignedGraph::complete(n, Sign::Positive)).unwrap()
}

/// A fixed pseudo-random signed graph: each pair is joined with probability
/// about one half, signs alternating by a simple hash.
pub fn scrambled(n: usize) -> SignedGraph {
    let mut edges = Vec::new();
    let mut state = 0x9e37_79b9_u64;
    for u in 0..n {
        for v in u + 1..n {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state & 1 == 1 {
                let sign = if state & 2 == 0 {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                edges.push((u, v, sign));
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}
