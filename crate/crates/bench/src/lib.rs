//! Shared inputs for the criterion benchmarks.

use squadgraph::{Digraph, UGraph};

/// A deterministic pseudo-random digraph (xorshift over `seed`) with arc
/// density roughly `num / 8`.
pub fn digraph(n: usize, seed: u64, num: u64) -> Digraph {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut d = Digraph::new(n).unwrap();
    for u in 0..n {
        for v in 0..n {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if u != v && state % 8 < num {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}

/// Disjoint triangles glued at one shared vertex: connected, min degree 2,
/// and without a 2-factor once there are two or more triangles.
pub fn windmill(triangles: usize) -> UGraph {
    let n = 1 + 2 * triangles;
    let mut g = UGraph::new(n).unwrap();
    for k in 0..triangles {
        let (a, b) = (1 + 2 * k, 2 + 2 * k);
        g.add_edge(0, a).unwrap();
        g.add_edge(0, b).unwrap();
        g.add_edge(a, b).unwrap();
    }
    g
}
