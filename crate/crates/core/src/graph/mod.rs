//! Digraph and graph representations with the structural predicates used
//! everywhere else: strong connectivity, q-sets, s-quadrangularity, line
//! digraphs, Kronecker products and complete biorientations.

mod digraph;
mod ops;
mod squad;
mod ugraph;

pub(crate) use digraph::check_permutation;
pub use digraph::{Digraph, Direction};
pub use ops::LineDigraph;
pub use squad::q_set_check;
pub use ugraph::UGraph;

/// Vertices reachable from `start` (inclusive) along `rows`, staying inside `within`.
#[inline]
pub(crate) fn reach(rows: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & within & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

/// Connected components of the subgraph induced by `within` on a symmetric
/// adjacency, each as a bitmask, ordered by smallest vertex.
#[inline]
pub(crate) fn components(rows: &[u64], within: u64) -> impl Iterator<Item = u64> + '_ {
    let mut left = within;
    std::iter::from_fn(move || {
        if left == 0 {
            return None;
        }
        let comp = reach(rows, left.trailing_zeros() as usize, left);
        left &= !comp;
        Some(comp)
    })
}
