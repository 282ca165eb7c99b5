//! s-quadrangularity.
//!
//! A set `S` with `|S| >= 2` is a q+-set when every member shares an
//! out-neighbour with some other member. The digraph is s-quadrangular when
//! every q+-set `S` has at least `|S|` vertices that are common out-neighbours
//! of some pair in `S`, and likewise for q--sets and in-neighbours.
//!
//! Two observations keep the exponential scan small:
//! * Call `u, v` partners when their neighbourhoods meet. A q-set splits along
//!   the components of the partner graph, and the common-neighbour sets of the
//!   parts are disjoint, so it suffices to test subsets of one component.
//! * The common-neighbour set only grows with `S`. Once it is at least as big
//!   as any extension of the current subset could be, the whole branch passes.

use super::components;
use super::digraph::{Digraph, Direction};
use crate::vertex_set::VertexSet;

/// True iff `s` is a q-set on the given side.
pub fn q_set_check(d: &Digraph, s: VertexSet, dir: Direction) -> bool {
    if s.len() < 2 {
        return false;
    }
    let rows = d.rows(dir);
    s.iter().all(|u| s.without(u).iter().any(|v| rows[u] & rows[v] != 0))
}

impl Digraph {
    pub fn is_s_quadrangular(&self) -> bool {
        side_holds(self.out_rows()) && side_holds(self.in_rows())
    }

    /// The s-quadrangular condition restricted to one side.
    pub fn is_s_quadrangular_on(&self, dir: Direction) -> bool {
        side_holds(self.rows(dir))
    }

    /// A q-set on the given side violating the condition, if one exists.
    /// The returned set is the first failure met by the pruned scan.
    pub fn s_quadrangular_witness(&self, dir: Direction) -> Option<VertexSet> {
        side_witness(self.rows(dir))
    }
}

pub(crate) fn side_holds(rows: &[u64]) -> bool {
    side_witness(rows).is_none()
}

fn side_witness(rows: &[u64]) -> Option<VertexSet> {
    let n = rows.len();
    let mut partners = vec![0u64; n];
    for u in 0..n {
        if rows[u] == 0 {
            continue;
        }
        for v in u + 1..n {
            if rows[u] & rows[v] != 0 {
                partners[u] |= 1 << v;
                partners[v] |= 1 << u;
            }
        }
    }
    let candidates = partners
        .iter()
        .enumerate()
        .filter(|(_, &p)| p != 0)
        .fold(0u64, |acc, (u, _)| acc | 1 << u);

    for comp in components(&partners, candidates) {
        let members: Vec<usize> = VertexSet::from_bits(comp).iter().collect();
        let mut scan = Scan {
            rows,
            partners: &partners,
            members: &members,
        };
        if let Some(bad) = scan.dfs(0, 0, 0, 0) {
            return Some(VertexSet::from_bits(bad));
        }
    }
    None
}

struct Scan<'a> {
    rows: &'a [u64],
    partners: &'a [u64],
    members: &'a [usize],
}

impl Scan<'_> {
    /// Visits every subset of `members` that extends `set` with members at
    /// index `next` or later. `once` holds vertices covered by at least one row
    /// of `set`, `twice` those covered by at least two.
    fn dfs(&mut self, next: usize, set: u64, once: u64, twice: u64) -> Option<u64> {
        let size = set.count_ones() as usize;
        if size >= 2 && (twice.count_ones() as usize) < size && self.is_q_set(set) {
            return Some(set);
        }
        if twice.count_ones() as usize >= size + (self.members.len() - next) {
            return None;
        }
        for j in next..self.members.len() {
            let u = self.members[j];
            let row = self.rows[u];
            if let Some(bad) = self.dfs(j + 1, set | 1 << u, once | row, twice | (once & row)) {
                return Some(bad);
            }
        }
        None
    }

    fn is_q_set(&self, set: u64) -> bool {
        VertexSet::from_bits(set).iter().all(|u| self.partners[u] & set != 0)
    }
}
