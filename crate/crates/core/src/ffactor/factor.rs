use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::UGraph;

/// Target degree `f(v) >= 1` for every vertex. Targets above the actual
/// degree are legal; they simply make the factor impossible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTargets(Vec<u32>);

impl DegreeTargets {
    pub fn new(targets: Vec<u32>) -> Result<Self> {
        if let Some(v) = targets.iter().position(|&f| f == 0) {
            return Err(Error::invalid(format!("degree target of vertex {v} must be positive")));
        }
        Ok(DegreeTargets(targets))
    }

    pub fn constant(n: usize, k: u32) -> Result<Self> {
        DegreeTargets::new(vec![k; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub(crate) fn check_order(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::invalid(format!(
                "{} degree targets for {n} vertices",
                self.0.len()
            )));
        }
        Ok(())
    }
}

/// A spanning subgraph in which every vertex `v` has degree `f(v)`, as a
/// sorted edge list, or `None` if there is none.
///
/// Vertices are settled in ascending order: vertex `u` picks exactly its
/// remaining demand among edges to higher vertices, smallest first. The
/// first solution found is therefore the lexicographically least edge list.
/// Residual demands that already failed at a vertex boundary are memoized.
pub fn find_f_factor(g: &UGraph, f: &DegreeTargets) -> Result<Option<Vec<(usize, usize)>>> {
    let n = g.order();
    f.check_order(n)?;
    let need: Vec<u8> = f.as_slice().iter().map(|&k| k.min(255) as u8).collect();
    let total: u64 = f.as_slice().iter().map(|&k| k as u64).sum();
    if total % 2 == 1 || (0..n).any(|v| f.get(v) as usize > g.degree(v)) {
        return Ok(None);
    }
    let mut search = Search {
        rows: g.rows(),
        n,
        need,
        edges: Vec::with_capacity((total / 2) as usize),
        dead: HashSet::new(),
    };
    Ok(if search.vertex(0) { Some(search.edges) } else { None })
}

/// [`find_f_factor`] with `f = 2`.
pub fn find_2_factor(g: &UGraph) -> Option<Vec<(usize, usize)>> {
    let f = DegreeTargets::constant(g.order(), 2).expect("positive");
    find_f_factor(g, &f).expect("order matches")
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    need: Vec<u8>,
    edges: Vec<(usize, usize)>,
    dead: HashSet<(usize, Vec<u8>)>,
}

impl Search<'_> {
    #[inline]
    fn above(u: usize) -> u64 {
        if u >= 63 {
            0
        } else {
            !((2u64 << u) - 1)
        }
    }

    fn vertex(&mut self, u: usize) -> bool {
        if u == self.n {
            return true;
        }
        let key = (u, self.need[u..].to_vec());
        if self.dead.contains(&key) {
            return false;
        }
        let cand = self.rows[u] & Self::above(u);
        let k = self.need[u] as u32;
        if self.choose(u, cand, k) {
            return true;
        }
        self.dead.insert(key);
        false
    }

    fn choose(&mut self, u: usize, cand: u64, k: u32) -> bool {
        if k == 0 {
            return self.later_feasible(u) && self.vertex(u + 1);
        }
        if cand.count_ones() < k {
            return false;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & (cand - 1);
        if self.need[v] > 0 {
            self.need[v] -= 1;
            self.need[u] -= 1;
            self.edges.push((u, v));
            if self.choose(u, rest, k - 1) {
                return true;
            }
            self.edges.pop();
            self.need[u] += 1;
            self.need[v] += 1;
        }
        self.choose(u, rest, k)
    }

    /// Every later vertex can still meet its demand with undecided edges.
    fn later_feasible(&self, u: usize) -> bool {
        let open = Self::above(u);
        (u + 1..self.n).all(|w| self.need[w] as u32 <= (self.rows[w] & open).count_ones())
    }
}
