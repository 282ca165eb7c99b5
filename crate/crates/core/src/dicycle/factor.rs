use crate::error::{Error, Result};
use crate::graph::{Digraph, Direction};
use crate::vertex_set::VertexSet;

/// Vertex-disjoint directed cycles covering every vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct CycleFactor {
    cycles: Vec<Vec<usize>>,
    succ: Vec<usize>,
    pred: Vec<usize>,
    cycle_of: Vec<usize>,
}

impl CycleFactor {
    /// Validates `cycles` against `d` and builds the successor maps.
    pub fn new(d: &Digraph, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let f = Self::from_cycles_unchecked(d.order(), cycles)?;
        f.validate(d)?;
        Ok(f)
    }

    fn from_cycles_unchecked(n: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut succ = vec![usize::MAX; n];
        let mut pred = vec![usize::MAX; n];
        let mut cycle_of = vec![usize::MAX; n];
        for (c, cycle) in cycles.iter().enumerate() {
            if cycle.len() < 2 {
                return Err(Error::invalid(format!("cycle {c} has fewer than two vertices")));
            }
            for (k, &v) in cycle.iter().enumerate() {
                if v >= n {
                    return Err(Error::invalid(format!("vertex {v} out of range")));
                }
                if cycle_of[v] != usize::MAX {
                    return Err(Error::invalid(format!("vertex {v} appears twice")));
                }
                cycle_of[v] = c;
                let next = cycle[(k + 1) % cycle.len()];
                succ[v] = next;
                if next < n {
                    pred[next] = v;
                }
            }
        }
        if let Some(v) = cycle_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::invalid(format!("vertex {v} is not covered")));
        }
        Ok(CycleFactor {
            cycles,
            succ,
            pred,
            cycle_of,
        })
    }

    /// Checks that every cycle step is an arc of `d` and the cycles partition its vertices.
    pub fn validate(&self, d: &Digraph) -> Result<()> {
        if self.succ.len() != d.order() {
            return Err(Error::invalid("factor and digraph differ in order"));
        }
        for (v, &s) in self.succ.iter().enumerate() {
            if s == v || !d.has_arc(v, s) {
                return Err(Error::invalid(format!("{v}->{s} is not an arc")));
            }
            if self.pred[s] != v {
                return Err(Error::invalid(format!("successor map broken at {v}")));
            }
        }
        Ok(())
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<Vec<usize>> {
        self.cycles
    }

    /// Number of cycles.
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    #[inline]
    pub fn succ(&self, v: usize) -> usize {
        self.succ[v]
    }

    #[inline]
    pub fn pred(&self, v: usize) -> usize {
        self.pred[v]
    }

    #[inline]
    pub fn cycle_of(&self, v: usize) -> usize {
        self.cycle_of[v]
    }

    pub fn cycle_set(&self, c: usize) -> VertexSet {
        self.cycles[c].iter().copied().collect()
    }

    /// Index of the first shortest cycle.
    pub fn shortest(&self) -> usize {
        (0..self.cycles.len())
            .min_by_key(|&c| self.cycles[c].len())
            .expect("a factor has at least one cycle")
    }

    pub fn shortest_len(&self) -> usize {
        self.cycles[self.shortest()].len()
    }

    /// The cycle through `from`, walked along successors until `to` (inclusive).
    pub(crate) fn walk(&self, from: usize, to: usize) -> Vec<usize> {
        let mut out = vec![from];
        let mut v = from;
        while v != to {
            v = self.succ[v];
            out.push(v);
        }
        out
    }

    /// Replaces cycles `a` and `b` by `new_a` and `new_b` (either may be `None`
    /// to drop the slot), keeping the remaining order.
    pub(crate) fn replace(
        &self,
        a: usize,
        new_a: Option<Vec<usize>>,
        b: usize,
        new_b: Option<Vec<usize>>,
    ) -> CycleFactor {
        let n = self.succ.len();
        let mut cycles = Vec::with_capacity(self.cycles.len());
        for (c, cycle) in self.cycles.iter().enumerate() {
            if c == a {
                cycles.extend(new_a.clone());
            } else if c == b {
                cycles.extend(new_b.clone());
            } else {
                cycles.push(cycle.clone());
            }
        }
        CycleFactor::from_cycles_unchecked(n, cycles).expect("replacement keeps a partition")
    }
}

impl std::fmt::Debug for CycleFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.cycles).finish()
    }
}

/// A set `X` whose joint out- (or in-) neighbourhood is smaller than `X`,
/// certifying that no cycle factor exists. Loops are not counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HallViolator {
    pub set: VertexSet,
    pub side: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorOutcome {
    Factor(CycleFactor),
    Violator(HallViolator),
}

impl FactorOutcome {
    pub fn factor(self) -> Option<CycleFactor> {
        match self {
            FactorOutcome::Factor(f) => Some(f),
            FactorOutcome::Violator(_) => None,
        }
    }
}

#[inline]
fn loopless_rows(d: &Digraph, dir: Direction) -> Vec<u64> {
    (0..d.order()).map(|v| d.neighbors(v, dir).without(v).bits()).collect()
}

/// `|N(x)| >= |x|` on the given side, ignoring loops.
pub fn hall_check(d: &Digraph, x: VertexSet, side: Direction) -> bool {
    let reach = x
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(d.neighbors(v, side).without(v)));
    reach.len() >= x.len()
}

/// A cycle factor, or a Hall violator proving there is none.
///
/// Vertices are matched to loopless out-neighbours by augmenting paths
/// (ascending order). A perfect matching is a fixed-point-free permutation
/// whose cycles form the factor. Otherwise the left vertices reachable by
/// alternating paths from the unmatched ones have too few out-neighbours.
pub fn find_cycle_factor(d: &Digraph) -> Result<FactorOutcome> {
    let n = d.order();
    if n < 2 {
        return Err(Error::invalid("cycle factors need at least two vertices"));
    }
    let adj = loopless_rows(d, Direction::Out);
    let mut owner = vec![usize::MAX; n];
    let mut unmatched = 0u64;
    for u in 0..n {
        let mut seen = 0u64;
        if !augment(&adj, &mut owner, &mut seen, u) {
            unmatched |= 1 << u;
        }
    }
    if unmatched == 0 {
        let mut mate = vec![0; n];
        for (v, &u) in owner.iter().enumerate() {
            mate[u] = v;
        }
        let mut cycles = Vec::new();
        let mut done = 0u64;
        for start in 0..n {
            if done >> start & 1 == 1 {
                continue;
            }
            let mut cycle = vec![start];
            done |= 1 << start;
            let mut v = mate[start];
            while v != start {
                cycle.push(v);
                done |= 1 << v;
                v = mate[v];
            }
            cycles.push(cycle);
        }
        let f = CycleFactor::from_cycles_unchecked(n, cycles)?;
        debug_assert!(f.validate(d).is_ok());
        return Ok(FactorOutcome::Factor(f));
    }

    // Alternating reachability from the unmatched left vertices.
    let mut left = unmatched;
    let mut right = 0u64;
    let mut frontier = unmatched;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[u] & !right;
        right |= fresh;
        for v in VertexSet::from_bits(fresh) {
            let w = owner[v];
            debug_assert!(w != usize::MAX, "maximum matching has no augmenting path");
            if left >> w & 1 == 0 {
                left |= 1 << w;
                frontier |= 1 << w;
            }
        }
    }
    let violator = HallViolator {
        set: VertexSet::from_bits(left),
        side: Direction::Out,
    };
    debug_assert!(!hall_check(d, violator.set, violator.side));
    Ok(FactorOutcome::Violator(violator))
}

fn augment(adj: &[u64], owner: &mut [usize], seen: &mut u64, u: usize) -> bool {
    let mut cand = adj[u] & !*seen;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if *seen >> v & 1 == 1 {
            continue;
        }
        *seen |= 1 << v;
        if owner[v] == usize::MAX || augment(adj, owner, seen, owner[v]) {
            owner[v] = u;
            return true;
        }
    }
    false
}

/// Merges the cycles through `u` and `v` when both `u -> v+` and `v -> u+`
/// are arcs, into `u v+ v++ .. v u+ u++ .. u`. The merged cycle takes the
/// earlier of the two slots.
pub fn merge_pair(d: &Digraph, f: &CycleFactor, u: usize, v: usize) -> Result<Option<CycleFactor>> {
    let (ci, cj) = (f.cycle_of(u), f.cycle_of(v));
    if ci == cj {
        return Err(Error::invalid(format!("{u} and {v} lie on the same cycle")));
    }
    let (up, vp) = (f.succ(u), f.succ(v));
    if !d.has_arc(u, vp) || !d.has_arc(v, up) {
        return Ok(None);
    }
    let mut merged = vec![u];
    merged.extend(f.walk(vp, v));
    merged.extend(f.walk(up, f.pred(u)).into_iter().take_while(|&w| w != u));
    let (first, second) = (ci.min(cj), ci.max(cj));
    Ok(Some(f.replace(first, Some(merged), second, None)))
}
