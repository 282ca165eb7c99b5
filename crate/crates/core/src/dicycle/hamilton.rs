use std::collections::HashSet;

use crate::graph::Digraph;

/// Failed `(visited, current)` states are remembered up to this many entries.
const MEMO_LIMIT: usize = 1 << 20;

/// Exact Hamilton cycle search, or `None` when the digraph has none (or
/// fewer than two vertices).
///
/// Depth-first from vertex 0, trying successors in ascending order, so the
/// answer is the lexicographically least Hamilton cycle starting at 0. Before
/// each step the search checks that every unvisited vertex still has a
/// possible predecessor and successor; a vertex whose only remaining
/// predecessor is the current vertex forces the next move. Dead
/// `(visited, current)` states are memoized.
pub fn hamilton_cycle(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.order();
    if n < 2 {
        return None;
    }
    let out: Vec<u64> = (0..n).map(|v| d.out_neighbors(v).without(v).bits()).collect();
    let inn: Vec<u64> = (0..n).map(|v| d.in_neighbors(v).without(v).bits()).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if out.iter().chain(&inn).any(|&r| r == 0) {
        return None;
    }
    let mut search = Search {
        out,
        inn,
        full,
        path: Vec::with_capacity(n),
        dead: HashSet::new(),
    };
    search.path.push(0);
    if search.extend(1, 0) {
        Some(search.path)
    } else {
        None
    }
}

struct Search {
    out: Vec<u64>,
    inn: Vec<u64>,
    full: u64,
    path: Vec<usize>,
    dead: HashSet<(u64, u8)>,
}

impl Search {
    fn extend(&mut self, visited: u64, cur: usize) -> bool {
        let left = self.full & !visited;
        if left == 0 {
            return self.out[cur] & 1 == 1;
        }
        if self.dead.contains(&(visited, cur as u8)) {
            return false;
        }
        let Some(choices) = self.choices(left, cur) else {
            self.remember(visited, cur);
            return false;
        };
        let mut rest = choices;
        while rest != 0 {
            let next = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.path.push(next);
            if self.extend(visited | 1 << next, next) {
                return true;
            }
            self.path.pop();
        }
        self.remember(visited, cur);
        false
    }

    /// Candidate next vertices, or `None` if the state cannot be completed.
    #[inline]
    fn choices(&self, left: u64, cur: usize) -> Option<u64> {
        let step = self.out[cur] & left;
        if step == 0 || self.inn[0] & (left | 1 << cur) == 0 {
            return None;
        }
        let mut forced = 0u64;
        let mut rest = left;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let preds = self.inn[v] & (left | 1 << cur);
            let succs = self.out[v] & (left | 1);
            if preds == 0 || succs == 0 {
                return None;
            }
            if preds == 1 << cur {
                if forced != 0 {
                    return None;
                }
                forced = 1 << v;
            }
        }
        Some(if forced != 0 { forced } else { step })
    }

    fn remember(&mut self, visited: u64, cur: usize) {
        if self.dead.len() < MEMO_LIMIT {
            self.dead.insert((visited, cur as u8));
        }
    }
}

/// True iff `cycle` visits every vertex of `d` once and consecutive vertices
/// (cyclically) are joined by non-loop arcs.
pub fn is_hamilton_cycle(d: &Digraph, cycle: &[usize]) -> bool {
    let n = d.order();
    if cycle.len() != n || n < 2 {
        return false;
    }
    let mut seen = 0u64;
    for (k, &v) in cycle.iter().enumerate() {
        if v >= n || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
        let w = cycle[(k + 1) % n];
        if v == w || w >= n || !d.has_arc(v, w) {
            return false;
        }
    }
    true
}
