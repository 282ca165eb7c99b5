use rayon::prelude::*;

use super::factor::DegreeTargets;
use crate::error::{Error, Result};
use crate::graph::UGraph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by the exhaustive `3^n` scans over disjoint `(S, T)`.
pub const MAX_TUTTE_ORDER: usize = 14;

/// Disjoint `S, T` for which Tutte's f-factor inequality fails:
/// `q(S,T) + sum_{t in T} (f(t) - d_{G-S}(t)) = lhs > rhs = sum_{s in S} f(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TutteViolator {
    pub s: VertexSet,
    pub t: VertexSet,
    pub lhs: i64,
    pub rhs: i64,
}

/// Components `Q` of `G - S - T` for which `e(Q, T) + sum_{v in Q} f(v)` is odd.
pub fn q_count(g: &UGraph, s: VertexSet, t: VertexSet, f: &DegreeTargets) -> Result<usize> {
    check_disjoint(g, s, t)?;
    f.check_order(g.order())?;
    Ok(Evaluator::new(g, f).q(s.bits(), t.bits()))
}

/// Components of `G - S - T` with an odd number of edges into `T`; the
/// `f = 2` case of [`q_count`].
pub fn odd_components(g: &UGraph, s: VertexSet, t: VertexSet) -> usize {
    let rest = g.vertices().difference(s.union(t));
    g.components_within(rest)
        .filter(|q| q.iter().map(|v| g.neighbors(v).intersection(t).len()).sum::<usize>() % 2 == 1)
        .count()
}

/// Scans every disjoint pair `(S, T)`. Returns `None` when Tutte's condition
/// holds, i.e. when `g` has an f-factor. Otherwise returns the violator with
/// the largest `lhs - rhs`, ties going to the smallest `|T|`, then the
/// smallest bit-encoding of `T`, then of `S`.
pub fn tutte_check(g: &UGraph, f: &DegreeTargets) -> Result<Option<TutteViolator>> {
    let n = g.order();
    if n > MAX_TUTTE_ORDER {
        return Err(Error::Capacity {
            what: "exhaustive Tutte scan order",
            requested: n as u64,
            limit: MAX_TUTTE_ORDER as u64,
        });
    }
    f.check_order(n)?;
    let ev = Evaluator::new(g, f);
    let full = g.vertices().bits();
    let best_for = |s: u64| -> Option<(i64, TutteViolator)> {
        let rhs = ev.f_sum(s);
        let free = full & !s;
        let mut best: Option<(i64, TutteViolator)> = None;
        let mut t = free;
        loop {
            let lhs = ev.q(s, t) as i64 + ev.deficit(s, t);
            if lhs > rhs {
                let cand = TutteViolator {
                    s: VertexSet::from_bits(s),
                    t: VertexSet::from_bits(t),
                    lhs,
                    rhs,
                };
                if best.as_ref().map_or(true, |b| better(&cand, &b.1)) {
                    best = Some((lhs - rhs, cand));
                }
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & free;
        }
        best
    };
    let pick = |a: Option<(i64, TutteViolator)>, b: Option<(i64, TutteViolator)>| match (a, b) {
        (Some(x), Some(y)) => Some(if better(&y.1, &x.1) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    };
    let best = if n >= 9 {
        (0..=full).into_par_iter().map(best_for).reduce(|| None, pick)
    } else {
        (0..=full).map(best_for).fold(None, pick)
    };
    Ok(best.map(|(_, v)| v))
}

fn better(a: &TutteViolator, b: &TutteViolator) -> bool {
    let key = |v: &TutteViolator| (std::cmp::Reverse(v.lhs - v.rhs), v.t.len(), v.t.bits(), v.s.bits());
    key(a) < key(b)
}

pub(crate) fn check_disjoint(g: &UGraph, s: VertexSet, t: VertexSet) -> Result<()> {
    if !s.is_disjoint(t) {
        return Err(Error::invalid(format!("S = {s} and T = {t} intersect")));
    }
    if !s.union(t).is_subset(g.vertices()) {
        return Err(Error::invalid("S or T names a vertex outside the graph"));
    }
    Ok(())
}

struct Evaluator<'a> {
    g: &'a UGraph,
    f: &'a [u32],
}

impl<'a> Evaluator<'a> {
    fn new(g: &'a UGraph, f: &'a DegreeTargets) -> Self {
        Evaluator { g, f: f.as_slice() }
    }

    #[inline]
    fn f_sum(&self, set: u64) -> i64 {
        VertexSet::from_bits(set).iter().map(|v| self.f[v] as i64).sum()
    }

    /// `sum_{t in T} (f(t) - d_{G-S}(t))`.
    #[inline]
    fn deficit(&self, s: u64, t: u64) -> i64 {
        let rows = self.g.rows();
        VertexSet::from_bits(t)
            .iter()
            .map(|v| self.f[v] as i64 - (rows[v] & !s).count_ones() as i64)
            .sum()
    }

    #[inline]
    fn q(&self, s: u64, t: u64) -> usize {
        let rows = self.g.rows();
        let rest = self.g.vertices().bits() & !(s | t);
        crate::graph::components(rows, rest)
            .filter(|&comp| {
                let parity: u64 = VertexSet::from_bits(comp)
                    .iter()
                    .map(|v| (rows[v] & t).count_ones() as u64 + self.f[v] as u64)
                    .sum();
                parity % 2 == 1
            })
            .count()
    }
}
