//! Hamilton cycles for strong s-quadrangular digraphs with maximum
//! semi-degree at most three, built by improving a cycle factor.
//!
//! Starting from any cycle factor, each round either
//! * merges two cycles `C_i, C_j` through `u in C_i`, `v in C_j` when both
//!   `u -> v+` and `v -> u+` are arcs, or
//! * takes a shortest cycle `C`, an arc `x -> y` leaving it, and a common
//!   out-neighbour `z` of `x` and `y-` on `C` with `z- -> x+`, and replaces `C`
//!   and the cycle through `y` by `x+ .. z-` and `x y .. y- z .. x`.
//!
//! Merges lower the number of cycles; exchanges keep it and shorten the
//! shortest cycle. Under the hypotheses one of the two always applies.

use super::factor::{find_cycle_factor, merge_pair, CycleFactor, FactorOutcome, HallViolator};
use super::hamilton::is_hamilton_cycle;
use crate::graph::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Merge { u: usize, v: usize },
    Exchange { x: usize, y: usize, z: usize },
}

/// Why [`hamilton_by_exchange`] returned no cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExchangeFailure {
    TooFewVertices,
    NotStrong,
    NotSQuadrangular,
    SemidegreeTooLarge(usize),
    NoCycleFactor(HallViolator),
    /// Neither a merge nor an exchange applies to this factor.
    Stuck(CycleFactor),
}

impl std::fmt::Display for ExchangeFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExchangeFailure::TooFewVertices => write!(f, "hypothesis failed: fewer than two vertices"),
            ExchangeFailure::NotStrong => write!(f, "hypothesis failed: digraph is not strong"),
            ExchangeFailure::NotSQuadrangular => {
                write!(f, "hypothesis failed: digraph is not s-quadrangular")
            }
            ExchangeFailure::SemidegreeTooLarge(k) => {
                write!(f, "hypothesis failed: maximum semi-degree {k} exceeds 3")
            }
            ExchangeFailure::NoCycleFactor(h) => {
                write!(
                    f,
                    "no cycle factor: {:?}-neighbourhood of {} is too small",
                    h.side, h.set
                )
            }
            ExchangeFailure::Stuck(cf) => write!(f, "stuck: no merge or exchange applies to {cf:?}"),
        }
    }
}

impl std::error::Error for ExchangeFailure {}

pub fn hamilton_by_exchange(d: &Digraph) -> Result<Vec<usize>, ExchangeFailure> {
    hamilton_by_exchange_observed(d, |_, _| {})
}

/// As [`hamilton_by_exchange`], reporting the initial factor (with `None`)
/// and every factor produced afterwards together with the step that made it.
pub fn hamilton_by_exchange_observed<F>(d: &Digraph, mut observe: F) -> Result<Vec<usize>, ExchangeFailure>
where
    F: FnMut(&CycleFactor, Option<Step>),
{
    if d.order() < 2 {
        return Err(ExchangeFailure::TooFewVertices);
    }
    if !d.is_strong() {
        return Err(ExchangeFailure::NotStrong);
    }
    if !d.is_s_quadrangular() {
        return Err(ExchangeFailure::NotSQuadrangular);
    }
    let delta = d.max_semidegree();
    if delta > 3 {
        return Err(ExchangeFailure::SemidegreeTooLarge(delta));
    }
    let mut f = match find_cycle_factor(d).expect("order checked") {
        FactorOutcome::Factor(f) => f,
        FactorOutcome::Violator(h) => return Err(ExchangeFailure::NoCycleFactor(h)),
    };
    observe(&f, None);
    while f.len() > 1 {
        let (next, step) = match find_merge(d, &f).or_else(|| find_exchange(d, &f)) {
            Some(found) => found,
            None => return Err(ExchangeFailure::Stuck(f)),
        };
        observe(&next, Some(step));
        f = next;
    }
    let cycle = f.into_cycles().pop().expect("one cycle left");
    debug_assert!(is_hamilton_cycle(d, &cycle));
    Ok(cycle)
}

fn find_merge(d: &Digraph, f: &CycleFactor) -> Option<(CycleFactor, Step)> {
    let n = d.order();
    for u in 0..n {
        for v in u + 1..n {
            if f.cycle_of(u) == f.cycle_of(v) {
                continue;
            }
            if let Some(m) = merge_pair(d, f, u, v).expect("distinct cycles") {
                return Some((m, Step::Merge { u, v }));
            }
        }
    }
    None
}

fn find_exchange(d: &Digraph, f: &CycleFactor) -> Option<(CycleFactor, Step)> {
    let c1 = f.shortest();
    let on_c1 = f.cycle_set(c1);
    for x in on_c1 {
        let xp = f.succ(x);
        for y in d.out_neighbors(x).difference(on_c1) {
            let ym = f.pred(y);
            let common = d
                .out_neighbors(x)
                .intersection(d.out_neighbors(ym))
                .intersection(on_c1)
                .without(x)
                .without(xp);
            for z in common {
                let zm = f.pred(z);
                if zm == xp || !d.has_arc(zm, xp) {
                    continue;
                }
                let short = f.walk(xp, zm);
                let mut long = vec![x];
                long.extend(f.walk(y, ym));
                long.extend(f.walk(z, f.pred(x)));
                let c2 = f.cycle_of(y);
                let next = f.replace(c1, Some(short), c2, Some(long));
                return Some((next, Step::Exchange { x, y, z }));
            }
        }
    }
    None
}
