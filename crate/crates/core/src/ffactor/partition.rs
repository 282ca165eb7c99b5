//! The `(S, T, O, R)` partition witnessing that a graph of minimum degree at
//! least two has no 2-factor.
//!
//! Over all disjoint `(S, T)` we maximize
//! `w(S,T) = |T| - |S| - e(T) - (e(T, V-S-T) - oc(S,T)) / 2`,
//! then minimize `|T|`, maximize `|S|`, minimize `oc(S,T)`, and finally take
//! the smallest bit-encoding of `T`, then of `S`. `O` collects the components
//! of `G - S - T` with an odd number of edges into `T`; `R` is the rest.

use std::fmt;

use rayon::prelude::*;

use super::factor::find_2_factor;
use super::tutte::{check_disjoint, MAX_TUTTE_ORDER};
use crate::error::{Error, Result};
use crate::graph::{components, UGraph};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuttePartition {
    s: VertexSet,
    t: VertexSet,
    o: VertexSet,
    r: VertexSet,
    w: i64,
    oc: usize,
    e_to: usize,
}

impl TuttePartition {
    /// Any four disjoint sets covering `V(g)`; the cached `w`, `oc` and
    /// `e(T,O)` are computed from `g`.
    pub fn new(g: &UGraph, s: VertexSet, t: VertexSet, o: VertexSet, r: VertexSet) -> Result<Self> {
        let parts = [s, t, o, r];
        let mut seen = VertexSet::EMPTY;
        for p in parts {
            if !p.is_disjoint(seen) {
                return Err(Error::invalid("partition classes overlap"));
            }
            seen = seen.union(p);
        }
        if seen != g.vertices() {
            return Err(Error::invalid("partition classes do not cover the vertex set"));
        }
        let stats = Stats::of(g.rows(), g.vertices().bits(), s.bits(), t.bits());
        Ok(TuttePartition {
            s,
            t,
            o,
            r,
            w: stats.w(),
            oc: stats.oc as usize,
            e_to: g.edges_between(t, o),
        })
    }

    pub fn s(&self) -> VertexSet {
        self.s
    }
    pub fn t(&self) -> VertexSet {
        self.t
    }
    pub fn o(&self) -> VertexSet {
        self.o
    }
    pub fn r(&self) -> VertexSet {
        self.r
    }
    /// `w(S, T)`.
    pub fn w(&self) -> i64 {
        self.w
    }
    /// `oc(S, T)`: components of `G - S - T` with an odd number of edges into `T`.
    pub fn oc(&self) -> usize {
        self.oc
    }
    /// `e(T, O)`.
    pub fn e_to(&self) -> usize {
        self.e_to
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    TooLarge(usize),
    LowDegree { vertex: usize, degree: usize },
    HasTwoFactor(Vec<(usize, usize)>),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::TooLarge(n) => {
                write!(f, "{n} vertices exceed the exhaustive limit of {MAX_TUTTE_ORDER}")
            }
            PartitionError::LowDegree { vertex, degree } => {
                write!(f, "hypothesis failed: vertex {vertex} has degree {degree} < 2")
            }
            PartitionError::HasTwoFactor(_) => write!(f, "hypothesis failed: the graph has a 2-factor"),
        }
    }
}

impl std::error::Error for PartitionError {}

/// Edge counts for one `(S, T)` pair.
#[derive(Debug, Clone, Copy)]
struct Stats {
    t: i64,
    s: i64,
    /// `e(T)`
    inside: i64,
    /// `e(T, V - S - T)`
    out: i64,
    oc: i64,
}

impl Stats {
    #[inline]
    fn of(rows: &[u64], full: u64, s: u64, t: u64) -> Stats {
        let rest = full & !(s | t);
        let mut inside2 = 0;
        let mut out = 0;
        let mut bits = t;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            inside2 += (rows[v] & t).count_ones() as i64;
            out += (rows[v] & rest).count_ones() as i64;
        }
        let oc = components(rows, rest)
            .filter(|&comp| {
                let mut into_t = 0u32;
                let mut bits = comp;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    into_t += (rows[v] & t).count_ones();
                }
                into_t % 2 == 1
            })
            .count() as i64;
        Stats {
            t: t.count_ones() as i64,
            s: s.count_ones() as i64,
            inside: inside2 / 2,
            out,
            oc,
        }
    }

    /// `e(T, V-S-T) - oc` is always even: every component contributes its
    /// edge count into `T`, and exactly the odd ones are counted by `oc`.
    #[inline]
    fn w(&self) -> i64 {
        debug_assert_eq!((self.out - self.oc) % 2, 0);
        self.t - self.s - self.inside - (self.out - self.oc) / 2
    }
}

/// Orders candidates; larger is better.
type Key = (i64, i64, i64, i64, u64, u64);

#[inline]
fn key(st: &Stats, s: u64, t: u64) -> Key {
    (st.w(), -st.t, st.s, -st.oc, !t, !s)
}

/// The optimal `(S, T, O, R)` partition of a graph with minimum degree at
/// least two and no 2-factor. Preconditions are checked in the order size,
/// minimum degree, 2-factor.
pub fn build_partition(g: &UGraph) -> Result<TuttePartition, PartitionError> {
    let n = g.order();
    if n > MAX_TUTTE_ORDER {
        return Err(PartitionError::TooLarge(n));
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) < 2) {
        return Err(PartitionError::LowDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if let Some(f) = find_2_factor(g) {
        return Err(PartitionError::HasTwoFactor(f));
    }
    let rows = g.rows();
    let full = g.vertices().bits();
    let best_for = |s: u64| -> (Key, u64, u64) {
        let free = full & !s;
        let mut best: Option<(Key, u64, u64)> = None;
        let mut t = free;
        loop {
            let k = key(&Stats::of(rows, full, s, t), s, t);
            if best.map_or(true, |b| k > b.0) {
                best = Some((k, s, t));
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & free;
        }
        best.expect("T = {} is always a candidate")
    };
    let pick = |a: (Key, u64, u64), b: (Key, u64, u64)| if b.0 > a.0 { b } else { a };
    let (_, s, t) = if n >= 9 {
        (0..=full)
            .into_par_iter()
            .map(best_for)
            .reduce_with(pick)
            .expect("nonempty range")
    } else {
        (0..=full).map(best_for).reduce(pick).expect("nonempty range")
    };
    let (s, t) = (VertexSet::from_bits(s), VertexSet::from_bits(t));
    let rest = g.vertices().difference(s.union(t));
    let o = g
        .components_within(rest)
        .filter(|q| g.edges_between(*q, t) % 2 == 1)
        .fold(VertexSet::EMPTY, VertexSet::union);
    let r = rest.difference(o);
    Ok(TuttePartition::new(g, s, t, o, r).expect("classes partition V"))
}

/// A failed partition property together with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyViolation {
    /// (i) `T` is not independent.
    TNotIndependent { edge: (usize, usize) },
    /// (ii) an edge joins `R` to `O ∪ T`.
    EdgeLeavesR { edge: (usize, usize) },
    /// (iii) a component of `G[O]` has an even number of edges into `T`.
    EvenComponent { component: VertexSet, edges_into_t: usize },
    /// (iv) `t` has two edges into one component of `G[O]`.
    DoubleEdge { t: usize, component: VertexSet },
    /// (v) `o` has more than one edge into `T`.
    CrowdedO { o: usize, edges_into_t: usize },
    /// (vi) an edge `ot` with `e(t, S) = 0` and `e(o, O) = 0`.
    LooseEdge { o: usize, t: usize },
    /// (vii) `|T| - |S| - (e(T,O) - oc(S,T)) / 2` is not positive; holds twice that value.
    NoSurplus { twice_value: i64 },
}

impl PropertyViolation {
    /// The property number, `"i"` through `"vii"`.
    pub fn property(&self) -> &'static str {
        match self {
            PropertyViolation::TNotIndependent { .. } => "i",
            PropertyViolation::EdgeLeavesR { .. } => "ii",
            PropertyViolation::EvenComponent { .. } => "iii",
            PropertyViolation::DoubleEdge { .. } => "iv",
            PropertyViolation::CrowdedO { .. } => "v",
            PropertyViolation::LooseEdge { .. } => "vi",
            PropertyViolation::NoSurplus { .. } => "vii",
        }
    }
}

impl fmt::Display for PropertyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ", self.property())?;
        match self {
            PropertyViolation::TNotIndependent { edge: (a, b) } => write!(f, "T contains edge {a}-{b}"),
            PropertyViolation::EdgeLeavesR { edge: (a, b) } => write!(f, "edge {a}-{b} joins R to O or T"),
            PropertyViolation::EvenComponent {
                component,
                edges_into_t,
            } => {
                write!(f, "component {component} of O has {edges_into_t} edges into T")
            }
            PropertyViolation::DoubleEdge { t, component } => {
                write!(f, "{t} has two edges into component {component}")
            }
            PropertyViolation::CrowdedO { o, edges_into_t } => write!(f, "{o} has {edges_into_t} edges into T"),
            PropertyViolation::LooseEdge { o, t } => {
                write!(f, "edge {o}-{t} with e({t},S) = 0 and e({o},O) = 0")
            }
            PropertyViolation::NoSurplus { twice_value } => {
                write!(
                    f,
                    "|T| - |S| - (e(T,O) - oc)/2 = {} is not positive",
                    *twice_value as f64 / 2.0
                )
            }
        }
    }
}

/// Every violated property among (i)-(vii), in property order; empty when
/// the partition has all seven.
pub fn verify_partition(g: &UGraph, p: &TuttePartition) -> Result<Vec<PropertyViolation>> {
    check_disjoint(g, p.s, p.t)?;
    let all = p.s.union(p.t).union(p.o).union(p.r);
    if all != g.vertices() || all.len() != p.s.len() + p.t.len() + p.o.len() + p.r.len() {
        return Err(Error::invalid("S, T, O, R do not partition the vertex set"));
    }
    let mut out = Vec::new();
    let (s, t, o, r) = (p.s, p.t, p.o, p.r);

    for u in t {
        if let Some(v) = g.neighbors(u).intersection(t).iter().find(|&v| v > u) {
            out.push(PropertyViolation::TNotIndependent { edge: (u, v) });
            break;
        }
    }
    for u in r {
        if let Some(v) = g.neighbors(u).intersection(o.union(t)).first() {
            out.push(PropertyViolation::EdgeLeavesR {
                edge: (u.min(v), u.max(v)),
            });
            break;
        }
    }
    let comps: Vec<VertexSet> = g.components_within(o).collect();
    for &c in &comps {
        let k = g.edges_between(c, t);
        if k % 2 == 0 {
            out.push(PropertyViolation::EvenComponent {
                component: c,
                edges_into_t: k,
            });
            break;
        }
    }
    'iv: for u in t {
        for &c in &comps {
            if g.neighbors(u).intersection(c).len() >= 2 {
                out.push(PropertyViolation::DoubleEdge { t: u, component: c });
                break 'iv;
            }
        }
    }
    for v in o {
        let k = g.neighbors(v).intersection(t).len();
        if k > 1 {
            out.push(PropertyViolation::CrowdedO { o: v, edges_into_t: k });
            break;
        }
    }
    'vi: for v in o {
        if !g.neighbors(v).is_disjoint(o) {
            continue;
        }
        for u in g.neighbors(v).intersection(t) {
            if g.neighbors(u).is_disjoint(s) {
                out.push(PropertyViolation::LooseEdge { o: v, t: u });
                break 'vi;
            }
        }
    }
    let twice = 2 * t.len() as i64 - 2 * s.len() as i64 - p.e_to as i64 + p.oc as i64;
    if twice <= 0 {
        out.push(PropertyViolation::NoSurplus { twice_value: twice });
    }
    Ok(out)
}
