use std::fmt;

use super::reach;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Which neighbourhood a predicate looks at: out-neighbours (`Out`, the
/// "plus" side) or in-neighbours (`In`, the "minus" side).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Out,
    In,
}

/// A digraph on at most 64 vertices with one bitset row per vertex.
///
/// Loops are allowed. They count towards degrees and neighbourhoods (a loop
/// at `v` puts `v` into both `N+(v)` and `N-(v)`), but cycle factors and
/// Hamilton cycles never use them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_rows: Vec<u64>,
    in_rows: Vec<u64>,
}

impl Digraph {
    /// Empty digraph on `n` vertices, `1 <= n <= 64`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a digraph needs at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertices",
                requested: n as u64,
                limit: MAX_VERTICES as u64,
            });
        }
        Ok(Digraph {
            n,
            out_rows: vec![0; n],
            in_rows: vec![0; n],
        })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n)?;
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Builds a digraph straight from out-rows; bits at or above `n` are rejected.
    pub fn from_out_rows(out_rows: Vec<u64>) -> Result<Self> {
        let n = out_rows.len();
        let mut d = Digraph::new(n)?;
        let full = VertexSet::full(n).bits();
        for (u, &row) in out_rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::invalid(format!("row {u} names a vertex >= {n}")));
            }
            for v in VertexSet::from_bits(row) {
                d.in_rows[v] |= 1 << u;
            }
        }
        d.out_rows = out_rows;
        Ok(d)
    }

    /// The directed cycle `0 -> 1 -> .. -> n-1 -> 0` (for `n = 1`, a single loop).
    pub fn cycle(n: usize) -> Result<Self> {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::from_arcs(n, &arcs)
    }

    /// Every ordered pair is an arc, loops included.
    pub fn complete_with_loops(n: usize) -> Result<Self> {
        let full = VertexSet::full(n).bits();
        let mut d = Digraph::new(n)?;
        d.out_rows.fill(full);
        d.in_rows.fill(full);
        Ok(d)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "arc {u}->{v} out of range for {} vertices",
                self.n
            )));
        }
        self.out_rows[u] |= 1 << v;
        self.in_rows[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.out_rows[v])
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.in_rows[v])
    }

    #[inline]
    pub fn neighbors(&self, v: usize, dir: Direction) -> VertexSet {
        match dir {
            Direction::Out => self.out_neighbors(v),
            Direction::In => self.in_neighbors(v),
        }
    }

    #[inline]
    pub(crate) fn out_rows(&self) -> &[u64] {
        &self.out_rows
    }

    #[inline]
    pub(crate) fn in_rows(&self) -> &[u64] {
        &self.in_rows
    }

    #[inline]
    pub(crate) fn rows(&self, dir: Direction) -> &[u64] {
        match dir {
            Direction::Out => &self.out_rows,
            Direction::In => &self.in_rows,
        }
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_rows[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_rows[v].count_ones() as usize
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.has_arc(v, v))
    }

    pub fn arc_count(&self) -> usize {
        self.out_rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).iter().map(move |v| (u, v)))
    }

    /// Maximum semi-degree: the largest in- or out-degree over all vertices.
    pub fn max_semidegree(&self) -> usize {
        self.out_rows
            .iter()
            .chain(&self.in_rows)
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_strong(&self) -> bool {
        let full = VertexSet::full(self.n).bits();
        reach(&self.out_rows, 0, full) == full && reach(&self.in_rows, 0, full) == full
    }

    /// Strong, and every vertex has equal in- and out-degree.
    pub fn is_eulerian(&self) -> bool {
        (0..self.n).all(|v| self.out_degree(v) == self.in_degree(v)) && self.is_strong()
    }

    /// The converse digraph: every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out_rows: self.in_rows.clone(),
            in_rows: self.out_rows.clone(),
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Digraph> {
        check_permutation(perm, self.n)?;
        let mut d = Digraph::new(self.n)?;
        for (u, v) in self.arcs() {
            d.add_arc(perm[u], perm[v])?;
        }
        Ok(d)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::invalid(format!(
            "permutation has {} entries, expected {n}",
            perm.len()
        )));
    }
    let mut seen = 0u128;
    for &p in perm {
        if p >= n || seen >> p & 1 == 1 {
            return Err(Error::invalid(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        seen |= 1 << p;
    }
    Ok(())
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        f.write_str(")")
    }
}
