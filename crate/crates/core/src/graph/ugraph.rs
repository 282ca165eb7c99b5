use std::fmt;

use super::digraph::{check_permutation, Digraph};
use super::{components, reach};
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph on at most 64 vertices. No loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UGraph {
    n: usize,
    rows: Vec<u64>,
}

impl UGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertices",
                requested: n as u64,
                limit: MAX_VERTICES as u64,
            });
        }
        Ok(UGraph { n, rows: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = UGraph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Rows must be symmetric, loop-free and within range.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(rows.iter().enumerate().all(|(u, &r)| r >> u & 1 == 0));
        UGraph { n: rows.len(), rows }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = UGraph::new(n)?;
        let full = VertexSet::full(n).bits();
        for (u, row) in g.rows.iter_mut().enumerate() {
            *row = full & !(1 << u);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("an undirected cycle needs at least 3 vertices"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        UGraph::from_edges(n, &edges)
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at {u} in an undirected graph")));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v])
    }

    #[inline]
    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_bits(self.rows[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let full = VertexSet::full(self.n).bits();
        reach(&self.rows, 0, full) == full
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        components(&self.rows, within.bits()).map(VertexSet::from_bits)
    }

    /// Number of edges with one end in `x` and the other in `y`. Edges inside
    /// `x ∩ y` are counted once.
    pub fn edges_between(&self, x: VertexSet, y: VertexSet) -> usize {
        let both = x.intersection(y);
        let mut total = 0;
        let mut inside = 0;
        for u in x {
            total += (self.rows[u] & y.bits()).count_ones() as usize;
            if both.contains(u) {
                inside += (self.rows[u] & both.bits()).count_ones() as usize;
            }
        }
        total - inside / 2
    }

    /// Number of edges inside `x`.
    pub fn edges_within(&self, x: VertexSet) -> usize {
        self.edges_between(x, x)
    }

    /// Replaces every edge `uv` by the arcs `u->v` and `v->u`.
    pub fn complete_biorientation(&self) -> Digraph {
        Digraph::from_out_rows(self.rows.clone()).expect("rows are in range")
    }

    /// A graph is s-quadrangular when its complete biorientation is.
    pub fn is_s_quadrangular(&self) -> bool {
        // Symmetric rows: the in-side condition is the out-side condition.
        super::squad::side_holds(&self.rows)
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<UGraph> {
        check_permutation(perm, self.n)?;
        let mut g = UGraph::new(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }
}

impl Digraph {
    /// Forgets arc directions. Fails on loops, which have no undirected counterpart.
    pub fn underlying_graph(&self) -> Result<UGraph> {
        let mut g = UGraph::new(self.order())?;
        for (u, v) in self.arcs() {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

impl fmt::Debug for UGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UGraph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}
