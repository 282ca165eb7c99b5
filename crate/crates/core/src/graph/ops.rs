use super::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vertex_set::MAX_VERTICES;

/// A line digraph together with the arc of the source digraph each vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDigraph {
    pub digraph: Digraph,
    /// `arcs[k]` is the source arc represented by vertex `k`.
    pub arcs: Vec<(usize, usize)>,
}

impl Digraph {
    /// One vertex per arc (row-major arc order); `(u,v) -> (x,y)` iff `v == x`.
    pub fn line_digraph(&self) -> Result<LineDigraph> {
        let arcs: Vec<(usize, usize)> = self.arcs().collect();
        if arcs.is_empty() {
            return Err(Error::invalid("line digraph of a digraph without arcs"));
        }
        if arcs.len() > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "line digraph vertices",
                requested: arcs.len() as u64,
                limit: MAX_VERTICES as u64,
            });
        }
        // Arcs leaving `v` occupy a contiguous index range because of the ordering.
        let mut leaving = vec![0u64; self.order()];
        for (k, &(u, _)) in arcs.iter().enumerate() {
            leaving[u] |= 1 << k;
        }
        let rows = arcs.iter().map(|&(_, v)| leaving[v]).collect();
        Ok(LineDigraph {
            digraph: Digraph::from_out_rows(rows)?,
            arcs,
        })
    }

    /// Kronecker (tensor) product: vertex `(i, j)` is `i * b.order() + j`, and
    /// `(i,j) -> (k,l)` iff `i -> k` in `self` and `j -> l` in `b`.
    pub fn kronecker(&self, b: &Digraph) -> Result<Digraph> {
        let (na, nb) = (self.order(), b.order());
        let n = na * nb;
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "kronecker product vertices",
                requested: n as u64,
                limit: MAX_VERTICES as u64,
            });
        }
        let mut out = Digraph::new(n)?;
        for (i, k) in self.arcs() {
            for (j, l) in b.arcs() {
                out.add_arc(i * nb + j, k * nb + l)?;
            }
        }
        Ok(out)
    }
}
