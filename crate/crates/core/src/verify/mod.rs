//! Exhaustive and sampled verification over labeled (di)graph spaces.
//!
//! Instances are identified by an arc mask. Bit `k` of the mask is the `k`-th
//! position in this fixed order:
//! * loopless digraphs: ordered pairs `(i, j)`, `i != j`, row-major;
//! * digraphs with loops: all ordered pairs `(i, j)`, row-major;
//! * graphs: unordered pairs `(i, j)`, `i < j`, lexicographic.

mod report;
mod run;

pub use report::{TheoremAudit, VerificationReport};
pub use run::{audit_theorems, is_hamiltonian, sample_verify, verify_conjecture, MAX_EXHAUSTIVE_BITS};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, UGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Digraph,
    Graph,
}

/// A space of labeled instances on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumSpace {
    pub n: usize,
    /// Digraph spaces only: whether loops are part of the space.
    pub loops: bool,
    pub mode: Mode,
}

/// One decoded instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Digraph(Digraph),
    Graph(UGraph),
}

impl EnumSpace {
    pub fn digraphs(n: usize) -> Self {
        EnumSpace {
            n,
            loops: false,
            mode: Mode::Digraph,
        }
    }

    pub fn digraphs_with_loops(n: usize) -> Self {
        EnumSpace {
            n,
            loops: true,
            mode: Mode::Digraph,
        }
    }

    pub fn graphs(n: usize) -> Self {
        EnumSpace {
            n,
            loops: false,
            mode: Mode::Graph,
        }
    }

    fn check(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("spaces need at least one vertex"));
        }
        if self.mode == Mode::Graph && self.loops {
            return Err(Error::invalid("graph spaces have no loops"));
        }
        if self.mask_bits() > 64 {
            return Err(Error::Capacity {
                what: "arc-mask bits",
                requested: self.mask_bits() as u64,
                limit: 64,
            });
        }
        Ok(())
    }

    /// Number of arc (or edge) positions.
    pub fn mask_bits(&self) -> u32 {
        let n = self.n as u32;
        match (self.mode, self.loops) {
            (Mode::Digraph, false) => n * n.saturating_sub(1),
            (Mode::Digraph, true) => n * n,
            (Mode::Graph, _) => n * n.saturating_sub(1) / 2,
        }
    }

    /// `2^mask_bits`, if it fits in 64 bits.
    pub fn size(&self) -> Option<u64> {
        1u64.checked_shl(self.mask_bits())
    }

    /// The (ordered or unordered) vertex pair of each mask bit.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let keep = match self.mode {
                    Mode::Digraph => self.loops || i != j,
                    Mode::Graph => i < j,
                };
                if keep {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Out-rows (digraphs) or adjacency rows (graphs) of the instance `mask`.
    #[inline]
    pub(crate) fn rows(&self, mask: u64, positions: &[(usize, usize)], rows: &mut [u64]) {
        let n = self.n;
        match (self.mode, self.loops) {
            (Mode::Digraph, false) => {
                let w = n - 1;
                let low = if w == 0 { 0 } else { (1u64 << w) - 1 };
                for (i, row) in rows.iter_mut().enumerate() {
                    let x = (mask >> (i * w)) & low;
                    *row = (x & ((1 << i) - 1)) | ((x >> i) << (i + 1));
                }
            }
            (Mode::Digraph, true) => {
                let low = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
                for (i, row) in rows.iter_mut().enumerate() {
                    *row = (mask >> (i * n)) & low;
                }
            }
            (Mode::Graph, _) => {
                rows.fill(0);
                let mut bits = mask;
                while bits != 0 {
                    let k = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let (i, j) = positions[k];
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
    }

    pub fn decode(&self, mask: u64) -> Result<Instance> {
        self.check()?;
        if self.mask_bits() < 64 && mask >> self.mask_bits() != 0 {
            return Err(Error::invalid(format!("mask {mask:#x} has bits beyond the space")));
        }
        let positions = self.positions();
        let mut rows = vec![0u64; self.n];
        self.rows(mask, &positions, &mut rows);
        Ok(match self.mode {
            Mode::Digraph => Instance::Digraph(Digraph::from_out_rows(rows)?),
            Mode::Graph => {
                let mut g = UGraph::new(self.n)?;
                for (k, &(i, j)) in positions.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        g.add_edge(i, j)?;
                    }
                }
                Instance::Graph(g)
            }
        })
    }

    /// Inverse of [`EnumSpace::decode`] for digraphs.
    pub fn encode_digraph(&self, d: &Digraph) -> Result<u64> {
        self.check()?;
        if self.mode != Mode::Digraph || d.order() != self.n || (!self.loops && d.has_loops()) {
            return Err(Error::invalid("digraph does not belong to this space"));
        }
        Ok(self
            .positions()
            .iter()
            .enumerate()
            .filter(|(_, &(i, j))| d.has_arc(i, j))
            .fold(0, |m, (k, _)| m | 1 << k))
    }

    /// Inverse of [`EnumSpace::decode`] for graphs.
    pub fn encode_graph(&self, g: &UGraph) -> Result<u64> {
        self.check()?;
        if self.mode != Mode::Graph || g.order() != self.n {
            return Err(Error::invalid("graph does not belong to this space"));
        }
        Ok(self
            .positions()
            .iter()
            .enumerate()
            .filter(|(_, &(i, j))| g.has_edge(i, j))
            .fold(0, |m, (k, _)| m | 1 << k))
    }
}

/// Every instance of the space, in ascending mask order.
pub fn enumerate(space: EnumSpace) -> Result<impl Iterator<Item = Instance>> {
    space.check()?;
    if space.mask_bits() > MAX_EXHAUSTIVE_BITS {
        return Err(Error::Capacity {
            what: "exhaustive space bits",
            requested: space.mask_bits() as u64,
            limit: MAX_EXHAUSTIVE_BITS as u64,
        });
    }
    let size = space.size().expect("checked above");
    Ok((0..size).map(move |m| space.decode(m).expect("mask in range")))
}
