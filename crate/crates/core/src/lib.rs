//! Hamiltonicity of s-quadrangular digraphs.
//!
//! The digraph of a unitary matrix is s-quadrangular, and the open question is
//! whether every strong s-quadrangular digraph has a Hamilton cycle. This
//! crate provides the predicates ([`graph`]), unitary-matrix generators
//! ([`matrix`]), cycle-factor and Hamilton-cycle machinery for digraphs
//! ([`dicycle`]), f-factor and Tutte-partition machinery for graphs
//! ([`ffactor`]), and an exhaustive enumeration harness ([`verify`]).

pub mod dicycle;
pub mod error;
pub mod ffactor;
pub mod graph;
pub mod matrix;
pub mod verify;
mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Digraph, Direction, LineDigraph, UGraph};
pub use matrix::{ComplexMatrix, MatrixKind};
pub use verify::{EnumSpace, Mode, TheoremAudit, VerificationReport};
pub use vertex_set::{VertexSet, MAX_VERTICES};
