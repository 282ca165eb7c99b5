//! Undirected machinery: f-factors, Tutte's condition, the (S, T, O, R)
//! partition certifying the absence of a 2-factor, and Hamilton cycles.

mod factor;
mod partition;
mod tutte;

pub use factor::{find_2_factor, find_f_factor, DegreeTargets};
pub use partition::{build_partition, verify_partition, PartitionError, PropertyViolation, TuttePartition};
pub use tutte::{odd_components, q_count, tutte_check, TutteViolator, MAX_TUTTE_ORDER};

use crate::dicycle::hamilton_cycle;
use crate::graph::UGraph;

/// Hamilton cycle of an undirected graph with at least three vertices.
pub fn hamilton_cycle_graph(g: &UGraph) -> Option<Vec<usize>> {
    if g.order() < 3 {
        return None;
    }
    hamilton_cycle(&g.complete_biorientation())
}
