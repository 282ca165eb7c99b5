//! Cycle factors and Hamilton cycles in digraphs.
//!
//! Cycles always have length at least two and never use loops.

mod exchange;
mod factor;
mod hamilton;

pub use exchange::{hamilton_by_exchange, hamilton_by_exchange_observed, ExchangeFailure, Step};
pub use factor::{find_cycle_factor, hall_check, merge_pair, CycleFactor, FactorOutcome, HallViolator};
pub use hamilton::{hamilton_cycle, is_hamilton_cycle};
