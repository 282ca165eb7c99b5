use serde::{Deserialize, Serialize};

use super::{EnumSpace, Mode};
use crate::error::{Error, Result};

/// Counters from one verification run.
///
/// `strong` counts strong digraphs (connected graphs in graph spaces),
/// `squad` those that are also s-quadrangular, and `hamiltonian` those among
/// them with a Hamilton cycle. Every s-quadrangular non-hamiltonian
/// instance is listed in `counterexamples` by arc mask.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub space: EnumSpace,
    pub total: u64,
    pub strong: u64,
    pub squad: u64,
    pub hamiltonian: u64,
    pub counterexamples: Vec<u64>,
    pub elapsed_seconds: f64,
    pub threads: usize,
}

/// Wire form; field order is the JSON key order.
#[derive(Serialize, Deserialize)]
struct Json {
    mode: Mode,
    n: usize,
    loops: bool,
    total: u64,
    strong: u64,
    squad: u64,
    hamiltonian: u64,
    counterexamples: Vec<String>,
    elapsed_seconds: f64,
    threads: usize,
}

impl VerificationReport {
    /// True iff no counterexample was found.
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// One JSON object with keys `mode, n, loops, total, strong, squad,
    /// hamiltonian, counterexamples, elapsed_seconds, threads` in that order.
    /// Counterexamples are `0x`-prefixed lowercase hex arc masks.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.wire()).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: Json = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let counterexamples = j
            .counterexamples
            .iter()
            .map(|s| {
                s.strip_prefix("0x")
                    .and_then(|h| u64::from_str_radix(h, 16).ok())
                    .ok_or_else(|| Error::invalid(format!("bad arc mask `{s}`")))
            })
            .collect::<Result<_>>()?;
        Ok(VerificationReport {
            space: EnumSpace {
                n: j.n,
                loops: j.loops,
                mode: j.mode,
            },
            total: j.total,
            strong: j.strong,
            squad: j.squad,
            hamiltonian: j.hamiltonian,
            counterexamples,
            elapsed_seconds: j.elapsed_seconds,
            threads: j.threads,
        })
    }

    /// The JSON form without the run-dependent `elapsed_seconds` and
    /// `threads`; equal across thread counts for the same space.
    pub fn fingerprint(&self) -> String {
        let mut v = serde_json::to_value(self.wire()).expect("plain data serializes");
        let obj = v.as_object_mut().expect("object");
        obj.remove("elapsed_seconds");
        obj.remove("threads");
        v.to_string()
    }

    fn wire(&self) -> Json {
        Json {
            mode: self.space.mode,
            n: self.space.n,
            loops: self.space.loops,
            total: self.total,
            strong: self.strong,
            squad: self.squad,
            hamiltonian: self.hamiltonian,
            counterexamples: self.counterexamples.iter().map(|m| format!("{m:#x}")).collect(),
            elapsed_seconds: self.elapsed_seconds,
            threads: self.threads,
        }
    }
}

/// Theorem cross-checks riding on an exhaustive scan. Failure lists hold arc
/// masks and should stay empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremAudit {
    /// Digraphs: strong s-quadrangular instances given to the cycle-factor search.
    pub factor_checked: u64,
    pub factor_failures: Vec<u64>,
    /// Digraphs: the subset with maximum semi-degree at most 3, given to the
    /// merge/exchange construction (each result arc-validated).
    pub exchange_checked: u64,
    pub exchange_failures: Vec<u64>,
    /// Graphs: connected s-quadrangular instances on at least 3 vertices.
    pub two_factor_checked: u64,
    pub two_factor_failures: Vec<u64>,
    /// Graphs: the subset with maximum degree at most 4.
    pub hamilton_checked: u64,
    pub hamilton_failures: Vec<u64>,
    /// Graphs: every instance with minimum degree at least 2 and no 2-factor.
    pub partition_checked: u64,
    pub partition_failures: Vec<u64>,
}

impl TheoremAudit {
    pub fn is_clean(&self) -> bool {
        self.factor_failures.is_empty()
            && self.exchange_failures.is_empty()
            && self.two_factor_failures.is_empty()
            && self.hamilton_failures.is_empty()
            && self.partition_failures.is_empty()
    }
}
