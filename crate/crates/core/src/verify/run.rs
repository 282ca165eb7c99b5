use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{TheoremAudit, VerificationReport};
use super::{EnumSpace, Instance, Mode};
use crate::dicycle::{find_cycle_factor, hamilton_by_exchange, hamilton_cycle, is_hamilton_cycle, FactorOutcome};
use crate::error::{Error, Result};
use crate::ffactor::{build_partition, find_2_factor, hamilton_cycle_graph, verify_partition};
use crate::graph::{Digraph, UGraph};

/// Exhaustive runs are limited to `2^32` instances.
pub const MAX_EXHAUSTIVE_BITS: u32 = 32;

/// Masks per work unit. Units are merged in ascending order, so results do
/// not depend on the thread count.
const CHUNK: u64 = 1 << 14;

/// Hamiltonicity as used for the conjecture counts. A single vertex counts as
/// hamiltonian, and a graph on two vertices counts when its complete
/// biorientation (a 2-cycle) does.
pub fn is_hamiltonian(instance: &Instance) -> bool {
    match instance {
        Instance::Digraph(d) => d.order() == 1 || hamilton_cycle(d).is_some(),
        Instance::Graph(g) => graph_hamiltonian(g),
    }
}

fn graph_hamiltonian(g: &UGraph) -> bool {
    match g.order() {
        1 => true,
        2 => g.has_edge(0, 1),
        _ => hamilton_cycle_graph(g).is_some(),
    }
}

trait Tally: Default + Send {
    fn merge(&mut self, later: Self);
}

#[derive(Default)]
struct Counts {
    total: u64,
    strong: u64,
    squad: u64,
    hamiltonian: u64,
    counterexamples: Vec<u64>,
}

impl Tally for Counts {
    fn merge(&mut self, later: Self) {
        self.total += later.total;
        self.strong += later.strong;
        self.squad += later.squad;
        self.hamiltonian += later.hamiltonian;
        self.counterexamples.extend(later.counterexamples);
    }
}

impl Tally for TheoremAudit {
    fn merge(&mut self, later: Self) {
        self.factor_checked += later.factor_checked;
        self.factor_failures.extend(later.factor_failures);
        self.exchange_checked += later.exchange_checked;
        self.exchange_failures.extend(later.exchange_failures);
        self.two_factor_checked += later.two_factor_checked;
        self.two_factor_failures.extend(later.two_factor_failures);
        self.hamilton_checked += later.hamilton_checked;
        self.hamilton_failures.extend(later.hamilton_failures);
        self.partition_checked += later.partition_checked;
        self.partition_failures.extend(later.partition_failures);
    }
}

fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    if threads == 0 {
        return Err(Error::invalid("thread count must be positive"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::invalid(e.to_string()))
}

/// Runs `visit` over `units` work units on `threads` workers and folds the
/// per-unit tallies in unit order.
fn scan<T, F>(units: u64, threads: usize, visit: F) -> Result<T>
where
    T: Tally,
    F: Fn(u64, &mut T) + Sync,
{
    let parts: Vec<T> = pool(threads)?.install(|| {
        (0..units)
            .into_par_iter()
            .map(|u| {
                let mut t = T::default();
                visit(u, &mut t);
                t
            })
            .collect()
    });
    Ok(parts.into_iter().fold(T::default(), |mut acc, p| {
        acc.merge(p);
        acc
    }))
}

fn exhaustive_size(space: &EnumSpace) -> Result<u64> {
    space.check()?;
    if space.mask_bits() > MAX_EXHAUSTIVE_BITS {
        return Err(Error::Capacity {
            what: "exhaustive space bits",
            requested: space.mask_bits() as u64,
            limit: MAX_EXHAUSTIVE_BITS as u64,
        });
    }
    Ok(space.size().expect("at most 32 bits"))
}

/// Per-worker scratch for decoding masks.
struct Decoder {
    space: EnumSpace,
    positions: Vec<(usize, usize)>,
    rows: Vec<u64>,
}

impl Decoder {
    fn new(space: EnumSpace) -> Self {
        Decoder {
            positions: space.positions(),
            rows: vec![0; space.n],
            space,
        }
    }

    #[inline]
    fn load(&mut self, mask: u64) {
        self.space.rows(mask, &self.positions, &mut self.rows);
    }

    fn digraph(&self) -> Digraph {
        Digraph::from_out_rows(self.rows.clone()).expect("decoded rows are in range")
    }

    fn graph(&self) -> UGraph {
        UGraph::from_rows_unchecked(self.rows.clone())
    }
}

/// Classifies one instance through the strong/connected, s-quadrangular and
/// hamiltonian filters, cheapest first.
#[inline]
fn classify(dec: &mut Decoder, mask: u64, c: &mut Counts) {
    dec.load(mask);
    c.total += 1;
    let n = dec.space.n;
    let ham = match dec.space.mode {
        Mode::Digraph => {
            let d = dec.digraph();
            if !d.is_strong() {
                return;
            }
            c.strong += 1;
            if !d.is_s_quadrangular() {
                return;
            }
            c.squad += 1;
            n == 1 || hamilton_cycle(&d).is_some()
        }
        Mode::Graph => {
            let g = dec.graph();
            if !g.is_connected() {
                return;
            }
            c.strong += 1;
            if !g.is_s_quadrangular() {
                return;
            }
            c.squad += 1;
            graph_hamiltonian(&g)
        }
    };
    if ham {
        c.hamiltonian += 1;
    } else {
        c.counterexamples.push(mask);
    }
}

fn finish(space: EnumSpace, c: Counts, start: Instant, threads: usize) -> VerificationReport {
    VerificationReport {
        space,
        total: c.total,
        strong: c.strong,
        squad: c.squad,
        hamiltonian: c.hamiltonian,
        counterexamples: c.counterexamples,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        threads,
    }
}

/// Checks every instance of `space`: each strong (connected) s-quadrangular
/// instance must be hamiltonian.
pub fn verify_conjecture(space: EnumSpace, threads: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let size = exhaustive_size(&space)?;
    let units = size.div_ceil(CHUNK);
    let counts = scan(units, threads, |u, c: &mut Counts| {
        let mut dec = Decoder::new(space);
        for mask in u * CHUNK..((u + 1) * CHUNK).min(size) {
            classify(&mut dec, mask, c);
        }
    })?;
    Ok(finish(space, counts, start, threads))
}

/// Like [`verify_conjecture`] on `count` masks drawn uniformly with
/// replacement. Work unit `k` draws from ChaCha8 seeded with `seed` on
/// stream `k`, so the result depends only on `(space, count, seed)`.
pub fn sample_verify(space: EnumSpace, count: u64, seed: u64, threads: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    space.check()?;
    let bits = space.mask_bits();
    let keep = if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 };
    let units = count.div_ceil(CHUNK);
    let mut counts = scan(units, threads, |u, c: &mut Counts| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(u);
        let mut dec = Decoder::new(space);
        let len = CHUNK.min(count - u * CHUNK);
        for _ in 0..len {
            let mask = rng.gen::<u64>() & keep;
            classify(&mut dec, mask, c);
        }
    })?;
    let mut seen = std::collections::HashSet::new();
    counts.counterexamples.retain(|m| seen.insert(*m));
    Ok(finish(space, counts, start, threads))
}

/// Exhaustive run of the theorem cross-checks over `space`.
///
/// Digraph spaces: every strong s-quadrangular digraph must have a cycle
/// factor, and those with maximum semi-degree at most 3 must yield a
/// validated Hamilton cycle from the merge/exchange construction.
///
/// Graph spaces: every connected s-quadrangular graph on at least 3 vertices
/// must have a 2-factor, and be hamiltonian when its maximum degree is at
/// most 4; every graph with minimum degree at least 2 and no 2-factor must
/// get a partition passing all seven properties.
pub fn audit_theorems(space: EnumSpace, threads: usize) -> Result<TheoremAudit> {
    let size = exhaustive_size(&space)?;
    let units = size.div_ceil(CHUNK);
    scan(units, threads, |u, a: &mut TheoremAudit| {
        let mut dec = Decoder::new(space);
        for mask in u * CHUNK..((u + 1) * CHUNK).min(size) {
            dec.load(mask);
            match space.mode {
                Mode::Digraph => audit_digraph(&dec.digraph(), mask, a),
                Mode::Graph => audit_graph(&dec.graph(), mask, a),
            }
        }
    })
}

fn audit_digraph(d: &Digraph, mask: u64, a: &mut TheoremAudit) {
    if d.order() < 2 || !d.is_strong() || !d.is_s_quadrangular() {
        return;
    }
    a.factor_checked += 1;
    match find_cycle_factor(d) {
        Ok(FactorOutcome::Factor(f)) if f.validate(d).is_ok() => {}
        _ => a.factor_failures.push(mask),
    }
    if d.max_semidegree() <= 3 {
        a.exchange_checked += 1;
        match hamilton_by_exchange(d) {
            Ok(c) if is_hamilton_cycle(d, &c) => {}
            _ => a.exchange_failures.push(mask),
        }
    }
}

fn audit_graph(g: &UGraph, mask: u64, a: &mut TheoremAudit) {
    let n = g.order();
    let min_deg = g.min_degree();
    let mut two_factor = None;
    if n >= 3 && g.is_connected() && g.is_s_quadrangular() {
        a.two_factor_checked += 1;
        two_factor = Some(find_2_factor(g).is_some());
        if two_factor != Some(true) {
            a.two_factor_failures.push(mask);
        }
        if g.max_degree() <= 4 {
            a.hamilton_checked += 1;
            if hamilton_cycle_graph(g).is_none() {
                a.hamilton_failures.push(mask);
            }
        }
    }
    if min_deg >= 2 && n <= crate::ffactor::MAX_TUTTE_ORDER {
        let has = two_factor.unwrap_or_else(|| find_2_factor(g).is_some());
        if !has {
            a.partition_checked += 1;
            let ok = build_partition(g)
                .ok()
                .and_then(|p| verify_partition(g, &p).ok())
                .is_some_and(|v| v.is_empty());
            if !ok {
                a.partition_failures.push(mask);
            }
        }
    }
}
