//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use squadgraph::dicycle::{find_cycle_factor, hamilton_cycle, FactorOutcome};
use squadgraph::ffactor::{
    build_partition, find_2_factor, find_f_factor, tutte_check, verify_partition, DegreeTargets,
};
use squadgraph::matrix::{random_unitary, Complex64};
use squadgraph::verify::{audit_theorems, sample_verify, verify_conjecture};
use squadgraph::{ComplexMatrix, Digraph, EnumSpace, MatrixKind, UGraph, VerificationReport, VertexSet};

const SINGLE_THREAD_LIMIT: Duration = Duration::from_secs(300);
const EIGHT_THREAD_LIMIT: Duration = Duration::from_secs(60);
const HALL_SAMPLES: usize = 10_000;
const HALL_MAX_N: usize = 10;
const TUTTE_SAMPLES: usize = 10_000;
const TUTTE_MAX_N: usize = 10;
const PARTITION_SAMPLES: usize = 1_000;
const PARTITION_MAX_N: usize = 12;
const GRAPH_CORPUS_MAX_N: usize = 7;
const UNITARY_SAMPLES: u64 = 1_000;
const UNITARY_MAX_N: usize = 8;
const MATRIX_TOL: f64 = 1e-9;
const SAMPLE_N: usize = 6;
const SAMPLE_COUNT: u64 = 1_000_000;
const SAMPLE_SEED: u64 = 1;

type Verdict = Result<String, String>;

fn binary(args: &[&str]) -> Result<(VerificationReport, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_squadgraph"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let report = VerificationReport::from_json(stdout.trim())
        .map_err(|e| format!("`{}`: bad report ({e}): {stdout}", args.join(" ")))?;
    let code = out.status.code().unwrap_or(-1);
    let expected = if report.holds() { 0 } else { 1 };
    if code != expected {
        return Err(format!("`{}` exited {code}", args.join(" ")));
    }
    Ok((report, took))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_conjecture() -> Verdict {
    let mut summary = Vec::new();
    for n in 2..=5 {
        let ns = n.to_string();
        let (r, took) = binary(&["verify", "--mode", "digraph", "--n", &ns, "--threads", "1"])?;
        ensure(r.holds(), || format!("n={n}: counterexamples {:?}", r.counterexamples))?;
        ensure(r.total == 1 << (n * (n - 1)), || format!("n={n}: total {}", r.total))?;
        if n == 5 {
            ensure(took < SINGLE_THREAD_LIMIT, || {
                format!("n=5 single-threaded took {took:?}")
            })?;
            let (r8, took8) = binary(&["verify", "--mode", "digraph", "--n", "5", "--threads", "8"])?;
            ensure(r8.holds(), || "n=5 at 8 threads found counterexamples".into())?;
            ensure(took8 < EIGHT_THREAD_LIMIT, || {
                format!("n=5 at 8 threads took {took8:?}")
            })?;
            summary.push(format!(
                "n=5 in {:.2}s (1 thread), {:.2}s (8 threads)",
                took.as_secs_f64(),
                took8.as_secs_f64()
            ));
        }
        summary.push(format!(
            "n={n}: {}/{} strong s-quadrangular hamiltonian",
            r.hamiltonian, r.squad
        ));
    }
    Ok(summary.join("; "))
}

fn c2_c3_audit() -> (Verdict, Verdict) {
    let mut factor = (0u64, Vec::new());
    let mut exchange = (0u64, Vec::new());
    let mut squad = 0;
    for n in 2..=5 {
        let space = EnumSpace::digraphs(n);
        let a = match audit_theorems(space, 1) {
            Ok(a) => a,
            Err(e) => return (Err(e.to_string()), Err(e.to_string())),
        };
        squad += verify_conjecture(space, 1).map(|r| r.squad).unwrap_or(u64::MAX);
        factor.0 += a.factor_checked;
        factor.1.extend(a.factor_failures);
        exchange.0 += a.exchange_checked;
        exchange.1.extend(a.exchange_failures);
    }
    let c2 = if !factor.1.is_empty() {
        Err(format!("no cycle factor for masks {:x?}", factor.1))
    } else if factor.0 != squad {
        Err(format!(
            "checked {} of {squad} strong s-quadrangular digraphs",
            factor.0
        ))
    } else {
        Ok(format!(
            "{} strong s-quadrangular digraphs (n<=5) all have cycle factors",
            factor.0
        ))
    };
    let c3 = if !exchange.1.is_empty() {
        Err(format!("merge/exchange failed for masks {:x?}", exchange.1))
    } else if exchange.0 == 0 {
        Err("no instance with max semi-degree <= 3".into())
    } else {
        Ok(format!(
            "{} instances with max semi-degree <= 3 yield arc-validated Hamilton cycles",
            exchange.0
        ))
    };
    (c2, c3)
}

fn hall_oracle(d: &Digraph) -> bool {
    let n = d.order();
    (0u32..1 << n).all(|x| {
        let members: Vec<usize> = (0..n).filter(|&i| x >> i & 1 == 1).collect();
        let nb = (0..n)
            .filter(|&w| members.iter().any(|&u| u != w && d.has_arc(u, w)))
            .count();
        nb >= members.len()
    })
}

fn c4_hall() -> Verdict {
    let mut r = ChaCha8Rng::seed_from_u64(4);
    let (mut yes, mut no) = (0, 0);
    for i in 0..HALL_SAMPLES {
        let n = r.gen_range(2..=HALL_MAX_N);
        let p = [0.1, 0.2, 0.3, 0.45][i % 4];
        let mut d = Digraph::new(n).unwrap();
        for u in 0..n {
            for v in 0..n {
                if (u != v || i % 5 == 0) && r.gen_bool(p) {
                    d.add_arc(u, v).unwrap();
                }
            }
        }
        let found = match find_cycle_factor(&d).map_err(|e| e.to_string())? {
            FactorOutcome::Factor(f) => {
                f.validate(&d).map_err(|e| e.to_string())?;
                true
            }
            FactorOutcome::Violator(_) => false,
        };
        ensure(found == hall_oracle(&d), || format!("disagreement on {d:?}"))?;
        if found {
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok(format!(
        "{HALL_SAMPLES} digraphs (n<={HALL_MAX_N}): {yes} with, {no} without a cycle factor"
    ))
}

fn c5_c7_corpus() -> (Verdict, Result<u64, String>) {
    let mut two = (0u64, Vec::new());
    let mut ham = (0u64, Vec::new());
    let mut part = (0u64, Vec::new());
    for n in 1..=GRAPH_CORPUS_MAX_N {
        let a = match audit_theorems(EnumSpace::graphs(n), 1) {
            Ok(a) => a,
            Err(e) => return (Err(e.to_string()), Err(e.to_string())),
        };
        two.0 += a.two_factor_checked;
        two.1.extend(a.two_factor_failures.iter().map(|m| (n, *m)));
        ham.0 += a.hamilton_checked;
        ham.1.extend(a.hamilton_failures.iter().map(|m| (n, *m)));
        part.0 += a.partition_checked;
        part.1.extend(a.partition_failures.iter().map(|m| (n, *m)));
    }
    let c5 = if !two.1.is_empty() || !ham.1.is_empty() {
        Err(format!("2-factor failures {:?}, hamilton failures {:?}", two.1, ham.1))
    } else {
        Ok(format!(
            "all graphs n<={GRAPH_CORPUS_MAX_N}: {} connected s-quadrangular (n>=3) have 2-factors, {} with max degree <= 4 are hamiltonian",
            two.0, ham.0
        ))
    };
    let c7 = if part.1.is_empty() {
        Ok(part.0)
    } else {
        Err(format!("partition failures {:?}", part.1))
    };
    (c5, c7)
}

fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> UGraph {
    let mut g = UGraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn c6_tutte() -> Verdict {
    let mut r = ChaCha8Rng::seed_from_u64(6);
    let mut with = 0;
    for i in 0..TUTTE_SAMPLES {
        let n = r.gen_range(1..=TUTTE_MAX_N);
        let g = random_graph(&mut r, n, [0.25, 0.4, 0.6][i % 3]);
        let f = match i % 3 {
            0 => DegreeTargets::constant(n, 1),
            1 => DegreeTargets::constant(n, 2),
            _ => DegreeTargets::new((0..n).map(|v| r.gen_range(1..=g.degree(v).max(1) as u32)).collect()),
        }
        .unwrap();
        let factor = find_f_factor(&g, &f).map_err(|e| e.to_string())?;
        let violator = tutte_check(&g, &f).map_err(|e| e.to_string())?;
        ensure(factor.is_some() != violator.is_some(), || {
            format!("disagreement on {g:?} with {f:?}")
        })?;
        with += factor.is_some() as usize;
    }
    Ok(format!(
        "{TUTTE_SAMPLES} graphs (n<={TUTTE_MAX_N}): {with} with an f-factor, rest with a Tutte violator"
    ))
}

/// A graph of minimum degree >= 2 without a 2-factor: an independent set
/// `T` with `|T| > |S|`, each vertex of `T` joined only to at least two
/// vertices of `S`, plus a random rest. Vertices are shuffled.
fn planted(r: &mut ChaCha8Rng, n: usize) -> UGraph {
    let s = r.gen_range(2..=(n - 1) / 2);
    let t = r.gen_range(s + 1..=n - s);
    let mut edges = Vec::new();
    for tv in s..s + t {
        let mut picks: Vec<usize> = (0..s).filter(|_| r.gen_bool(0.6)).collect();
        while picks.len() < 2 {
            let x = r.gen_range(0..s);
            if !picks.contains(&x) {
                picks.push(x);
            }
        }
        edges.extend(picks.into_iter().map(|x| (x, tv)));
    }
    let rest: Vec<usize> = (s + t..n).collect();
    let others: Vec<usize> = (0..s).chain(rest.iter().copied()).collect();
    for &u in &rest {
        for &v in &others {
            if u != v && r.gen_bool(0.5) {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    for a in 0..s {
        for b in a + 1..s {
            if r.gen_bool(0.3) {
                edges.push((a, b));
            }
        }
    }
    let mut g = UGraph::from_edges(n, &edges).unwrap();
    // lift low-degree vertices: S into T, the rest into S
    for x in 0..s {
        let mut tv = s;
        while g.degree(x) < 2 {
            g.add_edge(x, tv).unwrap();
            tv += 1;
        }
    }
    for &u in &rest {
        let mut x = 0;
        while g.degree(u) < 2 {
            g.add_edge(u, x).unwrap();
            x += 1;
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, r.gen_range(0..=i));
    }
    g.permuted(&perm).unwrap()
}

fn c7_partitions(corpus: Result<u64, String>) -> Verdict {
    let corpus = corpus?;
    ensure(corpus > 0, || "no 2-factor-free graph in the corpus".into())?;
    let mut r = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    let mut largest = 0;
    while checked < PARTITION_SAMPLES {
        let n = r.gen_range(5..=PARTITION_MAX_N);
        let g = if checked % 4 == 3 {
            random_graph(&mut r, n, 0.3)
        } else {
            planted(&mut r, n)
        };
        if g.min_degree() < 2 || find_2_factor(&g).is_some() {
            ensure(checked % 4 == 3, || {
                format!("planted generator produced a 2-factor: {g:?}")
            })?;
            continue;
        }
        let p = build_partition(&g).map_err(|e| format!("{g:?}: {e}"))?;
        let v = verify_partition(&g, &p).map_err(|e| e.to_string())?;
        ensure(v.is_empty(), || {
            format!(
                "{g:?}: {}",
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
            )
        })?;
        largest = largest.max(n);
        checked += 1;
    }
    let bowtie = UGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
    let p = build_partition(&bowtie).map_err(|e| e.to_string())?;
    ensure(
        p.s() == VertexSet::from_iter([0]) && p.t().len() == 2 && p.o().len() == 2 && p.r().is_empty() && p.w() == 1,
        || format!("bowtie partition {p:?}"),
    )?;
    ensure(
        verify_partition(&bowtie, &p).map_err(|e| e.to_string())?.is_empty(),
        || "bowtie violations".into(),
    )?;
    Ok(format!(
        "{corpus} corpus graphs (n<={GRAPH_CORPUS_MAX_N}) and {checked} random graphs (n<={largest}) pass all seven properties; bowtie S={{0}}, T={}, O={}, w=1",
        p.t(),
        p.o()
    ))
}

fn sparse_unitary(r: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(n).unwrap();
    for _ in 0..r.gen_range(0..n + 3) {
        let i = r.gen_range(0..n);
        let j = (i + r.gen_range(1..n)) % n;
        let theta: f64 = r.gen_range(0.1..1.4);
        let phase = Complex64::from_polar(1.0, r.gen_range(0.0..std::f64::consts::TAU));
        let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for (k, row) in rows.iter_mut().enumerate() {
            row[k] = Complex64::new(1.0, 0.0);
        }
        rows[i][i] = Complex64::new(theta.cos(), 0.0);
        rows[i][j] = -phase.conj() * theta.sin();
        rows[j][i] = phase * theta.sin();
        rows[j][j] = Complex64::new(theta.cos(), 0.0);
        m = ComplexMatrix::from_rows(rows).unwrap().mul(&m).unwrap();
    }
    m
}

fn c8_unitary() -> Verdict {
    let mut matrices = Vec::new();
    for seed in 0..UNITARY_SAMPLES {
        let n = 1 + (seed as usize % UNITARY_MAX_N);
        matrices.push(random_unitary(n, seed).map_err(|e| e.to_string())?);
    }
    let mut kinds: Vec<MatrixKind> = (1..=UNITARY_MAX_N).map(MatrixKind::Dft).collect();
    kinds.extend((0..=3).map(MatrixKind::Sylvester));
    kinds.push(MatrixKind::Weighing43);
    let mut r = ChaCha8Rng::seed_from_u64(8);
    for n in 1..=UNITARY_MAX_N {
        for _ in 0..5 {
            let mut p: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                p.swap(i, r.gen_range(0..=i));
            }
            kinds.push(MatrixKind::Permutation(p));
        }
    }
    let catalog = kinds.len();
    for k in kinds {
        matrices.push(k.build().map_err(|e| e.to_string())?);
    }
    for _ in 0..UNITARY_SAMPLES {
        let n = r.gen_range(2..=UNITARY_MAX_N);
        matrices.push(sparse_unitary(&mut r, n));
    }
    let (mut strong, mut sparse_strong) = (0, 0);
    for m in &matrices {
        ensure(m.is_unitary(MATRIX_TOL), || format!("not unitary: {m:?}"))?;
        let d = m.digraph(MATRIX_TOL);
        ensure(d.is_s_quadrangular(), || format!("digraph not s-quadrangular: {m:?}"))?;
        if d.is_strong() {
            ensure(d.order() == 1 || hamilton_cycle(&d).is_some(), || {
                format!("strong but no Hamilton cycle: {m:?}")
            })?;
            strong += 1;
            if d.arc_count() < d.order() * d.order() {
                sparse_strong += 1;
            }
        }
    }
    Ok(format!(
        "{} matrices ({UNITARY_SAMPLES} random, {catalog} catalog, {UNITARY_SAMPLES} rotation products): all s-quadrangular; {strong} strong ({sparse_strong} not complete) all hamiltonian",
        matrices.len()
    ))
}

fn c9_determinism() -> Verdict {
    for space in [
        EnumSpace::digraphs(5),
        EnumSpace::graphs(6),
        EnumSpace::digraphs_with_loops(4),
    ] {
        let base = verify_conjecture(space, 1).map_err(|e| e.to_string())?.fingerprint();
        for t in [2, 4, 8] {
            let other = verify_conjecture(space, t).map_err(|e| e.to_string())?.fingerprint();
            ensure(other == base, || format!("{space:?} differs at {t} threads"))?;
        }
    }
    for seed in [0, 1, 42] {
        let a = random_unitary(6, seed).map_err(|e| e.to_string())?.to_text();
        ensure(a == random_unitary(6, seed).unwrap().to_text(), || {
            format!("random_unitary seed {seed} unstable")
        })?;
    }
    let space = EnumSpace::digraphs(6);
    let a = sample_verify(space, 100_000, 5, 1)
        .map_err(|e| e.to_string())?
        .fingerprint();
    for t in [1, 2, 8] {
        let b = sample_verify(space, 100_000, 5, t)
            .map_err(|e| e.to_string())?
            .fingerprint();
        ensure(a == b, || format!("sample_verify differs at {t} threads"))?;
    }
    Ok("reports identical (timing and thread count excluded) across 1/2/4/8 threads; seeded outputs stable".into())
}

fn c10_sampled() -> Verdict {
    let (n, count, seed) = (SAMPLE_N.to_string(), SAMPLE_COUNT.to_string(), SAMPLE_SEED.to_string());
    let (r, took) = binary(&[
        "verify", "--mode", "digraph", "--n", &n, "--sample", &count, "--seed", &seed,
    ])?;
    if !r.holds() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/counterexamples_n6.json");
        let _ = std::fs::write(path, r.to_json());
        return Err(format!("counterexamples {:x?} saved to {path}", r.counterexamples));
    }
    ensure(r.total == SAMPLE_COUNT, || format!("total {}", r.total))?;
    Ok(format!(
        "{} samples: {} strong, {} s-quadrangular, all hamiltonian ({:.2}s)",
        r.total,
        r.strong,
        r.squad,
        took.as_secs_f64()
    ))
}

fn main() {
    let mut results: Vec<(&str, Verdict)> = Vec::new();
    let mut record = |name, v: Verdict| {
        match &v {
            Ok(msg) => println!("PASS {name}: {msg}"),
            Err(msg) => println!("FAIL {name}: {msg}"),
        }
        results.push((name, v));
    };
    record("C1 conjecture n<=5", c1_conjecture());
    let (c2, c3) = c2_c3_audit();
    record("C2 cycle factors", c2);
    record("C3 semi-degree 3 construction", c3);
    record("C4 Hall oracle", c4_hall());
    let (c5, corpus) = c5_c7_corpus();
    record("C5 graph corpus", c5);
    record("C6 Tutte equivalence", c6_tutte());
    record("C7 partition soundness", c7_partitions(corpus));
    record("C8 unitary patterns", c8_unitary());
    record("C9 determinism", c9_determinism());
    record("C10 sampled n=6", c10_sampled());
    let failed = results.iter().filter(|(_, v)| v.is_err()).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
