//! The `squadgraph` command line.
//!
//! Exit codes: 0 success, 1 the property fails or nothing was found,
//! 2 usage or parse error, 3 capacity exceeded, 4 a hypothesis of the
//! requested construction does not hold.

mod graph_file;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use squadgraph::dicycle::{
    find_cycle_factor, hamilton_by_exchange_observed, hamilton_cycle, ExchangeFailure, FactorOutcome, Step,
};
use squadgraph::ffactor::{
    build_partition, find_2_factor, hamilton_cycle_graph, tutte_check, verify_partition, DegreeTargets, PartitionError,
};
use squadgraph::matrix::DEFAULT_TOL;
use squadgraph::verify::{sample_verify, verify_conjecture, Instance};
use squadgraph::{ComplexMatrix, Digraph, EnumSpace, Error, MatrixKind, UGraph};

pub use graph_file::{parse_graph_file, write_graph_file};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_HYPOTHESIS: i32 = 4;

#[derive(Parser)]
#[command(
    name = "squadgraph",
    version,
    about = "Predicates and solvers for s-quadrangular digraphs and graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural summary of a graph, digraph or matrix file.
    Check {
        file: PathBuf,
        /// Entries with modulus at most this are zero (matrix files only).
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Cycle factor or Hall violator (digraphs); 2-factor or Tutte violator (graphs).
    Factor {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Hamilton cycle search.
    Hamilton {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Partition certifying that a graph has no 2-factor, with each property checked.
    Partition { file: PathBuf },
    /// Emits a unitary matrix or its digraph.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Matrix order.
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Image of 0, 1, .. for `--kind permutation`; the cyclic shift by default.
        #[arg(long, value_delimiter = ',')]
        perm: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Emit::Matrix)]
        emit: Emit,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Checks that every strong (connected) s-quadrangular instance is hamiltonian.
    Verify {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        n: usize,
        /// Digraph spaces: allow loops.
        #[arg(long)]
        loops: bool,
        /// Sample this many uniform instances instead of enumerating.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0, requires = "sample")]
        seed: u64,
        /// Worker threads; all available cores by default.
        #[arg(long)]
        threads: Option<usize>,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Backtracking search.
    Exact,
    /// Merge/exchange construction; needs a strong s-quadrangular digraph
    /// with maximum semi-degree at most 3.
    Theorem23,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Dft,
    Sylvester,
    Weighing43,
    Permutation,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Matrix,
    Digraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Digraph,
    Graph,
}

/// A failure that ends the command with a message and an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { file, tol } => check(&load(&file, tol)?, out),
        Command::Factor { file, tol } => factor(&load(&file, tol)?, out),
        Command::Hamilton { file, method, tol } => hamilton(&load(&file, tol)?, method, out),
        Command::Partition { file } => partition(&load(&file, DEFAULT_TOL)?, out),
        Command::Gen {
            kind,
            size,
            seed,
            perm,
            emit,
            tol,
        } => gen(kind, size, seed, perm, emit, tol, out),
        Command::Verify {
            mode,
            n,
            loops,
            sample,
            seed,
            threads,
            json,
        } => verify(mode, n, loops, sample, seed, threads, json.as_deref(), out),
    }
}

/// A parsed input file; matrix files become their digraph.
enum Input {
    Digraph(Digraph),
    Matrix(ComplexMatrix, Digraph, f64),
    Graph(UGraph),
}

fn load(path: &Path, tol: f64) -> Result<Input, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let located = |e: Error| -> Failure {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    };
    if graph_file::header_keyword(&text) == Some("matrix") {
        if tol.is_nan() || tol < 0.0 {
            return Err(Failure::usage("--tol must be nonnegative"));
        }
        let m = ComplexMatrix::from_text(&text).map_err(located)?;
        let d = m.digraph(tol);
        return Ok(Input::Matrix(m, d, tol));
    }
    Ok(match parse_graph_file(&text).map_err(located)? {
        Instance::Digraph(d) => Input::Digraph(d),
        Instance::Graph(g) => Input::Graph(g),
    })
}

fn set(v: &[usize]) -> String {
    let items: Vec<_> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn cycle(c: &[usize]) -> String {
    let items: Vec<_> = c.iter().chain(c.first()).map(usize::to_string).collect();
    items.join(" -> ")
}

fn check(input: &Input, out: &mut dyn Write) -> Outcome {
    match input {
        Input::Digraph(d) | Input::Matrix(_, d, _) => {
            if let Input::Matrix(m, _, tol) = input {
                writeln!(out, "matrix order: {}", m.order())?;
                writeln!(out, "unitary: {}", m.is_unitary(*tol))?;
            }
            writeln!(out, "kind: digraph")?;
            writeln!(out, "vertices: {}", d.order())?;
            writeln!(out, "arcs: {}", d.arc_count())?;
            writeln!(out, "strong: {}", d.is_strong())?;
            writeln!(out, "s-quadrangular: {}", d.is_s_quadrangular())?;
            writeln!(out, "max semi-degree: {}", d.max_semidegree())?;
            writeln!(out, "eulerian: {}", d.is_eulerian())?;
        }
        Input::Graph(g) => {
            let even = g.vertices().iter().all(|v| g.degree(v) % 2 == 0);
            writeln!(out, "kind: graph")?;
            writeln!(out, "vertices: {}", g.order())?;
            writeln!(out, "edges: {}", g.edge_count())?;
            writeln!(out, "connected: {}", g.is_connected())?;
            writeln!(out, "s-quadrangular: {}", g.is_s_quadrangular())?;
            writeln!(out, "max degree: {}", g.max_degree())?;
            writeln!(out, "eulerian: {}", even && g.is_connected())?;
        }
    }
    Ok(EXIT_OK)
}

fn factor(input: &Input, out: &mut dyn Write) -> Outcome {
    match input {
        Input::Digraph(d) | Input::Matrix(_, d, _) => match find_cycle_factor(d)? {
            FactorOutcome::Factor(f) => {
                writeln!(out, "cycle factor: {} cycles", f.len())?;
                for c in f.cycles() {
                    writeln!(out, "  {}", cycle(c))?;
                }
                Ok(EXIT_OK)
            }
            FactorOutcome::Violator(h) => {
                let x: Vec<_> = h.set.iter().collect();
                let nbhd: Vec<_> = h
                    .set
                    .iter()
                    .fold(squadgraph::VertexSet::EMPTY, |acc, v| {
                        acc.union(d.neighbors(v, h.side).without(v))
                    })
                    .iter()
                    .collect();
                let side = match h.side {
                    squadgraph::Direction::Out => "out",
                    squadgraph::Direction::In => "in",
                };
                writeln!(out, "no cycle factor")?;
                writeln!(
                    out,
                    "hall violator: X = {} ({side}-neighbourhood {})",
                    set(&x),
                    set(&nbhd)
                )?;
                Ok(EXIT_NEGATIVE)
            }
        },
        Input::Graph(g) => {
            if let Some(edges) = find_2_factor(g) {
                writeln!(out, "2-factor: {} edges", edges.len())?;
                for (u, v) in edges {
                    writeln!(out, "  {u} {v}")?;
                }
                return Ok(EXIT_OK);
            }
            writeln!(out, "no 2-factor")?;
            let f = DegreeTargets::constant(g.order(), 2)?;
            if let Some(t) = tutte_check(g, &f)? {
                let s: Vec<_> = t.s.iter().collect();
                let tt: Vec<_> = t.t.iter().collect();
                writeln!(
                    out,
                    "tutte violator: S = {}, T = {} ({} > {})",
                    set(&s),
                    set(&tt),
                    t.lhs,
                    t.rhs
                )?;
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn hamilton(input: &Input, method: Method, out: &mut dyn Write) -> Outcome {
    let found = match (input, method) {
        (Input::Graph(_), Method::Theorem23) => {
            return Err(Failure::usage("--method theorem23 applies to digraphs only"));
        }
        (Input::Graph(g), Method::Exact) => match g.order() {
            1 => Some(vec![0]),
            2 => g.has_edge(0, 1).then(|| vec![0, 1]),
            _ => hamilton_cycle_graph(g),
        },
        (Input::Digraph(d) | Input::Matrix(_, d, _), Method::Exact) => {
            if d.order() == 1 {
                Some(vec![0])
            } else {
                hamilton_cycle(d)
            }
        }
        (Input::Digraph(d) | Input::Matrix(_, d, _), Method::Theorem23) => {
            let mut merges = 0;
            let mut exchanges = 0;
            let result = hamilton_by_exchange_observed(d, |_, step| match step {
                Some(Step::Merge { .. }) => merges += 1,
                Some(Step::Exchange { .. }) => exchanges += 1,
                None => {}
            });
            match result {
                Ok(c) => {
                    writeln!(out, "steps: {merges} merges, {exchanges} exchanges")?;
                    Some(c)
                }
                Err(e) => return exchange_failure(d, e, out),
            }
        }
    };
    match found {
        Some(c) => {
            writeln!(out, "hamilton cycle: {}", cycle(&c))?;
            Ok(EXIT_OK)
        }
        None => {
            writeln!(out, "no hamilton cycle")?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn exchange_failure(d: &Digraph, e: ExchangeFailure, out: &mut dyn Write) -> Outcome {
    let hypothesis = match &e {
        ExchangeFailure::TooFewVertices => format!("at least 2 vertices required, found {}", d.order()),
        ExchangeFailure::NotStrong => "digraph is not strong".to_string(),
        ExchangeFailure::NotSQuadrangular => "digraph is not s-quadrangular".to_string(),
        ExchangeFailure::SemidegreeTooLarge(k) => format!("Δ⁰ = {k} exceeds 3 (maximum semi-degree)"),
        ExchangeFailure::NoCycleFactor(_) | ExchangeFailure::Stuck(_) => {
            writeln!(out, "construction failed: {e}")?;
            return Ok(EXIT_NEGATIVE);
        }
    };
    writeln!(out, "hypothesis violation: {hypothesis}")?;
    Ok(EXIT_HYPOTHESIS)
}

fn partition(input: &Input, out: &mut dyn Write) -> Outcome {
    let Input::Graph(g) = input else {
        return Err(Failure::usage("partition expects an undirected graph file"));
    };
    let p = match build_partition(g) {
        Ok(p) => p,
        Err(PartitionError::TooLarge(n)) => {
            return Err(Failure {
                code: EXIT_CAPACITY,
                message: PartitionError::TooLarge(n).to_string(),
            })
        }
        Err(e) => {
            writeln!(
                out,
                "hypothesis violation: {}",
                e.to_string().trim_start_matches("hypothesis failed: ")
            )?;
            return Ok(EXIT_HYPOTHESIS);
        }
    };
    let list = |v: squadgraph::VertexSet| set(&v.iter().collect::<Vec<_>>());
    writeln!(out, "S = {}", list(p.s()))?;
    writeln!(out, "T = {}", list(p.t()))?;
    writeln!(out, "O = {}", list(p.o()))?;
    writeln!(out, "R = {}", list(p.r()))?;
    writeln!(out, "w = {}, oc = {}, e(T,O) = {}", p.w(), p.oc(), p.e_to())?;
    let violations = verify_partition(g, &p)?;
    for prop in ["i", "ii", "iii", "iv", "v", "vi", "vii"] {
        let failed: Vec<_> = violations.iter().filter(|v| v.property() == prop).collect();
        if failed.is_empty() {
            writeln!(out, "({prop}) ok")?;
        }
        for v in failed {
            writeln!(out, "{v}")?;
        }
    }
    Ok(if violations.is_empty() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn gen(
    kind: Kind,
    size: usize,
    seed: u64,
    perm: Option<Vec<usize>>,
    emit: Emit,
    tol: f64,
    out: &mut dyn Write,
) -> Outcome {
    if perm.is_some() && !matches!(kind, Kind::Permutation) {
        return Err(Failure::usage("--perm applies to --kind permutation only"));
    }
    let m = match kind {
        Kind::Dft => MatrixKind::Dft(size).build()?,
        Kind::Sylvester => {
            if !size.is_power_of_two() {
                return Err(Failure::usage(format!(
                    "sylvester size must be a power of two, got {size}"
                )));
            }
            MatrixKind::Sylvester(size.trailing_zeros()).build()?
        }
        Kind::Weighing43 => {
            if size != 4 {
                return Err(Failure::usage(format!("weighing43 has size 4, got {size}")));
            }
            MatrixKind::Weighing43.build()?
        }
        Kind::Permutation => {
            let p = perm.unwrap_or_else(|| (0..size).map(|i| (i + 1) % size.max(1)).collect());
            if p.len() != size {
                return Err(Failure::usage(format!(
                    "--perm has {} entries, expected {size}",
                    p.len()
                )));
            }
            MatrixKind::Permutation(p).build()?
        }
        Kind::Random => squadgraph::matrix::random_unitary(size, seed)?,
    };
    match emit {
        Emit::Matrix => out.write_all(m.to_text().as_bytes())?,
        Emit::Digraph => out.write_all(write_graph_file(&Instance::Digraph(m.digraph(tol))).as_bytes())?,
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    mode: ModeArg,
    n: usize,
    loops: bool,
    sample: Option<u64>,
    seed: u64,
    threads: Option<usize>,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    let space = match mode {
        ModeArg::Digraph if loops => EnumSpace::digraphs_with_loops(n),
        ModeArg::Digraph => EnumSpace::digraphs(n),
        ModeArg::Graph if loops => return Err(Failure::usage("--loops applies to digraph spaces only")),
        ModeArg::Graph => EnumSpace::graphs(n),
    };
    let threads = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from));
    if threads == 0 {
        return Err(Failure::usage("--threads must be positive"));
    }
    let report = match sample {
        Some(count) => sample_verify(space, count, seed, threads)?,
        None => verify_conjecture(space, threads)?,
    };
    let text = report.to_json();
    writeln!(out, "{text}")?;
    if let Some(path) = json {
        std::fs::write(path, format!("{text}\n")).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(if report.holds() { EXIT_OK } else { EXIT_NEGATIVE })
}
