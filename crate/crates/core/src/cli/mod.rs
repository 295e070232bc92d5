//! Command-line front end.
//!
//! Commands: `charpoly`, `verify`, `cayley`, `basic-figures`, `roots`.
//! Global flags: `--json`, `--seed <u64>`, `--force`.
//!
//! Exit codes: 0 success, 1 methods disagree or a check failed, 2 bad input
//! (parse error, unreadable file, invalid argument), 3 size cap exceeded,
//! 4 root finding failed.

mod report;
pub mod roots;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

pub use report::{Disagreement, Method, MethodReport, MethodResult};

use crate::cayley;
use crate::deletion::{CharpolyEngine, LeafMethod};
use crate::graph::Pseudograph;
use crate::oracle;
use crate::poly::IntPolynomial;
use crate::sachs::{self, ENUMERATION_ORDER_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SIZE_CAP: i32 = 3;
pub const EXIT_NO_CONVERGENCE: i32 = 4;

/// Largest `n` the Cayley commands accept without `--force`.
pub const CAYLEY_CAP: usize = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "loopgraph",
    version,
    about = "Exact characteristic polynomials of graphs with loops"
)]
pub struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every random choice
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Lift the size caps
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic polynomial of a graph file
    Charpoly {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Sachs)]
        method: Method,
    },
    /// Run every method and compare; without a file, sweep random graphs
    Verify {
        file: Option<PathBuf>,
        /// Number of random pseudographs when no file is given
        #[arg(long, default_value_t = 50)]
        random: usize,
        /// Largest order of the random pseudographs
        #[arg(long, default_value_t = 10)]
        max_order: usize,
        /// Random vertex orders tried by vertex deletion
        #[arg(long, default_value_t = 3)]
        orderings: usize,
    },
    /// Unitary addition Cayley graph G_n, or X(A_n) with --anticirculant
    Cayley {
        n: usize,
        #[arg(long)]
        anticirculant: bool,
        /// Write the graph in text format to this path
        #[arg(long, value_name = "PATH")]
        emit_graph: Option<PathBuf>,
        /// Print the λ_r eigenvalue report
        #[arg(long)]
        spectrum: bool,
        /// Compare with the matrix characteristic polynomial
        #[arg(long)]
        verify: bool,
    },
    /// Basic-figure counts by order and shape
    BasicFigures {
        file: PathBuf,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Real roots of the characteristic polynomial
    Roots {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Charpoly { file, method } => cmd_charpoly(cli, out, file, *method),
        Command::Verify {
            file,
            random,
            max_order,
            orderings,
        } => match file {
            Some(path) => cmd_verify_file(cli, out, path, *orderings),
            None => cmd_verify_random(cli, out, *random, *max_order, *orderings),
        },
        Command::Cayley {
            n,
            anticirculant,
            emit_graph,
            spectrum,
            verify,
        } => cmd_cayley(
            cli,
            out,
            *n,
            *anticirculant,
            emit_graph.as_deref(),
            *spectrum,
            *verify,
        ),
        Command::BasicFigures { file, order } => cmd_basic_figures(cli, out, file, *order),
        Command::Roots { file, tolerance } => cmd_roots(cli, out, file, *tolerance),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(EXIT_INPUT, e.to_string())
}

/// Reads and parses a graph file; parse errors carry the line number.
pub fn load_graph(path: &Path) -> crate::Result<Pseudograph> {
    let text = std::fs::read_to_string(path).map_err(|e| crate::Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    text.parse()
}

fn load(path: &Path) -> std::result::Result<Pseudograph, Failure> {
    load_graph(path).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn check_cap(cli: &Cli, g: &Pseudograph) -> std::result::Result<(), Failure> {
    if g.order() > ENUMERATION_ORDER_CAP && !cli.force {
        return Err(Failure::new(
            EXIT_SIZE_CAP,
            format!(
                "graph has {} vertices; enumeration methods refuse more than {ENUMERATION_ORDER_CAP} without --force",
                g.order()
            ),
        ));
    }
    Ok(())
}

fn poly_json(n: usize, p: &IntPolynomial, method: &str) -> serde_json::Value {
    json!({ "n": n, "coeffs": p.to_decimal_strings(), "method": method })
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> std::result::Result<(), Failure> {
    writeln!(out, "{value}").map_err(io_failure)
}

fn cmd_charpoly(cli: &Cli, out: &mut dyn Write, file: &Path, method: Method) -> CmdResult {
    let g = load(file)?;
    if method.enumerates() {
        check_cap(cli, &g)?;
    }
    let phi = method.charpoly(&g, None);
    if cli.json {
        emit_json(out, &poly_json(g.order(), &phi, method.name()))?;
    } else {
        writeln!(out, "{phi}").map_err(io_failure)?;
    }
    Ok(EXIT_OK)
}

fn random_orders(rng: &mut ChaCha8Rng, order: usize, count: usize) -> Vec<Vec<usize>> {
    (0..count)
        .map(|_| {
            let mut vs: Vec<usize> = (0..order).collect();
            vs.shuffle(rng);
            let k = if order == 0 {
                0
            } else {
                rng.gen_range(1..=order)
            };
            vs.truncate(k);
            vs
        })
        .collect()
}

fn cmd_verify_file(cli: &Cli, out: &mut dyn Write, file: &Path, orderings: usize) -> CmdResult {
    let g = load(file)?;
    check_cap(cli, &g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let report = MethodReport::compute(&g, &random_orders(&mut rng, g.order(), orderings));
    if cli.json {
        emit_json(out, &report.to_json())?;
    } else {
        writeln!(out, "{report}").map_err(io_failure)?;
    }
    Ok(if report.agree { EXIT_OK } else { EXIT_MISMATCH })
}

/// Densities used by the random sweep, cycled per instance.
pub const SWEEP_EDGE_DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];
pub const SWEEP_LOOP_DENSITY: f64 = 0.3;

/// Seed-determined pseudograph sweep: instance `i` has order in `1..=max_order`
/// and edge density `SWEEP_EDGE_DENSITIES[i % 3]`.
pub fn random_sweep(seed: u64, count: usize, max_order: usize) -> Vec<Pseudograph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let order = rng.gen_range(1..=max_order.max(1));
            let density = SWEEP_EDGE_DENSITIES[i % SWEEP_EDGE_DENSITIES.len()];
            Pseudograph::random(order, density, SWEEP_LOOP_DENSITY, &mut rng)
        })
        .collect()
}

fn cmd_verify_random(
    cli: &Cli,
    out: &mut dyn Write,
    count: usize,
    max_order: usize,
    orderings: usize,
) -> CmdResult {
    if max_order > ENUMERATION_ORDER_CAP && !cli.force {
        return Err(Failure::new(
            EXIT_SIZE_CAP,
            format!("--max-order above {ENUMERATION_ORDER_CAP} needs --force"),
        ));
    }
    let graphs = random_sweep(cli.seed, count, max_order);
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut failures = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let report = MethodReport::compute(g, &random_orders(&mut rng, g.order(), orderings));
        if !report.agree {
            failures.push((i, g.clone(), report));
        }
    }
    if cli.json {
        emit_json(
            out,
            &json!({
                "seed": cli.seed,
                "instances": graphs.len(),
                "agree": failures.is_empty(),
                "failures": failures.iter().map(|(i, g, r)| json!({
                    "index": i,
                    "graph": g.to_text(),
                    "report": r.to_json(),
                })).collect::<Vec<_>>(),
            }),
        )?;
    } else {
        for (i, g, r) in &failures {
            writeln!(out, "instance {i}: {g}\n{r}").map_err(io_failure)?;
        }
        writeln!(
            out,
            "{} random pseudographs (seed {}), {} disagreement(s)",
            graphs.len(),
            cli.seed,
            failures.len()
        )
        .map_err(io_failure)?;
    }
    Ok(if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn cmd_cayley(
    cli: &Cli,
    out: &mut dyn Write,
    n: usize,
    anticirculant: bool,
    emit_graph: Option<&Path>,
    spectrum: bool,
    verify: bool,
) -> CmdResult {
    if n == 0 {
        return Err(Failure::new(EXIT_INPUT, "n must be at least 1"));
    }
    if n > CAYLEY_CAP && !cli.force {
        return Err(Failure::new(
            EXIT_SIZE_CAP,
            format!("n = {n} exceeds {CAYLEY_CAP}; pass --force"),
        ));
    }
    let input = |e: crate::Error| Failure::new(EXIT_INPUT, e.to_string());
    let (graph, phi, method) = if anticirculant {
        (
            cayley::build_anticirculant_graph(n).map_err(input)?,
            cayley::charpoly_anticirculant(n).map_err(input)?,
            "anticirculant",
        )
    } else if n.is_multiple_of(2) {
        (
            cayley::build_unitary_cayley(n).map_err(input)?,
            cayley::charpoly_cayley_even(n).map_err(input)?,
            "cayley-even",
        )
    } else {
        let engine = CharpolyEngine::new(LeafMethod::Oracle);
        (
            cayley::build_unitary_cayley(n).map_err(input)?,
            cayley::charpoly_cayley_odd(n, &engine).map_err(input)?,
            "cayley-odd",
        )
    };
    if let Some(path) = emit_graph {
        std::fs::write(path, graph.to_text()).map_err(io_failure)?;
    }
    let verified = verify.then(|| oracle::charpoly_of_graph(&graph) == phi);
    let report = if spectrum {
        Some(cayley::spectrum_report(n).map_err(input)?)
    } else {
        None
    };
    if cli.json {
        let mut value = poly_json(n, &phi, method);
        if let Some(ok) = verified {
            value["verified"] = json!(ok);
        }
        if let Some(r) = &report {
            value["spectrum"] = json!({
                "lambda_0": r.lambda_0,
                "lambda_half": r.lambda_half,
                "paired_magnitudes": r.paired_magnitudes,
            });
        }
        emit_json(out, &value)?;
    } else {
        writeln!(out, "{phi}").map_err(io_failure)?;
        if let Some(r) = &report {
            writeln!(out, "lambda_0 = {}", r.lambda_0).map_err(io_failure)?;
            if let Some(h) = r.lambda_half {
                writeln!(out, "lambda_{} = {h}", n / 2).map_err(io_failure)?;
            }
            for (i, m) in r.paired_magnitudes.iter().enumerate() {
                writeln!(out, "|lambda_{}| = {m}", i + 1).map_err(io_failure)?;
            }
        }
        if let Some(ok) = verified {
            writeln!(out, "verify: {}", if ok { "OK" } else { "MISMATCH" }).map_err(io_failure)?;
        }
    }
    Ok(if verified == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

fn cmd_basic_figures(
    cli: &Cli,
    out: &mut dyn Write,
    file: &Path,
    order: Option<usize>,
) -> CmdResult {
    let g = load(file)?;
    check_cap(cli, &g)?;
    if let Some(k) = order {
        if k > g.order() {
            return Err(Failure::new(
                EXIT_INPUT,
                format!("order {k} exceeds the graph order {}", g.order()),
            ));
        }
    }
    let census = sachs::figure_census(&g, order.or(Some(g.order())));
    let orders: Vec<usize> = match order {
        Some(k) => vec![k],
        None => (1..=g.order()).collect(),
    };
    if cli.json {
        let rows: Vec<_> = orders
            .iter()
            .map(|k| {
                let shapes = census.get(k).cloned().unwrap_or_default();
                json!({
                    "order": k,
                    "total": shapes.values().sum::<usize>(),
                    "shapes": shapes.iter().map(|(s, c)| json!({
                        "edges": s.edges,
                        "cycles": s.cycle_lengths,
                        "loops": s.loops,
                        "count": c,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        emit_json(out, &json!({ "n": g.order(), "orders": rows }))?;
    } else {
        for k in orders {
            let shapes = census.get(&k).cloned().unwrap_or_default();
            writeln!(
                out,
                "order {k}: {} figure(s)",
                shapes.values().sum::<usize>()
            )
            .map_err(io_failure)?;
            for (s, c) in shapes {
                writeln!(
                    out,
                    "  edges={} cycles={:?} loops={}: {c}",
                    s.edges, s.cycle_lengths, s.loops
                )
                .map_err(io_failure)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_roots(cli: &Cli, out: &mut dyn Write, file: &Path, tolerance: f64) -> CmdResult {
    let g = load(file)?;
    let phi = oracle::charpoly_of_graph(&g);
    let found = roots::real_roots(&phi, tolerance)
        .map_err(|e| Failure::new(EXIT_NO_CONVERGENCE, e.to_string()))?;
    if cli.json {
        emit_json(
            out,
            &json!({
                "n": g.order(),
                "coeffs": phi.to_decimal_strings(),
                "roots": found.iter().map(|r| json!({
                    "value": r.value,
                    "multiplicity": r.multiplicity,
                })).collect::<Vec<_>>(),
            }),
        )?;
    } else {
        for r in &found {
            let value = if r.value == 0.0 { 0.0 } else { r.value };
            if r.multiplicity == 1 {
                writeln!(out, "{value:.6}").map_err(io_failure)?;
            } else {
                writeln!(out, "{value:.6} (x{})", r.multiplicity).map_err(io_failure)?;
            }
        }
    }
    Ok(EXIT_OK)
}
