//! `copsrobber`: solve, verify, simulate and generate.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 state
//! budget exceeded. The budget defaults to the solver's and can be set with
//! `--budget` or the `COPSROBBER_STATE_BUDGET` environment variable.

mod simulate;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use copsrobber::game::GameError;
use copsrobber::generators::{cycle_graph, grid_graph, path_graph, random_tree, star_graph};
use copsrobber::solver::{solve_with, SolveError, SolveOptions, DEFAULT_STATE_BUDGET};
use copsrobber::{Graph, MoveOrder, ProductGraph};

pub const BUDGET_ENV: &str = "COPSROBBER_STATE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "copsrobber", version, about = "Cops and Robber capture-time laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderArg {
    RobberFirst,
    CopsFirst,
}

impl From<OrderArg> for MoveOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::RobberFirst => MoveOrder::RobberFirst,
            OrderArg::CopsFirst => MoveOrder::CopsFirst,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact capture time and central tuples of a graph.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        cops: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::RobberFirst)]
        order: OrderArg,
        /// Write the robber-to-move value table here.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run a verification suite over a seeded corpus.
    Verify(verify::VerifyArgs),
    /// Play one game and write its trace.
    Simulate(simulate::SimulateArgs),
    /// Write a generated graph.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// First factor file (product).
        #[arg(long)]
        a: Option<PathBuf>,
        /// Second factor file (product).
        #[arg(long)]
        b: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    Path,
    Grid,
    RandomTree,
    Product,
    Cycle,
    Star,
}

#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Budget(String),
    Verification(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Budget { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.into()),
        }
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        match e {
            GameError::Budget { .. } => Failure::Budget(e.to_string()),
            GameError::Strategy { source: copsrobber::game::StrategyError::Mismatch(_), .. } => {
                Failure::Input(e.into())
            }
            GameError::Strategy { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.into()),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

pub fn state_budget(flag: Option<usize>) -> CliResult<usize> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Input(anyhow!("{BUDGET_ENV}={s:?} is not a number"))),
        Err(_) => Ok(DEFAULT_STATE_BUDGET),
    }
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))?)
}

pub fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_solve(graph: &Path, cops: usize, order: MoveOrder, dump: Option<&Path>, budget: Option<usize>) -> CliResult<()> {
    let g = read_graph(graph)?;
    let options = SolveOptions { budget: state_budget(budget)?, ..SolveOptions::default() };
    let start = Instant::now();
    let res = solve_with(&g, cops, order, options)?;
    let elapsed = start.elapsed();
    println!("graph {} vertices {} edges {}", graph.display(), g.vertex_count(), g.edge_count());
    println!("cops {cops} order {order}");
    match res.capture_time.rounds() {
        Some(t) => println!("capt={t}"),
        None => println!("ESCAPE"),
    }
    for t in &res.central_tuples {
        let ids: Vec<String> = t.iter().map(ToString::to_string).collect();
        println!("central {}", ids.join(" "));
    }
    println!("states {}", res.stats.states);
    eprintln!("time {:.3}s", elapsed.as_secs_f64());
    if let Some(p) = dump {
        fs::write(p, res.table.dump()).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn need(v: Option<usize>, flag: &str) -> CliResult<usize> {
    v.ok_or_else(|| Failure::Input(anyhow!("--{flag} is required for this kind")))
}

fn cmd_gen(
    kind: GenKind,
    n: Option<usize>,
    m: Option<usize>,
    seed: u64,
    a: Option<&Path>,
    b: Option<&Path>,
) -> CliResult<Graph> {
    let g = match kind {
        GenKind::Path => path_graph(need(n, "n")?),
        GenKind::Grid => grid_graph(need(m, "m")?, need(n, "n")?),
        GenKind::RandomTree => random_tree(need(n, "n")?, seed),
        GenKind::Cycle => cycle_graph(need(n, "n")?),
        GenKind::Star => star_graph(need(n, "n")?),
        GenKind::Product => {
            let a = a.ok_or_else(|| anyhow!("--a is required for a product"))?;
            let b = b.ok_or_else(|| anyhow!("--b is required for a product"))?;
            return Ok(ProductGraph::new(&read_graph(a)?, &read_graph(b)?).into_flat());
        }
    };
    Ok(g.map_err(anyhow::Error::from)?)
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Solve { graph, cops, order, dump, budget } => {
            cmd_solve(&graph, cops, order.into(), dump.as_deref(), budget)
        }
        Command::Verify(args) => verify::run(&args),
        Command::Simulate(args) => simulate::run(&args),
        Command::Gen { kind, n, m, seed, a, b, out } => {
            let g = cmd_gen(kind, n, m, seed, a.as_deref(), b.as_deref())?;
            write_output(out.as_deref(), &g.to_text())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget: {msg}");
            ExitCode::from(3)
        }
    }
}
