use std::path::PathBuf;

use anyhow::anyhow;
use clap::{Args, ValueEnum};
use copsrobber::game::{best_response_length_with_budget, simulate, CopStrategy, GameConfig, Trace};
use copsrobber::solver::{solve_with, OptimalCops, OptimalRobber, SolveOptions, SolveResult};
use copsrobber::strategies::simple::{RandomCops, RandomRobber, StationaryCops, StationaryRobber};
use copsrobber::strategies::{OneCopChase, Orientation, TwoCopStrategy};
use copsrobber::{Graph, MoveOrder, ProductGraph};

use crate::{read_graph, state_budget, write_output, CliResult, Failure, OrderArg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CopsArg {
    /// One cop chasing from the centre of a longest path (trees).
    Thm1,
    /// Two-phase two-cop strategy (needs --t1 and --t2).
    Lemma2,
    Optimal,
    Random,
    Stationary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RobberArg {
    Optimal,
    Random,
    Stationary,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, conflicts_with_all = ["t1", "t2"])]
    graph: Option<PathBuf>,
    #[arg(long, requires = "t2")]
    t1: Option<PathBuf>,
    #[arg(long, requires = "t1")]
    t2: Option<PathBuf>,
    #[arg(long, value_enum)]
    cops: CopsArg,
    #[arg(long, value_enum, default_value_t = RobberArg::Optimal)]
    robber: RobberArg,
    /// Number of cops; defaults to 1 for thm1 and 2 for lemma2, else 1.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = OrderArg::RobberFirst)]
    order: OrderArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    max_rounds: Option<usize>,
    /// Trace file; the trace goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    budget: Option<usize>,
    /// Also report the exhaustive best-response length against the cops.
    #[arg(long)]
    best_response: bool,
    /// Role assignment of the lemma2 cops.
    #[arg(long, value_enum, default_value_t = OrientationArg::Adaptive)]
    orientation: OrientationArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrientationArg {
    /// Roles may be re-chosen until the cops first leave their starting
    /// first-factor vertices.
    Adaptive,
    /// Roles fixed at the first cop move.
    Fixed,
}

impl From<OrientationArg> for Orientation {
    fn from(o: OrientationArg) -> Self {
        match o {
            OrientationArg::Adaptive => Orientation::Adaptive,
            OrientationArg::Fixed => Orientation::Fixed,
        }
    }
}

struct Setup {
    graph: Graph,
    label: String,
    factors: Option<(Graph, Graph)>,
    config: GameConfig,
    budget: usize,
}

pub fn run(args: &SimulateArgs) -> CliResult<()> {
    let (graph, label, factors) = match (&args.graph, &args.t1, &args.t2) {
        (Some(p), _, _) => (read_graph(p)?, p.display().to_string(), None),
        (None, Some(a), Some(b)) => {
            let (t1, t2) = (read_graph(a)?, read_graph(b)?);
            let g = ProductGraph::new(&t1, &t2).into_flat();
            (g, format!("{} x {}", a.display(), b.display()), Some((t1, t2)))
        }
        _ => return Err(Failure::Input(anyhow!("give --graph, or --t1 and --t2"))),
    };
    let k = args.k.unwrap_or(if args.cops == CopsArg::Lemma2 { 2 } else { 1 });
    let order: MoveOrder = args.order.into();
    let mut config = GameConfig::for_graph(&graph, k, order)?;
    if let Some(r) = args.max_rounds {
        config = GameConfig::new(k, order, r)?;
    }
    let setup = Setup { graph, label, factors, config, budget: state_budget(args.budget)? };
    let solved = if args.cops == CopsArg::Optimal || args.robber == RobberArg::Optimal {
        Some(solve_with(&setup.graph, k, order, SolveOptions { budget: setup.budget, ..SolveOptions::default() })?)
    } else {
        None
    };

    let g = &setup.graph;
    match args.cops {
        CopsArg::Thm1 => with_cops(args, &setup, solved.as_ref(), &OneCopChase::new(g).map_err(anyhow::Error::from)?),
        CopsArg::Lemma2 => {
            let (t1, t2) = setup.factors.as_ref().ok_or_else(|| anyhow!("lemma2 needs --t1 and --t2"))?;
            with_cops(
                args,
                &setup,
                solved.as_ref(),
                &TwoCopStrategy::with_orientation(t1, t2, args.orientation.into()).map_err(anyhow::Error::from)?,
            )
        }
        CopsArg::Optimal => {
            let res = solved.as_ref().expect("solved above");
            with_cops(args, &setup, solved.as_ref(), &OptimalCops::new(res).map_err(anyhow::Error::from)?)
        }
        CopsArg::Random => with_cops(args, &setup, solved.as_ref(), &RandomCops::new(args.seed)),
        CopsArg::Stationary => {
            let positions = (0..k).map(|i| i % g.vertex_count()).collect();
            with_cops(args, &setup, solved.as_ref(), &StationaryCops::new(positions))
        }
    }
}

fn with_cops<C: CopStrategy>(
    args: &SimulateArgs,
    setup: &Setup,
    solved: Option<&SolveResult>,
    cops: &C,
) -> CliResult<()> {
    let g = &setup.graph;
    let config = &setup.config;
    let trace: Trace = match args.robber {
        RobberArg::Optimal => simulate(g, config, cops, &OptimalRobber::new(solved.expect("solved for the robber")))?,
        RobberArg::Random => simulate(g, config, cops, &RandomRobber::new(args.seed))?,
        RobberArg::Stationary => simulate(g, config, cops, &StationaryRobber::farthest())?,
    };
    let text = trace.to_text(&setup.label, |v| v.to_string());
    write_output(args.out.as_deref(), &text)?;
    if args.out.is_some() {
        print!("{}", text.lines().last().map(|l| format!("{l}\n")).unwrap_or_default());
    }
    if args.best_response {
        let v = best_response_length_with_budget(g, config, cops, setup.budget)?;
        println!("best-response {v}");
    }
    Ok(())
}
