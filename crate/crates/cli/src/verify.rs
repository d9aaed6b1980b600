use std::fs;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, ValueEnum};
use copsrobber::bounds::{
    check_corollaries, check_lemma3, check_section4_bounds, check_theorem2, BoundReport, Relation, Verdict,
};
use copsrobber::corpus::{grid_factors, mixed_instances, random_tree_pairs, random_trees};
use copsrobber::game::{best_response_length_with_budget, simulate, GameConfig, MoveOrder};
use copsrobber::generators::{all_labeled_trees, path_graph, product_of};
use copsrobber::solver::{solve_with, OptimalCops, OptimalRobber, SolveOptions, SolveResult};
use copsrobber::strategies::{OneCopChase, TwoCopStrategy};
use copsrobber::{Graph, ProductGraph, Value};

use crate::simulate::OrientationArg;
use crate::{state_budget, CliResult, Failure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// One cop on every labelled tree up to --max-size, plus the chase
    /// strategy on --count random trees.
    Thm1,
    /// Two cops on --count random tree pairs: exact value, lower-bound
    /// chain and the two-phase strategy.
    Theorem2,
    /// Grids 2..=--max.
    CorollaryGrid,
    Sandwich,
    Lemma3,
    ThreeTrees,
    MoveOrder,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    count: usize,
    /// Largest factor size for random trees.
    #[arg(long, default_value_t = 7)]
    max_size: usize,
    /// Largest grid side.
    #[arg(long, default_value_t = 5)]
    max: usize,
    /// Directory for counterexample graph and trace files.
    #[arg(long, default_value = "counterexamples")]
    out: PathBuf,
    #[arg(long)]
    budget: Option<usize>,
    /// Role assignment of the two-cop strategy (theorem2 suite).
    #[arg(long, value_enum, default_value_t = OrientationArg::Adaptive)]
    orientation: OrientationArg,
}

/// One corpus instance with its claims.
struct Case {
    label: String,
    graph: Graph,
    cops: usize,
    order: MoveOrder,
    report: BoundReport,
}

struct Ctx {
    budget: usize,
}

impl Ctx {
    fn solve(&self, g: &Graph, k: usize, order: MoveOrder) -> CliResult<SolveResult> {
        Ok(solve_with(g, k, order, SolveOptions { budget: self.budget, ..SolveOptions::default() })?)
    }
}

fn bound_err(e: copsrobber::bounds::BoundError) -> Failure {
    Failure::Input(e.into())
}

fn cap(v: usize) -> Value {
    Value::Capture(v as u32)
}

fn thm1(ctx: &Ctx, args: &VerifyArgs) -> CliResult<Vec<Case>> {
    let mut cases = Vec::new();
    for n in 2..=args.max_size {
        for (i, t) in all_labeled_trees(n).enumerate() {
            let res = ctx.solve(&t, 1, MoveOrder::RobberFirst)?;
            let mut report = BoundReport::new(format!("labelled-tree({n})#{i}"));
            report.check_values("thm1", res.capture_time, Relation::Eq, cap(t.diameter().div_ceil(2)));
            cases.push(Case {
                label: report.instance.clone(),
                graph: t,
                cops: 1,
                order: MoveOrder::RobberFirst,
                report,
            });
        }
    }
    for (i, t) in random_trees(args.seed, args.count, 2, args.max_size.max(2) + 5).into_iter().enumerate() {
        let chase = OneCopChase::new(&t).map_err(anyhow::Error::from)?;
        let config = GameConfig::for_graph(&t, 1, MoveOrder::RobberFirst)?;
        let v = best_response_length_with_budget(&t, &config, &chase, ctx.budget)?;
        let mut report = BoundReport::new(format!("random-tree({},{})#{i}", t.vertex_count(), args.seed));
        report.check_values("thm1-chase", v, Relation::Eq, cap(t.diameter().div_ceil(2)));
        cases.push(Case { label: report.instance.clone(), graph: t, cops: 1, order: MoveOrder::RobberFirst, report });
    }
    Ok(cases)
}

fn theorem2(ctx: &Ctx, args: &VerifyArgs) -> CliResult<Vec<Case>> {
    let mut cases = Vec::new();
    for p in random_tree_pairs(args.seed, args.count, 2, args.max_size.max(2)) {
        let g = p.product().into_flat();
        let res = ctx.solve(&g, 2, MoveOrder::RobberFirst)?;
        let mut report = check_lemma3(&g, &res).map_err(bound_err)?;
        report.extend(check_theorem2(&p.t1, &p.t2, &res).map_err(bound_err)?);
        let want = cap((p.t1.diameter() + p.t2.diameter()) / 2);
        let strategy =
            TwoCopStrategy::with_orientation(&p.t1, &p.t2, args.orientation.into()).map_err(anyhow::Error::from)?;
        for order in [MoveOrder::RobberFirst, MoveOrder::CopsFirst] {
            let config = GameConfig::for_graph(&g, 2, order)?;
            let v = match best_response_length_with_budget(&g, &config, &strategy, ctx.budget) {
                Ok(v) => v,
                Err(e @ copsrobber::game::GameError::Budget { .. }) => return Err(e.into()),
                Err(e) => {
                    eprintln!("{}: two-cop strategy failed ({order}): {e}", p.label());
                    Value::Escape
                }
            };
            report.check_values(format!("lemma2-strategy[{order}]"), v, Relation::Eq, want);
        }
        report.instance = p.label();
        cases.push(Case { label: p.label(), graph: g, cops: 2, order: MoveOrder::RobberFirst, report });
    }
    Ok(cases)
}

fn corollaries(ctx: &Ctx, pairs: Vec<(String, Graph, Graph)>) -> CliResult<Vec<Case>> {
    let mut cases = Vec::new();
    for (label, t1, t2) in pairs {
        let g = ProductGraph::new(&t1, &t2).into_flat();
        let res = ctx.solve(&g, 2, MoveOrder::RobberFirst)?;
        let f1 = ctx.solve(&t1, 1, MoveOrder::RobberFirst)?;
        let f2 = ctx.solve(&t2, 1, MoveOrder::RobberFirst)?;
        let mut report = check_corollaries(&t1, &t2, &res, &f1, &f2).map_err(bound_err)?;
        report.instance = label.clone();
        cases.push(Case { label, graph: g, cops: 2, order: MoveOrder::RobberFirst, report });
    }
    Ok(cases)
}

fn grids(max: usize) -> Vec<(String, Graph, Graph)> {
    grid_factors(max).into_iter().map(|(m, n, a, b)| (format!("grid({m},{n})"), a, b)).collect()
}

fn pairs(args: &VerifyArgs) -> Vec<(String, Graph, Graph)> {
    random_tree_pairs(args.seed, args.count, 2, args.max_size.max(2))
        .into_iter()
        .map(|p| (p.label(), p.t1, p.t2))
        .collect()
}

fn lemma3(ctx: &Ctx, args: &VerifyArgs) -> CliResult<Vec<Case>> {
    let mut cases = Vec::new();
    for (label, t1, t2) in pairs(args).into_iter().chain(grids(args.max)) {
        let g = ProductGraph::new(&t1, &t2).into_flat();
        let res = ctx.solve(&g, 2, MoveOrder::RobberFirst)?;
        let mut report = check_lemma3(&g, &res).map_err(bound_err)?;
        report.instance = label.clone();
        cases.push(Case { label, graph: g, cops: 2, order: MoveOrder::RobberFirst, report });
    }
    Ok(cases)
}

fn three_trees(ctx: &Ctx) -> CliResult<Vec<Case>> {
    let p2 = path_graph(2).map_err(anyhow::Error::from)?;
    let p3 = path_graph(3).map_err(anyhow::Error::from)?;
    let mut cases = Vec::new();
    for (label, trees) in [
        ("path(2)^3", vec![p2.clone(), p2.clone(), p2.clone()]),
        ("path(2)^2 x path(3)", vec![p2.clone(), p2.clone(), p3.clone()]),
        ("path(2) x path(3)^2", vec![p2.clone(), p3.clone(), p3.clone()]),
    ] {
        let g = product_of(&trees);
        for order in [MoveOrder::RobberFirst, MoveOrder::CopsFirst] {
            let res = ctx.solve(&g, 2, order)?;
            let mut report = check_section4_bounds(&trees, Some(&res)).map_err(bound_err)?;
            report.instance = format!("{label} {order}");
            cases.push(Case { label: report.instance.clone(), graph: g.clone(), cops: 2, order, report });
        }
    }
    let four = vec![p2; 4];
    let mut report = check_section4_bounds(&four, None).map_err(bound_err)?;
    report.check(
        "ntree-four-edges",
        report.claims[0].sides.map_or(0, |s| s.0.rounds().unwrap_or(0) as u64),
        Relation::Eq,
        8,
    );
    report.instance = "four single-edge trees (formula only)".into();
    cases.push(Case {
        label: report.instance.clone(),
        graph: product_of(&four),
        cops: 3,
        order: MoveOrder::RobberFirst,
        report,
    });
    Ok(cases)
}

fn move_order(ctx: &Ctx, args: &VerifyArgs) -> CliResult<Vec<Case>> {
    let mut cases = Vec::new();
    for inst in mixed_instances(args.seed, args.count) {
        let rf = ctx.solve(&inst.graph, inst.cops, MoveOrder::RobberFirst)?.capture_time;
        let cf = ctx.solve(&inst.graph, inst.cops, MoveOrder::CopsFirst)?.capture_time;
        let label = format!("{} k={}", inst.label, inst.cops);
        let mut report = BoundReport::new(label.clone());
        report.check_values("move-order", rf, Relation::Eq, cf);
        cases.push(Case { label, graph: inst.graph, cops: inst.cops, order: MoveOrder::RobberFirst, report });
    }
    Ok(cases)
}

/// Graph file plus, when the cops can win, an optimal self-play trace.
fn persist(ctx: &Ctx, dir: &PathBuf, name: &str, case: &Case) -> CliResult<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let graph_path = dir.join(format!("{name}.g"));
    fs::write(&graph_path, case.graph.to_text()).with_context(|| format!("writing {}", graph_path.display()))?;
    let Ok(res) = ctx.solve(&case.graph, case.cops, case.order) else { return Ok(()) };
    if let Ok(cops) = OptimalCops::new(&res) {
        let config = GameConfig::for_graph(&case.graph, case.cops, case.order)?;
        let trace = simulate(&case.graph, &config, &cops, &OptimalRobber::new(&res))?;
        let trace_path = dir.join(format!("{name}.trace"));
        let text = trace.to_text(&graph_path.display().to_string(), |v| v.to_string());
        fs::write(&trace_path, text).with_context(|| format!("writing {}", trace_path.display()))?;
    }
    Ok(())
}

pub fn run(args: &VerifyArgs) -> CliResult<()> {
    let ctx = Ctx { budget: state_budget(args.budget)? };
    let cases = match args.suite {
        Suite::Thm1 => thm1(&ctx, args)?,
        Suite::Theorem2 => theorem2(&ctx, args)?,
        Suite::CorollaryGrid => corollaries(&ctx, grids(args.max))?,
        Suite::Sandwich => corollaries(&ctx, pairs(args))?,
        Suite::Lemma3 => lemma3(&ctx, args)?,
        Suite::ThreeTrees => three_trees(&ctx)?,
        Suite::MoveOrder => move_order(&ctx, args)?,
    };
    let suite = args.suite.to_possible_value().expect("no skipped variants").get_name().to_string();
    let (mut pass, mut vacuous, mut fail) = (0, 0, 0);
    let mut failing = Vec::new();
    let mut vacuous_cases = Vec::new();
    for (i, case) in cases.iter().enumerate() {
        println!("INSTANCE {i} {}", case.label);
        for claim in &case.report.claims {
            println!("{claim}");
        }
        pass += case.report.count(Verdict::Pass);
        vacuous += case.report.count(Verdict::Vacuous);
        fail += case.report.count(Verdict::Fail);
        if !case.report.all_pass() {
            failing.push(i);
        }
        if case.report.count(Verdict::Vacuous) > 0 {
            vacuous_cases.push(i);
        }
    }
    println!("SUMMARY suite={suite} instances={} pass={pass} vacuous={vacuous} fail={fail}", cases.len());
    for i in &vacuous_cases {
        println!("VACUOUS {i} {}", cases[*i].label);
    }
    if failing.is_empty() {
        return Ok(());
    }
    for &i in &failing {
        let name = format!("{suite}-{i}");
        persist(&ctx, &args.out, &name, &cases[i])?;
        println!("COUNTEREXAMPLE {i} {}", args.out.join(format!("{name}.g")).display());
    }
    Err(Failure::Verification(format!("{} of {} instances failed", failing.len(), cases.len())))
}
