//! Command-line front end: graph generation, solving, structural reports,
//! claim verification, catalog scanning, and an interactive play mode.

use clap::{Parser, Subcommand, ValueEnum};
use pursuit_core::error::Error;
use pursuit_core::game::{GameConfig, Variant};
use pursuit_core::graph::{
    capture_family, cartesian_products, complete, cycle, cycle_strong_power_product, hypercube,
    parse_edge_list, parse_graph6, path, petersen, power, sequence_realizer, star, subdivide,
    write_edge_list, write_graph6, Graph,
};
use pursuit_core::harness::{self, explore_monotone, run_all, ReportFormat, RunCtx, SolveCache};
use pursuit_core::solver::{cop_number_with, solve_full, SolveReport, SolverOptions};
use pursuit_core::structure::partition_report;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pursuit",
    about = "Exact workbench for the speed-(s,t) game of Cops and Robbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Standard,
    Active,
    SemiActive,
    Restricted,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Standard => Variant::Standard,
            VariantArg::Active => Variant::Active,
            VariantArg::SemiActive => Variant::SemiActive,
            VariantArg::Restricted => Variant::Restricted,
        }
    }
}

#[derive(clap::Args)]
struct GameArgs {
    /// Graph file; .g6 for graph6, anything else as an edge list.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 1)]
    cops: usize,
    #[arg(long = "cop-speed", short = 's', default_value_t = 1)]
    cop_speed: usize,
    /// Defaults to the cop speed.
    #[arg(long = "robber-speed", short = 't')]
    robber_speed: Option<usize>,
    #[arg(long, value_enum, default_value = "standard")]
    variant: VariantArg,
    #[arg(long, default_value_t = 0)]
    radius: usize,
    /// Canonical-state budget override.
    #[arg(long)]
    budget: Option<u64>,
    /// Bypass the solve cache.
    #[arg(long)]
    no_cache: bool,
}

impl GameArgs {
    fn config(&self) -> GameConfig {
        GameConfig {
            cop_speed: self.cop_speed,
            robber_speed: self.robber_speed.unwrap_or(self.cop_speed),
            cop_count: self.cops,
            variant: self.variant.into(),
            capture_radius: self.radius,
        }
    }

    fn options(&self) -> SolverOptions {
        let mut opts = SolverOptions::default();
        if let Some(b) = self.budget {
            opts.state_budget = b;
        }
        opts
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph and print or save it.
    Gen {
        /// Family: path, cycle, complete, star, hypercube, petersen, grid,
        /// torus, strong-cycles, subdivided-complete, pg2, capture-family,
        /// realizer, power.
        family: String,
        /// Family parameters (e.g. sizes, or a comma list for realizer).
        params: Vec<String>,
        /// Output path; .g6 writes graph6, anything else an edge list.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a configuration exactly and print the JSON report.
    Solve(GameArgs),
    /// Smallest winning cop count.
    Copnumber {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, default_value_t = 6)]
        max_cops: usize,
    },
    /// Optimal capture time (cop turns) for the given configuration.
    Capttime(GameArgs),
    /// Cop-win partition and partition capture time of a graph.
    Partition {
        #[arg(long)]
        graph: PathBuf,
        /// Analyze this power of the graph instead of the graph itself.
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Run a registered claim, or all of them.
    Verify {
        /// Claim id or "all"; a partial id runs every claim containing it.
        claim: String,
        /// Also run stretch-budget claims.
        #[arg(long)]
        stretch: bool,
        /// Write a report; .csv or .json by extension.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Cop numbers across speeds, watching for monotonicity violations.
    ExploreMonotone {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_speed: usize,
    },
    /// Scan a graph6 catalog for extremal capture times.
    Scan {
        #[arg(long)]
        g6: PathBuf,
        #[arg(short = 'n')]
        order: usize,
        #[arg(short = 's', default_value_t = 2)]
        speed: usize,
        /// Solver spot-check frequency (0 disables).
        #[arg(long, default_value_t = 1000)]
        spot: u64,
    },
    /// Interactive play: you move the robber, the engine plays optimal cops.
    Play {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        cops: usize,
        #[arg(short = 's', default_value_t = 1)]
        speed: usize,
    },
}

fn load_graph(path: &PathBuf) -> Result<Graph, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    if path.extension().is_some_and(|e| e == "g6") {
        let first = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| Error::invalid("empty graph6 file"))?;
        parse_graph6(first)
    } else {
        parse_edge_list(&text)
    }
}

fn gen_graph(family: &str, params: &[String]) -> Result<Graph, Error> {
    let nums: Vec<usize> = params
        .iter()
        .flat_map(|p| p.split(','))
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad parameter {s}")))
        })
        .collect::<Result<_, _>>()?;
    let need = |i: usize| -> Result<usize, Error> {
        nums.get(i)
            .copied()
            .ok_or_else(|| Error::invalid("missing parameter"))
    };
    match family {
        "path" => path(need(0)?),
        "cycle" => cycle(need(0)?),
        "complete" => complete(need(0)?),
        "star" => star(need(0)?),
        "hypercube" => hypercube(need(0)?),
        "petersen" => petersen(),
        "grid" => {
            let factors: Vec<Graph> = nums.iter().map(|&n| path(n)).collect::<Result<_, _>>()?;
            cartesian_products(&factors.iter().collect::<Vec<_>>())
        }
        "torus" => {
            let factors: Vec<Graph> = nums.iter().map(|&n| cycle(n)).collect::<Result<_, _>>()?;
            cartesian_products(&factors.iter().collect::<Vec<_>>())
        }
        "strong-cycles" => cycle_strong_power_product(need(0)?, need(1)?),
        "subdivided-complete" => subdivide(&complete(need(0)?)?, need(1)?),
        "pg2" => pursuit_core::graph::incidence_graph_pg2(need(0)?),
        "capture-family" => capture_family(need(0)?),
        "realizer" => Ok(sequence_realizer(&nums)?.graph),
        "power" => Err(Error::invalid(
            "power needs a base graph; use gen on a file instead",
        )),
        other => Err(Error::invalid(format!("unknown family {other}"))),
    }
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::Budget { .. } => ExitCode::from(2),
        _ => ExitCode::from(3),
    }
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen {
            family,
            params,
            out,
        } => {
            let g = gen_graph(&family, &params)?;
            match out {
                Some(path) if path.extension().is_some_and(|e| e == "g6") => {
                    std::fs::write(&path, write_graph6(&g)? + "\n")
                        .map_err(|e| Error::io(path.display().to_string(), e))?;
                    println!(
                        "wrote {} ({} vertices, {} edges)",
                        path.display(),
                        g.order(),
                        g.size()
                    );
                }
                Some(path) => {
                    std::fs::write(&path, write_edge_list(&g))
                        .map_err(|e| Error::io(path.display().to_string(), e))?;
                    println!(
                        "wrote {} ({} vertices, {} edges)",
                        path.display(),
                        g.order(),
                        g.size()
                    );
                }
                None => print!("{}", write_edge_list(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve(args) => {
            let g = load_graph(&args.graph)?;
            let cfg = args.config();
            let opts = args.options();
            let result = if args.no_cache {
                pursuit_core::solver::solve_with(&g, &cfg, &opts)?
            } else {
                let mut cache = SolveCache::open(&SolveCache::dir_from_env())?;
                cache.solve_cached(&g, &cfg, &opts)?
            };
            let report = SolveReport::new(&g, &cfg, &result);
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Copnumber { game, max_cops } => {
            let g = load_graph(&game.graph)?;
            let k = cop_number_with(&g, &game.config(), max_cops, &game.options())?;
            println!("{k}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Capttime(args) => {
            let g = load_graph(&args.graph)?;
            let result = pursuit_core::solver::solve_with(&g, &args.config(), &args.options())?;
            match result.capture_time {
                Some(t) => {
                    println!("{t}");
                    Ok(ExitCode::SUCCESS)
                }
                None => Err(Error::Domain("robber wins this configuration".into())),
            }
        }
        Command::Partition { graph, power: p } => {
            let g = load_graph(&graph)?;
            let g = if p > 1 { power(&g, p)? } else { g };
            let report = partition_report(&g)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claim,
            stretch,
            report,
        } => {
            let ctx = RunCtx {
                include_stretch: stretch,
                ..RunCtx::default()
            };
            let filter = if claim == "all" {
                None
            } else {
                Some(claim.as_str())
            };
            let records = run_all(filter, &ctx);
            if records.is_empty() {
                return Err(Error::invalid(format!("no claim matches {claim}")));
            }
            for r in &records {
                println!(
                    "{:<32} {:<16} expected {} | computed {} ({} ms)",
                    r.id,
                    r.status.to_string(),
                    r.expected,
                    r.computed,
                    r.millis
                );
            }
            if let Some(path) = report {
                let format = if path.extension().is_some_and(|e| e == "json") {
                    ReportFormat::Json
                } else {
                    ReportFormat::Csv
                };
                pursuit_core::harness::write_report(&records, &path, format)?;
            }
            if harness::all_theorems_hold(&records) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::ExploreMonotone { graph, max_speed } => {
            let g = load_graph(&graph)?;
            let report = explore_monotone(
                &g,
                &graph.display().to_string(),
                max_speed,
                &SolverOptions::default(),
            )?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            if report.increases.is_empty() {
                println!("no monotonicity violation found");
            } else {
                println!(
                    "conjecture counterexample candidate at speeds {:?}",
                    report.increases
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            g6,
            order,
            speed,
            spot,
        } => {
            let file =
                std::fs::File::open(&g6).map_err(|e| Error::io(g6.display().to_string(), e))?;
            let report = harness::scan_graph6(std::io::BufReader::new(file), order, speed, spot)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Play { graph, cops, speed } => play(&graph, cops, speed),
    }
}

fn play(graph: &PathBuf, cops: usize, speed: usize) -> Result<ExitCode, Error> {
    let g = load_graph(graph)?;
    let cfg = GameConfig::speed(cops, speed);
    println!(
        "solving {} vertices, {} cops at speed {speed}...",
        g.order(),
        cops
    );
    let solved = solve_full(&g, &cfg, &SolverOptions::default())?;
    let Some(mut positions) = solved.result().optimal_placement.clone() else {
        println!("the robber wins this configuration; cops concede placement");
        return Ok(ExitCode::SUCCESS);
    };
    println!(
        "cops start at {positions:?}; optimal play captures in {} rounds",
        solved.result().capture_time.unwrap_or(0)
    );
    let stdin = std::io::stdin();
    let mut lines = stdin.lock().lines();
    let mut prompt = |msg: &str| -> Result<Option<usize>, Error> {
        loop {
            print!("{msg}");
            std::io::stdout().flush().ok();
            let Some(line) = lines.next() else {
                return Ok(None);
            };
            let line = line.map_err(|e| Error::io("stdin", e))?;
            let line = line.trim();
            if line == "q" || line == "quit" {
                return Ok(None);
            }
            match line.parse::<usize>() {
                Ok(v) if v < g.order() => return Ok(Some(v)),
                _ => println!("enter a vertex in 0..{} or q", g.order()),
            }
        }
    };

    let Some(mut robber) = prompt("robber placement> ")? else {
        return Ok(ExitCode::SUCCESS);
    };
    let mut round = 0usize;
    loop {
        round += 1;
        let plan = solved.optimal_cop_turn(&positions, robber)?;
        positions = plan.iter().map(|&(_, to)| to).collect();
        positions.sort_unstable();
        println!("round {round}: cops move to {positions:?}");
        if positions.contains(&robber) {
            println!("captured in {round} rounds");
            return Ok(ExitCode::SUCCESS);
        }
        let legal = pursuit_core::game::robber_moves(&g, &cfg, &positions, robber)?;
        println!("your moves: {legal:?}");
        let Some(next) = prompt("robber> ")? else {
            return Ok(ExitCode::SUCCESS);
        };
        if !legal.contains(&next) {
            println!("{next} is not reachable; forfeiting move (staying put)");
        } else {
            robber = next;
        }
        if positions.contains(&robber) {
            println!("captured in {round} rounds");
            return Ok(ExitCode::SUCCESS);
        }
        if let Some(v) = solved.value_robber_turn(&positions, robber)? {
            println!("engine sees capture in {v} more rounds");
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
