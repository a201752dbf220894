use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use comatch::bench::{run_bench, BenchConfig, BenchKind};
use comatch::generators::{
    cocomparability_from_poset, complement_cycle, fixture_fig1, random_intervals, random_poset, IntervalParams,
};
use comatch::io::{
    parse_graph, parse_intervals, parse_ordering, parse_vertex_list, serialize_graph,
    serialize_graph_with_aliases, serialize_intervals, serialize_matching, serialize_ordering,
};
use comatch::orderings::{OrderingChecker, Verdict};
use comatch::potential::brute_force_min_potential;
use comatch::{
    ldfs, ldfs_plus, matching_with_deletion_set, max_matching_cocomparability, max_matching_interval,
    max_matching_reference, rmm, Error, Graph, VertexOrdering,
};

#[derive(Parser)]
#[command(name = "comatch", version, about = "Maximum matching on cocomparability graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance and its certified ordering.
    Gen(GenArgs),
    /// Compute an LDFS or LDFS+ ordering.
    Order(OrderArgs),
    /// Compute a maximum matching.
    Solve(SolveArgs),
    /// Check an ordering property; prints "witness u v w" on failure.
    Verify(VerifyArgs),
    /// Scaling benchmark with CSV output.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Poset,
    Interval,
    Anticycle,
    Fig1,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Relation probability (poset).
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Half the vertex count (anticycle).
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Left endpoints are drawn from [0, span) (interval).
    #[arg(long, default_value_t = 100.0)]
    span: f64,
    #[arg(long, default_value_t = 10.0)]
    max_length: f64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    out_order: Option<PathBuf>,
    /// Also write the interval endpoints (interval).
    #[arg(long)]
    out_intervals: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderAlgo {
    Ldfs,
    LdfsPlus,
}

#[derive(Args)]
struct OrderArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum)]
    algo: OrderAlgo,
    /// Start vertex, 1-based (ldfs).
    #[arg(long, conflicts_with = "pi")]
    start: Option<usize>,
    /// Ordering whose rightmost vertices win ties (ldfs-plus).
    #[arg(long)]
    pi: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveAlgo {
    Rmm,
    Oracle,
    DeletionSet,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, required_unless_present = "intervals")]
    graph: Option<PathBuf>,
    /// Umbrella-free ordering; LDFS+ is applied before the greedy.
    #[arg(long, conflicts_with_all = ["sigma", "intervals"])]
    pi: Option<PathBuf>,
    /// LDFS umbrella-free ordering used as is.
    #[arg(long, conflicts_with = "intervals")]
    sigma: Option<PathBuf>,
    /// Interval file, one "<left> <right>" per vertex.
    #[arg(long)]
    intervals: Option<PathBuf>,
    /// Check the ordering precondition first (cubic time or worse).
    #[arg(long)]
    verify_order: bool,
    #[arg(long, value_enum, default_value_t = SolveAlgo::Rmm)]
    algo: SolveAlgo,
    /// Deletion set as a comma-separated list of 1-based ids.
    #[arg(long = "X", value_name = "LIST")]
    deletion: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Iorder,
    Umbrella,
    Ldfs,
    PotentialMin,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    check: Check,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    order: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Ascending comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000")]
    sizes: Vec<usize>,
    #[arg(long, default_value = "poset")]
    kind: BenchKind,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 4.0)]
    max_length: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Largest size checked against the blossom oracle.
    #[arg(long, default_value_t = 2000)]
    oracle_threshold: usize,
    /// Shuffle σ before solving, to exercise the mismatch check.
    #[arg(long)]
    corrupt_sigma: bool,
    #[arg(long)]
    csv: PathBuf,
}

/// A check ran and failed; maps to exit code 1.
#[derive(Debug)]
struct Failed(String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_ordering(path: &Path, n: usize) -> Result<VertexOrdering> {
    parse_ordering(&read(path)?, n).with_context(|| format!("parsing {}", path.display()))
}

fn seed_override(flag: u64) -> Result<u64> {
    match std::env::var("COMATCH_SEED") {
        Ok(s) => {
            let seed = s.trim().parse().with_context(|| format!("COMATCH_SEED={s:?} is not a u64"))?;
            log::info!("COMATCH_SEED={seed} overrides --seed {flag}");
            Ok(seed)
        }
        Err(_) => Ok(flag),
    }
}

fn gen(args: GenArgs) -> Result<()> {
    let seed = seed_override(args.seed)?;
    let (graph_text, sigma) = match args.kind {
        GenKind::Poset => {
            let (g, sigma) = cocomparability_from_poset(&random_poset(args.n, args.p, seed)?);
            (serialize_graph(&g), sigma)
        }
        GenKind::Interval => {
            let params = IntervalParams { span: args.span, max_length: args.max_length };
            let inst = random_intervals(args.n, params, seed)?;
            if let Some(path) = &args.out_intervals {
                fs::write(path, serialize_intervals(&inst.intervals))?;
            }
            (serialize_graph(&inst.graph), inst.ordering)
        }
        GenKind::Anticycle => {
            let (g, sigma) = complement_cycle(args.k)?;
            (serialize_graph(&g), sigma)
        }
        GenKind::Fig1 => {
            let fx = fixture_fig1();
            (serialize_graph_with_aliases(&fx.graph, &fx.aliases), fx.pi)
        }
    };
    if args.out_intervals.is_some() && !matches!(args.kind, GenKind::Interval) {
        log::warn!("--out-intervals only applies to --kind interval");
    }
    fs::write(&args.out, graph_text).with_context(|| format!("writing {}", args.out.display()))?;
    if let Some(path) = &args.out_order {
        fs::write(path, serialize_ordering(&sigma))?;
    }
    Ok(())
}

fn order(args: OrderArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let sigma = match args.algo {
        OrderAlgo::Ldfs => {
            if args.pi.is_some() {
                bail!("--pi is for ldfs-plus; use --start with ldfs");
            }
            let start = args.start.unwrap_or(1);
            if start == 0 || start > g.n() {
                bail!("--start {start} out of range 1..={}", g.n());
            }
            ldfs(&g, start - 1)
        }
        OrderAlgo::LdfsPlus => {
            let pi = match &args.pi {
                Some(p) => load_ordering(p, g.n())?,
                None => bail!("ldfs-plus needs --pi"),
            };
            ldfs_plus(&g, &pi)
        }
    };
    write_or_print(args.out.as_deref(), &serialize_ordering(&sigma))
}

fn check_order(g: &Graph, sigma: &VertexOrdering, umbrella: bool, ldfs: bool) -> Result<()> {
    let ck = OrderingChecker::new(g, sigma)?;
    if umbrella {
        if let Verdict::Violated(t) = ck.umbrella_free() {
            return Err(Failed(format!("ordering is not umbrella-free\nwitness {t}")).into());
        }
    }
    if ldfs {
        if let Verdict::Violated(t) = ck.ldfs() {
            return Err(Failed(format!("ordering is not an LDFS ordering\nwitness {t}")).into());
        }
    }
    Ok(())
}

fn solve(args: SolveArgs) -> Result<()> {
    if args.deletion.is_some() && args.algo != SolveAlgo::DeletionSet {
        bail!("--X requires --algo deletion-set");
    }
    let matching = match args.algo {
        SolveAlgo::Rmm => {
            if let Some(path) = &args.intervals {
                let intervals =
                    parse_intervals(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
                if let Some(gpath) = &args.graph {
                    let g = load_graph(gpath)?;
                    if g != comatch::interval::intersection_graph(&intervals).0 {
                        bail!("{} is not the intersection graph of {}", gpath.display(), path.display());
                    }
                }
                max_matching_interval(&intervals)
            } else {
                let g = load_graph(args.graph.as_deref().expect("clap requires --graph"))?;
                match (&args.pi, &args.sigma) {
                    (Some(p), None) => {
                        let pi = load_ordering(p, g.n())?;
                        if args.verify_order {
                            check_order(&g, &pi, true, false)?;
                        }
                        max_matching_cocomparability(&g, &pi, false)?
                    }
                    (None, Some(s)) => {
                        let sigma = load_ordering(s, g.n())?;
                        if args.verify_order {
                            check_order(&g, &sigma, true, true)?;
                        }
                        rmm(&g, &sigma).matching
                    }
                    _ => bail!("rmm needs exactly one of --pi, --sigma or --intervals"),
                }
            }
        }
        SolveAlgo::Oracle => {
            let Some(gpath) = &args.graph else { bail!("oracle needs --graph") };
            max_matching_reference(&load_graph(gpath)?)
        }
        SolveAlgo::DeletionSet => {
            let Some(gpath) = &args.graph else { bail!("deletion-set needs --graph") };
            let g = load_graph(gpath)?;
            let x = parse_vertex_list(args.deletion.as_deref().unwrap_or(""), g.n()).context("parsing --X")?;
            let Some(pi_path) = &args.pi else { bail!("deletion-set needs --pi (ordering of G - X)") };
            let rest = parse_vertex_list(&read(pi_path)?, g.n())
                .with_context(|| format!("parsing {}", pi_path.display()))?;
            let out = match matching_with_deletion_set(&g, &x, &rest, args.verify_order) {
                Err(Error::NotUmbrellaFree(t)) => {
                    return Err(Failed(format!("ordering of G - X is not umbrella-free\nwitness {t}")).into())
                }
                other => other?,
            };
            log::info!("initial size {}, {} augmentations", out.initial_size, out.rounds);
            out.matching
        }
    };
    write_or_print(args.out.as_deref(), &serialize_matching(&matching))
}

fn verify(args: VerifyArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let sigma = load_ordering(&args.order, g.n())?;
    if let Check::PotentialMin = args.check {
        check_order(&g, &sigma, true, true)?;
        let out = rmm(&g, &sigma);
        let best = brute_force_min_potential(&g, &sigma, false)?;
        let got = comatch::potential::potential(&g, &sigma, &out.matching)?;
        if got != best.value {
            return Err(Failed(format!("rmm potential {got} exceeds minimum {}", best.value)).into());
        }
        println!("ok f = {got}, minimizers {}", best.minimizers);
        return Ok(());
    }
    let ck = OrderingChecker::new(&g, &sigma)?;
    let verdict = match args.check {
        Check::Iorder => ck.i_ordering(),
        Check::Umbrella => ck.umbrella_free(),
        Check::Ldfs => ck.ldfs(),
        Check::PotentialMin => unreachable!(),
    };
    match verdict {
        Verdict::Holds => {
            println!("ok");
            Ok(())
        }
        Verdict::Violated(t) => Err(Failed(format!("witness {t}")).into()),
    }
}

fn bench(args: BenchArgs) -> Result<()> {
    let cfg = BenchConfig {
        sizes: args.sizes,
        kind: args.kind,
        p: args.p,
        max_length: args.max_length,
        seed: seed_override(args.seed)?,
        repetitions: args.reps,
        oracle_threshold: args.oracle_threshold,
        corrupt_sigma: args.corrupt_sigma,
    };
    let file = fs::File::create(&args.csv).with_context(|| format!("creating {}", args.csv.display()))?;
    let report = match run_bench(&cfg, file) {
        Err(Error::Verification(msg)) => return Err(Failed(msg).into()),
        other => other?,
    };
    print!("{}", report.ratio_table());
    println!("max rmm operations / (n + m): {:.3}", report.max_operation_factor());
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Order(a) => order(a),
        Command::Solve(a) => solve(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => match e.downcast_ref::<Failed>() {
            Some(f) => {
                println!("{f}");
                ExitCode::from(1)
            }
            None => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn deletion_flag_is_spelled_x() {
        let cli = Cli::try_parse_from(["comatch", "solve", "--graph", "g", "--algo", "deletion-set", "--X", "1,2"]);
        let Command::Solve(args) = cli.unwrap().command else { panic!() };
        assert_eq!(args.deletion.as_deref(), Some("1,2"));
    }
}
