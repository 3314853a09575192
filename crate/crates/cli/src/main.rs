//! Command-line surface: solve, oracle, recognize, generate, bench.
//!
//! Exit codes: 0 success, 2 input/parse error, 3 input outside the requested
//! class (a witness is reported), 4 leaf/oracle budget exhausted, 1 other
//! failures. All vertex lists printed here are 1-indexed, matching the text
//! graph format.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bullmwss::bench::{run_bench, BenchFamily};
use bullmwss::generator::{c7_blowup, fixture, random_in_class, TargetClass};
use bullmwss::graph::{Graph, Solution, Weights};
use bullmwss::modular::find_proper_homogeneous_set;
use bullmwss::mwss::{exact_mwss, ORACLE_NODE_BUDGET};
use bullmwss::patterns::{class_witness, GraphClass};
use bullmwss::solver::{solve_p7bull, solve_s123bull, SolveOptions, SolveStats};
use bullmwss::textio::{parse_graph, write_graph};
use bullmwss::{Error, Witness};

#[derive(Parser)]
#[command(name = "bullmwss", version, about = "Exact MWSS on (P7,bull)-free and (S123,bull)-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve MWSS with the decomposition solver for the given class.
    Solve(SolveArgs),
    /// Solve MWSS with the exact branch-and-bound reference.
    Oracle(OracleArgs),
    /// Report class membership, primality and witnesses.
    Recognize(RecognizeArgs),
    /// Emit a generated instance in the text graph format.
    Generate(GenerateArgs),
    /// Benchmark the solver against the reference over a size sweep.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    P7bull,
    S123bull,
    Auto,
}

#[derive(Args)]
struct SolveArgs {
    /// Which solver to run; `auto` recognizes the class first.
    #[arg(long, value_enum, default_value = "auto")]
    class: ClassArg,
    #[arg(long)]
    input: PathBuf,
    /// Validate class membership before solving.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: bool,
    /// Worker threads for the per-vertex loop (1 keeps stats deterministic).
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Node budget per leaf solve.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct RecognizeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Random,
    C7blowup,
    Fixture,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Vertex count (random family).
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// Edge probability (random family).
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Class constraint (random family).
    #[arg(long, value_enum, default_value = "p7bull")]
    class: GenClassArg,
    /// Seven comma-separated part sizes (c7blowup family).
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex weights: all 1, or uniform in 1..=wmax.
    #[arg(long, value_enum, default_value = "unit")]
    weights: WeightsArg,
    #[arg(long, default_value_t = 100)]
    wmax: u64,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClassArg {
    P7bull,
    S123bull,
    Bullfreeprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightsArg {
    Unit,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamilyArg {
    C7blowup,
    Fixturetwin,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "c7blowup")]
    family: BenchFamilyArg,
    /// Comma-separated instance sizes.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    repeat: usize,
    /// CSV output path (header: n,time_ms,recursions,leaves).
    #[arg(long)]
    csv: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Wall cap per reference solve, in milliseconds.
    #[arg(long, default_value_t = 5000)]
    oracle_cap_ms: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Recognize(args) => cmd_recognize(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            // Witness vertices were already reported 1-indexed; keep the
            // final line free of the library's 0-indexed rendering.
            match &err {
                Error::NotInClass { reason, .. } => eprintln!("error: not in class: {reason}"),
                other => eprintln!("error: {other}"),
            }
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Input(_) | Error::Unsupported(_) => 2,
        Error::NotInClass { .. } => 3,
        Error::BudgetExhausted { .. } => 4,
        Error::Generation(_) => 1,
    }
}

fn read_instance(path: &PathBuf) -> Result<(Graph, Weights), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text)
}

fn one_indexed(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn print_witness(w: &Witness) {
    eprintln!("witness {}: {:?}", w.label, one_indexed(&w.vertices));
}

fn report_not_in_class(err: &Error, json: bool) {
    if let Error::NotInClass { reason, witness } = err {
        print_witness(witness);
        if json {
            let doc = json!({
                "error": "not_in_class",
                "reason": reason,
                "witness": {
                    "label": witness.label,
                    "vertices": one_indexed(&witness.vertices),
                },
            });
            println!("{doc}");
        }
    }
}

fn report_solution(sol: &Solution, class: &str, stats: &SolveStats, json: bool) {
    let set = one_indexed(&sol.set.to_vec());
    if json {
        let doc = json!({
            "weight": sol.weight,
            "set": set,
            "class": class,
            "stats": {
                "recursions": stats.recursions,
                "leaves": stats.leaves,
                "c5_scans": stats.c5_scans,
            },
        });
        println!("{doc}");
    } else {
        println!("class: {class}");
        println!("weight: {}", sol.weight);
        println!(
            "set: {}",
            set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        );
        println!(
            "stats: recursions={} leaves={} c5_scans={}",
            stats.recursions, stats.leaves, stats.c5_scans
        );
    }
}

fn cmd_solve(args: SolveArgs) -> Result<(), Error> {
    let (g, w) = read_instance(&args.input)?;
    let class = match args.class {
        ClassArg::P7bull => GraphClass::P7Bull,
        ClassArg::S123bull => GraphClass::S123Bull,
        ClassArg::Auto => {
            if class_witness(&g, GraphClass::P7Bull).is_none() {
                GraphClass::P7Bull
            } else if class_witness(&g, GraphClass::S123Bull).is_none() {
                GraphClass::S123Bull
            } else {
                let hit = class_witness(&g, GraphClass::P7Bull).expect("witness exists");
                let err = Error::not_in_class("the input fits neither class", hit.witness());
                report_not_in_class(&err, args.json);
                return Err(err);
            }
        }
    };
    let mut opts = SolveOptions { strict: args.strict, threads: args.threads.max(1), ..Default::default() };
    if let Some(budget) = args.budget {
        opts.leaf_budget = budget;
    }
    let solved = match class {
        GraphClass::P7Bull => solve_p7bull(&g, &w, &opts),
        GraphClass::S123Bull => solve_s123bull(&g, &w, &opts),
    };
    match solved {
        Ok((sol, stats)) => {
            report_solution(&sol, class.name(), &stats, args.json);
            Ok(())
        }
        Err(err) => {
            report_not_in_class(&err, args.json);
            Err(err)
        }
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<(), Error> {
    let (g, w) = read_instance(&args.input)?;
    let sol = exact_mwss(&g, &w, args.budget.unwrap_or(ORACLE_NODE_BUDGET))?;
    report_solution(&sol, "oracle", &SolveStats { leaves: 1, ..Default::default() }, args.json);
    Ok(())
}

fn cmd_recognize(args: RecognizeArgs) -> Result<(), Error> {
    let (g, _) = read_instance(&args.input)?;
    let p7 = class_witness(&g, GraphClass::P7Bull);
    let s123 = class_witness(&g, GraphClass::S123Bull);
    let module = find_proper_homogeneous_set(&g);
    if args.json {
        let class_doc = |hit: &Option<bullmwss::patterns::PatternHit>| match hit {
            None => json!({ "member": true }),
            Some(hit) => json!({
                "member": false,
                "witness": { "pattern": hit.pattern, "vertices": one_indexed(&hit.embedding) },
            }),
        };
        let doc = json!({
            "p7bull": class_doc(&p7),
            "s123bull": class_doc(&s123),
            "prime": module.is_none(),
            "homogeneous_set": module.as_ref().map(|m| one_indexed(&m.to_vec())),
        });
        println!("{doc}");
    } else {
        for (name, hit) in [("p7bull", &p7), ("s123bull", &s123)] {
            match hit {
                None => println!("{name}: member"),
                Some(hit) => println!(
                    "{name}: not a member (induced {} at {:?})",
                    hit.pattern,
                    one_indexed(&hit.embedding)
                ),
            }
        }
        match &module {
            None => println!("prime: yes"),
            Some(m) => println!("prime: no (homogeneous set {:?})", one_indexed(&m.to_vec())),
        }
    }
    Ok(())
}

fn cmd_generate(args: GenerateArgs) -> Result<(), Error> {
    use rand::{Rng, SeedableRng};
    let g = match args.family {
        FamilyArg::Random => {
            let class = match args.class {
                GenClassArg::P7bull => TargetClass::P7Bull,
                GenClassArg::S123bull => TargetClass::S123Bull,
                GenClassArg::Bullfreeprime => TargetClass::BullFreePrime,
            };
            random_in_class(args.n, args.p, class, args.seed)?
        }
        FamilyArg::C7blowup => {
            let sizes = args
                .sizes
                .as_ref()
                .ok_or_else(|| Error::input("c7blowup needs --sizes s1,...,s7"))?;
            let sizes: &[usize; 7] = sizes
                .as_slice()
                .try_into()
                .map_err(|_| Error::input("c7blowup needs exactly seven part sizes"))?;
            c7_blowup(sizes)?
        }
        FamilyArg::Fixture => fixture().0,
    };
    let weights = match args.weights {
        WeightsArg::Unit => Weights::unit(g.n()),
        WeightsArg::Random => {
            if args.wmax == 0 {
                return Err(Error::input("--wmax must be positive"));
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed ^ 0x57a7);
            Weights((0..g.n()).map(|_| rng.random_range(1..=args.wmax)).collect())
        }
    };
    std::fs::write(&args.output, write_graph(&g, &weights))
        .map_err(|e| Error::input(format!("cannot write {}: {e}", args.output.display())))?;
    println!("wrote {} (n={}, m={})", args.output.display(), g.n(), g.m());
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), Error> {
    if args.sizes.is_empty() {
        return Err(Error::input("--sizes must list at least one instance size"));
    }
    let family = match args.family {
        BenchFamilyArg::C7blowup => BenchFamily::C7Blowup,
        BenchFamilyArg::Fixturetwin => BenchFamily::FixtureTwin,
    };
    let report = run_bench(
        family,
        &args.sizes,
        args.repeat,
        args.seed,
        Duration::from_millis(args.oracle_cap_ms),
    )?;

    let mut csv = String::from("n,time_ms,recursions,leaves\n");
    for row in &report.rows {
        csv.push_str(&format!(
            "{},{:.3},{},{}\n",
            row.n, row.solve_ms, row.recursions, row.leaves
        ));
    }
    std::fs::write(&args.csv, csv)
        .map_err(|e| Error::input(format!("cannot write {}: {e}", args.csv.display())))?;

    println!("family: {}", report.family.name());
    for row in &report.rows {
        match row.oracle_ms {
            Some(o) => println!(
                "n={:3}  solve {:9.3} ms  exhaustive {:10.3} ms  recursions={} leaves={}",
                row.n, row.solve_ms, o, row.recursions, row.leaves
            ),
            None => println!(
                "n={:3}  solve {:9.3} ms  exhaustive DNF (cap {} ms)  recursions={} leaves={}",
                row.n, row.solve_ms, args.oracle_cap_ms, row.recursions, row.leaves
            ),
        }
    }
    println!(
        "log-log slope: recursions {:.3}, leaves {:.3}",
        report.slope_recursions, report.slope_leaves
    );
    match (report.largest_oracle_n, report.speedup_at_largest) {
        (Some(n), Some(speedup)) => {
            println!("largest size exhaustive enumeration finished: n={n}; speedup there: {speedup:.1}x");
        }
        _ => println!("exhaustive enumeration finished no size in the sweep"),
    }
    Ok(())
}
