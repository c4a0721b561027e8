use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use monotrail::constructions::{
    affine_plane_coloring, extremal_bipartite_split, random_coloring, AffinePlaneParams,
};
use monotrail::format::{parse_cert, parse_ecg, write_cert, write_ecg};
use monotrail::oracle::{self, Mode};
use monotrail::sweep::{self, Family, SweepConfig};
use monotrail::{check_trail, proof_trace, solve, CaseTraceF64, EdgeColoring, Error};

const EXIT_INVALID: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_SIZE: u8 = 4;
const EXIT_GUARD: u8 = 5;
const EXIT_INTERNAL: u8 = 70;

/// A failure carrying its process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

/// Maps library errors onto exit codes.
fn lib_failure(err: Error) -> Failure {
    let code = match err {
        Error::Parse { .. } => EXIT_PARSE,
        Error::TooLarge { .. } => EXIT_SIZE,
        _ => EXIT_GUARD,
    };
    Failure::new(code, err.to_string())
}

type CliResult = Result<(), Failure>;

#[derive(Parser)]
#[command(name = "monotrail", version, about = "Long monochromatic circuits in edge-colored complete graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a coloring in ecg format.
    Gen(GenArgs),
    /// Find a long monochromatic circuit and write its certificate.
    Solve(SolveArgs),
    /// Check a certificate against a coloring.
    Verify(VerifyArgs),
    /// Run the pipeline over a family of colorings and write CSV.
    Sweep(SweepArgs),
    /// Exact longest trail/circuit, or the worst coloring of a tiny K_n.
    Oracle(OracleArgs),
    /// Print the two-color case analysis of a coloring.
    Diagnose(DiagnoseArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Extremal,
    Affine,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: GenFamily,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Certificate output path.
    #[arg(short, long)]
    cert: PathBuf,
    /// Print parity forests and the case analysis (two colors only).
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long)]
    cert: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFamily {
    Extremal,
    Random,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: SweepFamily,
    /// First n.
    #[arg(long)]
    n_min: usize,
    /// Last n (inclusive); defaults to --n-min.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 1)]
    step: usize,
    /// Seeds `seed-start .. seed-start + seeds` (random family).
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed_start: u64,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Record wall time per instance in runtime_ms (otherwise 0).
    #[arg(long)]
    timing: bool,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Trail,
    Circuit,
    Worstcase,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    mode: OracleMode,
    /// Coloring to search (trail and circuit modes).
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Vertex count (worstcase mode).
    #[arg(long)]
    n: Option<usize>,
    /// Objective of the worstcase search.
    #[arg(long, default_value = "trail")]
    objective: Mode,
    /// Permit n = 7 in worstcase mode.
    #[arg(long)]
    allow_n7: bool,
    #[arg(long, default_value_t = oracle::EDGE_LIMIT)]
    max_edges: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Where worstcase writes its witness coloring.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct DiagnoseArgs {
    #[arg(short, long)]
    input: PathBuf,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path) -> Result<EdgeColoring, Failure> {
    parse_ecg(&read(path)?).map_err(|e| {
        Failure::new(EXIT_PARSE, format!("{}: {e}", path.display()))
    })
}

fn require<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::new(EXIT_GUARD, format!("--{flag} is required for {family}")))
}

fn gen(args: GenArgs) -> CliResult {
    let coloring = match args.family {
        GenFamily::Extremal => extremal_bipartite_split(require(args.n, "n", "extremal")?),
        GenFamily::Affine => {
            let q = require(args.q, "q", "affine")?;
            let m = require(args.m, "m", "affine")?;
            AffinePlaneParams::new(q, m).and_then(affine_plane_coloring)
        }
        GenFamily::Random => random_coloring(
            require(args.n, "n", "random")?,
            require(args.k, "k", "random")?,
            require(args.seed, "seed", "random")?,
        ),
    }
    .map_err(lib_failure)?;
    let text = write_ecg(&coloring);
    let params = format!("n={} k={}", coloring.n(), coloring.k());
    match args.out {
        Some(path) => {
            write(&path, &text)?;
            println!("{params}");
        }
        None => {
            print!("{text}");
            eprintln!("{params}");
        }
    }
    Ok(())
}

fn print_trace(trace: &CaseTraceF64) {
    let d = &trace.diagnosis;
    println!("n1={} case={}", d.n1, d.case);
    println!(
        "input_n1={} swapped_n1={} swapped_case={}",
        d.input_n1, d.swapped_n1, d.swapped_case
    );
    if let Some(v1) = &trace.v1 {
        println!("v1_size={}", v1.len());
    }
    if let Some(met) = trace.hypothesis_met {
        println!("hypothesis_met={met}");
    }
    for inequality in &trace.inequalities {
        println!("{inequality}");
    }
}

fn solve_cmd(args: SolveArgs) -> CliResult {
    let coloring = load_coloring(&args.input)?;
    let report = solve(&coloring);
    if let Err(defect) = check_trail(&coloring, &report.circuit) {
        return Err(Failure::new(
            EXIT_INTERNAL,
            format!("internal error: produced certificate fails with {defect}"),
        ));
    }
    write(&args.cert, &write_cert(&report.circuit))?;
    println!(
        "{} {} {} {}",
        report.color,
        report.length(),
        report.threshold,
        if report.threshold_met { "pass" } else { "below-threshold" }
    );
    if args.trace {
        for forest in &report.forests {
            let edges: Vec<String> = forest.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("forest color={} size={} edges={}", forest.color, forest.len(), edges.join(" "));
        }
        match proof_trace::<f64>(&coloring) {
            Ok(trace) => print_trace(&trace),
            Err(_) => println!("case analysis needs k = 2 (k = {})", coloring.k()),
        }
    }
    Ok(())
}

fn verify_cmd(args: VerifyArgs) -> CliResult {
    let coloring = load_coloring(&args.input)?;
    let trail = parse_cert(&read(&args.cert)?)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", args.cert.display())))?;
    if trail.color >= coloring.k() {
        return Err(Failure::new(
            EXIT_PARSE,
            format!("{}: color {} out of range for k = {}", args.cert.display(), trail.color, coloring.k()),
        ));
    }
    match check_trail(&coloring, &trail) {
        Ok(()) => {
            println!("ok length={} closed={}", trail.len(), u8::from(trail.closed));
            Ok(())
        }
        Err(defect) => Err(Failure::new(EXIT_INVALID, defect.to_string())),
    }
}

fn sweep_cmd(args: SweepArgs) -> CliResult {
    if args.step == 0 {
        return Err(Failure::new(EXIT_GUARD, "--step must be positive"));
    }
    let n_max = args.n_max.unwrap_or(args.n_min);
    if n_max < args.n_min {
        return Err(Failure::new(EXIT_GUARD, "--n-max is below --n-min"));
    }
    let config = SweepConfig {
        family: match args.family {
            SweepFamily::Extremal => Family::Extremal,
            SweepFamily::Random => Family::Random,
        },
        ns: (args.n_min..=n_max).step_by(args.step).collect(),
        seeds: (args.seed_start..args.seed_start + args.seeds).collect(),
        k: args.k,
        threads: args.threads,
        timing: args.timing,
    };
    let rows = sweep::run_sweep(&config).map_err(lib_failure)?;
    let csv = sweep::to_csv(&rows);
    let summary = sweep::summarize(&rows);
    match &args.out {
        Some(path) => write(path, &csv)?,
        None => print!("{csv}"),
    }
    let report = |line: String| {
        if args.out.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    };
    report(format!("rows={}", rows.len()));
    report(format!("max_split_deviation={:.6}", summary.max_split_deviation));
    match summary.max_inversion_deviation {
        Some(d) => report(format!("max_inversion_deviation={d:.6} (n >= {})", sweep::INVERSION_MIN_N)),
        None => report(format!("max_inversion_deviation=- (no n >= {})", sweep::INVERSION_MIN_N)),
    }
    report(format!("below_threshold={}", summary.below_threshold));
    if summary.invalid_certificates > 0 {
        return Err(Failure::new(
            EXIT_INTERNAL,
            format!("internal error: {} certificates failed", summary.invalid_certificates),
        ));
    }
    Ok(())
}

fn oracle_cmd(args: OracleArgs) -> CliResult {
    match args.mode {
        OracleMode::Trail | OracleMode::Circuit => {
            let mode = if matches!(args.mode, OracleMode::Trail) {
                Mode::Trail
            } else {
                Mode::Circuit
            };
            let path = args
                .input
                .ok_or_else(|| Failure::new(EXIT_GUARD, "--input is required for this mode"))?;
            let coloring = load_coloring(&path)?;
            let result =
                oracle::longest_monochromatic(&coloring, mode, args.max_edges).map_err(lib_failure)?;
            let path: Vec<String> = result.witness.vertices.iter().map(ToString::to_string).collect();
            println!("value={} color={} nodes={}", result.length, result.witness.color, result.nodes);
            println!("witness={}", path.join(" "));
        }
        OracleMode::Worstcase => {
            let n = args
                .n
                .ok_or_else(|| Failure::new(EXIT_GUARD, "--n is required for worstcase"))?;
            let result = oracle::worst_case_search(n, args.objective, args.allow_n7, args.threads)
                .map_err(lib_failure)?;
            let witness_path = args
                .witness_out
                .unwrap_or_else(|| PathBuf::from(format!("worstcase-n{n}-{}.ecg", args.objective)));
            write(&witness_path, &write_ecg(&result.witness))?;
            let path: Vec<String> =
                result.witness_trail.vertices.iter().map(ToString::to_string).collect();
            println!("value={} colorings={}", result.value, result.colorings);
            println!("witness={} color={}", path.join(" "), result.witness_trail.color);
            println!("n,mode,value,witness_file");
            println!("{},{},{},{}", n, args.objective, result.value, witness_path.display());
        }
    }
    Ok(())
}

fn diagnose_cmd(args: DiagnoseArgs) -> CliResult {
    let coloring = load_coloring(&args.input)?;
    let trace = proof_trace::<f64>(&coloring).map_err(|e| Failure::new(EXIT_GUARD, e.to_string()))?;
    print_trace(&trace);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_GUARD)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Gen(args) => gen(args),
        Command::Solve(args) => solve_cmd(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Sweep(args) => sweep_cmd(args),
        Command::Oracle(args) => oracle_cmd(args),
        Command::Diagnose(args) => diagnose_cmd(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("monotrail: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
