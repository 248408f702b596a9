use clap::{Args, Parser, Subcommand, ValueEnum};
use sepbox::bench::{self, BenchSpec};
use sepbox::dataset::{Dataset, Format};
use sepbox::generate::{generate, GenSpec, Generator};
use sepbox::{oracle, report, selftest, solver, Case7Impl, GrowthImpl, SolveOptions};
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "sepbox", version, about = "Largest box holding all red points and no blue point inside")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one instance and print a JSON result.
    Solve(SolveArgs),
    /// Same as `solve --mode oracle`.
    Oracle(SolveArgs),
    /// Write a generated dataset.
    Gen(GenArgs),
    /// Timing sweep as CSV; slopes go to stderr.
    Bench(BenchArgs),
    /// Compare the solver with the oracle on generated scenes.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ModeArg {
    Fast,
    Oracle,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum GrowthArg {
    Staircase,
    Scan,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case7Arg {
    Smawk,
    Direct,
}

#[derive(Args)]
struct SolveArgs {
    /// Combined dataset with red and blue rows.
    #[arg(long, conflicts_with_all = ["red", "blue"])]
    input: Option<PathBuf>,
    #[arg(long, requires = "blue")]
    red: Option<PathBuf>,
    #[arg(long, requires = "red")]
    blue: Option<PathBuf>,
    /// Input format; guessed from the extension if absent.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long, value_enum, default_value = "fast")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "staircase")]
    growth: GrowthArg,
    #[arg(long, value_enum, default_value = "smawk")]
    case7: Case7Arg,
    /// Only the eight support-pattern enumerators.
    #[arg(long)]
    cases_only: bool,
    /// Add phase timings to the output.
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value = "sparse-blockers")]
    generator: String,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    grid: u32,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value = "sparse-blockers")]
    generator: String,
    /// Comma-separated blue counts.
    #[arg(long, value_delimiter = ',', default_value = "100,200,400")]
    ms: Vec<usize>,
    /// Comma-separated red counts.
    #[arg(long, value_delimiter = ',', default_value = "1000")]
    ns: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "fast")]
    mode: ModeArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 200)]
    instances: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn format_for(path: &Path, f: Option<FormatArg>) -> Format {
    f.map_or_else(|| Format::from_path(path), Format::from)
}

fn load(a: &SolveArgs) -> sepbox::Result<Dataset> {
    match (&a.input, &a.red, &a.blue) {
        (Some(p), _, _) => Dataset::load(p, format_for(p, a.format)),
        (None, Some(r), Some(b)) => Ok(Dataset::new(
            Dataset::load_points(r, format_for(r, a.format), "red")?,
            Dataset::load_points(b, format_for(b, a.format), "blue")?,
        )),
        _ => Err(sepbox::Error::InvalidParameters("give --input, or both --red and --blue".into())),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> sepbox::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run_solve(a: SolveArgs, mode: ModeArg) -> sepbox::Result<ExitCode> {
    let d = load(&a)?;
    let scene = sepbox::build_scene(&d.red, &d.blue)?;
    let mut opts = if a.cases_only { SolveOptions::cases_only() } else { SolveOptions::default() };
    opts.growth = match a.growth {
        GrowthArg::Staircase => GrowthImpl::Staircase,
        GrowthArg::Scan => GrowthImpl::Scan,
    };
    opts.case7 = match a.case7 {
        Case7Arg::Smawk => Case7Impl::Smawk,
        Case7Arg::Direct => Case7Impl::Direct,
    };
    let fast = || solver::solve_scene(&scene, &opts);
    let (doc, code) = match mode {
        ModeArg::Fast => (report::solve_json(&scene, &fast(), a.timings), ExitCode::SUCCESS),
        ModeArg::Oracle => (report::oracle_json(&oracle::solve_scene(&scene)?), ExitCode::SUCCESS),
        ModeArg::Both => {
            let f = fast();
            let o = oracle::solve_scene(&scene)?;
            let agree = f.volume() == o.volume();
            let doc = json!({
                "agree": agree,
                "fast": report::solve_json(&scene, &f, a.timings),
                "oracle": report::oracle_json(&o),
            });
            if !agree {
                eprintln!("volume mismatch: fast {:?}, oracle {:?}", f.volume(), o.volume());
            }
            (doc, if agree { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
    };
    emit(&a.out, &report::render(&doc))?;
    Ok(code)
}

fn run_gen(a: GenArgs) -> sepbox::Result<ExitCode> {
    let spec = GenSpec { grid: a.grid, ..GenSpec::new(a.generator.parse::<Generator>()?, a.n, a.m, a.seed) };
    let d = generate(&spec)?;
    emit(&a.out, &d.render(a.format.into())?)?;
    Ok(ExitCode::SUCCESS)
}

fn run_bench(a: BenchArgs) -> sepbox::Result<ExitCode> {
    let mode = match a.mode {
        ModeArg::Fast => bench::Mode::Fast,
        ModeArg::Oracle => bench::Mode::Oracle,
        ModeArg::Both => return Err(sepbox::Error::InvalidParameters("bench takes --mode fast or oracle".into())),
    };
    let spec = BenchSpec { generator: a.generator.parse()?, ms: a.ms, ns: a.ns, reps: a.reps, seed: a.seed, mode };
    let sink: Box<dyn Write> = match &a.out {
        Some(p) => Box::new(std::fs::File::create(p)?),
        None => Box::new(std::io::stdout()),
    };
    let mut w = bench::csv_writer(sink)?;
    let rows = bench::run_bench(&spec, |r| bench::write_record(&mut w, r))?;
    eprint!("{}", bench::summary(&bench::slopes(&rows)));
    Ok(ExitCode::SUCCESS)
}

fn run_selftest(a: SelftestArgs) -> sepbox::Result<ExitCode> {
    let r = selftest::run(a.instances, a.seed, &SolveOptions::default());
    println!(
        "instances {} bounded {} skipped {} mismatches {}",
        r.instances,
        r.bounded,
        r.skipped,
        r.mismatches.len()
    );
    for m in &r.mismatches {
        println!("mismatch {:?}: fast {:?} oracle {:?}", m.spec, m.fast, m.oracle);
    }
    Ok(if r.mismatches.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.cmd {
        Cmd::Solve(a) => {
            let mode = a.mode;
            run_solve(a, mode)
        }
        Cmd::Oracle(a) => run_solve(a, ModeArg::Oracle),
        Cmd::Gen(a) => run_gen(a),
        Cmd::Bench(a) => run_bench(a),
        Cmd::Selftest(a) => run_selftest(a),
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
