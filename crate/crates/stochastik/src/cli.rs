//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure or divergence, 2 bad configuration,
//! 3 at least one statistical test failed. Data goes to stdout (or `--out`),
//! diagnostics to stderr.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stochastik_core::distributions::{self, BoxMuller, NormalParams, NormalSampler, PoissonParams};
use stochastik_core::processes::{poisson_trajectory, wiener_trajectory, TimeGrid, Trajectory};
use stochastik_core::sde::{self, IncrementVariance, OscillatorConfig, SampleClock};
use stochastik_core::stattests::{run_battery, BATTERY_MIN_SAMPLES};
use stochastik_core::{expand_seed, Generator, GeneratorKind};

use crate::entropy;
use crate::export::{self, ExportError, StreamHeader};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_TEST_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "stochastik",
    version,
    about = "Pseudo-random streams, variates and stochastic trajectories"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit raw generator output words.
    Gen(GenArgs),
    /// Sample from a distribution, one value per line.
    Dist(DistArgs),
    /// Simulate Wiener or Poisson process trajectories as CSV.
    Process(ProcessArgs),
    /// Run the statistical test battery on a generator.
    Test(TestArgs),
    /// Integrate the noisy van der Pol-Duffing oscillator.
    Sde(SdeArgs),
}

/// A seed word, or `os` to draw one from the system entropy source.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seed {
    Value(u64),
    Os,
}

impl FromStr for Seed {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "os" {
            return Ok(Seed::Os);
        }
        s.parse()
            .map(Seed::Value)
            .map_err(|_| format!("expected an unsigned 64-bit integer or `os`, got '{s}'"))
    }
}

impl Seed {
    fn resolve(self) -> Result<u64, CliError> {
        match self {
            Seed::Value(v) => Ok(v),
            Seed::Os => {
                let w = entropy::os_seed(1)
                    .map_err(|e| CliError::Io(format!("{e}; pass an explicit --seed")))?;
                eprintln!("seed: {}", w[0]);
                Ok(w[0])
            }
        }
    }
}

#[derive(Debug, Args)]
struct Source {
    /// Generator name.
    #[arg(long, default_value = "xorshift-star")]
    alg: GeneratorKind,
    /// Seed word or `os`.
    #[arg(long, default_value = "1")]
    seed: Seed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StreamFormat {
    DieharderText,
    Raw,
    Hex,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    alg: GeneratorKind,
    #[arg(long, default_value = "1")]
    seed: Seed,
    #[arg(long, default_value_t = 1000)]
    count: u64,
    #[arg(long, value_enum, default_value_t = StreamFormat::DieharderText)]
    format: StreamFormat,
    /// Header width for dieharder-text (32 or 64). A 32-bit header on a
    /// 64-bit generator keeps the high half of each word.
    #[arg(long)]
    numbit: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DistArgs {
    #[command(subcommand)]
    dist: DistKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Polar,
    Standard,
}

#[derive(Debug, Subcommand)]
enum DistKind {
    #[command(allow_negative_numbers = true)]
    Normal {
        #[arg(long, default_value_t = 0.0)]
        mu: f64,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Polar)]
        method: MethodArg,
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    #[command(allow_negative_numbers = true)]
    Poisson {
        #[arg(long)]
        lambda: f64,
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct ProcessArgs {
    #[command(subcommand)]
    process: ProcessKind,
}

#[derive(Debug, Args)]
struct Ensemble {
    #[command(flatten)]
    src: Source,
    /// Number of independent trajectories; more than one requires --out,
    /// and files are written as `<stem>_<i>.<ext>`.
    #[arg(long, default_value_t = 1)]
    trajectories: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum ProcessKind {
    #[command(allow_negative_numbers = true)]
    Wiener {
        /// Horizon.
        #[arg(long = "T")]
        horizon: f64,
        /// Time step.
        #[arg(long = "h")]
        step: f64,
        #[arg(long, default_value_t = 1)]
        dims: usize,
        #[command(flatten)]
        ens: Ensemble,
    },
    #[command(allow_negative_numbers = true)]
    Poisson {
        #[arg(long)]
        lambda: f64,
        #[arg(long = "T")]
        horizon: f64,
        #[arg(long = "h")]
        step: f64,
        #[command(flatten)]
        ens: Ensemble,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Csv,
}

#[derive(Debug, Args)]
struct TestArgs {
    #[arg(long)]
    alg: GeneratorKind,
    #[arg(long, default_value = "1")]
    seed: Seed,
    #[arg(long, default_value_t = 1_000_000)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VarianceArg {
    Step,
    Unit,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct SdeArgs {
    #[arg(long, default_value_t = 2.0)]
    x0: f64,
    #[arg(long, default_value_t = 0.0)]
    y0: f64,
    #[arg(long, default_value_t = 0.0)]
    t0: f64,
    #[arg(long, default_value_t = 100.0)]
    t_end: f64,
    /// Upper bound on the Euler step.
    #[arg(long, default_value_t = 1e-3)]
    h_euler: f64,
    /// Interval between Wiener increments.
    #[arg(long, default_value_t = 0.1)]
    h_sample: f64,
    #[arg(long, default_value_t = 1.0)]
    gain: f64,
    #[arg(long, value_enum, default_value_t = VarianceArg::Step)]
    increment_variance: VarianceArg,
    #[command(flatten)]
    src: Source,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Config(String),
    Io(String),
    TestFailed(usize),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Io(_) => EXIT_IO,
            CliError::TestFailed(_) => EXIT_TEST_FAILED,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::TestFailed(n) => write!(f, "{n} test(s) failed"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(format!("I/O error: {e}"))
    }
}

impl From<ExportError> for CliError {
    fn from(e: ExportError) -> Self {
        match e {
            ExportError::Io(e) => e.into(),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<stochastik_core::Error> for CliError {
    fn from(e: stochastik_core::Error) -> Self {
        match e {
            stochastik_core::Error::Diverged { .. } => CliError::Io(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

/// Parse `std::env::args`, run, and return the process exit code.
pub fn main() -> i32 {
    run(std::env::args_os())
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("stochastik: {e}");
            e.code()
        }
    }
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Gen(a) => cmd_gen(a),
        Command::Dist(a) => cmd_dist(a.dist),
        Command::Process(a) => cmd_process(a.process),
        Command::Test(a) => cmd_test(a),
        Command::Sde(a) => cmd_sde(a),
    }
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(
            File::create(p)
                .map_err(|e| CliError::Io(format!("cannot create {}: {e}", p.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    })
}

fn build(kind: GeneratorKind, seed: u64) -> Result<Box<dyn Generator + Send>, CliError> {
    kind.build(seed)
        .map_err(|e| CliError::Config(format!("{kind}: {e}")))
}

fn cmd_gen(a: GenArgs) -> Result<(), CliError> {
    let mut gen = build(a.alg, a.seed.resolve()?)?;
    let native = gen.word_bits();
    let sink = open_out(a.out.as_deref())?;
    let words = (0..a.count).map(|_| gen.next_word());
    match a.format {
        StreamFormat::DieharderText => {
            let numbit = a.numbit.unwrap_or(native);
            let header = StreamHeader::new(a.count, numbit)?;
            let shift = if numbit < native { 64 - numbit } else { 0 };
            export::write_dieharder_text(sink, header, words.map(|w| w >> shift))?;
        }
        StreamFormat::Raw | StreamFormat::Hex if a.numbit.is_some() => {
            return Err(CliError::Config(
                "--numbit applies only to dieharder-text".into(),
            ));
        }
        StreamFormat::Raw => {
            export::write_raw_binary(sink, words)?;
        }
        StreamFormat::Hex => {
            export::write_hex_lines(sink, words)?;
        }
    }
    Ok(())
}

fn cmd_dist(kind: DistKind) -> Result<(), CliError> {
    match kind {
        DistKind::Normal {
            mu,
            sigma,
            method,
            src,
            count,
            out,
        } => {
            let params = NormalParams::new(mu, sigma)?;
            let method = match method {
                MethodArg::Polar => BoxMuller::Polar,
                MethodArg::Standard => BoxMuller::Standard,
            };
            let gen = build(src.alg, src.seed.resolve()?)?;
            let mut sampler = NormalSampler::with_method(gen, params, method);
            let mut sink = io::BufWriter::new(open_out(out.as_deref())?);
            for _ in 0..count {
                writeln!(sink, "{}", export::format_g17(sampler.sample()))?;
            }
            sink.flush()?;
        }
        DistKind::Poisson {
            lambda,
            src,
            count,
            out,
        } => {
            let params = PoissonParams::new(lambda)?;
            let mut gen = build(src.alg, src.seed.resolve()?)?;
            let mut sink = io::BufWriter::new(open_out(out.as_deref())?);
            for _ in 0..count {
                writeln!(sink, "{}", distributions::poisson(&mut gen, &params))?;
            }
            sink.flush()?;
        }
    }
    Ok(())
}

/// `dir/stem.ext` -> `dir/stem_<i>.ext`.
fn indexed_path(base: &Path, i: usize) -> PathBuf {
    let stem = base
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}_{i}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{i}"),
    };
    base.with_file_name(name)
}

fn cmd_process(kind: ProcessKind) -> Result<(), CliError> {
    let (horizon, step, ens) = match &kind {
        ProcessKind::Wiener {
            horizon, step, ens, ..
        } => (*horizon, *step, ens),
        ProcessKind::Poisson {
            horizon, step, ens, ..
        } => (*horizon, *step, ens),
    };
    let grid = TimeGrid::over(horizon, step)?;
    if ens.trajectories == 0 {
        return Err(CliError::Config("--trajectories must be at least 1".into()));
    }
    if ens.trajectories > 1 && ens.out.is_none() {
        return Err(CliError::Config(
            "--out is required with more than one trajectory".into(),
        ));
    }
    let simulate = |seed: u64| -> Result<Trajectory, CliError> {
        let gen = build(ens.src.alg, seed)?;
        Ok(match &kind {
            ProcessKind::Wiener { dims, .. } => wiener_trajectory(gen, grid, *dims)?,
            ProcessKind::Poisson { lambda, .. } => poisson_trajectory(gen, grid, *lambda)?,
        })
    };
    let seeds = expand_seed(ens.src.seed.resolve()?, ens.trajectories);
    for (i, &seed) in seeds.iter().enumerate() {
        let traj = simulate(seed)?;
        let path = match &ens.out {
            Some(base) if ens.trajectories > 1 => Some(indexed_path(base, i)),
            other => other.clone(),
        };
        export::write_trajectory_csv(open_out(path.as_deref())?, &traj)?;
    }
    Ok(())
}

fn cmd_test(a: TestArgs) -> Result<(), CliError> {
    if a.samples < BATTERY_MIN_SAMPLES {
        return Err(CliError::Config(format!(
            "--samples must be at least {BATTERY_MIN_SAMPLES}, got {}",
            a.samples
        )));
    }
    let mut gen = build(a.alg, a.seed.resolve()?)?;
    let report = run_battery(a.alg.name(), &mut gen, a.samples)?;
    let mut out = io::stdout().lock();
    match a.format {
        ReportFormat::Text => write!(out, "{report}")?,
        ReportFormat::Csv => out.write_all(report.to_csv().as_bytes())?,
    }
    out.flush()?;
    match report.summary().fail {
        0 => Ok(()),
        n => Err(CliError::TestFailed(n)),
    }
}

fn cmd_sde(a: SdeArgs) -> Result<(), CliError> {
    let config = OscillatorConfig {
        x0: a.x0,
        y0: a.y0,
        t_end: a.t_end,
        euler_step: a.h_euler,
        clock: SampleClock::new(a.t0, a.h_sample)?,
        gain: a.gain,
        increments: match a.increment_variance {
            VarianceArg::Step => IncrementVariance::Step,
            VarianceArg::Unit => IncrementVariance::Unit,
        },
    };
    let gen = build(a.src.alg, a.src.seed.resolve()?)?;
    let traj = sde::simulate(&config, gen)?;
    export::write_trajectory_csv_labeled(open_out(a.out.as_deref())?, &traj, &["x", "y", "W"])?;
    Ok(())
}
