//! Command-line driver for the arithmetic Fourier/Hartley transform
//! library: signal and spectrum CSV in, spectra, coefficient tables,
//! weight tables and JSON run reports out.

mod io;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mobius_xform::aft::{reed_shih, reed_tufts, AftResult};
use mobius_xform::aht::{aht_forward_with_threads, aht_inverse, Spectrum};
use mobius_xform::interp::{weight, Kernel, Resolver, WeightMode, WeightSpec};
use mobius_xform::oracle::{compare, dht_definition};
use mobius_xform::signal::{GridRule, SignalSource};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use io::{format_float, read_signal, read_spectrum, write_signal, write_spectrum};
use report::Report;

#[derive(Parser)]
#[command(name = "mobius-xform", version, about = "Arithmetic transforms over Mobius inversion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Forward arithmetic Hartley transform of a signal CSV.
    AhtForward(AhtForwardArgs),
    /// Inverse arithmetic Hartley transform of a spectrum CSV.
    AhtInverse(AhtInverseArgs),
    /// Arithmetic Fourier transform: recover series coefficients.
    Aft(AftArgs),
    /// Emit the interpolation weight table w_i(r).
    Weights(WeightsArgs),
    /// Compare an arithmetic transform against the definitional oracle.
    Compare(CompareArgs),
    /// Time a transform on a seeded random signal.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelArg {
    Hartley,
    FourierCosine,
    FourierSine,
}

impl From<KernelArg> for Kernel {
    fn from(k: KernelArg) -> Kernel {
        match k {
            KernelArg::Hartley => Kernel::Hartley,
            KernelArg::FourierCosine => Kernel::FourierCosine,
            KernelArg::FourierSine => Kernel::FourierSine,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ResolverArg {
    Ideal,
    ZeroOrder,
    SymmetricZeroOrder,
    TopM,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Closed,
    DirectSum,
    Asymptotic,
}

impl From<ModeArg> for WeightMode {
    fn from(m: ModeArg) -> WeightMode {
        match m {
            ModeArg::Closed => WeightMode::Closed,
            ModeArg::DirectSum => WeightMode::DirectSum,
            ModeArg::Asymptotic => WeightMode::Asymptotic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AftAlgorithmArg {
    ReedTufts,
    ReedShih,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridRuleArg {
    ZeroOrder,
    FirstOrder,
}

#[derive(Args)]
struct ResolverFlags {
    /// Fractional-index resolution strategy.
    #[arg(long, value_enum, default_value = "ideal")]
    resolver: ResolverArg,
    /// Interpolation kernel for ideal and top-m resolvers.
    #[arg(long, value_enum, default_value = "hartley")]
    kernel: KernelArg,
    /// Number of retained weights; only valid with the top-m resolver.
    #[arg(long)]
    m: Option<usize>,
}

impl ResolverFlags {
    fn build(&self, n: usize) -> Result<Resolver, String> {
        if self.m.is_some() && !matches!(self.resolver, ResolverArg::TopM) {
            return Err("--m is only valid with --resolver top-m".into());
        }
        let spec = WeightSpec::new(self.kernel.into(), WeightMode::Closed, n)
            .map_err(|e| format!("interp: {e}"))?;
        Ok(match self.resolver {
            ResolverArg::Ideal => Resolver::Ideal(spec),
            ResolverArg::ZeroOrder => Resolver::ZeroOrder,
            ResolverArg::SymmetricZeroOrder => Resolver::SymmetricZeroOrder,
            ResolverArg::TopM => Resolver::TopM {
                spec,
                m: self.m.ok_or("--resolver top-m requires --m")?,
            },
        })
    }

    fn name(&self) -> &'static str {
        match self.resolver {
            ResolverArg::Ideal => "ideal",
            ResolverArg::ZeroOrder => "zero-order",
            ResolverArg::SymmetricZeroOrder => "symmetric-zero-order",
            ResolverArg::TopM => "top-m",
        }
    }

    fn kernel_name(&self) -> Option<String> {
        match self.resolver {
            ResolverArg::Ideal | ResolverArg::TopM => {
                Some(Kernel::from(self.kernel).name().to_string())
            }
            _ => None,
        }
    }
}

#[derive(Args)]
struct AhtForwardArgs {
    /// Signal CSV: one real per line, optional `# N=<int>` header.
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    resolver: ResolverFlags,
    /// Spectrum CSV destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON report destination.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Also run the definitional transform and report error metrics.
    #[arg(long)]
    compare_oracle: bool,
}

#[derive(Args)]
struct AhtInverseArgs {
    /// Spectrum CSV: `k,value` rows.
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    resolver: ResolverFlags,
    /// Signal CSV destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AftArgs {
    /// Signal CSV holding uniform samples of one period.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "reed-shih")]
    algorithm: AftAlgorithmArg,
    /// Number of harmonics to recover.
    #[arg(long)]
    harmonics: usize,
    /// Interpolation between grid samples.
    #[arg(long, value_enum, default_value = "zero-order")]
    grid_rule: GridRuleArg,
    /// Coefficient CSV destination, rows `n,a,b` (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON report destination.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct WeightsArgs {
    #[arg(long, value_enum, default_value = "hartley")]
    kernel: KernelArg,
    /// Blocklength.
    #[arg(long = "N", visible_alias = "n")]
    n: usize,
    /// Fractional index to interpolate.
    #[arg(long)]
    r: f64,
    #[arg(long, value_enum, default_value = "closed")]
    mode: ModeArg,
    /// Weight CSV destination, rows `i,r,w` (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Built-in scenario (only `fig5` is defined).
    #[arg(long)]
    signal: Option<String>,
    /// Signal CSV to transform instead of a built-in scenario.
    #[arg(long, conflicts_with = "signal")]
    input: Option<PathBuf>,
    #[command(flatten)]
    resolver: ResolverFlags,
    /// JSON report destination (stdout when omitted).
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Blocklength of the generated signal.
    #[arg(long = "N", visible_alias = "n")]
    n: usize,
    /// RNG seed for the generated signal.
    #[arg(long, default_value = "0")]
    seed: u64,
    #[command(flatten)]
    resolver: ResolverFlags,
    /// JSON report destination (stdout when omitted).
    #[arg(long)]
    report: Option<PathBuf>,
}

fn thread_count() -> usize {
    std::env::var("MOBIUS_XFORM_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

fn emit(path: &Option<PathBuf>, contents: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, contents).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

/// The built-in scenario: cos(90 pi t) (t - 1/2)^2 at 32 uniform points.
fn fig5_samples() -> Vec<f64> {
    (0..32)
        .map(|i| {
            let t = i as f64 / 32.0;
            (90.0 * std::f64::consts::PI * t).cos() * (t - 0.5) * (t - 0.5)
        })
        .collect()
}

fn run_aht_forward(args: &AhtForwardArgs) -> Result<(), String> {
    let v = read_signal(&args.input).map_err(|e| format!("parse: {e}"))?;
    let resolver = args.resolver.build(v.len())?;
    let start = Instant::now();
    let result = aht_forward_with_threads(&v, &resolver, thread_count())
        .map_err(|e| format!("aht: {e}"))?;
    let wall = start.elapsed().as_secs_f64() * 1e3;
    emit(&args.out, &write_spectrum(result.spectrum.values()))?;

    if args.report.is_some() || args.compare_oracle {
        let mut report = Report {
            algorithm: Some("aht-forward".into()),
            kernel: args.resolver.kernel_name(),
            resolver: Some(args.resolver.name().into()),
            n: v.len(),
            nontrivial_mults: result.ops.nontrivial_mults,
            trivial_mults: result.ops.trivial_mults,
            adds: result.ops.adds,
            wall_time_ms: wall,
            ..Report::default()
        };
        if args.compare_oracle {
            let reference = dht_definition(&v);
            let metrics = compare(result.spectrum.values(), reference.values())
                .map_err(|e| format!("oracle: {e}"))?;
            report.max_abs_err = Some(metrics.max_abs);
            report.rmse = Some(metrics.rmse);
            report.relative_rmse = metrics.relative_rmse;
        }
        let json = report.to_json();
        match &args.report {
            Some(path) => emit(&Some(path.clone()), &json)?,
            None => eprint!("{json}"),
        }
    }
    Ok(())
}

fn run_aht_inverse(args: &AhtInverseArgs) -> Result<(), String> {
    let values = read_spectrum(&args.input).map_err(|e| format!("parse: {e}"))?;
    let resolver = args.resolver.build(values.len())?;
    let spectrum = Spectrum::from_values(values);
    let v = aht_inverse(&spectrum, &resolver).map_err(|e| format!("aht: {e}"))?;
    emit(&args.out, &write_signal(&v))
}

fn write_coefficients(result: &AftResult) -> String {
    let mut out = format!("0,{},{}\n", format_float(result.coeffs.a0), format_float(0.0));
    for n in 0..result.coeffs.harmonics() {
        out.push_str(&format!(
            "{},{},{}\n",
            n + 1,
            format_float(result.coeffs.a[n]),
            format_float(result.coeffs.b[n]),
        ));
    }
    out
}

fn run_aft(args: &AftArgs) -> Result<(), String> {
    let samples = read_signal(&args.input).map_err(|e| format!("parse: {e}"))?;
    let t0 = 1.0 / samples.len() as f64;
    let rule = match args.grid_rule {
        GridRuleArg::ZeroOrder => GridRule::ZeroOrder,
        GridRuleArg::FirstOrder => GridRule::FirstOrder,
    };
    let src = SignalSource::grid(samples, t0, 1.0, rule).map_err(|e| format!("signal: {e}"))?;
    let (name, runner): (&str, fn(&SignalSource, usize) -> _) = match args.algorithm {
        AftAlgorithmArg::ReedTufts => ("reed-tufts", reed_tufts),
        AftAlgorithmArg::ReedShih => ("reed-shih", reed_shih),
    };
    let start = Instant::now();
    let result = runner(&src, args.harmonics).map_err(|e| format!("aft: {e}"))?;
    let wall = start.elapsed().as_secs_f64() * 1e3;
    emit(&args.out, &write_coefficients(&result))?;
    if let Some(path) = &args.report {
        let report = Report {
            algorithm: Some(name.into()),
            resolver: Some(
                match args.grid_rule {
                    GridRuleArg::ZeroOrder => "zero-order",
                    GridRuleArg::FirstOrder => "first-order",
                }
                .into(),
            ),
            n: args.harmonics,
            nontrivial_mults: result.ops.nontrivial_mults,
            trivial_mults: result.ops.trivial_mults,
            adds: result.ops.adds,
            wall_time_ms: wall,
            ..Report::default()
        };
        emit(&Some(path.clone()), &report.to_json())?;
    }
    Ok(())
}

fn run_weights(args: &WeightsArgs) -> Result<(), String> {
    let spec = WeightSpec::new(args.kernel.into(), args.mode.into(), args.n)
        .map_err(|e| format!("interp: {e}"))?;
    let mut out = String::new();
    for i in 0..args.n {
        let w = weight(&spec, i, args.r).map_err(|e| format!("interp: {e}"))?;
        out.push_str(&format!("{i},{},{}\n", format_float(args.r), format_float(w)));
    }
    emit(&args.out, &out)
}

fn run_compare(args: &CompareArgs) -> Result<(), String> {
    let v = match (&args.signal, &args.input) {
        (Some(name), None) if name == "fig5" => fig5_samples(),
        (Some(name), None) => return Err(format!("unknown built-in signal {name:?}")),
        (None, Some(path)) => read_signal(path).map_err(|e| format!("parse: {e}"))?,
        (None, None) => return Err("compare requires --signal or --input".into()),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    let resolver = args.resolver.build(v.len())?;
    let start = Instant::now();
    let result = aht_forward_with_threads(&v, &resolver, thread_count())
        .map_err(|e| format!("aht: {e}"))?;
    let wall = start.elapsed().as_secs_f64() * 1e3;
    let reference = dht_definition(&v);
    let metrics =
        compare(result.spectrum.values(), reference.values()).map_err(|e| format!("oracle: {e}"))?;
    let report = Report {
        algorithm: Some("aht-forward".into()),
        kernel: args.resolver.kernel_name(),
        resolver: Some(args.resolver.name().into()),
        n: v.len(),
        nontrivial_mults: result.ops.nontrivial_mults,
        trivial_mults: result.ops.trivial_mults,
        adds: result.ops.adds,
        max_abs_err: Some(metrics.max_abs),
        rmse: Some(metrics.rmse),
        relative_rmse: metrics.relative_rmse,
        wall_time_ms: wall,
    };
    emit(&args.report, &report.to_json())
}

fn run_bench(args: &BenchArgs) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let v: Vec<f64> = (0..args.n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let resolver = args.resolver.build(args.n)?;
    let start = Instant::now();
    let result = aht_forward_with_threads(&v, &resolver, thread_count())
        .map_err(|e| format!("aht: {e}"))?;
    let wall = start.elapsed().as_secs_f64() * 1e3;
    let report = Report {
        algorithm: Some("aht-forward".into()),
        kernel: args.resolver.kernel_name(),
        resolver: Some(args.resolver.name().into()),
        n: args.n,
        nontrivial_mults: result.ops.nontrivial_mults,
        trivial_mults: result.ops.trivial_mults,
        adds: result.ops.adds,
        wall_time_ms: wall,
        ..Report::default()
    };
    emit(&args.report, &report.to_json())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::AhtForward(args) => run_aht_forward(args),
        Command::AhtInverse(args) => run_aht_inverse(args),
        Command::Aft(args) => run_aft(args),
        Command::Weights(args) => run_weights(args),
        Command::Compare(args) => run_compare(args),
        Command::Bench(args) => run_bench(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
