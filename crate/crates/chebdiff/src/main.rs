//! `chebdiff` - derivative estimation and benchmark sweeps from the command
//! line.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chebdiff::bench::functions::{registry_lookup, rosenbrock_gradient};
use chebdiff::bench::{
    emit_table, run_table1, run_table2, run_table3, BenchResult, Table3Config, TableFormat,
};
use chebdiff::{
    derivative_at, steepest_descent, DerivativeEstimate, DescentParams, DiffConfig, DiffMode,
    Error, GradientOracle, KinkSet,
};

const EXIT_BAD_ARGS: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "chebdiff",
    about = "Derivatives of black-box functions via local Chebyshev interpolation",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate the derivative of a registered function at a point.
    Derive(DeriveArgs),
    /// Run a benchmark sweep and print it as CSV or Markdown.
    Bench {
        #[command(subcommand)]
        table: BenchCommand,
    },
    /// Minimize a registered function by steepest descent.
    Optimize(OptimizeArgs),
}

#[derive(Args)]
struct DeriveArgs {
    /// Registered function name (one-dimensional entries only).
    #[arg(long = "fn")]
    function: String,
    /// Query point.
    #[arg(long)]
    x: f64,
    /// Window half-width.
    #[arg(long, default_value_t = 1e-4)]
    h: f64,
    /// Gauss-Lobatto nodes per window.
    #[arg(long, default_value_t = 5)]
    nodes: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Classical)]
    mode: ModeArg,
    /// Comma-separated non-differentiable points, overriding the registry.
    #[arg(long)]
    kinks: Option<String>,
    /// Noise seed (only noisy registry entries use it).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Noise amplitude override.
    #[arg(long)]
    noise_amp: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Classical,
    Subgradient,
    Weak,
}

impl From<ModeArg> for DiffMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Classical => DiffMode::Classical,
            ModeArg::Subgradient => DiffMode::Subgradient,
            ModeArg::Weak => DiffMode::Weak,
        }
    }
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Derivative errors on the clean piecewise quartic.
    Table1(BenchArgs),
    /// Maximum derivative errors under additive Gaussian noise.
    Table2(BenchArgs),
    /// Steepest-descent robustness on the Rosenbrock valley.
    Table3(BenchArgs),
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Noise draws per cell (table2 only).
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Noise amplitude; defaults to 1e-10 for table2 and 1e-6 for table3.
    #[arg(long)]
    noise_amp: Option<f64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    out: FormatArg,
    /// Write the table to a file instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
}

impl From<FormatArg> for TableFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Markdown => TableFormat::Markdown,
        }
    }
}

#[derive(Args)]
struct OptimizeArgs {
    /// rosenbrock, rosenbrock-delta or rosenbrock-jump.
    #[arg(long = "fn", default_value = "rosenbrock")]
    function: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Chebyshev)]
    method: MethodArg,
    /// Oracle step: finite-difference step or Chebyshev half-width.
    /// Defaults to 1e-6 for fd and 1e-4 for chebyshev.
    #[arg(long)]
    h: Option<f64>,
    #[arg(long, default_value_t = 5)]
    nodes: usize,
    /// Starting point as "a,b".
    #[arg(long, default_value = "-1.2,1")]
    x0: String,
    #[arg(long, default_value_t = 1e-3)]
    grad_tol: f64,
    #[arg(long, default_value_t = 19_999)]
    max_iter: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    noise_amp: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MethodArg {
    Exact,
    Fd,
    Chebyshev,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Derive(args) => cmd_derive(args),
        Command::Bench { table } => cmd_bench(table),
        Command::Optimize(args) => cmd_optimize(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(classify(&e))
        }
    }
}

/// Argument-shaped problems exit with 2, numerical failures with 3.
fn classify(e: &Error) -> u8 {
    match e {
        Error::UnknownFunction { .. }
        | Error::InvalidConfig(_)
        | Error::InvalidWindow { .. }
        | Error::DomainViolation { .. } => EXIT_BAD_ARGS,
        Error::ShrinkExhausted { .. }
        | Error::LineSearchFailed { .. }
        | Error::NonFiniteSample { .. }
        | Error::NonFiniteInput { .. } => EXIT_NUMERICAL,
        Error::GradientComponent { source, .. } => classify(source),
    }
}

fn parse_float_list(text: &str, what: &str) -> Result<Vec<f64>, Error> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| Error::InvalidConfig(format!("cannot parse {what} entry '{s}'")))
        })
        .collect()
}

fn cmd_derive(args: DeriveArgs) -> Result<(), Error> {
    let entry = registry_lookup(&args.function)?;
    let amplitude = args.noise_amp.unwrap_or(entry.default_noise_amplitude);
    let f = entry.scalar_evaluator(args.seed, 0, amplitude)?;
    let (dom_lo, dom_hi) = entry.domain().expect("scalar entries carry a domain");
    let kinks = match &args.kinks {
        Some(list) => KinkSet::new(parse_float_list(list, "--kinks")?, dom_lo, dom_hi)?,
        None => entry.kink_set().expect("scalar entries carry kinks"),
    };
    let cfg = DiffConfig {
        h: args.h,
        node_count: args.nodes,
        mode: args.mode.into(),
        ..DiffConfig::default()
    };
    match derivative_at(&f, args.x, &cfg, &kinks)? {
        DerivativeEstimate::Classical {
            value,
            window,
            shrinks,
        } => {
            println!("kind: classical");
            println!("value: {value:.12e}");
            println!("window: [{:.12e}, {:.12e}]", window.lo, window.hi);
            println!("shrinks: {shrinks}");
        }
        DerivativeEstimate::Subgradient {
            left,
            right,
            windows,
            shrinks,
        } => {
            println!("kind: subgradient");
            println!("left: {left:.12e}");
            println!("right: {right:.12e}");
            println!(
                "windows: [{:.12e}, {:.12e}] | [{:.12e}, {:.12e}]",
                windows.0.lo, windows.0.hi, windows.1.lo, windows.1.hi
            );
            println!("shrinks: {shrinks}");
        }
        DerivativeEstimate::Weak {
            value,
            left,
            right,
            windows,
            shrinks,
        } => {
            println!("kind: weak");
            println!("value: {value:.12e}");
            println!("left: {left:.12e}");
            println!("right: {right:.12e}");
            println!(
                "windows: [{:.12e}, {:.12e}] | [{:.12e}, {:.12e}]",
                windows.0.lo, windows.0.hi, windows.1.lo, windows.1.hi
            );
            println!("shrinks: {shrinks}");
        }
    }
    Ok(())
}

fn deliver(result: &BenchResult, args: &BenchArgs) -> Result<(), Error> {
    let text = emit_table(result, args.out.into());
    match &args.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidConfig(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_bench(cmd: BenchCommand) -> Result<(), Error> {
    match cmd {
        BenchCommand::Table1(args) => {
            let result = run_table1(&[0.5, 0.0], &[1e-3, 1e-4, 1e-5], &[3, 5])?;
            deliver(&result, &args)
        }
        BenchCommand::Table2(args) => {
            let result = run_table2(
                &[1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6],
                &[3, 5, 7],
                args.noise_amp.unwrap_or(1e-10),
                args.samples,
                args.seed,
            )?;
            deliver(&result, &args)
        }
        BenchCommand::Table3(args) => {
            let cfg = Table3Config {
                noise_amplitude: args.noise_amp.unwrap_or(1e-6),
                seed: args.seed,
                ..Table3Config::default()
            };
            let result = run_table3(&cfg)?;
            deliver(&result, &args)
        }
    }
}

fn cmd_optimize(args: OptimizeArgs) -> Result<(), Error> {
    let entry = registry_lookup(&args.function)?;
    if entry.arity() != 2 {
        return Err(Error::InvalidConfig(format!(
            "optimize expects a two-dimensional function, '{}' has arity {}",
            args.function,
            entry.arity()
        )));
    }
    let x0 = parse_float_list(&args.x0, "--x0")?;
    if x0.len() != 2 {
        return Err(Error::InvalidConfig(format!(
            "--x0 must list exactly 2 coordinates, got {}",
            x0.len()
        )));
    }
    let amplitude = args.noise_amp.unwrap_or(entry.default_noise_amplitude);
    let f = entry.field_evaluator(args.seed, 0, amplitude)?;
    let oracle = match args.method {
        MethodArg::Exact => GradientOracle::Exact(Box::new(rosenbrock_gradient)),
        MethodArg::Fd => GradientOracle::FiniteDifference {
            step: args.h.unwrap_or(1e-6),
        },
        MethodArg::Chebyshev => GradientOracle::LocalChebyshev(DiffConfig {
            h: args.h.unwrap_or(1e-4),
            node_count: args.nodes,
            ..DiffConfig::default()
        }),
    };
    let params = DescentParams {
        grad_tol: args.grad_tol,
        max_iterations: args.max_iter,
        ..DescentParams::default()
    };
    let trace = steepest_descent(&f, &oracle, &x0, &params)?;
    let last = trace
        .iterates
        .last()
        .expect("trace has at least one record");
    println!("function: {}", args.function);
    println!("method: {}", methodarg_label(args.method));
    println!("iterations: {}", trace.iteration_count);
    println!("termination: {}", trace.termination.label());
    println!(
        "final: ({:.3}, {:.3})",
        trace.final_point[0], trace.final_point[1]
    );
    println!("final-f: {:.6e}", last.f_value);
    println!("final-gradient-norm: {:.6e}", last.gradient_norm);
    match trace.termination {
        chebdiff::Termination::LineSearchFailed | chebdiff::Termination::OracleFailure(_) => {
            eprintln!("error: descent stopped: {}", trace.termination.label());
            std::process::exit(i32::from(EXIT_NUMERICAL));
        }
        _ => Ok(()),
    }
}

fn methodarg_label(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Exact => "exact",
        MethodArg::Fd => "fd",
        MethodArg::Chebyshev => "chebyshev",
    }
}
