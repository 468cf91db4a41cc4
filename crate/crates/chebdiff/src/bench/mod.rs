//! Benchmark sweeps and table emission.
//!
//! Three canned experiments:
//!
//! * `run_table1` - derivative errors of the central difference and local
//!   Chebyshev estimates on the clean piecewise quartic, over a grid of
//!   points and half-widths.
//! * `run_table2` - the same estimates under additive Gaussian noise; each
//!   cell is the maximum error over a number of independent draws.
//! * `run_table3` - steepest-descent runs on the Rosenbrock valley (clean
//!   and disturbed) with exact, finite-difference and local Chebyshev
//!   gradient oracles.

pub mod functions;
pub mod noise;

use crate::error::Result;
use crate::local_diff::{central_difference, derivative_at, DiffConfig, KinkSet};
use crate::optim::{steepest_descent, DescentParams, GradientOracle};

use functions::{registry_lookup, rosenbrock_gradient};

/// A rendered sweep: column labels plus preformatted cells, with run
/// metadata on the side.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub metadata: Vec<(String, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

/// Scientific notation with seven significant digits; plenty for the error
/// magnitudes the sweeps report, and deterministic.
fn sci(v: f64) -> String {
    format!("{v:.6e}")
}

/// Render a result as CSV (header row, LF endings) or a Markdown table.
pub fn emit_table(result: &BenchResult, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = String::new();
            out.push_str(&result.header.join(","));
            out.push('\n');
            for row in &result.rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        TableFormat::Markdown => {
            let mut out = String::new();
            out.push_str(&format!("## {}\n\n", result.title));
            out.push_str(&format!("| {} |\n", result.header.join(" | ")));
            out.push_str(&format!("|{}\n", " --- |".repeat(result.header.len())));
            for row in &result.rows {
                out.push_str(&format!("| {} |\n", row.join(" | ")));
            }
            if !result.metadata.is_empty() {
                out.push('\n');
                for (k, v) in &result.metadata {
                    out.push_str(&format!("- {k}: {v}\n"));
                }
            }
            out
        }
    }
}

/// Absolute error of each derivative estimate of the clean piecewise
/// quartic, for every combination of query point and half-width.
///
/// Columns: `x`, `h`, `f_h` (central difference), then one `C{N}` column per
/// requested node count. Estimates that fail render as `nan` without
/// aborting the sweep.
pub fn run_table1(x_list: &[f64], h_list: &[f64], orders: &[usize]) -> Result<BenchResult> {
    let entry = registry_lookup("f1")?;
    let truth = entry.analytic_derivative().expect("f1 derivative");
    let f = functions::piecewise_quartic;
    let (dom_lo, dom_hi) = entry.domain().expect("f1 domain");

    let mut header = vec!["x".to_string(), "h".to_string(), "f_h".to_string()];
    header.extend(orders.iter().map(|n| format!("C{n}")));

    let mut rows = Vec::new();
    for &x in x_list {
        for &h in h_list {
            let kinks = KinkSet::empty(dom_lo, dom_hi)?;
            let mut row = vec![sci(x), sci(h)];
            let exact = truth(x);
            let fh = central_difference(f, x, h)
                .map(|v| (v - exact).abs())
                .unwrap_or(f64::NAN);
            row.push(sci(fh));
            for &n in orders {
                let cfg = DiffConfig {
                    h,
                    node_count: n,
                    ..DiffConfig::default()
                };
                let err = derivative_at(f, x, &cfg, &kinks)
                    .map(|est| (est.value() - exact).abs())
                    .unwrap_or(f64::NAN);
                row.push(sci(err));
            }
            rows.push(row);
        }
    }
    Ok(BenchResult {
        title: "Derivative errors, clean piecewise quartic".to_string(),
        header,
        rows,
        metadata: vec![("function".to_string(), "f1".to_string())],
    })
}

/// Maximum absolute derivative error at `x = 0.5` under additive Gaussian
/// noise, over `samples` independent draws per cell.
///
/// Each `(h, method)` cell owns its own noise substream so the sweep is
/// reproducible cell by cell; substream indices advance in row-major order.
pub fn run_table2(
    h_list: &[f64],
    orders: &[usize],
    noise_amplitude: f64,
    samples: usize,
    seed: u64,
) -> Result<BenchResult> {
    let entry = registry_lookup("f2")?;
    let truth = entry.analytic_derivative().expect("f2 derivative")(0.5);
    let (dom_lo, dom_hi) = entry.domain().expect("f2 domain");
    let kinks = KinkSet::empty(dom_lo, dom_hi)?;
    let samples = samples.max(1);

    let mut header = vec!["x".to_string(), "h".to_string(), "f_h".to_string()];
    header.extend(orders.iter().map(|n| format!("C{n}")));

    let mut rows = Vec::new();
    let mut substream = 0u64;
    for &h in h_list {
        let mut row = vec![sci(0.5), sci(h)];

        let f = entry.scalar_evaluator(seed, substream, noise_amplitude)?;
        substream += 1;
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let err = central_difference(&f, 0.5, h)
                .map(|v| (v - truth).abs())
                .unwrap_or(f64::NAN);
            worst = worst.max(err);
        }
        row.push(sci(worst));

        for &n in orders {
            let f = entry.scalar_evaluator(seed, substream, noise_amplitude)?;
            substream += 1;
            let cfg = DiffConfig {
                h,
                node_count: n,
                ..DiffConfig::default()
            };
            let mut worst = 0.0f64;
            for _ in 0..samples {
                let err = derivative_at(&f, 0.5, &cfg, &kinks)
                    .map(|est| (est.value() - truth).abs())
                    .unwrap_or(f64::NAN);
                worst = worst.max(err);
            }
            row.push(sci(worst));
        }
        rows.push(row);
    }
    Ok(BenchResult {
        title: "Maximum derivative errors under additive noise".to_string(),
        header,
        rows,
        metadata: vec![
            ("function".to_string(), "f2".to_string()),
            ("noise_amplitude".to_string(), sci(noise_amplitude)),
            ("samples".to_string(), samples.to_string()),
            ("seed".to_string(), seed.to_string()),
        ],
    })
}

/// Objective variants for the optimization sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table3Variant {
    Clean,
    Delta,
    Jump,
}

impl Table3Variant {
    pub fn registry_name(&self) -> &'static str {
        match self {
            Table3Variant::Clean => "rosenbrock",
            Table3Variant::Delta => "rosenbrock-delta",
            Table3Variant::Jump => "rosenbrock-jump",
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Table3Variant::Clean => "clean",
            Table3Variant::Delta => "delta",
            Table3Variant::Jump => "jump",
        }
    }
}

/// Gradient oracles for the optimization sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table3Method {
    Exact,
    Fd,
    Chebyshev,
}

impl Table3Method {
    pub fn label(&self) -> &'static str {
        match self {
            Table3Method::Exact => "exact",
            Table3Method::Fd => "fd",
            Table3Method::Chebyshev => "chebyshev",
        }
    }
}

/// Everything `run_table3` needs for one sweep.
#[derive(Debug, Clone)]
pub struct Table3Config {
    pub variants: Vec<Table3Variant>,
    pub methods: Vec<Table3Method>,
    pub descent: DescentParams,
    /// Central-difference step of the finite-difference oracle.
    pub fd_step: f64,
    /// Window configuration of the local Chebyshev oracle.
    pub cheb: DiffConfig,
    pub noise_amplitude: f64,
    pub seed: u64,
    pub x0: Vec<f64>,
}

impl Default for Table3Config {
    fn default() -> Self {
        Table3Config {
            variants: vec![
                Table3Variant::Clean,
                Table3Variant::Delta,
                Table3Variant::Jump,
            ],
            methods: vec![
                Table3Method::Exact,
                Table3Method::Fd,
                Table3Method::Chebyshev,
            ],
            descent: DescentParams::default(),
            fd_step: 1e-6,
            cheb: DiffConfig::default(),
            noise_amplitude: 1e-6,
            seed: 0,
            x0: vec![-1.2, 1.0],
        }
    }
}

/// Steepest-descent runs over the variant x method grid; one row per run
/// with the iteration count, termination reason, and final point rounded to
/// three digits.
pub fn run_table3(cfg: &Table3Config) -> Result<BenchResult> {
    let header = vec![
        "function".to_string(),
        "method".to_string(),
        "iterations".to_string(),
        "termination".to_string(),
        "final_x0".to_string(),
        "final_x1".to_string(),
    ];
    let mut rows = Vec::new();
    let mut substream = 0u64;
    for &variant in &cfg.variants {
        let entry = registry_lookup(variant.registry_name())?;
        let amplitude = match variant {
            Table3Variant::Clean => 0.0,
            _ => cfg.noise_amplitude,
        };
        for &method in &cfg.methods {
            let f = entry.field_evaluator(cfg.seed, substream, amplitude)?;
            substream += 1;
            let oracle = match method {
                Table3Method::Exact => GradientOracle::Exact(Box::new(rosenbrock_gradient)),
                Table3Method::Fd => GradientOracle::FiniteDifference { step: cfg.fd_step },
                Table3Method::Chebyshev => GradientOracle::LocalChebyshev(cfg.cheb.clone()),
            };
            let trace = steepest_descent(&f, &oracle, &cfg.x0, &cfg.descent)?;
            rows.push(vec![
                variant.label().to_string(),
                method.label().to_string(),
                trace.iteration_count.to_string(),
                trace.termination.label().to_string(),
                format!("{:.3}", trace.final_point[0]),
                format!("{:.3}", trace.final_point[1]),
            ]);
        }
    }
    Ok(BenchResult {
        title: "Steepest-descent robustness on the Rosenbrock valley".to_string(),
        header,
        rows,
        metadata: vec![
            ("noise_amplitude".to_string(), sci(cfg.noise_amplitude)),
            ("seed".to_string(), cfg.seed.to_string()),
            ("fd_step".to_string(), sci(cfg.fd_step)),
            ("cheb_h".to_string(), sci(cfg.cheb.h)),
            ("cheb_nodes".to_string(), cfg.cheb.node_count.to_string()),
            ("x0".to_string(), format!("{},{}", cfg.x0[0], cfg.x0[1])),
        ],
    })
}
