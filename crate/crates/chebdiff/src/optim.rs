//! Steepest descent with Armijo backtracking and pluggable gradient
//! oracles.

use crate::error::{Error, Result};
use crate::local_diff::DiffConfig;
use crate::multi_grad;

/// Boxed analytic gradient callback.
pub type ExactGradientFn = Box<dyn Fn(&[f64]) -> Vec<f64>>;

/// Where the descent loop gets its gradients from.
pub enum GradientOracle {
    /// Analytic gradient callback.
    Exact(ExactGradientFn),
    /// Central differences with the given step per coordinate.
    FiniteDifference { step: f64 },
    /// Local Chebyshev gradient with the given window configuration.
    LocalChebyshev(DiffConfig),
}

impl GradientOracle {
    pub fn gradient<F>(&self, f: &F, x: &[f64]) -> Result<Vec<f64>>
    where
        F: Fn(&[f64]) -> f64,
    {
        match self {
            GradientOracle::Exact(cb) => {
                let g = cb(x);
                if g.len() != x.len() {
                    return Err(Error::InvalidConfig(format!(
                        "exact gradient returned {} components for a {}-dimensional point",
                        g.len(),
                        x.len()
                    )));
                }
                if g.iter().any(|v| !v.is_finite()) {
                    return Err(Error::NonFiniteInput {
                        what: "exact gradient",
                    });
                }
                Ok(g)
            }
            GradientOracle::FiniteDifference { step } => {
                if !(*step > 0.0) || !step.is_finite() {
                    return Err(Error::InvalidConfig(format!(
                        "finite-difference step must be positive, got {step}"
                    )));
                }
                let mut g = Vec::with_capacity(x.len());
                let mut lo = x.to_vec();
                let mut hi = x.to_vec();
                for i in 0..x.len() {
                    lo[i] = x[i] - step;
                    hi[i] = x[i] + step;
                    let f_lo = f(&lo);
                    let f_hi = f(&hi);
                    if !f_lo.is_finite() || !f_hi.is_finite() {
                        return Err(Error::GradientComponent {
                            index: i,
                            source: Box::new(Error::NonFiniteSample {
                                at: x[i],
                                value: if f_lo.is_finite() { f_hi } else { f_lo },
                            }),
                        });
                    }
                    g.push((f_hi - f_lo) / (hi[i] - lo[i]));
                    lo[i] = x[i];
                    hi[i] = x[i];
                }
                Ok(g)
            }
            GradientOracle::LocalChebyshev(cfg) => multi_grad::gradient(f, x, cfg),
        }
    }
}

/// Line-search and termination parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct DescentParams {
    /// Sufficient-decrease constant in (0, 1).
    pub armijo_slope: f64,
    /// Step multiplier in (0, 1) applied on each rejected trial.
    pub backtrack_factor: f64,
    pub initial_step: f64,
    /// Stop once the oracle gradient norm drops below this.
    pub grad_tol: f64,
    pub max_iterations: usize,
    pub max_backtracks: u32,
}

impl Default for DescentParams {
    fn default() -> Self {
        DescentParams {
            armijo_slope: 1e-4,
            backtrack_factor: 0.5,
            initial_step: 1.0,
            grad_tol: 1e-3,
            max_iterations: 19_999,
            max_backtracks: 60,
        }
    }
}

impl DescentParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.armijo_slope > 0.0 && self.armijo_slope < 1.0) {
            return bad(format!(
                "armijo_slope must be in (0, 1), got {}",
                self.armijo_slope
            ));
        }
        if !(self.backtrack_factor > 0.0 && self.backtrack_factor < 1.0) {
            return bad(format!(
                "backtrack_factor must be in (0, 1), got {}",
                self.backtrack_factor
            ));
        }
        if !(self.initial_step > 0.0) || !self.initial_step.is_finite() {
            return bad(format!(
                "initial_step must be positive, got {}",
                self.initial_step
            ));
        }
        if !(self.grad_tol > 0.0) || !self.grad_tol.is_finite() {
            return bad(format!("grad_tol must be positive, got {}", self.grad_tol));
        }
        if self.max_iterations == 0 {
            return bad("max_iterations must be positive".to_string());
        }
        if self.max_backtracks == 0 {
            return bad("max_backtracks must be positive".to_string());
        }
        Ok(())
    }
}

/// One row of a descent trace.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    pub point: Vec<f64>,
    pub f_value: f64,
    pub gradient_norm: f64,
    /// Step length accepted at this iterate; zero on the final record.
    pub step_size: f64,
}

/// Why a run stopped.
#[derive(Debug, Clone, PartialEq)]
pub enum Termination {
    /// Oracle gradient norm fell below `grad_tol`.
    Converged,
    /// `max_iterations` steps were taken.
    IterationCap,
    /// No trial step satisfied the sufficient-decrease condition.
    LineSearchFailed,
    /// The gradient oracle reported an error; the message is preserved.
    OracleFailure(String),
}

impl Termination {
    pub fn label(&self) -> &'static str {
        match self {
            Termination::Converged => "converged",
            Termination::IterationCap => "iteration-cap",
            Termination::LineSearchFailed => "line-search-failed",
            Termination::OracleFailure(_) => "oracle-failure",
        }
    }
}

/// Full record of a steepest-descent run.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationTrace {
    /// `iterates[0]` is the starting point; each later record is one
    /// accepted step.
    pub iterates: Vec<IterationRecord>,
    pub termination: Termination,
    pub final_point: Vec<f64>,
    /// Number of steps taken (`iterates.len() - 1`).
    pub iteration_count: usize,
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Backtracking line search along `-g` from `x`.
///
/// Tries `initial_step * backtrack_factor^j` for `j = 0, 1, ...` and accepts
/// the first step with `f(x - step * g) <= f(x) - armijo_slope * step *
/// |g|^2`.
///
/// `f(x)` is re-evaluated next to each trial, so the two sides of the test
/// are same-vintage draws. For a deterministic objective that changes
/// nothing; for a noisy one, reusing a single reference value biases the
/// comparison (the reference was itself a draw) and can wedge the search
/// against the noise floor.
pub fn armijo_step<F>(
    f: &F,
    x: &[f64],
    g: &[f64],
    params: &DescentParams,
) -> Result<(f64, Vec<f64>)>
where
    F: Fn(&[f64]) -> f64,
{
    let g_sq = g.iter().map(|v| v * v).sum::<f64>();
    let mut step = params.initial_step;
    let mut backtracks = 0u32;
    loop {
        let trial: Vec<f64> = x.iter().zip(g).map(|(xi, gi)| xi - step * gi).collect();
        let fx = f(x);
        let f_trial = f(&trial);
        // NaN comparisons fail, so a non-finite trial is simply rejected.
        if f_trial <= fx - params.armijo_slope * step * g_sq {
            return Ok((step, trial));
        }
        if backtracks >= params.max_backtracks {
            return Err(Error::LineSearchFailed {
                backtracks,
                last_step: step,
            });
        }
        step *= params.backtrack_factor;
        backtracks += 1;
    }
}

/// Minimize `f` from `x0` by steepest descent, drawing gradients from
/// `oracle`.
///
/// The loop stops when the oracle gradient norm drops below
/// `params.grad_tol`, after `params.max_iterations` steps, or when the line
/// search or the oracle fails; failures are recorded in the trace rather
/// than returned as errors.
pub fn steepest_descent<F>(
    f: F,
    oracle: &GradientOracle,
    x0: &[f64],
    params: &DescentParams,
) -> Result<OptimizationTrace>
where
    F: Fn(&[f64]) -> f64,
{
    params.validate()?;
    if x0.is_empty() || x0.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFiniteInput {
            what: "starting point",
        });
    }
    let mut x = x0.to_vec();
    let mut iterates: Vec<IterationRecord> = Vec::new();
    let termination;
    loop {
        // Evaluated fresh every iteration: for noisy objectives a cached
        // value is biased low (it was accepted because its draw was low),
        // which can wedge the line search against the noise floor.
        let fx = f(&x);
        let g = match oracle.gradient(&f, &x) {
            Ok(g) => g,
            Err(e) => {
                iterates.push(IterationRecord {
                    point: x.clone(),
                    f_value: fx,
                    gradient_norm: f64::NAN,
                    step_size: 0.0,
                });
                termination = Termination::OracleFailure(e.to_string());
                break;
            }
        };
        let gnorm = norm(&g);
        if gnorm < params.grad_tol {
            iterates.push(IterationRecord {
                point: x.clone(),
                f_value: fx,
                gradient_norm: gnorm,
                step_size: 0.0,
            });
            termination = Termination::Converged;
            break;
        }
        if iterates.len() >= params.max_iterations {
            iterates.push(IterationRecord {
                point: x.clone(),
                f_value: fx,
                gradient_norm: gnorm,
                step_size: 0.0,
            });
            termination = Termination::IterationCap;
            break;
        }
        match armijo_step(&f, &x, &g, params) {
            Ok((step, trial)) => {
                iterates.push(IterationRecord {
                    point: x.clone(),
                    f_value: fx,
                    gradient_norm: gnorm,
                    step_size: step,
                });
                x = trial;
            }
            Err(_) => {
                iterates.push(IterationRecord {
                    point: x.clone(),
                    f_value: fx,
                    gradient_norm: gnorm,
                    step_size: 0.0,
                });
                termination = Termination::LineSearchFailed;
                break;
            }
        }
    }
    let iteration_count = iterates.len() - 1;
    Ok(OptimizationTrace {
        final_point: iterates.last().map(|r| r.point.clone()).unwrap_or_default(),
        iterates,
        termination,
        iteration_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_norm_sq(x: &[f64]) -> f64 {
        0.5 * x.iter().map(|v| v * v).sum::<f64>()
    }

    #[test]
    fn full_step_accepted_on_quadratic() {
        let params = DescentParams::default();
        let (step, point) = armijo_step(&half_norm_sq, &[1.0, 0.0], &[1.0, 0.0], &params).unwrap();
        assert_eq!(step, 1.0);
        assert_eq!(point, vec![0.0, 0.0]);
    }

    #[test]
    fn oversized_step_backtracks_twice() {
        // step 4 overshoots (f rises), step 2 lands on f(x) exactly (no
        // sufficient decrease), step 1 hits the minimum.
        let params = DescentParams {
            initial_step: 4.0,
            ..DescentParams::default()
        };
        let (step, point) = armijo_step(&half_norm_sq, &[1.0, 0.0], &[1.0, 0.0], &params).unwrap();
        assert_eq!(step, 1.0);
        assert_eq!(point, vec![0.0, 0.0]);
    }

    #[test]
    fn ascent_direction_fails_line_search() {
        // f increases along -g, so no trial can satisfy the decrease test.
        let f = |x: &[f64]| -x[0];
        let params = DescentParams {
            max_backtracks: 8,
            ..DescentParams::default()
        };
        let err = armijo_step(&f, &[0.0], &[1e-9], &params).unwrap_err();
        assert!(matches!(err, Error::LineSearchFailed { backtracks: 8, .. }));
    }

    #[test]
    fn quadratic_bowl_converges() {
        let oracle = GradientOracle::Exact(Box::new(|x: &[f64]| x.to_vec()));
        let trace = steepest_descent(
            half_norm_sq,
            &oracle,
            &[4.0, -3.0],
            &DescentParams::default(),
        )
        .unwrap();
        assert_eq!(trace.termination, Termination::Converged);
        assert!(norm(&trace.final_point) < 1e-3);
        assert_eq!(trace.iteration_count, trace.iterates.len() - 1);
    }

    #[test]
    fn descent_is_monotone_on_clean_objective() {
        let oracle = GradientOracle::FiniteDifference { step: 1e-6 };
        let trace = steepest_descent(
            half_norm_sq,
            &oracle,
            &[2.0, 1.0],
            &DescentParams::default(),
        )
        .unwrap();
        assert_eq!(trace.termination, Termination::Converged);
        for pair in trace.iterates.windows(2) {
            assert!(pair[1].f_value <= pair[0].f_value);
        }
    }

    #[test]
    fn iteration_cap_is_reported() {
        let params = DescentParams {
            max_iterations: 5,
            grad_tol: 1e-12,
            ..DescentParams::default()
        };
        // Anisotropic bowl: the full step contracts but never lands on the
        // minimum, so the tiny tolerance is unreachable in five steps.
        let f = |x: &[f64]| 0.45 * x[0] * x[0];
        let oracle = GradientOracle::Exact(Box::new(|x: &[f64]| vec![0.9 * x[0]]));
        let trace = steepest_descent(f, &oracle, &[1.0], &params).unwrap();
        assert_eq!(trace.termination, Termination::IterationCap);
        assert_eq!(trace.iteration_count, 5);
    }

    #[test]
    fn oracle_failure_is_recorded_not_propagated() {
        let oracle = GradientOracle::Exact(Box::new(|_: &[f64]| vec![f64::NAN]));
        let trace = steepest_descent(
            |x: &[f64]| x[0] * x[0],
            &oracle,
            &[1.0],
            &DescentParams::default(),
        )
        .unwrap();
        assert!(matches!(trace.termination, Termination::OracleFailure(_)));
        assert_eq!(trace.iteration_count, 0);
    }
}
