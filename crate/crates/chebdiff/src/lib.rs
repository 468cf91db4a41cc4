//! Numerical derivatives of black-box functions via local Chebyshev
//! interpolation.
//!
//! Global polynomial approximation of a piecewise-smooth function converges
//! slowly, and plain finite differences fall apart once the function carries
//! even tiny evaluation noise. This crate instead interpolates the function
//! on a small window around the query point - chosen so that no known
//! non-differentiable point lies in its interior - and differentiates that
//! interpolant exactly. With a handful of nodes per window the estimate is
//! spectrally accurate on smooth pieces, degrades gracefully under noise,
//! and extends to one-sided derivatives at kinks and to gradients in any
//! dimension.
//!
//! Modules:
//!
//! * [`cheb`] - Gauss-Lobatto nodes, interpolation, Clenshaw evaluation,
//!   differentiation in coefficient space, and a quadrature oracle for
//!   exact series coefficients.
//! * [`local_diff`] - window selection around a query point, classical /
//!   subgradient / weak derivative estimates, the central difference, and a
//!   coefficient-decay smoothness diagnostic.
//! * [`multi_grad`] - directional derivatives and gradients of scalar
//!   fields.
//! * [`optim`] - steepest descent with Armijo backtracking and pluggable
//!   gradient oracles.
//! * [`bench`](mod@bench) - seeded benchmark sweeps behind the `chebdiff`
//!   CLI.
//!
//! ```
//! use chebdiff::{derivative_at, DiffConfig, KinkSet};
//!
//! // |x| has a kink at 0; ask for the derivative right on it.
//! let kinks = KinkSet::new(vec![0.0], -1.0, 1.0).unwrap();
//! let est = derivative_at(|x: f64| x.abs(), 0.0, &DiffConfig::default(), &kinks).unwrap();
//! match est {
//!     chebdiff::DerivativeEstimate::Subgradient { left, right, .. } => {
//!         assert!((left + 1.0).abs() < 1e-10);
//!         assert!((right - 1.0).abs() < 1e-10);
//!     }
//!     _ => unreachable!(),
//! }
//! ```

// Comparisons written as !(a < b) are deliberate: they must also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bench;
pub mod cheb;
pub mod error;
pub mod local_diff;
pub mod multi_grad;
pub mod optim;

pub use cheb::{
    exact_series_coefficients, gauss_lobatto_nodes, interpolate, AffineMap, ChebInterpolant,
    SeriesCoefficients, Window,
};
pub use error::{Error, Result};
pub use local_diff::{
    central_difference, derivative_at, select_window, smoothness_diagnostic, DerivativeEstimate,
    DiffConfig, DiffMode, KinkSet, SmoothnessReport, WindowSelection,
};
pub use multi_grad::{directional_derivative, gradient};
pub use optim::{
    armijo_step, steepest_descent, DescentParams, GradientOracle, IterationRecord,
    OptimizationTrace, Termination,
};
