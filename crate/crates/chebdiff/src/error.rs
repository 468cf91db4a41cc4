//! Crate-wide error type.

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by window selection, interpolation, differentiation and
/// optimization.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A window had `lo >= hi`, too few nodes, or non-finite endpoints.
    InvalidWindow {
        lo: f64,
        hi: f64,
        node_count: usize,
        reason: &'static str,
    },
    /// A callback returned NaN or an infinity at the given point.
    NonFiniteSample { at: f64, value: f64 },
    /// A scalar input (query point, step size, ...) was NaN or infinite.
    NonFiniteInput { what: &'static str },
    /// The query point lies outside the admissible domain, or the domain
    /// leaves no room for the requested window.
    DomainViolation { x: f64, lo: f64, hi: f64 },
    /// No admissible window was found after the configured number of
    /// half-width reductions.
    ShrinkExhausted { x: f64, shrinks: u32, last_h: f64 },
    /// Backtracking line search ran out of trial steps without finding
    /// sufficient decrease.
    LineSearchFailed { backtracks: u32, last_step: f64 },
    /// A gradient component could not be estimated.
    GradientComponent { index: usize, source: Box<Error> },
    /// Name not present in the test-function registry.
    UnknownFunction {
        name: String,
        available: Vec<&'static str>,
    },
    /// A configuration value violated its documented range.
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWindow {
                lo,
                hi,
                node_count,
                reason,
            } => write!(
                f,
                "invalid window [{lo}, {hi}] with {node_count} nodes: {reason}"
            ),
            Error::NonFiniteSample { at, value } => {
                write!(f, "function returned non-finite value {value} at x = {at}")
            }
            Error::NonFiniteInput { what } => write!(f, "non-finite input: {what}"),
            Error::DomainViolation { x, lo, hi } => {
                write!(f, "point {x} violates the domain [{lo}, {hi}]")
            }
            Error::ShrinkExhausted { x, shrinks, last_h } => write!(
                f,
                "no admissible window around {x} after {shrinks} shrinks (last half-width {last_h:e})"
            ),
            Error::LineSearchFailed {
                backtracks,
                last_step,
            } => write!(
                f,
                "line search failed after {backtracks} backtracks (last step {last_step:e})"
            ),
            Error::GradientComponent { index, source } => {
                write!(f, "gradient component {index}: {source}")
            }
            Error::UnknownFunction { name, available } => write!(
                f,
                "unknown function '{name}', available: {}",
                available.join(", ")
            ),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::GradientComponent { source, .. } => Some(source),
            _ => None,
        }
    }
}
