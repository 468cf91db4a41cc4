//! Derivative estimation for piecewise-smooth scalar functions.
//!
//! Around a query point `x` a small window is chosen whose open interior
//! avoids every known non-differentiable point, shrinking the half-width
//! geometrically until that holds. The function is interpolated on the
//! window's Gauss-Lobatto nodes and the interpolant is differentiated
//! exactly. At a kink the window is split into a one-sided pair and both
//! one-sided derivatives are reported.

use crate::cheb::{interpolate, Window};
use crate::error::{Error, Result};

/// The finite set of known non-differentiable points inside a domain
/// `[domain_lo, domain_hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct KinkSet {
    points: Vec<f64>,
    domain_lo: f64,
    domain_hi: f64,
}

impl KinkSet {
    /// Build a kink set; the points are sorted and must lie inside the
    /// domain.
    pub fn new(points: impl Into<Vec<f64>>, domain_lo: f64, domain_hi: f64) -> Result<Self> {
        if !domain_lo.is_finite() || !domain_hi.is_finite() || !(domain_lo < domain_hi) {
            return Err(Error::InvalidConfig(format!(
                "kink set domain [{domain_lo}, {domain_hi}] must be a finite interval"
            )));
        }
        let mut points = points.into();
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidConfig(
                "kink locations must be finite".to_string(),
            ));
        }
        points.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if let Some(&p) = points.iter().find(|p| **p < domain_lo || **p > domain_hi) {
            return Err(Error::DomainViolation {
                x: p,
                lo: domain_lo,
                hi: domain_hi,
            });
        }
        Ok(KinkSet {
            points,
            domain_lo,
            domain_hi,
        })
    }

    /// A kink-free domain.
    pub fn empty(domain_lo: f64, domain_hi: f64) -> Result<Self> {
        KinkSet::new(Vec::new(), domain_lo, domain_hi)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn domain_lo(&self) -> f64 {
        self.domain_lo
    }

    pub fn domain_hi(&self) -> f64 {
        self.domain_hi
    }

    /// True if some kink lies strictly inside `(c, d)`. A kink sitting
    /// exactly on a window edge is admissible.
    fn intersects_interior(&self, c: f64, d: f64) -> bool {
        self.points.iter().any(|&y| c < y && y < d)
    }

    fn matches(&self, x: f64, tolerance: f64) -> bool {
        self.points.iter().any(|&y| (x - y).abs() <= tolerance)
    }
}

/// How the estimate at a kink (or anywhere, for the one-sided modes) is
/// reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiffMode {
    /// Two-sided window; falls back to the one-sided pair when the query
    /// matches a kink.
    #[default]
    Classical,
    /// Always build the one-sided pair and report both derivatives.
    Subgradient,
    /// One-sided pair averaged into a single value.
    Weak,
}

/// Parameters of the window search and interpolation order.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffConfig {
    /// Initial window half-width.
    pub h: f64,
    /// Gauss-Lobatto samples per window (polynomial degree + 1).
    pub node_count: usize,
    /// Factor in (0, 1) applied to `h` whenever the window is inadmissible.
    pub shrink_factor: f64,
    /// Give up after this many shrinks.
    pub max_shrinks: u32,
    /// Query points within this distance of a kink take the one-sided
    /// branch.
    pub kink_tolerance: f64,
    pub mode: DiffMode,
}

impl Default for DiffConfig {
    fn default() -> Self {
        DiffConfig {
            h: 1e-4,
            node_count: 5,
            shrink_factor: 0.5,
            max_shrinks: 52,
            kink_tolerance: 0.0,
            mode: DiffMode::Classical,
        }
    }
}

impl DiffConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.h > 0.0) || !self.h.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "half-width h must be positive and finite, got {}",
                self.h
            )));
        }
        if self.node_count < 2 {
            return Err(Error::InvalidConfig(format!(
                "node_count must be at least 2, got {}",
                self.node_count
            )));
        }
        if !(self.shrink_factor > 0.0 && self.shrink_factor < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "shrink_factor must lie in (0, 1), got {}",
                self.shrink_factor
            )));
        }
        if self.max_shrinks == 0 {
            return Err(Error::InvalidConfig(
                "max_shrinks must be positive".to_string(),
            ));
        }
        if !(self.kink_tolerance >= 0.0) || !self.kink_tolerance.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "kink_tolerance must be non-negative, got {}",
                self.kink_tolerance
            )));
        }
        Ok(())
    }
}

/// The window (or one-sided pair) chosen for a query point.
#[derive(Debug, Clone, PartialEq)]
pub enum WindowSelection {
    Classical {
        window: Window,
        shrinks: u32,
    },
    OneSided {
        left: Window,
        right: Window,
        shrinks: u32,
    },
}

/// A derivative estimate together with the window it came from.
#[derive(Debug, Clone, PartialEq)]
pub enum DerivativeEstimate {
    Classical {
        value: f64,
        window: Window,
        shrinks: u32,
    },
    Subgradient {
        left: f64,
        right: f64,
        windows: (Window, Window),
        shrinks: u32,
    },
    Weak {
        /// Mean of `left` and `right`.
        value: f64,
        left: f64,
        right: f64,
        windows: (Window, Window),
        shrinks: u32,
    },
}

impl DerivativeEstimate {
    /// Single representative value: the classical or weak derivative, or the
    /// midpoint of a subgradient pair.
    pub fn value(&self) -> f64 {
        match self {
            DerivativeEstimate::Classical { value, .. } => *value,
            DerivativeEstimate::Weak { value, .. } => *value,
            DerivativeEstimate::Subgradient { left, right, .. } => 0.5 * (left + right),
        }
    }

    pub fn shrinks(&self) -> u32 {
        match self {
            DerivativeEstimate::Classical { shrinks, .. } => *shrinks,
            DerivativeEstimate::Subgradient { shrinks, .. } => *shrinks,
            DerivativeEstimate::Weak { shrinks, .. } => *shrinks,
        }
    }
}

/// Choose an admissible window around `x`.
///
/// The classical branch prefers the symmetric window `[x-h, x+h]`; near a
/// domain edge it falls back to the one-sided window of the same width, and
/// when neither fits it clamps to the domain. The half-width is multiplied
/// by `shrink_factor` until no kink lies strictly inside the window.
///
/// Queries matching a kink (within `kink_tolerance`), and any query in the
/// `Subgradient`/`Weak` modes, select the abutting pair `[x-h, x]`,
/// `[x, x+h]` instead, shrinking until both interiors are kink-free.
pub fn select_window(x: f64, cfg: &DiffConfig, kinks: &KinkSet) -> Result<WindowSelection> {
    cfg.validate()?;
    if !x.is_finite() {
        return Err(Error::NonFiniteInput {
            what: "query point",
        });
    }
    let (a, b) = (kinks.domain_lo, kinks.domain_hi);
    if x < a || x > b {
        return Err(Error::DomainViolation { x, lo: a, hi: b });
    }
    let one_sided = cfg.mode != DiffMode::Classical || kinks.matches(x, cfg.kink_tolerance);
    if one_sided {
        select_pair(x, cfg, kinks, a, b)
    } else {
        select_classical(x, cfg, kinks, a, b)
    }
}

fn select_classical(
    x: f64,
    cfg: &DiffConfig,
    kinks: &KinkSet,
    a: f64,
    b: f64,
) -> Result<WindowSelection> {
    let mut h = cfg.h;
    let mut shrinks = 0u32;
    loop {
        let (c, d) = if x - h >= a && x + h <= b {
            (x - h, x + h)
        } else if x + h <= b {
            (x, x + h)
        } else if x - h >= a {
            (x - h, x)
        } else {
            ((x - h).max(a), (x + h).min(b))
        };
        if c < d && !kinks.intersects_interior(c, d) {
            if let Ok(window) = Window::new(c, d, cfg.node_count) {
                return Ok(WindowSelection::Classical { window, shrinks });
            }
        }
        if shrinks >= cfg.max_shrinks {
            return Err(Error::ShrinkExhausted {
                x,
                shrinks,
                last_h: h,
            });
        }
        h *= cfg.shrink_factor;
        shrinks += 1;
    }
}

fn select_pair(
    x: f64,
    cfg: &DiffConfig,
    kinks: &KinkSet,
    a: f64,
    b: f64,
) -> Result<WindowSelection> {
    if x <= a || x >= b {
        // No room for one of the one-sided windows.
        return Err(Error::DomainViolation { x, lo: a, hi: b });
    }
    let mut h = cfg.h;
    let mut shrinks = 0u32;
    loop {
        let c = (x - h).max(a);
        let d = (x + h).min(b);
        let left_ok = c < x && !kinks.intersects_interior(c, x);
        let right_ok = x < d && !kinks.intersects_interior(x, d);
        if left_ok && right_ok {
            let left = Window::new(c, x, cfg.node_count);
            let right = Window::new(x, d, cfg.node_count);
            if let (Ok(left), Ok(right)) = (left, right) {
                return Ok(WindowSelection::OneSided {
                    left,
                    right,
                    shrinks,
                });
            }
        }
        if shrinks >= cfg.max_shrinks {
            return Err(Error::ShrinkExhausted {
                x,
                shrinks,
                last_h: h,
            });
        }
        h *= cfg.shrink_factor;
        shrinks += 1;
    }
}

/// Estimate the derivative of `f` at `x`.
///
/// Interpolates `f` on the selected window (or one-sided pair), takes the
/// exact derivative of the interpolant, and evaluates it at `x`.
pub fn derivative_at<F>(
    mut f: F,
    x: f64,
    cfg: &DiffConfig,
    kinks: &KinkSet,
) -> Result<DerivativeEstimate>
where
    F: FnMut(f64) -> f64,
{
    match select_window(x, cfg, kinks)? {
        WindowSelection::Classical { window, shrinks } => {
            let value = interpolate(&mut f, &window)?.differentiate().evaluate(x);
            Ok(DerivativeEstimate::Classical {
                value,
                window,
                shrinks,
            })
        }
        WindowSelection::OneSided {
            left,
            right,
            shrinks,
        } => {
            let l = interpolate(&mut f, &left)?.differentiate().evaluate(x);
            let r = interpolate(&mut f, &right)?.differentiate().evaluate(x);
            if cfg.mode == DiffMode::Weak {
                Ok(DerivativeEstimate::Weak {
                    value: 0.5 * (l + r),
                    left: l,
                    right: r,
                    windows: (left, right),
                    shrinks,
                })
            } else {
                Ok(DerivativeEstimate::Subgradient {
                    left: l,
                    right: r,
                    windows: (left, right),
                    shrinks,
                })
            }
        }
    }
}

/// Central difference quotient over `[x-h, x+h]`.
///
/// The divisor is the realized spacing of the two sample points, which is
/// what the 3-node interpolant differentiates to; for exactly representable
/// `x +/- h` it equals `2h`.
pub fn central_difference<F>(mut f: F, x: f64, h: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if !x.is_finite() {
        return Err(Error::NonFiniteInput {
            what: "query point",
        });
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::NonFiniteInput { what: "step size" });
    }
    let lo = x - h;
    let hi = x + h;
    let f_lo = f(lo);
    if !f_lo.is_finite() {
        return Err(Error::NonFiniteSample {
            at: lo,
            value: f_lo,
        });
    }
    let f_hi = f(hi);
    if !f_hi.is_finite() {
        return Err(Error::NonFiniteSample {
            at: hi,
            value: f_hi,
        });
    }
    Ok((f_hi - f_lo) / (hi - lo))
}

/// Default tail-ratio threshold above which a window is flagged as
/// suspect.
pub const DEFAULT_SUSPECT_TAIL_RATIO: f64 = 1e-3;

/// Coefficient-decay report for one window. Heuristic only: slow decay of
/// the trailing coefficients suggests the window straddles a
/// non-differentiable point, but nothing is guaranteed.
#[derive(Debug, Clone, PartialEq)]
pub struct SmoothnessReport {
    /// `|b_k|` for each interpolation coefficient.
    pub coefficient_magnitudes: Vec<f64>,
    /// `max(|b_{N-2}|, |b_{N-1}|) / (max_k |b_k| + floor)`.
    pub tail_ratio: f64,
    pub threshold: f64,
    pub suspect: bool,
}

/// Interpolate `f` on `window` (at least 4 nodes) and report how fast the
/// coefficients decay.
pub fn smoothness_diagnostic<F>(f: F, window: &Window, threshold: f64) -> Result<SmoothnessReport>
where
    F: FnMut(f64) -> f64,
{
    if window.node_count < 4 {
        return Err(Error::InvalidConfig(format!(
            "smoothness diagnostic needs at least 4 nodes, got {}",
            window.node_count
        )));
    }
    let p = interpolate(f, window)?;
    let mags: Vec<f64> = p.coeffs().iter().map(|c| c.abs()).collect();
    let n = mags.len();
    let head = mags.iter().cloned().fold(0.0, f64::max);
    let tail = mags[n - 2].max(mags[n - 1]);
    let tail_ratio = tail / (head + f64::MIN_POSITIVE);
    Ok(SmoothnessReport {
        coefficient_magnitudes: mags,
        tail_ratio,
        threshold,
        suspect: tail_ratio > threshold,
    })
}
