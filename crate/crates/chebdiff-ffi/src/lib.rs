//! C ABI for the chebdiff library.
//!
//! Interpolants are exposed as opaque handles created and destroyed by this
//! library; every fallible call returns a `chebdiff_status` and writes its
//! result through an out-pointer. Callbacks receive the caller's `user_data`
//! pointer untouched. Panics never cross the boundary; they surface as
//! `CHEBDIFF_STATUS_INTERNAL_ERROR`.
//!
//! The matching header is generated into `include/chebdiff.h` at build time.

use std::os::raw::c_void;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use chebdiff::{
    central_difference, derivative_at, gradient, interpolate, ChebInterpolant, DerivativeEstimate,
    DiffConfig, DiffMode, Error, KinkSet, Window,
};

/// Scalar callback: `f(x, user_data)`. The unwind ABI lets a panicking
/// non-C callback surface as `CHEBDIFF_STATUS_INTERNAL_ERROR` instead of
/// aborting; plain C callbacks are unaffected.
pub type ChebdiffScalarFn = unsafe extern "C-unwind" fn(x: f64, user_data: *mut c_void) -> f64;

/// Field callback: `f(coords, len, user_data)`.
pub type ChebdiffFieldFn =
    unsafe extern "C-unwind" fn(coords: *const f64, len: usize, user_data: *mut c_void) -> f64;

/// Result codes; zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebdiffStatus {
    Ok = 0,
    InvalidArgument = 1,
    NonFinite = 2,
    DomainViolation = 3,
    ShrinkExhausted = 4,
    LineSearchFailed = 5,
    InternalError = 6,
}

fn status_of(err: &Error) -> ChebdiffStatus {
    match err {
        Error::InvalidWindow { .. } | Error::InvalidConfig(_) | Error::UnknownFunction { .. } => {
            ChebdiffStatus::InvalidArgument
        }
        Error::NonFiniteSample { .. } | Error::NonFiniteInput { .. } => ChebdiffStatus::NonFinite,
        Error::DomainViolation { .. } => ChebdiffStatus::DomainViolation,
        Error::ShrinkExhausted { .. } => ChebdiffStatus::ShrinkExhausted,
        Error::LineSearchFailed { .. } => ChebdiffStatus::LineSearchFailed,
        Error::GradientComponent { source, .. } => status_of(source),
    }
}

/// Short static description of a status code.
#[no_mangle]
pub extern "C" fn chebdiff_status_message(status: ChebdiffStatus) -> *const std::os::raw::c_char {
    let msg: &'static [u8] = match status {
        ChebdiffStatus::Ok => b"ok\0",
        ChebdiffStatus::InvalidArgument => b"invalid argument\0",
        ChebdiffStatus::NonFinite => b"non-finite value encountered\0",
        ChebdiffStatus::DomainViolation => b"point outside the admissible domain\0",
        ChebdiffStatus::ShrinkExhausted => b"no admissible window found\0",
        ChebdiffStatus::LineSearchFailed => b"line search failed\0",
        ChebdiffStatus::InternalError => b"internal error\0",
    };
    msg.as_ptr() as *const std::os::raw::c_char
}

/// Opaque interpolant handle.
pub struct ChebdiffInterpolant {
    inner: ChebInterpolant,
}

/// Window-search configuration mirrored across the ABI.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct ChebdiffDiffConfig {
    /// Initial window half-width.
    pub h: f64,
    /// Gauss-Lobatto samples per window.
    pub node_count: usize,
    /// Factor in (0, 1) applied to `h` while the window is inadmissible.
    pub shrink_factor: f64,
    pub max_shrinks: u32,
    /// Queries within this distance of a kink take the one-sided branch.
    pub kink_tolerance: f64,
    pub mode: ChebdiffMode,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebdiffMode {
    Classical = 0,
    Subgradient = 1,
    Weak = 2,
}

/// Kind of a derivative estimate.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebdiffEstimateKind {
    Classical = 0,
    Subgradient = 1,
    Weak = 2,
}

/// Flattened derivative estimate.
///
/// Classical estimates fill `value` and the window; one-sided estimates
/// fill `left`/`right` (and `value` with their mean), with the window
/// spanning both one-sided windows.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct ChebdiffEstimate {
    pub kind: ChebdiffEstimateKind,
    pub value: f64,
    pub left: f64,
    pub right: f64,
    pub window_lo: f64,
    pub window_hi: f64,
    pub shrinks: u32,
}

/// Defaults matching the library: h = 1e-4, 5 nodes, halving shrink, up to
/// 52 shrinks, exact kink matching, classical mode.
#[no_mangle]
pub extern "C" fn chebdiff_diff_config_default() -> ChebdiffDiffConfig {
    let d = DiffConfig::default();
    ChebdiffDiffConfig {
        h: d.h,
        node_count: d.node_count,
        shrink_factor: d.shrink_factor,
        max_shrinks: d.max_shrinks,
        kink_tolerance: d.kink_tolerance,
        mode: ChebdiffMode::Classical,
    }
}

fn convert_config(cfg: &ChebdiffDiffConfig) -> DiffConfig {
    DiffConfig {
        h: cfg.h,
        node_count: cfg.node_count,
        shrink_factor: cfg.shrink_factor,
        max_shrinks: cfg.max_shrinks,
        kink_tolerance: cfg.kink_tolerance,
        mode: match cfg.mode {
            ChebdiffMode::Classical => DiffMode::Classical,
            ChebdiffMode::Subgradient => DiffMode::Subgradient,
            ChebdiffMode::Weak => DiffMode::Weak,
        },
    }
}

fn guard<T>(
    body: impl FnOnce() -> Result<T, ChebdiffStatus>,
    sink: impl FnOnce(T),
) -> ChebdiffStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(v)) => {
            sink(v);
            ChebdiffStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => ChebdiffStatus::InternalError,
    }
}

/// Interpolate `f` on the Gauss-Lobatto nodes of `[lo, hi]` and hand back an
/// owned handle.
///
/// # Safety
/// `f` must be callable with any `x` in `[lo, hi]` plus `user_data`, and
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_interpolant_fit(
    f: ChebdiffScalarFn,
    user_data: *mut c_void,
    lo: f64,
    hi: f64,
    node_count: usize,
    out: *mut *mut ChebdiffInterpolant,
) -> ChebdiffStatus {
    if out.is_null() {
        return ChebdiffStatus::InvalidArgument;
    }
    ptr::write(out, ptr::null_mut());
    guard(
        || {
            let window = Window::new(lo, hi, node_count).map_err(|e| status_of(&e))?;
            let p = interpolate(|x| f(x, user_data), &window).map_err(|e| status_of(&e))?;
            Ok(Box::into_raw(Box::new(ChebdiffInterpolant { inner: p })))
        },
        |handle| ptr::write(out, handle),
    )
}

/// Free a handle returned by this library. Null is ignored.
///
/// # Safety
/// `p` must have been produced by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_interpolant_free(p: *mut ChebdiffInterpolant) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of stored coefficients.
///
/// # Safety
/// `p` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_interpolant_node_count(p: *const ChebdiffInterpolant) -> usize {
    if p.is_null() {
        return 0;
    }
    (*p).inner.coeffs().len()
}

/// Copy the Chebyshev coefficients into `buf` (capacity `len`, which must be
/// at least `node_count`).
///
/// # Safety
/// `p` must be a live handle; `buf` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_interpolant_coeffs(
    p: *const ChebdiffInterpolant,
    buf: *mut f64,
    len: usize,
) -> ChebdiffStatus {
    if p.is_null() || buf.is_null() {
        return ChebdiffStatus::InvalidArgument;
    }
    let coeffs = (*p).inner.coeffs();
    if len < coeffs.len() {
        return ChebdiffStatus::InvalidArgument;
    }
    ptr::copy_nonoverlapping(coeffs.as_ptr(), buf, coeffs.len());
    ChebdiffStatus::Ok
}

/// Evaluate the interpolant at `x`.
///
/// # Safety
/// `p` must be a live handle; `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_interpolant_eval(
    p: *const ChebdiffInterpolant,
    x: f64,
    out: *mut f64,
) -> ChebdiffStatus {
    if p.is_null() || out.is_null() {
        return ChebdiffStatus::InvalidArgument;
    }
    guard(|| Ok((*p).inner.evaluate(x)), |v| ptr::write(out, v))
}

/// Exact derivative of the interpolant as a new handle.
///
/// # Safety
/// `p` must be a live handle; `out` must point to writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_interpolant_derivative(
    p: *const ChebdiffInterpolant,
    out: *mut *mut ChebdiffInterpolant,
) -> ChebdiffStatus {
    if p.is_null() || out.is_null() {
        return ChebdiffStatus::InvalidArgument;
    }
    ptr::write(out, ptr::null_mut());
    guard(
        || {
            Ok(Box::into_raw(Box::new(ChebdiffInterpolant {
                inner: (*p).inner.differentiate(),
            })))
        },
        |handle| ptr::write(out, handle),
    )
}

/// Derivative estimate of `f` at `x` with known kinks.
///
/// `kinks`/`kink_count` may be null/zero. The kink locations must lie inside
/// `[domain_lo, domain_hi]`, which also clamps the windows.
///
/// # Safety
/// `f` must be callable on the domain; `kinks` must point to `kink_count`
/// doubles when non-null; `cfg` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_derivative_at(
    f: ChebdiffScalarFn,
    user_data: *mut c_void,
    x: f64,
    cfg: *const ChebdiffDiffConfig,
    kinks: *const f64,
    kink_count: usize,
    domain_lo: f64,
    domain_hi: f64,
    out: *mut ChebdiffEstimate,
) -> ChebdiffStatus {
    if cfg.is_null() || out.is_null() || (kinks.is_null() && kink_count > 0) {
        return ChebdiffStatus::InvalidArgument;
    }
    let config = convert_config(&*cfg);
    let points: Vec<f64> = if kink_count == 0 {
        Vec::new()
    } else {
        slice::from_raw_parts(kinks, kink_count).to_vec()
    };
    guard(
        || {
            let kink_set = KinkSet::new(points, domain_lo, domain_hi).map_err(|e| status_of(&e))?;
            let est = derivative_at(|v| f(v, user_data), x, &config, &kink_set)
                .map_err(|e| status_of(&e))?;
            Ok(match est {
                DerivativeEstimate::Classical {
                    value,
                    window,
                    shrinks,
                } => ChebdiffEstimate {
                    kind: ChebdiffEstimateKind::Classical,
                    value,
                    left: value,
                    right: value,
                    window_lo: window.lo,
                    window_hi: window.hi,
                    shrinks,
                },
                DerivativeEstimate::Subgradient {
                    left,
                    right,
                    windows,
                    shrinks,
                } => ChebdiffEstimate {
                    kind: ChebdiffEstimateKind::Subgradient,
                    value: 0.5 * (left + right),
                    left,
                    right,
                    window_lo: windows.0.lo,
                    window_hi: windows.1.hi,
                    shrinks,
                },
                DerivativeEstimate::Weak {
                    value,
                    left,
                    right,
                    windows,
                    shrinks,
                } => ChebdiffEstimate {
                    kind: ChebdiffEstimateKind::Weak,
                    value,
                    left,
                    right,
                    window_lo: windows.0.lo,
                    window_hi: windows.1.hi,
                    shrinks,
                },
            })
        },
        |v| ptr::write(out, v),
    )
}

/// Central difference quotient over `[x-h, x+h]`.
///
/// # Safety
/// `f` must be callable at `x - h` and `x + h`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_central_difference(
    f: ChebdiffScalarFn,
    user_data: *mut c_void,
    x: f64,
    h: f64,
    out: *mut f64,
) -> ChebdiffStatus {
    if out.is_null() {
        return ChebdiffStatus::InvalidArgument;
    }
    guard(
        || central_difference(|v| f(v, user_data), x, h).map_err(|e| status_of(&e)),
        |v| ptr::write(out, v),
    )
}

/// Gradient of a field at `x`, one local Chebyshev directional derivative
/// per coordinate, written into `grad_out`.
///
/// # Safety
/// `f` must be callable near `x`; `x` must point to `dim` doubles and
/// `grad_out` to `dim` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_gradient(
    f: ChebdiffFieldFn,
    user_data: *mut c_void,
    x: *const f64,
    dim: usize,
    cfg: *const ChebdiffDiffConfig,
    grad_out: *mut f64,
) -> ChebdiffStatus {
    if x.is_null() || grad_out.is_null() || cfg.is_null() || dim == 0 {
        return ChebdiffStatus::InvalidArgument;
    }
    let point = slice::from_raw_parts(x, dim).to_vec();
    let config = convert_config(&*cfg);
    guard(
        || {
            gradient(
                |coords: &[f64]| f(coords.as_ptr(), coords.len(), user_data),
                &point,
                &config,
            )
            .map_err(|e| status_of(&e))
        },
        |g| ptr::copy_nonoverlapping(g.as_ptr(), grad_out, dim),
    )
}
