//! Directional derivatives and gradients of scalar fields.
//!
//! A field `f` is differentiated along a direction by restricting it to the
//! line `g(t) = f(x + t * dir)` and handing `g` to the one-dimensional
//! machinery at `t = 0`. Gradients are assembled one canonical direction at
//! a time.

use crate::error::{Error, Result};
use crate::local_diff::{derivative_at, DerivativeEstimate, DiffConfig, DiffMode, KinkSet};

/// Derivative of `f` at `x` in direction `dir` (with respect to the line
/// parameter, so the result scales linearly with `|dir|`).
///
/// `kinks` lives in the line parameter `t`; its domain bounds how far along
/// the line the window may reach.
pub fn directional_derivative<F>(
    f: F,
    x: &[f64],
    dir: &[f64],
    cfg: &DiffConfig,
    kinks: &KinkSet,
) -> Result<DerivativeEstimate>
where
    F: Fn(&[f64]) -> f64,
{
    if x.is_empty() || x.len() != dir.len() {
        return Err(Error::InvalidConfig(format!(
            "point dimension {} and direction dimension {} must match and be positive",
            x.len(),
            dir.len()
        )));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFiniteInput { what: "point" });
    }
    if dir.iter().any(|v| !v.is_finite()) || dir.iter().all(|v| *v == 0.0) {
        return Err(Error::NonFiniteInput {
            what: "direction (must be finite and nonzero)",
        });
    }
    let mut buf = vec![0.0; x.len()];
    let g = move |t: f64| {
        for ((b, &xi), &di) in buf.iter_mut().zip(x).zip(dir) {
            *b = di.mul_add(t, xi);
        }
        f(&buf)
    };
    derivative_at(g, 0.0, cfg, kinks)
}

/// Gradient of `f` at `x`: one directional derivative per canonical basis
/// vector, classical windows, no kinks along the segments.
pub fn gradient<F>(f: F, x: &[f64], cfg: &DiffConfig) -> Result<Vec<f64>>
where
    F: Fn(&[f64]) -> f64,
{
    cfg.validate()?;
    let span = 2.0 * cfg.h;
    let kinks = KinkSet::empty(-span, span)?;
    let classical = DiffConfig {
        mode: DiffMode::Classical,
        ..cfg.clone()
    };
    let mut grad = Vec::with_capacity(x.len());
    let mut dir = vec![0.0; x.len()];
    for i in 0..x.len() {
        dir[i] = 1.0;
        let est = directional_derivative(&f, x, &dir, &classical, &kinks).map_err(|e| {
            Error::GradientComponent {
                index: i,
                source: Box::new(e),
            }
        })?;
        grad.push(est.value());
        dir[i] = 0.0;
    }
    Ok(grad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local_diff::DiffConfig;

    fn rosenbrock(x: &[f64]) -> f64 {
        (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2)
    }

    fn default_kinks() -> KinkSet {
        KinkSet::empty(-1.0, 1.0).unwrap()
    }

    #[test]
    fn linear_field_directional() {
        let f = |x: &[f64]| x[0] + 2.0 * x[1];
        let est = directional_derivative(
            f,
            &[0.0, 0.0],
            &[1.0, 1.0],
            &DiffConfig::default(),
            &default_kinks(),
        )
        .unwrap();
        assert!((est.value() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn rosenbrock_stationary_at_minimizer() {
        let est = directional_derivative(
            rosenbrock,
            &[1.0, 1.0],
            &[1.0, 0.0],
            &DiffConfig::default(),
            &default_kinks(),
        )
        .unwrap();
        assert!(est.value().abs() < 1e-9);
    }

    #[test]
    fn rosenbrock_flat_second_coordinate_at_origin() {
        let est = directional_derivative(
            rosenbrock,
            &[0.0, 0.0],
            &[0.0, 1.0],
            &DiffConfig::default(),
            &default_kinks(),
        )
        .unwrap();
        assert!(est.value().abs() < 1e-9);
    }

    #[test]
    fn direction_scaling_is_linear() {
        let f = |x: &[f64]| (x[0] * 1.3).sin() + x[1] * x[1];
        let p = [0.3, -0.4];
        let one =
            directional_derivative(f, &p, &[0.7, 0.2], &DiffConfig::default(), &default_kinks())
                .unwrap()
                .value();
        let two =
            directional_derivative(f, &p, &[1.4, 0.4], &DiffConfig::default(), &default_kinks())
                .unwrap()
                .value();
        assert!((two - 2.0 * one).abs() <= 1e-10 * one.abs().max(1.0));
    }

    #[test]
    fn rejects_zero_direction() {
        let err = directional_derivative(
            |x: &[f64]| x[0],
            &[0.0],
            &[0.0],
            &DiffConfig::default(),
            &default_kinks(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonFiniteInput { .. }));
    }

    #[test]
    fn gradient_vanishes_at_minimizer() {
        let g = gradient(rosenbrock, &[1.0, 1.0], &DiffConfig::default()).unwrap();
        assert!(g[0].abs() < 1e-8 && g[1].abs() < 1e-8, "{g:?}");
    }

    #[test]
    fn gradient_at_origin_matches_analytic() {
        // Analytic gradient (-2(1 - x0) - 400 x0 (x1 - x0^2), 200 (x1 - x0^2))
        // evaluates to (-2, 0) at the origin.
        let g = gradient(rosenbrock, &[0.0, 0.0], &DiffConfig::default()).unwrap();
        assert!((g[0] + 2.0).abs() < 1e-8 && g[1].abs() < 1e-8, "{g:?}");
    }

    #[test]
    fn gradient_of_constant_is_zero() {
        let g = gradient(|_: &[f64]| 7.25, &[0.4, -0.8, 2.0], &DiffConfig::default()).unwrap();
        assert_eq!(g, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn gradient_reports_failing_coordinate() {
        let f = |x: &[f64]| {
            if x[1].abs() > 1e-6 {
                f64::NAN
            } else {
                x[0]
            }
        };
        let err = gradient(f, &[0.0, 0.0], &DiffConfig::default()).unwrap_err();
        match err {
            Error::GradientComponent { index, .. } => assert_eq!(index, 1),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
