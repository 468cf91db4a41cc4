//! Registry of benchmark test functions.

use crate::bench::noise::{NoiseModel, NoiseStream, DEFAULT_JUMP_FREQUENCY};
use crate::error::{Error, Result};
use crate::local_diff::KinkSet;

/// Piecewise quartic: `x^4` for positive `x`, zero otherwise. Continuous
/// with continuous first, second and third derivatives; the fourth jumps at
/// the origin.
pub fn piecewise_quartic(x: f64) -> f64 {
    if x > 0.0 {
        let x2 = x * x;
        x2 * x2
    } else {
        0.0
    }
}

pub fn piecewise_quartic_derivative(x: f64) -> f64 {
    if x > 0.0 {
        4.0 * x * x * x
    } else {
        0.0
    }
}

pub const ROSENBROCK_A: f64 = 1.0;
pub const ROSENBROCK_B: f64 = 100.0;

/// The two-dimensional Rosenbrock valley with a = 1, b = 100; minimum at
/// (1, 1).
pub fn rosenbrock(x: &[f64]) -> f64 {
    let u = ROSENBROCK_A - x[0];
    let v = x[1] - x[0] * x[0];
    u * u + ROSENBROCK_B * v * v
}

pub fn rosenbrock_gradient(x: &[f64]) -> Vec<f64> {
    let v = x[1] - x[0] * x[0];
    vec![
        -2.0 * (ROSENBROCK_A - x[0]) - 4.0 * ROSENBROCK_B * x[0] * v,
        2.0 * ROSENBROCK_B * v,
    ]
}

/// Analytic gradient callback of a registered field.
pub type GradientFn = fn(&[f64]) -> Vec<f64>;

/// Which disturbance a registry entry carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseKind {
    None,
    Gaussian,
    Jump,
}

impl NoiseKind {
    pub fn model(&self, amplitude: f64) -> NoiseModel {
        match self {
            NoiseKind::None => NoiseModel::None,
            NoiseKind::Gaussian => NoiseModel::AdditiveGaussian { amplitude },
            NoiseKind::Jump => NoiseModel::SignJump {
                amplitude,
                frequency: DEFAULT_JUMP_FREQUENCY,
            },
        }
    }
}

enum Body {
    Scalar {
        f: fn(f64) -> f64,
        derivative: Option<fn(f64) -> f64>,
        kinks: &'static [f64],
        domain: (f64, f64),
    },
    Field {
        f: fn(&[f64]) -> f64,
        gradient: Option<GradientFn>,
        arity: usize,
    },
}

/// One registry entry: a named function, its non-differentiable points,
/// optional analytic derivative, and the noise it ships with.
pub struct TestFunction {
    pub name: &'static str,
    pub noise: NoiseKind,
    /// Amplitude used when the caller does not override it.
    pub default_noise_amplitude: f64,
    body: Body,
}

impl TestFunction {
    pub fn arity(&self) -> usize {
        match self.body {
            Body::Scalar { .. } => 1,
            Body::Field { arity, .. } => arity,
        }
    }

    /// Known non-differentiable points (one-dimensional entries only).
    pub fn kink_set(&self) -> Option<KinkSet> {
        match self.body {
            Body::Scalar { kinks, domain, .. } => {
                Some(KinkSet::new(kinks.to_vec(), domain.0, domain.1).expect("registry kink set"))
            }
            Body::Field { .. } => None,
        }
    }

    pub fn domain(&self) -> Option<(f64, f64)> {
        match self.body {
            Body::Scalar { domain, .. } => Some(domain),
            Body::Field { .. } => None,
        }
    }

    pub fn analytic_derivative(&self) -> Option<fn(f64) -> f64> {
        match self.body {
            Body::Scalar { derivative, .. } => derivative,
            Body::Field { .. } => None,
        }
    }

    pub fn analytic_gradient(&self) -> Option<GradientFn> {
        match self.body {
            Body::Scalar { .. } => None,
            Body::Field { gradient, .. } => gradient,
        }
    }

    /// Scalar evaluator with this entry's noise bound to `(seed, substream)`.
    pub fn scalar_evaluator(
        &self,
        seed: u64,
        substream: u64,
        amplitude: f64,
    ) -> Result<impl Fn(f64) -> f64> {
        let f = match self.body {
            Body::Scalar { f, .. } => f,
            Body::Field { .. } => {
                return Err(Error::InvalidConfig(format!(
                    "'{}' takes {} arguments, expected a one-dimensional function",
                    self.name,
                    self.arity()
                )))
            }
        };
        let stream = NoiseStream::new(self.noise.model(amplitude), seed, substream);
        Ok(move |x: f64| f(x) + stream.sample(&[x]))
    }

    /// Field evaluator with this entry's noise bound to `(seed, substream)`.
    pub fn field_evaluator(
        &self,
        seed: u64,
        substream: u64,
        amplitude: f64,
    ) -> Result<impl Fn(&[f64]) -> f64> {
        enum Base {
            Field(fn(&[f64]) -> f64),
            Scalar(fn(f64) -> f64),
        }
        let base = match self.body {
            Body::Field { f, .. } => Base::Field(f),
            Body::Scalar { f, .. } => Base::Scalar(f),
        };
        let stream = NoiseStream::new(self.noise.model(amplitude), seed, substream);
        Ok(move |x: &[f64]| {
            let clean = match base {
                Base::Field(f) => f(x),
                Base::Scalar(f) => f(x[0]),
            };
            clean + stream.sample(x)
        })
    }
}

static REGISTRY: &[TestFunction] = &[
    TestFunction {
        name: "f1",
        noise: NoiseKind::None,
        default_noise_amplitude: 0.0,
        body: Body::Scalar {
            f: piecewise_quartic,
            derivative: Some(piecewise_quartic_derivative),
            kinks: &[0.0],
            domain: (-1.0, 1.0),
        },
    },
    TestFunction {
        name: "abs",
        noise: NoiseKind::None,
        default_noise_amplitude: 0.0,
        body: Body::Scalar {
            f: f64::abs,
            derivative: None,
            kinks: &[0.0],
            domain: (-1.0, 1.0),
        },
    },
    TestFunction {
        name: "f2",
        noise: NoiseKind::Gaussian,
        default_noise_amplitude: 1e-10,
        body: Body::Scalar {
            f: piecewise_quartic,
            derivative: Some(piecewise_quartic_derivative),
            kinks: &[0.0],
            domain: (-1.0, 1.0),
        },
    },
    TestFunction {
        name: "rosenbrock",
        noise: NoiseKind::None,
        default_noise_amplitude: 0.0,
        body: Body::Field {
            f: rosenbrock,
            gradient: Some(rosenbrock_gradient),
            arity: 2,
        },
    },
    TestFunction {
        name: "rosenbrock-delta",
        noise: NoiseKind::Gaussian,
        default_noise_amplitude: 1e-6,
        body: Body::Field {
            f: rosenbrock,
            gradient: Some(rosenbrock_gradient),
            arity: 2,
        },
    },
    TestFunction {
        name: "rosenbrock-jump",
        noise: NoiseKind::Jump,
        default_noise_amplitude: 1e-6,
        body: Body::Field {
            f: rosenbrock,
            gradient: Some(rosenbrock_gradient),
            arity: 2,
        },
    },
];

pub fn registry_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|f| f.name).collect()
}

pub fn registry_lookup(name: &str) -> Result<&'static TestFunction> {
    REGISTRY
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFunction {
            name: name.to_string(),
            available: registry_names(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_f1() {
        let f = registry_lookup("f1").unwrap();
        assert_eq!(f.arity(), 1);
        let kinks = f.kink_set().unwrap();
        assert_eq!(kinks.points(), &[0.0]);
        assert_eq!((kinks.domain_lo(), kinks.domain_hi()), (-1.0, 1.0));
    }

    #[test]
    fn lookup_rosenbrock() {
        let f = registry_lookup("rosenbrock").unwrap();
        assert_eq!(f.arity(), 2);
        assert!(f.analytic_gradient().is_some());
    }

    #[test]
    fn lookup_unknown_lists_names() {
        let err = match registry_lookup("nosuch") {
            Ok(_) => panic!("lookup of 'nosuch' should fail"),
            Err(e) => e,
        };
        match err {
            Error::UnknownFunction { available, .. } => {
                assert!(available.contains(&"f1"));
                assert!(available.contains(&"rosenbrock-jump"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rosenbrock_minimum_and_gradient() {
        assert_eq!(rosenbrock(&[1.0, 1.0]), 0.0);
        assert_eq!(rosenbrock_gradient(&[1.0, 1.0]), vec![0.0, 0.0]);
        assert_eq!(rosenbrock_gradient(&[0.0, 0.0]), vec![-2.0, 0.0]);
    }

    #[test]
    fn noisy_evaluator_is_seed_deterministic() {
        let f2 = registry_lookup("f2").unwrap();
        let a = f2.scalar_evaluator(42, 0, 1e-10).unwrap();
        let b = f2.scalar_evaluator(42, 0, 1e-10).unwrap();
        for k in 0..10 {
            let x = 0.1 * k as f64;
            assert_eq!(a(x), b(x));
        }
    }

    #[test]
    fn scalar_evaluator_rejects_fields() {
        let r = registry_lookup("rosenbrock").unwrap();
        assert!(r.scalar_evaluator(0, 0, 0.0).is_err());
    }
}
