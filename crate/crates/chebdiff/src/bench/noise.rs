//! Deterministic noise models for the benchmark functions.
//!
//! Reproducibility contract ("chebdiff noise stream, version 1"): all
//! pseudo-randomness comes from the SplitMix64 output function
//!
//! ```text
//! mix(s) = z ^ (z >> 31)  where  z = t * 0x94D049BB133111EB,
//!                                t = u ^ (u >> 27), u = v * 0xBF58476D1CE4E5B9,
//!                                v = s ^ (s >> 30)
//! ```
//!
//! A substream is keyed by `key = mix(seed ^ mix(substream + 1))`; its i-th
//! raw word is `mix(key + (i + 1) * 0x9E3779B97F4A7C15)` (wrapping
//! arithmetic). Uniform variates take the top 53 bits; Gaussian variates
//! use one Box-Muller pair per sample. Given the same seed and substream
//! index, every implementation of this recipe reproduces the same noise.

use std::cell::Cell;

const GOLDEN_GAMMA: u64 = 0x9E3779B97F4A7C15;

fn mix(state: u64) -> u64 {
    let mut z = state;
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58476D1CE4E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn stream_key(seed: u64, substream: u64) -> u64 {
    mix(seed ^ mix(substream.wrapping_add(1)))
}

fn raw(key: u64, index: u64) -> u64 {
    mix(key.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

/// Uniform in [0, 1) from the top 53 bits.
fn unit(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Additive disturbance applied to a test function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseModel {
    None,
    /// Zero-mean Gaussian with sigma = amplitude / 3, clipped to
    /// [-amplitude, amplitude] so every sample stays inside the stated
    /// interval. A fresh value is drawn on every evaluation.
    AdditiveGaussian {
        amplitude: f64,
    },
    /// `amplitude * sgn(sin(frequency * sum(coords)))` - a pure function of
    /// the evaluation point that flips sign on a fine spatial scale.
    SignJump {
        amplitude: f64,
        frequency: f64,
    },
}

/// Default spatial frequency of the sign-jump disturbance: flips much
/// faster than the differentiation windows sample.
pub const DEFAULT_JUMP_FREQUENCY: f64 = 1e7;

/// A seeded source of noise samples tied to one (seed, substream) pair.
#[derive(Debug, Clone)]
pub struct NoiseStream {
    model: NoiseModel,
    key: u64,
    counter: Cell<u64>,
}

impl NoiseStream {
    pub fn new(model: NoiseModel, seed: u64, substream: u64) -> Self {
        NoiseStream {
            model,
            key: stream_key(seed, substream),
            counter: Cell::new(0),
        }
    }

    pub fn model(&self) -> NoiseModel {
        self.model
    }

    /// Noise value for an evaluation at `coords`. Gaussian draws advance the
    /// stream; the sign jump depends only on the point.
    pub fn sample(&self, coords: &[f64]) -> f64 {
        match self.model {
            NoiseModel::None => 0.0,
            NoiseModel::AdditiveGaussian { amplitude } => {
                let i = self.counter.get();
                self.counter.set(i + 1);
                let u1 = unit(raw(self.key, 2 * i));
                let u2 = unit(raw(self.key, 2 * i + 1));
                let z = (-2.0 * (1.0 - u1).ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
                (amplitude / 3.0 * z).clamp(-amplitude, amplitude)
            }
            NoiseModel::SignJump {
                amplitude,
                frequency,
            } => {
                let phase: f64 = coords.iter().sum();
                amplitude * (frequency * phase).sin().signum()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a = NoiseStream::new(NoiseModel::AdditiveGaussian { amplitude: 1e-6 }, 7, 3);
        let b = NoiseStream::new(NoiseModel::AdditiveGaussian { amplitude: 1e-6 }, 7, 3);
        for _ in 0..100 {
            assert_eq!(a.sample(&[0.0]), b.sample(&[0.0]));
        }
    }

    #[test]
    fn different_substreams_differ() {
        let a = NoiseStream::new(NoiseModel::AdditiveGaussian { amplitude: 1e-6 }, 7, 0);
        let b = NoiseStream::new(NoiseModel::AdditiveGaussian { amplitude: 1e-6 }, 7, 1);
        let va: Vec<f64> = (0..8).map(|_| a.sample(&[0.0])).collect();
        let vb: Vec<f64> = (0..8).map(|_| b.sample(&[0.0])).collect();
        assert_ne!(va, vb);
    }

    #[test]
    fn gaussian_samples_stay_in_interval() {
        let amp = 1e-6;
        let s = NoiseStream::new(NoiseModel::AdditiveGaussian { amplitude: amp }, 123, 0);
        for _ in 0..10_000 {
            let v = s.sample(&[0.5]);
            assert!(v.abs() <= amp, "sample {v} escaped [-{amp}, {amp}]");
        }
    }

    #[test]
    fn sign_jump_is_a_pure_function_of_the_point() {
        let s = NoiseStream::new(
            NoiseModel::SignJump {
                amplitude: 1e-6,
                frequency: DEFAULT_JUMP_FREQUENCY,
            },
            9,
            0,
        );
        let first = s.sample(&[0.4, 0.3]);
        let second = s.sample(&[0.4, 0.3]);
        assert_eq!(first, second);
        assert_eq!(first.abs(), 1e-6);
    }

    #[test]
    fn sign_jump_flips_between_nearby_points() {
        let s = NoiseStream::new(
            NoiseModel::SignJump {
                amplitude: 1e-6,
                frequency: DEFAULT_JUMP_FREQUENCY,
            },
            9,
            0,
        );
        // Scan a few micro-steps; the sign must change at least once.
        let mut seen_flip = false;
        let mut prev = s.sample(&[0.0, 0.0]);
        for k in 1..10 {
            let v = s.sample(&[1e-6 * k as f64, 0.0]);
            if v != prev {
                seen_flip = true;
            }
            prev = v;
        }
        assert!(seen_flip);
    }
}
