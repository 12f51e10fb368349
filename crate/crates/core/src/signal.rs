//! Signal sources queried at arbitrary (possibly off-grid) times.

use crate::{Error, Result};
use std::f64::consts::TAU;

/// Fourier series coefficients of a bandlimited periodic signal:
/// a0 + Σ a_n cos(2πnt/T) + Σ b_n sin(2πnt/T).
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients {
    pub a0: f64,
    /// Cosine coefficients a_1..a_N.
    pub a: Vec<f64>,
    /// Sine coefficients b_1..b_N.
    pub b: Vec<f64>,
    /// Period in seconds.
    pub period: f64,
}

impl FourierCoefficients {
    pub fn new(a0: f64, a: Vec<f64>, b: Vec<f64>, period: f64) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::CoefficientLengthMismatch);
        }
        Ok(Self { a0, a, b, period })
    }

    pub fn harmonics(&self) -> usize {
        self.a.len()
    }

    pub fn zeros(harmonics: usize, period: f64) -> Self {
        Self {
            a0: 0.0,
            a: vec![0.0; harmonics],
            b: vec![0.0; harmonics],
            period,
        }
    }
}

/// Evaluate the Fourier series at time `t`.
pub fn eval_series(coeffs: &FourierCoefficients, t: f64) -> f64 {
    let base = TAU * t / coeffs.period;
    let mut v = coeffs.a0;
    for (n, (&a, &b)) in coeffs.a.iter().zip(&coeffs.b).enumerate() {
        let phase = base * (n + 1) as f64;
        v += a * phase.cos() + b * phase.sin();
    }
    v
}

/// Interpolation rule applied between grid samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridRule {
    /// Round the query to the nearest grid sample (ties away from zero).
    ZeroOrder,
    /// Linear interpolation between the two bracketing samples.
    FirstOrder,
}

/// Where signal values come from: an exact series evaluator, or uniform
/// grid samples covering exactly one period.
#[derive(Debug, Clone)]
pub enum SignalSource {
    Exact(FourierCoefficients),
    Grid {
        samples: Vec<f64>,
        /// Grid spacing T0; the grid spans one period, L * T0 = T.
        t0: f64,
        period: f64,
        rule: GridRule,
    },
}

impl SignalSource {
    pub fn exact(coeffs: FourierCoefficients) -> Self {
        SignalSource::Exact(coeffs)
    }

    pub fn grid(samples: Vec<f64>, t0: f64, period: f64, rule: GridRule) -> Result<Self> {
        if samples.is_empty() || t0 <= 0.0 || period <= 0.0 {
            return Err(Error::GridPeriodMismatch);
        }
        if (samples.len() as f64 * t0 - period).abs() > 1e-9 * period {
            return Err(Error::GridPeriodMismatch);
        }
        Ok(SignalSource::Grid {
            samples,
            t0,
            period,
            rule,
        })
    }

    /// Sample the underlying signal from `coeffs` at `points` uniform times.
    pub fn grid_from_series(
        coeffs: &FourierCoefficients,
        points: usize,
        rule: GridRule,
    ) -> Result<Self> {
        let t0 = coeffs.period / points as f64;
        let samples = (0..points)
            .map(|i| eval_series(coeffs, i as f64 * t0))
            .collect();
        SignalSource::grid(samples, t0, coeffs.period, rule)
    }

    pub fn period(&self) -> f64 {
        match self {
            SignalSource::Exact(c) => c.period,
            SignalSource::Grid { period, .. } => *period,
        }
    }
}

/// Value of the signal at time `t` (seconds). Grid queries are reduced
/// modulo the period before the interpolation rule is applied.
pub fn sample_at(src: &SignalSource, t: f64) -> f64 {
    match src {
        SignalSource::Exact(coeffs) => eval_series(coeffs, t),
        SignalSource::Grid {
            samples,
            t0,
            period,
            rule,
        } => {
            let len = samples.len();
            let tau = t.rem_euclid(*period);
            match rule {
                GridRule::ZeroOrder => {
                    // f64::round ties away from zero, matching [10 * 1/4] = 3.
                    let idx = (tau / t0).round() as usize % len;
                    samples[idx]
                }
                GridRule::FirstOrder => {
                    let x = tau / t0;
                    let lo = x.floor();
                    let frac = x - lo;
                    let i = lo as usize % len;
                    let j = (i + 1) % len;
                    samples[i] + frac * (samples[j] - samples[i])
                }
            }
        }
    }
}

/// Mean of the signal over one period: the a0 field for an exact source,
/// rectangle-rule quadrature (plain sample mean) for a grid.
pub fn mean_estimate(src: &SignalSource) -> f64 {
    match src {
        SignalSource::Exact(coeffs) => coeffs.a0,
        SignalSource::Grid { samples, .. } => {
            samples.iter().sum::<f64>() / samples.len() as f64
        }
    }
}
