//! Definitional reference implementations used to certify the arithmetic
//! pipelines. Everything here is written straight from the defining sums
//! and shares no code with the transform modules.

use std::f64::consts::TAU;

use crate::aht::Spectrum;
use crate::signal::{sample_at, SignalSource};
use crate::signal::FourierCoefficients;
use crate::{Error, Result};

fn cas(x: f64) -> f64 {
    x.cos() + x.sin()
}

/// DHT by definition: V_k = (1/N) Σ_i v_i cas(2πki/N).
pub fn dht_definition(v: &[f64]) -> Spectrum {
    let n = v.len();
    let nf = n as f64;
    let values = (0..n)
        .map(|k| {
            let sum: f64 = v
                .iter()
                .enumerate()
                .map(|(i, &vi)| vi * cas(TAU * (k * i) as f64 / nf))
                .sum();
            sum / nf
        })
        .collect();
    Spectrum::from_values(values)
}

/// Inverse DHT by definition: v_i = Σ_k V_k cas(2πki/N), no 1/N factor.
pub fn idht_definition(spectrum: &Spectrum) -> Vec<f64> {
    let values = spectrum.values();
    let n = values.len();
    let nf = n as f64;
    (0..n)
        .map(|i| {
            values
                .iter()
                .enumerate()
                .map(|(k, &vk)| vk * cas(TAU * (k * i) as f64 / nf))
                .sum()
        })
        .collect()
}

/// Fourier series coefficients by rectangle-rule projection over one
/// period; exact for signals bandlimited to `harmonics` whenever
/// `quad_points > 2 * harmonics`.
pub fn fourier_series_numeric(
    src: &SignalSource,
    harmonics: usize,
    quad_points: usize,
) -> Result<FourierCoefficients> {
    if quad_points < 2 * harmonics + 1 {
        return Err(Error::TooFewQuadraturePoints {
            points: quad_points,
            harmonics,
        });
    }
    let period = src.period();
    let samples: Vec<f64> = (0..quad_points)
        .map(|i| sample_at(src, period * i as f64 / quad_points as f64))
        .collect();
    let qf = quad_points as f64;
    let a0 = samples.iter().sum::<f64>() / qf;
    let mut a = vec![0.0; harmonics];
    let mut b = vec![0.0; harmonics];
    for n in 1..=harmonics {
        let mut ca = 0.0;
        let mut cb = 0.0;
        for (i, &s) in samples.iter().enumerate() {
            let phase = TAU * (n * i) as f64 / qf;
            ca += s * phase.cos();
            cb += s * phase.sin();
        }
        a[n - 1] = 2.0 * ca / qf;
        b[n - 1] = 2.0 * cb / qf;
    }
    FourierCoefficients::new(a0, a, b, period)
}

/// Error metrics between a sequence and its reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub max_abs: f64,
    pub rmse: f64,
    /// rmse / rms of the reference; absent when the reference is all zero.
    pub relative_rmse: Option<f64>,
    pub n: usize,
}

pub fn compare(x: &[f64], reference: &[f64]) -> Result<ErrorReport> {
    if x.len() != reference.len() {
        return Err(Error::LengthMismatch(x.len(), reference.len()));
    }
    let n = x.len();
    let mut max_abs = 0.0f64;
    let mut sq = 0.0;
    let mut ref_sq = 0.0;
    for (&a, &b) in x.iter().zip(reference) {
        let d = (a - b).abs();
        max_abs = max_abs.max(d);
        sq += d * d;
        ref_sq += b * b;
    }
    let rmse = (sq / n.max(1) as f64).sqrt();
    let ref_rms = (ref_sq / n.max(1) as f64).sqrt();
    let relative_rmse = (ref_rms > 0.0).then(|| rmse / ref_rms);
    Ok(ErrorReport {
        max_abs,
        rmse,
        relative_rmse,
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signal::GridRule;

    #[test]
    fn dht_of_constant() {
        let spectrum = dht_definition(&[2.5; 6]);
        assert!((spectrum.values()[0] - 2.5).abs() < 1e-12);
        for &vk in &spectrum.values()[1..] {
            assert!(vk.abs() < 1e-12);
        }
    }

    #[test]
    fn dht_two_point() {
        let spectrum = dht_definition(&[1.0, -1.0]);
        assert!(spectrum.values()[0].abs() < 1e-15);
        assert!((spectrum.values()[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cas_run_sum_identity() {
        // Σ_{m=0}^{k-1} cas(2πm k'/k) is k when k | k', else 0.
        for k in 1..=12usize {
            for kp in 0..=24usize {
                let sum: f64 = (0..k).map(|m| cas(TAU * (m * kp) as f64 / k as f64)).sum();
                let expect = if kp % k == 0 { k as f64 } else { 0.0 };
                assert!((sum - expect).abs() < 1e-9, "k={k} k'={kp} sum={sum}");
            }
        }
    }

    #[test]
    fn idht_edge_cases() {
        let zeros = Spectrum::from_values(vec![0.0; 5]);
        assert!(idht_definition(&zeros).iter().all(|&x| x == 0.0));
        let dc = Spectrum::from_values(vec![1.5, 0.0, 0.0, 0.0]);
        for x in idht_definition(&dc) {
            assert!((x - 1.5).abs() < 1e-12);
        }
    }

    #[test]
    fn round_trip_identity() {
        let mut state = 0x12345u64;
        for n in [2usize, 3, 8, 32, 128] {
            let v: Vec<f64> = (0..n)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
                })
                .collect();
            let back = idht_definition(&dht_definition(&v));
            for (a, b) in v.iter().zip(&back) {
                assert!((a - b).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn parseval_with_forward_scaling() {
        let v: Vec<f64> = (0..32).map(|i| ((i * i) as f64 * 0.17).sin()).collect();
        let spectrum = dht_definition(&v);
        let time: f64 = v.iter().map(|x| x * x).sum();
        let freq: f64 = spectrum.values().iter().map(|x| x * x).sum();
        let lhs = time;
        let rhs = v.len() as f64 * freq;
        assert!((lhs - rhs).abs() < 1e-8 * lhs.abs());
    }

    #[test]
    fn quadrature_projection() {
        let cos1 = SignalSource::exact(
            FourierCoefficients::new(0.0, vec![1.0, 0.0], vec![0.0, 0.0], 1.0).unwrap(),
        );
        let c = fourier_series_numeric(&cos1, 2, 16).unwrap();
        assert!((c.a[0] - 1.0).abs() < 1e-12);
        assert!(c.a[1].abs() < 1e-12);
        assert!(c.b[0].abs() < 1e-12 && c.b[1].abs() < 1e-12);

        let sin2 = SignalSource::exact(
            FourierCoefficients::new(0.0, vec![0.0, 0.0], vec![0.0, 1.0], 1.0).unwrap(),
        );
        let c = fourier_series_numeric(&sin2, 2, 16).unwrap();
        assert!((c.b[1] - 1.0).abs() < 1e-12);

        let constant = SignalSource::grid(vec![4.0; 8], 0.125, 1.0, GridRule::ZeroOrder).unwrap();
        let c = fourier_series_numeric(&constant, 2, 8).unwrap();
        assert!((c.a0 - 4.0).abs() < 1e-12);
        assert!(c.a.iter().chain(&c.b).all(|x| x.abs() < 1e-12));

        assert!(fourier_series_numeric(&constant, 4, 8).is_err());
    }

    #[test]
    fn compare_metrics() {
        let r = compare(&[1.0, 2.0], &[1.0, 2.0]).unwrap();
        assert_eq!((r.max_abs, r.rmse), (0.0, 0.0));
        let r = compare(&[2.0, 3.0, 4.0, 5.0], &[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!((r.max_abs, r.rmse), (1.0, 1.0));
        let r = compare(&[1.0], &[0.0]).unwrap();
        assert!(r.relative_rmse.is_none());
        assert!(compare(&[1.0], &[1.0, 2.0]).is_err());
    }
}
