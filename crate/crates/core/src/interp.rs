//! Fractional-index resolvers.
//!
//! A fractional index r demanded by the average stage is resolved from the
//! integer-index samples through a kernel-specific weighting function
//! w_i(r); the kernel determines which transform the arithmetic pipeline
//! actually computes. Besides the ideal N-term weighting, rounding
//! (zero-order) and top-m truncated schemes are provided.

use std::f64::consts::{PI, TAU};

use crate::{Error, Rational, Result};

/// Denominators below this magnitude switch the closed forms to direct
/// summation, where the limit is finite.
const SINGULARITY_EPS: f64 = 1e-9;

/// Retained top-m weights summing below this magnitude are rejected
/// instead of silently dividing.
const ETA_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    FourierCosine,
    FourierSine,
    Hartley,
}

impl Kernel {
    fn eval(self, x: f64) -> f64 {
        match self {
            Kernel::FourierCosine => x.cos(),
            Kernel::FourierSine => x.sin(),
            Kernel::Hartley => x.cos() + x.sin(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kernel::FourierCosine => "fourier-cosine",
            Kernel::FourierSine => "fourier-sine",
            Kernel::Hartley => "hartley",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    Closed,
    DirectSum,
    Asymptotic,
}

/// Which weighting function to evaluate: kernel, evaluation mode and
/// blocklength.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightSpec {
    pub kernel: Kernel,
    pub mode: WeightMode,
    pub n: usize,
}

impl WeightSpec {
    pub fn new(kernel: Kernel, mode: WeightMode, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BlockTooSmall(n));
        }
        Ok(Self { kernel, mode, n })
    }
}

/// Sampling function: sin(x)/x, continued with Sa(0) = 1.
pub fn sa(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// Σ_{k=0}^{N-1} cos(2πkx/N) in closed form.
fn cos_run(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    let s = (PI * x / nf).sin();
    if s.abs() < SINGULARITY_EPS {
        return (0..n).map(|k| (TAU * k as f64 * x / nf).cos()).sum();
    }
    0.5 + ((2.0 * nf - 1.0) * PI * x / nf).sin() / (2.0 * s)
}

/// Σ_{k=0}^{N-1} sin(2πkx/N) in closed form.
fn sin_run(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    let half = PI * x / nf;
    let s = half.sin();
    if s.abs() < SINGULARITY_EPS {
        return (0..n).map(|k| (TAU * k as f64 * x / nf).sin()).sum();
    }
    (half.cos() - ((2.0 * nf - 1.0) * half).cos()) / (2.0 * s)
}

/// Interpolation weight w_i(r) for the given spec.
///
/// Direct-sum mode is the defining double sum
/// (1/N) Σ_k kernel(2πki/N) kernel(2πkr/N); closed mode evaluates the
/// equivalent closed formulae, falling back to direct summation near the
/// vanishing denominators i ≡ ±r (mod N).
pub fn weight(spec: &WeightSpec, i: usize, r: f64) -> Result<f64> {
    if i >= spec.n {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: spec.n,
        });
    }
    let n = spec.n;
    let nf = n as f64;
    let fi = i as f64;
    Ok(match spec.mode {
        WeightMode::DirectSum => {
            let mut sum = 0.0;
            for k in 0..n {
                let base = TAU * k as f64 / nf;
                sum += spec.kernel.eval(base * fi) * spec.kernel.eval(base * r);
            }
            sum / nf
        }
        WeightMode::Closed => match spec.kernel {
            Kernel::FourierCosine => (cos_run(n, fi - r) + cos_run(n, fi + r)) / (2.0 * nf),
            Kernel::FourierSine => (cos_run(n, fi - r) - cos_run(n, fi + r)) / (2.0 * nf),
            Kernel::Hartley => (cos_run(n, fi - r) + sin_run(n, fi + r)) / nf,
        },
        WeightMode::Asymptotic => weight_asymptotic(spec.kernel, i, r),
    })
}

/// Large-N continuous approximation of the interpolation weight.
pub fn weight_asymptotic(kernel: Kernel, i: usize, r: f64) -> f64 {
    let d = TAU * (i as f64 - r);
    let s = TAU * (i as f64 + r);
    match kernel {
        Kernel::FourierCosine => sa(d) / 2.0 + sa(s) / 2.0,
        Kernel::FourierSine => sa(d) / 2.0 - sa(s) / 2.0,
        Kernel::Hartley => {
            // Second term tends to 0 as i + r -> 0; take the limit there.
            let tail = if s.abs() < 1e-12 {
                0.0
            } else {
                (1.0 - (TAU * r).cos()) / s
            };
            sa(d) + tail
        }
    }
}

/// The whole weight row w_0(r)..w_{N-1}(r).
pub fn weight_profile(spec: &WeightSpec, r: f64) -> Result<Vec<f64>> {
    (0..spec.n).map(|i| weight(spec, i, r)).collect()
}

/// Strategy for producing v_r at fractional r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolver {
    /// Exact N-order interpolation with the kernel weighting function.
    Ideal(WeightSpec),
    /// Nearest-integer rounding.
    ZeroOrder,
    /// Average of the samples at [r] and N - [r].
    SymmetricZeroOrder,
    /// Retain the m largest-magnitude weights, renormalized by their sum.
    TopM { spec: WeightSpec, m: usize },
}

impl Resolver {
    pub fn name(&self) -> &'static str {
        match self {
            Resolver::Ideal(_) => "ideal",
            Resolver::ZeroOrder => "zero-order",
            Resolver::SymmetricZeroOrder => "symmetric-zero-order",
            Resolver::TopM { .. } => "top-m",
        }
    }

    pub fn kernel(&self) -> Option<Kernel> {
        match self {
            Resolver::Ideal(spec) | Resolver::TopM { spec, .. } => Some(spec.kernel),
            _ => None,
        }
    }
}

fn check_spec_len(spec: &WeightSpec, len: usize) -> Result<()> {
    if spec.n != len {
        return Err(Error::SpecLengthMismatch { spec: spec.n, len });
    }
    Ok(())
}

fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Resolve the value of `v` at index `r`. Integer r short-circuits to the
/// stored sample for every strategy.
pub fn resolve(v: &[f64], r: Rational, resolver: &Resolver) -> Result<f64> {
    let n = v.len();
    let rf = rational_to_f64(r);
    if r < Rational::new(0, 1) || r >= Rational::new(n as i64, 1) {
        return Err(Error::IndexOutsideBlock(rf));
    }
    if r.is_integer() {
        return Ok(v[*r.numer() as usize]);
    }
    match resolver {
        Resolver::ZeroOrder => {
            let idx = *r.round().numer() as usize % n;
            Ok(v[idx])
        }
        Resolver::SymmetricZeroOrder => {
            let idx = *r.round().numer() as usize % n;
            let mirror = (n - idx) % n;
            Ok((v[idx] + v[mirror]) / 2.0)
        }
        Resolver::Ideal(spec) => {
            check_spec_len(spec, n)?;
            let mut sum = 0.0;
            for (i, &vi) in v.iter().enumerate() {
                sum += weight(spec, i, rf)? * vi;
            }
            Ok(sum)
        }
        Resolver::TopM { spec, m } => {
            check_spec_len(spec, n)?;
            let m = *m;
            if m == 0 || m >= n {
                return Err(Error::InvalidTruncationOrder { m, n });
            }
            let weights = weight_profile(spec, rf)?;
            let mut order: Vec<usize> = (0..n).collect();
            // Descending |w|, ties broken by smaller index.
            order.sort_by(|&x, &y| {
                weights[y]
                    .abs()
                    .partial_cmp(&weights[x].abs())
                    .unwrap()
                    .then(x.cmp(&y))
            });
            let retained = &order[..m];
            let eta: f64 = retained.iter().map(|&i| weights[i]).sum();
            if eta.abs() < ETA_EPS {
                return Err(Error::DegenerateWeights(m));
            }
            let sum: f64 = retained.iter().map(|&i| weights[i] * v[i]).sum();
            Ok(sum / eta)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KERNELS: [Kernel; 3] = [Kernel::FourierCosine, Kernel::FourierSine, Kernel::Hartley];

    fn spec(kernel: Kernel, mode: WeightMode, n: usize) -> WeightSpec {
        WeightSpec::new(kernel, mode, n).unwrap()
    }

    #[test]
    fn sa_values() {
        assert_eq!(sa(0.0), 1.0);
        assert!(sa(PI).abs() < 1e-15);
        assert!((sa(PI / 2.0) - 2.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn hartley_kronecker_at_integer_r() {
        for mode in [WeightMode::Closed, WeightMode::DirectSum] {
            let s = spec(Kernel::Hartley, mode, 16);
            for r in 0..16usize {
                for i in 0..16usize {
                    let w = weight(&s, i, r as f64).unwrap();
                    let expect = if i == r { 1.0 } else { 0.0 };
                    assert!((w - expect).abs() < 1e-10, "mode {mode:?} i={i} r={r} w={w}");
                }
            }
        }
    }

    #[test]
    fn cosine_and_sine_split_delta_at_integer_r() {
        // At integer r the cosine kernel carries weight 1/2 at i = r and
        // i = N - r (unity when they coincide); the sine kernel is the
        // antisymmetric counterpart.
        let n = 16usize;
        let cos = spec(Kernel::FourierCosine, WeightMode::DirectSum, n);
        let sin = spec(Kernel::FourierSine, WeightMode::DirectSum, n);
        for r in 0..n {
            for i in 0..n {
                let mut c = 0.0;
                let mut s = 0.0;
                if i == r {
                    c += 0.5;
                    s += 0.5;
                }
                if i == (n - r) % n {
                    c += 0.5;
                    s -= 0.5;
                }
                assert!((weight(&cos, i, r as f64).unwrap() - c).abs() < 1e-10);
                assert!((weight(&sin, i, r as f64).unwrap() - s).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn closed_matches_direct_sum_at_half_integers() {
        for kernel in KERNELS {
            let closed = spec(kernel, WeightMode::Closed, 12);
            let direct = spec(kernel, WeightMode::DirectSum, 12);
            for i in 0..12usize {
                let r = 4.5;
                let a = weight(&closed, i, r).unwrap();
                let b = weight(&direct, i, r).unwrap();
                assert!((a - b).abs() < 1e-8, "{kernel:?} i={i}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn closed_fallback_near_integer_r() {
        // r within 1e-12 of i: closed denominators vanish; the direct-sum
        // fallback keeps the value finite and near the Kronecker limit.
        let s = spec(Kernel::Hartley, WeightMode::Closed, 32);
        let w = weight(&s, 7, 7.0 + 1e-12).unwrap();
        assert!((w - 1.0).abs() < 1e-6);
    }

    #[test]
    fn hartley_normalization() {
        for n in [8usize, 16, 32] {
            let s = spec(Kernel::Hartley, WeightMode::Closed, n);
            for step in 0..25 {
                let r = step as f64 * (n as f64 - 1.0) / 25.0;
                let total: f64 = weight_profile(&s, r).unwrap().iter().sum();
                assert!((total - 1.0).abs() < 1e-9, "N={n} r={r} sum={total}");
            }
        }
    }

    #[test]
    fn asymptotic_examples() {
        // cosine: unity at i = r = 0, one half at i = r > 0.
        assert!((weight_asymptotic(Kernel::FourierCosine, 0, 0.0) - 1.0).abs() < 1e-12);
        for i in 1..6usize {
            let w = weight_asymptotic(Kernel::FourierCosine, i, i as f64);
            assert!((w - 0.5).abs() < 1e-12);
        }
        for i in 0..6usize {
            assert!(weight_asymptotic(Kernel::FourierSine, i, 0.0).abs() < 1e-12);
        }
    }

    #[test]
    fn asymptotic_approaches_closed_form() {
        let (i, r) = (3usize, 3.5);
        let approx = weight_asymptotic(Kernel::Hartley, i, r);
        let at = |n: usize| {
            let s = spec(Kernel::Hartley, WeightMode::Closed, n);
            (weight(&s, i, r).unwrap() - approx).abs()
        };
        assert!(at(256) < at(16));
        assert!(at(256) < 0.05);

        let w = weight_asymptotic(Kernel::Hartley, 5, 5.5);
        let closed = spec(Kernel::Hartley, WeightMode::Closed, 256);
        assert!((weight(&closed, 5, 5.5).unwrap() - w).abs() < 0.05);
    }

    #[test]
    fn profile_extremes_at_n16() {
        // Hartley: global maximum 1 at i = r; the mirror index carries no
        // weight. Cosine: local maxima exactly 1/2 at i = N - r.
        let n = 16usize;
        let hartley = spec(Kernel::Hartley, WeightMode::Closed, n);
        let cosine = spec(Kernel::FourierCosine, WeightMode::Closed, n);
        for r in 1..n {
            if r == n / 2 {
                continue;
            }
            assert!((weight(&hartley, r, r as f64).unwrap() - 1.0).abs() < 1e-9);
            assert!(weight(&hartley, n - r, r as f64).unwrap().abs() < 1e-9);
            assert!((weight(&cosine, n - r, r as f64).unwrap() - 0.5).abs() < 1e-9);
        }
    }

    #[test]
    fn resolve_integer_short_circuit() {
        let v = [1.0, 2.0, 3.0, 4.0];
        let ideal = Resolver::Ideal(spec(Kernel::Hartley, WeightMode::Closed, 4));
        let top = Resolver::TopM {
            spec: spec(Kernel::Hartley, WeightMode::Closed, 4),
            m: 2,
        };
        for resolver in [ideal, Resolver::ZeroOrder, Resolver::SymmetricZeroOrder, top] {
            for i in 0..4 {
                let r = Rational::new(i as i64, 1);
                assert_eq!(resolve(&v, r, &resolver).unwrap(), v[i]);
            }
        }
    }

    #[test]
    fn resolve_rejects_out_of_range() {
        let v = [0.0; 4];
        assert!(resolve(&v, Rational::new(-1, 2), &Resolver::ZeroOrder).is_err());
        assert!(resolve(&v, Rational::new(4, 1), &Resolver::ZeroOrder).is_err());
    }

    #[test]
    fn symmetric_zero_order_blind_to_odd_signals() {
        // v_k = -v_{N-k}: the mirror pair cancels exactly.
        let n = 8usize;
        let mut v = vec![0.0; n];
        for k in 1..n / 2 {
            v[k] = k as f64 * 0.7 - 1.3;
            v[n - k] = -v[k];
        }
        for num in [1i64, 3, 5, 9, 11] {
            let r = Rational::new(3 * num, 7); // assorted fractional indexes
            if r >= Rational::new(n as i64, 1) {
                continue;
            }
            assert_eq!(resolve(&v, r, &Resolver::SymmetricZeroOrder).unwrap(), 0.0);
        }
    }

    #[test]
    fn symmetric_equals_zero_order_for_even_signals() {
        let n = 8usize;
        let mut v = vec![0.0; n];
        v[0] = 2.0;
        for k in 1..=n / 2 {
            v[k] = (k as f64).cos();
            v[n - k] = v[k];
        }
        for num in [1i64, 5, 13, 17] {
            let r = Rational::new(num, 3);
            let a = resolve(&v, r, &Resolver::ZeroOrder).unwrap();
            let b = resolve(&v, r, &Resolver::SymmetricZeroOrder).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn top_m_degenerate_eta() {
        // Near an integer r the sine-kernel weights concentrate at ±1/2 on
        // the mirror pair, so the top-2 retained set sums to nearly zero.
        let n = 8usize;
        let v = vec![1.0; n];
        let top = Resolver::TopM {
            spec: spec(Kernel::FourierSine, WeightMode::Closed, n),
            m: 2,
        };
        let r = Rational::new(2_000_000_000_001, 1_000_000_000_000);
        match resolve(&v, r, &top) {
            Err(Error::DegenerateWeights(2)) => {}
            other => panic!("expected degenerate weights, got {other:?}"),
        }
    }

    #[test]
    fn top_m_order_validation() {
        let v = [0.0; 4];
        let top = Resolver::TopM {
            spec: spec(Kernel::Hartley, WeightMode::Closed, 4),
            m: 4,
        };
        assert!(resolve(&v, Rational::new(1, 2), &top).is_err());
    }
}
