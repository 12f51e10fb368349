//! Arithmetic Hartley transform: averages over (possibly fractional)
//! indexes, combined by Möbius inversion.
//!
//! The four stages are index generation ([`build_plan`]), fractional-index
//! resolution (delegated to [`crate::interp`]), average computation
//! ([`dht_average`]) and the Möbius combination ([`aht_forward`]).

use crate::interp::{resolve, Resolver};
use crate::moebius::MoebiusTable;
use crate::{Error, OpCounter, Rational, Result};

/// Real transform-domain vector. The forward transform carries the 1/N
/// factor; the inverse carries none.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_values(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// Index schedule for one average order k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanEntry {
    pub k: usize,
    /// Indexes m N / k that land on the grid, reduced into 0..N-1.
    pub integer_indexes: Vec<usize>,
    /// Indexes that require interpolation, as exact rationals in [0, N).
    pub fractional_indexes: Vec<Rational>,
}

/// Full index-generation result for blocklength N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AhtPlan {
    pub n: usize,
    pub entries: Vec<PlanEntry>,
    /// Total number of indexes that require interpolation.
    pub fractional_count: usize,
}

/// Enumerate every index m N / k, k = 1..N-1, classifying integer versus
/// fractional exactly.
pub fn build_plan(n: usize) -> Result<AhtPlan> {
    if n < 2 {
        return Err(Error::BlockTooSmall(n));
    }
    let mut entries = Vec::with_capacity(n - 1);
    let mut fractional_count = 0;
    for k in 1..n {
        let mut integer_indexes = Vec::new();
        let mut fractional_indexes = Vec::new();
        for m in 0..k {
            let idx = Rational::new((m * n) as i64, k as i64);
            if idx.is_integer() {
                integer_indexes.push(*idx.numer() as usize % n);
            } else {
                fractional_indexes.push(idx);
            }
        }
        fractional_count += fractional_indexes.len();
        entries.push(PlanEntry {
            k,
            integer_indexes,
            fractional_indexes,
        });
    }
    Ok(AhtPlan {
        n,
        entries,
        fractional_count,
    })
}

impl AhtPlan {
    /// Upper bound R ≤ Σ_{d ∤ N} (d - 1) on the interpolation count.
    pub fn fractional_bound(&self) -> usize {
        (1..self.n)
            .filter(|d| self.n % d != 0)
            .map(|d| d - 1)
            .sum()
    }
}

/// kth average S_k = (1/k) Σ_{m=0}^{k-1} v_{mN/k}, fractional indexes
/// supplied by the resolver.
pub fn dht_average(v: &[f64], k: usize, resolver: &Resolver) -> Result<f64> {
    dht_average_counted(v, k, resolver, &mut OpCounter::new())
}

fn dht_average_counted(
    v: &[f64],
    k: usize,
    resolver: &Resolver,
    ops: &mut OpCounter,
) -> Result<f64> {
    let n = v.len();
    if k == 0 || k >= n {
        return Err(Error::OrderOutOfRange { order: k, limit: n });
    }
    let mut sum = 0.0;
    for m in 0..k {
        let idx = Rational::new((m * n) as i64, k as i64);
        sum += resolve(v, idx, resolver)?;
    }
    ops.add(k as u64 - 1);
    ops.scale(1);
    Ok(sum / k as f64)
}

/// Signed ±1/0 coefficients of the Möbius combination for V_k: pairs
/// (l·k, μ(l)) over l = 1..⌊(N-1)/k⌋ with μ(l) ≠ 0.
pub fn combination_coefficients(n: usize, k: usize) -> Result<Vec<(usize, i8)>> {
    if n < 2 {
        return Err(Error::BlockTooSmall(n));
    }
    if k == 0 || k >= n {
        return Err(Error::OrderOutOfRange { order: k, limit: n });
    }
    let terms = (n - 1) / k;
    let table = MoebiusTable::sieve(terms)?;
    let mut coeffs = Vec::new();
    for l in 1..=terms {
        let mu = table.get(l)?;
        if mu != 0 {
            coeffs.push((l * k, mu));
        }
    }
    Ok(coeffs)
}

/// Forward AHT result: spectrum plus operation tallies, with the Möbius
/// combination stage also reported on its own.
#[derive(Debug, Clone)]
pub struct AhtResult {
    pub spectrum: Spectrum,
    pub ops: OpCounter,
    pub mobius_ops: OpCounter,
}

/// Forward arithmetic Hartley transform.
///
/// V_0 is the sample mean, computed directly; the mean is removed before
/// the averages so the s = 0 alias vanishes, then
/// V_k = Σ_l μ(l) S_{kl} for k = 1..N-1.
pub fn aht_forward(v: &[f64], resolver: &Resolver) -> Result<AhtResult> {
    aht_forward_with_threads(v, resolver, 1)
}

/// As [`aht_forward`], computing the independent averages on up to
/// `threads` worker threads. The result is bitwise identical for any
/// thread count.
pub fn aht_forward_with_threads(
    v: &[f64],
    resolver: &Resolver,
    threads: usize,
) -> Result<AhtResult> {
    let n = v.len();
    if n < 2 {
        return Err(Error::BlockTooSmall(n));
    }
    let mut ops = OpCounter::new();

    let mean = v.iter().sum::<f64>() / n as f64;
    ops.add(n as u64 - 1);
    ops.scale(1);
    let centered: Vec<f64> = v.iter().map(|x| x - mean).collect();
    ops.add(n as u64);

    let averages = compute_averages(&centered, resolver, threads.max(1), &mut ops)?;

    let mut mobius_ops = OpCounter::new();
    let mut values = vec![0.0; n];
    values[0] = mean;
    for k in 1..n {
        let mut vk = 0.0;
        let coeffs = combination_coefficients(n, k)?;
        for &(j, mu) in &coeffs {
            if mu == 1 {
                vk += averages[j];
            } else {
                vk -= averages[j];
                mobius_ops.trivial(1);
            }
        }
        if coeffs.len() > 1 {
            mobius_ops.add(coeffs.len() as u64 - 1);
        }
        values[k] = vk;
    }
    ops.merge(&mobius_ops);
    Ok(AhtResult {
        spectrum: Spectrum::from_values(values),
        ops,
        mobius_ops,
    })
}

/// Averages S_1..S_{N-1} (index 0 unused), optionally in parallel.
fn compute_averages(
    centered: &[f64],
    resolver: &Resolver,
    threads: usize,
    ops: &mut OpCounter,
) -> Result<Vec<f64>> {
    let n = centered.len();
    let mut averages = vec![0.0; n];
    if threads <= 1 || n < 4 {
        for k in 1..n {
            averages[k] = dht_average_counted(centered, k, resolver, ops)?;
        }
        return Ok(averages);
    }
    let workers = threads.min(n - 1);
    let mut results: Vec<Result<Vec<(usize, f64, OpCounter)>>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut out = Vec::new();
                    let mut k = w + 1;
                    while k < n {
                        let mut local = OpCounter::new();
                        let s = dht_average_counted(centered, k, resolver, &mut local)?;
                        out.push((k, s, local));
                        k += workers;
                    }
                    Ok(out)
                })
            })
            .collect();
        for handle in handles {
            results.push(handle.join().expect("average worker panicked"));
        }
    });
    for result in results {
        for (k, s, local) in result? {
            averages[k] = s;
            ops.merge(&local);
        }
    }
    Ok(averages)
}

/// Inverse arithmetic Hartley transform.
///
/// The spectrum is rescaled onto the no-1/N convention of the inverse
/// kernel (u_k = N V_k - v_0, which also removes the s = 0 alias), then
/// v_i = Σ_l μ(l) σ_{il} with σ_i = (1/i) Σ_m u_{mN/i}, and
/// v_0 = Σ_k V_k.
pub fn aht_inverse(spectrum: &Spectrum, resolver: &Resolver) -> Result<Vec<f64>> {
    let n = spectrum.len();
    if n < 2 {
        return Err(Error::BlockTooSmall(n));
    }
    let nf = n as f64;
    let v0: f64 = spectrum.values().iter().sum();
    let rescaled: Vec<f64> = spectrum.values().iter().map(|&vk| nf * vk - v0).collect();

    let mut sigma = vec![0.0; n];
    for i in 1..n {
        sigma[i] = dht_average(&rescaled, i, resolver)?;
    }

    let mut v = vec![0.0; n];
    v[0] = v0;
    for i in 1..n {
        let mut vi = 0.0;
        for (j, mu) in combination_coefficients(n, i)? {
            match mu {
                1 => vi += sigma[j],
                _ => vi -= sigma[j],
            }
        }
        v[i] = vi;
    }
    Ok(v)
}
