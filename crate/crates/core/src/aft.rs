//! The three arithmetic Fourier transform algorithms: Tufts-Sadasiv
//! harmonic extraction, Reed-Tufts coefficient recovery, and the
//! Reed-Shih simplified AFT built on Bruns alternating averages.
//!
//! Shifts and sample times are kept as exact rationals so the sampling
//! schedules are reproducible bit for bit.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use crate::moebius::{factor_pow2, MoebiusTable};
use crate::signal::{mean_estimate, sample_at, FourierCoefficients, SignalSource};
use crate::{Error, OpCounter, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AftAlgorithm {
    TuftsSadasiv,
    ReedTufts,
    ReedShih,
}

impl fmt::Display for AftAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AftAlgorithm::TuftsSadasiv => "tufts-sadasiv",
            AftAlgorithm::ReedTufts => "reed-tufts",
            AftAlgorithm::ReedShih => "reed-shih",
        };
        f.write_str(s)
    }
}

/// Averages computed during a transform run, keyed by (sample count, shift).
///
/// Each stored value was computed from exactly `order` signal queries.
#[derive(Debug, Clone)]
pub struct AftAverages {
    pub algorithm: AftAlgorithm,
    pub harmonic_budget: usize,
    values: BTreeMap<(usize, Rational), f64>,
}

impl AftAverages {
    fn new(algorithm: AftAlgorithm, harmonic_budget: usize) -> Self {
        Self {
            algorithm,
            harmonic_budget,
            values: BTreeMap::new(),
        }
    }

    pub fn get(&self, order: usize, shift: Rational) -> Option<f64> {
        self.values.get(&(order, shift)).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Result of a full AFT run: recovered coefficients plus the operation
/// tallies of the transform stage (averages and Möbius combination;
/// sampling-internal arithmetic is not included).
#[derive(Debug, Clone)]
pub struct AftResult {
    pub coeffs: FourierCoefficients,
    pub ops: OpCounter,
    /// The share of `ops` spent in the Möbius combination stage alone.
    pub mobius_ops: OpCounter,
    pub averages: AftAverages,
}

fn check_shift(alpha: f64) -> Result<()> {
    if alpha.abs() >= 1.0 {
        return Err(Error::InvalidShift(alpha));
    }
    Ok(())
}

/// Tufts-Sadasiv nth average S_n(t) = (1/n) Σ_{m=0}^{n-1} v(t - m/n),
/// times in units of the source period.
pub fn ts_average(src: &SignalSource, n: usize, t: f64, ops: &mut OpCounter) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let period = src.period();
    let mut sum = 0.0;
    for m in 0..n {
        sum += sample_at(src, (t - m as f64 / n as f64) * period);
    }
    ops.add(n as u64 - 1);
    ops.scale(1);
    Ok(sum / n as f64)
}

/// Tufts-Sadasiv harmonic v_k(t) = Σ_{m=1}^{⌊N/k⌋} μ(m) S_{mk}(t).
///
/// The formula assumes an even, zero-mean signal bandlimited to
/// `harmonic_budget`; for other inputs it yields the even-part harmonic.
pub fn ts_harmonic(
    src: &SignalSource,
    k: usize,
    t: f64,
    harmonic_budget: usize,
    ops: &mut OpCounter,
) -> Result<f64> {
    if k == 0 || harmonic_budget == 0 {
        return Err(Error::ZeroArgument);
    }
    if k > harmonic_budget {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: harmonic_budget,
        });
    }
    let terms = harmonic_budget / k;
    let table = MoebiusTable::sieve(terms)?;
    let mut v = 0.0;
    let mut used = 0u64;
    for m in 1..=terms {
        let mu = table.get(m)?;
        if mu == 0 {
            continue;
        }
        let s = ts_average(src, m * k, t, ops)?;
        if mu == 1 {
            v += s;
        } else {
            v -= s;
            ops.trivial(1);
        }
        used += 1;
    }
    if used > 1 {
        ops.add(used - 1);
    }
    Ok(v)
}

/// Reed-Tufts nth average S_n(α) = (1/n) Σ_{m=0}^{n-1} v(mT/n + αT).
///
/// The source is expected to be mean-removed.
pub fn rt_average(src: &SignalSource, n: usize, alpha: f64, ops: &mut OpCounter) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    check_shift(alpha)?;
    let period = src.period();
    let mut sum = 0.0;
    for m in 0..n {
        sum += sample_at(src, (m as f64 / n as f64 + alpha) * period);
    }
    ops.add(n as u64 - 1);
    ops.scale(1);
    Ok(sum / n as f64)
}

/// Reed-Tufts shifted coefficient c_n(α) = Σ_{l=1}^{⌊N/n⌋} μ(l) S_{ln}(α).
pub fn rt_cn(
    src: &SignalSource,
    n: usize,
    alpha: f64,
    harmonic_budget: usize,
    ops: &mut OpCounter,
) -> Result<f64> {
    if n == 0 || harmonic_budget == 0 {
        return Err(Error::ZeroArgument);
    }
    if n > harmonic_budget {
        return Err(Error::IndexOutOfRange {
            index: n,
            len: harmonic_budget,
        });
    }
    let terms = harmonic_budget / n;
    let table = MoebiusTable::sieve(terms)?;
    let mut c = 0.0;
    let mut used = 0u64;
    for l in 1..=terms {
        let mu = table.get(l)?;
        if mu == 0 {
            continue;
        }
        let s = rt_average(src, l * n, alpha, ops)?;
        if mu == 1 {
            c += s;
        } else {
            c -= s;
            ops.trivial(1);
        }
        used += 1;
    }
    if used > 1 {
        ops.add(used - 1);
    }
    Ok(c)
}

/// Bruns alternating average B_{2n}(α) over the raw signal:
/// (1/2n) Σ_{m=0}^{2n-1} (-1)^m v(mT/2n + αT).
pub fn bruns_average(
    src: &SignalSource,
    two_n: usize,
    alpha: f64,
    ops: &mut OpCounter,
) -> Result<f64> {
    if two_n == 0 || two_n % 2 != 0 {
        return Err(Error::InvalidBrunsIndex(two_n));
    }
    check_shift(alpha)?;
    let period = src.period();
    let mut sum = 0.0;
    for m in 0..two_n {
        let v = sample_at(src, (m as f64 / two_n as f64 + alpha) * period);
        if m % 2 == 0 {
            sum += v;
        } else {
            sum -= v;
        }
    }
    ops.add(two_n as u64 - 1);
    // The n negated terms are sign changes, i.e. trivial multiplications.
    ops.trivial(two_n as u64 / 2);
    ops.scale(1);
    Ok(sum / two_n as f64)
}

/// Reed-Tufts AFT: a_n = c_n(0), b_n = (-1)^m c_n(1/2^{k+2}) with
/// n = 2^k (2m+1), a_0 estimated from the source mean.
pub fn reed_tufts(src: &SignalSource, harmonic_budget: usize) -> Result<AftResult> {
    if harmonic_budget == 0 {
        return Err(Error::ZeroArgument);
    }
    let n_max = harmonic_budget;
    let a0 = mean_estimate(src);
    let centered = MeanRemoved { src, a0 };
    let table = MoebiusTable::sieve(n_max)?;
    let mut ops = OpCounter::new();
    let mut mobius_ops = OpCounter::new();
    let mut averages = AftAverages::new(AftAlgorithm::ReedTufts, n_max);

    let mut a = vec![0.0; n_max];
    let mut b = vec![0.0; n_max];
    for n in 1..=n_max {
        let fact = factor_pow2(n as u64)?;
        let alpha_b = Rational::new(1, 1i64 << (fact.k + 2));
        let mut an = 0.0;
        let mut bn = 0.0;
        let mut used = 0u64;
        for l in 1..=n_max / n {
            let mu = table.get(l)?;
            if mu == 0 {
                continue;
            }
            let sa = centered.average(l * n, Rational::new(0, 1), &mut averages, &mut ops)?;
            let sb = centered.average(l * n, alpha_b, &mut averages, &mut ops)?;
            if mu == 1 {
                an += sa;
                bn += sb;
            } else {
                an -= sa;
                bn -= sb;
                mobius_ops.trivial(2);
            }
            used += 1;
        }
        if used > 1 {
            mobius_ops.add(2 * (used - 1));
        }
        if fact.m % 2 == 1 {
            bn = -bn;
            mobius_ops.trivial(1);
        }
        a[n - 1] = an;
        b[n - 1] = bn;
    }
    ops.merge(&mobius_ops);
    Ok(AftResult {
        coeffs: FourierCoefficients::new(a0, a, b, src.period())?,
        ops,
        mobius_ops,
        averages,
    })
}

struct MeanRemoved<'a> {
    src: &'a SignalSource,
    a0: f64,
}

impl MeanRemoved<'_> {
    /// S_n(α) over v̄ = v - a0, memoized per (n, α).
    fn average(
        &self,
        n: usize,
        alpha: Rational,
        cache: &mut AftAverages,
        ops: &mut OpCounter,
    ) -> Result<f64> {
        if let Some(v) = cache.get(n, alpha) {
            return Ok(v);
        }
        let period = self.src.period();
        let af = rational_to_f64(alpha);
        check_shift(af)?;
        let mut sum = 0.0;
        for m in 0..n {
            sum += sample_at(self.src, (m as f64 / n as f64 + af) * period) - self.a0;
        }
        ops.add(n as u64 - 1);
        ops.scale(1);
        let v = sum / n as f64;
        cache.values.insert((n, alpha), v);
        Ok(v)
    }
}

fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Signed ±1/0 coefficient of B_{2j}(0) in the Reed-Shih formula for a_n.
fn reed_shih_a_coeff(table: &MoebiusTable, n: usize, j: usize) -> Result<i8> {
    if j % n != 0 {
        return Ok(0);
    }
    let l = j / n;
    if l % 2 == 0 {
        return Ok(0);
    }
    table.get(l)
}

/// Signed coefficient of B_{2j}(1/4j) in the Reed-Shih formula for b_n:
/// μ(l) (-1)^{(l-1)/2} for odd l = j/n.
fn reed_shih_b_coeff(table: &MoebiusTable, n: usize, j: usize) -> Result<i8> {
    let mu = reed_shih_a_coeff(table, n, j)?;
    if mu == 0 {
        return Ok(0);
    }
    let l = j / n;
    Ok(if ((l - 1) / 2) % 2 == 0 { mu } else { -mu })
}

/// The two N x N combination matrices of the Reed-Shih algorithm:
/// rows are coefficients over [B_2(0)..B_{2N}(0)] for a_n and over
/// [B_2(1/4)..B_{2N}(1/4N)] for b_n.
pub fn reed_shih_matrices(harmonic_budget: usize) -> Result<(Vec<Vec<i8>>, Vec<Vec<i8>>)> {
    if harmonic_budget == 0 {
        return Err(Error::ZeroArgument);
    }
    let table = MoebiusTable::sieve(harmonic_budget)?;
    let mut ma = Vec::with_capacity(harmonic_budget);
    let mut mb = Vec::with_capacity(harmonic_budget);
    for n in 1..=harmonic_budget {
        let mut row_a = Vec::with_capacity(harmonic_budget);
        let mut row_b = Vec::with_capacity(harmonic_budget);
        for j in 1..=harmonic_budget {
            row_a.push(reed_shih_a_coeff(&table, n, j)?);
            row_b.push(reed_shih_b_coeff(&table, n, j)?);
        }
        ma.push(row_a);
        mb.push(row_b);
    }
    Ok((ma, mb))
}

/// Reed-Shih simplified AFT over the raw signal. All 2N Bruns averages
/// B_{2j}(0) and B_{2j}(1/4j), j = 1..N, are computed once and combined
/// with ±1/0 coefficients.
pub fn reed_shih(src: &SignalSource, harmonic_budget: usize) -> Result<AftResult> {
    if harmonic_budget == 0 {
        return Err(Error::ZeroArgument);
    }
    let n_max = harmonic_budget;
    let table = MoebiusTable::sieve(n_max)?;
    let mut ops = OpCounter::new();
    let mut mobius_ops = OpCounter::new();
    let mut averages = AftAverages::new(AftAlgorithm::ReedShih, n_max);

    let mut avg_a = vec![0.0; n_max + 1];
    let mut avg_b = vec![0.0; n_max + 1];
    for j in 1..=n_max {
        let alpha = Rational::new(1, 4 * j as i64);
        avg_a[j] = bruns_average(src, 2 * j, 0.0, &mut ops)?;
        avg_b[j] = bruns_average(src, 2 * j, rational_to_f64(alpha), &mut ops)?;
        averages.values.insert((2 * j, Rational::new(0, 1)), avg_a[j]);
        averages.values.insert((2 * j, alpha), avg_b[j]);
    }

    let a0 = mean_estimate(src);
    let mut a = vec![0.0; n_max];
    let mut b = vec![0.0; n_max];
    for n in 1..=n_max {
        let mut an = 0.0;
        let mut bn = 0.0;
        let mut used = 0u64;
        for j in (n..=n_max).step_by(n) {
            let ca = reed_shih_a_coeff(&table, n, j)?;
            if ca == 0 {
                continue;
            }
            let cb = reed_shih_b_coeff(&table, n, j)?;
            if ca == 1 {
                an += avg_a[j];
            } else {
                an -= avg_a[j];
                mobius_ops.trivial(1);
            }
            if cb == 1 {
                bn += avg_b[j];
            } else {
                bn -= avg_b[j];
                mobius_ops.trivial(1);
            }
            used += 1;
        }
        if used > 1 {
            mobius_ops.add(2 * (used - 1));
        }
        a[n - 1] = an;
        b[n - 1] = bn;
    }
    ops.merge(&mobius_ops);
    Ok(AftResult {
        coeffs: FourierCoefficients::new(a0, a, b, src.period())?,
        ops,
        mobius_ops,
        averages,
    })
}

/// Identifies one average in a sampling schedule.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AverageId {
    /// Number of signal queries the average consumes (n, or 2n for Bruns).
    pub order: usize,
    /// Shift α in units of the period.
    pub shift: Rational,
    /// Whether the average alternates signs (Bruns).
    pub alternating: bool,
}

impl fmt::Display for AverageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.alternating { "B" } else { "S" };
        if self.shift == Rational::new(0, 1) {
            write!(f, "{}_{}(0)", tag, self.order)
        } else {
            write!(f, "{}_{}({})", tag, self.order, self.shift)
        }
    }
}

/// One average together with the exact sample times it queries,
/// in units of the period, reduced modulo 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSchedule {
    pub average: AverageId,
    pub times: Vec<Rational>,
}

/// Exact sample times required by every average the chosen algorithm
/// touches at harmonic budget N. Averages duplicated across coefficient
/// formulas appear once.
pub fn required_sample_times(
    harmonic_budget: usize,
    algorithm: AftAlgorithm,
) -> Result<Vec<SampleSchedule>> {
    if harmonic_budget == 0 {
        return Err(Error::ZeroArgument);
    }
    let n_max = harmonic_budget as i64;
    let zero = Rational::new(0, 1);
    let mut ids: BTreeSet<AverageId> = BTreeSet::new();
    match algorithm {
        AftAlgorithm::TuftsSadasiv => {
            for n in 1..=n_max {
                ids.insert(AverageId {
                    order: n as usize,
                    shift: zero,
                    alternating: false,
                });
            }
        }
        AftAlgorithm::ReedTufts => {
            let table = MoebiusTable::sieve(harmonic_budget)?;
            for n in 1..=n_max {
                let fact = factor_pow2(n as u64)?;
                let alpha = Rational::new(1, 1i64 << (fact.k + 2));
                for l in 1..=n_max / n {
                    if table.get(l as usize)? == 0 {
                        continue;
                    }
                    for shift in [zero, alpha] {
                        ids.insert(AverageId {
                            order: (l * n) as usize,
                            shift,
                            alternating: false,
                        });
                    }
                }
            }
        }
        AftAlgorithm::ReedShih => {
            for j in 1..=n_max {
                ids.insert(AverageId {
                    order: 2 * j as usize,
                    shift: zero,
                    alternating: true,
                });
                ids.insert(AverageId {
                    order: 2 * j as usize,
                    shift: Rational::new(1, 4 * j),
                    alternating: true,
                });
            }
        }
    }

    let mut schedules = Vec::with_capacity(ids.len());
    for id in ids {
        let order = id.order as i64;
        let times = (0..order)
            .map(|m| {
                let t = Rational::new(m, order) + id.shift;
                t - t.floor()
            })
            .collect();
        schedules.push(SampleSchedule { average: id, times });
    }
    // Present zero-shift averages first, by order, matching the way the
    // coefficient matrices are laid out.
    schedules.sort_by(|x, y| {
        (x.average.shift != Rational::new(0, 1), x.average.order, x.average.shift).cmp(&(
            y.average.shift != Rational::new(0, 1),
            y.average.order,
            y.average.shift,
        ))
    });
    Ok(schedules)
}

/// All distinct sample times of a schedule, merged and sorted.
pub fn merged_sample_times(schedules: &[SampleSchedule]) -> BTreeSet<Rational> {
    schedules
        .iter()
        .flat_map(|s| s.times.iter().copied())
        .collect()
}
