//! Möbius function, finite Möbius inversion and the 2^k(2m+1) factorization.

use crate::{Error, Result};

/// Sieved values of μ(1)..μ(limit).
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone)]
pub struct MoebiusTable {
    limit: usize,
    values: Vec<i8>,
}

impl MoebiusTable {
    /// Linear sieve of μ up to `limit` (inclusive).
    pub fn sieve(limit: usize) -> Result<Self> {
        if limit == 0 {
            return Err(Error::ZeroArgument);
        }
        let mut mu = vec![0i8; limit + 1];
        let mut smallest_prime = vec![0usize; limit + 1];
        let mut primes = Vec::new();
        mu[1] = 1;
        for i in 2..=limit {
            if smallest_prime[i] == 0 {
                smallest_prime[i] = i;
                primes.push(i);
                mu[i] = -1;
            }
            for &p in &primes {
                if p > smallest_prime[i] || i * p > limit {
                    break;
                }
                smallest_prime[i * p] = p;
                mu[i * p] = if i % p == 0 { 0 } else { -mu[i] };
            }
        }
        Ok(Self { limit, values: mu })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// μ(n) for 1 <= n <= limit.
    pub fn get(&self, n: usize) -> Result<i8> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        if n > self.limit {
            return Err(Error::IndexOutOfRange {
                index: n,
                len: self.limit,
            });
        }
        Ok(self.values[n])
    }

    /// The table as a slice, `values()[i]` holding μ(i + 1).
    pub fn values(&self) -> &[i8] {
        &self.values[1..]
    }
}

/// μ(n) by trial division. Single-query companion to [`MoebiusTable::sieve`].
pub fn mu(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Finite Möbius inversion: given `g` with g_n = Σ_{k=1}^{⌊N/n⌋} f_{kn},
/// recover f_n = Σ_{m=1}^{⌊N/n⌋} μ(m) g_{mn}.
///
/// `g` is indexed from 1, so `g[0]` holds g_1. Only additions and
/// subtractions are performed besides the μ lookups.
pub fn moebius_invert(g: &[f64], n: usize) -> Result<f64> {
    let table = MoebiusTable::sieve((g.len() / n.max(1)).max(1))?;
    moebius_invert_with(&table, g, n)
}

/// As [`moebius_invert`], with μ taken from a caller-supplied table.
pub fn moebius_invert_with(table: &MoebiusTable, g: &[f64], n: usize) -> Result<f64> {
    let len = g.len();
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n > len {
        return Err(Error::IndexOutOfRange { index: n, len });
    }
    let mut f = 0.0;
    for m in 1..=len / n {
        match table.get(m)? {
            1 => f += g[m * n - 1],
            -1 => f -= g[m * n - 1],
            _ => {}
        }
    }
    Ok(f)
}

/// The unique factorization n = 2^k (2m + 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pow2Factorization {
    pub n: u64,
    pub k: u32,
    pub m: u64,
}

pub fn factor_pow2(n: u64) -> Result<Pow2Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let k = n.trailing_zeros();
    let odd = n >> k;
    Ok(Pow2Factorization {
        n,
        k,
        m: (odd - 1) / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_small_values() {
        assert_eq!(mu(1).unwrap(), 1);
        assert_eq!(mu(12).unwrap(), 0);
        assert_eq!(mu(30).unwrap(), -1);
        assert!(mu(0).is_err());
    }

    #[test]
    fn sieve_matches_pointwise_mu() {
        let table = MoebiusTable::sieve(6).unwrap();
        assert_eq!(table.values(), &[1, -1, -1, 0, -1, 1]);
        let one = MoebiusTable::sieve(1).unwrap();
        assert_eq!(one.values(), &[1]);
        let ten = MoebiusTable::sieve(10).unwrap();
        assert_eq!(ten.get(8).unwrap(), 0);
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let table = MoebiusTable::sieve(10_000).unwrap();
        for n in 1..=10_000usize {
            assert_eq!(table.get(n).unwrap(), mu(n as u64).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn divisor_sum_identity() {
        // Σ_{d|n} μ(d) = [n = 1]
        let table = MoebiusTable::sieve(2_000).unwrap();
        for n in 1..=2_000usize {
            let sum: i32 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| table.get(d).unwrap() as i32)
                .sum();
            assert_eq!(sum, if n == 1 { 1 } else { 0 }, "n = {n}");
        }
    }

    #[test]
    fn invert_recovers_forward_divisor_sum() {
        // f = [1, 1, 1, 1] gives g = [4, 2, 1, 1].
        let g = [4.0, 2.0, 1.0, 1.0];
        assert_eq!(moebius_invert(&g, 1).unwrap(), 1.0);
        assert_eq!(moebius_invert(&g, 4).unwrap(), 1.0);
    }

    #[test]
    fn invert_edge_cases() {
        let g = [3.0, -1.0, 2.5];
        // n = N: single term, mu(1) = 1.
        assert_eq!(moebius_invert(&g, 3).unwrap(), 2.5);
        assert_eq!(moebius_invert(&[0.0; 7], 2).unwrap(), 0.0);
        assert!(moebius_invert(&g, 4).is_err());
        assert!(moebius_invert(&g, 0).is_err());
    }

    #[test]
    fn factor_pow2_examples() {
        let f = factor_pow2(12).unwrap();
        assert_eq!((f.k, f.m), (2, 1));
        let f = factor_pow2(1).unwrap();
        assert_eq!((f.k, f.m), (0, 0));
        let f = factor_pow2(7).unwrap();
        assert_eq!((f.k, f.m), (0, 3));
        assert!(factor_pow2(0).is_err());
    }

    #[test]
    fn factor_pow2_round_trip() {
        for n in 1..=10_000u64 {
            let f = factor_pow2(n).unwrap();
            assert_eq!((1u64 << f.k) * (2 * f.m + 1), n);
        }
    }
}
