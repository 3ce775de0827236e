//! Arithmetic functions and the Cayley / isomorphism-class census.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn require_at_least(name: &str, value: u64, min: u64) -> Result<()> {
    if value < min {
        return Err(Error::OutOfRange(format!("{name} = {value} must be at least {min}")));
    }
    Ok(())
}

/// Distinct prime factors by trial division, ascending.
fn distinct_primes(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

pub fn euler_phi(n: u64) -> Result<u64> {
    require_at_least("n", n, 1)?;
    Ok(distinct_primes(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1)))
}

/// Number of distinct prime divisors; `omega(1) = 0`.
pub fn omega(n: u64) -> Result<u64> {
    require_at_least("n", n, 1)?;
    Ok(distinct_primes(n).len() as u64)
}

/// Solutions of `x^2 ≡ 1` plus solutions of `x^2 ≡ -1` modulo `m`, counted
/// by scanning `x` over `[0, m-1]`.
pub fn kappa(m: u64) -> Result<u64> {
    require_at_least("m", m, 3)?;
    let mm = m as u128;
    let count = (0..mm)
        .map(|x| x * x % mm)
        .filter(|&r| r == 1 || r == mm - 1)
        .count();
    Ok(count as u64)
}

/// Cayley criterion for `P(n, k)`: `k^2 ≡ 1 (mod n)`.
pub fn is_cayley(n: u64, k: u64) -> bool {
    n > 1 && (k as u128 * k as u128) % n as u128 == 1
}

/// `(φ(m) + κ(m)) / 4`, the number of isomorphism classes of `P(m, k)` with
/// `gcd(m, k) = 1`.
pub fn iso_class_count_coprime(m: u64) -> Result<u64> {
    require_at_least("m", m, 5)?;
    let total = euler_phi(m)? + kappa(m)?;
    if total % 4 != 0 {
        return Err(Error::NonIntegral { m, total });
    }
    Ok(total / 4)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mod_inverse(k: u64, m: u64) -> u64 {
    // Extended Euclid on (k, m); k is a unit mod m.
    let (mut r0, mut r1) = (m as i128, k as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (s0, s1) = (s1, s0 - quot * s1);
    }
    s0.rem_euclid(m as i128) as u64
}

/// Orbits of the units mod `m` under `k ↦ m - k` and `k ↦ k⁻¹`, found by
/// explicit enumeration.
pub fn brute_iso_classes_coprime(m: u64) -> Result<u64> {
    require_at_least("m", m, 5)?;
    let mut seen = vec![false; m as usize];
    let mut orbits = 0;
    for k in 1..m {
        if seen[k as usize] || gcd(k, m) != 1 {
            continue;
        }
        orbits += 1;
        let inv = mod_inverse(k, m);
        for member in [k, m - k, inv, m - inv] {
            seen[member as usize] = true;
        }
    }
    Ok(orbits)
}

/// One row of the census: aggregates over all `n <= big_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    #[serde(rename = "N")]
    pub big_n: u64,
    pub a_lower: u64,
    pub b_count: u64,
    pub ratio: f64,
}

pub const CENSUS_CHECKPOINTS: [u64; 10] = [10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000];

/// Checkpoints reported for a census up to `big_n`: the fixed schedule
/// clipped to `[5, big_n]`, plus `big_n` itself.
pub fn census_checkpoints(big_n: u64) -> Vec<u64> {
    let mut points: Vec<u64> = CENSUS_CHECKPOINTS
        .iter()
        .copied()
        .filter(|&c| (5..=big_n).contains(&c))
        .collect();
    if points.last() != Some(&big_n) {
        points.push(big_n);
    }
    points
}

/// Cayley pairs `(n, k)` with `1 <= k`, `2k < n`.
fn cayley_pairs(n: u64) -> u64 {
    (1..=(n - 1) / 2).filter(|&k| is_cayley(n, k)).count() as u64
}

/// Lower bound `A(N) >= Σ_{5<=n<=N} (φ(n)+κ(n))/4` (coprime classes only) and
/// the pair count `B(N)` of Cayley `P(n, k)`, at each checkpoint.
pub fn census(big_n: u64) -> Result<Vec<CensusRecord>> {
    require_at_least("N", big_n, 5)?;
    let per_n: Vec<(u64, u64)> = (3..=big_n)
        .into_par_iter()
        .map(|n| {
            let classes = if n >= 5 { iso_class_count_coprime(n) } else { Ok(0) };
            classes.map(|c| (c, cayley_pairs(n)))
        })
        .collect::<Result<_>>()?;

    let mut records = Vec::new();
    let (mut a_lower, mut b_count) = (0u64, 0u64);
    let mut points = census_checkpoints(big_n).into_iter().peekable();
    for (n, (classes, pairs)) in (3..=big_n).zip(per_n) {
        a_lower += classes;
        b_count += pairs;
        if points.peek() == Some(&n) {
            points.next();
            records.push(CensusRecord {
                big_n: n,
                a_lower,
                b_count,
                ratio: b_count as f64 / a_lower as f64,
            });
        }
    }
    Ok(records)
}
