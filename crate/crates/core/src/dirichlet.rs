//! Simultaneous Diophantine approximation by exhaustive search.
//!
//! Given reals `a_1..a_N`, a quality `q` and a base `t0`, the pigeonhole
//! principle guarantees an integer `t0 <= t <= t0 * q^N` with every `t * a_i`
//! within `1/q` of an integer, and `m` distinct such scales in
//! `[t0, m * t0 * q^N]`. The searches here scan smallest-first, so that bound
//! doubles as a termination certificate.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::GpParams;

/// Largest scale factor we search; beyond this `t as f64` stops being exact.
pub const MAX_SCALE: u64 = 1 << 53;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirichletWitness {
    pub t: u64,
    pub x: Vec<i64>,
    pub q: u64,
    pub t0: u64,
}

impl DirichletWitness {
    /// Re-checks `|t * a_i - x_i| <= 1/q` for every coordinate.
    pub fn satisfies(&self, a: &[f64]) -> bool {
        let tol = 1.0 / self.q as f64;
        a.len() == self.x.len()
            && a.iter()
                .zip(&self.x)
                .all(|(&ai, &xi)| (self.t as f64 * ai - xi as f64).abs() <= tol)
    }
}

/// Indices `j` for which both `j/n` and `jk/n` lie within `1/q` of an integer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoodIndexSet {
    pub n: usize,
    pub k: usize,
    pub eps: Option<f64>,
    pub q: u64,
    /// Number of indices the pigeonhole argument guarantees.
    pub m: u64,
    pub indices: Vec<usize>,
}

/// Distance from `y` to the nearest integer, in `[0, 0.5]`.
pub fn nearest_int_dist(y: f64) -> f64 {
    (y - y.round()).abs()
}

/// Nearest integer, with exact halves rounded toward zero.
fn nearest_int(y: f64) -> i64 {
    if (y - y.trunc()).abs() == 0.5 {
        y.trunc() as i64
    } else {
        y.round() as i64
    }
}

fn check_inputs(a: &[f64], q: u64, t0: u64, m: u64) -> Result<()> {
    if a.is_empty() {
        return Err(Error::OutOfRange("need at least one real to approximate".into()));
    }
    if let Some(bad) = a.iter().find(|v| !v.is_finite()) {
        return Err(Error::OutOfRange(format!("input {bad} is not finite")));
    }
    if q < 1 || t0 < 1 || m < 1 {
        return Err(Error::OutOfRange(format!(
            "q, t0 and m must be positive (q = {q}, t0 = {t0}, m = {m})"
        )));
    }
    Ok(())
}

/// `m * t0 * q^N`, or `RangeOverflow` past `MAX_SCALE`.
fn search_limit(dims: usize, q: u64, t0: u64, m: u64) -> Result<u64> {
    let exponent = u32::try_from(dims).map_err(|_| Error::RangeOverflow)?;
    q.checked_pow(exponent)
        .and_then(|qn| qn.checked_mul(t0))
        .and_then(|v| v.checked_mul(m))
        .filter(|&v| v <= MAX_SCALE)
        .ok_or(Error::RangeOverflow)
}

fn witness_at(a: &[f64], q: u64, t0: u64, t: u64) -> Option<DirichletWitness> {
    let tol = 1.0 / q as f64;
    let tf = t as f64;
    let mut x = Vec::with_capacity(a.len());
    for &ai in a {
        let y = tf * ai;
        if nearest_int_dist(y) > tol {
            return None;
        }
        x.push(nearest_int(y));
    }
    Some(DirichletWitness { t, x, q, t0 })
}

/// Smallest `t` in `[t0, t0 * q^N]` bringing every `t * a_i` within `1/q` of
/// an integer.
pub fn dirichlet_witness(a: &[f64], q: u64, t0: u64) -> Result<DirichletWitness> {
    let mut found = dirichlet_witnesses(a, q, t0, 1)?;
    Ok(found.remove(0))
}

/// The `m` smallest admissible `t` in `[t0, m * t0 * q^N]`, ascending.
pub fn dirichlet_witnesses(a: &[f64], q: u64, t0: u64, m: u64) -> Result<Vec<DirichletWitness>> {
    check_inputs(a, q, t0, m)?;
    let hi = search_limit(a.len(), q, t0, m)?;
    let found: Vec<_> = (t0..=hi)
        .filter_map(|t| witness_at(a, q, t0, t))
        .take(m as usize)
        .collect();
    if (found.len() as u64) < m {
        return Err(Error::SearchExhausted { lo: t0, hi });
    }
    Ok(found)
}

/// Exact test `dist(jk/n) <= 1/q`, i.e. `q * min(r, n - r) <= n` with
/// `r = jk mod n`.
fn residue_within(jk: u128, n: u128, q: u128) -> bool {
    let r = jk % n;
    q * r.min(n - r) <= n
}

fn is_good_index(j: usize, k: usize, n: usize, q: u64) -> bool {
    let (n, q) = (n as u128, q as u128);
    residue_within(j as u128, n, q) && residue_within(j as u128 * k as u128, n, q)
}

/// Smallest `j` in `[1, n-1]` with `j/n` and `jk/n` both within
/// `1/(⌊√n⌋ - 1)` of an integer.
pub fn good_index_gap(p: GpParams) -> Result<GoodIndexSet> {
    let n = p.n();
    if n < 5 {
        return Err(Error::OutOfRange(format!("good index search needs n >= 5, got {n}")));
    }
    let q = (n as u64).isqrt() - 1;
    let j = (1..n)
        .find(|&j| is_good_index(j, p.k(), n, q))
        .ok_or(Error::SearchExhausted {
            lo: 1,
            hi: n as u64 - 1,
        })?;
    Ok(GoodIndexSet {
        n,
        k: p.k(),
        eps: None,
        q,
        m: 1,
        indices: vec![j],
    })
}

/// Quality used for a clustering threshold: `⌊4π/eps⌋ + 1`.
pub fn cluster_quality(eps: f64) -> Result<u64> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::NonpositiveEpsilon(eps));
    }
    let q = (4.0 * PI / eps).floor() + 1.0;
    if q >= MAX_SCALE as f64 {
        return Err(Error::RangeOverflow);
    }
    Ok(q as u64)
}

/// Every `j` in `[1, n-1]` that is good at quality `q = ⌊4π/eps⌋ + 1`,
/// together with the guaranteed count `m = ⌊n/q²⌋`. Each such `j` yields an
/// eigenvalue above `3 - eps`.
pub fn good_index_cluster(p: GpParams, eps: f64) -> Result<GoodIndexSet> {
    let q = cluster_quality(eps)?;
    let n = p.n();
    let q_sq = q as u128 * q as u128;
    if n as u128 <= q_sq {
        return Err(Error::TooSmallN { n: n as u64, q });
    }
    let indices = (1..n).filter(|&j| is_good_index(j, p.k(), n, q)).collect();
    Ok(GoodIndexSet {
        n,
        k: p.k(),
        eps: Some(eps),
        q,
        m: (n as u128 / q_sq) as u64,
        indices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_params;

    fn params(n: i64, k: i64) -> GpParams {
        validate_params(n, k).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert!((nearest_int_dist(0.9) - 0.1).abs() < 1e-15);
        assert_eq!(nearest_int_dist(3.0), 0.0);
        assert!((nearest_int_dist(-0.4) - 0.4).abs() < 1e-15);
        assert_eq!(nearest_int_dist(2.5), 0.5);
    }

    #[test]
    fn halves_round_toward_zero() {
        assert_eq!(nearest_int(0.5), 0);
        assert_eq!(nearest_int(-2.5), -2);
        assert_eq!(nearest_int(2.5000001), 3);
        assert_eq!(nearest_int(-0.7), -1);
    }

    #[test]
    fn witness_examples() {
        let w = dirichlet_witness(&[0.41421356], 3, 1).unwrap();
        assert_eq!((w.t, w.x.clone()), (2, vec![1]));
        let w = dirichlet_witness(&[0.5], 1, 1).unwrap();
        assert_eq!((w.t, w.x.clone()), (1, vec![0]));
        let w = dirichlet_witness(&[0.1, 0.3], 3, 1).unwrap();
        assert_eq!((w.t, w.x.clone()), (1, vec![0, 0]));
        assert!(w.satisfies(&[0.1, 0.3]));
    }

    #[test]
    fn witnesses_examples() {
        // t = 2 fails on 0.6, t = 3 gives 0.3 and 0.9.
        let ts: Vec<u64> = dirichlet_witnesses(&[0.1, 0.3], 3, 1, 2)
            .unwrap()
            .iter()
            .map(|w| w.t)
            .collect();
        assert_eq!(ts, vec![1, 3]);
        let ts: Vec<u64> = dirichlet_witnesses(&[0.0], 5, 7, 3)
            .unwrap()
            .iter()
            .map(|w| w.t)
            .collect();
        assert_eq!(ts, vec![7, 8, 9]);
        let single = dirichlet_witnesses(&[0.41421356, 0.7], 4, 2, 1).unwrap();
        assert_eq!(single, vec![dirichlet_witness(&[0.41421356, 0.7], 4, 2).unwrap()]);
    }

    #[test]
    fn witness_errors() {
        assert_eq!(dirichlet_witness(&[0.3; 60], 3, 1), Err(Error::RangeOverflow));
        assert_eq!(dirichlet_witness(&[0.3], u64::MAX, 2), Err(Error::RangeOverflow));
        assert!(matches!(dirichlet_witness(&[], 3, 1), Err(Error::OutOfRange(_))));
        assert!(matches!(dirichlet_witness(&[0.3], 0, 1), Err(Error::OutOfRange(_))));
        assert!(matches!(dirichlet_witness(&[0.3], 3, 0), Err(Error::OutOfRange(_))));
        assert!(matches!(dirichlet_witness(&[f64::NAN], 3, 1), Err(Error::OutOfRange(_))));
        assert!(matches!(dirichlet_witnesses(&[0.3], 3, 1, 0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn gap_index_examples() {
        let set = good_index_gap(params(100, 43)).unwrap();
        assert_eq!((set.q, set.indices.clone()), (9, vec![7]));
        assert_eq!(good_index_gap(params(100, 1)).unwrap().indices, vec![1]);
        let set = good_index_gap(params(10, 3)).unwrap();
        assert_eq!((set.q, set.indices.clone()), (2, vec![1]));
        assert!(matches!(good_index_gap(params(4, 1)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn cluster_examples() {
        let set = good_index_cluster(params(100, 1), 2.0).unwrap();
        assert_eq!((set.q, set.m), (7, 2));
        assert!(set.indices.starts_with(&[1, 2]));
        // dist(j/100) <= 1/7 exactly for j <= 14 and j >= 86.
        assert_eq!(set.indices.len(), 28);

        let set = good_index_cluster(params(50, 7), 2.0).unwrap();
        assert_eq!((set.q, set.m), (7, 1));
        assert!(!set.indices.is_empty());

        assert_eq!(
            good_index_cluster(params(49, 2), 2.0),
            Err(Error::TooSmallN { n: 49, q: 7 })
        );
        assert_eq!(cluster_quality(1.0).unwrap(), 13);
        assert_eq!(cluster_quality(0.5).unwrap(), 26);
        assert!(matches!(
            good_index_cluster(params(100, 1), -1.0),
            Err(Error::NonpositiveEpsilon(_))
        ));
    }
}
