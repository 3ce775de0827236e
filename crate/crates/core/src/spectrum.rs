//! Adjacency spectra of `P(n, k)`.
//!
//! For each `0 <= j < n` the closed form contributes the pair
//!
//! ```text
//! cos(2πj/n) + cos(2πjk/n) ± sqrt((cos(2πj/n) - cos(2πjk/n))^2 + 1)
//! ```
//!
//! and the oracle route diagonalises the dense adjacency matrix directly.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GpParams, Graph};
use crate::jacobi;
use crate::VALENCY;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    ClosedForm,
    Oracle,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Source::ClosedForm => "closed_form",
            Source::Oracle => "oracle",
        })
    }
}

/// The `2n` adjacency eigenvalues, sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub n: usize,
    pub k: usize,
    pub source: Source,
    pub values: Vec<f64>,
}

impl Spectrum {
    /// Wraps raw eigenvalues, sorting them descending.
    pub fn new(n: usize, k: usize, source: Source, mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            n,
            k,
            source,
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn lambda2(&self) -> Option<f64> {
        self.values.get(1).copied()
    }

    /// Largest entrywise deviation from another spectrum of the same length.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}

/// Both branch values of the closed form at one index `j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigPair {
    pub j: usize,
    pub plus_value: f64,
    pub minus_value: f64,
}

fn pair_from_cosines(j: usize, c1: f64, c2: f64) -> EigPair {
    let root = ((c1 - c2) * (c1 - c2) + 1.0).sqrt();
    EigPair {
        j,
        plus_value: c1 + c2 + root,
        minus_value: c1 + c2 - root,
    }
}

pub fn eig_pair(p: GpParams, j: i64) -> Result<EigPair> {
    let n = p.n();
    if j < 0 || j as u64 >= n as u64 {
        return Err(Error::IndexOutOfRange {
            j: j.max(0) as u64,
            n: n as u64,
        });
    }
    let j = j as usize;
    let nf = n as f64;
    let c1 = (2.0 * PI * j as f64 / nf).cos();
    let c2 = (2.0 * PI * (j as f64 * p.k() as f64) / nf).cos();
    Ok(pair_from_cosines(j, c1, c2))
}

pub fn closed_form_spectrum(p: GpParams) -> Spectrum {
    let n = p.n();
    let mut values = Vec::with_capacity(2 * n);
    for j in 0..n {
        let pair = eig_pair(p, j as i64).expect("j < n");
        values.push(pair.plus_value);
        values.push(pair.minus_value);
    }
    Spectrum::new(n, p.k(), Source::ClosedForm, values)
}

/// Spectrum of the adjacency matrix computed by cyclic Jacobi rotations.
pub fn oracle_spectrum(g: &Graph) -> Result<Spectrum> {
    let p = g.params();
    let values = jacobi::symmetric_eigenvalues(&g.adjacency_matrix())?;
    Ok(Spectrum::new(p.n(), p.k(), Source::Oracle, values))
}

pub fn spectral_gap(s: &Spectrum) -> Result<f64> {
    match s.values.as_slice() {
        [first, second, ..] => Ok(first - second),
        _ => Err(Error::TooFewValues),
    }
}

/// `4π / (⌊√n⌋ − 1)`, the upper bound on `λ1 − λ2` for `n >= 4`.
pub fn gap_bound(n: u64) -> Result<f64> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "gap bound needs n >= 4 (floor(sqrt(n)) - 1 >= 1), got n = {n}"
        )));
    }
    Ok(4.0 * PI / (n.isqrt() - 1) as f64)
}

/// Number of eigenvalues at least `3 - eps`.
pub fn count_near_valency(s: &Spectrum, eps: f64) -> Result<usize> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::NonpositiveEpsilon(eps));
    }
    let threshold = VALENCY - eps;
    Ok(s.values.iter().filter(|&&v| v >= threshold).count())
}

/// Cosines `cos(2πm/n)` for `0 <= m < n`, shared by every `k` at a fixed
/// `n`. The product `jk` is reduced modulo `n` in integer arithmetic, so
/// sweeps over many `k` cost one table lookup per term.
#[derive(Debug, Clone)]
pub struct CosTable {
    n: usize,
    cosines: Vec<f64>,
}

impl CosTable {
    pub fn new(n: usize) -> Self {
        let nf = n as f64;
        let cosines = (0..n).map(|m| (2.0 * PI * m as f64 / nf).cos()).collect();
        CosTable { n, cosines }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eig_pair(&self, k: usize, j: usize) -> EigPair {
        let jk = ((j as u128 * k as u128) % self.n as u128) as usize;
        pair_from_cosines(j, self.cosines[j % self.n], self.cosines[jk])
    }

    /// `λ2` of `P(n, k)`: the largest value other than the single `3` at
    /// `j = 0`. Indices `j` and `n - j` give equal pairs, so only
    /// `1 <= j <= n/2` is scanned; the `j = 0` minus branch contributes `1`.
    pub fn second_eigenvalue(&self, k: usize) -> f64 {
        (1..=self.n / 2)
            .map(|j| self.eig_pair(k, j).plus_value)
            .fold(1.0, f64::max)
    }
}

/// `λ2` of `P(n, k)` in `O(n)` without building the full spectrum.
pub fn second_eigenvalue(p: GpParams) -> f64 {
    CosTable::new(p.n()).second_eigenvalue(p.k())
}
