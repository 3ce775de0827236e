//! Expanding (Cheeger) constants: exact values by exhaustive subset search,
//! and the two-sided bounds implied by `λ2`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, GpParams, Graph};
use crate::spectrum::second_eigenvalue;
use crate::VALENCY;

/// Largest vertex count accepted by [`expanding_constant_exact`].
pub const MAX_EXACT_VERTICES: usize = 26;

/// Slack allowed when comparing `h` against its spectral bounds.
pub const SANDWICH_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionResult {
    pub h: f64,
    /// Lexicographically smallest subset attaining `h`.
    pub witness_set: Vec<usize>,
    pub boundary: usize,
    pub lower: f64,
    pub upper: f64,
    /// `None` when `n < 4`, where the bound is undefined.
    pub corollary_bound: Option<f64>,
}

impl ExpansionResult {
    pub fn sandwich_holds(&self) -> bool {
        self.lower <= self.h + SANDWICH_SLACK && self.h <= self.upper + SANDWICH_SLACK
    }
}

/// Serializable summary used by the CLI; `h` and `witness_set` are `None`
/// when the graph is too large for exhaustive search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub n: usize,
    pub k: usize,
    pub h: Option<f64>,
    pub witness_set: Option<Vec<usize>>,
    pub lower: f64,
    pub upper: f64,
    pub corollary_bound: Option<f64>,
}

impl ExpansionReport {
    pub fn sandwich_holds(&self) -> bool {
        self.h.is_none_or(|h| {
            self.lower <= h + SANDWICH_SLACK && h <= self.upper + SANDWICH_SLACK
        })
    }

    pub fn corollary_holds(&self) -> bool {
        match (self.h, self.corollary_bound) {
            (Some(h), Some(bound)) => h < bound,
            _ => true,
        }
    }
}

/// Number of edges with exactly one endpoint in `set`.
pub fn boundary_size(g: &Graph, set: &[usize]) -> Result<usize> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let vertex_count = g.vertex_count();
    let mut inside = vec![false; vertex_count];
    for &v in set {
        if v >= vertex_count {
            return Err(Error::InvalidVertex { vertex: v, vertex_count });
        }
        inside[v] = true;
    }
    Ok((0..vertex_count)
        .filter(|&v| inside[v])
        .flat_map(|v| g.neighbors(v).iter())
        .filter(|&&u| !inside[u])
        .count())
}

/// `((3 - λ2)/2, sqrt(6 (3 - λ2)))`.
pub fn cheeger_bounds(lambda2: f64) -> Result<(f64, f64)> {
    if lambda2.is_nan() || lambda2 > VALENCY + 1e-9 {
        return Err(Error::OutOfRange(format!("lambda2 = {lambda2} exceeds the valency 3")));
    }
    let gap = (VALENCY - lambda2).max(0.0);
    Ok((gap / 2.0, (2.0 * VALENCY * gap).sqrt()))
}

/// `sqrt(24π / (⌊√n⌋ − 1))`.
pub fn corollary_bound(n: u64) -> Result<f64> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("corollary bound needs n >= 4, got {n}")));
    }
    Ok((24.0 * std::f64::consts::PI / (n.isqrt() - 1) as f64).sqrt())
}

/// Sorted-list lexicographic order on vertex subsets encoded as bitmasks.
fn lex_less(a: u32, b: u32) -> bool {
    if a == b {
        return false;
    }
    let d = (a ^ b).trailing_zeros();
    let above = |m: u32| d < 31 && (m >> (d + 1)) != 0;
    if a & (1 << d) != 0 {
        // Below d they agree; a continues with d, b with something larger or ends.
        above(b)
    } else {
        !above(a)
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    boundary: u32,
    size: u32,
    mask: u32,
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        let lhs = self.boundary as u64 * other.size as u64;
        let rhs = other.boundary as u64 * self.size as u64;
        lhs < rhs || (lhs == rhs && lex_less(self.mask, other.mask))
    }
}

fn best_of(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.better_than(&x) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Gray-code walk over the low `low_bits` vertices with the remaining
/// vertices fixed to `prefix`.
fn walk_block(neighbor_masks: &[u32], prefix: u32, low_bits: u32, max_size: u32) -> Option<Candidate> {
    let mut mask = prefix;
    let mut size = mask.count_ones();
    let mut boundary: u32 = (0..neighbor_masks.len())
        .filter(|&v| mask & (1 << v) != 0)
        .map(|v| (neighbor_masks[v] & !mask).count_ones())
        .sum();

    let mut best: Option<Candidate> = None;
    let mut consider = |mask: u32, size: u32, boundary: u32| {
        if size > 0 && size <= max_size {
            best = best_of(best, Some(Candidate { boundary, size, mask }));
        }
    };
    consider(mask, size, boundary);
    for step in 1u64..(1u64 << low_bits) {
        let v = step.trailing_zeros() as usize;
        let bit = 1u32 << v;
        let inside = (neighbor_masks[v] & mask).count_ones();
        if mask & bit == 0 {
            boundary = boundary + 3 - 2 * inside;
            size += 1;
        } else {
            boundary = boundary + 2 * inside - 3;
            size -= 1;
        }
        mask ^= bit;
        consider(mask, size, boundary);
    }
    best
}

/// Exact `h = min |∂F| / |F|` over `0 < |F| <= |V|/2`.
pub fn expanding_constant_exact(g: &Graph) -> Result<ExpansionResult> {
    let vertices = g.vertex_count();
    if vertices > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge {
            vertices,
            max: MAX_EXACT_VERTICES,
        });
    }
    let neighbor_masks: Vec<u32> = g
        .adjacency()
        .iter()
        .map(|nb| nb.iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    let max_size = (vertices / 2) as u32;
    let top_bits = vertices.min(6) as u32;
    let low_bits = vertices as u32 - top_bits;

    let best = (0u32..1 << top_bits)
        .into_par_iter()
        .map(|high| walk_block(&neighbor_masks, high << low_bits, low_bits, max_size))
        .reduce(|| None, best_of)
        .expect("a graph with at least two vertices has an admissible subset");

    let p = g.params();
    let (lower, upper) = cheeger_bounds(second_eigenvalue(p))?;
    Ok(ExpansionResult {
        h: best.boundary as f64 / best.size as f64,
        witness_set: (0..vertices).filter(|&v| best.mask & (1 << v) != 0).collect(),
        boundary: best.boundary as usize,
        lower,
        upper,
        corollary_bound: corollary_bound(p.n() as u64).ok(),
    })
}

/// Spectral bounds for any `P(n, k)`, plus the exact `h` when feasible.
pub fn expansion_report(p: GpParams) -> Result<ExpansionReport> {
    let (lower, upper) = cheeger_bounds(second_eigenvalue(p))?;
    let exact = if p.vertex_count() <= MAX_EXACT_VERTICES {
        Some(expanding_constant_exact(&build_graph(p))?)
    } else {
        None
    };
    Ok(ExpansionReport {
        n: p.n(),
        k: p.k(),
        h: exact.as_ref().map(|e| e.h),
        witness_set: exact.map(|e| e.witness_set),
        lower,
        upper,
        corollary_bound: corollary_bound(p.n() as u64).ok(),
    })
}
