//! Construction of `P(n, k)` and its plain-text exports.
//!
//! Vertex indexing is fixed: outer vertex `a_i` is `i`, inner vertex `b_i` is
//! `n + i`, for `0 <= i < n`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated parameter pair with `n >= 3` and `1 <= k`, `2k < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GpParams {
    n: usize,
    k: usize,
}

impl GpParams {
    pub fn new(n: i64, k: i64) -> Result<Self> {
        validate_params(n, k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    /// All admissible skips for a given `n`, in ascending order.
    pub fn valid_ks(n: usize) -> std::ops::RangeInclusive<usize> {
        1..=n.saturating_sub(1) / 2
    }

    /// Up to `count` admissible skips on a fixed linear stride, always
    /// including the smallest and largest. Returns all of them when `count`
    /// covers the whole range.
    pub fn sampled_ks(n: usize, count: usize) -> Vec<usize> {
        let all = Self::valid_ks(n);
        let total = all.clone().count();
        if count >= total {
            return all.collect();
        }
        match count {
            0 => Vec::new(),
            1 => vec![1],
            _ => (0..count)
                .map(|i| 1 + i * (total - 1) / (count - 1))
                .collect(),
        }
    }
}

/// Checks the admissible range. `k` is taken as given, never reduced.
pub fn validate_params(n: i64, k: i64) -> Result<GpParams> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    if k < 1 {
        return Err(Error::OutOfRange(format!("k = {k} must be at least 1")));
    }
    // n >= 3 here, so 2k cannot overflow before exceeding n.
    match k.checked_mul(2) {
        Some(twice) if twice == n => Err(Error::DegenerateParams {
            n: n as u64,
            k: k as u64,
        }),
        Some(twice) if twice < n => Ok(GpParams {
            n: n as usize,
            k: k as usize,
        }),
        _ => Err(Error::OutOfRange(format!("k = {k} must satisfy 2k < n = {n}"))),
    }
}

/// Cubic graph on `2n` labelled vertices with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    params: GpParams,
    adjacency: Vec<[usize; 3]>,
}

impl Graph {
    pub fn params(&self) -> GpParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|nb| nb.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize; 3] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[[usize; 3]] {
        &self.adjacency
    }

    /// Edges `(u, v)` with `u < v`, in the canonical export order: outer
    /// cycle, spokes, inner edges, each by ascending `i`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.params.n;
        let k = self.params.k;
        let outer = (0..n).map(|i| (i, (i + 1) % n));
        let spokes = (0..n).map(|i| (i, n + i));
        let inner = (0..n).map(|i| (n + i, n + (i + k) % n));
        outer.chain(spokes).chain(inner).collect()
    }

    /// Dense symmetric 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        let size = self.vertex_count();
        let mut m = vec![vec![0.0; size]; size];
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                m[u][v] = 1.0;
            }
        }
        m
    }

    /// Undirected DOT document, one edge per line.
    pub fn to_dot(&self) -> String {
        let n = self.params.n;
        let name = |v: usize| {
            if v < n {
                format!("a{v}")
            } else {
                format!("b{}", v - n)
            }
        };
        let mut out = String::from("graph G {\n");
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {} -- {}", name(u), name(v));
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_graph(p: GpParams) -> Graph {
    let n = p.n;
    let k = p.k;
    let adjacency = (0..2 * n)
        .map(|v| {
            let mut nb = if v < n {
                [(v + 1) % n, (v + n - 1) % n, v + n]
            } else {
                let i = v - n;
                [n + (i + k) % n, n + (i + n - k) % n, i]
            };
            nb.sort_unstable();
            nb
        })
        .collect();
    Graph {
        params: p,
        adjacency,
    }
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<f64>> {
    g.adjacency_matrix()
}

pub fn export_dot(g: &Graph) -> String {
    g.to_dot()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: i64, k: i64) -> Graph {
        build_graph(validate_params(n, k).unwrap())
    }

    #[test]
    fn validation_examples() {
        assert_eq!(validate_params(5, 2).unwrap(), GpParams { n: 5, k: 2 });
        assert_eq!(validate_params(10, 3).unwrap(), GpParams { n: 10, k: 3 });
        assert_eq!(
            validate_params(4, 2),
            Err(Error::DegenerateParams { n: 4, k: 2 })
        );
        assert!(matches!(validate_params(2, 1), Err(Error::OutOfRange(_))));
        assert!(matches!(validate_params(7, 0), Err(Error::OutOfRange(_))));
        assert!(matches!(validate_params(7, 4), Err(Error::OutOfRange(_))));
        assert!(matches!(validate_params(7, -1), Err(Error::OutOfRange(_))));
        assert!(matches!(
            validate_params(i64::MAX, i64::MAX),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn valid_ks_matches_validation() {
        for n in 3..30usize {
            for k in 0..n as i64 + 2 {
                let ok = validate_params(n as i64, k).is_ok();
                assert_eq!(ok, GpParams::valid_ks(n).contains(&(k as usize)));
            }
        }
    }

    #[test]
    fn sampled_ks_are_strided_and_distinct() {
        assert_eq!(GpParams::sampled_ks(11, 10), vec![1, 2, 3, 4, 5]);
        assert_eq!(GpParams::sampled_ks(101, 3), vec![1, 25, 50]);
        assert_eq!(GpParams::sampled_ks(101, 1), vec![1]);
        assert!(GpParams::sampled_ks(101, 0).is_empty());
        let ks = GpParams::sampled_ks(100_000, 50);
        assert_eq!(ks.len(), 50);
        assert!(ks.windows(2).all(|w| w[0] < w[1]));
        assert_eq!((ks[0], ks[49]), (1, 49_999));
    }

    #[test]
    fn cube_and_prism_sizes() {
        let cube = graph(4, 1);
        assert_eq!((cube.vertex_count(), cube.edge_count()), (8, 12));
        let prism = graph(3, 1);
        assert_eq!((prism.vertex_count(), prism.edge_count()), (6, 9));
    }

    #[test]
    fn matrix_row_zero_of_p10_3() {
        let m = graph(10, 3).adjacency_matrix();
        let ones: Vec<usize> = (0..20).filter(|&v| m[0][v] == 1.0).collect();
        assert_eq!(ones, vec![1, 9, 10]);
    }

    #[test]
    fn matrix_trace_and_row_sums() {
        let m = graph(5, 2).adjacency_matrix();
        assert_eq!((0..10).map(|i| m[i][i]).sum::<f64>(), 0.0);
        let m = graph(3, 1).adjacency_matrix();
        assert!(m.iter().all(|row| row.iter().sum::<f64>() == 3.0));
    }

    #[test]
    fn dot_examples() {
        let dot = graph(3, 1).to_dot();
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 9);
        assert!(dot.starts_with("graph G {\n") && dot.ends_with("}\n"));
        assert!(graph(5, 2).to_dot().lines().any(|l| l.trim() == "b0 -- b2"));
        assert!(graph(10, 3).to_dot().lines().any(|l| l.trim() == "b7 -- b0"));
        assert!(graph(10, 3).to_dot().contains("\n  a9 -- a0\n"));
    }
}
