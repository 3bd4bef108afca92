//! Generalized distance matrices `D_α = α·Tr + (1 − α)·D` and their
//! spectral radii.
//!
//! The spectral radius is found by power iteration started from the
//! normalized row-sum vector. For a nonnegative irreducible matrix that
//! start is strictly positive, so it is never orthogonal to the Perron
//! vector, and every iterate stays nonnegative.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceProfile, Graph};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 200_000;
/// Two spectral radii closer than this are treated as equal.
pub const TIE_TOL: f64 = 1e-9;

/// Dense symmetric matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    /// Builds a matrix from `entry(i, j)` evaluated once per unordered pair,
    /// so both triangles hold the same bits.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let x = entry(i, j);
                m.data[i * n + j] = x;
                m.data[j * n + i] = x;
            }
        }
        m
    }

    /// Fails with `DimensionMismatch` if `rows` is not square and with
    /// `BadParams` if it is not exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j].to_bits() != rows[j][i].to_bits() {
                    return Err(Error::BadParams(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymMatrix { n, data: rows.concat() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn scale(&self, k: f64) -> SymMatrix {
        SymMatrix { n: self.n, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(SymMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() })
    }

    pub fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j) == 0.0))
    }

    fn first_negative(&self) -> Option<(usize, usize)> {
        self.data.iter().position(|&x| x < 0.0).map(|k| (k / self.n, k % self.n))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                write!(out, "{x}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// `D_α(G)`: diagonal `α·Tr(v)`, off-diagonal `(1 − α)·d(u, v)`.
pub fn build_d_alpha(p: &DistanceProfile, alpha: f64) -> Result<SymMatrix> {
    check_alpha(alpha)?;
    let off = 1.0 - alpha;
    Ok(SymMatrix::from_fn(p.n(), |i, j| {
        if i == j {
            alpha * p.transmission(i) as f64
        } else {
            off * p.dist(i, j) as f64
        }
    }))
}

pub fn build_distance(p: &DistanceProfile) -> SymMatrix {
    SymMatrix::from_fn(p.n(), |i, j| p.dist(i, j) as f64)
}

pub fn build_transmission(p: &DistanceProfile) -> SymMatrix {
    SymMatrix::from_fn(p.n(), |i, j| if i == j { p.transmission(i) as f64 } else { 0.0 })
}

/// Distance signless Laplacian `Tr + D`.
pub fn build_signless_laplacian(p: &DistanceProfile) -> SymMatrix {
    build_transmission(p).add(&build_distance(p)).expect("same dimension")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Unit-norm, nonnegative eigenvector for `rho`.
    pub perron: Vec<f64>,
    /// `max_i |(M x − ρ x)_i|`.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Set when the matrix is diagonal (for `D_α` this is exactly α = 1).
    /// The spectral radius is then the largest diagonal entry and `perron`
    /// is the indicator of its lowest index; no uniqueness is implied.
    pub degenerate: bool,
}

impl SpectralResult {
    pub fn ensure_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged { iterations: self.iterations, residual: self.residual })
        }
    }
}

pub fn spectral_radius(m: &SymMatrix, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    let start = m.row_sums();
    spectral_radius_from(m, &start, tol, max_iter)
}

/// Power iteration from a caller-chosen start vector. The start should be
/// nonnegative and nonzero; it is normalized here.
pub fn spectral_radius_from(m: &SymMatrix, start: &[f64], tol: f64, max_iter: usize) -> Result<SpectralResult> {
    let n = m.n();
    if start.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: start.len() });
    }
    if let Some((i, j)) = m.first_negative() {
        return Err(Error::NegativeEntry(i, j));
    }
    if !(tol > 0.0) {
        return Err(Error::BadParams(format!("tolerance must be positive, got {tol}")));
    }
    if n == 0 {
        return Err(Error::BadParams("empty matrix".into()));
    }
    if m.is_diagonal() {
        return Ok(diagonal_result(m));
    }

    let mut x = start.to_vec();
    let norm = l2(&x);
    if !(norm > 0.0) {
        return Err(Error::BadParams("start vector must be nonzero".into()));
    }
    x.iter_mut().for_each(|v| *v /= norm);

    let mut y = vec![0.0; n];
    let mut rho = 0.0;
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    while iterations < max_iter {
        m.mul_vec(&x, &mut y);
        iterations += 1;
        rho = dot(&x, &y);
        residual = y.iter().zip(&x).map(|(yi, xi)| (yi - rho * xi).abs()).fold(0.0, f64::max);
        if residual <= tol {
            break;
        }
        let norm = l2(&y);
        if norm == 0.0 {
            break;
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Ok(SpectralResult { rho, perron: x, residual, iterations, converged: residual <= tol, degenerate: false })
}

fn diagonal_result(m: &SymMatrix) -> SpectralResult {
    let n = m.n();
    let mut best = 0;
    for i in 1..n {
        if m.get(i, i) > m.get(best, best) {
            best = i;
        }
    }
    let mut perron = vec![0.0; n];
    perron[best] = 1.0;
    SpectralResult { rho: m.get(best, best), perron, residual: 0.0, iterations: 0, converged: true, degenerate: true }
}

/// Minimum and maximum row sums; they bracket the spectral radius of a
/// nonnegative matrix.
pub fn row_sum_bounds(m: &SymMatrix) -> (f64, f64) {
    let sums = m.row_sums();
    let lo = sums.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if sums.is_empty() {
        (0.0, 0.0)
    } else {
        (lo, hi)
    }
}

/// `2W/n`, a lower bound on `ρ(D_α)` for every α, attained exactly by
/// transmission-regular graphs.
pub fn wiener_lower_bound(p: &DistanceProfile) -> f64 {
    if p.n() == 0 {
        return 0.0;
    }
    2.0 * p.wiener() as f64 / p.n() as f64
}

/// `max_i |(M x − ρ x)_i|`.
pub fn eigen_residual(m: &SymMatrix, rho: f64, x: &[f64]) -> Result<f64> {
    if x.len() != m.n() {
        return Err(Error::DimensionMismatch { expected: m.n(), found: x.len() });
    }
    let mut y = vec![0.0; m.n()];
    m.mul_vec(x, &mut y);
    Ok(y.iter().zip(x).map(|(yi, xi)| (yi - rho * xi).abs()).fold(0.0, f64::max))
}

/// `ρ(D_α(G))` with the default tolerance; fails on disconnected graphs
/// and on non-convergence.
pub fn d_alpha_spectral_radius(g: &Graph, alpha: f64) -> Result<SpectralResult> {
    d_alpha_spectral_radius_tol(g, alpha, DEFAULT_TOL)
}

pub fn d_alpha_spectral_radius_tol(g: &Graph, alpha: f64, tol: f64) -> Result<SpectralResult> {
    let p = g.distance_profile()?;
    let m = build_d_alpha(&p, alpha)?;
    spectral_radius(&m, tol, DEFAULT_MAX_ITER)?.ensure_converged()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn l2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
