//! Named graph families and closed forms for their `D_α` spectral radii.
//!
//! Labeling conventions: the star center is vertex 0 and `S_n⁺` joins
//! leaves 1 and 2; multipartite parts take contiguous labels, and Turán
//! parts are listed largest first.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).flat_map(|v| (0..v).map(move |u| (u, v))))
}

pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// The star with one extra edge between leaves 1 and 2.
pub fn star_plus(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    star(n)?.add_edge(1, 2)
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.contains(&0) {
        return Err(Error::EmptyPart);
    }
    let n: usize = parts.iter().sum();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    Graph::from_edges(n, pairs.filter(|&(u, v)| part_of[u] != part_of[v]).collect::<Vec<_>>())
}

/// `n = r·d + s` with `0 ≤ s < r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuranParams {
    pub n: usize,
    pub r: usize,
    pub d: usize,
    pub s: usize,
}

impl TuranParams {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r < 2 || r > n {
            return Err(Error::BadParams(format!("Turán graph needs 2 <= r <= n, got n = {n}, r = {r}")));
        }
        Ok(TuranParams { n, r, d: n / r, s: n % r })
    }

    /// `s` parts of size `d + 1` followed by `r − s` parts of size `d`.
    pub fn part_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![self.d + 1; self.s];
        sizes.resize(self.r, self.d);
        sizes
    }
}

pub fn turan(n: usize, r: usize) -> Result<Graph> {
    complete_multipartite(&TuranParams::new(n, r)?.part_sizes())
}

/// A closed-form value together with whether the inputs satisfy the
/// hypothesis under which it is the extremal value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedForm {
    pub value: f64,
    pub within_hypothesis: bool,
}

/// Largest α for which the Turán graph is the proven minimizer.
pub fn turan_alpha_limit(r: usize) -> f64 {
    1.0 - 1.0 / r as f64
}

/// `ρ(D_α(T_{n,r})) = (n + 2d + αn − 3 + √((n(1−α) − 1)² + 4s(1−α)(d+1))) / 2`.
///
/// Requires `3 ≤ r ≤ n − 1`. For α above `1 − 1/r` the value is still
/// computed, but `within_hypothesis` is false.
pub fn rho_turan_closed(n: usize, r: usize, alpha: f64) -> Result<ClosedForm> {
    if r < 3 || r + 1 > n {
        return Err(Error::BadParams(format!("need 3 <= r <= n - 1, got n = {n}, r = {r}")));
    }
    check_alpha(alpha)?;
    let TuranParams { d, s, .. } = TuranParams::new(n, r)?;
    let (nf, df, sf) = (n as f64, d as f64, s as f64);
    let beta = 1.0 - alpha;
    let lin = nf * beta - 1.0;
    let value = (nf + 2.0 * df + alpha * nf - 3.0 + (lin * lin + 4.0 * sf * beta * (df + 1.0)).sqrt()) / 2.0;
    Ok(ClosedForm { value, within_hypothesis: alpha <= turan_alpha_limit(r) })
}

/// `ρ(D_α(S_n)) = (αn + 2(n−2) + √(n²(2−α)² + 4(n−1)(2α−3))) / 2` for
/// `n ≥ 4`, `0 ≤ α < 1`.
pub fn rho_star_closed(n: usize, alpha: f64) -> Result<f64> {
    if n < 4 {
        return Err(Error::BadParams(format!("star closed form needs n >= 4, got {n}")));
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::BadParams(format!("star closed form needs 0 <= alpha < 1, got {alpha}")));
    }
    let nf = n as f64;
    let disc = nf * nf * (2.0 - alpha).powi(2) + 4.0 * (nf - 1.0) * (2.0 * alpha - 3.0);
    Ok((alpha * nf + 2.0 * (nf - 2.0) + disc.sqrt()) / 2.0)
}

/// 3×3 quotient matrix of `D_α(S_n⁺)` over the partition
/// {center}, {two cycle leaves}, {n − 3 pendant leaves}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuotientMatrix(pub [[f64; 3]; 3]);

impl QuotientMatrix {
    /// Coefficients `(c2, c1, c0)` of `λ³ + c2·λ² + c1·λ + c0`.
    pub fn characteristic(&self) -> (f64, f64, f64) {
        let m = &self.0;
        let trace = m[0][0] + m[1][1] + m[2][2];
        let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] + m[1][1] * m[2][2]
            - m[1][2] * m[2][1];
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        (-trace, minors, -det)
    }

    /// Largest eigenvalue. The matrix is similar to a symmetric one, so all
    /// three roots of its characteristic cubic are real.
    pub fn spectral_radius(&self) -> f64 {
        let (a, b, c) = self.characteristic();
        largest_real_cubic_root(a, b, c)
    }
}

/// Largest root of `λ³ + aλ² + bλ + c` when all roots are real:
/// trigonometric solution of the depressed cubic, then Newton polishing.
fn largest_real_cubic_root(a: f64, b: f64, c: f64) -> f64 {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let t = if p.abs() < 1e-300 {
        (-q).cbrt()
    } else if p < 0.0 {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        m * (arg.acos() / 3.0).cos()
    } else {
        // One real root; cannot happen for a matrix with real spectrum,
        // handled for completeness via Cardano.
        let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        (-q / 2.0 + disc).cbrt() + (-q / 2.0 - disc).cbrt()
    };
    let mut x = t - shift;
    for _ in 0..4 {
        let f = ((x + a) * x + b) * x + c;
        let df = (3.0 * x + 2.0 * a) * x + b;
        if df == 0.0 {
            break;
        }
        let step = f / df;
        if !step.is_finite() {
            break;
        }
        x -= step;
    }
    x
}

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

pub fn quotient_matrix_star_plus(n: usize, alpha: f64) -> Result<QuotientMatrix> {
    if n < 4 {
        return Err(Error::BadParams(format!("S_n+ quotient matrix needs n >= 4, got {n}")));
    }
    check_alpha(alpha)?;
    let nf = n as f64;
    let b = 1.0 - alpha;
    Ok(QuotientMatrix([
        [alpha * (nf - 1.0), 2.0 * b, (nf - 3.0) * b],
        [b, alpha * (2.0 * nf - 4.0) + b, 2.0 * (nf - 3.0) * b],
        [b, 4.0 * b, alpha * (2.0 * nf - 3.0) + 2.0 * (nf - 4.0) * b],
    ]))
}

/// The cubic whose largest root is `ρ(D_α(S_n⁺))`, with coefficients
/// written out in `n` and `α`.
pub fn star_plus_cubic(n: usize, alpha: f64, rho: f64) -> f64 {
    let (n, a) = (n as f64, alpha);
    let c2 = 3.0 * a * n + 2.0 * n - a - 7.0;
    let c1 = 2.0 * a * a * n * n + 6.0 * a * n * n - a * a * n - 17.0 * a * n + 2.0 * a - 7.0 * n + 17.0;
    let c0 = 4.0 * a * a * n * n * n - 10.0 * a * a * n * n - 8.0 * a * n * n + 4.0 * a * a * n + 19.0 * a * n - 7.0 * a
        + 3.0 * n
        - 5.0;
    rho * rho * rho - c2 * rho * rho + c1 * rho - c0
}

/// `ρ(D_α(S_n⁺))` from the quotient matrix, checked against the explicit
/// cubic.
pub fn rho_star_plus(n: usize, alpha: f64) -> Result<f64> {
    let rho = quotient_matrix_star_plus(n, alpha)?.spectral_radius();
    let residual = star_plus_cubic(n, alpha, rho);
    let limit = 1e-6 * (n as f64).powi(3);
    if !(residual.abs() <= limit) {
        return Err(Error::CrossCheckFailed(format!(
            "S_n+ cubic residual {residual:e} exceeds {limit:e} at n = {n}, alpha = {alpha}"
        )));
    }
    Ok(rho)
}

/// Threshold `2n − 2 − 8/n` compared against `ρ(D_α(S_n⁺))`.
pub fn unicyclic_threshold(n: usize) -> f64 {
    let nf = n as f64;
    2.0 * nf - 2.0 - 8.0 / nf
}

/// The α in (1/2, 1) with `ρ(D_α(S_n⁺)) = 2n − 2 − 8/n`, by bisection to
/// 1e-9. `ρ(D_α(S_n⁺))` is increasing in α, so the root is unique when the
/// endpoints bracket it; this happens for n = 6 and n = 7.
pub fn alpha_zero_root(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::BadParams(format!("need n >= 4, got {n}")));
    }
    let target = unicyclic_threshold(n);
    let f = |alpha: f64| rho_star_plus(n, alpha).map(|rho| rho - target);
    let (mut lo, mut hi) = (0.5, 1.0);
    if !(f(lo)? < 0.0 && f(hi)? > 0.0) {
        return Err(Error::NoRootInInterval(n));
    }
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if f(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `min(alpha_zero_root(6), alpha_zero_root(7))`.
pub fn empirical_alpha_zero() -> f64 {
    let a6 = alpha_zero_root(6).expect("root exists for n = 6");
    let a7 = alpha_zero_root(7).expect("root exists for n = 7");
    a6.min(a7)
}
