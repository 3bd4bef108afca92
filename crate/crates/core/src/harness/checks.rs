use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{csv_float, SCHEMA_VERSION};
use crate::enumeration::{canonical_form, enumerate_trees, enumerate_unicyclic, CanonicalForm, FamilyKind, CANON_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::families::{star, star_plus};
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::spectral::{build_d_alpha, d_alpha_spectral_radius, spectral_radius, DEFAULT_MAX_ITER, DEFAULT_TOL, TIE_TOL};

/// Wiener index check: the extremal graph has the expected value and every
/// other member is at least the stated bound.
#[derive(Clone, Debug, Serialize)]
pub struct WienerReport {
    pub schema: u32,
    pub kind: FamilyKind,
    pub n: usize,
    pub extremal: CanonicalForm,
    pub extremal_wiener: u64,
    /// `(n − 1)²` for trees, `n² − 2n` for unicyclic graphs.
    pub expected_extremal_wiener: u64,
    /// `n² − n − 2` for trees, `n² − n − 4` for unicyclic graphs.
    pub lower_bound: u64,
    pub min_other_wiener: Option<u64>,
    pub violators: Vec<CanonicalForm>,
    pub graphs_scanned: usize,
    pub passed: bool,
}

pub fn run_wiener_check(kind: FamilyKind, n: usize) -> Result<WienerReport> {
    let m = n as u64;
    let (graphs, extremal, expected, bound) = match kind {
        FamilyKind::Trees if n >= 4 => (enumerate_trees(n)?, star(n)?, (m - 1) * (m - 1), m * m - m - 2),
        FamilyKind::Unicyclic if n >= 6 => (enumerate_unicyclic(n)?, star_plus(n)?, m * m - 2 * m, m * m - m - 4),
        _ => {
            return Err(Error::BadParams(format!(
                "Wiener check covers trees with n >= 4 and unicyclic graphs with n >= 6, got {kind} n = {n}"
            )))
        }
    };
    let extremal_c = canonical_form(&extremal)?;
    let extremal_wiener = extremal.distance_profile()?.wiener();
    let mut min_other = None::<u64>;
    let mut violators = Vec::new();
    let mut extremal_seen = 0;
    for g in &graphs {
        let c = canonical_form(g)?;
        let w = g.distance_profile()?.wiener();
        if c == extremal_c {
            extremal_seen += 1;
            continue;
        }
        min_other = Some(min_other.map_or(w, |x| x.min(w)));
        if w < bound {
            violators.push(c);
        }
    }
    let passed = violators.is_empty() && extremal_wiener == expected && extremal_seen == 1 && bound > expected;
    Ok(WienerReport {
        schema: SCHEMA_VERSION,
        kind,
        n,
        extremal: extremal_c,
        extremal_wiener,
        expected_extremal_wiener: expected,
        lower_bound: bound,
        min_other_wiener: min_other,
        violators,
        graphs_scanned: graphs.len(),
        passed,
    })
}

/// `ρ(D_α)` along an ascending α grid.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub graph6: String,
    /// Present for graphs within the canonical-form size cap.
    pub graph: Option<CanonicalForm>,
    pub alpha_grid: Vec<f64>,
    pub rho_values: Vec<f64>,
    /// No step decreases by more than the tie tolerance.
    pub monotone: bool,
    /// Every step increases by more than the tie tolerance.
    pub strictly: bool,
    pub transmission_regular: bool,
    /// Monotone, and strict exactly when the graph is not transmission
    /// regular (single-point grids only need monotone).
    pub consistent: bool,
}

impl SweepReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,rho\n");
        for (a, r) in self.alpha_grid.iter().zip(&self.rho_values) {
            out.push_str(&format!("{a},{}\n", csv_float(*r)));
        }
        out
    }
}

pub fn run_alpha_sweep(g: &Graph, grid: &[f64]) -> Result<SweepReport> {
    if grid.is_empty() {
        return Err(Error::BadParams("empty alpha grid".into()));
    }
    if let Some(&a) = grid.iter().find(|a| !(0.0..=1.0).contains(*a)) {
        return Err(Error::AlphaOutOfRange(a));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadParams("alpha grid must be strictly ascending".into()));
    }
    let profile = g.distance_profile()?;
    let rho_values = grid
        .iter()
        .map(|&a| {
            let m = build_d_alpha(&profile, a)?;
            Ok(spectral_radius(&m, DEFAULT_TOL, DEFAULT_MAX_ITER)?.ensure_converged()?.rho)
        })
        .collect::<Result<Vec<f64>>>()?;
    let steps: Vec<f64> = rho_values.windows(2).map(|w| w[1] - w[0]).collect();
    let monotone = steps.iter().all(|&d| d >= -TIE_TOL);
    let strictly = steps.iter().all(|&d| d > TIE_TOL);
    let regular = profile.is_transmission_regular();
    let consistent = monotone && (steps.is_empty() || strictly != regular);
    Ok(SweepReport {
        schema: SCHEMA_VERSION,
        graph6: to_graph6(g),
        graph: if g.n() <= CANON_MAX_VERTICES { Some(canonical_form(g)?) } else { None },
        alpha_grid: grid.to_vec(),
        rho_values,
        monotone,
        strictly,
        transmission_regular: regular,
        consistent,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeViolation {
    pub graph6: String,
    pub u: usize,
    pub v: usize,
    pub alpha: f64,
    pub rho_before: f64,
    pub rho_after: f64,
}

/// Random trials of "adding an edge strictly lowers `ρ(D_α)`".
#[derive(Clone, Debug, Serialize)]
pub struct EdgeMonoReport {
    pub schema: u32,
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub alphas: Vec<f64>,
    /// α = 1 is outside the claim and is skipped.
    pub excluded_alphas: Vec<f64>,
    pub comparisons: usize,
    /// Smallest observed `ρ(G) − ρ(G + uv)`.
    pub min_gap: Option<f64>,
    pub violations: Vec<EdgeViolation>,
    pub passed: bool,
}

pub const EDGE_MONO_MAX_N: usize = 12;

/// Connected, non-complete graph on `n ≥ 3` vertices from `G(n, p)` by
/// rejection.
fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let p: f64 = rng.gen_range(0.15..0.85);
        let edges: Vec<(usize, usize)> =
            (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, edges).expect("valid pairs");
        if g.is_connected() && !g.is_complete() {
            return g;
        }
    }
}

pub fn run_edge_monotonicity(trials: usize, n_max: usize, alphas: &[f64], seed: u64) -> Result<EdgeMonoReport> {
    if !(3..=EDGE_MONO_MAX_N).contains(&n_max) {
        return Err(Error::BadParams(format!("n_max must be in 3..={EDGE_MONO_MAX_N}, got {n_max}")));
    }
    if let Some(&a) = alphas.iter().find(|a| !(0.0..=1.0).contains(*a)) {
        return Err(Error::AlphaOutOfRange(a));
    }
    let (active, excluded): (Vec<f64>, Vec<f64>) = alphas.iter().partition(|&&a| a < 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut comparisons = 0;
    let mut min_gap: Option<f64> = None;
    let mut violations = Vec::new();
    for _ in 0..trials {
        let n = rng.gen_range(3..=n_max);
        let g = random_connected(&mut rng, n);
        let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
        let &(u, v) = non_edges.choose(&mut rng).expect("graph is not complete");
        let h = g.add_edge(u, v)?;
        for &alpha in &active {
            let before = d_alpha_spectral_radius(&g, alpha)?.rho;
            let after = d_alpha_spectral_radius(&h, alpha)?.rho;
            let gap = before - after;
            comparisons += 1;
            min_gap = Some(min_gap.map_or(gap, |m| m.min(gap)));
            if gap <= TIE_TOL {
                violations.push(EdgeViolation { graph6: to_graph6(&g), u, v, alpha, rho_before: before, rho_after: after });
            }
        }
    }
    Ok(EdgeMonoReport {
        schema: SCHEMA_VERSION,
        seed,
        trials,
        n_max,
        alphas: active,
        excluded_alphas: excluded,
        comparisons,
        min_gap,
        passed: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn wiener_examples() {
        let t6 = run_wiener_check(FamilyKind::Trees, 6).unwrap();
        assert!(t6.passed);
        assert_eq!(t6.extremal_wiener, 25);
        assert_eq!(t6.lower_bound, 28);
        let u6 = run_wiener_check(FamilyKind::Unicyclic, 6).unwrap();
        assert!(u6.passed);
        assert_eq!(u6.extremal_wiener, 24);
        assert_eq!(u6.lower_bound, 26);
        let t4 = run_wiener_check(FamilyKind::Trees, 4).unwrap();
        assert_eq!((t4.extremal_wiener, t4.min_other_wiener), (9, Some(10)));
        assert_eq!(path(4).unwrap().distance_profile().unwrap().wiener(), 10);
        assert!(run_wiener_check(FamilyKind::Unicyclic, 5).is_err());
        assert!(run_wiener_check(FamilyKind::Connected, 6).is_err());
    }

    #[test]
    fn sweep_examples() {
        let c6 = run_alpha_sweep(&cycle(6).unwrap(), &[0.0, 0.5, 1.0]).unwrap();
        assert!(c6.monotone && !c6.strictly && c6.transmission_regular && c6.consistent);
        assert!(c6.rho_values.iter().all(|r| (r - 9.0).abs() < 1e-9));
        let s6 = run_alpha_sweep(&star(6).unwrap(), &[0.0, 0.5, 1.0]).unwrap();
        assert!(s6.strictly && s6.consistent);
        assert_eq!(s6.rho_values[2], 9.0);
        let sp = run_alpha_sweep(&star_plus(6).unwrap(), &[0.5, 1.0]).unwrap();
        assert!((sp.rho_values[0] - 8.3574).abs() < 5e-5);
        assert_eq!(sp.rho_values[1], 9.0);
    }

    #[test]
    fn sweep_errors() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(run_alpha_sweep(&g, &[0.0]).unwrap_err(), Error::DisconnectedGraph);
        let p = path(4).unwrap();
        assert!(run_alpha_sweep(&p, &[0.5, 0.2]).is_err());
        assert!(run_alpha_sweep(&p, &[]).is_err());
        assert_eq!(run_alpha_sweep(&p, &[0.0, 1.5]).unwrap_err(), Error::AlphaOutOfRange(1.5));
    }

    #[test]
    fn edge_mono_is_reproducible() {
        let a = run_edge_monotonicity(20, 8, &[0.0, 0.5, 1.0], 7).unwrap();
        let b = run_edge_monotonicity(20, 8, &[0.0, 0.5, 1.0], 7).unwrap();
        assert!(a.passed);
        assert_eq!(a.excluded_alphas, vec![1.0]);
        assert_eq!(a.comparisons, 40);
        assert_eq!(a.min_gap, b.min_gap);
        assert!(run_edge_monotonicity(1, 13, &[0.0], 0).is_err());
    }

    #[test]
    fn path_to_cycle_drop() {
        let p4 = path(4).unwrap();
        let c4 = p4.add_edge(0, 3).unwrap();
        let before = d_alpha_spectral_radius(&p4, 0.0).unwrap().rho;
        let after = d_alpha_spectral_radius(&c4, 0.0).unwrap().rho;
        assert!((after - 4.0).abs() < 1e-9);
        assert!(before > 5.0 - 1e-9);
        let s5 = star(5).unwrap();
        let before = d_alpha_spectral_radius(&s5, 0.5).unwrap().rho;
        let after = d_alpha_spectral_radius(&s5.add_edge(1, 2).unwrap(), 0.5).unwrap().rho;
        assert!(before - after > TIE_TOL);
    }
}
