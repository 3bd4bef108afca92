//! Verification experiments over enumerated graph classes, with JSON and
//! CSV reports.

mod checks;
mod experiments;
mod min_search;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{canonical_form, CanonicalForm};
use crate::error::Result;
use crate::graph::Graph;
use crate::spectral::{d_alpha_spectral_radius_tol, DEFAULT_TOL, TIE_TOL};

pub use checks::{run_alpha_sweep, run_edge_monotonicity, run_wiener_check, EdgeMonoReport, EdgeViolation, SweepReport, WienerReport};
pub use experiments::{reproduce_table1, run_open_problem, OpenProblemReport, OpenProblemRow, Table1Report, Table1Row};
pub use min_search::{run_min_search, ExtremalReport, GraphRow, MinSearch};

/// Version tag written into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;
/// Tolerance used to re-evaluate tied minimizers.
pub const RECHECK_TOL: f64 = 1e-13;
const BATCH: usize = 32;

/// Worker count: `DALPHA_THREADS` if set to a positive integer, otherwise
/// the available hardware parallelism.
pub fn worker_threads() -> usize {
    std::env::var("DALPHA_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(worker_threads()).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Minimizer {
    pub graph: CanonicalForm,
    pub rho: f64,
}

/// Graphs whose spectral radius is within `TIE_TOL` of the smallest seen.
/// Merging is associative and commutative: the result depends only on the
/// multiset of inputs.
#[derive(Clone, Debug, Default)]
struct MinSet {
    members: Vec<Minimizer>,
}

impl MinSet {
    fn min_rho(&self) -> f64 {
        self.members.iter().map(|m| m.rho).fold(f64::INFINITY, f64::min)
    }

    fn push(&mut self, m: Minimizer) {
        self.members.push(m);
        self.prune();
    }

    fn merge(mut self, other: MinSet) -> MinSet {
        self.members.extend(other.members);
        self.prune();
        self
    }

    fn prune(&mut self) {
        let min = self.min_rho();
        self.members.retain(|m| m.rho <= min + TIE_TOL);
        self.members.sort_by(|a, b| a.rho.total_cmp(&b.rho).then(a.graph.cmp(&b.graph)));
    }
}

/// Spectral radius of `D_α` for every graph, in parallel batches, plus the
/// merged minimizer set.
fn evaluate_all(graphs: &[Graph], alpha: f64) -> Result<(Vec<GraphRow>, MinSet)> {
    let batches: Vec<Result<(Vec<GraphRow>, MinSet)>> = with_pool(|| {
        graphs
            .par_chunks(BATCH)
            .map(|batch| {
                let mut evaluated = Vec::with_capacity(batch.len());
                let mut mins = MinSet::default();
                for g in batch {
                    let r = d_alpha_spectral_radius_tol(g, alpha, DEFAULT_TOL)?;
                    let canonical = canonical_form(g)?;
                    mins.push(Minimizer { graph: canonical, rho: r.rho });
                    evaluated.push(GraphRow { graph: canonical, rho: r.rho, residual: r.residual, iterations: r.iterations });
                }
                Ok((evaluated, mins))
            })
            .collect()
    });
    let mut all = Vec::with_capacity(graphs.len());
    let mut mins = MinSet::default();
    for batch in batches {
        let (evaluated, partial) = batch?;
        all.extend(evaluated);
        mins = mins.merge(partial);
    }
    Ok((all, mins))
}

/// Re-evaluates tied minimizers at `RECHECK_TOL` so that a tie is only
/// reported if it survives a tighter solve.
fn recheck_ties(mins: MinSet, alpha: f64) -> Result<MinSet> {
    if mins.members.len() < 2 {
        return Ok(mins);
    }
    let mut out = MinSet::default();
    for m in mins.members {
        let g = m.graph.to_graph();
        let rho = match d_alpha_spectral_radius_tol(&g, alpha, RECHECK_TOL) {
            Ok(r) => r.rho,
            Err(_) => m.rho,
        };
        out.push(Minimizer { graph: m.graph, rho });
    }
    Ok(out)
}

/// Common α grid `{0, 0.1, …, 1.0}`.
pub fn tenth_grid(upto: f64) -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).filter(|&a| a <= upto + 1e-12).collect()
}

pub(crate) fn csv_float(x: f64) -> String {
    format!("{x:.12}")
}
