use std::time::Instant;

use serde::Serialize;

use super::{csv_float, evaluate_all, recheck_ties, Minimizer, SCHEMA_VERSION};
use crate::enumeration::{canonical_form, CanonicalForm, FamilyKind, FamilySpec};
use crate::error::{Error, Result};
use crate::families::{complete, empirical_alpha_zero, rho_star_closed, rho_star_plus, rho_turan_closed, star, star_plus, turan, turan_alpha_limit};
use crate::graph::Graph;

/// Outcome of an exhaustive minimum search over one graph class at one α.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub schema: u32,
    pub spec: FamilySpec,
    pub alpha: f64,
    pub minimizers: Vec<Minimizer>,
    pub min_rho: f64,
    pub unique: bool,
    /// The graph claimed to be the unique minimizer.
    pub predicted: CanonicalForm,
    /// Closed-form spectral radius of the predicted graph, when one exists
    /// for these parameters.
    pub predicted_rho: Option<f64>,
    pub matches_prediction: bool,
    /// Whether (n, α) lie in the range where the predicted minimizer is proven.
    pub claim_applies: bool,
    /// Chromatic class scanned with α above `1 − 1/r`.
    pub hypothesis_violated: bool,
    pub graphs_scanned: usize,
    pub wall_time_secs: f64,
}

impl ExtremalReport {
    /// Unique minimizer equal to the prediction whenever the claim applies.
    pub fn passed(&self) -> bool {
        !self.claim_applies || (self.unique && self.matches_prediction)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphRow {
    pub graph: CanonicalForm,
    pub rho: f64,
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Clone, Debug)]
pub struct MinSearch {
    pub report: ExtremalReport,
    /// One row per scanned graph, in enumeration order.
    pub rows: Vec<GraphRow>,
}

impl MinSearch {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph6,rho,residual,iterations,minimizer\n");
        for row in &self.rows {
            let is_min = self.report.minimizers.iter().any(|m| m.graph == row.graph);
            out.push_str(&format!(
                "{},{},{:e},{},{}\n",
                row.graph,
                csv_float(row.rho),
                row.residual,
                row.iterations,
                is_min
            ));
        }
        out
    }
}

struct Prediction {
    graph: Graph,
    rho: Option<f64>,
    claim_applies: bool,
    hypothesis_violated: bool,
}

fn prediction(spec: &FamilySpec, alpha: f64) -> Result<Prediction> {
    let n = spec.n;
    Ok(match spec.kind {
        FamilyKind::Trees => Prediction {
            graph: star(n)?,
            rho: rho_star_closed(n, alpha).ok(),
            claim_applies: n >= 4 && alpha < 1.0,
            hypothesis_violated: false,
        },
        FamilyKind::Unicyclic => Prediction {
            graph: star_plus(n)?,
            rho: rho_star_plus(n, alpha).ok(),
            claim_applies: n >= 6 && alpha < empirical_alpha_zero(),
            hypothesis_violated: false,
        },
        FamilyKind::Connected => Prediction {
            graph: complete(n)?,
            rho: Some(n as f64 - 1.0),
            claim_applies: alpha < 1.0,
            hypothesis_violated: false,
        },
        FamilyKind::Chromatic => {
            let r = spec.r.ok_or_else(|| Error::BadParams("chromatic class needs r".into()))?;
            let closed = rho_turan_closed(n, r, alpha)?;
            let within = alpha <= turan_alpha_limit(r) + 1e-12;
            Prediction { graph: turan(n, r)?, rho: Some(closed.value), claim_applies: within, hypothesis_violated: !within }
        }
    })
}

/// Scans every member of `spec` and reports the set of graphs minimizing
/// `ρ(D_α)`, compared against the known extremal graph of the class: the
/// star for trees, `S_n⁺` for unicyclic graphs, the Turán graph for a
/// chromatic class and `K_n` for all connected graphs.
pub fn run_min_search(spec: &FamilySpec, alpha: f64, allow_large: bool) -> Result<MinSearch> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let start = Instant::now();
    let pred = prediction(spec, alpha)?;
    let graphs = spec.enumerate(allow_large)?;
    let (evaluated, mins) = evaluate_all(&graphs, alpha)?;
    let mins = recheck_ties(mins, alpha)?;
    let predicted = canonical_form(&pred.graph)?;
    let min_rho = mins.min_rho();
    let report = ExtremalReport {
        schema: SCHEMA_VERSION,
        spec: *spec,
        alpha,
        unique: mins.members.len() == 1,
        matches_prediction: mins.members.iter().any(|m| m.graph == predicted),
        minimizers: mins.members,
        min_rho,
        predicted,
        predicted_rho: pred.rho,
        claim_applies: pred.claim_applies,
        hypothesis_violated: pred.hypothesis_violated,
        graphs_scanned: graphs.len(),
        wall_time_secs: start.elapsed().as_secs_f64(),
    };
    Ok(MinSearch { report, rows: evaluated })
}
