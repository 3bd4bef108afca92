//! `dalpha`: spectral radii of generalized distance matrices and exhaustive
//! extremal checks over small graph classes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use dalpha_core::enumeration::{FamilyKind, FamilySpec};
use dalpha_core::format::{from_edge_list, from_graph6, to_graph6};
use dalpha_core::harness::{
    reproduce_table1, run_alpha_sweep, run_edge_monotonicity, run_min_search, run_open_problem, run_wiener_check,
};
use dalpha_core::spectral::{build_d_alpha, spectral_radius, DEFAULT_MAX_ITER, DEFAULT_TOL};
use dalpha_core::{families, Graph};

#[derive(Parser)]
#[command(name = "dalpha", version, about = "Generalized distance spectral radius toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MinKind {
    Trees,
    Unicyclic,
    Chromatic,
    Connected,
}

#[derive(Clone, Copy, ValueEnum)]
enum WienerKind {
    Trees,
    Unicyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitFormat {
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius, Perron vector and residual of D_alpha for one graph.
    Rho {
        /// graph6 string, edge-list or graph6 file, or a family such as
        /// `star:6`, `star_plus:6`, `turan:7:3`, `cycle:5`, `path:4`, `complete:4`.
        graph: String,
        #[arg(long)]
        alpha: f64,
        /// Also print the matrix as CSV.
        #[arg(long)]
        matrix: bool,
    },
    /// Exhaustive minimum of rho(D_alpha) over a graph class.
    Min {
        #[arg(long, value_enum)]
        kind: MinKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        alpha: f64,
        /// Permit the n = 8 connected enumeration.
        #[arg(long)]
        allow_large: bool,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write one CSV row per scanned graph here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// rho(D_alpha) along an ascending alpha grid.
    Sweep {
        graph: String,
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Recompute the S_n+ table for n = 6, 7.
    Table1 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Wiener index bounds for trees or unicyclic graphs.
    WienerCheck {
        #[arg(long, value_enum)]
        kind: WienerKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random trials of strict decrease of rho under edge addition.
    EdgeMono {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        alphas: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimizers over a chromatic class for alpha beyond 1 - 1/r.
    OpenProblem {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Dump an enumerated class, one graph per line.
    Enumerate {
        #[arg(long, value_enum)]
        kind: MinKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        allow_large: bool,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: EmitFormat,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn family_kind(kind: MinKind) -> FamilyKind {
    match kind {
        MinKind::Trees => FamilyKind::Trees,
        MinKind::Unicyclic => FamilyKind::Unicyclic,
        MinKind::Chromatic => FamilyKind::Chromatic,
        MinKind::Connected => FamilyKind::Connected,
    }
}

fn parse_family(spec: &str) -> Option<Result<Graph>> {
    let mut parts = spec.split(':');
    let name = parts.next()?;
    let nums: std::result::Result<Vec<usize>, _> = parts.map(str::parse).collect();
    let Ok(nums) = nums else {
        return None;
    };
    let g = match (name, nums.as_slice()) {
        ("star", [n]) => families::star(*n),
        ("star_plus", [n]) => families::star_plus(*n),
        ("cycle", [n]) => families::cycle(*n),
        ("path", [n]) => families::path(*n),
        ("complete", [n]) => families::complete(*n),
        ("turan", [n, r]) => families::turan(*n, *r),
        _ => return None,
    };
    Some(g.map_err(Into::into))
}

/// Reads a graph from a file (edge list if the first line is a bare
/// integer, graph6 otherwise), a family name, or an inline graph6 string.
fn load_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
        return if first.parse::<usize>().is_ok() {
            from_edge_list(&text).with_context(|| format!("parsing edge list {arg}"))
        } else {
            from_graph6(first).with_context(|| format!("parsing graph6 file {arg}"))
        };
    }
    if let Some(g) = parse_family(arg) {
        return g;
    }
    from_graph6(arg).with_context(|| format!("{arg:?} is not a file, family name or graph6 string"))
}

fn write_json<T: serde::Serialize>(path: &Option<PathBuf>, value: &T) -> Result<()> {
    if let Some(path) = path {
        fs::write(path, serde_json::to_string_pretty(value)? + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn write_text(path: &Option<PathBuf>, text: &str) -> Result<()> {
    if let Some(path) = path {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn fmt_vec(xs: &[f64]) -> String {
    xs.iter().map(|x| format!("{x:.10}")).collect::<Vec<_>>().join(" ")
}

/// Returns whether every assertion of the command held.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Rho { graph, alpha, matrix } => {
            let g = load_graph(&graph)?;
            let p = g.distance_profile()?;
            let m = build_d_alpha(&p, alpha)?;
            let r = spectral_radius(&m, DEFAULT_TOL, DEFAULT_MAX_ITER)?;
            println!("graph6     {}", to_graph6(&g));
            println!("alpha      {alpha}");
            println!("rho        {:.12}", r.rho);
            println!("perron     {}", fmt_vec(&r.perron));
            println!("residual   {:e}", r.residual);
            println!("iterations {}", r.iterations);
            println!("converged  {}", r.converged);
            if r.degenerate {
                println!("note       degenerate: diagonal matrix, rho is the largest transmission");
            }
            if matrix {
                print!("{}", m.to_csv());
            }
            Ok(r.converged)
        }
        Command::Min { kind, n, r, alpha, allow_large, out, csv } => {
            let spec = FamilySpec::new(family_kind(kind), n, r)?;
            let search = run_min_search(&spec, alpha, allow_large)?;
            let rep = &search.report;
            println!("class        {spec}");
            println!("alpha        {alpha}");
            println!("scanned      {}", rep.graphs_scanned);
            println!("min_rho      {:.12}", rep.min_rho);
            for m in &rep.minimizers {
                println!("minimizer    {} rho={:.12}", m.graph, m.rho);
            }
            println!("predicted    {}", rep.predicted);
            if let Some(p) = rep.predicted_rho {
                println!("closed_form  {p:.12}");
            }
            println!("unique       {}", rep.unique);
            println!("matches      {}", rep.matches_prediction);
            if rep.hypothesis_violated {
                println!("note         alpha exceeds 1 - 1/r; no minimizer is claimed");
            } else if !rep.claim_applies {
                println!("note         outside the proven range; no minimizer is claimed");
            }
            println!("time_secs    {:.3}", rep.wall_time_secs);
            write_json(&out, rep)?;
            write_text(&csv, &search.to_csv())?;
            Ok(rep.passed())
        }
        Command::Sweep { graph, grid, out, csv } => {
            let g = load_graph(&graph)?;
            let rep = run_alpha_sweep(&g, &grid)?;
            for (a, r) in rep.alpha_grid.iter().zip(&rep.rho_values) {
                println!("alpha={a:<6} rho={r:.12}");
            }
            println!("monotone={} strictly={} transmission_regular={}", rep.monotone, rep.strictly, rep.transmission_regular);
            write_json(&out, &rep)?;
            write_text(&csv, &rep.to_csv())?;
            Ok(rep.consistent)
        }
        Command::Table1 { out } => {
            let rep = reproduce_table1()?;
            println!("{:>3} {:>10} {:>10} {:>6}   {:>11}", "n", "rho_1/2", "2n-2-8/n", "rho_1", "alpha_root");
            for row in &rep.rows {
                println!(
                    "{:>3} {:>10.4} {:>10.4} {:>6} {:>13.9}  {}",
                    row.n,
                    row.rho_half,
                    row.threshold,
                    row.rho_one,
                    row.alpha_root,
                    if row.matches && row.ordering_holds { "ok" } else { "MISMATCH" }
                );
            }
            println!("alpha_0 (min of roots) = {:.9}", rep.alpha_zero);
            write_json(&out, &rep)?;
            Ok(rep.passed)
        }
        Command::WienerCheck { kind, n, out } => {
            let kind = match kind {
                WienerKind::Trees => FamilyKind::Trees,
                WienerKind::Unicyclic => FamilyKind::Unicyclic,
            };
            let rep = run_wiener_check(kind, n)?;
            println!("class            {kind} n={n}");
            println!("scanned          {}", rep.graphs_scanned);
            println!("extremal         {} W={} (expected {})", rep.extremal, rep.extremal_wiener, rep.expected_extremal_wiener);
            println!("lower_bound      {}", rep.lower_bound);
            if let Some(w) = rep.min_other_wiener {
                println!("min_other_W      {w}");
            }
            for v in &rep.violators {
                println!("violator         {v}");
            }
            println!("passed           {}", rep.passed);
            write_json(&out, &rep)?;
            Ok(rep.passed)
        }
        Command::EdgeMono { trials, nmax, alphas, seed, out } => {
            let rep = run_edge_monotonicity(trials, nmax, &alphas, seed)?;
            println!("seed        {seed}");
            println!("comparisons {}", rep.comparisons);
            if !rep.excluded_alphas.is_empty() {
                println!("excluded    {:?}", rep.excluded_alphas);
            }
            if let Some(g) = rep.min_gap {
                println!("min_gap     {g:e}");
            }
            for v in &rep.violations {
                println!("violation   {} +{}-{} alpha={} {} -> {}", v.graph6, v.u, v.v, v.alpha, v.rho_before, v.rho_after);
            }
            println!("passed      {}", rep.passed);
            write_json(&out, &rep)?;
            Ok(rep.passed)
        }
        Command::OpenProblem { n, r, grid, out, csv } => {
            let rep = run_open_problem(n, r, &grid)?;
            println!("chromatic class n={n} r={r}, {} graphs", rep.graphs_scanned);
            for row in &rep.rows {
                let names: Vec<String> = row.minimizers.iter().map(|m| m.graph.to_string()).collect();
                println!(
                    "alpha={:<6} min_rho={:.10} turan_rho={:.10} turan_is_minimizer={} minimizers={}",
                    row.alpha,
                    row.min_rho,
                    row.turan_rho,
                    row.minimizer_is_turan,
                    names.join(",")
                );
            }
            write_json(&out, &rep)?;
            write_text(&csv, &rep.to_csv())?;
            Ok(true)
        }
        Command::Enumerate { kind, n, r, allow_large, emit: EmitFormat::Graph6, out } => {
            let spec = FamilySpec::new(family_kind(kind), n, r)?;
            let graphs = spec.enumerate(allow_large)?;
            let mut text = String::new();
            for g in &graphs {
                text.push_str(&to_graph6(g));
                text.push('\n');
            }
            match out {
                Some(_) => {
                    write_text(&out, &text)?;
                    eprintln!("{} graphs", graphs.len());
                }
                None => print!("{text}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
