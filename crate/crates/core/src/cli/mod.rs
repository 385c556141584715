//! Command-line front end. [`run`] takes the full argv and returns the exit
//! code and both output streams, so it can be driven from tests.
//!
//! Exit codes: `0` success, `2` a search or certificate came back negative
//! (`pst-check` with `pst = false`, `pgst-search` without reaching the
//! target), `1` any error.

pub mod output;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::corona::{parse_satellite_spec, CoronaGraph};
use crate::corona_spectrum::corona_spectrum;
use crate::error::{invalid, Result};
use crate::experiments::{figure, Figure, FIGURES};
use crate::graph::{parse_graph_spec, Graph};
use crate::spectral::eigendecompose;
use crate::transfer::{
    check_pgst_hypothesis, check_pst, corona_no_pst_witness, pgst_search, PgstFamily,
};
use crate::walk::{fidelity_curve, uniform_grid, WalkKind};

use output::{compact_json, curve_csv, to_json};

/// Default directory for `figures` output when `--out-dir` is absent.
pub const OUT_DIR_ENV: &str = "CORONAWALK_OUT_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum TimeFamily {
    /// t = 4πℓ
    #[value(name = "4pi")]
    #[serde(rename = "4pi")]
    FourPi,
    /// t = (4ℓ + 2^(1-r))π, r from the support of --from
    #[value(name = "shifted")]
    #[serde(rename = "shifted")]
    Shifted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureChoice {
    Fig2,
    Fig3,
    Fig4,
    All,
}

fn parse_kind(s: &str) -> Result<WalkKind> {
    s.parse()
}

#[derive(Clone, Debug, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Build a graph from a spec (k2, q3, cycle:5, @file.json) and print it as JSON
    Build {
        #[arg(long)]
        graph: String,
    },
    /// Build the corona G ∘ (H_1, ..., H_n) and print it as a labeled graph
    Corona {
        #[arg(long)]
        g: String,
        /// One satellite spec for every base vertex, or a comma list of n specs
        #[arg(long)]
        h: String,
    },
    /// Eigenvalues, multiplicities and optionally eigenprojectors of a graph matrix
    Spectrum {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "laplacian", value_parser = parse_kind)]
        kind: WalkKind,
        /// Include the eigenprojector matrices
        #[arg(long)]
        projectors: bool,
    },
    /// Closed-form eigenvalue classes of a corona, with square-free splits
    CoronaSpectrum {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Fidelity curve |U(t)_{uv}|^2 on a uniform time grid
    Fidelity {
        #[arg(long)]
        graph: String,
        /// Satellites; when given, the walk runs on the corona of --graph
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        t_max: f64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, default_value = "laplacian", value_parser = parse_kind)]
        kind: WalkKind,
    },
    /// Decide Laplacian perfect state transfer between two vertices
    PstCheck {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Exhibit a non-integer eigenvalue ruling out PST in G ∘ H for |H| = m
    NoPstWitness {
        #[arg(long)]
        g: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
    },
    /// Search t(ℓ), ℓ = 1..ell-max, for hub-to-hub fidelity at least --target
    PgstSearch {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long, value_enum, default_value = "4pi")]
        family: TimeFamily,
        #[arg(long, default_value_t = 10_000)]
        ell_max: u64,
        #[arg(long, default_value_t = 0.99)]
        target: f64,
        /// Base vertex; defaults to 0
        #[arg(long)]
        from: Option<usize>,
        /// Base vertex; defaults to n - 1
        #[arg(long)]
        to: Option<usize>,
    },
    /// Reproduce the fixed experiments, writing CSV curves and a JSON summary
    Figures {
        #[arg(value_enum)]
        which: FigureChoice,
        /// Directory for CSV files; defaults to $CORONAWALK_OUT_DIR, then ./figures
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, PartialEq, Parser, Serialize, Deserialize)]
#[command(
    name = "coronawalk",
    version,
    about = "Laplacian quantum walks on graphs and corona products"
)]
pub struct ExperimentConfig {
    #[command(subcommand)]
    #[serde(flatten)]
    pub command: Command,
    /// Recorded in the output header
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the result here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    config: &'a ExperimentConfig,
    #[serde(flatten)]
    result: T,
}

#[derive(Serialize)]
struct SpectrumOut {
    kind: WalkKind,
    dim: usize,
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    projectors: Option<Vec<Vec<Vec<f64>>>>,
}

#[derive(Serialize)]
struct CurveOut {
    from: usize,
    to: usize,
    kind: WalkKind,
    points: Vec<crate::walk::CurvePoint>,
}

#[derive(Serialize)]
struct FigureOut {
    name: String,
    summary: serde_json::Value,
    csv: Vec<PathBuf>,
}

#[derive(Serialize)]
struct FiguresOut {
    out_dir: PathBuf,
    figures: Vec<FigureOut>,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let config = match ExperimentConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stderr: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    ..Outcome::default()
                }
            };
        }
    };
    match execute(&config) {
        Ok((code, body)) => match &config.output {
            Some(path) => match std::fs::write(path, body) {
                Ok(()) => Outcome {
                    code,
                    ..Outcome::default()
                },
                Err(e) => failure(&format!("cannot write {}: {e}", path.display())),
            },
            None => Outcome {
                code,
                stdout: body,
                ..Outcome::default()
            },
        },
        Err(e) => failure(&e.to_string()),
    }
}

fn failure(msg: &str) -> Outcome {
    Outcome {
        code: 1,
        stderr: format!("error: {msg}\n"),
        ..Outcome::default()
    }
}

fn json<T: Serialize>(config: &ExperimentConfig, result: T) -> Result<String> {
    to_json(&Envelope { config, result })
}

fn csv_only_for(config: &ExperimentConfig, allowed: bool) -> Result<()> {
    if config.format == Some(Format::Csv) && !allowed {
        return invalid("this command only produces JSON");
    }
    Ok(())
}

fn base_and_satellites(g: &str, h: &str) -> Result<(Graph, Vec<Graph>)> {
    let g = parse_graph_spec(g)?;
    let hs = parse_satellite_spec(h, g.n())?;
    Ok((g, hs))
}

fn walk_graph(graph: &str, h: Option<&str>) -> Result<Graph> {
    match h {
        Some(h) => {
            let (g, hs) = base_and_satellites(graph, h)?;
            Ok(CoronaGraph::new(&g, &hs)?.flat().clone())
        }
        None => parse_graph_spec(graph),
    }
}

fn execute(config: &ExperimentConfig) -> Result<(i32, String)> {
    let is_csv = config.format == Some(Format::Csv);
    match &config.command {
        Command::Build { graph } => {
            csv_only_for(config, false)?;
            Ok((0, json(config, parse_graph_spec(graph)?)?))
        }
        Command::Corona { g, h } => {
            csv_only_for(config, false)?;
            let (g, hs) = base_and_satellites(g, h)?;
            Ok((0, json(config, CoronaGraph::new(&g, &hs)?.flat())?))
        }
        Command::Spectrum {
            graph,
            kind,
            projectors,
        } => {
            let g = parse_graph_spec(graph)?;
            let d = eigendecompose(&kind.matrix(&g), None)?;
            if is_csv {
                let mut out = format!(
                    "# config={}\neigenvalue,multiplicity\n",
                    compact_json(config)?
                );
                for (x, k) in d.eigenvalues().iter().zip(d.multiplicities()) {
                    out.push_str(&format!("{},{k}\n", output::format_float(*x)));
                }
                return Ok((0, out));
            }
            let projectors = projectors.then(|| {
                d.projectors()
                    .iter()
                    .map(|p| p.row_iter().map(|r| r.iter().copied().collect()).collect())
                    .collect()
            });
            let out = SpectrumOut {
                kind: *kind,
                dim: d.dim(),
                eigenvalues: d.eigenvalues().to_vec(),
                multiplicities: d.multiplicities().to_vec(),
                projectors,
            };
            Ok((0, json(config, out)?))
        }
        Command::CoronaSpectrum { g, h } => {
            csv_only_for(config, false)?;
            let (g, hs) = base_and_satellites(g, h)?;
            Ok((0, json(config, corona_spectrum(&g, &hs)?)?))
        }
        Command::Fidelity {
            graph,
            h,
            from,
            to,
            t_max,
            steps,
            kind,
        } => {
            if !(t_max.is_finite() && *t_max >= 0.0) {
                return invalid(format!(
                    "--t-max must be finite and non-negative, got {t_max}"
                ));
            }
            let g = walk_graph(graph, h.as_deref())?;
            let d = eigendecompose(&kind.matrix(&g), None)?;
            let points = fidelity_curve(&d, *from, *to, &uniform_grid(*t_max, *steps))?;
            if config.format == Some(Format::Json) {
                let out = CurveOut {
                    from: *from,
                    to: *to,
                    kind: *kind,
                    points,
                };
                return Ok((0, json(config, out)?));
            }
            Ok((0, curve_csv(&points, Some(&compact_json(config)?))))
        }
        Command::PstCheck { graph, h, from, to } => {
            csv_only_for(config, false)?;
            let g = walk_graph(graph, h.as_deref())?;
            let d = eigendecompose(&g.laplacian(), None)?;
            let verdict = check_pst(&d, *from, *to)?;
            let code = if verdict.pst { 0 } else { 2 };
            Ok((code, json(config, verdict)?))
        }
        Command::NoPstWitness { g, m, vertex } => {
            csv_only_for(config, false)?;
            let g = parse_graph_spec(g)?;
            Ok((0, json(config, corona_no_pst_witness(&g, *m, *vertex)?)?))
        }
        Command::PgstSearch {
            g,
            h,
            family,
            ell_max,
            target,
            from,
            to,
        } => {
            csv_only_for(config, false)?;
            let (g, hs) = base_and_satellites(g, h)?;
            let cs = corona_spectrum(&g, &hs)?;
            let base = eigendecompose(&g.laplacian(), None)?;
            let u = from.unwrap_or(0);
            let v = to.unwrap_or(g.n() - 1);
            let family = match family {
                TimeFamily::FourPi => PgstFamily::FourPiEll,
                TimeFamily::Shifted => {
                    let hyp = check_pgst_hypothesis(&base, u, cs.m)?;
                    match hyp.r {
                        Some(r) => PgstFamily::Shifted { r },
                        None => {
                            return invalid(
                                "shifted time family needs an integral eigenvalue support",
                            )
                        }
                    }
                }
            };
            let search = pgst_search(&cs, &base, u, v, family, *ell_max, *target)?;
            let code = if search.reached { 0 } else { 2 };
            Ok((code, json(config, search)?))
        }
        Command::Figures { which, out_dir } => {
            csv_only_for(config, false)?;
            let dir = out_dir
                .clone()
                .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("figures"));
            let names: Vec<&str> = match which {
                FigureChoice::Fig2 => vec!["fig2"],
                FigureChoice::Fig3 => vec!["fig3"],
                FigureChoice::Fig4 => vec!["fig4"],
                FigureChoice::All => FIGURES.to_vec(),
            };
            std::fs::create_dir_all(&dir)?;
            let header = compact_json(config)?;
            let mut figures = Vec::new();
            for name in names {
                let fig = figure(name)?;
                let csv = write_curves(&fig, &dir, &header)?;
                figures.push(FigureOut {
                    name: fig.name,
                    summary: fig.summary,
                    csv,
                });
            }
            Ok((
                0,
                json(
                    config,
                    FiguresOut {
                        out_dir: dir,
                        figures,
                    },
                )?,
            ))
        }
    }
}

fn write_curves(fig: &Figure, dir: &Path, header: &str) -> Result<Vec<PathBuf>> {
    let mut paths = Vec::new();
    for curve in &fig.curves {
        let path = dir.join(format!("{}.csv", curve.name));
        std::fs::write(&path, curve_csv(&curve.points, Some(header)))?;
        paths.push(path);
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        std::iter::once("coronawalk".to_string())
            .chain(s.split_whitespace().map(String::from))
            .collect()
    }

    #[test]
    fn config_round_trips() {
        let c = ExperimentConfig::try_parse_from(argv(
            "--seed 7 pgst-search --g k2 --h o3 --target 0.9",
        ))
        .unwrap();
        let s = serde_json::to_string(&c).unwrap();
        let back: ExperimentConfig = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(s.contains(r#""command":"pgst-search""#));
        assert!(s.contains(r#""family":"4pi""#));
    }

    #[test]
    fn spectrum_k2() {
        let out = run(argv("spectrum --graph k2"));
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["eigenvalues"], serde_json::json!([0.0, 2.0]));
        assert_eq!(v["config"]["command"], "spectrum");
        assert_eq!(v["config"]["graph"], "k2");
    }

    #[test]
    fn parse_error_exits_one() {
        let out = run(argv("spectrum"));
        assert_eq!(out.code, 1);
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
        assert_eq!(run(argv("frobnicate")).code, 1);
    }

    #[test]
    fn help_exits_zero() {
        let out = run(argv("pst-check --help"));
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("--from"));
    }
}
