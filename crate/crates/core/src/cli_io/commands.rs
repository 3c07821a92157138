use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::formats::{
    create_file, manifest_path_for, read_degrees, write_edge_list, write_histogram_csv, write_json,
    write_pmf_csv, FitResult, RunManifest,
};
use super::CliError;
use crate::analytic_pmf::PmfModel;
use crate::ba_bernoulli::{verify_fixed_point, BernoulliStepReport};
use crate::graph_gen::{degree_histogram, generate_ba_network, generate_rsl_network, BAParams, MultiGraph};
use crate::powerlaw_fit::fit_power_law;
use crate::sampling::{MixingSpec, RngSeed};

/// Largest error `verify-ba` accepts as an exact fixed point.
pub const FIXED_POINT_TOLERANCE: f64 = 1e-12;

pub const DEFAULT_TIMESTEPS: [u64; 3] = [100, 10_000, 1_000_000];

pub const FIGURE1_NODES: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum NetworkModel {
    Rsl { c: f64 },
    Ba { m: usize },
}

impl NetworkModel {
    pub fn generate(&self, nodes: usize, seed: RngSeed) -> crate::Result<MultiGraph> {
        match *self {
            NetworkModel::Rsl { c } => generate_rsl_network(nodes, MixingSpec::new(c)?, seed),
            NetworkModel::Ba { m } => generate_ba_network(BAParams::new(m, nodes, seed)?),
        }
    }

    /// Tail exponent the model predicts.
    pub fn expected_alpha(&self) -> f64 {
        match *self {
            NetworkModel::Rsl { c } => c + 2.0,
            NetworkModel::Ba { .. } => 3.0,
        }
    }

    fn describe(&self, manifest: RunManifest) -> RunManifest {
        match *self {
            NetworkModel::Rsl { c } => manifest.param("model", "rsl").param("c", c),
            NetworkModel::Ba { m } => manifest.param("model", "ba").param("m", m),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenerateRequest {
    pub model: NetworkModel,
    pub nodes: usize,
    pub seed: RngSeed,
    pub out: PathBuf,
    pub hist: Option<PathBuf>,
}

/// Writes the edge list, the optional histogram and a manifest next to the
/// edge list.
pub fn cmd_generate(req: &GenerateRequest) -> Result<RunManifest, CliError> {
    if req.nodes < 2 {
        return Err(CliError::Data("n must be ≥ 2".into()));
    }
    let graph = req.model.generate(req.nodes, req.seed)?;

    let mut manifest = req
        .model
        .describe(RunManifest::new("generate"))
        .param("n", req.nodes)
        .param("seed", req.seed.0);

    write_edge_list(&graph, create_file(&req.out)?)?;
    manifest.artifact(&req.out);
    if let Some(hist) = &req.hist {
        write_histogram_csv(&degree_histogram(&graph), create_file(hist)?)?;
        manifest.artifact(hist);
    }
    write_json(&manifest, &manifest_path_for(&req.out))?;
    Ok(manifest)
}

fn describe_pmf(model: PmfModel, manifest: RunManifest) -> RunManifest {
    match model {
        PmfModel::Ba { m } => manifest.param("model", "ba").param("m", m),
        PmfModel::ShiftedGeometric { q } => manifest.param("model", "geometric").param("q", q),
        PmfModel::UniformMixture => manifest.param("model", "uniform"),
        PmfModel::LinearMixture => manifest.param("model", "linear"),
        PmfModel::Sublinear { c } => manifest.param("model", "sublinear").param("c", c),
    }
}

/// Tabulates `p(k)` for `k = 1..=kmax` to `out`, or to `stdout` when no path
/// is given.
pub fn cmd_pmf(
    model: PmfModel,
    kmax: u64,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    if kmax < 1 {
        return Err(CliError::Data("kmax must be ≥ 1".into()));
    }
    model.validate()?;
    match out {
        Some(path) => {
            write_pmf_csv(model, kmax, create_file(path)?)?;
            let mut manifest = describe_pmf(model, RunManifest::new("pmf")).param("kmax", kmax);
            manifest.artifact(path);
            write_json(&manifest, &manifest_path_for(path))?;
        }
        None => write_pmf_csv(model, kmax, stdout)?,
    }
    Ok(())
}

/// Fits an edge list or histogram CSV. The JSON goes to `out` (with a
/// manifest) or to `stdout`.
pub fn cmd_fit(input: &Path, out: Option<&Path>, stdout: &mut dyn Write) -> Result<FitResult, CliError> {
    let (degrees, _) = read_degrees(input)?;
    let fit = fit_power_law(&degrees)?;
    let result = FitResult::new(fit, input.display().to_string());
    match out {
        Some(path) => {
            write_json(&result, path)?;
            let mut manifest = RunManifest::new("fit").param("input", input.display().to_string());
            manifest.artifact(path);
            write_json(&manifest, &manifest_path_for(path))?;
        }
        None => {
            serde_json::to_writer_pretty(&mut *stdout, &result).map_err(crate::Error::from)?;
            writeln!(stdout).map_err(crate::Error::from)?;
        }
    }
    Ok(result)
}

/// Prints the worst fixed-point error per timestep; fails unless the overall
/// error is below [`FIXED_POINT_TOLERANCE`].
pub fn cmd_verify_ba(
    m: u64,
    timesteps: &[u64],
    kmax: u64,
    stdout: &mut dyn Write,
) -> Result<BernoulliStepReport, CliError> {
    if m < 1 {
        return Err(CliError::Data("m must be ≥ 1".into()));
    }
    if kmax < m + 1 {
        return Err(CliError::Data("kmax must be ≥ m+1".into()));
    }
    if timesteps.contains(&0) {
        return Err(CliError::Data("timesteps must be ≥ 1".into()));
    }
    let report = verify_fixed_point(m, timesteps, kmax)?;
    let io = |e: std::io::Error| CliError::from(crate::Error::from(e));
    writeln!(stdout, "m={} k=[{}, {}]", m, report.k_range.0, report.k_range.1).map_err(io)?;
    for &(t, err) in &report.per_t {
        writeln!(stdout, "t={t} max_abs_error={err:e}").map_err(io)?;
    }
    let verdict = if report.max_abs_error < FIXED_POINT_TOLERANCE { "PASS" } else { "FAIL" };
    writeln!(stdout, "overall max_abs_error={:e} {verdict}", report.max_abs_error).map_err(io)?;
    if report.max_abs_error >= FIXED_POINT_TOLERANCE {
        return Err(CliError::Data(format!(
            "fixed-point error {:e} exceeds {FIXED_POINT_TOLERANCE:e}",
            report.max_abs_error
        )));
    }
    Ok(report)
}

/// One network of the four-way comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Figure1Row {
    pub name: String,
    pub model: NetworkModel,
    pub seed: RngSeed,
    pub expected_alpha: f64,
    pub fit: FitResult,
}

/// The four comparison networks: BA with `m = 2` and randomly stopped
/// linking with `c = 0, 0.5, 1`, seeded `seed, seed+1, seed+2, seed+3`.
pub fn figure1_networks(seed: RngSeed) -> [(String, NetworkModel, RngSeed); 4] {
    [
        ("ba_m2".to_string(), NetworkModel::Ba { m: 2 }, seed),
        ("rsl_c0".to_string(), NetworkModel::Rsl { c: 0.0 }, seed.offset(1)),
        ("rsl_c0.5".to_string(), NetworkModel::Rsl { c: 0.5 }, seed.offset(2)),
        ("rsl_c1".to_string(), NetworkModel::Rsl { c: 1.0 }, seed.offset(3)),
    ]
}

/// Generates and fits the four networks concurrently, writing
/// `<name>.csv`, `<name>.fit.json`, `summary.csv` and `manifest.json` into
/// `out_dir`.
pub fn cmd_figure1(out_dir: &Path, seed: RngSeed, nodes: usize) -> Result<Vec<Figure1Row>, CliError> {
    if nodes < 3 {
        return Err(CliError::Data("n must be ≥ 3".into()));
    }
    fs::create_dir_all(out_dir).map_err(crate::Error::from)?;

    let networks = figure1_networks(seed);
    let results: Vec<crate::Result<Figure1Row>> = std::thread::scope(|scope| {
        let handles: Vec<_> = networks
            .iter()
            .map(|(name, model, net_seed)| {
                scope.spawn(move || -> crate::Result<Figure1Row> {
                    let graph = model.generate(nodes, *net_seed)?;
                    let hist = degree_histogram(&graph);
                    let hist_path = out_dir.join(format!("{name}.csv"));
                    write_histogram_csv(&hist, create_file(&hist_path)?)?;
                    let fit = fit_power_law(graph.degrees())?;
                    let fit = FitResult::new(fit, hist_path.display().to_string());
                    write_json(&fit, &out_dir.join(format!("{name}.fit.json")))?;
                    Ok(Figure1Row {
                        name: name.clone(),
                        model: *model,
                        seed: *net_seed,
                        expected_alpha: model.expected_alpha(),
                        fit,
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("figure worker panicked"))
            .collect()
    });
    let rows = results.into_iter().collect::<crate::Result<Vec<_>>>()?;

    let summary_path = out_dir.join("summary.csv");
    let mut summary = create_file(&summary_path)?;
    let io = |e: std::io::Error| CliError::from(crate::Error::from(e));
    writeln!(summary, "network,model,param,seed,expected_alpha,alpha,kmin,ks,n_tail,n_total").map_err(io)?;
    for row in &rows {
        let (model, param) = match row.model {
            NetworkModel::Ba { m } => ("ba", format!("m={m}")),
            NetworkModel::Rsl { c } => ("rsl", format!("c={c}")),
        };
        writeln!(
            summary,
            "{},{},{},{},{},{},{},{},{},{}",
            row.name,
            model,
            param,
            row.seed.0,
            row.expected_alpha,
            row.fit.alpha,
            row.fit.kmin,
            row.fit.ks,
            row.fit.n_tail,
            row.fit.n_total
        )
        .map_err(io)?;
    }
    summary.flush().map_err(io)?;

    let mut manifest = RunManifest::new("figure1")
        .param("seed", seed.0)
        .param("n", nodes)
        .param(
            "networks",
            serde_json::to_value(
                networks
                    .iter()
                    .map(|(name, model, s)| serde_json::json!({ "name": name, "spec": model, "seed": s }))
                    .collect::<Vec<_>>(),
            )
            .map_err(crate::Error::from)?,
        );
    for row in &rows {
        manifest.artifact(&out_dir.join(format!("{}.csv", row.name)));
        manifest.artifact(&out_dir.join(format!("{}.fit.json", row.name)));
    }
    manifest.artifact(&summary_path);
    write_json(&manifest, &out_dir.join("manifest.json"))?;
    Ok(rows)
}
