//! wasm-bindgen exports for the static page in `www/`.
//!
//! Every export returns a JSON string; the page parses it and draws log-log
//! plots on a canvas. The `*_json` functions hold the logic so it can be
//! tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use scalefree::analytic_pmf::{pmf_ba, pmf_linear_mixture, pmf_sublinear, pmf_uniform_mixture};
use scalefree::ba_bernoulli::verify_fixed_point;
use scalefree::cli_io::NetworkModel;
use scalefree::graph_gen::degree_histogram;
use scalefree::powerlaw_fit::fit_power_law;
use scalefree::RngSeed;

/// Largest network the page will build.
pub const MAX_NODES: usize = 200_000;

#[derive(Debug, Serialize)]
struct Curves {
    k: Vec<u64>,
    sublinear: Vec<f64>,
    uniform: Vec<f64>,
    linear: Vec<f64>,
    ba: Vec<f64>,
}

pub fn pmf_curves_json(c: f64, m: u64, kmax: u64) -> Result<String, String> {
    if !(1..=100_000).contains(&kmax) {
        return Err("kmax must lie in 1..=100000".into());
    }
    let err = |e: scalefree::Error| e.to_string();
    let mut curves = Curves {
        k: (1..=kmax).collect(),
        sublinear: Vec::new(),
        uniform: Vec::new(),
        linear: Vec::new(),
        ba: Vec::new(),
    };
    for k in 1..=kmax {
        curves.sublinear.push(pmf_sublinear(c, k).map_err(err)?);
        curves.uniform.push(pmf_uniform_mixture(k).map_err(err)?);
        curves.linear.push(pmf_linear_mixture(k).map_err(err)?);
        curves.ba.push(pmf_ba(m, k).map_err(err)?);
    }
    serde_json::to_string(&curves).map_err(|e| e.to_string())
}

#[derive(Debug, Serialize)]
struct Simulation {
    nodes: usize,
    edges: usize,
    k: Vec<u64>,
    fraction: Vec<f64>,
    expected_alpha: f64,
    alpha: Option<f64>,
    kmin: Option<u64>,
    ks: Option<f64>,
    fit_error: Option<String>,
}

/// `model` is `"rsl"` (param = c) or `"ba"` (param = m).
pub fn simulate_json(model: &str, nodes: usize, param: f64, seed: u64) -> Result<String, String> {
    if nodes > MAX_NODES {
        return Err(format!("at most {MAX_NODES} nodes in the browser"));
    }
    let model = match model {
        "rsl" => NetworkModel::Rsl { c: param },
        "ba" if param >= 1.0 && param.fract() == 0.0 => NetworkModel::Ba { m: param as usize },
        "ba" => return Err("m must be a positive integer".into()),
        other => return Err(format!("unknown model {other:?}")),
    };
    let graph = model.generate(nodes, RngSeed(seed)).map_err(|e| e.to_string())?;
    let hist = degree_histogram(&graph);
    let fit = fit_power_law(graph.degrees());
    let sim = Simulation {
        nodes,
        edges: graph.edge_count(),
        k: hist.bins.iter().map(|b| b.k).collect(),
        fraction: hist.bins.iter().map(|b| b.fraction).collect(),
        expected_alpha: model.expected_alpha(),
        alpha: fit.as_ref().ok().map(|f| f.alpha),
        kmin: fit.as_ref().ok().map(|f| f.kmin),
        ks: fit.as_ref().ok().map(|f| f.ks),
        fit_error: fit.err().map(|e| e.to_string()),
    };
    serde_json::to_string(&sim).map_err(|e| e.to_string())
}

pub fn verify_ba_json(m: u64, t: u64, kmax: u64) -> Result<String, String> {
    let report = verify_fixed_point(m, &[t], kmax).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Analytic PMF curves for `k = 1..=kmax`.
#[wasm_bindgen]
pub fn pmf_curves(c: f64, m: u32, kmax: u32) -> Result<String, JsValue> {
    pmf_curves_json(c, m.into(), kmax.into()).map_err(|e| JsValue::from_str(&e))
}

/// Generates a network, returning its degree histogram and power-law fit.
#[wasm_bindgen]
pub fn simulate(model: &str, nodes: u32, param: f64, seed: u32) -> Result<String, JsValue> {
    simulate_json(model, nodes as usize, param, seed.into()).map_err(|e| JsValue::from_str(&e))
}

/// Fixed-point check of the BA one-step update at a single timestep.
#[wasm_bindgen]
pub fn verify_ba(m: u32, t: u32, kmax: u32) -> Result<String, JsValue> {
    verify_ba_json(m.into(), t.into(), kmax.into()).map_err(|e| JsValue::from_str(&e))
}
