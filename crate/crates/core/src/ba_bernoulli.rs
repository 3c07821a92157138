//! Barabási–Albert growth read as Bernoulli trials.
//!
//! At link-timestep `t` the total degree is `2t`, so a node of degree `k`
//! receives the next link with probability `k / 2t`. Aggregating those trials
//! over the nodes of degree `k` and `k-1`, and rescaling by the node count
//! ratio `(t/m) / ((t+1)/m)`, maps the stationary distribution
//! `p(k) = 2m(m+1) / (k(k+1)(k+2))` onto itself:
//!
//! ```text
//! t/(t+1) · [ (1 - k/2t) p(k) + (k-1)/2t · p(k-1) ] = p(k)
//! ```
//!
//! The identity holds for `k ≥ m+1`. At `k = m` mass flows in from newly
//! arriving nodes, which the update does not describe.

use serde::{Deserialize, Serialize};

use crate::analytic_pmf::pmf_ba;
use crate::{Error, Result};

/// Worst deviation between the one-step update and the stationary PMF.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BernoulliStepReport {
    pub m: u64,
    /// The timesteps checked, with the maximum error at each.
    pub per_t: Vec<(u64, f64)>,
    /// Inclusive degree interval checked.
    pub k_range: (u64, u64),
    pub max_abs_error: f64,
}

/// `k / 2t`.
pub fn attachment_probability(k: u64, t: u64) -> Result<f64> {
    if t == 0 {
        return Err(Error::invalid("t must be ≥ 1"));
    }
    if k > 2 * t {
        return Err(Error::invalid(format!(
            "degree {k} exceeds the total stub count 2t = {}",
            2 * t
        )));
    }
    Ok(link_share(k, t))
}

fn link_share(k: u64, t: u64) -> f64 {
    k as f64 / (2.0 * t as f64)
}

/// Probability mass at degree `k` after one more link, starting from the
/// stationary distribution at timestep `t`.
///
/// The update is evaluated as an algebraic expression, so `k > 2t` is
/// accepted here even though no graph at timestep `t` has such a node.
pub fn one_step_update(m: u64, t: u64, k: u64) -> Result<f64> {
    if m == 0 {
        return Err(Error::invalid("m must be ≥ 1"));
    }
    if t == 0 {
        return Err(Error::invalid("t must be ≥ 1"));
    }
    if k <= m {
        return Err(Error::invalid(format!(
            "k must be ≥ m+1 = {}: the boundary k = m is fed by arriving nodes",
            m + 1
        )));
    }
    let stays = 1.0 - link_share(k, t);
    let grows = link_share(k - 1, t);
    let bracket = stays * pmf_ba(m, k)? + grows * pmf_ba(m, k - 1)?;
    // (t/m) / ((t+1)/m)
    let t = t as f64;
    Ok(t / (t + 1.0) * bracket)
}

/// Evaluates `|one_step_update(m, t, k) - p(k)|` over `k ∈ [m+1, k_max]`
/// for every `t` and reports the maximum.
pub fn verify_fixed_point(m: u64, t_values: &[u64], k_max: u64) -> Result<BernoulliStepReport> {
    if m == 0 {
        return Err(Error::invalid("m must be ≥ 1"));
    }
    if k_max < m + 1 {
        return Err(Error::invalid(format!("kmax must be ≥ m+1 = {}", m + 1)));
    }
    if t_values.is_empty() {
        return Err(Error::invalid("at least one timestep is required"));
    }

    let mut per_t = Vec::with_capacity(t_values.len());
    for &t in t_values {
        let mut worst = 0.0f64;
        for k in m + 1..=k_max {
            let err = (one_step_update(m, t, k)? - pmf_ba(m, k)?).abs();
            worst = worst.max(err);
        }
        per_t.push((t, worst));
    }
    let max_abs_error = per_t.iter().map(|&(_, e)| e).fold(0.0, f64::max);
    Ok(BernoulliStepReport {
        m,
        per_t,
        k_range: (m + 1, k_max),
        max_abs_error,
    })
}
