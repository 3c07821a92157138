//! Closed-form degree distributions.
//!
//! All functions take the degree `k` as a positive integer and return a
//! probability in double precision. The geometric mixtures are of the form
//!
//! ```text
//! p(k) = ∫₀¹ a(q) q (1-q)^(k-1) dq,   a(q) = (1+c) q^c
//! ```
//!
//! which evaluates to `(c+1) Γ(k) Γ(c+2) / Γ(k+c+2)`; `c = 0` gives
//! `1/(k(k+1))` and `c = 1` gives `4/(k(k+1)(k+2))`.
//! [`mixture_pmf_numeric`] integrates the same expression by quadrature and
//! serves as an independent check on the closed forms.

use serde::{Deserialize, Serialize};

use crate::quadrature;
use crate::{Error, Result};

/// Absolute tolerance requested from the quadrature oracle.
pub const QUADRATURE_TOLERANCE: f64 = 1e-10;

/// Choice of analytic degree distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum PmfModel {
    /// Barabási–Albert with `m` links per arriving node.
    Ba { m: u64 },
    /// Single shifted geometric with stopping probability `q`.
    ShiftedGeometric { q: f64 },
    /// Geometric mixture with uniformly distributed `q`.
    UniformMixture,
    /// Geometric mixture with `a(q) = 2q`.
    LinearMixture,
    /// Geometric mixture with `a(q) = (1+c) q^c`.
    Sublinear { c: f64 },
}

impl PmfModel {
    /// Checks the parameter ranges: `m ≥ 1`, `0 < q ≤ 1`, `0 ≤ c ≤ 1`.
    pub fn validate(&self) -> Result<()> {
        match *self {
            PmfModel::Ba { m } => check_m(m),
            PmfModel::ShiftedGeometric { q } => check_q(q),
            PmfModel::Sublinear { c } => check_c(c),
            PmfModel::UniformMixture | PmfModel::LinearMixture => Ok(()),
        }
    }

    pub fn pmf(&self, k: u64) -> Result<f64> {
        match *self {
            PmfModel::Ba { m } => pmf_ba(m, k),
            PmfModel::ShiftedGeometric { q } => pmf_shifted_geometric(q, k),
            PmfModel::UniformMixture => pmf_uniform_mixture(k),
            PmfModel::LinearMixture => pmf_linear_mixture(k),
            PmfModel::Sublinear { c } => pmf_sublinear(c, k),
        }
    }

    /// Asymptotic tail exponent `γ` with `p(k) ~ k^-γ`, if the model has one.
    pub fn tail_exponent(&self) -> Option<f64> {
        match *self {
            PmfModel::Ba { .. } | PmfModel::LinearMixture => Some(3.0),
            PmfModel::UniformMixture => Some(2.0),
            PmfModel::Sublinear { c } => Some(c + 2.0),
            PmfModel::ShiftedGeometric { .. } => None,
        }
    }
}

fn check_m(m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::invalid("m must be ≥ 1"));
    }
    Ok(())
}

fn check_q(q: f64) -> Result<()> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::invalid(format!("q must lie in (0, 1], got {q}")));
    }
    Ok(())
}

pub(crate) fn check_c(c: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::invalid(format!("c must lie in [0, 1], got {c}")));
    }
    Ok(())
}

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::invalid("k must be ≥ 1"));
    }
    Ok(())
}

/// `2m(m+1) / (k(k+1)(k+2))` for `k ≥ m`, zero below the support.
pub fn pmf_ba(m: u64, k: u64) -> Result<f64> {
    check_m(m)?;
    if k < m {
        return Ok(0.0);
    }
    let (m, k) = (m as f64, k as f64);
    Ok(2.0 * m * (m + 1.0) / (k * (k + 1.0) * (k + 2.0)))
}

/// `q (1-q)^(k-1)`.
pub fn pmf_shifted_geometric(q: f64, k: u64) -> Result<f64> {
    check_q(q)?;
    check_k(k)?;
    if q == 1.0 {
        return Ok(if k == 1 { 1.0 } else { 0.0 });
    }
    Ok(q * ((k - 1) as f64 * (-q).ln_1p()).exp())
}

/// `1 / (k² + k)`.
pub fn pmf_uniform_mixture(k: u64) -> Result<f64> {
    check_k(k)?;
    let k = k as f64;
    Ok(1.0 / (k * (k + 1.0)))
}

/// `4 / (k(k+1)(k+2))`.
pub fn pmf_linear_mixture(k: u64) -> Result<f64> {
    check_k(k)?;
    let k = k as f64;
    Ok(4.0 / (k * (k + 1.0) * (k + 2.0)))
}

/// `(c+1) Γ(k) Γ(c+2) / Γ(k+c+2)`, evaluated through log-gamma.
pub fn pmf_sublinear(c: f64, k: u64) -> Result<f64> {
    check_c(c)?;
    check_k(k)?;
    let k = k as f64;
    let log_p = (c + 1.0).ln() + libm::lgamma(k) + libm::lgamma(c + 2.0) - libm::lgamma(k + c + 2.0);
    Ok(log_p.exp())
}

/// Integrates `∫₀¹ (1+c) q^(1+c) (1-q)^(k-1) dq` numerically.
pub fn mixture_pmf_numeric(c: f64, k: u64) -> Result<f64> {
    check_c(c)?;
    check_k(k)?;
    let tail_power = (k - 1) as f64;
    let integrand = |q: f64| (1.0 + c) * q.powf(1.0 + c) * (1.0 - q).powf(tail_power);
    Ok(quadrature::integrate(integrand, 0.0, 1.0, QUADRATURE_TOLERANCE)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn ba_examples() {
        assert!(close(pmf_ba(2, 2).unwrap(), 0.5, 1e-15));
        assert_eq!(pmf_ba(2, 1).unwrap(), 0.0);
        assert!(close(pmf_ba(1, 1).unwrap(), 2.0 / 3.0, 1e-15));
        assert!(pmf_ba(0, 3).is_err());
    }

    #[test]
    fn shifted_geometric_examples() {
        assert_eq!(pmf_shifted_geometric(1.0, 1).unwrap(), 1.0);
        assert_eq!(pmf_shifted_geometric(1.0, 4).unwrap(), 0.0);
        assert!(close(pmf_shifted_geometric(0.5, 3).unwrap(), 0.125, 1e-15));
        assert!(close(pmf_shifted_geometric(0.25, 1).unwrap(), 0.25, 1e-15));
        assert!(pmf_shifted_geometric(0.0, 1).is_err());
        assert!(pmf_shifted_geometric(1.5, 1).is_err());
        assert!(pmf_shifted_geometric(0.5, 0).is_err());
    }

    #[test]
    fn uniform_examples() {
        assert!(close(pmf_uniform_mixture(1).unwrap(), 0.5, 1e-16));
        assert!(close(pmf_uniform_mixture(2).unwrap(), 1.0 / 6.0, 1e-16));
        assert!(close(pmf_uniform_mixture(100).unwrap(), 1.0 / 10100.0, 1e-18));
        assert!(pmf_uniform_mixture(0).is_err());
    }

    #[test]
    fn linear_examples() {
        assert!(close(pmf_linear_mixture(1).unwrap(), 2.0 / 3.0, 1e-16));
        assert!(close(pmf_linear_mixture(2).unwrap(), 1.0 / 6.0, 1e-16));
        assert_eq!(pmf_linear_mixture(1).unwrap(), pmf_ba(1, 1).unwrap());
        assert!(pmf_linear_mixture(0).is_err());
    }

    #[test]
    fn sublinear_examples() {
        assert!(close(pmf_sublinear(0.0, 5).unwrap(), 1.0 / 30.0, 1e-14));
        assert!(close(pmf_sublinear(1.0, 2).unwrap(), 1.0 / 6.0, 1e-14));
        assert!(close(pmf_sublinear(0.5, 1).unwrap(), 0.6, 1e-14));
        assert!(pmf_sublinear(-0.1, 1).is_err());
        assert!(pmf_sublinear(1.1, 1).is_err());
        assert!(pmf_sublinear(0.5, 0).is_err());
    }

    #[test]
    fn sublinear_is_finite_for_huge_k() {
        let p = pmf_sublinear(0.5, 10_000_000).unwrap();
        assert!(p > 0.0 && p.is_finite());
    }

    #[test]
    fn numeric_examples() {
        assert!(close(mixture_pmf_numeric(0.0, 1).unwrap(), 0.5, 1e-10));
        assert!(close(mixture_pmf_numeric(1.0, 1).unwrap(), 2.0 / 3.0, 1e-10));
        let numeric = mixture_pmf_numeric(0.5, 10).unwrap();
        assert!(close(numeric, pmf_sublinear(0.5, 10).unwrap(), 1e-8));
    }

    #[test]
    fn telescoping_partial_sums() {
        for big_k in [10u64, 100, 10_000] {
            let sum: f64 = (1..=big_k).map(|k| pmf_uniform_mixture(k).unwrap()).sum();
            let exact = 1.0 - 1.0 / (big_k as f64 + 1.0);
            assert!(close(sum, exact, 1e-12), "K={big_k}: {sum} vs {exact}");
        }
    }

    #[test]
    fn sublinear_partial_sums_monotone_and_bounded() {
        for c in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let mut acc = 0.0;
            for k in 1..=100_000u64 {
                let next = acc + pmf_sublinear(c, k).unwrap();
                assert!(next > acc, "c={c} k={k}");
                acc = next;
            }
            assert!(acc <= 1.0 + 1e-12, "c={c} sum={acc}");
        }
    }

    #[test]
    fn reduction_identities() {
        for k in 1..=1000 {
            let u = pmf_uniform_mixture(k).unwrap();
            let l = pmf_linear_mixture(k).unwrap();
            assert!(close(pmf_sublinear(0.0, k).unwrap(), u, 1e-12));
            assert!(close(pmf_sublinear(1.0, k).unwrap(), l, 1e-12));
        }
    }

    fn local_slope(model: PmfModel, k: u64) -> f64 {
        let lo = model.pmf(k).unwrap().ln();
        let hi = model.pmf(2 * k).unwrap().ln();
        (hi - lo) / 2f64.ln()
    }

    #[test]
    fn tail_slopes() {
        for c in [0.0, 0.3, 0.5, 0.7, 1.0] {
            let slope = local_slope(PmfModel::Sublinear { c }, 10_000);
            assert!(close(slope, -(c + 2.0), 0.05), "c={c}: {slope}");
        }
        let slope = local_slope(PmfModel::Ba { m: 2 }, 10_000);
        assert!(close(slope, -3.0, 0.05), "{slope}");
    }

    #[test]
    fn model_dispatch_and_validation() {
        assert!(PmfModel::Ba { m: 0 }.validate().is_err());
        assert!(PmfModel::ShiftedGeometric { q: 0.0 }.validate().is_err());
        assert!(PmfModel::Sublinear { c: 2.0 }.validate().is_err());
        assert!(PmfModel::UniformMixture.validate().is_ok());
        assert_eq!(
            PmfModel::Sublinear { c: 0.0 }.pmf(7).unwrap(),
            pmf_sublinear(0.0, 7).unwrap()
        );
        assert_eq!(PmfModel::Ba { m: 2 }.tail_exponent(), Some(3.0));
        assert_eq!(PmfModel::ShiftedGeometric { q: 0.3 }.tail_exponent(), None);
    }
}
