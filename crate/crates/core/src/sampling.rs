//! Stopping-probability and degree sampling for randomly stopped linking.
//!
//! # Random stream layout
//!
//! Every random draw comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) keyed by
//! `ChaCha8Rng::seed_from_u64(seed)`. The 64-bit ChaCha stream id selects a
//! substream:
//!
//! * stream `i` (for node index `i`) feeds node `i`'s draws in
//!   [`generate_degree_sequence`]: first `q`, then `K`, then, for the last
//!   node only, further `(q, K)` pairs while the degree sum is odd;
//! * stream [`PAIRING_STREAM`] feeds the stub permutation of the
//!   configuration model;
//! * stream [`GROWTH_STREAM`] feeds the Barabási–Albert generator.
//!
//! Each `f64` uniform is produced by `rand`'s standard `[0, 1)` conversion of
//! one 64-bit output. Results therefore do not depend on thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analytic_pmf::check_c;
use crate::{Error, Result};

/// Stream id reserved for configuration-model stub pairing.
pub const PAIRING_STREAM: u64 = u64::MAX;
/// Stream id reserved for preferential-attachment growth.
pub const GROWTH_STREAM: u64 = u64::MAX - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// Deterministic generator for one substream of this seed.
    pub fn stream(self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(stream);
        rng
    }

    /// Seed derived by offset, used when one run needs several graphs.
    pub fn offset(self, by: u64) -> RngSeed {
        RngSeed(self.0.wrapping_add(by))
    }
}

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed(seed)
    }
}

/// Mixing density `a(q) = (1+c) q^c` on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixingSpec {
    c: f64,
}

impl MixingSpec {
    pub fn new(c: f64) -> Result<Self> {
        check_c(c)?;
        Ok(MixingSpec { c })
    }

    pub fn uniform() -> Self {
        MixingSpec { c: 0.0 }
    }

    pub fn linear() -> Self {
        MixingSpec { c: 1.0 }
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn density(&self, q: f64) -> f64 {
        if !(0.0..=1.0).contains(&q) {
            return 0.0;
        }
        (1.0 + self.c) * q.powf(self.c)
    }

    /// `P(Q ≤ q) = q^(1+c)`.
    pub fn cdf(&self, q: f64) -> f64 {
        q.clamp(0.0, 1.0).powf(1.0 + self.c)
    }
}

/// Inverse-CDF map `u ↦ u^(1/(1+c))`. Returns `None` when the result is 0,
/// which the samplers treat as "draw again".
pub fn stopping_probability_from_uniform(spec: MixingSpec, u: f64) -> Option<f64> {
    let q = u.powf(1.0 / (1.0 + spec.c));
    (q > 0.0 && q <= 1.0).then_some(q)
}

/// Draws `q` from the mixing density.
pub fn sample_stopping_probability<R: Rng + ?Sized>(spec: MixingSpec, rng: &mut R) -> f64 {
    loop {
        if let Some(q) = stopping_probability_from_uniform(spec, rng.random::<f64>()) {
            return q;
        }
    }
}

/// Inverse transform of the shifted geometric: `⌊ln(1-u)/ln(1-q)⌋ + 1` for
/// `u ∈ [0, 1)`. Saturates at `u64::MAX` for vanishing `q`.
pub fn degree_from_uniform(q: f64, u: f64) -> u64 {
    if q >= 1.0 {
        return 1;
    }
    let trials = ((-u).ln_1p() / (-q).ln_1p()).floor();
    // float-to-int `as` saturates
    (trials as u64).saturating_add(1)
}

/// Draws `K ≥ 1` with `P(K = k) = q (1-q)^(k-1)`.
pub fn sample_degree<R: Rng + ?Sized>(q: f64, rng: &mut R) -> Result<u64> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::invalid(format!("q must lie in (0, 1], got {q}")));
    }
    if q == 1.0 {
        return Ok(1);
    }
    Ok(degree_from_uniform(q, rng.random::<f64>()))
}

fn draw_node<R: Rng + ?Sized>(spec: MixingSpec, rng: &mut R) -> (f64, u64) {
    let q = sample_stopping_probability(spec, rng);
    let k = sample_degree(q, rng).expect("sampled q lies in (0, 1]");
    (q, k)
}

/// Per-node target degrees and the stopping probabilities behind them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<u64>,
    stopping_probs: Vec<f64>,
    seed: RngSeed,
}

impl DegreeSequence {
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn stopping_probs(&self) -> &[f64] {
        &self.stopping_probs
    }

    pub fn seed(&self) -> RngSeed {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn total_stubs(&self) -> u128 {
        self.degrees.iter().map(|&k| k as u128).sum()
    }

    pub fn into_degrees(self) -> Vec<u64> {
        self.degrees
    }
}

/// Draws `n` independent `(q, K)` pairs, then repairs parity by redrawing
/// the last node until the degree sum is even.
pub fn generate_degree_sequence(n: usize, spec: MixingSpec, seed: RngSeed) -> Result<DegreeSequence> {
    if n < 2 {
        return Err(Error::invalid("n must be ≥ 2"));
    }

    let draw = |i: usize| draw_node(spec, &mut seed.stream(i as u64));

    #[cfg(feature = "parallel")]
    let pairs: Vec<(f64, u64)> = {
        use rayon::prelude::*;
        (0..n - 1).into_par_iter().map(draw).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let pairs: Vec<(f64, u64)> = (0..n - 1).map(draw).collect();

    let (mut stopping_probs, mut degrees): (Vec<f64>, Vec<u64>) = pairs.into_iter().unzip();
    let parity = degrees.iter().fold(0u64, |acc, &k| acc ^ (k & 1));

    let mut last_rng = seed.stream((n - 1) as u64);
    let (q, k) = loop {
        let (q, k) = draw_node(spec, &mut last_rng);
        if (parity ^ (k & 1)) == 0 {
            break (q, k);
        }
    };
    stopping_probs.push(q);
    degrees.push(k);

    Ok(DegreeSequence {
        degrees,
        stopping_probs,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stopping_probability_examples() {
        let uniform = MixingSpec::uniform();
        assert_eq!(stopping_probability_from_uniform(uniform, 0.5), Some(0.5));
        let linear = MixingSpec::linear();
        let q = stopping_probability_from_uniform(linear, 0.25).unwrap();
        assert!((q - 0.5).abs() < 1e-15);
        for c in [0.0, 0.3, 1.0] {
            let spec = MixingSpec::new(c).unwrap();
            assert_eq!(stopping_probability_from_uniform(spec, 1.0), Some(1.0));
            assert_eq!(stopping_probability_from_uniform(spec, 0.0), None);
        }
    }

    #[test]
    fn mixing_spec_rejects_out_of_range() {
        assert!(MixingSpec::new(-0.01).is_err());
        assert!(MixingSpec::new(1.01).is_err());
        assert!(MixingSpec::new(f64::NAN).is_err());
    }

    #[test]
    fn degree_inverse_transform() {
        assert_eq!(degree_from_uniform(1.0, 0.9), 1);
        assert_eq!(degree_from_uniform(0.5, 0.0), 1);
        assert_eq!(degree_from_uniform(0.5, 0.49), 1);
        assert_eq!(degree_from_uniform(0.5, 0.5), 2);
        assert_eq!(degree_from_uniform(0.5, 0.74), 2);
        assert_eq!(degree_from_uniform(0.5, 0.76), 3);
        assert_eq!(degree_from_uniform(1e-300, 0.5), u64::MAX);
    }

    #[test]
    fn sample_degree_rejects_bad_q() {
        let mut rng = RngSeed(1).stream(0);
        assert!(sample_degree(0.0, &mut rng).is_err());
        assert!(sample_degree(1.5, &mut rng).is_err());
        assert_eq!(sample_degree(1.0, &mut rng).unwrap(), 1);
    }

    #[test]
    fn shifted_geometric_monte_carlo() {
        let mut rng = RngSeed(11).stream(0);
        let draws = 1_000_000;
        let ones = (0..draws)
            .filter(|_| sample_degree(0.5, &mut rng).unwrap() == 1)
            .count();
        assert!((ones as f64 / draws as f64 - 0.5).abs() < 0.002);

        let total: u64 = (0..draws).map(|_| sample_degree(0.2, &mut rng).unwrap()).sum();
        assert!((total as f64 / draws as f64 - 5.0).abs() < 0.02);
    }

    #[test]
    fn linear_mixing_cdf_ks() {
        // empirical CDF of q vs q² at c = 1
        let spec = MixingSpec::linear();
        let mut rng = RngSeed(5).stream(0);
        let n = 1_000_000;
        let mut qs: Vec<f64> = (0..n).map(|_| sample_stopping_probability(spec, &mut rng)).collect();
        qs.sort_by(f64::total_cmp);
        let ks = qs
            .iter()
            .enumerate()
            .map(|(i, &q)| {
                let f = q * q;
                let hi = (i + 1) as f64 / n as f64 - f;
                let lo = f - i as f64 / n as f64;
                hi.max(lo)
            })
            .fold(0.0, f64::max);
        assert!(ks < 0.002, "KS distance {ks}");
    }

    #[test]
    fn smallest_sequence() {
        let seq = generate_degree_sequence(2, MixingSpec::uniform(), RngSeed(3)).unwrap();
        assert_eq!(seq.len(), 2);
        assert_eq!(seq.total_stubs() % 2, 0);
        let again = generate_degree_sequence(2, MixingSpec::uniform(), RngSeed(3)).unwrap();
        assert_eq!(seq, again);
    }

    #[test]
    fn rejects_tiny_n() {
        assert!(generate_degree_sequence(1, MixingSpec::uniform(), RngSeed(0)).is_err());
        assert!(generate_degree_sequence(0, MixingSpec::uniform(), RngSeed(0)).is_err());
    }

    #[test]
    fn invariants_hold_over_many_seeds() {
        for seed in 0..200 {
            let spec = MixingSpec::new((seed % 5) as f64 / 4.0).unwrap();
            let seq = generate_degree_sequence(17, spec, RngSeed(seed)).unwrap();
            assert_eq!(seq.degrees().len(), seq.stopping_probs().len());
            assert!(seq.degrees().iter().all(|&k| k >= 1));
            assert!(seq.stopping_probs().iter().all(|&q| q > 0.0 && q <= 1.0));
            assert_eq!(seq.total_stubs() % 2, 0);
        }
    }

    #[test]
    fn node_draws_use_their_own_stream() {
        let spec = MixingSpec::new(0.5).unwrap();
        let seed = RngSeed(99);
        let seq = generate_degree_sequence(50, spec, seed).unwrap();
        for i in 0..49 {
            let (q, k) = draw_node(spec, &mut seed.stream(i as u64));
            assert_eq!(seq.stopping_probs()[i], q);
            assert_eq!(seq.degrees()[i], k);
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn independent_of_thread_count() {
        let spec = MixingSpec::new(0.5).unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| generate_degree_sequence(10_000, spec, RngSeed(8)).unwrap())
        };
        assert_eq!(run(1), run(4));
    }
}
