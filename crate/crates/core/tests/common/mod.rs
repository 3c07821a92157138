//! Test-only samplers that do not share code with the library.

#![allow(dead_code)]

use rand::Rng;

/// Inverse-CDF sampler for the zeta distribution `p(k) = k^-α / ζ(α)`,
/// `k ≥ 1`. The CDF is tabulated by direct summation up to `TABLE_LEN`;
/// beyond it the continuous Pareto tail is used.
pub struct ZetaSampler {
    alpha: f64,
    cdf: Vec<f64>,
}

const TABLE_LEN: usize = 1_000_000;

impl ZetaSampler {
    pub fn new(alpha: f64) -> Self {
        let weights: Vec<f64> = (1..=TABLE_LEN).map(|k| (k as f64).powf(-alpha)).collect();
        // tail beyond the table by the integral of x^-α from K + ½
        let edge = TABLE_LEN as f64 + 0.5;
        let tail = edge.powf(1.0 - alpha) / (alpha - 1.0);
        let head: f64 = weights.iter().rev().sum();
        let total = head + tail;

        let mut running = 0.0;
        let cdf = weights
            .iter()
            .map(|w| {
                running += w;
                running / total
            })
            .collect();
        ZetaSampler { alpha, cdf }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let u: f64 = rng.random();
        let idx = self.cdf.partition_point(|&c| c < u);
        if idx < self.cdf.len() {
            return idx as u64 + 1;
        }
        let beyond = 1.0 - self.cdf[self.cdf.len() - 1];
        let scale = ((1.0 - u) / beyond).powf(-1.0 / (self.alpha - 1.0));
        ((TABLE_LEN as f64 + 0.5) * scale).round().max(TABLE_LEN as f64 + 1.0) as u64
    }

    pub fn draw_many<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<u64> {
        (0..n).map(|_| self.sample(rng)).collect()
    }
}
