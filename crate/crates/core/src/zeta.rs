//! Hurwitz zeta function `ζ(s, a) = Σ_{j≥0} (a+j)^-s` for `s > 1`, `a > 0`.
//!
//! Summed directly up to a shift point `x = a + N`, then closed with the
//! Euler–Maclaurin tail through the `B₁₄` term. `N` is grown until the first
//! omitted term (the `B₁₆` term, which bounds the remainder for this
//! completely monotone summand) is below `REMAINDER_RTOL` times the
//! integral part `x^(1-s)/(s-1)`, itself a lower bound on `ζ(s, a)`.

/// Relative bound on the truncated Euler–Maclaurin remainder.
pub const REMAINDER_RTOL: f64 = 1e-14;

// B_{2j} / (2j)! for j = 1..=7
const BERNOULLI_OVER_FACTORIAL: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
];

// |B_16| / 16!
const REMAINDER_COEFF: f64 = 3617.0 / 10_670_622_842_880_000.0;

/// `s (s+1) ... (s+n-1)`.
fn rising(s: f64, n: u32) -> f64 {
    (0..n).map(|i| s + i as f64).product()
}

fn remainder_ratio(s: f64, x: f64) -> f64 {
    REMAINDER_COEFF * rising(s, 15) * (s - 1.0) * x.powi(-16)
}

/// `ζ(s, a) · a^s`, the sum with every term divided by its first one. Stays
/// finite where `a^-s` alone would underflow.
fn scaled_hurwitz_zeta(s: f64, a: f64) -> f64 {
    let mut shift = 0u32;
    while remainder_ratio(s, a + shift as f64) > REMAINDER_RTOL {
        shift += if shift < 16 { 1 } else { shift / 4 };
    }

    let x = a + shift as f64;
    let ratio_pow = (x / a).powf(-s);
    let mut tail = x * ratio_pow / (s - 1.0) + 0.5 * ratio_pow;
    let inv_x2 = 1.0 / (x * x);
    let mut x_pow = ratio_pow / x;
    for (j, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        tail += coeff * rising(s, 2 * j as u32 + 1) * x_pow;
        x_pow *= inv_x2;
    }

    // smallest terms first
    let head: f64 = (0..shift)
        .rev()
        .map(|j| (1.0 + j as f64 / a).powf(-s))
        .sum();
    tail + head
}

fn in_domain(s: f64, a: f64) -> bool {
    s > 1.0 && a > 0.0 && s.is_finite() && a.is_finite()
}

/// Returns `NaN` outside the domain `s > 1`, `a > 0`.
pub fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    if !in_domain(s, a) {
        return f64::NAN;
    }
    scaled_hurwitz_zeta(s, a) * a.powf(-s)
}

/// `ln ζ(s, a)`, accurate even when `ζ(s, a)` underflows.
pub fn ln_hurwitz_zeta(s: f64, a: f64) -> f64 {
    if !in_domain(s, a) {
        return f64::NAN;
    }
    scaled_hurwitz_zeta(s, a).ln() - s * a.ln()
}
