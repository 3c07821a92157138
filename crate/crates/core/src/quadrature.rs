//! Globally adaptive Gauss–Kronrod (7/15) quadrature on a finite interval.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimates fall below the requested absolute tolerance. The per-interval
//! estimate is the raw `|K15 - G7|` difference, which is pessimistic for
//! smooth integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{Error, Result};

/// Upper bound on the number of subintervals before giving up.
pub const MAX_INTERVALS: usize = 4096;

// Kronrod abscissae on [-1, 1], positive half, descending; the last one is
// the centre. Odd indices are shared with the 7-point Gauss rule.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5] and the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error_estimate: f64,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_centre = f(centre);

    let mut kronrod = WGK[7] * f_centre;
    let mut gauss = WG[3] * f_centre;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }

    Segment {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    }
}

/// Integrates `f` over `[a, b]` to absolute tolerance `abs_tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<Integral> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::invalid(format!("bad integration interval [{a}, {b}]")));
    }
    if abs_tol.is_nan() || abs_tol <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }

    let mut heap = BinaryHeap::new();
    let first = gauss_kronrod(&f, a, b);
    let mut total_error = first.error;
    heap.push(first);

    let diverged = |total_error: f64, intervals: usize| Error::QuadratureNonConvergence {
        estimate: total_error,
        intervals,
    };

    while total_error.is_nan() || total_error > abs_tol {
        if heap.len() >= MAX_INTERVALS {
            return Err(diverged(total_error, heap.len()));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            // interval can no longer be split in double precision
            return Err(diverged(total_error, heap.len() + 1));
        }
        let left = gauss_kronrod(&f, worst.a, mid);
        let right = gauss_kronrod(&f, mid, worst.b);
        if !(left.error + right.error).is_finite() || !(left.value + right.value).is_finite() {
            return Err(diverged(f64::INFINITY, heap.len() + 2));
        }
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // running sum drifts; resync once it claims convergence
        if total_error <= abs_tol {
            total_error = heap.iter().map(|s| s.error).sum();
        }
    }

    // sum smallest first
    let mut segments = heap.into_vec();
    segments.sort_by(|x, y| x.value.abs().total_cmp(&y.value.abs()));
    Ok(Integral {
        value: segments.iter().map(|s| s.value).sum(),
        error_estimate: total_error,
        intervals: segments.len(),
    })
}
