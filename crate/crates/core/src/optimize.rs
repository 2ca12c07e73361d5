//! Extrema of a univariate function on a closed positive interval.
//!
//! The interval is sampled on a geometric grid, every interior sample that is
//! a discrete local extremum is bracketed by its neighbours, and the bracket
//! is refined by golden-section search. Endpoints are always candidates.
//!
//! An extremum narrower than one grid cell can be missed. The functions this
//! crate feeds in have at most two stationary points, so the default grid is
//! far finer than needed.

use alloc::vec::Vec;

use crate::math::{abs, exp, ln};

/// `1 / φ`, the golden-section shrink factor.
const INV_PHI: f64 = 0.618_033_988_749_894_8;

const MAX_GOLDEN_ITERATIONS: usize = 200;

/// `n` points from `lo` to `hi` (inclusive) with constant ratio.
pub fn log_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => alloc::vec![lo],
        _ => {
            let (a, b) = (ln(lo), ln(hi));
            let step = (b - a) / (n - 1) as f64;
            let mut xs: Vec<f64> = (0..n).map(|i| exp(a + step * i as f64)).collect();
            xs[0] = lo;
            xs[n - 1] = hi;
            xs
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub x: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrema {
    pub min: Extremum,
    pub max: Extremum,
}

/// Options for [`interval_extrema`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub scan_points: usize,
    /// Golden-section stops once the bracket is narrower than this times `x`.
    pub rel_tol: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            scan_points: 4096,
            rel_tol: 1e-12,
        }
    }
}

/// Minimizes `f` on `[a, b]` by golden-section search.
///
/// Assumes a single minimum inside the bracket. Returns the best point
/// evaluated, which may be an interior probe rather than the final midpoint.
pub fn golden_section_min<F: Fn(f64) -> f64>(
    f: F,
    mut a: f64,
    mut b: f64,
    rel_tol: f64,
) -> Extremum {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fc <= fd {
        Extremum { x: c, value: fc }
    } else {
        Extremum { x: d, value: fd }
    };

    for _ in 0..MAX_GOLDEN_ITERATIONS {
        if b - a <= rel_tol * (abs(a) + abs(b)) * 0.5 {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
            if fc < best.value {
                best = Extremum { x: c, value: fc };
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
            if fd < best.value {
                best = Extremum { x: d, value: fd };
            }
        }
    }
    best
}

/// Global minimum and maximum of `f` on `[lo, hi]`, `0 < lo <= hi`.
pub fn interval_extrema<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, opts: ScanOptions) -> Extrema {
    if lo == hi {
        let e = Extremum {
            x: lo,
            value: f(lo),
        };
        return Extrema { min: e, max: e };
    }

    let xs = log_space(lo, hi, opts.scan_points.max(3));
    let vs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();

    let mut min = Extremum {
        x: xs[0],
        value: vs[0],
    };
    let mut max = min;
    for (&x, &value) in xs.iter().zip(&vs).skip(1) {
        if value < min.value {
            min = Extremum { x, value };
        }
        if value > max.value {
            max = Extremum { x, value };
        }
    }

    for i in 1..xs.len() - 1 {
        let (prev, here, next) = (vs[i - 1], vs[i], vs[i + 1]);
        if here < prev && here <= next {
            let e = golden_section_min(&f, xs[i - 1], xs[i + 1], opts.rel_tol);
            if e.value < min.value {
                min = e;
            }
        }
        if here > prev && here >= next {
            let e = golden_section_min(|x| -f(x), xs[i - 1], xs[i + 1], opts.rel_tol);
            if -e.value > max.value {
                max = Extremum {
                    x: e.x,
                    value: -e.value,
                };
            }
        }
    }
    Extrema { min, max }
}
