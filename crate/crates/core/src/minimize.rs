//! One-dimensional minimization: a scan over a grid to bracket the global
//! minimum followed by golden-section refinement inside the bracket.

/// `(3 − √5)/2`, the golden-section step fraction.
const GOLDEN_FRACTION: f64 = 0.381_966_011_250_105_1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Stop {
    /// Stop once the bracket is narrower than this width.
    Absolute(f64),
    /// Stop once the bracket is narrower than this fraction of its midpoint.
    Relative(f64),
}

impl Stop {
    fn done(self, lo: f64, hi: f64) -> bool {
        let width = hi - lo;
        match self {
            Stop::Absolute(tol) => width <= tol,
            Stop::Relative(tol) => width <= tol * (0.5 * (lo + hi)).abs(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Golden-section search on `[lo, hi]`.
///
/// The returned point is the best one evaluated, so its value never exceeds
/// the value at either interior probe. Non-finite values compare as `+∞`.
pub fn golden_section<F>(mut f: F, mut lo: f64, mut hi: f64, stop: Stop) -> Minimum
where
    F: FnMut(f64) -> f64,
{
    let mut eval = |x: f64| {
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    let mut x1 = lo + GOLDEN_FRACTION * (hi - lo);
    let mut x2 = hi - GOLDEN_FRACTION * (hi - lo);
    let mut f1 = eval(x1);
    let mut f2 = eval(x2);
    let mut evaluations = 2;
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };

    // 200 iterations shrink any bracket far below f64 resolution.
    for _ in 0..200 {
        if stop.done(lo, hi) {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + GOLDEN_FRACTION * (hi - lo);
            f1 = eval(x1);
            evaluations += 1;
            if f1 < best.1 {
                best = (x1, f1);
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = hi - GOLDEN_FRACTION * (hi - lo);
            f2 = eval(x2);
            evaluations += 1;
            if f2 < best.1 {
                best = (x2, f2);
            }
        }
    }

    Minimum {
        x: best.0,
        value: best.1,
        evaluations,
    }
}

/// Evaluates `f` at every grid point; returns the index of the smallest
/// finite value together with all values.
pub fn scan<F>(mut f: F, grid: &[f64]) -> (Option<usize>, Vec<f64>)
where
    F: FnMut(f64) -> f64,
{
    let values: Vec<f64> = grid
        .iter()
        .map(|&x| {
            let v = f(x);
            if v.is_finite() {
                v
            } else {
                f64::INFINITY
            }
        })
        .collect();
    let best = values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_finite())
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i);
    (best, values)
}

/// Geometric grid with a fixed number of points per decade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricGrid {
    pub lo: f64,
    pub hi: f64,
    pub per_decade: usize,
    /// Multiplies every interior point; `1.0` is the unperturbed grid.
    pub offset: f64,
}

impl GeometricGrid {
    pub fn points(&self) -> Vec<f64> {
        let decades = (self.hi / self.lo).log10();
        let n = (decades * self.per_decade as f64).ceil() as usize;
        let step = decades / n as f64;
        (0..=n)
            .map(|k| {
                let x = self.lo * 10f64.powf(step * k as f64);
                if k == 0 || k == n {
                    if k == n {
                        self.hi
                    } else {
                        self.lo
                    }
                } else {
                    (x * self.offset).clamp(self.lo, self.hi)
                }
            })
            .collect()
    }
}
