//! Adaptive Simpson quadrature with a Richardson error estimate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Recursion depth past which a panel is reported as non-convergent.
pub const MAX_DEPTH: u32 = 40;

/// Uniform panels the interval is split into before adapting.
const INITIAL_PANELS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Integral {
    pub value: f64,
    /// Sum of the per-panel Richardson estimates `|S₂ − S₁|/15`.
    pub error: f64,
    pub evaluations: usize,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    panel: Panel,
    tol: f64,
    depth: u32,
    out: &mut Integral,
) -> Result<()> {
    let Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole,
    } = panel;
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    out.evaluations += 2;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    let floor = 8.0 * f64::EPSILON * (left.abs() + right.abs());
    if delta.abs() <= 15.0 * tol.max(floor) {
        out.value += left + right + delta / 15.0;
        out.error += delta.abs() / 15.0;
        return Ok(());
    }
    if depth >= MAX_DEPTH || !delta.is_finite() {
        return Err(Error::Quadrature {
            max_depth: MAX_DEPTH,
            lo: a,
            hi: b,
        });
    }
    refine(
        f,
        Panel {
            a,
            b: m,
            fa,
            fm: flm,
            fb: fm,
            whole: left,
        },
        0.5 * tol,
        depth + 1,
        out,
    )?;
    refine(
        f,
        Panel {
            a: m,
            b,
            fa: fm,
            fm: frm,
            fb,
            whole: right,
        },
        0.5 * tol,
        depth + 1,
        out,
    )
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<Integral> {
    if !(tol > 0.0) {
        return Err(Error::Domain {
            name: "tol",
            value: tol,
            range: "(0, ∞)",
        });
    }
    let mut out = Integral {
        value: 0.0,
        error: 0.0,
        evaluations: 0,
    };
    let h = (b - a) / INITIAL_PANELS as f64;
    let mut fa = f(a);
    out.evaluations += 1;
    for k in 0..INITIAL_PANELS {
        let lo = a + h * k as f64;
        let hi = if k + 1 == INITIAL_PANELS { b } else { lo + h };
        let fm = f(0.5 * (lo + hi));
        let fb = f(hi);
        out.evaluations += 2;
        let panel = Panel {
            a: lo,
            b: hi,
            fa,
            fm,
            fb,
            whole: simpson(lo, hi, fa, fm, fb),
        };
        refine(&f, panel, tol / INITIAL_PANELS as f64, 0, &mut out)?;
        fa = fb;
    }
    Ok(out)
}
