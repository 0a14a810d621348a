use serde::{Deserialize, Serialize};

use crate::bounds::{minimize_over_q, BoundKind, BoundResult};
use crate::error::{Error, Result};
use crate::verify::family::TestFunction;
use crate::verify::path::{image_curve_length, CircleArc, Segment};

/// Default absolute tolerance per curve length.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Outcome of checking `ℓ(f(I₁)) ≤ bound · ℓ(f(T⁻))` for one map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub function_id: String,
    pub p: f64,
    pub length_i1: f64,
    pub length_t_minus: f64,
    pub ratio: f64,
    pub bound: BoundResult,
    pub pass: bool,
    pub error_i1: f64,
    pub error_t_minus: f64,
}

/// Checks the inequality against `inf_q N_p(q)`.
pub fn verify_inequality(f: &TestFunction, tol: f64) -> Result<RatioReport> {
    let p = f
        .real_pole()
        .ok_or_else(|| Error::Hypothesis(format!("{} has no pole on (0, 1)", f.id())))?;
    let bound = minimize_over_q(p, BoundKind::Theorem2Inf)?;
    verify_inequality_against(f, bound, tol)
}

/// Same check against a precomputed bound.
pub fn verify_inequality_against(
    f: &TestFunction,
    bound: BoundResult,
    tol: f64,
) -> Result<RatioReport> {
    let i1 = image_curve_length(f, &Segment::i1(), tol)?;
    let t_minus = image_curve_length(f, &CircleArc::t_minus(), tol)?;
    let ratio = i1.value / t_minus.value;
    Ok(RatioReport {
        function_id: f.id(),
        p: bound.p,
        length_i1: i1.value,
        length_t_minus: t_minus.value,
        ratio,
        bound,
        pass: ratio <= bound.value,
        error_i1: i1.error,
        error_t_minus: t_minus.error,
    })
}
