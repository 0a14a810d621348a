//! Bound functions for `A_p` and their minimization over the dyadic ratio `q`.
//!
//! | kind              | value                                             |
//! |-------------------|---------------------------------------------------|
//! | `Lower`           | `(1+p)²π/(4p)`                                    |
//! | `TheoremC`        | `min_q R_p(q)`, only for `p ∈ (√2−1, 1)`          |
//! | `Theorem1Closed`  | `((1+p²)/p)(1+√2+20/(3p))² log 2`                 |
//! | `Theorem2Inf`     | `inf_q N_p(q)`                                    |
//! | `A1Limit`         | `min_q log q · cot²(arccot((q+1)/(q−1))/4)`       |

use std::f64::consts::{LN_2, PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_open_unit, Error, Result};
use crate::harmonic::{arccot, m_p_of_q};
use crate::minimize::{golden_section, scan, GeometricGrid, Stop};

/// `√2 − 1`, the lower end of the range where `R_p` is defined.
pub const THEOREM_C_MIN_P: f64 = SQRT_2 - 1.0;

/// Arccot arguments beyond this flag the result as ill-conditioned.
pub const CONDITION_LIMIT: f64 = 1e6;

/// The `p` values tabulated in the reference comparison table.
pub const TABLE1_P: [f64; 11] = [0.999, 0.99, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1];

/// Numerator coefficients of `H(p)`, constant term first.
pub const H_NUMERATOR: [i64; 5] = [17, 50, 46, 50, 17];
/// Denominator coefficients of `H(p)`, constant term first.
pub const H_DENOMINATOR: [i64; 3] = [5, 8, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    TheoremC,
    Theorem1Closed,
    Theorem2Inf,
    A1Limit,
}

impl BoundKind {
    pub fn is_minimized(self) -> bool {
        matches!(
            self,
            BoundKind::TheoremC | BoundKind::Theorem2Inf | BoundKind::A1Limit
        )
    }

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            BoundKind::Lower => "lb",
            BoundKind::TheoremC => "thmC",
            BoundKind::Theorem1Closed => "thm1",
            BoundKind::Theorem2Inf => "thm2",
            BoundKind::A1Limit => "a1",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for BoundKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "lb" | "lower" => Ok(BoundKind::Lower),
            "thmC" | "thmc" | "theorem_c" => Ok(BoundKind::TheoremC),
            "thm1" | "theorem1_closed" => Ok(BoundKind::Theorem1Closed),
            "thm2" | "theorem2_inf" => Ok(BoundKind::Theorem2Inf),
            "a1" | "a1_limit" => Ok(BoundKind::A1Limit),
            other => Err(format!(
                "unknown bound kind `{other}` (expected lb, thmC, thm1, thm2 or a1)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub p: f64,
    pub kind: BoundKind,
    pub q_star: Option<f64>,
    pub value: f64,
    pub evaluations: usize,
    pub bracket: Option<(f64, f64)>,
    /// Set when the arccot argument at `q_star` exceeds [`CONDITION_LIMIT`].
    pub ill_conditioned: bool,
}

fn check_q(q: f64) -> Result<()> {
    if q > 1.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "q",
            value: q,
            range: "(1, ∞)",
        })
    }
}

fn cot_squared(x: f64) -> f64 {
    let t = x.tan();
    1.0 / (t * t)
}

pub fn lower_bound(p: f64) -> Result<f64> {
    check_open_unit("p", p)?;
    Ok((1.0 + p).powi(2) * PI / (4.0 * p))
}

/// `R_p(q)`, the earlier bound valid for `p ∈ (√2−1, 1)`.
pub fn r_p_of_q(p: f64, q: f64) -> Result<f64> {
    if !(p > THEOREM_C_MIN_P && p < 1.0) {
        return Err(Error::Domain {
            name: "p",
            value: p,
            range: "(√2−1, 1)",
        });
    }
    check_q(q)?;
    let ratio = (q - 1.0) / (q + 1.0);
    let angle = 0.25 * (ratio.atan() - ((1.0 - p * p) * ratio / (2.0 * p)).atan());
    Ok((1.0 + p * p) * q.ln() / (2.0 * p) * cot_squared(angle))
}

/// `N_p(q) = ((1+p²) log q / 2p) · cot²(arccot(M_p(q))/4)`.
pub fn n_p_of_q(p: f64, q: f64) -> Result<f64> {
    let m = m_p_of_q(p, q)?;
    Ok((1.0 + p * p) * q.ln() / (2.0 * p) * cot_squared(0.25 * arccot(m)))
}

pub fn theorem1_closed_form(p: f64) -> Result<f64> {
    check_open_unit("p", p)?;
    let inner = 1.0 + SQRT_2 + 20.0 / (3.0 * p);
    Ok((1.0 + p * p) / p * inner * inner * LN_2)
}

fn horner(coefficients: &[i64], x: f64) -> f64 {
    coefficients
        .iter()
        .rev()
        .fold(0.0, |acc, &c| acc * x + c as f64)
}

/// `H(p) = (17p⁴+50p³+46p²+50p+17)/(5p²+8p+5)` on `(0, 1]`.
pub fn h_of_p(p: f64) -> Result<f64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Domain {
            name: "p",
            value: p,
            range: "(0, 1]",
        });
    }
    Ok(horner(&H_NUMERATOR, p) / horner(&H_DENOMINATOR, p))
}

/// `G(x) = cot(k · arccot x)` for `x > 0`, `0 < k < 1`.
pub fn g_of_x(x: f64, k: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain {
            name: "x",
            value: x,
            range: "(0, ∞)",
        });
    }
    check_open_unit("k", k)?;
    Ok(1.0 / (k * arccot(x)).tan())
}

/// Lower and upper linear envelopes of `G`:
/// `cot(kπ/2) + kx/sin²(kπ/2)` and `cot(kπ/2) + x/k`.
pub fn g_envelopes(x: f64, k: f64) -> (f64, f64) {
    let half = k * PI / 2.0;
    let base = 1.0 / half.tan();
    (base + k * x / half.sin().powi(2), base + x / k)
}

/// `p → 1⁻` limit of `N_p(q)`.
pub fn a1_limit(q: f64) -> Result<f64> {
    check_q(q)?;
    Ok(q.ln() * cot_squared(0.25 * arccot((q + 1.0) / (q - 1.0))))
}

/// Evaluates a non-minimized kind directly, or the integrand of a minimized
/// kind at `q`.
pub fn bound_at(p: f64, kind: BoundKind, q: f64) -> Result<f64> {
    match kind {
        BoundKind::Lower => lower_bound(p),
        BoundKind::Theorem1Closed => theorem1_closed_form(p),
        BoundKind::TheoremC => r_p_of_q(p, q),
        BoundKind::Theorem2Inf => n_p_of_q(p, q),
        BoundKind::A1Limit => a1_limit(q),
    }
}

fn arccot_argument(p: f64, kind: BoundKind, q: f64) -> f64 {
    match kind {
        BoundKind::Theorem2Inf => m_p_of_q(p, q).unwrap_or(f64::INFINITY),
        BoundKind::A1Limit => (q + 1.0) / (q - 1.0),
        _ => 0.0,
    }
}

/// The `q` grid used by [`minimize_over_q`]: `1+1e−6 … 1e8`, 64 per decade.
pub fn default_q_grid() -> GeometricGrid {
    GeometricGrid {
        lo: 1.0 + 1e-6,
        hi: 1e8,
        per_decade: 64,
        offset: 1.0,
    }
}

pub fn minimize_over_q(p: f64, kind: BoundKind) -> Result<BoundResult> {
    minimize_over_q_on(p, kind, &default_q_grid())
}

/// Scans `grid` for the smallest value of the bound, then refines between
/// the neighbouring grid points by golden-section to relative `1e−10` in `q`.
pub fn minimize_over_q_on(p: f64, kind: BoundKind, grid: &GeometricGrid) -> Result<BoundResult> {
    if !kind.is_minimized() {
        return Ok(BoundResult {
            p,
            kind,
            q_star: None,
            value: bound_at(p, kind, 2.0)?,
            evaluations: 1,
            bracket: None,
            ill_conditioned: false,
        });
    }
    // surface domain errors before scanning
    bound_at(p, kind, 2.0)?;

    let f = |q: f64| bound_at(p, kind, q).unwrap_or(f64::INFINITY);
    let points = grid.points();
    let (best, values) = scan(f, &points);
    let k = best.ok_or_else(|| {
        Error::Minimizer(format!("no finite {kind} value on the q grid at p = {p}"))
    })?;
    if k == 0 || k + 1 == points.len() {
        return Err(Error::Minimizer(format!(
            "grid minimum of {kind} at p = {p} sits at the bracket edge q = {}",
            points[k]
        )));
    }
    let (lo, hi) = (points[k - 1], points[k + 1]);
    let refined = golden_section(f, lo, hi, Stop::Relative(1e-10));
    let (q_star, value) = if refined.value <= values[k] {
        (refined.x, refined.value)
    } else {
        (points[k], values[k])
    };
    Ok(BoundResult {
        p,
        kind,
        q_star: Some(q_star),
        value,
        evaluations: points.len() + refined.evaluations,
        bracket: Some((lo, hi)),
        ill_conditioned: arccot_argument(p, kind, q_star) > CONDITION_LIMIT,
    })
}

/// Rounds half-up to three decimals.
pub fn round3(x: f64) -> f64 {
    (x * 1000.0 + 0.5).floor() / 1000.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub p: f64,
    pub lower: f64,
    /// Absent for `p ≤ √2−1`.
    pub theorem_c: Option<f64>,
    pub theorem1: f64,
    pub theorem2: f64,
}

impl Table1Row {
    pub fn rounded(&self) -> Self {
        Self {
            p: self.p,
            lower: round3(self.lower),
            theorem_c: self.theorem_c.map(round3),
            theorem1: round3(self.theorem1),
            theorem2: round3(self.theorem2),
        }
    }
}

pub fn table1_row(p: f64) -> Result<Table1Row> {
    let theorem_c = if p > THEOREM_C_MIN_P {
        Some(minimize_over_q(p, BoundKind::TheoremC)?.value)
    } else {
        None
    };
    Ok(Table1Row {
        p,
        lower: lower_bound(p)?,
        theorem_c,
        theorem1: theorem1_closed_form(p)?,
        theorem2: minimize_over_q(p, BoundKind::Theorem2Inf)?.value,
    })
}

/// Unrounded rows in input order; rows are computed in parallel.
pub fn table1(p_list: &[f64]) -> Result<Vec<Table1Row>> {
    p_list.par_iter().map(|&p| table1_row(p)).collect()
}
