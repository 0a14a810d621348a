//! Geodesic segment versus Jordan arc with the same endpoints, for a map
//! whose pole lies off the arc.
//!
//! Everything here works in the normalized picture where both endpoints of
//! `J` lie on the imaginary axis, so the geodesic `γ` is a vertical segment,
//! the circle through it is the axis plus `∞`, and the reflection `Ĵ` is
//! `z ↦ −z̄`. Use [`theorem3_normalize`] to bring a general instance there.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{minimize_over_q, BoundKind};
use crate::complex::ComplexValue;
use crate::error::{Error, Result};
use crate::hyperbolic::hyp_dist_to_vertical_segment;
use crate::moebius::MoebiusMap;
use crate::verify::family::TestFunction;
use crate::verify::path::{image_curve_length, Segment};
use crate::verify::polyline::{ring_distance, winding_number, PolylineArc};

/// Default stand-in for `A₁`: the best published upper estimate.
pub const A1_PUBLISHED_UPPER: f64 = 17.45;

/// Points within this distance of the imaginary axis count as on it.
const AXIS_EPS: f64 = 1e-12;

/// The segment `[i·y_min, i·y_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerticalSegment {
    pub y_min: f64,
    pub y_max: f64,
}

impl VerticalSegment {
    fn contains(&self, z: Complex64) -> bool {
        z.re.abs() <= AXIS_EPS && z.im >= self.y_min && z.im <= self.y_max
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    OutsideHull,
    InsideHull,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Theorem3Constant {
    pub branch: Branch,
    pub constant: f64,
    pub tau: f64,
    pub tilde_gamma: VerticalSegment,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Theorem3Report {
    pub function_id: String,
    pub pole: (f64, f64),
    pub branch: Branch,
    pub tau: f64,
    pub tilde_gamma: VerticalSegment,
    pub a1_value: f64,
    pub constant: f64,
    pub length_gamma: f64,
    pub length_j: f64,
    pub ratio: f64,
    pub pass: bool,
    pub error_gamma: f64,
    pub error_j: f64,
}

/// A disk automorphism together with the transformed pole and arc.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedInstance {
    pub map: MoebiusMap,
    pub s: Complex64,
    pub arc: PolylineArc,
}

fn on_axis(z: Complex64) -> bool {
    z.re.abs() <= AXIS_EPS
}

fn require_normalized(arc: &PolylineArc) -> Result<()> {
    let (z1, z2) = arc.endpoints();
    if on_axis(z1) && on_axis(z2) {
        Ok(())
    } else {
        Err(Error::Hypothesis(
            "the arc endpoints must lie on the imaginary axis; normalize the instance first".into(),
        ))
    }
}

/// `C∖C₀`, where `C` is the imaginary axis through `∞` and `C₀` the
/// component of `C∖J` containing `2i`.
///
/// `C₀` runs from the topmost intersection of `J` with the axis through `∞`
/// to the lowest one, so its complement is the segment between them.
pub fn tilde_gamma(arc: &PolylineArc) -> Result<VerticalSegment> {
    require_normalized(arc)?;
    let v = arc.vertices();
    let mut ys = Vec::new();
    for (k, &z) in v.iter().enumerate() {
        if on_axis(z) {
            if k > 0 && k + 1 < v.len() {
                let (a, b) = (v[k - 1].re, v[k + 1].re);
                if (a > AXIS_EPS && b > AXIS_EPS) || (a < -AXIS_EPS && b < -AXIS_EPS) {
                    return Err(Error::Degenerate(format!(
                        "the arc touches the imaginary axis tangentially at {z}"
                    )));
                }
            }
            ys.push(z.im);
        }
    }
    for w in v.windows(2) {
        let (a, b) = (w[0], w[1]);
        if (a.re > AXIS_EPS && b.re < -AXIS_EPS) || (a.re < -AXIS_EPS && b.re > AXIS_EPS) {
            ys.push(a.im + (b.im - a.im) * (-a.re) / (b.re - a.re));
        }
    }
    let y_min = ys.iter().copied().fold(f64::INFINITY, f64::min).max(-1.0);
    let y_max = ys
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
        .min(1.0);
    Ok(VerticalSegment { y_min, y_max })
}

/// The closed polygon `J` followed by the reflected arc traversed backwards.
fn double_ring(arc: &PolylineArc) -> Vec<Complex64> {
    let v = arc.vertices();
    let mut ring = v.to_vec();
    ring.extend(v[1..v.len() - 1].iter().rev().map(|z| -z.conj()));
    ring
}

/// Classifies the pole against `J ∪ Ĵ` and picks the constant: `a1_value`
/// outside the hull, `inf_q N_τ(q)` inside it.
pub fn theorem3_constant(
    s: Complex64,
    arc: &PolylineArc,
    a1_value: f64,
) -> Result<Theorem3Constant> {
    if !(s.norm() < 1.0) {
        return Err(Error::NotInDomain {
            re: s.re,
            im: s.im,
            domain: "the open unit disk",
        });
    }
    if !(a1_value > 0.0) {
        return Err(Error::Domain {
            name: "a1_value",
            value: a1_value,
            range: "(0, inf)",
        });
    }
    let tg = tilde_gamma(arc)?;
    let v = arc.vertices();
    if ring_distance(v, s) <= AXIS_EPS || tg.contains(s) || winding_number(v, s) != 0 {
        return Err(Error::Hypothesis(format!(
            "the pole {s} lies in the hull of the arc and its axis segment"
        )));
    }
    let ring = double_ring(arc);
    if ring_distance(&ring, s) <= AXIS_EPS {
        return Err(Error::Degenerate(format!(
            "the pole {s} lies on the reflected arc"
        )));
    }
    let tau = hyp_dist_to_vertical_segment(s, tg.y_min, tg.y_max)?.tanh();
    let (branch, constant) = if winding_number(&ring, s) != 0 {
        (
            Branch::InsideHull,
            minimize_over_q(tau, BoundKind::Theorem2Inf)?.value,
        )
    } else {
        (Branch::OutsideHull, a1_value)
    };
    Ok(Theorem3Constant {
        branch,
        constant,
        tau,
        tilde_gamma: tg,
    })
}

/// Checks `ℓ(f(γ)) ≤ constant · ℓ(f(J))` with `s` the pole of `f`.
pub fn verify_theorem3(
    f: &TestFunction,
    arc: &PolylineArc,
    a1_value: f64,
    tol: f64,
) -> Result<Theorem3Report> {
    let s = f
        .pole()
        .finite()
        .ok_or_else(|| Error::Hypothesis(format!("{} has no pole in the disk", f.id())))?;
    let c = theorem3_constant(s, arc, a1_value)?;
    let (z1, z2) = arc.endpoints();
    let gamma = image_curve_length(f, &Segment::new(z1, z2), tol)?;
    let j = arc.image_length(f, tol)?;
    let ratio = gamma.value / j.value;
    Ok(Theorem3Report {
        function_id: f.id(),
        pole: (s.re, s.im),
        branch: c.branch,
        tau: c.tau,
        tilde_gamma: c.tilde_gamma,
        a1_value,
        constant: c.constant,
        length_gamma: gamma.value,
        length_j: j.value,
        ratio,
        pass: ratio <= c.constant,
        error_gamma: gamma.error,
        error_j: j.error,
    })
}

/// Moves both endpoints of `J` onto the imaginary axis by a disk automorphism:
/// `ζ₁ ↦ 0`, then a rotation puts the image of `ζ₂` on the positive axis.
///
/// The returned arc is the polyline through the images of the vertices.
/// Instances that are already normalized are returned unchanged.
pub fn theorem3_normalize(s: Complex64, arc: &PolylineArc) -> Result<NormalizedInstance> {
    if require_normalized(arc).is_ok() {
        return Ok(NormalizedInstance {
            map: MoebiusMap::identity(),
            s,
            arc: arc.clone(),
        });
    }
    let (z1, z2) = arc.endpoints();
    let to_origin = MoebiusMap::disk_automorphism_to_origin(z1)?;
    let w2 = to_origin.apply_finite(z2);
    let map = MoebiusMap::rotation(FRAC_PI_2 - w2.arg()).compose(&to_origin);
    let mut vertices: Vec<Complex64> = arc
        .vertices()
        .iter()
        .map(|&z| map.apply_finite(z))
        .collect();
    // snap the endpoints onto the axis; they are off by rounding only
    let last = vertices.len() - 1;
    vertices[0] = Complex64::new(0.0, 0.0);
    vertices[last] = Complex64::new(0.0, vertices[last].norm());
    let s = match map.apply(ComplexValue::Finite(s)) {
        ComplexValue::Finite(w) => w,
        ComplexValue::Infinity => unreachable!("disk automorphisms keep the disk bounded"),
    };
    Ok(NormalizedInstance {
        map,
        s,
        arc: PolylineArc::new(vertices)?,
    })
}
