//! Hyperbolic distance and geodesics of the disk and half-plane, together
//! with the excluded disk `Δ̄_p` and the domains `Ω = D ∖ Δ̄_p` and
//! `Ω₁ = g(Ω)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex::ComplexValue;
use crate::error::{Error, Result};
use crate::minimize::{golden_section, Stop};
use crate::moebius::{MoebiusMap, PoleParameter};

/// Width of the "on the boundary" band used by the non-strict predicates.
pub const BOUNDARY_EPS: f64 = 1e-10;

/// Arcs with a radius beyond this are represented as straight geodesics.
pub const STRAIGHT_RADIUS: f64 = 1e8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    Disk,
    HalfPlane,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geodesic {
    /// A circular arc meeting the ambient boundary orthogonally.
    Arc {
        center: Complex64,
        radius: f64,
        endpoints: [Complex64; 2],
        ambient: Ambient,
    },
    /// A diameter of the disk, or a vertical ray of the half-plane (second
    /// endpoint at infinity).
    Straight {
        endpoints: [ComplexValue; 2],
        ambient: Ambient,
    },
}

impl Geodesic {
    /// The disk geodesic with the given ideal endpoints on the unit circle.
    pub fn disk_from_endpoints(e1: Complex64, e2: Complex64) -> Result<Self> {
        for e in [e1, e2] {
            if (e.norm() - 1.0).abs() > 1e-12 {
                return Err(Error::Domain {
                    name: "|endpoint|",
                    value: e.norm(),
                    range: "{1}",
                });
            }
        }
        let half_sep = 0.5 * (e1 * e2.conj()).arg().abs();
        if half_sep < 1e-15 {
            return Err(Error::Degenerate("coincident geodesic endpoints".into()));
        }
        let radius = half_sep.tan();
        if radius.abs() > STRAIGHT_RADIUS || !radius.is_finite() {
            return Ok(Geodesic::Straight {
                endpoints: [ComplexValue::Finite(e1), ComplexValue::Finite(e2)],
                ambient: Ambient::Disk,
            });
        }
        let mid = (e1 + e2) / (e1 + e2).norm();
        Ok(Geodesic::Arc {
            center: mid / half_sep.cos(),
            radius,
            endpoints: [e1, e2],
            ambient: Ambient::Disk,
        })
    }

    /// The disk geodesic through two interior points.
    pub fn disk_through(z1: Complex64, z2: Complex64) -> Result<Self> {
        let to_origin = MoebiusMap::disk_automorphism_to_origin(z1)?;
        let w = to_origin.apply_finite(z2);
        if w.norm() == 0.0 {
            return Err(Error::Degenerate("coincident points".into()));
        }
        let dir = w / w.norm();
        let back = to_origin.inverse();
        Self::disk_from_endpoints(back.apply_finite(dir), back.apply_finite(-dir))
    }

    pub fn ambient(&self) -> Ambient {
        match self {
            Geodesic::Arc { ambient, .. } | Geodesic::Straight { ambient, .. } => *ambient,
        }
    }

    pub fn endpoints(&self) -> [ComplexValue; 2] {
        match self {
            Geodesic::Arc { endpoints, .. } => [
                ComplexValue::Finite(endpoints[0]),
                ComplexValue::Finite(endpoints[1]),
            ],
            Geodesic::Straight { endpoints, .. } => *endpoints,
        }
    }

    /// Whether `z` lies on the geodesic within [`BOUNDARY_EPS`].
    pub fn contains(&self, z: Complex64) -> bool {
        let inside = match self.ambient() {
            Ambient::Disk => z.norm() < 1.0 + BOUNDARY_EPS,
            Ambient::HalfPlane => z.im > -BOUNDARY_EPS,
        };
        inside
            && match self {
                Geodesic::Arc { center, radius, .. } => {
                    ((z - center).norm() - radius).abs() <= BOUNDARY_EPS
                }
                Geodesic::Straight { endpoints, .. } => match endpoints {
                    [ComplexValue::Finite(a), ComplexValue::Finite(b)] => {
                        let d = b - a;
                        (d.conj() * (z - a)).im.abs() / d.norm() <= BOUNDARY_EPS
                    }
                    [ComplexValue::Finite(a), _] | [_, ComplexValue::Finite(a)] => {
                        (z.re - a.re).abs() <= BOUNDARY_EPS
                    }
                    _ => false,
                },
            }
    }

    /// `n` points spread along the part of the geodesic inside the ambient
    /// domain, endpoints excluded.
    pub fn sample(&self, n: usize) -> Vec<Complex64> {
        let ts = (1..=n).map(|k| k as f64 / (n + 1) as f64);
        match *self {
            Geodesic::Arc {
                center,
                radius,
                endpoints,
                ambient,
            } => {
                let a1 = (endpoints[0] - center).arg();
                let mut sweep = (endpoints[1] - center).arg() - a1;
                let inside = |z: Complex64| match ambient {
                    Ambient::Disk => z.norm() < 1.0,
                    Ambient::HalfPlane => z.im > 0.0,
                };
                sweep = sweep.rem_euclid(std::f64::consts::TAU);
                let mid = center + Complex64::from_polar(radius, a1 + 0.5 * sweep);
                if !inside(mid) {
                    sweep -= std::f64::consts::TAU;
                }
                ts.map(|t| center + Complex64::from_polar(radius, a1 + t * sweep))
                    .collect()
            }
            Geodesic::Straight { endpoints, .. } => match endpoints {
                [ComplexValue::Finite(a), ComplexValue::Finite(b)] => {
                    ts.map(|t| a + (b - a) * t).collect()
                }
                [ComplexValue::Finite(a), _] | [_, ComplexValue::Finite(a)] => {
                    ts.map(|t| Complex64::new(a.re, t / (1.0 - t))).collect()
                }
                _ => Vec::new(),
            },
        }
    }
}

/// `γ`: the disk geodesic through `p` symmetric about the real axis.
pub fn gamma_geodesic(p: f64) -> Result<Geodesic> {
    let pole = PoleParameter::new(p)?;
    let alpha = pole.alpha();
    let h = (1.0 - alpha * alpha).sqrt();
    Ok(Geodesic::Arc {
        center: Complex64::new(pole.excluded_center(), 0.0),
        radius: pole.excluded_radius(),
        endpoints: [Complex64::new(alpha, h), Complex64::new(alpha, -h)],
        ambient: Ambient::Disk,
    })
}

/// `σ = g(γ)`: the half-plane geodesic with endpoints `−p` and `−1/p`.
pub fn sigma_geodesic(p: f64) -> Result<Geodesic> {
    let pole = PoleParameter::new(p)?;
    Ok(Geodesic::Arc {
        center: Complex64::new(-pole.excluded_center(), 0.0),
        radius: pole.excluded_radius(),
        endpoints: [Complex64::new(-p, 0.0), Complex64::new(-1.0 / p, 0.0)],
        ambient: Ambient::HalfPlane,
    })
}

/// The closed disk `Δ̄_p = {|ζ − 1/α| ≤ √(α⁻²−1)}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExcludedDisk {
    pub p: f64,
    pub center: f64,
    pub radius: f64,
}

impl ExcludedDisk {
    pub fn new(p: f64) -> Result<Self> {
        let pole = PoleParameter::new(p)?;
        Ok(Self {
            p,
            center: pole.excluded_center(),
            radius: pole.excluded_radius(),
        })
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() <= self.radius
    }

    pub fn on_boundary(&self, z: Complex64) -> bool {
        ((z - self.center).norm() - self.radius).abs() <= BOUNDARY_EPS
    }

    /// Center and radius of `T_a(Δ̄_p)`.
    pub fn translated_along_i1(&self, a: f64) -> Result<(Complex64, f64)> {
        if !(a.abs() < 1.0) {
            return Err(Error::Domain {
                name: "a",
                value: a,
                range: "(-1, 1)",
            });
        }
        let s = 1.0 + a * a;
        let center = Complex64::new(self.center * (1.0 - a * a) / s, 2.0 * a / s);
        Ok((center, self.radius * (1.0 - a * a) / s))
    }
}

fn pseudo_distance(z: Complex64, w: Complex64) -> f64 {
    ((z - w) / (Complex64::new(1.0, 0.0) - z * w.conj())).norm()
}

fn require_disk(z: Complex64) -> Result<()> {
    if z.norm() < 1.0 {
        Ok(())
    } else {
        Err(Error::NotInDomain {
            re: z.re,
            im: z.im,
            domain: "the open unit disk",
        })
    }
}

/// `d_D(z, w) = arth |(z − w)/(1 − z w̄)|`.
pub fn hyp_dist_disk(z: Complex64, w: Complex64) -> Result<f64> {
    require_disk(z)?;
    require_disk(w)?;
    Ok(pseudo_distance(z, w).atanh())
}

/// Hyperbolic distance in the upper half-plane.
pub fn hyp_dist_halfplane(z: Complex64, w: Complex64) -> Result<f64> {
    for u in [z, w] {
        if !(u.im > 0.0) {
            return Err(Error::NotInDomain {
                re: u.re,
                im: u.im,
                domain: "the upper half-plane",
            });
        }
    }
    Ok(((z - w) / (z - w.conj())).norm().atanh())
}

/// Membership in `Ω = D∖Δ̄_p`. Points within [`BOUNDARY_EPS`] of `∂Δ_p`
/// count as excluded, so that `p` itself is rejected despite rounding.
pub fn in_omega(z: Complex64, p: f64) -> Result<bool> {
    let disk = ExcludedDisk::new(p)?;
    Ok(z.norm() < 1.0 && (z - disk.center).norm() > disk.radius + BOUNDARY_EPS)
}

/// Membership in `Ω₁`, with the same boundary convention as [`in_omega`].
pub fn in_omega1(z: Complex64, p: f64) -> Result<bool> {
    let disk = ExcludedDisk::new(p)?;
    Ok(z.im > 0.0 && (z + disk.center).norm() > disk.radius + BOUNDARY_EPS)
}

/// Euclidean distance from a point of `Ω₁` to `∂Ω₁`.
pub fn boundary_distance_omega1(z: Complex64, p: f64) -> Result<f64> {
    let disk = ExcludedDisk::new(p)?;
    Ok(z.im.min((z + disk.center).norm() - disk.radius))
}

/// Whether `Δ̄_{p2} ⊆ Δ̄_{p1}` for `p1 ≤ p2`.
pub fn disk_nesting(p1: f64, p2: f64) -> Result<bool> {
    let inv1 = 1.0 / crate::moebius::alpha_from_p(p1)?;
    let inv2 = 1.0 / crate::moebius::alpha_from_p(p2)?;
    if p1 > p2 {
        return Err(Error::Domain {
            name: "p1 - p2",
            value: p1 - p2,
            range: "(-1, 0]",
        });
    }
    let lhs = inv1 - inv2 + (inv2 * inv2 - 1.0).sqrt();
    let rhs = (inv1 * inv1 - 1.0).sqrt();
    // few-ulp slack for near-identical parameters
    Ok(lhs <= rhs + 4.0 * f64::EPSILON * inv1)
}

/// `inf_{y ∈ [y1, y2]} d_D(s, iy)`.
///
/// The distance from a point is convex along a geodesic, so after a 64-point
/// scan locates the best cell the minimum is refined by golden-section.
pub fn hyp_dist_to_vertical_segment(s: Complex64, y1: f64, y2: f64) -> Result<f64> {
    require_disk(s)?;
    if !(-1.0 <= y1 && y1 < y2 && y2 <= 1.0) {
        return Err(Error::Domain {
            name: "y1",
            value: y1,
            range: "-1 <= y1 < y2 <= 1",
        });
    }
    if s.re == 0.0 && (y1..=y2).contains(&s.im) {
        return Ok(0.0);
    }
    let rho = |y: f64| pseudo_distance(s, Complex64::new(0.0, y));
    const SCAN: usize = 64;
    let step = (y2 - y1) / (SCAN - 1) as f64;
    let (k, _) = (0..SCAN)
        .map(|k| (k, rho(y1 + step * k as f64)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("non-empty scan");
    let lo = y1 + step * k.saturating_sub(1) as f64;
    let hi = (y1 + step * (k + 1).min(SCAN - 1) as f64).min(y2);
    let refined = golden_section(rho, lo, hi, Stop::Absolute(1e-12));
    let best = refined.value.min(rho(lo)).min(rho(hi));
    Ok(best.atanh())
}
