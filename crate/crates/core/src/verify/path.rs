use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::complex::ComplexValue;
use crate::error::{Error, Result};
use crate::quadrature::{adaptive_simpson, Integral};
use crate::verify::family::TestFunction;

/// Minimum distance between an integration path and the pole.
pub const POLE_GUARD: f64 = 1e-6;

/// A piecewise-smooth parametrized path on `[0, 1]`.
pub trait Path {
    fn point(&self, t: f64) -> Complex64;
    fn velocity(&self, t: f64) -> Complex64;
    /// Euclidean distance from `z` to the trace of the path.
    fn distance_to(&self, z: Complex64) -> f64;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub from: Complex64,
    pub to: Complex64,
}

impl Segment {
    pub fn new(from: Complex64, to: Complex64) -> Self {
        Self { from, to }
    }

    /// The diameter `I₁` from `−i` to `i`.
    pub fn i1() -> Self {
        Self::new(Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0))
    }
}

impl Path for Segment {
    fn point(&self, t: f64) -> Complex64 {
        self.from + (self.to - self.from) * t
    }

    fn velocity(&self, _t: f64) -> Complex64 {
        self.to - self.from
    }

    fn distance_to(&self, z: Complex64) -> f64 {
        let d = self.to - self.from;
        let len2 = d.norm_sqr();
        if len2 == 0.0 {
            return (z - self.from).norm();
        }
        let t = ((z - self.from) * d.conj()).re / len2;
        (z - self.point(t.clamp(0.0, 1.0))).norm()
    }
}

/// `center + radius·e^{i(start + t·sweep)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleArc {
    pub center: Complex64,
    pub radius: f64,
    pub start: f64,
    pub sweep: f64,
}

impl CircleArc {
    /// The left half circle `T⁻`, traversed from `i` through `−1` to `−i`.
    pub fn t_minus() -> Self {
        Self {
            center: Complex64::new(0.0, 0.0),
            radius: 1.0,
            start: FRAC_PI_2,
            sweep: PI,
        }
    }
}

impl Path for CircleArc {
    fn point(&self, t: f64) -> Complex64 {
        self.center + Complex64::from_polar(self.radius, self.start + t * self.sweep)
    }

    fn velocity(&self, t: f64) -> Complex64 {
        Complex64::new(0.0, self.sweep)
            * Complex64::from_polar(self.radius, self.start + t * self.sweep)
    }

    fn distance_to(&self, z: Complex64) -> f64 {
        let rel = z - self.center;
        let offset = if self.sweep >= 0.0 {
            (rel.arg() - self.start).rem_euclid(std::f64::consts::TAU)
        } else {
            (self.start - rel.arg()).rem_euclid(std::f64::consts::TAU)
        };
        if rel.norm() > 0.0 && offset <= self.sweep.abs() {
            (rel.norm() - self.radius).abs()
        } else {
            (z - self.point(0.0))
                .norm()
                .min((z - self.point(1.0)).norm())
        }
    }
}

/// `ℓ(f(path)) = ∫ |f′(path(t))| |path′(t)| dt` by adaptive Simpson.
pub fn image_curve_length<P: Path + ?Sized>(
    f: &TestFunction,
    path: &P,
    tol: f64,
) -> Result<Integral> {
    if let ComplexValue::Finite(pole) = f.pole() {
        let distance = path.distance_to(pole);
        if distance < POLE_GUARD {
            return Err(Error::PoleProximity {
                distance,
                guard: POLE_GUARD,
            });
        }
    }
    adaptive_simpson(
        |t| match f.derivative(path.point(t)) {
            ComplexValue::Finite(d) => d.norm() * path.velocity(t).norm(),
            ComplexValue::Infinity => f64::INFINITY,
        },
        0.0,
        1.0,
        tol,
    )
}
