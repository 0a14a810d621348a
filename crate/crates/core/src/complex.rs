//! Points of the Riemann sphere.
//!
//! Every map in this crate is total on the sphere, so values carry an explicit
//! point at infinity instead of relying on IEEE infinities leaking through
//! complex division.

use std::fmt;
use std::ops::Neg;

use num_complex::Complex64;

/// A point of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComplexValue {
    Finite(Complex64),
    Infinity,
}

impl ComplexValue {
    pub const ZERO: Self = ComplexValue::Finite(Complex64::new(0.0, 0.0));
    pub const ONE: Self = ComplexValue::Finite(Complex64::new(1.0, 0.0));
    pub const I: Self = ComplexValue::Finite(Complex64::new(0.0, 1.0));

    /// Builds a finite point. Non-finite parts collapse to [`ComplexValue::Infinity`].
    pub fn new(re: f64, im: f64) -> Self {
        Self::from(Complex64::new(re, im))
    }

    pub fn real(x: f64) -> Self {
        Self::new(x, 0.0)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ComplexValue::Infinity)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match *self {
            ComplexValue::Finite(z) => Some(z),
            ComplexValue::Infinity => None,
        }
    }

    /// `1/z` with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(self) -> Self {
        match self {
            ComplexValue::Infinity => Self::ZERO,
            ComplexValue::Finite(z) if z == Complex64::new(0.0, 0.0) => ComplexValue::Infinity,
            ComplexValue::Finite(z) => ComplexValue::Finite(z.inv()),
        }
    }

    /// Sum on the sphere; `∞ + ∞` is indeterminate and yields `None`.
    pub fn checked_add(self, other: Self) -> Option<Self> {
        match (self, other) {
            (ComplexValue::Finite(a), ComplexValue::Finite(b)) => Some(Self::from(a + b)),
            (ComplexValue::Infinity, ComplexValue::Infinity) => None,
            _ => Some(ComplexValue::Infinity),
        }
    }

    /// Product on the sphere; `0 · ∞` yields `None`.
    pub fn checked_mul(self, other: Self) -> Option<Self> {
        match (self, other) {
            (ComplexValue::Finite(a), ComplexValue::Finite(b)) => Some(Self::from(a * b)),
            (ComplexValue::Finite(a), ComplexValue::Infinity)
            | (ComplexValue::Infinity, ComplexValue::Finite(a)) => {
                if a == Complex64::new(0.0, 0.0) {
                    None
                } else {
                    Some(ComplexValue::Infinity)
                }
            }
            (ComplexValue::Infinity, ComplexValue::Infinity) => Some(ComplexValue::Infinity),
        }
    }

    /// Quotient on the sphere; `0/0` and `∞/∞` yield `None`.
    pub fn checked_div(self, other: Self) -> Option<Self> {
        match (self, other) {
            (ComplexValue::Infinity, ComplexValue::Infinity) => None,
            (ComplexValue::Finite(a), ComplexValue::Finite(b))
                if a == Complex64::new(0.0, 0.0) && b == Complex64::new(0.0, 0.0) =>
            {
                None
            }
            _ => self.checked_mul(other.recip()),
        }
    }

    /// Chordal distance on the sphere; bounded by 2 and defined at infinity.
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        match (self, other) {
            (ComplexValue::Infinity, ComplexValue::Infinity) => 0.0,
            (ComplexValue::Finite(z), ComplexValue::Infinity)
            | (ComplexValue::Infinity, ComplexValue::Finite(z)) => {
                2.0 / (1.0 + z.norm_sqr()).sqrt()
            }
            (ComplexValue::Finite(z), ComplexValue::Finite(w)) => {
                2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()).sqrt() * (1.0 + w.norm_sqr()).sqrt())
            }
        }
    }
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        if z.re.is_finite() && z.im.is_finite() {
            ComplexValue::Finite(z)
        } else {
            ComplexValue::Infinity
        }
    }
}

impl From<f64> for ComplexValue {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl Neg for ComplexValue {
    type Output = Self;

    fn neg(self) -> Self {
        match self {
            ComplexValue::Finite(z) => ComplexValue::Finite(-z),
            ComplexValue::Infinity => ComplexValue::Infinity,
        }
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexValue::Finite(z) => write!(f, "{}{:+}i", z.re, z.im),
            ComplexValue::Infinity => f.write_str("∞"),
        }
    }
}
