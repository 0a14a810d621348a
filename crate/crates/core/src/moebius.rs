//! Fractional linear maps and the specific conformal maps built from them.
//!
//! The Cayley map sends the unit disk `D` onto the upper half-plane `H`, the
//! imaginary diameter `I₁ = (-i, i)` onto the positive imaginary axis and the
//! left half circle `T⁻` onto the positive real axis. The pole parameter
//! `p ∈ (0, 1)` is tied to `α = 2p/(1+p²)` so that `p` is the hyperbolic
//! midpoint of `0` and `α`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex::ComplexValue;
use crate::error::{check_open_unit, Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `z ↦ (az + b)/(cz + d)` with `ad − bc ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl MoebiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let det = a * d - b * c;
        let scale = a.norm() * d.norm() + b.norm() * c.norm();
        if !(det.norm() > 1e-14 * scale) {
            return Err(Error::Degenerate(format!(
                "Möbius coefficients have vanishing determinant {det}"
            )));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self {
            a: ONE,
            b: ZERO,
            c: ZERO,
            d: ONE,
        }
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, z: ComplexValue) -> ComplexValue {
        match z {
            ComplexValue::Infinity => {
                if self.c == ZERO {
                    ComplexValue::Infinity
                } else {
                    ComplexValue::from(self.a / self.c)
                }
            }
            ComplexValue::Finite(z) => {
                let den = self.c * z + self.d;
                if den == ZERO {
                    ComplexValue::Infinity
                } else {
                    ComplexValue::from((self.a * z + self.b) / den)
                }
            }
        }
    }

    /// Finite-input convenience used by the quadrature paths.
    pub fn apply_finite(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }

    /// `det / (cz + d)²`; infinite at the pole.
    pub fn derivative(&self, z: ComplexValue) -> ComplexValue {
        match z {
            ComplexValue::Infinity => {
                // Derivative in the sphere chart is not meaningful here.
                ComplexValue::Infinity
            }
            ComplexValue::Finite(z) => {
                let den = self.c * z + self.d;
                if den == ZERO {
                    ComplexValue::Infinity
                } else {
                    ComplexValue::from(self.determinant() / (den * den))
                }
            }
        }
    }

    /// `self ∘ other`, i.e. the coefficient-matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// The Cayley map `g(z) = i(1+iz)/(1−iz)`, an involution with `g(0) = i`.
    pub fn cayley() -> Self {
        Self {
            a: -ONE,
            b: I,
            c: -I,
            d: ONE,
        }
    }

    /// `T_a(z) = (z + ia)/(1 − iaz)`, a disk automorphism preserving `I₁`.
    pub fn disk_translation_along_i1(a: f64) -> Result<Self> {
        if !(a.abs() < 1.0) {
            return Err(Error::Domain {
                name: "a",
                value: a,
                range: "(-1, 1)",
            });
        }
        Ok(Self {
            a: ONE,
            b: I * a,
            c: -I * a,
            d: ONE,
        })
    }

    /// `z ↦ (z − w)/(1 − w̄z)`, the disk automorphism sending `w` to `0`.
    pub fn disk_automorphism_to_origin(w: Complex64) -> Result<Self> {
        if !(w.norm() < 1.0) {
            return Err(Error::NotInDomain {
                re: w.re,
                im: w.im,
                domain: "the unit disk",
            });
        }
        Ok(Self {
            a: ONE,
            b: -w,
            c: -w.conj(),
            d: ONE,
        })
    }

    pub fn rotation(theta: f64) -> Self {
        Self {
            a: Complex64::from_polar(1.0, theta),
            b: ZERO,
            c: ZERO,
            d: ONE,
        }
    }
}

/// The pole location `p` together with its companion `α = 2p/(1+p²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleParameter {
    p: f64,
    alpha: f64,
}

impl PoleParameter {
    pub fn new(p: f64) -> Result<Self> {
        Ok(Self {
            p,
            alpha: alpha_from_p(p)?,
        })
    }

    pub fn from_alpha(alpha: f64) -> Result<Self> {
        Ok(Self {
            p: p_from_alpha(alpha)?,
            alpha,
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `1/α = (1+p²)/(2p)`.
    pub fn excluded_center(&self) -> f64 {
        (1.0 + self.p * self.p) / (2.0 * self.p)
    }

    /// `√(α⁻²−1) = (1−p²)/(2p)`.
    pub fn excluded_radius(&self) -> f64 {
        (1.0 - self.p * self.p) / (2.0 * self.p)
    }
}

pub fn alpha_from_p(p: f64) -> Result<f64> {
    check_open_unit("p", p)?;
    Ok(2.0 * p / (1.0 + p * p))
}

/// Inverse of [`alpha_from_p`], the branch `p = α/(1+√(1−α²))` in `(0, 1)`.
pub fn p_from_alpha(alpha: f64) -> Result<f64> {
    check_open_unit("alpha", alpha)?;
    Ok(alpha / (1.0 + (1.0 - alpha * alpha).sqrt()))
}

pub fn cayley(z: ComplexValue) -> ComplexValue {
    MoebiusMap::cayley().apply(z)
}

/// `φ_α(z) = z(1 − αz)/(z − α)`, the map of `Ω = D ∖ Δ̄_p` onto `D`.
///
/// Evaluated wherever the formula is defined; membership in `Ω` is the
/// caller's concern.
pub fn phi_alpha(z: ComplexValue, alpha: f64) -> ComplexValue {
    match z {
        ComplexValue::Infinity => ComplexValue::Infinity,
        ComplexValue::Finite(z) => {
            let den = z - alpha;
            if den == ZERO {
                ComplexValue::Infinity
            } else {
                ComplexValue::from(z * (1.0 - alpha * z) / den)
            }
        }
    }
}

/// `ψ(z) = ((z + p)/(z + 1/p))²`, mapping `Ω₁` onto `H`.
pub fn psi_map(z: ComplexValue, p: f64) -> ComplexValue {
    match z {
        ComplexValue::Infinity => ComplexValue::ONE,
        ComplexValue::Finite(z) => {
            let den = z + 1.0 / p;
            if den == ZERO {
                ComplexValue::Infinity
            } else {
                let w = (z + p) / den;
                ComplexValue::from(w * w)
            }
        }
    }
}

/// `ψ` on the positive real axis, where it is real, positive and increasing.
pub fn psi_real(x: f64, p: f64) -> f64 {
    let w = (x + p) / (x + 1.0 / p);
    w * w
}

pub fn disk_automorphism_ta(z: ComplexValue, a: f64) -> Result<ComplexValue> {
    Ok(MoebiusMap::disk_translation_along_i1(a)?.apply(z))
}
