//! Built-in univalent test maps.
//!
//! * `Mobius`: `z ↦ 1/(z − s)`, univalent on the whole sphere.
//! * `KoebeLike`: `k_r(w) = w/(w² − (r + 1/r)w + 1)` with `r = |s|`, composed
//!   with the rotation `w = e^{−i arg s} z`. Since `1/k_r(w) = w + 1/w − (r + 1/r)`
//!   and the Joukowski map is univalent on `D`, so is `k_r`; it sends the unit
//!   circle into the extended real line.
//! * `Identity`: no pole; used to sanity-check the length machinery.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex::ComplexValue;
use crate::error::{check_open_unit, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Identity,
    Mobius,
    #[serde(rename = "koebe")]
    KoebeLike,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Identity => "identity",
            Family::Mobius => "mobius",
            Family::KoebeLike => "koebe",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "mobius" => Ok(Family::Mobius),
            "koebe" => Ok(Family::KoebeLike),
            "identity" => Ok(Family::Identity),
            other => Err(format!(
                "unknown family `{other}` (expected mobius or koebe)"
            )),
        }
    }
}

/// A meromorphic univalent map of the unit disk with at most one simple pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestFunction {
    family: Family,
    pole: ComplexValue,
    /// `e^{−i arg s}` for the rotated Koebe-like map.
    rotation: Complex64,
    /// `r + 1/r` for the Koebe-like map.
    joukowski_shift: f64,
}

impl TestFunction {
    pub fn identity() -> Self {
        Self {
            family: Family::Identity,
            pole: ComplexValue::Infinity,
            rotation: Complex64::new(1.0, 0.0),
            joukowski_shift: 0.0,
        }
    }

    pub fn mobius(p: f64) -> Result<Self> {
        check_open_unit("p", p)?;
        Self::with_pole(Family::Mobius, Complex64::new(p, 0.0))
    }

    /// `k_p(z) = pz/((p − z)(1 − pz))`.
    pub fn koebe_like(p: f64) -> Result<Self> {
        check_open_unit("p", p)?;
        Self::with_pole(Family::KoebeLike, Complex64::new(p, 0.0))
    }

    pub fn new(family: Family, p: f64) -> Result<Self> {
        match family {
            Family::Identity => Ok(Self::identity()),
            _ => {
                check_open_unit("p", p)?;
                Self::with_pole(family, Complex64::new(p, 0.0))
            }
        }
    }

    /// A member of `family` with its pole at an arbitrary point `s` of the disk.
    pub fn with_pole(family: Family, s: Complex64) -> Result<Self> {
        if !(s.norm() < 1.0) || (family == Family::KoebeLike && s.norm() == 0.0) {
            return Err(Error::NotInDomain {
                re: s.re,
                im: s.im,
                domain: "the punctured unit disk",
            });
        }
        match family {
            Family::Identity => Ok(Self::identity()),
            Family::Mobius => Ok(Self {
                family,
                pole: ComplexValue::Finite(s),
                rotation: Complex64::new(1.0, 0.0),
                joukowski_shift: 0.0,
            }),
            Family::KoebeLike => {
                let r = s.norm();
                Ok(Self {
                    family,
                    pole: ComplexValue::Finite(s),
                    rotation: s.conj() / r,
                    joukowski_shift: r + 1.0 / r,
                })
            }
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn id(&self) -> String {
        self.family.to_string()
    }

    pub fn pole(&self) -> ComplexValue {
        self.pole
    }

    /// The pole as a real parameter, when it lies on `(0, 1)`.
    pub fn real_pole(&self) -> Option<f64> {
        match self.pole {
            ComplexValue::Finite(s) if s.im == 0.0 && s.re > 0.0 && s.re < 1.0 => Some(s.re),
            _ => None,
        }
    }

    pub fn evaluate(&self, z: ComplexValue) -> ComplexValue {
        let z = match z {
            ComplexValue::Finite(z) => z,
            ComplexValue::Infinity => {
                return match self.family {
                    Family::Identity => ComplexValue::Infinity,
                    Family::Mobius | Family::KoebeLike => ComplexValue::ZERO,
                }
            }
        };
        match self.family {
            Family::Identity => ComplexValue::Finite(z),
            Family::Mobius => ComplexValue::Finite(z - self.pole_finite()).recip(),
            Family::KoebeLike => {
                if ComplexValue::Finite(z) == self.pole {
                    return ComplexValue::Infinity;
                }
                let w = self.rotation * z;
                let den = w * w - self.joukowski_shift * w + 1.0;
                if den == Complex64::new(0.0, 0.0) {
                    ComplexValue::Infinity
                } else {
                    ComplexValue::from(w / den)
                }
            }
        }
    }

    pub fn derivative(&self, z: Complex64) -> ComplexValue {
        match self.family {
            Family::Identity => ComplexValue::ONE,
            Family::Mobius => {
                let d = z - self.pole_finite();
                ComplexValue::Finite(-(d * d)).recip()
            }
            Family::KoebeLike => {
                let w = self.rotation * z;
                let den = w * w - self.joukowski_shift * w + 1.0;
                let num = self.rotation * (1.0 - w * w);
                match ComplexValue::Finite(den * den).recip() {
                    ComplexValue::Finite(inv) => ComplexValue::from(num * inv),
                    ComplexValue::Infinity => ComplexValue::Infinity,
                }
            }
        }
    }

    fn pole_finite(&self) -> Complex64 {
        self.pole.finite().unwrap_or_default()
    }
}
