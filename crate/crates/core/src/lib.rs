//! Length-distortion bounds for meromorphic univalent maps of the unit disk
//! with a simple pole at `p ∈ (0, 1)`.
//!
//! The crate evaluates and minimizes the upper bounds for the ratio
//! `ℓ(f(I₁)) / ℓ(f(T⁻))`, computes the harmonic measures the bounds are built
//! from (exactly and by walk-on-spheres), and checks the inequalities
//! numerically on concrete univalent maps and polyline Jordan arcs.

// `!(x > 0.0)` is used on purpose throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod complex;
pub mod error;
pub mod harmonic;
pub mod hyperbolic;
pub mod minimize;
pub mod moebius;
pub mod quadrature;
pub mod verify;

pub use complex::ComplexValue;
pub use error::{Error, Result};
pub use num_complex::Complex64;
