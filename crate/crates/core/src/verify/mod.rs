//! Numerical checks of the length-distortion inequalities on concrete maps.
//!
//! [`inequality`] compares `ℓ(f(I₁))` against `ℓ(f(T⁻))` for the built-in
//! univalent families; [`theorem3`] handles the geodesic-versus-Jordan-arc
//! inequality for polyline arcs, including the choice of constant from the
//! position of the pole relative to the arc and its reflection.

pub mod family;
pub mod inequality;
pub mod path;
pub mod polyline;
pub mod theorem3;

pub use family::{Family, TestFunction};
pub use inequality::{verify_inequality, RatioReport};
pub use path::{image_curve_length, CircleArc, Path, Segment};
pub use polyline::{parse_polyline_instance, write_polyline_instance, PolylineArc};
pub use theorem3::{
    theorem3_constant, theorem3_normalize, tilde_gamma, verify_theorem3, Branch,
    NormalizedInstance, Theorem3Constant, Theorem3Report, VerticalSegment, A1_PUBLISHED_UPPER,
};
