//! Polyline Jordan arcs inside the unit disk, and the plain-text instance
//! format:
//!
//! ```text
//! pole 0.3 0.0
//! 0.0 -0.5
//! -0.6 -0.5
//! -0.6 0.5
//! 0.0 0.5
//! ```
//!
//! The header gives the pole `s`; each following line is one vertex `re im`.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::moebius::MoebiusMap;
use crate::quadrature::Integral;
use crate::verify::family::TestFunction;
use crate::verify::path::{image_curve_length, Segment};

#[derive(Debug, Clone, PartialEq)]
pub struct PolylineArc {
    vertices: Vec<Complex64>,
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn orient(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    cross(b - a, c - a)
}

fn on_segment(a: Complex64, b: Complex64, c: Complex64) -> bool {
    c.re >= a.re.min(b.re)
        && c.re <= a.re.max(b.re)
        && c.im >= a.im.min(b.im)
        && c.im <= a.im.max(b.im)
}

/// Closed-segment intersection test, collinear overlaps included.
pub(crate) fn segments_intersect(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}

impl PolylineArc {
    /// Validates that the vertices lie strictly inside the disk and that the
    /// polyline does not intersect itself.
    pub fn new(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::Degenerate(
                "a polyline needs at least two vertices".into(),
            ));
        }
        if let Some(v) = vertices.iter().find(|v| !(v.norm() < 1.0)) {
            return Err(Error::NotInDomain {
                re: v.re,
                im: v.im,
                domain: "the open unit disk",
            });
        }
        let n = vertices.len() - 1;
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[i + 1]);
            if a == b {
                return Err(Error::Degenerate(format!("repeated vertex {a}")));
            }
            if i + 1 < n {
                // adjacent edges may only share their common vertex
                let c = vertices[i + 2];
                if orient(a, b, c) == 0.0 && ((b - a) * (c - b).conj()).re < 0.0 {
                    return Err(Error::Degenerate(format!("polyline folds back at {b}")));
                }
            }
            for j in i + 2..n {
                let (c, d) = (vertices[j], vertices[j + 1]);
                if segments_intersect(a, b, c, d) {
                    return Err(Error::Degenerate(format!(
                        "edges {i} and {j} of the polyline intersect"
                    )));
                }
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn endpoints(&self) -> (Complex64, Complex64) {
        (self.vertices[0], *self.vertices.last().expect("non-empty"))
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment::new(w[0], w[1]))
    }

    /// Mirror image across the imaginary axis, `z ↦ −z̄`.
    pub fn reflect(&self) -> Self {
        Self {
            vertices: self.vertices.iter().map(|z| -z.conj()).collect(),
        }
    }

    /// The polyline through the images of the vertices under `map`.
    pub fn map_vertices(&self, map: &MoebiusMap) -> Result<Self> {
        Self::new(self.vertices.iter().map(|&z| map.apply_finite(z)).collect())
    }

    pub fn distance_to(&self, z: Complex64) -> f64 {
        use crate::verify::path::Path;
        self.segments()
            .map(|s| s.distance_to(z))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn euclidean_length(&self) -> f64 {
        self.vertices.windows(2).map(|w| (w[1] - w[0]).norm()).sum()
    }

    /// `ℓ(f(J))`, summed over the edges.
    pub fn image_length(&self, f: &TestFunction, tol: f64) -> Result<Integral> {
        let per_edge = tol / (self.vertices.len() - 1) as f64;
        let mut total = Integral {
            value: 0.0,
            error: 0.0,
            evaluations: 0,
        };
        for seg in self.segments() {
            let part = image_curve_length(f, &seg, per_edge)?;
            total.value += part.value;
            total.error += part.error;
            total.evaluations += part.evaluations;
        }
        Ok(total)
    }
}

/// Winding number of the closed polygon through `ring` (closed implicitly)
/// around `z`.
pub fn winding_number(ring: &[Complex64], z: Complex64) -> i32 {
    let mut wn = 0;
    for k in 0..ring.len() {
        let a = ring[k];
        let b = ring[(k + 1) % ring.len()];
        if a.im <= z.im {
            if b.im > z.im && orient(a, b, z) > 0.0 {
                wn += 1;
            }
        } else if b.im <= z.im && orient(a, b, z) < 0.0 {
            wn -= 1;
        }
    }
    wn
}

/// Distance from `z` to the closed polygon through `ring`.
pub fn ring_distance(ring: &[Complex64], z: Complex64) -> f64 {
    use crate::verify::path::Path;
    (0..ring.len())
        .map(|k| Segment::new(ring[k], ring[(k + 1) % ring.len()]).distance_to(z))
        .fold(f64::INFINITY, f64::min)
}

pub fn parse_polyline_instance(text: &str) -> Result<(Complex64, PolylineArc)> {
    let mut pole = None;
    let mut vertices = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let numbers = |parts: &[&str]| -> Result<Complex64> {
            match parts {
                [re, im] => {
                    let parse = |s: &str| {
                        s.parse::<f64>().map_err(|e| Error::Parse {
                            line: idx + 1,
                            message: format!("`{s}`: {e}"),
                        })
                    };
                    Ok(Complex64::new(parse(re)?, parse(im)?))
                }
                _ => Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected two numbers, found `{line}`"),
                }),
            }
        };
        if pole.is_none() {
            if fields.first() != Some(&"pole") {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: "the first line must be `pole <re> <im>`".into(),
                });
            }
            pole = Some(numbers(&fields[1..])?);
        } else {
            vertices.push(numbers(&fields)?);
        }
    }
    let pole = pole.ok_or(Error::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    Ok((pole, PolylineArc::new(vertices)?))
}

pub fn write_polyline_instance(pole: Complex64, arc: &PolylineArc) -> String {
    let mut out = format!("pole {} {}\n", pole.re, pole.im);
    for v in arc.vertices() {
        let _ = writeln!(out, "{} {}", v.re, v.im);
    }
    out
}
