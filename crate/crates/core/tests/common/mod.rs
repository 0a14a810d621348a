//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's numerical kernels.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_disk_point(rng: &mut ChaCha8Rng, r: f64) -> Complex64 {
    loop {
        let z = c(rng.random_range(-r..r), rng.random_range(-r..r));
        if z.norm() < r {
            return z;
        }
    }
}

/// Center and radius of the circle through three points.
pub fn circumcircle(a: Complex64, b: Complex64, d: Complex64) -> (Complex64, f64) {
    let (ax, ay, bx, by, dx, dy) = (a.re, a.im, b.re, b.im, d.re, d.im);
    let den = 2.0 * (ax * (by - dy) + bx * (dy - ay) + dx * (ay - by));
    let (a2, b2, d2) = (a.norm_sqr(), b.norm_sqr(), d.norm_sqr());
    let ux = (a2 * (by - dy) + b2 * (dy - ay) + d2 * (ay - by)) / den;
    let uy = (a2 * (dx - bx) + b2 * (ax - dx) + d2 * (bx - ax)) / den;
    let center = c(ux, uy);
    (center, (a - center).norm())
}

/// Length of the circular arc from `start` to `end` that passes through `mid`.
pub fn arc_length_through(start: Complex64, mid: Complex64, end: Complex64) -> f64 {
    let (center, radius) = circumcircle(start, mid, end);
    let angle = |z: Complex64| (z - center).arg();
    let ccw = |from: f64, to: f64| (to - from).rem_euclid(2.0 * PI);
    let sweep = ccw(angle(start), angle(end));
    let sweep = if ccw(angle(start), angle(mid)) <= sweep {
        sweep
    } else {
        2.0 * PI - sweep
    };
    radius * sweep
}

/// Exact length of the image of a segment or circular arc under
/// `z ↦ 1/(z − s)`, given three points of the curve in order.
pub fn moebius_image_length(s: Complex64, start: Complex64, mid: Complex64, end: Complex64) -> f64 {
    let f = |z: Complex64| 1.0 / (z - s);
    arc_length_through(f(start), f(mid), f(end))
}

/// Even-odd ray-casting test for a closed polygon.
pub fn even_odd_inside(ring: &[Complex64], z: Complex64) -> bool {
    let mut inside = false;
    let n = ring.len();
    for k in 0..n {
        let (a, b) = (ring[k], ring[(k + 1) % n]);
        if (a.im > z.im) != (b.im > z.im) {
            let x = a.re + (z.im - a.im) * (b.re - a.re) / (b.im - a.im);
            if x > z.re {
                inside = !inside;
            }
        }
    }
    inside
}

/// `arth |(z − w)/(1 − z w̄)|`.
pub fn pseudo_hyperbolic_distance(z: Complex64, w: Complex64) -> f64 {
    ((z - w) / (1.0 - z * w.conj())).norm().atanh()
}

/// Brute-force `min_y d_D(s, iy)` over `n` equally spaced points of `[y1, y2]`.
pub fn brute_force_segment_distance(s: Complex64, y1: f64, y2: f64, n: usize) -> f64 {
    (0..n)
        .map(|k| y1 + (y2 - y1) * k as f64 / (n - 1) as f64)
        .map(|y| ((s - c(0.0, y)) / (1.0 - s * c(0.0, -y))).norm())
        .fold(f64::INFINITY, f64::min)
        .atanh()
}

/// Brute-force distance from `s` to the hyperbolic segment joining `z1` and
/// `z2`, parametrized on the circle orthogonal to the unit circle.
pub fn brute_force_geodesic_distance(s: Complex64, z1: Complex64, z2: Complex64, n: usize) -> f64 {
    // collinear with the origin: the geodesic is a diameter
    let cross = z1.re * z2.im - z1.im * z2.re;
    let points: Box<dyn Fn(f64) -> Complex64> = if cross.abs() < 1e-14 {
        Box::new(move |t| z1 + (z2 - z1) * t)
    } else {
        // 2 Re(c z̄_k) = 1 + |z_k|² for k = 1, 2
        let (r1, r2) = (1.0 + z1.norm_sqr(), 1.0 + z2.norm_sqr());
        let det = 2.0 * (z1.re * z2.im - z1.im * z2.re);
        let center = c(
            (r1 * z2.im - r2 * z1.im) / det,
            (z1.re * r2 - z2.re * r1) / det,
        );
        let radius = (center.norm_sqr() - 1.0).sqrt();
        let t1 = (z1 - center).arg();
        let mut t2 = (z2 - center).arg();
        // the short way round stays inside the disk
        if t2 - t1 > PI {
            t2 -= 2.0 * PI;
        } else if t1 - t2 > PI {
            t2 += 2.0 * PI;
        }
        Box::new(move |t| center + Complex64::from_polar(radius, t1 + (t2 - t1) * t))
    };
    (0..n)
        .map(|k| pseudo_hyperbolic_distance(s, points(k as f64 / (n - 1) as f64)))
        .fold(f64::INFINITY, f64::min)
}

/// `ω(z, [a, b], H)` as the argument of `(b − z)/(a − z)` over `π`.
pub fn halfplane_measure(z: Complex64, a: f64, b: f64) -> f64 {
    ((c(b, 0.0) - z) / (c(a, 0.0) - z)).arg() / PI
}

/// `((z + p)/(z + 1/p))²`, written out from scratch.
pub fn psi(z: Complex64, p: f64) -> Complex64 {
    let w = (z + p) / (z + 1.0 / p);
    w * w
}

/// `ω(z, [a, b], Ω₁)` by pulling back through `ψ`.
pub fn omega1_measure(z: Complex64, a: f64, b: f64, p: f64) -> f64 {
    let pa = psi(c(a, 0.0), p).re;
    let pb = psi(c(b, 0.0), p).re;
    halfplane_measure(psi(z, p), pa, pb)
}
