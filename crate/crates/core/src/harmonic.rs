//! Harmonic measure of real segments in the upper half-plane `H` and in the
//! hyperbolic half-plane `Ω₁`, plus a walk-on-spheres estimator used as an
//! independent check of the exact formulas.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::ComplexValue;
use crate::error::{check_open_unit, Error, Result};
use crate::hyperbolic::{boundary_distance_omega1, in_omega1, ExcludedDisk};
use crate::moebius::{psi_map, psi_real};

/// Default absorption distance for walk-on-spheres.
pub const WOS_EPS: f64 = 1e-6;
/// Walks still running after this many jumps are discarded.
pub const WOS_MAX_STEPS: u64 = 1_000_000;

/// `arccot x ∈ (0, π)`; positive arguments land in `(0, π/2)`.
pub fn arccot(x: f64) -> f64 {
    f64::atan2(1.0, x)
}

/// `ω(z, [a, b], H) = arg((b − z)/(a − z)) / π`.
pub fn hm_halfplane(z: Complex64, a: f64, b: f64) -> Result<f64> {
    if !(z.im > 0.0) {
        return Err(Error::NotInDomain {
            re: z.re,
            im: z.im,
            domain: "the upper half-plane",
        });
    }
    if !(a < b) {
        return Err(Error::Domain {
            name: "b - a",
            value: b - a,
            range: "(0, ∞)",
        });
    }
    // (b − z)·conj(a − z) has imaginary part y(b − a) > 0, so the quotient
    // lies in the upper half-plane and its principal argument is in (0, π).
    let (x, y) = (z.re, z.im);
    let im = y * (b - a);
    let re = (b - x) * (a - x) + y * y;
    let angle = im.atan2(re);
    debug_assert!(angle > 0.0 && angle < PI);
    Ok(angle / PI)
}

/// `ω(z, [a, b], Ω₁)`, computed as `ω(ψ(z), [ψ(a), ψ(b)], H)`.
pub fn hm_omega1(z: Complex64, a: f64, b: f64, p: f64) -> Result<f64> {
    check_open_unit("p", p)?;
    if !(0.0 < a && a < b) {
        return Err(Error::Domain {
            name: "a",
            value: a,
            range: "0 < a < b",
        });
    }
    if !in_omega1(z, p)? {
        return Err(Error::NotInDomain {
            re: z.re,
            im: z.im,
            domain: "Ω₁",
        });
    }
    let w = match psi_map(ComplexValue::Finite(z), p) {
        ComplexValue::Finite(w) => w,
        ComplexValue::Infinity => unreachable!("−1/p is not in Ω₁"),
    };
    hm_halfplane(w, psi_real(a, p), psi_real(b, p))
}

/// `M_p(q)`, the cotangent bound on the harmonic measure of `[a, qa]` seen
/// from the imaginary segment `[ia, iqa]`.
pub fn m_p_of_q(p: f64, q: f64) -> Result<f64> {
    check_open_unit("p", p)?;
    if !(q > 1.0) {
        return Err(Error::Domain {
            name: "q",
            value: q,
            range: "(1, ∞)",
        });
    }
    let p2 = p * p;
    let first = (q + 1.0) / (q - 1.0);
    let num = (1.0 - p2).powi(2) * (1.0 + q * q);
    let den = 2.0 * p * (q - 1.0) * (4.0 * p * q.sqrt() + (1.0 + q) * (1.0 + p2));
    Ok(first + num / den)
}

/// The guaranteed lower bound `arccot(M_p(b/a))/π` on `ω(z, [a,b], Ω₁)` for
/// `z ∈ [ia, ib]`.
pub fn lower_sandwich(p: f64, a: f64, b: f64) -> Result<f64> {
    Ok(arccot(m_p_of_q(p, b / a)?) / PI)
}

/// Monte Carlo estimate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WosEstimate {
    pub mean: f64,
    pub std_error: f64,
    /// Walks that reached the boundary and were scored.
    pub completed: u64,
    /// Walks dropped at the step cap.
    pub capped: u64,
    pub total_steps: u64,
}

/// Domain where the walk runs: the half-plane, or `Ω₁` for a given `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WalkDomain {
    HalfPlane,
    Omega1(ExcludedDisk),
}

impl WalkDomain {
    pub fn omega1(p: f64) -> Result<Self> {
        Ok(WalkDomain::Omega1(ExcludedDisk::new(p)?))
    }

    fn contains(&self, z: Complex64) -> bool {
        match self {
            WalkDomain::HalfPlane => z.im > 0.0,
            WalkDomain::Omega1(d) => z.im > 0.0 && (z + d.center).norm() > d.radius,
        }
    }

    /// Distance to the boundary, and whether the nearest boundary point is on
    /// the real axis (as opposed to the excluded semicircle).
    fn nearest(&self, z: Complex64) -> (f64, bool) {
        match self {
            WalkDomain::HalfPlane => (z.im, true),
            WalkDomain::Omega1(d) => {
                let to_circle = (z + d.center).norm() - d.radius;
                if z.im <= to_circle {
                    (z.im, true)
                } else {
                    (to_circle, false)
                }
            }
        }
    }
}

enum WalkEnd {
    Hit(bool),
    Capped,
}

fn walk(
    domain: &WalkDomain,
    start: Complex64,
    a: f64,
    b: f64,
    eps: f64,
    rng: &mut ChaCha8Rng,
) -> (WalkEnd, u64) {
    let mut z = start;
    let mut steps = 0;
    loop {
        let (r, on_axis) = domain.nearest(z);
        if r <= eps {
            let hit = on_axis && (a..=b).contains(&z.re);
            return (WalkEnd::Hit(hit), steps);
        }
        if steps >= WOS_MAX_STEPS {
            return (WalkEnd::Capped, steps);
        }
        let theta = rng.random::<f64>() * TAU;
        z += Complex64::from_polar(r, theta);
        steps += 1;
    }
}

/// Walk-on-spheres estimate of `ω(z, [a, b], D)` for `D` the half-plane or
/// `Ω₁`.
///
/// Walk `k` draws from the ChaCha stream `k` of `seed`, so the estimate does
/// not depend on how walks are scheduled across threads.
pub fn wos_estimate(
    domain: WalkDomain,
    z: Complex64,
    a: f64,
    b: f64,
    n_walks: u64,
    eps: f64,
    seed: u64,
) -> Result<WosEstimate> {
    if n_walks == 0 {
        return Err(Error::Domain {
            name: "n_walks",
            value: 0.0,
            range: "[1, ∞)",
        });
    }
    if !(eps > 0.0) {
        return Err(Error::Domain {
            name: "eps",
            value: eps,
            range: "(0, ∞)",
        });
    }
    if !(a < b) {
        return Err(Error::Domain {
            name: "b - a",
            value: b - a,
            range: "(0, ∞)",
        });
    }
    if !domain.contains(z) {
        return Err(Error::NotInDomain {
            re: z.re,
            im: z.im,
            domain: "the walk domain",
        });
    }

    let (hits, completed, capped, total_steps) = (0..n_walks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k);
            match walk(&domain, z, a, b, eps, &mut rng) {
                (WalkEnd::Hit(h), steps) => (u64::from(h), 1u64, 0u64, steps),
                (WalkEnd::Capped, steps) => (0, 0, 1, steps),
            }
        })
        .reduce(
            || (0, 0, 0, 0),
            |x, y| (x.0 + y.0, x.1 + y.1, x.2 + y.2, x.3 + y.3),
        );

    if completed == 0 {
        return Err(Error::Minimizer("every walk hit the step cap".into()));
    }
    let mean = hits as f64 / completed as f64;
    Ok(WosEstimate {
        mean,
        std_error: (mean * (1.0 - mean) / completed as f64).sqrt(),
        completed,
        capped,
        total_steps,
    })
}

/// Walk-on-spheres estimate of `ω(z, [a, b], Ω₁)`.
pub fn wos_harmonic_measure(
    z: Complex64,
    a: f64,
    b: f64,
    p: f64,
    n_walks: u64,
    eps: f64,
    seed: u64,
) -> Result<WosEstimate> {
    check_open_unit("p", p)?;
    wos_estimate(WalkDomain::omega1(p)?, z, a, b, n_walks, eps, seed)
}

/// Domains on which both `δ_D` and `ω` are available in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TestDomain {
    HalfPlane,
    Omega1 { p: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaACheck {
    /// `δ_D(w)`.
    pub boundary_distance: f64,
    pub harmonic_measure: f64,
    /// `d · cot²(π ω / 4)`.
    pub bound: f64,
    pub pass: bool,
}

/// Checks `δ_D(w) ≤ d·cot²(π ω(w, β, D)/4)` for `β = [a, b]` on the real axis
/// with `β ⊂ B(w0, d)` and `w0 ∉ D`.
pub fn lemma_a_check(
    domain: TestDomain,
    a: f64,
    b: f64,
    w: Complex64,
    d: f64,
    w0: Complex64,
) -> Result<LemmaACheck> {
    if !(d > 0.0) {
        return Err(Error::Domain {
            name: "d",
            value: d,
            range: "(0, ∞)",
        });
    }
    let reach = (Complex64::new(a, 0.0) - w0)
        .norm()
        .max((Complex64::new(b, 0.0) - w0).norm());
    if reach > d * (1.0 + 1e-12) {
        return Err(Error::Hypothesis(format!(
            "segment [{a}, {b}] is not inside B(w0, {d})"
        )));
    }
    let (delta, omega, w0_inside) = match domain {
        TestDomain::HalfPlane => (w.im, hm_halfplane(w, a, b)?, w0.im > 0.0),
        TestDomain::Omega1 { p } => {
            if !in_omega1(w, p)? {
                return Err(Error::NotInDomain {
                    re: w.re,
                    im: w.im,
                    domain: "Ω₁",
                });
            }
            (
                boundary_distance_omega1(w, p)?,
                hm_omega1(w, a, b, p)?,
                in_omega1(w0, p)?,
            )
        }
    };
    if w0_inside {
        return Err(Error::Hypothesis("w0 must lie outside the domain".into()));
    }
    let t = (PI * omega / 4.0).tan();
    let bound = d / (t * t);
    Ok(LemmaACheck {
        boundary_distance: delta,
        harmonic_measure: omega,
        bound,
        pass: delta <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn arccot_branch() {
        assert!((arccot(0.0) - PI / 2.0).abs() < 1e-15);
        assert!((arccot(1.0) - PI / 4.0).abs() < 1e-15);
        assert!(arccot(-1.0) > PI / 2.0 && arccot(-1.0) < PI);
        assert!(arccot(1e8) > 0.0 && arccot(1e8) < 1e-7);
    }

    #[test]
    fn halfplane_examples() {
        let i = Complex64::new(0.0, 1.0);
        assert!((hm_halfplane(i, -1.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        let far = hm_halfplane(Complex64::new(1e6, 1e6), 0.0, 1.0).unwrap();
        assert!(far > 0.0 && far < 1e-6);
        assert!(hm_halfplane(Complex64::new(0.0, 0.0), 0.0, 1.0).is_err());
        assert!(hm_halfplane(i, 1.0, 1.0).is_err());
    }

    #[test]
    fn halfplane_additive_and_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..1000 {
            let z = Complex64::new(rng.random_range(-5.0..5.0), rng.random_range(0.01..5.0));
            let a = rng.random_range(-5.0..5.0);
            let b = a + rng.random_range(0.01..3.0);
            let c = b + rng.random_range(0.01..3.0);
            let whole = hm_halfplane(z, a, c).unwrap();
            let parts = hm_halfplane(z, a, b).unwrap() + hm_halfplane(z, b, c).unwrap();
            assert!((whole - parts).abs() < 1e-12);
            let r = 1e6 * (1.0 + z.norm());
            assert!(hm_halfplane(z, -r, r).unwrap() >= 1.0 - 1e-3);
        }
    }

    #[test]
    fn omega1_below_halfplane_and_sandwiched() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let mut n = 0;
        while n < 1000 {
            let p = rng.random_range(0.05..0.99);
            let z = Complex64::new(rng.random_range(-4.0..4.0), rng.random_range(0.01..4.0));
            if !in_omega1(z, p).unwrap() {
                continue;
            }
            let a = rng.random_range(0.01..3.0);
            let b = a + rng.random_range(0.01..3.0);
            let inner = hm_omega1(z, a, b, p).unwrap();
            let outer = hm_halfplane(z, a, b).unwrap();
            assert!(
                inner <= outer + 1e-12,
                "Carleman violated: {inner} > {outer}"
            );
            n += 1;
        }
        for _ in 0..200 {
            let p = rng.random_range(0.05..0.99);
            let a = rng.random_range(0.01..10.0);
            let b = a * rng.random_range(1.01..100.0);
            let lo = lower_sandwich(p, a, b).unwrap();
            for k in 1..=50 {
                let y = a * (b / a).powf(k as f64 / 51.0);
                let w = hm_omega1(Complex64::new(0.0, y), a, b, p).unwrap();
                assert!(lo - 1e-12 <= w && w <= 0.5 + 1e-12);
            }
        }
    }

    #[test]
    fn omega1_rejects_outside_points() {
        assert!(hm_omega1(Complex64::new(0.0, -1.0), 1.0, 2.0, 0.5).is_err());
        // center of the excluded half-disk
        assert!(hm_omega1(Complex64::new(-1.25, 0.1), 1.0, 2.0, 0.5).is_err());
        assert!(hm_omega1(Complex64::new(0.0, 1.0), 2.0, 1.0, 0.5).is_err());
    }

    #[test]
    fn m_p_examples() {
        let q = 4.0;
        // p = 0.5: 5/3 + (0.75²·17)/(2·0.5·3·(4·0.5·2 + 5·1.25))
        let expected = 5.0 / 3.0 + (0.5625 * 17.0) / (3.0 * (4.0 + 6.25));
        assert!((m_p_of_q(0.5, q).unwrap() - expected).abs() < 1e-14);
        for &q in &[1.5, 4.0, 50.0] {
            let limit = (q + 1.0) / (q - 1.0);
            assert!((m_p_of_q(1.0 - 1e-9, q).unwrap() - limit).abs() < 1e-12);
            assert!(m_p_of_q(0.3, q).unwrap() > 0.0);
        }
        assert!(m_p_of_q(0.5, 1.0).is_err());
        assert!(m_p_of_q(1.0, 2.0).is_err());
    }

    #[test]
    fn lemma_a_examples() {
        let r = lemma_a_check(
            TestDomain::HalfPlane,
            -1.0,
            1.0,
            Complex64::new(0.0, 1.0),
            1.0,
            Complex64::new(0.0, 0.0),
        )
        .unwrap();
        assert!((r.boundary_distance - 1.0).abs() < 1e-15);
        assert!((r.harmonic_measure - 0.5).abs() < 1e-15);
        let expected = (1.0 + 2f64.sqrt()).powi(2);
        assert!((r.bound - expected).abs() < 1e-12);
        assert!(r.pass);

        // w approaching the segment: ω → 1 and the check stays satisfied
        for k in 1..10 {
            let w = Complex64::new(0.2, 10f64.powi(-k));
            let r = lemma_a_check(
                TestDomain::HalfPlane,
                -1.0,
                1.0,
                w,
                1.0,
                Complex64::new(0.0, 0.0),
            )
            .unwrap();
            assert!(r.pass);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let mut n = 0;
        while n < 300 {
            let p = rng.random_range(0.05..0.95);
            let w = Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(0.01..3.0));
            if !in_omega1(w, p).unwrap() {
                continue;
            }
            let a = rng.random_range(0.01..2.0);
            let b = a + rng.random_range(0.01..2.0);
            let w0 = Complex64::new(0.5 * (a + b), 0.0);
            let d = 0.5 * (b - a);
            let r = lemma_a_check(TestDomain::Omega1 { p }, a, b, w, d, w0).unwrap();
            assert!(r.pass, "{r:?}");
            n += 1;
        }
    }

    #[test]
    fn lemma_a_rejects_bad_configurations() {
        let i = Complex64::new(0.0, 1.0);
        assert!(lemma_a_check(
            TestDomain::HalfPlane,
            -1.0,
            1.0,
            i,
            0.5,
            Complex64::new(0.0, 0.0)
        )
        .is_err());
        assert!(lemma_a_check(
            TestDomain::HalfPlane,
            -1.0,
            1.0,
            i,
            10.0,
            Complex64::new(0.0, 2.0)
        )
        .is_err());
    }

    #[test]
    fn wos_recovers_halfplane_value() {
        let est = wos_estimate(
            WalkDomain::HalfPlane,
            Complex64::new(0.0, 1.0),
            -1.0,
            1.0,
            100_000,
            WOS_EPS,
            7,
        )
        .unwrap();
        assert!((est.mean - 0.5).abs() <= 3.0 * est.std_error, "{est:?}");
        assert_eq!(est.capped, 0);
        let far = wos_estimate(
            WalkDomain::HalfPlane,
            Complex64::new(50.0, 1.0),
            0.0,
            1.0,
            10_000,
            WOS_EPS,
            7,
        )
        .unwrap();
        assert!(far.mean < 0.01);
    }

    #[test]
    fn wos_is_reproducible() {
        let z = Complex64::new(0.3, 0.8);
        let a = wos_harmonic_measure(z, 0.5, 2.0, 0.4, 5_000, WOS_EPS, 99).unwrap();
        let b = wos_harmonic_measure(z, 0.5, 2.0, 0.4, 5_000, WOS_EPS, 99).unwrap();
        assert_eq!(a, b);
        let c = wos_harmonic_measure(z, 0.5, 2.0, 0.4, 5_000, WOS_EPS, 100).unwrap();
        assert_ne!(a.mean, c.mean);
    }

    #[test]
    fn wos_rejects_bad_inputs() {
        let z = Complex64::new(0.0, 1.0);
        assert!(wos_harmonic_measure(z, 1.0, 2.0, 0.5, 0, WOS_EPS, 1).is_err());
        assert!(wos_harmonic_measure(z, 1.0, 2.0, 0.5, 10, 0.0, 1).is_err());
        assert!(
            wos_harmonic_measure(Complex64::new(0.0, -1.0), 1.0, 2.0, 0.5, 10, WOS_EPS, 1).is_err()
        );
    }
}
