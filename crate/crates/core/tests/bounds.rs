// 3.141 below is a published table cell, not an approximation of π.
#![allow(clippy::approx_constant)]

mod common;

use std::f64::consts::{PI, SQRT_2};

use ghbounds::bounds::{
    a1_limit, g_envelopes, g_of_x, h_of_p, lower_bound, minimize_over_q, n_p_of_q, r_p_of_q,
    table1, theorem1_closed_form, BoundKind, H_DENOMINATOR, H_NUMERATOR, TABLE1_P, THEOREM_C_MIN_P,
};
use ghbounds::hyperbolic::disk_nesting;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reference rows: p, lower bound, R_p minimum (if any), closed form, N_p minimum.
const PUBLISHED: [(f64, f64, Option<f64>, f64, f64); 11] = [
    (0.999, 3.141, Some(73.421), 114.486, 73.251),
    (0.99, 3.141, Some(74.995), 116.025, 73.259),
    (0.9, 3.150, Some(95.491), 134.471, 74.212),
    (0.8, 3.180, Some(135.733), 164.134, 77.634),
    (0.7, 3.242, Some(221.807), 210.271, 84.837),
    (0.6, 3.351, Some(471.016), 287.415, 98.455),
    (0.5, 3.534, Some(1984.431), 429.726, 124.383),
    (0.4, 3.848, None, 731.847, 178.045),
    (0.3, 4.424, None, 1528.574, 310.577),
    (0.2, 5.654, None, 4605.973, 775.275),
    (0.1, 9.503, None, 33408.930, 4608.760),
];

#[test]
fn reproduces_the_published_table() {
    let rows = table1(&TABLE1_P).unwrap();
    for (row, &(p, lb, thm_c, thm1, thm2)) in rows.iter().zip(PUBLISHED.iter()) {
        assert_eq!(row.p, p);
        assert!((row.lower - lb).abs() <= 5e-3, "lb at p={p}: {}", row.lower);
        assert!(
            (row.theorem2 - thm2).abs() <= 5e-3,
            "thm2 at p={p}: {}",
            row.theorem2
        );
        let tol1 = if p == 0.1 { 5e-2 } else { 5e-3 };
        assert!(
            (row.theorem1 - thm1).abs() <= tol1,
            "thm1 at p={p}: {}",
            row.theorem1
        );
        match (row.theorem_c, thm_c) {
            (Some(got), Some(want)) => {
                let tol = if p == 0.5 { 0.5 } else { 5e-3 };
                assert!((got - want).abs() <= tol, "thmC at p={p}: {got}");
            }
            (None, None) => {}
            other => panic!("R_p column presence mismatch at p={p}: {other:?}"),
        }
    }
}

#[test]
fn a1_limit_at_the_published_q() {
    assert!((a1_limit(5.55465).unwrap() - 73.2502105).abs() < 1e-6);
    let best = minimize_over_q(0.5, BoundKind::A1Limit).unwrap();
    assert!(best.value <= 73.2502105 + 1e-6);
    // N_p → A₁-limit as p → 1
    let near = n_p_of_q(1.0 - 1e-9, 5.55465).unwrap();
    assert!((near - 73.2502105).abs() < 1e-5);
}

#[test]
fn minimum_is_below_every_grid_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(301);
    for _ in 0..20 {
        let p = rng.random_range(0.05..0.99);
        let best = minimize_over_q(p, BoundKind::Theorem2Inf).unwrap();
        for k in 0..2000 {
            let q = 1.0 + 10f64.powf(-6.0 + 14.0 * k as f64 / 1999.0);
            assert!(best.value <= n_p_of_q(p, q).unwrap() * (1.0 + 1e-12));
        }
    }
}

#[test]
fn orderings() {
    for k in 1..=100 {
        let p = k as f64 / 101.0;
        let thm2 = minimize_over_q(p, BoundKind::Theorem2Inf).unwrap().value;
        assert!(lower_bound(p).unwrap() <= thm2);
        assert!(thm2 <= theorem1_closed_form(p).unwrap());
        let p = THEOREM_C_MIN_P + (1.0 - THEOREM_C_MIN_P) * k as f64 / 101.0;
        let thm2 = minimize_over_q(p, BoundKind::Theorem2Inf).unwrap().value;
        assert!(thm2 <= minimize_over_q(p, BoundKind::TheoremC).unwrap().value);
    }
}

#[test]
fn closed_forms_against_direct_arithmetic() {
    // (1+p)²π/(4p) and the closed-form bound, evaluated separately
    let p: f64 = 0.37;
    assert!((lower_bound(p).unwrap() - 1.37 * 1.37 * PI / 1.48).abs() < 1e-12);
    let inner = 1.0 + SQRT_2 + 20.0 / (3.0 * p);
    let want = (1.0 + p * p) / p * inner * inner * 2f64.ln();
    assert!((theorem1_closed_form(p).unwrap() - want).abs() < 1e-9);
    // R_p(q) at p = 0.8, q = 3
    let (p, q): (f64, f64) = (0.8, 3.0);
    let angle = (0.5f64.atan() - (0.36 * 0.5 / 1.6f64).atan()) / 4.0;
    let want = 1.64 * q.ln() / 1.6 / angle.tan().powi(2);
    assert!((r_p_of_q(p, q).unwrap() - want).abs() < 1e-10 * want);
    assert!(r_p_of_q(SQRT_2 - 1.0, 3.0).is_err());
}

#[test]
fn h_stays_below_ten() {
    let num: i64 = H_NUMERATOR.iter().sum();
    let den: i64 = H_DENOMINATOR.iter().sum();
    assert_eq!((num, den), (180, 18));
    assert_eq!(num, 10 * den);
    assert_eq!(h_of_p(1.0).unwrap(), 10.0);
    for k in 1..10_000 {
        assert!(h_of_p(k as f64 / 10_000.0).unwrap() < 10.0);
    }
    // p = 1/2: (17/16 + 50/8 + 46/4 + 25 + 17)/(5/4 + 4 + 5)
    let want = (17.0 / 16.0 + 50.0 / 8.0 + 11.5 + 25.0 + 17.0) / 10.25;
    assert!((h_of_p(0.5).unwrap() - want).abs() < 1e-13);
}

#[test]
fn g_is_sandwiched_and_convex() {
    for &k in &[0.25, 0.5, 0.75] {
        let x = |j: usize| 100.0 * j as f64 / 10_000.0;
        for j in 1..=10_000 {
            let g = g_of_x(x(j), k).unwrap();
            let (lo, hi) = g_envelopes(x(j), k);
            assert!(lo < g && g < hi, "k={k} x={}", x(j));
            if j > 1 && j < 10_000 {
                let second = g_of_x(x(j - 1), k).unwrap() - 2.0 * g + g_of_x(x(j + 1), k).unwrap();
                assert!(second >= -1e-9);
            }
        }
    }
    assert!((g_of_x(1e-12, 0.25).unwrap() - (1.0 + SQRT_2)).abs() < 1e-9);
}

#[test]
fn excluded_disks_nest() {
    let mut rng = ChaCha8Rng::seed_from_u64(302);
    for _ in 0..300 {
        let u: f64 = rng.random_range(0.01..0.99);
        let v: f64 = rng.random_range(0.01..0.99);
        let (p1, p2) = (u.min(v), u.max(v));
        assert!(disk_nesting(p1, p2).unwrap());
        let (c1, r1) = ((1.0 + p1 * p1) / (2.0 * p1), (1.0 - p1 * p1) / (2.0 * p1));
        let (c2, r2) = ((1.0 + p2 * p2) / (2.0 * p2), (1.0 - p2 * p2) / (2.0 * p2));
        for j in 0..100 {
            let t = 2.0 * PI * j as f64 / 100.0;
            let z = common::c(c2 + r2 * t.cos(), r2 * t.sin());
            assert!((z - common::c(c1, 0.0)).norm() <= r1 * (1.0 + 1e-12));
        }
    }
    assert!(disk_nesting(0.6, 0.4).is_err());
}
