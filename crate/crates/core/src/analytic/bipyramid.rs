//! Bipyramids with both apexes at the poles and a regular girdle.

use std::f64::consts::PI;

use super::AnalyticError;
use crate::geom::{Polyhedron, Vec3};

fn check_v(v: usize) {
    assert!(v >= 5, "a bipyramid needs at least 5 vertices, got {v}");
}

/// `S(h)`: surface area of the inscribed v-bipyramid with apexes `±e₃` and a
/// regular (v−2)-gon girdle in the plane `z = 1 − h`.
pub fn bipyramid_area_profile(v: usize, h: f64) -> Result<f64, AnalyticError> {
    check_v(v);
    if !(h > 0.0 && h < 2.0) {
        return Err(AnalyticError::Domain { name: "h", value: h, range: "(0, 2)" });
    }
    let w = PI / (v - 2) as f64;
    let c2 = w.cos().powi(2);
    let u = 2.0 * h - h * h;
    let upper = (2.0 * h.powi(3) - h.powi(4) + u * u * c2).sqrt();
    let lower = ((2.0 - h).powi(2) * u + u * u * c2).sqrt();
    Ok((v - 2) as f64 * w.sin() * (upper + lower))
}

/// Largest surface area of an inscribed v-bipyramid,
/// `2(v−2)·√(1 + cos²ω)·sin ω` with `ω = π/(v−2)`.
pub fn bipyramid_max_area(v: usize) -> f64 {
    check_v(v);
    let w = PI / (v - 2) as f64;
    2.0 * (v - 2) as f64 * (1.0 + w.cos().powi(2)).sqrt() * w.sin()
}

/// Largest volume of an inscribed v-bipyramid, `⅓(v−2)·sin(2π/(v−2))`.
pub fn bipyramid_max_volume(v: usize) -> f64 {
    check_v(v);
    let n = (v - 2) as f64;
    n / 3.0 * (2.0 * PI / n).sin()
}

/// The optimal v-bipyramid: `e₃`, `−e₃`, then the (v−2)-th roots of unity in
/// the equator starting at `e₁`.
pub fn build_ideal_bipyramid(v: usize) -> Polyhedron {
    check_v(v);
    let n = v - 2;
    let mut vertices = vec![Vec3::new(0.0, 0.0, 1.0), Vec3::new(0.0, 0.0, -1.0)];
    vertices.extend((0..n).map(|k| {
        let a = 2.0 * PI * k as f64 / n as f64;
        Vec3::new(a.cos(), a.sin(), 0.0)
    }));
    let girdle = |k: usize| 2 + k % n;
    let mut facets: Vec<Vec<usize>> = (0..n).map(|k| vec![0, girdle(k), girdle(k + 1)]).collect();
    facets.extend((0..n).map(|k| vec![1, girdle(k + 1), girdle(k)]));
    Polyhedron::from_facets(vertices, facets).expect("bipyramid is closed")
}
