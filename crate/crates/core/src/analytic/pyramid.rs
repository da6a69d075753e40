//! Right pyramids with a regular base inscribed in S².
//!
//! A pyramid of height `h` has its apex at the north pole and its base in the
//! plane `z = 1 − h`; the base circle has radius `√(2h − h²)`.

use std::f64::consts::PI;

use super::{
    scalar::{bisect, golden_section_max},
    AnalyticError,
};
use crate::geom::{Polyhedron, Vec3};

/// Height of the maximum-volume v-pyramid, for every `v ≥ 4`.
pub const OPTIMAL_VOLUME_PYRAMID_HEIGHT: f64 = 4.0 / 3.0;

fn check_v(v: usize) {
    assert!(v >= 4, "a pyramid needs at least 4 vertices, got {v}");
}

fn open_height(h: f64) -> Result<f64, AnalyticError> {
    if h > 0.0 && h < 2.0 {
        Ok(h)
    } else {
        Err(AnalyticError::Domain { name: "h", value: h, range: "(0, 2)" })
    }
}

/// Maximum lateral area of a v-pyramid in a cap of height `h` whose base
/// lies in the cap's base plane: attained by the right pyramid of height `h`
/// over the regular (v−1)-gon inscribed in the base circle.
pub fn pyramid_lateral_bound(v: usize, h: f64) -> Result<f64, AnalyticError> {
    check_v(v);
    let h = open_height(h)?;
    let a = PI / (v - 1) as f64;
    let (s, c) = a.sin_cos();
    Ok((v - 1) as f64 * s * h * (2.0 - h).sqrt() * (h * s * s + 2.0 * c * c).sqrt())
}

/// Total area of the right regular pyramid of height `h` (base plus lateral);
/// valid for any `h ∈ (0, 2)`.
pub(crate) fn regular_pyramid_area(v: usize, h: f64) -> f64 {
    let n = (v - 1) as f64;
    let a = PI / n;
    let u = 2.0 * h - h * h;
    let c = a.cos();
    0.5 * n * u * (2.0 * a).sin() + n * a.sin() * (h * h * u + u * u * c * c).sqrt()
}

/// Derivative of [`regular_pyramid_area`] with respect to `h`.
pub(crate) fn regular_pyramid_area_derivative(v: usize, h: f64) -> f64 {
    let n = (v - 1) as f64;
    let a = PI / n;
    let c2 = a.cos().powi(2);
    let u = 2.0 * h - h * h;
    let du = 2.0 - 2.0 * h;
    let g = h * h * u + u * u * c2;
    let dg = 2.0 * h * u + h * h * du + 2.0 * u * du * c2;
    0.5 * n * (2.0 * a).sin() * du + n * a.sin() * dg / (2.0 * g.sqrt())
}

fn profile_height(h: f64) -> Result<f64, AnalyticError> {
    if (1.0..2.0).contains(&h) {
        Ok(h)
    } else {
        Err(AnalyticError::Domain { name: "h", value: h, range: "[1, 2)" })
    }
}

/// `F_v(h)`: the largest surface area of an inscribed v-pyramid of height
/// `h ∈ [1, 2)`.
pub fn pyramid_area_profile(v: usize, h: f64) -> Result<f64, AnalyticError> {
    check_v(v);
    Ok(regular_pyramid_area(v, profile_height(h)?))
}

/// `dF_v/dh` on `[1, 2)`.
pub fn pyramid_area_profile_derivative(v: usize, h: f64) -> Result<f64, AnalyticError> {
    check_v(v);
    Ok(regular_pyramid_area_derivative(v, profile_height(h)?))
}

/// `2h³ − 2h² − 7h + 8`, whose roots contain the critical heights of `F₅`.
pub fn pyramid_height_cubic(h: f64) -> f64 {
    ((2.0 * h - 2.0) * h - 7.0) * h + 8.0
}

/// The two roots of [`pyramid_height_cubic`] in `[1, 2)`, as `(h₁, η)` with
/// `h₁ ≈ 1.6538868` and `η ≈ 1.2622`.
///
/// Only `η` is a critical point of `F₅`; `h₁` is introduced by squaring the
/// stationarity condition and has `F₅′(h₁) < 0`.
pub fn pyramid_height_cubic_roots() -> (f64, f64) {
    let s46 = 46f64.sqrt();
    let theta = (-149.0 / (23.0 * s46)).acos() / 3.0;
    let h1 = (1.0 + s46 * theta.cos()) / 3.0;
    let eta = (1.0 - s46 * (PI / 6.0 - theta).sin()) / 3.0;
    (h1, eta)
}

/// Height `η(v)` of the maximum-surface-area inscribed v-pyramid.
///
/// For `v = 5` this is the trigonometric closed form of the cubic root. For
/// other `v`, `F_v` is maximized on `[1, 2)` by golden-section search and the
/// root of `F_v′` is then refined by bisection to 1e-12.
pub fn optimal_pyramid_height(v: usize) -> f64 {
    check_v(v);
    if v == 5 {
        return pyramid_height_cubic_roots().1;
    }
    let hi = 2.0 - 1e-9;
    let (h, _) = golden_section_max(|h| regular_pyramid_area(v, h), 1.0, hi, 1e-7);
    let (a, b) = ((h - 1e-5).max(1.0), (h + 1e-5).min(hi));
    bisect(|h| regular_pyramid_area_derivative(v, h), a, b, 1e-12).unwrap_or(h)
}

/// `F_v(η(v))`: the largest surface area of an inscribed v-pyramid.
pub fn pyramid_max_area(v: usize) -> f64 {
    regular_pyramid_area(v, optimal_pyramid_height(v))
}

/// Right pyramid inscribed in S² with apex `e₃` and a regular (v−1)-gon base
/// in the plane `z = 1 − h`, first base vertex at azimuth 0.
///
/// Vertex 0 is the apex; vertices `1..v` run counterclockwise seen from above.
pub fn build_regular_pyramid(v: usize, h: f64) -> Result<Polyhedron, AnalyticError> {
    check_v(v);
    let h = open_height(h)?;
    let n = v - 1;
    let z = 1.0 - h;
    let r = (2.0 * h - h * h).sqrt();
    let mut vertices = vec![Vec3::new(0.0, 0.0, 1.0)];
    vertices.extend((0..n).map(|k| {
        let a = 2.0 * PI * k as f64 / n as f64;
        Vec3::new(r * a.cos(), r * a.sin(), z)
    }));
    let mut facets: Vec<Vec<usize>> = (1..=n).map(|k| vec![0, k, k % n + 1]).collect();
    facets.push((1..=n).rev().collect());
    Ok(Polyhedron::from_facets(vertices, facets).expect("regular pyramid is closed"))
}

/// The maximum-surface-area inscribed v-pyramid (height `η(v)`).
pub fn build_ideal_pyramid(v: usize) -> Polyhedron {
    build_regular_pyramid(v, optimal_pyramid_height(v)).expect("η lies in (1, 2)")
}

/// The maximum-volume inscribed v-pyramid (height 4/3).
pub fn build_max_volume_pyramid(v: usize) -> Polyhedron {
    build_regular_pyramid(v, OPTIMAL_VOLUME_PYRAMID_HEIGHT).expect("4/3 lies in (0, 2)")
}

/// `V(h) = ((v−1)/6)(2h² − h³)·sin(2π/(v−1))`: volume of the right regular
/// pyramid of height `h`.
pub fn pyramid_volume_profile(v: usize, h: f64) -> Result<f64, AnalyticError> {
    check_v(v);
    let h = open_height(h)?;
    let n = (v - 1) as f64;
    Ok(n / 6.0 * (2.0 * h * h - h * h * h) * (2.0 * PI / n).sin())
}

/// Volume of the maximum-volume inscribed v-pyramid.
pub fn pyramid_max_volume(v: usize) -> f64 {
    pyramid_volume_profile(v, OPTIMAL_VOLUME_PYRAMID_HEIGHT).expect("4/3 lies in (0, 2)")
}
