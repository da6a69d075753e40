use std::f64::consts::PI;

use super::AnalyticError;

fn cot(x: f64) -> f64 {
    x.cos() / x.sin()
}

/// Fejes Tóth upper bound on the surface area of a polyhedron with `v`
/// vertices, `e` edges and `f` facets inscribed in S² (under the foot
/// condition): `e·sin(πf/e)·(1 − cot²(πf/2e)·cot²(πv/2e))`.
pub fn toth_bound(v: usize, e: usize, f: usize) -> Result<f64, AnalyticError> {
    if v < 4 || e < 6 || v + f != e + 2 {
        return Err(AnalyticError::InvalidCounts { v, e, f });
    }
    let (v, e, f) = (v as f64, e as f64, f as f64);
    let cf = cot(PI * f / (2.0 * e));
    let cv = cot(PI * v / (2.0 * e));
    Ok(e * (PI * f / e).sin() * (1.0 - cf * cf * cv * cv))
}

/// The Fejes Tóth bound specialized to `v` vertices:
/// `G(v) = (3√3/2)(v−2)(1 − ⅓cot²(πv/(6(v−2))))`.
///
/// Panics for `v < 4`.
pub fn g_bound(v: usize) -> f64 {
    assert!(v >= 4, "g_bound needs v >= 4, got {v}");
    let n = (v - 2) as f64;
    let c = cot(PI * v as f64 / (6.0 * n));
    1.5 * 3f64.sqrt() * n * (1.0 - c * c / 3.0)
}

/// Perimeter of the regular k-gon inscribed in a circle of radius `r`,
/// the largest among inscribed convex k-gons.
pub fn kgon_max_perimeter(k: usize, r: f64) -> f64 {
    assert!(k >= 3, "a polygon needs at least 3 sides");
    2.0 * k as f64 * r * (PI / k as f64).sin()
}

/// Area of the regular k-gon inscribed in a circle of radius `r`.
pub fn kgon_max_area(k: usize, r: f64) -> f64 {
    assert!(k >= 3, "a polygon needs at least 3 sides");
    0.5 * k as f64 * r * r * (2.0 * PI / k as f64).sin()
}
