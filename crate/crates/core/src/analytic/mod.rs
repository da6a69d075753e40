//! Closed-form optima and bounds for inscribed polyhedra, and constructors
//! for the optimal (ideal) pyramids and bipyramids.

mod bipyramid;
mod bounds;
mod lateral;
mod pyramid;
pub mod scalar;

use thiserror::Error;

pub use bipyramid::{bipyramid_area_profile, bipyramid_max_area, bipyramid_max_volume, build_ideal_bipyramid};
pub use bounds::{g_bound, kgon_max_area, kgon_max_perimeter, toth_bound};
pub use lateral::{validate_lateral_decomposition, CapGeometry, LateralDecomposition};
pub use pyramid::{
    build_ideal_pyramid, build_max_volume_pyramid, build_regular_pyramid, optimal_pyramid_height,
    pyramid_area_profile, pyramid_area_profile_derivative, pyramid_height_cubic, pyramid_height_cubic_roots,
    pyramid_lateral_bound, pyramid_max_area, pyramid_max_volume, pyramid_volume_profile,
    OPTIMAL_VOLUME_PYRAMID_HEIGHT,
};

/// Area of the regular icosahedron inscribed in S², `2√75 − 2√15`.
pub fn icosahedron_area() -> f64 {
    2.0 * 75f64.sqrt() - 2.0 * 15f64.sqrt()
}

/// Volume of the regular icosahedron inscribed in S².
pub fn icosahedron_volume() -> f64 {
    let s5 = 5f64.sqrt();
    let edge = 4.0 / (10.0 + 2.0 * s5).sqrt();
    5.0 / 12.0 * (3.0 + s5) * edge.powi(3)
}

/// Area of the regular tetrahedron inscribed in S², `8/√3`.
pub fn tetrahedron_area() -> f64 {
    8.0 / 3f64.sqrt()
}

/// Volume of the regular tetrahedron inscribed in S², `8√3/27`.
pub fn tetrahedron_volume() -> f64 {
    8.0 * 3f64.sqrt() / 27.0
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum AnalyticError {
    #[error("vertex/edge/facet counts ({v}, {e}, {f}) violate v - e + f = 2")]
    InvalidCounts { v: usize, e: usize, f: usize },
    #[error("{name} = {value} is outside {range}")]
    Domain {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
}
