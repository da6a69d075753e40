//! Cap geometry and the side/foot decomposition of a pyramid's lateral area.

use std::f64::consts::PI;

use super::AnalyticError;
use crate::geom::Vec3;

/// A cap of the unit ball cut off by the plane `z = 1 − h`, together with an
/// apex height `t` above that plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CapGeometry {
    h: f64,
    t: f64,
}

impl CapGeometry {
    pub fn new(h: f64, t: f64) -> Result<Self, AnalyticError> {
        if !(h > 0.0 && h < 2.0) {
            return Err(AnalyticError::Domain { name: "h", value: h, range: "(0, 2)" });
        }
        if !(t > 0.0 && t <= h) {
            return Err(AnalyticError::Domain { name: "t", value: t, range: "(0, h]" });
        }
        Ok(Self { h, t })
    }

    /// Cap whose apex sits at the pole (`t = h`).
    pub fn full_height(h: f64) -> Result<Self, AnalyticError> {
        Self::new(h, h)
    }

    pub fn height(&self) -> f64 {
        self.h
    }

    pub fn apex_height(&self) -> f64 {
        self.t
    }

    /// Radius of the base circle, `√(1 − (1 − h)²)`.
    pub fn radius(&self) -> f64 {
        (1.0 - (1.0 - self.h).powi(2)).sqrt()
    }

    /// z-coordinate of the base plane.
    pub fn base_plane(&self) -> f64 {
        1.0 - self.h
    }

    /// Largest inradius of a convex (v−1)-gon inscribed in the base circle,
    /// `R·cos(π/(v−1))`, attained only by the regular polygon.
    pub fn inradius_bound(&self, v: usize) -> f64 {
        self.radius() * (PI / (v - 1) as f64).cos()
    }
}

/// Lateral area of a pyramid split over its base sides.
///
/// Side `i` has length `s_i`; `p_i` is the distance from the apex's foot in the
/// base plane to the line through side `i`; `t` is the apex height.
#[derive(Clone, Debug, PartialEq)]
pub struct LateralDecomposition {
    pub side_lengths: Vec<f64>,
    pub foot_lengths: Vec<f64>,
    pub apex_height: f64,
    pub inradius: f64,
}

impl LateralDecomposition {
    /// Decompose a pyramid whose base vertices lie in a horizontal plane and
    /// are listed counterclockwise seen from above. The apex foot is assumed
    /// to lie inside the base; `inradius` is the smallest foot length.
    pub fn from_pyramid(base: &[Vec3], apex: Vec3) -> Self {
        let foot = Vec3::new(apex.x, apex.y, base[0].z);
        let n = base.len();
        let (side_lengths, foot_lengths): (Vec<f64>, Vec<f64>) = (0..n)
            .map(|i| {
                let (a, b) = (base[i], base[(i + 1) % n]);
                let s = a.distance(b);
                (s, (b - a).cross(foot - a).norm() / s)
            })
            .unzip();
        let inradius = foot_lengths.iter().copied().fold(f64::INFINITY, f64::min);
        Self {
            side_lengths,
            foot_lengths,
            apex_height: apex.z - base[0].z,
            inradius,
        }
    }

    /// `½ Σ s_i √(p_i² + t²)`.
    pub fn lateral_area(&self) -> f64 {
        let t2 = self.apex_height * self.apex_height;
        self.side_lengths
            .iter()
            .zip(&self.foot_lengths)
            .map(|(s, p)| s * (p * p + t2).sqrt())
            .sum::<f64>()
            / 2.0
    }

    /// `½ Σ s_i p_i`, the base area when the foot is inside the base.
    pub fn base_area(&self) -> f64 {
        self.side_lengths
            .iter()
            .zip(&self.foot_lengths)
            .map(|(s, p)| s * p)
            .sum::<f64>()
            / 2.0
    }

    pub fn foot_spread(&self) -> f64 {
        let max = self.foot_lengths.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = self.foot_lengths.iter().copied().fold(f64::INFINITY, f64::min);
        max - min
    }
}

/// Check a decomposition claimed to be optimal: the feet must reproduce the
/// base area (to 1e-10), all foot lengths must agree (to 1e-8) and the
/// inradius must equal that common foot length.
pub fn validate_lateral_decomposition(d: &LateralDecomposition, base_area: f64) -> bool {
    if d.foot_lengths.is_empty() || d.foot_lengths.len() != d.side_lengths.len() {
        return false;
    }
    (d.base_area() - base_area).abs() <= 1e-10
        && d.foot_spread() < 1e-8
        && (d.inradius - d.foot_lengths[0]).abs() < 1e-8
}
