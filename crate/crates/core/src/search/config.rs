use std::f64::consts::{PI, TAU};

use super::SearchError;
use crate::geom::{Rotation, Vec3};

/// `v` points on S² in spherical angles, with the rotation group gauged away:
/// point 0 sits at the north pole and point 1 has azimuth 0.
///
/// That leaves `2v − 3` free angles: the polar angle of point 1, then
/// `(θ, φ)` for each later point.
#[derive(Clone, Debug, PartialEq)]
pub struct SphericalConfig {
    /// `(polar θ ∈ [0, π], azimuth φ ∈ [0, 2π))` per point.
    angles: Vec<(f64, f64)>,
}

impl SphericalConfig {
    /// Gauge-fix an arbitrary point set: rotate point 0 to the north pole, then
    /// spin about the z-axis until point 1 has azimuth 0.
    pub fn from_points(points: &[Vec3]) -> Result<Self, SearchError> {
        if points.len() < 4 {
            return Err(SearchError::TooFewPoints(points.len()));
        }
        let unit: Vec<Vec3> = points
            .iter()
            .map(|p| p.normalized().ok_or(SearchError::ZeroPoint))
            .collect::<Result<_, _>>()?;
        let north = Vec3::new(0.0, 0.0, 1.0);
        let tilt = Rotation::aligning(unit[0], north);
        let q1 = tilt.apply(unit[1]);
        let spin = Rotation::from_axis_angle(north, -q1.y.atan2(q1.x));
        let r = spin.compose(&tilt);

        let mut angles = Vec::with_capacity(unit.len());
        angles.push((0.0, 0.0));
        let (theta1, _) = r.apply(unit[1]).to_spherical();
        angles.push((theta1, 0.0));
        for &p in &unit[2..] {
            let (theta, phi) = r.apply(p).to_spherical();
            angles.push((theta, phi.rem_euclid(TAU)));
        }
        Ok(Self { angles })
    }

    /// Build from unconstrained free parameters (any real values), then
    /// canonicalize angles into their ranges.
    pub fn from_free_params(v: usize, params: &[f64]) -> Result<Self, SearchError> {
        Self::from_points(&points_from_free(v, params)?)
    }

    /// Free parameters `[θ₁, θ₂, φ₂, θ₃, φ₃, …]`, length `2v − 3`.
    pub fn free_params(&self) -> Vec<f64> {
        let mut x = Vec::with_capacity(free_dim(self.angles.len()));
        x.push(self.angles[1].0);
        for &(t, p) in &self.angles[2..] {
            x.push(t);
            x.push(p);
        }
        x
    }

    pub fn angles(&self) -> &[(f64, f64)] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn to_points(&self) -> Vec<Vec3> {
        self.angles.iter().map(|&(t, p)| Vec3::from_spherical(t, p)).collect()
    }
}

/// Number of free angles for `v` gauged points.
pub fn free_dim(v: usize) -> usize {
    2 * v - 3
}

/// Points for a raw free-parameter vector, without canonicalization.
pub fn points_from_free(v: usize, params: &[f64]) -> Result<Vec<Vec3>, SearchError> {
    if v < 4 {
        return Err(SearchError::TooFewPoints(v));
    }
    if params.len() != free_dim(v) {
        return Err(SearchError::ParamLength { expected: free_dim(v), found: params.len() });
    }
    let mut pts = Vec::with_capacity(v);
    pts.push(Vec3::new(0.0, 0.0, 1.0));
    pts.push(Vec3::from_spherical(params[0], 0.0));
    pts.extend(params[1..].chunks_exact(2).map(|c| Vec3::from_spherical(c[0], c[1])));
    Ok(pts)
}

/// Polar/azimuth pairs in range for a point set already in gauge (used by tests).
#[allow(dead_code)]
pub(crate) fn in_range(c: &SphericalConfig) -> bool {
    c.angles
        .iter()
        .all(|&(t, p)| (0.0..=PI).contains(&t) && (0.0..TAU).contains(&p))
}
