//! Surface-area and volume discrepancy of an observed polyhedron against the
//! inscribed polyhedron of the same combinatorial type with maximal area
//! (respectively volume):
//!
//! ```text
//! S(P) = 1 − area(P) / area(ideal),   V(P) = 1 − vol(P) / vol(ideal)
//! ```
//!
//! Ideals are only known for some families; see [`ideal_area`].

use thiserror::Error;

use crate::analytic::{
    bipyramid_max_area, bipyramid_max_volume, icosahedron_area, icosahedron_volume, pyramid_max_area,
    pyramid_max_volume, tetrahedron_area, tetrahedron_volume,
};
use crate::geom::{convex_hull, CombinatorialType, FamilyLabel, GeomError, Polyhedron, Vec3};

/// How observed vertices are treated before measuring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Normalization {
    /// Project every vertex onto S² and rebuild the hull.
    #[default]
    Renormalize,
    /// Measure the polyhedron as given.
    AsGiven,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiscrepancyReport {
    pub observed_area: f64,
    pub observed_volume: f64,
    pub ideal_area: Option<f64>,
    pub ideal_volume: Option<f64>,
    pub surface_discrepancy: Option<f64>,
    pub volume_discrepancy: Option<f64>,
    pub combinatorial_type: CombinatorialType,
}

impl DiscrepancyReport {
    pub fn ideal_known(&self) -> bool {
        self.ideal_area.is_some() && self.ideal_volume.is_some()
    }
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum DiscrepancyError {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("no ideal polyhedron is known for combinatorial type {}", .0.combinatorial_type.label)]
    UnknownIdeal(Box<DiscrepancyReport>),
}

/// Maximal inscribed surface area for a combinatorial family, when known.
pub fn ideal_area(label: FamilyLabel) -> Option<f64> {
    match label {
        FamilyLabel::Simplex => Some(tetrahedron_area()),
        FamilyLabel::Pyramid(5) => Some(pyramid_max_area(5)),
        FamilyLabel::Bipyramid(v) => Some(bipyramid_max_area(v)),
        FamilyLabel::Icosahedron => Some(icosahedron_area()),
        _ => None,
    }
}

/// Maximal inscribed volume for a combinatorial family, when known.
pub fn ideal_volume(label: FamilyLabel) -> Option<f64> {
    match label {
        FamilyLabel::Simplex => Some(tetrahedron_volume()),
        FamilyLabel::Pyramid(5) => Some(pyramid_max_volume(5)),
        FamilyLabel::Bipyramid(v) => Some(bipyramid_max_volume(v)),
        FamilyLabel::Icosahedron => Some(icosahedron_volume()),
        _ => None,
    }
}

/// `1 − observed / ideal`.
pub fn relative_deficit(ideal: f64, observed: f64) -> f64 {
    1.0 - observed / ideal
}

/// Measure `p` and compare against its family's ideals. Unknown ideals leave
/// the corresponding fields empty.
pub fn evaluate(p: &Polyhedron, normalization: Normalization) -> Result<DiscrepancyReport, GeomError> {
    let renormalized;
    let p = match normalization {
        Normalization::AsGiven => p,
        Normalization::Renormalize => {
            let projected: Vec<Vec3> = p
                .vertices()
                .iter()
                .map(|v| v.normalized().ok_or(GeomError::ZeroVector))
                .collect::<Result<_, _>>()?;
            renormalized = convex_hull(&projected)?;
            &renormalized
        }
    };
    let combinatorial_type = p.classify();
    let observed_area = p.surface_area();
    let observed_volume = p.volume();
    let ideal_area = ideal_area(combinatorial_type.label);
    let ideal_volume = ideal_volume(combinatorial_type.label);
    Ok(DiscrepancyReport {
        observed_area,
        observed_volume,
        ideal_area,
        ideal_volume,
        surface_discrepancy: ideal_area.map(|a| relative_deficit(a, observed_area)),
        volume_discrepancy: ideal_volume.map(|v| relative_deficit(v, observed_volume)),
        combinatorial_type,
    })
}

fn require_ideal(report: DiscrepancyReport) -> Result<DiscrepancyReport, DiscrepancyError> {
    if report.ideal_known() {
        Ok(report)
    } else {
        Err(DiscrepancyError::UnknownIdeal(Box::new(report)))
    }
}

/// Surface-area discrepancy of `p` after projecting its vertices onto S².
pub fn surface_discrepancy(p: &Polyhedron) -> Result<DiscrepancyReport, DiscrepancyError> {
    require_ideal(evaluate(p, Normalization::Renormalize)?)
}

/// Volume discrepancy of `p` after projecting its vertices onto S².
///
/// Returns the same report as [`surface_discrepancy`]; both functionals are
/// always filled in together.
pub fn volume_discrepancy(p: &Polyhedron) -> Result<DiscrepancyReport, DiscrepancyError> {
    surface_discrepancy(p)
}
