//! Points on the unit sphere, convex hulls and their measures.

mod classify;
mod hull;
mod point;
mod polyhedron;
mod vec3;

use thiserror::Error;

pub use classify::{CombinatorialType, FamilyLabel};
pub use hull::{convex_hull, hull_measures, DUPLICATE_DIST, MERGE_ANGLE, ORIENT_EPS};
pub use point::{triangular_bipyramid_vertices, UnitPoint};
pub use polyhedron::Polyhedron;
pub use vec3::{Rotation, Vec3};

pub(crate) use hull::TriangulatedHull;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GeomError {
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("input contains NaN or infinite coordinates")]
    NonFinite,
    #[error("need at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("degenerate input: points {0} and {1} coincide")]
    Coincident(usize, usize),
    #[error("degenerate input: all points are collinear")]
    Collinear,
    #[error("degenerate input: all points are coplanar")]
    Coplanar,
    #[error("hull construction failed on nearly degenerate input")]
    NumericalFailure,
    #[error("malformed facet list: {0}")]
    MalformedFacets(String),
}

impl GeomError {
    /// True for the affinely dependent or numerically degenerate cases.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            GeomError::Coincident(..) | GeomError::Collinear | GeomError::Coplanar | GeomError::NumericalFailure
        )
    }
}
