//! Polyhedra inscribed in the unit sphere: convex hulls, closed-form
//! surface-area and volume optima for pyramids and bipyramids, distortion
//! (discrepancy) measures against those optima, and a multi-start numerical
//! search that re-derives the optima independently.

pub mod geom;
pub mod analytic;
pub mod discrepancy;
pub mod search;
