//! Multi-start local search over point configurations on S².
//!
//! Each restart draws `v` Haar-uniform points from its own ChaCha8 stream
//! (seeded with the run seed, stream number = restart index), gauge-fixes
//! them, and climbs the area or volume of their hull. Restarts run in
//! parallel; the reduction walks them in index order so results do not
//! depend on thread scheduling.

mod cap;
mod config;
mod optimize;

pub use cap::{constrained_cap_search, constrained_cap_search_with, CapSearchResult};
pub use config::{free_dim, points_from_free, SphericalConfig};
pub use optimize::{central_gradient, maximize, LocalOptions, LocalOutcome};

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use thiserror::Error;

use crate::analytic::{
    icosahedron_area, icosahedron_volume, pyramid_max_area, pyramid_max_volume, tetrahedron_area, tetrahedron_volume,
};
use crate::geom::{convex_hull, hull_measures, GeomError, Polyhedron, Vec3};

/// Restarts whose final value is within this of the reference optimum count
/// as having found it.
pub const CONVERGED_VALUE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    Area,
    Volume,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Area => "area",
            Objective::Volume => "volume",
        })
    }
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum SearchError {
    #[error("need at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("expected {expected} free parameters, got {found}")]
    ParamLength { expected: usize, found: usize },
    #[error("zero vector cannot be placed on the sphere")]
    ZeroPoint,
    #[error("restart count must be positive")]
    NoRestarts,
    #[error("cap height {0} outside (0, 2)")]
    CapHeight(f64),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

/// Area or volume of the hull of `points`; 0 for degenerate configurations.
pub fn objective_of_points(points: &[Vec3], kind: Objective) -> f64 {
    match hull_measures(points) {
        Ok((a, v)) => match kind {
            Objective::Area => a,
            Objective::Volume => v,
        },
        Err(_) => 0.0,
    }
}

/// Objective value of a configuration.
pub fn objective(c: &SphericalConfig, kind: Objective) -> f64 {
    objective_of_points(&c.to_points(), kind)
}

/// Best known global maximum, where it is established.
pub fn known_optimum(v: usize, kind: Objective) -> Option<f64> {
    match (kind, v) {
        (Objective::Area, 4) => Some(tetrahedron_area()),
        (Objective::Area, 5) => Some(1.5 * 15f64.sqrt()),
        (Objective::Area, 6) => Some(4.0 * 3f64.sqrt()),
        (Objective::Area, 12) => Some(icosahedron_area()),
        (Objective::Volume, 4) => Some(tetrahedron_volume()),
        (Objective::Volume, 5) => Some(0.5 * 3f64.sqrt()),
        (Objective::Volume, 6) => Some(4.0 / 3.0),
        (Objective::Volume, 12) => Some(icosahedron_volume()),
        _ => None,
    }
}

/// Largest value over pyramids, for comparison with the search.
pub fn pyramid_reference(v: usize, kind: Objective) -> f64 {
    match kind {
        Objective::Area => pyramid_max_area(v),
        Objective::Volume => pyramid_max_volume(v),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalResult {
    pub config: SphericalConfig,
    pub start_value: f64,
    pub value: f64,
    pub iterations: usize,
    /// False on iteration cap, stalled line search, or a degenerate
    /// (zero-objective) end point.
    pub converged: bool,
    pub trace: Vec<f64>,
}

/// Climb `kind` from `start`. The value never decreases along the trace.
pub fn local_optimize(start: &SphericalConfig, kind: Objective, opts: &LocalOptions) -> LocalResult {
    let v = start.len();
    let f = |x: &[f64]| {
        points_from_free(v, x).map(|p| objective_of_points(&p, kind)).unwrap_or(0.0)
    };
    let out = maximize(f, &start.free_params(), opts);
    let config = SphericalConfig::from_free_params(v, &out.x).expect("length preserved");
    LocalResult {
        start_value: out.trace[0],
        value: out.value,
        iterations: out.iterations,
        converged: out.converged && out.value > 0.0,
        trace: out.trace,
        config,
    }
}

/// The start configuration for restart `index` of a run seeded with `seed`.
pub fn random_start(v: usize, seed: u64, index: u64) -> SphericalConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let points: Vec<Vec3> = (0..v)
        .map(|_| loop {
            let p = Vec3::new(
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            );
            if let Some(u) = p.normalized() {
                break u;
            }
        })
        .collect();
    SphericalConfig::from_points(&points).expect("non-zero points")
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub best_config: SphericalConfig,
    pub best_value: f64,
    pub objective: Objective,
    pub restarts_used: usize,
    /// Share of restarts ending within [`CONVERGED_VALUE_TOL`] of the known
    /// optimum, or of `best_value` when no optimum is catalogued.
    pub converged_fraction: f64,
    /// Restarts flagged as not converged.
    pub non_converged: usize,
    /// Final value of every restart, in restart order.
    pub trace: Vec<f64>,
}

impl SearchResult {
    pub fn best_polyhedron(&self) -> Result<Polyhedron, GeomError> {
        convex_hull(&self.best_config.to_points())
    }
}

/// Multi-start search with default local options.
pub fn multi_start(v: usize, kind: Objective, restarts: usize, seed: u64) -> Result<SearchResult, SearchError> {
    multi_start_with(v, kind, restarts, seed, &LocalOptions::default())
}

pub fn multi_start_with(
    v: usize,
    kind: Objective,
    restarts: usize,
    seed: u64,
    opts: &LocalOptions,
) -> Result<SearchResult, SearchError> {
    if v < 4 {
        return Err(SearchError::TooFewPoints(v));
    }
    if restarts == 0 {
        return Err(SearchError::NoRestarts);
    }
    let runs: Vec<LocalResult> = (0..restarts as u64)
        .into_par_iter()
        .map(|i| local_optimize(&random_start(v, seed, i), kind, opts))
        .collect();

    let mut best = 0;
    for (i, r) in runs.iter().enumerate() {
        if r.value > runs[best].value {
            best = i;
        }
    }
    let trace: Vec<f64> = runs.iter().map(|r| r.value).collect();
    let reference = known_optimum(v, kind).unwrap_or(runs[best].value);
    let hits = trace.iter().filter(|&&x| (x - reference).abs() <= CONVERGED_VALUE_TOL).count();
    let non_converged = runs.iter().filter(|r| !r.converged).count();
    let best_config = runs[best].config.clone();
    Ok(SearchResult {
        best_value: objective(&best_config, kind),
        best_config,
        objective: kind,
        restarts_used: restarts,
        converged_fraction: hits as f64 / restarts as f64,
        non_converged,
        trace,
    })
}
