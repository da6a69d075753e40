//! Lateral-area search for v-pyramids confined to a spherical cap.
//!
//! The cap of height `h` is the part of the unit ball above the plane
//! `z = 1 − h`. The `v − 1` base vertices live in that plane inside the base
//! disc of radius `R`, and the apex lies in the cap above it with its
//! orthogonal projection inside the base polygon.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{maximize, LocalOptions, SearchError, CONVERGED_VALUE_TOL};
use crate::analytic::{pyramid_lateral_bound, CapGeometry};
use crate::geom::{TriangulatedHull, Vec3};

#[derive(Clone, Debug, PartialEq)]
pub struct CapSearchResult {
    pub v: usize,
    pub h: f64,
    /// Base vertices in counterclockwise order seen from above.
    pub base: Vec<Vec3>,
    pub apex: Vec3,
    pub best_value: f64,
    /// The closed-form lateral bound for this cap.
    pub bound: f64,
    pub restarts_used: usize,
    /// Share of restarts ending within [`CONVERGED_VALUE_TOL`] of `bound`.
    pub converged_fraction: f64,
    pub non_converged: usize,
    /// Final value of every restart, in restart order.
    pub trace: Vec<f64>,
}

impl CapSearchResult {
    /// Interior angles of the base polygon.
    pub fn base_angles(&self) -> Vec<f64> {
        let n = self.base.len();
        (0..n)
            .map(|i| {
                let p = self.base[i];
                let a = self.base[(i + n - 1) % n] - p;
                let b = self.base[(i + 1) % n] - p;
                a.cross(b).norm().atan2(a.dot(b))
            })
            .collect()
    }

    /// Largest deviation of a base angle from the regular polygon's angle.
    pub fn max_angle_deviation(&self) -> f64 {
        let regular = PI - TAU / self.base.len() as f64;
        self.base_angles().iter().map(|a| (a - regular).abs()).fold(0.0, f64::max)
    }

    /// Horizontal distance from the apex to the axis of the cap.
    pub fn apex_offset(&self) -> f64 {
        self.apex.x.hypot(self.apex.y)
    }
}

/// Parameter layout for `n = v − 1` base vertices:
/// `[s₁ … sₙ, α₂ … αₙ, a, b, s_a]`.
///
/// Base vertex `i` is `(R cos sᵢ cos αᵢ, R cos sᵢ sin αᵢ, 1 − h)` with `α₁ = 0`;
/// the apex is `cos s_a · (a, b, 1)/|(a, b, 1)|`. Every parameter vector maps
/// into the cap, so the search is unconstrained.
struct CapParams {
    n: usize,
    radius: f64,
    plane: f64,
}

impl CapParams {
    fn dim(&self) -> usize {
        2 * self.n + 2
    }

    fn points(&self, x: &[f64]) -> Vec<Vec3> {
        let n = self.n;
        let mut pts: Vec<Vec3> = (0..n)
            .map(|i| {
                let r = self.radius * x[i].cos();
                let alpha = if i == 0 { 0.0 } else { x[n + i - 1] };
                Vec3::new(r * alpha.cos(), r * alpha.sin(), self.plane)
            })
            .collect();
        let (a, b, sa) = (x[2 * n - 1], x[2 * n], x[2 * n + 1]);
        let dir = Vec3::new(a, b, 1.0);
        pts.push(dir * (sa.cos() / dir.norm()));
        pts
    }

    /// Lateral area, or 0 when the apex is not strictly above the base plane,
    /// its foot falls outside the base, or the hull is degenerate.
    fn lateral_area(&self, x: &[f64]) -> f64 {
        let pts = self.points(x);
        let apex_id = self.n;
        let apex = pts[apex_id];
        if apex.z <= self.plane + 1e-12 {
            return 0.0;
        }
        let Ok(hull) = TriangulatedHull::build(&pts) else {
            return 0.0;
        };
        let mut lateral = 0.0;
        let mut foot_inside = false;
        for t in hull.triangles() {
            let [a, b, c] = t.map(|i| pts[i]);
            if t.contains(&apex_id) {
                lateral += 0.5 * (b - a).cross(c - a).norm();
            } else if in_triangle_xy(apex, a, b, c) {
                foot_inside = true;
            }
        }
        if foot_inside {
            lateral
        } else {
            0.0
        }
    }

    fn random_start(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let n = self.n;
        let mut x = Vec::with_capacity(self.dim());
        x.extend((0..n).map(|_| rng.random_range(-0.3..0.3)));
        let step = TAU / n as f64;
        let jitter: Vec<f64> = (0..n).map(|_| rng.random_range(-0.2..0.2) * step).collect();
        x.extend((1..n).map(|i| i as f64 * step + jitter[i] - jitter[0]));
        x.push(rng.random_range(-0.1..0.1));
        x.push(rng.random_range(-0.1..0.1));
        x.push(rng.random_range(-0.3..0.3));
        x
    }
}

fn in_triangle_xy(p: Vec3, a: Vec3, b: Vec3, c: Vec3) -> bool {
    let cross = |o: Vec3, u: Vec3, w: Vec3| (u.x - o.x) * (w.y - o.y) - (u.y - o.y) * (w.x - o.x);
    let (d1, d2, d3) = (cross(a, b, p), cross(b, c, p), cross(c, a, p));
    let neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
    let pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
    !(neg && pos)
}

/// Maximize the lateral area of a v-pyramid in the cap of height `h`.
pub fn constrained_cap_search(v: usize, h: f64, restarts: usize, seed: u64) -> Result<CapSearchResult, SearchError> {
    constrained_cap_search_with(v, h, restarts, seed, &LocalOptions::default().with_grad_tol(1e-7))
}

pub fn constrained_cap_search_with(
    v: usize,
    h: f64,
    restarts: usize,
    seed: u64,
    opts: &LocalOptions,
) -> Result<CapSearchResult, SearchError> {
    if v < 4 {
        return Err(SearchError::TooFewPoints(v));
    }
    if restarts == 0 {
        return Err(SearchError::NoRestarts);
    }
    let cap = CapGeometry::full_height(h).map_err(|_| SearchError::CapHeight(h))?;
    let params = CapParams { n: v - 1, radius: cap.radius(), plane: cap.base_plane() };
    let bound = pyramid_lateral_bound(v, h).map_err(|_| SearchError::CapHeight(h))?;

    let runs: Vec<_> = (0..restarts as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let x0 = params.random_start(&mut rng);
            maximize(|x: &[f64]| params.lateral_area(x), &x0, opts)
        })
        .collect();

    let mut best = 0;
    for (i, r) in runs.iter().enumerate() {
        if r.value > runs[best].value {
            best = i;
        }
    }
    let trace: Vec<f64> = runs.iter().map(|r| r.value).collect();
    let hits = trace.iter().filter(|&&x| (x - bound).abs() <= CONVERGED_VALUE_TOL).count();
    let non_converged = runs.iter().filter(|r| !(r.converged && r.value > 0.0)).count();

    let mut pts = params.points(&runs[best].x);
    let apex = pts.pop().expect("apex present");
    let cx = pts.iter().map(|p| p.x).sum::<f64>() / pts.len() as f64;
    let cy = pts.iter().map(|p| p.y).sum::<f64>() / pts.len() as f64;
    pts.sort_by(|p, q| (p.y - cy).atan2(p.x - cx).total_cmp(&(q.y - cy).atan2(q.x - cx)));

    Ok(CapSearchResult {
        v,
        h,
        base: pts,
        apex,
        best_value: runs[best].value,
        bound,
        restarts_used: restarts,
        converged_fraction: hits as f64 / restarts as f64,
        non_converged,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_parameters_reach_the_bound() {
        let cap = CapGeometry::full_height(0.8).unwrap();
        let p = CapParams { n: 4, radius: cap.radius(), plane: cap.base_plane() };
        let x = [0.0, 0.0, 0.0, 0.0, PI / 2.0, PI, 1.5 * PI, 0.0, 0.0, 0.0];
        let bound = pyramid_lateral_bound(5, 0.8).unwrap();
        assert!((p.lateral_area(&x) - bound).abs() < 1e-12);
    }

    #[test]
    fn apex_outside_base_scores_zero() {
        let cap = CapGeometry::full_height(1.0).unwrap();
        let p = CapParams { n: 4, radius: cap.radius(), plane: cap.base_plane() };
        let x = [0.0, 0.0, 0.0, 0.0, PI / 2.0, PI, 1.5 * PI, 5.0, 5.0, 0.0];
        assert_eq!(p.lateral_area(&x), 0.0);
    }

    #[test]
    fn angles_of_a_square() {
        let r = CapSearchResult {
            v: 5,
            h: 1.0,
            base: vec![
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(0.0, 1.0, 0.0),
                Vec3::new(-1.0, 0.0, 0.0),
                Vec3::new(0.0, -1.0, 0.0),
            ],
            apex: Vec3::new(0.0, 0.0, 1.0),
            best_value: 0.0,
            bound: 0.0,
            restarts_used: 1,
            converged_fraction: 0.0,
            non_converged: 0,
            trace: vec![],
        };
        assert!(r.max_angle_deviation() < 1e-15);
        assert_eq!(r.apex_offset(), 0.0);
    }

    #[test]
    fn rejects_bad_height() {
        assert_eq!(constrained_cap_search(5, 2.0, 3, 0), Err(SearchError::CapHeight(2.0)));
    }
}
