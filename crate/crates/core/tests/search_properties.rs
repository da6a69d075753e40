use std::f64::consts::PI;

use inscribed::analytic::{
    build_ideal_pyramid, g_bound, optimal_pyramid_height, pyramid_lateral_bound, pyramid_max_area,
};
use inscribed::geom::{convex_hull, FamilyLabel, Rotation, Vec3};
use inscribed::search::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn five_point_max() -> f64 {
    1.5 * 15f64.sqrt()
}

/// The triangular bipyramid in gauge: poles, then the girdle at azimuths 0, 2π/3, 4π/3.
fn bipyramid_params() -> Vec<f64> {
    vec![PI, PI / 2.0, 0.0, PI / 2.0, 2.0 * PI / 3.0, PI / 2.0, 4.0 * PI / 3.0]
}

#[test]
fn bipyramid_angles_give_the_five_point_maximum() {
    let c = SphericalConfig::from_free_params(5, &bipyramid_params()).unwrap();
    assert!((objective(&c, Objective::Area) - five_point_max()).abs() < 1e-12);
}

#[test]
fn octahedron_angles_give_four_root_three() {
    let h = PI / 2.0;
    let params = [PI, h, 0.0, h, h, h, PI, h, 1.5 * PI];
    let c = SphericalConfig::from_free_params(6, &params).unwrap();
    assert!((objective(&c, Objective::Area) - 4.0 * 3f64.sqrt()).abs() < 1e-12);
    assert!((objective(&c, Objective::Volume) - 4.0 / 3.0).abs() < 1e-12);
}

#[test]
fn coincident_points_score_zero() {
    let p = Vec3::new(0.3, 0.4, 0.5).normalized().unwrap();
    assert_eq!(objective_of_points(&[p; 5], Objective::Area), 0.0);
    assert_eq!(objective_of_points(&[p; 5], Objective::Volume), 0.0);
}

#[test]
fn perturbed_bipyramid_climbs_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let x: Vec<f64> = bipyramid_params().iter().map(|t| t + rng.random_range(-0.05..0.05)).collect();
        let start = SphericalConfig::from_free_params(5, &x).unwrap();
        let r = local_optimize(&start, Objective::Area, &LocalOptions::default());
        assert!(r.converged);
        assert!((r.value - five_point_max()).abs() < 1e-8, "{}", r.value);
        assert!(r.value >= r.start_value - 1e-12);
    }
}

#[test]
fn ideal_pyramid_is_stationary_for_the_search() {
    let start = SphericalConfig::from_points(build_ideal_pyramid(5).vertices()).unwrap();
    let r = local_optimize(&start, Objective::Area, &LocalOptions::default());
    assert!(r.converged);
    assert!((r.value - 5.77886).abs() < 1e-5);
    assert!((r.value - pyramid_max_area(5)).abs() < 1e-9);
}

#[test]
fn degenerate_start_escapes_or_is_flagged() {
    let n = Vec3::new(0.0, 0.0, 1.0);
    let q = Vec3::new(1.0, 0.0, 0.0);
    let start = SphericalConfig::from_points(&[n, -n, q, q, q]).unwrap();
    assert_eq!(objective(&start, Objective::Area), 0.0);
    let r = local_optimize(&start, Objective::Area, &LocalOptions::default());
    assert!(r.value > 0.0 || !r.converged);
}

#[test]
fn same_seed_same_result() {
    let a = multi_start(6, Objective::Area, 12, 99).unwrap();
    let b = multi_start(6, Objective::Area, 12, 99).unwrap();
    assert_eq!(a, b);
    let c = multi_start(6, Objective::Area, 12, 100).unwrap();
    assert_ne!(a.trace, c.trace);
}

#[test]
fn parallel_and_serial_runs_agree() {
    let par = multi_start(5, Objective::Volume, 8, 5).unwrap();
    let serial = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| multi_start(5, Objective::Volume, 8, 5).unwrap());
    assert_eq!(par, serial);
}

#[test]
fn best_value_matches_best_config() {
    let r = multi_start(7, Objective::Area, 10, 3).unwrap();
    assert!((r.best_value - objective(&r.best_config, Objective::Area)).abs() < 1e-12);
    assert_eq!(r.trace.len(), 10);
    assert!(r.trace.iter().all(|&x| x <= r.best_value + 1e-12));
}

#[test]
fn small_searches_find_known_maxima() {
    let r = multi_start(4, Objective::Area, 20, 1).unwrap();
    assert!((r.best_value - 8.0 / 3f64.sqrt()).abs() < 1e-6);
    let r = multi_start(5, Objective::Volume, 20, 1).unwrap();
    assert!((r.best_value - 3f64.sqrt() / 2.0).abs() < 1e-6);
    assert_eq!(r.best_polyhedron().unwrap().classify().label, FamilyLabel::Bipyramid(5));
}

#[test]
fn searched_values_respect_the_bound() {
    for v in 4..=8 {
        let r = multi_start(v, Objective::Area, 10, 8).unwrap();
        assert!(r.best_value <= g_bound(v) + 1e-9, "v={v}");
    }
    let r = multi_start(5, Objective::Area, 30, 8).unwrap();
    assert!(r.trace.iter().all(|&x| x <= five_point_max() + 1e-9));
}

#[test]
fn cap_search_at_half_sphere() {
    let r = constrained_cap_search(5, 1.0, 100, 2).unwrap();
    assert!((r.best_value - pyramid_lateral_bound(5, 1.0).unwrap()).abs() < 1e-6);
    assert!(r.best_value <= r.bound + 1e-9);
}

#[test]
fn cap_search_tall_triangle() {
    let r = constrained_cap_search(4, 1.5, 50, 2).unwrap();
    assert!((r.best_value - pyramid_lateral_bound(4, 1.5).unwrap()).abs() < 1e-6);
}

#[test]
fn cap_search_base_is_square_at_eta() {
    let r = constrained_cap_search(5, optimal_pyramid_height(5), 50, 3).unwrap();
    assert_eq!(r.base.len(), 4);
    assert!(r.max_angle_deviation() < 1e-4);
    assert!(r.apex_offset() < 1e-4);
}

#[test]
fn cap_search_is_reproducible() {
    let a = constrained_cap_search(6, 0.7, 6, 1).unwrap();
    let b = constrained_cap_search(6, 0.7, 6, 1).unwrap();
    assert_eq!(a, b);
}

#[test]
fn optimal_five_point_pyramid_is_tall() {
    // Regular pyramids shorter than 1 fall short of the maximum.
    let top = pyramid_max_area(5);
    for k in 1..10 {
        let h = k as f64 / 10.0;
        let base_area = 2.0 * (2.0 * h - h * h);
        assert!(pyramid_lateral_bound(5, h).unwrap() + base_area < top, "h={h}");
    }
}

fn gauged_config(v: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.2..2.9f64, free_dim(v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn objective_is_rotation_invariant(x in gauged_config(6), q in prop::array::uniform4(-1.0..1.0f64)) {
        prop_assume!(q.iter().map(|a| a * a).sum::<f64>() > 1e-3);
        let r = Rotation::from_quaternion(q[0], q[1], q[2], q[3]);
        let pts = points_from_free(6, &x).unwrap();
        let moved: Vec<Vec3> = pts.iter().map(|&p| r.apply(p)).collect();
        for kind in [Objective::Area, Objective::Volume] {
            let a = objective_of_points(&pts, kind);
            prop_assert!((a - objective_of_points(&moved, kind)).abs() < 1e-10);
            let gauged = SphericalConfig::from_points(&moved).unwrap();
            prop_assert!((a - objective(&gauged, kind)).abs() < 1e-10);
        }
    }

    #[test]
    fn local_ascent_never_decreases(x in gauged_config(5)) {
        let start = SphericalConfig::from_free_params(5, &x).unwrap();
        let r = local_optimize(&start, Objective::Area, &LocalOptions::default());
        prop_assert!(r.trace.windows(2).all(|w| w[1] >= w[0] - 1e-12));
        prop_assert!(r.value >= r.start_value - 1e-12);
        prop_assert!(r.value <= five_point_max() + 1e-9);
    }

    #[test]
    fn finite_differences_are_consistent(x in gauged_config(6), d in prop::collection::vec(-1.0..1.0f64, 9)) {
        let norm = d.iter().map(|a| a * a).sum::<f64>().sqrt();
        prop_assume!(norm > 0.1);
        let f = |t: f64| {
            let y: Vec<f64> = x.iter().zip(&d).map(|(a, b)| a + t * b / norm).collect();
            objective_of_points(&points_from_free(6, &y).unwrap(), Objective::Area)
        };
        prop_assume!(f(0.0) > 0.1);
        let coarse = (f(1e-5) - f(-1e-5)) / 2e-5;
        let fine = (f(1e-7) - f(-1e-7)) / 2e-7;
        // Skip configurations sitting on a change of combinatorial type.
        let left = (f(0.0) - f(-1e-5)) / 1e-5;
        let right = (f(1e-5) - f(0.0)) / 1e-5;
        prop_assume!((left - right).abs() < 1e-3 * (1.0 + coarse.abs()));
        prop_assert!((coarse - fine).abs() <= 1e-3 * coarse.abs().max(1e-3), "{} vs {}", coarse, fine);
    }
}

#[test]
fn random_starts_are_spread_over_the_sphere() {
    let mut mean = Vec3::ZERO;
    let n = 400;
    for i in 0..n {
        for p in random_start(5, 0, i).to_points().into_iter().skip(2) {
            mean += p;
        }
    }
    let mean = mean / (3 * n) as f64;
    assert!(mean.x.abs() < 0.1 && mean.y.abs() < 0.1);
    assert!(convex_hull(&random_start(8, 1, 0).to_points()).is_ok());
}
