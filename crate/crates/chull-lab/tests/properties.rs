//! Property tests for the geometric invariants. Point coordinates are drawn
//! from a dyadic lattice and wedge generators from small integers, so every
//! orientation/cross-product predicate evaluates exactly and the properties
//! hold with no tolerance, including on shrunk degenerate inputs.

use proptest::prelude::*;

use chull_lab::directed::{self, ConeFamily, DirectedHull, DirectionSet};
use chull_lab::geom::{
    arc_max_along_normal, convex_hull, orient, point_in_convex_polygon, polygon_area, Point2,
};

fn dyadic() -> impl Strategy<Value = f64> {
    (-512i32..=512).prop_map(|i| i as f64 / 64.0)
}

fn dyadic_point() -> impl Strategy<Value = Point2> {
    (dyadic(), dyadic()).prop_map(|(x, y)| Point2::new(x, y))
}

fn point_set(max: usize) -> impl Strategy<Value = Vec<Point2>> {
    proptest::collection::vec(dyadic_point(), 1..max)
}

/// General-position floats as well: every one of 1000 uniform disk samples
/// lies in its own hull.
#[test]
fn disk_sample_hull_containment() {
    let region = chull_lab::sampling::Region::disk(1.0).unwrap();
    let mut rng = chull_lab::sampling::substream(61, 0);
    let pts = region.sample_planar(1000, &mut rng);
    let hull = convex_hull(&pts).unwrap();
    for &p in &pts {
        assert!(point_in_convex_polygon(p, &hull));
    }
}

/// Small integer wedge generators; determinant at least 1 by construction.
fn wedge_generators() -> impl Strategy<Value = (Point2, Point2)> {
    ((-8i32..=8, -8i32..=8), (-8i32..=8, -8i32..=8))
        .prop_filter("independent generators", |((ax, ay), (bx, by))| {
            ax * by - ay * bx != 0
        })
        .prop_map(|((ax, ay), (bx, by))| {
            (
                Point2::new(ax as f64, ay as f64),
                Point2::new(bx as f64, by as f64),
            )
        })
}

proptest! {
    #[test]
    fn orientation_antisymmetry(p in dyadic_point(), q in dyadic_point(), r in dyadic_point()) {
        prop_assert_eq!(orient(p, q, r), -orient(p, r, q));
    }

    #[test]
    fn hull_idempotent(pts in point_set(60)) {
        let hull = convex_hull(&pts).unwrap();
        let again = convex_hull(hull.vertices()).unwrap();
        prop_assert_eq!(hull.vertices(), again.vertices());
    }

    #[test]
    fn hull_contains_every_input(pts in point_set(60)) {
        let hull = convex_hull(&pts).unwrap();
        for &p in &pts {
            prop_assert!(point_in_convex_polygon(p, &hull));
        }
    }

    #[test]
    fn hull_area_monotone(pts in point_set(40), extra in point_set(20)) {
        let small = polygon_area(&convex_hull(&pts).unwrap());
        let mut all = pts.clone();
        all.extend_from_slice(&extra);
        let big = polygon_area(&convex_hull(&all).unwrap());
        prop_assert!(big >= small);
    }

    #[test]
    fn staircase_matches_bruteforce(pts in point_set(50), gens in wedge_generators()) {
        let (u1, u2) = gens;
        let mut fast = directed::staircase(&pts, u1, u2).unwrap();
        fast.sort_unstable();
        let fam = ConeFamily::Wedge {
            u1: if u1.cross(u2) < 0.0 { u2 } else { u1 },
            u2: if u1.cross(u2) < 0.0 { u1 } else { u2 },
        };
        let brute: Vec<usize> = (0..pts.len())
            .filter(|&i| {
                pts.iter().enumerate().all(|(j, &q)| j == i || !fam.contains_open(pts[i], q))
            })
            .collect();
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn point_set_is_inside_its_own_hull(pts in point_set(40)) {
        let d = DirectionSet::axis_parallel();
        let hull = DirectedHull::build(&pts, &d).unwrap();
        for &p in &pts {
            prop_assert!(hull.contains(p));
        }
    }

    #[test]
    fn exposure_matches_naive_for_axis_directions(pts in point_set(40)) {
        let d = DirectionSet::axis_parallel();
        let fast = directed::exposed_points(&pts, &d).unwrap().exposed;
        let naive = chull_lab::oracle::naive_exposed(&pts, &d).unwrap();
        prop_assert_eq!(fast, naive);
    }

    #[test]
    fn boundary_count_invariant_under_similarity(
        pts in point_set(40),
        scale_exp in -1i32..=2,
        tx in dyadic(),
        ty in dyadic(),
    ) {
        let d = DirectionSet::axis_parallel();
        let base = directed::boundary_count(&pts, &d).unwrap();
        let s = 2f64.powi(scale_exp);
        let moved: Vec<Point2> =
            pts.iter().map(|p| Point2::new(p.x * s + tx, p.y * s + ty)).collect();
        prop_assert_eq!(directed::boundary_count(&moved, &d).unwrap(), base);
    }

    #[test]
    fn direction_monotonicity(pts in point_set(30), probe in dyadic_point()) {
        // Exact vector superset: axis directions plus the diagonals.
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let small = DirectionSet::axis_parallel();
        let big = DirectionSet::from_vectors(
            &[
                Point2::new(1.0, 0.0),
                Point2::new(0.0, 1.0),
                Point2::new(s, s),
                Point2::new(-s, s),
            ],
            true,
        )
        .unwrap();
        let in_small = DirectedHull::build(&pts, &small).unwrap().contains(probe);
        let in_big = DirectedHull::build(&pts, &big).unwrap().contains(probe);
        prop_assert!(!in_small || in_big, "monotonicity violated");
    }

    #[test]
    fn arc_max_agrees_with_dense_sampling(
        radius in 0.25f64..4.0,
        lo in -6.0f64..6.0,
        span in 0.01f64..std::f64::consts::TAU,
        nx in -4.0f64..4.0,
        ny in -4.0f64..4.0,
    ) {
        prop_assume!(nx.hypot(ny) > 1e-3);
        let normal = Point2::new(nx, ny);
        let hi = lo + span;
        let closed_form = arc_max_along_normal(radius, lo, hi, normal).unwrap();
        // Oracle: 10^4-point scan, then ternary refinement of the
        // bracketing interval; never touches the closed form.
        let f = |t: f64| radius * (t.cos() * nx + t.sin() * ny);
        let steps = 10_000usize;
        let mut best_i = 0usize;
        let mut best = f64::NEG_INFINITY;
        for i in 0..=steps {
            let v = f(lo + span * i as f64 / steps as f64);
            if v > best {
                best = v;
                best_i = i;
            }
        }
        let mut a = lo + span * best_i.saturating_sub(1) as f64 / steps as f64;
        let mut b = lo + span * (best_i + 1).min(steps) as f64 / steps as f64;
        for _ in 0..200 {
            let m1 = a + (b - a) / 3.0;
            let m2 = b - (b - a) / 3.0;
            if f(m1) < f(m2) {
                a = m1;
            } else {
                b = m2;
            }
        }
        let oracle = best.max(f(0.5 * (a + b)));
        prop_assert!((closed_form - oracle).abs() <= 1e-9,
            "closed {closed_form} vs sampled {oracle}");
    }
}
