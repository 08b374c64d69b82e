//! Behavioral checks of the directed hull against standard convexity: the
//! dense-direction limit and the shrinking area deficit.

use chull_lab::directed::{DirectedHull, DirectionSet};
use chull_lab::experiments::{run, ExperimentConfig, Statistic};
use chull_lab::geom::{convex_hull, point_in_convex_polygon, Point2};
use chull_lab::sampling::{substream, Region};

fn segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let t = ((p - a).dot(ab) / ab.dot(ab)).clamp(0.0, 1.0);
    (p - (a + ab.scale(t))).norm()
}

fn hull_boundary_distance(p: Point2, hull: &chull_lab::geom::ConvexPolygon) -> f64 {
    let v = hull.vertices();
    (0..v.len())
        .map(|i| segment_distance(p, v[i], v[(i + 1) % v.len()]))
        .fold(f64::INFINITY, f64::min)
}

/// With 256 equally spaced directions, membership in the directed hull
/// agrees with convex-polygon containment for every probe farther than 1e-3
/// from the hull boundary.
#[test]
fn dense_direction_limit_matches_convex_hull() {
    // Points densely placed on a circle keep the hull edges short, so the
    // wedge dips between samples stay below the probe clearance.
    let ring: Vec<Point2> = (0..360)
        .map(|i| {
            let a = std::f64::consts::TAU * (i as f64 + 0.37) / 360.0;
            Point2::new(0.9 * a.cos(), 0.9 * a.sin())
        })
        .collect();
    let d = DirectionSet::equally_spaced(128);
    assert_eq!(d.len(), 256);
    let dch = DirectedHull::build(&ring, &d).unwrap();
    let hull = convex_hull(&ring).unwrap();

    let region = Region::disk(1.0).unwrap();
    let mut rng = substream(71, 0);
    let mut compared = 0;
    for _ in 0..600 {
        let p = region.sample(&mut rng).as_point2().unwrap();
        if hull_boundary_distance(p, &hull) <= 1e-3 {
            continue;
        }
        compared += 1;
        assert_eq!(
            dch.contains(p),
            point_in_convex_polygon(p, &hull),
            "disagreement at ({}, {})",
            p.x,
            p.y
        );
    }
    assert!(compared > 500);
}

/// The directed-hull area deficit (one minus area over pi) shrinks as n
/// grows, for a moderately dense direction set in the disk.
#[test]
fn area_deficit_decreases_with_n() {
    let cfg = ExperimentConfig {
        statistic: Statistic::DchAreaDeficit,
        region: "disk".into(),
        directions: Some("equal:32".into()),
        dimension: None,
        n_grid: vec![256, 1024, 4096],
        trials: 6,
        master_seed: 72,
        parallelism: None,
    };
    let rows = chull_lab::experiments::aggregate(&run(&cfg).unwrap());
    assert_eq!(rows.len(), 3);
    assert!(
        rows[0].mean > rows[1].mean && rows[1].mean > rows[2].mean,
        "deficits not decreasing: {:?}",
        rows.iter().map(|r| r.mean).collect::<Vec<_>>()
    );
}
