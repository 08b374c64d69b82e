//! Planar primitives: orientation, convex hulls, polygon area and
//! containment, and the arc-vs-halfplane extremum used by tile exposure.
//!
//! Predicates are evaluated as plain floating determinants with no epsilon.
//! Random inputs are in general position with probability 1; degenerate
//! fixtures should use exactly representable coordinates.

use std::f64::consts::TAU;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("degenerate normal")]
    DegenerateNormal,
    #[error("invalid arc: radius must be positive and 0 <= span <= 2pi")]
    InvalidArc,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
}

/// A point (or free vector) in the plane. Coordinates are always finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    /// Panics on non-finite coordinates; use [`Point2::try_new`] for
    /// untrusted input.
    pub fn new(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "non-finite coordinate");
        Point2 { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self, GeomError> {
        if x.is_finite() && y.is_finite() {
            Ok(Point2 { x, y })
        } else {
            Err(GeomError::NonFinite)
        }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of `self × other`.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn scale(self, s: f64) -> Point2 {
        Point2 {
            x: self.x * s,
            y: self.y * s,
        }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Angle in [0, 2pi).
    pub fn angle(self) -> f64 {
        let a = self.y.atan2(self.x);
        if a < 0.0 {
            a + TAU
        } else {
            a
        }
    }

    /// Counterclockwise rotation by 90 degrees.
    pub fn rot90(self) -> Point2 {
        Point2 {
            x: -self.y,
            y: self.x,
        }
    }
}

impl std::ops::Add for Point2 {
    type Output = Point2;
    fn add(self, other: Point2) -> Point2 {
        Point2 {
            x: self.x + other.x,
            y: self.y + other.y,
        }
    }
}

impl std::ops::Sub for Point2 {
    type Output = Point2;
    fn sub(self, other: Point2) -> Point2 {
        Point2 {
            x: self.x - other.x,
            y: self.y - other.y,
        }
    }
}

impl std::ops::Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2 {
            x: -self.x,
            y: -self.y,
        }
    }
}

pub fn pt(x: f64, y: f64) -> Point2 {
    Point2::new(x, y)
}

/// A point in d-dimensional space.
#[derive(Debug, Clone, PartialEq)]
pub struct PointD {
    pub coords: Vec<f64>,
}

impl PointD {
    pub fn new(coords: Vec<f64>) -> Self {
        assert!(!coords.is_empty(), "dimension must be >= 1");
        assert!(
            coords.iter().all(|c| c.is_finite()),
            "non-finite coordinate"
        );
        PointD { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Signed area of the triangle pqr (twice, i.e. the raw 2x2 determinant).
pub fn cross(p: Point2, q: Point2, r: Point2) -> f64 {
    (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
}

/// Sign of the signed area of triangle pqr: +1 for counterclockwise,
/// -1 for clockwise, 0 for collinear.
pub fn orient(p: Point2, q: Point2, r: Point2) -> i32 {
    let det = cross(p, q, r);
    if det > 0.0 {
        1
    } else if det < 0.0 {
        -1
    } else {
        0
    }
}

/// Strictly convex polygon with counterclockwise vertex order. One- and
/// two-vertex polygons are permitted as degenerate hulls of tiny inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeomError> {
        if vertices.is_empty() {
            return Err(GeomError::EmptyPointSet);
        }
        match vertices.len() {
            1 => {}
            2 => {
                if vertices[0] == vertices[1] {
                    return Err(GeomError::InvalidPolygon("duplicate vertices"));
                }
            }
            n => {
                for i in 0..n {
                    let p = vertices[i];
                    let q = vertices[(i + 1) % n];
                    let r = vertices[(i + 2) % n];
                    if orient(p, q, r) <= 0 {
                        return Err(GeomError::InvalidPolygon(
                            "vertices not in strictly convex counterclockwise order",
                        ));
                    }
                }
                // All-left turns admit polygons winding more than once; the
                // total exterior turn of a simple convex cycle is exactly 2pi.
                let mut turn = 0.0;
                for i in 0..n {
                    let a = vertices[(i + 1) % n] - vertices[i];
                    let b = vertices[(i + 2) % n] - vertices[(i + 1) % n];
                    turn += a.cross(b).atan2(a.dot(b));
                }
                if (turn - TAU).abs() > 1e-6 {
                    return Err(GeomError::InvalidPolygon("polygon winds more than once"));
                }
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

/// Minimal convex polygon containing all input points, by monotone chain.
/// Collinear points interior to hull edges are excluded from the vertex
/// list, so the result is strictly convex.
pub fn convex_hull(points: &[Point2]) -> Result<ConvexPolygon, GeomError> {
    if points.is_empty() {
        return Err(GeomError::EmptyPointSet);
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup();
    if pts.len() == 1 {
        return ConvexPolygon::new(pts);
    }

    let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    ConvexPolygon::new(lower)
}

/// Shoelace area; 0 for degenerate one- and two-vertex polygons.
pub fn polygon_area(poly: &ConvexPolygon) -> f64 {
    let v = poly.vertices();
    if v.len() < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..v.len() {
        let a = v[i];
        let b = v[(i + 1) % v.len()];
        acc += a.cross(b);
    }
    acc / 2.0
}

/// Boundary-inclusive containment test: `orient >= 0` against every edge.
pub fn point_in_convex_polygon(x: Point2, poly: &ConvexPolygon) -> bool {
    let v = poly.vertices();
    match v.len() {
        1 => x == v[0],
        2 => {
            // On the closed segment: collinear and within both endpoints.
            orient(v[0], v[1], x) == 0
                && (x - v[0]).dot(v[1] - v[0]) >= 0.0
                && (x - v[1]).dot(v[0] - v[1]) >= 0.0
        }
        n => (0..n).all(|i| orient(v[i], v[(i + 1) % n], x) >= 0),
    }
}

/// Maximum of `dot(p, normal)` over the circular arc
/// `{radius * (cos t, sin t) : t in [theta_lo, theta_hi]}`.
///
/// Closed form: the unconstrained maximizer is the angle of `normal`; if no
/// representative of it lies in the interval the maximum is at an endpoint.
pub fn arc_max_along_normal(
    radius: f64,
    theta_lo: f64,
    theta_hi: f64,
    normal: Point2,
) -> Result<f64, GeomError> {
    let span = theta_hi - theta_lo;
    if !radius.is_finite() || radius <= 0.0 || !(0.0..=TAU).contains(&span) {
        return Err(GeomError::InvalidArc);
    }
    let norm = normal.norm();
    if norm == 0.0 {
        return Err(GeomError::DegenerateNormal);
    }
    let phi = normal.y.atan2(normal.x);
    // Shift phi into [theta_lo, theta_lo + 2pi); it is in the arc iff <= theta_hi.
    let cand = theta_lo + (phi - theta_lo).rem_euclid(TAU);
    if cand <= theta_hi {
        return Ok(radius * norm);
    }
    let at = |t: f64| radius * (t.cos() * normal.x + t.sin() * normal.y);
    Ok(at(theta_lo).max(at(theta_hi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orient_signs() {
        assert_eq!(orient(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)), 1);
        assert_eq!(orient(pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 2.0)), 0);
        assert_eq!(orient(pt(0.0, 0.0), pt(0.0, 1.0), pt(1.0, 0.0)), -1);
    }

    #[test]
    fn orient_antisymmetry() {
        let (p, q, r) = (pt(0.3, -1.25), pt(2.5, 0.75), pt(-0.5, 2.0));
        assert_eq!(orient(p, q, r), -orient(p, r, q));
    }

    #[test]
    fn hull_singleton() {
        let h = convex_hull(&[pt(0.0, 0.0)]).unwrap();
        assert_eq!(h.vertices(), &[pt(0.0, 0.0)]);
    }

    #[test]
    fn hull_empty_errors() {
        assert_eq!(convex_hull(&[]), Err(GeomError::EmptyPointSet));
    }

    #[test]
    fn hull_drops_interior_point() {
        let h = convex_hull(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0), pt(0.25, 0.25)]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert!(!h.vertices().contains(&pt(0.25, 0.25)));
    }

    #[test]
    fn hull_drops_edge_collinear_point() {
        let h = convex_hull(&[pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0)]).unwrap();
        assert_eq!(h.vertex_count(), 3);
    }

    #[test]
    fn hull_collinear_input_degenerates_to_segment() {
        let h = convex_hull(&[pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 2.0)]).unwrap();
        assert_eq!(h.vertices(), &[pt(0.0, 0.0), pt(2.0, 2.0)]);
        assert_eq!(polygon_area(&h), 0.0);
    }

    #[test]
    fn area_unit_square() {
        let h = convex_hull(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)]).unwrap();
        assert_eq!(polygon_area(&h), 1.0);
    }

    #[test]
    fn area_regular_hexagon() {
        let verts: Vec<Point2> = (0..6)
            .map(|i| {
                let a = TAU * i as f64 / 6.0;
                pt(a.cos(), a.sin())
            })
            .collect();
        let poly = ConvexPolygon::new(verts).unwrap();
        let expect = 3.0 * 3.0_f64.sqrt() / 2.0;
        assert!((polygon_area(&poly) - expect).abs() < 1e-12);
    }

    #[test]
    fn containment_basics() {
        let tri = convex_hull(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)]).unwrap();
        assert!(point_in_convex_polygon(pt(1.0 / 3.0, 1.0 / 3.0), &tri));
        assert!(point_in_convex_polygon(pt(0.0, 0.0), &tri));
        let sq = convex_hull(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)]).unwrap();
        assert!(!point_in_convex_polygon(pt(2.0, 2.0), &sq));
    }

    #[test]
    fn segment_containment() {
        let seg = convex_hull(&[pt(0.0, 0.0), pt(2.0, 2.0)]).unwrap();
        assert!(point_in_convex_polygon(pt(1.0, 1.0), &seg));
        assert!(!point_in_convex_polygon(pt(3.0, 3.0), &seg));
        assert!(!point_in_convex_polygon(pt(1.0, 1.5), &seg));
    }

    #[test]
    fn polygon_rejects_winding_and_reflex() {
        assert!(
            ConvexPolygon::new(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(0.2, 0.2), pt(0.0, 1.0)])
                .is_err()
        );
    }

    #[test]
    fn arc_max_cases() {
        use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8};
        let v = arc_max_along_normal(1.0, -FRAC_PI_8, FRAC_PI_8, pt(1.0, 0.0)).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        let v = arc_max_along_normal(1.0, FRAC_PI_4, FRAC_PI_2, pt(1.0, 0.0)).unwrap();
        assert!((v - FRAC_PI_4.cos()).abs() < 1e-15);
        let v = arc_max_along_normal(2.0, 0.0, TAU, pt(0.0, 3.0)).unwrap();
        assert!((v - 6.0).abs() < 1e-15);
        assert_eq!(
            arc_max_along_normal(1.0, 0.0, 1.0, pt(0.0, 0.0)),
            Err(GeomError::DegenerateNormal)
        );
        assert!(arc_max_along_normal(1.0, 1.0, 0.5, pt(1.0, 0.0)).is_err());
    }

    #[test]
    fn arc_max_wraps_across_zero() {
        // Arc covering the negative-x axis; normal pointing along -x.
        let v = arc_max_along_normal(1.0, 2.0, 5.0, pt(-1.0, 0.0)).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
    }
}
