//! Seeded uniform samplers for the source regions (disk, triangle, convex
//! polygon, hypercube) with reproducible parallel substreams.
//!
//! Substreams are counter-based: the master seed and stream index are mixed
//! through a 64-bit finalizer into a per-stream ChaCha8 seed, so identical
//! `(master_seed, stream_index)` pairs replay identically no matter how
//! trials are scheduled across threads.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geom::{cross, polygon_area, ConvexPolygon, Point2, PointD};

#[derive(Debug, Error, PartialEq)]
pub enum RegionError {
    #[error("triangle vertices are collinear")]
    CollinearTriangle,
    #[error("hypercube dimension must be >= 1")]
    ZeroDimension,
    #[error("region measure must be positive")]
    EmptyMeasure,
}

/// SplitMix64 finalizer; bijective on u64.
pub fn mix64(x: u64) -> u64 {
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A deterministic random stream identified by `(master_seed, stream_index)`.
#[derive(Debug, Clone)]
pub struct RngStream {
    pub master_seed: u64,
    pub stream_index: u64,
    rng: ChaCha8Rng,
}

/// Create the stream for `(master_seed, index)`. Streams for distinct
/// indices behave independently and may be created in any order.
pub fn substream(master_seed: u64, index: u64) -> RngStream {
    let seed = mix64(master_seed ^ mix64(index ^ 0x9E37_79B9_7F4A_7C15));
    RngStream {
        master_seed,
        stream_index: index,
        rng: ChaCha8Rng::seed_from_u64(seed),
    }
}

impl RngStream {
    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// A source region points are drawn from.
#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    Disk { radius: f64 },
    Triangle { a: Point2, b: Point2, c: Point2 },
    Polygon(ConvexPolygon),
    Hypercube { dim: usize, side: f64 },
}

/// One uniform draw; planar regions yield `Planar`, hypercubes `Spatial`.
#[derive(Debug, Clone, PartialEq)]
pub enum SamplePoint {
    Planar(Point2),
    Spatial(PointD),
}

impl SamplePoint {
    /// The draw as a planar point; works for planar regions and
    /// two-dimensional hypercubes.
    pub fn as_point2(&self) -> Option<Point2> {
        match self {
            SamplePoint::Planar(p) => Some(*p),
            SamplePoint::Spatial(p) if p.dim() == 2 => Some(Point2::new(p.coords[0], p.coords[1])),
            _ => None,
        }
    }

    pub fn into_pointd(self) -> PointD {
        match self {
            SamplePoint::Planar(p) => PointD::new(vec![p.x, p.y]),
            SamplePoint::Spatial(p) => p,
        }
    }
}

impl Region {
    pub fn disk(radius: f64) -> Result<Self, RegionError> {
        if radius > 0.0 {
            Ok(Region::Disk { radius })
        } else {
            Err(RegionError::EmptyMeasure)
        }
    }

    pub fn triangle(a: Point2, b: Point2, c: Point2) -> Result<Self, RegionError> {
        if cross(a, b, c) == 0.0 {
            return Err(RegionError::CollinearTriangle);
        }
        Ok(Region::Triangle { a, b, c })
    }

    pub fn polygon(poly: ConvexPolygon) -> Result<Self, RegionError> {
        if polygon_area(&poly) <= 0.0 {
            return Err(RegionError::EmptyMeasure);
        }
        Ok(Region::Polygon(poly))
    }

    pub fn hypercube(dim: usize, side: f64) -> Result<Self, RegionError> {
        if dim == 0 {
            return Err(RegionError::ZeroDimension);
        }
        if !side.is_finite() || side <= 0.0 {
            return Err(RegionError::EmptyMeasure);
        }
        Ok(Region::Hypercube { dim, side })
    }

    /// Area (or d-volume) of the region.
    pub fn measure(&self) -> f64 {
        match self {
            Region::Disk { radius } => std::f64::consts::PI * radius * radius,
            Region::Triangle { a, b, c } => cross(*a, *b, *c).abs() / 2.0,
            Region::Polygon(p) => polygon_area(p),
            Region::Hypercube { dim, side } => side.powi(*dim as i32),
        }
    }

    /// True for regions whose samples are planar points.
    pub fn is_planar(&self) -> bool {
        !matches!(self, Region::Hypercube { dim, .. } if *dim != 2)
    }

    /// One uniform draw. Every region variant consumes a fixed number of
    /// uniforms per draw, keeping streams aligned across statistics.
    pub fn sample(&self, rng: &mut RngStream) -> SamplePoint {
        match self {
            Region::Disk { radius } => {
                // Inverse-CDF polar transform; no rejection.
                let u = rng.next_f64();
                let v = rng.next_f64();
                let r = radius * u.sqrt();
                let theta = std::f64::consts::TAU * v;
                SamplePoint::Planar(Point2::new(r * theta.cos(), r * theta.sin()))
            }
            Region::Triangle { a, b, c } => SamplePoint::Planar(sample_triangle(*a, *b, *c, rng)),
            Region::Polygon(poly) => {
                // Fan-triangulate from vertex 0, pick a triangle by
                // inverse-CDF over cumulative areas, then sample it.
                let v = poly.vertices();
                debug_assert!(v.len() >= 3);
                let total = polygon_area(poly);
                let u = rng.next_f64() * total;
                let mut acc = 0.0;
                let mut tri = (v[0], v[v.len() - 2], v[v.len() - 1]);
                for i in 1..v.len() - 1 {
                    acc += cross(v[0], v[i], v[i + 1]) / 2.0;
                    if u < acc {
                        tri = (v[0], v[i], v[i + 1]);
                        break;
                    }
                }
                SamplePoint::Planar(sample_triangle(tri.0, tri.1, tri.2, rng))
            }
            Region::Hypercube { dim, side } => {
                let coords = (0..*dim).map(|_| rng.next_f64() * side).collect();
                SamplePoint::Spatial(PointD::new(coords))
            }
        }
    }

    /// Draw `n` points from a planar region (or a 2-d hypercube).
    pub fn sample_planar(&self, n: usize, rng: &mut RngStream) -> Vec<Point2> {
        assert!(self.is_planar(), "region is not planar");
        (0..n)
            .map(|_| self.sample(rng).as_point2().unwrap())
            .collect()
    }

    /// Draw `n` points as d-dimensional coordinates.
    pub fn sample_spatial(&self, n: usize, rng: &mut RngStream) -> Vec<PointD> {
        (0..n).map(|_| self.sample(rng).into_pointd()).collect()
    }
}

/// Warped barycentric transform: `a + sqrt(u) (b - a) + sqrt(u) v (c - b)`.
fn sample_triangle(a: Point2, b: Point2, c: Point2, rng: &mut RngStream) -> Point2 {
    let u = rng.next_f64();
    let v = rng.next_f64();
    let su = u.sqrt();
    a + (b - a).scale(su) + (c - b).scale(su * v)
}
