//! Planar convex hulls, directed (cone-based) hulls, orthant hulls, and the
//! tilings and Monte Carlo machinery used to measure their expected
//! complexity on random point sets.
//!
//! The crate is organized bottom-up:
//!
//! * [`geom`] — exact-as-practical planar primitives (orientation, monotone
//!   chain hull, containment, arc extrema).
//! * [`sampling`] — seeded uniform samplers over disks, triangles, convex
//!   polygons and hypercubes, with reproducible parallel substreams.
//! * [`directed`] — direction sets, the induced quadrant family, staircase
//!   exposure, membership and area/radius estimates for directed hulls.
//! * [`orthant`] — d-dimensional maxima and orthant-exposed points.
//! * [`tilings`] — equal-area decompositions (sector-annulus, grid, triangle
//!   fan) with exact tile-exposure counting.
//! * [`oracle`] — brute-force reference implementations for tests.
//! * [`experiments`] — the trial runner, aggregation, growth-law fitting and
//!   the special-purpose probability checks.
//! * [`suites`] — named verification suites combining all of the above.
//! * [`cli`] — the `chull-lab` command-line front end.

pub mod cli;
pub mod directed;
pub mod experiments;
pub mod geom;
pub mod oracle;
pub mod orthant;
pub mod sampling;
pub mod suites;
pub mod tilings;

pub use directed::{ConeFamily, DirectedHull, DirectionSet, ExposureReport};
pub use geom::{ConvexPolygon, Point2, PointD};
pub use sampling::{Region, RngStream};
