//! C ABI for the chull-lab geometry library.
//!
//! Conventions: every function returns a [`ChlStatus`] code and writes its
//! result through an out-pointer. Direction sets and directed hulls are
//! opaque handles created by `*_new` functions and released by the matching
//! `*_free`; passing null anywhere yields `ChlStatus::NullArgument` rather
//! than a crash. Point sets are passed as parallel x/y arrays (planar) or a
//! row-major coordinate matrix (d-dimensional). All coordinates must be
//! finite.

use std::ffi::{c_char, c_double, c_int};

use chull_lab::directed::{self, DirectedHull, DirectionSet};
use chull_lab::geom::{convex_hull, polygon_area, Point2, PointD};
use chull_lab::orthant;

/// Status codes returned by every API function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChlStatus {
    Ok = 0,
    NullArgument = 1,
    /// A numeric argument was out of range or not finite.
    InvalidArgument = 2,
    /// The point set was empty or otherwise unusable.
    BadPointSet = 3,
    /// The direction list was empty, unnormalizable, not closed under
    /// negation, or contained duplicates.
    BadDirections = 4,
}

/// Opaque handle: a validated set of directions.
pub struct ChlDirectionSet {
    inner: DirectionSet,
}

/// Opaque handle: the membership index of a directed hull.
pub struct ChlDirectedHull {
    inner: DirectedHull,
}

/// Library version as a NUL-terminated static string.
#[no_mangle]
pub extern "C" fn chl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

unsafe fn planar_points(
    xs: *const c_double,
    ys: *const c_double,
    len: usize,
) -> Result<Vec<Point2>, ChlStatus> {
    if xs.is_null() || ys.is_null() {
        return Err(ChlStatus::NullArgument);
    }
    if len == 0 {
        return Err(ChlStatus::BadPointSet);
    }
    let xs = std::slice::from_raw_parts(xs, len);
    let ys = std::slice::from_raw_parts(ys, len);
    let mut pts = Vec::with_capacity(len);
    for (&x, &y) in xs.iter().zip(ys) {
        if !x.is_finite() || !y.is_finite() {
            return Err(ChlStatus::InvalidArgument);
        }
        pts.push(Point2::new(x, y));
    }
    Ok(pts)
}

unsafe fn spatial_points(
    coords: *const c_double,
    n: usize,
    d: usize,
) -> Result<Vec<PointD>, ChlStatus> {
    if coords.is_null() {
        return Err(ChlStatus::NullArgument);
    }
    if n == 0 || d == 0 || d > 20 {
        return Err(ChlStatus::BadPointSet);
    }
    let flat = std::slice::from_raw_parts(coords, n * d);
    if flat.iter().any(|c| !c.is_finite()) {
        return Err(ChlStatus::InvalidArgument);
    }
    Ok(flat
        .chunks_exact(d)
        .map(|row| PointD::new(row.to_vec()))
        .collect())
}

/// Build a direction set from angles in radians. With `auto_close` nonzero
/// the antipode of every angle is added automatically.
///
/// # Safety
/// `angles` must point to `len` doubles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chl_direction_set_from_angles(
    angles: *const c_double,
    len: usize,
    auto_close: c_int,
    out: *mut *mut ChlDirectionSet,
) -> ChlStatus {
    if angles.is_null() || out.is_null() {
        return ChlStatus::NullArgument;
    }
    if len == 0 {
        return ChlStatus::BadDirections;
    }
    let slice = std::slice::from_raw_parts(angles, len);
    if slice.iter().any(|a| !a.is_finite()) {
        return ChlStatus::InvalidArgument;
    }
    match directed::make_direction_set(slice, auto_close != 0) {
        Ok(ds) => {
            *out = Box::into_raw(Box::new(ChlDirectionSet { inner: ds }));
            ChlStatus::Ok
        }
        Err(_) => ChlStatus::BadDirections,
    }
}

/// Build `k` equally spaced doubled directions (2k vectors, density pi/k).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chl_direction_set_equally_spaced(
    k: usize,
    out: *mut *mut ChlDirectionSet,
) -> ChlStatus {
    if out.is_null() {
        return ChlStatus::NullArgument;
    }
    if k == 0 {
        return ChlStatus::BadDirections;
    }
    *out = Box::into_raw(Box::new(ChlDirectionSet {
        inner: DirectionSet::equally_spaced(k),
    }));
    ChlStatus::Ok
}

/// Density of the direction set: the largest angular gap.
///
/// # Safety
/// Valid handle and out pointer.
#[no_mangle]
pub unsafe extern "C" fn chl_direction_set_alpha(
    ds: *const ChlDirectionSet,
    out: *mut c_double,
) -> ChlStatus {
    let (Some(ds), false) = (ds.as_ref(), out.is_null()) else {
        return ChlStatus::NullArgument;
    };
    *out = ds.inner.alpha();
    ChlStatus::Ok
}

/// Number of unit vectors in the set.
///
/// # Safety
/// Valid handle and out pointer.
#[no_mangle]
pub unsafe extern "C" fn chl_direction_set_len(
    ds: *const ChlDirectionSet,
    out: *mut usize,
) -> ChlStatus {
    let (Some(ds), false) = (ds.as_ref(), out.is_null()) else {
        return ChlStatus::NullArgument;
    };
    *out = ds.inner.len();
    ChlStatus::Ok
}

/// Release a direction set handle. Null is ignored.
///
/// # Safety
/// `ds` must be a pointer returned by a `chl_direction_set_*` constructor,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chl_direction_set_free(ds: *mut ChlDirectionSet) {
    if !ds.is_null() {
        drop(Box::from_raw(ds));
    }
}

/// Vertex count of the convex hull of the given planar points.
///
/// # Safety
/// `xs`/`ys` must point to `len` doubles each; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chl_convex_hull_vertex_count(
    xs: *const c_double,
    ys: *const c_double,
    len: usize,
    out: *mut usize,
) -> ChlStatus {
    if out.is_null() {
        return ChlStatus::NullArgument;
    }
    let pts = match planar_points(xs, ys, len) {
        Ok(p) => p,
        Err(e) => return e,
    };
    match convex_hull(&pts) {
        Ok(hull) => {
            *out = hull.vertex_count();
            ChlStatus::Ok
        }
        Err(_) => ChlStatus::BadPointSet,
    }
}

/// Area of the convex hull of the given planar points.
///
/// # Safety
/// `xs`/`ys` must point to `len` doubles each; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chl_convex_hull_area(
    xs: *const c_double,
    ys: *const c_double,
    len: usize,
    out: *mut c_double,
) -> ChlStatus {
    if out.is_null() {
        return ChlStatus::NullArgument;
    }
    let pts = match planar_points(xs, ys, len) {
        Ok(p) => p,
        Err(e) => return e,
    };
    match convex_hull(&pts) {
        Ok(hull) => {
            *out = polygon_area(&hull);
            ChlStatus::Ok
        }
        Err(_) => ChlStatus::BadPointSet,
    }
}

/// Number of points on the boundary of the directed hull of the point set.
///
/// # Safety
/// `xs`/`ys` must point to `len` doubles each; `ds` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chl_boundary_count(
    xs: *const c_double,
    ys: *const c_double,
    len: usize,
    ds: *const ChlDirectionSet,
    out: *mut usize,
) -> ChlStatus {
    let (Some(ds), false) = (ds.as_ref(), out.is_null()) else {
        return ChlStatus::NullArgument;
    };
    let pts = match planar_points(xs, ys, len) {
        Ok(p) => p,
        Err(e) => return e,
    };
    match directed::boundary_count(&pts, &ds.inner) {
        Ok(count) => {
            *out = count;
            ChlStatus::Ok
        }
        Err(_) => ChlStatus::BadPointSet,
    }
}

/// Build the membership index for the directed hull of the point set.
///
/// # Safety
/// `xs`/`ys` must point to `len` doubles each; `ds` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chl_directed_hull_new(
    xs: *const c_double,
    ys: *const c_double,
    len: usize,
    ds: *const ChlDirectionSet,
    out: *mut *mut ChlDirectedHull,
) -> ChlStatus {
    let (Some(ds), false) = (ds.as_ref(), out.is_null()) else {
        return ChlStatus::NullArgument;
    };
    let pts = match planar_points(xs, ys, len) {
        Ok(p) => p,
        Err(e) => return e,
    };
    match DirectedHull::build(&pts, &ds.inner) {
        Ok(hull) => {
            *out = Box::into_raw(Box::new(ChlDirectedHull { inner: hull }));
            ChlStatus::Ok
        }
        Err(_) => ChlStatus::BadPointSet,
    }
}

/// Closed-cone membership of (x, y) in the directed hull; writes 1 or 0.
///
/// # Safety
/// Valid handle and out pointer.
#[no_mangle]
pub unsafe extern "C" fn chl_directed_hull_contains(
    hull: *const ChlDirectedHull,
    x: c_double,
    y: c_double,
    out: *mut c_int,
) -> ChlStatus {
    let (Some(hull), false) = (hull.as_ref(), out.is_null()) else {
        return ChlStatus::NullArgument;
    };
    if !x.is_finite() || !y.is_finite() {
        return ChlStatus::InvalidArgument;
    }
    *out = hull.inner.contains(Point2::new(x, y)) as c_int;
    ChlStatus::Ok
}

/// Release a directed hull handle. Null is ignored.
///
/// # Safety
/// `hull` must be a pointer returned by `chl_directed_hull_new`, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn chl_directed_hull_free(hull: *mut ChlDirectedHull) {
    if !hull.is_null() {
        drop(Box::from_raw(hull));
    }
}

/// Number of maxima (non-dominated points) of a row-major n x d matrix.
///
/// # Safety
/// `coords` must point to `n * d` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chl_maxima_count(
    coords: *const c_double,
    n: usize,
    d: usize,
    out: *mut usize,
) -> ChlStatus {
    if out.is_null() {
        return ChlStatus::NullArgument;
    }
    let pts = match spatial_points(coords, n, d) {
        Ok(p) => p,
        Err(e) => return e,
    };
    match orthant::maxima(&pts) {
        Ok(idx) => {
            *out = idx.len();
            ChlStatus::Ok
        }
        Err(_) => ChlStatus::BadPointSet,
    }
}

/// Number of points on the boundary of the quadrant (orthant) hull of a
/// row-major n x d matrix.
///
/// # Safety
/// `coords` must point to `n * d` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chl_orthant_boundary_count(
    coords: *const c_double,
    n: usize,
    d: usize,
    out: *mut usize,
) -> ChlStatus {
    if out.is_null() {
        return ChlStatus::NullArgument;
    }
    let pts = match spatial_points(coords, n, d) {
        Ok(p) => p,
        Err(e) => return e,
    };
    match orthant::orthant_exposed(&pts) {
        Ok((_, n_sc)) => {
            *out = n_sc;
            ChlStatus::Ok
        }
        Err(_) => ChlStatus::BadPointSet,
    }
}
