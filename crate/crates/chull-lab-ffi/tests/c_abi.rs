//! Exercises the exported C ABI exactly as a foreign caller would: through
//! raw pointers, opaque handles and status codes.

use std::ffi::CStr;
use std::ptr;

use chull_lab_ffi::*;

#[test]
fn version_is_a_c_string() {
    let v = unsafe { CStr::from_ptr(chl_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn hull_roundtrip() {
    let xs = [0.0, 1.0, 1.0, 0.0, 0.5];
    let ys = [0.0, 0.0, 1.0, 1.0, 0.5];
    let mut count = 0usize;
    let mut area = 0.0f64;
    unsafe {
        assert_eq!(
            chl_convex_hull_vertex_count(xs.as_ptr(), ys.as_ptr(), 5, &mut count),
            ChlStatus::Ok
        );
        assert_eq!(
            chl_convex_hull_area(xs.as_ptr(), ys.as_ptr(), 5, &mut area),
            ChlStatus::Ok
        );
    }
    assert_eq!(count, 4);
    assert_eq!(area, 1.0);
}

#[test]
fn directed_hull_through_handles() {
    let mut ds: *mut ChlDirectionSet = ptr::null_mut();
    unsafe {
        assert_eq!(chl_direction_set_equally_spaced(2, &mut ds), ChlStatus::Ok);
        let mut len = 0usize;
        assert_eq!(chl_direction_set_len(ds, &mut len), ChlStatus::Ok);
        assert_eq!(len, 4);
        let mut alpha = 0.0f64;
        assert_eq!(chl_direction_set_alpha(ds, &mut alpha), ChlStatus::Ok);
        assert!((alpha - std::f64::consts::FRAC_PI_2).abs() < 1e-9);

        let xs = [0.0, 1.0];
        let ys = [0.0, 1.0];
        let mut count = 0usize;
        assert_eq!(
            chl_boundary_count(xs.as_ptr(), ys.as_ptr(), 2, ds, &mut count),
            ChlStatus::Ok
        );
        assert_eq!(count, 2);

        let mut hull: *mut ChlDirectedHull = ptr::null_mut();
        assert_eq!(
            chl_directed_hull_new(xs.as_ptr(), ys.as_ptr(), 2, ds, &mut hull),
            ChlStatus::Ok
        );
        let mut inside = -1;
        assert_eq!(
            chl_directed_hull_contains(hull, 0.0, 0.0, &mut inside),
            ChlStatus::Ok
        );
        assert_eq!(inside, 1);
        assert_eq!(
            chl_directed_hull_contains(hull, 0.5, 0.5, &mut inside),
            ChlStatus::Ok
        );
        assert_eq!(inside, 0);
        chl_directed_hull_free(hull);
        chl_direction_set_free(ds);
    }
}

#[test]
fn angle_constructor_validates() {
    let mut ds: *mut ChlDirectionSet = ptr::null_mut();
    unsafe {
        // Missing antipode without auto-close.
        let angles = [0.0f64];
        assert_eq!(
            chl_direction_set_from_angles(angles.as_ptr(), 1, 0, &mut ds),
            ChlStatus::BadDirections
        );
        assert_eq!(
            chl_direction_set_from_angles(angles.as_ptr(), 1, 1, &mut ds),
            ChlStatus::Ok
        );
        let mut len = 0usize;
        assert_eq!(chl_direction_set_len(ds, &mut len), ChlStatus::Ok);
        assert_eq!(len, 2);
        chl_direction_set_free(ds);

        let bad = [f64::NAN];
        assert_eq!(
            chl_direction_set_from_angles(bad.as_ptr(), 1, 1, &mut ds),
            ChlStatus::InvalidArgument
        );
    }
}

#[test]
fn spatial_counts() {
    // Row-major 4 x 2 matrix: the staircase example.
    let coords = [1.0, 3.0, 2.0, 2.0, 3.0, 1.0, 0.0, 0.0];
    let mut maxima = 0usize;
    let mut n_sc = 0usize;
    unsafe {
        assert_eq!(
            chl_maxima_count(coords.as_ptr(), 4, 2, &mut maxima),
            ChlStatus::Ok
        );
        assert_eq!(
            chl_orthant_boundary_count(coords.as_ptr(), 4, 2, &mut n_sc),
            ChlStatus::Ok
        );
    }
    assert_eq!(maxima, 3);
    assert_eq!(n_sc, 4);
}

#[test]
fn null_and_empty_arguments() {
    let mut count = 0usize;
    unsafe {
        assert_eq!(
            chl_convex_hull_vertex_count(ptr::null(), ptr::null(), 3, &mut count),
            ChlStatus::NullArgument
        );
        let xs = [0.0];
        let ys = [0.0];
        assert_eq!(
            chl_convex_hull_vertex_count(xs.as_ptr(), ys.as_ptr(), 0, &mut count),
            ChlStatus::BadPointSet
        );
        let bad = [f64::INFINITY];
        assert_eq!(
            chl_convex_hull_vertex_count(bad.as_ptr(), ys.as_ptr(), 1, &mut count),
            ChlStatus::InvalidArgument
        );
        assert_eq!(
            chl_direction_set_alpha(ptr::null(), &mut 0.0),
            ChlStatus::NullArgument
        );
        assert_eq!(
            chl_directed_hull_contains(ptr::null(), 0.0, 0.0, &mut 0),
            ChlStatus::NullArgument
        );
        // Frees tolerate null.
        chl_direction_set_free(ptr::null_mut());
        chl_directed_hull_free(ptr::null_mut());
    }
}

#[test]
fn generated_header_declares_the_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/chull_lab.h"))
            .expect("cbindgen header exists");
    for symbol in [
        "CHULL_LAB_H",
        "typedef struct ChlDirectionSet ChlDirectionSet",
        "typedef struct ChlDirectedHull ChlDirectedHull",
        "chl_version",
        "chl_direction_set_from_angles",
        "chl_direction_set_equally_spaced",
        "chl_direction_set_alpha",
        "chl_boundary_count",
        "chl_directed_hull_new",
        "chl_directed_hull_contains",
        "chl_convex_hull_vertex_count",
        "chl_convex_hull_area",
        "chl_maxima_count",
        "chl_orthant_boundary_count",
    ] {
        assert!(header.contains(symbol), "header missing `{symbol}`");
    }
}
