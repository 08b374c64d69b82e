//! d-dimensional maxima and orthant-exposed points: for each of the 2^d sign
//! vectors, the points whose open orthant in that direction contains no
//! other point of the set. Their union is the boundary point set of the
//! quadrant hull.

use thiserror::Error;

pub use crate::geom::PointD;

#[derive(Debug, Error, PartialEq)]
pub enum OrthantError {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("mixed point dimensions")]
    MixedDimensions,
    #[error("orthant count overflow: dimension must be <= 20")]
    OrthantCountOverflow,
}

/// A sign pattern in {-1, +1}^d selecting one open orthant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVector {
    pub signs: Vec<i8>,
}

impl SignVector {
    /// Enumerate sign vectors by bit pattern: bit k set means +1 in
    /// coordinate k.
    pub fn from_bits(bits: u32, dim: usize) -> Self {
        let signs = (0..dim)
            .map(|k| if bits >> k & 1 == 1 { 1 } else { -1 })
            .collect();
        SignVector { signs }
    }
}

fn check_dims(points: &[PointD]) -> Result<usize, OrthantError> {
    let Some(first) = points.first() else {
        return Err(OrthantError::EmptyPointSet);
    };
    let d = first.dim();
    if points.iter().any(|p| p.dim() != d) {
        return Err(OrthantError::MixedDimensions);
    }
    Ok(d)
}

/// `q` dominates `p` weakly: every coordinate >= with at least one strict.
fn dominates_weak(q: &[f64], p: &[f64]) -> bool {
    let mut strict = false;
    for (a, b) in q.iter().zip(p) {
        if a < b {
            return false;
        }
        if a > b {
            strict = true;
        }
    }
    strict
}

/// Indices of points not dominated by any other point (no other point is >=
/// in every coordinate with strict inequality somewhere). Coincident
/// duplicates never dominate each other and are all retained.
pub fn maxima(points: &[PointD]) -> Result<Vec<usize>, OrthantError> {
    let d = check_dims(points)?;
    if d == 2 {
        return Ok(maxima_2d(points));
    }
    // Prune against the running candidate set; the expected maxima count is
    // polylogarithmic, keeping this near-linear in practice.
    let mut candidates: Vec<usize> = Vec::new();
    for i in 0..points.len() {
        let p = &points[i].coords;
        if candidates
            .iter()
            .any(|&c| dominates_weak(&points[c].coords, p))
        {
            continue;
        }
        candidates.retain(|&c| !dominates_weak(p, &points[c].coords));
        candidates.push(i);
    }
    candidates.sort_unstable();
    Ok(candidates)
}

/// Sort by x descending and sweep with a running maximum of y over strictly
/// greater x.
fn maxima_2d(points: &[PointD]) -> Vec<usize> {
    let mut keyed: Vec<(f64, f64, u32)> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.coords[0], p.coords[1], i as u32))
        .collect();
    keyed.sort_unstable_by(|a, b| {
        b.0.partial_cmp(&a.0)
            .unwrap()
            .then(b.1.partial_cmp(&a.1).unwrap())
    });
    let mut result = Vec::new();
    let mut best_y = f64::NEG_INFINITY;
    let mut i = 0;
    while i < keyed.len() {
        let x = keyed[i].0;
        let mut j = i;
        let mut group_max = f64::NEG_INFINITY;
        while j < keyed.len() && keyed[j].0 == x {
            group_max = group_max.max(keyed[j].1);
            j += 1;
        }
        for &(_, y, idx) in &keyed[i..j] {
            // Survives its group (only ties with the group max survive) and
            // everything with strictly larger x.
            if y == group_max && y > best_y {
                result.push(idx as usize);
            }
        }
        best_y = best_y.max(group_max);
        i = j;
    }
    result.sort_unstable();
    result
}

/// `q` strictly exceeds `p` in every coordinate.
fn dominates_strict_all(q: &[f64], p: &[f64]) -> bool {
    q.iter().zip(p).all(|(a, b)| a > b)
}

/// Per sign vector: indices of points whose open orthant is empty, i.e. the
/// strict-in-all-coordinates maxima of the sign-flipped set.
fn exposed_for_sign(points: &[PointD], signs: &[i8]) -> Vec<usize> {
    let flip = |i: usize| -> Vec<f64> {
        points[i]
            .coords
            .iter()
            .zip(signs)
            .map(|(&c, &s)| c * s as f64)
            .collect()
    };
    let mut candidates: Vec<(usize, Vec<f64>)> = Vec::new();
    let mut survivors = Vec::new();
    for i in 0..points.len() {
        let f = flip(i);
        if !candidates.iter().any(|(_, c)| dominates_strict_all(c, &f)) {
            candidates.retain(|(_, c)| !dominates_strict_all(&f, c));
            candidates.push((i, f));
        }
    }
    // The candidate set is exactly the survivor set for strict-all
    // dominance: anything strictly dominated was either dropped on arrival
    // or retained-out later.
    survivors.extend(candidates.into_iter().map(|(i, _)| i));
    survivors
}

/// Union over all 2^d sign vectors of the per-orthant exposed points.
/// Returns the sorted index set and its size `n_sc`.
pub fn orthant_exposed(points: &[PointD]) -> Result<(Vec<usize>, usize), OrthantError> {
    let d = check_dims(points)?;
    if d > 20 {
        return Err(OrthantError::OrthantCountOverflow);
    }
    let mut exposed = vec![false; points.len()];
    if d == 2 {
        orthant_exposed_2d(points, &mut exposed);
    } else {
        for bits in 0..(1u32 << d) {
            let sv = SignVector::from_bits(bits, d);
            for idx in exposed_for_sign(points, &sv.signs) {
                exposed[idx] = true;
            }
        }
    }
    let indices: Vec<usize> = (0..points.len()).filter(|&i| exposed[i]).collect();
    let n_sc = indices.len();
    Ok((indices, n_sc))
}

/// One sort shared by the four quadrant sweeps.
fn orthant_exposed_2d(points: &[PointD], exposed: &mut [bool]) {
    let mut keyed: Vec<(f64, f64, u32)> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.coords[0], p.coords[1], i as u32))
        .collect();
    keyed.sort_unstable_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap()
            .then(a.1.partial_cmp(&b.1).unwrap())
    });
    // Sweep from one x-extreme; a point is eliminated for quadrant
    // (sx, sy) iff some point with strictly sx-greater x is sy-greater in y.
    let sweep = |rows: &[(f64, f64, u32)], take_max_y: bool, exposed: &mut [bool]| {
        let mut best = if take_max_y {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
        let mut i = 0;
        while i < rows.len() {
            let x = rows[i].0;
            let mut j = i;
            while j < rows.len() && rows[j].0 == x {
                j += 1;
            }
            for &(_, y, idx) in &rows[i..j] {
                let dominated = if take_max_y { best > y } else { best < y };
                if !dominated {
                    exposed[idx as usize] = true;
                }
            }
            for &(_, y, _) in &rows[i..j] {
                best = if take_max_y { best.max(y) } else { best.min(y) };
            }
            i = j;
        }
    };
    let desc: Vec<(f64, f64, u32)> = keyed.iter().rev().copied().collect();
    sweep(&desc, true, exposed); // empty (+,+) orthant
    sweep(&desc, false, exposed); // empty (+,-) orthant
    sweep(&keyed, true, exposed); // empty (-,+) orthant
    sweep(&keyed, false, exposed); // empty (-,-) orthant
}
