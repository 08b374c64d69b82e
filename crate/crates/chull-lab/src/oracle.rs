//! Brute-force reference implementations for property tests and
//! verification runs. These share only primitive types with the fast paths:
//! every decision here is made by a direct definition-level scan, never by
//! the staircase or sweep machinery.

use thiserror::Error;

use crate::directed::{quadrant_family, DirectionSet};
use crate::geom::{Point2, PointD};

/// Oracles are quadratic; keep them at desk scale.
const MAX_ORACLE_POINTS: usize = 4096;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("oracle input too large (limit {MAX_ORACLE_POINTS} points)")]
    TooLarge,
    #[error("empty point set")]
    EmptyPointSet,
}

fn guard(len: usize) -> Result<(), OracleError> {
    if len == 0 {
        Err(OracleError::EmptyPointSet)
    } else if len > MAX_ORACLE_POINTS {
        Err(OracleError::TooLarge)
    } else {
        Ok(())
    }
}

/// Exposed points by direct evaluation of the definition: a point is exposed
/// iff some family cone anchored at it contains no other point.
pub fn naive_exposed(points: &[Point2], d: &DirectionSet) -> Result<Vec<usize>, OracleError> {
    guard(points.len())?;
    let families = quadrant_family(d);
    let mut exposed = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        let is_exposed = families.iter().any(|fam| {
            points
                .iter()
                .enumerate()
                .all(|(j, &q)| j == i || !fam.contains_open(p, q))
        });
        if is_exposed {
            exposed.push(i);
        }
    }
    Ok(exposed)
}

/// Maxima by pairwise weak-dominance scan.
pub fn naive_maxima(points: &[PointD]) -> Result<Vec<usize>, OracleError> {
    guard(points.len())?;
    let mut result = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let dominated = points.iter().enumerate().any(|(j, q)| {
            j != i
                && q.coords.iter().zip(&p.coords).all(|(a, b)| a >= b)
                && q.coords.iter().zip(&p.coords).any(|(a, b)| a > b)
        });
        if !dominated {
            result.push(i);
        }
    }
    Ok(result)
}

/// Orthant-exposed points by scanning every sign vector for every point.
pub fn naive_orthant_exposed(points: &[PointD]) -> Result<Vec<usize>, OracleError> {
    guard(points.len())?;
    let d = points[0].dim();
    assert!(d <= 20, "dimension too large for orthant enumeration");
    let mut result = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let exposed = (0..1u32 << d).any(|bits| {
            points.iter().enumerate().all(|(j, q)| {
                if j == i {
                    return true;
                }
                // q strictly inside the open orthant at p with sign pattern `bits`?
                let inside = (0..d).all(|k| {
                    if bits >> k & 1 == 1 {
                        q.coords[k] > p.coords[k]
                    } else {
                        q.coords[k] < p.coords[k]
                    }
                });
                !inside
            })
        });
        if exposed {
            result.push(i);
        }
    }
    Ok(result)
}

/// Directed-hull membership by full closed-cone scans per family.
pub fn naive_contains(points: &[Point2], d: &DirectionSet, x: Point2) -> Result<bool, OracleError> {
    guard(points.len())?;
    let families = quadrant_family(d);
    Ok(families
        .iter()
        .all(|fam| points.iter().any(|&q| fam.contains_closed(x, q))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;

    #[test]
    fn triangle_example_all_exposed() {
        let pts = [pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 1.0)];
        let d = DirectionSet::axis_parallel();
        assert_eq!(naive_exposed(&pts, &d).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn singleton_exposed() {
        let d = DirectionSet::axis_parallel();
        assert_eq!(naive_exposed(&[pt(1.0, 2.0)], &d).unwrap(), vec![0]);
    }

    #[test]
    fn maxima_example() {
        let pts: Vec<PointD> = [[1.0, 3.0], [2.0, 2.0], [3.0, 1.0], [0.0, 0.0]]
            .iter()
            .map(|c| PointD::new(c.to_vec()))
            .collect();
        assert_eq!(naive_maxima(&pts).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn all_equal_points_are_maximal() {
        let pts = vec![PointD::new(vec![1.0, 1.0]); 3];
        assert_eq!(naive_maxima(&pts).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn contains_examples() {
        let d = DirectionSet::axis_parallel();
        let pts = [pt(0.0, 0.0), pt(1.0, 1.0)];
        assert!(naive_contains(&pts, &d, pt(0.0, 0.0)).unwrap());
        assert!(!naive_contains(&pts, &d, pt(0.5, 0.5)).unwrap());
    }

    #[test]
    fn size_guard() {
        let pts = vec![pt(0.0, 0.0); MAX_ORACLE_POINTS + 1];
        assert_eq!(
            naive_exposed(&pts, &DirectionSet::axis_parallel()),
            Err(OracleError::TooLarge)
        );
    }
}
