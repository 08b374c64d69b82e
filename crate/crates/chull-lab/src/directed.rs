//! Directed convexity: direction sets, the quadrant family they induce,
//! staircase-based exposure of boundary points, membership queries, and
//! Monte Carlo area / contained-radius estimates for the directed hull.
//!
//! A directed hull is the plane minus every translate of a family cone (an
//! open wedge or halfplane from the quadrant family) that misses the point
//! set. Exposure uses open cones, so the exposed points are exactly the set
//! points on the hull boundary; membership uses closed cones, so the set is
//! always contained in its own hull. The two conventions disagree only on a
//! measure-zero set.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use thiserror::Error;

use crate::geom::Point2;
use crate::sampling::{Region, RngStream};

/// Angular tolerance for deduplicating directions.
const DEDUP_TOL: f64 = 1e-12;
/// Angular tolerance when checking closure under negation.
const NEGATION_TOL: f64 = 1e-9;
/// A pair gap this close to pi denotes two antipodal directions; the pair's
/// quadrants degenerate to the halfplanes of their common line.
const GAP_PI_TOL: f64 = 1e-9;
/// Below this determinant a wedge transform is not invertible in practice.
const MIN_WEDGE_DET: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum DirectedError {
    #[error("empty direction list")]
    EmptyDirections,
    #[error("non-finite direction angle")]
    NonFinite,
    #[error("duplicate directions")]
    DuplicateDirections,
    #[error("not closed under negation")]
    NotClosedUnderNegation,
    #[error("zero-length direction vector")]
    ZeroVector,
    #[error("ill-conditioned wedge")]
    IllConditionedWedge,
    #[error("empty point set")]
    EmptyPointSet,
}

/// A finite set of unit directions closed under negation, sorted by angle.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionSet {
    vectors: Vec<Point2>,
    alpha: f64,
}

impl DirectionSet {
    /// The unit vectors, sorted by angle in [0, 2pi). Antipodal vectors are
    /// stored as exact negations of each other.
    pub fn vectors(&self) -> &[Point2] {
        &self.vectors
    }

    /// Density: the largest angular gap between consecutive directions.
    /// Always at most pi for a set closed under negation.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Angularly consecutive pairs `(v_i, v_{i+1})`, wrapping around.
    pub fn pairs(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vectors.len();
        (0..n).map(move |i| (self.vectors[i], self.vectors[(i + 1) % n]))
    }

    /// Axis-parallel directions (density pi/2).
    pub fn axis_parallel() -> Self {
        DirectionSet::from_vectors(&[Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)], true).unwrap()
    }

    /// Axis-parallel directions rotated by 45 degrees (density pi/2).
    pub fn axis_parallel_rot45() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        DirectionSet::from_vectors(&[Point2::new(s, s), Point2::new(-s, s)], true).unwrap()
    }

    /// `k` equally spaced doubled directions: 2k vectors, density pi/k.
    pub fn equally_spaced(k: usize) -> Self {
        assert!(k >= 1);
        let angles: Vec<f64> = (0..k).map(|j| PI * j as f64 / k as f64).collect();
        make_direction_set(&angles, true).unwrap()
    }

    /// Build from arbitrary nonzero vectors (normalized internally).
    pub fn from_vectors(vectors: &[Point2], auto_close: bool) -> Result<Self, DirectedError> {
        if vectors.is_empty() {
            return Err(DirectedError::EmptyDirections);
        }
        let mut unit = Vec::with_capacity(vectors.len());
        for v in vectors {
            let n = v.norm();
            if n == 0.0 || !n.is_finite() {
                return Err(DirectedError::ZeroVector);
            }
            unit.push(v.scale(1.0 / n));
        }
        build_direction_set(unit, auto_close)
    }
}

/// Build a direction set from angles (radians). With `auto_close`, the
/// antipode of every angle is added; otherwise missing antipodes are an
/// error. Duplicates in the input (within 1e-12 of angle) are rejected.
pub fn make_direction_set(angles: &[f64], auto_close: bool) -> Result<DirectionSet, DirectedError> {
    if angles.is_empty() {
        return Err(DirectedError::EmptyDirections);
    }
    if angles.iter().any(|a| !a.is_finite()) {
        return Err(DirectedError::NonFinite);
    }
    let vecs: Vec<Point2> = angles
        .iter()
        .map(|&a| Point2::new(a.cos(), a.sin()))
        .collect();
    build_direction_set(vecs, auto_close)
}

fn circular_gap(a: f64, b: f64) -> f64 {
    let d = (b - a).rem_euclid(TAU);
    d.min(TAU - d)
}

fn build_direction_set(unit: Vec<Point2>, auto_close: bool) -> Result<DirectionSet, DirectedError> {
    let mut angled: Vec<(f64, Point2)> = unit.into_iter().map(|v| (v.angle(), v)).collect();
    angled.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    for w in angled.windows(2) {
        if circular_gap(w[0].0, w[1].0) < DEDUP_TOL {
            return Err(DirectedError::DuplicateDirections);
        }
    }
    if angled.len() >= 2 {
        let first = angled.first().unwrap().0;
        let last = angled.last().unwrap().0;
        if circular_gap(last, first) < DEDUP_TOL {
            return Err(DirectedError::DuplicateDirections);
        }
    }

    if !auto_close {
        // Every angle must have its antipode present.
        let angles: Vec<f64> = angled.iter().map(|&(a, _)| a).collect();
        for &a in &angles {
            let target = (a + PI).rem_euclid(TAU);
            if !angles
                .iter()
                .any(|&b| circular_gap(b, target) < NEGATION_TOL)
            {
                return Err(DirectedError::NotClosedUnderNegation);
            }
        }
    }

    // Rebuild the set from its lower half so that every antipodal pair is an
    // exact floating negation; downstream quadrant deduplication relies on
    // this.
    let mut lower: Vec<(f64, Point2)> = Vec::new();
    for &(a, v) in &angled {
        let (la, lv) = if a < PI {
            (a, v)
        } else {
            ((a - PI).rem_euclid(TAU), -v)
        };
        if !lower.iter().any(|&(b, _)| circular_gap(b, la) < DEDUP_TOL) {
            lower.push((la, lv));
        }
    }
    let mut full: Vec<(f64, Point2)> = Vec::with_capacity(lower.len() * 2);
    for &(_, v) in &lower {
        full.push((v.angle(), v));
        let nv = -v;
        full.push((nv.angle(), nv));
    }
    full.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let n = full.len();
    let mut alpha: f64 = 0.0;
    for i in 0..n {
        let a = full[i].0;
        let b = if i + 1 < n {
            full[i + 1].0
        } else {
            full[0].0 + TAU
        };
        alpha = alpha.max(b - a);
    }
    Ok(DirectionSet {
        vectors: full.into_iter().map(|(_, v)| v).collect(),
        alpha,
    })
}

/// One translatable family from the quadrant family of a direction set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConeFamily {
    /// Open wedge of strictly positive combinations of `u1` and `u2`,
    /// counterclockwise from `u1` to `u2`, opening angle in (0, pi).
    Wedge { u1: Point2, u2: Point2 },
    /// Open halfplane `{ x : dot(x, normal) > 0 }`.
    Halfplane { normal: Point2 },
}

impl ConeFamily {
    /// Is `q` strictly inside the family cone anchored at `anchor`?
    pub fn contains_open(&self, anchor: Point2, q: Point2) -> bool {
        let v = q - anchor;
        match self {
            ConeFamily::Wedge { u1, u2 } => u1.cross(v) > 0.0 && u2.cross(v) < 0.0,
            ConeFamily::Halfplane { normal } => v.dot(*normal) > 0.0,
        }
    }

    /// Is `q` inside the closed cone anchored at `anchor`?
    pub fn contains_closed(&self, anchor: Point2, q: Point2) -> bool {
        let v = q - anchor;
        match self {
            ConeFamily::Wedge { u1, u2 } => u1.cross(v) >= 0.0 && u2.cross(v) <= 0.0,
            ConeFamily::Halfplane { normal } => v.dot(*normal) >= 0.0,
        }
    }
}

/// The quadrant family: for each pair `(v1, v2)` the two wedges
/// `pspan(-v1, v2)` and `pspan(v1, -v2)`, plus two open halfplanes per
/// direction. Antipodal pairs (gap exactly pi) yield halfplanes instead of
/// degenerate wedges. Duplicates are removed, keeping first occurrences.
pub fn quadrant_family(d: &DirectionSet) -> Vec<ConeFamily> {
    let mut families: Vec<ConeFamily> = Vec::new();
    let mut push = |f: ConeFamily| {
        if !families.contains(&f) {
            families.push(f);
        }
    };

    for (v1, v2) in d.pairs() {
        let gap = {
            let g = (v2.angle() - v1.angle()).rem_euclid(TAU);
            if g == 0.0 {
                TAU
            } else {
                g
            }
        };
        if (gap - PI).abs() <= GAP_PI_TOL {
            // The two "quadrants" of a coincident pair of lines.
            push(ConeFamily::Halfplane { normal: v1.rot90() });
            push(ConeFamily::Halfplane {
                normal: -v1.rot90(),
            });
        } else {
            // (v1, v2)_L = pspan(-v1, v2): counterclockwise from v2 to -v1.
            push(ConeFamily::Wedge { u1: v2, u2: -v1 });
            // (v1, v2)_R = pspan(v1, -v2): counterclockwise from -v2 to v1.
            push(ConeFamily::Wedge { u1: -v2, u2: v1 });
        }
    }
    for &v in d.vectors() {
        push(ConeFamily::Halfplane { normal: v.rot90() });
        push(ConeFamily::Halfplane { normal: -v.rot90() });
    }
    families
}

/// Transformed coordinates sending the wedge to the positive quadrant, up to
/// a positive scale: `q - p` lies in `pspan(u1, u2)` iff both coordinates of
/// `q` strictly exceed those of `p`.
fn wedge_coords(p: Point2, u1: Point2, u2: Point2) -> (f64, f64) {
    (p.cross(u2), u1.cross(p))
}

/// Indices of points whose open wedge cone contains no other point of `S`,
/// sorted by first transformed coordinate descending.
///
/// Equal transformed coordinates never dominate each other, matching the
/// open-cone semantics.
pub fn staircase(points: &[Point2], u1: Point2, u2: Point2) -> Result<Vec<usize>, DirectedError> {
    if points.is_empty() {
        return Err(DirectedError::EmptyPointSet);
    }
    let mut det = u1.cross(u2);
    let (u1, u2) = if det < 0.0 {
        det = -det;
        (u2, u1)
    } else {
        (u1, u2)
    };
    if det < MIN_WEDGE_DET {
        return Err(DirectedError::IllConditionedWedge);
    }

    let mut keyed: Vec<(f64, f64, u32)> = points
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let (a, b) = wedge_coords(p, u1, u2);
            (a, b, i as u32)
        })
        .collect();
    // Anything strictly dominated by the best-sum point can never reach the
    // staircase, and that point survives the cut; pruning before the sort
    // leaves the frontier unchanged.
    if keyed.len() > 64 {
        let mut best = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut best_sum = f64::NEG_INFINITY;
        for &(a, b, _) in &keyed {
            if a + b > best_sum {
                best_sum = a + b;
                best = (a, b);
            }
        }
        keyed.retain(|&(a, b, _)| !(best.0 > a && best.1 > b));
    }
    keyed.sort_unstable_by(|x, y| {
        y.0.partial_cmp(&x.0)
            .unwrap()
            .then(y.1.partial_cmp(&x.1).unwrap())
            .then(x.2.cmp(&y.2))
    });

    let mut result = Vec::new();
    let mut best_t2 = f64::NEG_INFINITY;
    let mut i = 0;
    while i < keyed.len() {
        // Points sharing a first coordinate cannot dominate one another, so
        // the running maximum only advances between groups.
        let mut j = i;
        while j < keyed.len() && keyed[j].0 == keyed[i].0 {
            j += 1;
        }
        let mut group_max = f64::NEG_INFINITY;
        for &(_, t2, idx) in &keyed[i..j] {
            if t2 >= best_t2 {
                result.push(idx as usize);
            }
            group_max = group_max.max(t2);
        }
        best_t2 = best_t2.max(group_max);
        i = j;
    }
    Ok(result)
}

/// Exposure report: which input points lie on the directed hull boundary,
/// with one witnessing empty cone per exposed point.
#[derive(Debug, Clone)]
pub struct ExposureReport {
    /// Exposed point indices, ascending.
    pub exposed: Vec<usize>,
    /// For each exposed index, the first family (in quadrant-family order)
    /// whose open translate anchored at the point is empty.
    pub witnesses: Vec<ConeFamily>,
}

/// The points of `S` exposed by some family of `Q(D)`: the union of wedge
/// staircases and of halfplane extreme points.
///
/// Families are evaluated in parallel; witnesses are merged in family-list
/// order afterwards, so the first exposing family is reported
/// deterministically.
pub fn exposed_points(
    points: &[Point2],
    d: &DirectionSet,
) -> Result<ExposureReport, DirectedError> {
    if points.is_empty() {
        return Err(DirectedError::EmptyPointSet);
    }
    let families = quadrant_family(d);
    let per_family: Vec<Result<Vec<usize>, DirectedError>> = families
        .par_iter()
        .map(|fam| match *fam {
            ConeFamily::Wedge { u1, u2 } => staircase(points, u1, u2),
            ConeFamily::Halfplane { normal } => {
                let mut best = f64::NEG_INFINITY;
                for p in points {
                    best = best.max(p.dot(normal));
                }
                Ok(points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.dot(normal) == best)
                    .map(|(idx, _)| idx)
                    .collect())
            }
        })
        .collect();
    let mut witness: Vec<Option<usize>> = vec![None; points.len()];
    for (fi, result) in per_family.into_iter().enumerate() {
        for idx in result? {
            witness[idx].get_or_insert(fi);
        }
    }
    let mut exposed = Vec::new();
    let mut witnesses = Vec::new();
    for (idx, w) in witness.iter().enumerate() {
        if let Some(fi) = w {
            exposed.push(idx);
            witnesses.push(families[*fi]);
        }
    }
    Ok(ExposureReport { exposed, witnesses })
}

/// Number of points of `S` on the boundary of the directed hull; the
/// complexity statistic of the experiment harness.
pub fn boundary_count(points: &[Point2], d: &DirectionSet) -> Result<usize, DirectedError> {
    Ok(exposed_points(points, d)?.exposed.len())
}

struct WedgeIndex {
    u1: Point2,
    u2: Point2,
    /// Staircase first coordinates, descending.
    t1: Vec<f64>,
    /// Running maximum of the staircase second coordinate.
    prefix_max_t2: Vec<f64>,
    /// Transform too ill-conditioned; fall back to scanning.
    naive: bool,
}

struct HalfplaneIndex {
    normal: Point2,
    max_dot: f64,
}

/// Precomputed membership structure for the directed hull of a point set:
/// one staircase per wedge family plus the extreme offset per halfplane.
/// Queries cost O(|Q(D)| log n).
pub struct DirectedHull {
    points: Vec<Point2>,
    wedges: Vec<WedgeIndex>,
    halfplanes: Vec<HalfplaneIndex>,
}

enum FamilyIndex {
    Wedge(WedgeIndex),
    Halfplane(HalfplaneIndex),
}

impl DirectedHull {
    pub fn build(points: &[Point2], d: &DirectionSet) -> Result<Self, DirectedError> {
        if points.is_empty() {
            return Err(DirectedError::EmptyPointSet);
        }
        let indexed: Vec<Result<FamilyIndex, DirectedError>> = quadrant_family(d)
            .par_iter()
            .map(|fam| match *fam {
                ConeFamily::Wedge { u1, u2 } => match staircase(points, u1, u2) {
                    Ok(stairs) => {
                        // Same generator order as the staircase transform.
                        let (cu1, cu2) = if u1.cross(u2) < 0.0 {
                            (u2, u1)
                        } else {
                            (u1, u2)
                        };
                        let mut t1 = Vec::with_capacity(stairs.len());
                        let mut prefix = Vec::with_capacity(stairs.len());
                        let mut best = f64::NEG_INFINITY;
                        for &idx in &stairs {
                            let (a, b) = wedge_coords(points[idx], cu1, cu2);
                            t1.push(a);
                            best = best.max(b);
                            prefix.push(best);
                        }
                        Ok(FamilyIndex::Wedge(WedgeIndex {
                            u1: cu1,
                            u2: cu2,
                            t1,
                            prefix_max_t2: prefix,
                            naive: false,
                        }))
                    }
                    Err(DirectedError::IllConditionedWedge) => Ok(FamilyIndex::Wedge(WedgeIndex {
                        u1,
                        u2,
                        t1: Vec::new(),
                        prefix_max_t2: Vec::new(),
                        naive: true,
                    })),
                    Err(e) => Err(e),
                },
                ConeFamily::Halfplane { normal } => {
                    let max_dot = points
                        .iter()
                        .map(|p| p.dot(normal))
                        .fold(f64::NEG_INFINITY, f64::max);
                    Ok(FamilyIndex::Halfplane(HalfplaneIndex { normal, max_dot }))
                }
            })
            .collect();
        let mut wedges = Vec::new();
        let mut halfplanes = Vec::new();
        for item in indexed {
            match item? {
                FamilyIndex::Wedge(w) => wedges.push(w),
                FamilyIndex::Halfplane(h) => halfplanes.push(h),
            }
        }
        Ok(DirectedHull {
            points: points.to_vec(),
            wedges,
            halfplanes,
        })
    }

    /// True iff for every family the closed cone anchored at `x` contains at
    /// least one point of the set; exactly the directed-hull membership test
    /// up to a measure-zero boundary set.
    pub fn contains(&self, x: Point2) -> bool {
        for hp in &self.halfplanes {
            if hp.max_dot < x.dot(hp.normal) {
                return false;
            }
        }
        for w in &self.wedges {
            if w.naive {
                let fam = ConeFamily::Wedge { u1: w.u1, u2: w.u2 };
                if !self.points.iter().any(|&p| fam.contains_closed(x, p)) {
                    return false;
                }
                continue;
            }
            let (a, b) = wedge_coords(x, w.u1, w.u2);
            // Count of staircase entries with t1 >= a.
            let cnt = w.t1.partition_point(|&t| t >= a);
            if cnt == 0 || w.prefix_max_t2[cnt - 1] < b {
                return false;
            }
        }
        true
    }
}

/// One-shot membership query; builds a throwaway index. Prefer
/// [`DirectedHull::build`] for repeated queries on the same set.
pub fn contains(points: &[Point2], d: &DirectionSet, x: Point2) -> Result<bool, DirectedError> {
    Ok(DirectedHull::build(points, d)?.contains(x))
}

/// Monte Carlo estimate of the directed hull area: the region measure times
/// the fraction of uniform region draws inside the hull.
pub fn area_estimate(
    points: &[Point2],
    d: &DirectionSet,
    rng: &mut RngStream,
    samples: usize,
    region: &Region,
) -> Result<f64, DirectedError> {
    assert!(samples >= 1);
    assert!(region.is_planar(), "area estimation needs a planar region");
    let hull = DirectedHull::build(points, d)?;
    let mut hits = 0usize;
    for _ in 0..samples {
        let p = region.sample(rng).as_point2().unwrap();
        if hull.contains(p) {
            hits += 1;
        }
    }
    Ok(region.measure() * hits as f64 / samples as f64)
}

/// Largest radius r (bisected to `tol`) such that all `probe_count` equally
/// spaced points on the circle of radius r lie in the directed hull;
/// 0 when even radius `tol` fails.
pub fn min_contained_radius(
    points: &[Point2],
    d: &DirectionSet,
    tol: f64,
    probe_count: usize,
) -> Result<f64, DirectedError> {
    assert!(tol > 0.0 && probe_count >= 1);
    let hull = DirectedHull::build(points, d)?;
    let ok = |r: f64| {
        (0..probe_count).all(|i| {
            let t = TAU * i as f64 / probe_count as f64;
            hull.contains(Point2::new(r * t.cos(), r * t.sin()))
        })
    };
    if !ok(tol) {
        return Ok(0.0);
    }
    if ok(1.0) {
        return Ok(1.0);
    }
    let (mut lo, mut hi) = (tol, 1.0);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if ok(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn dxy_has_four_vectors_and_alpha_half_pi() {
        let d = make_direction_set(&[0.0, FRAC_PI_2], true).unwrap();
        assert_eq!(d.len(), 4);
        assert!((d.alpha() - FRAC_PI_2).abs() < 1e-12);
        // Named constructor builds exact axis vectors.
        let dxy = DirectionSet::axis_parallel();
        assert_eq!(dxy.vectors()[0], pt(1.0, 0.0));
        assert_eq!(dxy.vectors()[1], pt(0.0, 1.0));
        assert_eq!(dxy.vectors()[2], pt(-1.0, 0.0));
        assert_eq!(dxy.vectors()[3], pt(0.0, -1.0));
    }

    #[test]
    fn equally_spaced_alpha() {
        for k in [2usize, 3, 5, 16] {
            let d = DirectionSet::equally_spaced(k);
            assert_eq!(d.len(), 2 * k);
            assert!((d.alpha() - PI / k as f64).abs() < 1e-9, "k={k}");
        }
    }

    #[test]
    fn missing_antipode_is_error() {
        assert_eq!(
            make_direction_set(&[0.0], false),
            Err(DirectedError::NotClosedUnderNegation)
        );
    }

    #[test]
    fn duplicate_directions_are_an_error() {
        assert_eq!(
            make_direction_set(&[0.1, 0.1 + 1e-14], true),
            Err(DirectedError::DuplicateDirections)
        );
    }

    #[test]
    fn auto_close_merges_existing_antipodes() {
        let d = make_direction_set(&[0.0, PI], true).unwrap();
        assert_eq!(d.len(), 2);
        assert!((d.alpha() - PI).abs() < 1e-12);
    }

    #[test]
    fn quadrant_family_dxy() {
        let fams = quadrant_family(&DirectionSet::axis_parallel());
        let wedges = fams
            .iter()
            .filter(|f| matches!(f, ConeFamily::Wedge { .. }))
            .count();
        let halfplanes = fams
            .iter()
            .filter(|f| matches!(f, ConeFamily::Halfplane { .. }))
            .count();
        assert_eq!(wedges, 4);
        assert_eq!(halfplanes, 4);
    }

    #[test]
    fn quadrant_family_antipodal_pair_degenerates_to_slab() {
        let d = make_direction_set(&[0.3], true).unwrap();
        let fams = quadrant_family(&d);
        assert!(fams
            .iter()
            .all(|f| matches!(f, ConeFamily::Halfplane { .. })));
        assert_eq!(fams.len(), 2);
    }

    #[test]
    fn quadrant_family_regular_eight_openings() {
        let d = DirectionSet::equally_spaced(4);
        for fam in quadrant_family(&d) {
            if let ConeFamily::Wedge { u1, u2 } = fam {
                let opening = (u2.angle() - u1.angle()).rem_euclid(TAU);
                assert!((opening - (PI - FRAC_PI_4)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn staircase_open_ne_quadrant() {
        let pts = [pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 1.0)];
        let idx = staircase(&pts, pt(1.0, 0.0), pt(0.0, 1.0)).unwrap();
        assert_eq!(idx, vec![1, 2]);
    }

    #[test]
    fn staircase_singleton_and_ties() {
        assert_eq!(
            staircase(&[pt(3.0, 4.0)], pt(1.0, 0.0), pt(0.0, 1.0)).unwrap(),
            vec![0]
        );
        // Collinear along u1: nobody strictly dominates in both coordinates.
        let pts = [pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)];
        let idx = staircase(&pts, pt(1.0, 0.0), pt(0.0, 1.0)).unwrap();
        assert_eq!(idx.len(), 3);
    }

    #[test]
    fn staircase_rejects_degenerate_wedge() {
        assert_eq!(
            staircase(&[pt(0.0, 0.0)], pt(1.0, 0.0), pt(-1.0, 1e-12)),
            Err(DirectedError::IllConditionedWedge)
        );
    }

    #[test]
    fn exposed_points_triangle_dxy() {
        let pts = [pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 1.0)];
        let rep = exposed_points(&pts, &DirectionSet::axis_parallel()).unwrap();
        assert_eq!(rep.exposed, vec![0, 1, 2]);
        // Every witness verifies against a direct emptiness scan.
        for (&idx, fam) in rep.exposed.iter().zip(&rep.witnesses) {
            for (j, &q) in pts.iter().enumerate() {
                if j != idx {
                    assert!(!fam.contains_open(pts[idx], q));
                }
            }
        }
    }

    #[test]
    fn two_points_always_exposed() {
        let pts = [pt(0.0, 0.0), pt(1.0, 1.0)];
        for d in [
            DirectionSet::axis_parallel(),
            DirectionSet::equally_spaced(5),
        ] {
            assert_eq!(exposed_points(&pts, &d).unwrap().exposed, vec![0, 1]);
        }
    }

    #[test]
    fn contains_examples() {
        let d = DirectionSet::axis_parallel();
        let pts = [pt(0.0, 0.0), pt(1.0, 1.0)];
        for &p in &pts {
            assert!(contains(&pts, &d, p).unwrap());
        }
        assert!(!contains(&pts, &d, pt(0.5, 0.5)).unwrap());
    }

    #[test]
    fn area_estimate_square_corners_dxy() {
        let corners = [pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)];
        let d = DirectionSet::axis_parallel();
        // Dense grid: membership holds everywhere in the square.
        let hull = DirectedHull::build(&corners, &d).unwrap();
        for i in 0..50 {
            for j in 0..50 {
                let p = pt((i as f64 + 0.5) / 50.0, (j as f64 + 0.5) / 50.0);
                assert!(hull.contains(p));
            }
        }
        let region = Region::hypercube(2, 1.0).unwrap();
        let mut rng = crate::sampling::substream(5, 0);
        let est = area_estimate(&corners, &d, &mut rng, 2000, &region).unwrap();
        assert!((est - 1.0).abs() < 1e-12, "estimate {est}");
    }

    #[test]
    fn area_estimate_singleton_is_zero() {
        let d = DirectionSet::axis_parallel();
        let region = Region::disk(1.0).unwrap();
        let mut rng = crate::sampling::substream(5, 1);
        let est = area_estimate(&[pt(0.1, 0.2)], &d, &mut rng, 2000, &region).unwrap();
        assert_eq!(est, 0.0);
    }

    #[test]
    fn min_radius_singleton_is_zero() {
        let d = DirectionSet::equally_spaced(8);
        assert_eq!(
            min_contained_radius(&[pt(0.0, 0.0)], &d, 1e-3, 64).unwrap(),
            0.0
        );
    }

    #[test]
    fn min_radius_postcondition_probes_contained() {
        let region = Region::disk(1.0).unwrap();
        let mut rng = crate::sampling::substream(19, 0);
        let pts = region.sample_planar(4000, &mut rng);
        let d = DirectionSet::equally_spaced(16);
        let r = min_contained_radius(&pts, &d, 1e-3, 128).unwrap();
        assert!(r > 0.5, "r = {r}");
        let hull = DirectedHull::build(&pts, &d).unwrap();
        for i in 0..128 {
            let t = TAU * i as f64 / 128.0;
            assert!(hull.contains(pt(r * t.cos(), r * t.sin())));
        }
    }

    #[test]
    fn dense_samples_contain_large_disk() {
        // 64 directions: equally_spaced(32).
        let region = Region::disk(1.0).unwrap();
        let mut rng = crate::sampling::substream(23, 0);
        let pts = region.sample_planar(100_000, &mut rng);
        let d = DirectionSet::equally_spaced(32);
        let r = min_contained_radius(&pts, &d, 1e-3, 256).unwrap();
        assert!(r > 0.9, "r = {r}");
    }
}
