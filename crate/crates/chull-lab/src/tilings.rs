//! Equal-area decompositions used by the expected-complexity experiments:
//! the sector-annulus tiling of the unit disk, square/hypercube grids, and
//! the triangle fan tiling. Tiles are kept implicit (indices plus
//! closed-form geometry); exposure counting never materializes polygons.

use std::f64::consts::TAU;

use thiserror::Error;

use crate::geom::{ConvexPolygon, Point2, PointD};

#[derive(Debug, Error, PartialEq)]
pub enum TilingError {
    #[error("sector count must be >= 3 and ring count >= 1")]
    BadSectorCounts,
    #[error("grid needs cells_per_side >= 1, dimension >= 1 and positive side")]
    BadGrid,
    #[error("triangle fan needs non-collinear vertices, apex in 0..3, m >= 1, mu >= 1")]
    BadTriangleFan,
    #[error("dimension must be <= 20")]
    DimensionOverflow,
}

/// Per-edge halfplane data for a counterclockwise convex polygon: outward
/// normal, offset, and the normal's polar angle and length for arc tests.
struct EdgeHalfplanes {
    normals: Vec<Point2>,
    offsets: Vec<f64>,
    phis: Vec<f64>,
    norm_lens: Vec<f64>,
}

impl EdgeHalfplanes {
    fn of(hull: &ConvexPolygon) -> Option<Self> {
        let v = hull.vertices();
        if v.len() < 3 {
            return None;
        }
        let mut normals = Vec::with_capacity(v.len());
        let mut offsets = Vec::with_capacity(v.len());
        let mut phis = Vec::with_capacity(v.len());
        let mut norm_lens = Vec::with_capacity(v.len());
        for i in 0..v.len() {
            let a = v[i];
            let b = v[(i + 1) % v.len()];
            let e = b - a;
            let n = Point2::new(e.y, -e.x);
            normals.push(n);
            offsets.push(a.dot(n));
            phis.push(n.y.atan2(n.x));
            norm_lens.push(n.norm());
        }
        Some(EdgeHalfplanes {
            normals,
            offsets,
            phis,
            norm_lens,
        })
    }

    fn len(&self) -> usize {
        self.normals.len()
    }

    /// Largest radius around the origin certainly inside the hull, or None
    /// if the origin is not strictly interior.
    fn inradius_about_origin(&self) -> Option<f64> {
        let mut r = f64::INFINITY;
        for i in 0..self.len() {
            if self.offsets[i] <= 0.0 {
                return None;
            }
            r = r.min(self.offsets[i] / self.norm_lens[i]);
        }
        Some(r)
    }
}

/// The disk partition into `m` congruent sectors crossed with `mu` rings of
/// equal area. Ring 1 is outermost; `radii[i] = sqrt(1 - i/mu)`.
#[derive(Debug, Clone)]
pub struct SectorAnnulusTiling {
    pub m: usize,
    pub mu: usize,
    pub radii: Vec<f64>,
    pub sector_angle: f64,
}

pub fn build_sector_annulus(m: usize, mu: usize) -> Result<SectorAnnulusTiling, TilingError> {
    if m < 3 || mu < 1 {
        return Err(TilingError::BadSectorCounts);
    }
    let radii: Vec<f64> = (0..=mu)
        .map(|i| (1.0 - i as f64 / mu as f64).max(0.0).sqrt())
        .collect();
    Ok(SectorAnnulusTiling {
        m,
        mu,
        radii,
        sector_angle: TAU / m as f64,
    })
}

impl SectorAnnulusTiling {
    pub fn tile_count(&self) -> usize {
        self.m * self.mu
    }

    /// Exact tile area: every tile has area pi / (m * mu).
    pub fn tile_area(&self) -> f64 {
        std::f64::consts::PI / self.tile_count() as f64
    }

    /// 1-based sector index of a point.
    pub fn sector_of(&self, p: Point2) -> usize {
        let j = (p.angle() / self.sector_angle) as usize;
        j.min(self.m - 1) + 1
    }

    /// 1-based ring index (outermost first) of a point; points at or beyond
    /// the unit circle map to ring 1.
    pub fn ring_of(&self, p: Point2) -> usize {
        let r2 = p.x * p.x + p.y * p.y;
        let i = (self.mu as f64 * (1.0 - r2)).ceil() as isize;
        i.clamp(1, self.mu as isize) as usize
    }

    /// First ring index whose tile in sector `j` (1-based) contains a point
    /// of `points`, or `mu + 1` when the sector is empty.
    pub fn first_occupied(&self, points: &[Point2], sector: usize) -> usize {
        assert!((1..=self.m).contains(&sector));
        points
            .iter()
            .filter(|&&p| self.sector_of(p) == sector)
            .map(|&p| self.ring_of(p))
            .min()
            .unwrap_or(self.mu + 1)
    }

    /// First occupied ring for every sector in one pass.
    pub fn first_occupied_all(&self, points: &[Point2]) -> Vec<usize> {
        let mut first = vec![self.mu + 1; self.m];
        for &p in points {
            let j = self.sector_of(p) - 1;
            first[j] = first[j].min(self.ring_of(p));
        }
        first
    }

    /// Exact single-tile exposure: is tile (ring, sector) not fully
    /// contained in the hull?
    pub fn tile_exposed(&self, hull: &ConvexPolygon, ring: usize, sector: usize) -> bool {
        assert!((1..=self.mu).contains(&ring) && (1..=self.m).contains(&sector));
        let Some(edges) = EdgeHalfplanes::of(hull) else {
            return true;
        };
        let theta_lo = (sector - 1) as f64 * self.sector_angle;
        let theta_hi = sector as f64 * self.sector_angle;
        !annular_tile_contained(
            &edges,
            self.radii[ring - 1],
            self.radii[ring],
            theta_lo,
            theta_hi,
        )
    }

    /// Number of tiles per sector not fully contained in the hull.
    pub fn exposed_per_sector(&self, hull: &ConvexPolygon) -> Vec<usize> {
        let Some(edges) = EdgeHalfplanes::of(hull) else {
            return vec![self.mu; self.m]; // degenerate hull exposes everything
        };
        // Rings entirely inside the inscribed origin-centered disk are
        // contained; only the outer rings need the exact test.
        let deepest_ring = match edges.inradius_about_origin() {
            Some(r_safe) => {
                let mut i = 1;
                while i <= self.mu && self.radii[i - 1] > r_safe {
                    i += 1;
                }
                i - 1
            }
            None => self.mu,
        };
        let mut per_sector = vec![0usize; self.m];
        for (j, count) in per_sector.iter_mut().enumerate() {
            let theta_lo = j as f64 * self.sector_angle;
            let theta_hi = (j + 1) as f64 * self.sector_angle;
            for i in 1..=deepest_ring {
                let r_out = self.radii[i - 1];
                let r_in = self.radii[i];
                if !annular_tile_contained(&edges, r_out, r_in, theta_lo, theta_hi) {
                    *count += 1;
                }
            }
        }
        per_sector
    }

    pub fn exposed_tiles(&self, hull: &ConvexPolygon) -> usize {
        self.exposed_per_sector(hull).iter().sum()
    }
}

/// Exact containment of an annular-sector tile in a convex polygon: all four
/// corners inside every edge halfplane, and for each bounding arc the arc
/// maximum along each edge normal must not exceed that edge's offset.
fn annular_tile_contained(
    edges: &EdgeHalfplanes,
    r_out: f64,
    r_in: f64,
    theta_lo: f64,
    theta_hi: f64,
) -> bool {
    let (cl, sl) = (theta_lo.cos(), theta_lo.sin());
    let (ch, sh) = (theta_hi.cos(), theta_hi.sin());
    for e in 0..edges.len() {
        let n = edges.normals[e];
        let off = edges.offsets[e];
        let d_out_lo = r_out * (cl * n.x + sl * n.y);
        let d_out_hi = r_out * (ch * n.x + sh * n.y);
        let d_in_lo = r_in * (cl * n.x + sl * n.y);
        let d_in_hi = r_in * (ch * n.x + sh * n.y);
        if d_out_lo > off || d_out_hi > off || d_in_lo > off || d_in_hi > off {
            return false;
        }
        // Unconstrained arc maximizer is the normal's angle; in-range means
        // the arc reaches radius * |normal|, otherwise an endpoint wins.
        let cand = theta_lo + (edges.phis[e] - theta_lo).rem_euclid(TAU);
        if cand <= theta_hi {
            if r_out * edges.norm_lens[e] > off {
                return false;
            }
            if r_in > 0.0 && r_in * edges.norm_lens[e] > off {
                return false;
            }
        }
    }
    true
}

/// An axis-aligned grid over `[0, side]^d` with `cells_per_side` cells per
/// axis; cell volume is exactly `(side / cells_per_side)^d`.
#[derive(Debug, Clone)]
pub struct GridTiling {
    pub cells_per_side: usize,
    pub d: usize,
    pub side: f64,
}

pub fn build_grid(cells_per_side: usize, d: usize, side: f64) -> Result<GridTiling, TilingError> {
    if cells_per_side < 1 || d < 1 || !side.is_finite() || side <= 0.0 {
        return Err(TilingError::BadGrid);
    }
    if d > 20 {
        return Err(TilingError::DimensionOverflow);
    }
    Ok(GridTiling {
        cells_per_side,
        d,
        side,
    })
}

impl GridTiling {
    pub fn cell_count(&self) -> usize {
        self.cells_per_side.pow(self.d as u32)
    }

    pub fn cell_side(&self) -> f64 {
        self.side / self.cells_per_side as f64
    }

    /// Planar grid cells not fully contained in the hull.
    pub fn exposed_tiles(&self, hull: &ConvexPolygon) -> usize {
        assert_eq!(self.d, 2, "planar exposure needs a 2-d grid");
        let Some(edges) = EdgeHalfplanes::of(hull) else {
            return self.cell_count();
        };
        let h = self.cell_side();
        let mut exposed = 0usize;
        for iy in 0..self.cells_per_side {
            for ix in 0..self.cells_per_side {
                let (x0, x1) = (ix as f64 * h, (ix + 1) as f64 * h);
                let (y0, y1) = (iy as f64 * h, (iy + 1) as f64 * h);
                let corners = [
                    Point2::new(x0, y0),
                    Point2::new(x1, y0),
                    Point2::new(x1, y1),
                    Point2::new(x0, y1),
                ];
                let contained = (0..edges.len()).all(|e| {
                    let n = edges.normals[e];
                    let off = edges.offsets[e];
                    corners.iter().all(|c| c.dot(n) <= off)
                });
                if !contained {
                    exposed += 1;
                }
            }
        }
        exposed
    }

    /// Cells exposed by some open orthant: a cell counts when for some sign
    /// vector the open orthant anchored at the cell's extreme corner in that
    /// direction contains no point of `S`. Exact because the orthant at any
    /// cell point contains the orthant at the extreme corner.
    pub fn exposed_hypercube_cells(&self, points: &[PointD]) -> Result<usize, TilingError> {
        let d = self.d;
        if d > 20 {
            return Err(TilingError::DimensionOverflow);
        }
        assert!(
            points.iter().all(|p| p.dim() == d),
            "point dimension mismatch"
        );
        let h = self.cell_side();
        let n_signs = 1usize << d;

        // Per sign vector: flipped strict-dominance survivors, sorted by
        // first flipped coordinate descending for early scan exit.
        let mut fronts: Vec<Vec<Vec<f64>>> = Vec::with_capacity(n_signs);
        for bits in 0..n_signs {
            let signs: Vec<f64> = (0..d)
                .map(|k| if bits >> k & 1 == 1 { 1.0 } else { -1.0 })
                .collect();
            let mut cands: Vec<Vec<f64>> = Vec::new();
            for p in points {
                let f: Vec<f64> = p.coords.iter().zip(&signs).map(|(&c, &s)| c * s).collect();
                if !cands.iter().any(|c| c.iter().zip(&f).all(|(a, b)| a > b)) {
                    cands.retain(|c| !f.iter().zip(c.iter()).all(|(a, b)| a > b));
                    cands.push(f);
                }
            }
            cands.sort_by(|a, b| b[0].partial_cmp(&a[0]).unwrap());
            fronts.push(cands);
        }

        let mut exposed = 0usize;
        let mut idx = vec![0usize; d]; // cell odometer, 0-based
        let mut corner = vec![0.0f64; d];
        loop {
            let mut cell_exposed = false;
            for (bits, front) in fronts.iter().enumerate() {
                for k in 0..d {
                    let (lo, hi) = (idx[k] as f64 * h, (idx[k] + 1) as f64 * h);
                    corner[k] = if bits >> k & 1 == 1 { hi } else { -lo };
                }
                let mut dominated = false;
                for cand in front {
                    if cand[0] <= corner[0] {
                        break;
                    }
                    if cand.iter().zip(&corner).all(|(a, b)| a > b) {
                        dominated = true;
                        break;
                    }
                }
                if !dominated {
                    cell_exposed = true;
                    break;
                }
            }
            if cell_exposed {
                exposed += 1;
            }
            // advance odometer
            let mut k = 0;
            loop {
                if k == d {
                    return Ok(exposed);
                }
                idx[k] += 1;
                if idx[k] < self.cells_per_side {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}

/// A triangle split into `m` equal-area fan slices from the apex, each cut
/// into `mu` equal-area bands by segments parallel to the opposite side
/// (cut parameter `t_i = sqrt(i / mu)`).
#[derive(Debug, Clone)]
pub struct TriangleFanTiling {
    pub apex: Point2,
    pub base_from: Point2,
    pub base_to: Point2,
    pub apex_index: usize,
    pub m: usize,
    pub mu: usize,
}

pub fn build_triangle_fan(
    a: Point2,
    b: Point2,
    c: Point2,
    apex_index: usize,
    m: usize,
    mu: usize,
) -> Result<TriangleFanTiling, TilingError> {
    if apex_index > 2 || m < 1 || mu < 1 || crate::geom::cross(a, b, c) == 0.0 {
        return Err(TilingError::BadTriangleFan);
    }
    let (apex, base_from, base_to) = match apex_index {
        0 => (a, b, c),
        1 => (b, c, a),
        _ => (c, a, b),
    };
    Ok(TriangleFanTiling {
        apex,
        base_from,
        base_to,
        apex_index,
        m,
        mu,
    })
}

impl TriangleFanTiling {
    pub fn tile_count(&self) -> usize {
        self.m * self.mu
    }

    fn cut(&self, i: usize) -> f64 {
        (i as f64 / self.mu as f64).sqrt()
    }

    /// Corners of tile (slice k in 1..=m, band i in 1..=mu); band 1 is the
    /// degenerate trapezoid at the apex.
    pub fn tile_corners(&self, k: usize, i: usize) -> [Point2; 4] {
        let base = self.base_to - self.base_from;
        let p_lo = self.base_from + base.scale((k - 1) as f64 / self.m as f64);
        let p_hi = self.base_from + base.scale(k as f64 / self.m as f64);
        let (t0, t1) = (self.cut(i - 1), self.cut(i));
        let at = |t: f64, p: Point2| self.apex + (p - self.apex).scale(t);
        [at(t0, p_lo), at(t0, p_hi), at(t1, p_hi), at(t1, p_lo)]
    }

    pub fn exposed_tiles(&self, hull: &ConvexPolygon) -> usize {
        let Some(edges) = EdgeHalfplanes::of(hull) else {
            return self.tile_count();
        };
        let mut exposed = 0usize;
        for k in 1..=self.m {
            for i in 1..=self.mu {
                let corners = self.tile_corners(k, i);
                let contained = (0..edges.len()).all(|e| {
                    let n = edges.normals[e];
                    let off = edges.offsets[e];
                    corners.iter().all(|c| c.dot(n) <= off)
                });
                if !contained {
                    exposed += 1;
                }
            }
        }
        exposed
    }
}

/// Dispatch type for the planar tilings usable with convex-hull exposure.
#[derive(Debug, Clone)]
pub enum Tiling2 {
    Sector(SectorAnnulusTiling),
    Grid(GridTiling),
    TriangleFan(TriangleFanTiling),
}

/// Count of tiles not fully contained in the hull, exact for every variant.
pub fn exposed_tiles_convex(tiling: &Tiling2, hull: &ConvexPolygon) -> usize {
    match tiling {
        Tiling2::Sector(t) => t.exposed_tiles(hull),
        Tiling2::Grid(t) => t.exposed_tiles(hull),
        Tiling2::TriangleFan(t) => t.exposed_tiles(hull),
    }
}
