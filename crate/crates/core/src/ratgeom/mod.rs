//! Exact rational convex geometry: bodies in the nonnegative orthant,
//! support functions, extreme points, normal cones, cone hulls, and volumes.
//!
//! A [`Body`] is always vertex-represented. Halfspace data is derived on
//! demand (dimension <= 3) by the hull machinery; higher dimensions are
//! served by support-function queries, which never need facets.

mod cones;
mod hull;
pub mod surrogates;

pub use cones::{
    cone_contains, enumerate_rays, gamma_hull, is_lower_set, lower_hull, lower_set_witness,
    PolyCone,
};
pub(crate) use cones::hull_from_constraint_rays;
pub(crate) use hull::{affine_rank, chain2d, facet_inequalities};

use crate::lp::{self, Constraint, Sense};
use crate::mnp;
use crate::rat::{dot, dot_f64, is_zero_vec, primitive, Rat};
use num_traits::{Signed, Zero};

pub type Point = Vec<Rat>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("body must have at least one vertex")]
    NoVertices,
    #[error("vertex coordinates must be nonnegative")]
    NegativeCoordinate,
    #[error("the origin is not contained in the convex hull of the vertices")]
    OriginNotContained,
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("point is not an extreme point of the body")]
    NotExtreme,
    #[error("cone has no representation")]
    EmptyCone,
    #[error("cone contains no strictly positive direction")]
    NoPositiveDirection,
    #[error("exact hull computations are limited to dimension <= {limit}")]
    DimensionTooLarge { limit: usize },
    #[error("index set out of range or empty")]
    BadIndexSet,
    #[error("lp failure: {0}")]
    Lp(#[from] lp::Error),
}

/// A nonzero rational direction in `R^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Direction {
    coords: Vec<Rat>,
}

impl Direction {
    pub fn new(coords: Vec<Rat>) -> Result<Self, GeomError> {
        if is_zero_vec(&coords) {
            return Err(GeomError::ZeroDirection);
        }
        Ok(Direction { coords })
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// A compact convex polytope in `R^n_+` containing the origin, given by
/// its vertices with exact rational coordinates.
///
/// Invariants enforced at construction: every coordinate is nonnegative,
/// the vertex list is deduplicated and lexicographically sorted, and the
/// origin lies in the convex hull (exact LP feasibility check; the origin
/// does not have to be listed as a vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Body {
    dim: usize,
    vertices: Vec<Point>,
}

impl Body {
    pub fn new(dim: usize, vertices: Vec<Point>) -> Result<Self, GeomError> {
        if dim == 0 {
            return Err(GeomError::DimensionMismatch { expected: 1, got: 0 });
        }
        if vertices.is_empty() {
            return Err(GeomError::NoVertices);
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(GeomError::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
            if v.iter().any(|x| x.is_negative()) {
                return Err(GeomError::NegativeCoordinate);
            }
        }
        let mut vertices = vertices;
        vertices.sort();
        vertices.dedup();
        let body = Body { dim, vertices };
        let origin = vec![Rat::zero(); dim];
        if !body.contains(&origin)? {
            return Err(GeomError::OriginNotContained);
        }
        Ok(body)
    }

    /// The standard simplex `conv{0, e_1, ..., e_n}`.
    pub fn simplex(dim: usize) -> Body {
        let mut vertices = vec![vec![Rat::zero(); dim]];
        for i in 0..dim {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::from_integer(1.into());
            vertices.push(v);
        }
        Body::new(dim, vertices).expect("simplex is valid")
    }

    /// The cube `[0,1]^n`.
    pub fn unit_box(dim: usize) -> Body {
        let mut vertices = Vec::with_capacity(1 << dim);
        for mask in 0..(1u32 << dim) {
            let v = (0..dim)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Rat::from_integer(1.into())
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            vertices.push(v);
        }
        Body::new(dim, vertices).expect("box is valid")
    }

    /// The segment `[0, c]` in one dimension.
    pub fn segment(c: Rat) -> Body {
        Body::new(1, vec![vec![Rat::zero()], vec![c]]).expect("segment is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Exact membership of a point in the body (LP feasibility of the
    /// convex-combination system).
    pub fn contains(&self, p: &[Rat]) -> Result<bool, GeomError> {
        if p.len() != self.dim {
            return Err(GeomError::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        Ok(points_contain(&self.vertices, p)?)
    }

    /// The support function `max_{s in S} <s, xi>` evaluated exactly.
    pub fn support(&self, xi: &Direction) -> Result<Rat, GeomError> {
        if xi.dim() != self.dim {
            return Err(GeomError::DimensionMismatch {
                expected: self.dim,
                got: xi.dim(),
            });
        }
        Ok(self.support_raw(xi.coords()))
    }

    pub(crate) fn support_raw(&self, xi: &[Rat]) -> Rat {
        self.vertices
            .iter()
            .map(|v| dot(v, xi))
            .max()
            .expect("body has vertices")
    }

    /// Float-direction support evaluation.
    pub fn support_f64(&self, xi: &[f64]) -> f64 {
        assert_eq!(xi.len(), self.dim, "direction dimension mismatch");
        self.vertices
            .iter()
            .map(|v| dot_f64(v, xi))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// The minimal vertex set: every returned point is outside the hull of
    /// the others (exact LP test per vertex). Sorted lexicographically.
    pub fn extreme_points(&self) -> Vec<Point> {
        extreme_of_points(&self.vertices)
    }

    /// The body with its vertex list reduced to extreme points.
    pub fn reduced(&self) -> Body {
        Body {
            dim: self.dim,
            vertices: self.extreme_points(),
        }
    }

    /// Normal cone at an extreme point `s`: all directions whose support
    /// maximum over the body is attained at `s`, as the inequality cone
    /// `{xi : <s - t, xi> >= 0 for every extreme t}`.
    pub fn normal_cone(&self, s: &[Rat]) -> Result<PolyCone, GeomError> {
        let ext = self.extreme_points();
        if !ext.iter().any(|v| v[..] == *s) {
            return Err(GeomError::NotExtreme);
        }
        let mut inequalities = Vec::new();
        for t in &ext {
            if t[..] != *s {
                let diff: Vec<Rat> = s.iter().zip(t).map(|(a, b)| a - b).collect();
                inequalities.push(primitive(&diff));
            }
        }
        if inequalities.is_empty() {
            // single-point body: the normal cone is all of R^n
            let mut gens = Vec::new();
            for i in 0..self.dim {
                let mut e = vec![Rat::zero(); self.dim];
                e[i] = Rat::from_integer(1.into());
                gens.push(e.clone());
                e[i] = Rat::from_integer((-1).into());
                gens.push(e);
            }
            return PolyCone::from_generators(self.dim, gens);
        }
        inequalities.sort();
        inequalities.dedup();
        PolyCone::from_inequalities(self.dim, inequalities)
    }

    /// Exact euclidean volume; 0 for lower-dimensional bodies. The exact
    /// triangulation path covers dimension <= 4; higher dimensions fall
    /// back to Monte Carlo and set the `approximate` flag.
    pub fn volume(&self) -> Volume {
        hull::volume(self)
    }

    /// Separating direction `xi` with `<w, xi> > support(xi)` for a point
    /// outside the body, `None` for a point inside.
    pub fn separate(&self, w: &[Rat]) -> Option<Vec<Rat>> {
        mnp::separate(&self.vertices, w)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Volume {
    pub value: Rat,
    /// Set when the value comes from the Monte Carlo fallback.
    pub approximate: bool,
}

/// LP membership of `p` in the convex hull of `points`.
pub(crate) fn points_contain(points: &[Point], p: &[Rat]) -> Result<bool, lp::Error> {
    let k = points.len();
    let n = p.len();
    let mut constraints = Vec::with_capacity(n + 1);
    for coord in 0..n {
        constraints.push(Constraint {
            coeffs: points.iter().map(|v| v[coord].clone()).collect(),
            sense: Sense::Eq,
            rhs: p[coord].clone(),
        });
    }
    constraints.push(Constraint {
        coeffs: vec![Rat::from_integer(1.into()); k],
        sense: Sense::Eq,
        rhs: Rat::from_integer(1.into()),
    });
    lp::feasible(constraints)
}

/// Minimal extreme subset of a point set (exact LP test per point).
pub(crate) fn extreme_of_points(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 1 {
        return pts;
    }
    let mut keep = Vec::new();
    for i in 0..pts.len() {
        let others: Vec<Point> = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .collect();
        if !points_contain(&others, &pts[i]).expect("membership lp") {
            keep.push(pts[i].clone());
        }
    }
    keep
}

/// Support function of a raw point set (no body invariants assumed).
pub fn support_of_points(points: &[Point], xi: &[Rat]) -> Rat {
    points
        .iter()
        .map(|v| dot(v, xi))
        .max()
        .expect("nonempty point set")
}

/// Intersection of `conv(points)` with the halfspace `<a, x> <= b`,
/// returned as a point set whose hull is the intersection.
pub(crate) fn clip_halfspace(points: &[Point], a: &[Rat], b: &Rat) -> Vec<Point> {
    let vals: Vec<Rat> = points.iter().map(|p| dot(p, a)).collect();
    let mut out: Vec<Point> = Vec::new();
    for (p, v) in points.iter().zip(&vals) {
        if v <= b {
            out.push(p.clone());
        }
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let (lo, hi) = if vals[i] < vals[j] { (i, j) } else { (j, i) };
            if vals[lo] < *b && *b < vals[hi] {
                // crossing point p_lo + t (p_hi - p_lo), t = (b - v_lo)/(v_hi - v_lo)
                let t = (b - &vals[lo]) / (&vals[hi] - &vals[lo]);
                let pt: Point = points[lo]
                    .iter()
                    .zip(&points[hi])
                    .map(|(x, y)| x + &t * (y - x))
                    .collect();
                out.push(pt);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
