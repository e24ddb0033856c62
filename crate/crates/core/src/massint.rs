//! Monge-Ampere total mass, weighted L2 monomial norms via normal-fan
//! decomposition, exact finiteness tests, and the angular cone / hull
//! machinery tied to the gap distance.
//!
//! The weighted norm in logarithmic coordinates is
//! `(2 pi)^n INT exp(2 <alpha + 1, xi> - 2 m support(xi)) d xi`.
//! Over the normal cone of a vertex the support function is linear, so in
//! the plane each cone contributes `|det(r1, r2)| / (<c,r1> <c,r2>)`
//! exactly, with `c = 2 (alpha + 1 - m v)` and `r1, r2` the cone rays.
//! Finiteness is equivalent to `alpha + 1` lying in the interior of the
//! scaled body and is always decided exactly; quadrature never certifies
//! divergence on its own.

use crate::polyspace::MultiIndex;
use crate::rat::{dot, rat_i, to_f64, Rat};
use crate::ratgeom::{
    affine_rank, chain2d, facet_inequalities, hull_from_constraint_rays, Body,
    GeomError, PolyCone,
};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MassError {
    #[error("closed-form cone decomposition needs dimension 1 or 2")]
    ClosedFormDimension,
    #[error("quadrature supported for dimension <= 3")]
    QuadratureDimension,
    #[error("angular cone requires 0 <= a < d_m and d_m - a <= sqrt(n)")]
    InvalidCone,
    #[error("parameter a must be below the gap distance")]
    AboveGap,
    #[error("geometry error: {0}")]
    Geom(#[from] GeomError),
}

/// Total Monge-Ampere mass `(2 pi)^n n! vol(S)`, with the exact rational
/// factor `n! vol(S)` carried separately from the transcendental `(2 pi)^n`.
#[derive(Debug, Clone)]
pub struct MassReport {
    pub dim: usize,
    pub volume: Rat,
    /// `n! vol(S)`; the mass is `(2 pi)^dim` times this factor.
    pub rational_factor: Rat,
    pub value: f64,
    pub approximate: bool,
}

pub fn ma_total_mass(body: &Body) -> MassReport {
    let n = body.dim();
    let vol = body.volume();
    let nfact: i64 = (1..=n as i64).product();
    let factor = &vol.value * rat_i(nfact);
    let value = (2.0 * std::f64::consts::PI).powi(n as i32) * to_f64(&factor);
    MassReport {
        dim: n,
        volume: vol.value,
        rational_factor: factor,
        value,
        approximate: vol.approximate,
    }
}

/// Exact interiority of `alpha + 1` in the scaled body: the finiteness
/// criterion for the weighted L2 norm of `z^alpha`.
///
/// Dimension <= 3 tests every facet strictly; higher dimensions use a
/// rational epsilon-ball of radius 1e-6 (sound: a positive answer implies
/// interiority; points closer than epsilon to the boundary may be missed).
pub fn l2_finiteness(body: &Body, alpha: &MultiIndex, m: u32) -> bool {
    assert_eq!(alpha.dim(), body.dim());
    assert!(m >= 1);
    let n = body.dim();
    let ext = body.extreme_points();
    if affine_rank(&ext) < n {
        return false;
    }
    let beta: Vec<Rat> = alpha.0.iter().map(|&e| rat_i(e as i64 + 1)).collect();
    if n <= 3 {
        let m_rat = rat_i(m as i64);
        facet_inequalities(&ext, n)
            .iter()
            .all(|(normal, offset)| dot(normal, &beta) < offset * &m_rat)
    } else {
        let eps = Rat::new(1.into(), 1_000_000.into());
        let m_rat = rat_i(m as i64);
        for i in 0..n {
            for sign in [1i64, -1] {
                let mut p = beta.clone();
                p[i] += &eps * rat_i(sign);
                let scaled: Vec<Rat> = p.iter().map(|x| x / &m_rat).collect();
                if scaled.iter().any(|x| x.is_negative())
                    || !body.contains(&scaled).expect("dimension matches")
                {
                    return false;
                }
            }
        }
        true
    }
}

/// One normal-cone term of the closed-form decomposition.
#[derive(Debug, Clone)]
pub struct ConeIntegral {
    pub cone: PolyCone,
    pub vertex: Vec<Rat>,
    pub exponent_offset: Vec<Rat>,
    pub body_scale: u32,
    /// Exact value of the cone integral; `None` flags divergence.
    pub value: Option<Rat>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum L2Value {
    Finite(f64),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum L2Mode {
    ClosedForm,
    Quadrature,
}

#[derive(Debug, Clone)]
pub struct L2Report {
    pub value: L2Value,
    pub method: &'static str,
    /// Exact rational factor `T` with norm = `(2 pi)^n T` (closed form only).
    pub exact_factor: Option<Rat>,
    pub cone_terms: Vec<ConeIntegral>,
    /// Certified truncation bound added to the quadrature estimate.
    pub error_bound: Option<f64>,
    pub truncation_radius: Option<f64>,
    pub samples: usize,
}

/// Weighted L2 norm squared of the monomial `z^alpha` against
/// `exp(-2 m H_S)`: `INT |z^alpha|^2 e^{-2 m H_S} d lambda`.
pub fn monomial_l2_norm(
    body: &Body,
    alpha: &MultiIndex,
    m: u32,
    mode: L2Mode,
) -> Result<L2Report, MassError> {
    assert_eq!(alpha.dim(), body.dim());
    if !l2_finiteness(body, alpha, m) {
        return Ok(L2Report {
            value: L2Value::Infinite,
            method: match mode {
                L2Mode::ClosedForm => "closed_form",
                L2Mode::Quadrature => "interiority_test",
            },
            exact_factor: None,
            cone_terms: Vec::new(),
            error_bound: None,
            truncation_radius: None,
            samples: 0,
        });
    }
    match mode {
        L2Mode::ClosedForm => closed_form_norm(body, alpha, m),
        L2Mode::Quadrature => quadrature_norm(body, alpha, m),
    }
}

fn two_pi_pow(n: usize) -> f64 {
    (2.0 * std::f64::consts::PI).powi(n as i32)
}

#[allow(clippy::needless_range_loop)]
fn closed_form_norm(body: &Body, alpha: &MultiIndex, m: u32) -> Result<L2Report, MassError> {
    let n = body.dim();
    let m_rat = rat_i(m as i64);
    let two = rat_i(2);
    let beta: Vec<Rat> = alpha.0.iter().map(|&e| rat_i(e as i64 + 1)).collect();
    let mut terms: Vec<ConeIntegral> = Vec::new();
    match n {
        1 => {
            let ext = body.extreme_points();
            // exactly two extreme points for a full-dimensional interval
            for v in &ext {
                let ray = if v[0].is_zero() { rat_i(-1) } else { rat_i(1) };
                let c = &two * (&beta[0] - &m_rat * &v[0]);
                let slope = &c * &ray;
                let value = -Rat::one() / slope;
                terms.push(ConeIntegral {
                    cone: PolyCone::from_generators(1, vec![vec![ray]]).expect("valid ray"),
                    vertex: v.clone(),
                    exponent_offset: beta.clone(),
                    body_scale: m,
                    value: Some(value),
                });
            }
        }
        2 => {
            let hull = chain2d(&body.extreme_points());
            let k = hull.len();
            // hull is counterclockwise; edge (i, i+1) has outward normal
            // (dy, -dx) and the normal cone at vertex i is spanned by the
            // normals of its two incident edges
            let edge_normal = |i: usize| -> Vec<Rat> {
                let p = &hull[i];
                let q = &hull[(i + 1) % k];
                crate::rat::primitive(&[&q[1] - &p[1], -(&q[0] - &p[0])])
            };
            for i in 0..k {
                let v = &hull[i];
                let r1 = edge_normal((i + k - 1) % k);
                let r2 = edge_normal(i);
                let c: Vec<Rat> = beta
                    .iter()
                    .zip(v)
                    .map(|(b, vc)| &two * (b - &m_rat * vc))
                    .collect();
                let d1 = dot(&c, &r1);
                let d2 = dot(&c, &r2);
                let det = (&r1[0] * &r2[1] - &r1[1] * &r2[0]).abs();
                // interiority guarantees both slopes are strictly negative
                debug_assert!(d1.is_negative() && d2.is_negative());
                let value = det / (&d1 * &d2);
                terms.push(ConeIntegral {
                    cone: PolyCone::from_generators(2, vec![r1, r2]).expect("valid rays"),
                    vertex: v.clone(),
                    exponent_offset: beta.clone(),
                    body_scale: m,
                    value: Some(value),
                });
            }
        }
        _ => return Err(MassError::ClosedFormDimension),
    }
    let factor: Rat = terms
        .iter()
        .map(|t| t.value.clone().expect("finite term"))
        .fold(Rat::zero(), |acc, v| acc + v);
    let value = two_pi_pow(n) * to_f64(&factor);
    Ok(L2Report {
        value: L2Value::Finite(value),
        method: "closed_form",
        exact_factor: Some(factor),
        cone_terms: terms,
        error_bound: None,
        truncation_radius: None,
        samples: 0,
    })
}

/// Positive decay rate: `min over unit xi of (2 m support(xi) - <2 beta, xi>)`,
/// computed per normal-fan sector in the plane and by dense sampling with
/// local refinement elsewhere.
fn decay_rate(body: &Body, beta_f: &[f64], m: u32) -> f64 {
    let n = body.dim();
    let g = |u: &[f64]| -> f64 {
        2.0 * m as f64 * body.support_f64(u) - 2.0 * beta_f.iter().zip(u).map(|(b, x)| b * x).sum::<f64>()
    };
    match n {
        1 => g(&[1.0]).min(g(&[-1.0])),
        2 => {
            let steps = 4096;
            let mut best = f64::INFINITY;
            let mut best_t = 0.0;
            for k in 0..steps {
                let t = std::f64::consts::TAU * k as f64 / steps as f64;
                let v = g(&[t.cos(), t.sin()]);
                if v < best {
                    best = v;
                    best_t = t;
                }
            }
            // golden-section polish around the sampled minimum
            let (mut lo, mut hi) = (
                best_t - std::f64::consts::TAU / steps as f64,
                best_t + std::f64::consts::TAU / steps as f64,
            );
            for _ in 0..60 {
                let m1 = lo + (hi - lo) * 0.381_966;
                let m2 = hi - (hi - lo) * 0.381_966;
                if g(&[m1.cos(), m1.sin()]) < g(&[m2.cos(), m2.sin()]) {
                    hi = m2;
                } else {
                    lo = m1;
                }
            }
            let t = 0.5 * (lo + hi);
            best.min(g(&[t.cos(), t.sin()]))
        }
        _ => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x9e3779b9);
            let mut best = f64::INFINITY;
            let mut best_u = vec![0.0; n];
            for _ in 0..8192 {
                let mut u: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0f64)).collect();
                let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm < 1e-9 {
                    continue;
                }
                u.iter_mut().for_each(|x| *x /= norm);
                let v = g(&u);
                if v < best {
                    best = v;
                    best_u = u;
                }
            }
            // local refinement
            let mut step = 0.1;
            while step > 1e-7 {
                let mut improved = false;
                for i in 0..n {
                    for sgn in [1.0, -1.0] {
                        let mut u = best_u.clone();
                        u[i] += sgn * step;
                        let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
                        u.iter_mut().for_each(|x| *x /= norm);
                        let v = g(&u);
                        if v < best {
                            best = v;
                            best_u = u;
                            improved = true;
                        }
                    }
                }
                if !improved {
                    step *= 0.5;
                }
            }
            best * 0.9
        }
    }
}

fn quadrature_norm(body: &Body, alpha: &MultiIndex, m: u32) -> Result<L2Report, MassError> {
    let n = body.dim();
    if n > 3 {
        return Err(MassError::QuadratureDimension);
    }
    let beta_f: Vec<f64> = alpha.0.iter().map(|&e| e as f64 + 1.0).collect();
    let integrand = |xi: &[f64]| -> f64 {
        let e = 2.0 * beta_f.iter().zip(xi).map(|(b, x)| b * x).sum::<f64>()
            - 2.0 * m as f64 * body.support_f64(xi);
        e.exp()
    };
    let gap = decay_rate(body, &beta_f, m);
    debug_assert!(gap > 0.0, "interiority test admitted a divergent case");
    // truncation radius: tail bound below 1e-10 of a coarse scale estimate
    let coarse = {
        let probe = [0.0; 3];
        integrand(&probe[..n]).max(1e-12)
    };
    let mut radius = 4.0 / gap;
    let tail = |r: f64| -> f64 {
        match n {
            1 => 2.0 * (-gap * r).exp() / gap,
            2 => std::f64::consts::TAU * (r / gap + 1.0 / (gap * gap)) * (-gap * r).exp(),
            _ => {
                4.0 * std::f64::consts::PI
                    * (r * r / gap + 2.0 * r / (gap * gap) + 2.0 / (gap * gap * gap))
                    * (-gap * r).exp()
            }
        }
    };
    while tail(radius) > 1e-10 * coarse && radius < 1e6 {
        radius *= 1.3;
    }
    let lo = vec![-radius; n];
    let hi = vec![radius; n];
    let (value_box, quad_err, cells) = adaptive_integrate(&integrand, &lo, &hi, n, 1e-9);
    let value = two_pi_pow(n) * value_box;
    let bound = two_pi_pow(n) * (tail(radius) + quad_err);
    Ok(L2Report {
        value: L2Value::Finite(value),
        method: "quadrature",
        exact_factor: None,
        cone_terms: Vec::new(),
        error_bound: Some(bound),
        truncation_radius: Some(radius),
        samples: cells,
    })
}

const GL5_NODES: [f64; 5] = [
    -0.906_179_845_938_664,
    -0.538_469_310_105_683,
    0.0,
    0.538_469_310_105_683,
    0.906_179_845_938_664,
];
const GL5_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189,
    0.478_628_670_499_366,
    0.568_888_888_888_889,
    0.478_628_670_499_366,
    0.236_926_885_056_189,
];

fn gauss_cell(f: &impl Fn(&[f64]) -> f64, lo: &[f64], hi: &[f64], n: usize) -> f64 {
    let mut total = 0.0;
    let mut idx = [0usize; 3];
    loop {
        let mut w = 1.0;
        let mut x = [0.0f64; 3];
        for d in 0..n {
            let mid = 0.5 * (lo[d] + hi[d]);
            let half = 0.5 * (hi[d] - lo[d]);
            x[d] = mid + half * GL5_NODES[idx[d]];
            w *= half * GL5_WEIGHTS[idx[d]];
        }
        total += w * f(&x[..n]);
        let mut d = 0;
        loop {
            if d == n {
                return total;
            }
            idx[d] += 1;
            if idx[d] < 5 {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

fn split_box(lo: &[f64], hi: &[f64], n: usize) -> Vec<(Vec<f64>, Vec<f64>)> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1u32 << n) {
        let mut clo = lo.to_vec();
        let mut chi = hi.to_vec();
        for d in 0..n {
            let mid = 0.5 * (lo[d] + hi[d]);
            if mask >> d & 1 == 1 {
                clo[d] = mid;
            } else {
                chi[d] = mid;
            }
        }
        out.push((clo, chi));
    }
    out
}

struct QuadCell {
    err: f64,
    value: f64,
    lo: Vec<f64>,
    hi: Vec<f64>,
    depth: usize,
}

impl PartialEq for QuadCell {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for QuadCell {}
impl PartialOrd for QuadCell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for QuadCell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Worst-cell-first refinement: each cell carries the sum of its children
/// estimates and the parent/children discrepancy as its error; the cell
/// with the largest error is split until the accumulated error is below
/// the relative target.
fn adaptive_integrate(
    f: &impl Fn(&[f64]) -> f64,
    lo: &[f64],
    hi: &[f64],
    n: usize,
    rel_tol: f64,
) -> (f64, f64, usize) {
    use std::collections::BinaryHeap;
    let make_cell = |lo: Vec<f64>, hi: Vec<f64>, depth: usize| -> QuadCell {
        let coarse = gauss_cell(f, &lo, &hi, n);
        let fine: f64 = split_box(&lo, &hi, n)
            .into_iter()
            .map(|(clo, chi)| gauss_cell(f, &clo, &chi, n))
            .sum();
        QuadCell {
            err: (fine - coarse).abs(),
            value: fine,
            lo,
            hi,
            depth,
        }
    };
    let mut heap: BinaryHeap<QuadCell> = BinaryHeap::new();
    let root = make_cell(lo.to_vec(), hi.to_vec(), 0);
    let mut total = root.value;
    let mut total_err = root.err;
    let mut accepted_err = 0.0;
    heap.push(root);
    let mut cells = 1usize;
    let cell_cap = 400_000;
    while total_err + accepted_err > rel_tol * total.abs().max(1e-300)
        && cells < cell_cap
    {
        let Some(worst) = heap.pop() else {
            break;
        };
        if worst.depth >= 44 || worst.err == 0.0 {
            // cannot refine further; account for its error permanently
            accepted_err += worst.err;
            total_err -= worst.err;
            continue;
        }
        total -= worst.value;
        total_err -= worst.err;
        for (clo, chi) in split_box(&worst.lo, &worst.hi, n) {
            let cell = make_cell(clo, chi, worst.depth + 1);
            total += cell.value;
            total_err += cell.err;
            cells += 1;
            heap.push(cell);
        }
    }
    (total, total_err + accepted_err, cells)
}

/// The angular cone around the all-ones direction with half-angle
/// `arccos(-(d_m - a) / sqrt n)`.
#[derive(Debug, Clone)]
pub struct GammaCone {
    pub dim: usize,
    pub a: f64,
    pub d_m: f64,
    pub half_angle: f64,
}

pub fn gamma_a_cone(dim: usize, a: f64, d_m: f64) -> Result<GammaCone, MassError> {
    if !(0.0..d_m).contains(&a) {
        return Err(MassError::InvalidCone);
    }
    let cosv = -(d_m - a) / (dim as f64).sqrt();
    if cosv < -1.0 - 1e-12 {
        return Err(MassError::InvalidCone);
    }
    let half_angle = cosv.clamp(-1.0, 1.0).acos();
    Ok(GammaCone {
        dim,
        a,
        d_m,
        half_angle,
    })
}

impl GammaCone {
    /// Angular membership `<xi, 1> >= -(d_m - a) ||xi||`. In dimension 1
    /// with `d_m - a >= 1` the antipodal boundary ray is excluded, matching
    /// `R without the strictly negative half-line`.
    pub fn contains(&self, xi: &[f64]) -> bool {
        assert_eq!(xi.len(), self.dim);
        let norm = xi.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return true;
        }
        if self.dim == 1 && self.d_m - self.a >= 1.0 {
            return xi[0] >= 0.0;
        }
        let s: f64 = xi.iter().sum();
        s >= -(self.d_m - self.a) * norm - 1e-15 * norm
    }

    /// The two boundary generators in the plane, at angles
    /// `pi/4 +- half_angle` (numeric; the pair brackets the angular sector
    /// around the all-ones direction and does not span it convexly when the
    /// sector is reflex).
    pub fn boundary_generators_2d(&self) -> [(f64, f64); 2] {
        assert_eq!(self.dim, 2);
        let base = std::f64::consts::FRAC_PI_4;
        let a1 = base - self.half_angle;
        let a2 = base + self.half_angle;
        [(a1.cos(), a1.sin()), (a2.cos(), a2.sin())]
    }

    /// Convex sector pieces covering the (possibly reflex) planar sector,
    /// each at most a quarter turn wide, as rational cones.
    pub fn convex_sector_pieces_2d(&self) -> Vec<PolyCone> {
        assert_eq!(self.dim, 2);
        let base = std::f64::consts::FRAC_PI_4;
        let lo = base - self.half_angle;
        let hi = base + self.half_angle;
        let pieces = ((hi - lo) / std::f64::consts::FRAC_PI_2).ceil().max(1.0) as usize;
        let step = (hi - lo) / pieces as f64;
        (0..pieces)
            .map(|i| {
                let t0 = lo + i as f64 * step;
                let t1 = lo + (i + 1) as f64 * step;
                let g = |t: f64| -> Vec<Rat> {
                    vec![
                        Rat::from_float(t.cos()).expect("finite"),
                        Rat::from_float(t.sin()).expect("finite"),
                    ]
                };
                PolyCone::from_generators(2, vec![g(t0), g(t1)]).expect("valid sector")
            })
            .collect()
    }
}

/// The hull of the body with respect to the angular cone at parameter `a`:
/// exact in the plane (and trivially in dimension 1), a sampled sound
/// over-approximation in higher dimensions.
#[derive(Debug, Clone)]
pub enum TheoremHull {
    Exact(Body),
    Sampled(SampledHull),
}

#[derive(Debug, Clone)]
pub struct SampledHull {
    body: Body,
    rays: Vec<Vec<f64>>,
}

impl SampledHull {
    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    /// Membership of `alpha` in `m` times the hull, tested against the
    /// sampled directions (an over-approximation of the true hull).
    pub fn lattice_contains(&self, alpha: &MultiIndex, m: u32) -> bool {
        let af: Vec<f64> = alpha.0.iter().map(|&e| e as f64).collect();
        self.rays.iter().all(|r| {
            let lhs: f64 = af.iter().zip(r).map(|(a, x)| a * x).sum();
            lhs <= m as f64 * self.body.support_f64(r) + 1e-9
        })
    }
}

impl TheoremHull {
    pub fn exact_body(&self) -> Option<&Body> {
        match self {
            TheoremHull::Exact(b) => Some(b),
            TheoremHull::Sampled(_) => None,
        }
    }

    pub fn lattice_contains(&self, alpha: &MultiIndex, m: u32) -> bool {
        match self {
            TheoremHull::Exact(b) => crate::polyspace::in_scaled_body(b, alpha, m),
            TheoremHull::Sampled(s) => s.lattice_contains(alpha, m),
        }
    }
}

pub fn theorem72_hull(body: &Body, m: u32, a: f64) -> Result<TheoremHull, MassError> {
    let n = body.dim();
    let d_m = crate::polyspace::gap_distance(body, m, crate::polyspace::GapNorm::L2);
    if !a.is_finite() || a >= d_m {
        return Err(MassError::AboveGap);
    }
    let cone = gamma_a_cone(n, a, d_m)?;
    match n {
        1 => {
            // the angular cone contains exactly the nonnegative directions
            let mut e = vec![Rat::one()];
            e[0] = Rat::one();
            let hull = hull_from_constraint_rays(body, vec![e])?;
            Ok(TheoremHull::Exact(hull.reduced()))
        }
        2 => {
            let mut rays: std::collections::BTreeSet<Vec<Rat>> = std::collections::BTreeSet::new();
            for piece in cone.convex_sector_pieces_2d() {
                for g in piece.generators() {
                    rays.insert(g.clone());
                }
                let piece_ineqs = piece.inequalities_or_compute()?;
                for v in body.extreme_points() {
                    let nc = body.normal_cone(&v)?;
                    let mut ineqs = nc.inequalities().to_vec();
                    ineqs.extend(piece_ineqs.iter().cloned());
                    for r in crate::ratgeom::enumerate_rays(2, &ineqs) {
                        rays.insert(r);
                    }
                }
            }
            let hull = hull_from_constraint_rays(body, rays.into_iter().collect())?;
            Ok(TheoremHull::Exact(hull.reduced()))
        }
        _ => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7a11);
            let mut rays = Vec::new();
            let target = 512;
            let mut tries = 0;
            while rays.len() < target && tries < 200_000 {
                tries += 1;
                let mut u: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0f64)).collect();
                let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm < 1e-9 {
                    continue;
                }
                u.iter_mut().for_each(|x| *x /= norm);
                if cone.contains(&u) {
                    rays.push(u);
                }
            }
            Ok(TheoremHull::Sampled(SampledHull {
                body: body.clone(),
                rays,
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyspace::{in_scaled_body, lattice_points};
    use crate::rat::rat;
    use crate::ratgeom::is_lower_set;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    fn quad() -> Body {
        crate::ratgeom::surrogates::notched_quad(rat(1, 5), rat(4, 5))
    }

    #[test]
    fn mass_of_simplices_is_unit_factor() {
        for n in 1..=4usize {
            let rep = ma_total_mass(&Body::simplex(n));
            assert_eq!(rep.rational_factor, rat(1, 1), "n = {n}");
            assert!(!rep.approximate);
            let expected = (2.0 * std::f64::consts::PI).powi(n as i32);
            assert!((rep.value - expected).abs() < 1e-9 * expected);
        }
    }

    #[test]
    fn mass_examples() {
        let rep = ma_total_mass(&Body::unit_box(2));
        assert_eq!(rep.rational_factor, rat(2, 1));
        let expected = 8.0 * std::f64::consts::PI * std::f64::consts::PI;
        assert!((rep.value - expected).abs() < 1e-9 * expected);

        let rep = ma_total_mass(&quad());
        assert_eq!(rep.volume, rat(21, 50));
        assert_eq!(rep.rational_factor, rat(21, 25));
    }

    #[test]
    fn finiteness_boundary_cases() {
        let sigma = Body::simplex(2);
        // (1,0)+1 = (2,1) lies on the boundary of 3*simplex: divergent
        assert!(!l2_finiteness(&sigma, &mi(&[1, 0]), 3));
        // strictly inside at m = 4
        assert!(l2_finiteness(&sigma, &mi(&[1, 0]), 4));
        // boundary at m = 2 as well
        assert!(!l2_finiteness(&sigma, &mi(&[1, 0]), 2));
        // a vertex of the scaled body is never interior
        assert!(!l2_finiteness(&sigma, &mi(&[3, 0]), 4));
        // degenerate bodies have empty interior
        let seg = crate::ratgeom::surrogates::segment_surrogate(rat(3, 2));
        assert!(!l2_finiteness(&seg, &mi(&[0, 0]), 1));
    }

    #[test]
    fn quad_cone_decomposition_matches_hand_values() {
        // k = 1, m = 4, a = 1/5, b = 4/5: cone terms by direct integration
        // are 1/8 (origin), 5/36 (axis vertex), 5/9 (slant vertex),
        // 1/8 (top vertex); total 17/18.
        let rep = monomial_l2_norm(&quad(), &mi(&[1, 0]), 4, L2Mode::ClosedForm).unwrap();
        assert_eq!(rep.exact_factor, Some(rat(17, 18)));
        let by_vertex: Vec<(Vec<Rat>, Rat)> = rep
            .cone_terms
            .iter()
            .map(|t| (t.vertex.clone(), t.value.clone().unwrap()))
            .collect();
        let lookup = |x: Rat, y: Rat| -> Rat {
            by_vertex
                .iter()
                .find(|(v, _)| v[0] == x && v[1] == y)
                .map(|(_, val)| val.clone())
                .expect("vertex present")
        };
        assert_eq!(lookup(rat(0, 1), rat(0, 1)), rat(1, 8));
        assert_eq!(lookup(rat(1, 5), rat(0, 1)), rat(5, 36));
        assert_eq!(lookup(rat(4, 5), rat(1, 5)), rat(5, 9));
        assert_eq!(lookup(rat(0, 1), rat(1, 1)), rat(1, 8));
        match rep.value {
            L2Value::Finite(v) => {
                let expected = two_pi_pow(2) * 17.0 / 18.0;
                assert!((v - expected).abs() < 1e-9 * expected);
            }
            L2Value::Infinite => panic!("expected finite"),
        }
    }

    #[test]
    fn quad_norm_closed_form_matches_quadrature() {
        let cf = monomial_l2_norm(&quad(), &mi(&[1, 0]), 4, L2Mode::ClosedForm).unwrap();
        let qd = monomial_l2_norm(&quad(), &mi(&[1, 0]), 4, L2Mode::Quadrature).unwrap();
        let (a, b) = match (&cf.value, &qd.value) {
            (L2Value::Finite(a), L2Value::Finite(b)) => (*a, *b),
            _ => panic!("expected finite values"),
        };
        assert!(
            (a - b).abs() <= 1e-6 * a.abs(),
            "closed form {a} vs quadrature {b}"
        );
    }

    #[test]
    fn interval_radial_value() {
        // S = [0,1], m = 2, alpha = 0: the radial integral evaluates to
        // 2 pi (halves inside and outside the unit circle)
        let b = Body::segment(rat(1, 1));
        let rep = monomial_l2_norm(&b, &mi(&[0]), 2, L2Mode::ClosedForm).unwrap();
        assert_eq!(rep.exact_factor, Some(rat(1, 1)));
        match rep.value {
            L2Value::Finite(v) => {
                assert!((v - std::f64::consts::TAU).abs() < 1e-12);
            }
            _ => panic!("expected finite"),
        }
        let qd = monomial_l2_norm(&b, &mi(&[0]), 2, L2Mode::Quadrature).unwrap();
        match qd.value {
            L2Value::Finite(v) => {
                assert!((v - std::f64::consts::TAU).abs() < 1e-6 * v);
            }
            _ => panic!("expected finite"),
        }
    }

    #[test]
    fn divergent_exponent_is_certified() {
        // k = m - 2 pushes beta onto the boundary
        let rep = monomial_l2_norm(&quad(), &mi(&[2, 0]), 4, L2Mode::ClosedForm).unwrap();
        assert_eq!(rep.value, L2Value::Infinite);
        let rep = monomial_l2_norm(&quad(), &mi(&[2, 0]), 4, L2Mode::Quadrature).unwrap();
        assert_eq!(rep.value, L2Value::Infinite);
        assert_eq!(rep.method, "interiority_test");
    }

    #[test]
    fn closed_form_equals_quadrature_on_random_finite_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let mut tested = 0;
        while tested < 5 {
            let k = rng.gen_range(2..=4);
            let mut vertices = vec![vec![Rat::zero(); 2]];
            for _ in 0..k {
                vertices.push(vec![
                    rat(rng.gen_range(0..5), rng.gen_range(1..4)),
                    rat(rng.gen_range(0..5), rng.gen_range(1..4)),
                ]);
            }
            let Ok(b) = Body::new(2, vertices) else {
                continue;
            };
            let m = rng.gen_range(2..=4);
            let alpha = mi(&[rng.gen_range(0..2), rng.gen_range(0..2)]);
            if !l2_finiteness(&b, &alpha, m) {
                continue;
            }
            let cf = monomial_l2_norm(&b, &alpha, m, L2Mode::ClosedForm).unwrap();
            let qd = monomial_l2_norm(&b, &alpha, m, L2Mode::Quadrature).unwrap();
            let (x, y) = match (&cf.value, &qd.value) {
                (L2Value::Finite(x), L2Value::Finite(y)) => (*x, *y),
                _ => continue,
            };
            assert!((x - y).abs() <= 1e-6 * x.abs(), "cf {x} vs quad {y}");
            tested += 1;
        }
    }

    #[test]
    fn finiteness_matches_norm_finiteness() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let b = quad();
            let m = rng.gen_range(1..=5);
            let alpha = mi(&[rng.gen_range(0..6), rng.gen_range(0..6)]);
            let fin = l2_finiteness(&b, &alpha, m);
            let rep = monomial_l2_norm(&b, &alpha, m, L2Mode::ClosedForm).unwrap();
            assert_eq!(fin, matches!(rep.value, L2Value::Finite(_)));
        }
    }

    #[test]
    fn angular_cone_geometry() {
        // widest cone: half-angle arccos(-1/sqrt n)
        let c = gamma_a_cone(2, 0.0, 1.0).unwrap();
        let expected = (-(1.0f64) / 2.0f64.sqrt()).acos();
        assert!((c.half_angle - expected).abs() < 1e-12);
        let gens = c.boundary_generators_2d();
        assert!((gens[0].0 - 0.0).abs() < 1e-12 && (gens[0].1 + 1.0).abs() < 1e-12);
        assert!((gens[1].0 + 1.0).abs() < 1e-12 && (gens[1].1 - 0.0).abs() < 1e-12);
        // a -> d_m shrinks toward the half-space boundary
        let c = gamma_a_cone(3, 0.999_999, 1.0).unwrap();
        assert!((c.half_angle - std::f64::consts::FRAC_PI_2).abs() < 1e-3);
        // dimension-1 edge: the strictly negative ray is excluded
        let c = gamma_a_cone(1, 0.0, 1.0).unwrap();
        assert!(c.contains(&[2.0]));
        assert!(!c.contains(&[-0.5]));
        assert!(matches!(gamma_a_cone(2, 1.0, 1.0), Err(MassError::InvalidCone)));
    }

    #[test]
    fn angular_cone_excludes_negative_orthant_only() {
        let c = gamma_a_cone(2, 0.0, 1.0).unwrap();
        assert!(c.contains(&[1.0, 1.0]));
        assert!(c.contains(&[-3.0, 0.1]));
        assert!(c.contains(&[-1.0, 0.0]));
        assert!(!c.contains(&[-1.0, -1.0]));
        assert!(!c.contains(&[-0.2, -5.0]));
    }

    #[test]
    fn hull_of_lower_set_is_the_body() {
        for b in [Body::simplex(2), Body::unit_box(2)] {
            assert!(is_lower_set(&b));
            let d = crate::polyspace::gap_distance(&b, 2, crate::polyspace::GapNorm::L2);
            let hull = theorem72_hull(&b, 2, d * 0.5).unwrap();
            let hb = hull.exact_body().unwrap();
            assert_eq!(hb.extreme_points(), b.extreme_points());
        }
    }

    #[test]
    fn hull_of_quad_captures_the_finite_norm_exponent() {
        let b = quad();
        let m = 4;
        let d = crate::polyspace::gap_distance(&b, m, crate::polyspace::GapNorm::L2);
        let hull = theorem72_hull(&b, m, d * 0.2).unwrap();
        // (1,0) has finite weighted norm but is outside 4S; the hull must
        // contain it
        assert!(!in_scaled_body(&b, &mi(&[1, 0]), m));
        assert!(l2_finiteness(&b, &mi(&[1, 0]), m));
        assert!(hull.lattice_contains(&mi(&[1, 0]), m));
        let hb = hull.exact_body().unwrap();
        // strictly larger than the body
        assert!(lattice_points(hb, m).len() > lattice_points(&b, m).len());
        // rejects a above the gap
        assert!(matches!(
            theorem72_hull(&b, m, d * 1.5),
            Err(MassError::AboveGap)
        ));
    }

    #[test]
    fn sampled_hull_in_three_dimensions() {
        let b = Body::simplex(3);
        let d = crate::polyspace::gap_distance(&b, 2, crate::polyspace::GapNorm::L2);
        let hull = theorem72_hull(&b, 2, d * 0.5).unwrap();
        match &hull {
            TheoremHull::Sampled(s) => assert!(s.ray_count() >= 256),
            TheoremHull::Exact(_) => panic!("expected sampled hull in 3d"),
        }
        // over-approximation: every true lattice point is contained
        for alpha in lattice_points(&b, 2).iter() {
            assert!(hull.lattice_contains(alpha, 2));
        }
    }

    #[test]
    fn membership_coincides_when_lattices_agree() {
        // lower set: hull lattice equals body lattice, so membership
        // conclusions coincide
        let b = Body::simplex(2);
        let m = 3;
        let d = crate::polyspace::gap_distance(&b, m, crate::polyspace::GapNorm::L2);
        let hull = theorem72_hull(&b, m, d * 0.5).unwrap();
        let hb = hull.exact_body().unwrap();
        assert_eq!(
            lattice_points(&b, m).as_slice(),
            lattice_points(hb, m).as_slice()
        );
    }
}
