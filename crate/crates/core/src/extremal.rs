//! Numerical Siciak extremal functions on discretized compacts.
//!
//! `phi_m` maximizes `|p(z)|^(1/m)` over polynomials with exponents in the
//! scaled-body lattice, subject to `|p(x)| <= e^(m q(x))` on a finite
//! weighted sample set. The modulus constraints are linearized by a P-phase
//! outer polygon; by phase invariance of that constraint set under grid
//! rotations, a single LP with objective `Re p(z)` realizes the maximum over
//! the whole phase grid. The computed value `V` brackets the true discrete
//! supremum, `V * cos(pi/P) <= sup <= V / cos(pi/P)`, and the reported
//! `PhiResult` carries the distortion factor so callers can form sound
//! two-sided bounds.
//!
//! Everything here refers to the finite sample set only; no claim is made
//! for the continuum it discretizes. Reports carry the sample count.

use crate::logsupport::hs_eval;
use crate::lp;
use crate::polyspace::{lattice_points, MultiIndex};
use crate::ratgeom::Body;
use num_complex::Complex64;
use num_traits::ToPrimitive;

pub use crate::lp::{
    solve as lp_solve, Constraint as LpConstraint, Error as LpError, Problem as LpProblem,
    Sense as LpSense, Solution as LpSolution,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExtremalError {
    #[error("sample set invalid: {0}")]
    BadSamples(String),
    #[error("point has a vanishing coordinate")]
    ZeroCoordinate,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("lp failure: {0}")]
    Lp(#[from] lp::Error),
}

/// A finite point cloud in `C^n` with a weight at each point.
#[derive(Debug, Clone)]
pub struct WeightedSampleSet {
    points: Vec<Vec<Complex64>>,
    weights: Vec<f64>,
    dim: usize,
}

impl WeightedSampleSet {
    pub fn new(points: Vec<Vec<Complex64>>, weights: Vec<f64>) -> Result<Self, ExtremalError> {
        if points.is_empty() {
            return Err(ExtremalError::BadSamples("no sample points".into()));
        }
        if points.len() != weights.len() {
            return Err(ExtremalError::BadSamples(
                "points and weights differ in length".into(),
            ));
        }
        let dim = points[0].len();
        if dim == 0 || points.iter().any(|p| p.len() != dim) {
            return Err(ExtremalError::BadSamples("ragged point dimensions".into()));
        }
        if points
            .iter()
            .any(|p| p.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()))
        {
            return Err(ExtremalError::BadSamples("non-finite point".into()));
        }
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(ExtremalError::BadSamples(
                "weights must be finite and bounded below".into(),
            ));
        }
        Ok(WeightedSampleSet {
            points,
            weights,
            dim,
        })
    }

    /// Low-discrepancy samples of the unit torus `T^n` (deterministic
    /// order). The angle increments come from a Kronecker sequence with
    /// rationally independent rates, so the points spread over the full
    /// torus rather than a closed curve.
    pub fn torus(dim: usize, count: usize) -> WeightedSampleSet {
        assert!(count >= 1);
        // root of x^(dim+1) = x + 1 via Newton; its inverse powers give the
        // standard d-dimensional Kronecker rates
        let mut g = 1.5f64;
        for _ in 0..64 {
            let f = g.powi(dim as i32 + 1) - g - 1.0;
            let df = (dim as f64 + 1.0) * g.powi(dim as i32) - 1.0;
            g -= f / df;
        }
        let rates: Vec<f64> = (1..=dim).map(|j| g.powi(-(j as i32)).fract()).collect();
        let mut points = Vec::with_capacity(count);
        for k in 0..count {
            let p: Vec<Complex64> = (0..dim)
                .map(|j| {
                    let t = ((k as f64 + 0.5) * rates[j]).fract() * std::f64::consts::TAU;
                    Complex64::from_polar(1.0, t)
                })
                .collect();
            points.push(p);
        }
        WeightedSampleSet::new(points, vec![0.0; count]).expect("torus samples are valid")
    }

    /// Equispaced samples of the unit circle (dimension 1).
    pub fn unit_circle(count: usize) -> WeightedSampleSet {
        let points: Vec<Vec<Complex64>> = (0..count)
            .map(|k| {
                vec![Complex64::from_polar(
                    1.0,
                    std::f64::consts::TAU * k as f64 / count as f64,
                )]
            })
            .collect();
        WeightedSampleSet::new(points, vec![0.0; count]).expect("circle samples are valid")
    }

    pub fn with_weights(&self, weights: Vec<f64>) -> Result<Self, ExtremalError> {
        WeightedSampleSet::new(self.points.clone(), weights)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Complex64>] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn min_weight(&self) -> f64 {
        self.weights.iter().cloned().fold(f64::INFINITY, f64::min)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiStatus {
    Solved,
    Infeasible,
}

#[derive(Debug, Clone)]
pub struct PhiResult {
    /// The computed `value^(1/m)` of the LP optimum.
    pub value: f64,
    /// Phase-discretization distortion `1/cos(pi/P)` (1 on the real path);
    /// the true discrete supremum lies within `value * factor^(+-1/m)`.
    pub upper_factor: f64,
    pub basis_size: usize,
    pub status: PhiStatus,
    m: u32,
}

impl PhiResult {
    pub fn lower_bound(&self) -> f64 {
        self.value / self.upper_factor.powf(1.0 / self.m as f64)
    }

    pub fn upper_bound(&self) -> f64 {
        self.value * self.upper_factor.powf(1.0 / self.m as f64)
    }

    pub fn scale(&self) -> u32 {
        self.m
    }
}

/// Monomial value `z^alpha` through log-magnitude/phase form, safe for
/// large or tiny moduli.
fn monomial_value(z: &[Complex64], alpha: &MultiIndex) -> Complex64 {
    let mut log_mag = 0.0f64;
    let mut arg = 0.0f64;
    for (zi, &e) in z.iter().zip(&alpha.0) {
        if e == 0 {
            continue;
        }
        let m = zi.norm();
        if m == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        log_mag += e as f64 * m.ln();
        arg += e as f64 * zi.arg();
    }
    Complex64::from_polar(log_mag.exp(), arg)
}

/// The m-th extremal value at `z` over the discretized weighted set, by
/// dense LP with `phases`-fold modulus linearization.
pub fn phi_m(
    body: &Body,
    samples: &WeightedSampleSet,
    m: u32,
    z: &[Complex64],
    phases: usize,
) -> Result<PhiResult, ExtremalError> {
    assert!(m >= 1, "scale must be positive");
    assert!(phases >= 8, "need at least 8 phases");
    if samples.dim() != body.dim() || z.len() != body.dim() {
        return Err(ExtremalError::DimensionMismatch);
    }
    let basis = lattice_points(body, m);
    let basis: Vec<MultiIndex> = basis.iter().cloned().collect();
    let q_min = samples.min_weight();
    if basis.iter().all(|a| a.is_zero()) {
        // constants are the whole space
        return Ok(PhiResult {
            value: q_min.exp(),
            upper_factor: 1.0,
            basis_size: basis.len(),
            status: PhiStatus::Solved,
            m,
        });
    }

    let real_instance = z.iter().all(|c| c.im == 0.0)
        && samples
            .points()
            .iter()
            .all(|p| p.iter().all(|c| c.im == 0.0));

    let rhs: Vec<f64> = samples
        .weights()
        .iter()
        .map(|&q| (m as f64 * q).exp())
        .collect();

    let raw_value = if real_instance {
        // Real points and real weights admit a real-coefficient optimum:
        // rotating the optimal polynomial by a global phase gives a real
        // polynomial with the same value at real z. The modulus constraints
        // collapse to two rows per sample and there is no distortion.
        let b = basis.len();
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(2 * samples.len());
        let mut rhs2: Vec<f64> = Vec::with_capacity(2 * samples.len());
        for (x, r) in samples.points().iter().zip(&rhs) {
            let vals: Vec<f64> = basis.iter().map(|a| monomial_value(x, a).re).collect();
            rows.push(vals.clone());
            rhs2.push(*r);
            rows.push(vals.iter().map(|v| -v).collect());
            rhs2.push(*r);
        }
        let obj: Vec<f64> = basis.iter().map(|a| monomial_value(z, a).re).collect();
        let plus = lp::maximize_free_via_dual(&obj, &rows, &rhs2)?;
        let neg_obj: Vec<f64> = obj.iter().map(|v| -v).collect();
        let minus = lp::maximize_free_via_dual(&neg_obj, &rows, &rhs2)?;
        debug_assert_eq!(obj.len(), b);
        plus.max(minus)
    } else {
        // Variables: (Re c_alpha, Im c_alpha). Constraints:
        // Re(e^{-i phi_k} p(x)) <= e^{m q(x)} over the phase grid.
        let b = basis.len();
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(samples.len() * phases);
        let mut rhs2: Vec<f64> = Vec::with_capacity(samples.len() * phases);
        for (x, r) in samples.points().iter().zip(&rhs) {
            let vals: Vec<Complex64> = basis.iter().map(|a| monomial_value(x, a)).collect();
            for k in 0..phases {
                let rot = Complex64::from_polar(1.0, -std::f64::consts::TAU * k as f64 / phases as f64);
                let mut row = Vec::with_capacity(2 * b);
                for v in &vals {
                    let rv = rot * v;
                    row.push(rv.re);
                    row.push(-rv.im);
                }
                rows.push(row);
                rhs2.push(*r);
            }
        }
        let mut obj = Vec::with_capacity(2 * b);
        for a in &basis {
            let v = monomial_value(z, a);
            obj.push(v.re);
            obj.push(-v.im);
        }
        lp::maximize_free_via_dual(&obj, &rows, &rhs2)?
    };

    let value = if raw_value <= 0.0 {
        // can only happen through float noise; the constant e^{m q_min} is
        // always feasible
        q_min.exp()
    } else {
        raw_value.powf(1.0 / m as f64)
    };
    let upper_factor = if real_instance {
        1.0
    } else {
        1.0 / (std::f64::consts::PI / phases as f64).cos()
    };
    Ok(PhiResult {
        value,
        upper_factor,
        basis_size: basis.len(),
        status: PhiStatus::Solved,
        m,
    })
}

#[derive(Debug, Clone)]
pub struct FeketeRow {
    pub m: u32,
    pub value: f64,
    pub running_sup: f64,
}

#[derive(Debug, Clone)]
pub struct FeketeReport {
    pub rows: Vec<FeketeRow>,
    /// Every `(j, k, j+k)` triple inside the list satisfied the scaled
    /// superadditivity inequality within the combined LP tolerance.
    pub superadditive_ok: bool,
    pub sample_count: usize,
}

/// Computes the extremal values for each scale in `m_list` and checks the
/// superadditivity of `m log phi_m` across all triples contained in the
/// list. The running supremum estimates the limit value.
pub fn fekete_check(
    body: &Body,
    samples: &WeightedSampleSet,
    m_list: &[u32],
    z: &[Complex64],
    phases: usize,
) -> Result<FeketeReport, ExtremalError> {
    let mut values = std::collections::BTreeMap::new();
    let mut rows = Vec::with_capacity(m_list.len());
    let mut sup = f64::NEG_INFINITY;
    for &m in m_list {
        let r = phi_m(body, samples, m, z, phases)?;
        sup = sup.max(r.value);
        values.insert(m, r.value);
        rows.push(FeketeRow {
            m,
            value: r.value,
            running_sup: sup,
        });
    }
    let phase_tol = (std::f64::consts::PI / phases as f64).cos().ln().abs();
    let mut ok = true;
    for &j in values.keys() {
        for &k in values.keys() {
            if let Some(vjk) = values.get(&(j + k)) {
                let lhs = j as f64 * values[&j].ln() + k as f64 * values[&k].ln();
                let rhs = (j + k) as f64 * vjk.ln();
                if lhs > rhs + 3.0 * phase_tol + 1e-7 {
                    ok = false;
                }
            }
        }
    }
    Ok(FeketeReport {
        rows,
        superadditive_ok: ok,
        sample_count: samples.len(),
    })
}

/// `max (1/m) <alpha, Log z>` over the scaled-body lattice: the log of the
/// best monomial candidate value for the unit-torus constraint set. Always
/// a lower bound for `H_S(z)` and nondecreasing along doubling scales.
pub fn monomial_torus_bound(body: &Body, m: u32, z: &[Complex64]) -> Result<f64, ExtremalError> {
    if z.len() != body.dim() {
        return Err(ExtremalError::DimensionMismatch);
    }
    if z.iter().any(|c| c.norm() == 0.0) {
        return Err(ExtremalError::ZeroCoordinate);
    }
    let logs: Vec<f64> = z.iter().map(|c| c.norm().ln()).collect();
    let pts = lattice_points(body, m);
    Ok(pts
        .iter()
        .map(|a| a.dot_f64(&logs) / m as f64)
        .fold(f64::NEG_INFINITY, f64::max))
}

#[derive(Debug, Clone)]
pub struct WeightReport {
    pub finite_and_bounded: bool,
    pub min_weight: f64,
    /// At least dim+1 affinely spread finite-weight points (a pluripolarity
    /// heuristic, not a certificate).
    pub nontrivial: bool,
    /// Decreasing trend of `H_S - q` over the largest-norm decile; `None`
    /// when the flag is off or the decile is too small.
    pub tail_trend_decreasing: Option<bool>,
    pub notes: Vec<String>,
}

impl WeightReport {
    pub fn admissible(&self) -> bool {
        self.finite_and_bounded
            && self.nontrivial
            && self.tail_trend_decreasing.unwrap_or(true)
    }
}

/// Advisory admissibility checks for a sampled weight. Accepts raw data so
/// that sentinel values can be reported rather than panicking.
pub fn validate_weight(
    body: &Body,
    points: &[Vec<Complex64>],
    weights: &[f64],
    unbounded_domain: bool,
) -> WeightReport {
    let mut notes = Vec::new();
    let n = body.dim();
    let finite_and_bounded = !points.is_empty()
        && points.len() == weights.len()
        && weights.iter().all(|w| w.is_finite());
    if !finite_and_bounded {
        notes.push("weights must be finite and bounded below".to_string());
    }
    let min_weight = weights.iter().cloned().fold(f64::INFINITY, f64::min);

    // affine spread of the finite-weight points, viewed in R^{2n}
    let finite_pts: Vec<&Vec<Complex64>> = points
        .iter()
        .zip(weights)
        .filter(|(_, w)| w.is_finite())
        .map(|(p, _)| p)
        .collect();
    let nontrivial = if finite_pts.len() < n + 1 {
        false
    } else {
        let base: Vec<f64> = finite_pts[0].iter().flat_map(|c| [c.re, c.im]).collect();
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for p in &finite_pts[1..] {
            let v: Vec<f64> = p
                .iter()
                .flat_map(|c| [c.re, c.im])
                .zip(&base)
                .map(|(a, b)| a - b)
                .collect();
            rows.push(v);
        }
        f64_rank(rows) >= n
    };
    if !nontrivial {
        notes.push(format!(
            "need at least {} affinely spread finite-weight points",
            n + 1
        ));
    }

    let tail_trend_decreasing = if !unbounded_domain || !finite_and_bounded {
        None
    } else {
        let mut by_norm: Vec<(f64, f64)> = points
            .iter()
            .zip(weights)
            .map(|(p, &q)| {
                let norm = p.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
                (norm, hs_eval(body, p) - q)
            })
            .collect();
        by_norm.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let decile = by_norm.len() / 10;
        if decile < 5 {
            notes.push("tail decile too small for a trend estimate".to_string());
            None
        } else {
            let tail = &by_norm[by_norm.len() - decile..];
            Some(regression_slope(tail) < 0.0)
        }
    };

    WeightReport {
        finite_and_bounded,
        min_weight,
        nontrivial,
        tail_trend_decreasing,
        notes,
    }
}

fn regression_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in points {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

#[allow(clippy::needless_range_loop)]
fn f64_rank(mut rows: Vec<Vec<f64>>) -> usize {
    let eps = 1e-9;
    let mut rank = 0;
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).max_by(|&i, &j| {
            rows[i][c].abs().partial_cmp(&rows[j][c].abs()).unwrap()
        }) else {
            break;
        };
        if rows[p][c].abs() < eps {
            continue;
        }
        rows.swap(rank, p);
        let piv = rows[rank][c];
        for i in 0..rows.len() {
            if i != rank {
                let f = rows[i][c] / piv;
                for j in c..cols {
                    let sub = f * rows[rank][j];
                    rows[i][j] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Exact sigma for use in weight construction helpers.
pub fn sigma_f64(body: &Body) -> f64 {
    crate::logsupport::sigma(body).to_f64().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn interval() -> Body {
        Body::segment(rat(1, 1))
    }

    #[test]
    fn disc_extremal_monomial_at_outside_point() {
        // S = [0,1], K = 64 circle samples, q = 0, m = 3: the cubic
        // monomial is extremal, so the value at 2 is 8^(1/3) = 2 up to
        // phase distortion (P = 32 here).
        let k = WeightedSampleSet::unit_circle(64);
        let r = phi_m(&interval(), &k, 3, &[c(2.0)], 32).unwrap();
        let cosd = (std::f64::consts::PI / 32.0).cos();
        assert!(r.value >= (8.0 * cosd).powf(1.0 / 3.0) - 1e-9, "{}", r.value);
        assert!(r.value <= (8.0 / cosd).powf(1.0 / 3.0) + 1e-9, "{}", r.value);
        assert_eq!(r.basis_size, 4);
        // inside the disc constants win
        let r2 = phi_m(&interval(), &k, 3, &[c(0.5)], 32).unwrap();
        assert!((r2.value - 1.0).abs() < 0.02, "{}", r2.value);
    }

    #[test]
    fn constant_weight_shift_scales_the_value() {
        let k = WeightedSampleSet::unit_circle(32);
        let shift = 0.31f64;
        let shifted = k.with_weights(vec![shift; 32]).unwrap();
        let base = phi_m(&interval(), &k, 2, &[c(1.7)], 32).unwrap();
        let moved = phi_m(&interval(), &shifted, 2, &[c(1.7)], 32).unwrap();
        let ratio = moved.value / base.value;
        assert!((ratio - shift.exp()).abs() < 1e-6 * shift.exp(), "{ratio}");
    }

    #[test]
    fn value_at_sample_points_stays_at_weight_level() {
        let k = WeightedSampleSet::unit_circle(24);
        for idx in [0usize, 5, 17] {
            let z = k.points()[idx].clone();
            let r = phi_m(&interval(), &k, 2, &z, 16).unwrap();
            // p = 1 is feasible, and the phase-0 constraint at z caps the
            // objective at the weight level exactly
            assert!(r.value >= 1.0 - 1e-9);
            assert!(r.value <= 1.0 + 1e-9, "{}", r.value);
        }
    }

    #[test]
    fn empty_basis_returns_weight_floor() {
        // a segment body whose small scales contain no lattice point but 0
        let seg = crate::ratgeom::surrogates::segment_surrogate(rat(3, 2));
        let k = WeightedSampleSet::new(
            vec![vec![c(1.0), c(1.0)], vec![c(0.5), c(2.0)], vec![c(2.0), c(0.3)]],
            vec![0.2, 0.5, 0.4],
        )
        .unwrap();
        let r = phi_m(&seg, &k, 1, &[c(3.0), c(3.0)], 16).unwrap();
        assert!((r.value - 0.2f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn phase_refinement_is_monotone_on_nested_grids() {
        let k = WeightedSampleSet::unit_circle(48);
        // an instance without the real fast path: rotate the evaluation point
        let z = vec![Complex64::from_polar(1.9, 0.7)];
        let mut last = f64::INFINITY;
        for p in [16, 32, 64, 128] {
            let r = phi_m(&interval(), &k, 2, &z, p).unwrap();
            assert!(
                r.value <= last + 1e-9,
                "value grew under phase refinement: {} -> {}",
                last,
                r.value
            );
            last = r.value;
        }
    }

    #[test]
    fn fekete_superadditivity_on_disc() {
        let k = WeightedSampleSet::unit_circle(48);
        let rep = fekete_check(&interval(), &k, &[1, 2, 3, 4], &[c(1.8)], 32).unwrap();
        assert!(rep.superadditive_ok);
        // running sup is nondecreasing by construction; spot check values
        for w in rep.rows.windows(2) {
            assert!(w[1].running_sup >= w[0].running_sup);
        }
        assert_eq!(rep.sample_count, 48);
    }

    #[test]
    fn spread_below_the_running_sup_shrinks_over_a_grid() {
        let k = WeightedSampleSet::unit_circle(32);
        let grid: Vec<f64> = vec![0.4, 0.9, 1.3, 1.8, 2.4, 3.0];
        let m_list = [1u32, 2, 3, 4];
        let mut values = vec![vec![0.0f64; grid.len()]; m_list.len()];
        for (mi, &m) in m_list.iter().enumerate() {
            for (zi, &z) in grid.iter().enumerate() {
                values[mi][zi] = phi_m(&interval(), &k, m, &[c(z)], 16).unwrap().value;
            }
        }
        let sup: Vec<f64> = (0..grid.len())
            .map(|zi| m_list.iter().enumerate().map(|(mi, _)| values[mi][zi]).fold(0.0, f64::max))
            .collect();
        let spread = |mi: usize| -> f64 {
            (0..grid.len())
                .map(|zi| sup[zi] - values[mi][zi])
                .fold(0.0, f64::max)
        };
        assert!(spread(m_list.len() - 1) <= spread(0) + 1e-9);
    }

    #[test]
    fn monomial_bound_examples() {
        let sigma2 = Body::simplex(2);
        let e = std::f64::consts::E;
        let v = monomial_torus_bound(&sigma2, 1, &[c(e), c(e)]).unwrap();
        assert!((v - 1.0).abs() < 1e-12);

        let quad = crate::ratgeom::surrogates::notched_quad(rat(1, 5), rat(4, 5));
        let z = [c(e), c(1.0)];
        let mut prev = f64::NEG_INFINITY;
        for m in [4u32, 8, 16] {
            let v = monomial_torus_bound(&quad, m, &z).unwrap();
            assert!(v >= prev - 1e-12, "not monotone at {m}");
            assert!(v <= 0.8 + 1e-12);
            prev = v;
        }
        // at m = 20 the best exponent (16,4) sits on the vertex ray exactly
        let v20 = monomial_torus_bound(&quad, 20, &z).unwrap();
        assert!((v20 - 0.8).abs() < 1e-12);
        // zero coordinates are rejected
        assert!(matches!(
            monomial_torus_bound(&quad, 2, &[c(1.0), c(0.0)]),
            Err(ExtremalError::ZeroCoordinate)
        ));
    }

    #[test]
    fn monomial_bound_stays_below_hs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let quad = crate::ratgeom::surrogates::notched_quad(rat(1, 5), rat(4, 5));
        for _ in 0..25 {
            let z: Vec<Complex64> = (0..2)
                .map(|_| Complex64::from_polar(rng.gen_range(0.2..6.0), rng.gen_range(0.0..6.0)))
                .collect();
            let v = monomial_torus_bound(&quad, 8, &z).unwrap();
            assert!(v <= hs_eval(&quad, &z) + 1e-12);
        }
    }

    #[test]
    fn weight_validation() {
        let b = Body::simplex(2);
        let k = WeightedSampleSet::torus(2, 32);
        let rep = validate_weight(&b, k.points(), k.weights(), false);
        assert!(rep.admissible());

        // a -inf sentinel is rejected
        let mut bad = k.weights().to_vec();
        bad[3] = f64::NEG_INFINITY;
        let rep = validate_weight(&b, k.points(), &bad, false);
        assert!(!rep.finite_and_bounded && !rep.admissible());

        // strong weight on an expanding grid passes the tail trend
        let sig = sigma_f64(&b);
        let pts: Vec<Vec<Complex64>> = (1..=200)
            .map(|k| {
                let r = k as f64 / 10.0;
                // spread in both coordinates so the cloud is not pluripolar
                vec![c(r), c(0.1 + r * (1.0 + (k % 5) as f64) / 5.0)]
            })
            .collect();
        let w: Vec<f64> = pts
            .iter()
            .map(|p| {
                let norm = p.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
                2.0 * sig * (1.0 + norm).ln()
            })
            .collect();
        let rep = validate_weight(&b, &pts, &w, true);
        assert_eq!(rep.tail_trend_decreasing, Some(true));
        assert!(rep.admissible());

        // weight growing too slowly fails the trend
        let w_slow: Vec<f64> = pts.iter().map(|_| 0.0).collect();
        let rep = validate_weight(&b, &pts, &w_slow, true);
        assert_eq!(rep.tail_trend_decreasing, Some(false));
    }

    #[test]
    fn sample_set_invariants() {
        assert!(WeightedSampleSet::new(vec![], vec![]).is_err());
        assert!(WeightedSampleSet::new(vec![vec![c(1.0)]], vec![0.0, 1.0]).is_err());
        assert!(
            WeightedSampleSet::new(vec![vec![c(1.0)]], vec![f64::NEG_INFINITY]).is_err()
        );
    }
}
