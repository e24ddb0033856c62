//! The graded monomial lattices `(mS) ∩ N^n`: enumeration, membership,
//! S-degree, the gap distance from `mS` to the excluded lattice points, and
//! an empirical growth probe.
//!
//! Membership of a lattice point in a scaled body is decided exactly by LP
//! feasibility of the convex-combination system, so no facet enumeration is
//! needed in any dimension.

use crate::lp::{self, Constraint, Sense};
use crate::logsupport::hs_eval;
use crate::mnp;
use crate::rat::{rat_i, to_f64, Rat};
use crate::ratgeom::Body;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

pub mod irrational;

/// An exponent vector in `N^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn zero(dim: usize) -> MultiIndex {
        MultiIndex(vec![0; dim])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn to_rats(&self) -> Vec<Rat> {
        self.0.iter().map(|&e| rat_i(e as i64)).collect()
    }

    pub fn dot_f64(&self, xi: &[f64]) -> f64 {
        self.0.iter().zip(xi).map(|(&e, &x)| e as f64 * x).sum()
    }
}

/// A finite, sorted, deduplicated set of exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndexSet {
    indices: Vec<MultiIndex>,
}

impl MultiIndexSet {
    pub fn new(mut indices: Vec<MultiIndex>) -> MultiIndexSet {
        indices.sort();
        indices.dedup();
        MultiIndexSet { indices }
    }

    pub fn contains(&self, alpha: &MultiIndex) -> bool {
        self.indices.binary_search(alpha).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MultiIndex> {
        self.indices.iter()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn as_slice(&self) -> &[MultiIndex] {
        &self.indices
    }
}

/// A polynomial stored as exponent -> complex coefficient; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SparsePoly {
    dim: usize,
    terms: BTreeMap<MultiIndex, Complex64>,
}

impl SparsePoly {
    pub fn new(dim: usize) -> SparsePoly {
        SparsePoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Complex64) -> SparsePoly {
        let mut p = SparsePoly::new(dim);
        p.add_term(MultiIndex::zero(dim), c);
        p
    }

    pub fn monomial(dim: usize, alpha: MultiIndex, c: Complex64) -> SparsePoly {
        assert_eq!(alpha.dim(), dim);
        let mut p = SparsePoly::new(dim);
        p.add_term(alpha, c);
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: MultiIndex, c: Complex64) {
        assert_eq!(alpha.dim(), self.dim);
        let entry = self.terms.entry(alpha).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if entry.norm() == 0.0 {
            let dead: Vec<MultiIndex> = self
                .terms
                .iter()
                .filter(|(_, v)| v.norm() == 0.0)
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Complex64)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<MultiIndex> {
        self.terms.keys().cloned().collect()
    }

    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        assert_eq!(z.len(), self.dim);
        let mut acc = Complex64::new(0.0, 0.0);
        for (alpha, c) in &self.terms {
            let mut t = *c;
            for (e, zi) in alpha.0.iter().zip(z) {
                t *= zi.powu(*e);
            }
            acc += t;
        }
        acc
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.dim, other.dim);
        let mut out = SparsePoly::new(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.add(b), ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (b, cb) in &other.terms {
            out.add_term(b.clone(), *cb);
        }
        out
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::constant(self.dim, Complex64::new(1.0, 0.0));
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

/// Exact membership of `alpha` in `mS` (LP on the convex-combination
/// system for `alpha / m`).
pub fn in_scaled_body(body: &Body, alpha: &MultiIndex, m: u32) -> bool {
    assert_eq!(alpha.dim(), body.dim());
    if m == 0 {
        return alpha.is_zero();
    }
    let target: Vec<Rat> = alpha
        .0
        .iter()
        .map(|&e| rat_i(e as i64) / rat_i(m as i64))
        .collect();
    body.contains(&target).expect("dimensions match")
}

/// All lattice points of the scaled body `mS`, by exact membership over the
/// integer bounding box.
pub fn lattice_points(body: &Body, m: u32) -> MultiIndexSet {
    assert!(m >= 1, "scale must be positive");
    let n = body.dim();
    let hi: Vec<u32> = (0..n)
        .map(|i| {
            let max_coord = body
                .vertices()
                .iter()
                .map(|v| v[i].clone())
                .max()
                .expect("nonempty");
            let scaled = max_coord * rat_i(m as i64);
            (scaled.floor().to_integer().to_u32()).unwrap_or(0)
        })
        .collect();
    let mut out = Vec::new();
    let mut alpha = vec![0u32; n];
    loop {
        let mi = MultiIndex(alpha.clone());
        if in_scaled_body(body, &mi, m) {
            out.push(mi);
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == n {
                return MultiIndexSet::new(out);
            }
            if alpha[i] < hi[i] {
                alpha[i] += 1;
                break;
            }
            alpha[i] = 0;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Finite(u64),
    Infinite,
}

/// The S-degree: the least `m` with every exponent in `mS`; `Infinite`
/// when an exponent escapes the cone spanned by the body.
///
/// For a single exponent the minimal real scale is the LP value
/// `min sum(t)` over `t >= 0` with `sum t_j v_j = alpha` (the leftover mass
/// sits on the origin), and the integer degree is its ceiling.
pub fn s_degree(p: &SparsePoly, body: &Body) -> Degree {
    assert_eq!(p.dim(), body.dim());
    let mut best: u64 = 0;
    for alpha in p.support() {
        if alpha.is_zero() {
            continue;
        }
        let k = body.vertices().len();
        let n = body.dim();
        let mut constraints = Vec::with_capacity(n);
        for coord in 0..n {
            constraints.push(Constraint {
                coeffs: body
                    .vertices()
                    .iter()
                    .map(|v| v[coord].clone())
                    .collect::<Vec<_>>(),
                sense: Sense::Eq,
                rhs: rat_i(alpha.0[coord] as i64),
            });
        }
        let problem = lp::Problem {
            // minimize sum t == maximize -sum t
            objective: vec![-Rat::one(); k],
            constraints,
        };
        match lp::solve(&problem) {
            Ok(sol) => {
                let mass = -sol.objective;
                let m = mass.ceil().to_integer().to_u64().expect("small degree");
                best = best.max(m.max(1));
            }
            Err(lp::Error::Infeasible) => return Degree::Infinite,
            Err(e) => panic!("degree lp failed: {e}"),
        }
    }
    Degree::Finite(best)
}

/// Whether every exponent of `p` lies in `(mS) ∩ N^n`.
pub fn is_member(p: &SparsePoly, body: &Body, m: u32) -> bool {
    p.support().iter().all(|a| in_scaled_body(body, a, m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapNorm {
    L1,
    L2,
}

/// Exact L1 distance from `alpha` to `mS` (LP with split absolute values).
fn l1_distance_exact(body: &Body, alpha: &MultiIndex, m: u32) -> Rat {
    let n = body.dim();
    let k = body.vertices().len();
    // variables: lambda (k), u (n), w (n); alpha - m*sum(lambda v) = u - w
    let nvars = k + 2 * n;
    let mut constraints = Vec::with_capacity(n + 1);
    for coord in 0..n {
        let mut coeffs = vec![Rat::zero(); nvars];
        for (j, v) in body.vertices().iter().enumerate() {
            coeffs[j] = &v[coord] * rat_i(m as i64);
        }
        coeffs[k + coord] = Rat::one();
        coeffs[k + n + coord] = -Rat::one();
        constraints.push(Constraint {
            coeffs,
            sense: Sense::Eq,
            rhs: rat_i(alpha.0[coord] as i64),
        });
    }
    let mut sum_l = vec![Rat::zero(); nvars];
    for c in sum_l.iter_mut().take(k) {
        *c = Rat::one();
    }
    constraints.push(Constraint {
        coeffs: sum_l,
        sense: Sense::Eq,
        rhs: Rat::one(),
    });
    let mut objective = vec![Rat::zero(); nvars];
    for c in objective.iter_mut().skip(k) {
        *c = -Rat::one();
    }
    let sol = lp::solve(&lp::Problem {
        objective,
        constraints,
    })
    .expect("distance lp is feasible and bounded");
    -sol.objective
}

/// Exact squared L2 distance from `alpha` to `mS` (min-norm point).
fn l2_distance_squared_exact(body: &Body, alpha: &MultiIndex, m: u32) -> Rat {
    let shifted: Vec<Vec<Rat>> = body
        .vertices()
        .iter()
        .map(|v| {
            v.iter()
                .zip(&alpha.0)
                .map(|(x, &a)| x * rat_i(m as i64) - rat_i(a as i64))
                .collect()
        })
        .collect();
    let (_, norm2) = mnp::min_norm_point(&shifted);
    norm2
}

/// Minimum distance from `mS` to the excluded lattice points
/// `N^n without mS`, exact, in the chosen norm (L2 values returned as the
/// exact squared distance).
pub fn gap_distance_exact(body: &Body, m: u32, norm: GapNorm) -> Rat {
    let n = body.dim();
    let hi_box: Vec<i64> = (0..n)
        .map(|i| {
            let max_coord = body
                .vertices()
                .iter()
                .map(|v| v[i].clone())
                .max()
                .expect("nonempty");
            (max_coord * rat_i(m as i64))
                .floor()
                .to_integer()
                .to_i64()
                .expect("small body")
        })
        .collect();
    let mut best: Option<Rat> = None;
    let mut margin: u32 = 1;
    loop {
        // enumerate the inflated box; distance to points outside exceeds
        // the margin in either norm
        let mut alpha = vec![0u32; n];
        let hi: Vec<u32> = hi_box.iter().map(|&h| (h.max(0) as u32) + margin).collect();
        loop {
            let mi = MultiIndex(alpha.clone());
            if !in_scaled_body(body, &mi, m) {
                let d = match norm {
                    GapNorm::L1 => l1_distance_exact(body, &mi, m),
                    GapNorm::L2 => l2_distance_squared_exact(body, &mi, m),
                };
                best = Some(match best {
                    None => d,
                    Some(b) => {
                        if d < b {
                            d
                        } else {
                            b
                        }
                    }
                });
            }
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                if alpha[i] < hi[i] {
                    alpha[i] += 1;
                    break;
                }
                alpha[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        let b = best.as_ref().expect("excluded points exist in every box");
        let cutoff = match norm {
            GapNorm::L1 => rat_i(margin as i64),
            GapNorm::L2 => rat_i((margin as i64) * (margin as i64)),
        };
        if *b <= cutoff {
            return b.clone();
        }
        margin += 1;
    }
}

/// Float view of [`gap_distance_exact`] (square root applied for L2).
pub fn gap_distance(body: &Body, m: u32, norm: GapNorm) -> f64 {
    let exact = gap_distance_exact(body, m, norm);
    match norm {
        GapNorm::L1 => to_f64(&exact),
        GapNorm::L2 => to_f64(&exact).sqrt(),
    }
}

#[derive(Debug, Clone)]
pub struct GrowthReport {
    pub radii: Vec<f64>,
    /// sup over sampled `z` of `log|p(z)| - a log(1+|z|) - m H_S(z)` per radius
    pub sup_log_ratio: Vec<f64>,
    pub bounded_trend: bool,
}

/// Samples `|p(z)| (1+|z|)^{-a} e^{-m H_S(z)}` on expanding sup-norm balls
/// and reports the boundedness trend. Diagnostic only, not a certificate.
pub fn growth_probe(p: &SparsePoly, body: &Body, m: u32, a: f64, radii: &[f64]) -> GrowthReport {
    use rand::{Rng, SeedableRng};
    assert!(a >= 0.0);
    let n = body.dim();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xfeed);
    let mut sups = Vec::with_capacity(radii.len());
    for &r in radii {
        let mut pts: Vec<Vec<Complex64>> = Vec::new();
        // axis extremes and the diagonal, then random fill
        for i in 0..n {
            let mut z = vec![Complex64::new(1.0, 0.0); n];
            z[i] = Complex64::new(r, 0.0);
            pts.push(z);
        }
        pts.push(vec![Complex64::new(r, 0.0); n]);
        for _ in 0..40 {
            pts.push(
                (0..n)
                    .map(|_| {
                        Complex64::from_polar(rng.gen_range(0.0..=r), rng.gen_range(0.0..std::f64::consts::TAU))
                    })
                    .collect(),
            );
        }
        let mut sup = f64::NEG_INFINITY;
        for z in &pts {
            let val = p.eval(z).norm();
            if val == 0.0 {
                continue;
            }
            let znorm = z.iter().map(|w| w.norm_sqr()).sum::<f64>().sqrt();
            let ratio = val.ln() - a * (1.0 + znorm).ln() - m as f64 * hs_eval(body, z);
            sup = sup.max(ratio);
        }
        sups.push(sup);
    }
    let first = *sups.first().unwrap_or(&0.0);
    let last = *sups.last().unwrap_or(&0.0);
    let peak = sups.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let bounded_trend = last - first <= 0.1 && peak - first <= 0.2;
    GrowthReport {
        radii: radii.to_vec(),
        sup_log_ratio: sups,
        bounded_trend,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::ratgeom::surrogates::segment_surrogate;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    fn quad() -> Body {
        crate::ratgeom::surrogates::notched_quad(rat(1, 5), rat(4, 5))
    }

    #[test]
    fn simplex_lattice_m2() {
        let pts = lattice_points(&Body::simplex(2), 2);
        let expected: Vec<MultiIndex> = vec![
            mi(&[0, 0]),
            mi(&[0, 1]),
            mi(&[0, 2]),
            mi(&[1, 0]),
            mi(&[1, 1]),
            mi(&[2, 0]),
        ];
        assert_eq!(pts.as_slice(), &expected[..]);
    }

    #[test]
    fn quad_lattice_excludes_unit_exponent() {
        // for the notched quadrilateral at m=4 the point (1,0) is outside
        let pts = lattice_points(&quad(), 4);
        assert!(!pts.contains(&mi(&[1, 0])));
        assert!(pts.contains(&mi(&[0, 0])));
        assert!(pts.contains(&mi(&[3, 1])));
        // 2D point-in-polygon oracle via edge normals of the scaled body
        let m = 4i64;
        let inside = |a: i64, b: i64| -> bool {
            // edges of 4S: (0,0)-(4/5,0)-(16/5,4/5)-(0,4)-(0,0),
            // inequality form: y >= 0, x >= 0, crossings checked exactly
            let x = rat(a, 1);
            let y = rat(b, 1);
            let scale = rat(m, 1);
            // support-style check on the outward edge normals
            let checks = [
                (rat(0, 1), rat(-1, 1), rat(0, 1)),   // -y <= 0
                (rat(-1, 1), rat(0, 1), rat(0, 1)),   // -x <= 0
                (rat(1, 1), rat(-3, 1), rat(1, 5)),   // x - 3y <= a_support
                (rat(1, 1), rat(1, 1), rat(1, 1)),    // x + y <= 1
            ];
            checks.iter().all(|(nx, ny, sup)| {
                nx * &x + ny * &y <= sup * &scale
            })
        };
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                assert_eq!(
                    pts.contains(&mi(&[a, b])),
                    inside(a as i64, b as i64),
                    "membership mismatch at ({a},{b})"
                );
            }
        }
    }

    #[test]
    fn rational_segment_lattice() {
        let seg = segment_surrogate(rat(3, 2));
        let pts = lattice_points(&seg, 5);
        assert_eq!(
            pts.as_slice(),
            &[mi(&[0, 0]), mi(&[2, 3]), mi(&[4, 6])][..]
        );
    }

    #[test]
    fn degrees() {
        let one = SparsePoly::constant(2, Complex64::new(1.0, 0.0));
        assert_eq!(s_degree(&one, &Body::simplex(2)), Degree::Finite(0));

        let z1z2 = SparsePoly::monomial(2, mi(&[1, 1]), Complex64::new(1.0, 0.0));
        assert_eq!(s_degree(&z1z2, &Body::simplex(2)), Degree::Finite(2));

        let z1 = SparsePoly::monomial(2, mi(&[1, 0]), Complex64::new(1.0, 0.0));
        assert_eq!(s_degree(&z1, &quad()), Degree::Finite(5));

        // exponent outside the cone of the segment body
        let seg = segment_surrogate(rat(3, 2));
        let stray = SparsePoly::monomial(2, mi(&[1, 2]), Complex64::new(1.0, 0.0));
        assert_eq!(s_degree(&stray, &seg), Degree::Infinite);
    }

    #[test]
    fn membership_examples_and_round_trip() {
        let b = Body::simplex(2);
        let mut p = SparsePoly::monomial(2, mi(&[2, 0]), Complex64::new(1.0, 0.0));
        p.add_term(mi(&[0, 1]), Complex64::new(1.0, 0.0));
        assert!(is_member(&p, &b, 2));
        let z1 = SparsePoly::monomial(2, mi(&[1, 0]), Complex64::new(1.0, 0.0));
        assert!(!is_member(&z1, &quad(), 4));
        // round trip: member at the degree, not below
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for _ in 0..20 {
            let alpha = mi(&[rng.gen_range(0..5), rng.gen_range(0..5)]);
            if alpha.is_zero() {
                continue;
            }
            let p = SparsePoly::monomial(2, alpha, Complex64::new(1.0, 0.0));
            if let Degree::Finite(d) = s_degree(&p, &b) {
                assert!(is_member(&p, &b, d as u32));
                if d > 1 {
                    assert!(!is_member(&p, &b, (d - 1) as u32));
                }
            }
        }
    }

    #[test]
    fn gap_distances_frozen_values() {
        // brute-force-derived values for the standard simplex at m=2:
        // nearest excluded point (2,1) projects to the hypotenuse at
        // (3/2,1/2), L2^2 = 1/2; L1 distance 1.
        let b = Body::simplex(2);
        assert_eq!(gap_distance_exact(&b, 2, GapNorm::L1), rat(1, 1));
        assert_eq!(gap_distance_exact(&b, 2, GapNorm::L2), rat(1, 2));
        assert!((gap_distance(&b, 2, GapNorm::L2) - (0.5f64).sqrt()).abs() < 1e-12);
        // unit square at m=1: excluded neighbors sit at L1 distance 1
        assert_eq!(
            gap_distance_exact(&Body::unit_box(2), 1, GapNorm::L1),
            rat(1, 1)
        );
        // the notched quadrilateral at m=4: (1,0) is closest, at squared
        // distance 1/250 from the edge toward (16/5, 4/5)
        assert_eq!(gap_distance_exact(&quad(), 4, GapNorm::L2), rat(1, 250));
    }

    #[test]
    fn gap_norm_comparison_and_positivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..10 {
            let k = rng.gen_range(2..=4);
            let mut vertices = vec![vec![Rat::zero(); 2]];
            for _ in 0..k {
                vertices.push(vec![
                    rat(rng.gen_range(0..6), rng.gen_range(1..4)),
                    rat(rng.gen_range(0..6), rng.gen_range(1..4)),
                ]);
            }
            let b = Body::new(2, vertices).unwrap();
            let m = rng.gen_range(1..=3);
            let l1 = gap_distance(&b, m, GapNorm::L1);
            let l2 = gap_distance(&b, m, GapNorm::L2);
            assert!(l2 <= l1 + 1e-12);
            assert!(l1 > 0.0 && l2 > 0.0);
        }
    }

    #[test]
    fn lattice_monotone_in_scale() {
        let b = quad();
        let small = lattice_points(&b, 3);
        let big = lattice_points(&b, 4);
        for alpha in small.iter() {
            // mS ⊆ (m+1)S since 0 is in S
            assert!(in_scaled_body(&b, alpha, 4), "{alpha:?} lost at m+1");
        }
        assert!(big.len() >= small.len());
    }

    #[test]
    fn graded_ring_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let b = quad();
        let grid_j = lattice_points(&b, 2);
        let grid_k = lattice_points(&b, 3);
        for _ in 0..20 {
            let pick = |set: &MultiIndexSet, rng: &mut ChaCha8Rng| -> SparsePoly {
                let mut p = SparsePoly::new(2);
                for alpha in set.iter() {
                    if rng.gen_bool(0.4) {
                        p.add_term(
                            alpha.clone(),
                            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                        );
                    }
                }
                if p.is_zero() {
                    p.add_term(MultiIndex::zero(2), Complex64::new(1.0, 0.0));
                }
                p
            };
            let p = pick(&grid_j, &mut rng);
            let q = pick(&grid_k, &mut rng);
            assert!(is_member(&p.mul(&q), &b, 5));
            // degree inequalities
            let dsum = match (s_degree(&p, &b), s_degree(&q, &b)) {
                (Degree::Finite(a), Degree::Finite(c)) => (a, c),
                _ => panic!("unexpected infinite degree"),
            };
            if let Degree::Finite(dprod) = s_degree(&p.mul(&q), &b) {
                assert!(dprod <= dsum.0 + dsum.1);
            }
            if let Degree::Finite(dadd) = s_degree(&p.add(&q), &b) {
                assert!(dadd <= dsum.0.max(dsum.1));
            }
        }
    }

    #[test]
    fn growth_probe_trends() {
        let b = Body::simplex(2);
        let m = 3u32;
        let radii = [1.0, 4.0, 16.0, 64.0, 256.0];
        let inside = SparsePoly::monomial(2, mi(&[m, 0]), Complex64::new(1.0, 0.0));
        assert!(growth_probe(&inside, &b, m, 0.0, &radii).bounded_trend);
        let outside = SparsePoly::monomial(2, mi(&[m + 1, 0]), Complex64::new(1.0, 0.0));
        assert!(!growth_probe(&outside, &b, m, 0.5, &radii).bounded_trend);
        let one = SparsePoly::constant(2, Complex64::new(1.0, 0.0));
        assert!(growth_probe(&one, &b, m, 0.0, &radii).bounded_trend);
    }

    #[test]
    fn sparse_poly_drops_cancelled_terms() {
        let mut p = SparsePoly::monomial(2, mi(&[1, 0]), Complex64::new(1.0, 0.0));
        p.add_term(mi(&[1, 0]), Complex64::new(-1.0, 0.0));
        assert!(p.is_zero());
    }
}
