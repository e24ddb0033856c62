//! Newton polytopes of polynomial maps and the minimal pullback body
//! `S' = union over x in S of x_1 S_1 + ... + x_n S_n`, with membership and
//! boundedness probes for composed polynomials.
//!
//! The Newton polytope of a component may omit the origin; the body type
//! requires it, so construction adjoins it when needed and flags that. The
//! support identity `phi_{S'} = phi_S(phi_{S_1}, ..., phi_{S_n})` refers to
//! the unadjoined hulls, which every function here uses internally.

use crate::polyspace::{MultiIndex, SparsePoly};
use crate::rat::Rat;
use crate::ratgeom::{extreme_of_points, points_contain, support_of_points, Body, GeomError, Point};
use crate::logsupport::hs_eval;
use num_complex::Complex64;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PullbackError {
    #[error("zero polynomial has no Newton polytope")]
    ZeroPolynomial,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("geometry error: {0}")]
    Geom(#[from] GeomError),
}

/// A polynomial map `C^l -> C^n` given by its components.
#[derive(Debug, Clone)]
pub struct PolyMap {
    source_dim: usize,
    components: Vec<SparsePoly>,
}

impl PolyMap {
    pub fn new(source_dim: usize, components: Vec<SparsePoly>) -> Result<Self, PullbackError> {
        if components.is_empty() {
            return Err(PullbackError::DimensionMismatch);
        }
        for c in &components {
            if c.dim() != source_dim {
                return Err(PullbackError::DimensionMismatch);
            }
            if c.is_zero() {
                return Err(PullbackError::ZeroPolynomial);
            }
        }
        Ok(PolyMap {
            source_dim,
            components,
        })
    }

    pub fn identity(dim: usize) -> PolyMap {
        let components = (0..dim)
            .map(|i| {
                let mut alpha = vec![0u32; dim];
                alpha[i] = 1;
                SparsePoly::monomial(dim, MultiIndex(alpha), Complex64::new(1.0, 0.0))
            })
            .collect();
        PolyMap::new(dim, components).expect("identity map is valid")
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[SparsePoly] {
        &self.components
    }

    pub fn eval(&self, z: &[Complex64]) -> Vec<Complex64> {
        self.components.iter().map(|c| c.eval(z)).collect()
    }
}

/// Newton polytope of a polynomial: the convex hull of its exponent
/// support. `hull_vertices` is the unadjoined hull; `body` carries the
/// origin-adjoined version satisfying the body invariants.
#[derive(Debug, Clone)]
pub struct NewtonPolytope {
    hull_vertices: Vec<Point>,
    zero_adjoined: bool,
    body: Body,
}

impl NewtonPolytope {
    /// The hull of the exponent support without the origin adjoined.
    pub fn hull_vertices(&self) -> &[Point] {
        &self.hull_vertices
    }

    pub fn zero_adjoined(&self) -> bool {
        self.zero_adjoined
    }

    pub fn body(&self) -> &Body {
        &self.body
    }

    pub fn support(&self, xi: &[Rat]) -> Rat {
        support_of_points(&self.hull_vertices, xi)
    }
}

pub fn newton_polytope(p: &SparsePoly) -> Result<NewtonPolytope, PullbackError> {
    if p.is_zero() {
        return Err(PullbackError::ZeroPolynomial);
    }
    let pts: Vec<Point> = p.support().iter().map(|a| a.to_rats()).collect();
    let hull_vertices = extreme_of_points(&pts);
    let origin = vec![Rat::zero(); p.dim()];
    let zero_adjoined = !points_contain(&hull_vertices, &origin).expect("membership lp");
    let body = if zero_adjoined {
        let mut with_zero = hull_vertices.clone();
        with_zero.push(origin);
        Body::new(p.dim(), with_zero)?
    } else {
        Body::new(p.dim(), hull_vertices.clone())?
    };
    Ok(NewtonPolytope {
        hull_vertices,
        zero_adjoined,
        body,
    })
}

/// The minimal pullback body: the convex hull of all combinations
/// `sum_j x_j v_j` with `x` an extreme point of the base body and `v_j`
/// extreme in the (unadjoined) component hulls. Its support function is
/// `phi_S(phi_{S_1}(xi), ..., phi_{S_n}(xi))` exactly.
pub fn pullback_body(body: &Body, components: &[NewtonPolytope]) -> Result<Body, PullbackError> {
    if components.len() != body.dim() {
        return Err(PullbackError::DimensionMismatch);
    }
    let source_dim = components[0].hull_vertices[0].len();
    if components
        .iter()
        .any(|c| c.hull_vertices.iter().any(|v| v.len() != source_dim))
    {
        return Err(PullbackError::DimensionMismatch);
    }
    let mut candidates: Vec<Point> = Vec::new();
    let ext = body.extreme_points();
    // odometer over the product of component vertex sets
    let sizes: Vec<usize> = components.iter().map(|c| c.hull_vertices.len()).collect();
    for x in &ext {
        let mut pick = vec![0usize; components.len()];
        loop {
            let mut p = vec![Rat::zero(); source_dim];
            for (j, c) in components.iter().enumerate() {
                let v = &c.hull_vertices[pick[j]];
                for (pc, vc) in p.iter_mut().zip(v) {
                    *pc += &x[j] * vc;
                }
            }
            candidates.push(p);
            let mut d = 0;
            loop {
                if d == components.len() {
                    break;
                }
                pick[d] += 1;
                if pick[d] < sizes[d] {
                    break;
                }
                pick[d] = 0;
                d += 1;
            }
            if d == components.len() {
                break;
            }
        }
    }
    Ok(Body::new(source_dim, extreme_of_points(&candidates))?)
}

/// Expanded composition `p ∘ f`.
pub fn pullback_poly(f: &PolyMap, p: &SparsePoly) -> Result<SparsePoly, PullbackError> {
    if p.dim() != f.target_dim() {
        return Err(PullbackError::DimensionMismatch);
    }
    let mut out = SparsePoly::new(f.source_dim());
    for (beta, coeff) in p.terms() {
        let mut term = SparsePoly::constant(f.source_dim(), *coeff);
        for (j, comp) in f.components().iter().enumerate() {
            let e = beta.0[j];
            if e > 0 {
                term = term.mul(&comp.pow(e));
            }
        }
        out = out.add(&term);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct ProbeRow {
    pub radius: f64,
    pub max_diff: f64,
    pub min_diff: f64,
}

#[derive(Debug, Clone)]
pub struct ProbeReport {
    pub rows: Vec<ProbeRow>,
    /// The difference `H_S(f(z)) - H_{S'}(z)` stayed inside a fixed band
    /// across the radius schedule.
    pub bounded_trend: bool,
    /// Properness of the map is not decidable here; the probe reports and
    /// never certifies.
    pub note: &'static str,
}

/// Samples `H_S(f(z)) - H_{S'}(z)` on expanding tori. A bounded trend is
/// evidence (not proof) that the pullback of the supporting function stays
/// within a bounded distance of the supporting function of the pullback
/// body.
pub fn pullback_exactness_probe(
    f: &PolyMap,
    body: &Body,
    radii: &[f64],
) -> Result<ProbeReport, PullbackError> {
    use rand::{Rng, SeedableRng};
    if f.source_dim() != f.target_dim() || f.target_dim() != body.dim() {
        return Err(PullbackError::DimensionMismatch);
    }
    let comps: Vec<NewtonPolytope> = f
        .components()
        .iter()
        .map(newton_polytope)
        .collect::<Result<_, _>>()?;
    let target = pullback_body(body, &comps)?;
    let n = body.dim();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xcafe);
    let mut rows = Vec::with_capacity(radii.len());
    for &r in radii {
        let mut max_diff = f64::NEG_INFINITY;
        let mut min_diff = f64::INFINITY;
        for _ in 0..60 {
            let z: Vec<Complex64> = (0..n)
                .map(|_| Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU)))
                .collect();
            let fz = f.eval(&z);
            let diff = hs_eval(body, &fz) - hs_eval(&target, &z);
            max_diff = max_diff.max(diff);
            min_diff = min_diff.min(diff);
        }
        rows.push(ProbeRow {
            radius: r,
            max_diff,
            min_diff,
        });
    }
    let spread_first = rows.first().map(|r| r.max_diff).unwrap_or(0.0);
    let spread_last = rows.last().map(|r| r.max_diff).unwrap_or(0.0);
    let low_last = rows.last().map(|r| r.min_diff).unwrap_or(0.0);
    let bounded_trend = (spread_last - spread_first).abs() <= 0.5 && low_last >= -1e6;
    Ok(ProbeReport {
        rows,
        bounded_trend,
        note: "properness of the map is not checked; treat as evidence only",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyspace::{is_member, lattice_points, s_degree, Degree};
    use crate::rat::{rat, rat_i};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    fn c1() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn newton_polytope_examples() {
        // 1 + z1 + z2 -> the standard simplex, nothing adjoined
        let mut p = SparsePoly::constant(2, c1());
        p.add_term(mi(&[1, 0]), c1());
        p.add_term(mi(&[0, 1]), c1());
        let np = newton_polytope(&p).unwrap();
        assert!(!np.zero_adjoined());
        assert_eq!(np.body().extreme_points(), Body::simplex(2).extreme_points());

        // a single monomial: hull is one point, origin adjoined
        let q = SparsePoly::monomial(2, mi(&[2, 1]), c1());
        let nq = newton_polytope(&q).unwrap();
        assert!(nq.zero_adjoined());
        assert_eq!(nq.hull_vertices(), &[vec![rat_i(2), rat_i(1)]]);
        assert_eq!(
            nq.body().extreme_points(),
            vec![vec![rat_i(0), rat_i(0)], vec![rat_i(2), rat_i(1)]]
        );

        // z1^3 + z2^3 + z1 z2: (1,1) is a vertex of the raw hull but
        // interior once the origin is adjoined
        let mut r = SparsePoly::monomial(2, mi(&[3, 0]), c1());
        r.add_term(mi(&[0, 3]), c1());
        r.add_term(mi(&[1, 1]), c1());
        let nr = newton_polytope(&r).unwrap();
        assert!(nr.zero_adjoined());
        assert_eq!(nr.hull_vertices().len(), 3);
        assert_eq!(
            nr.body().extreme_points(),
            vec![
                vec![rat_i(0), rat_i(0)],
                vec![rat_i(0), rat_i(3)],
                vec![rat_i(3), rat_i(0)],
            ]
        );

        let zero = SparsePoly::new(2);
        assert!(matches!(
            newton_polytope(&zero),
            Err(PullbackError::ZeroPolynomial)
        ));
    }

    #[test]
    fn pullback_of_identity_is_the_body() {
        let b = crate::ratgeom::surrogates::notched_quad(rat(1, 5), rat(4, 5));
        let f = PolyMap::identity(2);
        let comps: Vec<NewtonPolytope> = f
            .components()
            .iter()
            .map(|c| newton_polytope(c).unwrap())
            .collect();
        let s2 = pullback_body(&b, &comps).unwrap();
        assert_eq!(s2.extreme_points(), b.extreme_points());
    }

    #[test]
    fn power_map_scales_the_interval() {
        // n = l = 1, S = [0,1], f = z^d: the pullback body is [0, d]
        let b = Body::segment(rat_i(1));
        let f = PolyMap::new(
            1,
            vec![SparsePoly::monomial(1, mi(&[3]), c1())],
        )
        .unwrap();
        let comps = vec![newton_polytope(&f.components()[0]).unwrap()];
        let s2 = pullback_body(&b, &comps).unwrap();
        assert_eq!(s2.extreme_points(), vec![vec![rat_i(0)], vec![rat_i(3)]]);
    }

    fn random_poly(rng: &mut ChaCha8Rng, dim: usize, max_exp: u32) -> SparsePoly {
        let mut p = SparsePoly::new(dim);
        let terms = rng.gen_range(1..=4);
        for _ in 0..terms {
            let alpha = MultiIndex((0..dim).map(|_| rng.gen_range(0..=max_exp)).collect());
            p.add_term(
                alpha,
                Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
            );
        }
        if p.is_zero() {
            p.add_term(MultiIndex::zero(dim), c1());
        }
        p
    }

    fn random_body(rng: &mut ChaCha8Rng) -> Body {
        let k = rng.gen_range(2..=4);
        let mut vertices = vec![vec![Rat::zero(); 2]];
        for _ in 0..k {
            vertices.push(vec![
                rat(rng.gen_range(0..6), rng.gen_range(1..4)),
                rat(rng.gen_range(0..6), rng.gen_range(1..4)),
            ]);
        }
        Body::new(2, vertices).unwrap()
    }

    #[test]
    fn support_identity_exact_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..12 {
            let b = random_body(&mut rng);
            let comps: Vec<NewtonPolytope> = (0..2)
                .map(|_| newton_polytope(&random_poly(&mut rng, 2, 3)).unwrap())
                .collect();
            let s2 = pullback_body(&b, &comps).unwrap();
            for _ in 0..40 {
                let xi = vec![
                    rat(rng.gen_range(-9..10), rng.gen_range(1..4)),
                    rat(rng.gen_range(-9..10), rng.gen_range(1..4)),
                ];
                let lhs = s2.support_raw(&xi);
                let inner: Vec<Rat> = comps.iter().map(|c| c.support(&xi)).collect();
                let rhs = b.support_raw(&inner);
                assert_eq!(lhs, rhs, "support identity failed at {xi:?}");
            }
        }
    }

    #[test]
    fn composition_stays_in_the_pullback_lattice() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..10 {
            let b = random_body(&mut rng);
            let f = PolyMap::new(
                2,
                vec![
                    random_poly(&mut rng, 2, 2),
                    random_poly(&mut rng, 2, 2),
                ],
            )
            .unwrap();
            let comps: Vec<NewtonPolytope> = f
                .components()
                .iter()
                .map(|c| newton_polytope(c).unwrap())
                .collect();
            let s2 = pullback_body(&b, &comps).unwrap();
            // random member of the degree-3 class
            let m = 3u32;
            let grid = lattice_points(&b, m);
            let mut p = SparsePoly::new(2);
            for alpha in grid.iter() {
                if rng.gen_bool(0.3) {
                    p.add_term(alpha.clone(), Complex64::new(rng.gen_range(-1.0..1.0), 0.4));
                }
            }
            if p.is_zero() {
                p.add_term(MultiIndex::zero(2), c1());
            }
            let q = pullback_poly(&f, &p).unwrap();
            assert!(is_member(&q, &s2, m), "composition escaped the lattice");
            // degree bound
            if let (Degree::Finite(dp), Degree::Finite(dq)) =
                (s_degree(&p, &b), s_degree(&q, &s2))
            {
                assert!(dq <= dp, "degree grew: {dq} > {dp}");
            }
        }
    }

    #[test]
    fn pullback_poly_examples() {
        let f = PolyMap::identity(2);
        let mut p = SparsePoly::monomial(2, mi(&[2, 1]), c1());
        p.add_term(mi(&[0, 1]), Complex64::new(0.0, 1.0));
        assert_eq!(pullback_poly(&f, &p).unwrap(), p);

        // f = (z^2), p = w: composition is z^2 inside 1 * [0,2]
        let f = PolyMap::new(1, vec![SparsePoly::monomial(1, mi(&[2]), c1())]).unwrap();
        let p = SparsePoly::monomial(1, mi(&[1]), c1());
        let q = pullback_poly(&f, &p).unwrap();
        assert_eq!(q, SparsePoly::monomial(1, mi(&[2]), c1()));
        let comps = vec![newton_polytope(&f.components()[0]).unwrap()];
        let s2 = pullback_body(&Body::segment(rat_i(1)), &comps).unwrap();
        assert!(is_member(&q, &s2, 1));
    }

    #[test]
    fn enlarging_a_component_enlarges_the_pullback() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let b = random_body(&mut rng);
        let p1 = random_poly(&mut rng, 2, 2);
        let mut p2 = p1.clone();
        p2.add_term(mi(&[4, 4]), c1());
        let second = newton_polytope(&random_poly(&mut rng, 2, 2)).unwrap();
        let small = pullback_body(&b, &[newton_polytope(&p1).unwrap(), second.clone()]).unwrap();
        let big = pullback_body(&b, &[newton_polytope(&p2).unwrap(), second]).unwrap();
        for _ in 0..60 {
            let xi = vec![
                rat(rng.gen_range(-9..10), rng.gen_range(1..4)),
                rat(rng.gen_range(-9..10), rng.gen_range(1..4)),
            ];
            assert!(small.support_raw(&xi) <= big.support_raw(&xi));
        }
    }

    #[test]
    fn probe_identity_is_flat_and_degenerate_maps_still_run() {
        let b = Body::simplex(2);
        let f = PolyMap::identity(2);
        let rep = pullback_exactness_probe(&f, &b, &[1.0, 4.0, 16.0]).unwrap();
        assert!(rep.bounded_trend);
        for row in &rep.rows {
            assert!(row.max_diff.abs() < 1e-9 && row.min_diff.abs() < 1e-9);
        }

        // f = (z1^2, z2) keeps a bounded gap
        let mut f1 = SparsePoly::monomial(2, mi(&[2, 0]), c1());
        f1.add_term(mi(&[0, 0]), Complex64::new(0.5, 0.0));
        let f2 = SparsePoly::monomial(2, mi(&[0, 1]), c1());
        let f = PolyMap::new(2, vec![f1, f2]).unwrap();
        let rep = pullback_exactness_probe(&f, &b, &[1.0, 4.0, 16.0, 64.0]).unwrap();
        assert!(rep.bounded_trend);

        // degenerate, non-proper map: the probe still runs and the report
        // carries the properness note
        let g = SparsePoly::monomial(2, mi(&[1, 0]), c1());
        let f = PolyMap::new(2, vec![g.clone(), g]).unwrap();
        let rep = pullback_exactness_probe(&f, &b, &[1.0, 4.0]).unwrap();
        assert!(!rep.note.is_empty());
    }
}
