//! Polyhedral cones: generator/inequality representations, ray enumeration
//! in dimension <= 3, dual cones, and the cone hulls of bodies.

use super::{extreme_of_points, Body, GeomError, Point};
use crate::lp::{self, Constraint, Sense};
use crate::rat::{dot, is_zero_vec, primitive, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// A polyhedral cone in `R^n`, described by generators (conic hull) and/or
/// inequality normals `eta`, each meaning `{xi : <eta, xi> >= 0}`.
///
/// At least one of the two lists is nonempty. When both are given and the
/// dimension is at most 3, construction checks that they describe the same
/// cone by mutual containment of generators and enumerated rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCone {
    dim: usize,
    generators: Vec<Vec<Rat>>,
    inequalities: Vec<Vec<Rat>>,
}

impl PolyCone {
    pub fn from_generators(dim: usize, generators: Vec<Vec<Rat>>) -> Result<Self, GeomError> {
        let generators = normalize_list(dim, generators)?;
        if generators.is_empty() {
            return Err(GeomError::EmptyCone);
        }
        Ok(PolyCone {
            dim,
            generators,
            inequalities: Vec::new(),
        })
    }

    pub fn from_inequalities(dim: usize, inequalities: Vec<Vec<Rat>>) -> Result<Self, GeomError> {
        let inequalities = normalize_list(dim, inequalities)?;
        if inequalities.is_empty() {
            return Err(GeomError::EmptyCone);
        }
        Ok(PolyCone {
            dim,
            generators: Vec::new(),
            inequalities,
        })
    }

    pub fn from_both(
        dim: usize,
        generators: Vec<Vec<Rat>>,
        inequalities: Vec<Vec<Rat>>,
    ) -> Result<Self, GeomError> {
        let generators = normalize_list(dim, generators)?;
        let inequalities = normalize_list(dim, inequalities)?;
        if generators.is_empty() && inequalities.is_empty() {
            return Err(GeomError::EmptyCone);
        }
        let cone = PolyCone {
            dim,
            generators,
            inequalities,
        };
        if !cone.generators.is_empty() && !cone.inequalities.is_empty() && dim <= 3 {
            cone.check_consistent()?;
        }
        Ok(cone)
    }

    /// The nonnegative orthant `R^n_+`.
    pub fn orthant(dim: usize) -> PolyCone {
        let gens: Vec<Vec<Rat>> = (0..dim)
            .map(|i| {
                let mut v = vec![Rat::zero(); dim];
                v[i] = Rat::one();
                v
            })
            .collect();
        PolyCone::from_both(dim, gens.clone(), gens).expect("orthant is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Rat>] {
        &self.generators
    }

    pub fn inequalities(&self) -> &[Vec<Rat>] {
        &self.inequalities
    }

    fn check_consistent(&self) -> Result<(), GeomError> {
        for g in &self.generators {
            if !self.inequalities.iter().all(|a| !dot(a, g).is_negative()) {
                return Err(GeomError::EmptyCone);
            }
        }
        let rays = enumerate_rays(self.dim, &self.inequalities);
        for r in &rays {
            if !cone_contains(&self.generators, r)? {
                return Err(GeomError::EmptyCone);
            }
        }
        Ok(())
    }

    /// Generator list, enumerating rays from the inequalities when needed
    /// (dimension <= 3 for the enumeration path).
    pub fn generators_or_compute(&self) -> Result<Vec<Vec<Rat>>, GeomError> {
        if !self.generators.is_empty() {
            return Ok(self.generators.clone());
        }
        if self.dim > 3 {
            return Err(GeomError::DimensionTooLarge { limit: 3 });
        }
        Ok(enumerate_rays(self.dim, &self.inequalities))
    }

    /// Inequality list; for a generator-only cone these are the generators
    /// of the dual, obtained by ray enumeration (dimension <= 3). An empty
    /// result means the cone is all of `R^n` (no constraints).
    pub fn inequalities_or_compute(&self) -> Result<Vec<Vec<Rat>>, GeomError> {
        if !self.inequalities.is_empty() {
            return Ok(self.inequalities.clone());
        }
        if self.dim > 3 {
            return Err(GeomError::DimensionTooLarge { limit: 3 });
        }
        Ok(enumerate_rays(self.dim, &self.generators))
    }

    /// The dual cone `{x : <x, xi> >= 0 for all xi in the cone}`. Generators
    /// of the input become inequalities of the output and vice versa.
    pub fn dual(&self) -> PolyCone {
        PolyCone {
            dim: self.dim,
            generators: self.inequalities.clone(),
            inequalities: self.generators.clone(),
        }
    }

    /// Exact membership test, using whichever representation is present.
    pub fn contains(&self, x: &[Rat]) -> Result<bool, GeomError> {
        if x.len() != self.dim {
            return Err(GeomError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if !self.inequalities.is_empty() {
            return Ok(self.inequalities.iter().all(|a| !dot(a, x).is_negative()));
        }
        Ok(cone_contains(&self.generators, x)?)
    }

    /// Whether the cone meets the strictly positive orthant, decided by LP
    /// feasibility on the generator representation.
    pub fn has_strictly_positive_direction(&self) -> Result<bool, GeomError> {
        let gens = self.generators_or_compute()?;
        if gens.is_empty() {
            return Ok(false);
        }
        // exists t >= 0 with sum t_i g_i >= 1 componentwise
        let k = gens.len();
        let mut constraints = Vec::with_capacity(self.dim);
        for coord in 0..self.dim {
            constraints.push(Constraint {
                coeffs: gens.iter().map(|g| g[coord].clone()).collect::<Vec<_>>(),
                sense: Sense::Ge,
                rhs: Rat::one(),
            });
        }
        debug_assert!(constraints.iter().all(|c| c.coeffs.len() == k));
        Ok(lp::feasible(constraints)?)
    }

    /// Mutual containment (dimension <= 3).
    pub fn same_cone_as(&self, other: &PolyCone) -> Result<bool, GeomError> {
        let a = self.generators_or_compute()?;
        let b = other.generators_or_compute()?;
        for g in &a {
            if !cone_contains(&b, g)? {
                return Ok(false);
            }
        }
        for g in &b {
            if !cone_contains(&a, g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn normalize_list(dim: usize, list: Vec<Vec<Rat>>) -> Result<Vec<Vec<Rat>>, GeomError> {
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for v in list {
        if v.len() != dim {
            return Err(GeomError::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        if is_zero_vec(&v) {
            continue;
        }
        out.push(primitive(&v));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Membership of `x` in the conic hull of `gens` (LP feasibility of the
/// nonnegative-combination system).
pub fn cone_contains(gens: &[Vec<Rat>], x: &[Rat]) -> Result<bool, lp::Error> {
    if is_zero_vec(x) {
        return Ok(true);
    }
    if gens.is_empty() {
        return Ok(false);
    }
    let n = x.len();
    let mut constraints = Vec::with_capacity(n);
    for coord in 0..n {
        constraints.push(Constraint {
            coeffs: gens.iter().map(|g| g[coord].clone()).collect(),
            sense: Sense::Eq,
            rhs: x[coord].clone(),
        });
    }
    lp::feasible(constraints)
}

/// A generating set of rays for the cone `{xi : <a, xi> >= 0 for all a}`,
/// exact, for dimension <= 3. The empty list means the cone is `{0}`.
pub fn enumerate_rays(dim: usize, inequalities: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    assert!((1..=3).contains(&dim), "ray enumeration needs dim <= 3");
    let feasible = |v: &[Rat]| inequalities.iter().all(|a| !dot(a, v).is_negative());
    let mut cands: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let push = |v: Vec<Rat>, cands: &mut BTreeSet<Vec<Rat>>| {
        if !is_zero_vec(&v) {
            cands.insert(primitive(&v));
        }
    };
    // coordinate directions cover the no-constraint case and fill interiors
    for i in 0..dim {
        let mut e = vec![Rat::zero(); dim];
        e[i] = Rat::one();
        push(e.clone(), &mut cands);
        e[i] = -Rat::one();
        push(e, &mut cands);
    }
    for a in inequalities {
        push(a.clone(), &mut cands);
        match dim {
            1 => {}
            2 => {
                let perp = vec![a[1].clone(), -a[0].clone()];
                push(perp.clone(), &mut cands);
                push(vec![-perp[0].clone(), -perp[1].clone()], &mut cands);
            }
            _ => {
                for u in plane_basis(a) {
                    push(vec![-u[0].clone(), -u[1].clone(), -u[2].clone()], &mut cands);
                    push(u, &mut cands);
                }
            }
        }
    }
    if dim == 3 {
        for (i, a) in inequalities.iter().enumerate() {
            for b in &inequalities[i + 1..] {
                let c = cross3(a, b);
                if !is_zero_vec(&c) {
                    push(vec![-c[0].clone(), -c[1].clone(), -c[2].clone()], &mut cands);
                    push(c, &mut cands);
                }
            }
        }
    }
    cands.into_iter().filter(|v| feasible(v)).collect()
}

fn cross3(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Two independent vectors spanning the plane orthogonal to `a` in R^3.
fn plane_basis(a: &[Rat]) -> Vec<Vec<Rat>> {
    let u = (0..3)
        .find_map(|i| {
            let mut e = vec![Rat::zero(); 3];
            e[i] = Rat::one();
            let c = cross3(a, &e);
            (!is_zero_vec(&c)).then(|| primitive(&c))
        })
        .expect("a is nonzero");
    let v = primitive(&cross3(a, &u));
    vec![u, v]
}

/// The Gamma-hull of `body`: `{x in R^n_+ : <x, xi> <= support(xi) for all
/// xi in the cone}`, computed in vertex representation via the identity
/// `(S - Gamma^o) ∩ R^n_+` (dimension <= 3).
///
/// Errors when the cone contains no strictly positive direction.
pub fn gamma_hull(body: &Body, cone: &PolyCone) -> Result<Body, GeomError> {
    if body.dim() != cone.dim() {
        return Err(GeomError::DimensionMismatch {
            expected: body.dim(),
            got: cone.dim(),
        });
    }
    if body.dim() > 3 {
        return Err(GeomError::DimensionTooLarge { limit: 3 });
    }
    if !cone.has_strictly_positive_direction()? {
        return Err(GeomError::NoPositiveDirection);
    }
    let cone_ineqs = cone.inequalities_or_compute()?;
    let mut rays: BTreeSet<Vec<Rat>> = cone.generators_or_compute()?.into_iter().collect();
    // Within the normal cone of a vertex the support function is linear, so
    // the hull constraints are implied by the rays of (normal cone ∩ Gamma).
    for v in body.extreme_points() {
        let nc = body.normal_cone(&v)?;
        let mut ineqs = nc.inequalities().to_vec();
        ineqs.extend(cone_ineqs.iter().cloned());
        for r in enumerate_rays(body.dim(), &ineqs) {
            rays.insert(r);
        }
    }
    hull_from_constraint_rays(body, rays.into_iter().collect())
}

/// Vertex representation of `{x >= 0, <x, r> <= support(r) for r in rays}`.
pub(crate) fn hull_from_constraint_rays(
    body: &Body,
    rays: Vec<Vec<Rat>>,
) -> Result<Body, GeomError> {
    let n = body.dim();
    // constraints as <a, x> <= b
    let mut cons: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for i in 0..n {
        let mut a = vec![Rat::zero(); n];
        a[i] = -Rat::one();
        cons.push((a, Rat::zero()));
    }
    for r in rays {
        let b = body.support_raw(&r);
        cons.push((r, b));
    }
    let verts = enumerate_polytope_vertices(n, &cons);
    Body::new(n, verts)
}

/// All vertices of the polyhedron `{<a_k, x> <= b_k}` by exhausting
/// n-subsets of active constraints (dimension <= 3; the caller must know
/// the feasible set is bounded).
pub(crate) fn enumerate_polytope_vertices(
    n: usize,
    cons: &[(Vec<Rat>, Rat)],
) -> Vec<Point> {
    let k = cons.len();
    let mut verts: BTreeSet<Point> = BTreeSet::new();
    let mut idx = vec![0usize; n];
    enumerate_subsets(k, n, 0, 0, &mut idx, &mut |sel| {
        let a: Vec<Vec<Rat>> = sel.iter().map(|&i| cons[i].0.clone()).collect();
        let b: Vec<Rat> = sel.iter().map(|&i| cons[i].1.clone()).collect();
        if let Some(x) = crate::linalg::solve_square(&a, &b) {
            if cons.iter().all(|(ca, cb)| dot(ca, &x) <= *cb) {
                verts.insert(x);
            }
        }
    });
    verts.into_iter().collect()
}

fn enumerate_subsets(
    k: usize,
    n: usize,
    start: usize,
    pos: usize,
    idx: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if pos == n {
        f(idx);
        return;
    }
    for i in start..k {
        idx[pos] = i;
        enumerate_subsets(k, n, i + 1, pos + 1, idx, f);
    }
}

/// The lower hull `union of the axis cubes [0,s] over s in S`, equal to the
/// Gamma-hull with respect to the nonnegative orthant. Works in any
/// dimension: vertices of the result are corner projections of vertices.
pub fn lower_hull(body: &Body) -> Body {
    let ext = body.extreme_points();
    let n = body.dim();
    let mut cands: BTreeSet<Point> = BTreeSet::new();
    for v in &ext {
        for mask in 0..(1u32 << n) {
            let c: Point = (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        v[i].clone()
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            cands.insert(c);
        }
    }
    let verts = extreme_of_points(&cands.into_iter().collect::<Vec<_>>());
    Body::new(n, verts).expect("lower hull is a valid body")
}

/// Vertex-cube criterion: the body is a lower set iff for every extreme
/// point `s` the whole cube `[0,s_1] x ... x [0,s_n]` lies in the body.
pub fn is_lower_set(body: &Body) -> bool {
    let ext = body.extreme_points();
    let n = body.dim();
    for v in &ext {
        for mask in 0..(1u32 << n) {
            let c: Point = (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        v[i].clone()
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            if !body.contains(&c).expect("dimension matches") {
                return false;
            }
        }
    }
    true
}

/// For a body that is not a lower set, a direction `xi` with
/// `support(xi+) > support(xi)`, exact and strict. `None` for lower sets.
pub fn lower_set_witness(body: &Body) -> Option<Vec<Rat>> {
    let lh = lower_hull(body);
    for w in lh.vertices() {
        if let Some(xi) = body.separate(w) {
            // <w, xi> > support(xi) and <w, xi> <= support_lower_hull(xi)
            // = support(xi+), so xi is a witness.
            debug_assert!(
                body.support_raw(&crate::rat::positive_part(&xi)) > body.support_raw(&xi)
            );
            return Some(xi);
        }
    }
    None
}
