//! Named verification suites. Each suite checks one pinned numerical or
//! exact identity at desk scale and reports per-check lines; the CLI `check`
//! subcommand and the acceptance test target both run them.
//!
//! Suites are deterministic given the seed.

use crate::extremal::{fekete_check, monomial_torus_bound, phi_m, WeightedSampleSet};
use crate::logsupport::{hs_eval, sigma, slice_body};
use crate::massint::{ma_total_mass, monomial_l2_norm, L2Mode, L2Value};
use crate::polyspace::irrational::IrrationalSegment;
use crate::polyspace::{
    in_scaled_body, is_member, lattice_points, MultiIndex, SparsePoly,
};
use crate::pullback::{newton_polytope, pullback_body, pullback_poly, NewtonPolytope, PolyMap};
use crate::rat::{positive_part, rat, rat_i, Rat};
use crate::ratgeom::surrogates::{lens_surrogate, notched_quad};
use crate::ratgeom::{
    gamma_hull, is_lower_set, lower_hull, lower_set_witness, Body, PolyCone,
};
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

pub const SUITE_NAMES: [&str; 9] = [
    "example74", "thm62", "prop43", "thm58", "prop56", "prop47", "prop81", "ex93", "lp1d",
];

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub lines: Vec<String>,
    pub elapsed_ms: u128,
}

struct Ctx {
    lines: Vec<String>,
    passed: bool,
}

impl Ctx {
    fn new() -> Ctx {
        Ctx {
            lines: Vec::new(),
            passed: true,
        }
    }

    fn check(&mut self, ok: bool, msg: &str) {
        if ok {
            self.lines.push(format!("ok   {msg}"));
        } else {
            self.lines.push(format!("FAIL {msg}"));
            self.passed = false;
        }
    }

    fn note(&mut self, msg: String) {
        self.lines.push(format!("     {msg}"));
    }
}

pub fn run_suite(name: &str, seed: u64) -> Option<CheckReport> {
    let start = Instant::now();
    let mut ctx = Ctx::new();
    match name {
        "example74" => suite_example74(&mut ctx),
        "thm62" => suite_thm62(&mut ctx, seed),
        "prop43" => suite_prop43(&mut ctx, seed),
        "thm58" => suite_thm58(&mut ctx, seed),
        "prop56" => suite_prop56(&mut ctx, seed),
        "prop47" => suite_prop47(&mut ctx),
        "prop81" => suite_prop81(&mut ctx, seed),
        "ex93" => suite_ex93(&mut ctx, seed),
        "lp1d" => suite_lp1d(&mut ctx, seed),
        _ => return None,
    }
    Some(CheckReport {
        name: name.to_string(),
        passed: ctx.passed,
        lines: ctx.lines,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

pub fn run_all(seed: u64) -> Vec<CheckReport> {
    SUITE_NAMES
        .iter()
        .map(|n| run_suite(n, seed).expect("known suite"))
        .collect()
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn random_body2(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Body {
    let k = rng.gen_range(2..=5);
    let mut vertices = vec![vec![Rat::zero(); 2]];
    for _ in 0..k {
        vertices.push(vec![
            rat(rng.gen_range(0..max_num), rng.gen_range(1..max_den)),
            rat(rng.gen_range(0..max_num), rng.gen_range(1..max_den)),
        ]);
    }
    Body::new(2, vertices).expect("origin included")
}

fn random_body(rng: &mut ChaCha8Rng, dim: usize) -> Body {
    let k = rng.gen_range(2..=4 + dim);
    let mut vertices = vec![vec![Rat::zero(); dim]];
    for _ in 0..k {
        vertices.push(
            (0..dim)
                .map(|_| rat(rng.gen_range(0..8), rng.gen_range(1..5)))
                .collect(),
        );
    }
    Body::new(dim, vertices).expect("origin included")
}

// --- example74: the quadrilateral with a finite weighted L2 norm for an
// exponent outside the scaled body -------------------------------------

fn suite_example74(ctx: &mut Ctx) {
    let (a, b, m, k) = (rat(1, 5), rat(4, 5), 4u32, 1u32);
    let body = notched_quad(a.clone(), b.clone());

    // parameter preconditions, exact
    let one = Rat::one();
    ctx.check(a < Rat::new(1.into(), (m as i64).into()), "a < 1/m");
    ctx.check(rat_i(m as i64) * (&one - &b) < one, "m (1-b) < 1");
    let lhs = (&b - &a) / (&one - &b);
    let rhs = rat_i(m as i64 - 2) - rat_i(m as i64) * &a;
    ctx.check(lhs == rat_i(3), "(b-a)/(1-b) = 3");
    ctx.check(rhs == rat(6, 5), "m-2-am = 6/5");
    ctx.check(lhs > rhs, "(b-a)/(1-b) > m-2-am");

    // the low axis exponent leaves the scaled body
    ctx.check(
        !in_scaled_body(&body, &MultiIndex(vec![k, 0]), m),
        "(1,0) is outside 4S",
    );

    // closed-form cone decomposition vs quadrature
    let cf = monomial_l2_norm(&body, &MultiIndex(vec![k, 0]), m, L2Mode::ClosedForm)
        .expect("closed form in the plane");
    let qd = monomial_l2_norm(&body, &MultiIndex(vec![k, 0]), m, L2Mode::Quadrature)
        .expect("quadrature in the plane");
    match (&cf.value, &qd.value) {
        (L2Value::Finite(x), L2Value::Finite(y)) => {
            ctx.check(*x > 0.0, "closed-form norm is finite and positive");
            let rel = (x - y).abs() / x.abs();
            ctx.check(
                rel <= 1e-6,
                &format!("closed form matches quadrature (rel err {rel:.2e})"),
            );
            ctx.note(format!(
                "cone terms: {}",
                cf.cone_terms
                    .iter()
                    .map(|t| {
                        t.value
                            .as_ref()
                            .map(crate::rat::format_rat)
                            .unwrap_or_else(|| "inf".into())
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            ));
        }
        _ => ctx.check(false, "both integral routes are finite"),
    }

    // the boundary exponent diverges
    let inf = monomial_l2_norm(&body, &MultiIndex(vec![2, 0]), m, L2Mode::ClosedForm)
        .expect("closed form in the plane");
    ctx.check(
        inf.value == L2Value::Infinite,
        "alpha = (2,0) has infinite norm",
    );
}

// --- thm62: total Monge-Ampere mass equals (2 pi)^n n! vol ------------

fn suite_thm62(ctx: &mut Ctx, seed: u64) {
    for n in 1..=4usize {
        let rep = ma_total_mass(&Body::simplex(n));
        ctx.check(
            rep.rational_factor == Rat::one() && !rep.approximate,
            &format!("simplex mass factor is exactly 1 (n = {n})"),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x62);
    let mut all_ok = true;
    for _ in 0..20 {
        let body = random_body2(&mut rng, 10, 5).reduced();
        let rep = ma_total_mass(&body);
        let area = shoelace_area(&body);
        if rep.rational_factor != rat_i(2) * &area || rep.volume != area {
            all_ok = false;
        }
    }
    ctx.check(
        all_ok,
        "20 random polygons: mass factor equals 2 x shoelace area exactly",
    );
}

/// Independent shoelace oracle: orders the extreme points by exact polar
/// angle around the vertex centroid and sums the cross products.
fn shoelace_area(body: &Body) -> Rat {
    let pts = body.extreme_points();
    let k = rat_i(pts.len() as i64);
    let cx = pts.iter().map(|p| p[0].clone()).fold(Rat::zero(), |a, b| a + b) / &k;
    let cy = pts.iter().map(|p| p[1].clone()).fold(Rat::zero(), |a, b| a + b) / &k;
    let mut ordered = pts;
    // exact angular comparison: quadrant first, then cross product
    let quadrant = |dx: &Rat, dy: &Rat| -> u8 {
        match (dy.is_negative(), dx.is_negative()) {
            (false, false) => 0,
            (false, true) => 1,
            (true, true) => 2,
            (true, false) => 3,
        }
    };
    ordered.sort_by(|p, q| {
        let (pdx, pdy) = (&p[0] - &cx, &p[1] - &cy);
        let (qdx, qdy) = (&q[0] - &cx, &q[1] - &cy);
        let (qp, qq) = (quadrant(&pdx, &pdy), quadrant(&qdx, &qdy));
        if qp != qq {
            return qp.cmp(&qq);
        }
        // same quadrant: p before q iff the turn p -> q is counterclockwise
        let cross = &pdx * &qdy - &pdy * &qdx;
        Rat::zero().cmp(&cross)
    });
    let mut twice = Rat::zero();
    for i in 0..ordered.len() {
        let p = &ordered[i];
        let q = &ordered[(i + 1) % ordered.len()];
        twice += &p[0] * &q[1] - &p[1] * &q[0];
    }
    twice.abs() / rat_i(2)
}

// --- prop43: monomial torus bounds converge to the supporting function
// and the LP value respects the weight cap on the samples ---------------

fn suite_prop43(ctx: &mut Ctx, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x43);
    let quad = notched_quad(rat(1, 5), rat(4, 5));
    for (name, body) in [("simplex", Body::simplex(2)), ("quad", quad)] {
        // 25 sample points with strictly positive supporting value
        let mut zs: Vec<Vec<Complex64>> = Vec::new();
        while zs.len() < 25 {
            let z: Vec<Complex64> = (0..2)
                .map(|_| {
                    Complex64::from_polar(rng.gen_range(0.3..6.0), rng.gen_range(0.0..std::f64::consts::TAU))
                })
                .collect();
            if hs_eval(&body, &z) > 0.05 {
                zs.push(z);
            }
        }
        let mut monotone = true;
        let mut close = true;
        for z in &zs {
            let mut prev = f64::NEG_INFINITY;
            let mut last = 0.0;
            for m in [1u32, 2, 4, 8, 16, 32] {
                let v = monomial_torus_bound(&body, m, z).expect("nonzero coordinates");
                if v < prev - 1e-12 {
                    monotone = false;
                }
                prev = v;
                last = v;
            }
            if name == "simplex" {
                let h = hs_eval(&body, z);
                if last < h * 0.95 - 1e-12 {
                    close = false;
                }
            }
        }
        ctx.check(
            monotone,
            &format!("monomial bound nondecreasing in m ({name})"),
        );
        if name == "simplex" {
            ctx.check(close, "monomial bound within 5% of H_S at m = 32 (simplex)");
        }
    }

    // LP values on the torus samples never exceed the supporting function
    // at the constrained points (weight 0 there, supporting value >= 0)
    let quad = notched_quad(rat(1, 5), rat(4, 5));
    for (name, body) in [("simplex", Body::simplex(2)), ("quad", quad)] {
        let samples = WeightedSampleSet::torus(2, 128);
        let mut ok = true;
        let mut worst: f64 = f64::NEG_INFINITY;
        for m in 1..=4u32 {
            for idx in (0..samples.len()).step_by(samples.len() / 25 + 1) {
                let z = samples.points()[idx].clone();
                let r = phi_m(&body, &samples, m, &z, 32).expect("solvable");
                let slack = r.value.ln() - hs_eval(&body, &z);
                worst = worst.max(slack);
                if slack > 1e-6 {
                    ok = false;
                }
            }
        }
        ctx.check(
            ok,
            &format!("log phi_m <= H_S + 1e-6 at sampled constraint points ({name}, worst {worst:.2e})"),
        );
    }
}

// --- thm58: lower-set equivalences agree on random bodies --------------

fn suite_thm58(ctx: &mut Ctx, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x58);
    let mut agreements = 0usize;
    let mut witnesses = 0usize;
    let mut non_lower = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for case in 0..200 {
        let dim = if case % 4 == 3 { 3 } else { 2 };
        let body = random_body(&mut rng, dim);
        let by_cubes = is_lower_set(&body);
        let lh = lower_hull(&body);
        let by_hull = lh.extreme_points() == body.extreme_points();
        let witness = lower_set_witness(&body);
        // support comparison over 1000 sampled directions plus the
        // constructed witness
        let mut sampled_equal = true;
        for _ in 0..1000 {
            let xi: Vec<Rat> = (0..dim)
                .map(|_| rat(rng.gen_range(-9..10), rng.gen_range(1..4)))
                .collect();
            if body.support_raw(&positive_part(&xi)) != body.support_raw(&xi) {
                sampled_equal = false;
                break;
            }
        }
        let by_support = sampled_equal && witness.is_none();
        if by_cubes == by_hull && by_hull == by_support {
            agreements += 1;
        } else {
            failures.push(format!(
                "case {case}: cubes={by_cubes} hull={by_hull} support={by_support}"
            ));
        }
        if !by_cubes {
            non_lower += 1;
            if let Some(xi) = witness {
                if body.support_raw(&positive_part(&xi)) > body.support_raw(&xi) {
                    witnesses += 1;
                }
            }
        }
    }
    ctx.check(
        agreements == 200,
        "three lower-set tests agree on 200/200 bodies",
    );
    for f in failures.into_iter().take(3) {
        ctx.note(f);
    }
    ctx.check(
        witnesses == non_lower,
        &format!("strict support witness found for every non-lower body ({witnesses}/{non_lower})"),
    );
}

// --- prop56: hull containment, support equality on generators,
// monotonicity ----------------------------------------------------------

fn suite_prop56(ctx: &mut Ctx, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x56);
    let mut built = 0usize;
    let mut contain_ok = true;
    let mut support_ok = true;
    let mut monotone_ok = true;
    while built < 100 {
        let dim = if built % 3 == 2 { 3 } else { 2 };
        let body = random_body(&mut rng, dim);
        // at least one strictly positive generator keeps the hull bounded
        let mut gens = vec![(0..dim)
            .map(|_| rat(rng.gen_range(1..6), rng.gen_range(1..3)))
            .collect::<Vec<Rat>>()];
        for _ in 0..rng.gen_range(0..3) {
            gens.push(
                (0..dim)
                    .map(|_| rat(rng.gen_range(-4..6), rng.gen_range(1..3)))
                    .collect(),
            );
        }
        let small = PolyCone::from_generators(dim, gens.clone()).expect("nonzero generators");
        let Ok(hull_small) = gamma_hull(&body, &small) else {
            continue;
        };
        built += 1;
        for v in body.extreme_points() {
            if !hull_small.contains(&v).expect("dims match") {
                contain_ok = false;
            }
        }
        for g in small.generators() {
            if hull_small.support_raw(g) != body.support_raw(g) {
                support_ok = false;
            }
        }
        // nested cone: add one more generator
        let mut bigger = gens.clone();
        bigger.push(
            (0..dim)
                .map(|_| rat(rng.gen_range(-4..6), rng.gen_range(1..3)))
                .collect(),
        );
        let big = PolyCone::from_generators(dim, bigger).expect("nonzero generators");
        if let Ok(hull_big) = gamma_hull(&body, &big) {
            for v in hull_big.extreme_points() {
                if !hull_small.contains(&v).expect("dims match") {
                    monotone_ok = false;
                }
            }
        }
    }
    ctx.check(contain_ok, "gamma hull contains the body (100 instances)");
    ctx.check(support_ok, "support equality on every cone generator, exact");
    ctx.check(monotone_ok, "larger cones give smaller hulls on nested pairs");
}

// --- prop47: irrational segment separates the monomial bound from the
// supporting function ----------------------------------------------------

fn suite_prop47(ctx: &mut Ctx) {
    let seg = IrrationalSegment::unit();
    let mut empty = true;
    for m in 1..=50u32 {
        let pts = seg.lattice_points(m);
        if pts.len() != 1 || !pts.contains(&MultiIndex::zero(2)) {
            empty = false;
        }
    }
    ctx.check(empty, "lattice of the irrational segment is {0} for m <= 50");
    let e = std::f64::consts::E;
    let bound = seg.monomial_torus_bound(50, e, e);
    ctx.check(bound == 0.0, "monomial bound stays at 0");
    let h = seg.hs_eval(e, e);
    let target = 1.0 + 2.0f64.sqrt();
    ctx.check(
        (h - target).abs() <= 1e-9,
        &format!("H_S(e,e) = 1 + sqrt 2 (err {:.2e})", (h - target).abs()),
    );
    ctx.note(format!(
        "strict gap between the polynomial bound and the supporting function: {h:.9}"
    ));
}

// --- prop81: pullback support identity and membership preservation ------

fn suite_prop81(ctx: &mut Ctx, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x81);
    let mut identity_ok = true;
    for _ in 0..50 {
        let body = random_body2(&mut rng, 6, 4);
        let comps: Vec<NewtonPolytope> = (0..2)
            .map(|_| newton_polytope(&random_poly(&mut rng, 2, 3)).expect("nonzero"))
            .collect();
        let s2 = pullback_body(&body, &comps).expect("valid pullback");
        for _ in 0..200 {
            let xi: Vec<Rat> = (0..2)
                .map(|_| rat(rng.gen_range(-9..10), rng.gen_range(1..4)))
                .collect();
            let inner: Vec<Rat> = comps.iter().map(|c| c.support(&xi)).collect();
            if s2.support_raw(&xi) != body.support_raw(&inner) {
                identity_ok = false;
            }
        }
    }
    ctx.check(
        identity_ok,
        "support identity exact at 200 directions x 50 instances",
    );

    let mut member_ok = true;
    for _ in 0..50 {
        let body = random_body2(&mut rng, 6, 4);
        let f = PolyMap::new(
            2,
            vec![random_poly(&mut rng, 2, 2), random_poly(&mut rng, 2, 2)],
        )
        .expect("nonzero components");
        let comps: Vec<NewtonPolytope> = f
            .components()
            .iter()
            .map(|p| newton_polytope(p).expect("nonzero"))
            .collect();
        let s2 = pullback_body(&body, &comps).expect("valid pullback");
        let m = 3u32;
        let grid = lattice_points(&body, m);
        let mut p = SparsePoly::new(2);
        for alpha in grid.iter() {
            if rng.gen_bool(0.35) {
                p.add_term(
                    alpha.clone(),
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                );
            }
        }
        if p.is_zero() {
            p.add_term(MultiIndex::zero(2), Complex64::new(1.0, 0.0));
        }
        let q = pullback_poly(&f, &p).expect("dims match");
        if !is_member(&q, &s2, m) {
            member_ok = false;
        }
    }
    ctx.check(member_ok, "composed polynomials stay in the pullback lattice (50 instances)");
}

fn random_poly(rng: &mut ChaCha8Rng, dim: usize, max_exp: u32) -> SparsePoly {
    let mut p = SparsePoly::new(dim);
    for _ in 0..rng.gen_range(1..=4) {
        p.add_term(
            MultiIndex((0..dim).map(|_| rng.gen_range(0..=max_exp)).collect()),
            Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
        );
    }
    if p.is_zero() {
        p.add_term(MultiIndex::zero(dim), Complex64::new(1.0, 0.0));
    }
    p
}

// --- ex93: the lens vanishes on the axes, its sublevel sets are not
// convex, and the lower-set product identity fails ------------------------

fn suite_ex93(ctx: &mut Ctx, seed: u64) {
    let lens = lens_surrogate(128);
    ctx.check(lens.vertices().len() == 256, "lens surrogate has 256 vertices");

    for j in 0..2usize {
        let slice = slice_body(&lens, &[j]).expect("valid index");
        ctx.check(
            slice.extreme_points() == vec![vec![Rat::zero()]],
            &format!("slice body on axis {j} is the origin"),
        );
    }
    ctx.check(hs_eval(&lens, &[c(5.0), c(0.0)]) == 0.0, "H_S(5, 0) = 0 exactly");
    ctx.check(hs_eval(&lens, &[c(0.0), c(9.0)]) == 0.0, "H_S(0, 9) = 0 exactly");

    // non-convex sublevel set at t = 1: both axis points are inside,
    // the midpoint is far outside
    let t = 1.0;
    let z1 = [c(6.0), c(0.0)];
    let z2 = [c(0.0), c(6.0)];
    let mid = [c(3.0), c(3.0)];
    let (h1, h2, hm) = (hs_eval(&lens, &z1), hs_eval(&lens, &z2), hs_eval(&lens, &mid));
    ctx.check(
        h1 < t && h2 < t && hm > t,
        &format!("sublevel witness: H = {h1:.3}, {h2:.3} below t = 1, midpoint {hm:.3} above"),
    );

    // the product identity H_S = support(Log^+ .) fails at the witness
    let plus = [5.0f64.ln().max(0.0), 0.0f64];
    let gap = lens.support_f64(&plus) - hs_eval(&lens, &[c(5.0), c(0.0)]);
    ctx.check(
        gap > 0.5,
        &format!("product identity fails on the lens (gap {gap:.3})"),
    );

    // while it holds everywhere sampled for the simplex
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x93);
    let sigma2 = Body::simplex(2);
    let mut holds = true;
    for _ in 0..100 {
        let z: Vec<Complex64> = (0..2)
            .map(|_| Complex64::from_polar(rng.gen_range(0.05..8.0), rng.gen_range(0.0..std::f64::consts::TAU)))
            .collect();
        let plus: Vec<f64> = z.iter().map(|w| w.norm().ln().max(0.0)).collect();
        if (hs_eval(&sigma2, &z) - sigma2.support_f64(&plus)).abs() > 1e-9 {
            holds = false;
        }
    }
    ctx.check(holds, "product identity holds on the simplex (100 samples)");
    let _ = sigma(&lens);
}

// --- lp1d: the interval extremal values on the unit circle --------------

fn suite_lp1d(ctx: &mut Ctx, seed: u64) {
    let body = Body::segment(Rat::one());
    let samples = WeightedSampleSet::unit_circle(64);
    let phases = 64usize;
    let cosd = (std::f64::consts::PI / phases as f64).cos();

    let r = phi_m(&body, &samples, 3, &[c(2.0)], phases).expect("solvable");
    let lo = (8.0 * cosd).powf(1.0 / 3.0);
    let hi = (8.0 / cosd).powf(1.0 / 3.0);
    ctx.check(
        r.value >= lo - 1e-9 && r.value <= hi + 1e-9,
        &format!("phi_3(2) = {:.6} inside the distortion band [{lo:.6}, {hi:.6}]", r.value),
    );
    ctx.check(
        (r.value - 2.0).abs() <= 0.002 * 2.0,
        "phi_3(2) within 0.2% of 2",
    );

    let r_in = phi_m(&body, &samples, 3, &[c(0.5)], phases).expect("solvable");
    ctx.check(
        (r_in.value - 1.0).abs() <= 0.02,
        &format!("phi_3(1/2) = {:.6} within 2% of 1", r_in.value),
    );

    // superadditivity triples (1,1), (1,2), (2,2) at 10 sample points
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1d);
    let mut all_ok = true;
    for _ in 0..10 {
        let z = vec![Complex64::from_polar(
            rng.gen_range(0.3..2.5),
            rng.gen_range(0.0..std::f64::consts::TAU),
        )];
        let rep = fekete_check(&body, &samples, &[1, 2, 3, 4], &z, phases).expect("solvable");
        if !rep.superadditive_ok {
            all_ok = false;
        }
    }
    ctx.check(all_ok, "scaled superadditivity holds at 10 sample points");
}
