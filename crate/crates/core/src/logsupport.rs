//! The logarithmic supporting function `H_S = support ∘ Log` on all of
//! `C^n`, its logarithmic type, slice bodies on coordinate subspaces, and
//! the zero-set probe.
//!
//! Evaluation is in `f64`. On the open set where no coordinate vanishes,
//! `H_S(z) = max_v <v, Log z>` over the vertices; where coordinates vanish
//! the value comes from the slice body of the remaining indices, so no
//! `-inf` float arithmetic is ever involved. `H_S(0) = 0` by convention
//! (the empty slice contributes the origin only).

use crate::rat::Rat;
use crate::ratgeom::{clip_halfspace, extreme_of_points, Body, GeomError, Point};
use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;

pub type ComplexPoint = Vec<Complex64>;

/// Coordinatewise log-moduli; `-inf` entries mark vanishing coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct LogCoords(Vec<f64>);

impl LogCoords {
    pub fn new(xi: Vec<f64>) -> Option<LogCoords> {
        if xi.iter().all(|x| !x.is_nan() && *x < f64::INFINITY) {
            Some(LogCoords(xi))
        } else {
            None
        }
    }

    pub fn from_point(z: &[Complex64]) -> LogCoords {
        LogCoords(
            z.iter()
                .map(|c| {
                    let m = c.norm();
                    if m == 0.0 {
                        f64::NEG_INFINITY
                    } else {
                        m.ln()
                    }
                })
                .collect(),
        )
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }
}

/// `H_S(z)`, including points on the coordinate hyperplanes.
pub fn hs_eval(body: &Body, z: &[Complex64]) -> f64 {
    assert_eq!(z.len(), body.dim(), "point dimension mismatch");
    hs_eval_log(body, &LogCoords::from_point(z))
}

/// `H_S` in logarithmic coordinates. Entries equal to `-inf` select the
/// slice-body path for the remaining indices.
pub fn hs_eval_log(body: &Body, xi: &LogCoords) -> f64 {
    let xi = xi.coords();
    assert_eq!(xi.len(), body.dim(), "coordinate dimension mismatch");
    let live: Vec<usize> = (0..xi.len()).filter(|&i| xi[i].is_finite()).collect();
    if live.is_empty() {
        return 0.0;
    }
    if live.len() == xi.len() {
        return body.support_f64(xi);
    }
    let slice = slice_body(body, &live).expect("live index set is valid");
    let sub: Vec<f64> = live.iter().map(|&i| xi[i]).collect();
    slice.support_f64(&sub)
}

/// The logarithmic type `sigma_S = support(1, ..., 1)`, exact.
pub fn sigma(body: &Body) -> Rat {
    let ones = vec![Rat::from_integer(1.into()); body.dim()];
    body.support_raw(&ones)
}

/// The slice body `S_J`: all `t` in the coordinates `j` whose embedding
/// with zeros elsewhere lies in the body. Exact (halfspace clipping plus
/// extreme-point reduction).
pub fn slice_body(body: &Body, j: &[usize]) -> Result<Body, GeomError> {
    let n = body.dim();
    let mut idx: Vec<usize> = j.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.is_empty() || *idx.last().unwrap() >= n {
        return Err(GeomError::BadIndexSet);
    }
    let mut pts: Vec<Point> = body.vertices().to_vec();
    for k in 0..n {
        if !idx.contains(&k) {
            // coordinates are nonnegative, so x_k <= 0 pins x_k = 0
            let mut e = vec![Rat::zero(); n];
            e[k] = Rat::from_integer(1.into());
            pts = clip_halfspace(&pts, &e, &Rat::zero());
        }
    }
    let projected: Vec<Point> = pts
        .iter()
        .map(|p| idx.iter().map(|&i| p[i].clone()).collect())
        .collect();
    Body::new(idx.len(), extreme_of_points(&projected))
}

/// Whether `z` lies in the zero set of `H_S` (tolerance 1e-12).
pub fn hs_zero_set_probe(body: &Body, z: &[Complex64]) -> bool {
    hs_eval(body, z) <= 1e-12
}

/// Grid evaluation; order of results matches the input order.
pub fn hs_eval_grid(body: &Body, points: &[ComplexPoint]) -> Vec<f64> {
    points.par_iter().map(|z| hs_eval(body, z)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i, to_f64};
    use crate::ratgeom::surrogates::{lens_surrogate, segment_surrogate};
    use crate::ratgeom::{is_lower_set, lower_set_witness};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn quad() -> Body {
        crate::ratgeom::surrogates::notched_quad(rat(1, 5), rat(4, 5))
    }

    fn random_body(rng: &mut ChaCha8Rng, dim: usize) -> Body {
        let k = rng.gen_range(2..=5);
        let mut vertices = vec![vec![Rat::zero(); dim]];
        for _ in 0..k {
            vertices.push(
                (0..dim)
                    .map(|_| rat(rng.gen_range(0..8), rng.gen_range(1..4)))
                    .collect(),
            );
        }
        Body::new(dim, vertices).unwrap()
    }

    #[test]
    fn simplex_matches_log_plus_sup_norm() {
        let sigma2 = Body::simplex(2);
        let v = hs_eval(&sigma2, &[c(2.0), c(1.0)]);
        assert!((v - 2.0f64.ln()).abs() < 1e-12);
        // at the all-ones point every body gives zero
        assert_eq!(hs_eval(&quad(), &[c(1.0), c(1.0)]), 0.0);
    }

    #[test]
    fn lens_vanishes_on_the_axes() {
        let lens = lens_surrogate(128);
        assert_eq!(hs_eval(&lens, &[c(5.0), c(0.0)]), 0.0);
        assert_eq!(hs_eval(&lens, &[c(0.0), c(7.0)]), 0.0);
        assert!(hs_zero_set_probe(&lens, &[c(1e6), c(0.0)]));
        assert_eq!(hs_eval(&lens, &[c(0.0), c(0.0)]), 0.0);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&Body::simplex(2)), rat_i(1));
        assert_eq!(sigma(&Body::unit_box(2)), rat_i(2));
        assert_eq!(sigma(&quad()), rat_i(1));
    }

    #[test]
    fn slice_body_examples() {
        let s1 = slice_body(&Body::simplex(2), &[0]).unwrap();
        assert_eq!(s1.extreme_points(), vec![vec![rat_i(0)], vec![rat_i(1)]]);
        let s2 = slice_body(&Body::unit_box(2), &[1]).unwrap();
        assert_eq!(s2.extreme_points(), vec![vec![rat_i(0)], vec![rat_i(1)]]);
        let lens = lens_surrogate(64);
        let sl = slice_body(&lens, &[0]).unwrap();
        assert_eq!(sl.extreme_points(), vec![vec![rat_i(0)]]);
        assert!(matches!(slice_body(&lens, &[]), Err(GeomError::BadIndexSet)));
    }

    #[test]
    fn zero_set_contains_the_closed_polydisc() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let b = quad();
        for _ in 0..100 {
            let z: Vec<Complex64> = (0..2)
                .map(|_| {
                    let r = rng.gen_range(0.0..=1.0f64);
                    let t = rng.gen_range(0.0..std::f64::consts::TAU);
                    Complex64::from_polar(r, t)
                })
                .collect();
            assert!(hs_zero_set_probe(&b, &z));
        }
        assert!(!hs_zero_set_probe(&Body::simplex(2), &[c(2.0), c(1.0)]));
    }

    #[test]
    fn homogeneity_in_the_moduli() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let b = random_body(&mut rng, 2);
            let z: Vec<Complex64> = (0..2)
                .map(|_| Complex64::from_polar(rng.gen_range(0.1..5.0), rng.gen_range(0.0..std::f64::consts::TAU)))
                .collect();
            let lam: f64 = rng.gen_range(0.2..3.0);
            let powered: Vec<Complex64> = z.iter().map(|w| c(w.norm().powf(lam))).collect();
            let lhs = hs_eval(&b, &powered);
            let rhs = lam * hs_eval(&b, &z);
            assert!((lhs - rhs).abs() < 1e-9, "homogeneity failed: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn submultiplicative_and_scalar_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let b = random_body(&mut rng, 2);
            let sample = |rng: &mut ChaCha8Rng| -> Vec<Complex64> {
                (0..2)
                    .map(|_| {
                        Complex64::from_polar(rng.gen_range(0.05..8.0), rng.gen_range(0.0..std::f64::consts::TAU))
                    })
                    .collect()
            };
            let z = sample(&mut rng);
            let w = sample(&mut rng);
            let prod: Vec<Complex64> = z.iter().zip(&w).map(|(a, b)| a * b).collect();
            assert!(hs_eval(&b, &prod) <= hs_eval(&b, &z) + hs_eval(&b, &w) + 1e-9);

            let lam = Complex64::from_polar(rng.gen_range(0.1..6.0), rng.gen_range(0.0..std::f64::consts::TAU));
            let scaled: Vec<Complex64> = z.iter().map(|a| a * lam).collect();
            let sig = to_f64(&sigma(&b));
            assert!(
                hs_eval(&b, &scaled) <= hs_eval(&b, &z) + sig * lam.norm().ln().max(0.0) + 1e-9
            );
            // global growth bound against the sup norm
            let sup = z.iter().map(|c| c.norm()).fold(0.0, f64::max);
            assert!(hs_eval(&b, &z) <= sig * sup.ln().max(0.0) + 1e-9);
        }
    }

    #[test]
    fn perturbed_ones_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..40 {
            let b = random_body(&mut rng, 2);
            let sig = to_f64(&sigma(&b));
            let delta: f64 = rng.gen_range(0.01..0.99);
            let z: Vec<Complex64> = (0..2)
                .map(|_| {
                    let w =
                        Complex64::from_polar(rng.gen_range(0.0..=1.0), rng.gen_range(0.0..std::f64::consts::TAU));
                    Complex64::new(1.0, 0.0) + delta * w
                })
                .collect();
            assert!(hs_eval(&b, &z) <= delta * sig + 1e-9);
        }
    }

    #[test]
    fn continuity_toward_coordinate_hyperplanes() {
        // In log coordinates, send the dead coordinate to -infinity and
        // compare against the slice value. The lens surrogate has vertices
        // with tiny second coordinates, so the approach is slow; log-space
        // evaluation keeps it well inside f64 range.
        let bodies = vec![Body::simplex(2), quad(), lens_surrogate(32)];
        for b in bodies {
            let target = hs_eval(&b, &[c(5.0), c(0.0)]);
            let mut t = 1.0f64;
            let mut last = f64::INFINITY;
            for _ in 0..12 {
                t *= 8.0;
                let xi = LogCoords::new(vec![5.0f64.ln(), -t]).unwrap();
                last = hs_eval_log(&b, &xi);
            }
            assert!(
                (last - target).abs() < 1e-6,
                "limit {last} vs slice value {target}"
            );
        }
    }

    #[test]
    fn lower_set_identity_and_witness() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        // lower sets: H_S(z) equals support(Log^+ z)
        for b in [Body::simplex(2), Body::unit_box(2)] {
            for _ in 0..50 {
                let z: Vec<Complex64> = (0..2)
                    .map(|_| {
                        Complex64::from_polar(rng.gen_range(0.05..6.0), rng.gen_range(0.0..std::f64::consts::TAU))
                    })
                    .collect();
                let xi: Vec<f64> = z.iter().map(|w| w.norm().ln().max(0.0)).collect();
                assert!((hs_eval(&b, &z) - b.support_f64(&xi)).abs() <= 1e-9);
            }
        }
        // non-lower set: an exact witness direction exists, and scaling it
        // makes the gap strict in floats as well
        let b = quad();
        assert!(!is_lower_set(&b));
        let xi = lower_set_witness(&b).unwrap();
        let xi_f: Vec<f64> = xi.iter().map(to_f64).collect();
        let scale = 50.0;
        let z: Vec<Complex64> = xi_f.iter().map(|&x| c((scale * x).exp())).collect();
        let plus: Vec<f64> = xi_f.iter().map(|&x| scale * x.max(0.0)).collect();
        let gap = b.support_f64(&plus) - hs_eval(&b, &z);
        assert!(gap > 1e-6, "witness gap too small: {gap}");
    }

    #[test]
    fn lower_sets_are_translation_stable() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for b in [Body::simplex(2), Body::unit_box(2)] {
            let sig = to_f64(&sigma(&b));
            for _ in 0..60 {
                let z: Vec<Complex64> = (0..2)
                    .map(|_| {
                        Complex64::from_polar(rng.gen_range(0.1..5.0), rng.gen_range(0.0..std::f64::consts::TAU))
                    })
                    .collect();
                let w: Vec<Complex64> = (0..2)
                    .map(|_| {
                        Complex64::from_polar(rng.gen_range(0.0..2.0), rng.gen_range(0.0..std::f64::consts::TAU))
                    })
                    .collect();
                let diff: Vec<Complex64> = z.iter().zip(&w).map(|(a, b)| a - b).collect();
                let wnorm = w.iter().map(|v| v.norm()).fold(0.0, f64::max);
                assert!(hs_eval(&b, &diff) <= sig * wnorm + hs_eval(&b, &z) + 1e-9);
            }
        }
    }

    #[test]
    fn grid_eval_is_order_stable() {
        let b = Body::simplex(2);
        let pts: Vec<ComplexPoint> = (1..=16)
            .map(|k| vec![c(k as f64), c(1.0 + k as f64 / 2.0)])
            .collect();
        let seq: Vec<f64> = pts.iter().map(|z| hs_eval(&b, z)).collect();
        assert_eq!(hs_eval_grid(&b, &pts), seq);
    }

    #[test]
    fn degenerate_segment_body_still_works() {
        let seg = segment_surrogate(rat(3, 2));
        assert_eq!(sigma(&seg), rat(5, 2));
        let v = hs_eval(&seg, &[c(std::f64::consts::E), c(std::f64::consts::E)]);
        assert!((v - 2.5).abs() < 1e-9);
        let sl = slice_body(&seg, &[0]).unwrap();
        assert_eq!(sl.extreme_points(), vec![vec![Rat::zero()]]);
    }
}
