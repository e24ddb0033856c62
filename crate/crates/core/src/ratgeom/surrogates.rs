//! Rational polygonal surrogates for non-polytopal bodies. The surrogate is
//! inscribed, so every exactness claim downstream refers to the surrogate
//! polygon itself.

use super::Body;
use crate::rat::{rat, Rat};
use num_traits::{One, Zero};

/// Inscribed rational polygon for the lens `B1(e1) ∩ B1(e2)` in R^2: the
/// intersection of the closed unit discs centered at the two basis vectors.
///
/// Each circular arc from the origin to (1,1) carries `arc_points + 1`
/// vertices at rational parameters (tangent half-angle parametrization), so
/// the polygon touches the coordinate axes only at the origin. With
/// `arc_points = 128` the polygon has 256 vertices.
pub fn lens_surrogate(arc_points: usize) -> Body {
    assert!(arc_points >= 2);
    let mut vertices = Vec::new();
    for k in 0..=arc_points {
        let t = rat(k as i64, arc_points as i64);
        let t2 = &t * &t;
        let denom = Rat::one() + &t2;
        // point (1 - cos, sin) on the circle centered at e1
        let x = (Rat::from_integer(2.into()) * &t2) / &denom;
        let y = (Rat::from_integer(2.into()) * &t) / &denom;
        vertices.push(vec![x.clone(), y.clone()]);
        // mirrored arc on the circle centered at e2
        vertices.push(vec![y, x]);
    }
    Body::new(2, vertices).expect("lens surrogate is a valid body")
}

/// The segment from the origin to `(1, slope)` with rational `slope`,
/// standing in for irrational-direction segments.
pub fn segment_surrogate(slope: Rat) -> Body {
    Body::new(2, vec![vec![Rat::zero(), Rat::zero()], vec![Rat::one(), slope]])
        .expect("segment surrogate is a valid body")
}

/// The quadrilateral `conv{(0,0), (a,0), (b,1-b), (0,1)}` with
/// `0 < a < b < 1`. Not a lower set when `b > a`: the point `(b, 0)` is
/// missing, which makes the small scales drop low axis exponents.
pub fn notched_quad(a: Rat, b: Rat) -> Body {
    let one = Rat::one();
    Body::new(
        2,
        vec![
            vec![Rat::zero(), Rat::zero()],
            vec![a, Rat::zero()],
            vec![b.clone(), &one - &b],
            vec![Rat::zero(), one],
        ],
    )
    .expect("quadrilateral is a valid body")
}
