//! Certified lattice emptiness for the segment in the irrational direction
//! `(1, sqrt 2)`.
//!
//! Rational-vertex bodies cannot represent this segment, and the claim that
//! its scaled copies contain no lattice point but the origin must not hinge
//! on float rounding. Membership screening uses interval bounds on `sqrt 2`
//! with 64 guard bits; the only candidates surviving the screen are settled
//! by the exact integer identity `b^2 = 2 a^2`, which has no nonzero
//! solutions.

use super::{MultiIndex, MultiIndexSet};
use crate::rat::{to_f64, Rat};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

const GUARD_BITS: u64 = 64;

/// The segment `{t (1, sqrt 2) : t in [0, scale]}` in `R^2_+`.
#[derive(Debug, Clone)]
pub struct IrrationalSegment {
    scale: Rat,
}

impl IrrationalSegment {
    pub fn new(scale: Rat) -> IrrationalSegment {
        assert!(scale > Rat::zero());
        IrrationalSegment { scale }
    }

    pub fn unit() -> IrrationalSegment {
        IrrationalSegment::new(Rat::one())
    }

    /// Lower and upper rational bounds on `sqrt 2` sharing the denominator
    /// `2^GUARD_BITS`.
    fn sqrt2_bounds() -> (Rat, Rat) {
        let two_shifted: BigInt = BigInt::from(2) << (2 * GUARD_BITS);
        let lo_num = two_shifted.sqrt();
        let denom: BigInt = BigInt::one() << GUARD_BITS;
        let lo = Rat::new(lo_num.clone(), denom.clone());
        let hi = Rat::new(lo_num + 1, denom);
        (lo, hi)
    }

    /// `(mS) ∩ N^2`, certified: returns only the origin for every scale,
    /// with the exclusion of each candidate either interval-separated or
    /// settled by the exact integer square test.
    pub fn lattice_points(&self, m: u32) -> MultiIndexSet {
        let (lo, hi) = Self::sqrt2_bounds();
        let t_max = &self.scale * crate::rat::rat_i(m as i64);
        let a_max = t_max.floor().to_integer().to_u32().unwrap_or(0);
        let mut out = vec![MultiIndex::zero(2)];
        for a in 1..=a_max {
            let af = crate::rat::rat_i(a as i64);
            // any member (a, b) must satisfy b in [a*lo, a*hi]
            let b_lo = (&af * &lo).ceil().to_integer().to_u32().unwrap_or(u32::MAX);
            let b_hi = (&af * &hi).floor().to_integer().to_u32().unwrap_or(0);
            for b in b_lo..=b_hi {
                // interval screen inconclusive: settle exactly
                let bb = (b as u64) * (b as u64);
                let aa = 2 * (a as u64) * (a as u64);
                if bb == aa {
                    out.push(MultiIndex(vec![a, b]));
                }
            }
        }
        MultiIndexSet::new(out)
    }

    /// `H_S(z)` for this segment: `scale * max(0, log|z1| + sqrt 2 log|z2|)`.
    pub fn hs_eval(&self, z1_abs: f64, z2_abs: f64) -> f64 {
        assert!(z1_abs > 0.0 && z2_abs > 0.0);
        let v = z1_abs.ln() + 2.0f64.sqrt() * z2_abs.ln();
        to_f64(&self.scale) * v.max(0.0)
    }

    /// The torus monomial bound `max (1/m) <alpha, Log z>` over the lattice
    /// points; with the certified lattice this is identically zero.
    pub fn monomial_torus_bound(&self, m: u32, z1_abs: f64, z2_abs: f64) -> f64 {
        self.lattice_points(m)
            .iter()
            .map(|alpha| alpha.dot_f64(&[z1_abs.ln(), z2_abs.ln()]) / m as f64)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}
