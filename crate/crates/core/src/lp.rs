#![allow(clippy::needless_range_loop)]

//! Dense two-phase simplex, generic over the scalar type.
//!
//! The same tableau code runs in exact `BigRational` arithmetic (geometric
//! membership and feasibility certificates) and in `f64` with a pivot
//! tolerance (extremal-function LPs). Dantzig pricing is used until the
//! objective stalls, then the solver switches to Bland's rule, which cannot
//! cycle.

use crate::rat::Rat;
use num_traits::{Signed, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Scalar:
    Clone
    + PartialOrd
    + Zero
    + Signed
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Magnitudes at or below this count as zero in pivot decisions.
    fn pivot_tol() -> Self;

    /// Residual artificial mass at or below this counts as feasible;
    /// `scale` is the largest constraint right-hand side.
    fn feasibility_tol(scale: &Self) -> Self;

    fn gt_tol(&self) -> bool {
        *self > Self::pivot_tol()
    }
    fn lt_tol(&self) -> bool {
        *self < -Self::pivot_tol()
    }
}

impl Scalar for f64 {
    fn pivot_tol() -> f64 {
        1e-9
    }

    fn feasibility_tol(scale: &f64) -> f64 {
        1e-7 * (1.0 + scale.abs())
    }
}

impl Scalar for Rat {
    fn pivot_tol() -> Rat {
        Rat::zero()
    }

    fn feasibility_tol(_scale: &Rat) -> Rat {
        Rat::zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub sense: Sense,
    pub rhs: T,
}

/// Maximize `objective . x` subject to the constraints and `x >= 0`.
#[derive(Debug, Clone)]
pub struct Problem<T> {
    pub objective: Vec<T>,
    pub constraints: Vec<Constraint<T>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("infeasible")]
    Infeasible,
    #[error("unbounded")]
    Unbounded,
    #[error("iteration limit exceeded")]
    IterationLimit,
}

#[derive(Debug, Clone)]
pub struct Solution<T> {
    pub objective: T,
    pub x: Vec<T>,
}

const MAX_PIVOTS: usize = 200_000;
const STALL_LIMIT: usize = 64;

struct Tableau<T> {
    // rows x (cols + 1); last column is the rhs
    a: Vec<Vec<T>>,
    // reduced cost row, length cols + 1 (last entry = negated objective)
    cost: Vec<T>,
    basis: Vec<usize>,
    cols: usize,
    // deterministic generator for randomized anti-stall pricing
    rng_state: u64,
}

impl<T: Scalar> Tableau<T> {
    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.a[row][col].clone();
        for v in self.a[row].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        let prow = self.a[row].clone();
        for (i, r) in self.a.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (v, p) in r.iter_mut().zip(&prow) {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
        }
        if !self.cost[col].is_zero() {
            let f = self.cost[col].clone();
            for (v, p) in self.cost.iter_mut().zip(&prow) {
                *v = v.clone() - f.clone() * p.clone();
            }
        }
        self.basis[row] = col;
    }

    fn next_rand(&mut self) -> u64 {
        // xorshift64*, deterministic across runs
        let mut x = self.rng_state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.rng_state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Entering column: Dantzig pricing, or a random improving column when
    /// the objective has stalled (escapes degenerate vertices quickly).
    fn entering(&mut self, randomized: bool, allowed: usize) -> Option<usize> {
        if randomized {
            let improving: Vec<usize> = (0..allowed).filter(|&j| self.cost[j].gt_tol()).collect();
            if improving.is_empty() {
                return None;
            }
            let pick = (self.next_rand() % improving.len() as u64) as usize;
            return Some(improving[pick]);
        }
        let mut best: Option<(usize, T)> = None;
        for j in 0..allowed {
            if self.cost[j].gt_tol() {
                match &best {
                    Some((_, c)) if self.cost[j] <= *c => {}
                    _ => best = Some((j, self.cost[j].clone())),
                }
            }
        }
        best.map(|(j, _)| j)
    }

    /// Min-ratio leaving row; among (near-)ties prefer the largest pivot
    /// element for stability, then the smallest basis index.
    fn leaving(&self, col: usize) -> Option<usize> {
        let rhs = self.cols;
        let mut best: Option<(usize, T)> = None;
        for i in 0..self.a.len() {
            if self.a[i][col].gt_tol() {
                let ratio = self.a[i][rhs].clone() / self.a[i][col].clone();
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br {
                            Some((i, ratio))
                        } else if ratio == br {
                            let better_pivot = self.a[i][col] > self.a[bi][col]
                                || (self.a[i][col] == self.a[bi][col]
                                    && self.basis[i] < self.basis[bi]);
                            if better_pivot {
                                Some((i, ratio))
                            } else {
                                Some((bi, br))
                            }
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
        }
        best.map(|(i, _)| i)
    }

    fn run(&mut self, allowed: usize) -> Result<(), Error> {
        let mut stall = 0usize;
        let mut random_burst = 0usize;
        let mut last_obj = self.cost[self.cols].clone();
        for _ in 0..MAX_PIVOTS {
            let randomized = random_burst > 0;
            let Some(col) = self.entering(randomized, allowed) else {
                return Ok(());
            };
            let Some(row) = self.leaving(col) else {
                return Err(Error::Unbounded);
            };
            self.pivot(row, col);
            random_burst = random_burst.saturating_sub(1);
            let obj = self.cost[self.cols].clone();
            if obj == last_obj {
                stall += 1;
                if stall >= STALL_LIMIT {
                    random_burst = 4 * self.a.len() + 16;
                    stall = 0;
                }
            } else {
                stall = 0;
                last_obj = obj;
            }
        }
        Err(Error::IterationLimit)
    }
}

/// Solves the problem with all variables constrained to be nonnegative.
pub fn solve<T: Scalar>(p: &Problem<T>) -> Result<Solution<T>, Error> {
    let n = p.objective.len();
    let m = p.constraints.len();
    for c in &p.constraints {
        assert_eq!(c.coeffs.len(), n, "constraint width mismatch");
    }

    // Normalize rhs >= 0, then append slack/surplus and artificial columns.
    let mut rows: Vec<(Vec<T>, Sense, T)> = Vec::with_capacity(m);
    for c in &p.constraints {
        if c.rhs < T::zero() {
            let coeffs = c.coeffs.iter().map(|v| -v.clone()).collect();
            let sense = match c.sense {
                Sense::Le => Sense::Ge,
                Sense::Ge => Sense::Le,
                Sense::Eq => Sense::Eq,
            };
            rows.push((coeffs, sense, -c.rhs.clone()));
        } else {
            rows.push((c.coeffs.clone(), c.sense, c.rhs.clone()));
        }
    }

    let n_slack = rows
        .iter()
        .filter(|(_, s, _)| !matches!(s, Sense::Eq))
        .count();
    let n_art = rows
        .iter()
        .filter(|(_, s, _)| !matches!(s, Sense::Le))
        .count();
    let cols = n + n_slack + n_art;
    let mut a = vec![vec![T::zero(); cols + 1]; m];
    let mut basis = vec![usize::MAX; m];
    let mut phase1_needed = false;
    let mut si = n;
    let mut ai = n + n_slack;
    for (i, (coeffs, sense, rhs)) in rows.iter().enumerate() {
        for (j, v) in coeffs.iter().enumerate() {
            a[i][j] = v.clone();
        }
        a[i][cols] = rhs.clone();
        match sense {
            Sense::Le => {
                a[i][si] = T::one();
                basis[i] = si;
                si += 1;
            }
            Sense::Ge => {
                a[i][si] = -T::one();
                si += 1;
                a[i][ai] = T::one();
                basis[i] = ai;
                ai += 1;
                phase1_needed = true;
            }
            Sense::Eq => {
                a[i][ai] = T::one();
                basis[i] = ai;
                ai += 1;
                phase1_needed = true;
            }
        }
    }

    let mut t = Tableau {
        a,
        cost: vec![T::zero(); cols + 1],
        basis,
        cols,
        rng_state: 0x9E3779B97F4A7C15,
    };

    if phase1_needed {
        // Phase 1: maximize -(sum of artificials).
        for j in (n + n_slack)..cols {
            t.cost[j] = -T::one();
        }
        // Price out the artificial basis.
        for i in 0..m {
            if t.basis[i] >= n + n_slack {
                let row = t.a[i].clone();
                for (v, p) in t.cost.iter_mut().zip(&row) {
                    *v = v.clone() + p.clone();
                }
            }
        }
        t.run(cols)?;
        // Judge feasibility by the actual residual mass on basic
        // artificials; the priced-out cost row drifts in floats.
        let mut art_mass = T::zero();
        for i in 0..m {
            if t.basis[i] >= n + n_slack {
                art_mass = art_mass + t.a[i][cols].clone();
            }
        }
        let mut scale = T::zero();
        for (_, _, rhs) in &rows {
            if *rhs > scale {
                scale = rhs.clone();
            }
        }
        if art_mass > T::feasibility_tol(&scale) {
            return Err(Error::Infeasible);
        }
        // Pivot remaining artificials out of the basis where possible;
        // rows that stay artificial are redundant (rhs must be ~0).
        for i in 0..m {
            if t.basis[i] >= n + n_slack {
                let col = (0..n + n_slack).find(|&j| t.a[i][j].gt_tol() || t.a[i][j].lt_tol());
                if let Some(col) = col {
                    t.pivot(i, col);
                }
            }
        }
    }

    // Phase 2 objective, priced out over the current basis.
    t.cost = vec![T::zero(); cols + 1];
    for j in 0..n {
        t.cost[j] = p.objective[j].clone();
    }
    for i in 0..m {
        let b = t.basis[i];
        if b < n && !t.cost[b].is_zero() {
            let f = t.cost[b].clone();
            let row = t.a[i].clone();
            for (v, pcol) in t.cost.iter_mut().zip(&row) {
                *v = v.clone() - f.clone() * pcol.clone();
            }
        }
    }
    // Keep artificials out of the running in phase 2.
    t.run(n + n_slack)?;

    let mut x = vec![T::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.a[i][cols].clone();
        }
    }
    let mut objective = T::zero();
    for (c, v) in p.objective.iter().zip(&x) {
        objective = objective + c.clone() * v.clone();
    }
    Ok(Solution { objective, x })
}

/// Feasibility of the constraints with `x >= 0` (zero objective).
pub fn feasible<T: Scalar>(constraints: Vec<Constraint<T>>) -> Result<bool, Error> {
    let n = constraints.first().map(|c| c.coeffs.len()).unwrap_or(0);
    let p = Problem {
        objective: vec![T::zero(); n],
        constraints,
    };
    match solve(&p) {
        Ok(_) => Ok(true),
        Err(Error::Infeasible) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Maximizes `objective . u` over free `u` subject to `rows[i] . u <= rhs[i]`
/// by solving the dual `min rhs . y, A^T y = objective, y >= 0`.
///
/// Intended for the extremal-function LPs, where the constraint count dwarfs
/// the variable count. Requires every `rhs[i] >= 0` so that `u = 0` is primal
/// feasible; dual infeasibility then means the primal is unbounded.
pub fn maximize_free_via_dual(
    objective: &[f64],
    rows: &[Vec<f64>],
    rhs: &[f64],
) -> Result<f64, Error> {
    let n = objective.len();
    let m = rows.len();
    assert_eq!(rhs.len(), m);
    debug_assert!(rhs.iter().all(|&b| b >= 0.0));
    let mut constraints = Vec::with_capacity(n);
    for j in 0..n {
        let coeffs: Vec<f64> = (0..m).map(|i| rows[i][j]).collect();
        constraints.push(Constraint {
            coeffs,
            sense: Sense::Eq,
            rhs: objective[j],
        });
    }
    // min rhs.y == max -rhs.y
    let p = Problem {
        objective: rhs.iter().map(|&b| -b).collect(),
        constraints,
    };
    match solve(&p) {
        Ok(sol) => Ok(-sol.objective),
        Err(Error::Infeasible) => Err(Error::Unbounded),
        Err(e) => Err(e),
    }
}
