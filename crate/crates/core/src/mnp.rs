//! Exact minimum-norm point in the convex hull of finitely many rational
//! points (Wolfe's algorithm), and the polytope projection / separating
//! hyperplane helpers built on it.
//!
//! All arithmetic is exact, so the squared distance of a lattice point to a
//! scaled body and the strictness of a separation are certified, not
//! approximated.

use crate::linalg::solve_square;
use crate::rat::{dot, Rat};
use num_traits::{Signed, Zero};

/// Minimum-norm point of `conv(points)` together with its squared norm.
pub fn min_norm_point(points: &[Vec<Rat>]) -> (Vec<Rat>, Rat) {
    assert!(!points.is_empty());
    let mut pts: Vec<Vec<Rat>> = Vec::new();
    for p in points {
        if !pts.contains(p) {
            pts.push(p.clone());
        }
    }

    // Start from the point of smallest norm.
    let start = (0..pts.len())
        .min_by(|&i, &j| dot(&pts[i], &pts[i]).cmp(&dot(&pts[j], &pts[j])))
        .unwrap();
    let mut corral: Vec<usize> = vec![start];
    let mut coeffs: Vec<Rat> = vec![Rat::from_integer(1.into())];
    let mut x: Vec<Rat> = pts[start].clone();

    let max_major = 16 * pts.len() * pts.len() + 64;
    for _ in 0..max_major {
        // Optimality: min_j <x, p_j> >= <x, x>.
        let xx = dot(&x, &x);
        let j = (0..pts.len())
            .min_by(|&a, &b| dot(&x, &pts[a]).cmp(&dot(&x, &pts[b])))
            .unwrap();
        if dot(&x, &pts[j]) >= xx || corral.contains(&j) {
            break;
        }
        corral.push(j);
        coeffs.push(Rat::zero());

        // Minor cycles: pull x to the affine minimizer over the corral,
        // dropping points whose coefficient hits zero.
        loop {
            let lam = match affine_min_coeffs(&pts, &corral) {
                Some(l) => l,
                None => {
                    // Affinely dependent corral; drop the newest point.
                    corral.pop();
                    coeffs.pop();
                    break;
                }
            };
            if lam.iter().all(|l| !l.is_negative()) {
                // The affine minimizer already has hull coordinates; zero
                // coefficients just leave the corral.
                let keep: Vec<usize> = (0..corral.len()).filter(|&i| !lam[i].is_zero()).collect();
                corral = keep.iter().map(|&i| corral[i]).collect();
                coeffs = keep.iter().map(|&i| lam[i].clone()).collect();
                x = combine(&pts, &corral, &coeffs);
                break;
            }
            // Largest step toward the affine minimizer keeping coords >= 0.
            let mut t: Option<Rat> = None;
            for (mu, l) in coeffs.iter().zip(&lam) {
                if l < &Rat::zero() {
                    let cand = mu / (mu - l);
                    t = Some(match t {
                        None => cand,
                        Some(cur) => {
                            if cand < cur {
                                cand
                            } else {
                                cur
                            }
                        }
                    });
                }
            }
            let t = t.expect("a negative coefficient must exist here");
            let one = Rat::from_integer(1.into());
            for (mu, l) in coeffs.iter_mut().zip(&lam) {
                *mu = &*mu * (&one - &t) + l * &t;
            }
            let keep: Vec<usize> = (0..corral.len())
                .filter(|&i| !coeffs[i].is_zero())
                .collect();
            corral = keep.iter().map(|&i| corral[i]).collect();
            coeffs = keep.iter().map(|&i| coeffs[i].clone()).collect();
            x = combine(&pts, &corral, &coeffs);
        }
    }
    let norm2 = dot(&x, &x);
    (x, norm2)
}

fn combine(pts: &[Vec<Rat>], corral: &[usize], coeffs: &[Rat]) -> Vec<Rat> {
    let n = pts[0].len();
    let mut x = vec![Rat::zero(); n];
    for (&i, c) in corral.iter().zip(coeffs) {
        for (xj, pj) in x.iter_mut().zip(&pts[i]) {
            *xj += c * pj;
        }
    }
    x
}

/// Coefficients of the norm minimizer over the affine hull of the corral:
/// bordered Gram system [G 1; 1^T 0] [a; v] = [0; 1].
fn affine_min_coeffs(pts: &[Vec<Rat>], corral: &[usize]) -> Option<Vec<Rat>> {
    let r = corral.len();
    let one = Rat::from_integer(1.into());
    let mut m = vec![vec![Rat::zero(); r + 1]; r + 1];
    for a in 0..r {
        for b in 0..r {
            m[a][b] = dot(&pts[corral[a]], &pts[corral[b]]);
        }
        m[a][r] = one.clone();
        m[r][a] = one.clone();
    }
    let mut rhs = vec![Rat::zero(); r + 1];
    rhs[r] = one;
    let sol = solve_square(&m, &rhs)?;
    Some(sol[..r].to_vec())
}

/// Squared euclidean distance from `w` to `conv(points)` and the projection.
pub fn project(points: &[Vec<Rat>], w: &[Rat]) -> (Rat, Vec<Rat>) {
    let shifted: Vec<Vec<Rat>> = points
        .iter()
        .map(|p| p.iter().zip(w).map(|(a, b)| a - b).collect())
        .collect();
    let (u, norm2) = min_norm_point(&shifted);
    let proj = u.iter().zip(w).map(|(a, b)| a + b).collect();
    (norm2, proj)
}

/// A direction `xi` with `<w, xi> > max_j <p_j, xi>` when `w` lies outside
/// `conv(points)`; `None` when `w` is inside.
pub fn separate(points: &[Vec<Rat>], w: &[Rat]) -> Option<Vec<Rat>> {
    let (norm2, proj) = project(points, w);
    if norm2.is_zero() {
        return None;
    }
    Some(w.iter().zip(&proj).map(|(a, b)| a - b).collect())
}
