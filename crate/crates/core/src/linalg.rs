#![allow(clippy::needless_range_loop)]

//! Exact dense linear algebra over `BigRational`: Gaussian elimination for
//! rank, determinants, square solves, and one-dimensional null spaces.

use crate::rat::Rat;
use num_traits::Zero;

/// Row-reduces `m` in place and returns its rank.
pub fn rank(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for j in c..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut d = Rat::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(c, p);
            d = -d;
        }
        let pivot = m[c][c].clone();
        d *= &pivot;
        for i in (c + 1)..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for j in c..n {
                    let sub = &f * &m[c][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
    }
    d
}

/// Solves `a x = b` for square `a`; `None` when `a` is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &pivot;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let sub = &f * &m[c][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// A nonzero vector orthogonal to all rows of `m`, for `m` of rank
/// `cols - 1`. Returns `None` when the null space is not one-dimensional.
pub fn null_vector(m: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let rows = m.len();
    if rows == 0 {
        return None;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for j in c..cols {
            a[r][j] = &a[r][j] / &pivot;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let sub = &f * &a[r][j];
                    a[i][j] = &a[i][j] - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if r != cols - 1 {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut x = vec![Rat::zero(); cols];
    x[free] = Rat::from_integer(1.into());
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = -a[row][free].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    #[test]
    fn det_and_rank() {
        let m = vec![vec![rat_i(1), rat_i(2)], vec![rat_i(3), rat_i(4)]];
        assert_eq!(det(m.clone()), rat_i(-2));
        assert_eq!(rank(m), 2);
        let s = vec![vec![rat_i(1), rat_i(2)], vec![rat_i(2), rat_i(4)]];
        assert_eq!(det(s.clone()), rat_i(0));
        assert_eq!(rank(s), 1);
    }

    #[test]
    fn solve_2x2() {
        let a = vec![vec![rat_i(2), rat_i(1)], vec![rat_i(1), rat_i(-1)]];
        let b = vec![rat_i(5), rat_i(1)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![rat_i(2), rat_i(1)]);
    }

    #[test]
    fn null_vector_of_plane() {
        // orthogonal to (1,1,0) and (0,1,1)
        let m = vec![
            vec![rat_i(1), rat_i(1), rat_i(0)],
            vec![rat_i(0), rat_i(1), rat_i(1)],
        ];
        let v = null_vector(&m).unwrap();
        assert_eq!(crate::rat::dot(&m[0], &v), rat(0, 1));
        assert_eq!(crate::rat::dot(&m[1], &v), rat(0, 1));
        assert!(!crate::rat::is_zero_vec(&v));
    }
}
