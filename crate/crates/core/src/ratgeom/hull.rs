//! Exact volume of a vertex-represented polytope via recursive boundary
//! triangulation (dimension <= 4), with a flagged Monte Carlo fallback for
//! higher dimensions.

use super::{points_contain, Body, Point, Volume};
use crate::linalg::{self, det};
use crate::rat::{dot, primitive, Rat};
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

/// Convex hull of 2D points in counterclockwise order (monotone chain,
/// strict turns, exact arithmetic). Collinear inputs come back as the two
/// endpoints.
pub fn chain2d(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: &Point, a: &Point, b: &Point| -> Rat {
        (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
    };
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

pub fn affine_rank(points: &[Point]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(rows)
}

pub fn volume(body: &Body) -> Volume {
    let n = body.dim();
    let ext = body.extreme_points();
    if affine_rank(&ext) < n {
        return Volume {
            value: Rat::zero(),
            approximate: false,
        };
    }
    if n <= 4 {
        Volume {
            value: exact_volume(&ext, n),
            approximate: false,
        }
    } else {
        Volume {
            value: monte_carlo_volume(&ext, n),
            approximate: true,
        }
    }
}

fn exact_volume(ext: &[Point], n: usize) -> Rat {
    // Fan from the vertex centroid (a relative-interior point) over a
    // triangulated boundary; each pyramid cell contributes |det| / n!.
    let count = Rat::from_integer((ext.len() as i64).into());
    let centroid: Point = (0..n)
        .map(|i| {
            ext.iter()
                .map(|v| v[i].clone())
                .fold(Rat::zero(), |a, b| a + b)
                / &count
        })
        .collect();
    let idx: Vec<usize> = (0..ext.len()).collect();
    let coords: Vec<usize> = (0..n).collect();
    let cells = boundary_triangulation(ext, &idx, &coords);
    let nfact: Rat = Rat::from_integer((1..=n as i64).product::<i64>().into());
    let mut total = Rat::zero();
    for cell in cells {
        let m: Vec<Vec<Rat>> = cell
            .iter()
            .map(|&i| {
                ext[i]
                    .iter()
                    .zip(&centroid)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        total += det(m).abs();
    }
    total / nfact
}

fn hull_order_2d(pts: &[Point], idx: &[usize], coords: &[usize]) -> Vec<usize> {
    let proj: Vec<Point> = idx
        .iter()
        .map(|&i| vec![pts[i][coords[0]].clone(), pts[i][coords[1]].clone()])
        .collect();
    let hull = chain2d(&proj);
    let find = |p: &Point| -> usize {
        idx.iter()
            .copied()
            .find(|&i| pts[i][coords[0]] == p[0] && pts[i][coords[1]] == p[1])
            .expect("hull point came from the input")
    };
    hull.iter().map(find).collect()
}

/// Boundary simplices (`coords.len()` points each) of the hull of
/// `pts[idx]` viewed in the coordinate subset `coords`.
fn boundary_triangulation(pts: &[Point], idx: &[usize], coords: &[usize]) -> Vec<Vec<usize>> {
    let d = coords.len();
    match d {
        1 => {
            let c = coords[0];
            let lo = *idx
                .iter()
                .min_by(|&&a, &&b| pts[a][c].cmp(&pts[b][c]))
                .unwrap();
            let hi = *idx
                .iter()
                .max_by(|&&a, &&b| pts[a][c].cmp(&pts[b][c]))
                .unwrap();
            vec![vec![lo], vec![hi]]
        }
        2 => {
            let h = hull_order_2d(pts, idx, coords);
            (0..h.len()).map(|k| vec![h[k], h[(k + 1) % h.len()]]).collect()
        }
        _ => {
            let facets = facet_hyperplanes(pts, idx, coords);
            let mut cells = Vec::new();
            for (normal, members) in facets {
                // Project the facet along the largest normal component; the
                // projection is an affine bijection on the facet.
                let drop = (0..coords.len())
                    .max_by(|&a, &b| normal[a].abs().cmp(&normal[b].abs()))
                    .unwrap();
                let sub: Vec<usize> = coords
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != drop)
                    .map(|(_, &c)| c)
                    .collect();
                cells.extend(triangulate(pts, &members, &sub));
            }
            cells
        }
    }
}

/// Full triangulation of the hull of `pts[idx]` in the coordinate subset
/// `coords` (where it must be full-dimensional): index simplices of
/// `coords.len() + 1` points each.
fn triangulate(pts: &[Point], idx: &[usize], coords: &[usize]) -> Vec<Vec<usize>> {
    let d = coords.len();
    match d {
        1 => {
            let ends = boundary_triangulation(pts, idx, coords);
            vec![vec![ends[0][0], ends[1][0]]]
        }
        2 => {
            let h = hull_order_2d(pts, idx, coords);
            (1..h.len().saturating_sub(1))
                .map(|k| vec![h[0], h[k], h[k + 1]])
                .collect()
        }
        _ => {
            // fan from a vertex; boundary cells containing the apex have
            // zero determinant and drop out of the volume sum
            let apex = idx[0];
            boundary_triangulation(pts, idx, coords)
                .into_iter()
                .map(|mut cell| {
                    cell.insert(0, apex);
                    cell
                })
                .collect()
        }
    }
}

/// All facet hyperplanes of the hull of `pts[idx]` within the coordinate
/// subset `coords`: brute-force over d-subsets with one-side checks.
/// Returns (inner normal representative, member indices) per facet.
fn facet_hyperplanes(
    pts: &[Point],
    idx: &[usize],
    coords: &[usize],
) -> Vec<(Vec<Rat>, Vec<usize>)> {
    let d = coords.len();
    let get = |i: usize| -> Vec<Rat> { coords.iter().map(|&c| pts[i][c].clone()).collect() };
    let mut seen: BTreeMap<(Vec<Rat>, Rat), Vec<usize>> = BTreeMap::new();
    let k = idx.len();
    let mut sel = vec![0usize; d];
    let mut subsets = Vec::new();
    collect_subsets(k, d, 0, 0, &mut sel, &mut subsets);
    for sub in subsets {
        let base = get(idx[sub[0]]);
        let rows: Vec<Vec<Rat>> = sub[1..]
            .iter()
            .map(|&j| {
                get(idx[j])
                    .iter()
                    .zip(&base)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let Some(normal) = linalg::null_vector(&rows) else {
            continue;
        };
        let normal = primitive(&normal);
        let offset = dot(&normal, &base);
        // one-side test
        let mut pos = false;
        let mut neg = false;
        for &i in idx {
            let v = dot(&normal, &get(i)) - &offset;
            if v.is_positive() {
                pos = true;
            } else if v.is_negative() {
                neg = true;
            }
            if pos && neg {
                break;
            }
        }
        if pos && neg {
            continue;
        }
        // canonical key: orient so that the polytope lies on the <= side
        let (normal, offset) = if pos {
            (
                normal.iter().map(|x| -x).collect::<Vec<Rat>>(),
                -offset,
            )
        } else {
            (normal, offset)
        };
        let members: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&i| dot(&normal, &get(i)) == offset)
            .collect();
        seen.entry((normal, offset)).or_insert(members);
    }
    seen.into_iter()
        .map(|((normal, _), members)| (normal, members))
        .collect()
}

fn collect_subsets(
    k: usize,
    d: usize,
    start: usize,
    pos: usize,
    sel: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == d {
        out.push(sel.clone());
        return;
    }
    for i in start..k {
        sel[pos] = i;
        collect_subsets(k, d, i + 1, pos + 1, sel, out);
    }
}

/// Facet inequalities `<normal, x> <= offset` of a full-dimensional hull
/// (dimension <= 4 practical; brute-force hyperplane enumeration).
pub(crate) fn facet_inequalities(ext: &[Point], n: usize) -> Vec<(Vec<Rat>, Rat)> {
    let idx: Vec<usize> = (0..ext.len()).collect();
    let coords: Vec<usize> = (0..n).collect();
    facet_hyperplanes(ext, &idx, &coords)
        .into_iter()
        .map(|(normal, members)| {
            let offset = dot(&normal, &ext[members[0]]);
            (normal, offset)
        })
        .collect()
}

fn monte_carlo_volume(ext: &[Point], n: usize) -> Rat {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let hi: Vec<f64> = (0..n)
        .map(|i| {
            ext.iter()
                .map(|v| v[i].to_f64().unwrap())
                .fold(0.0f64, f64::max)
        })
        .collect();
    let box_vol: f64 = hi.iter().product();
    if box_vol == 0.0 {
        return Rat::zero();
    }
    let samples = 4000;
    let mut inside = 0usize;
    for _ in 0..samples {
        let p: Vec<Rat> = hi
            .iter()
            .map(|&h| Rat::from_float(rng.gen_range(0.0..=h)).unwrap())
            .collect();
        if points_contain(ext, &p).unwrap_or(false) {
            inside += 1;
        }
    }
    let frac = inside as f64 / samples as f64;
    Rat::from_float(frac * box_vol).unwrap_or_else(Rat::zero)
}
