//! Independent geometric oracles for the integration suite. Everything
//! here works from raw vertex coordinates and rebuilds structure by brute
//! force, bypassing the face-lattice bookkeeping under test.

#![allow(dead_code)]
// Elimination loops below index rows by pivot column; iterators obscure that.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

const EPS: f64 = 1e-9;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Affine rank of a point set: rank of the difference matrix under
/// Gaussian elimination with partial pivoting.
pub fn affine_rank(points: &[Vec<f64>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let d = points[0].len();
    let mut rows: Vec<Vec<f64>> = points[1..]
        .iter()
        .map(|p| (0..d).map(|j| p[j] - points[0][j]).collect())
        .collect();
    let mut rank = 0;
    for col in 0..d {
        let Some(best) = (rank..rows.len())
            .max_by(|&i, &j| rows[i][col].abs().partial_cmp(&rows[j][col].abs()).unwrap())
        else {
            break;
        };
        if rows[best][col].abs() < EPS {
            continue;
        }
        rows.swap(rank, best);
        for r in rank + 1..rows.len() {
            let f = rows[r][col] / rows[rank][col];
            for c in col..d {
                rows[r][c] -= f * rows[rank][c];
            }
        }
        rank += 1;
    }
    rank
}

/// Hyperplane `a . x = b` through the given points, provided they span
/// exactly a hyperplane of the ambient space; `a` comes out unit-length.
fn hyperplane(points: &[Vec<f64>]) -> Option<(Vec<f64>, f64)> {
    let d = points[0].len();
    let mut rows: Vec<Vec<f64>> = points[1..]
        .iter()
        .map(|p| (0..d).map(|j| p[j] - points[0][j]).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..d {
        let Some(best) = (r..rows.len())
            .max_by(|&i, &j| rows[i][col].abs().partial_cmp(&rows[j][col].abs()).unwrap())
        else {
            break;
        };
        if rows[best][col].abs() < EPS {
            continue;
        }
        rows.swap(r, best);
        for rr in r + 1..rows.len() {
            let f = rows[rr][col] / rows[r][col];
            for c in col..d {
                rows[rr][c] -= f * rows[r][c];
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    if pivots.len() + 1 != d {
        return None;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free = (0..d).find(|c| !pivot_cols.contains(c))?;
    let mut a = vec![0.0; d];
    a[free] = 1.0;
    for &(row, col) in pivots.iter().rev() {
        let s: f64 = (col + 1..d).map(|c| rows[row][c] * a[c]).sum();
        a[col] = -s / rows[row][col];
    }
    let norm = dot(&a, &a).sqrt();
    for ai in &mut a {
        *ai /= norm;
    }
    let b = dot(&a, &points[0]);
    Some((a, b))
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// f-vector of the convex hull of a full-dimensional point set whose
/// members are all extreme, for ambient dimension 2 through 4. Facets are
/// found by supporting-hyperplane enumeration over d-subsets; the lower
/// faces follow by closing the facet vertex sets under intersection and
/// grading each face by affine rank.
pub fn hull_f_vector(points: &[Vec<f64>]) -> Vec<usize> {
    let d = points[0].len();
    assert!((2..=4).contains(&d), "oracle handles ambient dim 2..=4");
    let n = points.len();
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut combo: Vec<usize> = (0..d).collect();
    loop {
        let subset: Vec<Vec<f64>> = combo.iter().map(|&i| points[i].clone()).collect();
        if let Some((a, b)) = hyperplane(&subset) {
            let sides: Vec<f64> = points.iter().map(|p| dot(&a, p) - b).collect();
            let pos = sides.iter().any(|&s| s > EPS);
            let neg = sides.iter().any(|&s| s < -EPS);
            if !(pos && neg) {
                facets.insert((0..n).filter(|&i| sides[i].abs() <= EPS).collect());
            }
        }
        if !next_combination(&mut combo, n) {
            break;
        }
    }
    // Every proper face is an intersection of the facets containing it.
    let mut faces: BTreeSet<Vec<usize>> = facets.clone();
    loop {
        let mut fresh: Vec<Vec<usize>> = Vec::new();
        for f in &faces {
            for g in &facets {
                let meet: Vec<usize> = f
                    .iter()
                    .copied()
                    .filter(|i| g.binary_search(i).is_ok())
                    .collect();
                if !meet.is_empty() && meet != *f && !faces.contains(&meet) {
                    fresh.push(meet);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        faces.extend(fresh);
    }
    let mut f = vec![0usize; d];
    for face in &faces {
        let pts: Vec<Vec<f64>> = face.iter().map(|&i| points[i].clone()).collect();
        f[affine_rank(&pts)] += 1;
    }
    f
}

/// Winding number of a closed polygonal loop around `pt`, by summing the
/// signed sightline angles. Reliable away from the loop itself; callers
/// skip samples near the boundary.
pub fn winding_by_angle(path: &[[f64; 2]], pt: [f64; 2]) -> i32 {
    let mut total = 0.0f64;
    for i in 0..path.len() {
        let a = path[i];
        let b = path[(i + 1) % path.len()];
        let va = [a[0] - pt[0], a[1] - pt[1]];
        let vb = [b[0] - pt[0], b[1] - pt[1]];
        let cross = va[0] * vb[1] - va[1] * vb[0];
        let dot = va[0] * vb[0] + va[1] * vb[1];
        total += cross.atan2(dot);
    }
    (total / std::f64::consts::TAU).round() as i32
}

/// Distance from `pt` to the segment `ab`.
pub fn segment_distance(a: [f64; 2], b: [f64; 2], pt: [f64; 2]) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [pt[0] - a[0], pt[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = ((ap[0] * ab[0] + ap[1] * ab[1]) / len2).clamp(0.0, 1.0);
    let q = [a[0] + t * ab[0], a[1] + t * ab[1]];
    ((pt[0] - q[0]).powi(2) + (pt[1] - q[1]).powi(2)).sqrt()
}
