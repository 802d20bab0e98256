//! Exact rational scalars used throughout the combinatorial layer.
//!
//! Vertex coordinates are stored as rational coefficients over per-axis
//! square-root scales (see [`crate::polytope::FaceLattice`]), so every
//! squared length the crate compares is an exact `Rat`.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Exact rational scalar. All coordinates and squared lengths fit
/// comfortably in `i64` for the supported families (dim <= 5).
pub type Rat = Ratio<i64>;

/// Shorthand constructor, `rat(p, q) = p/q`.
pub fn rat(p: i64, q: i64) -> Rat {
    Ratio::new(p, q)
}

/// Formats a rational as `p/q` with the denominator always present,
/// e.g. `0/1`, `-3/4`. This is the wire format used by the text exports.
pub fn format_rat(r: Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses the `p/q` wire format produced by [`format_rat`].
pub fn parse_rat(s: &str) -> Option<Rat> {
    let (p, q) = s.split_once('/')?;
    let p: i64 = p.trim().parse().ok()?;
    let q: i64 = q.trim().parse().ok()?;
    if q == 0 {
        return None;
    }
    Some(Ratio::new(p, q))
}

/// `sqrt(coeff^2 * scale)` as a float, preserving the sign of `coeff`.
pub fn scaled_to_f64(coeff: Rat, scale: Rat) -> f64 {
    let c = rat_to_f64(coeff);
    let u = rat_to_f64(scale);
    c * u.sqrt()
}

/// Rational to float without intermediate overflow for our small values.
pub fn rat_to_f64(r: Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Binomial coefficient as `u64`; arguments stay tiny here.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// True if `r` is negative.
pub fn is_negative(r: Rat) -> bool {
    r.is_negative() && !r.is_zero()
}

/// Solves the square system `a * x = b` exactly by Gaussian elimination.
/// Returns `None` when the matrix is singular.
#[allow(clippy::needless_range_loop)]
pub fn solve_linear(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col] / m[col][col];
                for c in col..=n {
                    let sub = factor * m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some((0..n).map(|r| m[r][n] / m[r][r]).collect())
}
