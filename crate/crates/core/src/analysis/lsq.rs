//! Small dense least squares: Householder QR for the solve, a Jacobi
//! eigen-solve of the normal matrix for the condition number.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Designs with a larger 2-norm condition number are rejected.
pub const MAX_CONDITION: f64 = 1e12;

#[derive(Clone, Debug)]
pub struct Solution {
    /// One coefficient vector per right-hand side.
    pub coefficients: Vec<Vec<f64>>,
    /// Root-mean-square residual over all right-hand sides.
    pub residual_rms: f64,
    pub condition: f64,
}

/// Minimises `|A x - b|` for each `b` in `rhs`. `design` holds the rows of
/// `A`, each of length `cols`.
pub fn solve(design: &[Vec<f64>], rhs: &[Vec<f64>]) -> Result<Solution> {
    let m = design.len();
    let n = design.first().map_or(0, Vec::len);
    if n == 0 || m < n {
        return Err(Error::InsufficientSamples { needed: n.max(1), got: m });
    }
    let condition = condition_number(design, n);
    if !(condition <= MAX_CONDITION) {
        return Err(Error::IllConditioned { cond: condition });
    }

    // column-major copy for the reflections
    let mut a: Vec<Vec<f64>> = (0..n).map(|j| design.iter().map(|row| row[j]).collect()).collect();
    let mut bs: Vec<Vec<f64>> = rhs.to_vec();
    for k in 0..n {
        let norm = libm::sqrt(a[k][k..].iter().map(|x| x * x).sum::<f64>());
        if norm == 0.0 {
            return Err(Error::IllConditioned { cond: f64::INFINITY });
        }
        let alpha = if a[k][k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = a[k][k..].to_vec();
        v[0] -= alpha;
        let vv: f64 = v.iter().map(|x| x * x).sum();
        let reflect = |col: &mut [f64]| {
            let dot: f64 = v.iter().zip(col.iter()).map(|(x, y)| x * y).sum();
            let s = 2.0 * dot / vv;
            for (c, x) in col.iter_mut().zip(&v) {
                *c -= s * x;
            }
        };
        for col in a.iter_mut().skip(k) {
            reflect(&mut col[k..]);
        }
        for b in bs.iter_mut() {
            reflect(&mut b[k..]);
        }
    }

    let mut coefficients = Vec::with_capacity(bs.len());
    let mut sq = 0.0;
    for b in &bs {
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = b[i];
            for j in i + 1..n {
                s -= a[j][i] * x[j];
            }
            x[i] = s / a[i][i];
        }
        sq += b[n..].iter().map(|r| r * r).sum::<f64>();
        coefficients.push(x);
    }
    let count = (m * bs.len()).max(1) as f64;
    Ok(Solution {
        coefficients,
        residual_rms: libm::sqrt(sq / count),
        condition,
    })
}

/// `sqrt(lambda_max / lambda_min)` of `A^T A`.
pub fn condition_number(design: &[Vec<f64>], n: usize) -> f64 {
    let mut g = vec![vec![0.0; n]; n];
    for row in design {
        for i in 0..n {
            for j in 0..n {
                g[i][j] += row[i] * row[j];
            }
        }
    }
    let eig = symmetric_eigenvalues(g);
    let max = eig.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = eig.iter().cloned().fold(f64::INFINITY, f64::min);
    if min <= 0.0 {
        return f64::INFINITY;
    }
    libm::sqrt(max / min)
}

/// Cyclic Jacobi rotations; fine for the 2x2 and 3x3 normal matrices here.
fn symmetric_eigenvalues(mut g: Vec<Vec<f64>>) -> Vec<f64> {
    let n = g.len();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| g[i][j] * g[i][j])
            .sum();
        let diag: f64 = (0..n).map(|i| g[i][i] * g[i][i]).sum();
        if off <= 1e-30 * diag {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if g[p][q] == 0.0 {
                    continue;
                }
                let theta = (g[q][q] - g[p][p]) / (2.0 * g[p][q]);
                let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for row in g.iter_mut() {
                    let (gkp, gkq) = (row[p], row[q]);
                    row[p] = c * gkp - s * gkq;
                    row[q] = s * gkp + c * gkq;
                }
                let (upper, lower) = g.split_at_mut(q);
                for (gpk, gqk) in upper[p].iter_mut().zip(lower[0].iter_mut()) {
                    let (x, y) = (*gpk, *gqk);
                    *gpk = c * x - s * y;
                    *gqk = s * x + c * y;
                }
            }
        }
    }
    (0..n).map(|i| g[i][i]).collect()
}
