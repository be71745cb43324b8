//! Gauss-Legendre rules and a deterministic adaptive driver.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// An `n`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes by Newton iteration on `P_n` from the Chebyshev-like guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (n as f64 + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            dp = if d != 0.0 { d } else { dp };
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integral of `f` over `[lo, hi]`.
    pub fn integrate<F: FnMut(f64) -> Complex64>(&self, lo: f64, hi: f64, f: F) -> Complex64 {
        self.integrate_with_l1(lo, hi, f).0
    }

    /// Integral of `f` and of `|f|` over `[lo, hi]`.
    pub fn integrate_with_l1<F: FnMut(f64) -> Complex64>(
        &self,
        lo: f64,
        hi: f64,
        mut f: F,
    ) -> (Complex64, f64) {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut l1 = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let v = f(mid + half * x);
            acc += v * *w;
            l1 += v.norm() * *w;
        }
        (acc * half, l1 * half.abs())
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Outcome of [`adaptive`].
#[derive(Clone, Copy, Debug)]
pub struct Quadrature {
    pub value: Complex64,
    /// Sum of the per-panel disagreements between one rule and its halves.
    pub abs_error: f64,
    pub nodes: usize,
}

/// Stopping rule for [`adaptive`].
#[derive(Clone, Copy, Debug)]
pub struct Tolerance {
    /// Target relative to `scale`, spread over the interval by width.
    pub rel: f64,
    /// Expected size of the integral.
    pub scale: f64,
    /// Relative accuracy of the integrand values themselves; differences
    /// below `noise * int |f|` on a panel cannot be resolved.
    pub noise: f64,
}

/// Adaptive composite integration over `[lo, hi]`.
///
/// The interval is cut into `panels` equal pieces. A panel is accepted when
/// the rule on the whole panel and on its two halves agree to
/// `rel * scale * width / (hi - lo)`, or to the noise level of the
/// integrand; otherwise both halves are refined. Panels are visited left to
/// right, so the result does not depend on anything but the inputs.
pub fn adaptive<F>(
    rule: &GaussLegendre,
    lo: f64,
    hi: f64,
    panels: usize,
    tol: Tolerance,
    max_nodes: usize,
    mut f: F,
) -> Result<Quadrature>
where
    F: FnMut(f64) -> Complex64,
{
    let panels = panels.max(1);
    let width = hi - lo;
    let mut value = Complex64::new(0.0, 0.0);
    let mut abs_error = 0.0;
    let mut nodes = 0usize;
    let mut stack: Vec<(f64, f64, Complex64)> = Vec::new();
    for p in (0..panels).rev() {
        let a = lo + width * p as f64 / panels as f64;
        let b = lo + width * (p + 1) as f64 / panels as f64;
        let whole = rule.integrate(a, b, &mut f);
        nodes += rule.len();
        stack.push((a, b, whole));
    }
    // the stack is popped leftmost first
    while let Some((a, b, whole)) = stack.pop() {
        let m = 0.5 * (a + b);
        let (left, l1_left) = rule.integrate_with_l1(a, m, &mut f);
        let (right, l1_right) = rule.integrate_with_l1(m, b, &mut f);
        nodes += 2 * rule.len();
        let diff = (whole - (left + right)).norm();
        let local = (tol.rel * tol.scale * (b - a) / width).max(tol.noise * (l1_left + l1_right));
        let too_narrow = (b - a) <= 1e-13 * width.abs().max(1.0);
        if diff <= local || too_narrow {
            value += left + right;
            abs_error += diff;
        } else {
            if nodes > max_nodes {
                return Err(Error::NoConvergence { nodes, tol: tol.rel });
            }
            stack.push((m, b, right));
            stack.push((a, m, left));
        }
    }
    Ok(Quadrature {
        value,
        abs_error,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two_and_polynomials_are_exact() {
        let rule = GaussLegendre::new(16);
        let s: f64 = rule.weights().iter().sum();
        assert!((s - 2.0).abs() < 1e-14);
        // x^30 integrates to 2/31 exactly with 16 nodes
        let v = rule.integrate(-1.0, 1.0, |x| Complex64::new(libm::pow(x, 30.0), 0.0));
        assert!((v.re - 2.0 / 31.0).abs() < 1e-15);
    }

    #[test]
    fn nodes_are_distinct_and_symmetric() {
        let rule = GaussLegendre::new(16);
        let mut xs: Vec<f64> = rule.nodes().to_vec();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for i in 0..8 {
            assert!((xs[i] + xs[15 - i]).abs() < 1e-15);
        }
        assert!(xs.windows(2).all(|w| w[1] - w[0] > 1e-3));
    }

    #[test]
    fn adaptive_handles_a_narrow_peak() {
        let rule = GaussLegendre::new(16);
        // Lorentzian of width 1e-3: integral over [-1, 1] is 2 atan(1000)
        let eps = 1e-3;
        let tol = Tolerance { rel: 1e-12, scale: 3.0, noise: 0.0 };
        let q = adaptive(&rule, -1.0, 1.0, 4, tol, 1 << 20, |x| {
            Complex64::new(eps / (x * x + eps * eps), 0.0)
        })
        .unwrap();
        let exact = 2.0 * libm::atan(1.0 / eps);
        assert!((q.value.re - exact).abs() < 1e-11 * exact);
    }

    #[test]
    fn adaptive_reports_no_convergence() {
        let rule = GaussLegendre::new(16);
        let tol = Tolerance { rel: 1e-14, scale: 1.0, noise: 0.0 };
        let r = adaptive(&rule, 0.0, 1.0, 1, tol, 100, |x| {
            Complex64::new(libm::sin(1e4 * x), 0.0)
        });
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }
}
