use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::lsq;
use super::sequence::Sequence;
use crate::domain::knot::TorusKnot;
use crate::error::{Error, Result};
use crate::evaluators::evaluate_sum_root_of_unity;

/// Below this spread (relative) a sequence is treated as already converged
/// and reported as a constant instead of being regressed on round-off.
pub const NOISE_FLOOR: f64 = 1e-13;
pub const MIN_SAMPLES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitReport {
    pub limit_estimate: Complex64,
    /// `p` in `|P(N)| ~ N^p`; zero for models without that term.
    pub prefactor_poly_exponent: f64,
    /// Coefficient of the `1/N` term (or the log-constant for power laws).
    pub correction: Complex64,
    pub residual_rms: f64,
    pub condition: f64,
    pub samples: usize,
    pub model: &'static str,
}

pub const MODEL_LOG_OVER_N: &str = "log J_N / N = L + p ln(N)/N + c/N";
pub const MODEL_VALUE: &str = "J_N = V + c/N";
pub const MODEL_POWER: &str = "log |J_N| = p ln(N) + c";
pub const MODEL_CONSTANT: &str = "constant (spread below noise floor)";

fn need(samples: usize) -> Result<()> {
    if samples < MIN_SAMPLES {
        return Err(Error::InsufficientSamples {
            needed: MIN_SAMPLES,
            got: samples,
        });
    }
    Ok(())
}

/// Fits complex data against a real design, real and imaginary parts
/// sharing the coefficients' structure.
fn complex_fit(design: &[Vec<f64>], data: &[Complex64]) -> Result<(Vec<Complex64>, f64, f64)> {
    let re: Vec<f64> = data.iter().map(|z| z.re).collect();
    let im: Vec<f64> = data.iter().map(|z| z.im).collect();
    let sol = lsq::solve(design, &[re, im])?;
    let coef = sol.coefficients[0]
        .iter()
        .zip(&sol.coefficients[1])
        .map(|(&a, &b)| Complex64::new(a, b))
        .collect();
    Ok((coef, sol.residual_rms * core::f64::consts::SQRT_2, sol.condition))
}

fn flat(data: &[Complex64]) -> Option<Complex64> {
    let mean = data.iter().sum::<Complex64>() / data.len() as f64;
    let scale = mean.norm().max(1.0);
    data.iter()
        .all(|z| (z - mean).norm() <= NOISE_FLOOR * scale)
        .then_some(mean)
}

fn constant_report(value: Complex64, samples: usize) -> FitReport {
    FitReport {
        limit_estimate: value,
        prefactor_poly_exponent: 0.0,
        correction: Complex64::new(0.0, 0.0),
        residual_rms: 0.0,
        condition: 1.0,
        samples,
        model: MODEL_CONSTANT,
    }
}

/// Least squares for `log J_N / N = L + p ln(N)/N + c/N`.
pub fn fit_limit(seq: &Sequence) -> Result<FitReport> {
    need(seq.len())?;
    let data: Vec<Complex64> = seq.samples.iter().map(|s| s.log_over_n).collect();
    if let Some(v) = flat(&data) {
        return Ok(constant_report(v, data.len()));
    }
    let design: Vec<Vec<f64>> = seq
        .samples
        .iter()
        .map(|s| {
            let n = s.n as f64;
            vec![1.0, libm::log(n) / n, 1.0 / n]
        })
        .collect();
    let (coef, rms, cond) = complex_fit(&design, &data)?;
    Ok(FitReport {
        limit_estimate: coef[0],
        prefactor_poly_exponent: coef[1].re,
        correction: coef[2],
        residual_rms: rms,
        condition: cond,
        samples: data.len(),
        model: MODEL_LOG_OVER_N,
    })
}

/// Least squares for `J_N = V + c/N`; only meaningful below the real axis.
pub fn fit_value_limit(seq: &Sequence) -> Result<FitReport> {
    if !(seq.r.im < 0.0) {
        return Err(Error::Regime {
            reason: "value limits exist only for Im r < 0",
        });
    }
    need(seq.len())?;
    let data = seq
        .samples
        .iter()
        .map(|s| s.value.to_complex())
        .collect::<Result<Vec<_>>>()?;
    if let Some(v) = flat(&data) {
        return Ok(constant_report(v, data.len()));
    }
    let design: Vec<Vec<f64>> = seq.samples.iter().map(|s| vec![1.0, 1.0 / s.n as f64]).collect();
    let (coef, rms, cond) = complex_fit(&design, &data)?;
    Ok(FitReport {
        limit_estimate: coef[0],
        prefactor_poly_exponent: 0.0,
        correction: coef[1],
        residual_rms: rms,
        condition: cond,
        samples: data.len(),
        model: MODEL_VALUE,
    })
}

/// Least squares for `log|J_N| = p ln N + c` on `(N, log|J_N|)` pairs.
/// `limit_estimate` is the constant `e^c`.
pub fn fit_power_law(points: &[(u32, f64)]) -> Result<FitReport> {
    need(points.len())?;
    let design: Vec<Vec<f64>> = points.iter().map(|&(n, _)| vec![libm::log(n as f64), 1.0]).collect();
    let rhs = vec![points.iter().map(|p| p.1).collect::<Vec<_>>()];
    let sol = lsq::solve(&design, &rhs)?;
    let (p, c) = (sol.coefficients[0][0], sol.coefficients[0][1]);
    Ok(FitReport {
        limit_estimate: Complex64::new(libm::exp(c), 0.0),
        prefactor_poly_exponent: p,
        correction: Complex64::new(c, 0.0),
        residual_rms: sol.residual_rms,
        condition: sol.condition,
        samples: points.len(),
        model: MODEL_POWER,
    })
}

/// Growth exponent of `|J_N(e^{2 pi i/N})|` from the exact `r = 1` sum.
pub fn kashaev_growth_check(knot: &TorusKnot, ns: &[u32]) -> Result<FitReport> {
    if ns.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput("N values must be strictly increasing"));
    }
    if ns.last().map_or(true, |&n| n < 200) {
        return Err(Error::InvalidInput("the largest N must be at least 200"));
    }
    let points = ns
        .iter()
        .map(|&n| Ok((n, evaluate_sum_root_of_unity(knot, n, 1)?.value.log_mag)))
        .collect::<Result<Vec<_>>>()?;
    fit_power_law(&points)
}
