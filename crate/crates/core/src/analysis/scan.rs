use alloc::vec::Vec;

use num_complex::Complex64;

use super::fit::{fit_limit, FitReport};
use super::sequence::collect_sequence;
use crate::asymptotics::predict_growth_positive;
use crate::domain::knot::TorusKnot;
use crate::error::{Error, Result};
use crate::evaluators::Method;
use crate::logc::wrap_phase;

/// One `Im r` of the scan across the real axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanRow {
    pub im_r: f64,
    pub r: Complex64,
    /// Fitted limit of `log J_N / N`.
    pub fitted: Complex64,
    /// `0` below the axis, `(1 - 1/(2ab r) - ab r/2) pi i` above it.
    pub predicted: Complex64,
    /// `|fitted - predicted|` with the imaginary part taken mod `2 pi`.
    pub distance: f64,
    pub fit: FitReport,
}

/// `|z - w|` after reducing `Im(z - w)` to `(-pi, pi]`: the imaginary part of
/// `log J_N / N` is only defined mod `2 pi` for integer `N`.
pub fn wrapped_distance(z: Complex64, w: Complex64) -> f64 {
    let d = z - w;
    libm::hypot(d.re, wrap_phase(d.im))
}

pub fn predicted_log_limit(knot: &TorusKnot, r: Complex64) -> Result<Complex64> {
    if r.im < 0.0 {
        crate::domain::knot::SpectralParameter::new(r).check_asymptotic_regime(knot)?;
        Ok(Complex64::new(0.0, 0.0))
    } else {
        predict_growth_positive(knot, r)
    }
}

pub fn scan_row(knot: &TorusKnot, re_r: f64, im_r: f64, ns: &[u32], method: Method) -> Result<ScanRow> {
    if im_r == 0.0 {
        return Err(Error::InvalidInput("the scan grid must not contain Im r = 0"));
    }
    let r = Complex64::new(re_r, im_r);
    let predicted = predicted_log_limit(knot, r)?;
    let fit = fit_limit(&collect_sequence(knot, r, ns, method)?)?;
    Ok(ScanRow {
        im_r,
        r,
        fitted: fit.limit_estimate,
        predicted,
        distance: wrapped_distance(fit.limit_estimate, predicted),
        fit,
    })
}

/// Fitted and predicted `lim log J_N / N` along `r = re_r + i y`.
pub fn discontinuity_scan(
    knot: &TorusKnot,
    re_r: f64,
    im_grid: &[f64],
    ns: &[u32],
    method: Method,
) -> Result<Vec<ScanRow>> {
    if im_grid.is_empty() {
        return Err(Error::InvalidInput("the scan grid is empty"));
    }
    if im_grid.contains(&0.0) {
        return Err(Error::InvalidInput("the scan grid must not contain Im r = 0"));
    }
    im_grid.iter().map(|&y| scan_row(knot, re_r, y, ns, method)).collect()
}
