//! Saddle point plus residues: the large-`N` expansion of the contour
//! integral and the two limit formulas it implies.
//!
//! Shifting the line through the origin to the parallel line through the
//! saddle `pi r i` crosses the poles `k pi i/(ab)` with
//! `0 < k < ab |r| h(theta)`. Each crossed pole contributes `2 pi i` times
//! its residue, which is what [`ResidueTerm`] stores (without the `2 pi i`).

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::{Complex, Complex64};

use crate::cmath;
use crate::domain::functions::{h_theta, phi_factor, saddle_point, tau};
use crate::domain::knot::{SpectralParameter, TorusKnot};
use crate::error::{Error, Result};
use crate::logc::LogComplex;
use crate::real::{turns_of_ratio, Real};

/// Minimum distance of the pole bound `ab |r| h(theta)` from an admissible `k`.
pub const BOUNDARY_GUARD: f64 = 1e-6;
/// Real parts of exponents closer than this count as tied.
pub const TIE_GUARD: f64 = 1e-12;

/// Residue of `e^{N f} tau` at `k pi i/(ab)`, as `prefactor * e^{N exponent}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidueTerm {
    pub k: i64,
    /// `k pi i (1 - k/(2 ab r))`.
    pub exponent: Complex64,
    /// `(-1)^k 2 sinh(k pi i/a) sinh(k pi i/b) / (ab)`.
    pub prefactor: Complex64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominant {
    Saddle,
    Residue(i64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticExpansion {
    pub knot: TorusKnot,
    pub r: Complex64,
    /// `ab pi r i / 2`.
    pub saddle_exponent: Complex64,
    pub residues: Vec<ResidueTerm>,
    pub dominant: Dominant,
}

impl AsymptoticExpansion {
    pub fn new(knot: &TorusKnot, r: Complex64) -> Result<Self> {
        let residues = enumerate_residues(knot, r)?;
        let dominant = argmax(knot, r, &residues)?;
        Ok(AsymptoticExpansion {
            knot: *knot,
            r,
            saddle_exponent: saddle_exponent(knot, r),
            residues,
            dominant,
        })
    }

    /// `pi sqrt(2r/(abN)) e^{pi i/4} tau(pi r i)`.
    pub fn saddle_prefactor(&self, n: u32) -> Result<Complex64> {
        saddle_prefactor(&self.knot, self.r, n)
    }

    pub fn dominant_exponent(&self) -> Complex64 {
        match self.dominant {
            Dominant::Saddle => self.saddle_exponent,
            Dominant::Residue(k) => residue_exponent(&self.knot, self.r, k),
        }
    }
}

fn saddle_exponent(knot: &TorusKnot, r: Complex64) -> Complex64 {
    Complex64::new(0.0, knot.ab() as f64 * PI / 2.0) * r
}

fn residue_exponent(knot: &TorusKnot, r: Complex64, k: i64) -> Complex64 {
    let kf = k as f64;
    Complex64::new(0.0, kf * PI) * (1.0 - kf / (2.0 * knot.ab() as f64 * r))
}

/// `(-1)^k 2 (i sin(k pi/a)) (i sin(k pi/b)) / (ab)`, which is real.
fn residue_prefactor<T: Real>(knot: &TorusKnot, k: i64) -> T {
    let kt = T::from_i64(k);
    let (sa, _) = (kt * T::pi() / T::from_i64(knot.a() as i64)).sin_cos();
    let (sb, _) = (kt * T::pi() / T::from_i64(knot.b() as i64)).sin_cos();
    let sign = if k % 2 == 0 { -2.0 } else { 2.0 };
    T::from_f64(sign) * sa * sb / T::from_i64(knot.ab() as i64)
}

/// Poles between the original line and the one through the saddle.
pub fn enumerate_residues(knot: &TorusKnot, r: Complex64) -> Result<Vec<ResidueTerm>> {
    let param = SpectralParameter::new(r);
    param.check_asymptotic_regime(knot)?;
    let bound = knot.ab() as f64 * param.modulus * h_theta(param.theta)?;
    let mut out = Vec::new();
    let top = libm::ceil(bound + BOUNDARY_GUARD) as i64;
    for k in 1..=top {
        if !knot.is_pole_index(k) {
            continue;
        }
        if (bound - k as f64).abs() < BOUNDARY_GUARD {
            return Err(Error::BoundaryResidue { k, bound });
        }
        if (k as f64) < bound {
            out.push(ResidueTerm {
                k,
                exponent: residue_exponent(knot, r, k),
                prefactor: Complex64::new(residue_prefactor(knot, k), 0.0),
            });
        }
    }
    Ok(out)
}

/// `prefactor * e^{N exponent}` with the phase reduced in exact turns:
/// `N k/2 - N k^2 Re(1/r)/(4ab)`.
pub fn residue_term<T: Real>(knot: &TorusKnot, r: Complex<T>, k: i64, n: u32) -> LogComplex<T> {
    let ab = knot.ab() as i64;
    let nn = n as i64;
    let inv = cmath::recip(r);
    let kt = T::from_i64(k);
    // Re of N k pi i (1 - k/(2ab r)) is N k^2 pi Im(1/r) / (2ab)
    let log_mag = T::from_i64(nn) * kt * kt * T::pi() * inv.im / T::from_i64(2 * ab);
    let half_turns = if (nn * k).rem_euclid(2) == 0 { T::zero() } else { T::from_f64(0.5) };
    let turns = half_turns - turns_of_ratio(inv.re, nn * k * k, 4 * ab);
    let expo = LogComplex::new(log_mag, T::two_pi() * turns);
    LogComplex::from_real(residue_prefactor::<T>(knot, k)) * expo
}

fn saddle_prefactor<T: Real>(knot: &TorusKnot, r: Complex<T>, n: u32) -> Result<Complex<T>> {
    let tau_s = tau(knot, saddle_point(r))?;
    let ab_n = T::from_i64(knot.ab() as i64 * n as i64);
    let root = cmath::sqrt(cmath::scale(r, T::from_f64(2.0) / ab_n));
    let eighth = cmath::exp(Complex::new(T::zero(), T::pi() / T::from_f64(4.0)));
    Ok(cmath::scale(root * eighth * tau_s, T::pi()))
}

/// Leading steepest-descent contribution
/// `pi sqrt(2r/(abN)) e^{pi i/4} tau(pi r i) e^{N ab pi r i/2}`.
pub fn saddle_term<T: Real>(knot: &TorusKnot, r: Complex<T>, n: u32) -> Result<LogComplex<T>> {
    let pre = saddle_prefactor(knot, r, n)?;
    let ab = knot.ab() as i64;
    let nn = n as i64;
    let log_mag = -T::from_i64(nn * ab) * T::pi() * r.im / T::from_f64(2.0);
    let turns = turns_of_ratio(r.re, nn * ab, 4);
    Ok(LogComplex::from_complex(pre) * LogComplex::new(log_mag, T::two_pi() * turns))
}

/// `Phi(N) (saddle + 2 pi i sum of residues)`, directly comparable to `J_N`.
pub fn asymptotic_value<T: Real>(knot: &TorusKnot, r: Complex<T>, n: u32) -> Result<LogComplex<T>> {
    let residues = enumerate_residues(knot, cmath::lower(r))?;
    let two_pi_i = LogComplex::new(T::two_pi().ln(), T::pi() / T::from_f64(2.0));
    let mut terms = Vec::with_capacity(residues.len() + 1);
    terms.push(saddle_term(knot, r, n)?);
    for res in &residues {
        terms.push(two_pi_i * residue_term(knot, r, res.k, n));
    }
    Ok(phi_factor(knot, r, n)? * LogComplex::sum(terms))
}

/// Largest real part among the saddle and the enumerated residues.
fn argmax(knot: &TorusKnot, r: Complex64, residues: &[ResidueTerm]) -> Result<Dominant> {
    let mut ranked: Vec<(f64, i64)> = Vec::with_capacity(residues.len() + 1);
    ranked.push((saddle_exponent(knot, r).re, 0));
    ranked.extend(residues.iter().map(|t| (t.exponent.re, t.k)));
    ranked.sort_by(|x, y| y.0.total_cmp(&x.0));
    if ranked.len() > 1 && ranked[0].0 - ranked[1].0 < TIE_GUARD {
        return Err(Error::TieBreak {
            first: ranked[0].1,
            second: ranked[1].1,
        });
    }
    Ok(match ranked[0].1 {
        0 => Dominant::Saddle,
        k => Dominant::Residue(k),
    })
}

/// The dominant term, found by comparing every enumerated exponent.
pub fn dominant_term(knot: &TorusKnot, r: Complex64) -> Result<Dominant> {
    let residues = enumerate_residues(knot, r)?;
    argmax(knot, r, &residues)
}

/// Exponent of the dominant term: `ab pi r i/2` below the real axis and
/// `pi i (1 - 1/(2ab r))` above it.
pub fn dominant_exponent(knot: &TorusKnot, r: Complex64) -> Result<Complex64> {
    Ok(match dominant_term(knot, r)? {
        Dominant::Saddle => saddle_exponent(knot, r),
        Dominant::Residue(k) => residue_exponent(knot, r, k),
    })
}

/// `lim J_N` for `Im r < 0`:
/// `sinh(a r pi i) sinh(b r pi i) / (sinh(ab r pi i) sinh(r pi i))`.
pub fn predict_limit_negative(knot: &TorusKnot, r: Complex64) -> Result<Complex64> {
    SpectralParameter::new(r).check_asymptotic_regime(knot)?;
    if !(r.im < 0.0) {
        return Err(Error::Regime {
            reason: "the limit formula needs Im r < 0",
        });
    }
    let s = |x: f64| cmath::sinh(Complex64::new(0.0, x * PI) * r);
    let (a, b) = (knot.a() as f64, knot.b() as f64);
    Ok(s(a) * s(b) / (s(a * b) * s(1.0)))
}

/// `lim log J_N / N = (1 - 1/(2ab r) - ab r/2) pi i` for `Im r > 0`.
pub fn predict_growth_positive(knot: &TorusKnot, r: Complex64) -> Result<Complex64> {
    SpectralParameter::new(r).check_asymptotic_regime(knot)?;
    if !(r.im > 0.0) {
        return Err(Error::Regime {
            reason: "the growth formula needs Im r > 0",
        });
    }
    let ab = knot.ab() as f64;
    Ok(Complex64::new(0.0, PI) * (1.0 - 1.0 / (2.0 * ab * r) - ab * r / 2.0))
}

/// Fixed point of the recursion once `t^{-N}` is frozen at
/// `x = e^{-2 pi r i}`:
/// `x^{(a-1)(b-1)/2} (1 - x^a)(1 - x^b) / ((1 - x)(1 - x^{ab}))`.
pub fn recursion_fixed_point(knot: &TorusKnot, r: Complex64) -> Result<Complex64> {
    let (a, b) = (knot.a() as f64, knot.b() as f64);
    // 1 - x^m = -expm1(-2 pi r i m)
    let one_minus = |m: f64| -cmath::exp_m1(Complex64::new(0.0, -2.0 * PI * m) * r);
    let d1 = one_minus(1.0);
    let dab = one_minus(a * b);
    if d1.norm() < 1e-14 || dab.norm() < 1e-14 {
        return Err(Error::DenominatorZero {
            what: "1 - e^{-2 pi r i} or 1 - e^{-2 ab pi r i} in the fixed point",
        });
    }
    let lead = (Complex64::new(0.0, -PI * (a - 1.0) * (b - 1.0)) * r).exp();
    Ok(lead * one_minus(a) * one_minus(b) / (d1 * dab))
}
