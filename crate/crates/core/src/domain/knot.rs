use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The torus knot `T(a, b)` for coprime `a, b > 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    a: u32,
    b: u32,
}

impl TorusKnot {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a < 2 || b < 2 || gcd(a, b) != 1 {
            return Err(Error::InvalidKnot { a, b });
        }
        Ok(TorusKnot { a, b })
    }

    /// `T(2, 3)`.
    pub fn trefoil() -> Self {
        TorusKnot { a: 2, b: 3 }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn ab(&self) -> u32 {
        self.a * self.b
    }

    /// Whether `k pi i / (ab)` is a genuine pole of tau (not removable).
    pub fn is_pole_index(&self, k: i64) -> bool {
        k % self.a as i64 != 0 && k % self.b as i64 != 0
    }
}

fn gcd(mut x: u32, mut y: u32) -> u32 {
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    x
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    ImNegative,
    ImPositive,
    RealAxis,
}

/// The complex parameter `r` in `t = exp(2 pi r i / N)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralParameter {
    pub r: Complex64,
    pub theta: f64,
    pub modulus: f64,
    pub regime: Regime,
}

impl SpectralParameter {
    pub fn new(r: Complex64) -> Self {
        let regime = if r.im < 0.0 {
            Regime::ImNegative
        } else if r.im > 0.0 {
            Regime::ImPositive
        } else {
            Regime::RealAxis
        };
        SpectralParameter {
            r,
            theta: libm::atan2(r.im, r.re),
            modulus: libm::hypot(r.re, r.im),
            regime,
        }
    }

    /// `Re r > 0`, `Im r != 0` and `|r| > 1/(ab)`.
    pub fn check_asymptotic_regime(&self, knot: &TorusKnot) -> Result<()> {
        if !(self.r.re > 0.0) {
            return Err(Error::Regime { reason: "Re r must be positive" });
        }
        if self.regime == Regime::RealAxis {
            return Err(Error::Regime { reason: "Im r must be nonzero" });
        }
        if !(self.modulus > 1.0 / knot.ab() as f64) {
            return Err(Error::Regime { reason: "|r| must exceed 1/(ab)" });
        }
        debug_assert!(self.theta.abs() < FRAC_PI_2);
        Ok(())
    }

    pub fn in_asymptotic_regime(&self, knot: &TorusKnot) -> bool {
        self.check_asymptotic_regime(knot).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn rejects_non_coprime_and_small() {
        assert!(TorusKnot::new(4, 6).is_err());
        assert!(TorusKnot::new(1, 3).is_err());
        assert!(TorusKnot::new(2, 2).is_err());
        assert!(TorusKnot::new(3, 5).is_ok());
    }

    #[test]
    fn pole_indices_skip_multiples() {
        let k = TorusKnot::trefoil();
        let poles: Vec<i64> = (1..=7).filter(|&j| k.is_pole_index(j)).collect();
        assert_eq!(poles, vec![1, 5, 7]);
    }

    #[test]
    fn regime_classification() {
        let k = TorusKnot::trefoil();
        let p = SpectralParameter::new(Complex64::new(1.0, -0.1));
        assert_eq!(p.regime, Regime::ImNegative);
        assert!(p.in_asymptotic_regime(&k));
        let p = SpectralParameter::new(Complex64::new(1.0, 0.0));
        assert_eq!(p.regime, Regime::RealAxis);
        assert!(!p.in_asymptotic_regime(&k));
        let p = SpectralParameter::new(Complex64::new(0.1, 0.05));
        assert!(!p.in_asymptotic_regime(&k));
        let p = SpectralParameter::new(Complex64::new(-1.0, 0.05));
        assert!(!p.in_asymptotic_regime(&k));
    }
}
