//! Scalar abstraction shared by every numerical kernel.
//!
//! Kernels are written once against [`Real`] and instantiated either with
//! plain `f64` or with the double-double [`Dd`](crate::Dd) type when an
//! experiment needs more than 53 bits (e.g. resolving an exponentially small
//! gap between an asymptotic expansion and the exact value).

use core::fmt::{Debug, Display};
use core::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_traits::Num;

pub trait Real:
    Num
    + Copy
    + PartialOrd
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Unit roundoff of the representation, as an `f64`.
    const EPSILON: f64;

    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    fn pi() -> Self;
    fn two_pi() -> Self;
    fn neg_infinity() -> Self;

    fn exp(self) -> Self;
    fn exp_m1(self) -> Self;
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    fn sin_cos(self) -> (Self, Self);
    fn atan2(self, x: Self) -> Self;
    fn abs(self) -> Self;
    fn round(self) -> Self;
    fn is_finite(self) -> bool;

    /// `self * q` reduced to the nearest-integer remainder in `[-1/2, 1/2]`,
    /// computed without losing the low-order bits of the product.
    fn frac_of_product(self, q: i64) -> Self;

    fn from_i64(x: i64) -> Self {
        Self::from_f64(x as f64)
    }

    fn hypot(self, other: Self) -> Self {
        let (x, y) = (self.abs(), other.abs());
        let (big, small) = if x > y { (x, y) } else { (y, x) };
        if big == Self::zero() {
            return big;
        }
        let q = small / big;
        big * (Self::one() + q * q).sqrt()
    }

    fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

/// Fractional part of `x * m / d` in turns, reduced to `[-1/2, 1/2]`.
///
/// `m` is split as `d * q + s` so the large integer multiple never meets the
/// division; phases of `t`-powers with exponents of order `N^2` stay accurate.
pub fn turns_of_ratio<T: Real>(x: T, m: i64, d: i64) -> T {
    debug_assert!(d > 0);
    let q = m.div_euclid(d);
    let s = m.rem_euclid(d);
    let whole = x.frac_of_product(q);
    let part = x * T::from_i64(s) / T::from_i64(d);
    let t = whole + part;
    t - t.round()
}

#[inline]
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
pub(crate) fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

/// Exact product `a * b = p + e` (Dekker), valid away from overflow.
#[inline]
pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

impl Real for f64 {
    const EPSILON: f64 = f64::EPSILON;

    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    #[inline]
    fn pi() -> Self {
        core::f64::consts::PI
    }
    #[inline]
    fn two_pi() -> Self {
        core::f64::consts::TAU
    }
    #[inline]
    fn neg_infinity() -> Self {
        f64::NEG_INFINITY
    }
    #[inline]
    fn exp(self) -> Self {
        libm::exp(self)
    }
    #[inline]
    fn exp_m1(self) -> Self {
        libm::expm1(self)
    }
    #[inline]
    fn ln(self) -> Self {
        libm::log(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        libm::sqrt(self)
    }
    #[inline]
    fn sin_cos(self) -> (Self, Self) {
        libm::sincos(self)
    }
    #[inline]
    fn atan2(self, x: Self) -> Self {
        libm::atan2(self, x)
    }
    #[inline]
    fn abs(self) -> Self {
        libm::fabs(self)
    }
    #[inline]
    fn round(self) -> Self {
        libm::round(self)
    }
    #[inline]
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    #[inline]
    fn hypot(self, other: Self) -> Self {
        libm::hypot(self, other)
    }

    fn frac_of_product(self, q: i64) -> Self {
        let (p, e) = two_prod(self, q as f64);
        let r = (p - libm::round(p)) + e;
        r - libm::round(r)
    }
}
