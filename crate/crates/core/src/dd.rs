//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`s,
//! giving roughly 106 significant bits.
//!
//! Only the operations the kernels need are provided. Transcendentals follow
//! the usual argument-reduction + Taylor/Newton recipes and are accurate to a
//! few units of 2^-104 on the ranges the crate uses them on.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

use num_traits::{Num, One, Zero};

use crate::real::{quick_two_sum, two_prod, two_sum, Real};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

const LN2: Dd = Dd::from_parts(core::f64::consts::LN_2, 2.3190468138462996e-17);
const PI: Dd = Dd::from_parts(core::f64::consts::PI, 1.2246467991473532e-16);
const TWO_PI: Dd = Dd::from_parts(core::f64::consts::TAU, 2.4492935982947064e-16);
const HALF_PI: Dd = Dd::from_parts(core::f64::consts::FRAC_PI_2, 6.123233995736766e-17);

impl Dd {
    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Self {
        if !hi.is_finite() {
            return Dd { hi, lo: 0.0 };
        }
        let (h, l) = quick_two_sum(hi, lo);
        Dd { hi: h, lo: l }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        Self::renorm(p, e + self.lo * b)
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        if !q1.is_finite() {
            return Dd { hi: q1, lo: 0.0 };
        }
        let (p, e) = two_prod(q1, b);
        let (s, t) = two_sum(self.hi, -p);
        let t = t - e + self.lo;
        let q2 = (s + t) / b;
        Self::renorm(q1, q2)
    }

    /// Multiplies by `2^k`, exactly.
    fn ldexp(self, k: i32) -> Self {
        Dd {
            hi: libm::scalbn(self.hi, k),
            lo: libm::scalbn(self.lo, k),
        }
    }

    fn sqr(self) -> Self {
        self * self
    }

    /// expm1 on |x| <= ~0.35 via 2^-10 scaling, Taylor, then
    /// `(e^{2y} - 1) = p (p + 2)` doubling, which never forms `1 + p`.
    fn expm1_reduced(x: Dd) -> Dd {
        const SQUARINGS: i32 = 10;
        let r = x.ldexp(-SQUARINGS);
        let mut term = r;
        let mut p = r;
        for i in 2..=12 {
            term = (term * r).div_f64(i as f64);
            p += term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..SQUARINGS {
            p = p * (p + Dd::from(2.0));
        }
        p
    }

    fn sin_cos_taylor(r: Dd) -> (Dd, Dd) {
        let r2 = r.sqr();
        let mut s = r;
        let mut c = Dd::one();
        let mut ts = r;
        let mut tc = Dd::one();
        let mut n = 1.0;
        loop {
            ts = -(ts * r2).div_f64((n + 1.0) * (n + 2.0));
            tc = -(tc * r2).div_f64(n * (n + 1.0));
            s += ts;
            c += tc;
            n += 2.0;
            if ts.hi.abs() < 1e-36 && tc.hi.abs() < 1e-36 {
                break;
            }
        }
        (s, c)
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // hi already carries the f64-rounded value
        fmt::Display::fmt(&self.hi, f)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        if !s1.is_finite() {
            return Dd { hi: s1, lo: 0.0 };
        }
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Dd::renorm(s1, s2 + t2)
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        Dd::renorm(p, e + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() {
            return Dd { hi: q1, lo: 0.0 };
        }
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        Dd::renorm(q1, q2) + Dd::from(q3)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, b: Dd) -> Dd {
        let q = self / b;
        let n = if q.hi >= 0.0 { floor(q) } else { -floor(-q) };
        self - b * n
    }
}

fn floor(x: Dd) -> Dd {
    let hi = libm::floor(x.hi);
    if hi == x.hi {
        Dd::renorm(hi, libm::floor(x.lo))
    } else {
        Dd { hi, lo: 0.0 }
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, b: Dd) {
        *self = *self + b;
    }
}

impl SubAssign for Dd {
    fn sub_assign(&mut self, b: Dd) {
        *self = *self - b;
    }
}

impl MulAssign for Dd {
    fn mul_assign(&mut self, b: Dd) {
        *self = *self * b;
    }
}

impl Zero for Dd {
    fn zero() -> Self {
        Dd { hi: 0.0, lo: 0.0 }
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for Dd {
    fn one() -> Self {
        Dd { hi: 1.0, lo: 0.0 }
    }
}

impl Num for Dd {
    type FromStrRadixErr = num_traits::ParseFloatError;

    /// Parses through `f64`; the result carries only double precision.
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        f64::from_str_radix(s, radix).map(Dd::from)
    }
}

impl Real for Dd {
    const EPSILON: f64 = 4.93038065763132e-32; // 2^-104

    fn from_f64(x: f64) -> Self {
        Dd::from(x)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn pi() -> Self {
        PI
    }

    fn two_pi() -> Self {
        TWO_PI
    }

    fn neg_infinity() -> Self {
        Dd::from(f64::NEG_INFINITY)
    }

    fn exp(self) -> Self {
        if self.hi > 709.7 {
            return Dd::from(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::zero();
        }
        if self.hi == 0.0 {
            return Dd::one();
        }
        let k = libm::round(self.hi / LN2.hi);
        let r = self - LN2.mul_f64(k);
        let p = Dd::expm1_reduced(r);
        (p + Dd::one()).ldexp(k as i32)
    }

    fn exp_m1(self) -> Self {
        if self.hi.abs() < 0.34 {
            Dd::expm1_reduced(self)
        } else {
            self.exp() - Dd::one()
        }
    }

    fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                Dd::from(f64::NEG_INFINITY)
            } else {
                Dd::from(f64::NAN)
            };
        }
        if !self.hi.is_finite() {
            return self;
        }
        // Newton on exp(y) = x; the correction is log1p(d) = d - d^2/2 + ...,
        // and |d| can reach 2^-44 when |ln x| is large, so take the
        // quadratic term as well
        let y = Dd::from(libm::log(self.hi));
        let d = self * (-y).exp() - Dd::one();
        y + d - d.sqr().mul_f64(0.5)
    }

    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                Dd::zero()
            } else {
                Dd::from(f64::NAN)
            };
        }
        let q = libm::sqrt(self.hi);
        let s = Dd::from(q);
        s + (self - s.sqr()).mul_f64(0.5 / q)
    }

    fn sin_cos(self) -> (Self, Self) {
        if !self.hi.is_finite() {
            return (Dd::from(f64::NAN), Dd::from(f64::NAN));
        }
        let k = libm::round(self.hi / TWO_PI.hi);
        let r = self - TWO_PI.mul_f64(k);
        let j = libm::round(r.hi / HALF_PI.hi);
        let r = r - HALF_PI.mul_f64(j);
        let (s, c) = Dd::sin_cos_taylor(r);
        match (j as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn atan2(self, x: Self) -> Self {
        if self.is_zero() && x.is_zero() {
            return Dd::zero();
        }
        let z = Dd::from(libm::atan2(self.hi, x.hi));
        let (s, c) = z.sin_cos();
        z + (self * c - x * s) / (self * s + x * c)
    }

    fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    fn round(self) -> Self {
        let hi = libm::round(self.hi);
        if hi == self.hi {
            Dd::renorm(hi, libm::round(self.lo))
        } else if (hi - self.hi).abs() == 0.5 {
            // tie in hi: lo decides the direction
            let down = libm::floor(self.hi);
            if self.lo < 0.0 {
                Dd::from(down)
            } else {
                Dd::from(down + 1.0)
            }
        } else {
            Dd::from(hi)
        }
    }

    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    fn frac_of_product(self, q: i64) -> Self {
        let qf = q as f64;
        let (p1, e1) = two_prod(self.hi, qf);
        let (p2, e2) = two_prod(self.lo, qf);
        let head = p1 - libm::round(p1);
        let t = Dd::from(head) + Dd::from(e1) + Dd::from(p2) + Dd::from(e2);
        t - t.round()
    }
}
