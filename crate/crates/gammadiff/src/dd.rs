//! Double-double arithmetic: an unevaluated sum of two `f64` giving ~31
//! significant digits.
//!
//! The confluent-series kernels subtract terms of size `e^z` that cancel down
//! to `O(z^-a)`, and the alternating moment sums behave the same way. Plain
//! `f64` accumulation leaves only `~16 - z/ln(10)` digits after that
//! cancellation, which is not enough for the cross-route agreement targets.
//! Accumulating in double-double pushes the rounding floor far below the
//! cancellation magnification.
//!
//! Algorithms are the classic error-free transforms (Dekker/Knuth two-sum,
//! FMA two-prod) as used in the QD library.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Requires |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, rhs: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs);
        let s2 = s2 + self.lo;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs);
        let p2 = p2 + self.lo * rhs;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    /// Long division with two correction passes.
    #[inline]
    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.add(-(rhs.mul_f64(q1)));
        let q2 = r.hi / rhs.hi;
        let r = r.add(-(rhs.mul_f64(q2)));
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, rhs: f64) -> Dd {
        self.div(Dd::from_f64(rhs))
    }
}

impl std::ops::Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl std::ops::Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        Dd::add(self, rhs)
    }
}

impl std::ops::Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        Dd::add(self, -rhs)
    }
}

impl std::ops::Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        Dd::mul(self, rhs)
    }
}

impl std::ops::Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, rhs: Dd) -> Dd {
        Dd::div(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representation_keeps_low_bits() {
        let a = Dd::from_f64(1.0).add_f64(1e-30);
        assert_eq!(a.hi, 1.0);
        assert_eq!(a.lo, 1e-30);
        let b = a.add_f64(-1.0);
        assert_eq!(b.to_f64(), 1e-30);
    }

    #[test]
    fn product_is_error_free() {
        let x = 1.0 + 2f64.powi(-30);
        let p = Dd::from_prod(x, x);
        // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60; the last bit is below f64 ulp.
        let exact_lo = 2f64.powi(-60);
        assert_eq!(p.hi, 1.0 + 2f64.powi(-29));
        assert_eq!(p.lo, exact_lo);
    }

    #[test]
    fn division_round_trips() {
        let a = Dd::from_prod(std::f64::consts::PI, 1e8);
        let b = Dd::from_f64(std::f64::consts::E);
        let q = a.div(b);
        let back = q.mul(b);
        let diff = (back - a).to_f64().abs();
        assert!(diff <= 1e-22 * a.to_f64().abs(), "diff = {diff:e}");
    }

    #[test]
    fn cancellation_preserves_digits() {
        // (1e10 + 1e-6) - 1e10 in dd keeps the small part exactly.
        let s = Dd::from_f64(1e10).add_f64(1e-6).add_f64(-1e10);
        assert_eq!(s.to_f64(), 1e-6);
    }
}
