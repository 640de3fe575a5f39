//! Double-double (two-f64) arithmetic for the moment functional.
//!
//! Inner products against the Jacobi moments cancel catastrophically in plain
//! f64 once the polynomial degree passes ~10: the bilinear sum has terms many
//! orders larger than the result. Carrying the moment recurrence and the
//! accumulation in ~106-bit arithmetic keeps those sums accurate to far below
//! every tolerance in the crate while the polynomial inputs stay ordinary f64.

#![allow(clippy::should_implement_trait)] // named ops on plain value types

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    (s, (a - (s - v)) + (b - v))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two f64 values.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
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
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * rhs);
        Dd { hi, lo }
    }

    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul_f64(q2));
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Complex number with double-double components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };

    #[inline]
    pub fn from_c64(z: Complex64) -> Cdd {
        Cdd {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    /// Error-free product of two ordinary complex numbers.
    #[inline]
    pub fn prod(a: Complex64, b: Complex64) -> Cdd {
        Cdd {
            re: Dd::prod(a.re, b.re).sub(Dd::prod(a.im, b.im)),
            im: Dd::prod(a.re, b.im).add(Dd::prod(a.im, b.re)),
        }
    }

    #[inline]
    pub fn add(self, rhs: Cdd) -> Cdd {
        Cdd {
            re: self.re.add(rhs.re),
            im: self.im.add(rhs.im),
        }
    }

    #[inline]
    pub fn sub(self, rhs: Cdd) -> Cdd {
        Cdd {
            re: self.re.sub(rhs.re),
            im: self.im.sub(rhs.im),
        }
    }

    #[inline]
    pub fn mul(self, rhs: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(rhs.re).sub(self.im.mul(rhs.im)),
            im: self.re.mul(rhs.im).add(self.im.mul(rhs.re)),
        }
    }

    pub fn mul_c64(self, rhs: Complex64) -> Cdd {
        Cdd {
            re: self.re.mul_f64(rhs.re).sub(self.im.mul_f64(rhs.im)),
            im: self.re.mul_f64(rhs.im).add(self.im.mul_f64(rhs.re)),
        }
    }

    /// Division by an ordinary complex number via the conjugate.
    pub fn div_c64(self, rhs: Complex64) -> Cdd {
        let den = Dd::prod(rhs.re, rhs.re).add(Dd::prod(rhs.im, rhs.im));
        let num = self.mul_c64(rhs.conj());
        Cdd {
            re: num.re.div(den),
            im: num.im.div(den),
        }
    }

    #[inline]
    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// |z| computed from the high parts (enough for scale decisions).
    pub fn norm(self) -> f64 {
        self.to_c64().norm()
    }
}
