//! Dense complex polynomials in the monomial basis.
//!
//! `coeffs[k]` holds the coefficient of `z^k`; the zero polynomial is the
//! empty vector and the leading coefficient of a nonzero polynomial is never
//! exactly zero. Trimming removes exact zeros only — no numerical thresholds.

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Complex64::ZERO) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Complex64::ONE)
    }

    /// Monic product `prod_k (z - r_k)` built by repeated linear multiplication.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut p = Poly::one();
        for &r in roots {
            p = p.mul_linear(r);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation from the leading coefficient down.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i + 1) as f64)
                .collect(),
        )
    }

    /// `(p(z) - p(xi)) / (z - xi)`: the quotient of synthetic division by
    /// `(z - xi)` with the remainder `p(xi)` dropped. Exact degree drop by one;
    /// constants and the zero polynomial map to zero.
    pub fn divided_difference(&self, xi: Complex64) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let d = self.coeffs.len() - 1;
        let mut q = vec![Complex64::ZERO; d];
        let mut carry = self.coeffs[d];
        for k in (0..d).rev() {
            q[k] = carry;
            carry = self.coeffs[k] + xi * carry;
        }
        Poly::new(q)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.scale(-Complex64::ONE))
    }

    pub fn scale(&self, c: Complex64) -> Poly {
        Poly::new(self.coeffs.iter().map(|&x| x * c).collect())
    }

    /// `(z - xi) * p`, raising the degree by one.
    pub fn mul_linear(&self, xi: Complex64) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Complex64::ZERO; self.coeffs.len() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= xi * c;
        }
        Poly::new(out)
    }
}

/// Max coefficient magnitude of `sum(parts)` divided by the largest
/// coefficient magnitude appearing in any part (floored at 1).
///
/// This is the residual used by every identity check in the crate: an
/// identity holds when its terms cancel to roundoff relative to the size of
/// the terms themselves.
pub fn identity_residual(parts: &[&Poly]) -> f64 {
    let mut sum = Poly::zero();
    let mut scale: f64 = 1.0;
    for p in parts {
        sum = sum.add(p);
        scale = scale.max(p.max_coeff_norm());
    }
    sum.max_coeff_norm() / scale
}

/// Residual between two polynomials that are claimed equal, relative to the
/// larger coefficient magnitude of the pair (floored at 1).
pub fn coeff_distance(a: &Poly, b: &Poly) -> f64 {
    let scale = 1.0_f64.max(a.max_coeff_norm()).max(b.max_coeff_norm());
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut worst = 0.0_f64;
    for k in 0..n {
        worst = worst.max((a.coeff(k) - b.coeff(k)).norm());
    }
    worst / scale
}
