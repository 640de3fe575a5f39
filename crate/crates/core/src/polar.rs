//! Polar Jacobi polynomials `P_n(z; alpha, beta; xi)`: the monic degree-n
//! polynomials orthogonal with respect to the operator
//! `L_xi[f] = f + (z - xi) f'` and the Jacobi weight.
//!
//! Two independent constructions are provided: the inhomogeneous three-term
//! recurrence (with the constant term `P_{n+1}^{(a-1,b-1)}(xi)` evaluated by
//! value recurrence) and the divided difference
//! `(P_{n+1}^{(a-1,b-1)}(z) - P_{n+1}^{(a-1,b-1)}(xi)) / (z - xi)`.
//! Their agreement is one of the crate's acceptance checks, so neither ever
//! delegates to the other.

use crate::error::{Error, Result};
use crate::jacobi::{
    self, check_cap, jacobi_eval, jacobi_poly, shifted_eval, shifted_poly, JacobiParams,
};
use crate::poly::{coeff_distance, identity_residual, Poly};
use num_complex::Complex64;

/// Full identity of one polar Jacobi polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarSpec {
    pub params: JacobiParams,
    pub pole: Complex64,
    pub degree: usize,
}

impl PolarSpec {
    pub fn new(params: JacobiParams, pole: Complex64, degree: usize) -> Self {
        PolarSpec {
            params,
            pole,
            degree,
        }
    }

    /// Smallest denominator-factor modulus across the unshifted and
    /// down-shifted families through the degrees this spec touches. Property
    /// sweeps reject specs where this is below 1e-6; direct calls proceed and
    /// report genuine degeneracies as errors.
    pub fn denominator_margin(&self) -> f64 {
        let n = self.degree + 1;
        self.params
            .denominator_margin(n)
            .min(self.params.shifted_down().denominator_margin(n))
    }

    pub fn swapped_negated(&self) -> Self {
        PolarSpec::new(self.params.swapped(), -self.pole, self.degree)
    }
}

/// Coefficients of the inhomogeneous recurrence
/// `P_{n+1} = z P_n + a_n P_n + b_n P_{n-1} + P_{n+1}^{(a-1,b-1)}(xi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarRecurrencePair {
    pub a_n: Complex64,
    pub b_n: Complex64,
}

const ZERO: Complex64 = Complex64::ZERO;

fn check(context: &'static str, factors: &[(&str, Complex64)]) -> Result<Complex64> {
    let mut den = Complex64::ONE;
    for (name, f) in factors {
        if *f == ZERO {
            return Err(Error::degenerate(context, *name));
        }
        den *= f;
    }
    Ok(den)
}

pub(crate) fn a_rec(params: &JacobiParams, n: usize) -> Result<Complex64> {
    if params.is_symmetric() {
        return Ok(ZERO);
    }
    let (a, b) = (params.alpha, params.beta);
    let s = a + b;
    let nf = 2.0 * n as f64;
    let den = check(
        "a_n",
        &[("alpha+beta+2n", s + nf), ("alpha+beta+2n+2", s + nf + 2.0)],
    )?;
    Ok((s - 2.0) * (a - b) / den)
}

pub(crate) fn b_rec(params: &JacobiParams, n: usize) -> Result<Complex64> {
    let (a, b) = (params.alpha, params.beta);
    let s = a + b;
    let nf = n as f64;
    if params.is_symmetric() {
        // ultraspherical reduction, with the extra (2a+n-1) cancellation at n=0
        if n == 0 {
            let den = check("b_0", &[("2alpha+1", 2.0 * a + 1.0)])?;
            return Ok(-Complex64::ONE / den);
        }
        let den = check(
            "b_n",
            &[
                ("2alpha+2n-1", 2.0 * a + 2.0 * nf - 1.0),
                ("2alpha+2n+1", 2.0 * a + 2.0 * nf + 1.0),
            ],
        )?;
        return Ok(-(nf + 1.0) * (2.0 * a + nf - 1.0) / den);
    }
    if n == 0 {
        // (alpha+beta+n-1) cancels (alpha+beta+2n-1) exactly at n = 0
        let den = check("b_0", &[("alpha+beta", s), ("alpha+beta+1", s + 1.0)])?;
        return Ok(-4.0 * (a * b) / (den * s));
    }
    let d0 = s + 2.0 * nf;
    let den = check(
        "b_n",
        &[
            ("alpha+beta+2n-1", d0 - 1.0),
            ("alpha+beta+2n", d0),
            ("alpha+beta+2n+1", d0 + 1.0),
        ],
    )?;
    Ok(-4.0 * (nf + 1.0) * ((a + nf) * (b + nf)) * (s + nf - 1.0) / (den * d0))
}

/// Recurrence coefficients `(a_n, b_n)` of the polar family.
pub fn polar_recurrence_coeffs(params: &JacobiParams, n: usize) -> Result<PolarRecurrencePair> {
    Ok(PolarRecurrencePair {
        a_n: a_rec(params, n)?,
        b_n: b_rec(params, n)?,
    })
}

fn assert_monic(p: Poly, context: &'static str) -> Result<Poly> {
    let drift = match p.leading() {
        Some(l) => (l - Complex64::ONE).norm(),
        None => 1.0,
    };
    if drift > 1e-12 {
        let _ = context;
        return Err(Error::MonicDrift { drift });
    }
    Ok(p)
}

/// `P_n(z; alpha, beta; xi)` by the inhomogeneous recurrence, with the
/// constant term evaluated by value recurrence at `xi`.
pub fn polar_poly_recurrence(spec: &PolarSpec) -> Result<Poly> {
    check_cap(spec.degree)?;
    let mut prev = Poly::zero();
    let mut cur = Poly::one();
    for k in 0..spec.degree {
        let mut next = cur.mul_linear(-a_rec(&spec.params, k)?); // (z + a_k) P_k
        if k >= 1 {
            next = next.add(&prev.scale(b_rec(&spec.params, k)?));
        }
        next = next.add(&Poly::constant(shifted_eval(
            &spec.params,
            k + 1,
            spec.pole,
        )?));
        prev = cur;
        cur = next;
    }
    assert_monic(cur, "polar recurrence")
}

/// `P_n(z; alpha, beta; xi)` as the divided difference of the down-shifted
/// classical polynomial.
pub fn polar_poly_divdiff(spec: &PolarSpec) -> Result<Poly> {
    check_cap(spec.degree)?;
    let q = shifted_poly(&spec.params, spec.degree + 1)?;
    assert_monic(q.divided_difference(spec.pole), "polar divided difference")
}

/// Max relative coefficient residual of
/// `P_n + (z - xi) P_n' - (n+1) P_n^{(alpha,beta)}`.
pub fn operator_identity_residual(spec: &PolarSpec) -> Result<f64> {
    let p = polar_poly_recurrence(spec)?;
    let term = p.derivative().mul_linear(spec.pole);
    let rhs = jacobi_poly(&spec.params, spec.degree)?
        .scale(Complex64::new(-((spec.degree + 1) as f64), 0.0));
    Ok(identity_residual(&[&p, &term, &rhs]))
}

/// `Q_n(z) = (z - xi) P_{n-1}(z; alpha, beta; xi)`: the monic polynomial
/// orthogonal with respect to the point-plus-derivative inner product.
pub fn sobolev_q(spec: &PolarSpec) -> Result<Poly> {
    assert!(spec.degree >= 1, "sobolev Q is defined for degree >= 1");
    let inner = PolarSpec::new(spec.params, spec.pole, spec.degree - 1);
    Ok(polar_poly_recurrence(&inner)?.mul_linear(spec.pole))
}

/// Max relative coefficient residual of
/// `(z-xi) P_n = P_{n+1}^{(a,b)} + tb_n P_n^{(a,b)} + tg_n P_{n-1}^{(a,b)}
///  - P_{n+1}^{(a-1,b-1)}(xi)`.
pub fn structure_expansion_residual(spec: &PolarSpec) -> Result<f64> {
    let n = spec.degree;
    assert!(n >= 1, "structure expansion needs degree >= 1");
    let st = jacobi::structure_coeffs(&spec.params, n)?;
    let p = polar_poly_recurrence(spec)?;
    let lhs = p.mul_linear(spec.pole);
    let t1 = jacobi_poly(&spec.params, n + 1)?.scale(-Complex64::ONE);
    let t2 = jacobi_poly(&spec.params, n)?.scale(-st.tilde_beta);
    let t3 = jacobi_poly(&spec.params, n - 1)?.scale(-st.tilde_gamma);
    let t4 = Poly::constant(shifted_eval(&spec.params, n + 1, spec.pole)?);
    Ok(identity_residual(&[&lhs, &t1, &t2, &t3, &t4]))
}

/// Max relative coefficient residual of the reflection identity
/// `P_n(z; a, b; xi) = (-1)^n P_n(-z; b, a; -xi)`.
pub fn reflect_check(spec: &PolarSpec) -> Result<f64> {
    let n = spec.degree;
    let p = polar_poly_recurrence(spec)?;
    let q = polar_poly_recurrence(&spec.swapped_negated())?;
    let flipped = Poly::new(
        (0..=n)
            .map(|k| {
                let sign = if (n - k).is_multiple_of(2) { 1.0 } else { -1.0 };
                q.coeff(k) * sign
            })
            .collect(),
    );
    Ok(coeff_distance(&p, &flipped))
}

/// Which parameter is the negative integer in the factorization identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSide {
    /// `alpha = -k`, pole at `+1`.
    MinusAlpha,
    /// `beta = -k`, pole at `-1`.
    MinusBeta,
}

/// Result of checking the negative-integer-parameter factorization.
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    /// Residual between the two product-form constructions of `P_{n+k}`.
    pub factor_residual: f64,
    /// `|a_{n+k}(-k, b; 1) - a_{n-1}(k+2, b; 1)|`, relative (0 when `n = 0`).
    pub shift_a_residual: f64,
    /// Same for `b`.
    pub shift_b_residual: f64,
    /// The degree `n + k` polar polynomial in expanded form.
    pub polynomial: Poly,
}

/// Checks the factorization of polar polynomials with a negative integer
/// parameter and the pole at the matching endpoint:
/// `P_{n+k}(z; -k, b; 1) = (z-1)^k P_n^{(k+1, b-1)}(z)`
/// `                     = (z-1)^k ((z-1) P_{n-1}(z; k+2, b; 1) + P_n^{(k+1,b-1)}(1))`,
/// mirrored for `beta = -k` at `-1`, together with the recurrence-coefficient
/// shift identities relating the two parameter sets.
pub fn factorization_check(
    k: usize,
    other: Complex64,
    n: usize,
    side: FactorSide,
) -> Result<FactorizationReport> {
    assert!(k >= 1, "factorization needs a positive integer k");
    let kf = k as f64;
    // endpoint of the factor (z -+ 1)^k and the inner parameter sets
    let (pole, inner_jacobi, inner_polar) = match side {
        FactorSide::MinusAlpha => (
            Complex64::ONE,
            JacobiParams::new(Complex64::new(kf + 1.0, 0.0), other - 1.0),
            JacobiParams::new(Complex64::new(kf + 2.0, 0.0), other),
        ),
        FactorSide::MinusBeta => (
            -Complex64::ONE,
            JacobiParams::new(other - 1.0, Complex64::new(kf + 1.0, 0.0)),
            JacobiParams::new(other, Complex64::new(kf + 2.0, 0.0)),
        ),
    };
    let outer_params = match side {
        FactorSide::MinusAlpha => JacobiParams::new(Complex64::new(-kf, 0.0), other),
        FactorSide::MinusBeta => JacobiParams::new(other, Complex64::new(-kf, 0.0)),
    };

    let mut route_a = jacobi_poly(&inner_jacobi, n)?;
    let mut route_b = if n == 0 {
        Poly::one()
    } else {
        let inner_spec = PolarSpec::new(inner_polar, pole, n - 1);
        polar_poly_recurrence(&inner_spec)?
            .mul_linear(pole)
            .add(&Poly::constant(jacobi_eval(&inner_jacobi, n, pole)?))
    };
    for _ in 0..k {
        route_a = route_a.mul_linear(pole);
        route_b = route_b.mul_linear(pole);
    }
    let factor_residual = coeff_distance(&route_a, &route_b);

    let (shift_a_residual, shift_b_residual) = if n == 0 {
        (0.0, 0.0)
    } else {
        let lhs = polar_recurrence_coeffs(&outer_params, n + k)?;
        let rhs = polar_recurrence_coeffs(&inner_polar, n - 1)?;
        let rel = |x: Complex64, y: Complex64| (x - y).norm() / 1.0_f64.max(x.norm()).max(y.norm());
        (rel(lhs.a_n, rhs.a_n), rel(lhs.b_n, rhs.b_n))
    };

    Ok(FactorizationReport {
        factor_residual,
        shift_a_residual,
        shift_b_residual,
        polynomial: route_a,
    })
}
