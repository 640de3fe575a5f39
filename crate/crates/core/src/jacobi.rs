//! Classical monic Jacobi polynomials `P_n^{(alpha,beta)}`: three-term
//! recurrence and structure coefficients, coefficient construction, pointwise
//! evaluation, squared norms, and the exterior map `phi`.
//!
//! Every rational coefficient formula is evaluated in lowest terms for its
//! index: exact common factors between the printed numerator and denominator
//! are removed first (the `n = 0` form of `beta_n` is one instance, `n = 1`
//! of `gamma_n` another), and the symmetric case `alpha == beta` uses the
//! reduced ultraspherical forms. A denominator factor that still vanishes is
//! a genuine degeneracy and raises [`Error::DegenerateParams`] naming the
//! factor; no limit values are ever substituted.

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::poly::Poly;
use num_complex::Complex64;

/// Coefficient-space work degrades past this degree in double precision.
pub const DEGREE_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `Re alpha > -1` and `Re beta > -1`: integrable weight on [-1, 1].
    Standard,
    Nonstandard,
}

/// The parameter pair `(alpha, beta)` of the weight `(1-z)^alpha (1+z)^beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl JacobiParams {
    pub fn new(alpha: Complex64, beta: Complex64) -> Self {
        JacobiParams { alpha, beta }
    }

    pub fn real(alpha: f64, beta: f64) -> Self {
        Self::new(Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0))
    }

    /// Recomputed from the parameters, never stored.
    pub fn regime(&self) -> Regime {
        if self.alpha.re > -1.0 && self.beta.re > -1.0 {
            Regime::Standard
        } else {
            Regime::Nonstandard
        }
    }

    pub fn is_standard(&self) -> bool {
        self.regime() == Regime::Standard
    }

    pub fn is_symmetric(&self) -> bool {
        self.alpha == self.beta
    }

    /// `(alpha - 1, beta - 1)`, the family whose divided differences produce
    /// the polar polynomials.
    pub fn shifted_down(&self) -> Self {
        Self::new(self.alpha - 1.0, self.beta - 1.0)
    }

    pub fn shifted_up(&self) -> Self {
        Self::new(self.alpha + 1.0, self.beta + 1.0)
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.beta, self.alpha)
    }

    fn sum(&self) -> Complex64 {
        self.alpha + self.beta
    }

    /// Smallest modulus among every denominator factor used by the recurrence
    /// and structure coefficients of this family through index `n`.
    /// Sweep generators reject parameter draws where this is tiny.
    pub fn denominator_margin(&self, n: usize) -> f64 {
        let s = self.sum();
        let mut m = f64::INFINITY;
        for k in 0..=n {
            let kf = 2.0 * k as f64;
            for d in [s + kf, s + kf + 2.0, s + kf - 1.0, s + kf + 1.0] {
                m = m.min(d.norm());
            }
        }
        m
    }
}

/// Monic three-term recurrence coefficients
/// `P_{n+1} = (z - beta_n) P_n - gamma_n P_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrencePair {
    pub beta_n: Complex64,
    pub gamma_n: Complex64,
}

/// Structure-relation coefficients: `hat_*` from
/// `(1-z^2) P_n' = -n P_{n+1} + hat_beta_n P_n + hat_gamma_n P_{n-1}`,
/// `tilde_*` from
/// `P_{n+1}^{(a-1,b-1)} = P_{n+1} + tilde_beta_n P_n + tilde_gamma_n P_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructurePairs {
    pub hat_beta: Complex64,
    pub hat_gamma: Complex64,
    pub tilde_beta: Complex64,
    pub tilde_gamma: Complex64,
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

pub(crate) fn beta_rec(p: &JacobiParams, n: usize) -> Result<Complex64> {
    if p.is_symmetric() {
        return Ok(ZERO);
    }
    let (a, b, s) = (p.alpha, p.beta, p.sum());
    if n == 0 {
        let den = check("beta_0", &[("alpha+beta+2", s + 2.0)])?;
        return Ok((b - a) / den);
    }
    let nf = 2.0 * n as f64;
    let den = check(
        "beta_n",
        &[("alpha+beta+2n", s + nf), ("alpha+beta+2n+2", s + nf + 2.0)],
    )?;
    Ok((b * b - a * a) / den)
}

pub(crate) fn gamma_rec(p: &JacobiParams, n: usize) -> Result<Complex64> {
    if n == 0 {
        return Ok(ZERO);
    }
    let (a, b, s) = (p.alpha, p.beta, p.sum());
    if n == 1 {
        // (alpha+beta+n) cancels (alpha+beta+2n-1) exactly at n = 1
        if p.is_symmetric() {
            let den = check("gamma_1", &[("2alpha+3", 2.0 * a + 3.0)])?;
            return Ok(Complex64::ONE / den);
        }
        let d2 = s + 2.0;
        let den = check("gamma_1", &[("alpha+beta+2", d2), ("alpha+beta+3", s + 3.0)])?;
        return Ok(4.0 * ((a + 1.0) * (b + 1.0)) / (den * d2));
    }
    let nf = n as f64;
    if p.is_symmetric() {
        let den = check(
            "gamma_n",
            &[
                ("2alpha+2n-1", 2.0 * a + 2.0 * nf - 1.0),
                ("2alpha+2n+1", 2.0 * a + 2.0 * nf + 1.0),
            ],
        )?;
        return Ok(nf * (2.0 * a + nf) / den);
    }
    let d0 = s + 2.0 * nf;
    let den = check(
        "gamma_n",
        &[
            ("alpha+beta+2n-1", d0 - 1.0),
            ("alpha+beta+2n", d0),
            ("alpha+beta+2n+1", d0 + 1.0),
        ],
    )?;
    Ok(4.0 * nf * ((a + nf) * (b + nf)) * (s + nf) / (den * d0))
}

/// Three-term recurrence coefficients `(beta_n, gamma_n)`.
pub fn recurrence_coeffs(params: &JacobiParams, n: usize) -> Result<RecurrencePair> {
    Ok(RecurrencePair {
        beta_n: beta_rec(params, n)?,
        gamma_n: gamma_rec(params, n)?,
    })
}

/// Structure coefficients for index `n` (both relations).
pub fn structure_coeffs(params: &JacobiParams, n: usize) -> Result<StructurePairs> {
    let (a, b, s) = (params.alpha, params.beta, params.sum());
    let nf = n as f64;

    let hat_beta = if n == 0 || params.is_symmetric() {
        ZERO
    } else if n == 1 {
        // (alpha+beta+n+1) cancels (alpha+beta+2n) at n = 1
        let den = check("hat_beta_1", &[("alpha+beta+4", s + 4.0)])?;
        2.0 * (a - b) / den
    } else {
        let den = check(
            "hat_beta_n",
            &[
                ("alpha+beta+2n", s + 2.0 * nf),
                ("alpha+beta+2n+2", s + 2.0 * nf + 2.0),
            ],
        )?;
        2.0 * nf * (a - b) * (s + nf + 1.0) / den
    };

    let hat_gamma = if n == 0 {
        ZERO
    } else if n == 1 {
        // both (alpha+beta+n) and one (alpha+beta+2n) copy cancel at n = 1
        if params.is_symmetric() {
            let den = check("hat_gamma_1", &[("2alpha+3", 2.0 * a + 3.0)])?;
            2.0 * (a + 1.0) / den
        } else {
            let den = check(
                "hat_gamma_1",
                &[("alpha+beta+2", s + 2.0), ("alpha+beta+3", s + 3.0)],
            )?;
            4.0 * ((a + 1.0) * (b + 1.0)) / den
        }
    } else if params.is_symmetric() {
        let den = check(
            "hat_gamma_n",
            &[
                ("2alpha+2n-1", 2.0 * a + 2.0 * nf - 1.0),
                ("2alpha+2n+1", 2.0 * a + 2.0 * nf + 1.0),
            ],
        )?;
        nf * (2.0 * a + nf) * (2.0 * a + nf + 1.0) / den
    } else {
        let d0 = s + 2.0 * nf;
        let den = check(
            "hat_gamma_n",
            &[
                ("alpha+beta+2n-1", d0 - 1.0),
                ("alpha+beta+2n", d0),
                ("alpha+beta+2n+1", d0 + 1.0),
            ],
        )?;
        4.0 * nf * ((a + nf) * (b + nf)) * ((s + nf) * (s + nf + 1.0)) / (den * d0)
    };

    let tilde_beta = if params.is_symmetric() {
        ZERO
    } else {
        let den = check(
            "tilde_beta_n",
            &[
                ("alpha+beta+2n", s + 2.0 * nf),
                ("alpha+beta+2n+2", s + 2.0 * nf + 2.0),
            ],
        )?;
        (2.0 * nf + 2.0) * (a - b) / den
    };

    let tilde_gamma = if n == 0 {
        ZERO
    } else if params.is_symmetric() {
        let den = check(
            "tilde_gamma_n",
            &[
                ("2alpha+2n-1", 2.0 * a + 2.0 * nf - 1.0),
                ("2alpha+2n+1", 2.0 * a + 2.0 * nf + 1.0),
            ],
        )?;
        -nf * (nf + 1.0) / den
    } else {
        let d0 = s + 2.0 * nf;
        let den = check(
            "tilde_gamma_n",
            &[
                ("alpha+beta+2n-1", d0 - 1.0),
                ("alpha+beta+2n", d0),
                ("alpha+beta+2n+1", d0 + 1.0),
            ],
        )?;
        -4.0 * nf * (nf + 1.0) * ((a + nf) * (b + nf)) / (den * d0)
    };

    Ok(StructurePairs {
        hat_beta,
        hat_gamma,
        tilde_beta,
        tilde_gamma,
    })
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n > DEGREE_CAP {
        return Err(Error::DegreeCap { n, max: DEGREE_CAP });
    }
    Ok(())
}

/// Monic `P_n^{(alpha,beta)}` in the monomial basis.
pub fn jacobi_poly(params: &JacobiParams, n: usize) -> Result<Poly> {
    check_cap(n)?;
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut prev = Poly::one();
    let mut cur = Poly::new(vec![-beta_rec(params, 0)?, Complex64::ONE]);
    for k in 1..n {
        let next = cur
            .mul_linear(beta_rec(params, k)?)
            .sub(&prev.scale(gamma_rec(params, k)?));
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `P_n^{(alpha,beta)}(z)` by the value-space recurrence; preferred over
/// coefficient expansion for large `n`.
pub fn jacobi_eval(params: &JacobiParams, n: usize, z: Complex64) -> Result<Complex64> {
    check_cap(n)?;
    if n == 0 {
        return Ok(Complex64::ONE);
    }
    let mut prev = Complex64::ONE;
    let mut cur = z - beta_rec(params, 0)?;
    for k in 1..n {
        let next = (z - beta_rec(params, k)?) * cur - gamma_rec(params, k)? * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `P_m^{(alpha-1,beta-1)}(xi)` for the family shifted down from `params`.
///
/// The shifted recurrence is used directly when its coefficients exist; when
/// one degenerates (the Legendre pole case `alpha = beta = 0` is the common
/// instance) the value is recovered through the second structure relation,
/// which needs only the unshifted family.
pub fn shifted_eval(params: &JacobiParams, m: usize, xi: Complex64) -> Result<Complex64> {
    if m == 0 {
        return Ok(Complex64::ONE);
    }
    match jacobi_eval(&params.shifted_down(), m, xi) {
        Ok(v) => Ok(v),
        Err(Error::DegenerateParams { .. }) => {
            let st = structure_coeffs(params, m - 1)?;
            let mut v = jacobi_eval(params, m, xi)? + st.tilde_beta * jacobi_eval(params, m - 1, xi)?;
            if m >= 2 {
                v += st.tilde_gamma * jacobi_eval(params, m - 2, xi)?;
            }
            Ok(v)
        }
        Err(e) => Err(e),
    }
}

/// Coefficient-space counterpart of [`shifted_eval`].
pub fn shifted_poly(params: &JacobiParams, m: usize) -> Result<Poly> {
    match jacobi_poly(&params.shifted_down(), m) {
        Ok(p) => Ok(p),
        Err(Error::DegenerateParams { .. }) if m >= 1 => {
            let st = structure_coeffs(params, m - 1)?;
            let mut p = jacobi_poly(params, m)?.add(&jacobi_poly(params, m - 1)?.scale(st.tilde_beta));
            if m >= 2 {
                p = p.add(&jacobi_poly(params, m - 2)?.scale(st.tilde_gamma));
            }
            Ok(p)
        }
        Err(e) => Err(e),
    }
}

/// `||P_n^{(alpha,beta)}||^2` of the weighted square integral:
/// `2^{2n+a+b+1} n! G(a+n+1) G(b+n+1) G(a+b+n+1) / (G(a+b+2n+1) G(a+b+2n+2))`.
pub fn squared_norm(params: &JacobiParams, n: usize) -> Result<Complex64> {
    let (a, b) = (params.alpha, params.beta);
    let s = a + b;
    let nf = n as f64;
    let ln2 = std::f64::consts::LN_2;
    let log = (s + (2.0 * nf + 1.0)) * ln2
        + ln_gamma(Complex64::new(nf + 1.0, 0.0))?
        + ln_gamma(a + (nf + 1.0))?
        + ln_gamma(b + (nf + 1.0))?
        + ln_gamma(s + (nf + 1.0))?
        - ln_gamma(s + (2.0 * nf + 1.0))?
        - ln_gamma(s + (2.0 * nf + 2.0))?;
    Ok(log.exp())
}

/// `phi(z) = z + sqrt(z^2 - 1)` with the branch of larger modulus, so that
/// `|phi(z)| > 1` off `[-1, 1]`. On the segment both candidates have modulus
/// one and the branch is ambiguous.
pub fn phi(z: Complex64) -> Result<Complex64> {
    if z.im.abs() <= 1e-14 && z.re.abs() <= 1.0 + 1e-14 {
        return Err(Error::BranchAmbiguity { re: z.re, im: z.im });
    }
    let s = (z * z - 1.0).sqrt();
    let (c1, c2) = (z + s, z - s);
    Ok(if c1.norm() >= c2.norm() { c1 } else { c2 })
}

/// Residual of the second-order differential equation
/// `(1-z^2) P'' + (b - a - z(a+b+2)) P' + n(a+b+n+1) P` at `z`.
pub fn second_order_ode_residual(params: &JacobiParams, n: usize, z: Complex64) -> Result<Complex64> {
    let p = jacobi_poly(params, n)?;
    let dp = p.derivative();
    let d2p = dp.derivative();
    let (a, b) = (params.alpha, params.beta);
    Ok((1.0 - z * z) * d2p.eval(z)
        + (b - a - z * (a + b + 2.0)) * dp.eval(z)
        + (n as f64) * (a + b + (n as f64) + 1.0) * p.eval(z))
}

/// Max relative coefficient residual of
/// `d/dz P_n^{(a,b)} - n P_{n-1}^{(a+1,b+1)}`.
pub fn forward_shift_check(params: &JacobiParams, n: usize) -> Result<f64> {
    assert!(n >= 1, "forward shift needs n >= 1");
    let dp = jacobi_poly(params, n)?.derivative();
    let rhs = jacobi_poly(&params.shifted_up(), n - 1)?.scale(Complex64::new(n as f64, 0.0));
    Ok(crate::poly::coeff_distance(&dp, &rhs))
}
