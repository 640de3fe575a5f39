//! The Jacobi moment functional: `mu_k = integral of z^k (1-z)^a (1+z)^b`
//! over [-1, 1] for `Re a, Re b > -1`, and bilinear inner products of
//! coefficient polynomials against it.
//!
//! Moments come from the exact forward recurrence
//! `mu_{k+1} = ((b - a) mu_k + k mu_{k-1}) / (a + b + k + 2)`
//! (integrate the Pearson derivative `d/dz[(1-z^2) w] = (b - a - (a+b+2) z) w`
//! by parts; the boundary terms vanish in the standard regime), seeded with
//! `mu_0 = 2^{a+b+1} G(a+1) G(b+1) / G(a+b+2)`.
//!
//! The recurrence and every inner-product accumulation run in double-double
//! precision: the bilinear sums cancel far below their term magnitudes, and
//! plain f64 loses the orthogonality relations entirely past degree ~10.

use crate::dd::{Cdd, Dd};
use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::jacobi::{self, JacobiParams};
use crate::polar::{polar_poly_recurrence, PolarSpec};
use crate::poly::Poly;
use num_complex::Complex64;

/// Cached moments of one parameter pair, immutable after construction.
#[derive(Debug, Clone)]
pub struct MomentTable {
    params: JacobiParams,
    mu: Vec<Cdd>,
}

impl MomentTable {
    /// Builds `mu_0 .. mu_capacity`. Standard regime only.
    pub fn build(params: &JacobiParams, capacity: usize) -> Result<MomentTable> {
        if !params.is_standard() {
            return Err(Error::RegimeError);
        }
        let (a, b) = (params.alpha, params.beta);
        let mu0 = Complex64::new(2.0, 0.0).powc(a + b + 1.0) * gamma(a + 1.0)? * gamma(b + 1.0)?
            / gamma(a + b + 2.0)?;
        let mut mu = Vec::with_capacity(capacity + 1);
        mu.push(Cdd::from_c64(mu0));
        let b_minus_a = Cdd::from_c64(b - a);
        for k in 0..capacity {
            let mut num = b_minus_a.mul(mu[k]);
            if k >= 1 {
                num = num.add(mu[k - 1].mul_c64(Complex64::new(k as f64, 0.0)));
            }
            // Re(a+b+k+2) > k, never zero in the standard regime
            mu.push(num.div_c64(a + b + (k as f64 + 2.0)));
        }
        Ok(MomentTable { params: *params, mu })
    }

    pub fn params(&self) -> &JacobiParams {
        &self.params
    }

    pub fn capacity(&self) -> usize {
        self.mu.len() - 1
    }

    pub fn mu(&self, k: usize) -> Complex64 {
        self.mu[k].to_c64()
    }

    fn require(&self, needed: usize) -> Result<()> {
        if needed > self.capacity() {
            return Err(Error::CapacityExceeded {
                capacity: self.capacity(),
                needed,
            });
        }
        Ok(())
    }
}

/// The bilinear moment functional `sum_{i,j} p_i q_j mu_{i+j}`.
///
/// Not conjugate-symmetric: the functional extends a complex-weight integral
/// bilinearly, so no conjugation is applied to either argument.
pub fn inner_product(p: &Poly, q: &Poly, table: &MomentTable) -> Result<Complex64> {
    Ok(inner_product_detail(p, q, table)?.0)
}

/// Inner product together with the absolute mass `sum |p_i q_j mu_{i+j}|`,
/// the natural scale for judging how well a cancellation to zero held.
pub fn inner_product_detail(p: &Poly, q: &Poly, table: &MomentTable) -> Result<(Complex64, f64)> {
    if p.is_zero() || q.is_zero() {
        return Ok((Complex64::ZERO, 0.0));
    }
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    table.require(dp + dq)?;
    let mut acc = Cdd::ZERO;
    let mut mass = Dd::ZERO;
    for (i, &pi) in p.coeffs().iter().enumerate() {
        for (j, &qj) in q.coeffs().iter().enumerate() {
            let term = Cdd::prod(pi, qj).mul(table.mu[i + j]);
            acc = acc.add(term);
            mass = mass.add(Dd::from_f64(term.norm()));
        }
    }
    Ok((acc.to_c64(), mass.to_f64()))
}

/// Which of the six structural cases an index pair `(n, m)` falls into in the
/// second orthogonality table.
pub fn point2_case(n: usize, m: usize) -> &'static str {
    if m == 0 {
        "m=0"
    } else if m + 1 < n {
        "0<m<n-1"
    } else if m + 1 == n {
        "m=n-1"
    } else if m == n {
        "m=n"
    } else if m == n + 1 {
        "m=n+1"
    } else {
        "m>n+1"
    }
}

/// Residuals of both orthogonality statements for the pair `(spec.degree, m)`.
#[derive(Debug, Clone)]
pub struct Theorem1Report {
    /// `<P_n + (z-xi) P_n', P_m>` against `delta_{nm} (n+1) ||P_n||^2`:
    /// relative on the diagonal, mass-scaled off it.
    pub residual_first: f64,
    /// Which structural case `(n, m)` fell into for the second statement.
    pub case_label: &'static str,
    /// `<(z-xi) P_n, P_m>` against the six-case table; relative against
    /// nonzero expectations, mass-scaled against zero ones. Zero when
    /// `n <= 1` (the statement assumes `n > 1`).
    pub residual_second: f64,
}

/// Residual of `v` against `expected`. Relative when the expected value
/// carries weight; when it sits below 1e-6 of the bilinear mass (the tiny
/// structural norms at degree ~12), the floor keeps the demand within what
/// f64 polynomial coefficients can encode (~1e-15 of the mass).
fn scaled(v: Complex64, expected: Complex64, mass: f64) -> f64 {
    if expected == Complex64::ZERO {
        v.norm() / mass.max(1e-300)
    } else {
        (v - expected).norm() / expected.norm().max(1e-6 * mass)
    }
}

/// Evaluates both orthogonality statements for `(n, m) = (spec.degree, m)`
/// through the moment functional, with every expected value computed by an
/// independent route (gamma-function norms, value recurrences).
pub fn verify_theorem1(spec: &PolarSpec, m: usize) -> Result<Theorem1Report> {
    let n = spec.degree;
    let params = &spec.params;
    let table = MomentTable::build(params, 2 * n.max(m) + 4)?;

    let p = polar_poly_recurrence(spec)?;
    let pm = jacobi::jacobi_poly(params, m)?;

    // first statement: L_xi[P_n] against P_m
    let l = p.add(&p.derivative().mul_linear(spec.pole));
    let (v1, mass1) = inner_product_detail(&l, &pm, &table)?;
    let expected1 = if m == n {
        jacobi::squared_norm(params, n)? * (n as f64 + 1.0)
    } else {
        Complex64::ZERO
    };
    let residual_first = scaled(v1, expected1, mass1);

    // second statement: (z - xi) P_n against P_m, n > 1 only
    let case_label = point2_case(n, m);
    let residual_second = if n <= 1 {
        0.0
    } else {
        let zp = p.mul_linear(spec.pole);
        let (v2, mass2) = inner_product_detail(&zp, &pm, &table)?;
        let st = jacobi::structure_coeffs(params, n)?;
        let expected2 = match case_label {
            "m=0" => -table.mu(0) * jacobi::shifted_eval(params, n + 1, spec.pole)?,
            "m=n-1" => st.tilde_gamma * jacobi::squared_norm(params, n - 1)?,
            "m=n" => st.tilde_beta * jacobi::squared_norm(params, n)?,
            "m=n+1" => jacobi::squared_norm(params, n + 1)?,
            _ => Complex64::ZERO,
        };
        scaled(v2, expected2, mass2)
    };

    Ok(Theorem1Report {
        residual_first,
        case_label,
        residual_second,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn legendre_moments() {
        // mu_0 passes through gamma and a complex power, so everything is
        // exact only up to a common ~1 ulp factor
        let t = MomentTable::build(&JacobiParams::real(0.0, 0.0), 10).unwrap();
        assert!((t.mu(0) - 2.0).norm() < 1e-14);
        assert!(t.mu(1).norm() < 1e-15);
        assert!((t.mu(2) - 2.0 / 3.0).norm() < 1e-14);
        // uniform weight: mu_k = 2/(k+1) for even k
        for k in (0..=10).step_by(2) {
            assert!((t.mu(k) - 2.0 / (k as f64 + 1.0)).norm() < 1e-14, "k={k}");
        }
    }

    #[test]
    fn mass_of_one_sided_weight() {
        // (1 - z) on [-1, 1] integrates to 2
        let t = MomentTable::build(&JacobiParams::real(1.0, 0.0), 2).unwrap();
        assert!((t.mu(0) - 2.0).norm() < 1e-14);
    }

    #[test]
    fn arcsine_total_mass_is_pi() {
        let t = MomentTable::build(&JacobiParams::real(-0.5, -0.5), 2).unwrap();
        assert!((t.mu(0) - std::f64::consts::PI).norm() < 1e-13);
    }

    #[test]
    fn odd_moments_vanish_for_symmetric_weight() {
        let t = MomentTable::build(&JacobiParams::real(0.7, 0.7), 21).unwrap();
        let scale = t.mu(0).norm();
        for k in (1..=21).step_by(2) {
            assert!(t.mu(k).norm() <= 1e-12 * scale, "k={k}");
        }
    }

    #[test]
    fn nonstandard_regime_rejected() {
        assert!(matches!(
            MomentTable::build(&JacobiParams::real(-1.5, 0.0), 4),
            Err(Error::RegimeError)
        ));
    }

    #[test]
    fn capacity_guard() {
        let t = MomentTable::build(&JacobiParams::real(0.0, 0.0), 4).unwrap();
        let p = Poly::new(vec![C::ZERO, C::ZERO, C::ZERO, C::ONE]); // z^3
        assert!(matches!(
            inner_product(&p, &p, &t),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    // Independent oracle: mu_k = 2^{a+b+1} sum_j C(k,j) (-2)^j B(a+j+1, b+1)
    // from the substitution z = 1 - 2t.
    fn binomial_beta_oracle(a: C, b: C, k: usize) -> C {
        let beta_fn = |x: C, y: C| {
            gamma(x).unwrap() * gamma(y).unwrap() / gamma(x + y).unwrap()
        };
        let mut sum = C::ZERO;
        let mut binom = 1.0;
        for j in 0..=k {
            if j > 0 {
                binom *= (k - j + 1) as f64 / j as f64;
            }
            let sign = (-2.0f64).powi(j as i32);
            sum += binom * sign * beta_fn(a + (j as f64 + 1.0), b + 1.0);
        }
        C::new(2.0, 0.0).powc(a + b + 1.0) * sum
    }

    #[test]
    fn moments_match_beta_integral_oracle() {
        for (ar, ai, br, bi) in [
            (0.0, 0.0, 0.0, 0.0),
            (1.0, 0.0, 0.0, 0.0),
            (-0.5, 0.0, -0.5, 0.0),
            (0.5, 1.0, 2.0, -0.7),
            (2.3, -0.2, -0.9, 0.4),
        ] {
            let params = JacobiParams::new(c(ar, ai), c(br, bi));
            let t = MomentTable::build(&params, 6).unwrap();
            for k in 0..=6 {
                let oracle = binomial_beta_oracle(params.alpha, params.beta, k);
                let got = t.mu(k);
                assert!(
                    (got - oracle).norm() <= 1e-10 * (1.0 + oracle.norm()),
                    "({ar},{ai},{br},{bi}) k={k}: {got} vs {oracle}"
                );
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let t = MomentTable::build(&JacobiParams::real(0.0, 0.0), 4).unwrap();
        let one = Poly::one();
        let z = Poly::new(vec![C::ZERO, C::ONE]);
        assert!((inner_product(&one, &one, &t).unwrap() - 2.0).norm() < 1e-15);
        let zz = inner_product(&z, &z, &t).unwrap();
        assert!((zz - 2.0 / 3.0).norm() < 1e-15);
        let nrm = jacobi::squared_norm(&JacobiParams::real(0.0, 0.0), 1).unwrap();
        assert!((zz - nrm).norm() < 1e-13);
    }

    #[test]
    fn polynomials_are_orthogonal() {
        let params = JacobiParams::real(0.5, 2.0);
        let t = MomentTable::build(&params, 10).unwrap();
        let p3 = jacobi::jacobi_poly(&params, 3).unwrap();
        let p1 = jacobi::jacobi_poly(&params, 1).unwrap();
        let v = inner_product(&p3, &p1, &t).unwrap();
        let scale = jacobi::squared_norm(&params, 3).unwrap().norm().sqrt()
            * jacobi::squared_norm(&params, 1).unwrap().norm().sqrt();
        assert!(v.norm() <= 1e-10 * scale);
    }

    #[test]
    fn gram_matrix_is_positive_definite() {
        // Hankel positivity of {1, z, ..., z^5} for a real standard weight
        for (a, b) in [(0.0, 0.0), (0.5, 2.0), (-0.5, -0.5), (3.0, 0.25)] {
            let t = MomentTable::build(&JacobiParams::real(a, b), 10).unwrap();
            let g: Vec<Vec<f64>> = (0..6)
                .map(|i| (0..6).map(|j| t.mu(i + j).re).collect())
                .collect();
            // leading principal minors via Gaussian elimination
            for size in 1..=6 {
                let mut m: Vec<Vec<f64>> =
                    (0..size).map(|i| g[i][..size].to_vec()).collect();
                let mut det = 1.0;
                for col in 0..size {
                    let pivot = (col..size)
                        .max_by(|&r1, &r2| m[r1][col].abs().total_cmp(&m[r2][col].abs()))
                        .unwrap();
                    if pivot != col {
                        m.swap(pivot, col);
                        det = -det;
                    }
                    det *= m[col][col];
                    for row in col + 1..size {
                        let f = m[row][col] / m[col][col];
                        for j in col..size {
                            m[row][j] -= f * m[col][j];
                        }
                    }
                }
                assert!(det > 1e-10, "(a,b)=({a},{b}) minor {size}: {det}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn bilinearity(
            pc in prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 1..6),
            qc in prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 1..6),
            rc in prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 1..6),
            ar in (-4.0..4.0f64), br in (-4.0..4.0f64),
        ) {
            let a = C::new(ar.abs() - 0.9, 0.0);
            let b = C::new(br.abs() - 0.9, 0.0);
            let t = MomentTable::build(&JacobiParams::new(a, b), 12).unwrap();
            let mk = |v: &[(f64, f64)]| Poly::new(v.iter().map(|&(x, y)| C::new(x, y)).collect());
            let (p, q, r) = (mk(&pc), mk(&qc), mk(&rc));
            let (ca, cb) = (C::new(1.7, -0.4), C::new(-0.3, 0.9));
            let lhs = inner_product(&p.scale(ca).add(&q.scale(cb)), &r, &t).unwrap();
            let rhs = ca * inner_product(&p, &r, &t).unwrap() + cb * inner_product(&q, &r, &t).unwrap();
            let scale = 1.0 + lhs.norm().max(rhs.norm());
            prop_assert!((lhs - rhs).norm() / scale <= 1e-13);
        }
    }

    #[test]
    fn theorem1_diagonal_and_off_diagonal() {
        let spec = PolarSpec::new(JacobiParams::real(0.5, 2.0), c(3.0, 0.0), 5);
        for m in 0..=8 {
            let rep = verify_theorem1(&spec, m).unwrap();
            assert!(
                rep.residual_first <= if m == 5 { 1e-8 } else { 1e-9 },
                "m={m}: first {}",
                rep.residual_first
            );
            assert!(rep.residual_second <= 1e-8, "m={m} ({}): second {}", rep.case_label, rep.residual_second);
        }
    }

    #[test]
    fn theorem1_m0_value_against_direct_route() {
        // the m = 0 entry equals -mu_0 P_{n+1}^{(a-1,b-1)}(xi); both sides
        // computed by fully separate paths
        let params = JacobiParams::real(0.5, 2.0);
        let spec = PolarSpec::new(params, c(3.0, 0.0), 5);
        let t = MomentTable::build(&params, 20).unwrap();
        let p = polar_poly_recurrence(&spec).unwrap();
        let lhs = inner_product(&p.mul_linear(spec.pole), &Poly::one(), &t).unwrap();
        let rhs = -t.mu(0) * jacobi::shifted_eval(&params, 6, spec.pole).unwrap();
        assert!((lhs - rhs).norm() <= 1e-8 * rhs.norm());
    }

    #[test]
    fn point2_case_labels() {
        assert_eq!(point2_case(5, 0), "m=0");
        assert_eq!(point2_case(5, 2), "0<m<n-1");
        assert_eq!(point2_case(5, 4), "m=n-1");
        assert_eq!(point2_case(5, 5), "m=n");
        assert_eq!(point2_case(5, 6), "m=n+1");
        assert_eq!(point2_case(5, 9), "m>n+1");
        assert_eq!(point2_case(2, 1), "m=n-1"); // band empty at n = 2
    }
}
