//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line. Run with `cargo test -p polar-jacobi-core --test acceptance
//! -- --nocapture` to see the lines.

use num_complex::Complex64 as C;
use polar_jacobi_core::jacobi::{self, JacobiParams};
use polar_jacobi_core::moments::{inner_product, verify_theorem1, MomentTable};
use polar_jacobi_core::polar::{
    factorization_check, operator_identity_residual, polar_poly_divdiff, polar_poly_recurrence,
    reflect_check, FactorSide, PolarSpec,
};
use polar_jacobi_core::poly::{coeff_distance, Poly};
use polar_jacobi_core::verify::{random_admissible_spec, random_standard_spec, SplitMix64};
use polar_jacobi_core::zeros::{
    asymptotic_ellipse_distance, disk_bound_check, find_roots, level_curve_residuals,
};
use std::time::Instant;

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

fn elapsed_under(t0: Instant, budget_s: f64, label: &str) {
    let dt = t0.elapsed().as_secs_f64();
    assert!(dt < budget_s, "{label} took {dt:.2}s, budget {budget_s}s");
}

#[test]
fn criterion_01_double_root_reproduction() {
    let t0 = Instant::now();
    let s6 = 6f64.sqrt();
    let xi = c((1.0 + 2.0 * s6) / 5.0, 0.0);
    let expected_root = c((1.0 - s6) / 5.0, 0.0);
    let spec = PolarSpec::new(JacobiParams::real(0.0, 1.0), xi, 2);
    for (route, p) in [
        ("recurrence", polar_poly_recurrence(&spec).unwrap()),
        ("divided difference", polar_poly_divdiff(&spec).unwrap()),
    ] {
        let zs = find_roots(&p, 1e-12).unwrap();
        assert_eq!(zs.roots.len(), 1, "{route}: expected one clustered root");
        assert_eq!(zs.roots[0].multiplicity, 2, "{route}: multiplicity");
        let err = (zs.roots[0].location - expected_root).norm();
        assert!(err <= 1e-8, "{route}: position error {err:.3e}");
    }
    elapsed_under(t0, 1.0, "criterion 1");
    println!("PASS criterion 1: double root of P_2(z; 0, 1; (1+2*sqrt6)/5) at (1-sqrt6)/5, both routes");
}

#[test]
fn criterion_02_factorization_reproduction() {
    let t0 = Instant::now();
    // (z-1)^4 (z + 5/7) expanded by hand:
    // z^5 - 23/7 z^4 + 22/7 z^3 + 2/7 z^2 - 13/7 z + 5/7.
    // (The linear factor is z + 5/7 -- its zero at -5/7 -- as forced by the
    // identity P_n + (z-xi) P_n' = (n+1) P_n^{(a,b)} and the factorization
    // P_5^{(-4,1)} = (z-1)^4 P_1^{(4,1)} with P_1^{(4,1)} = z + 3/7.)
    let expect = Poly::new(vec![
        c(5.0 / 7.0, 0.0),
        c(-13.0 / 7.0, 0.0),
        c(2.0 / 7.0, 0.0),
        c(22.0 / 7.0, 0.0),
        c(-23.0 / 7.0, 0.0),
        c(1.0, 0.0),
    ]);
    let rep = factorization_check(4, C::ONE, 1, FactorSide::MinusAlpha).unwrap();
    assert!(rep.factor_residual <= 1e-10, "route agreement {:.3e}", rep.factor_residual);
    let d = coeff_distance(&rep.polynomial, &expect);
    assert!(d <= 1e-10, "coefficient distance {d:.3e}");
    elapsed_under(t0, 1.0, "criterion 2");
    println!("PASS criterion 2: P_5(z; -4, 1; 1) = (z-1)^4 (z + 5/7) coefficient-wise");
}

#[test]
fn criterion_03_operator_identity_sweep() {
    let t0 = Instant::now();
    let mut rng = SplitMix64::new(0xC3);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let spec = random_admissible_spec(&mut rng, 40);
        worst = worst.max(operator_identity_residual(&spec).unwrap());
    }
    assert!(worst <= 1e-10, "worst residual {worst:.3e}");
    elapsed_under(t0, 10.0, "criterion 3");
    println!("PASS criterion 3: operator identity residual {worst:.3e} <= 1e-10 over 200 specs");
}

#[test]
fn criterion_04_dual_construction_equivalence() {
    let t0 = Instant::now();
    let mut rng = SplitMix64::new(0xC3); // same sweep as criterion 3
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let spec = random_admissible_spec(&mut rng, 40);
        let d = coeff_distance(
            &polar_poly_recurrence(&spec).unwrap(),
            &polar_poly_divdiff(&spec).unwrap(),
        );
        worst = worst.max(d);
    }
    assert!(worst <= 1e-8, "worst discrepancy {worst:.3e}");
    elapsed_under(t0, 10.0, "criterion 4");
    println!("PASS criterion 4: recurrence and divided-difference constructions agree to {worst:.3e}");
}

#[test]
fn criterion_05_orthogonality_statements() {
    let t0 = Instant::now();
    let mut rng = SplitMix64::new(0xC5);
    let mut worst_first = 0.0f64;
    let mut worst_diag = 0.0f64;
    let mut worst_second = 0.0f64;
    for _ in 0..10 {
        let spec = random_standard_spec(&mut rng, 12);
        for m in 0..=(spec.degree + 2) {
            let rep = verify_theorem1(&spec, m).unwrap();
            if m == spec.degree {
                worst_diag = worst_diag.max(rep.residual_first);
            } else {
                worst_first = worst_first.max(rep.residual_first);
            }
            worst_second = worst_second.max(rep.residual_second);
        }
    }
    assert!(worst_first <= 1e-9, "off-diagonal {worst_first:.3e}");
    assert!(worst_diag <= 1e-8, "diagonal {worst_diag:.3e}");
    assert!(worst_second <= 1e-8, "second statement {worst_second:.3e}");
    elapsed_under(t0, 20.0, "criterion 5");
    println!(
        "PASS criterion 5: orthogonality off-diag {worst_first:.3e}, diag {worst_diag:.3e}, product table {worst_second:.3e}"
    );
}

#[test]
fn criterion_06_norm_cross_check() {
    let t0 = Instant::now();
    let mut rng = SplitMix64::new(0xC6);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let params = JacobiParams::new(
            c(rng.range(-0.9, 3.0), rng.range(-1.0, 1.0)),
            c(rng.range(-0.9, 3.0), rng.range(-1.0, 1.0)),
        );
        let table = MomentTable::build(&params, 28).unwrap();
        for n in 0..=12 {
            let p = jacobi::jacobi_poly(&params, n).unwrap();
            let via_moments = inner_product(&p, &p, &table).unwrap();
            let via_gamma = jacobi::squared_norm(&params, n).unwrap();
            let rel = (via_moments - via_gamma).norm() / via_gamma.norm();
            worst = worst.max(rel);
        }
    }
    assert!(worst <= 1e-8, "worst relative difference {worst:.3e}");
    elapsed_under(t0, 10.0, "criterion 6");
    println!("PASS criterion 6: gamma-formula norms match moment self-products to {worst:.3e}");
}

#[test]
fn criterion_07_figure_one_point_sets() {
    let t0 = Instant::now();
    let sets = [
        (JacobiParams::real(0.5, 2.0), 30usize),
        (JacobiParams::real(3f64.sqrt(), std::f64::consts::PI), 23),
    ];
    let mut worst_excess = 0.0f64;
    let mut worst_level = 0.0f64;
    let mut zero_count = 0usize;
    for (params, count) in sets {
        for k in 0..count {
            let pole = C::from_polar(3.0, 2.0 * std::f64::consts::PI * k as f64 / count as f64);
            let spec = PolarSpec::new(params, pole, 30);
            let p = polar_poly_recurrence(&spec).unwrap();
            let zs = find_roots(&p, 1e-10).unwrap();
            zero_count += zs.total_multiplicity();
            let db = disk_bound_check(&zs, pole);
            assert!(db.max_excess <= 1e-6, "pole {k}: excess {}", db.max_excess);
            worst_excess = worst_excess.max(db.max_excess);
            for r in level_curve_residuals(&zs, &spec).unwrap() {
                assert!(r <= 1e-6, "pole {k}: level residual {r}");
                worst_level = worst_level.max(r);
            }
        }
    }
    assert_eq!(zero_count, 30 * 30 + 23 * 30);
    elapsed_under(t0, 60.0, "criterion 7");
    println!(
        "PASS criterion 7: {zero_count} zeros inside their disks (excess {worst_excess:.3e}), level-curve residual {worst_level:.3e}"
    );
}

#[test]
fn criterion_08_reflection_symmetry() {
    let t0 = Instant::now();
    let mut rng = SplitMix64::new(0xC8);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let spec = random_admissible_spec(&mut rng, 40);
        worst = worst.max(reflect_check(&spec).unwrap());
    }
    // nonstandard parameters of the unit-circle pole sweep
    let params = JacobiParams::new(c(-0.5, 1.0), c(-1.45, -0.5));
    for n in 2..=5 {
        for k in 0..30 {
            let pole = C::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 30.0);
            let spec = PolarSpec::new(params, pole, n);
            worst = worst.max(reflect_check(&spec).unwrap());
        }
    }
    assert!(worst <= 1e-11, "worst residual {worst:.3e}");
    elapsed_under(t0, 10.0, "criterion 8");
    println!("PASS criterion 8: reflection identity residual {worst:.3e} <= 1e-11");
}

#[test]
fn criterion_09_accumulation_set_trend() {
    let t0 = Instant::now();
    let params = JacobiParams::real(0.3, 0.3);
    let xi = c(2.0, 0.0);
    let dist = |n: usize| -> f64 {
        let p = polar_poly_recurrence(&PolarSpec::new(params, xi, n)).unwrap();
        let zs = find_roots(&p, 1e-10).unwrap();
        asymptotic_ellipse_distance(&zs, xi).unwrap()
    };
    let (d15, d60) = (dist(15), dist(60));
    assert!(
        d60 < d15,
        "distance to the accumulation set did not shrink: {d15} -> {d60}"
    );
    elapsed_under(t0, 30.0, "criterion 9");
    println!("PASS criterion 9: zero distance to accumulation set shrinks {d15:.6} -> {d60:.6}");
}

/// Tanh-sinh quadrature of `z^k (1-z)^a (1+z)^b` over (-1, 1), written
/// against the moment recurrence. Endpoint factors are computed from the
/// transform itself so the singularities at +-1 never surface.
mod quadrature_oracle {
    use num_complex::Complex64 as C;

    fn integrand_log_parts(u: f64) -> (f64, f64) {
        // z = tanh(u): 1 - z = 2 e^{-2u} / (1 + e^{-2u}), 1 + z = 2 / (1 + e^{-2u})
        let log1p_em2u = (-2.0 * u).exp().ln_1p();
        let ln_one_minus = std::f64::consts::LN_2 - 2.0 * u - log1p_em2u;
        let ln_one_plus = std::f64::consts::LN_2 - log1p_em2u;
        (ln_one_minus, ln_one_plus)
    }

    pub fn moment(alpha: C, beta: C, k: usize, tol: f64) -> C {
        let half_pi = std::f64::consts::FRAC_PI_2;
        let t_max = 6.0;
        let eval = |t: f64| -> C {
            let u = half_pi * t.sinh();
            let z = u.tanh();
            let (lm, lp) = if u >= 0.0 {
                integrand_log_parts(u)
            } else {
                let (a, b) = integrand_log_parts(-u);
                (b, a)
            };
            let weight = (alpha * lm + beta * lp).exp();
            // dz/dt = (pi/2) cosh t / cosh^2((pi/2) sinh t)
            let sech = 1.0 / u.cosh();
            let jac = half_pi * t.cosh() * sech * sech;
            z.powi(k as i32) * weight * jac
        };
        let mut h = 0.5;
        let mut total = C::ZERO;
        // level 0
        let steps = (t_max / h) as i64;
        for i in -steps..=steps {
            total += eval(i as f64 * h);
        }
        total *= h;
        for _ in 0..10 {
            // refine: add midpoints at half the step
            h *= 0.5;
            let steps = (t_max / h) as i64;
            let mut mid = C::ZERO;
            let mut i = -steps + 1;
            while i <= steps {
                mid += eval(i as f64 * h);
                i += 2;
            }
            let refined = total * 0.5 + mid * h;
            let change = (refined - total).norm();
            total = refined;
            if change <= tol * (1.0 + total.norm()) {
                break;
            }
        }
        total
    }
}

#[test]
fn criterion_10_moment_recurrence_vs_quadrature() {
    let t0 = Instant::now();
    let mut rng = SplitMix64::new(0xCA);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let alpha = c(rng.range(-0.9, 3.0), rng.range(-1.0, 1.0));
        let beta = c(rng.range(-0.9, 3.0), rng.range(-1.0, 1.0));
        let table = MomentTable::build(&JacobiParams::new(alpha, beta), 10).unwrap();
        for k in 0..=10 {
            let oracle = quadrature_oracle::moment(alpha, beta, k, 1e-12);
            let got = table.mu(k);
            let rel = (got - oracle).norm() / (1.0 + oracle.norm());
            worst = worst.max(rel);
        }
    }
    assert!(worst <= 1e-8, "worst relative error {worst:.3e}");
    elapsed_under(t0, 30.0, "criterion 10");
    println!("PASS criterion 10: recurrence moments match adaptive quadrature to {worst:.3e}");
}
