//! Implementations of the five subcommands. Each returns the full output as a
//! string (written to `--out` or stdout by the caller) so outputs stay
//! byte-deterministic and testable.

use crate::cpx::{fmt_f64, fmt_pair};
use polar_jacobi_core::error::Error;
use polar_jacobi_core::jacobi::JacobiParams;
use polar_jacobi_core::polar::{
    factorization_check, polar_poly_divdiff, polar_poly_recurrence, FactorSide, PolarSpec,
};
use polar_jacobi_core::poly::{coeff_distance, Poly};
use polar_jacobi_core::verify::{run_all, VerifyConfig};
use polar_jacobi_core::zeros::{disk_bound_check, find_roots, level_curve_residuals, ZeroSet};
use polar_jacobi_core::{Complex64, Result};
use rayon::prelude::*;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

pub struct SpecArgs {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub xi: Complex64,
    pub n: usize,
    pub tol: f64,
}

impl SpecArgs {
    fn spec(&self) -> PolarSpec {
        PolarSpec::new(JacobiParams::new(self.alpha, self.beta), self.xi, self.n)
    }
}

fn negative_integer(z: Complex64) -> Option<usize> {
    (z.im == 0.0 && z.re < 0.0 && z.re.fract() == 0.0).then(|| -z.re as usize)
}

/// The general pair of constructions, or the endpoint factorization when a
/// parameter is a negative integer with the pole at the matching endpoint
/// (the only regime where the polar polynomial exists but the generic
/// recurrences have poles).
fn build_both(spec: &PolarSpec) -> Result<(Poly, f64, &'static str)> {
    let general = polar_poly_recurrence(spec).and_then(|p| {
        let q = polar_poly_divdiff(spec)?;
        Ok((p, q))
    });
    match general {
        Ok((p, q)) => {
            let cross = coeff_distance(&p, &q);
            Ok((p, cross, "recurrence+divided_difference"))
        }
        Err(Error::DegenerateParams { .. }) => {
            let side = if spec.pole == Complex64::ONE {
                negative_integer(spec.params.alpha).map(|k| (k, spec.params.beta, FactorSide::MinusAlpha))
            } else if spec.pole == -Complex64::ONE {
                negative_integer(spec.params.beta).map(|k| (k, spec.params.alpha, FactorSide::MinusBeta))
            } else {
                None
            };
            match side {
                Some((k, other, side)) if k >= 1 && spec.degree >= k => {
                    let rep = factorization_check(k, other, spec.degree - k, side)?;
                    Ok((rep.polynomial, rep.factor_residual, "endpoint_factorization"))
                }
                _ => {
                    // report the original degeneracy
                    let p = polar_poly_recurrence(spec)?;
                    let q = polar_poly_divdiff(spec)?;
                    let cross = coeff_distance(&p, &q);
                    Ok((p, cross, "recurrence+divided_difference"))
                }
            }
        }
        Err(e) => Err(e),
    }
}

pub fn cmd_coeffs(args: &SpecArgs, format: Format) -> Result<String> {
    let spec = args.spec();
    let (p, cross) = build_both(&spec)?;
    match format {
        Format::Json => {
            let coeffs: Vec<String> = (0..=args.n).map(|k| fmt_pair(p.coeff(k))).collect();
            Ok(format!(
                "{{\"n\":{},\"alpha\":{},\"beta\":{},\"xi\":{},\"coeffs\":[{}],\"cross_check_residual\":{}}}\n",
                args.n,
                fmt_pair(args.alpha),
                fmt_pair(args.beta),
                fmt_pair(args.xi),
                coeffs.join(","),
                fmt_f64(cross),
            ))
        }
        Format::Csv => {
            let mut out = String::from("power,re,im\n");
            for k in 0..=args.n {
                let c = p.coeff(k);
                out.push_str(&format!("{k},{},{}\n", fmt_f64(c.re), fmt_f64(c.im)));
            }
            Ok(out)
        }
    }
}

pub fn cmd_eval(args: &SpecArgs, at: Complex64) -> Result<String> {
    let spec = args.spec();
    let p = polar_poly_recurrence(&spec)?;
    let q = polar_poly_divdiff(&spec)?;
    let (v, w) = (p.eval(at), q.eval(at));
    let cross = (v - w).norm() / (1.0 + v.norm());
    Ok(format!(
        "{{\"n\":{},\"alpha\":{},\"beta\":{},\"xi\":{},\"at\":{},\"value\":{},\"cross_check_residual\":{}}}\n",
        args.n,
        fmt_pair(args.alpha),
        fmt_pair(args.beta),
        fmt_pair(args.xi),
        fmt_pair(at),
        fmt_pair(v),
        fmt_f64(cross),
    ))
}

struct PoleReport {
    k: usize,
    zeros: ZeroSet,
    disk_radius: f64,
    max_excess: f64,
    level_max: Option<f64>,
}

fn analyze_pole(params: JacobiParams, xi: Complex64, n: usize, tol: f64, k: usize) -> Result<PoleReport> {
    let spec = PolarSpec::new(params, xi, n);
    let p = polar_poly_recurrence(&spec)?;
    let zeros = find_roots(&p, tol)?;
    let db = disk_bound_check(&zeros, xi);
    let level_max = match level_curve_residuals(&zeros, &spec) {
        Ok(res) => Some(res.into_iter().fold(0.0, f64::max)),
        Err(Error::DegenerateParams { .. }) => None, // shifted family unreachable
        Err(e) => return Err(e),
    };
    Ok(PoleReport {
        k,
        zeros,
        disk_radius: db.radius,
        max_excess: db.max_excess,
        level_max,
    })
}

fn record_json(rep: &PoleReport, with_k: bool) -> String {
    let zeros: Vec<String> = rep
        .zeros
        .roots
        .iter()
        .map(|r| {
            format!(
                "{{\"z\":{},\"mult\":{},\"residual\":{}}}",
                fmt_pair(r.location),
                r.multiplicity,
                fmt_f64(r.residual)
            )
        })
        .collect();
    let level = match rep.level_max {
        Some(v) => fmt_f64(v),
        None => "null".into(),
    };
    let prefix = if with_k {
        format!("\"k\":{},", rep.k)
    } else {
        String::new()
    };
    format!(
        "{{{}\"zeros\":[{}],\"disk_radius\":{},\"max_excess\":{},\"level_curve_max_residual\":{}}}",
        prefix,
        zeros.join(","),
        fmt_f64(rep.disk_radius),
        fmt_f64(rep.max_excess),
        level,
    )
}

fn csv_rows(reports: &[PoleReport]) -> String {
    let mut rows: Vec<(usize, f64, f64)> = Vec::new();
    for rep in reports {
        for z in rep.zeros.expanded() {
            rows.push((rep.k, z.re, z.im));
        }
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)).then(a.2.total_cmp(&b.2)));
    let mut out = String::from("k,re,im\n");
    for (k, re, im) in rows {
        out.push_str(&format!("{k},{},{}\n", fmt_f64(re), fmt_f64(im)));
    }
    out
}

pub fn cmd_roots(
    args: &SpecArgs,
    sweep: Option<(usize, f64)>,
    format: Format,
) -> Result<String> {
    let params = JacobiParams::new(args.alpha, args.beta);
    let reports: Vec<PoleReport> = match sweep {
        None => vec![analyze_pole(params, args.xi, args.n, args.tol, 0)?],
        Some((count, radius)) => {
            let mut reports = (0..count)
                .into_par_iter()
                .map(|k| {
                    let th = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
                    analyze_pole(params, Complex64::from_polar(radius, th), args.n, args.tol, k)
                })
                .collect::<Result<Vec<_>>>()?;
            reports.sort_by_key(|r| r.k);
            reports
        }
    };
    match format {
        Format::Csv => Ok(csv_rows(&reports)),
        Format::Json => {
            if sweep.is_none() {
                Ok(format!("{}\n", record_json(&reports[0], false)))
            } else {
                let records: Vec<String> =
                    reports.iter().map(|r| record_json(r, true)).collect();
                Ok(format!("[{}]\n", records.join(",")))
            }
        }
    }
}

pub fn cmd_verify(
    alpha: Option<Complex64>,
    beta: Option<Complex64>,
    tol: f64,
) -> Result<(String, bool)> {
    let cfg = VerifyConfig {
        tol,
        alpha,
        beta,
        ..Default::default()
    };
    let results = run_all(&cfg)?;
    let mut parts = Vec::new();
    let mut all_pass = true;
    for r in &results {
        all_pass &= r.pass;
        let status = if r.not_applicable {
            ",\"status\":\"not_applicable\""
        } else {
            ""
        };
        parts.push(format!(
            "\"{}\":{{\"pass\":{},\"max_residual\":{},\"cases\":{}{}}}",
            r.name,
            r.pass,
            fmt_f64(r.max_residual),
            r.cases,
            status,
        ));
    }
    Ok((format!("{{{}}}\n", parts.join(",")), all_pass))
}

/// The baked-in figure parameter sets: name, (alpha, beta), pole radius,
/// pole count, degrees.
fn figure_config(id: &str) -> Option<(JacobiParams, f64, usize, Vec<usize>)> {
    let fig3 = JacobiParams::new(Complex64::new(-0.5, 1.0), Complex64::new(-1.45, -0.5));
    match id.to_ascii_uppercase().as_str() {
        "1L" => Some((JacobiParams::real(0.5, 2.0), 3.0, 30, vec![30])),
        "1R" => Some((
            JacobiParams::real(3f64.sqrt(), std::f64::consts::PI),
            3.0,
            23,
            vec![30],
        )),
        "3L" => Some((fig3, 1.0, 30, vec![2])),
        "3R" => Some((fig3, 1.0, 30, vec![3, 4, 5])),
        _ => None,
    }
}

pub fn cmd_figure(id: &str, tol: f64) -> Result<Option<String>> {
    let Some((params, radius, count, degrees)) = figure_config(id) else {
        return Ok(None);
    };
    let jobs: Vec<(usize, usize)> = degrees
        .iter()
        .flat_map(|&n| (0..count).map(move |k| (n, k)))
        .collect();
    let mut reports = jobs
        .into_par_iter()
        .map(|(n, k)| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
            analyze_pole(params, Complex64::from_polar(radius, th), n, tol, k)
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| r.k);
    Ok(Some(csv_rows(&reports)))
}
