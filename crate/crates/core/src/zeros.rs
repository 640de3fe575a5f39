//! Complex root finding (Aberth–Ehrlich simultaneous iteration) and the
//! zero-location validators: disk bound, level curve, multiplicity audit,
//! segment distances, exclusion ellipse, accumulation ellipse, and the
//! derivative-roots-in-hull check.

use crate::error::{Error, Result};
use crate::hull::{convex_hull, hull_contains};
use crate::jacobi::{phi, shifted_eval, Regime};
use crate::polar::PolarSpec;
use crate::poly::Poly;
use num_complex::Complex64;

/// One clustered root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootEntry {
    pub location: Complex64,
    pub multiplicity: usize,
    /// `|p(location)| / (1 + |location|)^degree` on the monic rescaling.
    pub residual: f64,
}

/// All roots of one polynomial, with multiplicities summing to the degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    pub roots: Vec<RootEntry>,
    pub source_degree: usize,
}

impl ZeroSet {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Root locations repeated by multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.source_degree);
        for r in &self.roots {
            out.extend(std::iter::repeat_n(r.location, r.multiplicity));
        }
        out
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots
            .iter()
            .map(|r| r.location.norm())
            .fold(0.0, f64::max)
    }
}

const MAX_SWEEPS: usize = 200;

/// All complex roots of `p` by Aberth–Ehrlich iteration.
///
/// Initial guesses sit on a circle enclosing the Cauchy bound, rotated by a
/// fixed irrational offset; iteration is damped Gauss–Seidel style and stops
/// when every correction falls under `tol` (scaled by the root size) or the
/// residual reaches its rounding floor. Near-coincident converged roots are
/// merged by single-linkage clustering at radius `10 sqrt(tol)` scaled by the
/// root magnitude, which dominates the O(sqrt(eps)) splitting of a double
/// root. Deterministic for fixed input.
pub fn find_roots(p: &Poly, tol: f64) -> Result<ZeroSet> {
    let degree = match p.degree() {
        None | Some(0) => return Err(Error::DegreeZero),
        Some(d) => d,
    };
    // monic rescale
    let lead = p.leading().unwrap();
    let monic: Vec<Complex64> = p.coeffs().iter().map(|&c| c / lead).collect();
    let q = Poly::new(monic);
    let dq = q.derivative();

    // Fujiwara root bound: |root| <= 2 max_k |a_{d-k}|^{1/k} on the monic
    // rescaling; keeps the initial circle near the roots even when the
    // coefficients span many orders of magnitude.
    let bound = (0..degree)
        .map(|k| q.coeffs()[k].norm().powf(1.0 / (degree - k) as f64))
        .fold(0.0, f64::max)
        * 2.0;
    let radius = 1.0 + bound.max(1.0);
    let offset = std::f64::consts::FRAC_1_SQRT_2; // fixed irrational angle
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / degree as f64 + offset;
            Complex64::from_polar(radius, th)
        })
        .collect();

    // rounding floor of |q(x)|: eps times the absolute Horner mass
    let residual_floor = |x: Complex64| -> f64 {
        let ax = x.norm();
        let mut mass = 0.0;
        for &c in q.coeffs().iter().rev() {
            mass = mass * ax + c.norm();
        }
        4.0 * f64::EPSILON * mass
    };

    let mut worst = f64::INFINITY;
    for _sweep in 0..MAX_SWEEPS {
        let mut all_settled = true;
        worst = 0.0;
        for i in 0..degree {
            let zi = z[i];
            let pv = q.eval(zi);
            if pv.norm() <= residual_floor(zi) {
                continue; // at the rounding floor already
            }
            let pd = dq.eval(zi);
            let newton = if pd == Complex64::ZERO {
                // flat spot: nudge deterministically
                Complex64::new(tol.max(1e-12), tol.max(1e-12))
            } else {
                pv / pd
            };
            let mut s = Complex64::ZERO;
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let d = zi - zj;
                    if d.norm_sqr() > 0.0 {
                        s += 1.0 / d;
                    }
                }
            }
            let denom = Complex64::ONE - newton * s;
            let w = if denom.norm() < 1e-290 {
                newton
            } else {
                newton / denom
            };
            z[i] = zi - w;
            let step = w.norm() / (1.0 + z[i].norm());
            worst = worst.max(step);
            if step > tol {
                all_settled = false;
            }
        }
        if all_settled {
            return Ok(cluster(&q, &z, degree, tol));
        }
    }
    Err(Error::NoConvergence {
        sweeps: MAX_SWEEPS,
        worst,
        best: Box::new(cluster(&q, &z, degree, tol)),
    })
}

fn cluster(q: &Poly, z: &[Complex64], degree: usize, tol: f64) -> ZeroSet {
    let radius = 10.0 * tol.sqrt();
    let n = z.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut root = i;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = i;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = 1.0_f64.max(z[i].norm()).max(z[j].norm());
            if (z[i] - z[j]).norm() <= radius * scale {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Complex64>> = Default::default();
    for (i, &zi) in z.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(zi);
    }
    let mut roots: Vec<RootEntry> = groups
        .values()
        .map(|members| {
            let m = members.len();
            let mean = members.iter().sum::<Complex64>() / m as f64;
            let residual = q.eval(mean).norm() / (1.0 + mean.norm()).powi(degree as i32);
            RootEntry {
                location: mean,
                multiplicity: m,
                residual,
            }
        })
        .collect();
    roots.sort_by(|a, b| {
        a.location
            .re
            .total_cmp(&b.location.re)
            .then(a.location.im.total_cmp(&b.location.im))
    });
    ZeroSet {
        roots,
        source_degree: degree,
    }
}

/// Disk bound outcome: every zero of a standard-regime polar polynomial lies
/// in the closed disk of radius `2 + |xi|`.
#[derive(Debug, Clone, Copy)]
pub struct DiskBound {
    pub radius: f64,
    pub max_excess: f64,
}

impl DiskBound {
    pub fn passed(&self) -> bool {
        self.max_excess <= 1e-8 * (1.0 + self.radius)
    }
}

pub fn disk_bound_check(zeros: &ZeroSet, xi: Complex64) -> DiskBound {
    let radius = 2.0 + xi.norm();
    let max_excess = zeros
        .roots
        .iter()
        .map(|r| (r.location.norm() - radius).max(0.0))
        .fold(0.0, f64::max);
    DiskBound { radius, max_excess }
}

/// For each root `zeta`, the scaled residual of the level-curve equation
/// `P_{n+1}^{(a-1,b-1)}(zeta) = P_{n+1}^{(a-1,b-1)}(xi)`.
pub fn level_curve_residuals(zeros: &ZeroSet, spec: &PolarSpec) -> Result<Vec<f64>> {
    let at_pole = shifted_eval(&spec.params, spec.degree + 1, spec.pole)?;
    let scale = 1.0 + at_pole.norm();
    zeros
        .roots
        .iter()
        .map(|r| {
            let v = shifted_eval(&spec.params, spec.degree + 1, r.location)?;
            Ok((v - at_pole).norm() / scale)
        })
        .collect()
}

/// Outcome of the multiplicity audit.
#[derive(Debug, Clone, PartialEq)]
pub enum AuditOutcome {
    /// Every multiplicity is at most 2 and each double root lies on [-1, 1].
    Pass,
    /// Roots violating the claim.
    Fail(Vec<RootEntry>),
    /// Outside the standard regime the claim does not hold and is not checked.
    NotApplicable,
}

pub fn multiplicity_audit(zeros: &ZeroSet, spec: &PolarSpec) -> AuditOutcome {
    if spec.params.regime() != Regime::Standard {
        return AuditOutcome::NotApplicable;
    }
    let offenders: Vec<RootEntry> = zeros
        .roots
        .iter()
        .filter(|r| {
            if r.multiplicity > 2 {
                return true;
            }
            if r.multiplicity == 2 {
                let on_segment =
                    r.location.im.abs() <= 1e-6 && r.location.re.abs() <= 1.0 + 1e-6;
                return !on_segment;
            }
            false
        })
        .copied()
        .collect();
    if offenders.is_empty() {
        AuditOutcome::Pass
    } else {
        AuditOutcome::Fail(offenders)
    }
}

/// `(Delta_xi, delta_xi)`: the sup and inf of `|xi - z|` over `z in [-1, 1]`.
pub fn segment_distances(xi: Complex64) -> (f64, f64) {
    let delta_big = (xi - 1.0).norm().max((xi + 1.0).norm());
    let delta_small = distance_to_segment(xi);
    (delta_big, delta_small)
}

/// Distance from `z` to the segment [-1, 1].
pub fn distance_to_segment(z: Complex64) -> f64 {
    if z.re.abs() <= 1.0 {
        z.im.abs()
    } else {
        (z - 1.0).norm().min((z + 1.0).norm())
    }
}

/// Checks that every root lies on or outside the ellipse
/// `|z+1| + |z-1| = 2a` and is simple. Requires `delta_xi > 1` and
/// `1 < a < delta_xi`.
pub fn ellipse_exclusion_check(zeros: &ZeroSet, xi: Complex64, a: f64) -> Result<bool> {
    let (_, delta_small) = segment_distances(xi);
    if delta_small <= 1.0 {
        return Err(Error::PreconditionFailed(format!(
            "delta_xi = {delta_small} must exceed 1"
        )));
    }
    if a <= 1.0 || a >= delta_small {
        return Err(Error::PreconditionFailed(format!(
            "need 1 < a < delta_xi, got a = {a}, delta_xi = {delta_small}"
        )));
    }
    Ok(zeros.roots.iter().all(|r| {
        r.multiplicity == 1
            && (r.location + 1.0).norm() + (r.location - 1.0).norm() >= 2.0 * a - 1e-8
    }))
}

/// Distance from `z` to the confocal ellipse `cosh(s + i theta)`:
/// 256 coarse samples followed by golden-section refinement.
pub fn ellipse_point_distance(z: Complex64, s: f64) -> f64 {
    let point = |th: f64| Complex64::new(s.cosh() * th.cos(), s.sinh() * th.sin());
    let f = |th: f64| (z - point(th)).norm();
    let samples = 256;
    let step = 2.0 * std::f64::consts::PI / samples as f64;
    let mut best_k = 0;
    let mut best = f64::INFINITY;
    for k in 0..samples {
        let d = f(k as f64 * step);
        if d < best {
            best = d;
            best_k = k;
        }
    }
    // golden-section in the bracket around the best sample
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let mut lo = (best_k as f64 - 1.0) * step;
    let mut hi = (best_k as f64 + 1.0) * step;
    let mut x1 = hi - golden * (hi - lo);
    let mut x2 = lo + golden * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..80 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = f(x2);
        }
    }
    best.min(f1).min(f2)
}

/// Max over roots of the distance to the accumulation set: the confocal
/// ellipse through `xi` (where `|phi(z)| = |phi(xi)|`) union the segment
/// [-1, 1]. Requires `xi` off the segment.
pub fn asymptotic_ellipse_distance(zeros: &ZeroSet, xi: Complex64) -> Result<f64> {
    let s = phi(xi)?.norm().ln();
    Ok(zeros
        .roots
        .iter()
        .map(|r| {
            distance_to_segment(r.location).min(ellipse_point_distance(r.location, s))
        })
        .fold(0.0, f64::max))
}

/// Every root of `p'` lies in the convex hull of the roots of `p`
/// (tolerance 1e-7). Requires `deg p >= 2`.
pub fn gauss_lucas_check(p: &Poly) -> Result<bool> {
    let d = p.degree().unwrap_or(0);
    if d < 2 {
        return Err(Error::PreconditionFailed(
            "derivative-roots check needs degree >= 2".into(),
        ));
    }
    let roots = find_roots(p, 1e-10)?;
    let droots = find_roots(&p.derivative(), 1e-10)?;
    let hull = convex_hull(&roots.expanded());
    Ok(droots
        .roots
        .iter()
        .all(|r| hull_contains(&hull, r.location, 1e-7)))
}
