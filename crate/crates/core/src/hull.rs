//! Planar convex hulls of complex points (monotone chain) and a tolerant
//! membership test.

use num_complex::Complex64;

/// Default membership tolerance: derivative roots of polynomials with
/// collinear zeros sit exactly on the hull boundary.
pub const DEFAULT_MEMBERSHIP_EPS: f64 = 1e-9;

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

/// Counterclockwise hull vertices; collinear interior points are excluded.
/// A single distinct point yields a one-vertex hull, two distinct points a
/// segment. Panics on an empty input.
pub fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    assert!(!points.is_empty(), "convex_hull needs at least one point");
    let mut pts: Vec<Complex64> = points.to_vec();
    pts.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    pts.dedup();
    if pts.len() == 1 {
        return pts;
    }

    let mut lower: Vec<Complex64> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Complex64> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // All input collinear: the chains collapse to the two extremes.
    lower
}

/// Distance from `p` to the segment `[a, b]`.
pub fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Whether `p` lies in the hull, counting points within `eps` of the boundary
/// as inside. The hull must come from [`convex_hull`] (counterclockwise).
pub fn hull_contains(hull: &[Complex64], p: Complex64, eps: f64) -> bool {
    match hull.len() {
        0 => false,
        1 => (p - hull[0]).norm() <= eps,
        2 => segment_distance(p, hull[0], hull[1]) <= eps,
        n => (0..n).all(|i| {
            let a = hull[i];
            let b = hull[(i + 1) % n];
            // signed distance to the edge; >= -eps keeps near-boundary points
            cross(a, b, p) / (b - a).norm() >= -eps
        }),
    }
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
    fn square_with_interior_point() {
        let hull = convex_hull(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.2, 0.2)]);
        assert_eq!(hull.len(), 3);
        assert!(hull.contains(&c(0.0, 0.0)));
        assert!(hull.contains(&c(1.0, 0.0)));
        assert!(hull.contains(&c(0.0, 1.0)));
        assert!(!hull.contains(&c(0.2, 0.2)));
    }

    #[test]
    fn single_point() {
        assert_eq!(convex_hull(&[c(2.0, -1.0)]), vec![c(2.0, -1.0)]);
    }

    #[test]
    fn collinear_points_reduce_to_segment() {
        let hull = convex_hull(&[c(0.0, 0.0), c(1.0, 1.0), c(2.0, 2.0), c(3.0, 3.0)]);
        assert_eq!(hull.len(), 2);
        assert!(hull_contains(&hull, c(1.5, 1.5), 1e-9));
        assert!(!hull_contains(&hull, c(1.5, 1.6), 1e-9));
    }

    #[test]
    fn membership_with_tolerance() {
        let hull = convex_hull(&[c(0.0, 0.0), c(2.0, 0.0), c(1.0, 2.0)]);
        assert!(hull_contains(&hull, c(1.0, 0.5), 1e-9));
        assert!(hull_contains(&hull, c(1.0, -1e-10), 1e-9));
        assert!(!hull_contains(&hull, c(1.0, -1e-6), 1e-9));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn hull_is_permutation_invariant(
            pts in prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64).prop_map(|(a, b)| C::new(a, b)), 1..30),
            seed in 0u64..1000,
        ) {
            let h1 = convex_hull(&pts);
            let mut shuffled = pts.clone();
            // cheap deterministic shuffle
            let mut s = seed;
            for i in (1..shuffled.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (s >> 33) as usize % (i + 1);
                shuffled.swap(i, j);
            }
            prop_assert_eq!(h1, convex_hull(&shuffled));
        }

        #[test]
        fn all_inputs_inside_hull(
            pts in prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64).prop_map(|(a, b)| C::new(a, b)), 1..30),
        ) {
            let h = convex_hull(&pts);
            for p in &pts {
                prop_assert!(hull_contains(&h, *p, 1e-9));
            }
        }
    }
}
