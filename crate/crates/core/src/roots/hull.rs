//! Convex hulls of root sets and point-to-hull distances.

use super::RootSet;
use num_traits::Float;
use serde::Serialize;

/// Absolute hull slack, multiplied by `max(1, max |root|)` of the outer set.
pub const HULL_TOLERANCE: f64 = 1e-8;

fn cross<F: Float>(o: (F, F), a: (F, F), b: (F, F)) -> F {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Counter-clockwise hull without collinear points (monotone chain). Degenerate
/// inputs give one or two points.
pub fn convex_hull<F: Float>(points: &[(F, F)]) -> Vec<(F, F)> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite points"));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<(F, F)> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(F, F)>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= F::zero() {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() == 2 && hull[0] == hull[1] {
        hull.pop();
    }
    hull
}

fn segment_distance<F: Float>(p: (F, F), a: (F, F), b: (F, F)) -> F {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == F::zero() {
        F::zero()
    } else {
        (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).max(F::zero()).min(F::one())
    };
    let (cx, cy) = (a.0 + t * dx, a.1 + t * dy);
    ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt()
}

/// Euclidean distance from `p` to the hull (zero inside).
pub fn distance_to_hull<F: Float>(hull: &[(F, F)], p: (F, F)) -> F {
    match hull.len() {
        0 => F::infinity(),
        1 => segment_distance(p, hull[0], hull[0]),
        2 => segment_distance(p, hull[0], hull[1]),
        n => {
            let inside = (0..n).all(|i| cross(hull[i], hull[(i + 1) % n], p) >= F::zero());
            if inside {
                F::zero()
            } else {
                (0..n)
                    .map(|i| segment_distance(p, hull[i], hull[(i + 1) % n]))
                    .fold(F::infinity(), F::min)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HullReport {
    pub contained: bool,
    pub max_violation: f64,
    pub tolerance: f64,
}

/// Check that every root of `inner` lies within tolerance of the convex hull
/// of the roots of `outer`.
pub fn hull_containment(outer: &RootSet, inner: &RootSet) -> HullReport {
    let pts: Vec<(f64, f64)> = outer.roots.iter().map(|z| (z.re, z.im)).collect();
    let hull = convex_hull(&pts);
    let tolerance = HULL_TOLERANCE * outer.max_modulus().max(1.0);
    let max_violation = inner
        .roots
        .iter()
        .map(|z| distance_to_hull(&hull, (z.re, z.im)))
        .fold(0.0, f64::max);
    HullReport { contained: max_violation <= tolerance, max_violation, tolerance }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::find_roots;
    use crate::Poly;

    #[test]
    fn square_hull() {
        let h = convex_hull(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5), (0.5, 0.0)]);
        assert_eq!(h.len(), 4);
        assert_eq!(distance_to_hull(&h, (0.5, 0.5)), 0.0);
        assert!((distance_to_hull(&h, (2.0, 0.5)) - 1.0).abs() < 1e-15);
        assert!((distance_to_hull(&h, (2.0, 2.0)) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn degenerate_hulls() {
        let seg = convex_hull(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(seg, vec![(-1.0, 0.0), (1.0, 0.0)]);
        assert!(distance_to_hull(&seg, (0.3, 0.0)) < 1e-15);
        assert!((distance_to_hull(&seg, (2.0, 0.0)) - 1.0).abs() < 1e-15);
        let pt = convex_hull(&[(2.0, 1.0), (2.0, 1.0)]);
        assert_eq!(pt.len(), 1);
        assert!((distance_to_hull(&pt, (2.0, 0.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cubic_and_quartic_examples() {
        let p = Poly::from_i64s(&[0, -1, 0, 1]);
        let r = hull_containment(&find_roots(&p).unwrap(), &find_roots(&p.derivative()).unwrap());
        assert!(r.contained);
        let p = Poly::from_i64s(&[-1, 0, 0, 0, 1]);
        let r = hull_containment(&find_roots(&p).unwrap(), &find_roots(&p.derivative()).unwrap());
        assert!(r.contained && r.max_violation == 0.0);
    }

    #[test]
    fn detects_points_outside() {
        let outer = find_roots(&Poly::from_i64s(&[0, -1, 0, 1])).unwrap();
        let inner = find_roots(&Poly::from_i64s(&[-4, 0, 1])).unwrap();
        let r = hull_containment(&outer, &inner);
        assert!(!r.contained);
        assert!((r.max_violation - 1.0).abs() < 1e-12);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn hull_contains_its_points(pts in prop::collection::vec((-50.0f64..50.0, -50.0f64..50.0), 1..40)) {
                let h = convex_hull(&pts);
                for &p in &pts {
                    prop_assert!(distance_to_hull(&h, p) <= 1e-9);
                }
            }
        }
    }
}
