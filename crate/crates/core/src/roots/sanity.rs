//! Classical disks that must contain every chromatic root.

use super::RootSet;
use crate::Graph;
use serde::Serialize;

/// Relative slack on both radii.
pub const SANITY_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, Default, Serialize)]
pub struct SanityReport {
    /// Nonzero roots with `|z - 1| > m - n + 1` (checked only for connected
    /// graphs; the root at zero is excluded, as in the original bound).
    pub cyclomatic_violations: usize,
    /// Roots with `|z| >= 8 * max_degree` (skipped for edgeless graphs).
    pub degree_violations: usize,
    pub checked_cyclomatic: bool,
}

impl SanityReport {
    pub fn ok(&self) -> bool {
        self.cyclomatic_violations == 0 && self.degree_violations == 0
    }
}

pub fn root_location_sanity(g: &Graph, roots: &RootSet) -> SanityReport {
    let mut r = SanityReport::default();
    let (n, m) = (g.order() as f64, g.size() as f64);
    if g.is_connected() && g.order() > 0 {
        r.checked_cyclomatic = true;
        let radius = m - n + 1.0;
        let tol = SANITY_TOLERANCE * radius.max(1.0);
        r.cyclomatic_violations = roots
            .roots
            .iter()
            .filter(|z| z.norm() > SANITY_TOLERANCE && (*z - 1.0).norm() > radius + tol)
            .count();
    }
    let delta = g.max_degree() as f64;
    if delta > 0.0 {
        let radius = 8.0 * delta;
        r.degree_violations = roots.roots.iter().filter(|z| z.norm() >= radius).count();
    }
    r
}
