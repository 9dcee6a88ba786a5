//! Scaling scans for the growth of the largest imaginary part.

use crate::chromatic::complete_bipartite_chromatic;
use crate::roots::find_roots;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

pub use crate::ring::{ring_scan, ring_scan_csv, RingScanRow, RING_SCAN_HEADER};

#[derive(Clone, Debug, Serialize)]
pub struct BipartiteRow {
    pub n: usize,
    pub max_imag: f64,
    /// `max_imag / n`.
    pub ratio: f64,
}

pub const BIPARTITE_SCAN_HEADER: &str = "n,max_imag,max_imag/n";

/// Largest imaginary part of a root of `K_{n/2,n/2}` for even `4 <= n <= nmax`.
pub fn bipartite_scan(nmax: usize) -> Result<Vec<BipartiteRow>> {
    (4..=nmax)
        .step_by(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let roots = find_roots(&complete_bipartite_chromatic(n / 2, n / 2))?;
            if !roots.converged {
                return Err(Error::Computation(format!("roots of K_{{{0},{0}}} did not converge", n / 2)));
            }
            let max_imag = roots.max_imag();
            Ok(BipartiteRow { n, max_imag, ratio: max_imag / n as f64 })
        })
        .collect()
}

pub fn bipartite_scan_csv(rows: &[BipartiteRow]) -> String {
    let mut s = format!("{BIPARTITE_SCAN_HEADER}\n");
    for r in rows {
        s.push_str(&format!("{},{:.12},{:.12}\n", r.n, r.max_imag, r.ratio));
    }
    s
}

/// True when the values never decrease.
pub fn is_nondecreasing(values: impl IntoIterator<Item = f64>) -> bool {
    let v: Vec<f64> = values.into_iter().collect();
    v.windows(2).all(|w| w[1] >= w[0])
}
