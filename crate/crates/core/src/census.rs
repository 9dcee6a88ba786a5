//! The nine small-subgraph statistics that determine the top five
//! coefficients of a chromatic polynomial, and their G(n,p) expectations.
//!
//! `k4` and `k5` count complete subgraphs; `ic4`, `ic5`, `ik23`, `ih` and
//! `iw5` count induced copies. `H` is `K_{2,3}` with one extra edge inside its
//! three-vertex side (equivalently the complement of `P3 + K2`; degrees
//! 2,3,3,3,3) and `W5` is the 4-cycle plus a hub.

use crate::graph::{bit, Graph};
use crate::scalar::{from_usize, Field};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Census<T> {
    pub m: T,
    pub t: T,
    pub k4: T,
    pub k5: T,
    pub ic4: T,
    pub ic5: T,
    pub ik23: T,
    pub ih: T,
    pub iw5: T,
}

impl<T> Census<T> {
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Census<U> {
        Census {
            m: f(&self.m),
            t: f(&self.t),
            k4: f(&self.k4),
            k5: f(&self.k5),
            ic4: f(&self.ic4),
            ic5: f(&self.ic5),
            ik23: f(&self.ik23),
            ih: f(&self.ih),
            iw5: f(&self.iw5),
        }
    }

    /// Statistics in a fixed order, paired with their names.
    pub fn named(&self) -> [(&'static str, &T); 9] {
        [
            ("m", &self.m),
            ("t", &self.t),
            ("k4", &self.k4),
            ("k5", &self.k5),
            ("ic4", &self.ic4),
            ("ic5", &self.ic5),
            ("ik23", &self.ik23),
            ("ih", &self.ih),
            ("iw5", &self.iw5),
        ]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Class4 {
    K4,
    C4,
    Other,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Class5 {
    K5,
    C5,
    K23,
    H,
    W5,
    Other,
}

/// Pair order used by the subset codes: colex, so adding vertex `r` appends
/// the pairs `(0,r), (1,r), ..., (r-1,r)`.
fn code_pairs(k: usize) -> Vec<(usize, usize)> {
    (1..k).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn code_degrees(code: usize, k: usize) -> (usize, Vec<usize>, Vec<u8>) {
    let mut deg = vec![0usize; k];
    let mut adj = vec![0u8; k];
    let mut edges = 0;
    for (bitpos, (i, j)) in code_pairs(k).into_iter().enumerate() {
        if code >> bitpos & 1 == 1 {
            edges += 1;
            deg[i] += 1;
            deg[j] += 1;
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let mut sorted = deg;
    sorted.sort_unstable();
    (edges, sorted, adj)
}

fn has_triangle(adj: &[u8]) -> bool {
    (0..adj.len()).any(|i| {
        (i + 1..adj.len()).any(|j| adj[i] >> j & 1 == 1 && adj[i] & adj[j] != 0)
    })
}

fn table4() -> &'static [Class4; 64] {
    static T: OnceLock<[Class4; 64]> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = [Class4::Other; 64];
        for (code, slot) in t.iter_mut().enumerate() {
            let (e, deg, _) = code_degrees(code, 4);
            *slot = match (e, deg.as_slice()) {
                (6, _) => Class4::K4,
                (4, [2, 2, 2, 2]) => Class4::C4,
                _ => Class4::Other,
            };
        }
        t
    })
}

fn table5() -> &'static [Class5; 1024] {
    static T: OnceLock<[Class5; 1024]> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = [Class5::Other; 1024];
        for (code, slot) in t.iter_mut().enumerate() {
            let (e, deg, adj) = code_degrees(code, 5);
            // Each class is pinned by edge count, degree sequence and (for K23
            // versus the house) triangle-freeness.
            *slot = match (e, deg.as_slice()) {
                (10, _) => Class5::K5,
                (5, [2, 2, 2, 2, 2]) => Class5::C5,
                (6, [2, 2, 2, 3, 3]) if !has_triangle(&adj) => Class5::K23,
                (7, [2, 3, 3, 3, 3]) => Class5::H,
                (8, [3, 3, 3, 3, 4]) => Class5::W5,
                _ => Class5::Other,
            };
        }
        t
    })
}

#[inline]
fn adj_bits(g: &[u64], v: usize, earlier: &[usize]) -> usize {
    earlier
        .iter()
        .enumerate()
        .fold(0, |acc, (s, &u)| acc | (((g[v] >> u) & 1) as usize) << s)
}

/// Exact census by direct enumeration of all 4- and 5-vertex subsets.
pub fn census(g: &Graph) -> Census<u64> {
    let n = g.order();
    let adj = g.adjacency();
    let t4 = table4();
    let t5 = table5();
    let mut c = Census::<u64> {
        m: g.size() as u64,
        ..Default::default()
    };
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] & bit(v) != 0 {
                let above = !((bit(v) << 1).wrapping_sub(1));
                c.t += (adj[u] & adj[v] & above).count_ones() as u64;
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let c2 = adj_bits(adj, j, &[i]);
            for k in j + 1..n {
                let c3 = c2 | adj_bits(adj, k, &[i, j]) << 1;
                for l in k + 1..n {
                    let c4 = c3 | adj_bits(adj, l, &[i, j, k]) << 3;
                    match t4[c4] {
                        Class4::K4 => c.k4 += 1,
                        Class4::C4 => c.ic4 += 1,
                        Class4::Other => {}
                    }
                    for r in l + 1..n {
                        let c5 = c4 | adj_bits(adj, r, &[i, j, k, l]) << 6;
                        match t5[c5] {
                            Class5::K5 => c.k5 += 1,
                            Class5::C5 => c.ic5 += 1,
                            Class5::K23 => c.ik23 += 1,
                            Class5::H => c.ih += 1,
                            Class5::W5 => c.iw5 += 1,
                            Class5::Other => {}
                        }
                    }
                }
            }
        }
    }
    c
}

/// `C(n, k)` evaluated in a field (exact for rationals).
pub fn binomial<T: Field>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    (0..k).fold(T::one(), |acc, i| {
        acc * from_usize::<T>(n - i) / from_usize::<T>(i + 1)
    })
}

/// Expected census under G(n,p), in any field (`BigRational` for exact work,
/// `f64` for quick evaluation).
pub fn expected_counts<T: Field>(n: usize, p: &T) -> Census<T> {
    let pw = |k: u32| (0..k).fold(T::one(), |acc, _| acc * p);
    let q = T::one() - p.clone();
    let qw = |k: u32| (0..k).fold(T::one(), |acc, _| acc * &q);
    let c = |k: usize| binomial::<T>(n, k);
    let int = |v: usize| from_usize::<T>(v);
    Census {
        m: pw(1) * c(2),
        t: pw(3) * c(3),
        k4: pw(6) * c(4),
        k5: pw(10) * c(5),
        ic4: int(3) * pw(4) * qw(2) * c(4),
        ic5: int(12) * pw(5) * qw(5) * c(5),
        ik23: int(10) * pw(6) * qw(4) * c(5),
        ih: int(30) * pw(7) * qw(3) * c(5),
        iw5: int(15) * pw(8) * qw(2) * c(5),
    }
}

/// Largest pattern order accepted by [`count_pattern_bruteforce`].
pub const BRUTEFORCE_MAX_PATTERN: usize = 5;

/// Count copies of `pattern` in `g` by trying every injective vertex map.
///
/// With `induced` the map must preserve non-edges too. The number of maps is
/// divided by the number of automorphisms of `pattern`, so the result counts
/// unlabeled copies.
pub fn count_pattern_bruteforce(g: &Graph, pattern: &Graph, induced: bool) -> Result<u64> {
    if pattern.order() > BRUTEFORCE_MAX_PATTERN {
        return Err(Error::InvalidArgument(format!(
            "pattern order {} exceeds {BRUTEFORCE_MAX_PATTERN}",
            pattern.order()
        )));
    }
    let embeddings = count_maps(g, pattern, induced);
    let automorphisms = count_maps(pattern, pattern, true);
    Ok(embeddings / automorphisms)
}

fn count_maps(host: &Graph, pattern: &Graph, induced: bool) -> u64 {
    fn extend(host: &Graph, pat: &Graph, induced: bool, image: &mut Vec<usize>, used: u64) -> u64 {
        let next = image.len();
        if next == pat.order() {
            return 1;
        }
        let mut total = 0;
        for v in 0..host.order() {
            if used & bit(v) != 0 {
                continue;
            }
            let ok = image.iter().enumerate().all(|(a, &w)| {
                let want = pat.adjacent(a, next);
                let have = host.adjacent(w, v);
                if induced {
                    want == have
                } else {
                    !want || have
                }
            });
            if ok {
                image.push(v);
                total += extend(host, pat, induced, image, used | bit(v));
                image.pop();
            }
        }
        total
    }
    extend(host, pattern, induced, &mut Vec::new(), 0)
}

/// The nine pattern graphs, paired with whether each is counted induced.
pub mod patterns {
    use crate::graph::{complete, complete_bipartite, cycle, Graph};

    /// `K_{2,3}` on parts `{0,1}` and `{2,3,4}`, plus the edge `3-4`.
    pub fn h_graph() -> Graph {
        Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (3, 4)]).expect("static")
    }

    /// Path 1-2-3-4 plus vertex 0 joined to all four. Not one of the census
    /// patterns; kept for tests that tell it apart from `H`.
    pub fn gem() -> Graph {
        Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)]).expect("static")
    }

    /// 4-cycle 1-2-3-4 plus hub 0.
    pub fn wheel5() -> Graph {
        Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 1), (0, 1), (0, 2), (0, 3), (0, 4)])
            .expect("static")
    }

    pub fn all() -> Vec<(&'static str, Graph, bool)> {
        vec![
            ("m", complete(2).expect("static"), false),
            ("t", complete(3).expect("static"), false),
            ("k4", complete(4).expect("static"), false),
            ("k5", complete(5).expect("static"), false),
            ("ic4", cycle(4).expect("static"), true),
            ("ic5", cycle(5).expect("static"), true),
            ("ik23", complete_bipartite(2, 3).expect("static"), true),
            ("ih", h_graph(), true),
            ("iw5", wheel5(), true),
        ]
    }
}

/// Census computed entirely through [`count_pattern_bruteforce`].
pub fn census_bruteforce(g: &Graph) -> Census<u64> {
    let v: Vec<u64> = patterns::all()
        .into_iter()
        .map(|(_, p, induced)| count_pattern_bruteforce(g, &p, induced).expect("patterns have order <= 5"))
        .collect();
    Census {
        m: v[0],
        t: v[1],
        k4: v[2],
        k5: v[3],
        ic4: v[4],
        ic5: v[5],
        ik23: v[6],
        ih: v[7],
        iw5: v[8],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, erdos_renyi, petersen, RngSeed};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn zeros_except(m: u64, t: u64, k4: u64, k5: u64) -> Census<u64> {
        Census { m, t, k4, k5, ..Default::default() }
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(census(&complete(5).unwrap()), zeros_except(10, 10, 5, 1));
        let k7 = census(&complete(7).unwrap());
        assert_eq!(k7, zeros_except(21, 35, 35, 21));
    }

    #[test]
    fn cycles_and_bipartite() {
        assert_eq!(census(&cycle(5).unwrap()), Census { m: 5, ic5: 1, ..Default::default() });
        assert_eq!(census(&cycle(4).unwrap()), Census { m: 4, ic4: 1, ..Default::default() });
        assert_eq!(
            census(&complete_bipartite(2, 3).unwrap()),
            Census { m: 6, ic4: 3, ik23: 1, ..Default::default() }
        );
    }

    #[test]
    fn h_gem_and_wheel() {
        let h = census(&patterns::h_graph());
        assert_eq!((h.m, h.t, h.ih, h.ic4, h.ik23), (7, 2, 1, 2, 0));
        assert_eq!(h, census_bruteforce(&patterns::h_graph()));
        let g = census(&patterns::gem());
        assert_eq!((g.m, g.t, g.ih), (7, 3, 0));
        assert_eq!(g, census_bruteforce(&patterns::gem()));
        let w = census(&patterns::wheel5());
        assert_eq!((w.m, w.t, w.ic4, w.iw5), (8, 4, 1, 1));
    }

    #[test]
    fn automorphism_orders() {
        // labelled placements per 5-set match the expectation constants
        for (name, pat, placements) in [
            ("ic5", cycle(5).unwrap(), 12),
            ("ik23", complete_bipartite(2, 3).unwrap(), 10),
            ("ih", patterns::h_graph(), 30),
            ("iw5", patterns::wheel5(), 15),
        ] {
            let aut = count_maps(&pat, &pat, true);
            assert_eq!(120 / aut, placements, "{name}");
        }
        assert_eq!(24 / count_maps(&cycle(4).unwrap(), &cycle(4).unwrap(), true), 3);
    }

    #[test]
    fn petersen_has_twelve_induced_pentagons() {
        let p = petersen();
        assert_eq!(count_pattern_bruteforce(&p, &cycle(5).unwrap(), true).unwrap(), 12);
        let c = census(&p);
        assert_eq!((c.t, c.ic5, c.ic4), (0, 12, 0));
        assert_eq!(count_pattern_bruteforce(&cycle(5).unwrap(), &cycle(4).unwrap(), true).unwrap(), 0);
    }

    #[test]
    fn bruteforce_rejects_large_patterns() {
        assert!(count_pattern_bruteforce(&petersen(), &cycle(6).unwrap(), true).is_err());
    }

    #[test]
    fn triangle_free_invariant() {
        for s in 0..20 {
            let g = erdos_renyi(9, 0.5, RngSeed::new(s, 1)).unwrap();
            let c = census(&g);
            if c.t == 0 {
                assert_eq!((c.k4, c.k5, c.ih, c.iw5), (0, 0, 0, 0));
            }
        }
    }

    #[test]
    fn census_matches_bruteforce_on_random_graphs() {
        for s in 0..200u64 {
            let n = 5 + (s % 8) as usize;
            let p = [0.3, 0.5, 0.7][(s % 3) as usize];
            let g = erdos_renyi(n, p, RngSeed::new(99, s)).unwrap();
            assert_eq!(census(&g), census_bruteforce(&g), "seed {s} n {n}");
        }
    }

    #[test]
    fn label_invariance() {
        use rand::seq::SliceRandom;
        for s in 0..10u64 {
            let g = erdos_renyi(10, 0.5, RngSeed::new(5, s)).unwrap();
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut RngSeed::new(6, s).rng());
            assert_eq!(census(&g), census(&g.relabel(&perm).unwrap()));
        }
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn expectations_exact() {
        let e = expected_counts(4, &q(1, 1));
        assert_eq!(e.k4, q(1, 1));
        assert_eq!(e.ic4, q(0, 1));
        let e = expected_counts(5, &q(1, 2));
        assert_eq!(e.ic5, q(12, 1024));
        let e = expected_counts(5, &q(1, 1));
        assert_eq!(e.map(|v| v.clone()), Census {
            m: q(10, 1),
            t: q(10, 1),
            k4: q(5, 1),
            k5: q(1, 1),
            ic4: q(0, 1),
            ic5: q(0, 1),
            ik23: q(0, 1),
            ih: q(0, 1),
            iw5: q(0, 1),
        });
        let f = expected_counts(20, &0.5f64);
        assert!((f.m - 95.0).abs() < 1e-12);
    }

    #[test]
    fn monte_carlo_means_track_expectations() {
        let (n, trials) = (20usize, 1000u64);
        let e = expected_counts(n, &0.5f64);
        let samples: Vec<Census<u64>> = (0..trials)
            .map(|i| census(&erdos_renyi(n, 0.5, RngSeed::new(31337, i)).unwrap()))
            .collect();
        let named_e = e.named();
        for (idx, (name, expect)) in named_e.iter().enumerate() {
            let xs: Vec<f64> = samples.iter().map(|c| *c.named()[idx].1 as f64).collect();
            let mean = xs.iter().sum::<f64>() / trials as f64;
            let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (trials as f64 - 1.0);
            let se = (var / trials as f64).sqrt();
            assert!(
                (mean - **expect).abs() <= 5.0 * se,
                "{name}: mean {mean} expected {expect} se {se}"
            );
        }
    }
}
