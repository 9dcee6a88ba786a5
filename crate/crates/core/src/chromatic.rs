//! Exact chromatic polynomials.
//!
//! The main engine is deletion–contraction, `P(G) = P(G - e) - P(G / e)`, and
//! on dense graphs its mirror image, addition–contraction,
//! `P(G) = P(G + uv) + P(G / uv)` for a non-edge `uv`. Before branching the
//! recursion
//!
//! * splits off connected components (the polynomial is multiplicative),
//! * peels simplicial vertices: if `N(v)` is a clique of size `d` then
//!   `P(G) = (x - d) P(G - v)`,
//! * stops at cliques, `P(K_r) = (x)_r`,
//! * and memoises on a relabelled adjacency key.

use crate::census::Census;
use crate::graph::{bit, Graph};
use crate::scalar::{from_usize, Field};
use crate::{Error, IntPolynomial, Poly, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Default cap on recursion nodes for one polynomial.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug)]
pub struct DcConfig {
    /// Abort with [`Error::BudgetExceeded`] after this many recursion nodes.
    pub node_budget: u64,
    /// Disable for audit runs; the result must not change.
    pub memo: bool,
}

impl Default for DcConfig {
    fn default() -> Self {
        DcConfig { node_budget: DEFAULT_NODE_BUDGET, memo: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DcStats {
    pub nodes: u64,
    pub memo_hits: u64,
}

pub fn chromatic_polynomial(g: &Graph) -> Result<IntPolynomial> {
    chromatic_polynomial_with(g, DcConfig::default()).map(|(p, _)| p)
}

pub fn chromatic_polynomial_with(g: &Graph, cfg: DcConfig) -> Result<(IntPolynomial, DcStats)> {
    if g.order() == 0 {
        return Err(Error::InvalidArgument("chromatic polynomial of the empty graph".into()));
    }
    let mut engine = Engine { cfg, stats: DcStats::default(), memo: HashMap::new() };
    let p = engine.solve(g.adjacency().to_vec())?;
    Ok((p, engine.stats))
}

struct Engine {
    cfg: DcConfig,
    stats: DcStats,
    memo: HashMap<Vec<u64>, IntPolynomial>,
}

fn x_minus(d: usize) -> IntPolynomial {
    Poly::linear_root(BigInt::from(d))
}

/// Delete vertex `v`, shifting higher labels down by one.
fn remove_vertex(rows: &[u64], v: usize) -> Vec<u64> {
    let low = bit(v) - 1;
    rows.iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, &r)| (r & low) | (r.checked_shr(v as u32 + 1).unwrap_or(0) << v))
        .collect()
}

/// Identify `u` and `v` (u < v) into `u`, then drop `v`.
fn contract(rows: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut r = rows.to_vec();
    let merged = (r[u] | r[v]) & !bit(u) & !bit(v);
    r[u] = merged;
    for w in 0..r.len() {
        if merged & bit(w) != 0 {
            r[w] |= bit(u);
        }
    }
    remove_vertex(&r, v)
}

fn restrict(rows: &[u64], mask: u64) -> Vec<u64> {
    let verts: Vec<usize> = (0..rows.len()).filter(|&v| mask & bit(v) != 0).collect();
    verts
        .iter()
        .map(|&u| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| rows[u] & bit(w) != 0)
                .fold(0u64, |acc, (j, _)| acc | bit(j))
        })
        .collect()
}

fn components(rows: &[u64]) -> Vec<u64> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for s in 0..rows.len() {
        if seen & bit(s) != 0 {
            continue;
        }
        let (mut comp, mut frontier) = (bit(s), bit(s));
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

fn is_clique_mask(rows: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (mask & !bit(v)) & !rows[v] != 0 {
            return false;
        }
    }
    true
}

/// Relabel vertices by (degree, neighbour-degree sum, old label). Isomorphic
/// graphs often share a key and equal keys always mean isomorphic graphs, so
/// the memo is exact.
fn memo_key(rows: &[u64]) -> Vec<u64> {
    let deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    let nsum: Vec<u32> = rows
        .iter()
        .map(|&r| {
            let mut s = 0;
            let mut rest = r;
            while rest != 0 {
                s += deg[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            s
        })
        .collect();
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&v| (deg[v], nsum[v], v));
    let mut pos = vec![0usize; rows.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut key = Vec::with_capacity(rows.len());
    for &v in &order {
        let mut r = 0u64;
        let mut rest = rows[v];
        while rest != 0 {
            r |= bit(pos[rest.trailing_zeros() as usize]);
            rest &= rest - 1;
        }
        key.push(r);
    }
    key
}

impl Engine {
    fn solve(&mut self, rows: Vec<u64>) -> Result<IntPolynomial> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.cfg.node_budget {
            return Err(Error::BudgetExceeded(self.cfg.node_budget));
        }
        let k = rows.len();
        if k == 0 {
            return Ok(Poly::one());
        }
        let all = if k == 64 { u64::MAX } else { bit(k) - 1 };
        if is_clique_mask(&rows, all) {
            return Ok(Poly::falling_factorial(k));
        }
        let comps = components(&rows);
        if comps.len() > 1 {
            let mut acc = Poly::one();
            for c in comps {
                acc = &acc * &self.solve(restrict(&rows, c))?;
            }
            return Ok(acc);
        }
        if let Some(v) = (0..k).find(|&v| is_clique_mask(&rows, rows[v])) {
            let d = rows[v].count_ones() as usize;
            let rest = self.solve(remove_vertex(&rows, v))?;
            return Ok(&rest * &x_minus(d));
        }

        let key = self.cfg.memo.then(|| memo_key(&rows));
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            self.stats.memo_hits += 1;
            return Ok(hit.clone());
        }

        let edges: usize = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        let dense = 4 * edges > k * (k - 1);
        let deg = |v: usize| rows[v].count_ones();
        let mut best: Option<(u32, usize, usize)> = None;
        for u in 0..k {
            for v in u + 1..k {
                // sparse graphs branch on an edge, dense ones on a non-edge
                if (rows[u] & bit(v) != 0) == dense {
                    continue;
                }
                let score = deg(u) + deg(v);
                if best.is_none_or(|(s, _, _)| score > s) {
                    best = Some((score, u, v));
                }
            }
        }
        let (_, u, v) = best.expect("non-clique connected graph has both an edge and a non-edge");
        let contracted = self.solve(contract(&rows, u, v))?;
        let mut other = rows.clone();
        other[u] ^= bit(v);
        other[v] ^= bit(u);
        let rest = self.solve(other)?;
        let p = if dense { &rest + &contracted } else { &rest - &contracted };

        if let Some(k) = key {
            self.memo.insert(k, p.clone());
        }
        Ok(p)
    }
}

/// Chromatic polynomial written in the falling-factorial basis,
/// `P(G, x) = sum_k s_k (x)_k`, where `s_k` counts partitions of the vertex
/// set into `k` independent sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FallingFactorialForm {
    pub coeffs: Vec<BigInt>,
}

impl FallingFactorialForm {
    pub fn from_polynomial(p: &IntPolynomial) -> Self {
        FallingFactorialForm { coeffs: p.to_falling_factorial() }
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        Poly::from_falling_factorial(&self.coeffs)
    }

    /// Trim high zero coefficients so equal forms compare equal.
    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }
}

pub fn to_falling_factorial(p: &IntPolynomial) -> FallingFactorialForm {
    FallingFactorialForm::from_polynomial(p).normalized()
}

pub fn from_falling_factorial(f: &FallingFactorialForm) -> IntPolynomial {
    f.to_polynomial()
}

pub const PARTITION_ORACLE_MAX_ORDER: usize = 10;

/// Count partitions of `V(G)` into independent blocks by explicit enumeration.
pub fn partition_oracle(g: &Graph) -> Result<FallingFactorialForm> {
    let n = g.order();
    if n > PARTITION_ORACLE_MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "partition oracle is limited to order {PARTITION_ORACLE_MAX_ORDER}, got {n}"
        )));
    }
    fn place(g: &Graph, v: usize, blocks: &mut Vec<u64>, counts: &mut [u64]) {
        if v == g.order() {
            counts[blocks.len()] += 1;
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i] & g.neighbors(v) == 0 {
                blocks[i] |= bit(v);
                place(g, v + 1, blocks, counts);
                blocks[i] &= !bit(v);
            }
        }
        blocks.push(bit(v));
        place(g, v + 1, blocks, counts);
        blocks.pop();
    }
    let mut counts = vec![0u64; n + 1];
    place(g, 0, &mut Vec::new(), &mut counts);
    Ok(FallingFactorialForm { coeffs: counts.into_iter().map(BigInt::from).collect() }.normalized())
}

pub fn derivative(p: &IntPolynomial, k: usize) -> IntPolynomial {
    p.nth_derivative(k)
}

/// `m (m-1) ... (m-k+1) / k!` for `m` in a field.
fn choose<T: Field>(m: &T, k: usize) -> T {
    (0..k).fold(T::one(), |acc, i| acc * (m.clone() - from_usize::<T>(i)) / from_usize::<T>(i + 1))
}

/// The unsigned top coefficients `[1, c1, c2, c3, c4]` of `P(G, x)` from census data,
/// so that `P(G,x) = x^n - c1 x^(n-1) + c2 x^(n-2) - c3 x^(n-3) + c4 x^(n-4) - ...`.
///
/// * `c1 = m`
/// * `c2 = C(m,2) - t`
/// * `c3 = C(m,3) - (m-2) t - ic4 + 2 k4`
/// * `c4 = C(m,4) - C(m-2,2) t + C(t,2) - (m-3) ic4 + (2m-9) k4 - ic5 + ik23 + 2 ih + 3 iw5 - 6 k5`
pub fn top_coefficient_magnitudes<T: Field>(c: &Census<T>) -> [T; 5] {
    let int = |v: usize| from_usize::<T>(v);
    let m = &c.m;
    let t = &c.t;
    let c1 = m.clone();
    let c2 = choose(m, 2) - t;
    let c3 = choose(m, 3) - (m.clone() - int(2)) * t - &c.ic4 + int(2) * &c.k4;
    let c4 = choose(m, 4) - choose(&(m.clone() - int(2)), 2) * t + choose(t, 2)
        - (m.clone() - int(3)) * &c.ic4
        + (int(2) * m - int(9)) * &c.k4
        - &c.ic5
        + &c.ik23
        + int(2) * &c.ih
        + int(3) * &c.iw5
        - int(6) * &c.k5;
    [T::one(), c1, c2, c3, c4]
}

/// Signed leading coefficients of `P(G, x)`, highest degree first:
/// `[1, -c1, c2, -c3, c4]`, truncated to `n + 1` entries for small orders.
pub fn top_coefficients(counts: &Census<u64>, n: usize) -> Vec<BigInt> {
    let exact = counts.map(|&v| BigRational::from_integer(BigInt::from(v)));
    let mags = top_coefficient_magnitudes(&exact);
    mags.into_iter()
        .enumerate()
        .take(n + 1)
        .map(|(i, c)| {
            let c = c.to_integer();
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

/// `P(K_{s,t}, x) = sum_j S(s, j) (x)_j (x - j)^t`, with `S` the Stirling
/// numbers of the second kind (colour the `s` side with exactly `j` colours).
pub fn complete_bipartite_chromatic(s: usize, t: usize) -> IntPolynomial {
    let mut stirling = vec![vec![BigInt::zero(); s + 1]; s + 1];
    stirling[0][0] = BigInt::one();
    for i in 1..=s {
        for j in 1..=i {
            stirling[i][j] = &stirling[i - 1][j - 1] + BigInt::from(j) * &stirling[i - 1][j];
        }
    }
    let mut acc = Poly::zero();
    for (j, sj) in stirling[s].iter().enumerate() {
        if sj.is_zero() {
            continue;
        }
        let mut term = Poly::falling_factorial(j).scale(sj);
        for _ in 0..t {
            term = &term * &x_minus(j);
        }
        acc = &acc + &term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;
    use crate::graph::{
        complete, complete_bipartite, cycle, disjoint_union, erdos_renyi, path, petersen, RngSeed,
    };

    fn ip(c: &[i64]) -> IntPolynomial {
        Poly::from_i64s(c)
    }

    /// Proper k-colourings by exhaustive assignment.
    fn count_colourings(g: &Graph, k: usize) -> u64 {
        fn go(g: &Graph, k: usize, v: usize, col: &mut Vec<usize>) -> u64 {
            if v == g.order() {
                return 1;
            }
            let mut total = 0;
            for c in 0..k {
                if (0..v).all(|u| !g.adjacent(u, v) || col[u] != c) {
                    col.push(c);
                    total += go(g, k, v + 1, col);
                    col.pop();
                }
            }
            total
        }
        go(g, k, 0, &mut Vec::new())
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(chromatic_polynomial(&complete(3).unwrap()).unwrap(), ip(&[0, 2, -3, 1]));
        assert_eq!(chromatic_polynomial(&cycle(4).unwrap()).unwrap(), ip(&[0, -3, 6, -4, 1]));
        // x (x-1)^4
        assert_eq!(chromatic_polynomial(&path(5).unwrap()).unwrap(), ip(&[0, 1, -4, 6, -4, 1]));
        let k23 = chromatic_polynomial(&complete_bipartite(2, 3).unwrap()).unwrap();
        assert_eq!(k23.eval(&BigInt::from(2)), BigInt::from(2));
        assert_eq!(chromatic_polynomial(&Graph::empty(1).unwrap()).unwrap(), ip(&[0, 1]));
        assert!(chromatic_polynomial(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn petersen_known_value() {
        // P(Petersen, 3) = 120
        let p = chromatic_polynomial(&petersen()).unwrap();
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(120));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(0));
    }

    #[test]
    fn budget_is_reported() {
        let g = petersen();
        let cfg = DcConfig { node_budget: 5, memo: true };
        assert!(matches!(chromatic_polynomial_with(&g, cfg), Err(Error::BudgetExceeded(5))));
    }

    #[test]
    fn memo_does_not_change_results() {
        for s in 0..30u64 {
            let g = erdos_renyi(10, 0.5, RngSeed::new(17, s)).unwrap();
            let (a, _) = chromatic_polynomial_with(&g, DcConfig { memo: true, ..Default::default() }).unwrap();
            let (b, _) = chromatic_polynomial_with(&g, DcConfig { memo: false, ..Default::default() }).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn evaluation_matches_colouring_counts() {
        for s in 0..40u64 {
            let n = 1 + (s % 8) as usize;
            let g = erdos_renyi(n, 0.45, RngSeed::new(3, s)).unwrap();
            let p = chromatic_polynomial(&g).unwrap();
            for k in 0..=3 {
                assert_eq!(p.eval(&BigInt::from(k)), BigInt::from(count_colourings(&g, k as usize)));
            }
            assert_eq!(p.degree(), Some(n));
            assert!(p.leading().unwrap().is_one());
            // alternating signs: coefficient of x^i has sign (-1)^(n-i) or is zero
            for (i, c) in p.coeffs().iter().enumerate() {
                let s = if (n - i).is_multiple_of(2) { 1 } else { -1 };
                assert!(c * BigInt::from(s) >= BigInt::zero());
            }
        }
    }

    #[test]
    fn deletion_contraction_identity() {
        for s in 0..25u64 {
            let g = erdos_renyi(8, 0.5, RngSeed::new(11, s)).unwrap();
            let Some((u, v)) = g.edges().nth((s as usize) % g.size().max(1)) else { continue };
            let minus = Graph::from_edges(8, g.edges().filter(|&e| e != (u, v))).unwrap();
            let rows = contract(g.adjacency(), u, v);
            let slash = Graph::from_adjacency(rows).unwrap();
            let lhs = chromatic_polynomial(&g).unwrap();
            let rhs = &chromatic_polynomial(&minus).unwrap() - &chromatic_polynomial(&slash).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn multiplicative_over_components() {
        let g = complete(3).unwrap();
        let h = cycle(5).unwrap();
        let u = disjoint_union(&g, &h).unwrap();
        let prod = &chromatic_polynomial(&g).unwrap() * &chromatic_polynomial(&h).unwrap();
        assert_eq!(chromatic_polynomial(&u).unwrap(), prod);
        let iso = disjoint_union(&h, &Graph::empty(1).unwrap()).unwrap();
        assert_eq!(chromatic_polynomial(&iso).unwrap(), &chromatic_polynomial(&h).unwrap() * &ip(&[0, 1]));
    }

    #[test]
    fn falling_factorial_forms() {
        let k3 = chromatic_polynomial(&complete(3).unwrap()).unwrap();
        assert_eq!(to_falling_factorial(&k3).coeffs, vec![0.into(), 0.into(), 0.into(), BigInt::from(1)]);
        let e3 = partition_oracle(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(e3.coeffs, vec![0.into(), 1.into(), 3.into(), BigInt::from(1)]);
        assert_eq!(partition_oracle(&complete(3).unwrap()).unwrap().coeffs, vec![0.into(), 0.into(), 0.into(), BigInt::from(1)]);
        let c4 = chromatic_polynomial(&cycle(4).unwrap()).unwrap();
        let ff = to_falling_factorial(&c4);
        assert_eq!(ff, partition_oracle(&cycle(4).unwrap()).unwrap());
        // C4: one 2-partition {02,13}, two 3-partitions, one 4-partition
        assert_eq!(ff.coeffs, vec![0.into(), 0.into(), 1.into(), 2.into(), BigInt::from(1)]);
        assert_eq!(from_falling_factorial(&ff), c4);
        assert!(partition_oracle(&Graph::empty(11).unwrap()).is_err());
    }

    #[test]
    fn falling_factorial_matches_partition_oracle_on_random_graphs() {
        for s in 0..60u64 {
            let n = 1 + (s % 8) as usize;
            let g = erdos_renyi(n, 0.4, RngSeed::new(8, s)).unwrap();
            let p = chromatic_polynomial(&g).unwrap();
            let ff = to_falling_factorial(&p);
            assert_eq!(ff, partition_oracle(&g).unwrap());
            assert_eq!(ff.coeffs[n], BigInt::one());
            assert!(ff.coeffs.iter().all(|c| c >= &BigInt::zero()));
        }
    }

    #[test]
    fn derivative_examples() {
        let k3 = ip(&[0, 2, -3, 1]);
        assert_eq!(derivative(&k3, 1), ip(&[2, -6, 3]));
        let k23 = chromatic_polynomial(&complete_bipartite(2, 3).unwrap()).unwrap();
        let d = derivative(&k23, 3);
        assert_eq!(d.degree(), Some(2));
        let (c, b, a) = (d.coeff(0), d.coeff(1), d.coeff(2));
        assert!(&b * &b - BigInt::from(4) * a * c < BigInt::zero());
    }

    #[test]
    fn top_coefficient_hand_checks() {
        let c4 = census(&cycle(4).unwrap());
        assert_eq!(top_coefficients(&c4, 4), vec![1, -4, 6, -3, 0].into_iter().map(BigInt::from).collect::<Vec<_>>());
        let k4 = census(&complete(4).unwrap());
        assert_eq!(top_coefficients(&k4, 4), vec![1, -6, 11, -6, 0].into_iter().map(BigInt::from).collect::<Vec<_>>());
        let k3 = census(&complete(3).unwrap());
        assert_eq!(top_coefficients(&k3, 3).len(), 4);
    }

    #[test]
    fn top_coefficients_match_on_random_graphs() {
        for s in 0..150u64 {
            let n = 5 + (s % 6) as usize;
            let g = erdos_renyi(n, [0.3, 0.5, 0.8][(s % 3) as usize], RngSeed::new(12, s)).unwrap();
            let p = chromatic_polynomial(&g).unwrap();
            let want: Vec<BigInt> = (0..5).map(|i| p.coeff(n - i)).collect();
            assert_eq!(top_coefficients(&census(&g), n), want, "seed {s}");
        }
    }

    #[test]
    fn bipartite_closed_form_matches_engine() {
        for s in 1..=4 {
            for t in s..=5 {
                let g = complete_bipartite(s, t).unwrap();
                assert_eq!(complete_bipartite_chromatic(s, t), chromatic_polynomial(&g).unwrap(), "K{s},{t}");
            }
        }
    }
}
