use super::{bit, Graph};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete graph needs n >= 1".into()));
    }
    Graph::empty(n)?;
    let live = if n == 64 { u64::MAX } else { bit(n) - 1 };
    Ok(Graph {
        adj: (0..n).map(|u| live & !bit(u)).collect(),
    })
}

/// `K_{s,t}` with parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidArgument("complete bipartite parts must be nonempty".into()));
    }
    Graph::from_edges(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|u| (u - 1, u)))
}

/// `g` followed by `h`, with `h`'s vertices shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.order();
    Graph::from_edges(
        off + h.order(),
        g.edges().chain(h.edges().map(|(u, v)| (u + off, v + off))),
    )
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("static graph")
}

/// Clique sizes of the ring `C4(a,b,c,d)`, in cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

fn half(num: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(2))
}

impl RingParams {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 || d == 0 {
            return Err(Error::InvalidArgument(format!(
                "ring block sizes must be >= 1, got ({a},{b},{c},{d})"
            )));
        }
        Ok(RingParams { a, b, c, d })
    }

    pub fn symmetric(a: usize) -> Result<Self> {
        RingParams::new(a, a, a, a)
    }

    pub fn order(&self) -> usize {
        self.a + self.b + self.c + self.d
    }

    fn signed(&self) -> (i64, i64, i64, i64) {
        (self.a as i64, self.b as i64, self.c as i64, self.d as i64)
    }

    /// `(b + c - a - d + 1) / 2`
    pub fn p(&self) -> BigRational {
        let (a, b, c, d) = self.signed();
        half(b + c - a - d + 1)
    }

    /// `(c + d - a - b + 1) / 2`
    pub fn q(&self) -> BigRational {
        let (a, b, c, d) = self.signed();
        half(c + d - a - b + 1)
    }

    /// `(b + d - a - c + 1) / 2`
    pub fn k(&self) -> BigRational {
        let (a, b, c, d) = self.signed();
        half(b + d - a - c + 1)
    }

    /// Invert the `(a, p, q, k)` parametrisation back to block sizes.
    pub fn from_apqk(a: usize, p: &BigRational, q: &BigRational, k: &BigRational) -> Result<Self> {
        let base = BigRational::from_integer(BigInt::from(a as i64)) - BigRational::one();
        let block = |x: BigRational| -> Result<usize> {
            if !x.is_integer() {
                return Err(Error::InvalidArgument("p, q, k do not give integer block sizes".into()));
            }
            usize::try_from(x.to_integer())
                .map_err(|_| Error::InvalidArgument("negative block size".into()))
        };
        let b = block(p + k + &base)?;
        let c = block(p + q + &base)?;
        let d = block(q + k + &base)?;
        RingParams::new(a, b, c, d)
    }
}

/// Ring of cliques: a 4-cycle whose vertices are replaced by cliques of sizes
/// `a, b, c, d`, with complete joins between cyclically adjacent blocks.
pub fn ring_cliques(params: RingParams) -> Result<Graph> {
    let RingParams { a, b, c, d } = RingParams::new(params.a, params.b, params.c, params.d)?;
    let sizes = [a, b, c, d];
    let mut starts = [0usize; 5];
    for i in 0..4 {
        starts[i + 1] = starts[i] + sizes[i];
    }
    let block = |i: usize| starts[i]..starts[i + 1];
    let mut edges = Vec::new();
    for i in 0..4 {
        for u in block(i) {
            for v in block(i).filter(|&v| v > u) {
                edges.push((u, v));
            }
            for v in block((i + 1) % 4) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(starts[4], edges)
}
