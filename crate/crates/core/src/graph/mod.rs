//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.

mod generators;
pub mod io;
mod random;

pub use generators::{
    complete, complete_bipartite, cycle, disjoint_union, empty, path, petersen, ring_cliques,
    RingParams,
};
pub use random::{erdos_renyi, RngSeed};

use crate::{Error, Result};

/// Largest supported order; one `u64` row per vertex.
pub const MAX_ORDER: usize = 64;

/// Immutable simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "order {n} exceeds the supported maximum of {MAX_ORDER}"
            )));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Build from raw adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(Error::InvalidArgument(format!("order {n} exceeds {MAX_ORDER}")));
        }
        let live = if n == 64 { u64::MAX } else { bit(n) - 1 };
        for (u, &row) in adj.iter().enumerate() {
            if row & !live != 0 || row & bit(u) != 0 {
                return Err(Error::InvalidArgument(format!("bad adjacency row {u}")));
            }
            let mut rest = row;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[v] & bit(u) == 0 {
                    return Err(Error::InvalidArgument(format!("asymmetric adjacency at ({u},{v})")));
                }
            }
        }
        Ok(Graph { adj })
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `u` as a bitmask.
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|u| self.degree(u)).collect();
        d.sort_unstable();
        d
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            let mut above = self.adj[u] & !((bit(u) << 1).wrapping_sub(1));
            std::iter::from_fn(move || {
                if above == 0 {
                    return None;
                }
                let v = above.trailing_zeros() as usize;
                above &= above - 1;
                Some((u, v))
            })
        })
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let n = self.order();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let live = if n == 64 { u64::MAX } else { bit(n) - 1 };
        Graph {
            adj: (0..n).map(|u| !self.adj[u] & live & !bit(u)).collect(),
        }
    }

    /// Subgraph induced by the vertices in `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = (0..self.order()).filter(|&v| mask & bit(v) != 0).collect();
        let mut g = Graph { adj: vec![0; verts.len()] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument("relabelling is not a permutation".into()));
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// True when the graph is `K_{s,t}` for some split with `s + t = n`,
    /// returning the part sizes `(s, t)` with `s <= t`.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        // K_{s,t} is exactly the graph whose complement is K_s + K_t with both parts nonempty.
        let comps = self.complement().components();
        if comps.len() != 2 {
            return None;
        }
        let c = self.complement();
        for &comp in &comps {
            let mut rest = comp;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if c.adj[v] != comp & !bit(v) {
                    return None;
                }
            }
        }
        let (a, b) = (comps[0].count_ones() as usize, comps[1].count_ones() as usize);
        Some((a.min(b), a.max(b)))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
pub(crate) use tests::assert_well_formed;
