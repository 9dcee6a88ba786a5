use super::Graph;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Seed for a reproducible sample: a base seed plus a stream index.
///
/// Each `(seed, stream)` pair drives its own ChaCha8 keystream (the stream
/// index selects the ChaCha nonce), so trial `i` of a sweep draws from
/// `(seed, i)` no matter which worker runs it or in which order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed {
    pub seed: u64,
    pub stream: u64,
}

impl RngSeed {
    pub fn new(seed: u64, stream: u64) -> Self {
        RngSeed { seed, stream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// Sample from G(n,p): each of the `n(n-1)/2` pairs, visited in lexicographic
/// order, is an edge when a uniform `[0,1)` draw falls below `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: RngSeed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} outside [0,1]")));
    }
    let mut g = Graph::empty(n)?;
    let mut rng = seed.rng();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::assert_well_formed;

    #[test]
    fn degenerate_probabilities() {
        for s in 0..5 {
            let seed = RngSeed::new(s, 0);
            assert_eq!(erdos_renyi(10, 0.0, seed).unwrap().size(), 0);
            assert_eq!(erdos_renyi(10, 1.0, seed).unwrap().size(), 45);
        }
    }

    #[test]
    fn rejects_bad_probability() {
        assert!(erdos_renyi(5, -0.1, RngSeed::new(0, 0)).is_err());
        assert!(erdos_renyi(5, 1.5, RngSeed::new(0, 0)).is_err());
        assert!(erdos_renyi(5, f64::NAN, RngSeed::new(0, 0)).is_err());
    }

    #[test]
    fn deterministic_and_stream_sensitive() {
        let a = erdos_renyi(30, 0.4, RngSeed::new(7, 3)).unwrap();
        let b = erdos_renyi(30, 0.4, RngSeed::new(7, 3)).unwrap();
        let c = erdos_renyi(30, 0.4, RngSeed::new(7, 4)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_well_formed(&a);
    }

    #[test]
    fn mean_edge_count_matches_expectation() {
        let (n, p, trials) = (50usize, 0.5, 500u64);
        let pairs = (n * (n - 1) / 2) as f64;
        let mean = (0..trials)
            .map(|i| erdos_renyi(n, p, RngSeed::new(2024, i)).unwrap().size() as f64)
            .sum::<f64>()
            / trials as f64;
        let sigma = (pairs * p * (1.0 - p)).sqrt();
        assert!((mean - 612.5).abs() < 3.0 * sigma, "mean {mean}");
    }
}
