//! Random-graph discriminant sweeps over G(n,p).

use crate::census::{census, expected_counts, Census};
use crate::chromatic::chromatic_polynomial;
use crate::graph::{erdos_renyi, RngSeed};
use crate::roots::{count_real_roots, quadratic_disc_test, quartic_discriminant, quartic_from_counts, AllReal};
use crate::{Error, Result, SubgraphCounts};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Version tag written into every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

/// Largest order for which `exact` computes the chromatic polynomial.
pub const EXACT_MAX_ORDER: usize = 24;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub p: f64,
    pub trials: u64,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool. Never affects results.
    #[serde(skip)]
    pub jobs: Option<usize>,
    /// Also decide realness exactly from the chromatic polynomial.
    #[serde(default)]
    pub exact: bool,
}

impl ExperimentConfig {
    pub fn new(n: usize, p: f64, trials: u64, seed: u64) -> Self {
        ExperimentConfig { n, p, trials, seed, jobs: None, exact: false }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidArgument(format!("p = {} outside [0,1]", self.p)));
        }
        if self.n < 4 {
            return Err(Error::InvalidArgument(format!("sweeps need n >= 4, got {}", self.n)));
        }
        if self.exact && self.n > EXACT_MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "exact realness is limited to n <= {EXACT_MAX_ORDER}, got {}",
                self.n
            )));
        }
        if self.jobs == Some(0) {
            return Err(Error::InvalidArgument("jobs must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialResult {
    pub trial: u64,
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub counts: SubgraphCounts,
    pub quad_disc_sign: i8,
    pub quartic_disc_sign: i8,
    pub certified_nonreal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_all_real: Option<AllReal>,
}

impl TrialResult {
    /// A certificate contradicted by the exact computation.
    pub fn false_certificate(&self) -> bool {
        self.certified_nonreal && self.exact_all_real == Some(AllReal::Yes)
    }
}

/// Signs of the quadratic and quartic discriminants for census counts of a
/// graph of order `n`.
pub fn certificate_signs(counts: &SubgraphCounts, n: usize) -> Result<(i8, i8)> {
    let quad = quadratic_disc_test(n as u64, counts.m, counts.t)?.sign;
    let exact = counts.map(|&v| BigRational::from_integer(BigInt::from(v)));
    let [a, b, c, d, e] = quartic_from_counts(&exact, n)?;
    let quartic = quartic_discriminant(&a, &b, &c, &d, &e)?.sign;
    Ok((quad, quartic))
}

pub fn run_trial(cfg: &ExperimentConfig, trial: u64) -> Result<TrialResult> {
    let g = erdos_renyi(cfg.n, cfg.p, RngSeed::new(cfg.seed, trial))?;
    let counts = census(&g);
    let (quad, quartic) = certificate_signs(&counts, cfg.n)?;
    let exact_all_real = if cfg.exact {
        let pi = chromatic_polynomial(&g)?;
        Some(count_real_roots(&pi)?.all_real().into())
    } else {
        None
    };
    Ok(TrialResult {
        trial,
        n: cfg.n,
        p: cfg.p,
        seed: cfg.seed,
        counts,
        quad_disc_sign: quad,
        quartic_disc_sign: quartic,
        certified_nonreal: quad < 0 || quartic < 0,
        exact_all_real,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepSummary {
    pub trials: u64,
    pub quad_negative: u64,
    pub quartic_negative: u64,
    pub certified: u64,
    pub quad_fraction: f64,
    pub quartic_fraction: f64,
    pub certified_fraction: f64,
    pub exact_checked: u64,
    pub exact_not_all_real: u64,
    pub false_certificates: u64,
}

impl SweepSummary {
    pub fn from_trials(trials: &[TrialResult]) -> Self {
        let count = |f: &dyn Fn(&TrialResult) -> bool| trials.iter().filter(|t| f(t)).count() as u64;
        let n = trials.len() as u64;
        let quad_negative = count(&|t| t.quad_disc_sign < 0);
        let quartic_negative = count(&|t| t.quartic_disc_sign < 0);
        let certified = count(&|t| t.certified_nonreal);
        let frac = |k: u64| if n == 0 { 0.0 } else { k as f64 / n as f64 };
        SweepSummary {
            trials: n,
            quad_negative,
            quartic_negative,
            certified,
            quad_fraction: frac(quad_negative),
            quartic_fraction: frac(quartic_negative),
            certified_fraction: frac(certified),
            exact_checked: count(&|t| t.exact_all_real.is_some()),
            exact_not_all_real: count(&|t| t.exact_all_real == Some(AllReal::No)),
            false_certificates: count(&|t| t.false_certificate()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub config: ExperimentConfig,
    pub summary: SweepSummary,
    pub trials: Vec<TrialResult>,
}

impl SweepReport {
    /// The summary document without per-trial records.
    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": self.schema,
            "config": self.config,
            "summary": self.summary,
        })
    }
}

fn run_in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::Computation(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Run `cfg.trials` independent trials; trial `i` samples from stream `i` of
/// `cfg.seed`, so results do not depend on the number of workers.
pub fn random_sweep(cfg: &ExperimentConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let trials = run_in_pool(cfg.jobs, || {
        (0..cfg.trials)
            .into_par_iter()
            .map(|i| run_trial(cfg, i))
            .collect::<Result<Vec<_>>>()
    })??;
    Ok(SweepReport {
        schema: SCHEMA_VERSION,
        config: cfg.clone(),
        summary: SweepSummary::from_trials(&trials),
        trials,
    })
}

/// Observed-over-expected deviations `X / E(X) - 1` for each census statistic
/// (`NaN` where the expectation vanishes).
pub fn deviations(counts: &SubgraphCounts, n: usize, p: f64) -> Census<f64> {
    let e: Census<f64> = expected_counts(n, &p);
    let o = counts.map(|&v| v as f64);
    let dev = |obs: f64, exp: f64| if exp == 0.0 { f64::NAN } else { obs / exp - 1.0 };
    Census {
        m: dev(o.m, e.m),
        t: dev(o.t, e.t),
        k4: dev(o.k4, e.k4),
        k5: dev(o.k5, e.k5),
        ic4: dev(o.ic4, e.ic4),
        ic5: dev(o.ic5, e.ic5),
        ik23: dev(o.ik23, e.ik23),
        ih: dev(o.ih, e.ih),
        iw5: dev(o.iw5, e.iw5),
    }
}
