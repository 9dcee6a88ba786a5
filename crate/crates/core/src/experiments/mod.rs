//! Drivers for the random-graph, corpus and scaling experiments.

pub mod corpus;
pub mod lc;
pub mod scans;
pub mod sweep;

pub use corpus::{corpus_all_real_census, extremal_imaginary_search, Corpus, CorpusCensus, ExtremalReport};
pub use lc::{lc_numeric_oracle, quad_disc_expectation, quartic_lc, quartic_lc_root, LcFit};
pub use scans::{bipartite_scan, is_nondecreasing, BipartiteRow};
pub use sweep::{random_sweep, ExperimentConfig, SweepReport, SweepSummary, TrialResult, SCHEMA_VERSION};
