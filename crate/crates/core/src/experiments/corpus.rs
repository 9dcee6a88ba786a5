//! Whole-corpus statistics over graph6 streams.

use super::sweep::SCHEMA_VERSION;
use crate::chromatic::chromatic_polynomial;
use crate::graph::io::{read_graph6, write_graph6, Graph6Record};
use crate::roots::{count_real_roots, find_roots};
use crate::{Graph, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::io::BufRead;
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

/// Parsed corpus: graphs with their line numbers, plus per-line failures.
#[derive(Debug, Default)]
pub struct Corpus {
    pub graphs: Vec<(usize, Graph)>,
    pub errors: Vec<LineError>,
}

impl Corpus {
    pub fn from_records(records: Vec<Graph6Record>) -> Self {
        let mut c = Corpus::default();
        for r in records {
            match r.graph {
                Ok(g) => c.graphs.push((r.line, g)),
                Err(e) => c.errors.push(LineError { line: r.line, message: e.to_string() }),
            }
        }
        c
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        Ok(Corpus::from_records(read_graph6(reader)?))
    }

    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Corpus::read(std::io::BufReader::new(f))
    }

    /// The common order, if every graph has the same one.
    pub fn order(&self) -> Option<usize> {
        let first = self.graphs.first()?.1.order();
        self.graphs.iter().all(|(_, g)| g.order() == first).then_some(first)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusCensus {
    pub schema: u32,
    pub order: Option<usize>,
    pub total: usize,
    pub all_real: usize,
    pub disconnected: usize,
    /// Lines that failed to parse or whose polynomial could not be computed.
    pub errors: Vec<LineError>,
}

/// Count graphs whose chromatic roots are all real, decided exactly.
pub fn corpus_all_real_census(corpus: &Corpus) -> CorpusCensus {
    let decided: Vec<std::result::Result<bool, LineError>> = corpus
        .graphs
        .par_iter()
        .map(|(line, g)| {
            chromatic_polynomial(g)
                .and_then(|p| count_real_roots(&p))
                .map(|c| c.all_real())
                .map_err(|e| LineError { line: *line, message: e.to_string() })
        })
        .collect();
    let mut errors = corpus.errors.clone();
    let mut all_real = 0;
    for d in decided {
        match d {
            Ok(true) => all_real += 1,
            Ok(false) => {}
            Err(e) => errors.push(e),
        }
    }
    errors.sort_by_key(|e| e.line);
    CorpusCensus {
        schema: SCHEMA_VERSION,
        order: corpus.order(),
        total: corpus.graphs.len(),
        all_real,
        disconnected: corpus.graphs.iter().filter(|(_, g)| !g.is_connected()).count(),
        errors,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub schema: u32,
    pub order: Option<usize>,
    pub candidates: usize,
    pub winner_line: usize,
    pub winner_graph6: String,
    pub max_imag: f64,
    /// `Some((s, t))` when the winner is complete bipartite `K_{s,t}`.
    pub winner_bipartite_parts: Option<(usize, usize)>,
    /// Root sets that did not converge and were left out.
    pub excluded: Vec<LineError>,
}

/// The graph whose chromatic polynomial has the root of largest imaginary
/// part. Ties (within `1e-9`) go to the earlier line.
pub fn extremal_imaginary_search(corpus: &Corpus) -> Result<ExtremalReport> {
    let scored: Vec<(usize, std::result::Result<f64, String>)> = corpus
        .graphs
        .par_iter()
        .map(|(line, g)| {
            let r = chromatic_polynomial(g).and_then(|p| find_roots(&p));
            let v = match r {
                Ok(rs) if rs.converged => Ok(rs.max_imag()),
                Ok(rs) => Err(format!("root finder did not converge (residual {:e})", rs.residual)),
                Err(e) => Err(e.to_string()),
            };
            (*line, v)
        })
        .collect();
    let mut best: Option<(usize, usize, f64)> = None;
    let mut excluded = corpus.errors.clone();
    for (idx, (line, v)) in scored.into_iter().enumerate() {
        match v {
            Ok(x) => {
                if best.is_none_or(|(_, _, b)| x > b + 1e-9) {
                    best = Some((idx, line, x));
                }
            }
            Err(message) => excluded.push(LineError { line, message }),
        }
    }
    let (idx, line, max_imag) = best.ok_or_else(|| crate::Error::InvalidArgument("corpus has no usable graph".into()))?;
    let g = &corpus.graphs[idx].1;
    Ok(ExtremalReport {
        schema: SCHEMA_VERSION,
        order: corpus.order(),
        candidates: corpus.graphs.len(),
        winner_line: line,
        winner_graph6: write_graph6(g)?,
        max_imag,
        winner_bipartite_parts: g.complete_bipartite_parts(),
        excluded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus(text: &str) -> Corpus {
        Corpus::read(text.as_bytes()).unwrap()
    }

    #[test]
    fn order_four_by_hand() {
        // the six connected graphs on four vertices: P4, K1,3, C4, paw, diamond, K4
        let c = corpus("C`\nCF\nCr\nCN\nC^\nC~\n");
        assert_eq!(c.graphs.len(), 6);
        let r = corpus_all_real_census(&c);
        assert_eq!((r.all_real, r.total, r.order), (5, 6, Some(4)));
        let e = extremal_imaginary_search(&c).unwrap();
        assert_eq!(e.winner_bipartite_parts, Some((2, 2)));
        assert!((e.max_imag - 3f64.sqrt() / 2.0).abs() < 1e-9);
    }

    #[test]
    fn bad_lines_are_reported_not_fatal() {
        let c = corpus("C~\nnot-a-graph\nCr\n");
        let r = corpus_all_real_census(&c);
        assert_eq!(r.total, 2);
        assert_eq!(r.errors.len(), 1);
        assert_eq!(r.errors[0].line, 2);
    }
}
