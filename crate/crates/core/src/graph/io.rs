//! graph6 (short form, n <= 62) and plain edge-list text formats.

use super::Graph;
use crate::{Error, Result};
use std::io::BufRead;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";
/// Largest order expressible in the one-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

fn bits_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Encode in graph6: header byte `n + 63`, then the upper triangle read column
/// by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits per byte,
/// most significant first, zero padded, each byte offset by 63.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {n}"
        )));
    }
    let mut out = vec![n as u8 + BIAS];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decode one graph6 line (surrounding whitespace and a leading `>>graph6<<`
/// header are ignored).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::Parse("empty graph6 line".into()));
    };
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b:#04x} outside the graph6 range")));
    }
    if head == 126 {
        return Err(Error::Parse("long-form graph6 (n > 62) is not supported".into()));
    }
    let n = (head - BIAS) as usize;
    let body = &bytes[1..];
    let need = bits_len(n).div_ceil(6);
    if body.len() < need {
        return Err(Error::Parse(format!(
            "truncated graph6 line: order {n} needs {need} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Parse(format!(
            "trailing data after graph6 line: order {n} needs {need} data bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// One parsed line of a graph6 stream, keeping its 1-based line number.
#[derive(Debug)]
pub struct Graph6Record {
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph>,
}

/// Parse every non-blank line of a graph6 stream; malformed lines are kept as
/// per-line errors instead of aborting the read.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph6Record>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || (idx == 0 && trimmed == HEADER) {
            continue;
        }
        out.push(Graph6Record {
            line: idx + 1,
            text: trimmed.to_string(),
            graph: parse_graph6(trimmed),
        });
    }
    Ok(out)
}

/// Edge list: a first line `n <count>`, then one `u v` pair per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, head) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let n = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad vertex count {count:?}")))?,
        _ => return Err(Error::Parse(format!("expected header `n <count>`, found {head:?}"))),
    };
    let mut edges = Vec::new();
    for (idx, l) in lines {
        let parts: Vec<_> = l.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: bad vertex {s:?}", idx + 1)))
        };
        match parts.as_slice() {
            [u, v] => edges.push((parse(u)?, parse(v)?)),
            _ => return Err(Error::Parse(format!("line {}: expected `u v`", idx + 1))),
        }
    }
    Graph::from_edges(n, edges)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
