//! graph6 short form (`n < 63`).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), …`),
//! packed six bits per byte, each byte offset by 63. Trailing bits are zero.
//! Reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the short form can encode.
pub const MAX_SHORT_FORM_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!(
            "invalid character {:?} in size byte",
            first as char
        )));
    }
    let n = (first - 63) as usize;
    if n > MAX_SHORT_FORM_VERTICES {
        return Err(Error::Graph6("long form (n >= 63) is not supported".into()));
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    if body.len() != needed {
        return Err(Error::Graph6(format!(
            "expected {needed} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(needed * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid character {:?}", b as char)));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|s| v >> s & 1 == 1));
    }

    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[t] {
                edges.push((i + 1, j + 1));
            }
            t += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.p();
    if n > MAX_SHORT_FORM_VERTICES {
        return Err(Error::Graph6("long form (n >= 63) is not supported".into()));
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i + 1, j + 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
