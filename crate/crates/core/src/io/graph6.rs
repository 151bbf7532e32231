use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let bytes = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(bad(format!(
            "{n} vertices need {want} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..want * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).map_err(|e| bad(e.to_string()))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let take = |from: usize, count: usize| -> Result<usize> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| bad("truncated length header"))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    match bytes {
        [] => Err(bad("empty line")),
        [126, 126, ..] => Ok((take(2, 6)?, &bytes[8..])),
        [126, ..] => Ok((take(1, 3)?, &bytes[4..])),
        [b, ..] => Ok(((b - 63) as usize, &bytes[1..])),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
