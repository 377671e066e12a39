//! graph6 encoding and decoding.
//!
//! The header N(n) is one byte `n + 63` for n ≤ 62, `126` followed by three
//! bytes for n ≤ 258047, and `126 126` followed by six bytes beyond that.
//! The body packs the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... six
//! bits per byte, most significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OPTIONAL_HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let six = |b: &[u8]| -> usize { b.iter().fold(0, |acc, &c| (acc << 6) | (c - 63) as usize) };
    match bytes {
        [] => Err(bad("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated 8-byte size header"));
            }
            Ok((six(&rest[..6]), 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated 4-byte size header"));
            }
            Ok((six(&rest[..3]), 4))
        }
        [b, ..] => Ok((*b as usize - 63, 1)),
    }
}

/// Encodes `g` as a graph6 string (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    // every byte lies in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// prefix are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(OPTIONAL_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(format!(
            "byte {pos} is outside the printable graph6 range"
        )));
    }
    let (n, header) = decode_size(bytes)?;
    let body = &bytes[header..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(bad(format!(
            "expected {expected} body bytes for n = {n}, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(bad(format!(
            "{} trailing bytes after graph body",
            body.len() - expected
        )));
    }
    let pad = expected * 6 - bits;
    if pad > 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
