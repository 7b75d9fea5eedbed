//! graph6 encoding of simple graphs.
//!
//! Bits follow the column-wise upper triangle `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six to a byte with an offset of 63 and zero-padded at the end.

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, MAX_ORDER};

/// Largest order written with the one-byte size header.
pub const SHORT_FORM_MAX: usize = 62;

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

pub fn to_graph6(g: &SimpleGraph) -> Result<String> {
    let n = g.order();
    if n > SHORT_FORM_MAX {
        return Err(Error::UnsupportedOrder {
            n,
            min: 1,
            max: SHORT_FORM_MAX,
        });
    }
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

pub fn from_graph6(text: &str) -> Result<SimpleGraph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(malformed(format!(
            "byte {b:#04x} outside the printable range"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(malformed("empty input")),
        [126, 126, ..] => return Err(malformed("orders above 258047 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated size header"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, b| acc << 6 | (b - 63) as usize);
            if n <= SHORT_FORM_MAX {
                return Err(malformed("long size header used for a short order"));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n == 0 {
        return Err(malformed("graph has no vertices"));
    }
    if n > MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            n,
            min: 1,
            max: MAX_ORDER,
        });
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let padding = expected * 6 - bits;
    if let Some(&last) = body.last() {
        if (last - 63) & ((1u8 << padding) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    let mut g = SimpleGraph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
