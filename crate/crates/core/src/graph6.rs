//! The graph6 text encoding.
//!
//! Header `N(n)`: one byte `n + 63` for `n <= 62`, `~` plus three bytes for
//! `n <= 258047`, `~~` plus six bytes beyond that. The body packs the upper
//! triangle column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ..`) into
//! six-bit groups, most significant bit first, each offset by 63.

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    CharOutOfRange { offset: usize, byte: u8 },
    #[error("malformed size header")]
    BadHeader,
    #[error("graph6 body has {found} bytes, {expected} expected for {n} vertices")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits after the upper triangle are not zero")]
    TrailingBits,
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
}

const OPTIONAL_HEADER: &str = ">>graph6<<";

fn sixbits(offset: usize, byte: u8) -> Result<u64, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok((byte - 63) as u64)
    } else {
        Err(Graph6Error::CharOutOfRange { offset, byte })
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != b'~' {
        return Ok((sixbits(0, first)? as usize, 1));
    }
    let (start, count) = if bytes.get(1) == Some(&b'~') {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < start + count {
        return Err(Graph6Error::BadHeader);
    }
    let mut n = 0u64;
    for (i, &b) in bytes[start..start + count].iter().enumerate() {
        n = (n << 6) | sixbits(start + i, b)?;
    }
    Ok((n as usize, start + count))
}

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

impl Graph {
    /// Decodes one graph6 line. Surrounding whitespace and the optional
    /// `>>graph6<<` prefix are ignored.
    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        let text = text.trim();
        let text = text.strip_prefix(OPTIONAL_HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        let (n, header_len) = decode_size(bytes)?;
        if n > MAX_VERTICES {
            return Err(Graph6Error::TooManyVertices(n));
        }
        let body = &bytes[header_len..];
        let bit_count = n * n.saturating_sub(1) / 2;
        let expected = bit_count.div_ceil(6);
        if body.len() != expected {
            return Err(Graph6Error::BadLength {
                n,
                expected,
                found: body.len(),
            });
        }
        let mut rows = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        'outer: for j in 1..n {
            for i in 0..j {
                let byte = sixbits(header_len + k / 6, body[k / 6])?;
                if (byte >> (5 - k % 6)) & 1 == 1 {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
                k += 1;
                if k == bit_count {
                    break 'outer;
                }
            }
        }
        if let Some(&last) = body.last() {
            let pad = expected * 6 - bit_count;
            let value = sixbits(header_len + expected - 1, last)?;
            if value & ((1 << pad) - 1) != 0 {
                return Err(Graph6Error::TrailingBits);
            }
        }
        Ok(Graph::from_rows(rows))
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
        encode_size(n, &mut out);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
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
        out
    }
}
