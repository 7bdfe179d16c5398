//! The graph6 format: `N(n)` followed by the upper triangle of the adjacency
//! matrix, column by column, packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string. The optional `>>graph6<<` header is accepted;
/// anything else that deviates from the format (wrong length, nonzero
/// padding, bytes outside `?`..`~`) is rejected.
pub fn decode_graph6(input: &[u8]) -> Result<Graph> {
    decode_at(input, 0)
}

fn decode_at(input: &[u8], base: usize) -> Result<Graph> {
    let skip = if input.starts_with(GRAPH6_HEADER.as_bytes()) {
        GRAPH6_HEADER.len()
    } else {
        0
    };
    let body = &input[skip..];
    let at = |i: usize| base + skip + i;
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(at(i), format!("byte 0x{b:02x} is not a graph6 character")));
        }
    }
    let six = |i: usize| -> Result<usize> {
        body.get(i)
            .map(|&b| usize::from(b - 63))
            .ok_or_else(|| err(at(i), "truncated order field"))
    };
    let (n, header_len) = match body.first() {
        None => return Err(err(at(0), "empty graph6 string")),
        Some(126) if body.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = n << 6 | six(i)?;
            }
            if n <= 258_047 {
                return Err(err(at(0), "order uses a longer encoding than needed"));
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0;
            for i in 1..4 {
                n = n << 6 | six(i)?;
            }
            if n <= 62 {
                return Err(err(at(0), "order uses a longer encoding than needed"));
            }
            (n, 4)
        }
        Some(&b) => (usize::from(b - 63), 1),
    };
    if n == 0 {
        return Err(err(at(0), "graphs must have at least one vertex"));
    }
    if n > MAX_ORDER {
        return Err(err(at(0), format!("order {n} exceeds the limit {MAX_ORDER}")));
    }
    let pairs = n * (n - 1) / 2;
    let need = pairs.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != need {
        return Err(err(
            at(header_len + data.len().min(need)),
            format!("expected {need} adjacency bytes for order {n}, found {}", data.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = data[need - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(err(at(header_len + need - 1), "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Decodes one graph per non-empty line. Offsets in errors are relative to the
/// start of `input`.
pub fn decode_graph6_stream(input: &[u8]) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut start = 0;
    for line in input.split_inclusive(|&b| b == b'\n') {
        let mut body = line;
        while let [rest @ .., b'\n' | b'\r'] = body {
            body = rest;
        }
        if !body.is_empty() {
            out.push(decode_at(body, start)?);
        }
        start += line.len();
    }
    Ok(out)
}
