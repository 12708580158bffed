//! graph6 encoding (McKay's format): a size prefix `N(n)` followed by the
//! upper triangle of the adjacency matrix, column by column, packed six
//! bits per printable byte (value + 63).

use super::Graph;
use crate::error::{invalid, Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 68_719_476_735; // 2^36 - 1

fn push_size(out: &mut String, n: usize) {
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

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(invalid(format!("{n} vertices exceed the graph6 range")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(8 + bits.div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line break are accepted; padding bits must be zero.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let mut base = 0;
    let mut s = text.as_bytes();
    if let Some(rest) = text.strip_prefix(HEADER) {
        base = HEADER.len();
        s = rest.as_bytes();
    }
    while let Some((&last, head)) = s.split_last() {
        if last == b'\n' || last == b'\r' {
            s = head;
        } else {
            break;
        }
    }
    let err = |offset: usize, msg: String| Error::Graph6 {
        offset: base + offset,
        msg,
    };
    if s.is_empty() {
        return Err(err(0, "empty input".into()));
    }
    if let Some(pos) = s.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(
            pos,
            format!("byte 0x{:02x} outside the graph6 range", s[pos]),
        ));
    }
    let six = |b: u8| usize::from(b - 63);
    let (n, body_start) = if s[0] != 126 {
        (six(s[0]), 1)
    } else if s.len() >= 2 && s[1] == 126 {
        if s.len() < 8 {
            return Err(err(s.len(), "truncated 8-byte size prefix".into()));
        }
        (s[2..8].iter().fold(0, |acc, &b| (acc << 6) | six(b)), 8)
    } else {
        if s.len() < 4 {
            return Err(err(s.len(), "truncated 4-byte size prefix".into()));
        }
        (s[1..4].iter().fold(0, |acc, &b| (acc << 6) | six(b)), 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &s[body_start..];
    if body.len() != expected {
        return Err(err(
            body_start + body.len().min(expected),
            format!(
                "expected {expected} adjacency bytes for {n} vertices, found {}",
                body.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(body[k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if six(body[expected - 1]) & ((1 << pad) - 1) != 0 {
            return Err(err(
                body_start + expected - 1,
                "nonzero padding bits".into(),
            ));
        }
    }
    Graph::from_edges(n, edges)
}
