//! graph6 encoding of the underlying simple graph plus a hexadecimal
//! signature sidecar: `<graph6> <hex>` per line.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignatureBits, SignedGraph};

fn parse_err(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        message: message.into(),
    }
}

/// graph6 text of the underlying simple graph.
pub fn encode_graph6(g: &SignedGraph) -> Result<String> {
    g.require_simple()?;
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|b| b + 63));
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable ASCII"))
}

/// Parses graph6 text into an all-positive graph.
pub fn decode_graph6(text: &str) -> Result<SignedGraph> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err("empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(format!("invalid graph6 byte {b:#04x}")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(parse_err("unsupported graph6 size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
        (n, &bytes[4..])
    } else {
        (usize::from(bytes[0] - 63), &bytes[1..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(parse_err(format!(
            "graph6 body has {} bytes, expected {} for n={n}",
            body.len(),
            pairs.div_ceil(6)
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j, Sign::Positive));
            }
            k += 1;
        }
    }
    if (k..body.len() * 6).any(bit) {
        return Err(parse_err("graph6 padding bits are not zero"));
    }
    SignedGraph::new(n, edges).map_err(|e| parse_err(e.to_string()))
}

/// `<graph6> <signature hex>`.
pub fn to_line(g: &SignedGraph) -> Result<String> {
    Ok(format!("{} {}", encode_graph6(g)?, g.signature().to_hex()))
}

/// Parses `<graph6> [<signature hex>]`; a missing sidecar means all positive.
pub fn parse_line(line: &str) -> Result<SignedGraph> {
    let mut parts = line.split_whitespace();
    let g6 = parts.next().ok_or_else(|| parse_err("empty line"))?;
    let hex = parts.next();
    if parts.next().is_some() {
        return Err(parse_err("trailing fields after signature"));
    }
    let g = decode_graph6(g6)?;
    match hex {
        None => Ok(g),
        Some(h) => g.with_signature(&SignatureBits::from_hex(h, g.m())?),
    }
}

/// Reads every non-blank, non-comment line of a graph6 (optionally signed)
/// stream; errors carry 1-based line numbers.
pub fn read_lines(reader: impl BufRead) -> Result<Vec<SignedGraph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(parse_line(trimmed).map_err(|e| e.at_line(i + 1))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gamma, petersen, petersen_negative};

    #[test]
    fn known_graph6_strings() {
        let k4 = gamma(1).unwrap();
        assert_eq!(encode_graph6(&k4).unwrap(), "C~");
        assert_eq!(encode_graph6(&petersen()).unwrap().len(), 9);
        let p = decode_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.is_cubic());
    }

    #[test]
    fn signed_line_round_trip() {
        for g in [gamma(1).unwrap(), gamma(3).unwrap(), petersen_negative()] {
            let line = to_line(&g).unwrap();
            let back = parse_line(&line).unwrap();
            assert_eq!(back, g);
            assert_eq!(to_line(&back).unwrap(), line);
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "C~ 21\n\nC~ zz\n";
        let err = read_lines(text.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(decode_graph6("C").is_err());
        assert!(decode_graph6("").is_err());
    }

    #[test]
    fn large_header() {
        let g = SignedGraph::new(63, (0..62).map(|i| (i, i + 1, Sign::Positive))).unwrap();
        let text = encode_graph6(&g).unwrap();
        assert!(text.starts_with('~'));
        assert_eq!(decode_graph6(&text).unwrap(), g);
    }
}
