//! The graph6 interchange format.
//!
//! A graph6 line is a size header `N(n)` followed by the upper triangle of
//! the adjacency matrix, read column by column (`(0,1), (0,2), (1,2), (0,3),
//! …`), packed six bits per byte big-endian, padded with zero bits, and
//! offset by 63 so that every byte is printable.
//!
//! `N(n)` is the single byte `n + 63` for `n <= 62`, the byte `126` followed
//! by three six-bit groups for `n <= 258047`, and `126 126` followed by six
//! groups beyond that.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed size header at byte {offset}")]
    MalformedHeader { offset: usize },
    #[error("payload for n = {n} needs {expected} bytes, found {found}")]
    LengthMismatch {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6 line encodes the graph with no vertices")]
    ZeroOrder,
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u32, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::ByteOutOfRange { offset, byte });
    }
    Ok((byte - 63) as u32)
}

/// Reads `N(n)`; returns `n` and the offset of the first payload byte.
fn parse_size(bytes: &[u8], start: usize) -> Result<(usize, usize), Graph6Error> {
    let get = |i: usize| -> Result<u32, Graph6Error> {
        if i >= bytes.len() {
            return Err(Graph6Error::MalformedHeader { offset: i });
        }
        sextet(bytes, i)
    };
    let first = get(start)?;
    if first < 63 {
        return Ok((first as usize, start + 1));
    }
    let second = get(start + 1)?;
    if second < 63 {
        let mut n = 0usize;
        for i in 0..3 {
            n = (n << 6) | get(start + 1 + i)? as usize;
        }
        if n <= SMALL_MAX {
            return Err(Graph6Error::MalformedHeader { offset: start });
        }
        return Ok((n, start + 4));
    }
    let mut n = 0usize;
    for i in 0..6 {
        n = (n << 6) | get(start + 2 + i)? as usize;
    }
    if n <= MEDIUM_MAX {
        return Err(Graph6Error::MalformedHeader { offset: start });
    }
    Ok((n, start + 8))
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut end = text.len();
    while end > 0 && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let bytes = &text[..end];
    let start = if bytes.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let (n, body) = parse_size(bytes, start)?;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let expected = payload_len(n);
    let found = bytes.len() - body;
    if found != expected {
        return Err(Graph6Error::LengthMismatch { n, expected, found });
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for offset in body..bytes.len() {
        let x = sextet(bytes, offset)?;
        for shift in (0..6).rev() {
            bits.push((x >> shift) & 1 == 1);
        }
    }
    Ok(Graph::from_upper_triangle(n, bits).expect("n >= 1 was checked"))
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Canonical graph6 encoding, without header or newline.
pub fn serialize_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + payload_len(n));
    push_size(&mut out, n);
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
    out
}

/// [`serialize_graph6`] as a `String`; graph6 is pure ASCII.
pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(serialize_graph6(g)).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_is_a_underscore() {
        let g = parse_graph6(b"A_").unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.has_edge(0, 1));
        assert_eq!(serialize_graph6(&g), b"A_");
    }

    #[test]
    fn five_vertex_reference_line() {
        // edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6_string(&g), "DQc");
        assert_eq!(parse_graph6(b"DQc\n").unwrap(), g);
    }

    #[test]
    fn truncated_payload() {
        assert_eq!(
            parse_graph6(b"D?"),
            Err(Graph6Error::LengthMismatch {
                n: 5,
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            parse_graph6(b"D???"),
            Err(Graph6Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn out_of_range_byte_reports_offset() {
        assert_eq!(
            parse_graph6(b"D?\x20"),
            Err(Graph6Error::ByteOutOfRange {
                offset: 2,
                byte: 0x20
            })
        );
    }

    #[test]
    fn header_errors() {
        assert_eq!(
            parse_graph6(b""),
            Err(Graph6Error::MalformedHeader { offset: 0 })
        );
        assert_eq!(
            parse_graph6(b"~??"),
            Err(Graph6Error::MalformedHeader { offset: 3 })
        );
        // three-byte form may not encode a small n
        assert_eq!(
            parse_graph6(b"~???"),
            Err(Graph6Error::MalformedHeader { offset: 0 })
        );
        assert_eq!(parse_graph6(b"?"), Err(Graph6Error::ZeroOrder));
    }

    #[test]
    fn optional_header_is_accepted() {
        let g = parse_graph6(b">>graph6<<A_\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn large_order_uses_extended_header() {
        let g = Graph::from_edges(100, [(0, 99), (5, 6)]).unwrap();
        let bytes = serialize_graph6(&g);
        assert_eq!(&bytes[..4], &[126, 63, 64, 99]);
        assert_eq!(bytes.len(), 4 + payload_len(100));
        assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }
}
