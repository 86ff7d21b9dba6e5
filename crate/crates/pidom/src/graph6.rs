//! Bit-exact graph6 codec.
//!
//! The format packs the order followed by the upper triangle of the
//! adjacency matrix, read column by column — bit order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` — into 6-bit groups offset by 63
//! into the printable range. Orders up to 62 use a single size byte,
//! orders up to 258047 the 3-byte medium form introduced by `~`. The long
//! form (`~~`, orders above 258047) is rejected. Encoding is canonical: no
//! header, minimal size form, zero padding bits.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order representable in the supported (short + medium) forms.
pub const MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("graph6 long form (order > 258047) is not supported")]
    LongFormUnsupported,
    #[error("truncated graph6 input: expected {expected} bytes after the size, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing bytes after the adjacency payload")]
    TrailingBytes,
    #[error("nonzero padding bits in the final adjacency byte")]
    NonzeroPadding,
    #[error("order {0} exceeds the graph6 medium-form maximum 258047")]
    OrderTooLarge(usize),
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is allowed).
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { byte, offset });
        }
    }
    let (n, used) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::LongFormUnsupported);
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 3,
                found: bytes.len() - 1,
            });
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    };
    let bits = n.saturating_sub(1) * n / 2;
    let payload_len = bits.div_ceil(6);
    let payload = &bytes[used..];
    if payload.len() < payload_len {
        return Err(Graph6Error::Truncated {
            expected: payload_len,
            found: payload.len(),
        });
    }
    if payload.len() > payload_len {
        return Err(Graph6Error::TrailingBytes);
    }

    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n as u32 {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    for pad in bits..payload_len * 6 {
        if bit(pad) {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::new(n, edges).expect("decoded edges are in range"))
}

/// Encodes a graph canonically: minimal size form, no header, zero padding.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n as u32 {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    /// Independent reference decoder used as the oracle for the frozen
    /// strings below: builds the whole bit vector first and never shares
    /// code with the production path.
    fn reference_decode(s: &str) -> (usize, Vec<(u32, u32)>) {
        let b = s.as_bytes();
        assert!(b[0] != 126, "oracle only handles the short form");
        let n = (b[0] - 63) as usize;
        let mut bits = Vec::new();
        for &c in &b[1..] {
            let v = c - 63;
            for i in (0..6).rev() {
                bits.push(v >> i & 1 == 1);
            }
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for col in 1..n {
            for row in 0..col {
                if bits[k] {
                    edges.push((row as u32, col as u32));
                }
                k += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn decode_k2() {
        let g = decode_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
        let (n, edges) = reference_decode("A_");
        assert_eq!((n, edges), (2, vec![(0, 1)]));
    }

    #[test]
    fn decode_k3() {
        let g = decode_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        let (n, edges) = reference_decode("Bw");
        assert_eq!(n, 3);
        assert_eq!(edges.len(), 3);
    }

    #[test]
    fn decode_five_regular_corpus_row() {
        let g = decode_graph6("G}qzp{").unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 20);
        assert!(g.is_regular(5));
    }

    #[test]
    fn encode_k2_and_trivial() {
        let k2 = FamilySpec::Complete(2).make().unwrap();
        assert_eq!(encode_graph6(&k2).unwrap(), "A_");
        assert_eq!(encode_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(decode_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn round_trip_of_corpus_row() {
        let s = "KvyCJlmF_{kN";
        let g = decode_graph6(s).unwrap();
        assert_eq!(encode_graph6(&g).unwrap(), s);
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(
            decode_graph6(">>graph6<<A_").unwrap(),
            decode_graph6("A_").unwrap()
        );
    }

    #[test]
    fn medium_form_round_trip() {
        let g = FamilySpec::Star(100).make().unwrap();
        let s = encode_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            decode_graph6("A!"),
            Err(Graph6Error::ByteOutOfRange {
                byte: 0x21,
                offset: 1
            })
        );
        assert_eq!(decode_graph6("~~A"), Err(Graph6Error::LongFormUnsupported));
        assert_eq!(
            decode_graph6("C"),
            Err(Graph6Error::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(decode_graph6("A_?"), Err(Graph6Error::TrailingBytes));
        // K_2 payload with a stray low bit set in the padding
        assert_eq!(decode_graph6("A`"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn round_trip_small_families() {
        for spec in [
            FamilySpec::Path(7),
            FamilySpec::Cycle(9),
            FamilySpec::Complete(6),
            FamilySpec::Wheel(8),
            FamilySpec::Jewel(3),
            FamilySpec::Fish(4),
        ] {
            let g = spec.make().unwrap();
            let s = encode_graph6(&g).unwrap();
            assert_eq!(decode_graph6(&s).unwrap(), g, "round trip for {spec:?}");
        }
    }
}
