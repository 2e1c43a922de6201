//! graph6 and plain edge-list text formats.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! into 6-bit groups offset by 63, preceded by the order. The optional
//! `>>graph6<<` header is tolerated on input and never written.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn parse_order(bytes: &[u8], pos: &mut usize) -> Result<usize> {
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.into(),
    };
    let next = |pos: &mut usize| -> Result<u64> {
        let b = *bytes
            .get(*pos)
            .ok_or_else(|| err(*pos, "truncated header"))?;
        if !(63..=126).contains(&b) {
            return Err(err(*pos, "byte out of graph6 range"));
        }
        *pos += 1;
        Ok((b - 63) as u64)
    };
    let first = next(pos)?;
    if first < 63 {
        return Ok(first as usize);
    }
    // first == 63 encodes an extended order.
    let second = next(pos)?;
    let groups: u64 = if second == 63 {
        (0..6)
            .map(|_| next(pos))
            .try_fold(0u64, |acc, g| g.map(|g| acc << 6 | g))?
    } else {
        let rest = [second, next(pos)?, next(pos)?];
        rest.iter().fold(0u64, |acc, &g| acc << 6 | g)
    };
    usize::try_from(groups).map_err(|_| err(*pos, "order too large"))
}

/// Parses one graph6 record (a single line, header optional).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let stripped = text.strip_prefix(HEADER).unwrap_or(text);
    let base_offset = text.len() - stripped.len();
    let bytes = stripped.as_bytes();
    let mut pos = 0;
    let n = parse_order(bytes, &mut pos).map_err(|e| shift_offset(e, base_offset))?;

    let bits_needed = n * n.saturating_sub(1) / 2;
    let groups_needed = bits_needed.div_ceil(6);
    if bytes.len() - pos != groups_needed {
        return Err(Error::Parse {
            offset: base_offset + bytes.len(),
            message: format!(
                "expected {} adjacency bytes for order {}, found {}",
                groups_needed,
                n,
                bytes.len() - pos
            ),
        });
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut pair = pair_iter(n);
    for (i, &b) in bytes[pos..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                offset: base_offset + pos + i,
                message: "byte out of graph6 range".into(),
            });
        }
        let g = b - 63;
        for k in 0..6 {
            if bit_index == bits_needed {
                if g >> (5 - k) & 1 == 1 {
                    return Err(Error::Parse {
                        offset: base_offset + pos + i,
                        message: "nonzero padding bits".into(),
                    });
                }
                continue;
            }
            let (u, v) = pair.next().expect("pair stream covers all bits");
            if g >> (5 - k) & 1 == 1 {
                edges.push((u, v));
            }
            bit_index += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

/// Upper-triangle pair order used by graph6: (0,1), (0,2), (1,2), (0,3), ...
fn pair_iter(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

/// Canonical graph6 encoding (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        return Err(Error::invalid(format!(
            "order {n} exceeds supported graph6 range"
        )));
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for (i, j) in pair_iter(n) {
        group = group << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(63 + group);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}

/// Parses the `n m` header plus one `u v` line per edge, 0-based.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0usize;
    let mut lines = Vec::new();
    for line in text.lines() {
        lines.push((offset, line));
        offset += line.len() + 1;
    }
    let mut nonempty = lines.iter().filter(|(_, l)| !l.trim().is_empty());

    let (header_off, header) = nonempty.next().ok_or_else(|| Error::Parse {
        offset: 0,
        message: "empty edge-list input".into(),
    })?;
    let mut parts = header.split_whitespace();
    let parse_num = |tok: Option<&str>, off: usize, what: &str| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse {
            offset: off,
            message: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            offset: off,
            message: format!("invalid {what}"),
        })
    };
    let n = parse_num(parts.next(), *header_off, "vertex count")?;
    let m = parse_num(parts.next(), *header_off, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    for (off, line) in nonempty {
        let mut parts = line.split_whitespace();
        let u = parse_num(parts.next(), *off, "edge endpoint")?;
        let v = parse_num(parts.next(), *off, "edge endpoint")?;
        if parts.next().is_some() {
            return Err(Error::Parse {
                offset: *off,
                message: "trailing tokens on edge line".into(),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            offset: text.len(),
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| Error::Parse {
        offset: 0,
        message: e.to_string(),
    })?;
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{hypercube, star};

    #[test]
    fn known_record_round_trips() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 4);
        // The record encodes a star centered at the last vertex.
        assert_eq!(g.degree(4), 4);
        assert_eq!(write_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn header_is_tolerated() {
        let g = parse_graph6(">>graph6<<D?{").unwrap();
        assert_eq!(g.order(), 5);
    }

    #[test]
    fn hypercube_round_trips() {
        let q4 = hypercube(4).unwrap();
        let enc = write_graph6(&q4).unwrap();
        let back = parse_graph6(&enc).unwrap();
        assert_eq!(back.order(), q4.order());
        assert_eq!(back.edges(), q4.edges());
    }

    #[test]
    fn truncated_and_bad_bytes_error() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D?"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D?{{"), Err(Error::Parse { .. })));
        let err = parse_graph6("D?\x1f").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 2, .. }));
    }

    #[test]
    fn large_order_header() {
        let g = Graph::from_edges(100, &[(0, 99)]).unwrap();
        let enc = write_graph6(&g).unwrap();
        assert_eq!(enc.as_bytes()[0], 126);
        let back = parse_graph6(&enc).unwrap();
        assert_eq!(back.order(), 100);
        assert_eq!(back.edges(), vec![(0, 99)]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = star(6).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("6 5\n"));
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("").is_err());
    }
}
