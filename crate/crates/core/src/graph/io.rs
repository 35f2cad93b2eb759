//! graph6 and edge-list text formats.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Graphs serialise as their graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(self))
    }
}

pub fn to_graph6(g: &Graph) -> String {
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
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.adjacent(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (offset, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(offset + i, format!("byte 0x{b:02x} is not a graph6 character")));
        }
    }
    let need = |len: usize| -> Result<()> {
        if body.len() < len {
            Err(Error::parse(offset + body.len(), "truncated order field"))
        } else {
            Ok(())
        }
    };
    need(1)?;
    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else {
        need(2)?;
        if body[1] != 126 {
            need(4)?;
            (decode_big(&body[1..4]), 4)
        } else {
            need(8)?;
            (decode_big(&body[2..8]), 8)
        }
    };
    if n == 0 {
        return Err(Error::parse(offset, "graph6 order 0 is not a graph"));
    }
    let bits = n * (n - 1) / 2;
    let expected = pos + bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(
            offset + body.len().min(expected),
            format!("expected {} bytes for order {n}, found {}", expected, body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    pos += bits.div_ceil(6);
    if bits % 6 != 0 {
        let last = body[pos - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::parse(offset + pos - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

fn decode_big(bytes: &[u8]) -> usize {
    bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// One `u v` pair per line. A leading `# order N` comment records the order
/// so that trailing isolated vertices survive a round trip.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# order {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut max_vertex = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.trim();
        let start = offset + (line.len() - line.trim_start().len());
        offset += line.len();
        if content.is_empty() {
            continue;
        }
        if let Some(comment) = content.strip_prefix('#') {
            if let Some(rest) = comment.trim().strip_prefix("order") {
                let n = rest.trim().parse::<usize>().map_err(|_| Error::parse(start, "bad order comment"))?;
                declared = Some(n);
            }
            continue;
        }
        let mut fields = content.split_whitespace();
        let mut vertex = || -> Result<usize> {
            let field = fields.next().ok_or_else(|| Error::parse(start, "expected two vertices"))?;
            field.parse::<usize>().map_err(|_| Error::parse(start, format!("`{field}` is not a vertex index")))
        };
        let (u, v) = (vertex()?, vertex()?);
        if fields.next().is_some() {
            return Err(Error::parse(start, "more than two fields on a line"));
        }
        if u == v {
            return Err(Error::parse(start, format!("self-loop at vertex {u}")));
        }
        max_vertex = max_vertex.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let inferred = max_vertex.map_or(1, |m| m + 1);
    let n = match declared {
        Some(n) if n < inferred => {
            return Err(Error::parse(0, format!("declared order {n} but vertex {} appears", inferred - 1)))
        }
        Some(n) => n,
        None => inferred,
    };
    Graph::new(n, edges)
}
