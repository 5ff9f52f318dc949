//! graph6 encoding for graphs on at most 62 vertices.

use std::io::{BufRead, Write};

use super::{Graph, GraphError, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let s = line.trim_end_matches(['\r', '\n']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(GraphError::Graph6("empty line".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(GraphError::Graph6(format!("bad size byte {first}")));
    }
    if first == 126 {
        return Err(GraphError::Graph6("graphs above 62 vertices are not supported".into()));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    let body = &bytes[1..];
    if body.len() != needed {
        return Err(GraphError::Graph6(format!(
            "expected {needed} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(GraphError::Graph6(format!("bad data byte {byte}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

/// Reads one graph per non-empty line.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| GraphError::Graph6(format!("line {}: {e}", lineno + 1)))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(
            parse_graph6(line.trim())
                .map_err(|e| GraphError::Graph6(format!("line {}: {e}", lineno + 1)))?,
        );
    }
    Ok(out)
}

pub fn write_graph6<W: Write>(mut w: W, graphs: &[Graph]) -> std::io::Result<()> {
    for g in graphs {
        writeln!(w, "{}", to_graph6(g))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn known_encodings() {
        // Reference strings produced by nauty's geng / networkx.
        assert_eq!(to_graph6(&path(2)), "A_");
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(to_graph6(&cycle(5)), "Dhc");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("D~~~").is_err());
    }

    #[test]
    fn stream_round_trip() {
        let gs = vec![bowtie(), cycle(7), star(5)];
        let mut buf = Vec::new();
        write_graph6(&mut buf, &gs).unwrap();
        let back = read_graph6(&buf[..]).unwrap();
        assert_eq!(back, gs);
    }
}
