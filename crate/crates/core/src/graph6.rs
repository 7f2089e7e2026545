//! graph6 short form (n <= 62) and the `n;a-b,c-d` edge-list text format.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes the upper triangle column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

pub fn encode_string(g: &Graph) -> String {
    String::from_utf8(encode(g)).expect("graph6 is printable ASCII")
}

pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let err = |offset: usize, msg: &str| Error::Parse { offset, msg: msg.to_string() };
    let &header = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(63..=126).contains(&header) {
        return Err(err(0, "header byte outside 63..=126"));
    }
    if header == 126 {
        return Err(err(0, "long form (n > 62) is not supported"));
    }
    let n = (header - 63) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(err(0, "graph must have at least one vertex"));
    }
    let need = body_len(n);
    let body = &bytes[1..];
    if body.len() < need {
        return Err(err(bytes.len(), "truncated body"));
    }
    if body.len() > need {
        return Err(err(1 + need, "trailing bytes after body"));
    }
    let mut adj = vec![0u64; n];
    let total = n * (n - 1) / 2;
    let mut bit = 0;
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + k, "body byte outside 63..=126"));
        }
        let v = b - 63;
        for s in (0..6).rev() {
            let on = v >> s & 1 == 1;
            if bit >= total {
                if on {
                    return Err(err(1 + k, "nonzero padding bit"));
                }
            } else if on {
                let (i, j) = pair_of_bit(bit);
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    Ok(Graph::from_rows(n, adj))
}

fn pair_of_bit(bit: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= bit {
        start += j;
        j += 1;
    }
    (bit - start, j)
}

/// `n;a-b,c-d,...` with 1-based labels.
pub fn to_edge_list(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    format!("{};{}", g.n(), edges.join(","))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |offset: usize, msg: &str| Error::Parse { offset, msg: msg.to_string() };
    let text = text.trim();
    let semi = text.find(';').ok_or_else(|| err(0, "missing ';' after vertex count"))?;
    let n: usize = text[..semi].trim().parse().map_err(|_| err(0, "bad vertex count"))?;
    let mut edges = Vec::new();
    let mut offset = semi + 1;
    for item in text[semi + 1..].split(',') {
        let here = offset;
        offset += item.len() + 1;
        if item.trim().is_empty() {
            continue;
        }
        let (a, b) = item.split_once('-').ok_or_else(|| err(here, "edge must look like a-b"))?;
        let a: usize = a.trim().parse().map_err(|_| err(here, "bad label"))?;
        let b: usize = b.trim().parse().map_err(|_| err(here, "bad label"))?;
        edges.push((a, b));
    }
    Graph::from_edges(n, &edges)
}
