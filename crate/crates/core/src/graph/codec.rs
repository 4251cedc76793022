use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Largest vertex count the text decoders accept.
pub const MAX_DECODE_ORDER: usize = 100_000;

const GRAPH6_HEADER: &str = ">>graph6<<";
const SPARSE6_HEADER: &str = ">>sparse6<<";

/// Edge-list JSON: `{ "n": 4, "edges": [[0,1],[1,2]] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl EdgeList {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeList { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        if self.n > MAX_DECODE_ORDER {
            return Err(GraphError::TooLarge(self.n));
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(self.n, &edges)
    }
}

impl Graph {
    pub fn from_edge_list_json(text: &str) -> Result<Graph, GraphError> {
        let list: EdgeList =
            serde_json::from_str(text).map_err(|e| GraphError::BadJson(e.to_string()))?;
        list.to_graph()
    }

    pub fn to_edge_list_json(&self) -> String {
        serde_json::to_string(&EdgeList::from_graph(self)).expect("edge list serializes")
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = encode_order(n);
        let mut bits = BitWriter::default();
        for j in 1..n {
            for i in 0..j {
                bits.push(self.has_edge(i, j));
            }
        }
        out.push_str(&bits.finish(false));
        out
    }

    /// Decodes one graph6 line; the optional `>>graph6<<` header and
    /// surrounding whitespace are accepted.
    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        let t = text.trim();
        let t = t.strip_prefix(GRAPH6_HEADER).unwrap_or(t);
        if t.starts_with(':') || t.starts_with(';') {
            return Err(GraphError::BadHeader("sparse6 data given to the graph6 decoder".into()));
        }
        let bytes = payload_bytes(t)?;
        let (n, rest) = decode_order(bytes)?;
        let needed_bits = n * n.saturating_sub(1) / 2;
        let needed = needed_bits.div_ceil(6);
        if rest.len() < needed {
            return Err(GraphError::TruncatedPayload(format!(
                "{n} vertices need {needed} data bytes, found {}",
                rest.len()
            )));
        }
        if rest.len() > needed {
            return Err(GraphError::BadHeader(format!(
                "{} trailing bytes after graph6 data",
                rest.len() - needed
            )));
        }
        let mut reader = BitReader::new(rest);
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if reader.bit().unwrap() {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges)
    }

    pub fn to_sparse6(&self) -> String {
        let n = self.n();
        let k = bits_for(n);
        let mut bits = BitWriter::default();
        let mut cur = 0usize;
        // edges ordered by larger endpoint, then smaller
        let mut edges: Vec<(usize, usize)> = self.edges().into_iter().map(|(u, v)| (v, u)).collect();
        edges.sort_unstable();
        for (v, u) in edges {
            if v == cur {
                bits.push(false);
                bits.push_value(u, k);
            } else if v == cur + 1 {
                cur = v;
                bits.push(true);
                bits.push_value(u, k);
            } else {
                cur = v;
                bits.push(true);
                bits.push_value(v, k);
                bits.push(false);
                bits.push_value(u, k);
            }
        }
        let pad = (6 - bits.len() % 6) % 6;
        // a lone 1-bit followed by k ones would be read as an extra edge
        // into vertex n - 1
        if n >= 2 && k < 6 && n == 1 << k && cur == n - 2 && pad > k {
            bits.push(false);
        }
        let mut out = String::from(":");
        out.push_str(&encode_order(n));
        out.push_str(&bits.finish(true));
        out
    }

    /// Decodes one sparse6 line (leading `:`); the optional `>>sparse6<<`
    /// header is accepted. Incremental sparse6 (`;`) is rejected.
    pub fn from_sparse6(text: &str) -> Result<Graph, GraphError> {
        let t = text.trim();
        let t = t.strip_prefix(SPARSE6_HEADER).unwrap_or(t);
        let t = t
            .strip_prefix(':')
            .ok_or_else(|| GraphError::BadHeader("sparse6 data must start with ':'".into()))?;
        let bytes = payload_bytes(t)?;
        let (n, rest) = decode_order(bytes)?;
        let k = bits_for(n);
        let mut reader = BitReader::new(rest);
        let mut edges = Vec::new();
        let mut v = 0usize;
        loop {
            if reader.remaining() < 1 + k {
                break;
            }
            let b = reader.bit().unwrap();
            let x = reader.value(k).unwrap();
            if b {
                v += 1;
            }
            if v >= n {
                break;
            }
            if x > v {
                v = x;
                if v >= n {
                    break;
                }
            } else {
                if x == v {
                    return Err(GraphError::LoopEdge(x));
                }
                edges.push((x, v));
            }
        }
        Graph::new(n, &edges)
    }

    /// Dispatches on the leading byte: `:` for sparse6, graph6 otherwise.
    pub fn from_graph6_or_sparse6(text: &str) -> Result<Graph, GraphError> {
        let t = text.trim();
        if t.starts_with(':') || t.starts_with(SPARSE6_HEADER) {
            Graph::from_sparse6(t)
        } else {
            Graph::from_graph6(t)
        }
    }
}

fn payload_bytes(t: &str) -> Result<&[u8], GraphError> {
    let bytes = t.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::BadHeader("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|&c| !(63..=126).contains(&c)) {
        return Err(GraphError::BadHeader(format!(
            "byte 0x{:02x} at offset {pos} is outside the printable range",
            bytes[pos]
        )));
    }
    Ok(bytes)
}

/// Smallest k with `2^k >= n`, i.e. the bit width of `n - 1`.
fn bits_for(n: usize) -> usize {
    let mut k = 0;
    while k < usize::BITS as usize && (1usize << k) < n {
        k += 1;
    }
    k
}

fn encode_order(n: usize) -> String {
    let mut out = String::new();
    let groups = if n < 63 {
        1
    } else if n < 258_048 {
        out.push('~');
        3
    } else {
        out.push_str("~~");
        6
    };
    for g in (0..groups).rev() {
        out.push(char::from(63 + ((n >> (6 * g)) & 63) as u8));
    }
    out
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let take = |b: &[u8], width: usize| -> Result<usize, GraphError> {
        if b.len() < width {
            return Err(GraphError::TruncatedPayload("vertex count is cut short".into()));
        }
        Ok(b[..width].iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize))
    };
    let (n, rest) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.get(1) != Some(&126) {
        (take(&bytes[1..], 3)?, &bytes[bytes.len().min(4)..])
    } else {
        (take(&bytes[2..], 6)?, &bytes[bytes.len().min(8)..])
    };
    if n > MAX_DECODE_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    Ok((n, rest))
}

#[derive(Default)]
struct BitWriter {
    bits: Vec<bool>,
}

impl BitWriter {
    fn push(&mut self, b: bool) {
        self.bits.push(b);
    }

    fn push_value(&mut self, x: usize, width: usize) {
        for i in (0..width).rev() {
            self.bits.push((x >> i) & 1 == 1);
        }
    }

    fn len(&self) -> usize {
        self.bits.len()
    }

    /// Pads to a multiple of six and maps each group to a printable byte.
    fn finish(self, pad: bool) -> String {
        self.bits
            .chunks(6)
            .map(|chunk| {
                let mut v = 0u8;
                for i in 0..6 {
                    let b = chunk.get(i).copied().unwrap_or(pad);
                    v = (v << 1) | u8::from(b);
                }
                char::from(63 + v)
            })
            .collect()
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        BitReader { bytes, pos: 0 }
    }

    fn remaining(&self) -> usize {
        self.bytes.len() * 6 - self.pos
    }

    fn bit(&mut self) -> Option<bool> {
        let byte = *self.bytes.get(self.pos / 6)? - 63;
        let b = (byte >> (5 - self.pos % 6)) & 1 == 1;
        self.pos += 1;
        Some(b)
    }

    fn value(&mut self, width: usize) -> Option<usize> {
        (0..width).try_fold(0usize, |acc, _| Some((acc << 1) | usize::from(self.bit()?)))
    }
}
