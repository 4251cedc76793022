use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

/// Upper bound on the vertex count an LCF string may request.
const MAX_LCF_ORDER: usize = 1 << 20;

/// LCF notation `[o_1, .., o_m]^k`: a Hamiltonian cycle on `m k` vertices
/// plus the chord `i -> i + o_{i mod m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcfSpec {
    pub offsets: Vec<i64>,
    pub repeat: usize,
}

impl LcfSpec {
    pub fn new(offsets: Vec<i64>, repeat: usize) -> Self {
        LcfSpec { offsets, repeat }
    }

    pub fn order(&self) -> usize {
        self.offsets.len() * self.repeat
    }

    /// Expands to a cubic graph, checking that every chord is matched by
    /// the chord at its other end.
    pub fn decode(&self) -> Result<Graph, GraphError> {
        let n = self
            .offsets
            .len()
            .checked_mul(self.repeat)
            .filter(|&n| n <= MAX_LCF_ORDER)
            .ok_or_else(|| GraphError::LcfSyntax("order too large".into()))?;
        if n < 4 {
            return Err(GraphError::NotCubic(format!("{n} vertices cannot carry a cubic LCF graph")));
        }
        let target = |i: usize| -> usize {
            let o = self.offsets[i % self.offsets.len()].rem_euclid(n as i64) as usize;
            (i + o) % n
        };
        let mut edges = Vec::with_capacity(n * 3 / 2);
        for i in 0..n {
            let j = target(i);
            let d = (j + n - i) % n;
            if d == 0 || d == 1 || d == n - 1 {
                return Err(GraphError::NotCubic(format!("chord at vertex {i} is a loop or a cycle edge")));
            }
            if target(j) != i {
                return Err(GraphError::NotCubic(format!(
                    "chord {i} -> {j} is not returned (vertex {j} points to {})",
                    target(j)
                )));
            }
            edges.push((i, (i + 1) % n));
            if i < j {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges)
    }
}

impl FromStr for LcfSpec {
    type Err = GraphError;

    /// Accepts `[17,-9,37,-37,9,-17]^15`; a missing `^k` means `k = 1`.
    fn from_str(text: &str) -> Result<Self, GraphError> {
        let syntax = |m: &str| GraphError::LcfSyntax(m.to_string());
        let t = text.trim();
        let body = t.strip_prefix('[').ok_or_else(|| syntax("expected '['"))?;
        let close = body.find(']').ok_or_else(|| syntax("expected ']'"))?;
        let offsets = body[..close]
            .split(',')
            .map(|x| {
                let x = x.trim().replace('\u{2212}', "-");
                x.parse::<i64>().map_err(|_| syntax(&format!("bad offset {x:?}")))
            })
            .collect::<Result<Vec<i64>, _>>()?;
        let rest = body[close + 1..].trim();
        let repeat = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')
                .ok_or_else(|| syntax("expected '^'"))?
                .trim()
                .parse::<usize>()
                .map_err(|_| syntax("bad repeat count"))?
        };
        if repeat == 0 {
            return Err(syntax("repeat count must be positive"));
        }
        Ok(LcfSpec { offsets, repeat })
    }
}

impl fmt::Display for LcfSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.offsets.iter().map(ToString::to_string).collect();
        write!(f, "[{}]^{}", body.join(","), self.repeat)
    }
}
