use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// `(a_i, b_i, c_i)` at one distance level from a base vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LevelParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Per-level parameters around one vertex. A level is `Err` when two
/// vertices at that distance disagree; the pair is kept as a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionData {
    pub base: usize,
    pub levels: Vec<Result<LevelParams, (usize, usize)>>,
    /// `|Γ_i(base)|` for each level.
    pub layer_sizes: Vec<usize>,
}

impl IntersectionData {
    pub fn eccentricity(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn is_defined(&self) -> bool {
        self.levels.iter().all(Result::is_ok)
    }

    pub fn level(&self, i: usize) -> Option<LevelParams> {
        self.levels.get(i).and_then(|l| l.ok())
    }

    pub fn b(&self, i: usize) -> Option<usize> {
        self.level(i).map(|p| p.b)
    }
}

/// `{b_0, .., b_{d-1}; c_1, .., c_d}` of a distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn new(b: Vec<usize>, c: Vec<usize>) -> Self {
        IntersectionArray { b, c }
    }

    pub fn diameter(&self) -> usize {
        self.c.len()
    }

    /// `b_0 b_1 .. b_s`, with `b_i = 0` for `i >= d`.
    pub fn b_product(&self, s: usize) -> u128 {
        (0..=s).map(|i| self.b.get(i).copied().unwrap_or(0) as u128).product()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl std::str::FromStr for IntersectionArray {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| format!("expected {{b..;c..}}, got {s:?}"))?;
        let (b, c) = inner.split_once(';').ok_or("missing ';'")?;
        let parse = |t: &str| {
            t.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(IntersectionArray { b: parse(b)?, c: parse(c)? })
    }
}

impl Graph {
    /// Level parameters around `u`: for each vertex at distance `i`, the
    /// number of neighbours at distance `i - 1` (c), `i` (a) and `i + 1` (b).
    pub fn intersection_data(&self, u: usize) -> Result<IntersectionData, GraphError> {
        let dist = self.distances(u)?;
        let ecc = dist.iter().copied().max().unwrap_or(0);
        let mut first: Vec<Option<(usize, LevelParams)>> = vec![None; ecc + 1];
        let mut levels: Vec<Result<LevelParams, (usize, usize)>> =
            vec![Ok(LevelParams { a: 0, b: 0, c: 0 }); ecc + 1];
        let mut layer_sizes = vec![0; ecc + 1];
        for v in 0..self.n() {
            let i = dist[v];
            layer_sizes[i] += 1;
            let mut p = LevelParams { a: 0, b: 0, c: 0 };
            for &w in self.neighbors(v) {
                match dist[w] {
                    d if d + 1 == i => p.c += 1,
                    d if d == i => p.a += 1,
                    _ => p.b += 1,
                }
            }
            match first[i] {
                None => {
                    first[i] = Some((v, p));
                    levels[i] = Ok(p);
                }
                Some((w, q)) => {
                    if q != p && levels[i].is_ok() {
                        levels[i] = Err((w, v));
                    }
                }
            }
        }
        Ok(IntersectionData { base: u, levels, layer_sizes })
    }

    /// The intersection array, if the graph is distance-regular.
    pub fn intersection_array(&self) -> Result<Option<IntersectionArray>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.valency().is_none() {
            return Err(GraphError::NotRegular);
        }
        let mut common: Option<Vec<LevelParams>> = None;
        for u in 0..self.n() {
            let data = self.intersection_data(u)?;
            let Ok(levels) = data.levels.into_iter().collect::<Result<Vec<_>, _>>() else {
                return Ok(None);
            };
            match &common {
                None => common = Some(levels),
                Some(c) if *c != levels => return Ok(None),
                _ => {}
            }
        }
        let levels = common.unwrap_or_default();
        let d = levels.len().saturating_sub(1);
        Ok(Some(IntersectionArray {
            b: levels[..d].iter().map(|p| p.b).collect(),
            c: levels[1..].iter().map(|p| p.c).collect(),
        }))
    }
}
