//! Finite simple undirected graphs and their exact invariants.

mod codec;
mod intersection;
mod lcf;
mod paths;
mod shape;

use std::collections::VecDeque;

use thiserror::Error;

pub use codec::{EdgeList, MAX_DECODE_ORDER};
pub use intersection::{IntersectionArray, IntersectionData, LevelParams};
pub use lcf::LcfSpec;
pub use shape::Shape;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is acyclic")]
    Acyclic,
    #[error("s = {s} exceeds the diameter {diameter}")]
    SExceedsDiameter { s: usize, diameter: usize },
    #[error("s must be at least 1")]
    ZeroS,
    #[error("graph is not regular")]
    NotRegular,
    #[error("LCF chords do not close up into a cubic graph: {0}")]
    NotCubic(String),
    #[error("bad LCF notation: {0}")]
    LcfSyntax(String),
    #[error("bad header: {0}")]
    BadHeader(String),
    #[error("truncated payload: {0}")]
    TruncatedPayload(String),
    #[error("graph on {0} vertices exceeds the decoder limit")]
    TooLarge(usize),
    #[error("bad edge-list JSON: {0}")]
    BadJson(String),
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and deduplicated; vertex labels are kept as
/// given.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    connected: bool,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    fn from_adjacency_unchecked(mut adjacency: Vec<Vec<usize>>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let mut g = Graph { adjacency, edge_count, connected: false };
        g.connected = g.n() > 0 && g.bfs(0).iter().all(|d| d.is_some());
        g
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Common valency, if the graph is regular and nonempty.
    pub fn valency(&self) -> Option<usize> {
        let d = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adjacency = vec![Vec::new(); self.n()];
        for (u, list) in self.adjacency.iter().enumerate() {
            adjacency[perm[u]] = list.iter().map(|&v| perm[v]).collect();
        }
        Self::from_adjacency_unchecked(adjacency)
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS distances from `u`. Requires a connected graph.
    pub fn distances(&self, u: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(u)?;
        if !self.connected {
            return Err(GraphError::Disconnected);
        }
        Ok(self.bfs(u).into_iter().map(|d| d.unwrap()).collect())
    }

    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        (0..self.n()).map(|u| self.distances(u)).collect()
    }

    pub fn eccentricity(&self, u: usize) -> Result<usize, GraphError> {
        Ok(self.distances(u)?.into_iter().max().unwrap_or(0))
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        if !self.connected {
            return Err(GraphError::Disconnected);
        }
        (0..self.n()).try_fold(0, |acc, u| Ok(acc.max(self.eccentricity(u)?)))
    }

    /// Length of a shortest cycle, by BFS from every vertex with
    /// parent-edge exclusion.
    pub fn girth(&self) -> Result<usize, GraphError> {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                // no shorter cycle through root can appear past this depth
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best == usize::MAX {
            Err(GraphError::Acyclic)
        } else {
            Ok(best)
        }
    }

    /// Two-colouring, if the graph is bipartite. In each component the
    /// smallest vertex gets colour 0.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Bipartite graph of diameter `d` and girth `2d`.
    pub fn is_generalized_polygon(&self, d: usize) -> bool {
        self.connected
            && self.is_bipartite()
            && self.diameter().ok() == Some(d)
            && self.girth().ok() == Some(2 * d)
    }

    /// Vertices `(u, b)` for `b` in `{0, 1}`, numbered `u + b * n`, with
    /// `(u, 0) ~ (v, 1)` whenever `u ~ v`.
    pub fn standard_double_cover(&self) -> Graph {
        let n = self.n();
        let mut adjacency = vec![Vec::new(); 2 * n];
        for (u, list) in self.adjacency.iter().enumerate() {
            adjacency[u] = list.iter().map(|&v| v + n).collect();
            adjacency[u + n] = list.clone();
        }
        Self::from_adjacency_unchecked(adjacency)
    }

    /// `true` iff `perm` (as an image list) maps edges to edges.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n()
            && self.adjacency.iter().enumerate().all(|(u, list)| {
                list.len() == self.adjacency[perm[u]].len()
                    && list.iter().all(|&v| self.has_edge(perm[u], perm[v]))
            })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }
}
