use serde::Serialize;

use super::Graph;

/// Coarse structure used to screen the normal-quotient reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shape {
    /// The two colour classes, when the graph is bipartite.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    /// Parts (each sorted, ordered by smallest vertex) when the graph is
    /// complete multipartite with at least two parts.
    pub multipartite_parts: Option<Vec<Vec<usize>>>,
}

impl Shape {
    pub fn is_complete_multipartite(&self) -> bool {
        self.multipartite_parts.is_some()
    }

    pub fn part_sizes(&self) -> Option<Vec<usize>> {
        self.multipartite_parts.as_ref().map(|p| p.iter().map(Vec::len).collect())
    }
}

impl Graph {
    pub fn classify_shape(&self) -> Shape {
        let bipartition = self.two_coloring().map(|color| {
            let (zero, one): (Vec<usize>, Vec<usize>) = (0..self.n()).partition(|&v| color[v] == 0);
            (zero, one)
        });
        Shape { bipartition, multipartite_parts: self.multipartite_parts() }
    }

    /// Components of the complement; the graph is complete multipartite iff
    /// each of them is independent in the graph itself.
    fn multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.n();
        let mut part = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for root in 0..n {
            if part[root] != usize::MAX {
                continue;
            }
            let id = parts.len();
            part[root] = id;
            let mut members = vec![root];
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                for v in 0..n {
                    if v != u && part[v] == usize::MAX && !self.has_edge(u, v) {
                        part[v] = id;
                        members.push(v);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            parts.push(members);
        }
        if parts.len() < 2 {
            return None;
        }
        let complete = (0..n).all(|u| self.degree(u) == n - parts[part[u]].len());
        complete.then_some(parts)
    }
}
