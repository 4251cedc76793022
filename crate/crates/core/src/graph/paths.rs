use super::{Graph, GraphError};

impl Graph {
    /// All s-arcs: vertex sequences of length `s + 1` with consecutive
    /// vertices adjacent and no immediate backtracking. Lexicographic order.
    pub fn enumerate_arcs(&self, s: usize) -> Result<Vec<Vec<usize>>, GraphError> {
        if s == 0 {
            return Err(GraphError::ZeroS);
        }
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(s + 1);
        for u in 0..self.n() {
            path.push(u);
            self.extend_arcs(s, &mut path, &mut out);
            path.pop();
        }
        Ok(out)
    }

    fn extend_arcs(&self, s: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() == s + 1 {
            out.push(path.clone());
            return;
        }
        let last = *path.last().unwrap();
        let prev = (path.len() >= 2).then(|| path[path.len() - 2]);
        for &w in self.neighbors(last) {
            if Some(w) != prev {
                path.push(w);
                self.extend_arcs(s, path, out);
                path.pop();
            }
        }
    }

    /// Number of s-arcs, by dynamic programming over directed edges.
    pub fn count_arcs(&self, s: usize) -> Result<u128, GraphError> {
        if s == 0 {
            return Err(GraphError::ZeroS);
        }
        // walks[u][i]: non-backtracking walks of the current length ending
        // with the arc u -> neighbors(u)[i]
        let mut walks: Vec<Vec<u128>> = self.adjacency.iter().map(|l| vec![1; l.len()]).collect();
        for _ in 1..s {
            let mut next: Vec<Vec<u128>> =
                self.adjacency.iter().map(|l| vec![0; l.len()]).collect();
            for (u, list) in self.adjacency.iter().enumerate() {
                for (i, &v) in list.iter().enumerate() {
                    let c = walks[u][i];
                    if c == 0 {
                        continue;
                    }
                    for (j, &w) in self.adjacency[v].iter().enumerate() {
                        if w != u {
                            next[v][j] += c;
                        }
                    }
                }
            }
            walks = next;
        }
        Ok(walks.iter().flatten().sum())
    }

    /// Lexicographically first s-arc, if any.
    pub fn first_arc(&self, s: usize) -> Option<Vec<usize>> {
        fn go(g: &Graph, s: usize, path: &mut Vec<usize>) -> bool {
            if path.len() == s + 1 {
                return true;
            }
            let last = *path.last().unwrap();
            let prev = (path.len() >= 2).then(|| path[path.len() - 2]);
            for &w in g.neighbors(last) {
                if Some(w) != prev {
                    path.push(w);
                    if go(g, s, path) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        (0..self.n()).find_map(|u| {
            let mut path = vec![u];
            go(self, s, &mut path).then_some(path)
        })
    }

    fn check_geodesic_length(&self, s: usize) -> Result<usize, GraphError> {
        if s == 0 {
            return Err(GraphError::ZeroS);
        }
        let diameter = self.diameter()?;
        if s > diameter {
            return Err(GraphError::SExceedsDiameter { s, diameter });
        }
        Ok(diameter)
    }

    /// All s-geodesics: s-arcs whose endpoints are at distance exactly `s`.
    /// Lexicographic order.
    pub fn enumerate_geodesics(&self, s: usize) -> Result<Vec<Vec<usize>>, GraphError> {
        self.check_geodesic_length(s)?;
        let mut out = Vec::new();
        for u in 0..self.n() {
            let dist = self.distances(u)?;
            let mut path = vec![u];
            self.extend_geodesics(s, &dist, &mut path, &mut out);
        }
        Ok(out)
    }

    fn extend_geodesics(
        &self,
        s: usize,
        dist: &[usize],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() == s + 1 {
            out.push(path.clone());
            return;
        }
        let depth = path.len();
        let last = *path.last().unwrap();
        for &w in self.neighbors(last) {
            // every prefix of a geodesic is a geodesic
            if dist[w] == depth {
                path.push(w);
                self.extend_geodesics(s, dist, path, out);
                path.pop();
            }
        }
    }

    /// Number of s-geodesics: for each source, the number of shortest paths
    /// to every vertex at distance `s`.
    pub fn count_geodesics(&self, s: usize) -> Result<u128, GraphError> {
        self.check_geodesic_length(s)?;
        let mut total = 0u128;
        for u in 0..self.n() {
            let (dist, paths) = self.shortest_path_counts(u);
            total += dist.iter().zip(&paths).filter(|(d, _)| **d == s).map(|(_, c)| *c).sum::<u128>();
        }
        Ok(total)
    }

    fn shortest_path_counts(&self, source: usize) -> (Vec<usize>, Vec<u128>) {
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        let mut count = vec![0u128; n];
        dist[source] = 0;
        count[source] = 1;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[u] + 1 {
                    count[w] += count[u];
                }
            }
        }
        (dist, count)
    }

    /// An s-geodesic starting at `source`: towards the smallest vertex at
    /// distance `s`, stepping back through smallest predecessors.
    pub fn geodesic_from(&self, source: usize, s: usize) -> Result<Option<Vec<usize>>, GraphError> {
        self.check_geodesic_length(s)?;
        let dist = self.distances(source)?;
        let Some(end) = (0..self.n()).find(|&v| dist[v] == s) else {
            return Ok(None);
        };
        let mut path = vec![end];
        let mut cur = end;
        while dist[cur] > 0 {
            cur = *self.neighbors(cur).iter().find(|&&w| dist[w] + 1 == dist[cur]).unwrap();
            path.push(cur);
        }
        path.reverse();
        Ok(Some(path))
    }

    /// Every k-cycle once, as a vertex sequence starting at its smallest
    /// vertex and continuing towards the smaller of its two neighbours.
    pub fn enumerate_cycles(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if k < 3 {
            return out;
        }
        let mut on_path = vec![false; self.n()];
        for start in 0..self.n() {
            let mut path = vec![start];
            on_path[start] = true;
            self.extend_cycles(k, &mut path, &mut on_path, &mut out);
            on_path[start] = false;
        }
        out
    }

    fn extend_cycles(
        &self,
        k: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == k {
            if self.has_edge(last, start) && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        for &w in self.neighbors(last) {
            if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                self.extend_cycles(k, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }
}
