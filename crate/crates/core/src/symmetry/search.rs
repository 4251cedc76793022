//! Automorphisms and isomorphisms by colour refinement and backtracking.
//!
//! Colours are canonical ranks of refinement signatures, so two graphs
//! can be compared node by node through the hash of those signatures
//! (the trace). Every leaf mapping is verified edge by edge before it is
//! returned; a trace collision can only cost time, never correctness.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::SymmetryError;
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};

/// Largest graph the automorphism search accepts.
pub const AUTOMORPHISM_SEARCH_CAP: usize = 512;

#[derive(Clone, Debug)]
struct Node {
    colors: Vec<usize>,
    cells: usize,
    trace: u64,
}

impl Node {
    fn is_discrete(&self) -> bool {
        self.cells == self.colors.len()
    }

    /// Members of the first non-singleton cell, ascending.
    fn target_cell(&self) -> Vec<usize> {
        let mut size = vec![0usize; self.cells];
        for &c in &self.colors {
            size[c] += 1;
        }
        match size.iter().position(|&s| s > 1) {
            Some(c) => (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect(),
            None => Vec::new(),
        }
    }
}

/// Equitable refinement: a vertex's new colour is the rank of
/// (old colour, sorted neighbour colours) among all such signatures.
fn refine(g: &Graph, mut colors: Vec<usize>, mut cells: usize, seed: u64) -> Node {
    let n = g.n();
    let mut hasher = DefaultHasher::new();
    seed.hash(&mut hasher);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0usize; n];
        let mut rank = 0;
        let mut run = 0usize;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                (sigs[i - 1].0, &sigs[i - 1].1, run).hash(&mut hasher);
                rank += 1;
                run = 0;
            }
            run += 1;
            next[sigs[i].2] = rank;
        }
        if let Some(last) = sigs.last() {
            (last.0, &last.1, run).hash(&mut hasher);
        }
        let new_cells = if n == 0 { 0 } else { rank + 1 };
        colors = next;
        if new_cells == cells {
            break;
        }
        cells = new_cells;
    }
    Node { colors, cells, trace: hasher.finish() }
}

fn root(g: &Graph) -> Node {
    refine(g, vec![0; g.n()], usize::from(g.n() > 0), 0)
}

/// Gives `v` a colour of its own, just below the rest of its cell.
fn individualize(g: &Graph, node: &Node, v: usize) -> Node {
    let c = node.colors[v];
    let colors = node
        .colors
        .iter()
        .enumerate()
        .map(|(w, &cw)| if cw > c || (cw == c && w != v) { cw + 1 } else { cw })
        .collect();
    refine(g, colors, node.cells + 1, node.trace ^ (c as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// The leftmost root-to-leaf path: always individualize the smallest
/// vertex of the target cell.
struct FirstPath {
    nodes: Vec<Node>,
    chosen: Vec<usize>,
}

impl FirstPath {
    fn new(g: &Graph) -> Self {
        let mut nodes = vec![root(g)];
        let mut chosen = Vec::new();
        while !nodes.last().unwrap().is_discrete() {
            let node = nodes.last().unwrap();
            let v = node.target_cell()[0];
            let child = individualize(g, node, v);
            chosen.push(v);
            nodes.push(child);
        }
        FirstPath { nodes, chosen }
    }

    fn depth(&self) -> usize {
        self.chosen.len()
    }
}

fn same_shape(a: &Node, b: &Node) -> bool {
    a.cells == b.cells && a.trace == b.trace
}

struct Matcher<'a> {
    source: &'a Graph,
    target: &'a Graph,
    path: &'a FirstPath,
}

impl Matcher<'_> {
    /// Depth-first search below `node` (at `depth` in the target's tree)
    /// for a leaf whose colouring maps the first-path leaf onto it as an
    /// isomorphism.
    fn search(&self, node: &Node, depth: usize) -> Option<Vec<usize>> {
        if depth == self.path.depth() {
            return self.leaf_map(node);
        }
        for w in node.target_cell() {
            let child = individualize(self.target, node, w);
            if same_shape(&child, &self.path.nodes[depth + 1]) {
                if let Some(map) = self.search(&child, depth + 1) {
                    return Some(map);
                }
            }
        }
        None
    }

    fn leaf_map(&self, leaf: &Node) -> Option<Vec<usize>> {
        let first = &self.path.nodes[self.path.depth()];
        let mut vertex_of = vec![0usize; leaf.colors.len()];
        for (v, &c) in leaf.colors.iter().enumerate() {
            vertex_of[c] = v;
        }
        let map: Vec<usize> = first.colors.iter().map(|&c| vertex_of[c]).collect();
        is_isomorphism(self.source, self.target, &map).then_some(map)
    }
}

/// `true` iff `map` is a bijection carrying the edges of `a` onto those of
/// `b`.
pub fn is_isomorphism(a: &Graph, b: &Graph, map: &[usize]) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || map.len() != a.n() {
        return false;
    }
    let mut seen = vec![false; b.n()];
    for &x in map {
        if x >= b.n() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    a.edges().into_iter().all(|(u, v)| b.has_edge(map[u], map[v]))
}

/// An isomorphism `a -> b` as an image list, or `None` if the graphs are
/// not isomorphic.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return None;
    }
    if a.n() == 0 {
        return Some(Vec::new());
    }
    let path = FirstPath::new(a);
    let start = root(b);
    if !same_shape(&start, &path.nodes[0]) {
        return None;
    }
    Matcher { source: a, target: b, path: &path }.search(&start, 0)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn absorb(&mut self, images: &[usize]) {
        for (x, &y) in images.iter().enumerate() {
            let (a, b) = (self.find(x), self.find(y));
            if a != b {
                self.parent[a.max(b)] = a.min(b);
            }
        }
    }
}

/// Generators of the full automorphism group.
///
/// Walks the first path from the deepest level up. At each level the
/// group found so far contains the stabilizer of the path prefix; for
/// every target-cell vertex outside the known orbits, the subtree is
/// searched for an automorphism carrying the path vertex there.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup, SymmetryError> {
    let n = g.n();
    if n > AUTOMORPHISM_SEARCH_CAP {
        return Err(SymmetryError::GraphTooLarge { n, cap: AUTOMORPHISM_SEARCH_CAP });
    }
    if n == 0 {
        return Ok(PermGroup::trivial(0));
    }
    let path = FirstPath::new(g);
    let matcher = Matcher { source: g, target: g, path: &path };
    let mut gens: Vec<Permutation> = Vec::new();
    let mut orbits = Orbits::new(n);
    for level in (0..path.depth()).rev() {
        let node = &path.nodes[level];
        let v = path.chosen[level];
        let mut failed: Vec<usize> = Vec::new();
        for w in node.target_cell() {
            let ow = orbits.find(w);
            if ow == orbits.find(v) || failed.iter().any(|&f| orbits.find(f) == ow) {
                continue;
            }
            let child = individualize(g, node, w);
            let found = if same_shape(&child, &path.nodes[level + 1]) {
                matcher.search(&child, level + 1)
            } else {
                None
            };
            match found {
                Some(images) => {
                    orbits.absorb(&images);
                    gens.push(Permutation::from_images(images).expect("verified bijection"));
                }
                None => failed.push(w),
            }
        }
    }
    Ok(PermGroup::new(n, gens)?)
}
