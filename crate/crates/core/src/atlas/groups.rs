use std::collections::{HashMap, HashSet};

use super::AtlasError;
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};

/// A finite group as a multiplication table on `0..order`.
/// `mul[a][b]` is the product `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Checks closure, identity and inverses; associativity is checked
    /// for tables of order at most 64.
    pub fn new(mul: Vec<Vec<usize>>) -> Result<Self, AtlasError> {
        let n = mul.len();
        let bad = |m: &str| AtlasError::BadGroupTable(m.to_string());
        if n == 0 || mul.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(bad("table is not square over 0..n"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| bad("no identity"))?;
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| mul[x][y] == identity).ok_or_else(|| bad("missing inverse")))
            .collect::<Result<Vec<_>, _>>()?;
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                            return Err(bad("not associative"));
                        }
                    }
                }
            }
        }
        Ok(GroupTable { mul, identity, inverse })
    }

    /// Table of a permutation group; elements are numbered in the order
    /// of [`PermGroup::elements`] and multiplied left to right.
    pub fn from_perm_group(group: &PermGroup) -> Result<(Self, Vec<Permutation>), AtlasError> {
        let elements = group.elements()?;
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.then(b)]).collect())
            .collect();
        let identity = index[&Permutation::identity(group.degree())];
        let inverse = elements.iter().map(|a| index[&a.inverse()]).collect();
        Ok((GroupTable { mul, identity, inverse }, elements))
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Right multiplication by `g` as a permutation of the elements.
    pub fn right_multiplication(&self, g: usize) -> Permutation {
        Permutation::from_images((0..self.order()).map(|x| self.mul(x, g)).collect())
            .expect("rows of a group table are bijections")
    }

    /// The right regular representation, generated by `gens`.
    pub fn right_regular(&self, gens: &[usize]) -> Result<PermGroup, AtlasError> {
        let perms = gens.iter().map(|&g| self.right_multiplication(g)).collect();
        Ok(PermGroup::new(self.order(), perms)?)
    }
}

/// `Cay(G, S)`: vertices are the elements, `x ~ y` iff `y x^-1` is in `S`.
pub fn cayley_graph(table: &GroupTable, connection: &[usize]) -> Result<Graph, AtlasError> {
    let n = table.order();
    let set: HashSet<usize> = connection.iter().copied().collect();
    if set.iter().any(|&s| s >= n) {
        return Err(AtlasError::BadGroupTable("connection set element out of range".into()));
    }
    if set.contains(&table.identity()) {
        return Err(AtlasError::ContainsIdentity);
    }
    if set.iter().any(|&s| !set.contains(&table.inverse(s))) {
        return Err(AtlasError::NotInverseClosed);
    }
    let mut edges = Vec::new();
    for x in 0..n {
        for &s in &set {
            edges.push((x, table.mul(s, x)));
        }
    }
    let g = Graph::new(n, &edges)?;
    if !g.is_connected() {
        return Err(AtlasError::NotGenerating);
    }
    Ok(g)
}

/// `Cos(G, H, HgH)` together with the action of `G` on the cosets.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    pub graph: Graph,
    /// `G` acting on cosets by right multiplication.
    pub action: PermGroup,
    /// A representative of each right coset `Hx`, indexed by vertex.
    pub representatives: Vec<Permutation>,
}

/// Vertices are the right cosets `Hx`; `Hx ~ Hy` iff `x y^-1` lies in
/// `HgH`.
pub fn coset_graph(g: &PermGroup, h: &PermGroup, x: &Permutation) -> Result<CosetGraph, AtlasError> {
    if !g.contains_group(h) || !g.contains(x) {
        return Err(AtlasError::NotInGroup);
    }
    if h.contains(x) {
        return Err(AtlasError::GInH);
    }
    let generated = h.with_generator(x.clone())?;
    if generated.order() != g.order() {
        return Err(AtlasError::NotGenerated);
    }
    let h_elems = h.elements()?;
    let double: HashSet<Permutation> =
        h_elems.iter().flat_map(|a| h_elems.iter().map(move |b| a.then(x).then(b))).collect();
    let x_inv = x.inverse();
    if h_elems.iter().any(|a| !double.contains(&a.then(&x_inv))) {
        return Err(AtlasError::NotSelfPaired);
    }

    let elements = g.elements()?;
    let mut coset_of: HashMap<Permutation, usize> = HashMap::with_capacity(elements.len());
    let mut representatives = Vec::new();
    for e in &elements {
        if coset_of.contains_key(e) {
            continue;
        }
        let id = representatives.len();
        for a in &h_elems {
            coset_of.insert(a.then(e), id);
        }
        representatives.push(e.clone());
    }
    let m = representatives.len();
    let inverses: Vec<Permutation> = representatives.iter().map(Permutation::inverse).collect();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if double.contains(&representatives[i].then(&inverses[j])) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(m, &edges)?;
    let action_gens = g
        .generators()
        .iter()
        .map(|s| {
            let images = representatives.iter().map(|r| coset_of[&r.then(s)]).collect();
            Permutation::from_images(images).expect("right multiplication permutes cosets")
        })
        .collect();
    let action = PermGroup::new(m, action_gens)?;
    Ok(CosetGraph { graph, action, representatives })
}

/// Heisenberg group of order p^3 on triples `(x, y, z)` over Z_p, numbered
/// `x p^2 + y p + z`, with `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y')`.
pub fn heisenberg_table(p: usize) -> GroupTable {
    let n = p * p * p;
    let split = |i: usize| (i / (p * p), (i / p) % p, i % p);
    let mul = (0..n)
        .map(|a| {
            let (x, y, z) = split(a);
            (0..n)
                .map(|b| {
                    let (x2, y2, z2) = split(b);
                    let (u, v, w) = ((x + x2) % p, (y + y2) % p, (z + z2 + x * y2) % p);
                    u * p * p + v * p + w
                })
                .collect()
        })
        .collect();
    GroupTable::new(mul).expect("Heisenberg multiplication is a group law")
}

/// Element index of `(x, y, z)` in [`heisenberg_table`].
pub fn heisenberg_element(p: usize, x: usize, y: usize, z: usize) -> usize {
    (x % p) * p * p + (y % p) * p + z % p
}

/// The cover of `K_{p^2}` by a Cayley graph of the Heisenberg group,
/// with the central subgroup acting by right multiplication.
#[derive(Clone, Debug)]
pub struct HeisenbergExample {
    pub p: usize,
    pub table: GroupTable,
    pub connection_set: Vec<usize>,
    pub graph: Graph,
    /// The group acting regularly by right multiplication.
    pub group: PermGroup,
    /// The centre `<c>`.
    pub normal: PermGroup,
    pub expected_quotient: Graph,
}

/// `S` is the set of non-identity elements of the `p + 1` subgroups
/// `<b>`, `<a b^j>` (`0 <= j < p`), which maps bijectively onto the
/// non-identity elements of `G/N`.
pub fn heisenberg_example(p: usize) -> Result<HeisenbergExample, AtlasError> {
    if ![3, 5, 7].contains(&p) {
        return Err(AtlasError::UnsupportedP(p));
    }
    let table = heisenberg_table(p);
    let a = heisenberg_element(p, 1, 0, 0);
    let b = heisenberg_element(p, 0, 1, 0);
    let c = heisenberg_element(p, 0, 0, 1);
    let mut generators = vec![b];
    let mut ab = a;
    for _ in 0..p {
        generators.push(ab);
        ab = table.mul(ab, b);
    }
    let mut connection_set = Vec::new();
    for &g in &generators {
        let mut x = g;
        while x != table.identity() {
            connection_set.push(x);
            x = table.mul(x, g);
        }
    }
    connection_set.sort_unstable();
    connection_set.dedup();
    let graph = cayley_graph(&table, &connection_set)?;
    let group = table.right_regular(&[a, b])?;
    let normal = table.right_regular(&[c])?;
    let m = p * p;
    let complete: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let expected_quotient = Graph::new(m, &complete)?;
    Ok(HeisenbergExample { p, table, connection_set, graph, group, normal, expected_quotient })
}
