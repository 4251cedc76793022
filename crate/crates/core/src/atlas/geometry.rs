use std::collections::BTreeSet;

use super::{AtlasError, FiniteField};
use crate::graph::Graph;

pub const PG2_ORDERS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];
pub const SYMPLECTIC_ORDERS: [usize; 3] = [2, 3, 4];

/// Point-line incidence graph of PG(2, q). Points are vertices
/// `0..q^2+q+1` in lexicographic order of normalized coordinates, lines
/// follow in the same order of their dual coordinates.
pub fn pg2_incidence(q: usize) -> Result<Graph, AtlasError> {
    if !PG2_ORDERS.contains(&q) {
        return Err(AtlasError::UnsupportedQ(q));
    }
    let f = FiniteField::new(q)?;
    let points = f.projective_points(3);
    let m = points.len();
    let mut edges = Vec::new();
    for (i, x) in points.iter().enumerate() {
        for (j, l) in points.iter().enumerate() {
            if f.dot(x, l) == 0 {
                edges.push((i, m + j));
            }
        }
    }
    Ok(Graph::new(2 * m, &edges)?)
}

/// `x0 y1 - x1 y0 + x2 y3 - x3 y2`.
fn symplectic_form(f: &FiniteField, x: &[usize], y: &[usize]) -> usize {
    let a = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    let b = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
    f.add(a, b)
}

/// Incidence graph of points and totally isotropic lines of W(3, q).
/// Points come first (every point of PG(3, q) is isotropic), then the
/// lines ordered by their sorted point lists.
pub fn symplectic_quadrangle(q: usize) -> Result<Graph, AtlasError> {
    if !SYMPLECTIC_ORDERS.contains(&q) {
        return Err(AtlasError::UnsupportedQ(q));
    }
    let f = FiniteField::new(q)?;
    let points = f.projective_points(4);
    let index_of = |v: &[usize]| points.binary_search_by(|p| p.as_slice().cmp(v)).unwrap();
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, x) in points.iter().enumerate() {
        for y in &points[i + 1..] {
            if symplectic_form(&f, x, y) != 0 {
                continue;
            }
            // the q + 1 points of span(x, y): y and x + t y
            let mut line = vec![index_of(y)];
            for t in 0..q {
                let v: Vec<usize> = x.iter().zip(y).map(|(&a, &b)| f.add(a, f.mul(t, b))).collect();
                line.push(index_of(&f.normalize(&v)));
            }
            line.sort_unstable();
            lines.insert(line);
        }
    }
    let m = points.len();
    let mut edges = Vec::new();
    for (j, line) in lines.iter().enumerate() {
        for &p in line {
            edges.push((p, m + j));
        }
    }
    Ok(Graph::new(m + lines.len(), &edges)?)
}
