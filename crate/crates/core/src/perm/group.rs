use std::collections::VecDeque;

use super::{PermError, Permutation};

/// Upper bound on element enumeration (conjugacy classes, normal structure,
/// Cayley and coset graphs).
pub const ENUMERATION_CAP: u128 = 1_000_000;

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// Basic orbit in discovery order.
    orbit: Vec<usize>,
    /// `transversal[p]` maps `base` to `p`; `None` off the orbit.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: Vec::new(),
            inverse: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        let id = Permutation::identity(degree);
        self.transversal = vec![None; degree];
        self.inverse = vec![None; degree];
        self.transversal[self.base] = Some(id.clone());
        self.inverse[self.base] = Some(id);
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for g in &self.gens {
                let y = g.apply(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().then(g);
                    self.inverse[y] = Some(u.inverse());
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// A permutation group given by generators, with a verified stabilizer chain.
///
/// The chain is built by the deterministic Schreier-Sims algorithm. Base
/// points are an optional caller-supplied prefix followed by the smallest
/// point moved by each new strong generator, so identical generator lists
/// always yield identical chains.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: u128,
}

impl PermGroup {
    /// Builds the group generated by `generators` acting on `degree` points.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        Self::with_base_prefix(degree, generators, &[])
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new(), levels: Vec::new(), order: 1 }
    }

    /// Like [`PermGroup::new`], but the chain starts with the given base
    /// points (duplicates are skipped).
    pub fn with_base_prefix(
        degree: usize,
        generators: Vec<Permutation>,
        prefix: &[usize],
    ) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::MixedDegree(degree, g.degree()));
            }
        }
        let mut seen = vec![false; degree];
        let mut levels = Vec::new();
        for &b in prefix {
            if b >= degree {
                return Err(PermError::PointOutOfRange { point: b, degree });
            }
            if !std::mem::replace(&mut seen[b], true) {
                levels.push(Level::new(b, degree));
            }
        }
        let generators: Vec<Permutation> =
            generators.into_iter().filter(|g| !g.is_identity()).collect();
        let mut group = PermGroup { degree, generators, levels, order: 1 };
        group.schreier_sims()?;
        Ok(group)
    }

    fn schreier_sims(&mut self) -> Result<(), PermError> {
        let degree = self.degree;
        for g in &self.generators {
            if self.levels.iter().all(|l| g.fixes(l.base)) {
                let b = g.first_moved_point().expect("identity generators are filtered");
                self.levels.push(Level::new(b, degree));
            }
        }
        if self.levels.is_empty() {
            self.order = 1;
            return Ok(());
        }
        for i in 0..self.levels.len() {
            let bases: Vec<usize> = self.levels[..i].iter().map(|l| l.base).collect();
            self.levels[i].gens = self
                .generators
                .iter()
                .filter(|g| bases.iter().all(|&b| g.fixes(b)))
                .cloned()
                .collect();
            self.levels[i].rebuild_orbit(degree);
        }
        self.complete_from(self.levels.len() - 1);
        self.order = self.levels.iter().try_fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128).ok_or(PermError::OrderOverflow)
        })?;
        Ok(())
    }

    /// Runs the Schreier-Sims main loop assuming levels above `start` are
    /// already complete.
    fn complete_from(&mut self, start: usize) {
        let degree = self.degree;
        let mut i = start as isize;
        while i >= 0 {
            let level = i as usize;
            let mut descended = None;
            'scan: for oi in 0..self.levels[level].orbit.len() {
                let beta = self.levels[level].orbit[oi];
                for gi in 0..self.levels[level].gens.len() {
                    let s = &self.levels[level].gens[gi];
                    let img = s.apply(beta);
                    let h = self.levels[level].transversal[beta]
                        .as_ref()
                        .unwrap()
                        .then(s)
                        .then(self.levels[level].inverse[img].as_ref().unwrap());
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, drop) = self.strip(h, level + 1);
                    if drop == self.levels.len() && residue.is_identity() {
                        continue;
                    }
                    if drop == self.levels.len() {
                        let b = residue.first_moved_point().unwrap();
                        self.levels.push(Level::new(b, degree));
                    }
                    for l in level + 1..=drop {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild_orbit(degree);
                    }
                    descended = Some(drop);
                    break 'scan;
                }
            }
            match descended {
                Some(d) => i = d as isize,
                None => i -= 1,
            }
        }
    }

    /// Sifts `g` through the chain starting at `from`. Returns the residue
    /// and the index of the level where sifting stopped (the chain length
    /// if it passed every level).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.base);
            match &level.inverse[b] {
                Some(u_inv) => g = g.then(u_inv),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators of level `i`, which fix the first `i` base points.
    pub fn level_generators(&self, i: usize) -> &[Permutation] {
        self.levels.get(i).map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Membership test by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, drop) = self.strip(g.clone(), 0);
        drop == self.levels.len() && residue.is_identity()
    }

    /// `true` iff every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.contains_group(other)
    }

    /// The group generated by `self` and one more element, reusing the
    /// existing chain.
    pub fn with_generator(&self, g: Permutation) -> Result<PermGroup, PermError> {
        if g.degree() != self.degree {
            return Err(PermError::MixedDegree(self.degree, g.degree()));
        }
        if self.contains(&g) {
            return Ok(self.clone());
        }
        let mut out = self.clone();
        out.generators.push(g.clone());
        let (residue, drop) = out.strip(g, 0);
        if drop == out.levels.len() {
            let b = residue.first_moved_point().unwrap();
            out.levels.push(Level::new(b, out.degree));
        }
        for l in 0..=drop {
            out.levels[l].gens.push(residue.clone());
            out.levels[l].rebuild_orbit(out.degree);
        }
        out.complete_from(drop);
        out.order = out.levels.iter().try_fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128).ok_or(PermError::OrderOverflow)
        })?;
        Ok(out)
    }

    fn check_point(&self, p: usize) -> Result<(), PermError> {
        if p >= self.degree {
            Err(PermError::PointOutOfRange { point: p, degree: self.degree })
        } else {
            Ok(())
        }
    }

    /// Orbit of a single point, sorted.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>, PermError> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut out = vec![point];
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Orbit partition of `domain`, with cells sorted internally and by
    /// their smallest point. `domain` must be a union of orbits.
    pub fn orbits(&self, domain: &[usize]) -> Result<Vec<Vec<usize>>, PermError> {
        let mut in_domain = vec![false; self.degree];
        for &p in domain {
            self.check_point(p)?;
            in_domain[p] = true;
        }
        let mut assigned = vec![false; self.degree];
        let mut sorted: Vec<usize> = domain.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut cells = Vec::new();
        for p in sorted {
            if assigned[p] {
                continue;
            }
            let cell = self.orbit(p)?;
            for &q in &cell {
                if !in_domain[q] {
                    return Err(PermError::NotInvariant);
                }
                assigned[q] = true;
            }
            cells.push(cell);
        }
        Ok(cells)
    }

    /// Orbits on the full point set.
    pub fn all_orbits(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.degree).collect();
        self.orbits(&all).expect("the full point set is invariant")
    }

    pub fn is_transitive_on(&self, domain: &[usize]) -> Result<bool, PermError> {
        match domain.first() {
            None => Ok(true),
            Some(&p) => {
                let orbit = self.orbit(p)?;
                let mut d = domain.to_vec();
                d.sort_unstable();
                d.dedup();
                Ok(orbit == d)
            }
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// Pointwise stabilizer of a point sequence. Repeated points are
    /// harmless.
    pub fn pointwise_stabilizer(&self, tuple: &[usize]) -> Result<PermGroup, PermError> {
        for &p in tuple {
            self.check_point(p)?;
        }
        if tuple.is_empty() {
            return Ok(self.clone());
        }
        let rebased = PermGroup::with_base_prefix(self.degree, self.generators.clone(), tuple)?;
        let mut distinct = tuple.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let depth = distinct.len();
        let levels: Vec<Level> = rebased.levels[depth..].to_vec();
        let order = levels.iter().map(|l| l.orbit.len() as u128).product();
        let generators = levels.first().map(|l| l.gens.clone()).unwrap_or_default();
        Ok(PermGroup { degree: self.degree, generators, levels, order })
    }

    /// Order of the pointwise stabilizer of `tuple`, without materializing
    /// the subgroup.
    pub fn stabilizer_order(&self, tuple: &[usize]) -> Result<u128, PermError> {
        Ok(self.pointwise_stabilizer(tuple)?.order)
    }

    /// `true` iff every point stabilizer of `domain` is trivial.
    pub fn is_semiregular(&self, domain: &[usize]) -> Result<bool, PermError> {
        for &p in domain {
            if self.orbit(p)?.len() as u128 != self.order {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All elements, ordered by the chain's transversal product. Fails
    /// above [`ENUMERATION_CAP`].
    pub fn elements(&self) -> Result<Vec<Permutation>, PermError> {
        if self.order > ENUMERATION_CAP {
            return Err(PermError::GroupTooLarge { order: self.order, cap: ENUMERATION_CAP });
        }
        let mut out = vec![Permutation::identity(self.degree)];
        // g = u_{k-1} * .. * u_0, so extend from the deepest level outward.
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for &p in &level.orbit {
                    next.push(h.then(level.transversal[p].as_ref().unwrap()));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Restriction to an invariant subset; point `domain[i]` becomes `i`.
    pub fn restrict_to(&self, domain: &[usize]) -> Result<PermGroup, PermError> {
        let mut index_of = vec![usize::MAX; self.degree];
        for (i, &p) in domain.iter().enumerate() {
            self.check_point(p)?;
            if index_of[p] != usize::MAX {
                return Err(PermError::InvalidPartition);
            }
            index_of[p] = i;
        }
        for g in &self.generators {
            if domain.iter().any(|&p| index_of[g.apply(p)] == usize::MAX) {
                return Err(PermError::NotInvariant);
            }
        }
        let gens = self.generators.iter().map(|g| g.restrict(domain, &index_of)).collect();
        PermGroup::new(domain.len(), gens)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..].iter().all(|b| a.then(b) == b.then(a))
        })
    }

    /// Action on a `G`-invariant partition of all points: the permutation
    /// group induced on block indices, and the kernel of that action.
    pub fn induced_action(&self, blocks: &[Vec<usize>]) -> Result<InducedAction, PermError> {
        let n = self.degree;
        let mut block_of = vec![usize::MAX; n];
        for (bi, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PermError::InvalidPartition);
            }
            for &p in block {
                self.check_point(p)?;
                if block_of[p] != usize::MAX {
                    return Err(PermError::InvalidPartition);
                }
                block_of[p] = bi;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(PermError::InvalidPartition);
        }
        let m = blocks.len();
        let mut block_gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut images = Vec::with_capacity(m);
            for block in blocks {
                let target = block_of[g.apply(block[0])];
                if block.iter().any(|&p| block_of[g.apply(p)] != target) {
                    return Err(PermError::NotInvariant);
                }
                images.push(target);
            }
            // a bijection on points that maps blocks into blocks permutes them
            block_gens.push(Permutation::from_images(images).map_err(|_| PermError::NotInvariant)?);
        }
        let quotient = PermGroup::new(m, block_gens.clone())?;
        // Kernel: pointwise stabilizer of the block points in the combined
        // action on points followed by blocks.
        let combined: Vec<Permutation> =
            self.generators.iter().zip(&block_gens).map(|(g, b)| g.extend_with(b)).collect();
        let block_points: Vec<usize> = (n..n + m).collect();
        let big = PermGroup::with_base_prefix(n + m, combined, &block_points)?;
        let kernel_gens: Vec<Permutation> =
            big.level_generators(m).iter().map(|k| k.truncate(n)).collect();
        let kernel = PermGroup::new(n, kernel_gens)?;
        Ok(InducedAction { quotient, kernel })
    }
}

/// Result of [`PermGroup::induced_action`].
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub quotient: PermGroup,
    pub kernel: PermGroup,
}
