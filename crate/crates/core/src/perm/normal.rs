use std::collections::HashMap;

use super::{PermError, PermGroup, Permutation, ENUMERATION_CAP};

/// Outcome of [`PermGroup::normal_test_and_closure`].
#[derive(Clone, Debug)]
pub struct NormalClosure {
    pub is_normal: bool,
    /// Smallest normal subgroup of the ambient group containing the input.
    pub closure: PermGroup,
}

/// Minimal normal subgroups and the socle.
#[derive(Clone, Debug)]
pub struct NormalStructure {
    pub minimal: Vec<PermGroup>,
    pub socle: PermGroup,
}

/// A conjugacy class, represented by its lexicographically least element.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
}

impl PermGroup {
    /// Decides whether the subgroup generated by `elements` is normal in
    /// `self` and returns its normal closure.
    pub fn normal_test_and_closure(
        &self,
        elements: &[Permutation],
    ) -> Result<NormalClosure, PermError> {
        for h in elements {
            if !self.contains(h) {
                return Err(PermError::NotASubgroup);
            }
        }
        let sub = PermGroup::new(self.degree(), elements.to_vec())?;
        let is_normal = sub
            .generators()
            .iter()
            .all(|h| self.generators().iter().all(|g| sub.contains(&h.conjugate_by(g))));
        let closure = if is_normal { sub } else { self.normal_closure_of(sub)? };
        Ok(NormalClosure { is_normal, closure })
    }

    /// Normal closure of `elements` in `self`; elements are assumed to lie
    /// in the group.
    pub fn normal_closure(&self, elements: &[Permutation]) -> Result<PermGroup, PermError> {
        let sub = PermGroup::new(self.degree(), elements.to_vec())?;
        self.normal_closure_of(sub)
    }

    fn normal_closure_of(&self, mut sub: PermGroup) -> Result<PermGroup, PermError> {
        let mut i = 0;
        while i < sub.generators().len() {
            let h = sub.generators()[i].clone();
            for g in self.generators() {
                let c = h.conjugate_by(g);
                if !sub.contains(&c) {
                    sub = sub.with_generator(c)?;
                }
            }
            i += 1;
        }
        Ok(sub)
    }

    /// `true` iff `sub` is a normal subgroup of `self`.
    pub fn normalizes(&self, sub: &PermGroup) -> bool {
        self.contains_group(sub)
            && sub
                .generators()
                .iter()
                .all(|h| self.generators().iter().all(|g| sub.contains(&h.conjugate_by(g))))
    }

    /// Conjugacy classes by exhaustive enumeration with union-find under
    /// conjugation by the generators. Classes are sorted by element order,
    /// then by representative; the identity class comes first.
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjugacyClass>, PermError> {
        if self.order() > ENUMERATION_CAP {
            return Err(PermError::GroupTooLarge { order: self.order(), cap: ENUMERATION_CAP });
        }
        let elements = self.elements()?;
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut parent: Vec<usize> = (0..elements.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, x) in elements.iter().enumerate() {
            for g in self.generators() {
                let j = index[&x.conjugate_by(g)];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut classes: HashMap<usize, (usize, usize)> = HashMap::new();
        for i in 0..elements.len() {
            let root = find(&mut parent, i);
            let entry = classes.entry(root).or_insert((i, 0));
            if elements[i] < elements[entry.0] {
                entry.0 = i;
            }
            entry.1 += 1;
        }
        let mut out: Vec<ConjugacyClass> = classes
            .into_values()
            .map(|(rep, size)| ConjugacyClass { representative: elements[rep].clone(), size })
            .collect();
        out.sort_by(|a, b| {
            (a.representative.order(), &a.representative)
                .cmp(&(b.representative.order(), &b.representative))
        });
        Ok(out)
    }

    /// Normal closures of every non-identity conjugacy-class
    /// representative, deduplicated, in class order.
    ///
    /// Every nontrivial normal subgroup contains one of these, and every
    /// minimal normal subgroup is one of them.
    pub fn class_closures(&self) -> Result<Vec<PermGroup>, PermError> {
        let mut out: Vec<PermGroup> = Vec::new();
        for class in self.conjugacy_classes()? {
            if class.representative.is_identity() {
                continue;
            }
            let closure = self.normal_closure(std::slice::from_ref(&class.representative))?;
            if !out.iter().any(|n| n.same_group(&closure)) {
                out.push(closure);
            }
        }
        Ok(out)
    }

    /// Minimal normal subgroups (inclusion-minimal class closures) and the
    /// socle they generate.
    pub fn normal_structure(&self) -> Result<NormalStructure, PermError> {
        let closures = self.class_closures()?;
        let minimal: Vec<PermGroup> = closures
            .iter()
            .filter(|m| {
                !closures.iter().any(|k| k.order() < m.order() && m.contains_group(k))
            })
            .cloned()
            .collect();
        let gens: Vec<Permutation> =
            minimal.iter().flat_map(|m| m.generators().iter().cloned()).collect();
        let socle = PermGroup::new(self.degree(), gens)?;
        Ok(NormalStructure { minimal, socle })
    }

    /// `true` iff the group has no normal subgroups besides 1 and itself.
    pub fn is_simple(&self) -> Result<bool, PermError> {
        if self.is_trivial() {
            return Ok(false);
        }
        if self.is_abelian() {
            let n = self.order();
            return Ok(n > 1 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0));
        }
        Ok(self.class_closures()?.iter().all(|c| c.order() == self.order()))
    }
}
