use serde::{Deserialize, Serialize};

use super::{validate_group, SymmetryError};
use crate::graph::Graph;
use crate::perm::{PermError, PermGroup};

/// Printable digest of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub order: u128,
    pub orbit_count: usize,
    pub generators: Vec<String>,
}

impl GroupSummary {
    pub fn of(group: &PermGroup) -> Self {
        GroupSummary {
            order: group.order(),
            orbit_count: group.all_orbits().len(),
            generators: group.generators().iter().map(ToString::to_string).collect(),
        }
    }
}

fn domain_index(group: &PermGroup, domain: &[usize]) -> Result<Vec<usize>, SymmetryError> {
    let mut index = vec![usize::MAX; group.degree()];
    for (i, &p) in domain.iter().enumerate() {
        if p >= group.degree() {
            return Err(PermError::PointOutOfRange { point: p, degree: group.degree() }.into());
        }
        index[p] = i;
    }
    Ok(index)
}

fn require_transitive(group: &PermGroup, domain: &[usize]) -> Result<(), SymmetryError> {
    if domain.is_empty() || !group.is_transitive_on(domain)? {
        return Err(SymmetryError::NotTransitive);
    }
    Ok(())
}

/// The minimal block containing `{domain[0], beta}` for every other
/// `beta`, as partitions of `domain`, with the trivial ones dropped.
/// Each partition lists its blocks sorted; partitions are ordered by
/// block size, then lexicographically.
pub fn block_systems(group: &PermGroup, domain: &[usize]) -> Result<Vec<Vec<Vec<usize>>>, SymmetryError> {
    require_transitive(group, domain)?;
    let index = domain_index(group, domain)?;
    let m = domain.len();
    let gens: Vec<Vec<usize>> = group
        .generators()
        .iter()
        .map(|g| domain.iter().map(|&p| index[g.apply(p)]).collect())
        .collect();
    let mut systems: Vec<Vec<Vec<usize>>> = Vec::new();
    for beta in 1..m {
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut pending = vec![(0usize, beta)];
        parent[beta] = 0;
        while let Some((x, y)) = pending.pop() {
            for g in &gens {
                let (a, b) = (find(&mut parent, g[x]), find(&mut parent, g[y]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                    pending.push((g[x], g[y]));
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; m];
        for i in 0..m {
            let r = find(&mut parent, i);
            if slot[r] == usize::MAX {
                slot[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[r]].push(domain[i]);
        }
        if blocks.len() == 1 {
            continue;
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        if !systems.contains(&blocks) {
            systems.push(blocks);
        }
    }
    systems.sort_by(|a, b| (a[0].len(), a).cmp(&(b[0].len(), b)));
    Ok(systems)
}

pub fn is_primitive(group: &PermGroup, domain: &[usize]) -> Result<bool, SymmetryError> {
    Ok(block_systems(group, domain)?.is_empty())
}

#[derive(Clone, Debug)]
pub struct Quasiprimitivity {
    pub quasiprimitive: bool,
    /// An intransitive nontrivial normal subgroup of least order.
    pub witness: Option<PermGroup>,
}

/// Every nontrivial normal subgroup contains the normal closure of some
/// non-identity element, so it is enough to test those closures.
pub fn quasiprimitivity(group: &PermGroup, domain: &[usize]) -> Result<Quasiprimitivity, SymmetryError> {
    require_transitive(group, domain)?;
    let mut witness: Option<PermGroup> = None;
    for closure in group.class_closures()? {
        if !closure.is_transitive_on(domain)?
            && witness.as_ref().map_or(true, |w| closure.order() < w.order())
        {
            witness = Some(closure);
        }
    }
    Ok(Quasiprimitivity { quasiprimitive: witness.is_none(), witness })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SocleTag {
    AbelianRegular,
    NonabelianRegular,
    Simple,
    ProductOfSimples,
    Other,
}

impl std::fmt::Display for SocleTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SocleTag::AbelianRegular => "abelian-regular",
            SocleTag::NonabelianRegular => "nonabelian-regular",
            SocleTag::Simple => "simple",
            SocleTag::ProductOfSimples => "product-of-simples",
            SocleTag::Other => "other",
        })
    }
}

/// Coarse socle type of a group acting on all of its points.
pub fn socle_tag(group: &PermGroup) -> Result<SocleTag, SymmetryError> {
    if group.is_trivial() {
        return Ok(SocleTag::Other);
    }
    let structure = group.normal_structure()?;
    let socle = &structure.socle;
    let regular = socle.is_transitive() && socle.order() == group.degree() as u128;
    let tag = if socle.is_abelian() {
        if regular {
            SocleTag::AbelianRegular
        } else {
            SocleTag::Other
        }
    } else if regular {
        SocleTag::NonabelianRegular
    } else if structure.minimal.iter().any(PermGroup::is_abelian) {
        SocleTag::Other
    } else if structure.minimal.len() == 1 && socle.is_simple()? {
        SocleTag::Simple
    } else {
        SocleTag::ProductOfSimples
    };
    Ok(tag)
}

/// Data attached to a vertex-transitive action on a connected bipartite
/// graph.
#[derive(Clone, Debug)]
pub struct BipartiteSetting {
    pub parts: (Vec<usize>, Vec<usize>),
    /// Setwise stabilizer of the parts.
    pub g_plus: PermGroup,
    pub biprimitive: bool,
    pub biquasiprimitive: bool,
    /// A nontrivial normal subgroup with more than two orbits.
    pub witness: Option<PermGroup>,
}

/// Which case of the `(X, Omega)` choice applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum XOmegaCase {
    Quasiprimitive,
    Biquasiprimitive,
    Neither,
}

/// `(G, V)` for a quasiprimitive action, `(G+ restricted to the first
/// part, first part)` for a biquasiprimitive one, and `(G, V)` otherwise.
#[derive(Clone, Debug)]
pub struct XOmega {
    pub case: XOmegaCase,
    /// Acts on `0..points.len()`, point `i` standing for `points[i]`.
    pub group: PermGroup,
    pub points: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ActionClass {
    pub transitive: bool,
    pub primitive: bool,
    pub quasiprimitive: bool,
    pub witness: Option<PermGroup>,
    pub bipartite_setting: Option<BipartiteSetting>,
    pub socle_tag: SocleTag,
    pub x_omega: XOmega,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteSummary {
    pub part_sizes: (usize, usize),
    pub g_plus: GroupSummary,
    pub biprimitive: bool,
    pub biquasiprimitive: bool,
    pub witness: Option<GroupSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSummary {
    pub transitive: bool,
    pub primitive: bool,
    pub quasiprimitive: bool,
    pub biprimitive: bool,
    pub biquasiprimitive: bool,
    pub witness: Option<GroupSummary>,
    pub bipartite: Option<BipartiteSummary>,
    pub socle_tag: SocleTag,
    pub x_omega_case: XOmegaCase,
    pub x_omega_order: u128,
    pub x_omega_degree: usize,
}

impl ActionClass {
    pub fn biprimitive(&self) -> bool {
        self.bipartite_setting.as_ref().is_some_and(|b| b.biprimitive)
    }

    pub fn biquasiprimitive(&self) -> bool {
        self.bipartite_setting.as_ref().is_some_and(|b| b.biquasiprimitive)
    }

    pub fn summary(&self) -> ActionSummary {
        ActionSummary {
            transitive: self.transitive,
            primitive: self.primitive,
            quasiprimitive: self.quasiprimitive,
            biprimitive: self.biprimitive(),
            biquasiprimitive: self.biquasiprimitive(),
            witness: self.witness.as_ref().map(GroupSummary::of),
            bipartite: self.bipartite_setting.as_ref().map(|b| BipartiteSummary {
                part_sizes: (b.parts.0.len(), b.parts.1.len()),
                g_plus: GroupSummary::of(&b.g_plus),
                biprimitive: b.biprimitive,
                biquasiprimitive: b.biquasiprimitive,
                witness: b.witness.as_ref().map(GroupSummary::of),
            }),
            socle_tag: self.socle_tag,
            x_omega_case: self.x_omega.case,
            x_omega_order: self.x_omega.group.order(),
            x_omega_degree: self.x_omega.points.len(),
        }
    }
}

fn primitive_on_all(group: &PermGroup) -> Result<bool, SymmetryError> {
    let all: Vec<usize> = (0..group.degree()).collect();
    match is_primitive(group, &all) {
        Err(SymmetryError::NotTransitive) => Ok(false),
        other => other,
    }
}

fn bipartite_setting(g: &Graph, group: &PermGroup) -> Result<Option<BipartiteSetting>, SymmetryError> {
    let Some((d1, d2)) = g.classify_shape().bipartition else {
        return Ok(None);
    };
    if !g.is_connected() || d2.is_empty() {
        return Ok(None);
    }
    let g_plus = group.induced_action(&[d1.clone(), d2.clone()])?.kernel;
    let x1 = g_plus.restrict_to(&d1)?;
    let x2 = g_plus.restrict_to(&d2)?;
    let biprimitive =
        g_plus.order() * 2 == group.order() && primitive_on_all(&x1)? && primitive_on_all(&x2)?;
    let all: Vec<usize> = (0..g.n()).collect();
    let mut witness: Option<PermGroup> = None;
    let mut two_orbits = !g_plus.is_trivial() && g_plus.order() * 2 == group.order();
    for closure in group.class_closures()? {
        let orbits = closure.orbits(&all)?.len();
        two_orbits |= orbits == 2;
        if orbits > 2 && witness.as_ref().map_or(true, |w| closure.order() < w.order()) {
            witness = Some(closure);
        }
    }
    let biquasiprimitive = witness.is_none() && two_orbits;
    Ok(Some(BipartiteSetting { parts: (d1, d2), g_plus, biprimitive, biquasiprimitive, witness }))
}

/// Primitivity type of a vertex-transitive action, including the
/// bipartite variants and the socle of the reduced action `X`.
pub fn bi_analysis(g: &Graph, group: &PermGroup) -> Result<ActionClass, SymmetryError> {
    validate_group(g, group)?;
    let all: Vec<usize> = (0..g.n()).collect();
    require_transitive(group, &all)?;
    let primitive = is_primitive(group, &all)?;
    let quasi = quasiprimitivity(group, &all)?;
    let setting = bipartite_setting(g, group)?;
    let x_omega = if quasi.quasiprimitive {
        XOmega { case: XOmegaCase::Quasiprimitive, group: group.clone(), points: all }
    } else if let Some(b) = setting.as_ref().filter(|b| b.biquasiprimitive) {
        XOmega {
            case: XOmegaCase::Biquasiprimitive,
            group: b.g_plus.restrict_to(&b.parts.0)?,
            points: b.parts.0.clone(),
        }
    } else {
        XOmega { case: XOmegaCase::Neither, group: group.clone(), points: all }
    };
    let socle_tag = socle_tag(&x_omega.group)?;
    Ok(ActionClass {
        transitive: true,
        primitive,
        quasiprimitive: quasi.quasiprimitive,
        witness: quasi.witness,
        bipartite_setting: setting,
        socle_tag,
        x_omega,
    })
}
