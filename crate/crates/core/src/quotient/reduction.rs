use serde::Serialize;
use serde_json::{json, Value};

use super::{normal_quotient, QuotientError};
use crate::atlas::{atlas_build, symplectic_quadrangle};
use crate::graph::Graph;
use crate::perm::PermGroup;
use crate::symmetry::{find_isomorphism, is_s_geodesic_transitive};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionCase {
    /// Girth preserved, quotient diameter above `s`, and the quotient
    /// `(G/N, s)`-geodesic transitive.
    GirthPreserved,
    /// `Γ` is the Foster graph over the generalized quadrangle of order 2,
    /// with `(s, girth) = (6, 10)`.
    FosterException,
    /// Neither outcome; the evidence records why.
    CounterexampleCandidate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionEvidence {
    pub s: usize,
    pub girth: Option<usize>,
    pub quotient_girth: Option<usize>,
    pub orbit_count: usize,
    pub orbit_size: Option<usize>,
    pub n_order: u128,
    pub semiregular: bool,
    pub is_cover: bool,
    pub complete_multipartite: bool,
    pub induced_order: u128,
    pub kernel_order: u128,
    pub quotient_diameter: usize,
    /// `None` when `s` exceeds the quotient diameter.
    pub quotient_geodesic_transitive: Option<bool>,
    /// Isomorphism `Γ -> Foster`, vertex `v` to `map[v]`.
    pub foster_isomorphism: Option<Vec<usize>>,
    /// Isomorphism `Γ_N -> ` incidence graph of W(3,2).
    pub quotient_isomorphism: Option<Vec<usize>>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionVerdict {
    pub case: ReductionCase,
    pub evidence: ReductionEvidence,
}

/// Runs the reduction for `N ⊴ G ≤ Aut(Γ)`: checks the premises in order
/// (connected, `5 <= s <= 8`, `s <= diameter`, girth `2s-2` or `2s-1`, `N`
/// normal and nontrivial, `N` intransitive, at least three orbits,
/// `(G,s)`-geodesic transitivity), then verifies `Γ` is not complete
/// multipartite, that `N` is semiregular and `Γ` covers `Γ_N`, and
/// classifies the outcome.
pub fn verify_reduction(
    g: &Graph,
    group: &PermGroup,
    n: &PermGroup,
    s: usize,
) -> Result<ReductionVerdict, QuotientError> {
    use QuotientError as E;
    if !g.is_connected() {
        return Err(E::premise("connected", "Γ is disconnected"));
    }
    if !(5..=8).contains(&s) {
        return Err(E::premise("s-range", format!("s = {s} is outside 5..=8")));
    }
    let diameter = g.diameter()?;
    if s > diameter {
        return Err(E::premise("diameter", format!("diameter {diameter} < s = {s}")));
    }
    let girth = g.girth().ok();
    if girth != Some(2 * s - 2) && girth != Some(2 * s - 1) {
        let shown = girth.map_or("none".to_string(), |x| x.to_string());
        return Err(E::premise(
            "girth-window",
            format!("girth {shown} is not in {{{}, {}}}", 2 * s - 2, 2 * s - 1),
        ));
    }
    if n.degree() != group.degree() || !group.contains_group(n) || !group.normalizes(n) {
        return Err(E::premise("normal", "N is not a normal subgroup of G"));
    }
    if n.is_trivial() {
        return Err(E::premise("nontrivial", "N is trivial"));
    }
    let orbits = n.all_orbits().len();
    if orbits == 1 {
        return Err(E::premise("intransitive", "N is transitive on the vertices"));
    }
    if orbits == 2 {
        return Err(E::premise("two-orbits", "N has exactly two orbits; the bipartite analysis applies"));
    }
    if !is_s_geodesic_transitive(g, group, s)? {
        return Err(E::premise("geodesic-transitive", format!("Γ is not (G,{s})-geodesic transitive")));
    }
    let complete_multipartite = g.classify_shape().is_complete_multipartite();
    if complete_multipartite {
        return Err(E::premise("not-complete-multipartite", "Γ is complete multipartite"));
    }

    let all: Vec<usize> = (0..g.n()).collect();
    let semiregular = n.is_semiregular(&all)?;
    let result = normal_quotient(g, group, n)?;
    let sigma = &result.quotient;
    let quotient_diameter = sigma.diameter()?;
    let quotient_geodesic_transitive = if s <= quotient_diameter {
        Some(is_s_geodesic_transitive(sigma, &result.induced, s)?)
    } else {
        None
    };
    let sizes: std::collections::BTreeSet<usize> = result.orbit_partition.iter().map(Vec::len).collect();
    let mut notes = Vec::new();
    if !semiregular {
        notes.push("N is not semiregular".to_string());
    }
    if !result.is_cover {
        notes.push("Γ is not a cover of Γ_N".to_string());
    }

    let girth_preserved = result.girth_pair.1 == girth;
    let mut foster_isomorphism = None;
    let mut quotient_isomorphism = None;
    let case = if semiregular && result.is_cover && girth_preserved && quotient_diameter > s
        && quotient_geodesic_transitive == Some(true)
    {
        ReductionCase::GirthPreserved
    } else {
        if s == 6 && girth == Some(10) {
            foster_isomorphism = find_isomorphism(g, &atlas_build("foster")?.graph);
            quotient_isomorphism = find_isomorphism(sigma, &symplectic_quadrangle(2)?);
        }
        if semiregular && result.is_cover && foster_isomorphism.is_some() && quotient_isomorphism.is_some() {
            ReductionCase::FosterException
        } else {
            if !girth_preserved {
                notes.push("quotient girth differs and Γ is not the Foster cover of W(3,2)".to_string());
            } else if quotient_diameter <= s {
                notes.push(format!("quotient diameter {quotient_diameter} <= s"));
            } else if quotient_geodesic_transitive != Some(true) {
                notes.push(format!("Γ_N is not (G/N,{s})-geodesic transitive"));
            }
            ReductionCase::CounterexampleCandidate
        }
    };
    Ok(ReductionVerdict {
        case,
        evidence: ReductionEvidence {
            s,
            girth,
            quotient_girth: result.girth_pair.1,
            orbit_count: result.orbit_count,
            orbit_size: (sizes.len() == 1).then(|| *sizes.first().unwrap()),
            n_order: result.n_order,
            semiregular,
            is_cover: result.is_cover,
            complete_multipartite,
            induced_order: result.induced.order(),
            kernel_order: result.kernel_order,
            quotient_diameter,
            quotient_geodesic_transitive,
            foster_isomorphism,
            quotient_isomorphism,
            notes,
        },
    })
}

/// `{"case": ..., "evidence": {...}}`; failed premises become
/// `precondition-failed` with the premise named, other errors are
/// returned unchanged.
pub fn verdict_json(outcome: &Result<ReductionVerdict, QuotientError>) -> Result<Value, QuotientError> {
    match outcome {
        Ok(v) => Ok(serde_json::to_value(v).expect("verdicts serialize")),
        Err(QuotientError::PreconditionUnverified { premise, detail }) => Ok(json!({
            "case": "precondition-failed",
            "evidence": { "premise": premise, "detail": detail },
        })),
        Err(e) => Err(e.clone()),
    }
}
