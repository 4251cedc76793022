use serde::Serialize;

use super::{QuotientError, QuotientResult};
use crate::graph::Graph;
use crate::perm::PermGroup;
use crate::symmetry::{is_s_arc_transitive, is_s_geodesic_transitive};

/// The standing assumptions on `(Γ, G, N, s)`: `Γ` connected and
/// `(G,s)`-geodesic transitive with girth `2s-2` or `2s-1`, `s >= 2`, `N`
/// with at least three orbits, and `Γ` a cover of `Γ_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GirthPremises {
    pub connected: bool,
    pub s_at_least_2: bool,
    pub girth_in_window: bool,
    pub geodesic_transitive: bool,
    pub at_least_three_orbits: bool,
    pub cover: bool,
}

impl GirthPremises {
    fn evaluate(g: &Graph, group: &PermGroup, result: &QuotientResult, s: usize) -> Result<Self, QuotientError> {
        let connected = g.is_connected();
        let girth = result.girth_pair.0;
        let geodesic_transitive = connected
            && s >= 1
            && s <= g.diameter()?
            && is_s_geodesic_transitive(g, group, s)?;
        Ok(GirthPremises {
            connected,
            s_at_least_2: s >= 2,
            girth_in_window: s >= 2 && girth.is_some_and(|x| x == 2 * s - 2 || x == 2 * s - 1),
            geodesic_transitive,
            at_least_three_orbits: result.orbit_count >= 3,
            cover: result.is_cover,
        })
    }

    pub fn failed(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (ok, name) in [
            (self.connected, "connected"),
            (self.s_at_least_2, "s-at-least-2"),
            (self.girth_in_window, "girth-in-window"),
            (self.geodesic_transitive, "geodesic-transitive"),
            (self.at_least_three_orbits, "at-least-three-orbits"),
            (self.cover, "cover"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }

    pub fn all_hold(&self) -> bool {
        self.failed().is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundVerdict {
    /// Both bounds hold and the quotient is `(s-1)`-arc transitive.
    Holds,
    /// The check fails, but so does some premise.
    Fails,
    /// The check fails although every premise holds.
    Contradiction,
    /// `s = 7` cannot occur under the premises.
    ExcludedS7,
}

/// Outcome of [`girth_bound_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GirthBoundReport {
    pub s: usize,
    /// `2s - 4`, saturating at 0.
    pub lower_bound: usize,
    pub quotient_girth: Option<usize>,
    pub girth: Option<usize>,
    pub bounds_hold: bool,
    pub induced_order: u128,
    /// Whether `Γ_N` is `(G/N, s-1)`-arc transitive.
    pub quotient_arc_transitive: bool,
    pub premises: GirthPremises,
    pub verdict: BoundVerdict,
}

/// Checks `2s-4 <= girth(Γ_N) <= girth(Γ)` and `(s-1)`-arc transitivity
/// of the quotient under the induced group. The premises are evaluated and
/// reported; only a missing cover is an error.
pub fn girth_bound_check(
    g: &Graph,
    group: &PermGroup,
    result: &QuotientResult,
    s: usize,
) -> Result<GirthBoundReport, QuotientError> {
    if !result.is_cover {
        return Err(QuotientError::premise("cover", "Γ is not a cover of Γ_N"));
    }
    let premises = GirthPremises::evaluate(g, group, result, s)?;
    let lower_bound = (2 * s).saturating_sub(4);
    let (girth, quotient_girth) = result.girth_pair;
    let bounds_hold = match (quotient_girth, girth) {
        (Some(k), Some(gg)) => lower_bound <= k && k <= gg,
        _ => false,
    };
    let quotient_arc_transitive = s >= 1 && is_s_arc_transitive(&result.quotient, &result.induced, s - 1)?;
    let verdict = if s == 7 {
        BoundVerdict::ExcludedS7
    } else if bounds_hold && quotient_arc_transitive {
        BoundVerdict::Holds
    } else if premises.all_hold() {
        BoundVerdict::Contradiction
    } else {
        BoundVerdict::Fails
    };
    Ok(GirthBoundReport {
        s,
        lower_bound,
        quotient_girth,
        girth,
        bounds_hold,
        induced_order: result.induced.order(),
        quotient_arc_transitive,
        premises,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "kebab-case")]
pub enum ProfileVerdict {
    Holds,
    /// Names of the premises that fail.
    PremiseViolated(Vec<String>),
    /// Assertions that fail although every premise holds.
    Contradiction(Vec<String>),
}

/// A lift `(u_1, ..., u_k, u_1')` of a quotient cycle and its distances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleProfile {
    pub k: usize,
    pub s: usize,
    pub cycle: Vec<usize>,
    /// `u_1, ..., u_k`, with `u_i` in block `cycle[i-1]`.
    pub lift: Vec<usize>,
    /// `u_1'`, the second vertex of block `cycle[0]` closing the arc.
    pub closing: usize,
    /// `d_Γ(u_1, u_i)` for `i = 1..=k`.
    pub distances: Vec<usize>,
    pub closing_distance: usize,
    /// `d_Σ(B_1, B_i)` for `i = 1..=k`.
    pub quotient_distances: Vec<usize>,
    pub girth: usize,
    /// `girth - k + 1`, the lower bound on `d_Γ(u_1, u_k)`.
    pub endpoint_lower_bound: usize,
    pub premises: GirthPremises,
    /// Whether `k` equals the quotient girth.
    pub cycle_is_shortest: bool,
    /// Assertions that failed, whatever the premises.
    pub failures: Vec<String>,
    pub verdict: ProfileVerdict,
}

fn check_cycle(result: &QuotientResult, cycle: &[usize]) -> Result<(), QuotientError> {
    let k = cycle.len();
    if k < 3 {
        return Err(QuotientError::NotACycle(format!("length {k} is below 3")));
    }
    let mut seen = vec![false; result.orbit_count];
    for &b in cycle {
        if b >= result.orbit_count {
            return Err(QuotientError::NotACycle(format!("block {b} out of range")));
        }
        if std::mem::replace(&mut seen[b], true) {
            return Err(QuotientError::NotACycle(format!("block {b} repeats")));
        }
    }
    for i in 0..k {
        let (a, b) = (cycle[i], cycle[(i + 1) % k]);
        if !result.quotient.has_edge(a, b) {
            return Err(QuotientError::NotACycle(format!("blocks {a} and {b} are not adjacent")));
        }
    }
    Ok(())
}

/// Lifts the quotient cycle `(B_1, ..., B_k)` greedily (least vertex of
/// `B_1`, then the least neighbour in each next block) and checks the
/// distance profile: `d_Σ(B_1,B_i) = i-1` for `i <= r+1` and
/// `d_Σ(B_1,B_{r+2})` is `r-1` or `r` for even or odd `k` (`r = k/2`);
/// `s <= k`, `d_Γ(u_1,u_i) = i-1` for `i <= s`, and
/// `d_Γ(u_1,u_k) >= girth - k + 1`.
pub fn lift_cycle_profile(
    g: &Graph,
    group: &PermGroup,
    result: &QuotientResult,
    cycle: &[usize],
    s: usize,
) -> Result<CycleProfile, QuotientError> {
    check_cycle(result, cycle)?;
    if !result.is_cover {
        return Err(QuotientError::premise("cover", "Γ is not a cover of Γ_N"));
    }
    if !g.is_connected() {
        return Err(QuotientError::premise("connected", "Γ is disconnected"));
    }
    let k = cycle.len();
    let girth = result.girth_pair.0.unwrap_or(usize::MAX);
    if k >= girth {
        return Err(QuotientError::CycleTooLong { k, girth });
    }

    let mut lift = vec![result.orbit_partition[cycle[0]][0]];
    for i in 1..=k {
        let prev = lift[i - 1];
        let next = result
            .neighbors_in_block(g, prev, cycle[i % k])
            .next()
            .expect("in a cover every vertex has a neighbour in each adjacent block");
        lift.push(next);
    }
    let closing = lift.pop().unwrap();
    debug_assert_ne!(closing, lift[0], "a closed lift would be a k-cycle below the girth");

    let dist = g.distances(lift[0])?;
    let qdist = result.quotient.distances(cycle[0])?;
    let distances: Vec<usize> = lift.iter().map(|&u| dist[u]).collect();
    let quotient_distances: Vec<usize> = cycle.iter().map(|&b| qdist[b]).collect();
    let endpoint_lower_bound = girth + 1 - k;

    let mut failures = Vec::new();
    let r = k / 2;
    for i in 2..=(r + 1).min(k) {
        if quotient_distances[i - 1] != i - 1 {
            failures.push(format!("d_Σ(B_1,B_{i}) = {} ≠ {}", quotient_distances[i - 1], i - 1));
        }
    }
    if r + 2 <= k {
        let want = if k % 2 == 0 { r - 1 } else { r };
        if quotient_distances[r + 1] != want {
            failures.push(format!("d_Σ(B_1,B_{}) = {} ≠ {want}", r + 2, quotient_distances[r + 1]));
        }
    }
    if s > k {
        failures.push(format!("s = {s} exceeds k = {k}"));
    }
    for i in 2..=s.min(k) {
        if distances[i - 1] != i - 1 {
            failures.push(format!("d_Γ(u_1,u_{i}) = {} ≠ {}", distances[i - 1], i - 1));
        }
    }
    if distances[k - 1] < endpoint_lower_bound {
        failures.push(format!("d_Γ(u_1,u_{k}) = {} < {endpoint_lower_bound}", distances[k - 1]));
    }

    let premises = GirthPremises::evaluate(g, group, result, s)?;
    let cycle_is_shortest = result.girth_pair.1 == Some(k);
    let mut failed: Vec<String> = premises.failed().into_iter().map(String::from).collect();
    if !cycle_is_shortest {
        failed.push("cycle-is-shortest".into());
    }
    let verdict = if !failed.is_empty() {
        ProfileVerdict::PremiseViolated(failed)
    } else if failures.is_empty() {
        ProfileVerdict::Holds
    } else {
        ProfileVerdict::Contradiction(failures.clone())
    };
    Ok(CycleProfile {
        k,
        s,
        cycle: cycle.to_vec(),
        lift,
        closing,
        closing_distance: dist[closing],
        distances,
        quotient_distances,
        girth,
        endpoint_lower_bound,
        premises,
        cycle_is_shortest,
        failures,
        verdict,
    })
}
