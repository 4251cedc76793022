//! The fixed list of checks behind `geodex verify`: catalog invariants,
//! the Foster reduction and its girth and distance bounds, stabilizer
//! divisibility, and self-checks against brute force.

use std::collections::{HashSet, VecDeque};
use std::time::Instant;

use serde::Serialize;

use crate::atlas::{atlas_build, atlas_get, heisenberg_example, pg2_incidence, symplectic_quadrangle, CATALOG};
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};
use crate::quotient::{
    girth_bound_check, lift_cycle_profile, normal_quotient, verify_reduction, BoundVerdict, ProfileVerdict,
    QuotientResult, ReductionCase,
};
use crate::symmetry::{
    are_isomorphic, automorphism_group, bi_analysis, is_s_arc_transitive, is_s_geodesic_transitive,
    transitivity_degrees, weiss_divisibility_check, TransitivityOptions,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Wall time; left out of serialized reports so they stay reproducible.
    #[serde(skip)]
    pub millis: u128,
}

/// Foster graph, its automorphism group, and the order-3 normal subgroup.
pub struct FosterInstance {
    pub graph: Graph,
    pub aut: PermGroup,
    pub normal: PermGroup,
}

impl FosterInstance {
    pub fn build() -> Result<Self, String> {
        let graph = atlas_build("foster").map_err(|e| e.to_string())?.graph;
        let aut = automorphism_group(&graph).map_err(|e| e.to_string())?;
        let normal = aut
            .normal_structure()
            .map_err(|e| e.to_string())?
            .minimal
            .into_iter()
            .find(|m| m.order() == 3)
            .ok_or("no minimal normal subgroup of order 3")?;
        Ok(FosterInstance { graph, aut, normal })
    }

    pub fn quotient(&self) -> Result<QuotientResult, String> {
        normal_quotient(&self.graph, &self.aut, &self.normal).map_err(|e| e.to_string())
    }
}

pub const CLAIM_NAMES: [&str; 11] = [
    "foster-invariants",
    "biggs-smith-invariants",
    "generalized-polygon-arrays",
    "foster-reduction",
    "foster-girth-bounds",
    "lifted-cycle-profile",
    "stabilizer-divisibility",
    "arc-geodesic-coincidence",
    "foster-not-quasiprimitive",
    "brute-force-oracles",
    "heisenberg-cover",
];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_row(name: &str) -> Outcome {
    let record = atlas_get(name).map_err(|e| e.to_string())?;
    let e = &record.expected;
    Ok(format!(
        "girth {} diameter {} array {} |Aut| {} arc degree {} geodesic degree {}",
        e.girth.unwrap_or(0),
        e.diameter.unwrap_or(0),
        e.intersection_array.as_ref().map(ToString::to_string).unwrap_or_default(),
        e.aut_order.unwrap_or(0),
        e.arc_degree.map_or("-".to_string(), |x| x.to_string()),
        e.geodesic_degree.map_or("-".to_string(), |x| x.to_string()),
    ))
}

fn polygon_rows() -> Outcome {
    let mut parts = Vec::new();
    for (kind, q, g) in [
        ("PG(2,q)", 2, pg2_incidence(2)),
        ("PG(2,q)", 3, pg2_incidence(3)),
        ("PG(2,q)", 4, pg2_incidence(4)),
        ("W(3,q)", 2, symplectic_quadrangle(2)),
        ("W(3,q)", 3, symplectic_quadrangle(3)),
    ] {
        let g = g.map_err(|e| e.to_string())?;
        let d = if kind == "PG(2,q)" { 3 } else { 4 };
        let array = g.intersection_array().map_err(|e| e.to_string())?.ok_or("not distance-regular")?;
        let mut b = vec![q + 1];
        b.extend(std::iter::repeat(q).take(d - 1));
        let mut c = vec![1; d - 1];
        c.push(q + 1);
        ensure(array.b == b && array.c == c, || format!("{kind} q={q}: array {array}"))?;
        let girth = g.girth().map_err(|e| e.to_string())?;
        let diameter = g.diameter().map_err(|e| e.to_string())?;
        ensure(girth == 2 * d && diameter == d, || format!("{kind} q={q}: girth {girth} diameter {diameter}"))?;
        parts.push(format!("{kind} q={q} {array}"));
    }
    Ok(parts.join("; "))
}

fn reduction(f: &FosterInstance) -> Outcome {
    let v = verify_reduction(&f.graph, &f.aut, &f.normal, 6).map_err(|e| e.to_string())?;
    let e = &v.evidence;
    ensure(v.case == ReductionCase::FosterException, || format!("case {:?}", v.case))?;
    ensure(e.quotient_isomorphism.is_some(), || "no isomorphism to W(3,2)".into())?;
    ensure(e.girth == Some(10) && e.quotient_girth == Some(8), || "girth pair".into())?;
    ensure(e.is_cover && e.semiregular && e.orbit_count == 30, || "cover/semiregular/orbits".into())?;
    Ok(format!("foster-exception, girth pair (10,8), cover, N semiregular with {} orbits", e.orbit_count))
}

fn girth_bounds(f: &FosterInstance, r: &QuotientResult) -> Outcome {
    let report = girth_bound_check(&f.graph, &f.aut, r, 6).map_err(|e| e.to_string())?;
    ensure(report.verdict == BoundVerdict::Holds, || format!("verdict {:?}", report.verdict))?;
    ensure(report.lower_bound == 8 && report.quotient_girth == Some(8) && report.girth == Some(10), || {
        format!("{} <= {:?} <= {:?}", report.lower_bound, report.quotient_girth, report.girth)
    })?;
    ensure(report.induced_order == 1440 && report.quotient_arc_transitive, || "quotient action".into())?;
    Ok("8 <= 8 <= 10; quotient 5-arc transitive under the induced group of order 1440".into())
}

/// Rotates and possibly reverses a cycle so that the samples start at
/// different blocks.
pub fn reorient(cycle: &[usize], shift: usize, reverse: bool) -> Vec<usize> {
    let k = cycle.len();
    let mut out: Vec<usize> = (0..k).map(|i| cycle[(i + shift) % k]).collect();
    if reverse {
        out[1..].reverse();
    }
    out
}

fn lifted_cycles(f: &FosterInstance, r: &QuotientResult) -> Outcome {
    let cycles = r.quotient.enumerate_cycles(8);
    ensure(cycles.len() >= 20, || format!("only {} 8-cycles", cycles.len()))?;
    let step = cycles.len() / 20;
    for i in 0..20 {
        let c = reorient(&cycles[i * step], i % 8, i % 2 == 1);
        let p = lift_cycle_profile(&f.graph, &f.aut, r, &c, 6).map_err(|e| e.to_string())?;
        ensure(p.verdict == ProfileVerdict::Holds, || format!("cycle {c:?}: {:?}", p.verdict))?;
        ensure((2..=6).all(|j| p.distances[j - 1] == j - 1) && p.distances[7] >= 3, || {
            format!("cycle {c:?}: distances {:?}", p.distances)
        })?;
    }
    Ok(format!("20 of {} quotient 8-cycles lift with d(u1,ui) = i-1 for i <= 6 and d(u1,u8) >= 3", cycles.len()))
}

fn divisibility(f: &FosterInstance) -> Outcome {
    let foster = weiss_divisibility_check(&f.graph, &f.aut, 5).map_err(|e| e.to_string())?;
    ensure(foster.b_product == Some(48) && foster.stabilizer_order == 48, || format!("{foster:?}"))?;
    ensure(foster.b_product_divides == Some(true), || "b product does not divide".into())?;
    let c = foster.candidate.as_ref().ok_or("no s=5 form")?;
    ensure(c.matches && c.cofactor == Some(1), || format!("{c:?}"))?;
    let heawood = atlas_build("heawood").map_err(|e| e.to_string())?.graph;
    let aut = automorphism_group(&heawood).map_err(|e| e.to_string())?;
    let h = weiss_divisibility_check(&heawood, &aut, 4).map_err(|e| e.to_string())?;
    let c = h.candidate.as_ref().ok_or("no s=4 form")?;
    ensure(h.stabilizer_order == 24 && c.matches, || format!("{h:?}"))?;
    Ok("Foster s=5: 48 | 48 = q^3 |GL(2,2)| with e = 1; Heawood s=4: |G_u| = 24 matches".into())
}

fn coincidence() -> Outcome {
    let mut names: Vec<String> = CATALOG.iter().map(ToString::to_string).collect();
    names.extend(["K3,3", "K4,4", "C6", "C9"].map(String::from));
    let mut checked = 0;
    for name in &names {
        let g = atlas_build(name).map_err(|e| e.to_string())?.graph;
        let aut = automorphism_group(&g).map_err(|e| e.to_string())?;
        if !aut.is_transitive() {
            continue;
        }
        let report = transitivity_degrees(&g, &aut, TransitivityOptions::default()).map_err(|e| e.to_string())?;
        let girth = g.girth().map_err(|e| e.to_string())?;
        let top = report.arc_transitive_up_to.unwrap_or(report.diameter).min(report.diameter);
        for s in 1..=top {
            if girth < 2 * s {
                continue;
            }
            let arc = is_s_arc_transitive(&g, &aut, s).map_err(|e| e.to_string())?;
            let geo = is_s_geodesic_transitive(&g, &aut, s).map_err(|e| e.to_string())?;
            ensure(arc == geo, || format!("{name} s={s}: arc {arc}, geodesic {geo}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (graph, s) pairs over {} graphs agree", names.len()))
}

fn not_quasiprimitive(f: &FosterInstance) -> Outcome {
    let class = bi_analysis(&f.graph, &f.aut).map_err(|e| e.to_string())?;
    ensure(!class.primitive && !class.quasiprimitive, || "reported primitive or quasiprimitive".into())?;
    let w = class.witness.as_ref().ok_or("no witness")?;
    ensure(w.order() == 3, || format!("witness of order {}", w.order()))?;
    Ok("not primitive, not quasiprimitive, witness of order 3".into())
}

/// Number of automorphisms by extending partial maps vertex by vertex.
pub fn brute_force_aut_count(g: &Graph) -> u64 {
    fn extend(g: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let v = map.len();
        if v == g.n() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.n() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], w)) {
                used[w] = true;
                map.push(w);
                total += extend(g, map, used);
                map.pop();
                used[w] = false;
            }
        }
        total
    }
    extend(g, &mut Vec::new(), &mut vec![false; g.n()])
}

/// Number of s-geodesics by enumerating every s-arc and keeping those
/// whose ends are at distance s.
pub fn brute_force_geodesic_count(g: &Graph, s: usize) -> u128 {
    let dist: Vec<Vec<usize>> = (0..g.n())
        .map(|u| {
            let mut d = vec![usize::MAX; g.n()];
            let mut queue = VecDeque::from([u]);
            d[u] = 0;
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            d
        })
        .collect();
    fn walk(g: &Graph, dist: &[Vec<usize>], path: &mut Vec<usize>, s: usize) -> u128 {
        if path.len() == s + 1 {
            return u128::from(dist[path[0]][path[s]] == s);
        }
        let last = *path.last().unwrap();
        let mut total = 0;
        for &w in g.neighbors(last) {
            if path.len() >= 2 && path[path.len() - 2] == w {
                continue;
            }
            path.push(w);
            total += walk(g, dist, path, s);
            path.pop();
        }
        total
    }
    (0..g.n()).map(|u| walk(g, &dist, &mut vec![u], s)).sum()
}

/// Size of the closure of `gens` under composition.
pub fn closure_order(degree: usize, gens: &[Permutation]) -> usize {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

fn oracles() -> Outcome {
    // every labelled graph on up to 6 vertices
    let mut graphs = 0;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
            let g = Graph::new(n, &edges).map_err(|e| e.to_string())?;
            let order = automorphism_group(&g).map_err(|e| e.to_string())?.order();
            let brute = brute_force_aut_count(&g);
            ensure(order == brute as u128, || format!("n={n} edges {edges:?}: {order} vs {brute}"))?;
            graphs += 1;
        }
    }
    let mut geodesic_checks = 0;
    for name in ["petersen", "heawood", "tutte-coxeter", "desargues", "K3,3", "C7"] {
        let g = atlas_build(name).map_err(|e| e.to_string())?.graph;
        let diameter = g.diameter().map_err(|e| e.to_string())?;
        for s in 1..=diameter {
            let fast = g.count_geodesics(s).map_err(|e| e.to_string())?;
            let slow = brute_force_geodesic_count(&g, s);
            ensure(fast == slow, || format!("{name} s={s}: {fast} vs {slow}"))?;
            geodesic_checks += 1;
        }
    }
    let groups: Vec<(usize, Vec<&str>)> = vec![
        (5, vec!["(0 1 2 3 4)", "(0 1)"]),
        (7, vec!["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"]),
        (8, vec!["(0 1 2 3 4 5 6)", "(0 1 2)"]),
        (6, vec!["(0 1)(2 3)", "(2 3)(4 5)", "(0 2 4)(1 3 5)"]),
    ];
    for (degree, cycles) in &groups {
        let gens: Vec<Permutation> = cycles
            .iter()
            .map(|c| Permutation::from_cycles(*degree, c))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let group = PermGroup::new(*degree, gens.clone()).map_err(|e| e.to_string())?;
        let brute = closure_order(*degree, &gens);
        ensure(group.order() == brute as u128, || format!("{cycles:?}: {} vs {brute}", group.order()))?;
    }
    Ok(format!(
        "{graphs} labelled graphs, {geodesic_checks} geodesic counts, {} group orders",
        groups.len()
    ))
}

fn heisenberg() -> Outcome {
    let ex = heisenberg_example(3).map_err(|e| e.to_string())?;
    ensure(ex.graph.n() == 27 && ex.graph.girth() == Ok(3), || "graph".into())?;
    let r = normal_quotient(&ex.graph, &ex.group, &ex.normal).map_err(|e| e.to_string())?;
    ensure(r.is_cover && are_isomorphic(&r.quotient, &ex.expected_quotient), || "quotient".into())?;
    Ok("27 vertices, girth 3, central quotient is a cover isomorphic to K9".into())
}

/// Runs every check in order. The Foster instance is built once and shared.
pub fn run_all() -> Vec<ClaimCheck> {
    let mut out = Vec::new();
    let mut record = |id: usize, start: Instant, outcome: Outcome| {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        out.push(ClaimCheck { id, name: CLAIM_NAMES[id - 1], passed, detail, millis: start.elapsed().as_millis() });
    };
    let t = Instant::now();
    record(1, t, catalog_row("foster"));
    let t = Instant::now();
    record(2, t, catalog_row("biggs-smith"));
    let t = Instant::now();
    record(3, t, polygon_rows());

    let t = Instant::now();
    let foster = FosterInstance::build();
    let quotient = foster.as_ref().map_err(Clone::clone).and_then(FosterInstance::quotient);
    let with_foster = |f: &dyn Fn(&FosterInstance) -> Outcome| foster.as_ref().map_err(Clone::clone).and_then(f);
    record(4, t, with_foster(&reduction));
    let t = Instant::now();
    let both = |f: &dyn Fn(&FosterInstance, &QuotientResult) -> Outcome| match (&foster, &quotient) {
        (Ok(a), Ok(b)) => f(a, b),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    record(5, t, both(&girth_bounds));
    let t = Instant::now();
    record(6, t, both(&lifted_cycles));
    let t = Instant::now();
    record(7, t, with_foster(&divisibility));
    let t = Instant::now();
    record(8, t, coincidence());
    let t = Instant::now();
    record(9, t, with_foster(&not_quasiprimitive));
    let t = Instant::now();
    record(10, t, oracles());
    let t = Instant::now();
    record(11, t, heisenberg());
    out
}
