use proptest::prelude::*;

use super::*;
use crate::graph::{Graph, LcfSpec};
use crate::perm::{PermGroup, Permutation};

fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).unwrap()
}

fn k33() -> Graph {
    let edges: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    Graph::new(6, &edges).unwrap()
}

fn lcf(text: &str) -> Graph {
    text.parse::<LcfSpec>().unwrap().decode().unwrap()
}

fn group(n: usize, cycles: &[&str]) -> PermGroup {
    let gens = cycles.iter().map(|c| Permutation::from_cycles(n, c).unwrap()).collect();
    PermGroup::new(n, gens).unwrap()
}

/// Counts automorphisms by extending partial maps vertex by vertex.
fn brute_force_aut_count(g: &Graph) -> u128 {
    fn go(g: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> u128 {
        let u = map.len();
        if u == g.n() {
            return 1;
        }
        let mut total = 0;
        for x in 0..g.n() {
            if used[x] || g.degree(x) != g.degree(u) {
                continue;
            }
            if (0..u).all(|v| g.has_edge(u, v) == g.has_edge(x, map[v])) {
                used[x] = true;
                map.push(x);
                total += go(g, map, used);
                map.pop();
                used[x] = false;
            }
        }
        total
    }
    go(g, &mut Vec::new(), &mut vec![false; g.n()])
}

#[test]
fn small_automorphism_groups() {
    assert_eq!(automorphism_group(&cycle(6)).unwrap().order(), 12);
    assert_eq!(automorphism_group(&petersen()).unwrap().order(), 120);
    assert_eq!(automorphism_group(&k33()).unwrap().order(), 72);
    let heawood = lcf("[5,-5]^7");
    assert_eq!(automorphism_group(&heawood).unwrap().order(), 336);
    let empty = Graph::new(4, &[]).unwrap();
    assert_eq!(automorphism_group(&empty).unwrap().order(), 24);
}

#[test]
fn foster_group() {
    let foster = lcf("[17,-9,37,-37,9,-17]^15");
    let aut = automorphism_group(&foster).unwrap();
    assert_eq!(aut.order(), 4320);
    assert!(is_s_arc_transitive(&foster, &aut, 5).unwrap());
    assert!(!is_s_arc_transitive(&foster, &aut, 6).unwrap());
    assert!(is_s_geodesic_transitive(&foster, &aut, 6).unwrap());
    assert!(is_s_geodesic_transitive(&foster, &aut, 8).unwrap());
    let report = transitivity_degrees(&foster, &aut, TransitivityOptions::default()).unwrap();
    assert_eq!(report.arc_transitive_up_to, Some(5));
    assert_eq!(report.geodesic_transitive_up_to, 8);
    let full = transitivity_degrees(&foster, &aut, TransitivityOptions { use_shortcut: false }).unwrap();
    assert_eq!(full.geodesic_transitive_up_to, 8);
    assert!(!full.b_s_shortcut_used);

    let all: Vec<usize> = (0..90).collect();
    let blocks = block_systems(&aut, &all).unwrap();
    assert!(blocks.iter().any(|b| b[0].len() == 3));
    let q = quasiprimitivity(&aut, &all).unwrap();
    assert!(!q.quasiprimitive);
    let w = q.witness.unwrap();
    assert_eq!(w.order(), 3);
    assert_eq!(w.all_orbits().len(), 30);

    let weiss = weiss_divisibility_check(&foster, &aut, 5).unwrap();
    assert_eq!(weiss.stabilizer_order, 48);
    assert_eq!(weiss.b_product, Some(48));
    assert_eq!(weiss.b_product_divides, Some(true));
    assert!(weiss.candidate.unwrap().matches);
}

#[test]
fn isomorphisms() {
    let c6 = cycle(6);
    let relabeled = c6.relabel(&[3, 0, 4, 1, 5, 2]);
    let map = find_isomorphism(&c6, &relabeled).unwrap();
    assert!(is_isomorphism(&c6, &relabeled, &map));
    assert!(!are_isomorphic(&c6, &k33()));
    assert!(!are_isomorphic(&c6, &Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap()));
    let desargues = lcf("[5,-5,9,-9]^5");
    assert!(are_isomorphic(&petersen().standard_double_cover(), &desargues));
}

#[test]
fn cycle_transitivity() {
    let c6 = cycle(6);
    let d12 = automorphism_group(&c6).unwrap();
    assert!(is_s_arc_transitive(&c6, &d12, 1).unwrap());
    assert!(is_s_geodesic_transitive(&c6, &d12, 3).unwrap());
    let report = transitivity_degrees(&c6, &d12, TransitivityOptions::default()).unwrap();
    assert_eq!(report.arc_transitive_up_to, None);
    assert!(report.geodesic_transitive);
    let rotations = group(6, &["(0 1 2 3 4 5)"]);
    let report = transitivity_degrees(&c6, &rotations, TransitivityOptions::default()).unwrap();
    assert_eq!(report.arc_transitive_up_to, Some(0));
    assert_eq!(report.geodesic_transitive_up_to, 0);
}

#[test]
fn petersen_transitivity() {
    let p = petersen();
    let aut = automorphism_group(&p).unwrap();
    let report = transitivity_degrees(&p, &aut, TransitivityOptions::default()).unwrap();
    assert_eq!(report.arc_transitive_up_to, Some(3));
    assert_eq!(report.geodesic_transitive_up_to, 2);
    assert_eq!(report.shortcut_level, Some(2));
    assert!(matches!(
        weiss_divisibility_check(&p, &aut, 4),
        Err(SymmetryError::PreconditionUnverified(_))
    ));
}

#[test]
fn k33_not_four_arc_transitive() {
    let g = k33();
    let aut = automorphism_group(&g).unwrap();
    assert!(is_s_arc_transitive(&g, &aut, 3).unwrap());
    assert!(!is_s_arc_transitive(&g, &aut, 4).unwrap());
}

#[test]
fn rejects_non_automorphisms() {
    let c6 = cycle(6);
    let bad = group(6, &["(0 2)"]);
    assert_eq!(
        is_s_arc_transitive(&c6, &bad, 1),
        Err(SymmetryError::NotAutomorphisms { index: 0 })
    );
    let small = group(5, &["(0 1 2 3 4)"]);
    assert!(matches!(is_s_arc_transitive(&c6, &small, 1), Err(SymmetryError::DegreeMismatch { .. })));
}

#[test]
fn blocks_and_primitivity() {
    let z4 = group(4, &["(0 1 2 3)"]);
    let all: Vec<usize> = (0..4).collect();
    assert_eq!(block_systems(&z4, &all).unwrap(), vec![vec![vec![0, 2], vec![1, 3]]]);
    assert!(!is_primitive(&z4, &all).unwrap());
    let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
    assert!(is_primitive(&s4, &all).unwrap());
    assert!(quasiprimitivity(&s4, &all).unwrap().quasiprimitive);
    let z5 = group(5, &["(0 1 2 3 4)"]);
    assert!(quasiprimitivity(&z5, &(0..5).collect::<Vec<_>>()).unwrap().quasiprimitive);
    let fixed = group(4, &["(0 1)"]);
    assert_eq!(is_primitive(&fixed, &all), Err(SymmetryError::NotTransitive));
}

#[test]
fn bipartite_actions() {
    let c6 = cycle(6);
    let d12 = automorphism_group(&c6).unwrap();
    let class = bi_analysis(&c6, &d12).unwrap();
    let setting = class.bipartite_setting.as_ref().unwrap();
    assert_eq!(setting.g_plus.order(), 6);
    assert!(setting.biprimitive);
    // the central half-turn has three orbits
    assert!(!setting.biquasiprimitive);

    let heawood = lcf("[5,-5]^7");
    let aut = automorphism_group(&heawood).unwrap();
    let class = bi_analysis(&heawood, &aut).unwrap();
    let setting = class.bipartite_setting.as_ref().unwrap();
    assert_eq!(setting.g_plus.order(), 168);
    assert!(setting.biquasiprimitive);
    assert!(!class.quasiprimitive);
    assert_eq!(class.x_omega.case, XOmegaCase::Biquasiprimitive);
    assert_eq!(class.socle_tag, SocleTag::Simple);
    let x = setting.g_plus.restrict_to(&setting.parts.0).unwrap();
    assert!(quasiprimitivity(&x, &(0..7).collect::<Vec<_>>()).unwrap().quasiprimitive);
    assert_eq!(socle_tag(&x).unwrap(), SocleTag::Simple);

    let g = k33();
    let aut = automorphism_group(&g).unwrap();
    let class = bi_analysis(&g, &aut).unwrap();
    assert!(class.biprimitive());
    assert!(class.biquasiprimitive());
}

#[test]
fn heawood_weiss_form() {
    let heawood = lcf("[5,-5]^7");
    let aut = automorphism_group(&heawood).unwrap();
    let report = weiss_divisibility_check(&heawood, &aut, 4).unwrap();
    assert_eq!(report.stabilizer_order, 24);
    assert_eq!(report.transitivity, "s-arc");
    assert_eq!(report.b_product, None);
    let c = report.candidate.unwrap();
    assert_eq!(c.base_order, 24);
    assert_eq!(c.cofactor, Some(1));
    assert!(c.matches);
}

#[test]
fn too_large() {
    let big = cycle(AUTOMORPHISM_SEARCH_CAP + 1);
    assert_eq!(
        automorphism_group(&big).unwrap_err(),
        SymmetryError::GraphTooLarge { n: 513, cap: 512 }
    );
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

/// Circulant graphs: vertex-transitive by construction.
fn arb_circulant(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            for (i, _) in bits.iter().enumerate().filter(|(_, b)| **b) {
                let d = i + 1;
                for u in 0..n {
                    edges.push((u, (u + d) % n));
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn aut_order_matches_brute_force(g in arb_graph(8)) {
        let aut = automorphism_group(&g).unwrap();
        prop_assert_eq!(aut.order(), brute_force_aut_count(&g));
        for gen in aut.generators() {
            prop_assert!(g.is_automorphism(&gen.to_images()));
        }
    }

    #[test]
    fn relabeled_copies_are_isomorphic(g in arb_graph(12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        let map = find_isomorphism(&g, &h);
        prop_assert!(map.is_some());
        prop_assert!(is_isomorphism(&g, &h, &map.unwrap()));
    }

    #[test]
    fn lemma_girth_equivalence(g in arb_graph(9)) {
        prop_assume!(g.is_connected() && g.n() > 1);
        let aut = automorphism_group(&g).unwrap();
        let diameter = g.diameter().unwrap();
        let girth = g.girth().ok();
        for s in 1..=diameter {
            if girth.map_or(true, |x| x >= 2 * s) {
                prop_assert_eq!(
                    is_s_geodesic_transitive(&g, &aut, s).unwrap(),
                    (1..=s).all(|i| is_s_arc_transitive(&g, &aut, i).unwrap())
                );
            }
        }
    }

    #[test]
    fn shortcut_agrees_with_full_scan(g in arb_circulant(14)) {
        prop_assume!(g.is_connected());
        let aut = automorphism_group(&g).unwrap();
        let fast = transitivity_degrees(&g, &aut, TransitivityOptions { use_shortcut: true }).unwrap();
        let slow = transitivity_degrees(&g, &aut, TransitivityOptions { use_shortcut: false }).unwrap();
        prop_assert_eq!(fast.geodesic_transitive_up_to, slow.geodesic_transitive_up_to);
        prop_assert_eq!(fast.arc_transitive_up_to, slow.arc_transitive_up_to);
    }

    #[test]
    fn primitive_implies_quasiprimitive(g in arb_circulant(14)) {
        prop_assume!(g.is_connected());
        let aut = automorphism_group(&g).unwrap();
        // class enumeration refuses groups beyond the cap (complete graphs)
        prop_assume!(aut.order() <= crate::perm::ENUMERATION_CAP);
        let class = bi_analysis(&g, &aut).unwrap();
        if class.primitive {
            prop_assert!(class.quasiprimitive);
        }
        if let Some(b) = &class.bipartite_setting {
            // a normal subgroup with more than two orbits meets G+ trivially,
            // so it has order 2
            if b.biprimitive && !b.biquasiprimitive {
                prop_assert!(b.witness.as_ref().is_some_and(|w| w.order() == 2));
            }
        }
    }

    #[test]
    fn arc_transitivity_forces_girth(g in arb_circulant(14)) {
        prop_assume!(g.is_connected() && g.valency().is_some_and(|k| k >= 3));
        let aut = automorphism_group(&g).unwrap();
        let report = transitivity_degrees(&g, &aut, TransitivityOptions::default()).unwrap();
        let s = report.arc_transitive_up_to.unwrap();
        if s >= 2 {
            prop_assert!(g.girth().unwrap() + 2 >= 2 * s);
        }
    }
}
