use std::collections::HashSet;

use proptest::prelude::*;

use super::*;

fn perm(n: usize, cycles: &str) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

fn group(n: usize, gens: &[&str]) -> PermGroup {
    PermGroup::new(n, gens.iter().map(|c| perm(n, c)).collect()).unwrap()
}

fn closure_oracle(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

#[test]
fn trivial_and_cyclic_orders() {
    assert_eq!(PermGroup::new(5, vec![]).unwrap().order(), 1);
    assert_eq!(PermGroup::new(5, vec![Permutation::identity(5)]).unwrap().order(), 1);
    assert_eq!(group(5, &["(0 1 2 3 4)"]).order(), 5);
    assert_eq!(group(6, &["(0 1 2 3 4 5)", "(1 5)(2 4)"]).order(), 12);
    assert_eq!(group(8, &["(0 1 2 3 4 5 6 7)", "(0 1)"]).order(), 40320);
}

#[test]
fn mixed_degree_rejected() {
    let err = PermGroup::new(4, vec![perm(4, "(0 1)"), perm(5, "(0 1)")]).unwrap_err();
    assert_eq!(err, PermError::MixedDegree(4, 5));
}

#[test]
fn chain_invariants_hold() {
    let g = group(7, &["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"]);
    assert_eq!(g.order(), 21);
    let base = g.base();
    assert_eq!(g.basic_orbit_sizes().iter().product::<usize>() as u128, g.order());
    for i in 0..base.len() {
        for s in g.level_generators(i) {
            assert!(base[..i].iter().all(|&b| s.fixes(b)));
        }
    }
    for s in g.generators() {
        assert!(g.contains(s));
    }
    // base point selection is deterministic: smallest moved point first
    assert_eq!(base[0], 0);
}

#[test]
fn orbit_examples() {
    let t = PermGroup::trivial(5);
    assert_eq!(t.orbits(&[0, 1, 2, 3, 4]).unwrap(), vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
    let g = group(6, &["(0 1 2)(3 4 5)"]);
    assert_eq!(g.orbits(&[0, 1, 2, 3, 4, 5]).unwrap(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    assert_eq!(g.orbits(&[9]).unwrap_err(), PermError::PointOutOfRange { point: 9, degree: 6 });
    assert_eq!(g.orbits(&[0, 1]).unwrap_err(), PermError::NotInvariant);
}

#[test]
fn pointwise_stabilizer_examples() {
    let g = group(5, &["(0 1 2 3 4)"]);
    assert_eq!(g.pointwise_stabilizer(&[]).unwrap().order(), 5);
    assert_eq!(g.pointwise_stabilizer(&[0]).unwrap().order(), 1);
    let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
    let h = s4.pointwise_stabilizer(&[3, 1]).unwrap();
    assert_eq!(h.order(), 2);
    assert!(h.contains(&perm(4, "(0 2)")));
    assert!(!h.contains(&perm(4, "(0 1)")));
    assert_eq!(s4.pointwise_stabilizer(&[2, 2, 2]).unwrap().order(), 6);
    assert!(s4.pointwise_stabilizer(&[4]).is_err());
}

#[test]
fn normal_test_examples() {
    let s3 = group(3, &["(0 1 2)", "(0 1)"]);
    let r = s3.normal_test_and_closure(&[perm(3, "(0 1 2)")]).unwrap();
    assert!(r.is_normal);
    assert_eq!(r.closure.order(), 3);
    let r = s3.normal_test_and_closure(&[perm(3, "(0 1)")]).unwrap();
    assert!(!r.is_normal);
    assert!(r.closure.same_group(&s3));
    let c3 = group(3, &["(0 1 2)"]);
    assert_eq!(c3.normal_test_and_closure(&[perm(3, "(0 1)")]).unwrap_err(), PermError::NotASubgroup);
}

#[test]
fn normal_structure_examples() {
    let s3 = group(3, &["(0 1 2)", "(0 1)"]);
    let ns = s3.normal_structure().unwrap();
    assert_eq!(ns.minimal.len(), 1);
    assert_eq!(ns.minimal[0].order(), 3);
    assert_eq!(ns.socle.order(), 3);

    let c5 = group(5, &["(0 1 2 3 4)"]);
    let ns = c5.normal_structure().unwrap();
    assert_eq!(ns.minimal.len(), 1);
    assert_eq!(ns.socle.order(), 5);

    // Sym(4): the Klein four-group is the unique minimal normal subgroup
    let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
    let ns = s4.normal_structure().unwrap();
    assert_eq!(ns.minimal.len(), 1);
    assert_eq!(ns.socle.order(), 4);

    // C2 x C2 acting on 4 points: three minimal normal subgroups of order 2
    let v4 = group(4, &["(0 1)", "(2 3)"]);
    let ns = v4.normal_structure().unwrap();
    assert_eq!(ns.minimal.len(), 3);
    assert_eq!(ns.socle.order(), 4);
}

#[test]
fn simplicity() {
    assert!(group(5, &["(0 1 2 3 4)"]).is_simple().unwrap());
    assert!(!group(4, &["(0 1 2 3)"]).is_simple().unwrap());
    assert!(group(5, &["(0 1 2)", "(0 1 2 3 4)"]).is_simple().unwrap()); // Alt(5)
    assert!(!group(4, &["(0 1 2)", "(0 1)(2 3)"]).is_simple().unwrap()); // Alt(4)
}

#[test]
fn conjugacy_classes_of_s4() {
    let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
    let classes = s4.conjugacy_classes().unwrap();
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    assert!(classes[0].representative.is_identity());
}

#[test]
fn semiregular_examples() {
    assert!(group(5, &["(0 1 2 3 4)"]).is_semiregular(&[0, 1, 2, 3, 4]).unwrap());
    assert!(!group(3, &["(0 1 2)", "(0 1)"]).is_semiregular(&[0, 1, 2]).unwrap());
    assert!(group(6, &["(0 1 2)(3 4 5)"]).is_semiregular(&[0, 3]).unwrap());
}

#[test]
fn induced_action_examples() {
    let c4 = group(4, &["(0 1 2 3)"]);
    let singletons: Vec<Vec<usize>> = (0..4).map(|i| vec![i]).collect();
    let ia = c4.induced_action(&singletons).unwrap();
    assert_eq!(ia.quotient.order(), 4);
    assert_eq!(ia.kernel.order(), 1);

    let ia = c4.induced_action(&[vec![0, 2], vec![1, 3]]).unwrap();
    assert_eq!(ia.quotient.order(), 2);
    assert_eq!(ia.kernel.order(), 2);
    assert!(ia.kernel.contains(&perm(4, "(0 2)(1 3)")));

    assert_eq!(c4.induced_action(&[vec![0, 1], vec![2, 3]]).unwrap_err(), PermError::NotInvariant);
    assert_eq!(c4.induced_action(&[vec![0, 1], vec![1, 2, 3]]).unwrap_err(), PermError::InvalidPartition);
}

#[test]
fn restriction_to_invariant_subset() {
    let g = group(6, &["(0 1 2)(3 4)", "(0 1)"]);
    let r = g.restrict_to(&[0, 1, 2]).unwrap();
    assert_eq!(r.order(), 6);
    assert_eq!(g.restrict_to(&[0, 1]).unwrap_err(), PermError::NotInvariant);
}

#[test]
fn group_spec_json() {
    let spec = GroupSpec::parse_json(r#"{"degree": 4, "generators": [[1,2,3,0], "(0 2)"]}"#).unwrap();
    let g = spec.build().unwrap();
    assert_eq!(g.order(), 8);
    let back = GroupSpec::parse_json(&GroupSpec::from_group(&g).to_json()).unwrap();
    assert!(back.build().unwrap().same_group(&g));
    assert!(GroupSpec::parse_json(r#"{"degree": 3, "generators": [[0,1]]}"#).unwrap().build().is_err());
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn arb_group() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (2usize..8).prop_flat_map(|n| (Just(n), prop::collection::vec(arb_perm(n), 0..4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_matches_closure((n, gens) in arb_group()) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        let all = closure_oracle(n, &gens);
        prop_assert_eq!(g.order(), all.len() as u128);
        for x in all.iter().take(50) {
            prop_assert!(g.contains(x));
        }
        let elements: HashSet<Permutation> = g.elements().unwrap().into_iter().collect();
        prop_assert_eq!(elements, all);
    }

    #[test]
    fn orbit_stabilizer((n, gens) in arb_group(), a in 0usize..8, b in 0usize..8) {
        let g = PermGroup::new(n, gens).unwrap();
        let tuple = [a % n, b % n];
        let stab = g.pointwise_stabilizer(&tuple).unwrap();
        // orbit of the tuple, by brute force over the elements
        let images: HashSet<(usize, usize)> = g
            .elements()
            .unwrap()
            .iter()
            .map(|x| (x.apply(tuple[0]), x.apply(tuple[1])))
            .collect();
        prop_assert_eq!(images.len() as u128 * stab.order(), g.order());
        for s in stab.generators() {
            prop_assert!(s.fixes(tuple[0]) && s.fixes(tuple[1]));
        }
    }

    #[test]
    fn normal_closure_is_minimal((n, gens) in arb_group(), h in (2usize..8).prop_flat_map(arb_perm)) {
        let g = PermGroup::new(n, gens).unwrap();
        prop_assume!(h.degree() == n && g.contains(&h));
        let r = g.normal_test_and_closure(std::slice::from_ref(&h)).unwrap();
        prop_assert!(g.normalizes(&r.closure));
        prop_assert!(r.closure.contains(&h));
        // minimality: every normal subgroup containing h contains the closure
        for c in g.class_closures().unwrap() {
            if c.contains(&h) {
                prop_assert!(c.contains_group(&r.closure));
            }
        }
    }

    #[test]
    fn induced_action_orders((n, gens) in arb_group()) {
        let g = PermGroup::new(n, gens).unwrap();
        // orbits are always an invariant partition
        let orbits = g.all_orbits();
        let ia = g.induced_action(&orbits).unwrap();
        prop_assert_eq!(ia.quotient.order(), 1);
        prop_assert!(ia.kernel.same_group(&g));
        // pair up points 2i, 2i+1 if the group preserves that partition
        let blocks: Vec<Vec<usize>> = (0..n).step_by(2).map(|i| (i..(i + 2).min(n)).collect()).collect();
        if let Ok(ia) = g.induced_action(&blocks) {
            prop_assert_eq!(ia.quotient.order() * ia.kernel.order(), g.order());
            prop_assert!(g.normalizes(&ia.kernel));
        }
    }
}
