mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use common::*;
use ftsurf::graph::{self, families::*};
use ftsurf::perm::{self, Perm, PermGroup};
use proptest::prelude::*;

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn group_strategy() -> impl Strategy<Value = (usize, Vec<Perm>)> {
    (2usize..=7).prop_flat_map(|n| (Just(n), prop::collection::vec(perm_strategy(n), 1..=3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_and_membership_match_closure((n, gens) in group_strategy(), probe in (2usize..=7).prop_flat_map(perm_strategy)) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        let all = closure(n, &gens);
        prop_assert_eq!(g.order(), all.len() as u128);
        let elems: HashSet<Vec<u32>> = g.elements(10_000).unwrap().into_iter().map(|p| p.images().to_vec()).collect();
        prop_assert_eq!(&elems, &all);
        if probe.degree() == n {
            prop_assert_eq!(g.contains(&probe), all.contains(probe.images()));
        }
    }

    #[test]
    fn orbit_stabilizer((n, gens) in group_strategy()) {
        let g = PermGroup::new(n, gens).unwrap();
        for p in 0..n as u32 {
            prop_assert_eq!(g.order(), g.orbit_of(p).len() as u128 * g.stabilizer(p).order());
        }
    }

    #[test]
    fn perm_arithmetic(a in perm_strategy(9), b in perm_strategy(9)) {
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
        prop_assert!(a.pow(a.order()).is_identity());
        let back = Perm::from_cycles(9, &a.cycles()).unwrap();
        prop_assert_eq!(back, a);
    }
}

/// Every subgroup, found by adjoining one element at a time from the trivial group.
fn all_subgroups(n: usize, g: &HashSet<Vec<u32>>) -> Vec<HashSet<Vec<u32>>> {
    let id: Vec<u32> = (0..n as u32).collect();
    let start: (Vec<Perm>, HashSet<Vec<u32>>) = (Vec::new(), HashSet::from([id]));
    let mut seen: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    let mut queue = vec![start];
    let mut out = Vec::new();
    while let Some((gens, elems)) = queue.pop() {
        let mut key: Vec<Vec<u32>> = elems.iter().cloned().collect();
        key.sort();
        if !seen.insert(key) {
            continue;
        }
        for x in g {
            if elems.contains(x) {
                continue;
            }
            let mut more = gens.clone();
            more.push(Perm::from_images(x.clone()).unwrap());
            let c = closure(n, &more);
            queue.push((more, c));
        }
        out.push(elems);
    }
    out
}

fn check_subgroup_classes(g: &PermGroup) {
    let n = g.degree();
    let elems = closure(n, g.generators());
    let mut classes: BTreeMap<usize, BTreeSet<Vec<Vec<u32>>>> = BTreeMap::new();
    for h in all_subgroups(n, &elems) {
        classes.entry(h.len()).or_default().insert(class_key(&elems, &h));
    }
    for (&m, keys) in &classes {
        let reps = perm::subgroups_of_order(g, m as u128, 100_000).unwrap();
        let rep_keys: BTreeSet<Vec<Vec<u32>>> = reps
            .iter()
            .map(|h| {
                class_key(&elems, &h.elements(100_000).unwrap().into_iter().map(|p| p.images().to_vec()).collect())
            })
            .collect();
        assert_eq!(reps.len(), rep_keys.len(), "order {m}: duplicate classes");
        assert_eq!(&rep_keys, keys, "order {m}");
    }
}

#[test]
fn subgroup_classes_of_small_groups() {
    let s4 = PermGroup::new(
        4,
        vec![Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(), Perm::from_cycles(4, &[vec![0, 1]]).unwrap()],
    )
    .unwrap();
    check_subgroup_classes(&s4);
    check_subgroup_classes(&graph::automorphism_group(&prism(5)));
    check_subgroup_classes(&graph::automorphism_group(&k33()));
    check_subgroup_classes(&graph::automorphism_group(&generalized_petersen(8, 3)));
    check_subgroup_classes(&graph::automorphism_group(&petersen()));
}

#[test]
fn subgroup_classes_of_heawood_group() {
    check_subgroup_classes(&graph::automorphism_group(&heawood()));
}

#[test]
fn transitive_search_agrees_with_full_enumeration() {
    let mut graphs = vec![complete4(), petersen(), heawood(), generalized_petersen(8, 3), lcf(32, &[5, -5, 13, -13])];
    graphs.push(graph::generalized_mgon(4, 2).unwrap());
    for name in ["z21", "x12", "y11"] {
        graphs.push(fixture(name).face_graph());
    }
    for g in graphs {
        let a = graph::automorphism_group(&g);
        let n = g.order() as u128;
        for s in [1u128, 2, 3, 6] {
            let fast = perm::transitive_subgroups(&a, s, 100_000).unwrap();
            let full: Vec<PermGroup> = perm::subgroups_of_order(&a, s * n, 100_000)
                .unwrap()
                .into_iter()
                .filter(PermGroup::is_transitive)
                .collect();
            assert_eq!(fast.len(), full.len(), "n={n} s={s}");
            for h in &fast {
                assert!(h.is_transitive() && h.order() == s * n);
                let matches = full.iter().filter(|f| perm::are_conjugate(&a, h, f, 100_000).unwrap()).count();
                assert_eq!(matches, 1, "n={n} s={s}");
            }
        }
    }
}
