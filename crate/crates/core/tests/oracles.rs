//! Expected values recomputed by brute force on plain permutations, without
//! the engine's tables, classes or subgroup machinery.

use std::collections::{BTreeMap, BTreeSet};

use defect_core::deficiency::defect;
use defect_core::families::{cyclic, generalized_quaternion, psl2, symmetric};
use defect_core::{Group, Perm};

fn closure(degree: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let mut set = BTreeSet::from([Perm::identity(degree)]);
    let mut frontier = vec![Perm::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g).unwrap();
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Deficient classes as `(element order, class size)` pairs.
fn deficient_classes(elements: &[Perm]) -> Vec<(u64, usize)> {
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let mut out = Vec::new();
    for x in elements {
        if x.is_identity() || seen.contains(x) {
            continue;
        }
        let class: BTreeSet<Perm> = elements
            .iter()
            .map(|h| h.inverse().compose(x).unwrap().compose(h).unwrap())
            .collect();
        seen.extend(class.iter().cloned());
        let centralizer = elements
            .iter()
            .filter(|h| h.compose(x).unwrap() == x.compose(h).unwrap())
            .count();
        if centralizer as u64 > x.order() {
            out.push((x.order(), class.len()));
        }
    }
    out.sort();
    out
}

fn brute(group: &Group) -> Vec<(u64, usize)> {
    let elements: Vec<Perm> = closure(group.degree(), group.generators()).into_iter().collect();
    assert_eq!(elements.len(), group.order());
    deficient_classes(&elements)
}

#[test]
fn negative_control_defects() {
    assert_eq!(brute(&cyclic(6).unwrap()).len(), 3);
    assert_eq!(brute(&cyclic(9).unwrap()).len(), 2);
    assert_eq!(brute(&symmetric(4).unwrap()).len(), 2);
    assert_eq!(brute(&generalized_quaternion(16).unwrap()).len(), 2);
    for (g, j) in [
        (cyclic(6).unwrap(), 3),
        (cyclic(9).unwrap(), 2),
        (symmetric(4).unwrap(), 2),
        (generalized_quaternion(16).unwrap(), 2),
    ] {
        assert_eq!(defect(&g).defect, j);
    }
}

#[test]
fn psl2_9_deficient_orders() {
    let classes = brute(&psl2(9).unwrap());
    let orders: BTreeSet<u64> = classes.iter().map(|c| c.0).collect();
    assert_eq!(orders, BTreeSet::from([2, 3]));
    assert_eq!(classes.len(), defect(&psl2(9).unwrap()).defect);
}

#[test]
fn psl2_8_defect_matches_brute_force() {
    let g = psl2(8).unwrap();
    let classes = brute(&g);
    assert!(classes.len() >= 2);
    assert_eq!(classes.len(), defect(&g).defect);
}

#[test]
fn defect_zero_and_one_families_by_brute_force() {
    use defect_core::families::*;
    for g in [cyclic(13).unwrap(), frobenius_pq(11, 5).unwrap(), frobenius_pq(13, 3).unwrap()] {
        assert!(brute(&g).is_empty());
    }
    for g in [
        cyclic(4).unwrap(),
        generalized_quaternion(8).unwrap(),
        mersenne_frobenius(3).unwrap(),
        c4_frobenius(13).unwrap(),
        dihedral(9).unwrap(),
        alternating(5).unwrap(),
        psl2(7).unwrap(),
    ] {
        assert_eq!(brute(&g).len(), 1);
    }
}

/// Subgroups of `S_n` as closures of pairs of cyclic subgroups; every
/// subgroup of `S_4` and `S_5` is 2-generated.
fn two_generated_subgroups(n: usize) -> BTreeSet<BTreeSet<Perm>> {
    let all: Vec<Perm> = closure(n, symmetric(n).unwrap().generators()).into_iter().collect();
    let cyclics: BTreeMap<BTreeSet<Perm>, Perm> = all
        .iter()
        .map(|x| (closure(n, std::slice::from_ref(x)), x.clone()))
        .collect();
    let gens: Vec<&Perm> = cyclics.values().collect();
    let mut subgroups = BTreeSet::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            subgroups.insert(closure(n, &[(*a).clone(), (*b).clone()]));
        }
    }
    subgroups
}

#[test]
fn subgroup_counts_of_s4_and_s5() {
    for (n, count) in [(4, 30), (5, 156)] {
        let oracle = two_generated_subgroups(n);
        assert_eq!(oracle.len(), count);
        let engine = symmetric(n).unwrap().all_subgroups().unwrap();
        assert_eq!(engine.len(), count);
        let engine_sets: BTreeSet<BTreeSet<Perm>> = engine
            .iter()
            .map(|h| h.elements().iter().cloned().collect())
            .collect();
        assert_eq!(engine_sets, oracle);
    }
}
