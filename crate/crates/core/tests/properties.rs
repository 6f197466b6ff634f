//! Engine invariants over the corpus and over random permutation groups.

use std::collections::BTreeSet;

use defect_core::arith::{p_part, prime_divisors};
use defect_core::deficiency::{defect, is_deficient};
use defect_core::families::{mersenne_frobenius, singer_cycle};
use defect_core::harness::corpus;
use defect_core::{Group, Perm};
use proptest::prelude::*;

fn corpus_groups() -> Vec<(String, Group)> {
    corpus()
        .into_iter()
        .map(|e| (e.name, e.spec.build().unwrap()))
        .collect()
}

fn class_equation(group: &Group) {
    let classes = group.conjugacy_classes();
    assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), group.order());
    for c in classes {
        assert_eq!(group.order() % c.size(), 0);
    }
    let covered: BTreeSet<usize> = classes.iter().flat_map(|c| c.members.iter().copied()).collect();
    assert_eq!(covered.len(), group.order());
}

fn orbit_stabilizer(group: &Group) {
    for c in group.conjugacy_classes() {
        assert_eq!(c.size() * c.centralizer_order, group.order());
    }
    for point in 1..=group.degree() {
        let orbit: BTreeSet<usize> = group.elements().iter().map(|g| g.apply(point)).collect();
        let stabilizer = group.elements().iter().filter(|g| g.apply(point) == point).count();
        assert_eq!(orbit.len() * stabilizer, group.order());
    }
}

fn center_is_singleton_classes(group: &Group) {
    let singletons: BTreeSet<Perm> = group
        .conjugacy_classes()
        .iter()
        .filter(|c| c.size() == 1)
        .map(|c| c.representative.clone())
        .collect();
    let center: BTreeSet<Perm> = group.center().elements().iter().cloned().collect();
    assert_eq!(center, singletons);
}

fn sylow_orders_exact(group: &Group) {
    let n = group.order() as u64;
    for p in prime_divisors(n) {
        let sylow = group.sylow_subgroup(p).unwrap();
        assert_eq!(sylow.order() as u64, p_part(n, p));
        assert!(group.contains_group(&sylow));
    }
}

#[test]
fn corpus_has_at_least_twenty_groups() {
    assert!(corpus().len() >= 20);
}

#[test]
fn class_equation_on_corpus() {
    for (_, g) in corpus_groups() {
        class_equation(&g);
    }
}

#[test]
fn orbit_stabilizer_on_corpus() {
    for (_, g) in corpus_groups() {
        orbit_stabilizer(&g);
    }
}

#[test]
fn center_equals_singleton_classes_on_corpus() {
    for (_, g) in corpus_groups() {
        center_is_singleton_classes(&g);
    }
}

#[test]
fn sylow_order_exactness_on_corpus() {
    for (_, g) in corpus_groups() {
        sylow_orders_exact(&g);
    }
}

#[test]
fn frobenius_congruence_on_corpus() {
    let mut seen = 0;
    for (name, g) in corpus_groups() {
        if let Some(fs) = g.frobenius_structure().unwrap() {
            let (a, b) = (fs.kernel.order(), fs.complement.order());
            assert_eq!(a % b, 1, "{name}: |A| = {a}, |B| = {b}");
            assert_eq!(a * b, g.order());
            assert!(fs.congruence_holds);
            seen += 1;
        }
    }
    // four C_p:C_q (S3 included), A4, E8:C7, two C_q:C4, D18
    assert_eq!(seen, 9);
}

#[test]
fn singer_complements_act_regularly() {
    for s in [2u32, 3, 5] {
        let q = (1usize << s) - 1;
        let cycle = singer_cycle(s).unwrap();
        let group = Group::generate(q + 1, &[cycle]).unwrap();
        assert_eq!(group.order(), q);
        for v in 2..=q + 1 {
            let orbit: BTreeSet<usize> = group.elements().iter().map(|g| g.apply(v)).collect();
            assert_eq!(orbit.len(), q);
            assert!(!orbit.contains(&1));
        }
    }
    // the point stabilizer of the zero vector is a complement, regular on the rest
    for s in [2u32, 3] {
        let g = mersenne_frobenius(s).unwrap();
        let stab: Vec<&Perm> = g.elements().iter().filter(|x| x.apply(1) == 1).collect();
        assert_eq!(stab.len(), (1 << s) - 1);
        for v in 2..=(1usize << s) {
            let orbit: BTreeSet<usize> = stab.iter().map(|x| x.apply(v)).collect();
            assert_eq!(orbit.len(), stab.len());
        }
    }
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(images).unwrap())
}

fn group_strategy() -> impl Strategy<Value = Group> {
    (2usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(perm_strategy(n), 1..=3)))
        .prop_map(|(n, gens)| Group::generate(n, &gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_groups_satisfy_engine_invariants(g in group_strategy()) {
        class_equation(&g);
        orbit_stabilizer(&g);
        center_is_singleton_classes(&g);
        sylow_orders_exact(&g);
    }

    #[test]
    fn defect_counts_deficient_classes(g in group_strategy()) {
        let report = defect(&g);
        let direct = g
            .conjugacy_classes()
            .iter()
            .skip(1)
            .filter(|c| is_deficient(&g, &c.representative).unwrap())
            .count();
        prop_assert_eq!(report.defect, direct);
        for c in &report.deficient_classes {
            for &m in &c.members {
                prop_assert!(is_deficient(&g, g.element(m)).unwrap());
            }
        }
    }

    #[test]
    fn frobenius_kernels_satisfy_the_congruence(g in group_strategy()) {
        if let Some(fs) = g.frobenius_structure().unwrap() {
            prop_assert_eq!(fs.kernel.order() % fs.complement.order(), 1);
            prop_assert!(g.is_normal_subgroup(&fs.kernel));
        }
    }
}
