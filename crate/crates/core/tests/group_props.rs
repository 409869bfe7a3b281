mod common;

use std::collections::HashSet;

use common::{compose, dihedral_as_map, s3_table, wreath_as_permutation};
use pgmm::{Group, GroupDescriptor, GroupElement};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn families() -> Vec<Group> {
    vec![
        Group::cyclic_power(&[7]).unwrap(),
        Group::cyclic_power(&[4, 6, 9]).unwrap(),
        Group::dihedral(1).unwrap(),
        Group::dihedral(2).unwrap(),
        Group::dihedral(6).unwrap(),
        Group::dihedral(101).unwrap(),
        Group::wreath_s2(&[3, 3, 3]).unwrap(),
        Group::wreath_s2(&[17, 17, 17]).unwrap(),
        Group::from_descriptor(GroupDescriptor::Table {
            order: 6,
            mul: s3_table(),
        })
        .unwrap(),
    ]
}

#[test]
fn sampled_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for g in families() {
        let e = g.identity();
        for _ in 0..1000 {
            let (a, b, c) = (
                g.random_element(&mut rng),
                g.random_element(&mut rng),
                g.random_element(&mut rng),
            );
            assert!(g.contains(&a));
            let ab = g.multiply(&a, &b).unwrap();
            assert!(g.contains(&ab));
            assert_eq!(
                g.multiply(&ab, &c).unwrap(),
                g.multiply(&a, &g.multiply(&b, &c).unwrap()).unwrap(),
                "{}",
                g.descriptor()
            );
            assert_eq!(g.multiply(&a, &e).unwrap(), a);
            assert_eq!(g.multiply(&e, &a).unwrap(), a);
            let inv = g.inverse(&a).unwrap();
            assert!(g.is_identity(&g.multiply(&a, &inv).unwrap()));
            assert!(g.is_identity(&g.multiply(&inv, &a).unwrap()));
            assert_eq!(g.parse_element(&g.format_element(&a)).unwrap(), a);
            assert_eq!(g.element_from_json(&g.element_to_json(&a)).unwrap(), a);
        }
    }
}

#[test]
fn enumeration_matches_order() {
    for g in families() {
        if g.order() > 10_000 {
            assert!(g
                .clone()
                .with_enumeration_threshold(10_000)
                .elements()
                .is_err());
            continue;
        }
        let all = g.elements().unwrap();
        assert_eq!(all.len() as u64, g.order());
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
    }
}

#[test]
fn s3_is_nonabelian() {
    let g = Group::from_descriptor(GroupDescriptor::Table {
        order: 6,
        mul: s3_table(),
    })
    .unwrap();
    let all = g.elements().unwrap();
    let commuting = all
        .iter()
        .flat_map(|a| all.iter().map(move |b| (a, b)))
        .filter(|(a, b)| g.multiply(a, b).unwrap() == g.multiply(b, a).unwrap())
        .count();
    // 6 · |conjugacy classes| = 18 commuting ordered pairs.
    assert_eq!(commuting, 18);
}

#[test]
fn wreath_matches_permutation_representation() {
    for moduli in [
        vec![2],
        vec![3],
        vec![2, 2],
        vec![2, 2, 2],
        vec![4, 4, 4],
        vec![2, 4, 8],
    ] {
        let g = Group::wreath_s2(&moduli).unwrap();
        let elements = g.elements().unwrap();
        let perm = |x: &GroupElement| wreath_as_permutation(&moduli, x);
        // Faithful: distinct elements act differently.
        let images: HashSet<Vec<usize>> = elements.iter().map(perm).collect();
        assert_eq!(images.len(), elements.len());

        let exhaustive = elements.len() <= 128;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let pairs: Vec<(GroupElement, GroupElement)> = if exhaustive {
            elements
                .iter()
                .flat_map(|a| elements.iter().map(move |b| (a.clone(), b.clone())))
                .collect()
        } else {
            (0..4000)
                .map(|_| (g.random_element(&mut rng), g.random_element(&mut rng)))
                .collect()
        };
        for (a, b) in pairs {
            let ab = g.multiply(&a, &b).unwrap();
            assert_eq!(
                perm(&ab),
                compose(&perm(&a), &perm(&b)),
                "{moduli:?}: {a:?} {b:?}"
            );
        }
        for a in &elements {
            let back = compose(&perm(a), &perm(&g.inverse(a).unwrap()));
            assert!(back.iter().enumerate().all(|(i, &x)| i == x));
        }
    }
}

proptest! {
    #[test]
    fn dihedral_matches_affine_maps(n in 3u32..60, r1 in 0u32..1000, s1 in 0u8..2, r2 in 0u32..1000, s2 in 0u8..2) {
        let g = Group::dihedral(n).unwrap();
        let a = GroupElement::Dihedral { r: r1 % n, s: s1 };
        let b = GroupElement::Dihedral { r: r2 % n, s: s2 };
        let ab = g.multiply(&a, &b).unwrap();
        prop_assert_eq!(dihedral_as_map(n, &ab), compose(&dihedral_as_map(n, &a), &dihedral_as_map(n, &b)));
    }

    #[test]
    fn dihedral_text_roundtrip(n in 1u32..200, r in 0u32..200, s in 0u8..2) {
        let g = Group::dihedral(n).unwrap();
        let a = GroupElement::Dihedral { r: r % n, s };
        prop_assert_eq!(g.parse_element(&g.format_element(&a)).unwrap(), a);
    }

    #[test]
    fn cyclic_is_componentwise_addition(x in proptest::collection::vec(0u32..1000, 3), y in proptest::collection::vec(0u32..1000, 3)) {
        let moduli = [5u32, 12, 31];
        let g = Group::cyclic_power(&moduli).unwrap();
        let reduce = |v: &[u32]| GroupElement::Cyclic(v.iter().zip(moduli).map(|(a, m)| a % m).collect());
        let sum: Vec<u32> = x.iter().zip(&y).zip(moduli).map(|((a, b), m)| (a + b) % m).collect();
        prop_assert_eq!(g.multiply(&reduce(&x), &reduce(&y)).unwrap(), reduce(&sum));
    }
}

#[test]
fn foreign_and_malformed_elements_rejected() {
    let d = Group::dihedral(6).unwrap();
    assert!(d
        .multiply(&GroupElement::Dihedral { r: 6, s: 0 }, &d.identity())
        .is_err());
    assert!(d.multiply(&GroupElement::Table(0), &d.identity()).is_err());
    assert!(d.parse_element("q7").is_err());
    let non_group = GroupDescriptor::Table {
        order: 3,
        mul: vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]],
    };
    assert!(Group::from_descriptor(non_group).is_err());
}
