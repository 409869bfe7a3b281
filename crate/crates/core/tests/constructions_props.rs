use std::collections::BTreeSet;

use pgmm::{
    build_sets, check_tpp, classify_aliasing, cu_multiply, enumerate_aliasing, exact_max_f,
    formula_f, is_cover, paper_cover, ExactOptions, IntMatrix, PartialPatternInstance, WorkBudget,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn budget() -> WorkBudget {
    WorkBudget::default()
}

#[test]
fn original_sets_have_tpp() {
    for n in [2u32, 3] {
        let c = build_sets(n, false).unwrap();
        let q = 2 * n as usize * (n as usize - 1);
        assert_eq!(c.set_size(), q);
        assert!(check_tpp(c.triple(), &budget()).unwrap());
        assert!(enumerate_aliasing(c.triple(), &budget())
            .unwrap()
            .is_empty());
        assert_eq!(formula_f(u64::from(n), false).unwrap(), (q * q * q) as u64);
    }
}

#[test]
fn sets_are_disjoint_from_each_other_and_contain_no_identity() {
    let c = build_sets(3, false).unwrap();
    let t = c.triple();
    for set in [t.s(), t.t(), t.u()] {
        assert!(set.iter().all(|x| !t.group().is_identity(x)));
    }
    let s: BTreeSet<_> = t.s().iter().collect();
    assert!(t.t().iter().all(|x| !s.contains(x)));
}

#[test]
fn relaxed_taxonomy_and_cover() {
    for n in [2u32, 3] {
        let c = build_sets(n, true).unwrap();
        let q = 2 * n as usize * (n as usize - 1);
        let small = (n as usize - 1).pow(2);
        assert_eq!(c.set_size(), q + 1);
        let aliasing = enumerate_aliasing(c.triple(), &budget()).unwrap();
        assert!(!aliasing.is_empty());

        let tax = classify_aliasing(&c, &budget()).unwrap();
        let mut union = BTreeSet::new();
        for class in [&tax.bottom, &tax.top_easy, &tax.top_hard] {
            for a in class {
                assert!(union.insert(*a), "classes overlap at {a}");
            }
        }
        assert_eq!(union, aliasing.triples().iter().copied().collect());

        let pc = paper_cover(&c, &budget()).unwrap();
        let inst = PartialPatternInstance::from_aliasing(&aliasing);
        assert!(is_cover(&inst, &pc.cover));
        assert!(pc.cover.left.len() <= small);
        assert_eq!(pc.cover.right.len(), q + 1);
        assert!(pc.f >= formula_f(u64::from(n), true).unwrap());
        assert!(pc.cover.left.iter().all(|e| c.in_added_lines(*e, false)));
        assert!(pc.cover.right.iter().all(|e| c.in_added_lines(*e, true)));
    }
}

#[test]
fn exact_optimum_beats_the_formula() {
    let expected = [(2u32, 102u64), (3, 1989)];
    for (n, optimum) in expected {
        let c = build_sets(n, true).unwrap();
        let inst = PartialPatternInstance::from_aliasing(
            &enumerate_aliasing(c.triple(), &budget()).unwrap(),
        );
        let r = exact_max_f(&inst, &ExactOptions::default());
        assert!(r.exact);
        assert!(r.f >= formula_f(u64::from(n), true).unwrap());
        assert!(r.f > formula_f(u64::from(n), false).unwrap());
        assert_eq!(r.f, optimum);
    }
}

#[test]
fn realized_paper_cover_multiplies_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (n, trials) in [(2u32, 20), (3, 3)] {
        let c = build_sets(n, true).unwrap();
        let pc = paper_cover(&c, &budget()).unwrap();
        let k = c.set_size();
        for _ in 0..trials {
            let mut m = IntMatrix::random(k, k, -20, 20, &mut rng);
            let mut nn = IntMatrix::random(k, k, -20, 20, &mut rng);
            m.zero_entries(&pc.cover.left);
            nn.zero_entries(&pc.cover.right);
            assert_eq!(
                cu_multiply(&m, &nn, c.triple()).unwrap(),
                m.checked_mul(&nn).unwrap()
            );
        }
        // Without the zeros the relaxed sets do alias.
        let m = IntMatrix::random(k, k, 1, 20, &mut rng);
        let nn = IntMatrix::random(k, k, 1, 20, &mut rng);
        assert_ne!(
            cu_multiply(&m, &nn, c.triple()).unwrap(),
            m.checked_mul(&nn).unwrap()
        );
    }
}

#[test]
fn closed_forms_and_guards() {
    for n in 2..=200u64 {
        let q = 2 * n * (n - 1);
        assert_eq!(formula_f(n, false).unwrap(), q.pow(3));
        assert!(formula_f(n, true).unwrap() > formula_f(n, false).unwrap());
    }
    assert!(formula_f(1, true).is_err());
    assert!(matches!(
        formula_f(1 << 20, false),
        Err(pgmm::Error::Overflow)
    ));
    assert!(build_sets(1, true).is_err());
    // The group is never enumerated for large n.
    let big = build_sets(17, true).unwrap();
    assert_eq!(big.set_size(), 545);
    assert_eq!(big.triple().group().order(), 2 * 17u64.pow(6));
}
