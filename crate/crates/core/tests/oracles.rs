//! Library results against brute-force recomputation on the bundled corpus.

mod oracle;

use std::path::Path;

use hallbase::base::{base_size, q_exact, regular_tuple_count, WorkBudget};
use hallbase::classes::conjugacy_classes;
use hallbase::group::DEFAULT_ENUMERATION_CAP;
use hallbase::prob::prime_order_profile;
use hallbase::{load_corpus, CosetSpace, LoadedCase};
use num_bigint::BigUint;

use oracle::Action;

/// Work the oracle may spend on one exhaustive scan.
const ORACLE_WORK: usize = 60_000_000;

fn cases() -> Vec<LoadedCase> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    load_corpus(&dir, DEFAULT_ENUMERATION_CAP).unwrap()
}

fn oracle_for(case: &LoadedCase) -> Action {
    oracle::load(&case.group_path, &case.subgroup_path)
}

fn to_vec(p: &hallbase::Permutation) -> Vec<usize> {
    p.images().iter().map(|&i| i as usize).collect()
}

#[test]
fn coset_counts_and_kernels() {
    for case in cases() {
        let o = oracle_for(&case);
        let space = CosetSpace::new(&case.group, &case.subgroup).unwrap();
        assert_eq!(o.elements.len(), case.group.order(), "{}", case.name);
        assert_eq!(o.h.len(), case.subgroup.order(), "{}", case.name);
        assert_eq!(o.points, space.num_points(), "{}", case.name);
        assert_eq!(o.kernel_size(), space.kernel().order(), "{}", case.name);
    }
}

#[test]
fn base_sizes() {
    let mut checked = 0;
    for case in cases() {
        let o = oracle_for(&case);
        let space = CosetSpace::new(&case.group, &case.subgroup).unwrap();
        let cert = base_size(&space, &mut WorkBudget::default()).unwrap();
        let work = o.points.pow(cert.base - 1) * o.elements.len();
        if work > ORACLE_WORK {
            continue;
        }
        assert_eq!(o.base(), cert.base as usize, "{}", case.name);
        checked += 1;
    }
    assert!(checked >= 10, "only {checked} cases small enough");
}

#[test]
fn regular_tuples_and_q() {
    let mut checked = 0;
    for case in cases() {
        let o = oracle_for(&case);
        let space = CosetSpace::new(&case.group, &case.subgroup).unwrap();
        let mut budget = WorkBudget::default();
        for m in 1..=5u32 {
            if o.points.pow(m) * o.elements.len() > ORACLE_WORK {
                break;
            }
            let lib = regular_tuple_count(&space, m, &mut budget).unwrap();
            assert_eq!(lib, BigUint::from(o.regular_tuples(m as usize)), "{} m={m}", case.name);
            assert_eq!(q_exact(&space, m, &mut budget).unwrap(), o.q(m as usize), "{} c={m}", case.name);
            checked += 1;
        }
    }
    assert!(checked >= 30, "only {checked} (case, m) pairs small enough");
}

#[test]
fn fixed_point_ratios_per_class() {
    for case in cases() {
        let o = oracle_for(&case);
        let space = CosetSpace::new(&case.group, &case.subgroup).unwrap();
        let index: std::collections::HashMap<&Vec<usize>, usize> =
            o.elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let classes = conjugacy_classes(&case.group);
        let total: usize = classes.iter().map(|c| c.size).sum();
        assert_eq!(total, case.group.order(), "{}", case.name);
        for class in classes {
            let x = to_vec(&class.representative);
            assert_eq!(o.class(&x).len(), class.size, "{} {}", case.name, class.representative);
            let g = index[&x];
            let lib = space.fpr_of_index(class.rep_index);
            assert_eq!(lib, o.fpr(g), "{} {}", case.name, class.representative);
            assert_eq!(lib, o.fpr_by_class(&x), "{} {}", case.name, class.representative);
        }
    }
}

#[test]
fn majorant_and_hall_mass() {
    for case in cases() {
        let o = oracle_for(&case);
        let profile = prime_order_profile(&case.group, &case.subgroup).unwrap();
        let classes = o.prime_classes();
        assert_eq!(profile.entries.len(), classes.len(), "{}", case.name);
        let mass: usize = classes.values().map(|&(_, hits)| hits).sum();
        assert_eq!(profile.hall_mass(), mass, "{}", case.name);
        let min_size = classes.values().map(|&(size, _)| size).min();
        assert_eq!(profile.min_class_size(), min_size, "{}", case.name);
        for c in 1..=5 {
            assert_eq!(profile.q_hat(c), o.q_hat(c), "{} c={c}", case.name);
        }
    }
}
