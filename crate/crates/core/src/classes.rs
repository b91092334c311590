//! Conjugacy classes of an enumerated group.

use std::collections::VecDeque;

use crate::group::{ElementSet, Subgroup};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    /// Ambient index of the representative (the least member).
    pub rep_index: u32,
    pub size: usize,
    pub element_order: u64,
    pub members: ElementSet,
}

/// `x^G` as an element set.
pub fn class_of(group: &Subgroup, x: u32) -> ElementSet {
    let amb = group.ambient();
    let gens = group.generators();
    let mut set = amb.empty_set();
    set.insert(x as usize);
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        for &g in gens {
            let z = amb.conj(y, g);
            if !set.put(z as usize) {
                queue.push_back(z);
            }
        }
    }
    set
}

/// Partition of `group` into conjugacy classes, ordered by least member.
pub fn conjugacy_classes(group: &Subgroup) -> Vec<ConjugacyClass> {
    let amb = group.ambient();
    let mut assigned = amb.empty_set();
    let mut classes = Vec::new();
    for x in group.elements() {
        if assigned.contains(x as usize) {
            continue;
        }
        let members = class_of(group, x);
        assigned.union_with(&members);
        classes.push(ConjugacyClass {
            representative: amb.element(x).clone(),
            rep_index: x,
            size: members.count_ones(..),
            element_order: amb.element_order(x),
            members,
        });
    }
    classes
}
