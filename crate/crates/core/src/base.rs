//! Exact base sizes, regular orbit counts and non-regularity probabilities.
//!
//! `Base_H(G)` is found by a breadth-first search over the distinct subgroups
//! `H ∩ H^{x_2} ∩ … ∩ H^{x_k}`; level `k` holds every such `k`-fold
//! intersection, so the first level containing `H_G` gives the exact minimum.
//! Regular tuples are counted by a depth-first extension over pointwise
//! stabilizers, memoised on (stabilizer, remaining length) and bulk-counted
//! once the stabilizer reaches the kernel.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coset::CosetSpace;
use crate::error::{Error, Result};
use crate::group::{ElementSet, PermutationGroup};
use crate::perm::Permutation;

/// Default number of elementary stabilizer intersections allowed per call.
pub const DEFAULT_WORK_BUDGET: u64 = 100_000_000;

/// Counts elementary intersection steps against a fixed limit.
#[derive(Clone, Debug)]
pub struct WorkBudget {
    limit: u64,
    used: u64,
}

impl WorkBudget {
    pub fn new(limit: u64) -> Self {
        WorkBudget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn charge(&mut self, steps: u64) -> Result<()> {
        self.used += steps;
        if self.used > self.limit {
            Err(Error::WorkBudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget::new(DEFAULT_WORK_BUDGET)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub level: u32,
    pub distinct_intersections: usize,
    pub smallest_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCertificate {
    pub base: u32,
    /// `x_2, …, x_k` with `H ∩ H^{x_2} ∩ … ∩ H^{x_k} = H_G`.
    pub witnesses: Vec<Permutation>,
    /// One summary per level below `base`; none of those intersections is the kernel.
    pub minimality: Vec<LevelSummary>,
}

/// Distinct point stabilizers `H^x` with the least representative `x` for each.
fn distinct_stabilizers(space: &CosetSpace) -> Vec<(&ElementSet, u32)> {
    let mut seen: HashMap<&ElementSet, ()> = HashMap::new();
    let mut out = Vec::new();
    for (i, s) in space.point_stabilizers().iter().enumerate() {
        if seen.insert(s, ()).is_none() {
            out.push((s, space.representatives()[i]));
        }
    }
    out
}

struct BfsOutcome {
    base: u32,
    witnesses: Vec<u32>,
    levels: Vec<LevelSummary>,
}

fn bfs(space: &CosetSpace, budget: &mut WorkBudget) -> Result<BfsOutcome> {
    let kernel = space.kernel().element_set();
    let stabilizers = distinct_stabilizers(space);
    let mut level: BTreeMap<ElementSet, Vec<u32>> = BTreeMap::new();
    level.insert(space.stabilizer().element_set().clone(), Vec::new());
    let mut levels = Vec::new();
    let mut k = 1u32;
    loop {
        if let Some(w) = level.get(kernel) {
            return Ok(BfsOutcome {
                base: k,
                witnesses: w.clone(),
                levels,
            });
        }
        levels.push(LevelSummary {
            level: k,
            distinct_intersections: level.len(),
            smallest_order: level.keys().map(|s| s.count_ones(..)).min().unwrap_or(0),
        });
        let mut next: BTreeMap<ElementSet, Vec<u32>> = BTreeMap::new();
        for (set, witnesses) in &level {
            budget.charge(stabilizers.len() as u64)?;
            for &(stab, x) in &stabilizers {
                let mut meet = set.clone();
                meet.intersect_with(stab);
                next.entry(meet).or_insert_with(|| {
                    let mut w = witnesses.clone();
                    w.push(x);
                    w
                });
            }
        }
        // The kernel is an intersection of at most |Ω| point stabilizers.
        assert!(
            (k as usize) <= space.num_points(),
            "base search failed to reach the kernel"
        );
        level = next;
        k += 1;
    }
}

/// Exact `Base_H(G)` with witnesses.
pub fn base_size(space: &CosetSpace, budget: &mut WorkBudget) -> Result<BaseCertificate> {
    let outcome = bfs(space, budget)?;
    let amb = space.group().ambient();
    Ok(BaseCertificate {
        base: outcome.base,
        witnesses: outcome
            .witnesses
            .iter()
            .map(|&x| amb.element(x).clone())
            .collect(),
        minimality: outcome.levels,
    })
}

struct RegularCounter<'a> {
    space: &'a CosetSpace,
    stabilizers: Vec<&'a ElementSet>,
    kernel_order: usize,
    n: BigUint,
    memo: HashMap<(ElementSet, u32), BigUint>,
}

impl RegularCounter<'_> {
    fn count(&mut self, stab: &ElementSet, remaining: u32, budget: &mut WorkBudget) -> Result<BigUint> {
        if stab.count_ones(..) == self.kernel_order {
            return Ok(self.n.pow(remaining));
        }
        if remaining == 0 {
            return Ok(BigUint::zero());
        }
        let key = (stab.clone(), remaining);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        budget.charge(self.stabilizers.len() as u64)?;
        let mut children: BTreeMap<ElementSet, u64> = BTreeMap::new();
        for s in &self.stabilizers {
            let mut meet = stab.clone();
            meet.intersect_with(s);
            *children.entry(meet).or_insert(0) += 1;
        }
        let mut total = BigUint::zero();
        for (child, mult) in children {
            total += self.count(&child, remaining - 1, budget)? * mult;
        }
        self.memo.insert(key, total.clone());
        Ok(total)
    }
}

/// Number of `m`-tuples of points whose pointwise stabilizer is the kernel.
pub fn regular_tuple_count(space: &CosetSpace, m: u32, budget: &mut WorkBudget) -> Result<BigUint> {
    let mut counter = RegularCounter {
        space,
        stabilizers: space.point_stabilizers().iter().collect(),
        kernel_order: space.kernel().order(),
        n: BigUint::from(space.num_points()),
        memo: HashMap::new(),
    };
    let whole = counter.space.group().element_set().clone();
    counter.count(&whole, m, budget)
}

/// `Reg_H(G, m)`: regular orbits of `G/H_G` on `Ω^m`.
pub fn regular_orbit_count(space: &CosetSpace, m: u32, budget: &mut WorkBudget) -> Result<BigUint> {
    let tuples = regular_tuple_count(space, m, budget)?;
    let quotient = BigUint::from(space.group().order() / space.kernel().order());
    debug_assert!((&tuples % &quotient).is_zero());
    Ok(tuples / quotient)
}

/// `Q(G, c)`: probability that a uniformly random `c`-tuple is not regular.
pub fn q_exact(space: &CosetSpace, c: u32, budget: &mut WorkBudget) -> Result<BigRational> {
    let regular = regular_tuple_count(space, c, budget)?;
    let total = BigUint::from(space.num_points()).pow(c);
    Ok(BigRational::one() - BigRational::new(regular.into(), total.into()))
}

/// Re-derives the certificate: witnesses lie in `G` and cut `H` down to `H_G`,
/// no shorter tuple is regular, and the per-level summaries match a fresh search.
pub fn verify_certificate(space: &CosetSpace, cert: &BaseCertificate) -> bool {
    if cert.base == 0 || cert.witnesses.len() + 1 != cert.base as usize {
        return false;
    }
    let group = space.group();
    let amb = group.ambient();
    let mut meet = space.stabilizer().element_set().clone();
    for w in &cert.witnesses {
        let Some(idx) = amb.index_of(w) else {
            return false;
        };
        if !group.contains(idx) {
            return false;
        }
        meet.intersect_with(&amb.conjugate_set(space.stabilizer().element_set(), idx));
    }
    if &meet != space.kernel().element_set() {
        return false;
    }
    let mut budget = WorkBudget::default();
    if cert.base > 1 {
        match regular_tuple_count(space, cert.base - 1, &mut budget) {
            Ok(n) if n.is_zero() => {}
            _ => return false,
        }
    }
    match bfs(space, &mut budget) {
        Ok(outcome) => outcome.base == cert.base && outcome.levels == cert.minimality,
        Err(_) => false,
    }
}

impl BaseCertificate {
    /// Witnesses as ambient element indices, with `1` prepended for `H` itself.
    pub fn conjugators(&self, group: &PermutationGroup) -> Option<Vec<u32>> {
        std::iter::once(Some(PermutationGroup::IDENTITY))
            .chain(self.witnesses.iter().map(|w| group.index_of(w)))
            .collect()
    }
}
