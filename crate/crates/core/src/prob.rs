//! Fixed-point-ratio majorants for the non-regularity probability.
//!
//! For a transitive action with point stabilizer `H`,
//! `Q(G,c) ≤ Q̂(G,c) = Σ_i |x_i^G| · fpr(x_i)^c` where the `x_i` run over
//! representatives of the classes of elements of prime order. If every class
//! satisfies `|x_i^G| ≥ B` and `Σ_i |x_i^G ∩ H| ≤ A`, then `Q̂(G,c) ≤ B (A/B)^c`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::classes::{conjugacy_classes, ConjugacyClass};
use crate::coset::fpr_via_class_set;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::structure::is_prime;

#[derive(Clone, Debug)]
pub struct ProfileEntry {
    pub class: ConjugacyClass,
    /// `|x^G ∩ H|`.
    pub hall_hits: usize,
    /// `|x^G ∩ H| / |x^G|`.
    pub fpr: BigRational,
}

/// Classes of prime-order elements with their intersection counts against `H`.
#[derive(Clone, Debug)]
pub struct PrimeOrderProfile {
    pub entries: Vec<ProfileEntry>,
    pub subgroup_order: usize,
}

pub fn prime_order_profile(group: &Subgroup, h: &Subgroup) -> Result<PrimeOrderProfile> {
    if !h.is_subgroup_of(group) {
        return Err(Error::NotSubgroup);
    }
    let entries = conjugacy_classes(group)
        .into_iter()
        .filter(|c| is_prime(c.element_order))
        .map(|class| {
            let hall_hits = class.members.intersection(h.element_set()).count();
            let fpr = fpr_via_class_set(&class.members, h);
            ProfileEntry {
                class,
                hall_hits,
                fpr,
            }
        })
        .collect();
    Ok(PrimeOrderProfile {
        entries,
        subgroup_order: h.order(),
    })
}

impl PrimeOrderProfile {
    /// `A = Σ_i |x_i^G ∩ H|`.
    pub fn hall_mass(&self) -> usize {
        self.entries.iter().map(|e| e.hall_hits).sum()
    }

    /// `B = min_i |x_i^G|`, or `None` when the group has no elements of prime order.
    pub fn min_class_size(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.class.size).min()
    }

    /// Number of elements of prime order.
    pub fn prime_order_elements(&self) -> usize {
        self.entries.iter().map(|e| e.class.size).sum()
    }

    /// `Q̂(G,c)`.
    pub fn q_hat(&self, c: u32) -> BigRational {
        self.entries
            .iter()
            .map(|e| BigRational::from_integer(BigInt::from(e.class.size)) * pow(&e.fpr, c))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// `B (A/B)^c` with `A` and `B` taken from this profile; zero when there are no prime-order classes.
    pub fn class_mass_bound(&self, c: u32) -> BigRational {
        match self.min_class_size() {
            Some(b) => class_mass_bound(&BigUint::from(self.hall_mass()), &BigUint::from(b), c)
                .expect("class sizes are positive"),
            None => BigRational::zero(),
        }
    }

    /// Emits `Base_H(G) ≤ c` when `Q̂(G,c) < 1`.
    pub fn conclude_base_bound(&self, c: u32) -> Option<BaseBound> {
        (self.q_hat(c) < BigRational::one()).then_some(BaseBound { at_most: c })
    }

    /// Least `c` in `1..=max_c` with `Q̂(G,c) < 1`.
    pub fn concluded_c(&self, max_c: u32) -> Option<u32> {
        (1..=max_c).find(|&c| self.conclude_base_bound(c).is_some())
    }
}

/// Assertion `Base_H(G) ≤ at_most` derived from the majorant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BaseBound {
    pub at_most: u32,
}

fn pow(x: &BigRational, c: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..c {
        acc *= x;
    }
    acc
}

/// `Q̂(G,c)` for `H ≤ G`.
pub fn q_hat(group: &Subgroup, h: &Subgroup, c: u32) -> Result<BigRational> {
    if c == 0 {
        return Err(Error::InvalidArgument("c must be at least 1".into()));
    }
    Ok(prime_order_profile(group, h)?.q_hat(c))
}

/// `B (A/B)^c = A^c / B^(c-1)`.
pub fn class_mass_bound(a: &BigUint, b: &BigUint, c: u32) -> Result<BigRational> {
    if b.is_zero() {
        return Err(Error::InvalidArgument("B must be positive".into()));
    }
    let b = BigRational::from_integer(BigInt::from(b.clone()));
    let ratio = BigRational::from_integer(BigInt::from(a.clone())) / &b;
    Ok(b * pow(&ratio, c))
}

/// Emits `Base_H(G) ≤ c` when `Q̂(G,c) < 1`; absence of a conclusion is not an error.
pub fn conclude_base_bound(group: &Subgroup, h: &Subgroup, c: u32) -> Result<Option<BaseBound>> {
    Ok(prime_order_profile(group, h)?.conclude_base_bound(c))
}
