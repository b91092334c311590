//! The action of `G` on the right cosets of `H` by right multiplication.
//!
//! Points are numbered by the lexicographically least element of each coset,
//! in increasing order, so point 0 is `H` itself.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::classes::class_of;
use crate::error::{Error, Result};
use crate::group::{ElementSet, Subgroup};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct CosetSpace {
    group: Subgroup,
    stabilizer: Subgroup,
    kernel: Subgroup,
    representatives: Vec<u32>,
    coset_of: Vec<u32>,
    point_stabilizers: Vec<ElementSet>,
}

/// Builds the action of `group` on the right cosets of `h`.
pub fn build_coset_space(group: &Subgroup, h: &Subgroup) -> Result<CosetSpace> {
    CosetSpace::new(group, h)
}

impl CosetSpace {
    pub fn new(group: &Subgroup, h: &Subgroup) -> Result<Self> {
        if !h.is_subgroup_of(group) {
            return Err(Error::NotSubgroup);
        }
        let amb = group.ambient();
        let (representatives, coset_of) = h.right_transversal(group);
        // Stab(Hx) = H^x
        let point_stabilizers: Vec<ElementSet> = representatives
            .iter()
            .map(|&x| amb.conjugate_set(h.element_set(), x))
            .collect();
        let mut kernel = h.element_set().clone();
        for s in &point_stabilizers {
            kernel.intersect_with(s);
        }
        Ok(CosetSpace {
            group: group.clone(),
            stabilizer: h.clone(),
            kernel: Subgroup::from_set_unchecked(amb.clone(), kernel),
            representatives,
            coset_of,
            point_stabilizers,
        })
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn stabilizer(&self) -> &Subgroup {
        &self.stabilizer
    }

    /// `H_G`, the kernel of the action.
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn num_points(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[u32] {
        &self.representatives
    }

    /// Stabilizer in `G` of point `i`, i.e. `H^x` for the representative `x`.
    pub fn point_stabilizer(&self, i: usize) -> &ElementSet {
        &self.point_stabilizers[i]
    }

    pub fn point_stabilizers(&self) -> &[ElementSet] {
        &self.point_stabilizers
    }

    /// Image of point `i` under the group element with ambient index `g`.
    pub fn image(&self, i: usize, g: u32) -> usize {
        let amb = self.group.ambient();
        self.coset_of[amb.mul(self.representatives[i], g) as usize] as usize
    }

    /// The permutation of the points induced by `g`.
    pub fn action_of_index(&self, g: u32) -> Permutation {
        let images = (0..self.num_points())
            .map(|i| self.image(i, g) as u32)
            .collect();
        Permutation::from_images(images).expect("right multiplication permutes cosets")
    }

    fn index_in_group(&self, x: &Permutation) -> Result<u32> {
        let idx = self.group.ambient().require_index(x)?;
        if !self.group.contains(idx) {
            return Err(Error::ElementNotInAmbient(x.to_string()));
        }
        Ok(idx)
    }

    pub fn action(&self, x: &Permutation) -> Result<Permutation> {
        Ok(self.action_of_index(self.index_in_group(x)?))
    }

    pub fn fix_count_of_index(&self, g: u32) -> usize {
        (0..self.num_points()).filter(|&i| self.image(i, g) == i).count()
    }

    pub fn fix_count(&self, x: &Permutation) -> Result<usize> {
        Ok(self.fix_count_of_index(self.index_in_group(x)?))
    }

    pub fn fpr_of_index(&self, g: u32) -> BigRational {
        BigRational::new(
            BigInt::from(self.fix_count_of_index(g)),
            BigInt::from(self.num_points()),
        )
    }

    /// `|fix(x)| / |Ω|`.
    pub fn fpr(&self, x: &Permutation) -> Result<BigRational> {
        Ok(self.fpr_of_index(self.index_in_group(x)?))
    }
}

/// `|x^G ∩ H| / |x^G|`.
pub fn fpr_via_class(group: &Subgroup, h: &Subgroup, x: &Permutation) -> Result<BigRational> {
    let idx = group.ambient().require_index(x)?;
    if !group.contains(idx) {
        return Err(Error::ElementNotInAmbient(x.to_string()));
    }
    Ok(fpr_via_class_set(&class_of(group, idx), h))
}

/// `|x^G ∩ H| / |x^G|` for a class given as an element set.
pub fn fpr_via_class_set(class: &ElementSet, h: &Subgroup) -> BigRational {
    let size = class.count_ones(..);
    let hits = class.intersection(h.element_set()).count();
    BigRational::new(BigInt::from(hits), BigInt::from(size))
}
