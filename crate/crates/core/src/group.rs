//! Fully enumerated permutation groups and their subgroups.
//!
//! A [`PermutationGroup`] stores every element in lexicographic order of its
//! image sequence, so an element is identified by its index and index order is
//! the canonical order (the identity is always index 0). A [`Subgroup`] is a
//! bitset over those indices, which makes intersection, equality and hashing
//! cheap enough for the base-size searches.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of elements produced by closure enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 1 << 21;

/// Element set of a subgroup: bit `i` set iff ambient element `i` is a member.
pub type ElementSet = FixedBitSet;

pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    inverses: Vec<u32>,
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .field("order", &self.elements.len())
            .finish()
    }
}

/// Enumerates `⟨generators⟩` by closure under right multiplication.
pub fn generate_elements(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Arc<PermutationGroup>> {
    PermutationGroup::generate(degree, generators, cap)
}

impl PermutationGroup {
    pub fn generate(degree: usize, generators: &[Permutation], cap: usize) -> Result<Arc<Self>> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::BadPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        Ok(Arc::new(PermutationGroup {
            degree,
            generators: generators.to_vec(),
            elements,
            index,
            inverses,
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    #[inline]
    pub fn element(&self, idx: u32) -> &Permutation {
        &self.elements[idx as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn require_index(&self, p: &Permutation) -> Result<u32> {
        self.index_of(p)
            .ok_or_else(|| Error::ElementNotInAmbient(p.to_string()))
    }

    pub const IDENTITY: u32 = 0;

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.index[&self.element(a).then(self.element(b))]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// Index of `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        let p = self
            .element(self.inv(g))
            .then(self.element(x))
            .then(self.element(g));
        self.index[&p]
    }

    pub fn pow(&self, x: u32, mut e: u64) -> u32 {
        let mut base = x;
        let mut acc = Self::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, idx: u32) -> u64 {
        self.element(idx).order()
    }

    pub fn empty_set(&self) -> ElementSet {
        FixedBitSet::with_capacity(self.order())
    }

    /// The whole group as a subgroup of itself.
    pub fn full(self: &Arc<Self>) -> Subgroup {
        let mut set = self.empty_set();
        set.insert_range(..);
        let gens = self
            .generators
            .iter()
            .map(|g| self.index[g])
            .filter(|&g| g != Self::IDENTITY)
            .collect();
        Subgroup::with_generators(self.clone(), set, gens)
    }

    pub fn trivial(self: &Arc<Self>) -> Subgroup {
        let mut set = self.empty_set();
        set.insert(Self::IDENTITY as usize);
        Subgroup::with_generators(self.clone(), set, Vec::new())
    }

    /// Closure of the given element indices under multiplication.
    pub fn closure(&self, gens: &[u32]) -> ElementSet {
        let mut set = self.empty_set();
        set.insert(Self::IDENTITY as usize);
        let mut queue = VecDeque::from([Self::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y as usize) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn subgroup_generated(self: &Arc<Self>, gens: &[u32]) -> Subgroup {
        let set = self.closure(gens);
        let gens = gens
            .iter()
            .copied()
            .filter(|&g| g != Self::IDENTITY)
            .collect();
        Subgroup::with_generators(self.clone(), set, gens)
    }

    /// Subgroup generated by permutations, each of which must lie in the group.
    pub fn subgroup_from_perms(self: &Arc<Self>, perms: &[Permutation]) -> Result<Subgroup> {
        let gens = perms
            .iter()
            .map(|p| self.require_index(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_generated(&gens))
    }

    pub fn conjugate_set(&self, set: &ElementSet, g: u32) -> ElementSet {
        let ginv = self.element(self.inv(g));
        let gp = self.element(g);
        let mut out = self.empty_set();
        for h in set.ones() {
            let p = ginv.then(self.element(h as u32)).then(gp);
            out.insert(self.index[&p] as usize);
        }
        out
    }
}

/// A subgroup of an enumerated ambient group.
#[derive(Clone)]
pub struct Subgroup {
    ambient: Arc<PermutationGroup>,
    elements: ElementSet,
    order: usize,
    generators: OnceLock<Vec<u32>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order)
            .field("generators", &self.generator_perms())
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn with_generators(ambient: Arc<PermutationGroup>, elements: ElementSet, gens: Vec<u32>) -> Self {
        let order = elements.count_ones(..);
        let generators = OnceLock::new();
        let _ = generators.set(gens);
        Subgroup {
            ambient,
            elements,
            order,
            generators,
        }
    }

    /// Wraps an element set already known to be a subgroup.
    pub fn from_set_unchecked(ambient: Arc<PermutationGroup>, elements: ElementSet) -> Self {
        let order = elements.count_ones(..);
        Subgroup {
            ambient,
            elements,
            order,
            generators: OnceLock::new(),
        }
    }

    /// Wraps an element set after checking that it contains the identity and
    /// is closed under products.
    pub fn from_set(ambient: Arc<PermutationGroup>, elements: ElementSet) -> Result<Self> {
        if !elements.contains(PermutationGroup::IDENTITY as usize) {
            return Err(Error::NotSubgroup);
        }
        let members: Vec<u32> = elements.ones().map(|i| i as u32).collect();
        for &a in &members {
            for &b in &members {
                if !elements.contains(ambient.mul(a, b) as usize) {
                    return Err(Error::NotSubgroup);
                }
            }
        }
        Ok(Self::from_set_unchecked(ambient, elements))
    }

    pub fn ambient(&self) -> &Arc<PermutationGroup> {
        &self.ambient
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn element_set(&self) -> &ElementSet {
        &self.elements
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.elements.ones().map(|i| i as u32)
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.elements.contains(idx as usize)
    }

    pub fn contains_perm(&self, p: &Permutation) -> bool {
        self.ambient
            .index_of(p)
            .is_some_and(|i| self.contains(i))
    }

    pub fn same_ambient(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient)
    }

    fn check_ambient(&self, other: &Subgroup) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_ambient(other) && self.elements.is_subset(&other.elements)
    }

    /// Generator indices; computed greedily from the element set when the
    /// subgroup was not built from generators.
    pub fn generators(&self) -> &[u32] {
        self.generators.get_or_init(|| {
            let mut gens = Vec::new();
            let mut span = self.ambient.closure(&gens);
            for x in self.elements() {
                if !span.contains(x as usize) {
                    gens.push(x);
                    span = self.ambient.closure(&gens);
                    if span.count_ones(..) == self.order {
                        break;
                    }
                }
            }
            gens
        })
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators()
            .iter()
            .map(|&g| self.ambient.element(g).clone())
            .collect()
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(other)?;
        let mut set = self.elements.clone();
        set.intersect_with(&other.elements);
        Ok(Subgroup::from_set_unchecked(self.ambient.clone(), set))
    }

    /// `g⁻¹ H g` for an ambient element index `g`.
    pub fn conjugate(&self, g: u32) -> Subgroup {
        let set = self.ambient.conjugate_set(&self.elements, g);
        Subgroup::from_set_unchecked(self.ambient.clone(), set)
    }

    /// Lexicographically least representatives of the right cosets `Hx` of
    /// `self` in `group`, in increasing order, together with the coset number
    /// of every ambient element of `group` (`u32::MAX` outside `group`).
    pub fn right_transversal(&self, group: &Subgroup) -> (Vec<u32>, Vec<u32>) {
        let amb = &self.ambient;
        let mut coset_of = vec![u32::MAX; amb.order()];
        let mut reps = Vec::new();
        let members: Vec<u32> = self.elements().collect();
        for x in group.elements() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            let xp = amb.element(x);
            for &h in &members {
                let y = amb.index[&amb.element(h).then(xp)];
                coset_of[y as usize] = id;
            }
        }
        (reps, coset_of)
    }

    /// `N_group(self)`.
    pub fn normalizer_in(&self, group: &Subgroup) -> Subgroup {
        let amb = &self.ambient;
        let gens = self.generators().to_vec();
        let mut set = amb.empty_set();
        for g in group.elements() {
            if gens.iter().all(|&h| self.contains(amb.conj(h, g))) {
                set.insert(g as usize);
            }
        }
        Subgroup::from_set_unchecked(amb.clone(), set)
    }

    pub fn is_normal_in(&self, group: &Subgroup) -> bool {
        let amb = &self.ambient;
        let gens = self.generators();
        group
            .generators()
            .iter()
            .all(|&g| gens.iter().all(|&h| self.contains(amb.conj(h, g))))
    }

    /// `H_G`: intersection of the conjugates of `self` over a right transversal in `group`.
    pub fn core_in(&self, group: &Subgroup) -> Subgroup {
        let (reps, _) = self.right_transversal(group);
        let mut acc = self.elements.clone();
        for &t in &reps {
            if t == PermutationGroup::IDENTITY {
                continue;
            }
            let c = self.ambient.conjugate_set(&self.elements, t);
            acc.intersect_with(&c);
            if acc.count_ones(..) == 1 {
                break;
            }
        }
        Subgroup::from_set_unchecked(self.ambient.clone(), acc)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| {
            gens[i + 1..]
                .iter()
                .all(|&b| self.ambient.mul(a, b) == self.ambient.mul(b, a))
        })
    }
}

/// `A ∩ B` for subgroups of the same ambient group.
pub fn subgroup_intersection(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    a.intersection(b)
}

/// `H^g = g⁻¹ H g`; `g` must lie in the ambient group.
pub fn conjugate_subgroup(h: &Subgroup, g: &Permutation) -> Result<Subgroup> {
    let idx = h.ambient().require_index(g)?;
    Ok(h.conjugate(idx))
}

/// The normal core `H_G` of `h` in `group`.
pub fn core(group: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    if !h.is_subgroup_of(group) {
        return Err(Error::NotSubgroup);
    }
    Ok(h.core_in(group))
}
