//! Hall, Sylow and Fitting machinery on enumerated groups.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{PermutationGroup, Subgroup};

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// A finite set of primes, π.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet(BTreeSet<u64>);

impl PrimeSet {
    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(PrimeSet(set))
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.contains(&p)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    /// True iff every prime divisor of `n` is in the set.
    pub fn divides_only(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|p| self.contains(p))
    }

    /// True iff no prime divisor of `n` is in the set.
    pub fn coprime_to(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|p| !self.contains(p))
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(s: PrimeSet) -> Vec<u64> {
        s.0.into_iter().collect()
    }
}

impl FromStr for PrimeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let primes = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad prime {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PrimeSet::new(primes)
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `H` is a π-Hall subgroup of `group`: `|H|` is a π-number and `|group:H|` a π'-number.
pub fn is_hall(group: &Subgroup, h: &Subgroup, pi: &PrimeSet) -> bool {
    if !h.is_subgroup_of(group) {
        return false;
    }
    let order = h.order() as u64;
    let index = (group.order() / h.order()) as u64;
    pi.divides_only(order) && pi.coprime_to(index)
}

/// Derived subgroup: normal closure in `h` of the commutators of its generators.
pub fn derived_subgroup(h: &Subgroup) -> Subgroup {
    let amb = h.ambient();
    let gens = h.generators().to_vec();
    let mut comm_gens = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            // [a, b] = a⁻¹ b⁻¹ a b
            let c = amb.mul(amb.mul(amb.inv(a), amb.inv(b)), amb.mul(a, b));
            if c != PermutationGroup::IDENTITY {
                comm_gens.push(c);
            }
        }
    }
    let mut span = amb.closure(&comm_gens);
    loop {
        let mut grown = false;
        'scan: for &n in comm_gens.clone().iter() {
            for &g in &gens {
                let c = amb.conj(n, g);
                if !span.contains(c as usize) {
                    comm_gens.push(c);
                    span = amb.closure(&comm_gens);
                    grown = true;
                    break 'scan;
                }
            }
        }
        if !grown {
            break;
        }
    }
    amb.subgroup_generated(&comm_gens)
}

pub fn is_solvable(h: &Subgroup) -> bool {
    let mut current = h.clone();
    loop {
        if current.is_trivial() {
            return true;
        }
        let next = derived_subgroup(&current);
        if next.order() == current.order() {
            return false;
        }
        current = next;
    }
}

/// A Sylow `p`-subgroup of `group`.
///
/// Starts from a cyclic subgroup of largest `p`-power order and repeatedly
/// adjoins an element of its normalizer whose `p`-th power falls inside it.
pub fn sylow_subgroup(group: &Subgroup, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let amb = group.ambient();
    let target = p_part(group.order() as u64, p) as usize;
    if target == 1 {
        return Ok(amb.trivial());
    }
    let is_p_power = |mut n: u64| {
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    };
    let start = group
        .elements()
        .filter(|&x| x != PermutationGroup::IDENTITY)
        .map(|x| (amb.element_order(x), x))
        .filter(|&(o, _)| is_p_power(o))
        .max_by_key(|&(o, x)| (o, std::cmp::Reverse(x)))
        .map(|(_, x)| x)
        .expect("Cauchy: an element of order p exists");
    let mut gens = vec![start];
    let mut sylow = amb.subgroup_generated(&gens);
    while sylow.order() < target {
        let normalizer = sylow.normalizer_in(group);
        let g = normalizer
            .elements()
            .find(|&g| !sylow.contains(g) && sylow.contains(amb.pow(g, p)))
            .expect("p divides the index of a non-Sylow p-subgroup in its normalizer");
        gens.push(g);
        sylow = amb.subgroup_generated(&gens);
    }
    debug_assert_eq!(sylow.order(), target);
    Ok(sylow)
}

/// `O_p(G)`, the core of a Sylow `p`-subgroup.
pub fn o_p(group: &Subgroup, p: u64) -> Result<Subgroup> {
    Ok(sylow_subgroup(group, p)?.core_in(group))
}

/// Fitting subgroup: the product of the `O_p(G)` over primes dividing `|G|`.
pub fn fitting_subgroup(group: &Subgroup) -> Subgroup {
    let amb = group.ambient();
    let mut gens = Vec::new();
    for p in prime_divisors(group.order() as u64) {
        let op = o_p(group, p).expect("p is prime");
        gens.extend_from_slice(op.generators());
    }
    amb.subgroup_generated(&gens)
}

/// `O_π(G)` computed as the core of a π-Hall subgroup.
pub fn o_pi(group: &Subgroup, h: &Subgroup, pi: &PrimeSet) -> Result<Subgroup> {
    if !is_hall(group, h, pi) {
        return Err(Error::NotHall(pi.to_string()));
    }
    Ok(h.core_in(group))
}

/// True iff every Sylow subgroup is normal.
pub fn is_nilpotent(h: &Subgroup) -> bool {
    prime_divisors(h.order() as u64).into_iter().all(|p| {
        sylow_subgroup(h, p)
            .map(|s| s.is_normal_in(h))
            .unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ENUMERATION_CAP;
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn group(degree: usize, gens: &[&str]) -> Arc<PermutationGroup> {
        let gens: Vec<_> = gens
            .iter()
            .map(|c| Permutation::parse_cycles(degree, c).unwrap())
            .collect();
        PermutationGroup::generate(degree, &gens, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    fn sub(g: &Arc<PermutationGroup>, gens: &[&str]) -> Subgroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|c| Permutation::parse_cycles(g.degree(), c).unwrap())
            .collect();
        g.subgroup_from_perms(&gens).unwrap()
    }

    fn pi(s: &str) -> PrimeSet {
        s.parse().unwrap()
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(13) && is_prime(7919));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(91));
        assert_eq!(factorize(5616), vec![(2, 4), (3, 3), (13, 1)]);
        assert_eq!(p_part(20160, 2), 64);
        assert!(PrimeSet::new([2, 4]).is_err());
        assert_eq!(pi("3, 2").to_string(), "{2,3}");
        assert!(pi("").is_empty());
    }

    #[test]
    fn hall_in_sym3() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        let g = s3.full();
        assert!(is_hall(&g, &sub(&s3, &["(1 2 3)"]), &pi("3")));
        assert!(!is_hall(&g, &sub(&s3, &["(1 2)"]), &pi("2,3")));
        assert!(is_hall(&g, &sub(&s3, &["(1 2)"]), &pi("2")));
    }

    #[test]
    fn solvability() {
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(is_solvable(&s4.full()));
        let sl32 = group(7, &["(1 2 3 4 5 6 7)", "(2 3)(4 7)"]);
        assert!(!is_solvable(&sl32.full()));
        assert_eq!(derived_subgroup(&sl32.full()).order(), 168);
        assert_eq!(derived_subgroup(&s4.full()).order(), 12);
        let trivial = s4.trivial();
        assert!(is_solvable(&trivial));
    }

    #[test]
    fn sylows() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(sylow_subgroup(&s3.full(), 3).unwrap(), sub(&s3, &["(1 2 3)"]));
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(sylow_subgroup(&s4.full(), 2).unwrap().order(), 8);
        assert!(sylow_subgroup(&s4.full(), 5).unwrap().is_trivial());
        assert!(sylow_subgroup(&s4.full(), 4).is_err());
        let sl32 = group(7, &["(1 2 3 4 5 6 7)", "(2 3)(4 7)"]);
        assert_eq!(sylow_subgroup(&sl32.full(), 7).unwrap().order(), 7);
        assert_eq!(sylow_subgroup(&sl32.full(), 2).unwrap().order(), 8);
    }

    #[test]
    fn fitting() {
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        let v4 = sub(&s4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(fitting_subgroup(&s4.full()), v4);
        let sl32 = group(7, &["(1 2 3 4 5 6 7)", "(2 3)(4 7)"]);
        assert!(fitting_subgroup(&sl32.full()).is_trivial());
        let d8 = group(4, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(fitting_subgroup(&d8.full()), d8.full());
        assert!(is_nilpotent(&d8.full()));
        assert!(!is_nilpotent(&s4.full()));
    }

    #[test]
    fn o_pi_cases() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        let a3 = sub(&s3, &["(1 2 3)"]);
        assert_eq!(o_pi(&s3.full(), &a3, &pi("3")).unwrap(), a3);
        let t = sub(&s3, &["(1 2)"]);
        assert!(o_pi(&s3.full(), &t, &pi("2")).unwrap().is_trivial());
        assert!(matches!(o_pi(&s3.full(), &t, &pi("2,3")), Err(Error::NotHall(_))));
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        let p = sylow_subgroup(&s4.full(), 2).unwrap();
        let v4 = sub(&s4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(o_pi(&s4.full(), &p, &pi("2")).unwrap(), v4);
    }
}
