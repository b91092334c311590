//! Property suite run over corpus cases.
//!
//! Group-level checks (abelian intersections inside `F(G)`, three Sylow
//! subgroups meeting in `O_p(G)`) run once per distinct group; case-level
//! checks cover the Hall property and its heredity, the fixed-point-ratio
//! identity, the probability chain, the Hall mass bound and the regular-orbit
//! consequences of small base size.

use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::base::{base_size, q_exact, regular_orbit_count, verify_certificate, WorkBudget, DEFAULT_WORK_BUDGET};
use crate::classes::conjugacy_classes;
use crate::corpus::LoadedCase;
use crate::coset::{fpr_via_class_set, CosetSpace};
use crate::error::Result;
use crate::group::{ElementSet, PermutationGroup, Subgroup};
use crate::prob::prime_order_profile;
use crate::structure::{derived_subgroup, fitting_subgroup, is_hall, is_solvable, o_p, prime_divisors, sylow_subgroup, PrimeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub property: String,
    pub status: Status,
    pub detail: String,
}

impl PropertyResult {
    fn new(property: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        PropertyResult {
            property: property.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skip(property: impl Into<String>, detail: impl Into<String>) -> Self {
        PropertyResult {
            property: property.into(),
            status: Status::Skip,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubjectResults {
    pub subject: String,
    pub results: Vec<PropertyResult>,
}

impl SubjectResults {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn get(&self, property: &str) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.property == property)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub groups: Vec<SubjectResults>,
    pub cases: Vec<SubjectResults>,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct PropertyConfig {
    pub abelian_samples: usize,
    pub seed: u64,
    pub max_c: u32,
    pub budget: u64,
}

impl Default for PropertyConfig {
    fn default() -> Self {
        PropertyConfig {
            abelian_samples: 20,
            seed: 0x5eed,
            max_c: 5,
            budget: DEFAULT_WORK_BUDGET,
        }
    }
}

/// Random abelian subgroups `⟨a⟩` or `⟨a, b⟩` with `b` centralizing `a`.
pub fn sample_abelian_subgroups(group: &Subgroup, count: usize, seed: u64) -> Vec<Subgroup> {
    let amb = group.ambient();
    let elements: Vec<u32> = group.elements().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = elements[rng.gen_range(0..elements.len())];
            let mut gens = vec![a];
            if rng.gen_bool(0.5) {
                let centralizer: Vec<u32> = elements
                    .iter()
                    .copied()
                    .filter(|&b| amb.mul(a, b) == amb.mul(b, a))
                    .collect();
                gens.push(centralizer[rng.gen_range(0..centralizer.len())]);
            }
            let sub = amb.subgroup_generated(&gens);
            debug_assert!(sub.is_abelian());
            sub
        })
        .collect()
}

/// Least `x ∈ G` with `A ∩ A^x ≤ fitting`.
pub fn abelian_intersection_witness(group: &Subgroup, a: &Subgroup, fitting: &Subgroup) -> Option<u32> {
    let amb = group.ambient();
    group.elements().find(|&x| {
        let mut meet = amb.conjugate_set(a.element_set(), x);
        meet.intersect_with(a.element_set());
        meet.is_subset(fitting.element_set())
    })
}

/// `x, y` with `P ∩ P^x ∩ P^y = O_p(G)` for a Sylow `p`-subgroup `P`.
pub fn three_sylow_witness(group: &Subgroup, p: u64) -> Result<Option<(u32, u32)>> {
    let amb = group.ambient();
    let sylow = sylow_subgroup(group, p)?;
    let radical = o_p(group, p)?;
    let target = radical.element_set();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut conjugates: Vec<(u32, ElementSet)> = Vec::new();
    for x in group.elements() {
        let mut meet = amb.conjugate_set(sylow.element_set(), x);
        if !seen.insert(meet.clone()) {
            continue;
        }
        conjugates.push((x, meet.clone()));
        meet.intersect_with(sylow.element_set());
        if &meet == target {
            return Ok(Some((x, PermutationGroup::IDENTITY)));
        }
    }
    for (i, (x, px)) in conjugates.iter().enumerate() {
        let mut pair = px.clone();
        pair.intersect_with(sylow.element_set());
        for (y, py) in &conjugates[i + 1..] {
            let mut triple = pair.clone();
            triple.intersect_with(py);
            if &triple == target {
                return Ok(Some((*x, *y)));
            }
        }
    }
    Ok(None)
}

/// Normal subgroups on which Hall heredity is tested, with labels.
pub fn heredity_subgroups(group: &Subgroup, h: &Subgroup) -> Result<Vec<(String, Subgroup)>> {
    let amb = group.ambient();
    let mut out: Vec<(String, Subgroup)> = vec![("core(H)".into(), h.core_in(group))];
    for p in prime_divisors(group.order() as u64) {
        out.push((format!("O_{p}(G)"), o_p(group, p)?));
    }
    out.push(("F(G)".into(), fitting_subgroup(group)));
    out.push(("G'".into(), derived_subgroup(group)));
    out.push(("1".into(), amb.trivial()));
    out.push(("G".into(), group.clone()));
    let mut seen = HashSet::new();
    out.retain(|(_, s)| seen.insert(s.element_set().clone()));
    Ok(out)
}

/// `H ∩ A` is a π-Hall subgroup of each listed normal subgroup `A`.
pub fn hall_heredity(group: &Subgroup, h: &Subgroup, pi: &PrimeSet) -> Result<Vec<(String, bool)>> {
    Ok(heredity_subgroups(group, h)?
        .into_iter()
        .map(|(label, a)| {
            debug_assert!(a.is_normal_in(group));
            let meet = h.intersection(&a).expect("same ambient");
            (label, is_hall(&a, &meet, pi))
        })
        .collect())
}

pub fn group_properties(name: &str, group: &Subgroup, cfg: &PropertyConfig) -> Result<SubjectResults> {
    let amb = group.ambient();
    let mut results = Vec::new();

    let fitting = fitting_subgroup(group);
    let samples = sample_abelian_subgroups(group, cfg.abelian_samples, cfg.seed);
    let missing: Vec<String> = samples
        .iter()
        .filter(|a| abelian_intersection_witness(group, a, &fitting).is_none())
        .map(|a| format!("{:?}", a.generator_perms().iter().map(|p| p.to_string()).collect::<Vec<_>>()))
        .collect();
    results.push(PropertyResult::new(
        "abelian-intersection",
        missing.is_empty() && samples.len() >= cfg.abelian_samples,
        if missing.is_empty() {
            format!("{} abelian subgroups, each A ∩ A^x ≤ F(G) for some x (|F(G)| = {})", samples.len(), fitting.order())
        } else {
            format!("no witness for {}", missing.join(", "))
        },
    ));

    for p in prime_divisors(group.order() as u64) {
        let witness = three_sylow_witness(group, p)?;
        let radical = o_p(group, p)?.order();
        results.push(PropertyResult::new(
            format!("three-sylow p={p}"),
            witness.is_some(),
            match witness {
                Some((x, y)) => format!(
                    "P ∩ P^x ∩ P^y = O_{p}(G) of order {radical} with x = {}, y = {}",
                    amb.element(x),
                    amb.element(y)
                ),
                None => format!("no pair of conjugates reaches O_{p}(G) of order {radical}"),
            },
        ));
    }
    Ok(SubjectResults {
        subject: name.to_string(),
        results,
    })
}

fn fmt_cs(cs: &[u32]) -> String {
    cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

pub fn case_properties(case: &LoadedCase, cfg: &PropertyConfig) -> Result<SubjectResults> {
    let (group, h) = (&case.group, &case.subgroup);
    let mut budget = WorkBudget::new(cfg.budget);
    let mut results = Vec::new();

    match &case.pi {
        Some(pi) => {
            let hall = is_hall(group, h, pi);
            let solvable = is_solvable(h);
            results.push(PropertyResult::new(
                "hall",
                hall && solvable,
                format!("|H| = {}, |G:H| = {}, pi = {pi}, hall = {hall}, solvable = {solvable}", h.order(), group.order() / h.order()),
            ));
            if hall {
                let checks = hall_heredity(group, h, pi)?;
                let bad: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.as_str()).collect();
                results.push(PropertyResult::new(
                    "hall-heredity",
                    bad.is_empty(),
                    if bad.is_empty() {
                        format!(
                            "H ∩ A is Hall in A for A in {}",
                            checks.iter().map(|(l, _)| l.as_str()).collect::<Vec<_>>().join(", ")
                        )
                    } else {
                        format!("fails for {}", bad.join(", "))
                    },
                ));
            } else {
                results.push(PropertyResult::skip("hall-heredity", "H is not Hall"));
            }
        }
        None => {
            results.push(PropertyResult::skip("hall", "pair not declared Hall"));
            results.push(PropertyResult::skip("hall-heredity", "pair not declared Hall"));
        }
    }

    let space = CosetSpace::new(group, h)?;
    let classes = conjugacy_classes(group);
    let mismatched: Vec<String> = classes
        .iter()
        .filter(|c| space.fpr_of_index(c.rep_index) != fpr_via_class_set(&c.members, h))
        .map(|c| c.representative.to_string())
        .collect();
    results.push(PropertyResult::new(
        "fpr-identity",
        mismatched.is_empty(),
        if mismatched.is_empty() {
            format!("{} classes agree", classes.len())
        } else {
            format!("mismatch at {}", mismatched.join(", "))
        },
    ));

    let cert = base_size(&space, &mut budget)?;
    results.push(PropertyResult::new(
        "base-certificate",
        verify_certificate(&space, &cert),
        format!("base {} with {} witnesses", cert.base, cert.witnesses.len()),
    ));

    let profile = prime_order_profile(group, h)?;
    let mut q = Vec::new();
    for c in 1..=cfg.max_c {
        q.push(q_exact(&space, c, &mut budget)?);
    }
    let chain_bad: Vec<u32> = (1..=cfg.max_c)
        .filter(|&c| {
            let qe = &q[c as usize - 1];
            let qh = profile.q_hat(c);
            !(qe <= &qh && qh <= profile.class_mass_bound(c))
        })
        .collect();
    results.push(PropertyResult::new(
        "q-chain",
        chain_bad.is_empty(),
        if chain_bad.is_empty() {
            format!("Q <= Q^ <= B(A/B)^c for c = 1..{}", cfg.max_c)
        } else {
            format!("fails for c = {}", fmt_cs(&chain_bad))
        },
    ));

    let concluded: Vec<u32> = (1..=cfg.max_c)
        .filter(|&c| profile.q_hat(c) < BigRational::one())
        .collect();
    let wrong: Vec<u32> = concluded.iter().copied().filter(|&c| cert.base > c).collect();
    results.push(PropertyResult::new(
        "majorant-conclusion",
        wrong.is_empty(),
        if concluded.is_empty() {
            format!("Q^ >= 1 for c = 1..{}", cfg.max_c)
        } else if wrong.is_empty() {
            format!("Q^ < 1 for c in {{{}}}, base {} within each", fmt_cs(&concluded), cert.base)
        } else {
            format!("Q^ < 1 but base {} > c for c = {}", cert.base, fmt_cs(&wrong))
        },
    ));

    let first_below = (1..=cfg.max_c).find(|&c| q[c as usize - 1] < BigRational::one());
    let consistent = match first_below {
        Some(c) => c == cert.base,
        None => cert.base > cfg.max_c,
    };
    results.push(PropertyResult::new(
        "base-definition",
        consistent,
        format!("least c with Q < 1: {first_below:?}, base {}", cert.base),
    ));

    if h.order() > 1 {
        let a = profile.hall_mass();
        results.push(PropertyResult::new(
            "hall-mass",
            a < h.order(),
            format!("A = {a}, |H| = {}", h.order()),
        ));
    } else {
        results.push(PropertyResult::skip("hall-mass", "H is trivial"));
    }

    let mut regs = Vec::new();
    for m in 1..=5u32 {
        regs.push(regular_orbit_count(&space, m, &mut budget)?);
    }
    let monotone = regs.windows(2).all(|w| w[0].is_zero() || !w[1].is_zero());
    let below_base_zero = regs
        .iter()
        .enumerate()
        .all(|(i, r)| (i as u32 + 1) >= cert.base || r.is_zero());
    results.push(PropertyResult::new(
        "regular-orbits",
        monotone && below_base_zero,
        format!(
            "Reg(m) for m = 1..5: {}",
            regs.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
        ),
    ));

    let reg5 = &regs[4];
    if space.num_points() < 2 {
        results.push(PropertyResult::skip("small-base-regular-orbits", "action on a single point"));
    } else if cert.base <= 4 {
        results.push(PropertyResult::new(
            "small-base-regular-orbits",
            reg5 >= &5u32.into(),
            format!("base {} <= 4, Reg(5) = {reg5}", cert.base),
        ));
    } else {
        results.push(PropertyResult::skip(
            "small-base-regular-orbits",
            format!("base {} > 4", cert.base),
        ));
    }

    Ok(SubjectResults {
        subject: case.name.clone(),
        results,
    })
}

/// Group-level checks once per distinct group, then case-level checks in order.
pub fn run_properties(cases: &[LoadedCase], cfg: &PropertyConfig) -> Result<PropertyReport> {
    let mut groups = Vec::new();
    let mut seen = HashSet::new();
    for case in cases {
        if seen.insert(case.group_path.clone()) {
            groups.push(group_properties(&case.group_name(), &case.group, cfg)?);
        }
    }
    let cases = cases
        .iter()
        .map(|c| case_properties(c, cfg))
        .collect::<Result<Vec<_>>>()?;
    let passed = groups.iter().chain(&cases).all(SubjectResults::passed);
    Ok(PropertyReport { groups, cases, passed })
}

impl PropertyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in self.groups.iter().chain(&self.cases) {
            out += &format!("{}\n", s.subject);
            for r in &s.results {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                out += &format!("  {tag} {}: {}\n", r.property, r.detail);
            }
        }
        out += if self.passed { "all properties hold\n" } else { "some properties FAILED\n" };
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ENUMERATION_CAP;
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn sym4() -> Arc<PermutationGroup> {
        let gens = ["(1 2)", "(1 2 3 4)"].map(|c| Permutation::parse_cycles(4, c).unwrap());
        PermutationGroup::generate(4, &gens, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn sym4_three_sylow() {
        let g = sym4();
        let (x, y) = three_sylow_witness(&g.full(), 2).unwrap().unwrap();
        let p = sylow_subgroup(&g.full(), 2).unwrap();
        let meet = p
            .intersection(&p.conjugate(x))
            .unwrap()
            .intersection(&p.conjugate(y))
            .unwrap();
        assert_eq!(meet.order(), 4);
        assert!(three_sylow_witness(&g.full(), 3).unwrap().is_some());
    }

    #[test]
    fn abelian_samples_are_abelian_and_seeded() {
        let g = sym4();
        let a = sample_abelian_subgroups(&g.full(), 20, 7);
        let b = sample_abelian_subgroups(&g.full(), 20, 7);
        assert_eq!(a.len(), 20);
        assert!(a.iter().all(Subgroup::is_abelian));
        assert!(a.iter().zip(&b).all(|(x, y)| x == y));
        let f = fitting_subgroup(&g.full());
        assert_eq!(f.order(), 4);
        assert!(a.iter().all(|s| abelian_intersection_witness(&g.full(), s, &f).is_some()));
    }

    #[test]
    fn heredity_in_sym4() {
        let g = sym4();
        let p = sylow_subgroup(&g.full(), 2).unwrap();
        let pi: PrimeSet = "2".parse().unwrap();
        let checks = hall_heredity(&g.full(), &p, &pi).unwrap();
        assert!(checks.iter().all(|(_, ok)| *ok));
        let labels: Vec<_> = checks.iter().map(|(l, _)| l.as_str()).collect();
        // core(H) = O_2 = F = V4; A4 = G'
        assert_eq!(labels, vec!["core(H)", "O_3(G)", "G'", "G"]);
    }
}
