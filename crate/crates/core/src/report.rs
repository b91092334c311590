//! Serializable reports. Rationals and big integers are written as decimal
//! strings and maps are ordered, so identical inputs give identical JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::base::{base_size, q_exact, regular_orbit_count, BaseCertificate, LevelSummary, WorkBudget};
use crate::classes::conjugacy_classes;
use crate::corpus::LoadedCase;
use crate::coset::{fpr_via_class_set, CosetSpace};
use crate::error::Result;
use crate::prob::prime_order_profile;
use crate::structure::{is_hall, is_solvable};

#[derive(Clone, Debug, Serialize)]
pub struct HallCheck {
    pub pi: String,
    pub is_hall: bool,
    pub solvable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BaseReport {
    pub group: String,
    pub subgroup: String,
    pub order: usize,
    pub index: usize,
    pub kernel_order: usize,
    pub base: u32,
    pub witnesses: Vec<String>,
    pub minimality: Vec<LevelSummary>,
    pub reg_5: String,
    pub q_exact_by_c: BTreeMap<u32, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hall: Option<HallCheck>,
}

pub fn hall_check(case: &LoadedCase) -> Option<HallCheck> {
    case.pi.as_ref().map(|pi| HallCheck {
        pi: pi.to_string(),
        is_hall: is_hall(&case.group, &case.subgroup, pi),
        solvable: is_solvable(&case.subgroup),
    })
}

/// Base size, `Reg(5)` and `Q(G,c)` for `c = 1..=max_c`.
pub fn base_report(case: &LoadedCase, max_c: u32, budget: &mut WorkBudget) -> Result<(BaseReport, BaseCertificate)> {
    let space = CosetSpace::new(&case.group, &case.subgroup)?;
    let cert = base_size(&space, budget)?;
    let reg_5 = regular_orbit_count(&space, 5, budget)?;
    let mut q_exact_by_c = BTreeMap::new();
    for c in 1..=max_c {
        q_exact_by_c.insert(c, q_exact(&space, c, budget)?.to_string());
    }
    let report = BaseReport {
        group: case.group_path.display().to_string(),
        subgroup: case.subgroup_path.display().to_string(),
        order: case.group.order(),
        index: space.num_points(),
        kernel_order: space.kernel().order(),
        base: cert.base,
        witnesses: cert.witnesses.iter().map(|w| w.to_string()).collect(),
        minimality: cert.minimality.clone(),
        reg_5: reg_5.to_string(),
        q_exact_by_c,
        hall: hall_check(case),
    };
    Ok((report, cert))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub rep: String,
    pub order: u64,
    pub size: usize,
    pub hall_hits: usize,
    pub fpr: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbReport {
    pub group: String,
    pub subgroup: String,
    pub classes: Vec<ClassRow>,
    pub hall_mass: usize,
    pub min_class_size: Option<usize>,
    pub q_hat_by_c: BTreeMap<u32, String>,
    #[serde(rename = "lemma5_bound_by_c")]
    pub class_mass_bound_by_c: BTreeMap<u32, String>,
    pub concluded_c: Option<u32>,
}

/// Prime-order class profile with `Q̂(G,c)` and `B(A/B)^c` for `c = 1..=max_c`.
pub fn prob_report(case: &LoadedCase, max_c: u32) -> Result<ProbReport> {
    let profile = prime_order_profile(&case.group, &case.subgroup)?;
    Ok(ProbReport {
        group: case.group_path.display().to_string(),
        subgroup: case.subgroup_path.display().to_string(),
        classes: profile
            .entries
            .iter()
            .map(|e| ClassRow {
                rep: e.class.representative.to_string(),
                order: e.class.element_order,
                size: e.class.size,
                hall_hits: e.hall_hits,
                fpr: e.fpr.to_string(),
            })
            .collect(),
        hall_mass: profile.hall_mass(),
        min_class_size: profile.min_class_size(),
        q_hat_by_c: (1..=max_c).map(|c| (c, profile.q_hat(c).to_string())).collect(),
        class_mass_bound_by_c: (1..=max_c)
            .map(|c| (c, profile.class_mass_bound(c).to_string()))
            .collect(),
        concluded_c: profile.concluded_c(max_c),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FprRow {
    pub rep: String,
    pub order: u64,
    pub size: usize,
    pub fixed_points: usize,
    pub fpr: String,
    pub hall_hits: usize,
    pub fpr_via_class: String,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FprReport {
    pub group: String,
    pub subgroup: String,
    pub points: usize,
    pub classes: Vec<FprRow>,
    pub all_agree: bool,
}

/// Fixed-point ratio of every class, by counting fixed cosets and by class intersection.
pub fn fpr_report(case: &LoadedCase) -> Result<FprReport> {
    let space = CosetSpace::new(&case.group, &case.subgroup)?;
    let classes: Vec<FprRow> = conjugacy_classes(&case.group)
        .iter()
        .map(|c| {
            let fpr = space.fpr_of_index(c.rep_index);
            let via = fpr_via_class_set(&c.members, &case.subgroup);
            FprRow {
                rep: c.representative.to_string(),
                order: c.element_order,
                size: c.size,
                fixed_points: space.fix_count_of_index(c.rep_index),
                hall_hits: c.members.intersection(case.subgroup.element_set()).count(),
                agree: fpr == via,
                fpr: fpr.to_string(),
                fpr_via_class: via.to_string(),
            }
        })
        .collect();
    Ok(FprReport {
        group: case.group_path.display().to_string(),
        subgroup: case.subgroup_path.display().to_string(),
        points: space.num_points(),
        all_agree: classes.iter().all(|r| r.agree),
        classes,
    })
}

impl BaseReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group {} (order {}), subgroup {}", self.group, self.order, self.subgroup);
        let _ = writeln!(out, "points {}, kernel order {}", self.index, self.kernel_order);
        if let Some(h) = &self.hall {
            let _ = writeln!(out, "pi = {}: hall {}, solvable {}", h.pi, h.is_hall, h.solvable);
        }
        let _ = writeln!(out, "base {}", self.base);
        for (i, w) in self.witnesses.iter().enumerate() {
            let _ = writeln!(out, "  x{} = {w}", i + 2);
        }
        for l in &self.minimality {
            let _ = writeln!(
                out,
                "  level {}: {} distinct intersections, smallest order {}",
                l.level, l.distinct_intersections, l.smallest_order
            );
        }
        let _ = writeln!(out, "Reg(5) = {}", self.reg_5);
        for (c, q) in &self.q_exact_by_c {
            let _ = writeln!(out, "Q({c}) = {q}");
        }
        out
    }
}

impl ProbReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("group {}, subgroup {}\n", self.group, self.subgroup);
        let _ = writeln!(out, "{:<40} {:>5} {:>8} {:>6}  fpr", "representative", "order", "size", "hits");
        for c in &self.classes {
            let _ = writeln!(out, "{:<40} {:>5} {:>8} {:>6}  {}", c.rep, c.order, c.size, c.hall_hits, c.fpr);
        }
        let _ = writeln!(out, "A = {}, B = {:?}", self.hall_mass, self.min_class_size);
        for (c, q) in &self.q_hat_by_c {
            let _ = writeln!(out, "c = {c}: Q^ = {q}, B(A/B)^c = {}", self.class_mass_bound_by_c[c]);
        }
        match self.concluded_c {
            Some(c) => {
                let _ = writeln!(out, "base <= {c}");
            }
            None => out += "no conclusion\n",
        }
        out
    }
}

impl FprReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("group {}, subgroup {}, {} points\n", self.group, self.subgroup, self.points);
        let _ = writeln!(out, "{:<40} {:>5} {:>8} {:>6}  fpr  (via class)", "representative", "order", "size", "fixed");
        for c in &self.classes {
            let _ = writeln!(
                out,
                "{:<40} {:>5} {:>8} {:>6}  {}  ({}){}",
                c.rep,
                c.order,
                c.size,
                c.fixed_points,
                c.fpr,
                c.fpr_via_class,
                if c.agree { "" } else { "  MISMATCH" }
            );
        }
        out
    }
}
