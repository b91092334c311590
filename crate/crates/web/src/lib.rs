//! Browser bindings: majorant curves for the exceptional families, and base and
//! fixed-point-ratio reports for the bundled corpus cases.
//!
//! Every export returns a JSON string. The `*_json` functions carry the logic
//! and are what the native tests call.

use std::path::{Path, PathBuf};

use hallbase::base::WorkBudget;
use hallbase::group::DEFAULT_ENUMERATION_CAP;
use hallbase::io::{parse_manifest, GroupFile};
use hallbase::report::{base_report, fpr_report, prob_report};
use hallbase::symbolic::{family_case, spot_check, verify_family, Family, Verdict};
use hallbase::LoadedCase;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use wasm_bindgen::prelude::*;

const MANIFEST: &str = include_str!("../../../corpus/manifest.txt");

const FILES: &[(&str, &str)] = &[
    ("sym3.group", include_str!("../../../corpus/sym3.group")),
    ("sym3_transposition.group", include_str!("../../../corpus/sym3_transposition.group")),
    ("sym3_a3.group", include_str!("../../../corpus/sym3_a3.group")),
    ("sym4.group", include_str!("../../../corpus/sym4.group")),
    ("sym4_sylow2.group", include_str!("../../../corpus/sym4_sylow2.group")),
    ("sym4_sylow3.group", include_str!("../../../corpus/sym4_sylow3.group")),
    ("dih8.group", include_str!("../../../corpus/dih8.group")),
    ("dih8_reflection.group", include_str!("../../../corpus/dih8_reflection.group")),
    ("sl32.group", include_str!("../../../corpus/sl32.group")),
    ("sl32_line.group", include_str!("../../../corpus/sl32_line.group")),
    ("sl32_plane.group", include_str!("../../../corpus/sl32_plane.group")),
    ("sl33.group", include_str!("../../../corpus/sl33.group")),
    ("sl33_line.group", include_str!("../../../corpus/sl33_line.group")),
    ("sl33_plane.group", include_str!("../../../corpus/sl33_plane.group")),
    ("sl33_borel.group", include_str!("../../../corpus/sl33_borel.group")),
    ("sl33_unipotent.group", include_str!("../../../corpus/sl33_unipotent.group")),
    ("sl42.group", include_str!("../../../corpus/sl42.group")),
    ("sl42_2space.group", include_str!("../../../corpus/sl42_2space.group")),
];

fn file(path: &Path) -> Result<&'static str, String> {
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| format!("{name} is not bundled"))
}

fn load_case(name: &str) -> Result<LoadedCase, String> {
    let entries = parse_manifest(MANIFEST, Path::new(""), "manifest.txt").map_err(|e| e.to_string())?;
    let entry = entries
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| format!("unknown case {name:?}"))?;
    let origin = |p: &PathBuf| p.display().to_string();
    let ambient = GroupFile::parse(file(&entry.group)?, &origin(&entry.group))
        .and_then(|g| g.build(DEFAULT_ENUMERATION_CAP))
        .map_err(|e| e.to_string())?;
    let subgroup = GroupFile::parse(file(&entry.subgroup)?, &origin(&entry.subgroup))
        .and_then(|h| h.subgroup_of(&ambient, &origin(&entry.subgroup)))
        .map_err(|e| e.to_string())?;
    Ok(LoadedCase {
        name: entry.name,
        group_path: entry.group,
        subgroup_path: entry.subgroup,
        pi: entry.pi,
        group: ambient.full(),
        subgroup,
    })
}

/// `log10 |n|` for big integers that may not fit in an `f64`.
fn log10_big(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_string().trim_start_matches('-').parse::<f64>().unwrap_or(0.0).log10();
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    (top.to_string().trim_start_matches('-').parse::<f64>().unwrap_or(1.0)).log10()
        + shift as f64 * std::f64::consts::LOG10_2
}

fn log10_ratio(r: &BigRational) -> f64 {
    log10_big(r.numer()) - log10_big(r.denom())
}

#[derive(Serialize)]
struct CurvePoint {
    q: i64,
    log10_value: f64,
    below_one: bool,
}

#[derive(Serialize)]
struct Curve {
    family: String,
    c: u32,
    q_min: i64,
    certified: bool,
    shift_base: Option<i64>,
    points: Vec<CurvePoint>,
}

/// `log10` of the assembled majorant `A^c / B^(c-1)` for `q` in `q_from..=q_to`.
pub fn majorant_curve_json(family: &str, q_from: i64, q_to: i64) -> Result<String, String> {
    let family: Family = family.parse().map_err(|e: hallbase::Error| e.to_string())?;
    if q_from < 2 || q_to < q_from || q_to - q_from > 500 {
        return Err("need 2 <= from <= to <= from + 500".into());
    }
    let case = family_case(family);
    let report = verify_family(family).map_err(|e| e.to_string())?;
    let shift_base = report
        .certificates()
        .filter(|c| c.verdict == Verdict::Holds)
        .filter_map(|c| c.q0)
        .max();
    let points = (q_from..=q_to)
        .map(|q| {
            let s = spot_check(&case, q);
            CurvePoint {
                q,
                log10_value: log10_ratio(&s.value),
                below_one: s.below_one,
            }
        })
        .collect();
    let curve = Curve {
        family: family.name().to_string(),
        c: case.c,
        q_min: case.q_min,
        certified: report.verdict,
        shift_base,
        points,
    };
    serde_json::to_string(&curve).map_err(|e| e.to_string())
}

/// Base size with witnesses, `Reg(5)`, `Q(G,c)` and the majorant chain for one bundled case.
pub fn case_report_json(name: &str, max_c: u32) -> Result<String, String> {
    if !(1..=5).contains(&max_c) {
        return Err("c must be between 1 and 5".into());
    }
    let case = load_case(name)?;
    let (base, _) = base_report(&case, max_c, &mut WorkBudget::default()).map_err(|e| e.to_string())?;
    let prob = prob_report(&case, max_c).map_err(|e| e.to_string())?;
    serde_json::to_string(&serde_json::json!({ "case": name, "base": base, "majorant": prob }))
        .map_err(|e| e.to_string())
}

/// Fixed-point ratio of every conjugacy class of a bundled case, counted two ways.
pub fn fpr_table_json(name: &str) -> Result<String, String> {
    let case = load_case(name)?;
    let report = fpr_report(&case).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Names of the bundled cases, in manifest order.
pub fn case_names() -> Vec<String> {
    parse_manifest(MANIFEST, Path::new(""), "manifest.txt")
        .map(|es| es.into_iter().map(|e| e.name).collect())
        .unwrap_or_default()
}

#[wasm_bindgen(js_name = caseNames)]
pub fn case_names_js() -> String {
    serde_json::to_string(&case_names()).unwrap_or_default()
}

#[wasm_bindgen(js_name = majorantCurve)]
pub fn majorant_curve(family: &str, q_from: i32, q_to: i32) -> Result<String, JsError> {
    majorant_curve_json(family, q_from.into(), q_to.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = caseReport)]
pub fn case_report(name: &str, max_c: u32) -> Result<String, JsError> {
    case_report_json(name, max_c).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = fprTable)]
pub fn fpr_table(name: &str) -> Result<String, JsError> {
    fpr_table_json(name).map_err(|e| JsError::new(&e))
}
