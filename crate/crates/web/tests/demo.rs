use hallbase_web::{case_names, case_report_json, fpr_table_json, majorant_curve_json};

fn parse(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn every_bundled_case_is_listed() {
    assert_eq!(case_names().len(), 12);
    assert_eq!(case_names()[0], "sym3-transposition");
}

#[test]
fn g2_curve_crosses_one_between_two_and_three() {
    let v = parse(&majorant_curve_json("G2", 2, 10).unwrap());
    assert_eq!(v["certified"], true);
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 9);
    assert_eq!(points[0]["below_one"], false);
    assert!(points[0]["log10_value"].as_f64().unwrap() > 0.0);
    assert!(points[1..].iter().all(|p| p["below_one"] == true));
}

#[test]
fn e8_curve_log_scale_is_finite_for_large_q() {
    let v = parse(&majorant_curve_json("E8", 2, 400).unwrap());
    let last = v["points"].as_array().unwrap().last().unwrap()["log10_value"].as_f64().unwrap();
    // (q+1)^16 2^28 / q^112 at q = 400 is about 10^-241.
    assert!(last < -230.0 && last > -250.0, "{last}");
}

#[test]
fn curve_rejects_bad_input() {
    assert!(majorant_curve_json("B2", 2, 5).is_err());
    assert!(majorant_curve_json("E8", 1, 5).is_err());
    assert!(majorant_curve_json("E8", 5, 4).is_err());
}

#[test]
fn sl32_case_report() {
    let v = parse(&case_report_json("sl32-line", 5).unwrap());
    assert_eq!(v["base"]["base"], 3);
    assert_eq!(v["base"]["reg_5"], "90");
    assert_eq!(v["base"]["q_exact_by_c"]["3"], "25/49");
    assert!(v["majorant"]["q_hat_by_c"]["5"].is_string());
}

#[test]
fn fpr_table_for_sym4() {
    let v = parse(&fpr_table_json("sym4-sylow2").unwrap());
    assert_eq!(v["all_agree"], true);
    assert_eq!(v["points"], 3);
    assert!(fpr_table_json("nope").is_err());
}
