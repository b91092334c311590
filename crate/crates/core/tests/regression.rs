//! Exact values frozen after the first full computation over the bundled corpus.

use std::path::Path;

use hallbase::base::{base_size, q_exact, regular_orbit_count, WorkBudget};
use hallbase::group::DEFAULT_ENUMERATION_CAP;
use hallbase::{load_corpus, CosetSpace};

/// `(case, base, Reg(5))`.
const FROZEN: &[(&str, u32, u64)] = &[
    ("sym3-transposition", 2, 40),
    ("sym3-a3", 1, 16),
    ("sym4-sylow2", 2, 40),
    ("sym4-sylow3", 2, 1360),
    ("dih8-reflection", 2, 120),
    ("sl32-line", 3, 90),
    ("sl32-plane", 3, 90),
    ("sl33-line", 4, 35),
    ("sl33-plane", 4, 35),
    ("sl33-borel", 3, 63325),
    ("sl33-unipotent", 2, 69180160),
    ("sl42-2space", 4, 1917),
];

/// `(case, c, Q(G,c))`.
const FROZEN_Q: &[(&str, u32, &str)] = &[
    ("sym3-transposition", 2, "1/3"),
    ("sl32-line", 3, "25/49"),
    ("sl32-line", 4, "79/343"),
    ("sl32-line", 5, "241/2401"),
    ("sl33-line", 4, "1765/2197"),
    ("sl42-2space", 4, "27323/42875"),
    ("sl42-2space", 5, "396433/1500625"),
];

#[test]
fn frozen_values() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let cases = load_corpus(&dir, DEFAULT_ENUMERATION_CAP).unwrap();
    assert_eq!(cases.len(), FROZEN.len());
    for case in &cases {
        let space = CosetSpace::new(&case.group, &case.subgroup).unwrap();
        let mut budget = WorkBudget::default();
        let &(_, base, reg) = FROZEN.iter().find(|f| f.0 == case.name).expect("case is frozen");
        assert_eq!(base_size(&space, &mut budget).unwrap().base, base, "{}", case.name);
        assert_eq!(regular_orbit_count(&space, 5, &mut budget).unwrap(), reg.into(), "{}", case.name);
        for &(_, c, q) in FROZEN_Q.iter().filter(|f| f.0 == case.name) {
            assert_eq!(q_exact(&space, c, &mut budget).unwrap().to_string(), q, "{} c={c}", case.name);
        }
    }
}
