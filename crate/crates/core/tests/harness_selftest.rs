use suq_core::props::{verify_est, verify_with, Bounds, Prop};

const BOUNDS: Bounds = Bounds {
    max_n: 6,
    coord_bound: 3,
    height_bound: 4,
};

/// Smallest tightening of each claimed bound that the scan notices on `BOUNDS`.
const GAPS: [(Prop, i64); 11] = [
    (Prop::Cmb1, 1),
    (Prop::Cmb2, 2),
    (Prop::Est, 1),
    (Prop::La2, 1),
    (Prop::Elst, 1),
    (Prop::Esn, 5),
    (Prop::Es2n, 1),
    (Prop::Ampl, 1),
    (Prop::Eson, 2),
    (Prop::Lah, 6),
    (Prop::Lah1, 6),
];

#[test]
fn every_prop_has_a_detectable_tightening() {
    for (prop, gap) in GAPS {
        let below = verify_with(prop, &BOUNDS, gap - 1).unwrap();
        let at = verify_with(prop, &BOUNDS, gap).unwrap();
        assert!(
            below.counterexamples.is_empty(),
            "{prop} already fails at slack {}",
            gap - 1
        );
        assert!(
            !at.counterexamples.is_empty(),
            "{prop} shows nothing at slack {gap}"
        );
        assert!(at.counterexamples.iter().all(|c| c.prop == prop));
    }
}

#[test]
fn off_by_one_is_caught_where_the_bound_is_attained() {
    for (prop, gap) in GAPS.iter().filter(|(_, g)| *g == 1) {
        let r = verify_with(*prop, &BOUNDS, 1).unwrap();
        assert!(!r.counterexamples.is_empty(), "{prop} at slack {gap}");
    }
}

#[test]
fn fabricated_est_violation_names_the_root() {
    assert!(verify_est(6, 3).is_empty());
    let r = verify_with(Prop::Est, &BOUNDS, 1).unwrap();
    assert!(r
        .counterexamples
        .iter()
        .any(|c| c.observed == 2 * c.n as u128 - 2));
}
