use cosmetic_core::{
    check_report, evaluate_construction, scan_meridians, scan_type_iv, Classification, LensSpace,
    Slope,
};

fn slope(a: i64, b: i64) -> Slope {
    Slope::new(a, b).unwrap()
}

#[test]
fn scan_finds_the_l49_pair() {
    let reports = scan_meridians(49, 49).unwrap();
    let hit = reports
        .iter()
        .find(|r| {
            r.meridian1 == slope(18, 49)
                && r.meridian2 == slope(19, 49)
                && r.outer == Slope::MERIDIAN
        })
        .expect("18/49, 19/49 with outer 1/0");
    assert_eq!(hit.dist, 49);
    assert_eq!(hit.classification, Classification::Reflectively);
    assert_eq!(hit.fill1, LensSpace::new(49, 30).unwrap());

    assert!(reports.iter().all(|r| r.dist <= 49));
    assert!(reports
        .windows(2)
        .all(|w| (w[0].dist, w[0].meridian1, w[0].meridian2)
            <= (w[1].dist, w[1].meridian1, w[1].meridian2)));
}

#[test]
fn checker_accepts_every_streamed_report() {
    for r in scan_meridians(12, 8).unwrap() {
        check_report(&r).unwrap_or_else(|e| panic!("{r:?}: {e}"));
        assert!(r.classification != Classification::Neither);
    }
    for r in scan_type_iv(40).unwrap() {
        check_report(&r).unwrap_or_else(|e| panic!("{r:?}: {e}"));
        assert_eq!(r.family_is_non_example, Some(true));
        assert!(r.classification.is_reflective());
    }
    for r in evaluate_construction(slope(18, 49), slope(19, 49)).unwrap() {
        check_report(&r).unwrap();
    }
}

#[test]
fn reports_round_trip_through_json() {
    for r in evaluate_construction(slope(18, 49), slope(19, 49)).unwrap() {
        let line = serde_json::to_string(&r).unwrap();
        let back: cosmetic_core::CandidateReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }
}
