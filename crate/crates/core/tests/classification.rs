use suq_core::certificate::DEFAULT_BUDGET;
use suq_core::classifier::{classify, classify_text, condition_check, sweep, Report, Verdict};
use suq_core::weights::{SimpleSubset, Weight};

#[test]
fn phi4_at_rank_seven_is_exceptional() {
    let s = sweep(7, 7, 1, &[], DEFAULT_BUDGET).unwrap();
    let phi4 = s
        .reports
        .iter()
        .find(|r| r.input == vec![0, 0, 0, 1, 0, 0, 0])
        .unwrap();
    assert!(phi4.theorem1_member);
    assert_eq!(phi4.verdict, Verdict::CandidateSmooth);
    assert_eq!(phi4.theorem2_annotation, "polar (φ₄, r=7)");
}

#[test]
fn middle_fundamentals_at_rank_eight_are_not_smooth() {
    let s = sweep(8, 8, 1, &[], DEFAULT_BUDGET).unwrap();
    for j in 3..=6 {
        let rep = s.reports.iter().find(|r| r.input[j - 1] == 1).unwrap();
        assert_eq!(rep.verdict, Verdict::NotSmooth, "phi_{j}");
        assert!(rep.certificate.as_ref().unwrap().verify().is_ok());
    }
}

#[test]
fn rank_up_to_six_candidates() {
    let s = sweep(2, 6, 2, &[], DEFAULT_BUDGET).unwrap();
    assert_eq!(s.summary.unresolved, 0);
    let got: Vec<&str> = s.summary.candidates.iter().map(String::as_str).collect();
    let expected = [
        "2:1,0",
        "2:2,0",
        "2:1,1",
        "3:1,0,0",
        "3:0,1,0",
        "3:2,0,0",
        "3:1,0,1",
        "3:0,2,0",
        "4:1,0,0,0",
        "4:0,1,0,0",
        "4:2,0,0,0",
        "4:1,0,0,1",
        "5:1,0,0,0,0",
        "5:0,1,0,0,0",
        "5:0,0,1,0,0",
        "5:2,0,0,0,0",
        "5:1,0,0,0,1",
        "6:1,0,0,0,0,0",
        "6:0,1,0,0,0,0",
        "6:2,0,0,0,0,0",
        "6:1,0,0,0,0,1",
    ];
    let mut g = got.clone();
    g.sort_unstable();
    let mut e = expected.to_vec();
    e.sort_unstable();
    assert_eq!(g, e);
}

#[test]
fn reports_survive_serialization() {
    for (r, text) in [
        (3, "1,1,1"),
        (6, "0,0,1,0,0,0"),
        (4, "0,1,0,1"),
        (5, "0,0,1,0,0"),
    ] {
        let rep = classify_text(r, text, DEFAULT_BUDGET).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.reverify().unwrap(), rep.verdict);
    }
}

#[test]
fn tampered_certificate_fails_reverification() {
    let mut rep = classify(6, &Weight::fundamental(7, 3)).unwrap();
    let cert = rep.certificate.as_mut().unwrap();
    cert.counts.lambda_outside += 1;
    assert!(rep.reverify().is_err());
}

#[test]
fn condition_examples() {
    let c = condition_check(&Weight::fundamental(7, 1), &SimpleSubset::interval(1, 4)).unwrap();
    assert!(c.con2);
    assert!(!c.con1);
    let c = condition_check(&Weight::fundamental(9, 4), &SimpleSubset::interval(1, 6)).unwrap();
    assert!(!c.con1);
}
