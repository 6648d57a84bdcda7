use braidcurve_core::{BraidWord, BranchParam};
use braidcurve_monodromy::*;

fn cfg() -> TrackConfig {
    TrackConfig::default()
}

fn branch(m: u32, n: u32, higher: &[u32]) -> BranchParam {
    BranchParam::monomials(m, n, higher).unwrap()
}

fn battery(w: &BraidWord) -> braidcurve_core::InvariantBattery {
    w.closure_invariants().battery()
}

#[test]
fn cusp_branch_gives_trefoil() {
    let t = track_parametric(&branch(2, 3, &[]), 0.25, &cfg()).unwrap();
    let trefoil = BraidWord::new(2, [1, 1, 1]).unwrap();
    assert_eq!(battery(&t.word), battery(&trefoil));
    assert!(positivity_check(&t, true).unwrap().passed());
    assert_eq!(t.root_permutation, vec![2, 1]);
}

#[test]
fn two_five_branch() {
    let t = track_parametric(&branch(2, 5, &[]), 0.25, &cfg()).unwrap();
    assert_eq!(t.word.exponent_sum(), 5);
    assert_eq!(t.word.closure_invariants().components, 1);
    assert_eq!(t.word.len(), 5);
}

#[test]
fn cusp_polynomial() {
    let f = PolyCurve::from_integer_terms(&[(0, 2, 1), (3, 0, -1)]).unwrap();
    let t = track_polynomial(&f, 0.5, &cfg()).unwrap();
    assert_eq!(battery(&t.word), battery(&BraidWord::new(2, [1, 1, 1]).unwrap()));
}

#[test]
fn node_polynomial_is_hopf_link() {
    let f = PolyCurve::from_integer_terms(&[(0, 2, 1), (2, 0, -1)]).unwrap();
    let t = track_polynomial(&f, 0.5, &cfg()).unwrap();
    let inv = t.word.closure_invariants();
    assert_eq!((inv.exponent_sum, inv.components), (2, 2));
    assert_eq!(inv.component_linking[0][1], 1);
    assert!(positivity_check(&t, true).unwrap().all_positive());
}

#[test]
fn constant_roots_give_identity() {
    let f = PolyCurve::from_integer_terms(&[(0, 2, 1), (0, 0, -1)]).unwrap();
    let t = track_polynomial(&f, 0.5, &cfg()).unwrap();
    assert!(t.word.is_identity());
    assert_eq!(t.word.strands(), 2);
}

#[test]
fn large_radius_can_show_negative_crossings() {
    // w² − z²(z − 1) at radius 2 encloses the extra branch point z = 1.
    let f = PolyCurve::from_integer_terms(&[(0, 2, 1), (3, 0, -1), (2, 0, 1)]).unwrap();
    let t = track_polynomial(&f, 2.0, &cfg()).unwrap();
    let report = positivity_check(&t, false).unwrap();
    assert_eq!(report.positive_crossings + report.negative_crossings, t.word.len());
    assert_eq!(report.strictly_positive, None);
}

#[test]
fn pole_inside_disk_is_rejected() {
    // (z − 1/4)·w² − 1... written with integer coefficients: (4z − 1)w² − 4
    let f = PolyCurve::from_integer_terms(&[(1, 2, 4), (0, 2, -1), (0, 0, -4)]).unwrap();
    assert!(matches!(track_polynomial(&f, 0.5, &cfg()), Err(MonodromyError::Pole { .. })));
    assert!(track_polynomial(&f, 0.125, &cfg()).is_ok());
}

#[test]
fn bad_radius_rejected() {
    assert!(matches!(track_parametric(&branch(2, 3, &[]), 0.0, &cfg()), Err(MonodromyError::BadRadius(_))));
}

#[test]
fn multi_pair_branches_match_cascade() {
    // The cone structure only sets in once |t| = ε^{1/m} is small, so the
    // eight-strand branch needs a much smaller radius.
    let branches = [
        (branch(4, 6, &[7]), 0.25),
        (branch(4, 6, &[9]), 0.25),
        (branch(6, 9, &[10]), 0.25),
        (branch(4, 10, &[11]), 0.25),
        (branch(6, 8, &[9]), 0.25),
        (branch(8, 12, &[14, 15]), 0.01),
    ];
    for (b, radius) in branches {
        let cascade = battery(&b.cascade_braid().unwrap());
        for eps in [radius, radius / 2.0] {
            let t = track_parametric(&b, eps, &cfg()).unwrap();
            assert_eq!(battery(&t.word), cascade, "{b} at radius {eps}");
            assert!(positivity_check(&t, true).unwrap().passed());
        }
    }
}

#[test]
fn oracle_validates_cascades() {
    let oracle = ParametricOracle::new(0.25);
    let b = branch(4, 6, &[7]);
    assert_eq!(b.validated_cascade(&oracle).unwrap().pairs(), &[(2, 3), (2, 13)]);
}

#[test]
fn theta_and_refinement_do_not_change_battery() {
    let b = branch(4, 6, &[7]);
    let base = track_parametric(&b, 0.25, &cfg()).unwrap();
    for theta in [0.3, 1.1, 2.5] {
        let c = TrackConfig { theta: Some(theta), initial_samples: 512, ..cfg() };
        let t = track_parametric(&b, 0.25, &c).unwrap();
        assert_eq!(battery(&t.word), battery(&base.word), "theta = {theta}");
    }
}

#[test]
fn runs_are_deterministic() {
    let f = PolyCurve::from_integer_terms(&[(0, 3, 1), (2, 0, -1), (4, 1, 1)]).unwrap();
    let a = track_polynomial(&f, 0.5, &cfg()).unwrap();
    let b = track_polynomial(&f, 0.5, &cfg()).unwrap();
    assert_eq!(a, b);
}
