use j2coh_core::invariants::{
    invariant_table, poincare_from_invariants, verify_action_commutes_with_differentials, verify_commuting_squares,
    ActionSpec, LabelStatus,
};
use j2coh_core::tables::{INVARIANT_CORNER, INVARIANT_TABLE, LABEL_CORRECTIONS, POINCARE_PREFIX};
use j2coh_core::SpectralSequence;

#[test]
fn corner_and_poincare_prefix() {
    let ss = SpectralSequence::compute(24, 1).unwrap();
    let spec = ActionSpec::c8(ss.e2_algebra().gca());
    let (n, m) = INVARIANT_CORNER;
    let t = invariant_table(&ss, &spec, n, m).unwrap();
    assert_eq!(t.nonzero_slots(), 15);
    for mm in 0..=m {
        for nn in 0..=n {
            let d = t.dim(nn, mm);
            assert!(d <= 1 || (nn, mm) == (3, 1), "({nn},{mm}) has dim {d}");
        }
    }
    assert_eq!(t.dim(3, 1), 2);
    assert!(t.consistent());
    let p = poincare_from_invariants(&ss, &spec, 12).unwrap();
    assert_eq!(p, POINCARE_PREFIX.to_vec());
}

#[test]
fn full_table_with_label_corrections() {
    let ss = SpectralSequence::compute(42, 1).unwrap();
    let spec = ActionSpec::c8(ss.e2_algebra().gca());
    let (n, m) = INVARIANT_TABLE;
    let t = invariant_table(&ss, &spec, n, m).unwrap();
    let bad: Vec<_> = t.mismatched_labels().collect();
    assert_eq!(bad.len(), LABEL_CORRECTIONS.len(), "{bad:#?}");
    for l in bad {
        assert!(matches!(l.status, LabelStatus::BidegreeMismatch { corrected_invariant: true, .. }), "{l:?}");
    }
    assert!(t.spans.iter().all(|s| s.spans), "{:?}", t.spans.iter().filter(|s| !s.spans).collect::<Vec<_>>());
    let total: usize = t.dims.iter().flatten().sum();
    let listed = j2coh_core::tables::INVARIANT_GENERATORS.len();
    assert_eq!(total, listed);
}

#[test]
fn action_commutes_with_periodicity_and_differentials() {
    for k in [1, 2] {
        let ss = SpectralSequence::compute(24, k).unwrap();
        let spec = ActionSpec::c8(ss.e2_algebra().gca());
        let squares = verify_commuting_squares(&ss, &spec).unwrap();
        assert!(!squares.is_empty());
        assert!(squares.iter().all(|s| s.commutes));
        let diffs = verify_action_commutes_with_differentials(&ss, &spec).unwrap();
        assert!(diffs.iter().any(|d| d.r == 5));
        assert!(diffs.iter().all(|d| d.commutes), "{:?}", diffs.iter().find(|d| !d.commutes));
    }
}

#[test]
fn invariant_dimensions_are_periodic() {
    let ss = SpectralSequence::compute(30, 2).unwrap();
    let spec = ActionSpec::c8(ss.e2_algebra().gca());
    let dims = j2coh_core::invariants::all_slot_invariants(&ss, &spec)
        .unwrap()
        .into_iter()
        .map(|(b, s)| (b, s.dim()))
        .collect();
    assert!(j2coh_core::invariants::invariant_periodicity_breaks(&dims).is_empty());
}
