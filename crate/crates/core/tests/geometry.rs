use srt_core::geometry::{
    hilbert_chow_model, reduction_consistency, springer_desings, symplectic_reduction, verdict, SingularLocus,
};
use srt_core::{GroupKind, GroupType, OrbitLabel, VerdictCase};

fn models(g: GroupKind, n: usize, m: usize) -> Vec<(String, usize)> {
    hilbert_chow_model(g, n, m).unwrap().models().iter().map(|b| (b.to_string(), b.total_dim())).collect()
}

#[test]
fn quotients_and_strata() {
    let q = symplectic_reduction(GroupKind::GeneralLinear, 3, 4).unwrap();
    assert_eq!(q.components.len(), 1);
    assert_eq!(q.components[0].to_string(), "gl_4 [2^2]");
    assert_eq!(q.strata.iter().map(|s| s.dim).collect::<Vec<_>>(), [0, 6, 8]);
    assert_eq!(q.singular_locus, SingularLocus::Closure(q.strata[1].label.clone()));

    let q = symplectic_reduction(GroupKind::Symplectic, 4, 6).unwrap();
    assert_eq!(q.components[0].to_string(), "so_12 [2^4,1^4]");
    assert_eq!(q.strata.iter().map(|s| s.dim).collect::<Vec<_>>(), [0, 18, 28]);

    let q = symplectic_reduction(GroupKind::Symplectic, 4, 2).unwrap();
    assert!(q.is_reducible);
    assert_eq!(q.component_dims(), [2, 2]);
}

#[test]
fn bundle_models() {
    assert_eq!(models(GroupKind::GeneralLinear, 3, 4), [("Hom(V'/T,T) over Gr(2,4)".to_string(), 8)]);
    assert_eq!(models(GroupKind::Symplectic, 2, 3), [("L2(T) over OG(2,6)".to_string(), 6)]);
    assert_eq!(models(GroupKind::Symplectic, 4, 6), [("Bl0(L2(T)) over OG(4,12)".to_string(), 28)]);
    assert_eq!(
        models(GroupKind::Symplectic, 4, 2),
        [("L2(T_I) over OG^I(2,4)".to_string(), 2), ("L2(T_II) over OG^II(2,4)".to_string(), 2)]
    );
    assert!(!hilbert_chow_model(GroupKind::GeneralLinear, 2, 3).unwrap().is_known());
}

#[test]
fn springer_models() {
    let gl5 = OrbitLabel::two_nilpotent(GroupType::gl(5), 2, None).unwrap();
    let names: Vec<String> = springer_desings(&gl5).unwrap().iter().map(|b| b.to_string()).collect();
    assert_eq!(names, ["Hom(V'/T,T) over Gr(2,5)", "Hom(V'/T,T) over Gr(3,5)"]);
    let sp6 = OrbitLabel::two_nilpotent(GroupType::sp(3), 3, None).unwrap();
    let b = springer_desings(&sp6).unwrap();
    assert_eq!((b[0].to_string(), b[0].total_dim()), ("S2(T) over IG(3,6)".to_string(), 12));
    let so6 = OrbitLabel::two_nilpotent(GroupType::so(3), 2, None).unwrap();
    assert_eq!(springer_desings(&so6).unwrap().len(), 2);
}

#[test]
fn reduction_dimensions() {
    for (g, n, m, base, base_dim, fiber_dim) in [
        (GroupKind::GeneralLinear, 3, 4, "F_{2,2}(C^4)", 4, 4),
        (GroupKind::Symplectic, 4, 6, "OG(4,12)", 22, 6),
        (GroupKind::Symplectic, 2, 3, "OG(2,6)", 5, 1),
    ] {
        let r = reduction_consistency(g, n, m).unwrap();
        assert_eq!((r.base.to_string(), r.base_dim, r.fiber_dim), (base.to_string(), base_dim, fiber_dim));
        assert!(r.consistent);
    }
}

#[test]
fn verdict_citations_and_deferred_claims() {
    let v = verdict(GroupKind::GeneralLinear, 1, 4);
    assert_eq!(v.case, VerdictCase::DesingStrictlyDominates);
    assert!(!v.unverified.is_empty());
    assert_eq!(v.springer_count, Some(2));
    let v = verdict(GroupKind::Orthogonal, 7, 4);
    assert_eq!(v.case, VerdictCase::SymplecticUniqueDesing);
    assert_eq!(v.springer_count, Some(1));
    assert!(v.model.is_none());
    assert_eq!(verdict(GroupKind::Symplectic, 6, 4).case, VerdictCase::SymplecticUniqueDesing);
}
