use serde::{Deserialize, Serialize};

use super::quotient::symplectic_reduction;
use super::springer::{hilbert_chow_model, springer_desings, HilbertChowModel};
use crate::partitions::GroupKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictCase {
    /// The main component of the invariant Hilbert scheme is a symplectic
    /// desingularization of the quotient, and the unique one.
    SymplecticUniqueDesing,
    /// The main component is a desingularization strictly dominating the
    /// symplectic (Springer) desingularizations.
    DesingStrictlyDominates,
    /// Neither classification statement applies; nothing is extrapolated.
    NotCoveredByTheorems,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub group: GroupKind,
    pub n: usize,
    pub m: usize,
    pub case: VerdictCase,
    /// Springer desingularizations of each quotient component (all components agree).
    /// `None` where the quotient is not modeled.
    pub springer_count: Option<usize>,
    pub model: Option<HilbertChowModel>,
    /// The hypotheses that placed `(group, n, m)` in its case.
    pub citations: Vec<String>,
    /// Claims attached to the case that are recorded but not checked here.
    pub unverified: Vec<String>,
}

/// `(unique symplectic desingularization, strictly dominating desingularization)`.
/// The two predicates are never both true.
pub fn theorem_predicates(group: GroupKind, n: usize, m: usize) -> (bool, bool) {
    if n == 0 || m == 0 {
        return (false, false);
    }
    match group {
        GroupKind::GeneralLinear => (n + 1 >= m && m.is_multiple_of(2), (n == 1 && m >= 3) || (n == 2 && m >= 4)),
        GroupKind::Orthogonal => (n + 1 >= 2 * m, (n == 1 && m > 1) || (n == 2 && m >= 2)),
        GroupKind::Symplectic => (
            n.is_multiple_of(2) && m.is_multiple_of(2) && n + 2 >= 2 * m,
            (n == 2 && m > 2) || (n == 4 && m >= 4),
        ),
    }
}

fn unique_citation(group: GroupKind) -> &'static str {
    match group {
        GroupKind::GeneralLinear => "GL(V): dim V >= m - 1 and m even",
        GroupKind::Orthogonal => "O(V): dim V >= 2m - 1",
        GroupKind::Symplectic => "Sp(V): dim V >= 2m - 2 and m even",
    }
}

fn dominates_citation(group: GroupKind, n: usize) -> &'static str {
    match (group, n) {
        (GroupKind::GeneralLinear, 1) => "GL(V): dim V = 1 and m >= 3",
        (GroupKind::GeneralLinear, _) => "GL(V): dim V = 2 and m >= 4",
        (GroupKind::Orthogonal, 1) => "O(V): dim V = 1 < m",
        (GroupKind::Orthogonal, _) => "O(V): dim V = 2 <= m",
        (GroupKind::Symplectic, 2) => "Sp(V): dim V = 2 < m",
        (GroupKind::Symplectic, _) => "Sp(V): dim V = 4 <= m",
    }
}

pub fn verdict(group: GroupKind, n: usize, m: usize) -> Verdict {
    let (unique, dominates) = theorem_predicates(group, n, m);
    assert!(!(unique && dominates), "classification cases overlap at {group:?} n={n} m={m}");
    let case = if unique {
        VerdictCase::SymplecticUniqueDesing
    } else if dominates {
        VerdictCase::DesingStrictlyDominates
    } else {
        VerdictCase::NotCoveredByTheorems
    };
    let springer_count = match group {
        GroupKind::Orthogonal => unique.then_some(1),
        _ => symplectic_reduction(group, n, m)
            .ok()
            .and_then(|q| springer_desings(&q.components[0]).ok())
            .map(|v| v.len()),
    };
    let model = hilbert_chow_model(group, n, m).ok();
    let mut citations = Vec::new();
    let mut unverified = Vec::new();
    match case {
        VerdictCase::SymplecticUniqueDesing => {
            citations.push(unique_citation(group).to_string());
            unverified.push("smoothness of the main component as a scheme".to_string());
        }
        VerdictCase::DesingStrictlyDominates => {
            citations.push(dominates_citation(group, n).to_string());
            unverified.push("smoothness of the main component as a scheme".to_string());
            unverified.push("domination of the symplectic desingularizations (argument deferred to the thesis)".to_string());
        }
        VerdictCase::NotCoveredByTheorems => {}
    }
    Verdict {
        group,
        n,
        m,
        case,
        springer_count,
        model,
        citations,
        unverified,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentCount {
    Irreducible,
    Exactly(usize),
    AtLeast(usize),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbComponent {
    pub description: String,
    pub dim: Option<usize>,
    pub smooth: Option<bool>,
}

/// Known irreducible components of the invariant Hilbert scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbInventory {
    pub group: GroupKind,
    pub n: usize,
    pub m: usize,
    pub count: ComponentCount,
    pub components: Vec<HilbComponent>,
    pub notes: Vec<String>,
}

pub fn hilb_components(group: GroupKind, n: usize, m: usize) -> HilbInventory {
    let component = |description: &str, dim: Option<usize>, smooth: Option<bool>| HilbComponent {
        description: description.to_string(),
        dim,
        smooth,
    };
    let (count, components, notes) = match group {
        GroupKind::GeneralLinear if n == 1 && m >= 2 => (
            ComponentCount::Exactly(2),
            vec![
                component("main component", Some(2 * m - 2), Some(true)),
                component("homogeneous ideals, isomorphic to P(h^{<=1})", Some(2 * m - 2), Some(true)),
            ],
            vec!["the main component is the blow-up of closure(O_[2,1^(m-2)]) at 0".to_string()],
        ),
        GroupKind::GeneralLinear if n >= 2 && m >= 2 * n => {
            let main = component("main component", Some(2 * n * (m - n)), None);
            let mut comps = vec![main];
            if n == 2 {
                comps.push(component("homogeneous ideals", Some(4 * m - 5), None));
            }
            (ComponentCount::AtLeast(2), comps, vec![])
        }
        GroupKind::Symplectic if n == 2 && m >= 3 => (
            ComponentCount::Irreducible,
            vec![component("main component (the whole scheme)", Some(4 * m - 6), Some(true))],
            vec![],
        ),
        GroupKind::Symplectic if n == 2 && m == 2 => (
            ComponentCount::Exactly(2),
            vec![
                component("H_I", Some(2), Some(true)),
                component("H_II", Some(2), Some(true)),
            ],
            vec!["H_I and H_II meet along the homogeneous ideals".to_string()],
        ),
        _ => (ComponentCount::Unknown, vec![], vec![]),
    };
    HilbInventory {
        group,
        n,
        m,
        count,
        components,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_examples() {
        assert_eq!(verdict(GroupKind::GeneralLinear, 3, 4).case, VerdictCase::SymplecticUniqueDesing);
        assert_eq!(verdict(GroupKind::Orthogonal, 5, 3).case, VerdictCase::SymplecticUniqueDesing);
        assert_eq!(verdict(GroupKind::GeneralLinear, 1, 3).case, VerdictCase::DesingStrictlyDominates);
        assert_eq!(verdict(GroupKind::Symplectic, 4, 5).case, VerdictCase::DesingStrictlyDominates);
        assert_eq!(verdict(GroupKind::Symplectic, 4, 3).case, VerdictCase::NotCoveredByTheorems);
        assert!(verdict(GroupKind::Symplectic, 4, 3).citations.is_empty());
    }

    #[test]
    fn predicates_are_disjoint() {
        for g in [GroupKind::GeneralLinear, GroupKind::Orthogonal, GroupKind::Symplectic] {
            for n in 0..=50 {
                for m in 0..=50 {
                    let (a, b) = theorem_predicates(g, n, m);
                    assert!(!(a && b), "{g:?} {n} {m}");
                }
            }
        }
    }

    #[test]
    fn unique_case_has_one_springer_model_matching_the_chow_model() {
        for g in [GroupKind::GeneralLinear, GroupKind::Symplectic] {
            for n in 1..=12 {
                for m in 1..=12 {
                    let v = verdict(g, n, m);
                    if v.case != VerdictCase::SymplecticUniqueDesing {
                        continue;
                    }
                    assert_eq!(v.springer_count, Some(1));
                    let q = symplectic_reduction(g, n, m).unwrap();
                    let models = v.model.as_ref().unwrap().models();
                    for (component, model) in q.components.iter().zip(models) {
                        assert_eq!(springer_desings(component).unwrap(), vec![*model]);
                    }
                }
            }
        }
    }

    #[test]
    fn inventory_examples() {
        let h = hilb_components(GroupKind::GeneralLinear, 1, 3);
        assert_eq!(h.count, ComponentCount::Exactly(2));
        assert_eq!(h.components.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![Some(4), Some(4)]);
        assert_eq!(hilb_components(GroupKind::Symplectic, 2, 3).count, ComponentCount::Irreducible);
        let h = hilb_components(GroupKind::GeneralLinear, 2, 4);
        assert_eq!(h.count, ComponentCount::AtLeast(2));
        assert_eq!(h.components.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![Some(8), Some(11)]);
        assert_eq!(hilb_components(GroupKind::GeneralLinear, 3, 5).count, ComponentCount::Unknown);
        assert_eq!(hilb_components(GroupKind::Symplectic, 2, 2).count, ComponentCount::Exactly(2));
    }
}
