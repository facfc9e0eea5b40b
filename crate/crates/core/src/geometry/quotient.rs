use serde::{Deserialize, Serialize};

use super::varieties::BaseVariety;
use super::{check_sizes, GeometryError};
use crate::partitions::{GroupKind, GroupType, OrbitLabel, OrbitTag};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub label: OrbitLabel,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SingularLocus {
    Smooth,
    /// The closure of this orbit.
    Closure(OrbitLabel),
}

/// `mu^-1(0) // G` as a union of nilpotent orbit closures in `gl_m` (GL) or `so_2m` (Sp).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDescription {
    pub group: GroupKind,
    pub n: usize,
    pub m: usize,
    pub ambient: GroupType,
    pub components: Vec<OrbitLabel>,
    /// Orbits of the quotient, listed along the closure order.
    pub strata: Vec<Stratum>,
    pub singular_locus: SingularLocus,
    pub is_reducible: bool,
    /// `false` in the regimes where the general-fiber Hilbert function is not available.
    pub h0_available: bool,
}

impl QuotientDescription {
    pub fn dim(&self) -> usize {
        self.strata.iter().map(|s| s.dim).max().unwrap_or(0)
    }

    fn stratum(&self, label: &OrbitLabel) -> Option<&Stratum> {
        self.strata.iter().find(|s| &s.label == label)
    }

    pub fn component_dims(&self) -> Vec<usize> {
        self.components
            .iter()
            .map(|c| self.stratum(c).map_or(0, |s| s.dim))
            .collect()
    }
}

fn stratum(ambient: GroupType, twos: usize, tag: Option<OrbitTag>) -> Result<Stratum, GeometryError> {
    let label = OrbitLabel::two_nilpotent(ambient, twos, tag)?;
    let dim = label.orbit_dim_formula();
    Ok(Stratum { label, dim })
}

/// Identifies the quotient with nilpotent orbit closures and lists strata and singular locus.
pub fn symplectic_reduction(group: GroupKind, n: usize, m: usize) -> Result<QuotientDescription, GeometryError> {
    check_sizes(group, n, m)?;
    match group {
        GroupKind::GeneralLinear => {
            let ambient = GroupType::gl(m);
            let big_n = (m / 2).min(n);
            let strata = (0..=big_n)
                .map(|i| stratum(ambient, i, None))
                .collect::<Result<Vec<_>, _>>()?;
            let singular_locus = if big_n == 0 {
                SingularLocus::Smooth
            } else {
                SingularLocus::Closure(strata[big_n - 1].label.clone())
            };
            Ok(QuotientDescription {
                group,
                n,
                m,
                ambient,
                components: vec![strata[big_n].label.clone()],
                strata,
                singular_locus,
                is_reducible: false,
                h0_available: m >= 2 * n || m.is_multiple_of(2),
            })
        }
        GroupKind::Symplectic => {
            let ambient = GroupType::so(m);
            // the untagged chain U_0 < U_2 < ... up to `top`, then the tagged components if any
            let (top, tagged) = if m > n {
                (n, false)
            } else if m % 2 == 1 {
                (m - 1, false)
            } else {
                (m, true)
            };
            let chain_end = if tagged { top.saturating_sub(2) } else { top };
            let mut strata = (0..=chain_end)
                .step_by(2)
                .map(|i| stratum(ambient, i, None))
                .collect::<Result<Vec<_>, _>>()?;
            let components = if tagged {
                let tops = [OrbitTag::I, OrbitTag::II]
                    .into_iter()
                    .map(|t| stratum(ambient, top, Some(t)))
                    .collect::<Result<Vec<_>, _>>()?;
                let labels = tops.iter().map(|s| s.label.clone()).collect();
                strata.extend(tops);
                labels
            } else {
                vec![strata.last().expect("U_0 is always present").label.clone()]
            };
            let singular_locus = if top == 0 {
                SingularLocus::Smooth
            } else {
                SingularLocus::Closure(OrbitLabel::two_nilpotent(ambient, top - 2, None)?)
            };
            Ok(QuotientDescription {
                group,
                n,
                m,
                ambient,
                is_reducible: components.len() > 1,
                components,
                strata,
                singular_locus,
                h0_available: m >= n || m.is_multiple_of(2),
            })
        }
        GroupKind::Orthogonal => Err(GeometryError::Deferred(group)),
    }
}

/// Dimension bookkeeping of the reduction principle:
/// `dim A_0 + dim(reduced quotient) = dim(quotient)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCheck {
    pub group: GroupKind,
    pub n: usize,
    pub m: usize,
    /// The closed orbit `A_0`, a partial flag variety.
    pub base: BaseVariety,
    pub base_dim: usize,
    pub fiber_dim: usize,
    pub quotient_dim: usize,
    pub consistent: bool,
}

pub fn reduction_consistency(group: GroupKind, n: usize, m: usize) -> Result<ReductionCheck, GeometryError> {
    let quotient = symplectic_reduction(group, n, m)?;
    if !quotient.h0_available {
        return Err(GeometryError::UndefinedRegime { group, n, m });
    }
    let (base, fiber_dim) = match group {
        GroupKind::GeneralLinear => {
            let big_n = (m / 2).min(n);
            (BaseVariety::TwoStepFlag { a: big_n, b: m - big_n, m }, big_n * big_n)
        }
        _ => {
            let big_n = m.min(n);
            let tag = (big_n == m).then_some(OrbitTag::I);
            (BaseVariety::IsotropicSo { k: big_n, m, tag }, big_n * big_n.saturating_sub(1) / 2)
        }
    };
    let base_dim = base.dim();
    let quotient_dim = quotient.dim();
    Ok(ReductionCheck {
        group,
        n,
        m,
        base,
        base_dim,
        fiber_dim,
        quotient_dim,
        consistent: base_dim + fiber_dim == quotient_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{closure_leq, Partition};

    #[test]
    fn gl_example() {
        let q = symplectic_reduction(GroupKind::GeneralLinear, 2, 5).unwrap();
        assert_eq!(q.components[0].partition, Partition::new(vec![2, 2, 1]).unwrap());
        assert_eq!(q.strata.iter().map(|s| s.dim).collect::<Vec<_>>(), vec![0, 8, 12]);
        assert_eq!(q.singular_locus, SingularLocus::Closure(q.strata[1].label.clone()));
        assert!(!q.is_reducible);
    }

    #[test]
    fn m_one_is_a_point() {
        for n in 1..=4 {
            let q = symplectic_reduction(GroupKind::GeneralLinear, n, 1).unwrap();
            assert_eq!(q.dim(), 0);
            assert_eq!(q.singular_locus, SingularLocus::Smooth);
        }
    }

    #[test]
    fn sp_examples() {
        let q = symplectic_reduction(GroupKind::Symplectic, 2, 2).unwrap();
        assert!(q.is_reducible);
        assert_eq!(q.components.iter().map(|c| c.tag).collect::<Vec<_>>(), vec![Some(OrbitTag::I), Some(OrbitTag::II)]);
        assert_eq!(q.component_dims(), vec![2, 2]);
        let q = symplectic_reduction(GroupKind::Symplectic, 4, 3).unwrap();
        assert_eq!(q.components[0].partition, Partition::new(vec![2, 2, 1, 1]).unwrap());
        assert_eq!(q.dim(), 6);
        assert!(!q.h0_available);
        let q = symplectic_reduction(GroupKind::Symplectic, 2, 5).unwrap();
        assert_eq!(q.dim(), 2 * 5 * 2 - 2 * 3);
        assert_eq!(q.singular_locus, SingularLocus::Closure(q.strata[0].label.clone()));
    }

    #[test]
    fn orthogonal_is_deferred() {
        assert_eq!(symplectic_reduction(GroupKind::Orthogonal, 3, 2), Err(GeometryError::Deferred(GroupKind::Orthogonal)));
        assert_eq!(symplectic_reduction(GroupKind::Symplectic, 3, 2), Err(GeometryError::OddSymplecticDim(3)));
    }

    #[test]
    fn strata_follow_closure_order() {
        for (g, n) in [(GroupKind::GeneralLinear, 1), (GroupKind::GeneralLinear, 3), (GroupKind::Symplectic, 2), (GroupKind::Symplectic, 4)] {
            for m in 1..=7 {
                let q = symplectic_reduction(g, n, m).unwrap();
                for pair in q.strata.windows(2) {
                    if closure_leq(&pair[0].label, &pair[1].label).unwrap() {
                        assert!(pair[0].dim < pair[1].dim);
                    }
                }
                for s in &q.strata {
                    assert_eq!(s.dim, s.label.orbit_dim(), "{}", s.label);
                    assert!(q.components.iter().any(|c| closure_leq(&s.label, c).unwrap()));
                }
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let r = reduction_consistency(GroupKind::GeneralLinear, 2, 5).unwrap();
        assert_eq!((r.base_dim, r.fiber_dim, r.quotient_dim), (8, 4, 12));
        assert!(r.consistent);
        let r = reduction_consistency(GroupKind::GeneralLinear, 3, 2).unwrap();
        assert_eq!((r.base_dim, r.fiber_dim, r.quotient_dim), (1, 1, 2));
        let r = reduction_consistency(GroupKind::Symplectic, 2, 3).unwrap();
        assert_eq!((r.base_dim, r.fiber_dim, r.quotient_dim), (5, 1, 6));
        assert!(matches!(
            reduction_consistency(GroupKind::GeneralLinear, 3, 5),
            Err(GeometryError::UndefinedRegime { .. })
        ));
    }
}
