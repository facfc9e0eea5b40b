use serde::{Deserialize, Serialize};

use super::varieties::{BaseVariety, BundleModel, FiberFunctor};
use super::{check_sizes, GeometryError};
use crate::partitions::{GroupKind, OrbitLabel, OrbitTag};

/// Springer desingularizations `T*(H/P) -> closure(O)` of a 2-nilpotent orbit closure,
/// as cotangent-bundle models.
pub fn springer_desings(o: &OrbitLabel) -> Result<Vec<BundleModel>, GeometryError> {
    if !o.partition.is_two_bounded() {
        return Err(GeometryError::UnsupportedOrbit(o.clone()));
    }
    let m = o.ambient.rank;
    let big_n = o.twos();
    let og = |tag| BundleModel::new(BaseVariety::IsotropicSo { k: m, m, tag: Some(tag) }, FiberFunctor::Lambda2Taut);
    Ok(match o.ambient.kind {
        GroupKind::GeneralLinear => {
            let cotangent = |k| BundleModel::new(BaseVariety::Grassmannian { k, m }, FiberFunctor::HomQuotientTaut);
            if 2 * big_n == m {
                vec![cotangent(big_n)]
            } else {
                vec![cotangent(big_n), cotangent(m - big_n)]
            }
        }
        GroupKind::Symplectic if big_n == m => {
            vec![BundleModel::new(BaseVariety::IsotropicSp { k: m, m }, FiberFunctor::Sym2Taut)]
        }
        GroupKind::Symplectic => Vec::new(),
        GroupKind::Orthogonal if big_n + 1 == m => vec![og(OrbitTag::I), og(OrbitTag::II)],
        GroupKind::Orthogonal if big_n == m => vec![og(o.tag.unwrap_or(OrbitTag::I))],
        GroupKind::Orthogonal => Vec::new(),
    })
}

/// Bundle model of the main component of the invariant Hilbert scheme, one per
/// quotient component, where one is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum HilbertChowModel {
    Known(Vec<BundleModel>),
    NotKnown,
}

impl HilbertChowModel {
    pub fn models(&self) -> &[BundleModel] {
        match self {
            HilbertChowModel::Known(v) => v,
            HilbertChowModel::NotKnown => &[],
        }
    }

    pub fn is_known(&self) -> bool {
        matches!(self, HilbertChowModel::Known(_))
    }
}

pub fn hilbert_chow_model(group: GroupKind, n: usize, m: usize) -> Result<HilbertChowModel, GeometryError> {
    check_sizes(group, n, m)?;
    let known = |v: Vec<BundleModel>| Ok(HilbertChowModel::Known(v));
    match group {
        GroupKind::GeneralLinear => {
            if m.is_multiple_of(2) && n + 1 >= m {
                let base = BaseVariety::Grassmannian { k: m / 2, m };
                known(vec![BundleModel::new(base, FiberFunctor::HomQuotientTaut)])
            } else if n == 1 && m >= 3 {
                let base = BaseVariety::TwoStepFlag { a: 1, b: m - 1, m };
                known(vec![BundleModel::new(base, FiberFunctor::HomQuotient2Taut1)])
            } else if n == 2 && m >= 4 {
                let base = BaseVariety::TwoStepFlag { a: 2, b: m - 2, m };
                known(vec![BundleModel::new(base, FiberFunctor::HomQuotient2Taut1).blown_up()])
            } else {
                Ok(HilbertChowModel::NotKnown)
            }
        }
        GroupKind::Symplectic => {
            let tagged = |blow_up: bool| {
                [OrbitTag::I, OrbitTag::II]
                    .into_iter()
                    .map(|t| {
                        let model = BundleModel::new(BaseVariety::IsotropicSo { k: m, m, tag: Some(t) }, FiberFunctor::Lambda2Taut);
                        if blow_up {
                            model.blown_up()
                        } else {
                            model
                        }
                    })
                    .collect()
            };
            let isotropic = |k| BundleModel::new(BaseVariety::IsotropicSo { k, m, tag: None }, FiberFunctor::Lambda2Taut);
            if m > n && n == 2 {
                known(vec![isotropic(2)])
            } else if m > n && n == 4 {
                known(vec![isotropic(4).blown_up()])
            } else if m.is_multiple_of(2) && n + 2 >= 2 * m {
                known(tagged(false))
            } else if m == 4 && n == 4 {
                known(tagged(true))
            } else {
                Ok(HilbertChowModel::NotKnown)
            }
        }
        GroupKind::Orthogonal => Err(GeometryError::Deferred(group)),
    }
}
