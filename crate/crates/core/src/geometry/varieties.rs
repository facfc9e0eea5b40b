use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::{coordinate_stabilizer_dim, GroupType, OrbitTag};

/// A homogeneous projective variety `H/P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseVariety {
    /// `Gr(k, C^m)`.
    Grassmannian { k: usize, m: usize },
    /// `F_{a,b}(C^m)`: flags `T_1 in T_2` with `dim T_1 = a <= b = dim T_2`.
    TwoStepFlag { a: usize, b: usize, m: usize },
    /// `IG(k, C^2m)` for the symplectic form.
    IsotropicSp { k: usize, m: usize },
    /// `OG(k, C^2m)` for the split quadratic form; `tag` picks a component of `OG(m, 2m)`.
    IsotropicSo { k: usize, m: usize, tag: Option<OrbitTag> },
}

impl BaseVariety {
    pub fn dim(&self) -> usize {
        match *self {
            BaseVariety::Grassmannian { k, m } => k * (m - k),
            // Gr(a, m) + Gr(b - a, m - a)
            BaseVariety::TwoStepFlag { a, b, m } => a * (m - a) + (b - a) * (m - b),
            BaseVariety::IsotropicSp { k, m } => k * (2 * m - k) - k * k.saturating_sub(1) / 2,
            BaseVariety::IsotropicSo { k, m, .. } => k * (2 * m - k) - k * (k + 1) / 2,
        }
    }

    /// `dim H - dim P`, with `P` the stabilizer of a coordinate (isotropic) flag,
    /// both computed as nullspaces of explicit linear conditions on matrices.
    pub fn dim_by_stabilizer(&self) -> usize {
        let first = |k: usize| (0..k).collect::<Vec<_>>();
        let (ambient, subspaces) = match *self {
            BaseVariety::Grassmannian { k, m } => (GroupType::gl(m), vec![first(k)]),
            BaseVariety::TwoStepFlag { a, b, m } => (GroupType::gl(m), vec![first(a), first(b)]),
            BaseVariety::IsotropicSp { k, m } => (GroupType::sp(m), vec![first(k)]),
            BaseVariety::IsotropicSo { k, m, .. } => (GroupType::so(m), vec![first(k)]),
        };
        let size = ambient.matrix_size();
        let gram = ambient.gram();
        ambient.algebra_dim() - coordinate_stabilizer_dim(size, gram.as_ref(), &subspaces)
    }
}

impl fmt::Display for BaseVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BaseVariety::Grassmannian { k, m } => write!(f, "Gr({k},{m})"),
            BaseVariety::TwoStepFlag { a, b, m } => write!(f, "F_{{{a},{b}}}(C^{m})"),
            BaseVariety::IsotropicSp { k, m } => write!(f, "IG({k},{})", 2 * m),
            BaseVariety::IsotropicSo { k, m, tag } => match tag {
                Some(t) => write!(f, "OG^{t:?}({k},{})", 2 * m),
                None => write!(f, "OG({k},{})", 2 * m),
            },
        }
    }
}

/// Vector bundle built functorially from the tautological bundles `T` (resp. `T_1 in T_2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiberFunctor {
    /// `Hom(V'/T, T)`; over a Grassmannian this is the cotangent bundle.
    HomQuotientTaut,
    /// `Hom(V'/T_2, T_1)` over a two-step flag variety.
    HomQuotient2Taut1,
    /// `Lambda^2 T`; over `OG(m, 2m)` this is the cotangent bundle.
    Lambda2Taut,
    /// `S^2 T`; over `IG(m, 2m)` this is the cotangent bundle.
    Sym2Taut,
}

/// Total space of a bundle over a base variety, optionally blown up along the zero section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BundleModel {
    pub base: BaseVariety,
    pub fiber: FiberFunctor,
    pub blow_up_zero_section: bool,
}

impl BundleModel {
    pub fn new(base: BaseVariety, fiber: FiberFunctor) -> Self {
        Self {
            base,
            fiber,
            blow_up_zero_section: false,
        }
    }

    pub fn blown_up(mut self) -> Self {
        self.blow_up_zero_section = true;
        self
    }

    /// Rank of the fiber, from the ranks of the tautological bundles.
    pub fn fiber_rank(&self) -> usize {
        let (taut, ambient) = match self.base {
            BaseVariety::Grassmannian { k, m } => (k, m),
            BaseVariety::TwoStepFlag { a, b, m } => {
                return match self.fiber {
                    FiberFunctor::HomQuotient2Taut1 => a * (m - b),
                    FiberFunctor::HomQuotientTaut => b * (m - b),
                    FiberFunctor::Lambda2Taut => b * b.saturating_sub(1) / 2,
                    FiberFunctor::Sym2Taut => b * (b + 1) / 2,
                }
            }
            BaseVariety::IsotropicSp { k, m } | BaseVariety::IsotropicSo { k, m, .. } => (k, 2 * m),
        };
        match self.fiber {
            FiberFunctor::HomQuotientTaut | FiberFunctor::HomQuotient2Taut1 => taut * (ambient - taut),
            FiberFunctor::Lambda2Taut => taut * taut.saturating_sub(1) / 2,
            FiberFunctor::Sym2Taut => taut * (taut + 1) / 2,
        }
    }

    /// `dim base + rank fiber`; a blow-up along the zero section does not change it.
    pub fn total_dim(&self) -> usize {
        self.base.dim() + self.fiber_rank()
    }
}

impl fmt::Display for BundleModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fiber = match (self.fiber, self.base) {
            (FiberFunctor::HomQuotientTaut, _) => "Hom(V'/T,T)".to_string(),
            (FiberFunctor::HomQuotient2Taut1, _) => "Hom(V'/T2,T1)".to_string(),
            (FiberFunctor::Lambda2Taut, BaseVariety::IsotropicSo { tag: Some(t), .. }) => format!("L2(T_{t:?})"),
            (FiberFunctor::Lambda2Taut, _) => "L2(T)".to_string(),
            (FiberFunctor::Sym2Taut, _) => "S2(T)".to_string(),
        };
        if self.blow_up_zero_section {
            write!(f, "Bl0({fiber}) over {}", self.base)
        } else {
            write!(f, "{fiber} over {}", self.base)
        }
    }
}
