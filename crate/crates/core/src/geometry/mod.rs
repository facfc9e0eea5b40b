//! Symbolic geometry of the quotients: strata and singular loci, Springer
//! desingularizations, bundle models of the main component of the invariant
//! Hilbert scheme, dimension consistency of the reduction principle, and the
//! desingularization verdicts.
//!
//! The `O(V)` acting group is supported for verdicts only; quotient queries
//! return [`GeometryError::Deferred`].

mod quotient;
mod springer;
mod varieties;
mod verdict;

pub use quotient::{reduction_consistency, symplectic_reduction, QuotientDescription, ReductionCheck, SingularLocus, Stratum};
pub use springer::{hilbert_chow_model, springer_desings, HilbertChowModel};
pub use varieties::{BaseVariety, BundleModel, FiberFunctor};
pub use verdict::{
    hilb_components, theorem_predicates, verdict, ComponentCount, HilbComponent, HilbInventory, Verdict, VerdictCase,
};

use thiserror::Error;

use crate::partitions::{GroupKind, OrbitLabel, PartitionError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("{0:?}: only verdicts are modeled; explicit constructions are deferred")]
    Deferred(GroupKind),
    #[error("Sp(V) needs dim V even, got {0}")]
    OddSymplecticDim(usize),
    #[error("n and m must be positive (n = {n}, m = {m})")]
    Degenerate { n: usize, m: usize },
    #[error("orbit {0} has parts larger than 2")]
    UnsupportedOrbit(OrbitLabel),
    #[error("({group:?}, n = {n}, m = {m}) is outside the regime where the Hilbert function is defined")]
    UndefinedRegime { group: GroupKind, n: usize, m: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

pub(crate) fn check_sizes(group: GroupKind, n: usize, m: usize) -> Result<(), GeometryError> {
    if n == 0 || m == 0 {
        return Err(GeometryError::Degenerate { n, m });
    }
    match group {
        GroupKind::Orthogonal => Err(GeometryError::Deferred(group)),
        GroupKind::Symplectic if !n.is_multiple_of(2) => Err(GeometryError::OddSymplecticDim(n)),
        _ => Ok(()),
    }
}
