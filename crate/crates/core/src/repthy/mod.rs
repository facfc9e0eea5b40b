//! Representation theory of `GL_n` and `Sp_n`: dimensions, characters,
//! invariants under block subgroups (the Hilbert functions `h0` of general
//! quotient fibers) and the monomial combinatorics of `U x U'`-invariants.
//!
//! # Weight conventions
//!
//! `GL_n` weights are integer vectors in the `eps` basis; `Sp_n` (`n = 2r`)
//! weights are vectors of length `r`, with torus variable `t_i` acting on the
//! `i`-th isotropic basis vector. For the monomials of [`MonomialXY`]:
//!
//! * `x_i` has `GL(V)`-weight `-(eps_{n-i+1} + ... + eps_n)` and `T'`-weight `eps'_1 + ... + eps'_i`;
//! * `y_j` has `GL(V)`-weight `eps_1 + ... + eps_j` and `T'`-weight `-(eps'_{n-j+1} + ... + eps'_n)`.
//!
//! With these choices [`lambda_monomial`] has `GL(V)`-weight exactly `lambda`
//! and `T'`-weight `lambda* = (-lambda_n, ..., -lambda_1)`.

mod branching;
mod cache;
mod character;
mod combinatorics;
mod laurent;
mod weight;

pub use branching::{ct_invariant_dim, gt_invariant_dim, h0, h0_with, Embedding};
pub use cache::{CachedRepthy, InvariantCache, CACHE_FORMAT_VERSION};
pub use character::{character, gl_character, sp_character, weyl_dim};
pub use combinatorics::{
    cauchy_check, ks_presentation_check, lambda_monomial, CauchyDegree, CauchyReport, KsReport, MonomialXY,
};
pub use laurent::{Character, LaurentPolynomial};
pub use weight::DominantWeight;

use thiserror::Error;

use crate::partitions::GroupKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepthyError {
    #[error("weight {0:?} is not weakly decreasing")]
    NotDominant(Vec<i64>),
    #[error("Sp weight {0:?} has a negative entry")]
    NegativeSymplectic(Vec<i64>),
    #[error("Sp_n needs n even, got {0}")]
    OddSymplectic(usize),
    #[error("expected a {expected:?} weight, got {got:?}")]
    WrongGroup { expected: GroupKind, got: GroupKind },
    #[error("weight has {got} entries, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("subgroup rank {k} exceeds ambient rank {n}")]
    SubgroupTooLarge { k: usize, n: usize },
    #[error("resource bound exceeded: {what} = {value} > {limit}")]
    ResourceBound { what: &'static str, value: usize, limit: usize },
    #[error("excluded regime ({group:?}, n = {n}, m = {m}): {reason}")]
    ExcludedCase { group: GroupKind, n: usize, m: usize, reason: &'static str },
    #[error("cache error: {0}")]
    Cache(String),
}

/// Size limits for the combinatorially expensive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Bounds {
    /// Largest ambient rank (`n` for `GL_n`, `r` for `Sp_2r`).
    pub max_rank: usize,
    /// Largest `sum |lambda_i|`.
    pub max_weight: usize,
    /// Largest polynomial degree for the Cauchy and presentation checks.
    pub max_degree: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_rank: 4,
            max_weight: 6,
            max_degree: 6,
        }
    }
}

impl Bounds {
    pub(crate) fn check(&self, what: &'static str, value: usize, limit: usize) -> Result<(), RepthyError> {
        if value > limit {
            Err(RepthyError::ResourceBound { what, value, limit })
        } else {
            Ok(())
        }
    }
}
