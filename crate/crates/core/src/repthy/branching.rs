use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::character::{character, interlacing_children, weyl_dim};
use super::laurent::Character;
use super::weight::DominantWeight;
use super::{Bounds, RepthyError};
use crate::partitions::{GroupKind, GroupType};

/// Which diagonal block of coordinates a subgroup occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Embedding {
    /// The first `k` torus coordinates.
    #[default]
    Leading,
    /// The last `k` torus coordinates.
    Trailing,
}

fn require_kind(lambda: &DominantWeight, kind: GroupKind) -> Result<(), RepthyError> {
    if lambda.kind() != kind {
        return Err(RepthyError::WrongGroup {
            expected: kind,
            got: lambda.kind(),
        });
    }
    Ok(())
}

/// `dim M^{GL_k}` for the `GL_n`-irreducible `M = M(lambda)`, with `GL_k` acting
/// on the first `k` coordinates: the number of interlacing chains
/// `lambda = mu_n > mu_{n-1} > ... > mu_k = 0`.
pub fn gt_invariant_dim(lambda: &DominantWeight, k: usize) -> Result<u64, RepthyError> {
    require_kind(lambda, GroupKind::GeneralLinear)?;
    let n = lambda.rank();
    if k > n {
        return Err(RepthyError::SubgroupTooLarge { k, n });
    }
    let mut memo = HashMap::new();
    Ok(chains_to_zero(lambda.entries(), k, &mut memo))
}

fn chains_to_zero(mu: &[i64], k: usize, memo: &mut HashMap<Vec<i64>, u64>) -> u64 {
    let j = mu.len();
    if j == k {
        return u64::from(mu.iter().all(|&x| x == 0));
    }
    // mu_{j,i} >= ... >= mu_{k,i} = 0 and mu_{j,i+j-k} <= mu_{k,i} = 0 along any chain
    if mu[..k].iter().any(|&x| x < 0) || mu[j - k..].iter().any(|&x| x > 0) {
        return 0;
    }
    if let Some(&c) = memo.get(mu) {
        return c;
    }
    let count = interlacing_children(mu)
        .iter()
        .map(|nu| chains_to_zero(nu, k, memo))
        .sum();
    memo.insert(mu.to_vec(), count);
    count
}

/// `dim M^{G'}` by Weyl integration over the subgroup `G'`:
/// `(1/|W'|) * CT[ chi_M|_{T'} * prod_{alpha in roots of G'} (1 - e^alpha) ]`.
pub fn ct_invariant_dim(
    lambda: &DominantWeight,
    subgroup: GroupType,
    embedding: Embedding,
    bounds: &Bounds,
) -> Result<u64, RepthyError> {
    require_kind(lambda, subgroup.kind)?;
    let (r, k) = (lambda.rank(), subgroup.rank);
    if k > r {
        return Err(RepthyError::SubgroupTooLarge { k, n: r });
    }
    bounds.check("rank", r, bounds.max_rank)?;
    bounds.check("|lambda|", lambda.size(), bounds.max_weight)?;
    let block = match embedding {
        Embedding::Leading => 0..k,
        Embedding::Trailing => r - k..r,
    };
    let vars = Character::indexed_variables("s", k);
    let restricted = character(lambda).map_exponents(vars.clone(), |e| e[block.clone()].to_vec());
    let (roots, weyl_order) = match subgroup.kind {
        GroupKind::Symplectic => (symplectic_roots(k), (1..=k as i64).product::<i64>() << k),
        _ => (general_linear_roots(k), (1..=k as i64).product::<i64>()),
    };
    let mut integrand = restricted;
    for alpha in roots {
        let factor = &Character::one(vars.clone()) - &Character::monomial(vars.clone(), alpha, 1);
        integrand = &integrand * &factor;
    }
    let ct = integrand.constant_term();
    debug_assert_eq!(ct % weyl_order, 0, "constant term {ct} not divisible by |W'| = {weyl_order}");
    Ok((ct / weyl_order) as u64)
}

fn general_linear_roots(k: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let mut a = vec![0; k];
                a[i] = 1;
                a[j] = -1;
                roots.push(a);
            }
        }
    }
    roots
}

fn symplectic_roots(k: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut a = vec![0; k];
                a[i] = si;
                a[j] = sj;
                roots.push(a);
            }
        }
        for s in [2, -2] {
            let mut a = vec![0; k];
            a[i] = s;
            roots.push(a);
        }
    }
    roots
}

/// Hilbert function `h0(M)` of a general fiber of the quotient morphism, with default bounds.
pub fn h0(group: GroupKind, n: usize, m: usize, lambda: &DominantWeight) -> Result<u64, RepthyError> {
    h0_with(group, n, m, lambda, &Bounds::default())
}

/// `dim M` when `m >= 2n` (GL) or `m >= n` (Sp); otherwise `dim M^{G'}` with
/// `G' = GL_{n - m/2}` or `Sp_{n - m}` embedded as a block.
pub fn h0_with(group: GroupKind, n: usize, m: usize, lambda: &DominantWeight, bounds: &Bounds) -> Result<u64, RepthyError> {
    bounds.check("rank", lambda.rank(), bounds.max_rank)?;
    bounds.check("|lambda|", lambda.size(), bounds.max_weight)?;
    match group {
        GroupKind::GeneralLinear => {
            require_kind(lambda, group)?;
            if lambda.rank() != n {
                return Err(RepthyError::WrongLength {
                    expected: n,
                    got: lambda.rank(),
                });
            }
            if m >= 2 * n {
                Ok(weyl_dim(lambda))
            } else if m.is_multiple_of(2) {
                gt_invariant_dim(lambda, n - m / 2)
            } else {
                Err(RepthyError::ExcludedCase {
                    group,
                    n,
                    m,
                    reason: "for m odd with 1 < m < 2n the situation is more complicated",
                })
            }
        }
        GroupKind::Symplectic => {
            if !n.is_multiple_of(2) {
                return Err(RepthyError::OddSymplectic(n));
            }
            require_kind(lambda, group)?;
            if lambda.rank() != n / 2 {
                return Err(RepthyError::WrongLength {
                    expected: n / 2,
                    got: lambda.rank(),
                });
            }
            if m >= n {
                Ok(weyl_dim(lambda))
            } else if m.is_multiple_of(2) {
                ct_invariant_dim(lambda, GroupType::sp((n - m) / 2), Embedding::Leading, bounds)
            } else {
                Err(RepthyError::ExcludedCase {
                    group,
                    n,
                    m,
                    reason: "the case m < n with m odd is always excluded",
                })
            }
        }
        GroupKind::Orthogonal => Err(RepthyError::WrongGroup {
            expected: GroupKind::GeneralLinear,
            got: group,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(e: &[i64]) -> DominantWeight {
        DominantWeight::gl(e.to_vec()).unwrap()
    }

    fn sp(e: &[i64]) -> DominantWeight {
        DominantWeight::sp(e.to_vec()).unwrap()
    }

    #[test]
    fn gt_examples() {
        assert_eq!(gt_invariant_dim(&gl(&[1, 0]), 1), Ok(1));
        assert_eq!(gt_invariant_dim(&gl(&[2, 0]), 1), Ok(1));
        assert_eq!(gt_invariant_dim(&gl(&[1, 1, 0]), 1), Ok(1));
        for n in 1..=4 {
            for k in 0..=n {
                assert_eq!(gt_invariant_dim(&DominantWeight::zero(GroupType::gl(n)), k), Ok(1));
            }
        }
        assert_eq!(gt_invariant_dim(&gl(&[1, 0]), 3), Err(RepthyError::SubgroupTooLarge { k: 3, n: 2 }));
    }

    #[test]
    fn gt_extreme_levels() {
        for n in 1..=4 {
            for w in DominantWeight::gl_weights_within(n, 3) {
                assert_eq!(gt_invariant_dim(&w, 0).unwrap(), weyl_dim(&w));
                assert_eq!(gt_invariant_dim(&w, n).unwrap(), u64::from(w.is_zero()));
                for k in 0..=n {
                    assert_eq!(gt_invariant_dim(&w, k), gt_invariant_dim(&w.dual(), k), "{w} k={k}");
                }
            }
        }
    }

    #[test]
    fn ct_examples() {
        let b = Bounds::default();
        assert_eq!(ct_invariant_dim(&gl(&[2, 0]), GroupType::gl(1), Embedding::Leading, &b), Ok(1));
        assert_eq!(ct_invariant_dim(&sp(&[1, 0]), GroupType::sp(1), Embedding::Leading, &b), Ok(2));
        let w = gl(&[2, 1, -1]);
        assert_eq!(ct_invariant_dim(&w, GroupType::gl(0), Embedding::Leading, &b), Ok(weyl_dim(&w)));
        // Sp_4 > Sp_2: the adjoint S^2 C^4 = S^2 C^2 + C^2 (x) C^2 + S^2 C^2 has 3 invariants
        assert_eq!(ct_invariant_dim(&sp(&[2, 0]), GroupType::sp(1), Embedding::Trailing, &b), Ok(3));
        assert_eq!(ct_invariant_dim(&sp(&[1, 1]), GroupType::sp(1), Embedding::Leading, &b), Ok(1));
    }

    #[test]
    fn ct_respects_bounds() {
        let b = Bounds::default();
        let big = gl(&[4, 3, 0, 0]);
        assert_eq!(
            ct_invariant_dim(&big, GroupType::gl(2), Embedding::Leading, &b),
            Err(RepthyError::ResourceBound { what: "|lambda|", value: 7, limit: 6 })
        );
        let wide = DominantWeight::zero(GroupType::gl(5));
        assert!(matches!(
            ct_invariant_dim(&wide, GroupType::gl(1), Embedding::Leading, &b),
            Err(RepthyError::ResourceBound { what: "rank", .. })
        ));
    }

    #[test]
    fn oracles_agree_on_small_cases() {
        let b = Bounds::default();
        for n in 1..=3 {
            for w in DominantWeight::gl_weights_within(n, 2) {
                for k in 0..=n {
                    for e in [Embedding::Leading, Embedding::Trailing] {
                        assert_eq!(ct_invariant_dim(&w, GroupType::gl(k), e, &b), gt_invariant_dim(&w, k), "{w} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn h0_examples() {
        for k in -3..=3 {
            assert_eq!(h0(GroupKind::GeneralLinear, 1, 3, &gl(&[k])), Ok(1));
        }
        assert_eq!(h0(GroupKind::GeneralLinear, 2, 2, &gl(&[1, 0])), Ok(1));
        assert_eq!(h0(GroupKind::GeneralLinear, 2, 2, &gl(&[0, -1])), Ok(1));
        assert_eq!(h0(GroupKind::Symplectic, 4, 2, &sp(&[1, 0])), Ok(2));
        assert_eq!(h0(GroupKind::Symplectic, 4, 4, &sp(&[1, 0])), Ok(4));
        assert!(matches!(
            h0(GroupKind::GeneralLinear, 2, 3, &gl(&[1, 0])),
            Err(RepthyError::ExcludedCase { .. })
        ));
        assert!(matches!(
            h0(GroupKind::Symplectic, 4, 1, &sp(&[1, 0])),
            Err(RepthyError::ExcludedCase { .. })
        ));
    }

    #[test]
    fn h0_of_defining_reps_is_n() {
        // h0(V) = h0(V*) = N = min(m/2, n) for m even
        for n in 1..=4 {
            for m in (2..=2 * n + 2).step_by(2) {
                let big_n = (m / 2).min(n) as u64;
                let mut v = vec![0; n];
                v[0] = 1;
                let defining = gl(&v);
                assert_eq!(h0(GroupKind::GeneralLinear, n, m, &defining), Ok(big_n));
                assert_eq!(h0(GroupKind::GeneralLinear, n, m, &defining.dual()), Ok(big_n));
            }
        }
    }
}
