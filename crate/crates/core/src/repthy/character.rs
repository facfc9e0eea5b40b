use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::laurent::Character;
use super::weight::DominantWeight;
use crate::partitions::GroupKind;

/// Dimension of the irreducible representation with highest weight `lambda`
/// (Weyl dimension formula).
pub fn weyl_dim(lambda: &DominantWeight) -> u64 {
    let e = lambda.entries();
    let r = e.len();
    let mut value = BigRational::one();
    let q = |num: i64, den: i64| BigRational::new(BigInt::from(num), BigInt::from(den));
    match lambda.kind() {
        GroupKind::Symplectic => {
            // rho = (r, r-1, ..., 1)
            let rho: Vec<i64> = (1..=r as i64).rev().collect();
            let l: Vec<i64> = e.iter().zip(&rho).map(|(a, b)| a + b).collect();
            for i in 0..r {
                for j in i + 1..r {
                    value *= q(l[i] * l[i] - l[j] * l[j], rho[i] * rho[i] - rho[j] * rho[j]);
                }
                value *= q(l[i], rho[i]);
            }
        }
        _ => {
            for i in 0..r {
                for j in i + 1..r {
                    let gap = (j - i) as i64;
                    value *= q(e[i] - e[j] + gap, gap);
                }
            }
        }
    }
    debug_assert!(value.is_integer());
    value.to_integer().to_u64().expect("dimension fits in u64")
}

/// Formal character in `t1 .. t_rank`.
pub fn character(lambda: &DominantWeight) -> Character {
    match lambda.kind() {
        GroupKind::Symplectic => sp_character(lambda),
        _ => gl_character(lambda),
    }
}

/// All `nu` of length `len(mu) - 1` interlacing `mu`: `mu_i >= nu_i >= mu_{i+1}`.
pub(crate) fn interlacing_children(mu: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if mu.is_empty() {
        return out;
    }
    let mut current = Vec::with_capacity(mu.len() - 1);
    fn rec(mu: &[i64], current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = current.len();
        if i + 1 == mu.len() {
            out.push(current.clone());
            return;
        }
        for v in mu[i + 1]..=mu[i] {
            current.push(v);
            rec(mu, current, out);
            current.pop();
        }
    }
    rec(mu, &mut current, &mut out);
    out
}

/// `GL_n` character by Gelfand–Tsetlin patterns: the weight of a pattern has
/// `i`-th entry `|mu_i| - |mu_{i-1}|`.
pub fn gl_character(lambda: &DominantWeight) -> Character {
    let mut memo = HashMap::new();
    gl_character_rec(lambda.entries(), &mut memo)
}

fn gl_character_rec(mu: &[i64], memo: &mut HashMap<Vec<i64>, Character>) -> Character {
    if let Some(c) = memo.get(mu) {
        return c.clone();
    }
    let n = mu.len();
    let vars = Character::indexed_variables("t", n);
    let total: i64 = mu.iter().sum();
    let result = if n <= 1 {
        Character::monomial(vars, vec![total; n], 1)
    } else {
        let mut acc = Character::zero(vars.clone());
        for nu in interlacing_children(mu) {
            let below = gl_character_rec(&nu, memo);
            let last = total - nu.iter().sum::<i64>();
            let lifted = below.map_exponents(vars.clone(), |e| {
                let mut v = e.to_vec();
                v.push(last);
                v
            });
            acc = &acc + &lifted;
        }
        acc
    };
    memo.insert(mu.to_vec(), result.clone());
    result
}

/// Dominant representative under the Weyl group of `C_r` (signed permutations).
fn sp_dominant(mu: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = mu.iter().map(|x| x.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Coordinates of `lambda - mu` in the simple roots `eps_i - eps_{i+1}`, `2 eps_r`,
/// if they are nonnegative integers.
fn sp_simple_root_coords(lambda: &[i64], mu: &[i64]) -> Option<Vec<i64>> {
    let r = lambda.len();
    let mut coords = Vec::with_capacity(r);
    let mut prefix = 0;
    for i in 0..r {
        prefix += lambda[i] - mu[i];
        if i + 1 < r {
            if prefix < 0 {
                return None;
            }
            coords.push(prefix);
        }
    }
    if r > 0 {
        if prefix < 0 || prefix % 2 != 0 {
            return None;
        }
        coords.push(prefix / 2);
    }
    Some(coords)
}

fn sp_positive_roots(r: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut a = vec![0; r];
            a[i] = 1;
            a[j] = -1;
            roots.push(a.clone());
            a[j] = 1;
            roots.push(a);
        }
        let mut a = vec![0; r];
        a[i] = 2;
        roots.push(a);
    }
    roots
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dominant weight multiplicities of the `Sp_2r` irreducible `lambda`, by Freudenthal's formula.
fn sp_dominant_multiplicities(lambda: &[i64]) -> HashMap<Vec<i64>, i64> {
    let r = lambda.len();
    let top = lambda.first().copied().unwrap_or(0);
    // dominant weights below lambda, ordered by height
    let mut dominant: Vec<(i64, Vec<i64>)> = DominantWeight::gl_weights_within(r, top)
        .into_iter()
        .map(|w| w.entries().to_vec())
        .filter(|v| v.iter().all(|&x| x >= 0))
        .filter_map(|v| sp_simple_root_coords(lambda, &v).map(|c| (c.iter().sum(), v)))
        .collect();
    dominant.sort();
    let rho: Vec<i64> = (1..=r as i64).rev().collect();
    let shifted = |v: &[i64]| -> i64 {
        let s: Vec<i64> = v.iter().zip(&rho).map(|(a, b)| a + b).collect();
        dot(&s, &s)
    };
    let norm_top = shifted(lambda);
    let roots = sp_positive_roots(r);
    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    for (height, mu) in dominant {
        if height == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let mut numerator = 0;
        for alpha in &roots {
            let mut k = 1;
            loop {
                let shifted_mu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + k * b).collect();
                let dom = sp_dominant(&shifted_mu);
                if sp_simple_root_coords(lambda, &dom).is_none() {
                    break;
                }
                numerator += mult.get(&dom).copied().unwrap_or(0) * dot(&shifted_mu, alpha);
                k += 1;
            }
        }
        let denominator = norm_top - shifted(&mu);
        debug_assert!(denominator > 0 && (2 * numerator) % denominator == 0);
        mult.insert(mu, 2 * numerator / denominator);
    }
    mult
}

/// `Sp_2r` character from Freudenthal multiplicities, in `t1 .. tr`.
pub fn sp_character(lambda: &DominantWeight) -> Character {
    let e = lambda.entries();
    let r = e.len();
    let vars = Character::indexed_variables("t", r);
    let dominant = sp_dominant_multiplicities(e);
    let top = e.first().copied().unwrap_or(0);
    let mut out = Character::zero(vars);
    let mut mu = vec![-top; r];
    loop {
        if let Some(&m) = dominant.get(&sp_dominant(&mu)) {
            out.add_term(mu.clone(), m);
        }
        // odometer over the box [-top, top]^r
        let mut i = 0;
        while i < r && mu[i] == top {
            mu[i] = -top;
            i += 1;
        }
        if i == r {
            break;
        }
        mu[i] += 1;
    }
    out
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
    fn dimension_examples() {
        assert_eq!(weyl_dim(&gl(&[1, 0])), 2);
        assert_eq!(weyl_dim(&gl(&[2, 0])), 3);
        assert_eq!(weyl_dim(&gl(&[1, 1, 0])), 3);
        assert_eq!(weyl_dim(&sp(&[1, 0])), 4);
        assert_eq!(weyl_dim(&sp(&[1, 1])), 5);
        assert_eq!(weyl_dim(&sp(&[2, 0])), 10);
        assert_eq!(weyl_dim(&gl(&[2, 1, 0])), 8);
        assert_eq!(weyl_dim(&gl(&[0, 0, -3])), 10);
    }

    #[test]
    fn character_examples() {
        assert_eq!(character(&gl(&[1, 0])).to_string(), "t1 + t2");
        assert_eq!(character(&gl(&[1, -1])).to_string(), "t1*t2^-1 + 1 + t1^-1*t2");
        let c = character(&sp(&[1, 0]));
        assert_eq!(c.len(), 4);
        for e in [[1, 0], [0, 1], [0, -1], [-1, 0]] {
            assert_eq!(c.coefficient(&e), 1);
        }
    }

    #[test]
    fn sp_adjoint_has_rank_many_zero_weights() {
        // adjoint of Sp_6 = S^2 of the defining rep: zero weight multiplicity 3
        let c = character(&sp(&[2, 0, 0]));
        assert_eq!(c.constant_term(), 3);
        assert_eq!(c.evaluate_at_ones(), 21);
    }

    #[test]
    fn characters_evaluate_to_dimension() {
        for n in 1..=4 {
            for w in DominantWeight::gl_weights_within(n, 4) {
                assert_eq!(character(&w).evaluate_at_ones() as u64, weyl_dim(&w), "{w}");
            }
        }
        for r in 1..=4 {
            for w in DominantWeight::sp_weights_within(r, 4) {
                assert_eq!(character(&w).evaluate_at_ones() as u64, weyl_dim(&w), "{w}");
            }
        }
    }

    #[test]
    fn gl_characters_are_symmetric() {
        let c = character(&gl(&[2, 0, -1]));
        for (e, coeff) in c.terms() {
            let mut p = e.clone();
            p.swap(0, 2);
            assert_eq!(c.coefficient(&p), *coeff);
        }
    }
}
