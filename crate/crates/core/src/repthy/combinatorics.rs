use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::character::{gl_character, weyl_dim};
use super::laurent::Character;
use super::weight::DominantWeight;
use super::{Bounds, RepthyError};
use crate::partitions::{all_partitions, GroupKind};

/// A monomial `x^a y^b` in the `U x U'`-invariants `x_1..x_n`, `y_1..y_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MonomialXY {
    pub x_exponents: Vec<u32>,
    pub y_exponents: Vec<u32>,
}

impl MonomialXY {
    pub fn one(n: usize) -> Self {
        Self {
            x_exponents: vec![0; n],
            y_exponents: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.x_exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.x_exponents.iter().chain(&self.y_exponents).sum()
    }

    /// No `x_r y_s` with `r + s > n` divides the monomial.
    pub fn is_admissible(&self) -> bool {
        let n = self.n();
        let max_x = (1..=n).rev().find(|&r| self.x_exponents[r - 1] > 0).unwrap_or(0);
        let max_y = (1..=n).rev().find(|&s| self.y_exponents[s - 1] > 0).unwrap_or(0);
        max_x + max_y <= n
    }

    /// `GL(V)`-weight: `x_i -> -(eps_{n-i+1} + ... + eps_n)`, `y_j -> eps_1 + ... + eps_j`.
    pub fn gl_weight(&self) -> Vec<i64> {
        let n = self.n();
        let mut w = vec![0i64; n];
        for (i, &a) in self.x_exponents.iter().enumerate() {
            for c in &mut w[n - 1 - i..] {
                *c -= i64::from(a);
            }
        }
        for (j, &b) in self.y_exponents.iter().enumerate() {
            for c in &mut w[..=j] {
                *c += i64::from(b);
            }
        }
        w
    }

    /// `T'`-weight: `x_i -> eps'_1 + ... + eps'_i`, `y_j -> -(eps'_{n-j+1} + ... + eps'_n)`.
    pub fn t_prime_weight(&self) -> Vec<i64> {
        let n = self.n();
        let mut w = vec![0i64; n];
        for (i, &a) in self.x_exponents.iter().enumerate() {
            for c in &mut w[..=i] {
                *c += i64::from(a);
            }
        }
        for (j, &b) in self.y_exponents.iter().enumerate() {
            for c in &mut w[n - 1 - j..] {
                *c -= i64::from(b);
            }
        }
        w
    }
}

impl fmt::Display for MonomialXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (name, exps) in [("x", &self.x_exponents), ("y", &self.y_exponents)] {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("{name}{}", i + 1)),
                    _ => factors.push(format!("{name}{}^{e}", i + 1)),
                }
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// The monomial of `GL(V)`-weight `lambda`: writing
/// `lambda = k_1 eps_1 + ... + k_t eps_t - k_{t+1} eps_{t+1} - ... - k_n eps_n`,
/// it is `x_{n-t}^{k_{t+1}} x_{n-t-1}^{k_{t+2}-k_{t+1}} ... y_t^{k_t} y_{t-1}^{k_{t-1}-k_t} ...`.
pub fn lambda_monomial(lambda: &DominantWeight) -> Result<MonomialXY, RepthyError> {
    if lambda.kind() != GroupKind::GeneralLinear {
        return Err(RepthyError::WrongGroup {
            expected: GroupKind::GeneralLinear,
            got: lambda.kind(),
        });
    }
    let e = lambda.entries();
    let n = e.len();
    let t = e.iter().take_while(|&&v| v >= 0).count();
    let mut mono = MonomialXY::one(n);
    // y_s carries k_s - k_{s+1} for s < t, and y_t carries k_t
    for s in 1..=t {
        let next = if s < t { e[s] } else { 0 };
        mono.y_exponents[s - 1] = (e[s - 1] - next) as u32;
    }
    // x_{n-t-j} carries k_{t+j+1} - k_{t+j}, with k_t read as 0
    for j in 0..n - t {
        let k_here = -e[t + j];
        let k_prev = if j == 0 { 0 } else { -e[t + j - 1] };
        mono.x_exponents[n - t - j - 1] = (k_here - k_prev) as u32;
    }
    Ok(mono)
}

/// One degree of the Cauchy check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CauchyDegree {
    pub degree: usize,
    pub lhs_dim: u64,
    pub rhs_dim: u64,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CauchyReport {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<CauchyDegree>,
    pub passed: bool,
}

fn compositions(parts: usize, total: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(parts - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Compares, degree by degree, the bigraded character of `C[Hom(C^m, C^n)]`
/// (the expansion of `prod (1 - x_i y_j)^-1`) with `sum_lambda s_lambda(x) s_lambda(y)`.
pub fn cauchy_check(n: usize, m: usize, degree_bound: usize, bounds: &Bounds) -> Result<CauchyReport, RepthyError> {
    bounds.check("n", n, bounds.max_rank)?;
    bounds.check("m", m, bounds.max_rank)?;
    bounds.check("degree", degree_bound, bounds.max_degree)?;
    let mut vars = Character::indexed_variables("x", n);
    vars.extend(Character::indexed_variables("y", m));
    let mut degrees = Vec::new();
    for d in 0..=degree_bound {
        let mut lhs = Character::zero(vars.clone());
        for a in compositions(n * m, d) {
            let mut e = vec![0i64; n + m];
            for i in 0..n {
                for j in 0..m {
                    let v = a[i * m + j] as i64;
                    e[i] += v;
                    e[n + j] += v;
                }
            }
            lhs.add_term(e, 1);
        }
        let mut rhs = Character::zero(vars.clone());
        for p in all_partitions(d) {
            if p.len() > n.min(m) {
                continue;
            }
            let padded = |len: usize| {
                let mut v: Vec<i64> = p.parts().iter().map(|&x| i64::from(x)).collect();
                v.resize(len, 0);
                DominantWeight::gl(v).expect("partitions are dominant")
            };
            let sx = gl_character(&padded(n));
            let sy = gl_character(&padded(m));
            let sx = sx.map_exponents(vars.clone(), |e| {
                let mut v = e.to_vec();
                v.resize(n + m, 0);
                v
            });
            let sy = sy.map_exponents(vars.clone(), |e| {
                let mut v = vec![0; n];
                v.extend_from_slice(e);
                v
            });
            rhs = &rhs + &(&sx * &sy);
        }
        degrees.push(CauchyDegree {
            degree: d,
            lhs_dim: lhs.evaluate_at_ones() as u64,
            rhs_dim: rhs.evaluate_at_ones() as u64,
            equal: lhs == rhs,
        });
    }
    let passed = degrees.iter().all(|d| d.equal);
    Ok(CauchyReport { n, m, degrees, passed })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KsReport {
    pub n: usize,
    pub weight_bound: usize,
    pub admissible_monomials: usize,
    pub dominant_weights: usize,
    /// Monomial -> `GL(V)`-weight is injective with image the dominant weights in range.
    pub bijective: bool,
    /// [`lambda_monomial`] inverts the weight map.
    pub inverse_ok: bool,
    /// Every `T'`-weight is `lambda*`.
    pub dual_weight_ok: bool,
    /// `dim M(lambda) = dim M(lambda*)` for every weight pair.
    pub multiplicity_ok: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Enumerates admissible monomials of degree `<= weight_bound` and checks that
/// their weights are exactly the pairs `(lambda, lambda*)`, one per dominant `lambda`.
pub fn ks_presentation_check(n: usize, weight_bound: usize, bounds: &Bounds) -> Result<KsReport, RepthyError> {
    bounds.check("n", n, bounds.max_rank)?;
    bounds.check("weight bound", weight_bound, bounds.max_degree)?;
    let mut monomials = Vec::new();
    for d in 0..=weight_bound {
        for a in compositions(2 * n, d) {
            let mono = MonomialXY {
                x_exponents: a[..n].iter().map(|&v| v as u32).collect(),
                y_exponents: a[n..].iter().map(|&v| v as u32).collect(),
            };
            if mono.is_admissible() {
                monomials.push(mono);
            }
        }
    }
    let expected = DominantWeight::gl_weights_within(n, weight_bound as i64);
    let mut failures = Vec::new();
    let mut by_weight: BTreeMap<Vec<i64>, MonomialXY> = BTreeMap::new();
    let (mut inverse_ok, mut dual_weight_ok, mut multiplicity_ok) = (true, true, true);
    for mono in &monomials {
        let w = mono.gl_weight();
        let Ok(lambda) = DominantWeight::gl(w.clone()) else {
            failures.push(format!("{mono} has non-dominant weight {w:?}"));
            continue;
        };
        if let Some(prev) = by_weight.insert(w.clone(), mono.clone()) {
            failures.push(format!("{prev} and {mono} share weight {w:?}"));
        }
        if lambda_monomial(&lambda)? != *mono {
            inverse_ok = false;
            failures.push(format!("lambda_monomial({lambda}) != {mono}"));
        }
        let dual = lambda.dual();
        if mono.t_prime_weight() != dual.entries() {
            dual_weight_ok = false;
            failures.push(format!("T' weight of {mono} is {:?}, expected {:?}", mono.t_prime_weight(), dual.entries()));
        }
        if weyl_dim(&lambda) != weyl_dim(&dual) {
            multiplicity_ok = false;
            failures.push(format!("dim {lambda} != dim {dual}"));
        }
    }
    let image_matches = by_weight.len() == expected.len()
        && expected.iter().all(|w| by_weight.contains_key(w.entries()));
    if !image_matches {
        failures.push(format!(
            "image has {} weights, expected {} dominant weights",
            by_weight.len(),
            expected.len()
        ));
    }
    let bijective = image_matches && by_weight.len() == monomials.len();
    let passed = bijective && inverse_ok && dual_weight_ok && multiplicity_ok && failures.is_empty();
    Ok(KsReport {
        n,
        weight_bound,
        admissible_monomials: monomials.len(),
        dominant_weights: expected.len(),
        bijective,
        inverse_ok,
        dual_weight_ok,
        multiplicity_ok,
        failures,
        passed,
    })
}
