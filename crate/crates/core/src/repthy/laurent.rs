use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;
use serde::{Deserialize, Serialize};

/// A Laurent polynomial in named variables with coefficients in `C`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentPolynomial<C> {
    variables: Vec<String>,
    terms: BTreeMap<Vec<i64>, C>,
}

/// Characters have integer coefficients.
pub type Character = LaurentPolynomial<i64>;

impl<C: Clone + Num> LaurentPolynomial<C> {
    pub fn zero(variables: Vec<String>) -> Self {
        Self {
            variables,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(variables: Vec<String>) -> Self {
        let n = variables.len();
        Self::monomial(variables, vec![0; n], C::one())
    }

    pub fn monomial(variables: Vec<String>, exponents: Vec<i64>, coefficient: C) -> Self {
        assert_eq!(variables.len(), exponents.len(), "exponent vector length");
        let mut p = Self::zero(variables);
        p.add_term(exponents, coefficient);
        p
    }

    /// Variables `prefix1 .. prefixN`.
    pub fn indexed_variables(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[i64]) -> C {
        self.terms.get(exponents).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<i64>, coefficient: C) {
        debug_assert_eq!(exponents.len(), self.variables.len());
        if coefficient.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&exponents) {
            Some(c) => c + coefficient,
            None => coefficient,
        };
        if !merged.is_zero() {
            self.terms.insert(exponents, merged);
        }
    }

    /// Value at `t_i = 1` for all `i`.
    pub fn evaluate_at_ones(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&vec![0; self.variables.len()])
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero(self.variables.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Substitutes monomials: the term `t^e` becomes `s^{f(e)}` in `variables`.
    /// Restriction to a subtorus and specialization of variables to 1 are both of this form.
    pub fn map_exponents(&self, variables: Vec<String>, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let mut out = Self::zero(variables);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Terms whose exponent vector satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&[i64]) -> bool) -> Self {
        let mut out = Self::zero(self.variables.clone());
        for (e, c) in &self.terms {
            if keep(e) {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.variables, other.variables, "Laurent polynomials in different variables");
    }
}

impl<C: Clone + Num> Add for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;
    fn add(self, rhs: Self) -> Self::Output {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Clone + Num> Sub for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;
    fn sub(self, rhs: Self) -> Self::Output {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), C::zero() - c.clone());
        }
        out
    }
}

impl<C: Clone + Num> Neg for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;
    fn neg(self) -> Self::Output {
        self.scale(&(C::zero() - C::one()))
    }
}

impl<C: Clone + Num> Mul for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;
    // exponents of monomials add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self::Output {
        self.check_compatible(rhs);
        let mut out = LaurentPolynomial::zero(self.variables.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Clone + Num + fmt::Display + PartialOrd> fmt::Display for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest exponents first reads like the usual character notation
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < C::zero();
            let abs = if negative { C::zero() - c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let factors: Vec<String> = self
                .variables
                .iter()
                .zip(e)
                .filter(|(_, &p)| p != 0)
                .map(|(v, &p)| if p == 1 { v.clone() } else { format!("{v}^{p}") })
                .collect();
            match (factors.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", factors.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}
