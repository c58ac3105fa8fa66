//! Sparse Laurent polynomials in one variable `q` over the integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// Element of `Z[q, q^-1]`, stored as a map from exponent to nonzero
/// coefficient. The zero polynomial has an empty term map, so equality of
/// the representation is equality of the value.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentInt {
    terms: BTreeMap<i64, i64>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms as `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Evaluates at an integer value of `q`. Only defined when every
    /// exponent is nonnegative; rational evaluation of genuinely Laurent
    /// expressions belongs to the callers that track denominators.
    pub fn eval(&self, q: i64) -> Result<i64> {
        let mut total: i64 = 0;
        for (&e, &c) in &self.terms {
            if e < 0 {
                return Err(Error::Domain(format!(
                    "cannot evaluate exponent {e} at an integer argument"
                )));
            }
            let power = (0..e).try_fold(1i64, |acc, _| acc.checked_mul(q));
            let term = power.and_then(|pw| pw.checked_mul(c));
            total = term
                .and_then(|t| total.checked_add(t))
                .ok_or_else(|| Error::Domain("integer overflow in evaluation".into()))?;
        }
        Ok(total)
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (&e, &c) in &self.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentInt {
    /// Canonical form: terms in ascending exponent order joined by `+`,
    /// each rendered `c*q^e`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c}*q^{e}"))
            .collect();
        write!(f, "{}", rendered.join("+"))
    }
}
