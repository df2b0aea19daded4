//! Truncated multivariate power series with ordinary coefficients.
//!
//! Used to compose generating functions directly, which gives an oracle for
//! the partition-based formulas that shares no code with them.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;
use crate::scalar::Scalar;

/// Largest number of retained monomials a series may have.
pub const MAX_SERIES_TERMS: usize = 200_000;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<F> {
    vars: usize,
    order: u32,
    coeffs: BTreeMap<MultiIndex, F>,
}

fn series_size(vars: usize, order: u32) -> Option<usize> {
    // C(order + vars, vars)
    let mut acc: u128 = 1;
    for j in 0..vars as u128 {
        acc = acc.checked_mul(u128::from(order) + j + 1)? / (j + 1);
    }
    usize::try_from(acc).ok()
}

impl<F: Scalar> TruncatedSeries<F> {
    pub fn zero(vars: usize, order: u32) -> Result<Self> {
        match series_size(vars, order) {
            Some(s) if s <= MAX_SERIES_TERMS => Ok(TruncatedSeries { vars, order, coeffs: BTreeMap::new() }),
            _ => Err(Error::TruncationTooLarge { order, vars }),
        }
    }

    pub fn constant(vars: usize, order: u32, c: F) -> Result<Self> {
        let mut s = Self::zero(vars, order)?;
        s.set(MultiIndex::zeros(vars), c);
        Ok(s)
    }

    /// `sum_i value(i) t^i / i!` over `0 < |i| <= order` (no constant term).
    pub fn from_exponential(
        vars: usize,
        order: u32,
        mut value: impl FnMut(&MultiIndex) -> Result<F>,
    ) -> Result<Self> {
        let mut s = Self::zero(vars, order)?;
        for i in MultiIndex::all_up_to(vars, order) {
            if i.is_zero() {
                continue;
            }
            let v = value(&i)?;
            let denom = F::from_bigint(&BigInt::from(i.factorial()));
            s.set(i, v / denom);
        }
        Ok(s)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn set(&mut self, i: MultiIndex, c: F) {
        debug_assert_eq!(i.len(), self.vars);
        if i.order() > u64::from(self.order) {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, c);
        }
    }

    pub fn coefficient(&self, i: &MultiIndex) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// `i! * [t^i]`.
    pub fn exponential_coefficient(&self, i: &MultiIndex) -> F {
        self.coefficient(i) * F::from_bigint(&BigInt::from(i.factorial()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            let v = out.coefficient(i) + c.clone();
            out.set(i.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = TruncatedSeries { vars: self.vars, order: self.order, coeffs: BTreeMap::new() };
        for (i, v) in &self.coeffs {
            out.set(i.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TruncatedSeries { vars: self.vars, order: self.order, coeffs: BTreeMap::new() };
        let limit = u64::from(self.order);
        for (i, a) in &self.coeffs {
            let oi = i.order();
            for (j, b) in &other.coeffs {
                if oi + j.order() > limit {
                    continue;
                }
                let k = i.add(j);
                let v = out.coefficient(&k) + a.clone() * b.clone();
                out.set(k, v);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TruncatedSeries { vars: self.vars, order: self.order, coeffs: BTreeMap::new() };
        acc.set(MultiIndex::zeros(self.vars), F::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `exp(self)` for a series without constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coefficient(&MultiIndex::zeros(self.vars)).is_zero() {
            return Err(Error::InvalidInput("exp needs a series without constant term".into()));
        }
        let mut term = Self::constant(self.vars, self.order, F::one())?;
        let mut sum = term.clone();
        for k in 1..=self.order {
            term = term.mul(self).scale(&(F::one() / F::from_i64(i64::from(k))));
            sum = sum.add(&term);
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn exp_of_identity_has_unit_exponential_coefficients() {
        let t = TruncatedSeries::from_exponential(1, 5, |i| Ok(if i.order() == 1 { q(1) } else { q(0) })).unwrap();
        let e = t.exp().unwrap();
        for k in 0..=5 {
            assert_eq!(e.exponential_coefficient(&MultiIndex::new(&[k])), q(1));
        }
    }

    #[test]
    fn truncation_guard() {
        assert!(TruncatedSeries::<f64>::zero(12, 40).is_err());
        assert!(TruncatedSeries::<f64>::zero(3, 8).is_ok());
    }

    #[test]
    fn product_truncates() {
        let mut x = TruncatedSeries::zero(2, 2).unwrap();
        x.set(MultiIndex::new(&[1, 0]), q(1));
        x.set(MultiIndex::new(&[0, 1]), q(1));
        let cube = x.pow(3);
        assert_eq!(cube, TruncatedSeries::zero(2, 2).unwrap());
        let sq = x.pow(2);
        assert_eq!(sq.coefficient(&MultiIndex::new(&[1, 1])), q(2));
    }
}
