//! Moment-sequence applications: cumulants, compound Poisson moments, the
//! Laplace sign rule and multivariate Hermite polynomials.
//!
//! Every conversion is one evaluation of the partition sum
//!
//! ```text
//! sum over λ ⊨ i of  i! / (m(λ)! λ!) · a_{l(λ)} · prod_col g_col^mult
//! ```
//!
//! with a suitable outer sequence `a`:
//!
//! | conversion            | `a_k`                 |
//! |-----------------------|-----------------------|
//! | moments → cumulants   | `(-1)^(k-1) (k-1)!`   |
//! | cumulants → moments   | `1`                   |
//! | compound Poisson      | moments of the count  |
//! | reciprocal `1/f`      | `(-1)^k k!`           |
//! | Hermite               | `(-1)^k`              |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdb::{evaluate_power, MomentSequence};
use crate::multiindex::MultiIndex;
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

/// Parses `p`, `p/q` or a finite decimal such as `-1.25` or `3e-2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    if s.contains('/') {
        let r = BigRational::from_str(s).map_err(|_| bad())?;
        return Ok(r);
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str(if all.is_empty() { "0" } else { &all }).map_err(|_| bad())?;
    let shift = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(numer);
    if shift >= 0 {
        r *= BigRational::from_integer(num_traits::pow(ten, shift as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow(ten, (-shift) as usize));
    }
    Ok(if neg { -r } else { r })
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact values `m_i` for every `|i| <= K` in `n` variables; `m_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentTable {
    n: usize,
    order: u32,
    values: BTreeMap<MultiIndex, BigRational>,
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    n: usize,
    #[serde(rename = "K")]
    order: u32,
    values: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    index: MultiIndex,
    value: String,
}

impl MomentTable {
    /// Builds a table; every index of order `1..=order` must be present, the
    /// zero entry is filled in when absent and must otherwise equal 1.
    pub fn new(n: usize, order: u32, mut values: BTreeMap<MultiIndex, BigRational>) -> Result<Self> {
        let zero = MultiIndex::zeros(n);
        match values.get(&zero) {
            Some(v) if !v.is_one() => {
                return Err(Error::InvalidInput(format!("value at the zero index must be 1, got {v}")))
            }
            Some(_) => {}
            None => {
                values.insert(zero, BigRational::one());
            }
        }
        for i in values.keys() {
            if i.len() != n {
                return Err(Error::DimensionMismatch(format!("index {i} in a table over {n} variables")));
            }
            if i.order() > u64::from(order) {
                return Err(Error::InvalidInput(format!("index {i} exceeds table order {order}")));
            }
        }
        for i in MultiIndex::all_up_to(n, order) {
            if !values.contains_key(&i) {
                return Err(Error::MissingValue(format!("table entry {i}")));
            }
        }
        Ok(MomentTable { n, order, values })
    }

    pub fn from_fn(n: usize, order: u32, mut f: impl FnMut(&MultiIndex) -> BigRational) -> Result<Self> {
        let values = MultiIndex::all_up_to(n, order)
            .into_iter()
            .map(|i| {
                let v = if i.is_zero() { BigRational::one() } else { f(&i) };
                (i, v)
            })
            .collect();
        Self::new(n, order, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, i: &MultiIndex) -> Result<&BigRational> {
        if i.len() != self.n {
            return Err(Error::DimensionMismatch(format!("index {i} for a table over {} variables", self.n)));
        }
        self.values.get(i).ok_or_else(|| Error::MissingValue(format!("table entry {i}")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &BigRational)> {
        self.values.iter()
    }

    pub fn to_sequence(&self) -> MomentSequence {
        MomentSequence::NumericMulti(self.values.clone())
    }

    pub fn to_json(&self) -> String {
        let doc = TableDoc {
            n: self.n,
            order: self.order,
            values: self
                .values
                .iter()
                .map(|(i, v)| EntryDoc { index: i.clone(), value: format_rational(v) })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("tables always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TableDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut values = BTreeMap::new();
        for e in doc.values {
            let v = parse_rational(&e.value)?;
            if values.insert(e.index.clone(), v).is_some() {
                return Err(Error::Json(format!("duplicate entry {}", e.index)));
            }
        }
        Self::new(doc.n, doc.order, values)
    }

    fn check_index(&self, i: &MultiIndex) -> Result<()> {
        if i.len() != self.n {
            return Err(Error::DimensionMismatch(format!("index {i} for a table over {} variables", self.n)));
        }
        if i.order() > u64::from(self.order) {
            return Err(Error::MissingValue(format!("index {i} beyond table order {}", self.order)));
        }
        Ok(())
    }

    fn map_all(&self, f: impl Fn(&MultiIndex) -> Result<BigRational>) -> Result<MomentTable> {
        let mut values = BTreeMap::new();
        for i in self.values.keys() {
            values.insert(i.clone(), f(i)?);
        }
        Ok(MomentTable { n: self.n, order: self.order, values })
    }
}

impl fmt::Display for MomentTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in &self.values {
            writeln!(f, "{i} {}", format_rational(v))?;
        }
        Ok(())
    }
}

fn sign(k: u64) -> BigRational {
    if k.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn partition_sum(
    i: &MultiIndex,
    outer: &MomentSequence,
    inner: impl FnMut(&MultiIndex) -> Result<BigRational>,
) -> Result<BigRational> {
    evaluate_power(i, |l| outer.at_order(l), inner)
}

pub fn moments_to_cumulants(mom: &MomentTable, i: &MultiIndex) -> Result<BigRational> {
    mom.check_index(i)?;
    if i.is_zero() {
        return Ok(BigRational::zero());
    }
    partition_sum(i, &MomentSequence::SingletonDotSingleton, |c| mom.get(c).cloned())
}

/// Inverse of [`moments_to_cumulants`]; the zero entry of `cum` is ignored.
pub fn cumulants_to_moments(cum: &MomentTable, i: &MultiIndex) -> Result<BigRational> {
    cum.check_index(i)?;
    partition_sum(i, &MomentSequence::Unity, |c| cum.get(c).cloned())
}

/// Cumulants at every index of the table. The zero entry stays 1.
pub fn cumulant_table(mom: &MomentTable) -> Result<MomentTable> {
    mom.map_all(|i| if i.is_zero() { Ok(BigRational::one()) } else { moments_to_cumulants(mom, i) })
}

pub fn moment_table(cum: &MomentTable) -> Result<MomentTable> {
    cum.map_all(|i| cumulants_to_moments(cum, i))
}

/// Moments of a randomized compound Poisson sum: `alpha` holds the moments
/// of the count (one variable), `mu` those of the summands.
pub fn compound_poisson_moments(alpha: &MomentTable, mu: &MomentTable, i: &MultiIndex) -> Result<BigRational> {
    if alpha.n() != 1 {
        return Err(Error::DimensionMismatch(format!("count table must be univariate, has {} variables", alpha.n())));
    }
    mu.check_index(i)?;
    evaluate_power(i, |l| alpha.get(&MultiIndex::new(&[l])).cloned(), |c| mu.get(c).cloned())
}

/// The `i`-th coefficient of `f(μ, -t)`, i.e. `(-1)^|i| m_i`.
pub fn laplace_derivative_sign(mom: &MomentTable, i: &MultiIndex) -> Result<BigRational> {
    mom.check_index(i)?;
    Ok(sign(i.order()) * mom.get(i)?)
}

/// Same value as [`laplace_derivative_sign`], computed through the
/// cumulants: `f(μ, -t) = exp(K(-t))`, so each cumulant `c_k` picks up
/// `(-1)^|k|` before converting back.
pub fn laplace_via_cumulants(mom: &MomentTable, i: &MultiIndex) -> Result<BigRational> {
    mom.check_index(i)?;
    let mut flipped = BTreeMap::new();
    for k in i.sub_indices() {
        if !k.is_zero() {
            let c = moments_to_cumulants(mom, &k)?;
            flipped.insert(k.clone(), sign(k.order()) * c);
        }
    }
    evaluate_power(i, |_| Ok(BigRational::one()), |c| {
        flipped.get(c).cloned().ok_or_else(|| Error::MissingValue(format!("cumulant {c}")))
    })
}

/// `i!` times the coefficient of `t^i` in `1 / f(μ, t)`.
pub fn reciprocal_moments(mom: &MomentTable, i: &MultiIndex) -> Result<BigRational> {
    mom.check_index(i)?;
    partition_sum(i, &MomentSequence::MinusOneDotSingleton, |c| mom.get(c).cloned())
}

/// Dense symmetric `n × n` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix<F> {
    n: usize,
    entries: Vec<F>,
}

impl<F: Scalar> SymmetricMatrix<F> {
    /// `rows` in row-major order; must be exactly symmetric.
    pub fn new(n: usize, rows: Vec<F>) -> Result<Self> {
        if rows.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} entries for a {n}x{n} matrix", rows.len())));
        }
        for a in 0..n {
            for b in a + 1..n {
                if rows[a * n + b] != rows[b * n + a] {
                    return Err(Error::InvalidInput(format!("matrix is not symmetric at ({}, {})", a + 1, b + 1)));
                }
            }
        }
        Ok(SymmetricMatrix { n, entries: rows })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![F::zero(); n * n];
        for a in 0..n {
            entries[a * n + a] = F::one();
        }
        SymmetricMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> &F {
        &self.entries[a * self.n + b]
    }

    /// Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<SymmetricMatrix<F>> {
        let n = self.n;
        let mut left = self.entries.clone();
        let mut right = Self::identity(n).entries;
        let scale = left.iter().fold(F::zero(), |acc, v| if v.abs() > acc { v.abs() } else { acc });
        for col in 0..n {
            let mut best = col;
            for r in col + 1..n {
                if left[r * n + col].abs() > left[best * n + col].abs() {
                    best = r;
                }
            }
            let pivot = left[best * n + col].clone();
            if F::is_negligible(&pivot, &scale) {
                return Err(Error::SingularSigma { column: col + 1, pivot: format!("{pivot:?}") });
            }
            if best != col {
                for k in 0..n {
                    left.swap(best * n + k, col * n + k);
                    right.swap(best * n + k, col * n + k);
                }
            }
            for k in 0..n {
                left[col * n + k] = left[col * n + k].clone() / pivot.clone();
                right[col * n + k] = right[col * n + k].clone() / pivot.clone();
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = left[r * n + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for k in 0..n {
                    left[r * n + k] = left[r * n + k].clone() - factor.clone() * left[col * n + k].clone();
                    right[r * n + k] = right[r * n + k].clone() - factor.clone() * right[col * n + k].clone();
                }
            }
        }
        // Rounding can break float symmetry; average the two halves.
        for a in 0..n {
            for b in a + 1..n {
                let v = (right[a * n + b].clone() + right[b * n + a].clone()) / F::from_i64(2);
                right[a * n + b] = v.clone();
                right[b * n + a] = v;
            }
        }
        Ok(SymmetricMatrix { n, entries: right })
    }

    /// `x A` for a row vector `x`.
    pub fn left_mul(&self, x: &[F]) -> Vec<F> {
        (0..self.n)
            .map(|b| (0..self.n).fold(F::zero(), |acc, a| acc + x[a].clone() * self.get(a, b).clone()))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermiteKind {
    /// `H_i(x, Σ)`, generating function `exp(x Σ⁻¹ tᵀ - ½ t Σ⁻¹ tᵀ)`.
    Standard,
    /// `H̃_i(x, Σ)`, generating function `exp(x tᵀ - ½ t Σ tᵀ)`.
    Scaled,
}

/// The quadratic form `A` and shift `c` with generating function
/// `exp(c tᵀ - ½ t A tᵀ)`.
pub fn hermite_parameters<F: Scalar>(
    sigma: &SymmetricMatrix<F>,
    x: &[F],
    kind: HermiteKind,
) -> Result<(SymmetricMatrix<F>, Vec<F>)> {
    if x.len() != sigma.dim() {
        return Err(Error::DimensionMismatch(format!("x has {} entries, Σ is {}x{}", x.len(), sigma.dim(), sigma.dim())));
    }
    match kind {
        HermiteKind::Standard => {
            let inv = sigma.inverse()?;
            let c = inv.left_mul(x);
            Ok((inv, c))
        }
        HermiteKind::Scaled => {
            // Singular Σ is still rejected so both kinds share preconditions.
            sigma.inverse()?;
            Ok((sigma.clone(), x.to_vec()))
        }
    }
}

/// Order-2 moments of `ν` with `f(ν, t) = 1 + ½ t A tᵀ`:
/// `ν_{e_a + e_b} = A_ab`, `ν_{2 e_a} = A_aa`, zero elsewhere.
fn quadratic_moment<F: Scalar>(a: &SymmetricMatrix<F>, col: &MultiIndex) -> F {
    if col.order() != 2 {
        return F::zero();
    }
    let nz: Vec<usize> = (0..col.len()).filter(|&k| col.get(k) > 0).collect();
    match nz.as_slice() {
        [p] => a.get(*p, *p).clone(),
        [p, q] => a.get(*p, *q).clone(),
        _ => F::zero(),
    }
}

fn alternating<F: Scalar>(l: u32) -> Result<F> {
    Ok(if l.is_multiple_of(2) { F::one() } else { -F::one() })
}

fn check_hermite_index<F>(i: &MultiIndex, sigma: &SymmetricMatrix<F>) -> Result<()> {
    if i.len() != sigma.n {
        return Err(Error::DimensionMismatch(format!("index {i} for a {}x{} Σ", sigma.n, sigma.n)));
    }
    Ok(())
}

fn multi_binomial(i: &MultiIndex, k: &MultiIndex) -> BigUint {
    let rest = i.checked_sub(k).expect("k <= i");
    i.factorial() / (k.factorial() * rest.factorial())
}

fn power_of_vector<F: Scalar>(c: &[F], e: &MultiIndex) -> F {
    let mut acc = F::one();
    for (r, &p) in e.entries().iter().enumerate() {
        for _ in 0..p {
            acc = acc * c[r].clone();
        }
    }
    acc
}

/// `(−1·β·ν + c)^i = sum_{k ≤ i} C(i, k) E[(−1·β·ν)^k] c^(i−k)`.
pub fn hermite<F: Scalar>(i: &MultiIndex, sigma: &SymmetricMatrix<F>, x: &[F], kind: HermiteKind) -> Result<F> {
    check_hermite_index(i, sigma)?;
    let (a, c) = hermite_parameters(sigma, x, kind)?;
    let mut total = F::zero();
    for k in i.sub_indices() {
        let moment = evaluate_power(&k, alternating::<F>, |col| Ok(quadratic_moment(&a, col)))?;
        if moment.is_zero() {
            continue;
        }
        let rest = i.checked_sub(&k).expect("sub-index");
        let w = F::from_bigint(&BigInt::from(multi_binomial(i, &k)));
        total = total + w * moment * power_of_vector(&c, &rest);
    }
    Ok(total)
}

/// `(−1)^|i| E[(−1·β·μ_x)^i]`, where `μ_x` has first moments `c` and second
/// moments from `A`, i.e. `f(μ_x, t) = 1 + ½ t A tᵀ + c tᵀ`.
pub fn hermite_via_bell<F: Scalar>(
    i: &MultiIndex,
    sigma: &SymmetricMatrix<F>,
    x: &[F],
    kind: HermiteKind,
) -> Result<F> {
    check_hermite_index(i, sigma)?;
    let (a, c) = hermite_parameters(sigma, x, kind)?;
    let shifted = |col: &MultiIndex| -> Result<F> {
        Ok(match col.order() {
            1 => c[col.first_nonzero().expect("order 1")].clone(),
            2 => quadratic_moment(&a, col),
            _ => F::zero(),
        })
    };
    let v = evaluate_power(i, alternating::<F>, shifted)?;
    Ok(if i.order().is_multiple_of(2) { v } else { -v })
}

/// Direct coefficient extraction from the truncated series of
/// `exp(c tᵀ - ½ t A tᵀ)`.
pub fn hermite_series_check<F: Scalar>(
    i: &MultiIndex,
    sigma: &SymmetricMatrix<F>,
    x: &[F],
    kind: HermiteKind,
) -> Result<F> {
    check_hermite_index(i, sigma)?;
    let (a, c) = hermite_parameters(sigma, x, kind)?;
    let order = u32::try_from(i.order()).map_err(|_| Error::TruncationTooLarge { order: u32::MAX, vars: a.n })?;
    let n = a.n;
    let half = F::one() / F::from_i64(2);
    let mut exponent = TruncatedSeries::zero(n, order)?;
    for (r, cr) in c.iter().enumerate() {
        exponent.set(MultiIndex::unit(n, r), cr.clone());
    }
    for p in 0..n {
        let diag = MultiIndex::unit(n, p).with_increment(p);
        exponent.set(diag, -(half.clone() * a.get(p, p).clone()));
        for q in p + 1..n {
            let off = MultiIndex::unit(n, p).with_increment(q);
            exponent.set(off, -a.get(p, q).clone());
        }
    }
    Ok(exponent.exp()?.exponential_coefficient(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v)
    }

    fn table2() -> MomentTable {
        let mut v = BTreeMap::new();
        v.insert(mi(&[1, 0]), q(2));
        v.insert(mi(&[0, 1]), q(1));
        v.insert(mi(&[2, 0]), q(7));
        v.insert(mi(&[1, 1]), q(5));
        v.insert(mi(&[0, 2]), q(3));
        MomentTable::new(2, 2, v).unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(parse_rational("-1.25").unwrap(), BigRational::new((-5).into(), 4.into()));
        assert_eq!(parse_rational("2e3").unwrap(), q(2000));
        assert_eq!(parse_rational("7").unwrap(), q(7));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn low_order_cumulants() {
        let t = table2();
        assert_eq!(moments_to_cumulants(&t, &mi(&[1, 0])).unwrap(), q(2));
        assert_eq!(moments_to_cumulants(&t, &mi(&[1, 1])).unwrap(), q(3));
        assert_eq!(moments_to_cumulants(&t, &mi(&[2, 0])).unwrap(), q(3));
        assert!(matches!(moments_to_cumulants(&t, &mi(&[2, 1])), Err(Error::MissingValue(_))));
    }

    #[test]
    fn cumulants_back_to_moments() {
        let t = table2();
        let c = cumulant_table(&t).unwrap();
        assert_eq!(cumulants_to_moments(&c, &mi(&[1, 1])).unwrap(), q(5));
        assert_eq!(moment_table(&c).unwrap(), t);
    }

    #[test]
    fn poisson_bell() {
        let alpha = MomentTable::from_fn(1, 2, |_| q(1)).unwrap();
        let mu = MomentTable::from_fn(2, 2, |_| q(1)).unwrap();
        assert_eq!(compound_poisson_moments(&alpha, &mu, &mi(&[1, 1])).unwrap(), q(2));
        assert_eq!(compound_poisson_moments(&alpha, &mu, &mi(&[1, 0])).unwrap(), q(1));
    }

    #[test]
    fn laplace_routes_agree() {
        let t = table2();
        for i in MultiIndex::all_up_to(2, 2) {
            assert_eq!(laplace_derivative_sign(&t, &i).unwrap(), laplace_via_cumulants(&t, &i).unwrap());
        }
        assert_eq!(laplace_derivative_sign(&t, &mi(&[1, 0])).unwrap(), q(-2));
        assert_eq!(laplace_derivative_sign(&t, &mi(&[1, 1])).unwrap(), q(5));
    }

    #[test]
    fn reciprocal_first_orders() {
        // 1/f has first coefficient -m_1 and second 2 m_1^2 - m_2.
        let t = table2();
        assert_eq!(reciprocal_moments(&t, &mi(&[1, 0])).unwrap(), q(-2));
        assert_eq!(reciprocal_moments(&t, &mi(&[2, 0])).unwrap(), q(1));
    }

    #[test]
    fn table_json_round_trip() {
        let t = table2();
        let back = MomentTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(MomentTable::from_json(r#"{"n":1,"K":2,"values":[{"index":[1],"value":"1"}]}"#).is_err());
    }

    #[test]
    fn univariate_hermite() {
        let s = SymmetricMatrix::new(1, vec![q(1)]).unwrap();
        let x = [q(2)];
        assert_eq!(hermite(&mi(&[3]), &s, &x, HermiteKind::Standard).unwrap(), q(2));
        assert_eq!(hermite(&mi(&[0]), &s, &x, HermiteKind::Standard).unwrap(), q(1));
        assert_eq!(hermite_via_bell(&mi(&[1]), &s, &x, HermiteKind::Standard).unwrap(), q(2));
        assert_eq!(hermite_series_check(&mi(&[4]), &s, &x, HermiteKind::Standard).unwrap(), q(16 - 24 + 3));
    }

    #[test]
    fn singular_sigma_rejected() {
        let s = SymmetricMatrix::new(2, vec![q(1), q(2), q(2), q(4)]).unwrap();
        assert!(matches!(s.inverse(), Err(Error::SingularSigma { .. })));
        let f = SymmetricMatrix::new(2, vec![1.0, 2.0, 2.0, 4.0 + 1e-15]).unwrap();
        assert!(matches!(f.inverse(), Err(Error::SingularSigma { .. })));
        assert!(SymmetricMatrix::new(2, vec![q(1), q(2), q(3), q(4)]).is_err());
    }

    #[test]
    fn inverse_of_two_by_two() {
        let s = SymmetricMatrix::new(2, vec![q(2), q(1), q(1), q(2)]).unwrap();
        let inv = s.inverse().unwrap();
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(inv.get(0, 0), &(q(2) * third.clone()));
        assert_eq!(inv.get(0, 1), &(-third));
    }

    #[test]
    fn bivariate_hermite_routes() {
        let s = SymmetricMatrix::new(2, vec![q(2), q(1), q(1), q(3)]).unwrap();
        let x = [q(1), BigRational::new((-1).into(), 2.into())];
        for kind in [HermiteKind::Standard, HermiteKind::Scaled] {
            for i in MultiIndex::all_up_to(2, 4) {
                let a = hermite(&i, &s, &x, kind).unwrap();
                assert_eq!(a, hermite_via_bell(&i, &s, &x, kind).unwrap(), "{i} {kind:?}");
                assert_eq!(a, hermite_series_check(&i, &s, &x, kind).unwrap(), "{i} {kind:?}");
            }
        }
    }
}
