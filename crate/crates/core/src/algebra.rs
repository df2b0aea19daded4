//! Sparse polynomials over abstract derivative symbols.
//!
//! Symbols are the outer coefficients `f_j` (one multi-index of length `n`),
//! the inner coefficients `g^(k)_j` of the `k`-th inner function (multi-index
//! of length `m`), and plain variables `x_k` for generalized Bell polynomials.
//!
//! Canonical form: factors inside a monomial are sorted by symbol (outer
//! before inner before variables; inner by function id, then index
//! lexicographically) with equal symbols merged into one exponent. Terms are
//! sorted graded-lexicographically on their factor lists: total degree first,
//! then the `(symbol, exponent)` sequence compared lexicographically. Like
//! terms are collected and zero coefficients dropped, so the number of terms
//! equals the number of distinct factor lists.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdb::MomentSequence;
use crate::multiindex::MultiIndex;

/// Coefficient rings a [`FormulaPoly`] can carry.
pub trait Coefficient: Clone + Debug + Display + Num + Signed + Send + Sync {
    fn to_rational(&self) -> BigRational;

    fn parse_decimal(s: &str) -> Result<Self> {
        Self::from_str_radix(s.trim(), 10).map_err(|_| Error::Json(format!("bad coefficient {s:?}")))
    }

    fn to_latex(&self) -> String {
        self.to_string()
    }
}

impl Coefficient for BigInt {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coefficient for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn to_latex(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum DerivSymbol {
    /// Outer coefficient `f_j`; the zero index stands for the constant 1.
    Outer(MultiIndex),
    /// Coefficient `j` of inner function `func` (1-based).
    Inner { func: u32, index: MultiIndex },
    /// Variable `x_j` (1-based).
    Var(u32),
}

impl DerivSymbol {
    pub fn outer(index: MultiIndex) -> Self {
        DerivSymbol::Outer(index)
    }

    pub fn inner(func: u32, index: MultiIndex) -> Self {
        DerivSymbol::Inner { func, index }
    }

    fn write_text(&self, out: &mut String) {
        match self {
            DerivSymbol::Outer(i) => write_bracketed(out, "f", i),
            DerivSymbol::Inner { func, index } => write_bracketed(out, &format!("g{func}"), index),
            DerivSymbol::Var(j) => {
                let _ = write!(out, "x{j}");
            }
        }
    }

    fn latex(&self) -> String {
        let subscript = |i: &MultiIndex| {
            i.entries().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        };
        match self {
            DerivSymbol::Outer(i) => format!("f_{{{}}}", subscript(i)),
            DerivSymbol::Inner { func, index } => format!("g^{{({func})}}_{{{}}}", subscript(index)),
            DerivSymbol::Var(j) => format!("x_{{{j}}}"),
        }
    }
}

fn write_bracketed(out: &mut String, name: &str, i: &MultiIndex) {
    out.push_str(name);
    out.push('[');
    for (k, x) in i.entries().iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
}

/// Sorted `(symbol, exponent)` list with distinct symbols and exponents >= 1.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct Factors(Vec<(DerivSymbol, u32)>);

impl Factors {
    pub fn one() -> Self {
        Factors(Vec::new())
    }

    pub fn single(sym: DerivSymbol, pow: u32) -> Self {
        if pow == 0 {
            Factors::one()
        } else {
            Factors(vec![(sym, pow)])
        }
    }

    /// Sorts and merges equal symbols; zero exponents are dropped.
    pub fn from_unsorted(mut raw: Vec<(DerivSymbol, u32)>) -> Self {
        raw.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(DerivSymbol, u32)> = Vec::with_capacity(raw.len());
        for (s, e) in raw {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((prev, pe)) if *prev == s => *pe += e,
                _ => out.push((s, e)),
            }
        }
        Factors(out)
    }

    pub fn as_slice(&self) -> &[(DerivSymbol, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    pub fn exponent_of(&self, sym: &DerivSymbol) -> u32 {
        self.0
            .binary_search_by(|(s, _)| s.cmp(sym))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Factors) -> Factors {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                Ordering::Less => {
                    out.push(a[x].clone());
                    x += 1;
                }
                Ordering::Greater => {
                    out.push(b[y].clone());
                    y += 1;
                }
                Ordering::Equal => {
                    out.push((a[x].0.clone(), a[x].1 + b[y].1));
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        Factors(out)
    }

    /// Applies `f` to every symbol and re-canonicalizes.
    pub fn map_symbols(&self, f: impl Fn(&DerivSymbol) -> DerivSymbol) -> Factors {
        Factors::from_unsorted(self.0.iter().map(|(s, e)| (f(s), *e)).collect())
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            s.write_text(&mut out);
            if *e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }

    fn latex(&self) -> String {
        self.0
            .iter()
            .map(|(s, e)| match (s, *e) {
                (_, 1) => s.latex(),
                (DerivSymbol::Var(_), e) => format!("{}^{{{e}}}", s.latex()),
                (_, e) => format!("({})^{{{e}}}", s.latex()),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl PartialOrd for Factors {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Factors {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl Display for Factors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            f.write_str(&self.text())
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial<C = BigInt> {
    pub coeff: C,
    pub factors: Factors,
}

/// A collected, canonically ordered polynomial in `n` outer arguments and
/// `m` inner variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormulaPoly<C = BigInt> {
    n: usize,
    m: usize,
    terms: Vec<Monomial<C>>,
}

const PARALLEL_SORT_THRESHOLD: usize = 1 << 15;

impl<C: Coefficient> FormulaPoly<C> {
    pub fn zero(n: usize, m: usize) -> Self {
        FormulaPoly { n, m, terms: Vec::new() }
    }

    pub fn unit(n: usize, m: usize) -> Self {
        Self::constant(n, m, C::one())
    }

    pub fn constant(n: usize, m: usize, c: C) -> Self {
        Self::from_terms(n, m, vec![(c, Factors::one())])
    }

    pub fn monomial(n: usize, m: usize, c: C, factors: Factors) -> Self {
        Self::from_terms(n, m, vec![(c, factors)])
    }

    pub fn symbol(n: usize, m: usize, sym: DerivSymbol) -> Self {
        Self::monomial(n, m, C::one(), Factors::single(sym, 1))
    }

    /// Collects arbitrary `(coefficient, factors)` pairs into canonical form.
    pub fn from_terms(n: usize, m: usize, raw: impl IntoIterator<Item = (C, Factors)>) -> Self {
        let mut raw: Vec<(C, Factors)> = raw.into_iter().collect();
        if raw.len() >= PARALLEL_SORT_THRESHOLD {
            raw.par_sort_unstable_by(|a, b| a.1.cmp(&b.1));
        } else {
            raw.sort_unstable_by(|a, b| a.1.cmp(&b.1));
        }
        let mut terms: Vec<Monomial<C>> = Vec::with_capacity(raw.len());
        for (c, f) in raw {
            match terms.last_mut() {
                Some(last) if last.factors == f => last.coeff = last.coeff.clone() + c,
                _ => terms.push(Monomial { coeff: c, factors: f }),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        FormulaPoly { n, m, terms }
    }

    /// Wraps terms that are already sorted, distinct and nonzero.
    pub(crate) fn from_canonical(n: usize, m: usize, terms: Vec<Monomial<C>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].factors < w[1].factors));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        FormulaPoly { n, m, terms }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn terms(&self) -> &[Monomial<C>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Monomial<C>> {
        self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the polynomial has no symbols left.
    pub fn constant_value(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [t] if t.factors.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.dims() == other.dims() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "(n, m) = {:?} vs {:?}",
                self.dims(),
                other.dims()
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].factors.cmp(&b[y].factors) {
                Ordering::Less => {
                    out.push(a[x].clone());
                    x += 1;
                }
                Ordering::Greater => {
                    out.push(b[y].clone());
                    y += 1;
                }
                Ordering::Equal => {
                    let c = a[x].coeff.clone() + b[y].coeff.clone();
                    if !c.is_zero() {
                        out.push(Monomial { coeff: c, factors: a[x].factors.clone() });
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        Ok(Self::from_canonical(self.n, self.m, out))
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Monomial { coeff: -t.coeff.clone(), factors: t.factors.clone() })
            .collect();
        Self::from_canonical(self.n, self.m, terms)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.m);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Monomial { coeff: t.coeff.clone() * c.clone(), factors: t.factors.clone() })
            .collect();
        Self::from_canonical(self.n, self.m, terms)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let raw: Vec<(C, Factors)> = self
            .terms
            .par_iter()
            .flat_map_iter(|a| {
                other
                    .terms
                    .iter()
                    .map(move |b| (a.coeff.clone() * b.coeff.clone(), a.factors.mul(&b.factors)))
            })
            .collect();
        Ok(Self::from_terms(self.n, self.m, raw))
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::unit(self.n, self.m);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Applies a symbol map to every monomial and re-collects.
    pub fn map_symbols(&self, f: impl Fn(&DerivSymbol) -> DerivSymbol + Sync) -> Self {
        let raw: Vec<(C, Factors)> =
            self.terms.iter().map(|t| (t.coeff.clone(), t.factors.map_symbols(&f))).collect();
        Self::from_terms(self.n, self.m, raw)
    }

    /// Relabels every inner symbol to function id 1 (shared inner mode).
    pub fn share_inner(&self) -> Self {
        self.map_symbols(|s| match s {
            DerivSymbol::Inner { index, .. } => DerivSymbol::inner(1, index.clone()),
            other => other.clone(),
        })
    }

    pub fn to_rational(&self) -> FormulaPoly<BigRational> {
        let terms = self
            .terms
            .iter()
            .map(|t| Monomial { coeff: t.coeff.to_rational(), factors: t.factors.clone() })
            .collect();
        FormulaPoly::from_canonical(self.n, self.m, terms)
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = t.coeff.abs();
            if t.factors.is_one() {
                let _ = write!(out, "{abs}");
            } else {
                if !abs.is_one() {
                    let _ = write!(out, "{abs}*");
                }
                out.push_str(&t.factors.text());
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = t.coeff.abs();
            if t.factors.is_one() {
                out.push_str(&abs.to_latex());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_latex());
                    out.push(' ');
                }
                out.push_str(&t.factors.latex());
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = PolyDoc {
            n: self.n,
            m: self.m,
            terms: self.terms.iter().map(TermDoc::from_monomial).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("polynomial documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PolyDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut raw = Vec::with_capacity(doc.terms.len());
        for t in doc.terms {
            raw.push(t.into_pair()?);
        }
        Ok(Self::from_terms(doc.n, doc.m, raw))
    }
}

impl<C: Coefficient> Display for FormulaPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn poly_add<C: Coefficient>(p: &FormulaPoly<C>, q: &FormulaPoly<C>) -> Result<FormulaPoly<C>> {
    p.add(q)
}

pub fn poly_mul<C: Coefficient>(p: &FormulaPoly<C>, q: &FormulaPoly<C>) -> Result<FormulaPoly<C>> {
    p.mul(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

pub fn render<C: Coefficient>(p: &FormulaPoly<C>, format: Format) -> String {
    match format {
        Format::Text => p.to_text(),
        Format::Latex => p.to_latex(),
        Format::Json => p.to_json(),
    }
}

/// Values to put in place of the inner symbols.
#[derive(Clone, Debug)]
pub enum InnerValues {
    /// Leave inner symbols untouched.
    Symbolic,
    /// One sequence per inner function id (1-based); a single sequence is
    /// applied to every function id.
    Sequences(Vec<MomentSequence>),
}

impl InnerValues {
    fn for_func(&self, func: u32) -> Option<&MomentSequence> {
        match self {
            InnerValues::Symbolic => None,
            InnerValues::Sequences(seqs) if seqs.len() == 1 => seqs.first(),
            InnerValues::Sequences(seqs) => seqs.get(func as usize - 1),
        }
    }
}

/// Replaces outer symbols by `outer` values (unless `outer` is symbolic) and
/// inner symbols by the matching sequence values. Variables are kept.
pub fn substitute<C: Coefficient>(
    p: &FormulaPoly<C>,
    outer: &MomentSequence,
    inner: &InnerValues,
) -> Result<FormulaPoly<BigRational>> {
    let mut raw = Vec::with_capacity(p.term_count());
    for t in p.terms() {
        let mut coeff = t.coeff.to_rational();
        let mut kept = Vec::new();
        for (sym, e) in t.factors.as_slice() {
            let value = match sym {
                DerivSymbol::Outer(i) if i.is_zero() => Some(BigRational::one()),
                DerivSymbol::Outer(i) if !outer.is_symbolic() => Some(outer.value(i)?),
                DerivSymbol::Inner { func, index } => match inner.for_func(*func) {
                    Some(seq) => Some(seq.value(index)?),
                    None => None,
                },
                _ => None,
            };
            match value {
                Some(v) => coeff *= num_traits::pow(v, *e as usize),
                None => kept.push((sym.clone(), *e)),
            }
        }
        raw.push((coeff, Factors::from_unsorted(kept)));
    }
    Ok(FormulaPoly::from_terms(p.n, p.m, raw))
}

/// Fully numeric substitution.
pub fn evaluate<C: Coefficient>(
    p: &FormulaPoly<C>,
    outer: &MomentSequence,
    inner: &[MomentSequence],
) -> Result<BigRational> {
    let s = substitute(p, outer, &InnerValues::Sequences(inner.to_vec()))?;
    s.constant_value()
        .ok_or_else(|| Error::MissingValue(format!("symbols remain after substitution: {s}")))
}

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    n: usize,
    m: usize,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    coeff: String,
    /// The outer index when the term has exactly one outer factor of power 1.
    outer: Option<MultiIndex>,
    /// Any other outer content (higher powers, several outer symbols).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    outer_factors: Vec<OuterDoc>,
    inner: Vec<InnerDoc>,
    vars: Vec<VarDoc>,
}

#[derive(Serialize, Deserialize)]
struct OuterDoc {
    index: MultiIndex,
    pow: u32,
}

#[derive(Serialize, Deserialize)]
struct InnerDoc {
    #[serde(rename = "fn")]
    func: u32,
    index: MultiIndex,
    pow: u32,
}

#[derive(Serialize, Deserialize)]
struct VarDoc {
    j: u32,
    pow: u32,
}

impl TermDoc {
    fn from_monomial<C: Coefficient>(t: &Monomial<C>) -> Self {
        let mut outers = Vec::new();
        let mut inner = Vec::new();
        let mut vars = Vec::new();
        for (s, e) in t.factors.as_slice() {
            match s {
                DerivSymbol::Outer(i) => outers.push(OuterDoc { index: i.clone(), pow: *e }),
                DerivSymbol::Inner { func, index } => {
                    inner.push(InnerDoc { func: *func, index: index.clone(), pow: *e })
                }
                DerivSymbol::Var(j) => vars.push(VarDoc { j: *j, pow: *e }),
            }
        }
        let (outer, outer_factors) = match outers.as_slice() {
            [single] if single.pow == 1 => (Some(single.index.clone()), Vec::new()),
            _ => (None, outers),
        };
        TermDoc { coeff: t.coeff.to_string(), outer, outer_factors, inner, vars }
    }

    fn into_pair<C: Coefficient>(self) -> Result<(C, Factors)> {
        let coeff = C::parse_decimal(&self.coeff)?;
        let mut raw = Vec::new();
        if let Some(i) = self.outer {
            raw.push((DerivSymbol::Outer(i), 1));
        }
        raw.extend(self.outer_factors.into_iter().map(|o| (DerivSymbol::Outer(o.index), o.pow)));
        raw.extend(self.inner.into_iter().map(|g| (DerivSymbol::inner(g.func, g.index), g.pow)));
        raw.extend(self.vars.into_iter().map(|v| (DerivSymbol::Var(v.j), v.pow)));
        Ok((coeff, Factors::from_unsorted(raw)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v)
    }

    fn sym(name: char) -> DerivSymbol {
        DerivSymbol::Var(name as u32 - 'a' as u32 + 1)
    }

    fn var(name: char) -> FormulaPoly {
        FormulaPoly::symbol(1, 1, sym(name))
    }

    fn f(i: &[u32]) -> DerivSymbol {
        DerivSymbol::Outer(mi(i))
    }

    fn g(func: u32, i: &[u32]) -> DerivSymbol {
        DerivSymbol::inner(func, mi(i))
    }

    fn mono(n: usize, m: usize, c: i64, fs: &[DerivSymbol]) -> FormulaPoly {
        let raw = fs.iter().map(|s| (s.clone(), 1)).collect();
        FormulaPoly::monomial(n, m, BigInt::from(c), Factors::from_unsorted(raw))
    }

    #[test]
    fn add_collects_like_terms() {
        let p = mono(1, 1, 1, &[f(&[1]), g(1, &[1])]);
        let two = p.add(&p).unwrap();
        assert_eq!(two.term_count(), 1);
        assert_eq!(two.to_text(), "2*f[1]*g1[1]");
        assert_eq!(p.add(&FormulaPoly::zero(1, 1)).unwrap(), p);
        assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn mul_distributes() {
        let fg = FormulaPoly::<BigInt>::symbol(1, 2, f(&[1])).mul(&FormulaPoly::symbol(1, 2, g(1, &[1, 0]))).unwrap();
        assert_eq!(fg.to_text(), "f[1]*g1[1,0]");

        let lhs = var('a').add(&var('b')).unwrap().mul(&var('c')).unwrap();
        let rhs = var('a').mul(&var('c')).unwrap().add(&var('b').mul(&var('c')).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_text(), "x1*x3 + x2*x3");

        let s = FormulaPoly::<BigInt>::symbol(1, 2, g(1, &[1, 0]))
            .add(&FormulaPoly::symbol(1, 2, g(1, &[0, 1])))
            .unwrap();
        let sq = s.pow(2).unwrap();
        assert_eq!(sq.to_text(), "2*g1[0,1]*g1[1,0] + g1[0,1]^2 + g1[1,0]^2");
    }

    #[test]
    fn dimension_mismatch() {
        let p = FormulaPoly::<BigInt>::unit(1, 1);
        let q = FormulaPoly::<BigInt>::unit(2, 2);
        assert!(matches!(p.add(&q), Err(Error::DimensionMismatch(_))));
        assert!(matches!(p.mul(&q), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn render_formats() {
        let p = mono(1, 1, 2, &[f(&[1, 0])]);
        assert_eq!(render(&p, Format::Text), "2*f[1,0]");
        assert_eq!(render(&FormulaPoly::<BigInt>::zero(1, 1), Format::Text), "0");
        assert_eq!(render(&FormulaPoly::<BigInt>::zero(1, 1), Format::Latex), "0");
        assert_eq!(render(&FormulaPoly::<BigInt>::unit(1, 1), Format::Text), "1");
        let q = FormulaPoly::monomial(
            2,
            2,
            BigInt::from(-3),
            Factors::from_unsorted(vec![(f(&[2, 0]), 1), (g(1, &[1, 0]), 2)]),
        );
        assert_eq!(q.to_text(), "-3*f[2,0]*g1[1,0]^2");
        assert_eq!(q.to_latex(), "-3 f_{2,0} (g^{(1)}_{1,0})^{2}");
        let r = q.to_rational().scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(r.to_text(), "-3/2*f[2,0]*g1[1,0]^2");
        assert_eq!(r.to_latex(), "-\\frac{3}{2} f_{2,0} (g^{(1)}_{1,0})^{2}");
    }

    #[test]
    fn json_layout_and_round_trip() {
        let p = mono(2, 2, 5, &[f(&[1, 1]), g(1, &[1, 0]), g(2, &[0, 1])]);
        let text = p.to_json();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(v["terms"][0]["coeff"], "5");
        assert_eq!(v["terms"][0]["outer"], serde_json::json!([1, 1]));
        assert_eq!(v["terms"][0]["inner"][1], serde_json::json!({"fn": 2, "index": [0, 1], "pow": 1}));
        assert_eq!(FormulaPoly::<BigInt>::from_json(&text).unwrap(), p);

        let odd = FormulaPoly::<BigInt>::monomial(
            1,
            1,
            BigInt::from(7),
            Factors::from_unsorted(vec![(f(&[1]), 2), (f(&[2]), 1), (DerivSymbol::Var(1), 3)]),
        );
        assert_eq!(FormulaPoly::<BigInt>::from_json(&odd.to_json()).unwrap(), odd);
        assert!(FormulaPoly::<BigInt>::from_json("{\"n\": 1}").is_err());
    }

    #[test]
    fn substitute_values() {
        let p = mono(1, 2, 1, &[f(&[2]), g(1, &[1, 0]), g(1, &[0, 1])]);
        let one = MomentSequence::Unity;
        assert_eq!(evaluate(&p, &one, std::slice::from_ref(&one)).unwrap(), BigRational::one());

        let q = mono(1, 2, 1, &[f(&[1]), g(1, &[1, 1])]);
        let outer = MomentSequence::NumericUni(vec![BigRational::from_integer(2.into())]);
        let inner = MomentSequence::numeric_multi([(mi(&[1, 1]), BigRational::from_integer(3.into()))]);
        assert_eq!(evaluate(&q, &outer, std::slice::from_ref(&inner)).unwrap(), BigRational::from_integer(6.into()));

        let partial = substitute(&q, &MomentSequence::SymbolicOuter, &InnerValues::Sequences(vec![inner])).unwrap();
        assert_eq!(partial.to_text(), "3*f[1]");

        let missing = substitute(&q, &MomentSequence::NumericUni(vec![]), &InnerValues::Symbolic);
        assert!(matches!(missing, Err(Error::MissingValue(_))));
    }

    #[test]
    fn term_order_is_graded() {
        let p = mono(1, 1, 1, &[f(&[2]), g(1, &[1])])
            .add(&mono(1, 1, 1, &[f(&[1])]))
            .unwrap()
            .add(&mono(1, 1, 1, &[f(&[1]), g(1, &[2])]))
            .unwrap();
        assert_eq!(p.to_text(), "f[1] + f[1]*g1[2] + f[2]*g1[1]");
    }
}
