//! The compressed multivariate Faà di Bruno formula.
//!
//! The `i`-th derivative of `F(G_1(t), ..., G_n(t))` with `t` in `m`
//! variables is assembled in three steps:
//!
//! 1. Multinomial expansion over ordered tuples `(k_1, ..., k_n)` summing to
//!    `i`, weighted by `i! / (k_1! ... k_n!)`.
//! 2. Each factor `k_j` expands over the partitions `λ` of `k_j` with weight
//!    `k_j! / (m(λ)! λ!)`, an outer power `l(λ)` and the inner product
//!    `prod_col (g^(j)_col)^mult`. The zero index contributes 1.
//! 3. The outer powers `(l(λ_1), ..., l(λ_n))` of one product are collected
//!    into a single outer symbol `f_{l_1,...,l_n}`.
//!
//! With `n = 1` this is the univariate-outer case; sharing the inner symbols
//! gives the single-inner-family variants.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::{DerivSymbol, Factors, FormulaPoly};
use crate::error::{Error, Result};
use crate::multiindex::{compositions_into, multinomial, partitions, MultiIndex, PartitionCounter};
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

/// Default cap on the predicted number of output terms.
pub const DEFAULT_TERM_CAP: u128 = 10_000_000;

/// A moment sequence `a_0 = 1, a_1, a_2, ...` (or `a_i` over multi-indices).
#[derive(Clone, Debug, PartialEq)]
pub enum MomentSequence {
    /// Keep the symbols.
    SymbolicOuter,
    /// `a_k = 1` for every `k`.
    Unity,
    /// `a_k = (-1)^(k-1) (k-1)!`, the coefficients of `1 + log(1 + t)`.
    SingletonDotSingleton,
    /// `a_k = (-1)^k k!`, the coefficients of `1 / (1 + t)`.
    MinusOneDotSingleton,
    /// `a_k = c^k`; for multi-indices `a_i = c^|i|`.
    ScalarPowers(BigRational),
    /// Explicit `a_1, ..., a_K`.
    NumericUni(Vec<BigRational>),
    /// Explicit values over multi-indices; the zero index is always 1.
    NumericMulti(BTreeMap<MultiIndex, BigRational>),
}

impl MomentSequence {
    pub fn numeric_multi(values: impl IntoIterator<Item = (MultiIndex, BigRational)>) -> Self {
        MomentSequence::NumericMulti(values.into_iter().collect())
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, MomentSequence::SymbolicOuter)
    }

    /// Univariate value `a_k`.
    pub fn at_order(&self, k: u32) -> Result<BigRational> {
        self.value(&MultiIndex::new(&[k]))
    }

    pub fn value(&self, i: &MultiIndex) -> Result<BigRational> {
        if i.is_zero() {
            return Ok(BigRational::one());
        }
        let missing = || Error::MissingValue(format!("{self:?} at {i}"));
        let univariate = || if i.len() == 1 { Some(i.get(0)) } else { None };
        let int = |v: BigInt| BigRational::from_integer(v);
        match self {
            MomentSequence::SymbolicOuter => Err(missing()),
            MomentSequence::Unity => Ok(BigRational::one()),
            MomentSequence::ScalarPowers(c) => Ok(num_traits::pow(c.clone(), i.order() as usize)),
            MomentSequence::SingletonDotSingleton => {
                let k = univariate().ok_or_else(missing)?;
                let f = int(BigInt::from(crate::multiindex::factorial(k - 1)));
                Ok(if k % 2 == 1 { f } else { -f })
            }
            MomentSequence::MinusOneDotSingleton => {
                let k = univariate().ok_or_else(missing)?;
                let f = int(BigInt::from(crate::multiindex::factorial(k)));
                Ok(if k % 2 == 0 { f } else { -f })
            }
            MomentSequence::NumericUni(values) => {
                let k = univariate().ok_or_else(missing)?;
                values.get(k as usize - 1).cloned().ok_or_else(missing)
            }
            MomentSequence::NumericMulti(values) => values.get(i).cloned().ok_or_else(missing),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerMode {
    /// `n` different inner functions `G_1, ..., G_n`.
    Distinct,
    /// One inner function family shared by every outer argument.
    Shared,
}

/// Which inner function a single dot-power expansion belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerTag {
    Function(u32),
    Shared,
}

impl InnerTag {
    fn func(self) -> u32 {
        match self {
            InnerTag::Function(j) => j,
            InnerTag::Shared => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSpec {
    /// Derivative order, one entry per inner variable.
    pub i: MultiIndex,
    /// Outer arity, i.e. the number of inner functions.
    pub n: usize,
    /// Number of inner variables.
    pub m: usize,
    pub inner_mode: InnerMode,
}

impl CompositionSpec {
    pub fn new(i: MultiIndex, n: usize, inner_mode: InnerMode) -> Result<Self> {
        let spec = CompositionSpec { m: i.len(), i, n, inner_mode };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::InvalidInput("n and m must be at least 1".into()));
        }
        if self.i.len() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "index {} has length {} but m = {}",
                self.i,
                self.i.len(),
                self.m
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct UmfbOptions {
    pub term_cap: u128,
    /// Spread the composition sum over the current rayon pool.
    pub parallel: bool,
}

impl Default for UmfbOptions {
    fn default() -> Self {
        UmfbOptions { term_cap: DEFAULT_TERM_CAP, parallel: true }
    }
}

/// Environment variable overriding [`DEFAULT_TERM_CAP`].
pub const TERM_CAP_ENV: &str = "UMFB_TERM_CAP";

impl UmfbOptions {
    /// Defaults, with the cap taken from `UMFB_TERM_CAP` when set.
    pub fn from_env() -> Result<Self> {
        let mut opts = UmfbOptions::default();
        if let Ok(raw) = std::env::var(TERM_CAP_ENV) {
            opts.term_cap = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("{TERM_CAP_ENV}={raw:?} is not a nonnegative integer")))?;
        }
        Ok(opts)
    }
}

/// One partition of `k` seen as a term of the dot-power expansion.
#[derive(Clone, Debug)]
struct PowerTerm {
    coeff: BigInt,
    length: u32,
    columns: Vec<(MultiIndex, u32)>,
}

fn power_terms(k: &MultiIndex) -> Vec<PowerTerm> {
    if k.is_zero() {
        return vec![PowerTerm { coeff: BigInt::one(), length: 0, columns: Vec::new() }];
    }
    let kf = k.factorial();
    partitions(k)
        .expect("nonzero index")
        .map(|lambda| PowerTerm {
            coeff: BigInt::from(&kf / (lambda.multiplicity_factorial() * lambda.column_factorial())),
            length: lambda.length(),
            columns: lambda.columns().to_vec(),
        })
        .collect()
}

/// Upper bound on the number of output terms (exact in distinct mode):
/// `sum over (k_1..k_n) of prod_j p(k_j)`.
pub fn predicted_terms(spec: &CompositionSpec) -> u128 {
    let mut counter = PartitionCounter::default();
    let mut cache: HashMap<MultiIndex, BigUint> = HashMap::new();
    let mut total = BigUint::zero();
    for comp in compositions_into(&spec.i, spec.n) {
        let mut prod = BigUint::one();
        for k in &comp {
            let c = cache.entry(k.clone()).or_insert_with(|| counter.count(k));
            prod *= &*c;
        }
        total += prod;
    }
    total.to_u128().unwrap_or(u128::MAX)
}

fn check_cap(spec: &CompositionSpec, opts: &UmfbOptions) -> Result<()> {
    let predicted = predicted_terms(spec);
    if predicted > opts.term_cap {
        return Err(Error::TermCapExceeded { predicted, cap: opts.term_cap });
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum OuterStyle {
    Symbol,
    Variables,
}

fn assemble(spec: &CompositionSpec, opts: &UmfbOptions, style: OuterStyle) -> Result<FormulaPoly> {
    spec.validate()?;
    check_cap(spec, opts)?;
    let comps: Vec<Vec<MultiIndex>> = compositions_into(&spec.i, spec.n).collect();
    let distinct: BTreeSet<&MultiIndex> = comps.iter().flatten().collect();
    let table: HashMap<MultiIndex, Vec<PowerTerm>> = if opts.parallel {
        distinct.into_par_iter().map(|k| (k.clone(), power_terms(k))).collect()
    } else {
        distinct.into_iter().map(|k| (k.clone(), power_terms(k))).collect()
    };

    let expand = |comp: &Vec<MultiIndex>| expand_composition(spec, comp, &table, style);
    let raw: Vec<(BigInt, Factors)> = if opts.parallel {
        comps.par_iter().flat_map_iter(expand).collect()
    } else {
        comps.iter().flat_map(expand).collect()
    };
    Ok(FormulaPoly::from_terms(spec.n, spec.m, raw))
}

/// All products for one ordered tuple `(k_1, ..., k_n)`.
fn expand_composition(
    spec: &CompositionSpec,
    comp: &[MultiIndex],
    table: &HashMap<MultiIndex, Vec<PowerTerm>>,
    style: OuterStyle,
) -> Vec<(BigInt, Factors)> {
    let weight = BigInt::from(multinomial(&spec.i, comp).expect("composition sums to i"));
    let lists: Vec<&Vec<PowerTerm>> = comp.iter().map(|k| &table[k]).collect();
    let size: usize = lists.iter().map(|l| l.len()).product();
    let mut out = Vec::with_capacity(size);
    let mut choice = vec![0usize; lists.len()];
    loop {
        let mut coeff = weight.clone();
        let mut lengths = MultiIndex::zeros(spec.n);
        let mut raw: Vec<(DerivSymbol, u32)> = Vec::new();
        for (j, (list, &c)) in lists.iter().zip(&choice).enumerate() {
            let term = &list[c];
            coeff *= &term.coeff;
            lengths.set(j, term.length);
            let func = match spec.inner_mode {
                InnerMode::Distinct => j as u32 + 1,
                InnerMode::Shared => 1,
            };
            raw.extend(term.columns.iter().map(|(col, r)| (DerivSymbol::inner(func, col.clone()), *r)));
        }
        if !lengths.is_zero() {
            match style {
                OuterStyle::Symbol => raw.push((DerivSymbol::Outer(lengths), 1)),
                OuterStyle::Variables => raw.extend(
                    lengths.entries().iter().enumerate().map(|(j, &l)| (DerivSymbol::Var(j as u32 + 1), l)),
                ),
            }
        }
        out.push((coeff, Factors::from_unsorted(raw)));

        // Odometer over the per-part choices, last part fastest.
        let mut pos = lists.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < lists[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// The compressed multivariate Faà di Bruno formula for `spec`.
pub fn umfb(spec: &CompositionSpec) -> Result<FormulaPoly> {
    umfb_with(spec, &UmfbOptions::default())
}

pub fn umfb_with(spec: &CompositionSpec, opts: &UmfbOptions) -> Result<FormulaPoly> {
    assemble(spec, opts, OuterStyle::Symbol)
}

/// Generalized Bell polynomial: the outer symbol `f_{l_1..l_n}` becomes the
/// monomial `x_1^{l_1} ... x_n^{l_n}`.
pub fn generalized_bell(spec: &CompositionSpec) -> Result<FormulaPoly> {
    generalized_bell_with(spec, &UmfbOptions::default())
}

pub fn generalized_bell_with(spec: &CompositionSpec, opts: &UmfbOptions) -> Result<FormulaPoly> {
    assemble(spec, opts, OuterStyle::Variables)
}

/// Replaces each variable monomial `x^l` by the outer symbol `f_l`.
pub fn vars_to_outer(p: &FormulaPoly) -> FormulaPoly {
    let (n, m) = p.dims();
    let raw = p.terms().iter().map(|t| {
        let mut lengths = MultiIndex::zeros(n);
        let mut rest = Vec::new();
        for (s, e) in t.factors.as_slice() {
            match s {
                DerivSymbol::Var(j) => lengths.set(*j as usize - 1, *e),
                other => rest.push((other.clone(), *e)),
            }
        }
        if !lengths.is_zero() {
            rest.push((DerivSymbol::Outer(lengths), 1));
        }
        (t.coeff.clone(), Factors::from_unsorted(rest))
    });
    FormulaPoly::from_terms(n, m, raw.collect::<Vec<_>>())
}

/// `(α·β·μ)^i` for one inner function: the sum over partitions of `i`.
///
/// A symbolic `outer` yields the univariate outer symbol `f_{l(λ)}`; a
/// numeric one multiplies by `a_{l(λ)}`.
pub fn dot_power_expansion(
    outer: &MomentSequence,
    i: &MultiIndex,
    tag: InnerTag,
) -> Result<FormulaPoly<BigRational>> {
    let m = i.len();
    let func = tag.func();
    let mut raw = Vec::new();
    for term in power_terms(i) {
        let mut coeff = BigRational::from_integer(term.coeff);
        let mut factors: Vec<(DerivSymbol, u32)> =
            term.columns.iter().map(|(c, r)| (DerivSymbol::inner(func, c.clone()), *r)).collect();
        if term.length > 0 {
            if outer.is_symbolic() {
                factors.push((DerivSymbol::Outer(MultiIndex::new(&[term.length])), 1));
            } else {
                coeff *= outer.at_order(term.length)?;
            }
        }
        raw.push((coeff, Factors::from_unsorted(factors)));
    }
    Ok(FormulaPoly::from_terms(1, m, raw))
}

/// Numeric evaluation of `(α·β·μ)^i`:
/// `sum over λ of i!/(m(λ)! λ!) a_{l(λ)} prod_col g_col^mult`.
pub fn evaluate_power<F: Scalar>(
    i: &MultiIndex,
    mut outer: impl FnMut(u32) -> Result<F>,
    mut inner: impl FnMut(&MultiIndex) -> Result<F>,
) -> Result<F> {
    if i.is_zero() {
        return Ok(F::one());
    }
    let fact = i.factorial();
    let mut outer_cache: HashMap<u32, F> = HashMap::new();
    let mut inner_cache: HashMap<MultiIndex, F> = HashMap::new();
    let mut total = F::zero();
    for lambda in partitions(i)? {
        let mut prod = F::one();
        for (col, r) in lambda.columns() {
            let g = match inner_cache.get(col) {
                Some(g) => g.clone(),
                None => {
                    let g = inner(col)?;
                    inner_cache.insert(col.clone(), g.clone());
                    g
                }
            };
            for _ in 0..*r {
                prod = prod * g.clone();
            }
            if prod.is_zero() {
                break;
            }
        }
        if prod.is_zero() {
            continue;
        }
        let l = lambda.length();
        let a = match outer_cache.get(&l) {
            Some(a) => a.clone(),
            None => {
                let a = outer(l)?;
                outer_cache.insert(l, a.clone());
                a
            }
        };
        let w = BigInt::from(&fact / (lambda.multiplicity_factorial() * lambda.column_factorial()));
        total = total + F::from_bigint(&w) * a * prod;
    }
    Ok(total)
}

/// Largest truncation order accepted by [`compose_generating_check`].
pub const MAX_CHECK_ORDER: u32 = 10;

/// Composes the generating functions directly as truncated power series,
/// `f[μ, (f(ν_1,t) - 1, ..., f(ν_n,t) - 1)]`, and returns every coefficient
/// `i! [t^i]` with `|i| <= order`.
///
/// `outer` is indexed by multi-indices of length `n`; `inner` holds one
/// sequence per inner function (a single one in shared mode).
pub fn compose_generating_check(
    spec: &CompositionSpec,
    outer: &MomentSequence,
    inner: &[MomentSequence],
    order: u32,
) -> Result<BTreeMap<MultiIndex, BigRational>> {
    spec.validate()?;
    if order > MAX_CHECK_ORDER {
        return Err(Error::TruncationTooLarge { order, vars: spec.m });
    }
    let inner_for = |j: usize| -> Result<&MomentSequence> {
        let seq = match spec.inner_mode {
            InnerMode::Shared => inner.first(),
            InnerMode::Distinct => inner.get(j),
        };
        seq.ok_or_else(|| Error::MissingValue(format!("inner sequence {}", j + 1)))
    };

    let mut powers: Vec<Vec<TruncatedSeries<BigRational>>> = Vec::with_capacity(spec.n);
    for j in 0..spec.n {
        let seq = inner_for(j)?;
        let shifted = TruncatedSeries::from_exponential(spec.m, order, |k| seq.value(k))?;
        let mut list = vec![TruncatedSeries::constant(spec.m, order, BigRational::one())?];
        for e in 1..=order {
            let next = list[e as usize - 1].mul(&shifted);
            list.push(next);
        }
        powers.push(list);
    }

    let mut total = TruncatedSeries::zero(spec.m, order)?;
    for l in MultiIndex::all_up_to(spec.n, order) {
        let a = outer.value(&l)?;
        if a.is_zero() {
            continue;
        }
        let mut term = TruncatedSeries::constant(spec.m, order, a / BigRational::from_integer(l.factorial().into()))?;
        for (j, &e) in l.entries().iter().enumerate() {
            term = term.mul(&powers[j][e as usize]);
        }
        total = total.add(&term);
    }

    Ok(MultiIndex::all_up_to(spec.m, order)
        .into_iter()
        .map(|i| {
            let c = total.exponential_coefficient(&i);
            (i, c)
        })
        .collect())
}
