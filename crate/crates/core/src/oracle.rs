//! Brute-force chain rule.
//!
//! Starts from `F(G_1(t), ..., G_n(t))`, represented by the single symbol
//! `f_{0,...,0}`, and applies `∂/∂t_r` repeatedly:
//!
//! * `f_a -> sum_j f_{a + e_j} * g^(j)_{e_r}`
//! * `g^(j)_l -> g^(j)_{l + e_r}`
//! * variables are constants,
//!
//! with the product rule across factors. The polynomial is collected after
//! every step.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{DerivSymbol, Factors, FormulaPoly, Monomial};
use crate::error::{Error, Result};
use crate::fdb::{predicted_terms, CompositionSpec, InnerMode, UmfbOptions};
use crate::multiindex::MultiIndex;

#[derive(Clone, Debug, PartialEq)]
pub struct DerivativeState {
    pub poly: FormulaPoly,
    pub applied: MultiIndex,
}

impl DerivativeState {
    pub fn start(n: usize, m: usize) -> Self {
        DerivativeState {
            poly: FormulaPoly::symbol(n, m, DerivSymbol::Outer(MultiIndex::zeros(n))),
            applied: MultiIndex::zeros(m),
        }
    }
}

fn symbol_derivative(sym: &DerivSymbol, r: usize, n: usize, m: usize) -> Vec<Vec<(DerivSymbol, u32)>> {
    match sym {
        DerivSymbol::Outer(a) => (0..n)
            .map(|j| {
                vec![
                    (DerivSymbol::Outer(a.with_increment(j)), 1),
                    (DerivSymbol::inner(j as u32 + 1, MultiIndex::unit(m, r)), 1),
                ]
            })
            .collect(),
        DerivSymbol::Inner { func, index } => vec![vec![(DerivSymbol::inner(*func, index.with_increment(r)), 1)]],
        DerivSymbol::Var(_) => Vec::new(),
    }
}

fn differentiate_term(
    t: &Monomial,
    r: usize,
    n: usize,
    m: usize,
    acc: &mut HashMap<Factors, BigInt>,
) {
    let factors = t.factors.as_slice();
    for (pos, (sym, e)) in factors.iter().enumerate() {
        let replacements = symbol_derivative(sym, r, n, m);
        if replacements.is_empty() {
            continue;
        }
        let coeff = &t.coeff * BigInt::from(*e);
        let mut rest: Vec<(DerivSymbol, u32)> = Vec::with_capacity(factors.len() + 2);
        for (k, (s, x)) in factors.iter().enumerate() {
            if k != pos {
                rest.push((s.clone(), *x));
            } else if *x > 1 {
                rest.push((s.clone(), x - 1));
            }
        }
        for rep in replacements {
            let mut raw = rest.clone();
            raw.extend(rep);
            let key = Factors::from_unsorted(raw);
            *acc.entry(key).or_insert_with(BigInt::zero) += &coeff;
        }
    }
}

fn collect(n: usize, m: usize, acc: HashMap<Factors, BigInt>) -> FormulaPoly {
    FormulaPoly::from_terms(n, m, acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(f, c)| (c, f)).collect::<Vec<_>>())
}

/// `∂/∂t_r` of a polynomial, `r` 0-based.
pub fn differentiate_poly(p: &FormulaPoly, r: usize, parallel: bool) -> FormulaPoly {
    let (n, m) = p.dims();
    let acc = if parallel {
        p.terms()
            .par_iter()
            .fold(HashMap::new, |mut acc, t| {
                differentiate_term(t, r, n, m, &mut acc);
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                let (big, small) = if a.len() >= b.len() { (&mut a, b) } else { (&mut b.clone(), a) };
                for (k, v) in small {
                    *big.entry(k).or_insert_with(BigInt::zero) += v;
                }
                std::mem::take(big)
            })
    } else {
        let mut acc = HashMap::new();
        for t in p.terms() {
            differentiate_term(t, r, n, m, &mut acc);
        }
        acc
    };
    collect(n, m, acc)
}

/// Applies `∂/∂t_r` (1-based `r`) to the state.
pub fn differentiate_once(state: &DerivativeState, r: usize) -> Result<DerivativeState> {
    let (_, m) = state.poly.dims();
    if r == 0 || r > m {
        return Err(Error::InvalidInput(format!("variable {r} out of range 1..={m}")));
    }
    Ok(DerivativeState {
        poly: differentiate_poly(&state.poly, r - 1, true),
        applied: state.applied.with_increment(r - 1),
    })
}

/// Size bookkeeping for a chain-rule run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleStats {
    /// Largest collected polynomial seen after any step.
    pub peak_terms: usize,
}

/// The `i`-th derivative by repeated chain rule, variables in increasing order.
pub fn chain_rule_derivative(spec: &CompositionSpec) -> Result<FormulaPoly> {
    chain_rule_derivative_with(spec, &UmfbOptions::default()).map(|(p, _)| p)
}

pub fn chain_rule_derivative_with(spec: &CompositionSpec, opts: &UmfbOptions) -> Result<(FormulaPoly, OracleStats)> {
    let order: Vec<usize> = (0..spec.m).flat_map(|r| std::iter::repeat_n(r, spec.i.get(r) as usize)).collect();
    chain_rule_in_order(spec, &order, opts)
}

/// Chain rule applying the 0-based variables in `order` one by one.
pub fn chain_rule_in_order(
    spec: &CompositionSpec,
    order: &[usize],
    opts: &UmfbOptions,
) -> Result<(FormulaPoly, OracleStats)> {
    spec.validate()?;
    let mut applied = MultiIndex::zeros(spec.m);
    for &r in order {
        if r >= spec.m {
            return Err(Error::InvalidInput(format!("variable {} out of range", r + 1)));
        }
        applied.set(r, applied.get(r) + 1);
    }
    if applied != spec.i {
        return Err(Error::InvalidInput(format!("order {order:?} does not apply {}", spec.i)));
    }
    let predicted = predicted_terms(spec);
    if predicted > opts.term_cap {
        return Err(Error::TermCapExceeded { predicted, cap: opts.term_cap });
    }

    let mut poly = DerivativeState::start(spec.n, spec.m).poly;
    let mut stats = OracleStats { peak_terms: poly.term_count() };
    for &r in order {
        poly = differentiate_poly(&poly, r, opts.parallel);
        stats.peak_terms = stats.peak_terms.max(poly.term_count());
    }
    if spec.i.is_zero() {
        // f_{0,...,0} is the constant 1.
        poly = FormulaPoly::unit(spec.n, spec.m);
    }
    if spec.inner_mode == InnerMode::Shared {
        poly = poly.share_inner();
    }
    Ok((poly, stats))
}

/// One monomial on which two polynomials disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub factors: Factors,
    pub left: BigInt,
    pub right: BigInt,
}

impl std::fmt::Display for Difference {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "monomial {}: left coefficient {}, right coefficient {}", self.factors, self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    Differ(Difference),
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

/// Compares canonical forms; reports the first differing monomial in term order.
pub fn equivalence_check(p: &FormulaPoly, q: &FormulaPoly) -> Result<Equivalence> {
    if p.dims() != q.dims() {
        return Err(Error::DimensionMismatch(format!("{:?} vs {:?}", p.dims(), q.dims())));
    }
    let (a, b) = (p.terms(), q.terms());
    let (mut x, mut y) = (0, 0);
    loop {
        let diff = match (a.get(x), b.get(y)) {
            (None, None) => return Ok(Equivalence::Equal),
            (Some(s), None) => Difference { factors: s.factors.clone(), left: s.coeff.clone(), right: BigInt::zero() },
            (None, Some(t)) => Difference { factors: t.factors.clone(), left: BigInt::zero(), right: t.coeff.clone() },
            (Some(s), Some(t)) => match s.factors.cmp(&t.factors) {
                std::cmp::Ordering::Less => {
                    Difference { factors: s.factors.clone(), left: s.coeff.clone(), right: BigInt::zero() }
                }
                std::cmp::Ordering::Greater => {
                    Difference { factors: t.factors.clone(), left: BigInt::zero(), right: t.coeff.clone() }
                }
                std::cmp::Ordering::Equal if s.coeff != t.coeff => {
                    Difference { factors: s.factors.clone(), left: s.coeff.clone(), right: t.coeff.clone() }
                }
                std::cmp::Ordering::Equal => {
                    x += 1;
                    y += 1;
                    continue;
                }
            },
        };
        return Ok(Equivalence::Differ(diff));
    }
}
