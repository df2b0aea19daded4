//! Multi-indices and their combinatorics.
//!
//! A [`MultiIndex`] is a vector of nonnegative integers. Its derived ordering
//! is lexicographic, ascending, entry by entry; that ordering is the one used
//! for the columns of a [`MultiIndexPartition`] everywhere in the crate.
//!
//! Two enumerations live here:
//!
//! * [`compositions_into`] walks every ordered `n`-tuple of multi-indices
//!   (zero parts allowed) summing to a target, in lexicographic order of the
//!   concatenated tuple.
//! * [`partitions`] walks every partition of a multi-index, i.e. every
//!   multiset of nonzero columns summing to it. The walk is a depth-first
//!   descent that picks columns in nonincreasing lexicographic order from the
//!   residual index, so every multiset is produced exactly once.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Entries = SmallVec<[u32; 4]>;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Entries);

impl MultiIndex {
    pub fn new(entries: &[u32]) -> Self {
        MultiIndex(Entries::from_slice(entries))
    }

    pub fn zeros(len: usize) -> Self {
        MultiIndex(smallvec::smallvec![0; len])
    }

    /// The unit vector with a one at position `k` (0-based).
    pub fn unit(len: usize, k: usize) -> Self {
        let mut e = Self::zeros(len);
        e.0[k] = 1;
        e
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, k: usize) -> u32 {
        self.0[k]
    }

    pub fn set(&mut self, k: usize, value: u32) {
        self.0[k] = value;
    }

    /// `|i|`, the sum of the entries.
    pub fn order(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|&x| x != 0)
    }

    /// Entrywise `self <= other`.
    pub fn le_entrywise(&self, other: &MultiIndex) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Entries>>()
            .map(MultiIndex)
    }

    /// Entrywise sum. Panics if the lengths differ.
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.len(), other.len(), "multi-index length mismatch");
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn add_assign(&mut self, other: &MultiIndex) {
        assert_eq!(self.len(), other.len(), "multi-index length mismatch");
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    /// Entrywise subtraction; the caller guarantees `other <= self`.
    pub fn sub_assign(&mut self, other: &MultiIndex) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a -= b;
        }
    }

    pub fn with_increment(&self, k: usize) -> MultiIndex {
        let mut out = self.clone();
        out.0[k] += 1;
        out
    }

    pub fn permuted(&self, perm: &[usize]) -> MultiIndex {
        MultiIndex(perm.iter().map(|&p| self.0[p]).collect())
    }

    /// `i! = i_1! i_2! ... i_n!`
    pub fn factorial(&self) -> BigUint {
        self.0.iter().map(|&x| factorial(x)).product()
    }

    /// Every multi-index `k` with `0 <= k <= self` entrywise, in lexicographic order.
    pub fn sub_indices(&self) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = MultiIndex::zeros(self.len());
        loop {
            out.push(cur.clone());
            match (0..self.len()).rev().find(|&k| cur.0[k] < self.0[k]) {
                Some(k) => {
                    cur.0[k] += 1;
                    for j in k + 1..self.len() {
                        cur.0[j] = 0;
                    }
                }
                None => return out,
            }
        }
    }

    /// Every multi-index of length `len` and order at most `max_order`,
    /// graded by order and lexicographic within an order.
    pub fn all_up_to(len: usize, max_order: u32) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = MultiIndex::new(&vec![max_order; len])
            .sub_indices()
            .into_iter()
            .filter(|k| k.order() <= u64::from(max_order))
            .collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        out
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    /// Parses `"2,1"` (optionally wrapped in parentheses).
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.is_empty() {
            return Err(Error::InvalidInput("empty multi-index".into()));
        }
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad multi-index entry {t:?} in {s:?}")))
            })
            .collect::<Result<Entries>>()
            .map(MultiIndex)
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(Entries::from_vec(v))
    }
}

impl From<&[u32]> for MultiIndex {
    fn from(v: &[u32]) -> Self {
        MultiIndex::new(v)
    }
}

impl serde::Serialize for MultiIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for MultiIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<u32>::deserialize(d).map(MultiIndex::from)
    }
}

pub fn factorial(x: u32) -> BigUint {
    (2..=x).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn multi_factorial(i: &MultiIndex) -> BigUint {
    i.factorial()
}

/// `i! / (k_1! ... k_n!)` for parts summing entrywise to `i`.
pub fn multinomial(i: &MultiIndex, parts: &[MultiIndex]) -> Result<BigUint> {
    let mut sum = MultiIndex::zeros(i.len());
    for p in parts {
        if p.len() != i.len() {
            return Err(Error::PartsMismatch { target: i.clone() });
        }
        sum.add_assign(p);
    }
    if &sum != i {
        return Err(Error::PartsMismatch { target: i.clone() });
    }
    let denom: BigUint = parts.iter().map(MultiIndex::factorial).product();
    Ok(i.factorial() / denom)
}

/// Number of ordered `n`-tuples summing to `i`: `prod_r C(i_r + n - 1, n - 1)`.
pub fn count_compositions(i: &MultiIndex, n: usize) -> BigUint {
    i.entries()
        .iter()
        .map(|&x| binomial(u64::from(x) + n as u64 - 1, n as u64 - 1))
        .product()
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Ordered tuples `(k_1, ..., k_n)` with `sum k_j = i`, zero parts allowed.
///
/// Tuples come out in ascending lexicographic order of the concatenation
/// `k_1 ++ k_2 ++ ... ++ k_n`.
pub fn compositions_into(i: &MultiIndex, n: usize) -> Compositions {
    assert!(n >= 1, "a composition needs at least one part");
    Compositions {
        target: i.clone(),
        free: vec![0; (n - 1) * i.len()],
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct Compositions {
    target: MultiIndex,
    /// Flattened entries of the first `n - 1` parts; the last part is the residual.
    free: Vec<u32>,
    done: bool,
}

impl Compositions {
    /// Upper bound for the entry at flat position `pos`, given the parts before it.
    fn bound(&self, pos: usize) -> u32 {
        let len = self.target.len();
        let (part, r) = (pos / len, pos % len);
        let used: u32 = (0..part).map(|p| self.free[p * len + r]).sum();
        self.target.get(r) - used
    }

    fn current(&self) -> Vec<MultiIndex> {
        let len = self.target.len();
        let mut parts: Vec<MultiIndex> = self.free.chunks(len).map(MultiIndex::new).collect();
        let mut last = self.target.clone();
        for p in &parts {
            last.sub_assign(p);
        }
        parts.push(last);
        parts
    }
}

impl Iterator for Compositions {
    type Item = Vec<MultiIndex>;

    fn next(&mut self) -> Option<Vec<MultiIndex>> {
        if self.done {
            return None;
        }
        let out = self.current();
        match (0..self.free.len()).rev().find(|&pos| self.free[pos] < self.bound(pos)) {
            Some(pos) => {
                self.free[pos] += 1;
                for later in &mut self.free[pos + 1..] {
                    *later = 0;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// A partition of a multi-index: distinct nonzero columns in ascending
/// lexicographic order, each with a positive multiplicity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiIndexPartition {
    columns: Vec<(MultiIndex, u32)>,
}

impl MultiIndexPartition {
    /// Builds the canonical form from columns in any order.
    pub fn from_columns(mut cols: Vec<MultiIndex>) -> Result<Self> {
        if cols.is_empty() {
            return Err(Error::ZeroIndex);
        }
        let len = cols[0].len();
        if cols.iter().any(|c| c.len() != len) {
            return Err(Error::DimensionMismatch("partition columns of unequal length".into()));
        }
        if cols.iter().any(MultiIndex::is_zero) {
            return Err(Error::InvalidInput("partition column is zero".into()));
        }
        cols.sort();
        let mut columns: Vec<(MultiIndex, u32)> = Vec::new();
        for c in cols {
            match columns.last_mut() {
                Some((prev, mult)) if *prev == c => *mult += 1,
                _ => columns.push((c, 1)),
            }
        }
        Ok(MultiIndexPartition { columns })
    }

    pub fn columns(&self) -> &[(MultiIndex, u32)] {
        &self.columns
    }

    /// `l(λ)`, the number of columns counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.columns.iter().map(|(_, r)| r).sum()
    }

    /// `m(λ) = (r_1, r_2, ...)`.
    pub fn multiplicities(&self) -> Vec<u32> {
        self.columns.iter().map(|(_, r)| *r).collect()
    }

    /// The partitioned multi-index.
    pub fn total(&self) -> MultiIndex {
        let mut sum = MultiIndex::zeros(self.columns[0].0.len());
        for (c, r) in &self.columns {
            for _ in 0..*r {
                sum.add_assign(c);
            }
        }
        sum
    }

    /// `λ! = prod (column!)^multiplicity`.
    pub fn column_factorial(&self) -> BigUint {
        self.columns.iter().map(|(c, r)| c.factorial().pow(*r)).product()
    }

    /// `m(λ)! = prod r_j!`.
    pub fn multiplicity_factorial(&self) -> BigUint {
        self.columns.iter().map(|(_, r)| factorial(*r)).product()
    }

    /// `i! / (m(λ)! λ!)`: the number of set partitions of a multiset with
    /// multiplicity vector `i` whose blocks have the shapes in `λ`.
    pub fn coefficient(&self) -> BigUint {
        self.total().factorial() / (self.multiplicity_factorial() * self.column_factorial())
    }

    /// Columns repeated according to multiplicity, ascending.
    pub fn expanded_columns(&self) -> Vec<MultiIndex> {
        self.columns
            .iter()
            .flat_map(|(c, r)| std::iter::repeat_n(c.clone(), *r as usize))
            .collect()
    }

    /// Matrix notation: one bracketed row per variable, columns ascending,
    /// e.g. `[0 1 1; 1 0 0]` for `{(0,1), (1,0)^2}`.
    pub fn to_matrix_string(&self) -> String {
        let cols = self.expanded_columns();
        let rows: Vec<String> = (0..cols[0].len())
            .map(|r| cols.iter().map(|c| c.get(r).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

impl fmt::Display for MultiIndexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (c, r)) in self.columns.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
            if *r > 1 {
                write!(f, "^{r}")?;
            }
        }
        f.write_str("}")
    }
}

/// Every partition of `i`, each exactly once, in canonical form.
pub fn partitions(i: &MultiIndex) -> Result<Partitions> {
    if i.is_zero() {
        return Err(Error::ZeroIndex);
    }
    Ok(Partitions {
        target: i.clone(),
        residual: i.clone(),
        stack: Vec::new(),
        started: false,
        done: false,
    })
}

/// Depth-first walk; `stack` holds the chosen columns in nonincreasing
/// lexicographic order and `residual` is what they leave of the target.
#[derive(Debug, Clone)]
pub struct Partitions {
    target: MultiIndex,
    residual: MultiIndex,
    stack: Vec<MultiIndex>,
    started: bool,
    done: bool,
}

/// Lex-largest `c` with `c <= residual` entrywise and `c <=_lex bound`.
fn lex_max_below(residual: &MultiIndex, bound: &MultiIndex) -> MultiIndex {
    let mut c = MultiIndex::zeros(residual.len());
    let mut tight = true;
    for k in 0..residual.len() {
        let (r, b) = (residual.get(k), bound.get(k));
        if tight && r >= b {
            c.set(k, b);
        } else {
            c.set(k, r);
            tight = false;
        }
    }
    c
}

/// Lexicographic predecessor of `c` inside the box `[0, residual]`.
fn lex_pred_in_box(c: &MultiIndex, residual: &MultiIndex) -> Option<MultiIndex> {
    let k = (0..c.len()).rev().find(|&k| c.get(k) > 0)?;
    let mut p = c.clone();
    p.set(k, c.get(k) - 1);
    for j in k + 1..c.len() {
        p.set(j, residual.get(j));
    }
    Some(p)
}

/// Whether `rest` can be split into columns none of which exceeds `col`.
/// The column covering the first nonzero position of `rest` is at least the
/// unit vector there, and unit vectors always suffice.
fn completable(rest: &MultiIndex, col: &MultiIndex) -> bool {
    match (rest.first_nonzero(), col.first_nonzero()) {
        (None, _) => true,
        (Some(p), Some(q)) => q <= p,
        (Some(_), None) => false,
    }
}

fn admissible(candidate: &MultiIndex, residual: &MultiIndex) -> bool {
    if candidate.is_zero() {
        return false;
    }
    let rest = residual.checked_sub(candidate).expect("candidate inside residual box");
    completable(&rest, candidate)
}

impl Partitions {
    fn first_candidate(&self) -> Option<MultiIndex> {
        let bound = self.stack.last().unwrap_or(&self.target);
        let mut c = lex_max_below(&self.residual, bound);
        loop {
            if admissible(&c, &self.residual) {
                return Some(c);
            }
            c = lex_pred_in_box(&c, &self.residual)?;
        }
    }

    fn next_candidate(&self, current: &MultiIndex) -> Option<MultiIndex> {
        let mut c = current.clone();
        loop {
            c = lex_pred_in_box(&c, &self.residual)?;
            if admissible(&c, &self.residual) {
                return Some(c);
            }
        }
    }

    fn push(&mut self, c: MultiIndex) {
        self.residual.sub_assign(&c);
        self.stack.push(c);
    }

    fn descend(&mut self) -> bool {
        while !self.residual.is_zero() {
            match self.first_candidate() {
                Some(c) => self.push(c),
                None => return false,
            }
        }
        true
    }

    fn emit(&self) -> MultiIndexPartition {
        let mut columns: Vec<(MultiIndex, u32)> = Vec::new();
        for c in self.stack.iter().rev() {
            match columns.last_mut() {
                Some((prev, mult)) if prev == c => *mult += 1,
                _ => columns.push((c.clone(), 1)),
            }
        }
        MultiIndexPartition { columns }
    }
}

impl Iterator for Partitions {
    type Item = MultiIndexPartition;

    fn next(&mut self) -> Option<MultiIndexPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.descend() {
                return Some(self.emit());
            }
        }
        loop {
            let Some(c) = self.stack.pop() else {
                self.done = true;
                return None;
            };
            self.residual.add_assign(&c);
            if let Some(next) = self.next_candidate(&c) {
                self.push(next);
                if self.descend() {
                    return Some(self.emit());
                }
            }
        }
    }
}

/// Number of partitions of `i`, by memoized recursion over (residual, bound).
pub fn count_partitions(i: &MultiIndex) -> Result<BigUint> {
    if i.is_zero() {
        return Err(Error::ZeroIndex);
    }
    Ok(PartitionCounter::default().count(i))
}

/// Reusable cache for partition counts.
#[derive(Debug, Default)]
pub struct PartitionCounter {
    memo: HashMap<(MultiIndex, MultiIndex), BigUint>,
}

impl PartitionCounter {
    /// Number of partitions of `i`; the zero index counts as one (empty) partition.
    pub fn count(&mut self, i: &MultiIndex) -> BigUint {
        if i.is_zero() {
            return BigUint::one();
        }
        self.count_bounded(i.clone(), i.clone())
    }

    fn count_bounded(&mut self, residual: MultiIndex, bound: MultiIndex) -> BigUint {
        if residual.is_zero() {
            return BigUint::one();
        }
        let key = (residual, bound);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (residual, bound) = key;
        let mut total = BigUint::default();
        let mut c = lex_max_below(&residual, &bound);
        loop {
            if admissible(&c, &residual) {
                let rest = residual.checked_sub(&c).expect("inside box");
                total += self.count_bounded(rest, c.clone());
            }
            match lex_pred_in_box(&c, &residual) {
                Some(p) if !p.is_zero() => c = p,
                _ => break,
            }
        }
        self.memo.insert((residual, bound), total.clone());
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v)
    }

    fn part(cols: &[&[u32]]) -> MultiIndexPartition {
        MultiIndexPartition::from_columns(cols.iter().map(|c| mi(c)).collect()).unwrap()
    }

    #[test]
    fn factorials() {
        assert_eq!(multi_factorial(&mi(&[0, 0])), BigUint::from(1u32));
        assert_eq!(multi_factorial(&mi(&[2, 1])), BigUint::from(2u32));
        assert_eq!(multi_factorial(&mi(&[6, 5])), BigUint::from(86400u32));
    }

    #[test]
    fn multinomials() {
        let c = multinomial(&mi(&[2, 1]), &[mi(&[1, 1]), mi(&[1, 0])]).unwrap();
        assert_eq!(c, BigUint::from(2u32));
        assert_eq!(multinomial(&mi(&[1, 1]), &[mi(&[1, 1])]).unwrap(), BigUint::from(1u32));
        let c = multinomial(&mi(&[2, 2]), &[mi(&[1, 0]), mi(&[1, 2]), mi(&[0, 0])]).unwrap();
        assert_eq!(c, BigUint::from(2u32));
        assert_eq!(
            multinomial(&mi(&[2, 2]), &[mi(&[1, 0])]),
            Err(Error::PartsMismatch { target: mi(&[2, 2]) })
        );
    }

    #[test]
    fn compositions_small() {
        let got: Vec<Vec<MultiIndex>> = compositions_into(&mi(&[1, 1]), 2).collect();
        let want = vec![
            vec![mi(&[0, 0]), mi(&[1, 1])],
            vec![mi(&[0, 1]), mi(&[1, 0])],
            vec![mi(&[1, 0]), mi(&[0, 1])],
            vec![mi(&[1, 1]), mi(&[0, 0])],
        ];
        assert_eq!(got, want);
        assert_eq!(compositions_into(&mi(&[2]), 1).collect::<Vec<_>>(), vec![vec![mi(&[2])]]);
        assert_eq!(compositions_into(&mi(&[2, 1]), 2).count(), 6);
    }

    #[test]
    fn compositions_of_zero_index() {
        let got: Vec<_> = compositions_into(&mi(&[0, 0]), 3).collect();
        assert_eq!(got, vec![vec![mi(&[0, 0]); 3]]);
    }

    #[test]
    fn partitions_of_2_1_match_subdivisions() {
        let got: BTreeSet<_> = partitions(&mi(&[2, 1])).unwrap().collect();
        let want: BTreeSet<_> = [
            part(&[&[2, 1]]),
            part(&[&[2, 0], &[0, 1]]),
            part(&[&[1, 1], &[1, 0]]),
            part(&[&[1, 0], &[1, 0], &[0, 1]]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn partitions_small() {
        let got: Vec<_> = partitions(&mi(&[1, 1])).unwrap().collect();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&part(&[&[1, 1]])));
        assert!(got.contains(&part(&[&[1, 0], &[0, 1]])));
        let got: Vec<_> = partitions(&mi(&[3])).unwrap().collect();
        assert_eq!(got, vec![part(&[&[3]]), part(&[&[2], &[1]]), part(&[&[1], &[1], &[1]])]);
    }

    #[test]
    fn dead_end_branch_is_skipped() {
        // Choosing (0,1,0) first would leave (1,0,0), which is lex-larger.
        let got: Vec<_> = partitions(&mi(&[1, 1, 0])).unwrap().collect();
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn zero_index_rejected() {
        assert_eq!(partitions(&mi(&[0, 0])).err(), Some(Error::ZeroIndex));
        assert_eq!(count_partitions(&mi(&[0])).err(), Some(Error::ZeroIndex));
    }

    #[test]
    fn counts() {
        assert_eq!(count_partitions(&mi(&[2, 1])).unwrap(), BigUint::from(4u32));
        assert_eq!(count_partitions(&mi(&[2, 0])).unwrap(), BigUint::from(2u32));
        assert_eq!(count_partitions(&mi(&[2, 2])).unwrap(), BigUint::from(9u32));
    }

    #[test]
    fn partition_statistics() {
        let p = part(&[&[1, 0], &[1, 0], &[0, 1]]);
        assert_eq!(p.length(), 3);
        assert_eq!(p.multiplicities(), vec![1, 2]);
        assert_eq!(p.total(), mi(&[2, 1]));
        assert_eq!(p.multiplicity_factorial(), BigUint::from(2u32));
        assert_eq!(p.column_factorial(), BigUint::from(1u32));
        assert_eq!(p.coefficient(), BigUint::from(1u32));
        assert_eq!(p.to_matrix_string(), "[0 1 1; 1 0 0]");
        assert_eq!(p.to_string(), "{(0,1), (1,0)^2}");
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2,1".parse::<MultiIndex>().unwrap(), mi(&[2, 1]));
        assert_eq!("(3)".parse::<MultiIndex>().unwrap(), mi(&[3]));
        assert!("2,,1".parse::<MultiIndex>().is_err());
        assert!("".parse::<MultiIndex>().is_err());
        assert_eq!(mi(&[2, 0, 7]).to_string(), "(2,0,7)");
    }

    #[test]
    fn sub_indices_and_graded_listing() {
        assert_eq!(mi(&[1, 1]).sub_indices(), vec![mi(&[0, 0]), mi(&[0, 1]), mi(&[1, 0]), mi(&[1, 1])]);
        let all = MultiIndex::all_up_to(2, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], mi(&[0, 0]));
        assert_eq!(all[5], mi(&[2, 0]));
    }
}
