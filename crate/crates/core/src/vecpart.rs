//! Vector (multipartite) partition counts.
//!
//! `p_k(x)` counts multisets of nonzero vectors in `N^n` with at most `k`
//! members summing to `x`. `q_k(x)` counts sets of distinct nonzero vectors
//! summing to `x` with exactly `k` or `k - 1` members; this is the
//! coefficient of `t^x u^k` in `Π_{y ∈ N^n} (1 + t^y u)`, where the `y = 0`
//! factor `(1 + u)` supplies the `k - 1` case.
//!
//! Any `x` with a negative coordinate has count 0.

use std::collections::HashMap;
use std::fmt;

use crate::partition::{exponents_of_degree, ExponentVector, LatticeVector};
use crate::polyring::{Rational, SparsePolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// at most `k` parts, repetition allowed
    P,
    /// exactly `k` or `k - 1` distinct parts
    Q,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::P => write!(f, "p"),
            Variant::Q => write!(f, "q"),
        }
    }
}

type MemoKey = (ExponentVector, Option<ExponentVector>, usize);

/// Memoized canonical-order descent. Parts are chosen in weakly (or, for
/// distinct parts, strictly) increasing lexicographic order, so every
/// multiset is reached exactly once. The memo is shared across queries.
#[derive(Default)]
pub struct VectorPartitionCounter {
    at_most: HashMap<MemoKey, u64>,
    distinct_exact: HashMap<MemoKey, u64>,
}

fn candidate_parts<'a>(
    remaining: &'a ExponentVector,
    floor: Option<&'a ExponentVector>,
    strict: bool,
) -> impl Iterator<Item = ExponentVector> + 'a {
    remaining.sub_vectors().into_iter().filter(move |v| {
        !v.is_zero()
            && match floor {
                None => true,
                Some(f) if strict => v > f,
                Some(f) => v >= f,
            }
    })
}

impl VectorPartitionCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// `p_k(x)`.
    pub fn count_pk(&mut self, x: &LatticeVector, k: usize) -> u64 {
        match x.to_exponent() {
            Some(x) => self.at_most(&x, None, k),
            None => 0,
        }
    }

    /// `q_k(x)`.
    pub fn count_qk(&mut self, x: &LatticeVector, k: usize) -> u64 {
        let Some(x) = x.to_exponent() else {
            return 0;
        };
        let exact = self.distinct(&x, None, k);
        let fewer = if k >= 1 { self.distinct(&x, None, k - 1) } else { 0 };
        exact.checked_add(fewer).expect("vector partition count overflow")
    }

    fn at_most(&mut self, rem: &ExponentVector, floor: Option<&ExponentVector>, k: usize) -> u64 {
        if rem.is_zero() {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        let key = (rem.clone(), floor.cloned(), k);
        if let Some(&v) = self.at_most.get(&key) {
            return v;
        }
        let mut total: u64 = 0;
        for part in candidate_parts(rem, floor, false) {
            let rest = rem.checked_sub(&part).expect("part fits");
            let sub = self.at_most(&rest, Some(&part), k - 1);
            total = total.checked_add(sub).expect("vector partition count overflow");
        }
        self.at_most.insert(key, total);
        total
    }

    fn distinct(&mut self, rem: &ExponentVector, floor: Option<&ExponentVector>, j: usize) -> u64 {
        if j == 0 {
            return u64::from(rem.is_zero());
        }
        if rem.is_zero() {
            return 0;
        }
        let key = (rem.clone(), floor.cloned(), j);
        if let Some(&v) = self.distinct_exact.get(&key) {
            return v;
        }
        let mut total: u64 = 0;
        for part in candidate_parts(rem, floor, true) {
            let rest = rem.checked_sub(&part).expect("part fits");
            let sub = self.distinct(&rest, Some(&part), j - 1);
            total = total.checked_add(sub).expect("vector partition count overflow");
        }
        self.distinct_exact.insert(key, total);
        total
    }

    pub fn count(&mut self, variant: Variant, x: &LatticeVector, k: usize) -> u64 {
        match variant {
            Variant::P => self.count_pk(x, k),
            Variant::Q => self.count_qk(x, k),
        }
    }
}

/// `p_k(x)`; zero when `x` has a negative coordinate.
pub fn count_pk(x: impl Into<LatticeVector>, k: usize) -> u64 {
    VectorPartitionCounter::new().count_pk(&x.into(), k)
}

/// `q_k(x)`; zero when `x` has a negative coordinate.
pub fn count_qk(x: impl Into<LatticeVector>, k: usize) -> u64 {
    VectorPartitionCounter::new().count_qk(&x.into(), k)
}

/// Every multiset (or set, with `distinct`) of nonzero vectors summing to
/// `x`, each listed once with its parts in increasing lexicographic order.
pub fn enumerate_vector_partitions(x: &ExponentVector, distinct: bool) -> Vec<Vec<ExponentVector>> {
    fn descend(
        rem: &ExponentVector,
        floor: Option<&ExponentVector>,
        distinct: bool,
        current: &mut Vec<ExponentVector>,
        out: &mut Vec<Vec<ExponentVector>>,
    ) {
        if rem.is_zero() {
            out.push(current.clone());
            return;
        }
        for part in candidate_parts(rem, floor, distinct) {
            let rest = rem.checked_sub(&part).expect("part fits");
            current.push(part);
            let last = current.last().cloned();
            descend(&rest, last.as_ref(), distinct, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    descend(x, None, distinct, &mut Vec::new(), &mut out);
    out
}

/// `p_k(x)` or `q_k(x)` for every `x ∈ N^n` with `|x| <= d` and every
/// `k <= max_parts`, built bottom-up by adding one candidate part at a time
/// in lexicographic order.
#[derive(Clone, Debug)]
pub struct VectorPartitionTable {
    n_vars: usize,
    max_degree: u32,
    max_parts: usize,
    variant: Variant,
    index: HashMap<ExponentVector, usize>,
    exponents: Vec<ExponentVector>,
    // exact[i][j]: number with exactly j parts
    exact: Vec<Vec<u64>>,
}

impl VectorPartitionTable {
    pub fn build(n_vars: usize, max_degree: u32, max_parts: usize, variant: Variant) -> Self {
        let exponents: Vec<ExponentVector> = (0..=max_degree)
            .flat_map(|d| exponents_of_degree(n_vars, d))
            .collect();
        let index: HashMap<ExponentVector, usize> = exponents
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i))
            .collect();
        let mut exact = vec![vec![0u64; max_parts + 1]; exponents.len()];
        exact[0][0] = 1;

        let mut parts: Vec<ExponentVector> =
            exponents.iter().filter(|x| !x.is_zero()).cloned().collect();
        parts.sort();

        // exponents are sorted by degree, so x - v is visited before x when
        // walking forwards (repetition allowed) and after x backwards.
        let order: Vec<usize> = match variant {
            Variant::P => (0..exponents.len()).collect(),
            Variant::Q => (0..exponents.len()).rev().collect(),
        };
        for v in &parts {
            for &i in &order {
                let Some(rest) = exponents[i].checked_sub(v) else {
                    continue;
                };
                let r = index[&rest];
                for j in 1..=max_parts {
                    let add = exact[r][j - 1];
                    if add > 0 {
                        exact[i][j] = exact[i][j]
                            .checked_add(add)
                            .expect("vector partition count overflow");
                    }
                }
            }
        }

        VectorPartitionTable {
            n_vars,
            max_degree,
            max_parts,
            variant,
            index,
            exponents,
            exact,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn max_parts(&self) -> usize {
        self.max_parts
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The count for `(x, k)`, or `None` outside the table's range.
    pub fn get(&self, x: &ExponentVector, k: usize) -> Option<u64> {
        if k > self.max_parts {
            return None;
        }
        let row = &self.exact[*self.index.get(x)?];
        Some(match self.variant {
            Variant::P => row[..=k].iter().sum(),
            Variant::Q => row[k] + if k >= 1 { row[k - 1] } else { 0 },
        })
    }

    /// `Σ_{|x| <= d} count(x, k) t^x`, truncated at the table's degree.
    pub fn series(&self, k: usize) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.n_vars).truncated(self.max_degree);
        for x in &self.exponents {
            let value = self.get(x, k).expect("k within table range");
            out.add_term(x.clone(), Rational::from_integer(value.into()));
        }
        out
    }

    /// Rough heap footprint of a table with these dimensions.
    pub fn estimated_bytes(n_vars: usize, max_degree: u32, max_parts: usize) -> u128 {
        let entries = monomial_count(n_vars, max_degree);
        let per_entry = (max_parts as u128 + 1) * 8 + 2 * (n_vars as u128 * 4 + 24) + 48;
        entries.saturating_mul(per_entry)
    }
}

/// `C(n + d, n)`: the number of `x ∈ N^n` with `|x| <= d`.
pub fn monomial_count(n_vars: usize, max_degree: u32) -> u128 {
    let d = u128::from(max_degree);
    let mut c: u128 = 1;
    for i in 1..=n_vars as u128 {
        c = c.saturating_mul(d + i) / i;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational;

    fn ev(c: &[u32]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    #[test]
    fn pk_examples() {
        assert_eq!(count_pk(ev(&[1, 1]), 2), 2);
        assert_eq!(count_pk(ev(&[2, 0]), 2), 2);
        assert_eq!(count_pk(LatticeVector::new(vec![3, -1]), 2), 0);
        assert_eq!(count_pk(LatticeVector::new(vec![-1]), 5), 0);
        assert_eq!(count_pk(ev(&[0, 0]), 5), 1);
        assert_eq!(count_pk(ev(&[0, 0]), 0), 1);
        assert_eq!(count_pk(ev(&[1, 0]), 0), 0);
        // ordinary partitions of 5
        assert_eq!(count_pk(ev(&[5]), 5), 7);
    }

    #[test]
    fn qk_examples() {
        assert_eq!(count_qk(ev(&[1, 1]), 2), 2);
        assert_eq!(count_qk(ev(&[2, 0]), 1), 1);
        assert_eq!(count_qk(ev(&[0]), 1), 1);
        assert_eq!(count_qk(ev(&[0, 0]), 0), 1);
        // the empty set has neither 2 nor 1 parts
        assert_eq!(count_qk(ev(&[0, 0]), 2), 0);
        assert_eq!(count_qk(LatticeVector::new(vec![3, -1]), 2), 0);
        assert_eq!(count_qk(ev(&[2, 0]), 2), 1);
    }

    #[test]
    fn enumeration_examples() {
        let both = enumerate_vector_partitions(&ev(&[1, 1]), false);
        assert_eq!(both.len(), 2);
        assert!(both.contains(&vec![ev(&[1, 1])]));
        assert!(both.contains(&vec![ev(&[0, 1]), ev(&[1, 0])]));
        assert_eq!(enumerate_vector_partitions(&ev(&[0, 0]), false), vec![Vec::<ExponentVector>::new()]);
        assert_eq!(enumerate_vector_partitions(&ev(&[2, 0]), true), vec![vec![ev(&[2, 0])]]);
        assert_eq!(enumerate_vector_partitions(&ev(&[2, 0]), false).len(), 2);
    }

    #[test]
    fn counts_match_enumeration() {
        let mut counter = VectorPartitionCounter::new();
        for n in 1..=3 {
            for d in 0..=6 {
                for x in exponents_of_degree(n, d) {
                    let all = enumerate_vector_partitions(&x, false);
                    let sets = enumerate_vector_partitions(&x, true);
                    for k in 0..=6 {
                        let p = all.iter().filter(|m| m.len() <= k).count() as u64;
                        let q = sets.iter().filter(|s| s.len() == k || s.len() + 1 == k).count() as u64;
                        let lx = LatticeVector::from(&x);
                        assert_eq!(counter.count_pk(&lx, k), p, "p x={x} k={k}");
                        assert_eq!(counter.count_qk(&lx, k), q, "q x={x} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn table_matches_descent() {
        let mut counter = VectorPartitionCounter::new();
        for n in 1..=3 {
            for variant in [Variant::P, Variant::Q] {
                let table = VectorPartitionTable::build(n, 5, 4, variant);
                for d in 0..=5 {
                    for x in exponents_of_degree(n, d) {
                        for k in 0..=4 {
                            assert_eq!(
                                table.get(&x, k),
                                Some(counter.count(variant, &LatticeVector::from(&x), k)),
                                "{variant} x={x} k={k}"
                            );
                        }
                    }
                }
                assert_eq!(table.get(&ExponentVector::zero(n), 5), None);
            }
        }
    }

    // Π_{|y|<=d} (1 - t^y u)^{-1} (or Π (1 + t^y u)) with u as the last
    // variable, truncated so only t-degree <= d and u-degree <= k survive.
    fn generating_function(n: usize, d: u32, k: u32, variant: Variant) -> SparsePolynomial {
        let bound = d + k;
        let mut product = SparsePolynomial::one(n + 1).truncated(bound);
        for deg in 0..=d {
            for y in exponents_of_degree(n, deg) {
                let mut factor = SparsePolynomial::zero(n + 1);
                let max_power = match variant {
                    Variant::P => k,
                    Variant::Q => 1,
                };
                for m in 0..=max_power {
                    let mut coords = y.scale(m).coords().to_vec();
                    coords.push(m);
                    factor.add_term(ExponentVector::new(coords), rational(1));
                }
                product = product.multiply(&factor, Some(bound)).unwrap();
            }
        }
        product
    }

    #[test]
    fn counts_match_generating_functions() {
        for n in 1..=3 {
            for variant in [Variant::P, Variant::Q] {
                let (d, k) = (5, 4);
                let gf = generating_function(n, d, k, variant);
                let mut counter = VectorPartitionCounter::new();
                for deg in 0..=d {
                    for x in exponents_of_degree(n, deg) {
                        // the y = 0 factor lets zero parts pad out to exactly k,
                        // so the u^k coefficient is the count itself
                        for kk in 0..=k {
                            let mut coords = x.coords().to_vec();
                            coords.push(kk);
                            let c = gf.coefficient_of(&ExponentVector::new(coords));
                            assert_eq!(
                                rational(counter.count(variant, &LatticeVector::from(&x), kk as usize) as i64),
                                c,
                                "{variant} n={n} x={x} k={kk}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pk_is_monotone_in_k() {
        let table = VectorPartitionTable::build(3, 5, 6, Variant::P);
        for d in 0..=5 {
            for x in exponents_of_degree(3, d) {
                assert_eq!(table.get(&x, 0), Some(u64::from(x.is_zero())));
                for k in 1..=6 {
                    assert!(table.get(&x, k) >= table.get(&x, k - 1));
                }
            }
        }
        for k in 0..=6 {
            assert_eq!(table.get(&ExponentVector::zero(3), k), Some(1));
        }
    }

    #[test]
    fn unimodality_in_two_coordinates() {
        let mut counter = VectorPartitionCounter::new();
        for total in 2..=8i64 {
            for x2 in 1..=total / 2 {
                let x1 = total - x2;
                let here = LatticeVector::new(vec![x1, x2]);
                let shifted = LatticeVector::new(vec![x1 + 1, x2 - 1]);
                for n in 0..=5 {
                    assert!(counter.count_pk(&here, n) >= counter.count_pk(&shifted, n));
                    assert!(counter.count_qk(&here, n) >= counter.count_qk(&shifted, n));
                }
            }
        }
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(2, 2), 6);
        assert_eq!(monomial_count(5, 6), 462);
        assert_eq!(monomial_count(0, 4), 1);
    }
}
