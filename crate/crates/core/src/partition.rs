//! Partitions, exponent vectors, permutations and the enumeration
//! primitives everything else is indexed by.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so two partitions are equal exactly when
/// their nonzero parts agree. Use [`Partition::pad_to`] for the fixed-length
/// view `(λ_1, …, λ_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition, dropping zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(k)`; empty when `k == 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `(λ_1, …, λ_n)` padded with zeros, or `None` when there are more than
    /// `n` parts.
    pub fn pad_to(&self, n: usize) -> Option<Vec<usize>> {
        if self.len() > n {
            return None;
        }
        let mut padded = self.0.clone();
        padded.resize(n, 0);
        Some(padded)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Multiplicity of each part size, keyed by size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_unsorted(self.0.iter().chain(other.0.iter()).copied())
    }

    /// `(-1)^{|λ| - ℓ(λ)}`, the sign of any permutation with this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.weight() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// All partitions of `d` with at most `max_parts` parts, in
/// reverse-lexicographic order (`(4), (3,1), (2,2), …`).
pub fn enumerate_partitions(d: usize, max_parts: usize) -> Vec<Partition> {
    fn descend(
        remaining: usize,
        largest: usize,
        slots: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=largest.min(remaining)).rev() {
            // the remaining slots must be able to absorb what is left
            if part * slots < remaining {
                break;
            }
            current.push(part);
            descend(remaining - part, part, slots - 1, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    descend(d, d, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `d` (no bound on the number of parts).
pub fn partitions_of(d: usize) -> Vec<Partition> {
    enumerate_partitions(d, d)
}

/// The conjugacy-class label of a permutation in `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(cycles: Partition) -> Self {
        CycleType(cycles)
    }

    pub fn identity(n: usize) -> Self {
        CycleType(Partition::column(n))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// The `n` of `S_n`.
    pub fn degree(&self) -> usize {
        self.0.weight()
    }

    pub fn sign(&self) -> i32 {
        self.0.sign()
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `z_ν = Π_i i^{m_i} m_i!`, the order of the centralizer of a permutation of
/// cycle type `ν`.
pub fn z_factor(nu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (size, mult) in nu.multiplicities() {
        for m in 1..=mult {
            z *= size;
            z *= m;
        }
    }
    z
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// One entry per partition of `n` (reverse-lex order) with its class size
/// `n!/z_ν`.
pub fn enumerate_cycle_types(n: usize) -> Vec<(CycleType, BigInt)> {
    let n_fact = factorial(n);
    partitions_of(n)
        .into_iter()
        .map(|nu| {
            let size = &n_fact / z_factor(&nu);
            (CycleType(nu), size)
        })
        .collect()
}

/// A monomial exponent: a vector in `N^n`, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: impl Into<Vec<u32>>) -> Self {
        ExponentVector(coords.into())
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The `i`-th unit vector in `N^n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i] = 1;
        ExponentVector(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `|x|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when it stays in `N^n`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn scale(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|c| c * k).collect())
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Every `y` with `0 <= y <= self` componentwise, in lexicographic order.
    pub fn sub_vectors(&self) -> Vec<ExponentVector> {
        if self.0.is_empty() {
            return vec![ExponentVector(Vec::new())];
        }
        self.0
            .iter()
            .map(|&c| 0..=c)
            .multi_cartesian_product()
            .map(ExponentVector)
            .collect()
    }

    /// Swaps two coordinates.
    pub fn swapped(&self, i: usize, j: usize) -> ExponentVector {
        let mut coords = self.0.clone();
        coords.swap(i, j);
        ExponentVector(coords)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }
}

/// All `x ∈ N^n` with `|x| = d`, in lexicographic order.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<ExponentVector> {
    fn fill(slot: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if slot + 1 == current.len() {
            current[slot] = remaining;
            out.push(ExponentVector(current.clone()));
            return;
        }
        for c in 0..=remaining {
            current[slot] = c;
            fill(slot + 1, remaining - c, current, out);
        }
    }

    if n == 0 {
        return if d == 0 {
            vec![ExponentVector(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    fill(0, d, &mut vec![0; n], &mut out);
    out
}

/// A vector in `Z^n`. Only the staircase arithmetic `λ + δ - w·δ` produces
/// these; counting functions treat anything outside `N^n` as contributing 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        LatticeVector(coords.into())
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// The same vector as an exponent, or `None` if some coordinate is
    /// negative.
    pub fn to_exponent(&self) -> Option<ExponentVector> {
        self.0
            .iter()
            .map(|&c| u32::try_from(c).ok())
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }
}

impl From<ExponentVector> for LatticeVector {
    fn from(x: ExponentVector) -> Self {
        LatticeVector(x.0.into_iter().map(i64::from).collect())
    }
}

impl From<&ExponentVector> for LatticeVector {
    fn from(x: &ExponentVector) -> Self {
        LatticeVector(x.0.iter().map(|&c| i64::from(c)).collect())
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(coords: Vec<i64>) -> Self {
        LatticeVector(coords)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// A permutation of `{0, …, n-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(images, n));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// From the one-line notation `w(1), …, w(n)` on `{1, …, n}`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let shifted = images
            .iter()
            .map(|&i| i.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidPermutation(images.to_vec(), images.len()))?;
        Permutation::new(shifted)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn sign(&self) -> i32 {
        let inversions = self
            .0
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            lengths.push(len);
        }
        CycleType(Partition::from_unsorted(lengths))
    }

    /// All of `S_n` in lexicographic order of the image list.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n).permutations(n).map(Permutation).collect()
    }
}

/// `δ = (n-1, n-2, …, 1, 0)`.
pub fn staircase(n: usize) -> ExponentVector {
    ExponentVector((0..n as u32).rev().collect())
}

/// `w·δ = (n - w(1), …, n - w(n))` with `w` read on `{1, …, n}`.
pub fn staircase_action(w: &Permutation) -> ExponentVector {
    let n = w.len();
    ExponentVector(w.0.iter().map(|&image| (n - 1 - image) as u32).collect())
}
