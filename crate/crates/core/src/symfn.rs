//! Symmetric functions in the `h`, `e`, `p`, `m` and `s` bases, the
//! characters of `S_n`, and the Frobenius characteristic of class functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{
    enumerate_cycle_types, exponents_of_degree, factorial, partitions_of, z_factor, CycleType,
    ExponentVector, Partition,
};
use crate::polyring::{Rational, SparsePolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// complete homogeneous
    H,
    /// elementary
    E,
    /// power sums
    P,
    /// monomial
    M,
    /// Schur
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::H => 'h',
            Basis::E => 'e',
            Basis::P => 'p',
            Basis::M => 'm',
            Basis::S => 's',
        }
    }

    /// Bases in which `b_λ b_μ = b_{λ ∪ μ}`.
    fn is_multiplicative(self) -> bool {
        matches!(self, Basis::H | Basis::E | Basis::P)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            other => Err(format!("unknown basis {other:?} (expected h, e, p, m or s)")),
        }
    }
}

/// A finite rational combination of basis elements indexed by partitions.
#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricFunction {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymmetricFunction {
    pub fn zero(basis: Basis) -> Self {
        SymmetricFunction {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, Rational::one());
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// The degree when every term has the same weight; `None` for mixed or
    /// zero functions.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> SymmetricFunction {
        SymmetricFunction::from_terms(
            self.basis,
            self.terms.iter().map(|(l, a)| (l.clone(), a * c)),
        )
    }

    /// Sum; operands in different bases are both moved to power sums.
    pub fn add(&self, other: &SymmetricFunction) -> SymmetricFunction {
        let (mut sum, other) = if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_power_sums(), other.to_power_sums())
        };
        for (l, c) in other.terms {
            sum.add_term(l, c);
        }
        sum
    }

    pub fn multiply(&self, other: &SymmetricFunction) -> SymmetricFunction {
        if self.basis == other.basis && self.basis.is_multiplicative() {
            let mut product = SymmetricFunction::zero(self.basis);
            for ((a, x), (b, y)) in self.terms.iter().cartesian_product(other.terms.iter()) {
                product.add_term(a.union(b), x * y);
            }
            return product;
        }
        self.to_power_sums().multiply(&other.to_power_sums())
    }

    /// The same function in the power-sum basis.
    pub fn to_power_sums(&self) -> SymmetricFunction {
        if self.basis == Basis::P {
            return self.clone();
        }
        let mut cache: HashMap<Partition, SymmetricFunction> = HashMap::new();
        let mut out = SymmetricFunction::zero(Basis::P);
        for (lambda, c) in &self.terms {
            let image = cache
                .entry(lambda.clone())
                .or_insert_with(|| basis_element_in_power_sums(self.basis, lambda));
            for (nu, a) in &image.terms {
                out.add_term(nu.clone(), a * c);
            }
        }
        out
    }

    /// `f(t_1, …, t_n)`, dropping everything above `truncate_at`.
    pub fn expand_in_variables(&self, n: usize, truncate_at: Option<u32>) -> SparsePolynomial {
        let mut expander = Expander::new(n, truncate_at);
        let mut out = SparsePolynomial::zero(n);
        if let Some(t) = truncate_at {
            out = out.truncated(t);
        }
        for (lambda, c) in &self.terms {
            if truncate_at.is_some_and(|t| lambda.weight() > t as usize) {
                continue;
            }
            let image = expander.basis_element(self.basis, lambda);
            for (x, a) in image.terms() {
                out.add_term(x.clone(), a * c);
            }
        }
        out
    }

    /// Value of the `n`-variable specialization at the eigenvalues of a
    /// permutation matrix of cycle type `rho`, via `p_k(θ) = tr(w^k)`.
    pub fn evaluate_at_cycle_type(&self, rho: &CycleType) -> Rational {
        self.to_power_sums()
            .terms
            .iter()
            .map(|(nu, c)| {
                let value: BigInt = nu
                    .parts()
                    .iter()
                    .map(|&k| BigInt::from(power_sum_at_cycle_type(k, rho)))
                    .product();
                c * Rational::from_integer(value)
            })
            .sum()
    }
}

impl fmt::Debug for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered = self
            .terms
            .iter()
            .map(|(l, c)| format!("{c}*{}{l}", self.basis))
            .join(" + ");
        write!(f, "{rendered}")
    }
}

fn basis_element_in_power_sums(basis: Basis, lambda: &Partition) -> SymmetricFunction {
    match basis {
        Basis::P => SymmetricFunction::basis_element(Basis::P, lambda.clone()),
        Basis::S => schur_to_p(lambda),
        Basis::M => monomial_to_power_sums(lambda),
        Basis::H | Basis::E => lambda.parts().iter().fold(
            SymmetricFunction::basis_element(Basis::P, Partition::empty()),
            |acc, &k| acc.multiply(&single_row_in_power_sums(basis, k)),
        ),
    }
}

/// `h_k = Σ_{ν ⊢ k} p_ν / z_ν` and `e_k = Σ_{ν ⊢ k} ε_ν p_ν / z_ν`.
fn single_row_in_power_sums(basis: Basis, k: usize) -> SymmetricFunction {
    SymmetricFunction::from_terms(
        Basis::P,
        partitions_of(k).into_iter().map(|nu| {
            let sign = if basis == Basis::E { nu.sign() } else { 1 };
            let c = Rational::new(BigInt::from(sign), z_factor(&nu));
            (nu, c)
        }),
    )
}

/// Number of ways to send the (labelled) parts of `nu` into `mu.len()`
/// ordered blocks so that block `i` receives total `mu_i`.
///
/// This is the coefficient of `m_μ` in `p_ν`, and also the number of fixed
/// points of a permutation of cycle type `ν` on ordered set partitions of
/// shape `μ`.
pub fn count_block_assignments(nu: &Partition, mu: &Partition) -> BigInt {
    fn place(parts: &[usize], room: &mut [usize]) -> BigInt {
        let Some((&first, rest)) = parts.split_first() else {
            return if room.iter().all(|&r| r == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let mut total = BigInt::zero();
        for i in 0..room.len() {
            if room[i] >= first {
                room[i] -= first;
                total += place(rest, room);
                room[i] += first;
            }
        }
        total
    }

    if nu.weight() != mu.weight() {
        return BigInt::zero();
    }
    place(nu.parts(), &mut mu.parts().to_vec())
}

/// `m_λ` in power sums, by inverting the transition matrix `p → m` in
/// degree `|λ|`.
pub fn monomial_to_power_sums(lambda: &Partition) -> SymmetricFunction {
    let d = lambda.weight();
    let parts = partitions_of(d);
    let size = parts.len();
    let target = parts.iter().position(|p| p == lambda).expect("λ ⊢ |λ|");
    // Solve Σ_ν c_ν [m_κ] p_ν = [κ = λ] for every κ.
    let mut rows: Vec<Vec<Rational>> = parts
        .iter()
        .map(|kappa| {
            let mut row: Vec<Rational> = parts
                .iter()
                .map(|nu| Rational::from_integer(count_block_assignments(nu, kappa)))
                .collect();
            row.push(if kappa == lambda {
                Rational::one()
            } else {
                Rational::zero()
            });
            row
        })
        .collect();
    let solution = solve_linear_system(&mut rows, size);
    debug_assert!(target < size);
    SymmetricFunction::from_terms(Basis::P, parts.into_iter().zip(solution))
}

/// Gauss–Jordan elimination on an augmented square system over `Q`.
fn solve_linear_system(rows: &mut [Vec<Rational>], size: usize) -> Vec<Rational> {
    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !rows[r][col].is_zero())
            .expect("transition matrix is invertible");
        rows.swap(col, pivot);
        let inv = Rational::one() / rows[col][col].clone();
        for entry in rows[col].iter_mut() {
            *entry *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *entry -= &factor * p;
                }
            }
        }
    }
    rows.iter().map(|row| row[size].clone()).collect()
}

/// Expands basis elements into `n` variables, caching one-part factors.
struct Expander {
    n: usize,
    truncate_at: Option<u32>,
    rows: HashMap<(Basis, usize), SparsePolynomial>,
}

impl Expander {
    fn new(n: usize, truncate_at: Option<u32>) -> Self {
        Expander {
            n,
            truncate_at,
            rows: HashMap::new(),
        }
    }

    fn row(&mut self, basis: Basis, k: usize) -> SparsePolynomial {
        let n = self.n;
        self.rows
            .entry((basis, k))
            .or_insert_with(|| {
                let coords = exponents_of_degree(n, k as u32);
                let keep = |x: &ExponentVector| match basis {
                    Basis::H => true,
                    Basis::E => x.coords().iter().all(|&c| c <= 1),
                    Basis::P => k == 0 || x.coords().iter().filter(|&&c| c > 0).count() == 1,
                    _ => unreachable!("only multiplicative bases have rows"),
                };
                SparsePolynomial::from_terms(
                    n,
                    coords
                        .into_iter()
                        .filter(keep)
                        .map(|x| (x, Rational::one())),
                )
                .expect("exponents have n coordinates")
            })
            .clone()
    }

    fn basis_element(&mut self, basis: Basis, lambda: &Partition) -> SparsePolynomial {
        match basis {
            Basis::H | Basis::E | Basis::P => {
                let mut acc = SparsePolynomial::one(self.n);
                for &k in lambda.parts() {
                    let row = self.row(basis, k);
                    acc = acc
                        .multiply(&row, self.truncate_at)
                        .expect("same variable count");
                }
                acc
            }
            Basis::M => monomial_expansion(self.n, lambda),
            Basis::S => {
                if lambda.len() > self.n {
                    return SparsePolynomial::zero(self.n);
                }
                let in_h = schur_to_h(lambda);
                let mut out = SparsePolynomial::zero(self.n);
                for (nu, c) in in_h.terms() {
                    let image = self.basis_element(Basis::H, nu);
                    for (x, a) in image.terms() {
                        out.add_term(x.clone(), a * c);
                    }
                }
                out
            }
        }
    }
}

/// `m_λ(t_1, …, t_n)`: the distinct rearrangements of the padded `λ`.
fn monomial_expansion(n: usize, lambda: &Partition) -> SparsePolynomial {
    let Some(padded) = lambda.pad_to(n) else {
        return SparsePolynomial::zero(n);
    };
    let exponents: std::collections::BTreeSet<Vec<u32>> = padded
        .iter()
        .map(|&p| p as u32)
        .permutations(n)
        .collect();
    SparsePolynomial::from_terms(
        n,
        exponents
            .into_iter()
            .map(|x| (ExponentVector::new(x), Rational::one())),
    )
    .expect("exponents have n coordinates")
}

/// `χ^λ(ν)` by the Murnaghan–Nakayama rule, removing border strips on the
/// abacus of `λ`. Returns 0 when `|λ| ≠ |ν|`.
pub fn murnaghan_nakayama(lambda: &Partition, nu: &CycleType) -> BigInt {
    fn strip(beads: &mut [bool], parts: &[usize]) -> BigInt {
        let Some((&r, rest)) = parts.split_first() else {
            return BigInt::one();
        };
        let mut total = BigInt::zero();
        for b in r..beads.len() {
            if !beads[b] || beads[b - r] {
                continue;
            }
            let crossed = beads[b - r + 1..b].iter().filter(|&&x| x).count();
            beads[b] = false;
            beads[b - r] = true;
            let sub = strip(beads, rest);
            beads[b - r] = false;
            beads[b] = true;
            if crossed % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        total
    }

    if lambda.weight() != nu.degree() {
        return BigInt::zero();
    }
    let len = lambda.len();
    let mut beads = vec![false; lambda.part(0) + len];
    for i in 0..len {
        beads[lambda.part(i) + len - 1 - i] = true;
    }
    strip(&mut beads, nu.partition().parts())
}

/// The character table of `S_n`, rows and columns both in reverse-lex order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
    class_sizes: Vec<BigInt>,
    z_factors: Vec<BigInt>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let classes = enumerate_cycle_types(n);
        let partitions: Vec<Partition> = classes.iter().map(|(c, _)| c.partition().clone()).collect();
        let values = partitions
            .iter()
            .map(|lambda| {
                classes
                    .iter()
                    .map(|(nu, _)| murnaghan_nakayama(lambda, nu))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            z_factors: partitions.iter().map(z_factor).collect(),
            class_sizes: classes.into_iter().map(|(_, s)| s).collect(),
            partitions,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    /// `χ^λ(ν)`; `None` if either label is not a partition of `n`.
    pub fn value(&self, lambda: &Partition, nu: &Partition) -> Option<&BigInt> {
        Some(&self.values[self.index(lambda)?][self.index(nu)?])
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[BigInt]> {
        self.index(lambda).map(|i| self.values[i].as_slice())
    }

    pub fn class_sizes(&self) -> &[BigInt] {
        &self.class_sizes
    }

    pub fn z_factors(&self) -> &[BigInt] {
        &self.z_factors
    }

    /// `f^λ = χ^λ(1^n)`.
    pub fn dimension(&self, lambda: &Partition) -> Option<&BigInt> {
        self.value(lambda, &Partition::column(self.n))
    }

    /// `Σ_λ χ^λ(ν) χ^λ(ρ) = z_ν [ν = ρ]`.
    pub fn columns_orthogonal(&self) -> bool {
        let k = self.partitions.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let dot: BigInt = (0..k).map(|l| &self.values[l][a] * &self.values[l][b]).sum();
                let expected = if a == b {
                    self.z_factors[a].clone()
                } else {
                    BigInt::zero()
                };
                dot == expected
            })
        })
    }

    /// `Σ_ν |C_ν| χ^λ(ν) χ^μ(ν) = n! [λ = μ]`.
    pub fn rows_orthogonal(&self) -> bool {
        let k = self.partitions.len();
        let n_fact = factorial(self.n);
        (0..k).all(|a| {
            (0..k).all(|b| {
                let dot: BigInt = (0..k)
                    .map(|c| &self.class_sizes[c] * &self.values[a][c] * &self.values[b][c])
                    .sum();
                dot == if a == b { n_fact.clone() } else { BigInt::zero() }
            })
        })
    }
}

/// Jacobi–Trudi: `s_λ = det(h_{λ_i - i + j})`, with `h_0 = 1` and
/// `h_{<0} = 0`.
pub fn schur_to_h(lambda: &Partition) -> SymmetricFunction {
    fn expand(
        lambda: &Partition,
        row: usize,
        used: &mut Vec<usize>,
        inversions: usize,
        indices: &mut Vec<usize>,
        out: &mut SymmetricFunction,
    ) {
        let len = lambda.len();
        if row == len {
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            out.add_term(
                Partition::from_unsorted(indices.iter().copied()),
                Rational::from_integer(BigInt::from(sign)),
            );
            return;
        }
        for col in 0..len {
            if used.contains(&col) {
                continue;
            }
            let index = lambda.part(row) as i64 - row as i64 + col as i64;
            if index < 0 {
                continue;
            }
            let added = used.iter().filter(|&&c| c > col).count();
            used.push(col);
            indices.push(index as usize);
            expand(lambda, row + 1, used, inversions + added, indices, out);
            indices.pop();
            used.pop();
        }
    }

    let mut out = SymmetricFunction::zero(Basis::H);
    expand(lambda, 0, &mut Vec::new(), 0, &mut Vec::new(), &mut out);
    out
}

/// `s_λ = Σ_{ν ⊢ |λ|} χ^λ(ν) z_ν^{-1} p_ν`.
pub fn schur_to_p(lambda: &Partition) -> SymmetricFunction {
    SymmetricFunction::from_terms(
        Basis::P,
        partitions_of(lambda.weight()).into_iter().map(|nu| {
            let chi = murnaghan_nakayama(lambda, &CycleType::new(nu.clone()));
            let c = Rational::new(chi, z_factor(&nu));
            (nu, c)
        }),
    )
}

/// `p_k(θ_1, …, θ_n)` at the eigenvalues of a permutation matrix of cycle
/// type `rho`: the number of fixed points of `w^k`.
pub fn power_sum_at_cycle_type(k: usize, rho: &CycleType) -> usize {
    rho.partition().parts().iter().filter(|&&r| k.is_multiple_of(r)).sum()
}

/// `F(C[X_μ]) = h_μ`.
pub fn frobenius_characteristic_of_permutation_module(mu: &Partition) -> SymmetricFunction {
    SymmetricFunction::basis_element(Basis::H, mu.clone())
}

/// `⟨f, g⟩` with `⟨p_ν, p_ρ⟩ = z_ν [ν = ρ]`.
pub fn hall_inner_product(f: &SymmetricFunction, g: &SymmetricFunction) -> Rational {
    let f = f.to_power_sums();
    let g = g.to_power_sums();
    f.terms
        .iter()
        .filter_map(|(nu, a)| {
            g.terms
                .get(nu)
                .map(|b| a * b * Rational::from_integer(z_factor(nu)))
        })
        .sum()
}

/// A class function on `S_n`, given by one value per cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigInt>,
}

impl ClassFunction {
    /// Missing cycle types are taken to be 0.
    pub fn from_values(
        n: usize,
        values: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (rho, v) in values {
            if rho.weight() != n {
                return Err(Error::WeightMismatch {
                    expected: n,
                    partition: rho.parts().to_vec(),
                });
            }
            map.insert(rho, v);
        }
        Ok(ClassFunction { n, values: map })
    }

    fn from_fn(n: usize, f: impl Fn(&Partition) -> BigInt) -> Self {
        ClassFunction {
            n,
            values: partitions_of(n).into_iter().map(|rho| {
                let v = f(&rho);
                (rho, v)
            }).collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| BigInt::one())
    }

    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |rho| BigInt::from(rho.sign()))
    }

    /// The character of the Specht module `V_μ`.
    pub fn irreducible(mu: &Partition) -> Self {
        Self::from_fn(mu.weight(), |rho| {
            murnaghan_nakayama(mu, &CycleType::new(rho.clone()))
        })
    }

    /// The character of `C[X_μ]`, counted as fixed ordered set partitions.
    pub fn permutation_module(mu: &Partition) -> Self {
        Self::from_fn(mu.weight(), |rho| count_block_assignments(rho, mu))
    }

    pub fn regular(n: usize) -> Self {
        let identity = Partition::column(n);
        let n_fact = factorial(n);
        Self::from_fn(n, |rho| {
            if *rho == identity {
                n_fact.clone()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, rho: &Partition) -> BigInt {
        self.values.get(rho).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::WeightMismatch {
                expected: self.n,
                partition: vec![other.n],
            });
        }
        Ok(Self::from_fn(self.n, |rho| self.value(rho) + other.value(rho)))
    }

    pub fn scale(&self, c: &BigInt) -> ClassFunction {
        Self::from_fn(self.n, |rho| self.value(rho) * c)
    }

    /// `F(χ) = Σ_ν χ(ν) z_ν^{-1} p_ν`.
    pub fn frobenius_characteristic(&self) -> SymmetricFunction {
        SymmetricFunction::from_terms(
            Basis::P,
            self.values
                .iter()
                .map(|(nu, v)| (nu.clone(), Rational::new(v.clone(), z_factor(nu)))),
        )
    }

    /// `(1/n!) Σ_w χ(w) ψ(w)` (characters of `S_n` are real).
    pub fn inner_product(&self, other: &ClassFunction) -> Rational {
        partitions_of(self.n)
            .iter()
            .map(|rho| {
                Rational::new(self.value(rho) * other.value(rho), z_factor(rho))
            })
            .sum()
    }
}
