//! Restriction coefficients `r_{λμ}`: the multiplicity of the `S_n`-irreducible
//! `V_μ` in the polynomial `GL_n`-irreducible `W_λ` restricted to permutation
//! matrices.
//!
//! Three independent routes are provided:
//!
//! * Littlewood: `r_{λμ} = ⟨s_λ, s_μ[H]⟩` with `H = Σ_{x ∈ N^n} t^x`;
//! * alternating sums of vector partition counts, for `μ = (n)` and `(1^n)`;
//! * brute force: decompose the character `w ↦ s_λ(eigenvalues of w)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{
    enumerate_cycle_types, enumerate_partitions, factorial, ExponentVector, LatticeVector,
    Partition, Permutation,
};
use crate::partition::{staircase, staircase_action};
use crate::polyring::{coefficient_of_product, vandermonde_alternant, Rational, SparsePolynomial};
use crate::symfn::{schur_to_h, schur_to_p, CharacterTable};
use crate::vecpart::{Variant, VectorPartitionCounter};

/// How an entry was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Littlewood,
    Corollary,
    BruteForce,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Littlewood, Route::Corollary, Route::BruteForce];

    pub fn name(self) -> &'static str {
        match self {
            Route::Littlewood => "littlewood",
            Route::Corollary => "corollary",
            Route::BruteForce => "brute",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Partitions of `d` with at most `n` parts.
pub fn polynomial_weights(d: usize, n: usize) -> Vec<Partition> {
    enumerate_partitions(d, n)
}

fn check_length(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            partition: lambda.parts().to_vec(),
            max_parts: n,
        });
    }
    Ok(())
}

fn check_weight(mu: &Partition, n: usize) -> Result<()> {
    if mu.weight() != n || n == 0 {
        return Err(Error::WeightMismatch {
            expected: n,
            partition: mu.parts().to_vec(),
        });
    }
    Ok(())
}

fn to_nonnegative_u64(value: &BigInt, context: &'static str) -> Result<u64> {
    if value.is_negative() {
        return Err(Error::Negative {
            context: context.to_string(),
            value: value.to_string(),
        });
    }
    value.to_u64().ok_or_else(|| Error::NonIntegral {
        context: context.to_string(),
        value: value.to_string(),
    })
}

fn to_integer(value: Rational, context: &'static str) -> Result<BigInt> {
    if !value.is_integer() {
        return Err(Error::NonIntegral {
            context: context.to_string(),
            value: value.to_string(),
        });
    }
    Ok(value.to_integer())
}

/// `λ + δ` with `δ = (n−1, …, 1, 0)`.
fn shifted(lambda: &Partition, n: usize) -> Result<ExponentVector> {
    check_length(lambda, n)?;
    let padded = lambda.pad_to(n).expect("length checked");
    let coords: Vec<u32> = padded.iter().map(|&p| p as u32).collect();
    Ok(ExponentVector::new(coords).add(&staircase(n)))
}

/// `λ + δ − w·δ` for every `w ∈ S_n`, paired with `sgn(w)`.
fn alternating_shifts(lambda: &Partition, n: usize) -> Result<Vec<(i32, LatticeVector)>> {
    let top = shifted(lambda, n)?;
    Ok(Permutation::all(n)
        .into_iter()
        .map(|w| {
            let moved = staircase_action(&w);
            let coords: Vec<i64> = top
                .coords()
                .iter()
                .zip(moved.coords())
                .map(|(&a, &b)| i64::from(a) - i64::from(b))
                .collect();
            (w.sign(), LatticeVector::new(coords))
        })
        .collect())
}

/// `⟨f, s_λ⟩` for `f` symmetric in `n` variables: the coefficient of
/// `t^{λ+δ}` in `a_δ·f`.
pub fn schur_coefficient_extraction(f: &SparsePolynomial, lambda: &Partition) -> Result<BigInt> {
    let n = f.n_vars();
    let d = lambda.weight() as u32;
    if !f.is_homogeneous(d) {
        return Err(Error::NotHomogeneous(d));
    }
    let target = shifted(lambda, n)?;
    let value = coefficient_of_product(vandermonde_alternant(n).as_polynomial(), f, &target)?;
    to_integer(value, "Schur coefficient")
}

/// Pointwise evaluation of `⟨s_λ, s_μ[H]⟩` for a fixed number of variables.
///
/// `s_μ` is expanded by Jacobi–Trudi into products `h_ν`, and the coefficient
/// of `t^x` in `h_ν[H] = Π_i h_{ν_i}[H]` is a convolution of the counts
/// `p_{ν_i}`. Only the coefficients at the `n!` points `λ+δ−w·δ` are needed,
/// so no full slice of `s_μ[H]` is built. Memo tables persist across calls.
pub struct LittlewoodContext {
    n: usize,
    counter: VectorPartitionCounter,
    products: HashMap<(Vec<usize>, ExponentVector), BigInt>,
    jacobi_trudi: BTreeMap<Partition, Vec<(Vec<usize>, BigInt)>>,
}

impl LittlewoodContext {
    pub fn new(n: usize) -> Self {
        LittlewoodContext {
            n,
            counter: VectorPartitionCounter::new(),
            products: HashMap::new(),
            jacobi_trudi: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r_{λμ}`.
    pub fn restriction(&mut self, lambda: &Partition, mu: &Partition) -> Result<u64> {
        check_weight(mu, self.n)?;
        let value = self.signed_restriction(lambda, mu)?;
        to_nonnegative_u64(&value, "Littlewood restriction coefficient")
    }

    fn signed_restriction(&mut self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        let shifts = alternating_shifts(lambda, self.n)?;
        let terms = self.jacobi_trudi_terms(mu);
        let mut total = BigInt::zero();
        for (sign, x) in shifts {
            let Some(x) = x.to_exponent() else { continue };
            for (rows, c) in &terms {
                let value = self.product_coefficient(rows, &x);
                if value.is_zero() {
                    continue;
                }
                if sign > 0 {
                    total += c * value;
                } else {
                    total -= c * value;
                }
            }
        }
        Ok(total)
    }

    fn jacobi_trudi_terms(&mut self, mu: &Partition) -> Vec<(Vec<usize>, BigInt)> {
        self.jacobi_trudi
            .entry(mu.clone())
            .or_insert_with(|| {
                schur_to_h(mu)
                    .terms()
                    .map(|(nu, c)| {
                        assert!(c.is_integer(), "Jacobi–Trudi coefficients are integers");
                        (nu.parts().to_vec(), c.to_integer())
                    })
                    .collect()
            })
            .clone()
    }

    /// Coefficient of `t^x` in `Π_i h_{rows_i}[H]`.
    fn product_coefficient(&mut self, rows: &[usize], x: &ExponentVector) -> BigInt {
        let Some((&first, rest)) = rows.split_first() else {
            return BigInt::from(u8::from(x.is_zero()));
        };
        if rest.is_empty() {
            return BigInt::from(self.counter.count_pk(&LatticeVector::from(x), first));
        }
        let key = (rows.to_vec(), x.clone());
        if let Some(v) = self.products.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for y in x.sub_vectors() {
            let head = self.counter.count_pk(&LatticeVector::from(&y), first);
            if head == 0 {
                continue;
            }
            let rest_x = x.checked_sub(&y).expect("y ≤ x");
            let tail = self.product_coefficient(rest, &rest_x);
            total += tail * head;
        }
        self.products.insert(key, total.clone());
        total
    }
}

/// `r_{λμ} = ⟨s_λ, s_μ[H]⟩` with `n = |μ|`.
pub fn littlewood_restriction(lambda: &Partition, mu: &Partition) -> Result<u64> {
    LittlewoodContext::new(mu.weight()).restriction(lambda, mu)
}

/// The same coefficient computed from the full degree-`d` slice of
/// `s_μ[H]` followed by coefficient extraction.
pub fn littlewood_restriction_via_slice(lambda: &Partition, mu: &Partition) -> Result<u64> {
    let n = mu.weight();
    check_weight(mu, n)?;
    check_length(lambda, n)?;
    let slice = crate::plethysm::schur_plethysm_slice(mu, n, lambda.weight() as u32)?;
    to_nonnegative_u64(
        &schur_coefficient_extraction(&slice, lambda)?,
        "Littlewood restriction coefficient",
    )
}

fn corollary_sum(lambda: &Partition, n: usize, variant: Variant) -> Result<i64> {
    let mut counter = VectorPartitionCounter::new();
    let mut total: i64 = 0;
    for (sign, x) in alternating_shifts(lambda, n)? {
        let count = counter.count(variant, &x, n) as i64;
        total += i64::from(sign) * count;
    }
    Ok(total)
}

/// `Σ_w sgn(w) p_n(λ+δ−w·δ)`, the multiplicity of the trivial
/// representation.
pub fn corollary_trivial_multiplicity(lambda: &Partition, n: usize) -> Result<i64> {
    corollary_sum(lambda, n, Variant::P)
}

/// `Σ_w sgn(w) q_n(λ+δ−w·δ)`, the multiplicity of the sign representation.
pub fn corollary_sign_multiplicity(lambda: &Partition, n: usize) -> Result<i64> {
    corollary_sum(lambda, n, Variant::Q)
}

/// For a two-row `λ`, only `w = id` and the transposition `(1 2)` contribute:
/// `c_n(λ_1, λ_2) − c_n(λ_1+1, λ_2−1)`, with `c` the chosen count.
pub fn two_row_multiplicity(lambda1: usize, lambda2: usize, n: usize, variant: Variant) -> Result<i64> {
    let lambda = Partition::new(vec![lambda1, lambda2])?;
    check_length(&lambda, n)?;
    let mut counter = VectorPartitionCounter::new();
    let width = n.max(2);
    let mut top = vec![0i64; width];
    top[0] = lambda1 as i64;
    top[1] = lambda2 as i64;
    let mut moved = top.clone();
    moved[0] += 1;
    moved[1] -= 1;
    let hi = counter.count(variant, &LatticeVector::new(top), n) as i64;
    let lo = counter.count(variant, &LatticeVector::new(moved), n) as i64;
    Ok(hi - lo)
}

/// Decomposes `w ↦ s_λ(θ_1(w), …, θ_n(w))` into `S_n` irreducibles, summing
/// over conjugacy classes with their sizes.
pub fn brute_force_restriction(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, u64>> {
    let table = CharacterTable::new(n);
    brute_force_with_table(lambda, &table)
}

fn brute_force_with_table(
    lambda: &Partition,
    table: &CharacterTable,
) -> Result<BTreeMap<Partition, u64>> {
    let n = table.n();
    if n == 0 {
        return Err(Error::WeightMismatch {
            expected: 1,
            partition: Vec::new(),
        });
    }
    check_length(lambda, n)?;
    let schur = schur_to_p(lambda);
    let classes = enumerate_cycle_types(n);
    let restricted: Vec<Rational> = classes
        .iter()
        .map(|(rho, _)| schur.evaluate_at_cycle_type(rho))
        .collect();
    let order = Rational::from_integer(factorial(n));
    let mut out = BTreeMap::new();
    for mu in table.partitions() {
        let mut total = Rational::zero();
        for ((rho, size), value) in classes.iter().zip(&restricted) {
            let chi = table
                .value(mu, rho.partition())
                .expect("class of S_n is in the table");
            total += value * Rational::from_integer(size * chi);
        }
        let multiplicity = to_integer(total / &order, "brute-force multiplicity")?;
        out.insert(
            mu.clone(),
            to_nonnegative_u64(&multiplicity, "brute-force multiplicity")?,
        );
    }
    Ok(out)
}

/// One `(λ, μ)` cell with the value from each requested route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCell {
    pub lambda: Partition,
    pub mu: Partition,
    pub littlewood: Option<u64>,
    /// Present only for `μ = (n)` or `μ = (1^n)`.
    pub corollary: Option<i64>,
    pub brute: Option<u64>,
}

impl RestrictionCell {
    /// All computed values coincide.
    pub fn agree(&self) -> bool {
        let values: Vec<i128> = [
            self.littlewood.map(i128::from),
            self.corollary.map(i128::from),
            self.brute.map(i128::from),
        ]
        .into_iter()
        .flatten()
        .collect();
        values.windows(2).all(|w| w[0] == w[1])
    }

    /// The first available value in Littlewood, corollary, brute-force order.
    pub fn value(&self) -> Option<i64> {
        self.littlewood
            .map(|v| v as i64)
            .or(self.corollary)
            .or(self.brute.map(|v| v as i64))
    }
}

/// Shared state for computing many cells with the same `n`.
pub struct RestrictionEngine {
    n: usize,
    littlewood: LittlewoodContext,
    characters: CharacterTable,
    brute: BTreeMap<Partition, BTreeMap<Partition, u64>>,
}

impl RestrictionEngine {
    pub fn new(n: usize) -> Self {
        RestrictionEngine {
            n,
            littlewood: LittlewoodContext::new(n),
            characters: CharacterTable::new(n),
            brute: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn character_table(&self) -> &CharacterTable {
        &self.characters
    }

    pub fn littlewood(&mut self, lambda: &Partition, mu: &Partition) -> Result<u64> {
        self.littlewood.restriction(lambda, mu)
    }

    /// `None` unless `μ` is `(n)` or `(1^n)`. For `n = 1` these coincide and
    /// the trivial formula is used.
    pub fn corollary(&mut self, lambda: &Partition, mu: &Partition) -> Result<Option<i64>> {
        check_weight(mu, self.n)?;
        if *mu == Partition::row(self.n) {
            corollary_trivial_multiplicity(lambda, self.n).map(Some)
        } else if *mu == Partition::column(self.n) {
            corollary_sign_multiplicity(lambda, self.n).map(Some)
        } else {
            Ok(None)
        }
    }

    pub fn brute_force(&mut self, lambda: &Partition) -> Result<&BTreeMap<Partition, u64>> {
        if !self.brute.contains_key(lambda) {
            let decomposition = brute_force_with_table(lambda, &self.characters)?;
            self.brute.insert(lambda.clone(), decomposition);
        }
        Ok(&self.brute[lambda])
    }

    pub fn cell(&mut self, lambda: &Partition, mu: &Partition, routes: &[Route]) -> Result<RestrictionCell> {
        check_weight(mu, self.n)?;
        check_length(lambda, self.n)?;
        let mut cell = RestrictionCell {
            lambda: lambda.clone(),
            mu: mu.clone(),
            littlewood: None,
            corollary: None,
            brute: None,
        };
        for route in routes {
            match route {
                Route::Littlewood => cell.littlewood = Some(self.littlewood(lambda, mu)?),
                Route::Corollary => cell.corollary = self.corollary(lambda, mu)?,
                Route::BruteForce => cell.brute = Some(self.brute_force(lambda)?[mu]),
            }
        }
        Ok(cell)
    }
}

/// A computed entry together with the route that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RestrictionEntry {
    pub value: u64,
    pub route: Route,
}

/// All `r_{λμ}` for `λ ∈ Λ(d, n)` and `μ ⊢ n`.
#[derive(Clone, Debug)]
pub struct RestrictionTable {
    pub n: usize,
    pub d: usize,
    pub entries: BTreeMap<(Partition, Partition), RestrictionEntry>,
}

impl RestrictionTable {
    /// Fills every cell with `route`. The corollary route only covers
    /// `μ ∈ {(n), (1^n)}`; other cells then fall back to Littlewood.
    pub fn build(n: usize, d: usize, route: Route) -> Result<Self> {
        let mut engine = RestrictionEngine::new(n);
        let lambdas = polynomial_weights(d, n);
        let mus = engine.character_table().partitions().to_vec();
        let mut entries = BTreeMap::new();
        for lambda in &lambdas {
            for mu in &mus {
                let entry = match route {
                    Route::Littlewood => RestrictionEntry {
                        value: engine.littlewood(lambda, mu)?,
                        route,
                    },
                    Route::BruteForce => RestrictionEntry {
                        value: engine.brute_force(lambda)?[mu],
                        route,
                    },
                    Route::Corollary => match engine.corollary(lambda, mu)? {
                        Some(v) => RestrictionEntry {
                            value: to_nonnegative_u64(&BigInt::from(v), "corollary multiplicity")?,
                            route,
                        },
                        None => RestrictionEntry {
                            value: engine.littlewood(lambda, mu)?,
                            route: Route::Littlewood,
                        },
                    },
                };
                entries.insert((lambda.clone(), mu.clone()), entry);
            }
        }
        Ok(RestrictionTable { n, d, entries })
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<u64> {
        self.entries
            .get(&(lambda.clone(), mu.clone()))
            .map(|e| e.value)
    }

    /// Cells where the two tables differ, as `(λ, μ, self, other)`.
    pub fn disagreements(&self, other: &RestrictionTable) -> Vec<(Partition, Partition, u64, u64)> {
        self.entries
            .iter()
            .filter_map(|((l, m), e)| {
                let theirs = other.get(l, m)?;
                (theirs != e.value).then(|| (l.clone(), m.clone(), e.value, theirs))
            })
            .collect()
    }

    /// `Σ_μ r_{λμ} f^μ = s_λ(1, …, 1)` for every `λ`; returns the failing `λ`.
    pub fn dimension_failures(&self) -> Vec<Partition> {
        let characters = CharacterTable::new(self.n);
        polynomial_weights(self.d, self.n)
            .into_iter()
            .filter(|lambda| {
                let lhs: BigInt = characters
                    .partitions()
                    .iter()
                    .map(|mu| {
                        let r = self.get(lambda, mu).unwrap_or(0);
                        characters.dimension(mu).expect("μ ⊢ n") * BigInt::from(r)
                    })
                    .sum();
                lhs != gl_dimension(lambda, self.n)
            })
            .collect()
    }
}

/// `s_λ(1, …, 1)` in `n` variables: `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)`.
pub fn gl_dimension(lambda: &Partition, n: usize) -> BigInt {
    let Some(padded) = lambda.pad_to(n) else {
        return BigInt::zero();
    };
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(padded[i] + j - i - padded[j]);
            den *= BigInt::from(j - i);
        }
    }
    num / den
}

/// One `(x_1, x_2, n)` point of the unimodality sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodalityRow {
    pub x1: usize,
    pub x2: usize,
    pub n: usize,
    pub p_upper: u64,
    pub p_lower: u64,
    pub q_upper: u64,
    pub q_lower: u64,
    /// Trivial and sign multiplicities of `W_{(x_1, x_2)}`, defined for `n ≥ 2`.
    pub trivial_multiplicity: Option<i64>,
    pub sign_multiplicity: Option<i64>,
}

impl UnimodalityRow {
    pub fn p_difference(&self) -> i64 {
        self.p_upper as i64 - self.p_lower as i64
    }

    pub fn q_difference(&self) -> i64 {
        self.q_upper as i64 - self.q_lower as i64
    }

    fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let at = format!("x=({},{}) n={}", self.x1, self.x2, self.n);
        if self.p_difference() < 0 {
            out.push(format!("{at}: p {} < {}", self.p_upper, self.p_lower));
        }
        if self.q_difference() < 0 {
            out.push(format!("{at}: q {} < {}", self.q_upper, self.q_lower));
        }
        if let Some(r) = self.trivial_multiplicity {
            if r != self.p_difference() {
                out.push(format!("{at}: p difference {} but trivial multiplicity {r}", self.p_difference()));
            }
        }
        if let Some(r) = self.sign_multiplicity {
            if r != self.q_difference() {
                out.push(format!("{at}: q difference {} but sign multiplicity {r}", self.q_difference()));
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct UnimodalityReport {
    pub rows: Vec<UnimodalityRow>,
    pub failures: Vec<String>,
}

impl UnimodalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `p_n(x_1, x_2) ≥ p_n(x_1+1, x_2−1)` and the same for `q_n` for all
/// `x_1 ≥ x_2 ≥ 1`, `x_1 + x_2 ≤ max_sum`, `0 ≤ n ≤ max_n`. For `n ≥ 2` each
/// difference is also matched against the corresponding alternating sum.
pub fn unimodality_sweep(max_sum: usize, max_n: usize) -> Result<UnimodalityReport> {
    let mut counter = VectorPartitionCounter::new();
    let mut report = UnimodalityReport::default();
    for n in 0..=max_n {
        for total in 2..=max_sum {
            for x2 in 1..=total / 2 {
                let x1 = total - x2;
                let upper = LatticeVector::new(vec![x1 as i64, x2 as i64]);
                let lower = LatticeVector::new(vec![x1 as i64 + 1, x2 as i64 - 1]);
                let (trivial_multiplicity, sign_multiplicity) = if n >= 2 {
                    let lambda = Partition::new(vec![x1, x2])?;
                    (
                        Some(corollary_trivial_multiplicity(&lambda, n)?),
                        Some(corollary_sign_multiplicity(&lambda, n)?),
                    )
                } else {
                    (None, None)
                };
                let row = UnimodalityRow {
                    x1,
                    x2,
                    n,
                    p_upper: counter.count_pk(&upper, n),
                    p_lower: counter.count_pk(&lower, n),
                    q_upper: counter.count_qk(&upper, n),
                    q_lower: counter.count_qk(&lower, n),
                    trivial_multiplicity,
                    sign_multiplicity,
                };
                report.failures.extend(row.failures());
                report.rows.push(row);
            }
        }
    }
    Ok(report)
}
