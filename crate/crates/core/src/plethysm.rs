//! Plethystic substitution `f[g]` where `g` is a sum of monic monomials,
//! truncated by total degree. The main case is `g = H(t) = Σ_{x ∈ N^n} t^x`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{exponents_of_degree, ExponentVector};
use crate::polyring::{Rational, SparsePolynomial};
use crate::symfn::{schur_to_h, Basis, SymmetricFunction};

/// A sum of monic monomials (with repetition) up to a truncation degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSeries {
    n_vars: usize,
    truncation: u32,
    terms: BTreeMap<ExponentVector, u64>,
}

impl MonomialSeries {
    pub fn new(
        n_vars: usize,
        truncation: u32,
        terms: impl IntoIterator<Item = (ExponentVector, u64)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (x, m) in terms {
            if x.len() != n_vars {
                return Err(Error::ExponentLength {
                    expected: n_vars,
                    got: x.len(),
                });
            }
            if m > 0 && x.degree() <= truncation {
                *map.entry(x).or_insert(0) += m;
            }
        }
        Ok(MonomialSeries {
            n_vars,
            truncation,
            terms: map,
        })
    }

    /// Reads a polynomial whose coefficients are all positive integers.
    pub fn from_polynomial(p: &SparsePolynomial, truncation: u32) -> Result<Self> {
        let mut terms = Vec::new();
        for (x, c) in p.terms() {
            if !c.is_integer() || c <= &Rational::zero() {
                return Err(Error::NotAMonomialSeries);
            }
            let m: u64 = c
                .to_integer()
                .try_into()
                .map_err(|_| Error::NotAMonomialSeries)?;
            terms.push((x.clone(), m));
        }
        Self::new(p.n_vars(), truncation, terms)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, u64)> {
        self.terms.iter().map(|(x, &m)| (x, m))
    }

    pub fn multiplicity(&self, x: &ExponentVector) -> u64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    /// Each monomial repeated according to its multiplicity, in
    /// lexicographic order: the "variables" substituted into `f`.
    pub fn monomials(&self) -> Vec<ExponentVector> {
        self.terms
            .iter()
            .flat_map(|(x, &m)| std::iter::repeat_n(x.clone(), m as usize))
            .collect()
    }

    pub fn to_polynomial(&self) -> SparsePolynomial {
        let mut p = SparsePolynomial::zero(self.n_vars).truncated(self.truncation);
        for (x, &m) in &self.terms {
            p.add_term(x.clone(), Rational::from_integer(m.into()));
        }
        p
    }
}

/// `H(t)` in `n` variables: every `x` with `|x| <= d`, coefficient 1.
pub fn h_series(n: usize, d: u32) -> MonomialSeries {
    MonomialSeries {
        n_vars: n,
        truncation: d,
        terms: (0..=d)
            .flat_map(|deg| exponents_of_degree(n, deg))
            .map(|x| (x, 1))
            .collect(),
    }
}

/// `p_l(t_1, …, t_n)` as a series truncated at `d`.
pub fn power_sum_series(n: usize, l: u32, d: u32) -> MonomialSeries {
    let terms = (0..n).map(|i| (ExponentVector::unit(n, i).scale(l), 1));
    MonomialSeries::new(n, d, terms).expect("unit vectors have n coordinates")
}

/// `p_k[g]`: every `t^x` of `g` becomes `t^{kx}`; terms past the truncation
/// are dropped.
pub fn power_plethysm(k: u32, g: &MonomialSeries) -> MonomialSeries {
    let mut terms = BTreeMap::new();
    for (x, &m) in &g.terms {
        let y = x.scale(k);
        if y.degree() <= g.truncation {
            *terms.entry(y).or_insert(0) += m;
        }
    }
    MonomialSeries {
        n_vars: g.n_vars,
        truncation: g.truncation,
        terms,
    }
}

fn check_bound(g: &MonomialSeries, d: u32) -> Result<()> {
    if d > g.truncation {
        return Err(Error::DegreeBoundExceeded {
            requested: d,
            available: g.truncation,
        });
    }
    Ok(())
}

fn has_integer_coefficients(f: &SymmetricFunction) -> bool {
    f.terms().all(|(_, c)| c.is_integer())
}

fn assert_integral(f: &SymmetricFunction, result: SparsePolynomial) -> Result<SparsePolynomial> {
    if has_integer_coefficients(f) {
        result.integer_coefficients()?;
    }
    Ok(result)
}

/// `f[g]` truncated to total degree `d`.
///
/// Inputs in the `h` basis go through the multiset convolution; everything
/// else is moved to power sums and substituted term by term.
pub fn plethysm_into_series(f: &SymmetricFunction, g: &MonomialSeries, d: u32) -> Result<SparsePolynomial> {
    match f.basis() {
        Basis::H => plethysm_convolution_route(f, g, d),
        _ => plethysm_power_sum_route(f, g, d),
    }
}

/// `f[g] = Σ_ν c_ν Π_i p_{ν_i}[g]` with `f = Σ_ν c_ν p_ν`.
pub fn plethysm_power_sum_route(
    f: &SymmetricFunction,
    g: &MonomialSeries,
    d: u32,
) -> Result<SparsePolynomial> {
    check_bound(g, d)?;
    let in_p = f.to_power_sums();
    let mut powers: HashMap<usize, SparsePolynomial> = HashMap::new();
    let mut products: HashMap<Vec<usize>, SparsePolynomial> = HashMap::new();
    let mut out = SparsePolynomial::zero(g.n_vars).truncated(d);
    for (nu, c) in in_p.terms() {
        if nu.weight() > d as usize && !g.terms.contains_key(&ExponentVector::zero(g.n_vars)) {
            continue;
        }
        let mut acc = SparsePolynomial::one(g.n_vars).truncated(d);
        for (i, &k) in nu.parts().iter().enumerate() {
            if let Some(prefix) = products.get(&nu.parts()[..=i]) {
                acc = prefix.clone();
                continue;
            }
            let factor = powers
                .entry(k)
                .or_insert_with(|| power_plethysm(k as u32, g).to_polynomial().truncated(d));
            acc = acc.multiply(factor, Some(d))?;
            products.insert(nu.parts()[..=i].to_vec(), acc.clone());
        }
        for (x, a) in acc.terms() {
            out.add_term(x.clone(), a * c);
        }
    }
    assert_integral(f, out)
}

/// `[h_0[g], …, h_k[g]]` (or `e_j[g]` with `distinct`), truncated at `d`.
///
/// The monomials of `g` are taken as variables in lexicographic order and
/// `h_j` is built as a sum over multisets of them, one variable at a time.
pub fn convolution_levels(g: &MonomialSeries, k: usize, d: u32, distinct: bool) -> Result<Vec<SparsePolynomial>> {
    check_bound(g, d)?;
    let n = g.n_vars;
    let mut levels = vec![SparsePolynomial::zero(n).truncated(d); k + 1];
    levels[0] = SparsePolynomial::one(n).truncated(d);
    for x in g.monomials() {
        let shift = SparsePolynomial::monomial(x, Rational::one());
        let steps: Vec<usize> = if distinct {
            (1..=k).rev().collect()
        } else {
            (1..=k).collect()
        };
        for j in steps {
            let added = levels[j - 1].multiply(&shift, Some(d))?;
            levels[j] = levels[j].add(&added)?;
        }
    }
    Ok(levels)
}

/// `f[g]` for `f` in the `h`, `e` or `s` basis (Schur functions go through
/// Jacobi–Trudi first), using only multiset convolutions and products.
pub fn plethysm_convolution_route(
    f: &SymmetricFunction,
    g: &MonomialSeries,
    d: u32,
) -> Result<SparsePolynomial> {
    check_bound(g, d)?;
    let (f_rows, distinct) = match f.basis() {
        Basis::H => (f.clone(), false),
        Basis::E => (f.clone(), true),
        Basis::S => {
            let mut in_h = SymmetricFunction::zero(Basis::H);
            for (lambda, c) in f.terms() {
                for (nu, a) in schur_to_h(lambda).terms() {
                    in_h.add_term(nu.clone(), a * c);
                }
            }
            (in_h, false)
        }
        Basis::P => return Err(Error::NoConvolutionRoute("the power-sum basis")),
        Basis::M => return Err(Error::NoConvolutionRoute("the monomial basis")),
    };
    let max_row = f_rows
        .terms()
        .flat_map(|(l, _)| l.parts().first().copied())
        .max()
        .unwrap_or(0);
    let levels = convolution_levels(g, max_row, d, distinct)?;
    let mut out = SparsePolynomial::zero(g.n_vars).truncated(d);
    for (lambda, c) in f_rows.terms() {
        let mut acc = SparsePolynomial::one(g.n_vars).truncated(d);
        for &row in lambda.parts() {
            acc = acc.multiply(&levels[row], Some(d))?;
        }
        for (x, a) in acc.terms() {
            out.add_term(x.clone(), a * c);
        }
    }
    assert_integral(f, out)
}

/// Degree-`d` slice of `s_μ[H]` in `n` variables.
pub fn schur_plethysm_slice(mu: &crate::partition::Partition, n: usize, d: u32) -> Result<SparsePolynomial> {
    let f = schur_to_h(mu);
    Ok(plethysm_convolution_route(&f, &h_series(n, d), d)?.homogeneous_component(d))
}
