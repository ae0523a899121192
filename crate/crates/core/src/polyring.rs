//! Sparse polynomials in `t_1, …, t_n` with exact rational coefficients,
//! optionally truncated by total degree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{staircase_action, ExponentVector, Permutation};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A finite map from exponent vectors to nonzero rationals.
///
/// Terms are kept in lexicographic order of the exponent. When a truncation
/// degree is set, no stored term exceeds it and products drop anything above
/// it.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    n_vars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
    truncation: Option<u32>,
}

impl SparsePolynomial {
    pub fn zero(n_vars: usize) -> Self {
        SparsePolynomial {
            n_vars,
            terms: BTreeMap::new(),
            truncation: None,
        }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, Rational::one())
    }

    pub fn constant(n_vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(ExponentVector::zero(n_vars), c);
        p
    }

    /// `t_i` (0-based).
    pub fn variable(n_vars: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(n_vars, i), Rational::one())
    }

    pub fn monomial(exponent: ExponentVector, c: Rational) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, c);
        p
    }

    pub fn from_terms(
        n_vars: usize,
        terms: impl IntoIterator<Item = (ExponentVector, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n_vars);
        for (x, c) in terms {
            if x.len() != n_vars {
                return Err(Error::ExponentLength {
                    expected: n_vars,
                    got: x.len(),
                });
            }
            p.add_term(x, c);
        }
        Ok(p)
    }

    /// Sets the truncation degree, discarding terms above it. An existing
    /// tighter bound is kept.
    pub fn truncated(mut self, degree: u32) -> Self {
        let bound = self.truncation.map_or(degree, |t| t.min(degree));
        self.terms.retain(|x, _| x.degree() <= bound);
        self.truncation = Some(bound);
        self
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·t^x` in place. Terms above the truncation degree are ignored.
    pub fn add_term(&mut self, x: ExponentVector, c: Rational) {
        debug_assert_eq!(x.len(), self.n_vars);
        if c.is_zero() || self.truncation.is_some_and(|t| x.degree() > t) {
            return;
        }
        match self.terms.entry(x) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// The stored coefficient of `t^x`, or zero.
    pub fn coefficient_of(&self, x: &ExponentVector) -> Rational {
        self.terms.get(x).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_vars(&self, other: &SparsePolynomial) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableMismatch {
                left: self.n_vars,
                right: other.n_vars,
            });
        }
        Ok(())
    }

    fn combined_truncation(&self, other: &SparsePolynomial) -> Option<u32> {
        match (self.truncation, other.truncation) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn add(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check_vars(other)?;
        let mut sum = self.clone();
        sum.truncation = self.combined_truncation(other);
        if let Some(t) = sum.truncation {
            sum.terms.retain(|x, _| x.degree() <= t);
        }
        for (x, c) in &other.terms {
            sum.add_term(x.clone(), c.clone());
        }
        Ok(sum)
    }

    pub fn sub(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparsePolynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> SparsePolynomial {
        let mut out = SparsePolynomial {
            n_vars: self.n_vars,
            terms: BTreeMap::new(),
            truncation: self.truncation,
        };
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(x, a)| (x.clone(), a * c)).collect();
        out
    }

    /// Exact product. Terms of total degree above `truncate_at` (or above
    /// either operand's own truncation) are discarded.
    pub fn multiply(
        &self,
        other: &SparsePolynomial,
        truncate_at: Option<u32>,
    ) -> Result<SparsePolynomial> {
        self.check_vars(other)?;
        let bound = match (self.combined_truncation(other), truncate_at) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut product = SparsePolynomial::zero(self.n_vars);
        product.truncation = bound;
        for (x, a) in &self.terms {
            let dx = x.degree();
            if bound.is_some_and(|t| dx > t) {
                continue;
            }
            for (y, b) in &other.terms {
                if bound.is_some_and(|t| dx + y.degree() > t) {
                    continue;
                }
                product.add_term(x.add(y), a * b);
            }
        }
        Ok(product)
    }

    /// Maximum total degree of a stored term, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// The terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> SparsePolynomial {
        SparsePolynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .filter(|(x, _)| x.degree() == d)
                .map(|(x, c)| (x.clone(), c.clone()))
                .collect(),
            truncation: None,
        }
    }

    /// True when every stored term has total degree `d` (the zero polynomial
    /// qualifies).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|x| x.degree() == d)
    }

    /// Value at `t = (1, …, 1)`.
    pub fn evaluate_all_ones(&self) -> Rational {
        self.terms.values().sum()
    }

    /// Exchanges `t_i` and `t_j`.
    pub fn swap_variables(&self, i: usize, j: usize) -> SparsePolynomial {
        SparsePolynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.swapped(i, j), c.clone()))
                .collect(),
            truncation: self.truncation,
        }
    }

    /// Replaces each variable `t_i` by the monomial `s^{images[i]}` in a new
    /// ring with `target_vars` variables.
    pub fn substitute_monomials(
        &self,
        images: &[ExponentVector],
        target_vars: usize,
    ) -> Result<SparsePolynomial> {
        if images.len() != self.n_vars {
            return Err(Error::VariableMismatch {
                left: self.n_vars,
                right: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|y| y.len() != target_vars) {
            return Err(Error::ExponentLength {
                expected: target_vars,
                got: bad.len(),
            });
        }
        let mut out = SparsePolynomial::zero(target_vars);
        for (x, c) in &self.terms {
            let mut image = ExponentVector::zero(target_vars);
            for (&power, y) in x.coords().iter().zip(images) {
                image = image.add(&y.scale(power));
            }
            out.add_term(image, c.clone());
        }
        Ok(out)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The coefficients as integers, failing on the first non-integer.
    pub fn integer_coefficients(&self) -> Result<BTreeMap<ExponentVector, BigInt>> {
        self.terms
            .iter()
            .map(|(x, c)| {
                if c.is_integer() {
                    Ok((x.clone(), c.to_integer()))
                } else {
                    Err(Error::NonIntegral {
                        context: format!("coefficient of t^{x}"),
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (x, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i > 0 {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            } else if negative {
                write!(f, "-")?;
            }
            let magnitude = c.abs();
            let factors: Vec<String> = x
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("t{}", v + 1)
                    } else {
                        format!("t{}^{}", v + 1, e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A polynomial that is antisymmetric in its variables, such as the
/// Vandermonde determinant or its product with a symmetric polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlternantPolynomial(SparsePolynomial);

impl AlternantPolynomial {
    pub fn as_polynomial(&self) -> &SparsePolynomial {
        &self.0
    }

    pub fn coefficient_of(&self, x: &ExponentVector) -> Rational {
        self.0.coefficient_of(x)
    }

    /// `a_δ · f` for a symmetric `f`.
    pub fn times_symmetric(&self, f: &SparsePolynomial) -> Result<AlternantPolynomial> {
        Ok(AlternantPolynomial(self.0.multiply(f, None)?))
    }

    /// Checks antisymmetry under every transposition of adjacent variables.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.0.n_vars();
        (1..n).all(|i| self.0.swap_variables(i - 1, i) == self.0.neg())
    }
}

/// `a_δ = det(t_i^{n-j}) = Σ_{w ∈ S_n} sgn(w) t^{w·δ}`.
pub fn vandermonde_alternant(n: usize) -> AlternantPolynomial {
    let mut a = SparsePolynomial::zero(n);
    for w in Permutation::all(n) {
        a.add_term(staircase_action(&w), rational(i64::from(w.sign())));
    }
    AlternantPolynomial(a)
}

/// The coefficient of `t^x` in `a·b`, without forming the product.
pub fn coefficient_of_product(
    a: &SparsePolynomial,
    b: &SparsePolynomial,
    x: &ExponentVector,
) -> Result<Rational> {
    a.check_vars(b)?;
    let mut total = Rational::zero();
    for (y, c) in a.terms() {
        if let Some(rest) = x.checked_sub(y) {
            if let Some(d) = b.terms.get(&rest) {
                total += c * d;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(c: &[u32]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> SparsePolynomial {
        SparsePolynomial::from_terms(n, terms.iter().map(|(x, c)| (ev(x), rational(*c)))).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let a = poly(2, &[(&[0, 0], 1), (&[1, 0], 1)]);
        let b = poly(2, &[(&[0, 0], 1), (&[0, 1], 1)]);
        assert_eq!(
            a.multiply(&b, None).unwrap(),
            poly(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)])
        );

        let s = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert!(s.multiply(&s, Some(1)).unwrap().is_zero());
        assert_eq!(
            s.multiply(&s, None).unwrap(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = SparsePolynomial::one(2);
        let b = SparsePolynomial::one(3);
        assert!(matches!(
            a.multiply(&b, None),
            Err(Error::VariableMismatch { left: 2, right: 3 })
        ));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(
            vandermonde_alternant(2).as_polynomial(),
            &poly(2, &[(&[1, 0], 1), (&[0, 1], -1)])
        );
        assert_eq!(vandermonde_alternant(1).as_polynomial(), &SparsePolynomial::one(1));

        let a3 = vandermonde_alternant(3);
        assert_eq!(a3.as_polynomial().len(), 6);
        for w in Permutation::all(3) {
            assert_eq!(
                a3.coefficient_of(&staircase_action(&w)),
                rational(i64::from(w.sign()))
            );
        }
    }

    #[test]
    fn vandermonde_is_the_product_of_differences() {
        for n in 1..=4 {
            let mut product = SparsePolynomial::one(n);
            for i in 0..n {
                for j in (i + 1)..n {
                    let diff = SparsePolynomial::variable(n, i)
                        .sub(&SparsePolynomial::variable(n, j))
                        .unwrap();
                    product = product.multiply(&diff, None).unwrap();
                }
            }
            assert_eq!(&product, vandermonde_alternant(n).as_polynomial());
        }
    }

    #[test]
    fn vandermonde_is_antisymmetric() {
        for n in 1..=4 {
            let a = vandermonde_alternant(n);
            assert!(a.is_antisymmetric());
            for i in 0..n {
                for j in (i + 1)..n {
                    assert_eq!(a.as_polynomial().swap_variables(i, j), a.as_polynomial().neg());
                }
            }
        }
    }

    #[test]
    fn coefficient_lookup() {
        let a = vandermonde_alternant(2);
        assert_eq!(a.coefficient_of(&ev(&[1, 0])), rational(1));
        assert_eq!(a.coefficient_of(&ev(&[0, 1])), rational(-1));
        assert_eq!(SparsePolynomial::zero(2).coefficient_of(&ev(&[3, 1])), rational(0));
    }

    #[test]
    fn evaluation_at_ones() {
        assert_eq!(poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]).evaluate_all_ones(), rational(2));
        let h2 = poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(h2.evaluate_all_ones(), rational(3));
        assert_eq!(SparsePolynomial::zero(3).evaluate_all_ones(), rational(0));
    }

    #[test]
    fn substitution_of_monomials() {
        // f = x1 + x2 + x3 x4 with x -> (t1^2, t2^2, t1 t2, t1 t2)
        let f = poly(4, &[(&[1, 0, 0, 0], 1), (&[0, 1, 0, 0], 1), (&[0, 0, 1, 1], 1)]);
        let images = [ev(&[2, 0]), ev(&[0, 2]), ev(&[1, 1]), ev(&[1, 1])];
        assert_eq!(
            f.substitute_monomials(&images, 2).unwrap(),
            poly(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[2, 2], 1)])
        );
    }

    #[test]
    fn display() {
        let p = poly(2, &[(&[0, 0], -1), (&[2, 0], 3), (&[1, 1], 1)]);
        assert_eq!(p.to_string(), "-1 + t1*t2 + 3*t1^2");
    }

    fn small_poly(n: usize) -> impl Strategy<Value = SparsePolynomial> {
        prop::collection::vec(
            (prop::collection::vec(0u32..=3, n), -4i64..=4),
            0..6,
        )
        .prop_map(move |terms| {
            SparsePolynomial::from_terms(
                n,
                terms.into_iter().map(|(x, c)| (ExponentVector::new(x), rational(c))),
            )
            .unwrap()
        })
    }

    fn three_polys() -> impl Strategy<Value = (SparsePolynomial, SparsePolynomial, SparsePolynomial)> {
        (1usize..=4).prop_flat_map(|n| (small_poly(n), small_poly(n), small_poly(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms((a, b, c) in three_polys()) {
            let ab = a.multiply(&b, None).unwrap();
            prop_assert_eq!(&ab, &b.multiply(&a, None).unwrap());
            prop_assert_eq!(
                ab.multiply(&c, None).unwrap(),
                a.multiply(&b.multiply(&c, None).unwrap(), None).unwrap()
            );
            prop_assert_eq!(
                a.multiply(&b.add(&c).unwrap(), None).unwrap(),
                ab.add(&a.multiply(&c, None).unwrap()).unwrap()
            );
        }

        #[test]
        fn truncated_product_is_a_filtered_product((a, b, _c) in three_polys(), bound in 0u32..=6) {
            let full = a.multiply(&b, None).unwrap();
            let mut expected = SparsePolynomial::zero(a.n_vars());
            for (x, c) in full.terms().filter(|(x, _)| x.degree() <= bound) {
                expected.add_term(x.clone(), c.clone());
            }
            let truncated = a.multiply(&b, Some(bound)).unwrap();
            prop_assert!(truncated.terms().eq(expected.terms()));
        }

        #[test]
        fn product_coefficient_shortcut((a, b, _c) in three_polys(), x in prop::collection::vec(0u32..=6, 4)) {
            let x = ExponentVector::new(x[..a.n_vars()].to_vec());
            let full = a.multiply(&b, None).unwrap();
            prop_assert_eq!(coefficient_of_product(&a, &b, &x).unwrap(), full.coefficient_of(&x));
        }
    }
}
