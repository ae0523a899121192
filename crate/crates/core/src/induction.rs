//! Characters of the polynomial induction functor `Ind^d` from `S_n` to
//! `GL_n`.
//!
//! Closed forms come from vector partition counts and plethysm with `H`.
//! For permutation modules there is also a direct model: a basis of
//! `Ind^d C[X_μ]` indexed by orbits of `n × n` matrices with entry sum `d`
//! under the Young subgroup `S_μ` acting on rows, each orbit weighted by the
//! monomial of its column sums.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{exponents_of_degree, ExponentVector, Partition};
use crate::plethysm::{h_series, plethysm_power_sum_route};
use crate::polyring::{Rational, SparsePolynomial};
use crate::symfn::ClassFunction;
use crate::vecpart::{Variant, VectorPartitionTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InducedSource {
    Trivial,
    Sign,
    PermutationModule(Partition),
    Irreducible(Partition),
    Regular,
    ClassFunction,
}

impl fmt::Display for InducedSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InducedSource::Trivial => write!(f, "trivial"),
            InducedSource::Sign => write!(f, "sign"),
            InducedSource::PermutationModule(mu) => write!(f, "perm{mu}"),
            InducedSource::Irreducible(mu) => write!(f, "irrep{mu}"),
            InducedSource::Regular => write!(f, "regular"),
            InducedSource::ClassFunction => write!(f, "class function"),
        }
    }
}

/// The degree-`d` character of `Ind^d V` as a polynomial in `t_1, …, t_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedCharacter {
    pub n: usize,
    pub d: u32,
    pub character: SparsePolynomial,
    pub source: InducedSource,
}

impl InducedCharacter {
    fn new(n: usize, d: u32, full: SparsePolynomial, source: InducedSource) -> Self {
        InducedCharacter {
            n,
            d,
            character: full.homogeneous_component(d),
            source,
        }
    }

    /// `dim Ind^d V`.
    pub fn dimension(&self) -> Rational {
        self.character.evaluate_all_ones()
    }

    /// Homogeneous of degree `d` with nonnegative integer coefficients, as
    /// the character of an actual representation must be.
    pub fn is_genuine(&self) -> bool {
        self.character.is_homogeneous(self.d) && self.character.is_nonnegative_integral()
    }
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::WeightMismatch {
            expected: 1,
            partition: Vec::new(),
        });
    }
    Ok(())
}

/// `ch Ind^d 1_n = Σ_{|x| = d} p_n(x) t^x`.
pub fn ch_ind_trivial(n: usize, d: u32) -> Result<InducedCharacter> {
    require_positive(n)?;
    let table = VectorPartitionTable::build(n, d, n, Variant::P);
    Ok(InducedCharacter::new(n, d, table.series(n), InducedSource::Trivial))
}

/// `ch Ind^d sgn_n = Σ_{|x| = d} q_n(x) t^x`.
pub fn ch_ind_sign(n: usize, d: u32) -> Result<InducedCharacter> {
    require_positive(n)?;
    let table = VectorPartitionTable::build(n, d, n, Variant::Q);
    Ok(InducedCharacter::new(n, d, table.series(n), InducedSource::Sign))
}

/// `ch Ind^d C[X_μ]`: the degree-`d` slice of `Π_i Σ_x p_{μ_i}(x) t^x`.
pub fn ch_ind_permutation_module(mu: &Partition, d: u32) -> Result<InducedCharacter> {
    let n = mu.weight();
    require_positive(n)?;
    let table = VectorPartitionTable::build(n, d, mu.part(0), Variant::P);
    let mut product = SparsePolynomial::one(n).truncated(d);
    for &part in mu.parts() {
        product = product.multiply(&table.series(part), Some(d))?;
    }
    Ok(InducedCharacter::new(
        n,
        d,
        product,
        InducedSource::PermutationModule(mu.clone()),
    ))
}

/// `ch Ind^d V = F(V)[H]` sliced at degree `d`, for any integer-valued class
/// function `V` on `S_n`.
pub fn ch_ind_general(v: &ClassFunction, d: u32) -> Result<SparsePolynomial> {
    let n = v.n();
    require_positive(n)?;
    let characteristic = v.frobenius_characteristic();
    let full = plethysm_power_sum_route(&characteristic, &h_series(n, d), d)?;
    Ok(full.homogeneous_component(d))
}

/// [`ch_ind_general`] wrapped with its source label.
pub fn ch_ind_class_function(
    v: &ClassFunction,
    d: u32,
    source: InducedSource,
) -> Result<InducedCharacter> {
    Ok(InducedCharacter {
        n: v.n(),
        d,
        character: ch_ind_general(v, d)?,
        source,
    })
}

/// Canonical representatives of row-block orbits on `M(d, n)`.
///
/// Rows are grouped into consecutive blocks of sizes `μ_1, μ_2, …`; a
/// matrix is a representative when the rows inside each block are sorted
/// lexicographically (strictly, for the distinct-rows variant).
#[derive(Clone, Debug)]
pub struct MatrixOrbitBasis {
    n: usize,
    d: u32,
    blocks: Partition,
    distinct_rows: bool,
    orbits: Vec<Vec<ExponentVector>>,
}

impl MatrixOrbitBasis {
    /// Orbits of the Young subgroup `S_μ`.
    pub fn young_subgroup(mu: &Partition, d: u32) -> Result<Self> {
        require_positive(mu.weight())?;
        Ok(Self::enumerate(mu.clone(), d, false))
    }

    /// `S_n`-orbits of matrices whose rows are pairwise distinct.
    pub fn distinct_rows(n: usize, d: u32) -> Result<Self> {
        require_positive(n)?;
        Ok(Self::enumerate(Partition::row(n), d, true))
    }

    fn enumerate(blocks: Partition, d: u32, distinct_rows: bool) -> Self {
        let n = blocks.weight();
        // block_start[r]: whether row r opens a new block
        let mut block_start = vec![false; n];
        let mut row = 0;
        for &size in blocks.parts() {
            block_start[row] = true;
            row += size;
        }
        let candidates: Vec<Vec<ExponentVector>> =
            (0..=d).map(|deg| exponents_of_degree(n, deg)).collect();

        let mut orbits = Vec::new();
        let mut rows: Vec<ExponentVector> = Vec::with_capacity(n);
        Self::fill(
            &block_start,
            &candidates,
            d,
            distinct_rows,
            &mut rows,
            &mut orbits,
        );
        MatrixOrbitBasis {
            n,
            d,
            blocks,
            distinct_rows,
            orbits,
        }
    }

    fn fill(
        block_start: &[bool],
        candidates: &[Vec<ExponentVector>],
        remaining: u32,
        strict: bool,
        rows: &mut Vec<ExponentVector>,
        out: &mut Vec<Vec<ExponentVector>>,
    ) {
        let r = rows.len();
        if r == block_start.len() {
            if remaining == 0 {
                out.push(rows.clone());
            }
            return;
        }
        let floor = (!block_start[r]).then(|| rows[r - 1].clone());
        for deg in 0..=remaining {
            for candidate in &candidates[deg as usize] {
                let allowed = match &floor {
                    None => true,
                    Some(prev) if strict => candidate > prev,
                    Some(prev) => candidate >= prev,
                };
                if !allowed {
                    continue;
                }
                rows.push(candidate.clone());
                Self::fill(block_start, candidates, remaining - deg, strict, rows, out);
                rows.pop();
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn blocks(&self) -> &Partition {
        &self.blocks
    }

    pub fn has_distinct_rows(&self) -> bool {
        self.distinct_rows
    }

    /// One representative per orbit, as a list of rows.
    pub fn orbits(&self) -> &[Vec<ExponentVector>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// `Σ_orbits t^{column sums}`.
    pub fn character(&self) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.n);
        for rows in &self.orbits {
            let column_sums = rows
                .iter()
                .fold(ExponentVector::zero(self.n), |acc, row| acc.add(row));
            out.add_term(column_sums, Rational::one());
        }
        out
    }
}

/// `ch Ind^d C[X_μ]` counted from matrix orbits.
pub fn matrix_orbit_character(mu: &Partition, d: u32) -> Result<InducedCharacter> {
    let basis = MatrixOrbitBasis::young_subgroup(mu, d)?;
    Ok(InducedCharacter {
        n: basis.n(),
        d,
        character: basis.character(),
        source: InducedSource::PermutationModule(mu.clone()),
    })
}

/// `ch Ind^d sgn_n` counted from orbits of matrices with distinct rows.
pub fn matrix_orbit_sign_character(n: usize, d: u32) -> Result<InducedCharacter> {
    let basis = MatrixOrbitBasis::distinct_rows(n, d)?;
    Ok(InducedCharacter {
        n,
        d,
        character: basis.character(),
        source: InducedSource::Sign,
    })
}
