//! Exact computation of restriction coefficients of polynomial `GL_n`
//! representations to the symmetric group `S_n`, with independent oracles:
//! plethysm with `H = Σ_{x ∈ N^n} t^x`, vector partition counts, induced
//! characters, matrix orbits and character-table decomposition.

pub mod error;
pub mod induction;
pub mod partition;
pub mod plethysm;
pub mod polyring;
pub mod restriction;
pub mod suites;
pub mod symfn;
pub mod vecpart;

pub use error::{Error, Result};
pub use induction::{
    ch_ind_class_function, ch_ind_general, ch_ind_permutation_module, ch_ind_sign, ch_ind_trivial,
    matrix_orbit_character, matrix_orbit_sign_character, InducedCharacter, InducedSource,
    MatrixOrbitBasis,
};
pub use partition::{
    enumerate_cycle_types, enumerate_partitions, exponents_of_degree, partitions_of, CycleType,
    ExponentVector, LatticeVector, Partition, Permutation,
};
pub use plethysm::{h_series, plethysm_into_series, schur_plethysm_slice, MonomialSeries};
pub use polyring::{rational, Rational, SparsePolynomial};
pub use restriction::{
    brute_force_restriction, corollary_sign_multiplicity, corollary_trivial_multiplicity,
    littlewood_restriction, polynomial_weights, schur_coefficient_extraction, unimodality_sweep,
    RestrictionCell, RestrictionEngine, RestrictionTable, Route, UnimodalityReport,
};
pub use suites::{run_suite, Suite, SuiteBounds, SuiteReport};
pub use symfn::{Basis, CharacterTable, ClassFunction, SymmetricFunction};
pub use vecpart::{count_pk, count_qk, enumerate_vector_partitions, Variant, VectorPartitionTable};
