//! Exhaustive identity checks over bounded ranges. Each suite sweeps every
//! parameter up to the given bounds and collects counterexamples.

use std::fmt;

use crate::error::Result;
use crate::induction::{
    ch_ind_general, ch_ind_permutation_module, ch_ind_sign, matrix_orbit_character,
    matrix_orbit_sign_character,
};
use crate::partition::{exponents_of_degree, partitions_of, LatticeVector, Partition};
use crate::plethysm::{h_series, plethysm_into_series};
use crate::polyring::Rational;
use crate::restriction::{
    polynomial_weights, schur_coefficient_extraction, unimodality_sweep, RestrictionEngine, Route,
    RestrictionTable,
};
use crate::symfn::{Basis, ClassFunction, SymmetricFunction};
use crate::vecpart::{enumerate_vector_partitions, VectorPartitionCounter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    CompleteElementary,
    Orbit,
    Littlewood,
    Unimodality,
    Adjunction,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::CompleteElementary,
        Suite::Orbit,
        Suite::Littlewood,
        Suite::Unimodality,
        Suite::Adjunction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CompleteElementary => "ehH",
            Suite::Orbit => "orbit",
            Suite::Littlewood => "littlewood",
            Suite::Unimodality => "unimodality",
            Suite::Adjunction => "adjunction",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Upper bounds for a sweep; every suite reads the fields it needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteBounds {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub max_sum: usize,
    pub max_n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_suite(suite: Suite, bounds: &SuiteBounds) -> Result<SuiteReport> {
    match suite {
        Suite::CompleteElementary => complete_elementary_suite(bounds.n, bounds.d, bounds.k),
        Suite::Orbit => orbit_suite(bounds.n, bounds.d),
        Suite::Littlewood => littlewood_suite(bounds.n, bounds.d),
        Suite::Unimodality => unimodality_suite(bounds.max_sum, bounds.max_n),
        Suite::Adjunction => adjunction_suite(bounds.n, bounds.d),
    }
}

/// Coefficients of `h_k[H]` and `e_k[H]` against vector partition counts,
/// and the counts against explicit enumeration.
pub fn complete_elementary_suite(max_n: usize, max_d: usize, max_k: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::CompleteElementary);
    let mut counter = VectorPartitionCounter::new();
    let d = max_d as u32;
    for n in 1..=max_n {
        let g = h_series(n, d);
        for k in 0..=max_k {
            let hk = plethysm_into_series(&SymmetricFunction::basis_element(Basis::H, Partition::row(k)), &g, d)?;
            let ek = plethysm_into_series(&SymmetricFunction::basis_element(Basis::E, Partition::row(k)), &g, d)?;
            for deg in 0..=d {
                for x in exponents_of_degree(n, deg) {
                    let lx = LatticeVector::from(&x);
                    let p = counter.count_pk(&lx, k);
                    let q = counter.count_qk(&lx, k);
                    let h_coef = hk.coefficient_of(&x);
                    let e_coef = ek.coefficient_of(&x);
                    report.check(h_coef == Rational::from_integer(p.into()), || {
                        format!("n={n} k={k} x={x}: h_k[H] coefficient {h_coef}, p_k = {p}")
                    });
                    report.check(e_coef == Rational::from_integer(q.into()), || {
                        format!("n={n} k={k} x={x}: e_k[H] coefficient {e_coef}, q_k = {q}")
                    });
                    let all = enumerate_vector_partitions(&x, false);
                    let distinct = enumerate_vector_partitions(&x, true);
                    let p_enum = all.iter().filter(|parts| parts.len() <= k).count() as u64;
                    let q_enum = distinct
                        .iter()
                        .filter(|parts| parts.len() == k || parts.len() + 1 == k)
                        .count() as u64;
                    report.check(p == p_enum, || format!("n={n} k={k} x={x}: p_k = {p}, enumeration {p_enum}"));
                    report.check(q == q_enum, || format!("n={n} k={k} x={x}: q_k = {q}, enumeration {q_enum}"));
                }
            }
        }
    }
    Ok(report)
}

/// Matrix-orbit characters against the closed forms. The distinct-row
/// comparison starts at degree 1.
pub fn orbit_suite(max_n: usize, max_d: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Orbit);
    for n in 1..=max_n {
        for d in 0..=max_d as u32 {
            for mu in partitions_of(n) {
                let orbit = matrix_orbit_character(&mu, d)?.character;
                let closed = ch_ind_permutation_module(&mu, d)?.character;
                report.check(orbit == closed, || {
                    format!("n={n} d={d} μ={mu}: orbits {orbit}, closed form {closed}")
                });
            }
            if d >= 1 {
                let orbit = matrix_orbit_sign_character(n, d)?.character;
                let closed = ch_ind_sign(n, d)?.character;
                report.check(orbit == closed, || {
                    format!("n={n} d={d} sign: orbits {orbit}, closed form {closed}")
                });
            }
        }
    }
    Ok(report)
}

/// Littlewood, alternating-sum and brute-force routes cell by cell, plus
/// the dimension identity for each `λ`.
pub fn littlewood_suite(max_n: usize, max_d: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Littlewood);
    for n in 1..=max_n {
        let mut engine = RestrictionEngine::new(n);
        let mus = engine.character_table().partitions().to_vec();
        for d in 0..=max_d {
            for lambda in polynomial_weights(d, n) {
                for mu in &mus {
                    let cell = engine.cell(&lambda, mu, &Route::ALL)?;
                    report.check(cell.agree(), || {
                        format!(
                            "n={n} d={d} λ={lambda} μ={mu}: littlewood {:?}, corollary {:?}, brute {:?}",
                            cell.littlewood, cell.corollary, cell.brute
                        )
                    });
                }
            }
            let table = RestrictionTable::build(n, d, Route::Littlewood)?;
            let failures = table.dimension_failures();
            report.check(failures.is_empty(), || {
                format!("n={n} d={d}: dimension identity fails for {failures:?}")
            });
        }
    }
    Ok(report)
}

pub fn unimodality_suite(max_sum: usize, max_n: usize) -> Result<SuiteReport> {
    let sweep = unimodality_sweep(max_sum, max_n)?;
    Ok(SuiteReport {
        suite: Suite::Unimodality,
        checks: sweep.rows.len(),
        failures: sweep.failures,
    })
}

/// `⟨ch Ind^d V_μ, s_λ⟩ = r_{λμ}`.
pub fn adjunction_suite(max_n: usize, max_d: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Adjunction);
    for n in 1..=max_n {
        let mut engine = RestrictionEngine::new(n);
        for mu in partitions_of(n) {
            let irreducible = ClassFunction::irreducible(&mu);
            for d in 0..=max_d {
                let induced = ch_ind_general(&irreducible, d as u32)?;
                for lambda in polynomial_weights(d, n) {
                    let multiplicity = schur_coefficient_extraction(&induced, &lambda)?;
                    let r = engine.littlewood(&lambda, &mu)?;
                    report.check(multiplicity == r.into(), || {
                        format!("n={n} d={d} λ={lambda} μ={mu}: Ind multiplicity {multiplicity}, r = {r}")
                    });
                }
            }
        }
    }
    Ok(report)
}
