//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plethy_core::induction::{
    ch_ind_general, ch_ind_permutation_module, ch_ind_sign, matrix_orbit_character,
    matrix_orbit_sign_character,
};
use plethy_core::plethysm::{
    h_series, plethysm_convolution_route, plethysm_into_series, plethysm_power_sum_route,
    power_plethysm, MonomialSeries,
};
use plethy_core::restriction::{
    brute_force_restriction, corollary_sign_multiplicity, corollary_trivial_multiplicity,
    polynomial_weights, schur_coefficient_extraction, two_row_multiplicity, unimodality_sweep,
    LittlewoodContext,
};
use plethy_core::{
    enumerate_vector_partitions, exponents_of_degree, partitions_of, Basis, CharacterTable,
    ClassFunction, ExponentVector, LatticeVector, Partition, Rational, SymmetricFunction, Variant,
};
use plethy_core::vecpart::VectorPartitionCounter;

struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(describe());
        } else if !ok {
            self.failures.push(String::new());
        }
    }
}

fn littlewood_equivalence() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=5 {
        let mut ctx = LittlewoodContext::new(n);
        for d in 0..=6 {
            for lambda in polynomial_weights(d, n) {
                let brute = brute_force_restriction(&lambda, n).expect("brute force");
                for mu in partitions_of(n) {
                    let lit = ctx.restriction(&lambda, &mu).expect("littlewood");
                    let b = brute[&mu];
                    out.check(lit == b, || format!("n={n} λ={lambda} μ={mu}: {lit} vs {b}"));
                }
            }
        }
    }
    out
}

fn corollary_formulas() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=5 {
        let mut ctx = LittlewoodContext::new(n);
        let trivial = Partition::row(n);
        let sign = Partition::column(n);
        for d in 0..=6 {
            for lambda in polynomial_weights(d, n) {
                let t = corollary_trivial_multiplicity(&lambda, n).unwrap();
                let s = corollary_sign_multiplicity(&lambda, n).unwrap();
                let lt = ctx.restriction(&lambda, &trivial).unwrap() as i64;
                let ls = ctx.restriction(&lambda, &sign).unwrap() as i64;
                out.check(t == lt, || format!("n={n} λ={lambda} trivial: {t} vs {lt}"));
                out.check(s == ls, || format!("n={n} λ={lambda} sign: {s} vs {ls}"));
            }
        }
    }
    out
}

fn complete_elementary_counts() -> Outcome {
    let mut out = Outcome::new();
    let mut counter = VectorPartitionCounter::new();
    let d = 6;
    for n in 1..=4 {
        let g = h_series(n, d);
        for k in 0..=5 {
            let hk = SymmetricFunction::basis_element(Basis::H, Partition::row(k));
            let ek = SymmetricFunction::basis_element(Basis::E, Partition::row(k));
            let h_plethysm = plethysm_into_series(&hk, &g, d).unwrap();
            let e_plethysm = plethysm_into_series(&ek, &g, d).unwrap();
            for deg in 0..=d {
                for x in exponents_of_degree(n, deg) {
                    let lx = LatticeVector::from(&x);
                    let p = counter.count_pk(&lx, k);
                    let q = counter.count_qk(&lx, k);
                    let all = enumerate_vector_partitions(&x, false);
                    let distinct = enumerate_vector_partitions(&x, true);
                    let p_enum = all.iter().filter(|v| v.len() <= k).count() as u64;
                    let q_enum = distinct
                        .iter()
                        .filter(|v| v.len() == k || v.len() + 1 == k)
                        .count() as u64;
                    out.check(p == p_enum, || format!("x={x} k={k}: p_k {p} vs enumeration {p_enum}"));
                    out.check(q == q_enum, || format!("x={x} k={k}: q_k {q} vs enumeration {q_enum}"));
                    let hc = h_plethysm.coefficient_of(&x);
                    let ec = e_plethysm.coefficient_of(&x);
                    out.check(hc == Rational::from_integer(p.into()), || format!("x={x} k={k}: h_k[H] {hc} vs {p}"));
                    out.check(ec == Rational::from_integer(q.into()), || format!("x={x} k={k}: e_k[H] {ec} vs {q}"));
                }
            }
        }
    }
    out
}

fn matrix_orbits() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=4 {
        for d in 0..=5 {
            for mu in partitions_of(n) {
                let orbit = matrix_orbit_character(&mu, d).unwrap().character;
                let closed = ch_ind_permutation_module(&mu, d).unwrap().character;
                out.check(orbit == closed, || format!("μ={mu} d={d}: {orbit} vs {closed}"));
            }
            if d >= 1 {
                let orbit = matrix_orbit_sign_character(n, d).unwrap().character;
                let closed = ch_ind_sign(n, d).unwrap().character;
                out.check(orbit == closed, || format!("sign n={n} d={d}: {orbit} vs {closed}"));
            }
        }
    }
    out
}

fn two_row_example() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=5 {
        let mut ctx = LittlewoodContext::new(n);
        let trivial = Partition::row(n);
        let sign = Partition::column(n);
        for total in 0..=8 {
            for l2 in 0..=total / 2 {
                let l1 = total - l2;
                let lambda = Partition::new(vec![l1, l2]).unwrap();
                if lambda.len() > n {
                    continue;
                }
                for (variant, mu) in [(Variant::P, &trivial), (Variant::Q, &sign)] {
                    let shortcut = two_row_multiplicity(l1, l2, n, variant).unwrap();
                    let full = match variant {
                        Variant::P => corollary_trivial_multiplicity(&lambda, n).unwrap(),
                        Variant::Q => corollary_sign_multiplicity(&lambda, n).unwrap(),
                    };
                    let lit = ctx.restriction(&lambda, mu).unwrap() as i64;
                    out.check(shortcut == full && full == lit, || {
                        format!("n={n} λ={lambda} {variant}: shortcut {shortcut}, sum {full}, littlewood {lit}")
                    });
                }
            }
        }
    }
    out
}

fn unimodality() -> Outcome {
    let mut out = Outcome::new();
    let report = unimodality_sweep(10, 6).unwrap();
    for row in &report.rows {
        out.check(row.p_difference() >= 0 && row.q_difference() >= 0, || {
            format!("x=({},{}) n={}: differences {} {}", row.x1, row.x2, row.n, row.p_difference(), row.q_difference())
        });
        if row.n >= 2 {
            out.check(
                row.trivial_multiplicity == Some(row.p_difference())
                    && row.sign_multiplicity == Some(row.q_difference()),
                || format!("x=({},{}) n={}: multiplicities differ", row.x1, row.x2, row.n),
            );
        }
    }
    out.check(report.passed(), || format!("{:?}", report.failures));
    out
}

fn random_series(rng: &mut ChaCha8Rng, n: usize, d: u32) -> MonomialSeries {
    let count = rng.gen_range(1..=4);
    let terms: Vec<(ExponentVector, u64)> = (0..count)
        .map(|_| {
            let deg = rng.gen_range(0..=2);
            let choices = exponents_of_degree(n, deg);
            let x = choices[rng.gen_range(0..choices.len())].clone();
            (x, rng.gen_range(1..=2))
        })
        .collect();
    MonomialSeries::new(n, d, terms).unwrap()
}

fn random_symmetric_function(rng: &mut ChaCha8Rng) -> SymmetricFunction {
    let bases = [Basis::H, Basis::E, Basis::P, Basis::M, Basis::S];
    let basis = bases[rng.gen_range(0..bases.len())];
    let mut f = SymmetricFunction::zero(basis);
    for _ in 0..rng.gen_range(1..=3) {
        let degree = rng.gen_range(0..=3);
        let choices = partitions_of(degree);
        let lambda = choices[rng.gen_range(0..choices.len())].clone();
        let c = Rational::new(BigInt::from(rng.gen_range(-3..=3)), BigInt::from(rng.gen_range(1..=2)));
        f.add_term(lambda, c);
    }
    f
}

fn plethysm_algebra() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    for case in 0..200 {
        let n = rng.gen_range(1..=3);
        let d = rng.gen_range(0..=6);
        let g = random_series(&mut rng, n, d);
        let f1 = random_symmetric_function(&mut rng);
        let f2 = random_symmetric_function(&mut rng);
        let at = |f: &SymmetricFunction| plethysm_into_series(f, &g, d).unwrap();

        let sum = at(&f1.add(&f2));
        out.check(sum == at(&f1).add(&at(&f2)).unwrap(), || format!("case {case}: additivity f1={f1} f2={f2}"));

        let product = at(&f1.multiply(&f2));
        let separate = at(&f1).multiply(&at(&f2), Some(d)).unwrap();
        out.check(product == separate, || format!("case {case}: multiplicativity f1={f1} f2={f2}"));

        let p1 = SymmetricFunction::basis_element(Basis::P, Partition::row(1));
        out.check(at(&p1) == g.to_polynomial().truncated(d), || format!("case {case}: p_1[g] = g"));

        let k = rng.gen_range(1..=3);
        let l = rng.gen_range(1..=3);
        let pk = SymmetricFunction::basis_element(Basis::P, Partition::row(k));
        let pkl = SymmetricFunction::basis_element(Basis::P, Partition::row(k * l));
        let nested = plethysm_into_series(&pk, &power_plethysm(l as u32, &g), d).unwrap();
        out.check(nested == at(&pkl), || format!("case {case}: p_{k}[p_{l}] = p_{}", k * l));

        if matches!(f1.basis(), Basis::H | Basis::E | Basis::S) {
            let conv = plethysm_convolution_route(&f1, &g, d).unwrap();
            let power = plethysm_power_sum_route(&f1, &g, d).unwrap();
            out.check(conv == power, || format!("case {case}: routes differ for {f1}"));
        }
    }
    out
}

fn adjunction() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=3 {
        let mut ctx = LittlewoodContext::new(n);
        for mu in partitions_of(n) {
            let irreducible = ClassFunction::irreducible(&mu);
            for d in 0..=4 {
                let induced = ch_ind_general(&irreducible, d as u32).unwrap();
                for lambda in polynomial_weights(d, n) {
                    let m = schur_coefficient_extraction(&induced, &lambda).unwrap();
                    let r = ctx.restriction(&lambda, &mu).unwrap();
                    let b = brute_force_restriction(&lambda, n).unwrap()[&mu];
                    out.check(m == BigInt::from(r) && r == b, || {
                        format!("n={n} d={d} λ={lambda} μ={mu}: Ind {m}, littlewood {r}, brute {b}")
                    });
                }
            }
        }
    }
    out
}

fn dimension_bookkeeping() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=5 {
        let mut ctx = LittlewoodContext::new(n);
        let table = CharacterTable::new(n);
        for d in 0..=6 {
            for lambda in polynomial_weights(d, n) {
                let mut total = BigInt::from(0);
                for mu in table.partitions() {
                    let r = ctx.restriction(&lambda, mu).unwrap();
                    total += table.dimension(mu).unwrap() * BigInt::from(r);
                }
                let gl = SymmetricFunction::basis_element(Basis::S, lambda.clone())
                    .expand_in_variables(n, None)
                    .evaluate_all_ones();
                let ok = Rational::from_integer(total.clone()) == gl;
                out.check(ok, || format!("n={n} λ={lambda}: Σ r f = {total}, s_λ(1^n) = {gl}"));
            }
        }
    }
    out
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("littlewood equals brute force, n<=5 d<=6", littlewood_equivalence, Some(Duration::from_secs(300))),
        ("alternating sums equal littlewood, n<=5 d<=6", corollary_formulas, Some(Duration::from_secs(60))),
        ("h_k[H], e_k[H] coefficients are vector partition counts", complete_elementary_counts, Some(Duration::from_secs(60))),
        ("matrix orbits give induced characters, n<=4 d<=5", matrix_orbits, Some(Duration::from_secs(120))),
        ("two-row shortcut, l1+l2<=8 n<=5", two_row_example, None),
        ("unimodality, x1+x2<=10 n<=6", unimodality, None),
        ("plethysm algebra, 200 seeded cases", plethysm_algebra, None),
        ("adjunction multiplicities, n<=3 d<=4", adjunction, None),
        ("dimension bookkeeping, n<=5 d<=6", dimension_bookkeeping, None),
    ];
    let mut failed = 0;
    for (index, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over_budget = budget.is_some_and(|b| elapsed > b);
        let ok = outcome.failures.is_empty() && !over_budget;
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {}: {} ({} checks, {} failures, {:.2?})",
            if ok { "PASS" } else { "FAIL" },
            index + 1,
            name,
            outcome.checks,
            outcome.failures.len(),
            elapsed
        );
        for failure in outcome.failures.iter().filter(|f| !f.is_empty()) {
            println!("    {failure}");
        }
        if over_budget {
            println!("    exceeded time budget of {:?}", budget.unwrap());
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
