use num_bigint::BigInt;
use proptest::prelude::*;

use plethy_core::restriction::{littlewood_restriction_via_slice, two_row_multiplicity};
use plethy_core::*;

fn partition_strategy(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|w| {
        let all = partitions_of(w);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

#[test]
fn full_table_agreement() {
    for n in 1..=4 {
        for d in 0..=5 {
            let littlewood = RestrictionTable::build(n, d, Route::Littlewood).unwrap();
            let brute = RestrictionTable::build(n, d, Route::BruteForce).unwrap();
            assert!(littlewood.disagreements(&brute).is_empty(), "n={n} d={d}");
        }
    }
}

#[test]
fn three_route_agreement_on_trivial_and_sign() {
    for n in 1..=5 {
        let mut engine = RestrictionEngine::new(n);
        for d in 0..=6 {
            for lambda in polynomial_weights(d, n) {
                for mu in [Partition::row(n), Partition::column(n)] {
                    let cell = engine.cell(&lambda, &mu, &Route::ALL).unwrap();
                    assert!(cell.corollary.is_some());
                    assert!(cell.agree(), "{cell:?}");
                }
            }
        }
    }
}

#[test]
fn sign_orbits_match_closed_form_including_degree_zero() {
    for n in 1..=4 {
        for d in 0..=4 {
            assert_eq!(
                matrix_orbit_sign_character(n, d).unwrap().character,
                ch_ind_sign(n, d).unwrap().character,
                "n={n} d={d}"
            );
        }
    }
}

#[test]
fn regular_representation_induces_all_polynomials() {
    // C[S_n] is the permutation module of (1^n): every matrix is its own orbit
    for n in 1..=3 {
        for d in 0..=4u32 {
            let induced = ch_ind_general(&ClassFunction::regular(n), d).unwrap();
            let matrices = MatrixOrbitBasis::young_subgroup(&Partition::column(n), d).unwrap();
            assert_eq!(induced, matrices.character(), "n={n} d={d}");
        }
    }
}

#[test]
fn routes_agree_with_full_slices() {
    for n in 1..=3 {
        for d in 0..=5 {
            for lambda in polynomial_weights(d, n) {
                for mu in partitions_of(n) {
                    assert_eq!(
                        littlewood_restriction(&lambda, &mu).unwrap(),
                        littlewood_restriction_via_slice(&lambda, &mu).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    let lambda = Partition::new(vec![1, 1, 1]).unwrap();
    assert!(littlewood_restriction(&lambda, &Partition::row(2)).is_err());
    assert!(brute_force_restriction(&lambda, 2).is_err());
    assert!(corollary_trivial_multiplicity(&lambda, 2).is_err());
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(two_row_multiplicity(3, 1, 1, Variant::P).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_plethysm_is_a_genuine_character(mu in partition_strategy(4), n in 1usize..=3, d in 0u32..=4) {
        let slice = schur_plethysm_slice(&mu, n, d).unwrap();
        prop_assert!(slice.is_nonnegative_integral());
        prop_assert!(slice.is_homogeneous(d));
        for i in 0..n {
            for j in i + 1..n {
                prop_assert_eq!(&slice.swap_variables(i, j), &slice);
            }
        }
    }

    #[test]
    fn restriction_coefficients_decompose_the_dimension(n in 1usize..=4, d in 0usize..=5, pick in 0usize..64) {
        let lambdas = polynomial_weights(d, n);
        let lambda = &lambdas[pick % lambdas.len()];
        let brute = brute_force_restriction(lambda, n).unwrap();
        let table = CharacterTable::new(n);
        let total: BigInt = brute
            .iter()
            .map(|(mu, r)| table.dimension(mu).unwrap() * BigInt::from(*r))
            .sum();
        let gl = SymmetricFunction::basis_element(Basis::S, lambda.clone())
            .expand_in_variables(n, None)
            .evaluate_all_ones();
        prop_assert_eq!(Rational::from_integer(total), gl);
    }

    #[test]
    fn vector_partition_counts_grow_with_parts(coords in prop::collection::vec(0u32..=3, 1..=3), k in 0usize..=5) {
        let x = ExponentVector::new(coords);
        prop_assert!(count_pk(x.clone(), k) <= count_pk(x.clone(), k + 1));
        let all = enumerate_vector_partitions(&x, false).len() as u64;
        prop_assert_eq!(count_pk(x.clone(), x.degree() as usize), all);
    }

    #[test]
    fn induced_characters_are_symmetric(mu in partition_strategy(3).prop_filter("nonempty", |m| m.weight() > 0), d in 0u32..=4) {
        let ch = ch_ind_permutation_module(&mu, d).unwrap();
        prop_assert!(ch.is_genuine());
        let n = mu.weight();
        for i in 0..n {
            for j in i + 1..n {
                prop_assert_eq!(&ch.character.swap_variables(i, j), &ch.character);
            }
        }
    }
}
